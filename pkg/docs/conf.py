#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.

# -- Path setup --------------------------------------------------------------

import os
import sys

# -- Project information -----------------------------------------------------

project = 'lambdabuildings'
copyright = '2024, lambdabuildings developers'
author = 'lambdabuildings developers'

# Import project to get version info
sys.path.insert(0, os.path.abspath(os.path.pardir))
import lambdabuildings  # noqa
# The short X.Y version
version = lambdabuildings.__version__
# The full version, including alpha/beta/rc tags
release = lambdabuildings.__version__

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
]

# Generate the API documentation when building
autosummary_generate = True
autodoc_default_options = {'members': True, 'inherited-members': True}
numpydoc_show_class_members = False
autoclass_content = "class"

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------------

import sphinx_rtd_theme  # noqa
html_theme = 'sphinx_rtd_theme'
html_show_sourcelink = False
html_theme_options = {}

# -- Options for HTMLHelp output ---------------------------------------------

htmlhelp_basename = 'lambdabuildingsdoc'

# -- Extension configuration -------------------------------------------------

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'sklearn': ('https://scikit-learn.org/stable', None),
    'sympy': ('https://docs.sympy.org/latest', None),
}

doctest_global_setup = """\
import numpy as np
np.random.seed(1234)\
"""
