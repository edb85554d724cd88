# -*- coding: utf-8 -*-

__version__ = '0.1.0'
__author__ = 'lambdabuildings developers'
__copyright__ = 'Copyright 2026, lambdabuildings developers'
__license__ = 'BSD-3'
__maintainer__ = 'lambdabuildings developers'
__status__ = 'Prototype'
__packagename__ = 'lambdabuildings'
__description__ = """\
Exact affine Lambda-buildings of SL_n over fields of Puiseux series\
"""
__longdesc__ = 'README.rst'
__longdesctype__ = 'text/x-rst'

INSTALL_REQUIRES = [
    'joblib',
    'numpy>=1.16',
    'scikit-learn',
    'sympy>=1.8',
]

TESTS_REQUIRE = [
    'hypothesis',
    'pytest>=3.6',
    'pytest-cov'
]

EXTRAS_REQUIRE = {
    'doc': [
        'sphinx>=1.2',
        'sphinx_rtd_theme',
    ],
    'tests': TESTS_REQUIRE
}

EXTRAS_REQUIRE['all'] = list(set([
    v for deps in EXTRAS_REQUIRE.values() for v in deps
]))

PACKAGE_DATA = {
    'lambdabuildings': [
        'data/*'
    ]
}

ENTRY_POINTS = {
    'console_scripts': [
        'lambdabuildings=lambdabuildings.cli:main'
    ]
}

CLASSIFIERS = [
    'Development Status :: 3 - Alpha',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: BSD License',
    'Programming Language :: Python :: 3.9',
    'Programming Language :: Python :: 3.10',
    'Programming Language :: Python :: 3.11',
    'Topic :: Scientific/Engineering :: Mathematics'
]
