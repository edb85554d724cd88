# -*- coding: utf-8 -*-
"""
Utilites for loading packaged datasets
"""

import json
from importlib import resources

_EXAMPLES = None


def _load_examples():
    global _EXAMPLES
    if _EXAMPLES is None:
        text = (resources.files('lambdabuildings') / 'data'
                / 'worked_examples.json').read_text()
        _EXAMPLES = json.loads(text)
    return _EXAMPLES


def load_worked_examples(kind=None):
    """
    Loads the packaged worked examples

    Parameters
    ----------
    kind : {'cone', 'building', 'flags', None}, optional
        Which examples to return. If not specified, all examples are returned
        in a dict keyed by kind. Default: None

    Returns
    -------
    examples : dict or list of dict
        Each example has a 'name' plus its inputs and expected outputs, all
        as Puiseux strings

    Examples
    --------
    >>> from lambdabuildings.datasets import load_worked_examples
    >>> [ex['name'] for ex in load_worked_examples('cone')]
    ['identity', 'diagonal', 'unipotent', 'bounded']
    """

    examples = _load_examples()
    if kind is None:
        return {key: list(value) for key, value in examples.items()}
    try:
        return list(examples[kind])
    except KeyError:
        raise KeyError("Provided example kind '{}' is not valid. Must be one "
                       "of: {}".format(kind, sorted(examples.keys())))
