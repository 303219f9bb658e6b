"""Exact digit expansions, continued fractions and repetition exponents."""

import json

from ._core import (
    BudgetExhausted,
    approximant,
    complexity,
    continued_fraction,
    digits,
    dio,
    ice,
    mu_estimate,
    report_json,
    sturmian,
)


def report(spec, base=10, prefix=10000, terms=60, slack=0.15):
    """dio estimate of the digits beside the mu estimate, as a dict."""
    return json.loads(report_json(spec, base=base, prefix=prefix, terms=terms, slack=slack))


__all__ = [
    "BudgetExhausted",
    "approximant",
    "complexity",
    "continued_fraction",
    "digits",
    "dio",
    "ice",
    "mu_estimate",
    "report",
    "sturmian",
]
