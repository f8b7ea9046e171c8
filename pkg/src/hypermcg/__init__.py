"""Exact evaluation of words in hyperelliptic mapping class groups.

Elements are compared through a faithful pair of representations: the outer
action on the fundamental group of the 2g+2 times punctured sphere, and the
integral action on homology of the genus g surface.
"""

from .abelian import h1_hyperelliptic, involution_subgroup_index, smith_normal_form
from .claims import registry, run
from .oracle import GroupElement, Oracle, oracle_for
from .words import Word, expand, parse_word

__all__ = [
    "GroupElement",
    "Oracle",
    "Word",
    "expand",
    "h1_hyperelliptic",
    "involution_subgroup_index",
    "oracle_for",
    "parse_word",
    "registry",
    "run",
    "smith_normal_form",
]

__version__ = "0.1.0"
