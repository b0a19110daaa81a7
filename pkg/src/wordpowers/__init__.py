"""Avoiding sum-squares and congruential powers in words.

Detectors for squares, abelian powers, sum-squares and congruential powers;
morphism fixed points; an explicit avoiding word for prime moduli;
van der Waerden style extraction; and an exhaustive search for the longest
avoiding words.
"""

from .detectors import (
    AdjacentPairOccurrence,
    IncrementalState,
    Occurrence,
    Pattern,
    extend_check,
    find_abelian_power,
    find_adjacent_equal_nonzero_sum,
    find_congruential_power,
    find_square,
    find_sum_square,
    parse_pattern,
)
from .numtheory import construct_peng
from .search import SearchConfig, SearchResult, longest_avoiding, longest_avoiding_custom, reproduce_table
from .words import parikh, parse_word, prefix_sums, render_word

__version__ = "0.1.0"
