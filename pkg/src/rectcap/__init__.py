"""Rectangle capacity on bargraphs of words, Catalan words and permutations."""
from .bargraph import (
    RectSize,
    Word,
    enumerate_catalan,
    enumerate_catalan_ending,
    enumerate_permutations,
    enumerate_words,
    enumerate_words_min,
    format_word,
    is_catalan,
    parse_word,
    rectangle_capacity,
)
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "RectSize", "Word", "enumerate_catalan", "enumerate_catalan_ending",
    "enumerate_permutations", "enumerate_words", "enumerate_words_min", "format_word",
    "is_catalan", "parse_word", "rectangle_capacity",
]
