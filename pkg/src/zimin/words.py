"""Zimin words and the factor test.

The n-th Zimin word is defined by Z_1 = 1 and Z_n = Z_{n-1} n Z_{n-1},
so |Z_n| = 2^n - 1.  Positions are 1-based in the literature; here words
are plain tuples of positive ints and indexing stays 0-based.

A word is a factor of some Zimin word iff for every letter j, the
occurrences of letters >= j sit at alternating positions among
themselves with j on one fixed parity class.  ``first_violation``
implements that test by repeated halving, which is linear in the input
length.
"""

from __future__ import annotations

from .errors import SizeLimitError

Word = tuple[int, ...]

# Explicit words above this order exceed 2^25 - 1 letters; refuse them.
DEFAULT_MAX_ORDER = 25


def generate_zimin(k: int, max_order: int = DEFAULT_MAX_ORDER) -> Word:
    """Return Z_k as a tuple of letters."""
    if k < 1:
        raise ValueError(f"Zimin words are indexed from 1, got {k}")
    if k > max_order:
        raise SizeLimitError(f"Z_{k} has {2 ** k - 1} letters, above cap 2^{max_order} - 1")
    word = [1]
    for letter in range(2, k + 1):
        word = word + [letter] + word
    return tuple(word)


def apply_mu(word) -> Word:
    """Apply the morphism 1 -> 121, i -> i+1 (for i >= 2).

    Mu maps Z_n onto Z_{n+1} with the first and last letter removed, which
    is what makes value propagation between consecutive ranks work.
    """
    out: list[int] = []
    for x in word:
        if x == 1:
            out.extend((1, 2, 1))
        else:
            out.append(x + 1)
    return tuple(out)


def project(word, j: int) -> Word:
    """Keep only the letters >= j."""
    return tuple(x for x in word if x >= j)


def first_violation(word):
    """Return the smallest letter level at which ``word`` fails the factor
    condition, or None if it is a Zimin factor.

    Level j fails when, among the positions holding letters >= j, the
    letter j itself does not occupy exactly one full parity class.
    """
    if not word:
        return None
    if min(word) < 1:
        raise ValueError("letters must be positive integers")
    current = list(word)
    level = 1
    while len(current) > 1:
        evens = current[0::2]
        odds = current[1::2]
        at_even = evens.count(level)
        at_odd = odds.count(level)
        if at_even == len(evens) and at_odd == 0:
            current = odds
        elif at_odd == len(odds) and at_even == 0:
            current = evens
        else:
            return level
        level += 1
    return None


def is_zimin_factor(word) -> bool:
    """True iff ``word`` occurs as a factor of Z_n for some n.

    The empty word counts as a factor.
    """
    return first_violation(word) is None


def parse_word(text: str) -> Word:
    """Parse a word from text.

    Two encodings are accepted: whitespace-separated integers
    ("1 2 1 3"), or a single run of digits ("1213") read one letter per
    character.  The compact form is only unambiguous when every letter
    is a single digit, so a lone token containing a '0' or of length 1
    is read as one integer.
    """
    tokens = text.split()
    if not tokens:
        raise ValueError("empty word")
    if len(tokens) == 1:
        tok = tokens[0]
        if tok.isdigit() and len(tok) > 1 and "0" not in tok:
            return tuple(int(ch) for ch in tok)
        return (int(tok),)
    return tuple(int(tok) for tok in tokens)


def format_word(word) -> str:
    """Render a word; compact digits when possible, else space separated."""
    if not word:
        return ""
    if len(word) > 1 and all(1 <= x <= 9 for x in word):
        return "".join(str(x) for x in word)
    return " ".join(str(x) for x in word)
