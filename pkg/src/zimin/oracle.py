"""Brute-force ground truth over explicit Zimin words.

Everything here is deliberately naive: factor queries become substring
searches, match queries try every block split of every substring.  The
point is an independent reference the fast implementations are tested
against, so nothing below shares code with them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeLimitError
from .words import generate_zimin

# a word with maximum letter M is a Zimin factor iff it occurs in Z_M
SUBSTRING_MAX_K = 12


@dataclass(frozen=True)
class OracleBudget:
    max_k: int = 4
    max_pattern_len: int = 8


def _as_string(word) -> str:
    return "".join(map(chr, word))


def oracle_is_factor(word, max_k: int = SUBSTRING_MAX_K) -> bool:
    word = tuple(word)
    if not word:
        return True
    if min(word) < 1:
        raise ValueError("letters must be positive integers")
    top = max(word)
    if top > max_k:
        raise SizeLimitError(f"explicit check needs Z_{top}, cap is Z_{max_k}")
    return _as_string(word) in _as_string(generate_zimin(top))


def oracle_enumerate(pattern, budget: OracleBudget = OracleBudget()):
    """Every valuation matching the ranked pattern, by exhaustion.

    Any matched instance has maximum letter max_rank, hence occurs in
    Z_max_rank, so trying every distinct substring of it is complete.
    Valuations come back as block tuples in first-occurrence variable
    order.
    """
    top = pattern.max_rank
    if top > budget.max_k:
        raise SizeLimitError(f"max rank {top} above oracle budget {budget.max_k}")
    if len(pattern.symbols) > budget.max_pattern_len:
        raise SizeLimitError(
            f"pattern length {len(pattern.symbols)} above oracle budget"
            f" {budget.max_pattern_len}"
        )
    z = generate_zimin(top)
    n = len(z)
    substrings = {z[i:j] for i in range(n) for j in range(i + 1, n + 1)}
    symbols = pattern.symbols
    ranks = pattern.ranks
    order = pattern.variables
    results: set = set()

    def rec(w, idx: int, start: int, chosen: dict):
        if idx == len(symbols):
            if start == len(w):
                results.add(tuple(chosen[v] for v in order))
            return
        var = symbols[idx]
        if var in chosen:
            block = chosen[var]
            end = start + len(block)
            if w[start:end] == block:
                rec(w, idx + 1, end, chosen)
            return
        rank = ranks[var]
        seen = 0
        for end in range(start + 1, len(w) + 1):
            letter = w[end - 1]
            if letter > rank:
                break
            if letter > seen:
                seen = letter
            if seen == rank:
                chosen[var] = w[start:end]
                rec(w, idx + 1, end, chosen)
                del chosen[var]

    for w in substrings:
        rec(w, 0, 0, {})
    return results


def oracle_count(pattern, budget: OracleBudget = OracleBudget()) -> int:
    return len(oracle_enumerate(pattern, budget))


def oracle_min_length(pattern, budget: OracleBudget = OracleBudget()):
    """Length of the shortest matched instance, None when nothing matches."""
    occurrences: dict = {}
    for s in pattern.symbols:
        occurrences[s] = occurrences.get(s, 0) + 1
    best = None
    for valuation in oracle_enumerate(pattern, budget):
        total = sum(
            len(block) * occurrences[var]
            for var, block in zip(pattern.variables, valuation)
        )
        if best is None or total < best:
            best = total
    return best
