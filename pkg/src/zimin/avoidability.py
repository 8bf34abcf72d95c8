"""Deciding whether a pattern is unavoidable.

Two independent deciders.  The reduction method deletes free variable
sets until the pattern vanishes; the ranking method searches for a
ranking admitting a match.  Both characterize the same class, so they
must always agree, which the test suite exploits.

Variable counts are capped: both searches are exponential in the number
of distinct variables by nature.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .errors import SizeLimitError
from .matching import (
    MatchResult,
    RankedPattern,
    compressed_embedding,
    validate_ranking,
)

MAX_VARIABLES = 8


class Verdict(Enum):
    UNAVOIDABLE = "unavoidable"
    AVOIDABLE = "avoidable"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class FreeSetWitness:
    free_set: frozenset
    a_set: frozenset
    b_set: frozenset


def check_free_set(pattern, candidate):
    """Witness that ``candidate`` is a free set of the pattern, or None.

    Freeness asks for sets A, B with x in A iff y in B for every
    adjacent occurrence pair x y, and the candidate inside B minus A.
    That is a system of equalities between per-variable booleans, solved
    here on its connected components.
    """
    variables = tuple(dict.fromkeys(pattern))
    cand = frozenset(candidate)
    if not cand:
        raise ValueError("candidate free set must be nonempty")
    if not cand <= set(variables):
        raise ValueError("candidate contains variables not in the pattern")

    parent: dict = {}
    for x in variables:
        parent[("a", x)] = ("a", x)
        parent[("b", x)] = ("b", x)

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for x, y in zip(pattern, pattern[1:]):
        parent[find(("a", x))] = find(("b", y))

    value: dict = {}
    for f in cand:
        for vert, want in ((("b", f), True), (("a", f), False)):
            root = find(vert)
            if value.get(root, want) != want:
                return None
            value[root] = want
    a_set = frozenset(x for x in variables if value.get(find(("a", x)), False))
    b_set = frozenset(x for x in variables if value.get(find(("b", x)), False))
    return FreeSetWitness(cand, a_set, b_set)


def delete_variables(pattern, variables) -> tuple:
    """Erase every occurrence of the given variables.

    The reduction step; meaningful when the deleted set is free."""
    drop = frozenset(variables)
    return tuple(s for s in pattern if s not in drop)


@dataclass(frozen=True)
class ReductionResult:
    verdict: Verdict
    trace: tuple  # ((pattern, deleted_set), ...) down to the empty pattern


def _canonical(pattern) -> tuple:
    ren: dict = {}
    out = []
    for s in pattern:
        if s not in ren:
            ren[s] = len(ren)
        out.append(ren[s])
    return tuple(out)


def is_unavoidable_by_reduction(pattern, max_free_set_size=None) -> ReductionResult:
    """Search for a chain of free deletions emptying the pattern.

    With max_free_set_size the search is truncated and a miss is only
    INCONCLUSIVE; unrestricted (or covering all variables) it is a
    decision procedure.
    """
    pattern = tuple(pattern)
    variables = tuple(dict.fromkeys(pattern))
    if len(variables) > MAX_VARIABLES:
        raise SizeLimitError(
            f"{len(variables)} variables, reduction search is capped at {MAX_VARIABLES}"
        )
    if not pattern:
        return ReductionResult(Verdict.UNAVOIDABLE, ())
    complete = max_free_set_size is None or max_free_set_size >= len(variables)

    dead: set = set()
    trace: list = []

    def dfs(p) -> bool:
        if not p:
            return True
        key = _canonical(p)
        if key in dead:
            return False
        pvars = tuple(dict.fromkeys(p))
        bound = len(pvars) if max_free_set_size is None else min(
            max_free_set_size, len(pvars)
        )
        for size in range(1, bound + 1):
            for combo in combinations(pvars, size):
                if check_free_set(p, combo) is None:
                    continue
                deleted = frozenset(combo)
                trace.append((p, deleted))
                if dfs(delete_variables(p, deleted)):
                    return True
                trace.pop()
        dead.add(key)
        return False

    if dfs(pattern):
        return ReductionResult(Verdict.UNAVOIDABLE, tuple(trace))
    return ReductionResult(Verdict.AVOIDABLE if complete else Verdict.INCONCLUSIVE, ())


@dataclass(frozen=True)
class RankingResult:
    verdict: Verdict
    ranking: dict | None
    match: MatchResult | None


def is_unavoidable_by_ranking(pattern) -> RankingResult:
    """Search rankings in lexicographic order for one that matches.

    Only rankings onto an interval {1..m} are tried; anything else is
    equivalent to its relabeling.  A pattern is unavoidable iff some
    valid ranking exists, so exhausting the space is a decision.
    """
    pattern = tuple(pattern)
    variables = tuple(dict.fromkeys(pattern))
    if not pattern:
        return RankingResult(Verdict.UNAVOIDABLE, {}, MatchResult({}, 0))
    k = len(variables)
    if k > MAX_VARIABLES:
        raise SizeLimitError(
            f"{k} variables, ranking search is capped at {MAX_VARIABLES}"
        )

    assign: dict = {}
    used: set[int] = set()

    def rec(i: int):
        if i == k:
            rp = RankedPattern(pattern, dict(assign))
            if validate_ranking(rp):
                return None
            match = compressed_embedding(rp, validate=False)
            if match is None:
                return None
            return dict(assign), match
        remaining = k - i
        cur_max = max(used, default=0)
        for rank in range(1, k + 1):
            added = rank not in used
            # every rank below the running max must still be coverable
            if max(cur_max, rank) - (len(used) + added) > remaining - 1:
                continue
            assign[variables[i]] = rank
            if added:
                used.add(rank)
            hit = rec(i + 1)
            if added:
                used.discard(rank)
            del assign[variables[i]]
            if hit:
                return hit
        return None

    hit = rec(0)
    if hit:
        return RankingResult(Verdict.UNAVOIDABLE, hit[0], hit[1])
    return RankingResult(Verdict.AVOIDABLE, None, None)
