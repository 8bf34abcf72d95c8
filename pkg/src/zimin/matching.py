"""Matching ranked patterns into Zimin words.

A ranking assigns each pattern variable a positive rank; a match is a
valuation sending each variable to a Zimin factor whose largest letter
is the rank, such that the image of the whole pattern is again a Zimin
factor.  Values are handled in compressed form throughout, so matched
instances may be astronomically longer than anything materialized here.

The engine walks rank levels downward.  At level i the projection onto
ranks >= i is refined: variables of rank i enter with value (i), and
every junction of the projection needs exactly one letter i, which is
the boundary system solved per level.  Each level contributes its free
component count to l, and the instance count is 2**l.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

from .boundary import END, START, AdjacencyGraph, first_last
from .compressed import DEFAULT_MAX_LETTERS, decompressed_length
from .errors import EnumerationLimitError, SizeLimitError
from .words import apply_mu

DEFAULT_ENUM_LIMIT = 4096


@dataclass(frozen=True)
class RankedPattern:
    """A pattern (sequence of variable occurrences) plus a ranking.

    ``ranks`` must cover exactly the variables that occur.  Ranks do not
    need to be contiguous; missing levels just insert no new variables.
    """

    symbols: tuple
    ranks: dict

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        object.__setattr__(self, "ranks", dict(self.ranks))
        if not self.symbols:
            raise ValueError("pattern must have at least one symbol")
        occurring = set(self.symbols)
        if set(self.ranks) != occurring:
            raise ValueError("ranks must cover exactly the occurring variables")
        for var, rank in self.ranks.items():
            if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1:
                raise ValueError(f"rank of {var!r} must be a positive integer")

    def __len__(self):
        return len(self.symbols)

    @property
    def max_rank(self) -> int:
        return max(self.ranks.values())

    @property
    def rank_sequence(self) -> tuple[int, ...]:
        return tuple(self.ranks[s] for s in self.symbols)

    @property
    def variables(self) -> tuple:
        return tuple(dict.fromkeys(self.symbols))


@dataclass(frozen=True)
class RankingViolation:
    kind: str  # "equal-ranks-unseparated" or "max-rank-repeated"
    positions: tuple


@dataclass(frozen=True)
class MatchResult:
    valuation: dict  # variable -> compressed value
    free_components: int  # l: total free bits over all levels


def validate_ranking(pattern: RankedPattern):
    """Violations of the two matchability conditions, in scan order.

    (equal-ranks-unseparated) two equal ranks with nothing larger in
    between, (max-rank-repeated) the top rank occurring more than once.
    A ranking admits a match iff there are no violations.
    """
    seq = pattern.rank_sequence
    violations = []
    stack: list = []  # (rank, position), ranks strictly decreasing
    for pos, rank in enumerate(seq):
        while stack and stack[-1][0] < rank:
            stack.pop()
        if stack and stack[-1][0] == rank:
            violations.append(
                RankingViolation("equal-ranks-unseparated", (stack[-1][1], pos))
            )
            stack[-1] = (rank, pos)
        else:
            stack.append((rank, pos))
    top = max(seq)
    tops = tuple(pos for pos, rank in enumerate(seq) if rank == top)
    if len(tops) > 1:
        violations.append(RankingViolation("max-rank-repeated", tops))
    return tuple(violations)


def _peel_events(pattern: RankedPattern):
    """Per-level deletion records of the projection linked list.

    Replayed in reverse they re-insert the rank-i positions when the
    engine descends to level i, so every position costs O(1) overall.
    """
    seq = pattern.rank_sequence
    n = len(seq)
    prv = list(range(-1, n - 1))
    nxt = list(range(1, n + 1))
    by_rank: dict[int, list[int]] = {}
    for pos, rank in enumerate(seq):
        by_rank.setdefault(rank, []).append(pos)
    events: dict[int, list[tuple[int, int, int]]] = {}
    for level in range(1, pattern.max_rank + 1):
        recs = []
        for pos in by_rank.get(level, ()):
            left, right = prv[pos], nxt[pos]
            recs.append((pos, left, right))
            if left >= 0:
                nxt[left] = right
            if right < n:
                prv[right] = left
        events[level] = recs
    return events


def _run(pattern: RankedPattern, shortest: bool = False, collect: bool = False):
    """Descend levels max_rank..1, maintaining compressed values.

    Returns (valuation, l, steps) or None when a level system clashes,
    which happens exactly for rankings that violate a condition.
    """
    symbols = pattern.symbols
    ranks = pattern.ranks
    n = len(symbols)
    events = _peel_events(pattern)
    rank_vars: dict[int, list] = {}
    for var in pattern.variables:
        rank_vars.setdefault(ranks[var], []).append(var)

    prv = [0] * n
    nxt = [0] * n
    head = tail = -1
    pair_count: dict[tuple, int] = {}
    active: dict = {}  # variable -> occurrence count, in activation order
    val: dict = {}
    total_free = 0
    steps = [] if collect else None

    for level in range(pattern.max_rank, 0, -1):
        for pos, left, right in reversed(events[level]):
            if left >= 0 and right < n:
                key = (symbols[left], symbols[right])
                cnt = pair_count[key] - 1
                if cnt:
                    pair_count[key] = cnt
                else:
                    del pair_count[key]
            prv[pos], nxt[pos] = left, right
            if left >= 0:
                nxt[left] = pos
                key = (symbols[left], symbols[pos])
                pair_count[key] = pair_count.get(key, 0) + 1
            else:
                head = pos
            if right < n:
                prv[right] = pos
                key = (symbols[pos], symbols[right])
                pair_count[key] = pair_count.get(key, 0) + 1
            else:
                tail = pos
            var = symbols[pos]
            active[var] = active.get(var, 0) + 1
            if var not in val:
                val[var] = deque((level,))

        graph = AdjacencyGraph(active, pair_count)
        for var in rank_vars.get(level, ()):
            if not graph.valuate((var, END), True) or not graph.valuate(
                (var, START), True
            ):
                return None
        free_cids = graph.unvalued_components()
        total_free += len(free_cids)
        if shortest:
            if graph.value_of((symbols[head], START)) is None:
                graph.valuate((symbols[head], START), False)
            if graph.value_of((symbols[tail], END)) is None:
                graph.valuate((symbols[tail], END), False)
        for cid in graph.unvalued_components():
            graph.set_anchor(cid, False)
        for var, (first, last) in graph.flags().items():
            if ranks[var] > level:
                if first:
                    val[var].appendleft(level)
                if last:
                    val[var].append(level)
        if collect:
            steps.append((level, graph, free_cids))

    return val, total_free, steps


def compressed_embedding(pattern: RankedPattern, *, validate: bool = True):
    """Canonical match, or None when the ranking admits none.

    With validate=False the two ranking conditions are not prechecked;
    invalid rankings still come back as None because their projections
    force clashing boundary flags.
    """
    if validate and validate_ranking(pattern):
        return None
    out = _run(pattern)
    if out is None:
        return None
    val, total_free, _ = out
    return MatchResult({v: tuple(c) for v, c in val.items()}, total_free)


def shortest_instance(pattern: RankedPattern, *, validate: bool = True):
    """Match whose instance is shortest possible.

    Junction letters are fixed by the systems; only the flags at the two
    projection ends are genuinely optional, and turning them off level
    by level is globally optimal.
    """
    if validate and validate_ranking(pattern):
        return None
    out = _run(pattern, shortest=True)
    if out is None:
        return None
    val, total_free, _ = out
    return MatchResult({v: tuple(c) for v, c in val.items()}, total_free)


def count_instances(pattern: RankedPattern) -> int:
    """Exact number of distinct matches (2**l), 0 when there is none."""
    res = compressed_embedding(pattern)
    return 0 if res is None else 2 ** res.free_components


def enumerate_instances(pattern: RankedPattern, limit: int = DEFAULT_ENUM_LIMIT):
    """All matches, canonical one first.

    The per-level systems do not depend on the bits chosen, so matches
    are exactly the combinations of the free component bits.  Raises
    EnumerationLimitError (carrying the count) instead of materializing
    more than ``limit`` results.
    """
    if validate_ranking(pattern):
        return []
    probe = _run(pattern)
    if probe is None:
        return []
    count = 2 ** probe[1]
    if count > limit:
        raise EnumerationLimitError(count, limit)
    _, _, steps = _run(pattern, collect=True)

    ranks = pattern.ranks
    slots = [(i, cid) for i, (_, _, cids) in enumerate(steps) for cid in cids]
    out = []
    seen = set()
    for bits in product((False, True), repeat=len(slots)):
        overrides: dict[int, dict] = {}
        for (i, cid), bit in zip(slots, bits):
            overrides.setdefault(i, {})[cid] = bit
        val: dict = {}
        for i, (level, graph, _) in enumerate(steps):
            for var, (first, last) in graph.flags_with(overrides.get(i, {})).items():
                if ranks[var] == level:
                    val.setdefault(var, deque((level,)))
                elif ranks[var] > level:
                    if first:
                        val[var].appendleft(level)
                    if last:
                        val[var].append(level)
        frozen = {v: tuple(c) for v, c in val.items()}
        key = tuple(frozen[v] for v in pattern.variables)
        if key not in seen:
            seen.add(key)
            out.append(frozen)
    return out


def instance_length(pattern: RankedPattern, valuation) -> int:
    """Length of the matched Zimin factor, as an exact integer."""
    return sum(decompressed_length(valuation[s]) for s in pattern.symbols)


def min_instance_length(pattern: RankedPattern):
    res = shortest_instance(pattern)
    return None if res is None else instance_length(pattern, res.valuation)


def uncompressed_embedding(
    pattern: RankedPattern,
    *,
    validate: bool = True,
    max_letters: int = DEFAULT_MAX_LETTERS,
):
    """Explicit-word reference construction of the canonical match.

    Works on fully spelled values: descending a level applies the
    morphism and then fixes up the boundary letters per the solved
    flags.  Values grow exponentially, hence the letter cap; meant for
    cross-checking the compressed engine, not for real inputs.
    """
    if validate and validate_ranking(pattern):
        return None
    seq = pattern.rank_sequence
    val: dict = {}
    for level in range(pattern.max_rank, 0, -1):
        proj = [s for s, r in zip(pattern.symbols, seq) if r >= level]
        forced = tuple(dict.fromkeys(s for s in proj if pattern.ranks[s] == level))
        for var in val:
            val[var] = apply_mu(val[var])
        flags = first_last(proj, forced)
        if flags is None:
            return None
        for var, (first, last) in flags.items():
            if pattern.ranks[var] == level:
                val[var] = (1,)
                continue
            word = val[var]
            if first and word[0] != 1:
                word = (1,) + word
            elif not first and word[0] == 1:
                word = word[1:]
            if last and word[-1] != 1:
                word = word + (1,)
            elif not last and word[-1] == 1:
                word = word[:-1]
            val[var] = word
        if sum(map(len, val.values())) > max_letters:
            raise SizeLimitError(f"explicit values exceed cap {max_letters}")
    return val
