"""Compressed representations of Zimin factors.

A factor w of a Zimin word is determined by its record letters: the
left-to-right maxima followed by the right-to-left maxima.  That
sequence c(w) is strictly unimodal, has at most 2k - 1 entries when
max(w) = k, and the gap between consecutive records a, b of w is
exactly Z_{min(a,b)-1}.  All operations here work on such codes without
expanding the underlying word unless explicitly asked to.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import NotAFactorError, SizeLimitError
from .words import Word, first_violation, generate_zimin

Code = tuple[int, ...]

# decompress() refuses to materialize words longer than this
DEFAULT_MAX_LETTERS = 2 ** 25 - 1


def is_unimodal(seq) -> bool:
    """True iff ``seq`` strictly increases to a unique maximum and then
    strictly decreases.  Singletons and the empty sequence qualify."""
    if not seq:
        return True
    top = seq.index(max(seq))
    for i in range(top):
        if seq[i] >= seq[i + 1]:
            return False
    for i in range(top, len(seq) - 1):
        if seq[i] <= seq[i + 1]:
            return False
    return True


def validate_code(code) -> Code:
    code = tuple(code)
    if code and min(code) < 1:
        raise ValueError("code letters must be positive integers")
    if not is_unimodal(code):
        raise ValueError(f"not a strictly unimodal sequence: {code}")
    return code


def is_valid_code(code) -> bool:
    try:
        validate_code(code)
    except ValueError:
        return False
    return True


def compress(word) -> Code:
    """Compute c(word).  Raises NotAFactorError on non-factors."""
    violation = first_violation(word)
    if violation is not None:
        raise NotAFactorError(f"factor condition fails at letter {violation}")
    if not word:
        return ()
    prefix: list[int] = []
    best = 0
    for x in word:
        if x > best:
            prefix.append(x)
            best = x
    suffix: list[int] = []
    best = 0
    for x in reversed(word):
        if x > best:
            suffix.append(x)
            best = x
    suffix.reverse()
    # both scans end at the unique maximum; keep one copy
    return tuple(prefix[:-1] + suffix)


def decompressed_length(code) -> int:
    """Length of the word encoded by ``code``, as an exact integer."""
    code = validate_code(code)
    total = len(code)
    for a, b in zip(code, code[1:]):
        total += 2 ** (min(a, b) - 1) - 1
    return total


def decompress(code, max_letters: int = DEFAULT_MAX_LETTERS) -> Word:
    """Expand a code back into an explicit word.

    The gap between records a and b is Z_{min(a,b)-1}, empty when the
    smaller record is 1.
    """
    code = validate_code(code)
    if not code:
        return ()
    n = decompressed_length(code)
    if n > max_letters:
        raise SizeLimitError(f"decompressed word has {n} letters, cap is {max_letters}")
    gaps: dict[int, Word] = {}
    out = [code[0]]
    for a, b in zip(code, code[1:]):
        m = min(a, b)
        if m >= 2:
            if m - 1 not in gaps:
                gaps[m - 1] = generate_zimin(m - 1)
            out.extend(gaps[m - 1])
        out.append(b)
    return tuple(out)


def check_concatenation(parts) -> bool:
    """Decide whether w_1 w_2 ... w_m is itself a Zimin factor, given only
    the codes of the parts.

    Round j removes letter j from every part boundary; the concatenation
    is a factor iff every junction carries exactly one j at its two
    facing ends in every round until a single part remains.  Runs in
    time linear in the total code length.
    """
    active = [deque(validate_code(p)) for p in parts]
    active = [rep for rep in active if rep]
    level = 1
    while len(active) > 1:
        for left, right in zip(active, active[1:]):
            if (left[-1] == level) == (right[0] == level):
                return False
        for rep in active:
            if rep[-1] == level:
                rep.pop()
            if rep and rep[0] == level:
                rep.popleft()
        active = [rep for rep in active if rep]
        level += 1
    return True


def compose(parts) -> Code:
    """Code of the concatenation, or NotAFactorError if it is not a factor.

    Records of the whole word are found among the parts' records, so
    scanning the flattened codes for running maxima suffices; the word
    itself is never expanded.
    """
    codes = [validate_code(p) for p in parts]
    codes = [c for c in codes if c]
    if not codes:
        return ()
    if not check_concatenation(codes):
        raise NotAFactorError("concatenation is not a Zimin factor")
    flat = [x for code in codes for x in code]
    prefix: list[int] = []
    best = 0
    for x in flat:
        if x > best:
            prefix.append(x)
            best = x
    suffix: list[int] = []
    best = 0
    for x in reversed(flat):
        if x > best:
            suffix.append(x)
            best = x
    suffix.reverse()
    return tuple(prefix[:-1] + suffix)


@dataclass(frozen=True)
class ZBlock:
    """Token standing for a whole Zimin word Z_order."""

    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"block order must be >= 1, got {self.order}")

    def __repr__(self):
        return f"Z{self.order}"


Token = int | ZBlock


def block_code(order: int) -> Code:
    """c(Z_order) = 1 2 ... order ... 2 1."""
    if order < 1:
        raise ValueError(f"block order must be >= 1, got {order}")
    up = list(range(1, order + 1))
    return tuple(up + up[-2::-1])


def extend(code) -> list:
    """Rewrite a code as tokens, making the implicit Zimin gaps explicit.

    Records stay as plain letters except that a boundary 1 is already a
    full Z_1; every nonempty gap becomes its ZBlock.
    """
    code = validate_code(code)
    if not code:
        return []
    tokens: list = []
    for i, x in enumerate(code):
        if x == 1:
            # unimodality puts 1 only at the ends, where it spans Z_1
            tokens.append(ZBlock(1))
        else:
            tokens.append(x)
        if i + 1 < len(code):
            m = min(x, code[i + 1])
            if m >= 2:
                tokens.append(ZBlock(m - 1))
    return tokens


def token_code(token) -> Code:
    if isinstance(token, ZBlock):
        return block_code(token.order)
    return (token,)


def expand_tokens(tokens, max_letters: int = DEFAULT_MAX_LETTERS) -> Word:
    """Explicit word spelled by a token sequence."""
    total = 0
    for tok in tokens:
        total += 2 ** tok.order - 1 if isinstance(tok, ZBlock) else 1
        if total > max_letters:
            raise SizeLimitError(f"token expansion exceeds cap {max_letters}")
    out: list[int] = []
    for tok in tokens:
        if isinstance(tok, ZBlock):
            out.extend(generate_zimin(tok.order))
        else:
            if tok < 1:
                raise ValueError("letters must be positive integers")
            out.append(tok)
    return tuple(out)


def reduce_extended(tokens) -> list:
    """Merge a token sequence into its shortest equivalent form.

    Z_{i-1} i Z_{i-1} collapses to Z_i; merges cascade bottom-up along a
    max-Cartesian tree of the tokens (leftmost maximum at the root), so
    each token is touched O(depth) times.  Raises NotAFactorError when
    the spelled word is not a Zimin factor.
    """
    items: list = []
    for tok in tokens:
        if isinstance(tok, ZBlock):
            items.append(tok)
        elif tok == 1:
            items.append(ZBlock(1))
        elif tok >= 2:
            items.append(tok)
        else:
            raise ValueError("letters must be positive integers")
    if not items:
        return []

    def priority(tok) -> int:
        return tok.order if isinstance(tok, ZBlock) else tok

    n = len(items)
    left = [-1] * n
    right = [-1] * n
    stack: list[int] = []
    for i in range(n):
        last = -1
        while stack and priority(items[stack[-1]]) < priority(items[i]):
            last = stack.pop()
        left[i] = last
        if stack:
            right[stack[-1]] = i
        stack.append(i)
    root = stack[0]

    merged: dict[int, list] = {}
    # iterative post-order; recursion depth can hit the token count
    todo = [(root, False)]
    while todo:
        node, ready = todo.pop()
        if not ready:
            todo.append((node, True))
            if left[node] >= 0:
                todo.append((left[node], False))
            if right[node] >= 0:
                todo.append((right[node], False))
            continue
        lt = merged.pop(left[node], [])
        rt = merged.pop(right[node], [])
        tok = items[node]
        if (
            not isinstance(tok, ZBlock)
            and lt
            and rt
            and lt[-1] == ZBlock(tok - 1)
            and rt[0] == ZBlock(tok - 1)
        ):
            merged[node] = lt[:-1] + [ZBlock(tok)] + rt[1:]
        else:
            merged[node] = lt + [tok] + rt
    result = merged[root]

    if not check_concatenation([token_code(tok) for tok in result]):
        raise NotAFactorError("token sequence does not spell a Zimin factor")
    return result
