"""Left-greedy normal forms, the word problem and parabolic divisors in B_n.

Simple elements (positive divisors of the half twist) are stored as
permutations: a tuple ``s`` with ``s[p]`` the 0-based bottom position of the
strand starting at position ``p``.  The braid product ``x*y`` has permutation
``p -> y[x[p]]``.  Because the simple element with a given permutation is the
positive braid in which every pair of strands crosses at most once, all
Garside operations reduce to bookkeeping on these tuples.

A canonical form ``Delta^p s_1 ... s_k`` is stored as the infimum ``p`` and the
factor tuple; no factor is trivial or equal to Delta, and every consecutive
pair is left-weighted (left descents of ``s_{j+1}`` lie inside the right
descents of ``s_j``).
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .words import BraidError, BraidWord, _check_same, concat, free_reduce, invert

Perm = tuple[int, ...]

SIDES = ("A", "B")


# ---------------------------------------------------------------------------
# permutation-braid primitives

@functools.lru_cache(maxsize=None)
def _identity(n: int) -> Perm:
    return tuple(range(n))


@functools.lru_cache(maxsize=None)
def _delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


@functools.lru_cache(maxsize=None)
def _atom(n: int, i: int) -> Perm:
    s = list(range(n))
    s[i - 1], s[i] = s[i], s[i - 1]
    return tuple(s)


@functools.lru_cache(maxsize=None)
def _neg_atom(n: int, i: int) -> Perm:
    """Permutation of ``Delta sigma_i^-1``, so that ``sigma_i^-1 = Delta^-1 * it``."""
    t = _atom(n, i)
    return tuple(t[n - 1 - p] for p in range(n))


def _inverse(s: Perm) -> Perm:
    out = [0] * len(s)
    for p, q in enumerate(s):
        out[q] = p
    return tuple(out)


def _mul(x: Perm, y: Perm) -> Perm:
    return tuple(y[q] for q in x)


def _tau(s: Perm) -> Perm:
    """Conjugation by Delta (sigma_i <-> sigma_{n-i})."""
    n = len(s)
    return tuple(n - 1 - s[n - 1 - p] for p in range(n))


def _right_complement(s: Perm) -> Perm:
    """``s^-1 Delta``."""
    n = len(s)
    inv = _inverse(s)
    return tuple(n - 1 - inv[q] for q in range(n))


def left_descents(s: Perm) -> frozenset[int]:
    """Indices ``i`` (1-based) with sigma_i a left divisor of ``s``."""
    return frozenset(i + 1 for i in range(len(s) - 1) if s[i] > s[i + 1])


def right_descents(s: Perm) -> frozenset[int]:
    inv = _inverse(s)
    return frozenset(i + 1 for i in range(len(s) - 1) if inv[i] > inv[i + 1])


def simple_word(s: Perm) -> list[int]:
    """A positive word (reduced) for the simple element ``s``."""
    s = list(s)
    out: list[int] = []
    i = 0
    while i < len(s) - 1:
        if s[i] > s[i + 1]:
            out.append(i + 1)
            s[i], s[i + 1] = s[i + 1], s[i]
            i = max(i - 1, 0)
        else:
            i += 1
    return out


def simple_length(s: Perm) -> int:
    n = len(s)
    return sum(1 for a in range(n) for b in range(a + 1, n) if s[a] > s[b])


def _slide(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Make the pair ``(a, b)`` left-weighted without changing ``a*b``."""
    a = list(a)
    b = list(b)
    n = len(a)
    ainv = [0] * n
    for p, q in enumerate(a):
        ainv[q] = p
    moved = True
    while moved:
        moved = False
        for i in range(n - 1):
            # sigma_{i+1} left-divides b and a*sigma_{i+1} is still simple
            if b[i] > b[i + 1]:
                ia = ainv[i]
                ib = ainv[i + 1]
                if ia < ib:
                    a[ia], a[ib] = i + 1, i
                    ainv[i], ainv[i + 1] = ib, ia
                    b[i], b[i + 1] = b[i + 1], b[i]
                    moved = True
    return tuple(a), tuple(b)


def _normalize(simples: Iterable[Perm], n: int, infimum: int = 0) -> tuple[int, tuple[Perm, ...]]:
    """Left normal form of ``Delta^infimum * prod(simples)`` (positive simples only)."""
    ident = _identity(n)
    delta = _delta(n)
    factors: list[Perm] = []
    p = infimum
    for t in simples:
        if t == ident:
            continue
        if t == delta:
            p += 1
            factors = [_tau(f) for f in factors]
            continue
        factors = _push(factors, t, ident)
        while factors and factors[0] == delta:
            factors.pop(0)
            p += 1
    return p, tuple(factors)


def _push(factors: list[Perm], t: Perm, ident: Perm) -> list[Perm]:
    factors.append(t)
    j = len(factors) - 2
    while j >= 0:
        a, b = _slide(factors[j], factors[j + 1])
        if a == factors[j]:
            break
        factors[j], factors[j + 1] = a, b
        j -= 1
    if factors[-1] == ident:
        factors.pop()
    return factors


# ---------------------------------------------------------------------------
# canonical form

@dataclass(frozen=True)
class CanonicalForm:
    strands: int
    infimum: int
    factors: tuple[Perm, ...]

    @property
    def supremum(self) -> int:
        return self.infimum + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_positive(self) -> bool:
        return self.infimum >= 0

    def is_identity(self) -> bool:
        return self.infimum == 0 and not self.factors

    def key(self) -> tuple:
        return (self.strands, self.infimum, self.factors)

    def to_word(self) -> BraidWord:
        n = self.strands
        d = simple_word(_delta(n))
        letters: list[int] = []
        if self.infimum >= 0:
            letters.extend(d * self.infimum)
        else:
            letters.extend([-e for e in reversed(d)] * (-self.infimum))
        for f in self.factors:
            letters.extend(simple_word(f))
        return BraidWord(n, tuple(letters))

    def factor_words(self) -> list[BraidWord]:
        return [BraidWord(self.strands, tuple(simple_word(f))) for f in self.factors]

    def __str__(self) -> str:
        parts = [f"Delta^{self.infimum}"] + ["(" + " ".join(map(str, simple_word(f))) + ")" for f in self.factors]
        return " ".join(parts)


@functools.lru_cache(maxsize=65536)
def canonical_form(u: BraidWord) -> CanonicalForm:
    """Left-greedy normal form of ``u``."""
    n = u.strands
    ident = _identity(n)
    delta = _delta(n)
    p = 0
    # factors are held twisted by tau^twist; tau is an automorphism, so
    # sliding commutes with it and the twist is applied once at the end
    twist = 0
    factors: list[Perm] = []
    for e in free_reduce(u).letters:
        if e > 0:
            t = _atom(n, e)
        else:
            p -= 1
            twist ^= 1
            t = _neg_atom(n, -e)
            if t == ident:
                continue
        if t == delta:
            p += 1
            twist ^= 1
            continue
        factors = _push(factors, _tau(t) if twist else t, ident)
        while factors and factors[0] == delta:
            factors.pop(0)
            p += 1
    if twist:
        factors = [_tau(f) for f in factors]
    return CanonicalForm(n, p, tuple(factors))


def normal_word(u: BraidWord) -> BraidWord:
    return canonical_form(u).to_word()


def equals(u: BraidWord, v: BraidWord) -> bool:
    _check_same(u, v)
    if u.letters == v.letters:
        return True
    return canonical_form(concat(invert(u), v)).is_identity()


def is_identity(u: BraidWord) -> bool:
    return canonical_form(u).is_identity()


def is_positive(u: BraidWord) -> bool:
    return canonical_form(u).is_positive()


def right_divides(y: BraidWord, x: BraidWord) -> bool:
    """True iff ``x y^-1`` is a positive braid."""
    _check_same(y, x)
    return is_positive(concat(x, invert(y)))


def left_divides(y: BraidWord, x: BraidWord) -> bool:
    """True iff ``y^-1 x`` is a positive braid."""
    _check_same(y, x)
    return is_positive(concat(invert(y), x))


def min_central_power_to_positive(u: BraidWord) -> int:
    """Smallest ``N >= 0`` with ``Delta^(2N) u`` positive."""
    p = canonical_form(u).infimum
    return 0 if p >= 0 else (-p + 1) // 2


def np_form(u: BraidWord) -> tuple[BraidWord, BraidWord]:
    """Positive words ``(a, b)`` with ``u = a^-1 b`` and no common left divisor."""
    cf = canonical_form(u)
    n = cf.strands
    if cf.infimum >= 0:
        return BraidWord(n, ()), cf.to_word()
    r = -cf.infimum
    k = len(cf.factors)
    head = cf.factors[: min(r, k)]
    # Delta^-j s_1..s_j = (d(s_j) tau(d(s_{j-1})) ... tau^{j-1}(d(s_1)))^-1
    den: list[int] = []
    j = len(head)
    for idx in range(j - 1, -1, -1):
        c = _right_complement(head[idx])
        if (j - 1 - idx) % 2:
            c = _tau(c)
        den.extend(simple_word(c))
    if r > k:
        den.extend(simple_word(_delta(n)) * (r - k))
    num: list[int] = []
    for f in cf.factors[min(r, k):]:
        num.extend(simple_word(f))
    return BraidWord(n, tuple(den)), BraidWord(n, tuple(num))


# ---------------------------------------------------------------------------
# parabolic subgroups

def side_generators(n: int, side: str) -> range:
    if side == "A":
        return range(1, n - 1)
    if side == "B":
        return range(2, n)
    raise BraidError(f"side must be 'A' or 'B', got {side!r}")


def parabolic_representative(u: BraidWord, side: str) -> BraidWord | None:
    """A word for ``u`` using only the generators of ``side``, or None.

    The negative-positive form ``a^-1 b`` is unique and the parabolic
    submonoid is closed under divisors, so ``u`` lies in the parabolic
    subgroup exactly when both ``a`` and ``b`` use only its generators.
    """
    gens = set(side_generators(u.strands, side))
    a, b = np_form(u)
    if all(abs(e) in gens for e in a.letters + b.letters):
        return concat(invert(a), b)
    return None


def lives_in_parabolic(u: BraidWord, side: str) -> bool:
    n = u.strands
    images = _perm_of_word(u)
    fixed = n - 1 if side == "A" else 0
    if images[fixed] != fixed:
        return False
    return parabolic_representative(u, side) is not None


def _perm_of_word(u: BraidWord) -> Perm:
    s = list(range(u.strands))
    pos = list(range(u.strands))  # pos[slot] = strand
    for e in u.letters:
        i = abs(e) - 1
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    for slot, strand in enumerate(pos):
        s[strand] = slot
    return tuple(s)


def _parabolic_right_part(s: Perm, gens: set[int]) -> tuple[Perm, list[int]]:
    """Split simple ``s = s' * t`` with ``t`` the largest right divisor in the parabolic.

    Returns ``s'`` and a positive word for ``t``.
    """
    s = list(s)
    t: list[int] = []
    moved = True
    while moved:
        moved = False
        inv = _inverse(tuple(s))
        for i in gens:
            if inv[i - 1] > inv[i]:
                # strip sigma_i from the right: swap the values i-1, i
                a, b = inv[i - 1], inv[i]
                s[a], s[b] = i, i - 1
                t.insert(0, i)
                moved = True
                break
    return tuple(s), t


class _ReversedPositive:
    """Left normal form of ``rev(x)`` for a positive ``x``.

    The reversal anti-automorphism swaps left and right divisibility, so the
    first factor of this normal form is (the reverse of) the largest simple
    right divisor of ``x``.
    """

    def __init__(self, x: BraidWord):
        cf = canonical_form(x)
        if cf.infimum < 0:
            raise BraidError("expected a positive braid")
        n = x.strands
        self.n = n
        simples = [_delta(n)] * cf.infimum + list(cf.factors)
        self.p, self.factors = _normalize((_inverse(s) for s in reversed(simples)), n)

    def is_identity(self) -> bool:
        return self.p == 0 and not self.factors

    def last_simple(self) -> Perm:
        """Largest simple right divisor of ``x``."""
        if self.p > 0:
            return _delta(self.n)
        if not self.factors:
            return _identity(self.n)
        return _inverse(self.factors[0])

    def strip_right(self, t_word: Sequence[int]) -> None:
        """Replace ``x`` by ``x t^-1`` for ``t`` a right divisor of ``last_simple()``."""
        n = self.n
        first = _delta(n) if self.p > 0 else self.factors[0]
        rest = [_delta(n)] * max(self.p - 1, 0) + list(self.factors[1:] if self.p == 0 else self.factors)
        # rev(t) left-divides first: peel its letters off the left
        f = list(first)
        for i in reversed(t_word):
            if f[i - 1] < f[i]:
                raise BraidError("internal: not a right divisor")
            f[i - 1], f[i] = f[i], f[i - 1]
        self.p, self.factors = _normalize([tuple(f)] + rest, n)


def _extract(state: _ReversedPositive, side: str) -> list[int]:
    gens = set(side_generators(state.n, side))
    out: list[int] = []
    while not state.is_identity():
        _, t = _parabolic_right_part(state.last_simple(), gens)
        if not t:
            break
        state.strip_right(t)
        out[:0] = t
    return out


def parabolic_max_right_divisor(x: BraidWord, side: str) -> BraidWord:
    """The largest ``y`` in the positive monoid on ``side``'s generators with ``x y^-1`` positive."""
    if x.strands < 3:
        raise BraidError("parabolic submonoids need n >= 3")
    side_generators(x.strands, side)
    state = _ReversedPositive(x)
    return BraidWord(x.strands, tuple(_extract(state, side)))


def alternating_factors(x: BraidWord) -> list[BraidWord]:
    """Factors ``[B_0, A_1, B_1, A_2, ...]`` of the iterated parabolic extraction.

    Trailing trivial factors are dropped; interior ones are kept.
    """
    if x.strands < 3:
        raise BraidError("alternating decomposition needs n >= 3")
    state = _ReversedPositive(x)
    out: list[BraidWord] = []
    side = "B"
    while not state.is_identity():
        out.append(BraidWord(x.strands, tuple(_extract(state, side))))
        side = "A" if side == "B" else "B"
    return out


# ---------------------------------------------------------------------------
# brute-force oracle: positive words modulo the braid relations only

def _relation_neighbours(w: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    for k in range(len(w) - 1):
        a, b = w[k], w[k + 1]
        if abs(a - b) >= 2:
            yield w[:k] + (b, a) + w[k + 2:]
        if k + 2 < len(w) and abs(a - b) == 1 and w[k + 2] == a:
            yield w[:k] + (b, a, b) + w[k + 3:]


@functools.lru_cache(maxsize=None)
def positive_class(w: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """All positive words equal to ``w`` (closure under the braid relations)."""
    seen = {w}
    todo = deque([w])
    while todo:
        cur = todo.popleft()
        for nb in _relation_neighbours(cur):
            if nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return frozenset(seen)


def positive_class_key(w: Sequence[int]) -> tuple[int, ...]:
    return min(positive_class(tuple(w)))


MAX_ORACLE_LENGTH = 12


def brute_force_right_divisors(x: BraidWord, max_len: int = MAX_ORACLE_LENGTH) -> set[BraidWord]:
    """Every positive right divisor of the positive word ``x``.

    Uses only the braid relations: the divisors are the suffixes of the
    words equal to ``x``; each is returned as the least word of its class.
    """
    if any(e < 0 for e in x.letters):
        raise BraidError("brute-force divisors need a positive word")
    if len(x) > max_len:
        raise BraidError(f"word length {len(x)} exceeds cap {max_len}")
    out = set()
    for w in positive_class(x.letters):
        for k in range(len(w) + 1):
            out.add(positive_class_key(w[k:]))
    return {BraidWord(x.strands, d) for d in out}
