"""Braid words, strand permutations and the named constant braids.

A braid word on ``n`` strands is a tuple of nonzero integers: ``i`` stands for
the Artin generator sigma_i and ``-i`` for its inverse, with ``1 <= |i| <= n-1``.
Words are immutable; every operation returns a new word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class BraidError(ValueError):
    """Raised for malformed braid input or violated preconditions."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise BraidError(f"need at least 2 strands, got {self.strands}")
        letters = tuple(int(e) for e in self.letters)
        for e in letters:
            if e == 0 or abs(e) >= self.strands:
                raise BraidError(f"generator index {e} out of range for n={self.strands}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __pow__(self, k: int) -> BraidWord:
        return power(self, k)

    def __invert__(self) -> BraidWord:
        return invert(self)

    def __str__(self) -> str:
        return format_word(self)

    def is_empty(self) -> bool:
        return not self.letters

    def exponent_sum(self) -> int:
        return sum(1 if e > 0 else -1 for e in self.letters)

    def with_strands(self, n: int) -> BraidWord:
        """The same letters read in ``B_n`` (embedding or restriction)."""
        return BraidWord(n, self.letters)


def word(n: int, letters: Iterable[int] = ()) -> BraidWord:
    return BraidWord(n, tuple(letters))


def identity(n: int) -> BraidWord:
    return BraidWord(n, ())


_TOKEN = re.compile(r"[\s,]+")


def parse_word(text: str, n: int) -> BraidWord:
    """Parse whitespace/comma separated signed generator indices.

    Letter notation is accepted too: ``a`` is sigma_1, ``b`` sigma_2, ...,
    and upper case denotes the inverse (``aBa`` or ``a B a``).
    """
    if n < 2:
        raise BraidError(f"need at least 2 strands, got {n}")
    letters: list[int] = []
    for tok in _TOKEN.split(text.strip()):
        if not tok:
            continue
        if re.fullmatch(r"[+-]?\d+", tok):
            e = int(tok)
            if e == 0:
                raise BraidError("0 is not a generator")
            letters.append(e)
        elif tok.isalpha():
            for ch in tok:
                idx = ord(ch.lower()) - ord("a") + 1
                letters.append(idx if ch.islower() else -idx)
        else:
            raise BraidError(f"malformed token {tok!r}")
    return BraidWord(n, tuple(letters))


def format_word(u: BraidWord) -> str:
    return " ".join(str(e) for e in u.letters)


def _check_same(u: BraidWord, v: BraidWord) -> None:
    if u.strands != v.strands:
        raise BraidError(f"strand count mismatch: {u.strands} vs {v.strands}")


def concat(*words: BraidWord) -> BraidWord:
    if not words:
        raise BraidError("concat needs at least one word")
    first = words[0]
    out: list[int] = []
    for w in words:
        _check_same(first, w)
        out.extend(w.letters)
    return BraidWord(first.strands, tuple(out))


def invert(u: BraidWord) -> BraidWord:
    return BraidWord(u.strands, tuple(-e for e in reversed(u.letters)))


def power(u: BraidWord, k: int) -> BraidWord:
    base = u if k >= 0 else invert(u)
    return BraidWord(u.strands, base.letters * abs(k))


def free_reduce(u: BraidWord) -> BraidWord:
    stack: list[int] = []
    for e in u.letters:
        if stack and stack[-1] == -e:
            stack.pop()
        else:
            stack.append(e)
    return BraidWord(u.strands, tuple(stack))


def flip(u: BraidWord) -> BraidWord:
    """Conjugation by the half twist: sigma_i -> sigma_{n-i}."""
    n = u.strands
    return BraidWord(n, tuple((n - abs(e)) * (1 if e > 0 else -1) for e in u.letters))


def conjugate(u: BraidWord, c: BraidWord) -> BraidWord:
    """The word ``c u c^-1``."""
    return concat(c, u, invert(c))


def commutes_syntactically(u: BraidWord, i: int) -> bool:
    return all(abs(abs(e) - i) >= 2 for e in u.letters)


# ---------------------------------------------------------------------------
# permutations

@dataclass(frozen=True)
class StrandPermutation:
    """``images[p]`` is the (1-based) bottom position of the strand starting at ``p+1``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise BraidError(f"not a permutation: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def then(self, other: StrandPermutation) -> StrandPermutation:
        """Permutation of the braid product ``self * other``."""
        return StrandPermutation(tuple(other.images[v - 1] for v in self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = []
            p = start
            while p not in seen:
                seen.add(p)
                cyc.append(p)
                p = self.images[p - 1]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles()))

    def is_full_cycle(self) -> bool:
        return len(self.cycles()) == 1


def underlying_permutation(u: BraidWord) -> StrandPermutation:
    where = list(range(u.strands))  # where[slot] = strand currently in that slot
    for e in u.letters:
        i = abs(e) - 1
        where[i], where[i + 1] = where[i + 1], where[i]
    pos = [0] * u.strands
    for slot, strand in enumerate(where):
        pos[strand] = slot + 1
    return StrandPermutation(tuple(pos))


def closure_components(u: BraidWord) -> int:
    return len(underlying_permutation(u).cycles())


def is_pure(u: BraidWord) -> bool:
    return underlying_permutation(u).is_identity()


# ---------------------------------------------------------------------------
# named braids

def _staircase(starts: int, stops: Sequence[int], n: int) -> BraidWord:
    letters: list[int] = []
    for top in stops:
        letters.extend(range(starts, top + 1))
    return BraidWord(n, tuple(letters))


def half_twist(n: int, lo: int = 1, hi: int | None = None) -> BraidWord:
    """The positive half twist on the strands ``lo..hi+1`` of ``B_n``.

    With the defaults this is ``(s1 s2 .. s_{n-1})(s1 .. s_{n-2}) .. (s1 s2)(s1)``.
    """
    if n < 2:
        raise BraidError(f"need at least 2 strands, got {n}")
    hi = n - 1 if hi is None else hi
    return _staircase(lo, range(hi, lo - 1, -1), n)


def delta_power(n: int, k: int) -> BraidWord:
    return power(half_twist(n), k)


CONSTANTS = ("Delta_B", "Delta_A", "A'", "B'")

_ALIASES = {
    "delta_b": "Delta_B", "Δ_b": "Delta_B", "db": "Delta_B",
    "delta_a": "Delta_A", "Δ_a": "Delta_A", "da": "Delta_A",
    "a'": "A'", "aprime": "A'", "a_prime": "A'",
    "b'": "B'", "bprime": "B'", "b_prime": "B'",
}


def named_constant(which: str, n: int) -> BraidWord:
    """Delta_B, Delta_A, A' or B' on ``n >= 3`` strands.

    Delta_A is stored as the half twist of the parabolic on sigma_1..sigma_{n-2};
    it agrees with ``Delta Delta_B Delta^-1`` (checked in the test suite).
    """
    if n < 3:
        raise BraidError(f"named constants need n >= 3, got {n}")
    key = _ALIASES.get(which.lower(), which)
    if key == "Delta_B":
        return half_twist(n, lo=2, hi=n - 1)
    if key == "Delta_A":
        return half_twist(n, lo=1, hi=n - 2)
    if key == "A'":
        return BraidWord(n, tuple(range(n - 2, 1, -1)) + (1, 1))
    if key == "B'":
        return BraidWord(n, tuple(range(2, n - 1)) + (n - 1, n - 1))
    raise BraidError(f"unknown constant {which!r}; expected one of {CONSTANTS}")


def rotation(n: int) -> BraidWord:
    """sigma_1 sigma_2 ... sigma_{n-1}."""
    return BraidWord(n, tuple(range(1, n)))
