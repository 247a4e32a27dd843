"""Alternating decomposition of positive braids and what it says about the order.

A positive braid ``x`` on ``n >= 3`` strands factors as ``B_m A_m ... B_1 A_1 B_0``
where ``B_0`` is the largest right divisor of ``x`` in the monoid on
sigma_2..sigma_{n-1}, ``A_1`` the largest right divisor of ``x B_0^-1`` in the
monoid on sigma_1..sigma_{n-2}, and so on until nothing is left.

Length convention: with ``p`` stored factors (the leading one nontrivial),
``m = p // 2``, except that a nontrivial ``x`` lying in the B-monoid
(``p == 1``) gets ``m = 1`` with ``A_1 = B_1 = 1``.  This is the only count
for which ``Delta^(2m-4) <_D x <_D Delta^(2m)`` holds for every nontrivial
positive ``x``; the identity keeps ``m = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import garside
from .dehornoy import Verdict, compare
from .words import BraidError, BraidWord, concat, delta_power, half_twist, identity, invert, named_constant


@dataclass(frozen=True)
class AltDecomposition:
    strands: int
    factors: tuple[BraidWord, ...]  # right to left: B_0, A_1, B_1, A_2, ...

    @property
    def length(self) -> int:
        p = len(self.factors)
        if p == 0:
            return 0
        return max(1, p // 2)

    def B(self, i: int) -> BraidWord:
        k = 2 * i
        return self.factors[k] if k < len(self.factors) else identity(self.strands)

    def A(self, i: int) -> BraidWord:
        if i < 1:
            raise IndexError("A-factors are indexed from 1")
        k = 2 * i - 1
        return self.factors[k] if k < len(self.factors) else identity(self.strands)

    def top(self) -> BraidWord:
        """The leading B-factor ``B_m`` (trivial when the decomposition leads with an A-factor)."""
        return self.B(self.length)

    def reading_order(self) -> list[tuple[str, int, BraidWord]]:
        """Factors left to right as ``(side, index, word)``."""
        out = []
        for k in range(len(self.factors) - 1, -1, -1):
            side = "B" if k % 2 == 0 else "A"
            out.append((side, (k + 1) // 2, self.factors[k]))
        return out

    def product(self) -> BraidWord:
        if not self.factors:
            return identity(self.strands)
        return concat(*(w for _, _, w in self.reading_order()))

    def to_record(self) -> dict:
        return {
            "strands": self.strands,
            "m": self.length,
            "factors": [{"side": s, "index": i, "word": str(w)} for s, i, w in self.reading_order()],
        }

    def __str__(self) -> str:
        parts = [f"{s}{i}=({w})" for s, i, w in self.reading_order()]
        return " ".join(parts) if parts else "(empty)"


def _as_positive(x: BraidWord) -> BraidWord:
    cf = garside.canonical_form(x)
    if cf.infimum < 0:
        raise BraidError("alternating decomposition needs a positive braid")
    if any(e < 0 for e in x.letters):
        return cf.to_word()
    return x


def alt_decompose(x: BraidWord) -> AltDecomposition:
    if x.strands < 3:
        raise BraidError("alternating decomposition needs n >= 3")
    x = _as_positive(x)
    return AltDecomposition(x.strands, tuple(garside.alternating_factors(x)))


def alt_length(x: BraidWord) -> int:
    return alt_decompose(x).length


@dataclass(frozen=True)
class FastComparison:
    verdict: str  # "Less", "Greater" or "Unknown"
    rule: str | None  # "length-gap", "top-factor" or None
    lengths: tuple[int, int]


def fast_compare(x: BraidWord, y: BraidWord) -> FastComparison:
    """Sound but incomplete order test from alternating lengths and top B-factors.

    A length gap of two or more decides via the central-power sandwich; equal
    lengths decide when one top B-factor strictly right-divides the other.
    Everything else is "Unknown".
    """
    dx, dy = alt_decompose(x), alt_decompose(y)
    lx, ly = dx.length, dy.length
    if lx + 2 <= ly:
        return FastComparison("Less", "length-gap", (lx, ly))
    if ly + 2 <= lx:
        return FastComparison("Greater", "length-gap", (lx, ly))
    if lx == ly and lx > 0:
        bx, by = dx.top(), dy.top()
        if not garside.equals(bx, by):
            if garside.right_divides(bx, by):
                return FastComparison("Less", "top-factor", (lx, ly))
            if garside.right_divides(by, bx):
                return FastComparison("Greater", "top-factor", (lx, ly))
    return FastComparison("Unknown", None, (lx, ly))


def sandwich_holds(x: BraidWord) -> bool:
    """Check ``Delta^(2l-4) <_D x <_D Delta^(2l)`` with ``l`` the alternating length."""
    n = x.strands
    m = alt_length(x)
    lower = compare(delta_power(n, 2 * m - 4), x).verdict is Verdict.LESS
    upper = compare(x, delta_power(n, 2 * m)).verdict is Verdict.LESS
    return lower and upper


def golden_delta_factors(n: int, N: int) -> list[BraidWord]:
    """Expected factors of ``Delta^(2N)``, right to left: Delta_B^(2N), s_{n-2}..s_1, B', A', ..., B', s_1."""
    if N < 1:
        raise BraidError("golden factorization is stated for N >= 1")
    a_prime = named_constant("A'", n)
    b_prime = named_constant("B'", n)
    out = [named_constant("Delta_B", n) ** (2 * N), BraidWord(n, tuple(range(n - 2, 0, -1)))]
    for k in range(N):
        out.append(b_prime)
        if k < N - 1:
            out.append(a_prime)
    out.append(BraidWord(n, (1,)))
    return out


def has_drop_shape(dec: AltDecomposition) -> bool:
    """Whether the factors read ``(s1) B'A'...B'A' B' (s_{n-2}..s_1) B_0`` with ``B_0 <_D Delta_B^(2l-2)``."""
    n, m = dec.strands, dec.length
    if m < 2 or len(dec.factors) != 2 * m:
        return False
    if not garside.equals(dec.A(m), BraidWord(n, (1,))):
        return False
    if not garside.equals(dec.A(1), BraidWord(n, tuple(range(n - 2, 0, -1)))):
        return False
    b_prime = named_constant("B'", n)
    a_prime = named_constant("A'", n)
    for i in range(1, m):
        if not garside.equals(dec.B(i), b_prime):
            return False
    for i in range(2, m):
        if not garside.equals(dec.A(i), a_prime):
            return False
    db = named_constant("Delta_B", n)
    return compare(dec.B(0), db ** (2 * m - 2)).verdict is Verdict.LESS


def parabolic_drop(x: BraidWord) -> BraidWord:
    """``Delta (x^-1 Delta^(2l-2)) Delta^-1`` rewritten over sigma_1..sigma_{n-2}.

    Requires ``x <_D Delta^(2l-2)``; raises BraidError otherwise.
    """
    n = x.strands
    m = alt_length(x)
    bound = delta_power(n, 2 * m - 2)
    if compare(x, bound).verdict is not Verdict.LESS:
        raise BraidError(f"precondition fails: x is not below Delta^{2 * m - 2}")
    d = half_twist(n)
    raw = concat(d, invert(x), bound, invert(d))
    rep = garside.parabolic_representative(raw, "A")
    if rep is None:
        raise AssertionError("dropped braid does not lie in the A-parabolic")
    return rep
