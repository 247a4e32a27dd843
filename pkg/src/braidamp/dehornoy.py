"""The Dehornoy ordering: handle reduction, comparisons, floors and genus bounds.

Convention: a braid is larger than 1 when it has a word in which the
generator of smallest index occurs with positive exponents only.  Positive
braids exceed 1 and ``Delta^(2N)`` increases with ``N``.
"""

from __future__ import annotations

import contextlib
import contextvars
import enum
from dataclasses import dataclass, field

from . import garside
from .words import BraidError, BraidWord, _check_same, concat, delta_power, free_reduce, invert, underlying_permutation

DEFAULT_MAX_STEPS = 10**7

_max_steps: contextvars.ContextVar[int] = contextvars.ContextVar("max_steps", default=DEFAULT_MAX_STEPS)


class ReductionLimitError(RuntimeError):
    """Handle reduction exceeded its step budget."""


class NotAKnotError(BraidError):
    """The braid closure has more than one component."""


@contextlib.contextmanager
def step_limit(steps: int):
    """Bound handle-reduction iterations inside the ``with`` block (task-local)."""
    token = _max_steps.set(steps)
    try:
        yield
    finally:
        _max_steps.reset(token)


def _reduce_handle(w: list[int], p: int, q: int) -> tuple[list[int], int]:
    """Reduce the handle ``w[p..q]``; returns the new word and the first changed position."""
    x = w[p]
    i = abs(x)
    e = 1 if x > 0 else -1
    left = w[:p]
    low = p
    for y in w[p + 1:q]:
        if abs(y) == i + 1:
            d = 1 if y > 0 else -1
            seg = (-e * (i + 1), d * i, e * (i + 1))
        else:
            seg = (y,)
        for z in seg:
            if left and left[-1] == -z:
                left.pop()
                low = min(low, len(left))
            else:
                left.append(z)
    k = q + 1
    while left and k < len(w) and left[-1] == -w[k]:
        left.pop()
        k += 1
    low = min(low, len(left))
    left.extend(w[k:])
    return left, low


def handle_reduce(u: BraidWord, max_steps: int | None = None) -> BraidWord:
    """An equivalent word that is empty, sigma-positive or sigma-negative.

    Always reduces the handle that closes first, which is automatically a
    permitted handle.  The scan state is checkpointed per position so that
    after a reduction the scan resumes where the word changed.
    """
    limit = _max_steps.get() if max_steps is None else max_steps
    w = list(u.letters)
    n = u.strands
    # states[q] = last position of each generator index within w[:q]
    states: list[list[int]] = [[-1] * (n + 1)]
    q = 0
    steps = 0
    while q < len(w):
        last = states[q]
        x = w[q]
        i = abs(x)
        p = last[i]
        if p >= 0 and w[p] == -x and p > last[i - 1]:
            steps += 1
            if steps > limit:
                raise ReductionLimitError(f"handle reduction exceeded {limit} steps on a word of length {len(u)}")
            w, q = _reduce_handle(w, p, q)
            del states[q + 1:]
            continue
        nxt = last.copy()
        nxt[i] = q
        states.append(nxt)
        q += 1
    return BraidWord(n, tuple(w))


@dataclass(frozen=True)
class SigmaSign:
    """Sign of a reduced word: +1, -1 or 0, with the main generator index (0 if trivial)."""

    sign: int
    index: int = 0

    def __str__(self) -> str:
        if self.sign == 0:
            return "trivial"
        return f"{'positive' if self.sign > 0 else 'negative'}({self.index})"


def word_sign(w: BraidWord) -> SigmaSign | None:
    """Sign pattern of ``w`` as written, or None if its main generator has both signs."""
    if not w.letters:
        return SigmaSign(0)
    i = min(abs(e) for e in w.letters)
    signs = {e > 0 for e in w.letters if abs(e) == i}
    if len(signs) != 1:
        return None
    return SigmaSign(1 if signs.pop() else -1, i)


def _sign_and_witness(w: BraidWord) -> tuple[SigmaSign, BraidWord]:
    a, b = garside.np_form(w)
    if not a.letters and not b.letters:
        return SigmaSign(0), BraidWord(w.strands, ())
    if not a.letters:
        return word_sign(b), b
    if not b.letters:
        neg = invert(a)
        return word_sign(neg), neg
    literal = free_reduce(w)
    fraction = concat(invert(a), b)
    red = handle_reduce(fraction if len(fraction) <= len(literal) else literal)
    s = word_sign(red)
    if s is None or s.sign == 0:
        raise BraidError("internal: handle reduction ended on an undecided word")
    return s, red


def sigma_sign(u: BraidWord) -> SigmaSign:
    return _sign_and_witness(u)[0]


class Verdict(str, enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class OrderCertificate:
    """Outcome of comparing ``left`` with ``right``; ``witness`` is a word for ``left^-1 right``."""

    verdict: Verdict
    witness: BraidWord
    left: BraidWord = field(repr=False)
    right: BraidWord = field(repr=False)

    def check(self) -> bool:
        """Recheck the receipt: witness equals ``left^-1 right`` and has the claimed sign."""
        if not garside.equals(self.witness, concat(invert(self.left), self.right)):
            return False
        s = word_sign(self.witness)
        if s is None:
            return False
        expected = {Verdict.LESS: 1, Verdict.EQUAL: 0, Verdict.GREATER: -1}[self.verdict]
        if expected == 0:
            return not self.witness.letters
        return s.sign == expected

    def to_record(self) -> dict:
        return {"verdict": self.verdict.value, "witness": str(self.witness)}


def compare(u: BraidWord, v: BraidWord) -> OrderCertificate:
    """Decide ``u <_D v`` / ``u = v`` / ``u >_D v`` with a checkable witness."""
    _check_same(u, v)
    s, witness = _sign_and_witness(concat(invert(u), v))
    verdict = {1: Verdict.LESS, 0: Verdict.EQUAL, -1: Verdict.GREATER}[s.sign]
    return OrderCertificate(verdict, witness, u, v)


def less(u: BraidWord, v: BraidWord) -> bool:
    return compare(u, v).verdict is Verdict.LESS


def less_equal(u: BraidWord, v: BraidWord) -> bool:
    return compare(u, v).verdict is not Verdict.GREATER


def dehornoy_floor(u: BraidWord) -> int:
    """The integer ``m`` with ``Delta^(2m) <=_D u <_D Delta^(2m+2)``."""
    cf = garside.canonical_form(u)
    n = u.strands
    lo = cf.infimum // 2
    hi = cf.supremum // 2
    # invariant: Delta^(2 lo) <= u, and the answer is at most hi
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if less_equal(delta_power(n, 2 * mid), u):
            lo = mid
        else:
            hi = mid - 1
    return lo


@dataclass(frozen=True)
class GenusCertificate:
    floor: int
    bound: int | None
    receipt: OrderCertificate | None

    def to_record(self) -> dict:
        return {
            "floor": self.floor,
            "genus_bound": self.bound,
            "receipt": None if self.receipt is None else self.receipt.to_record(),
        }

    def __str__(self) -> str:
        return "no certificate" if self.bound is None else f"genus >= {self.bound}"


def genus_certificate(u: BraidWord) -> GenusCertificate:
    """Largest ``N`` with ``Delta^(2N) <_D u``, reported as a genus bound when ``N >= 1``.

    Raises NotAKnotError unless the closure of ``u`` is a knot.
    """
    perm = underlying_permutation(u)
    if not perm.is_full_cycle():
        raise NotAKnotError(f"closure is not a knot: permutation has {len(perm.cycles())} cycles")
    m = dehornoy_floor(u)
    rec = compare(delta_power(u.strands, 2 * m), u)
    bound = m if rec.verdict is Verdict.LESS else m - 1
    if bound != m:
        rec = compare(delta_power(u.strands, 2 * bound), u)
    if bound < 1:
        return GenusCertificate(m, None, None)
    return GenusCertificate(m, bound, rec)
