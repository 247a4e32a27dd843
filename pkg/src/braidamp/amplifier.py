"""Large elements of a normal closure, with membership and order receipts.

Starting from one nontrivial braid ``gamma``, everything here builds elements
of the normal closure of ``gamma`` that exceed a prescribed central power
``Delta^(2N)`` in the Dehornoy order.  Membership is carried by a
:class:`ConjugateProduct` over ``gamma``; every order claim is re-decided by
handle reduction before it is returned, and a failed claim raises
:class:`ReceiptError` instead of degrading silently.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from . import garside
from .alternating import alt_decompose, alt_length
from .dehornoy import OrderCertificate, Verdict, compare, dehornoy_floor, genus_certificate
from .words import (
    BraidError,
    BraidWord,
    concat,
    delta_power,
    flip,
    free_reduce,
    half_twist,
    identity,
    invert,
    named_constant,
    power,
    rotation,
    underlying_permutation,
)

log = logging.getLogger(__name__)

DEFAULT_ITERATION_CAP = 64


class ReceiptError(AssertionError):
    """An inequality that must hold failed its direct check."""


# ---------------------------------------------------------------------------
# membership certificates

@dataclass(frozen=True)
class ConjugateProduct:
    """The product of ``c base^e c^-1`` over ``terms = ((c, e), ...)``."""

    base: BraidWord
    terms: tuple[tuple[BraidWord, int], ...] = ()

    @classmethod
    def of_base(cls, base: BraidWord, exponent: int = 1) -> ConjugateProduct:
        return cls(base, ((identity(base.strands), exponent),))

    def evaluate(self) -> BraidWord:
        n = self.base.strands
        parts = [identity(n)]
        for c, e in self.terms:
            parts.append(concat(c, power(self.base, e), invert(c)))
        return concat(*parts)

    def conjugated(self, c: BraidWord) -> ConjugateProduct:
        """Certificate for ``c * self * c^-1``."""
        return ConjugateProduct(self.base, tuple((free_reduce(concat(c, d)), e) for d, e in self.terms))

    def inverse(self) -> ConjugateProduct:
        return ConjugateProduct(self.base, tuple((c, -e) for c, e in reversed(self.terms)))

    def __mul__(self, other: ConjugateProduct) -> ConjugateProduct:
        if self.base != other.base:
            raise BraidError("certificates over different bases")
        return ConjugateProduct(self.base, self.terms + other.terms)

    def __pow__(self, k: int) -> ConjugateProduct:
        src = self if k >= 0 else self.inverse()
        return ConjugateProduct(self.base, src.terms * abs(k))

    def expand(self, inner: ConjugateProduct) -> ConjugateProduct:
        """Substitute ``inner`` (a certificate for this base) to get one over ``inner.base``."""
        out: list[tuple[BraidWord, int]] = []
        for c, e in self.terms:
            out.extend(((inner ** e).conjugated(c)).terms)
        return ConjugateProduct(inner.base, tuple(out))

    def with_strands(self, n: int) -> ConjugateProduct:
        return ConjugateProduct(self.base.with_strands(n), tuple((c.with_strands(n), e) for c, e in self.terms))

    def to_record(self) -> dict:
        return {
            "base": str(self.base),
            "terms": [{"conjugator": str(c), "exponent": e} for c, e in self.terms],
        }


@dataclass
class AmplifyResult:
    element: BraidWord
    certificate: ConjugateProduct
    target: int
    order_receipt: OrderCertificate
    branch_trace: list[dict] = field(default_factory=list)

    def to_record(self) -> dict:
        return {
            "element": str(self.element),
            "target": self.target,
            "certificate": self.certificate.to_record(),
            "order_receipt": self.order_receipt.to_record(),
            "branch_trace": self.branch_trace,
        }


def _require_less(u: BraidWord, v: BraidWord, what: str) -> OrderCertificate:
    rec = compare(u, v)
    if rec.verdict is not Verdict.LESS:
        raise ReceiptError(f"{what}: expected Less, got {rec.verdict}")
    return rec


def _short(w: BraidWord) -> BraidWord:
    """The shorter of ``w`` (freely reduced) and its negative-positive normal form."""
    w = free_reduce(w)
    a, b = garside.np_form(w)
    alt = concat(invert(a), b)
    return alt if len(alt) < len(w) else w


def _finish(element: BraidWord, cert: ConjugateProduct, target: int, trace: list[dict]) -> AmplifyResult:
    n = element.strands
    receipt = _require_less(delta_power(n, 2 * target), element, f"Delta^{2 * target} < element")
    return AmplifyResult(element, cert, target, receipt, trace)


# ---------------------------------------------------------------------------
# proof steps

def normalize_generator(gamma: BraidWord) -> BraidWord:
    """``gamma`` or ``gamma^-1``, whichever lies below 1."""
    rec = compare(identity(gamma.strands), gamma)
    if rec.verdict is Verdict.EQUAL:
        raise BraidError("generator is trivial")
    return invert(gamma) if rec.verdict is Verdict.LESS else gamma


@dataclass
class Alignment:
    gamma0: BraidWord
    certificate: ConjugateProduct  # over the aligned generator
    m: int
    N: int
    conjugator: BraidWord  # B_m
    trace: dict


def conjugate_align(gamma: BraidWord) -> Alignment:
    """Conjugate ``gamma <_D 1`` by its top B-factor so the shifted braid leads with an A-factor."""
    n = gamma.strands
    if compare(gamma, identity(n)).verdict is not Verdict.LESS:
        raise BraidError("conjugate_align needs gamma <_D 1")
    N = garside.min_central_power_to_positive(gamma)
    dec = alt_decompose(concat(delta_power(n, 2 * N), gamma))
    top = dec.top()
    gamma0 = _short(concat(invert(top), gamma, top))
    cert = ConjugateProduct.of_base(gamma).conjugated(invert(top))
    m = alt_length(concat(delta_power(n, 2 * N), gamma0))
    trace = {"N": N, "m_before": dec.length, "m": m, "top_B": str(top)}
    if compare(gamma, gamma0).verdict is Verdict.LESS:
        raise ReceiptError("gamma0 <=_D gamma failed")
    if m - N > 1:
        raise ReceiptError(f"m - N = {m - N} > 1")
    trace["checked"] = ["gamma0 <=_D gamma <_D 1", "m - N <= 1"]
    return Alignment(gamma0, cert, m, N, top, trace)


def _base_rank_two(gamma: BraidWord, target: int) -> AmplifyResult:
    """In ``B_2`` the order is the order on exponents: take a large power of ``gamma^(+-1)``."""
    k = gamma.exponent_sum()
    if k == 0:
        raise BraidError("generator is trivial")
    reps = max(2 * target, 0) // abs(k) + 1
    sign = 1 if k > 0 else -1
    element = BraidWord(gamma.strands, (1,) * (abs(k) * reps))
    cert = ConjugateProduct.of_base(gamma, sign) ** reps
    trace = [{"strands": 2, "branch": "base", "power": sign * reps}]
    return _finish(element, cert, target, trace)


def lemma_ind_pump(beta: BraidWord, N: int) -> BraidWord:
    """``beta (Delta beta Delta^-1 beta)^N`` for ``beta`` in the A-parabolic above ``Delta_A^4``."""
    n = beta.strands
    if N < 1:
        raise BraidError("pump exponent must be positive")
    if not garside.lives_in_parabolic(beta, "A"):
        raise BraidError("beta does not lie in the A-parabolic")
    if compare(power(named_constant("Delta_A", n), 4), beta).verdict is not Verdict.LESS:
        raise BraidError("beta is not above Delta_A^4")
    out = concat(beta, power(concat(flip(beta), beta), N))
    _require_less(delta_power(n, 2 * N), out, f"pump: Delta^{2 * N} < result")
    return out


def case_b_iterate(al: Alignment, cert: ConjugateProduct, target: int,
                   cap: int = DEFAULT_ITERATION_CAP) -> AmplifyResult:
    """Branch ``m - N <= 0``: invert ``[g0 Phi(g0)]^i g0`` for growing ``i``.

    ``cert`` must evaluate to ``al.gamma0``.
    """
    n = al.gamma0.strands
    g0 = al.gamma0
    phi_g0 = flip(g0)
    g_plus = concat(delta_power(n, 2 * al.N), g0)
    pair = concat(g0, phi_g0)
    pair_cert = cert * cert.conjugated(invert(half_twist(n)))
    level = {"strands": n, "branch": "B", "m": al.m, "N": al.N, "align": al.trace, "attempts": []}
    i = max(target, 0)
    while i <= max(target, 0) + cap:
        small = concat(power(pair, i), g0)
        attempt: dict = {"i": i}
        if al.m >= 1:
            gi = concat(power(concat(g_plus, flip(g_plus)), i), g_plus)
            li = alt_length(gi)
            attempt["alt_length"] = li
            attempt["bound"] = (2 * i + 1) * al.m - i
            if li > attempt["bound"]:
                raise ReceiptError(f"alternating length {li} exceeds (2i+1)m - i = {attempt['bound']}")
        _require_less(small, delta_power(n, -2 * i), f"iterate {i} below Delta^{-2 * i}")
        element = _short(invert(small))
        level["attempts"].append(attempt)
        if compare(delta_power(n, 2 * target), element).verdict is Verdict.LESS:
            level["i"] = i
            elem_cert = (pair_cert ** i * cert).inverse()
            return _finish(element, elem_cert, target, [level])
        log.debug("case B: i=%d below target %d, escalating", i, target)
        i += 1
    raise ReceiptError(f"case B: no i up to {max(target, 0) + cap} reached the target")


def case_a_descend(al: Alignment, cert: ConjugateProduct, target: int,
                   cap: int = DEFAULT_ITERATION_CAP) -> AmplifyResult:
    """Branch ``m - N = 1``: shift into the A-parabolic, recurse, then pump."""
    n = al.gamma0.strands
    d = half_twist(n)
    shifted = flip(al.gamma0)  # Delta^-1 g0 Delta
    rep = garside.parabolic_representative(shifted, "A")
    if rep is None:
        raise ReceiptError("Delta^-1 gamma0 Delta does not lie in the A-parabolic")
    shifted_cert = cert.conjugated(invert(d))
    level: dict = {"strands": n, "branch": "A", "m": al.m, "N": al.N, "align": al.trace,
                   "parabolic_generator": str(rep)}
    inner = amplify(rep.with_strands(n - 1), 2, cap=cap)
    gamma1 = inner.element.with_strands(n)
    gamma1_cert = inner.certificate.with_strands(n).expand(shifted_cert)
    _require_less(power(named_constant("Delta_A", n), 4), gamma1, "Delta_A^4 < gamma1")
    level["checked"] = ["Delta^-1 gamma0 Delta in A-parabolic", "Delta_A^4 <_D gamma1"]
    level["recursion"] = inner.branch_trace
    steps = max(target, 1)
    element = lemma_ind_pump(gamma1, steps)
    pumped_cert = gamma1_cert * (gamma1_cert.conjugated(d) * gamma1_cert) ** steps
    level["pump"] = steps
    return _finish(element, pumped_cert, target, [level])


def amplify(gamma: BraidWord, target: int, cap: int = DEFAULT_ITERATION_CAP) -> AmplifyResult:
    """An element of the normal closure of ``gamma`` strictly above ``Delta^(2 target)``."""
    n = gamma.strands
    if garside.is_identity(gamma):
        raise BraidError("generator is trivial")
    if n == 2:
        return _base_rank_two(gamma, target)
    g = normalize_generator(gamma)
    flipped = g.letters != gamma.letters
    base_cert = ConjugateProduct.of_base(gamma, -1 if flipped else 1)
    al = conjugate_align(g)
    cert0 = al.certificate.expand(base_cert)
    if al.m - al.N <= 0:
        res = case_b_iterate(al, cert0, target, cap)
    else:
        res = case_a_descend(al, cert0, target, cap)
    res.branch_trace[0]["inverted_generator"] = flipped
    return res


def purify(result: AmplifyResult, target: int | None = None, cap: int = DEFAULT_ITERATION_CAP) -> AmplifyResult:
    """Raise the element to the order of its permutation, keeping ``Delta^(2 target) <_D`` it."""
    target = result.target if target is None else target
    current = result
    for bump in range(cap + 1):
        k = underlying_permutation(current.element).order()
        elem = power(current.element, k)
        rec = compare(delta_power(elem.strands, 2 * target), elem)
        if rec.verdict is Verdict.LESS:
            if k == 1 and current.target == target:
                return current
            trace = current.branch_trace + [{"purify_power": k}]
            return AmplifyResult(elem, current.certificate ** k, target, rec, trace)
        log.debug("purify: power %d fell short, re-amplifying", k)
        current = amplify(result.certificate.base, target + bump + 1, cap)
    raise ReceiptError("purify: no pure element above the target")


@dataclass(frozen=True)
class CommutatorCandidate:
    word: BraidWord
    certificate: ConjugateProduct
    trivial: bool
    note: str = "pseudo-Anosov property not verified"


def is_central(beta: BraidWord) -> bool:
    n = beta.strands
    return all(
        garside.equals(concat(BraidWord(n, (i,)), beta), concat(beta, BraidWord(n, (i,))))
        for i in range(1, n)
    )


def commutator_candidate(beta: BraidWord, theta: BraidWord | None = None, N: int = 1) -> CommutatorCandidate:
    """The word ``theta^N beta theta^-N beta^-1`` with its certificate over ``beta``."""
    if is_central(beta):
        raise BraidError("beta is central")
    theta = rotation(beta.strands) if theta is None else theta
    tN = power(theta, N)
    w = concat(tN, beta, invert(tN), invert(beta))
    cert = ConjugateProduct(beta, ((tN, 1), (identity(beta.strands), -1)))
    return CommutatorCandidate(w, cert, garside.is_identity(w))


# ---------------------------------------------------------------------------
# end to end

NOT_CERTIFIED = ("hyperbolicity", "pseudo_anosov")


@dataclass
class PipelineResult:
    knot_braid: BraidWord
    beta: BraidWord
    genus_bound: int
    membership: ConjugateProduct
    receipts: dict[str, OrderCertificate]
    branch_trace: list[dict]
    target: int
    braid_index: str
    not_certified: tuple[str, ...]

    def to_record(self) -> dict:
        return {
            "knot_braid": str(self.knot_braid),
            "beta": str(self.beta),
            "genus_bound": self.genus_bound,
            "target": self.target,
            "membership": self.membership.to_record(),
            "receipts": {k: v.to_record() for k, v in self.receipts.items()},
            "branch_trace": self.branch_trace,
            "braid_index": self.braid_index,
            "not_certified": list(self.not_certified),
        }


def main_pipeline(alpha: BraidWord, gamma: BraidWord, N: int, r_n: int | None = None,
                  cap: int = DEFAULT_ITERATION_CAP) -> PipelineResult:
    """Find pure ``beta`` in the normal closure of ``gamma`` with ``beta >_D alpha^-1 Delta^(2N)``.

    The closure of ``alpha beta`` is then a knot with genus at least ``N``.
    ``r_n`` is an optional externally supplied braid-index threshold; it is
    only compared against, never computed.
    """
    n = alpha.strands
    if not underlying_permutation(alpha).is_full_cycle():
        comps = len(underlying_permutation(alpha).cycles())
        raise BraidError(f"closure of alpha is not a knot ({comps} components)")
    if garside.is_identity(gamma):
        raise BraidError("gamma is trivial")
    threshold = concat(invert(alpha), delta_power(n, 2 * N))
    M = dehornoy_floor(threshold) + 1
    res = purify(amplify(gamma, M, cap), M, cap)
    beta = res.element
    receipts = {"beta_above_Delta_2M": res.order_receipt}
    receipts["beta_above_alpha_inv_Delta_2N"] = _require_less(threshold, beta, "beta >_D alpha^-1 Delta^2N")
    knot = concat(alpha, beta)
    if not underlying_permutation(knot).is_full_cycle():
        raise ReceiptError("alpha beta does not close to a knot")
    gc = genus_certificate(knot)
    if gc.bound is None or gc.bound < N:
        raise ReceiptError(f"genus certificate {gc.bound} below requested {N}")
    receipts["genus"] = gc.receipt
    braid_index = "not certified"
    not_cert = NOT_CERTIFIED + ("braid_index",)
    if r_n is not None:
        rec = compare(delta_power(n, 2 * r_n), knot)
        if rec.verdict is Verdict.LESS:
            receipts["above_Delta_2r"] = rec
            braid_index = f"{n} (given r(n) = {r_n})"
            not_cert = NOT_CERTIFIED
    return PipelineResult(knot, beta, gc.bound, res.certificate, receipts, res.branch_trace, M,
                          braid_index, not_cert)
