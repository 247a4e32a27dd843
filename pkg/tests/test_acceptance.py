"""Acceptance criteria, one test each.  A pass/fail line per criterion is
printed in the terminal summary.  Oracles here avoid the code under test
where possible: positive-word relation classes for divisors, breadth-first
search over sigma-positive words for the order."""

import itertools
import random
import time

from braidamp.alternating import (
    alt_decompose,
    alt_length,
    fast_compare,
    golden_delta_factors,
    parabolic_drop,
    sandwich_holds,
)
from braidamp.amplifier import amplify, conjugate_align, lemma_ind_pump, main_pipeline, normalize_generator
from braidamp.dehornoy import Verdict, compare, genus_certificate, sigma_sign
from braidamp.garside import (
    brute_force_right_divisors,
    canonical_form,
    equals,
    is_positive,
    lives_in_parabolic,
    parabolic_max_right_divisor,
    positive_class_key,
    side_generators,
)
from braidamp.words import (
    concat,
    delta_power,
    flip,
    half_twist,
    invert,
    named_constant,
    underlying_permutation,
    word,
)

LESS = Verdict.LESS


def test_golden_decompositions(report):
    t0 = time.perf_counter()
    bad = []
    for n in (3, 4, 5):
        for N in (1, 2, 3):
            got = alt_decompose(delta_power(n, 2 * N))
            want = golden_delta_factors(n, N)
            # trailing B_m may be trivial and is then not stored
            same = len(got.factors) == len(want) and all(equals(a, b) for a, b in zip(got.factors, want))
            if not same:
                bad.append((n, N))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 10
    report(1, ok, f"golden decompositions 9 cases, mismatches={bad}, {elapsed:.2f}s (< 10s)")
    assert ok


def test_sandwich(report):
    rng = random.Random(20260101)
    t0 = time.perf_counter()
    samples, violations = 3000, []
    for _ in range(samples):
        n = rng.randint(3, 5)
        x = word(n, [rng.randint(1, n - 1) for _ in range(rng.randint(1, 25))])
        if not sandwich_holds(x):
            violations.append(x)
    elapsed = time.perf_counter() - t0
    ok = not violations and elapsed < 300
    report(2, ok, f"sandwich on {samples} positive braids, violations={len(violations)}, {elapsed:.1f}s (< 300s)")
    assert ok, violations[:5]


def test_fast_compare_soundness(report):
    rng = random.Random(7)
    decided = contradictions = 0
    tries = 0
    while decided < 1000 and tries < 50000:
        tries += 1
        n = rng.randint(3, 5)
        x = word(n, [rng.randint(1, n - 1) for _ in range(rng.randint(1, 15))])
        if rng.random() < 0.7:
            # push a B-monoid factor on one side so the top factors are likely comparable
            b = word(n, [rng.randint(2, n - 1) for _ in range(rng.randint(1, 4))])
            y = concat(b, x) if rng.random() < 0.5 else concat(x, b)
        else:
            y = word(n, [rng.randint(1, n - 1) for _ in range(rng.randint(1, 15))])
        fc = fast_compare(x, y)
        if fc.rule != "top-factor":
            continue
        decided += 1
        if fc.verdict != compare(x, y).verdict.value:
            contradictions += 1
    ok = decided >= 500 and contradictions == 0
    report(3, ok, f"top-factor rule on {decided} pairs, contradictions={contradictions}")
    assert ok


def test_parabolic_drop(report):
    rng = random.Random(11)
    sampled = failures = tries = 0
    while sampled < 300 and tries < 50000:
        tries += 1
        n = rng.randint(3, 5)
        K = rng.randint(1, 3)
        w = word(n, [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(1, 8))])
        x = concat(delta_power(n, 2 * K), w)
        if not is_positive(x):
            continue
        x = canonical_form(x).to_word()
        m = alt_length(x)
        if compare(x, delta_power(n, 2 * m - 2)).verdict is not LESS:
            continue
        sampled += 1
        d = half_twist(n)
        raw = concat(d, invert(x), delta_power(n, 2 * m - 2), invert(d))
        rep = parabolic_drop(x)
        letters_ok = all(1 <= abs(e) <= n - 2 for e in rep.letters)
        if not (lives_in_parabolic(raw, "A") and equals(rep, raw) and letters_ok):
            failures += 1
    ok = sampled >= 200 and failures == 0
    report(4, ok, f"parabolic drop on {sampled} braids below Delta^(2l-2), failures={failures}")
    assert ok


def test_pump_inequality(report):
    rng = random.Random(5)
    checks = failures = 0
    for n in (3, 4):
        lower = named_constant("Delta_A", n) ** 4
        betas = []
        while len(betas) < 50:
            b = word(n, [rng.choice((1, 1, -1)) * rng.randint(1, n - 2) for _ in range(rng.randint(1, 20))])
            if compare(lower, b).verdict is LESS:
                betas.append(b)
        d = half_twist(n)
        for b in betas:
            for N in range(1, 6):
                checks += 1
                expected = concat(b, concat(d, b, invert(d), b) ** N)
                got = lemma_ind_pump(b, N)
                if not (equals(got, expected) and compare(delta_power(n, 2 * N), expected).verdict is LESS):
                    failures += 1
    ok = failures == 0
    report(5, ok, f"pump inequality on {checks} (beta, N) pairs, failures={failures}")
    assert ok


def test_meet_oracle(report):
    t0 = time.perf_counter()
    checked = mismatches = 0
    for n in (3, 4):
        for length in range(9):
            for letters in itertools.product(range(1, n), repeat=length):
                x = word(n, letters)
                divisors = brute_force_right_divisors(x)
                for side in "AB":
                    gens = set(side_generators(n, side))
                    y = parabolic_max_right_divisor(x, side)
                    ykey = positive_class_key(y.letters)
                    inside = [z for z in divisors if set(z.letters) <= gens]
                    below_y = {z.letters for z in brute_force_right_divisors(y)}
                    checked += 1
                    good = (
                        set(ykey) <= gens
                        and any(z.letters == ykey for z in divisors)
                        and all(z.letters in below_y for z in inside)
                    )
                    if not good:
                        mismatches += 1
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 600
    report(6, ok, f"meet vs exhaustive divisors, {checked} (word, side) cases, mismatches={mismatches}, {elapsed:.1f}s")
    assert ok


def _sigma_positive_elements(n: int, max_len: int) -> set:
    """Canonical keys of everything with a sigma-positive word of length <= max_len (n = 3)."""
    assert n == 3

    def key(letters):
        return canonical_form(word(n, letters)).key()

    found = {key((2,) * k) for k in range(1, max_len + 1)}
    seen = {(key(()), False)}
    frontier = {(): False}
    for _ in range(max_len):
        nxt = {}
        for rep, has_main in frontier.items():
            for a in (1, 2, -2):
                r = rep + (a,)
                h = has_main or a == 1
                k = (key(r), h)
                if k in seen:
                    continue
                seen.add(k)
                nxt[r] = h
                if h:
                    found.add(k[0])
        frontier = nxt
    return found


def test_order_cross_validation(report):
    n = 3
    positive = _sigma_positive_elements(n, 10)
    one = canonical_form(word(n)).key()
    disagreements = unresolved = total = 0
    for length in range(7):
        for letters in itertools.product((1, -1, 2, -2), repeat=length):
            total += 1
            w = word(n, letters)
            k = canonical_form(w).key()
            kinv = canonical_form(invert(w)).key()
            if k == one:
                expected = 0
            elif k in positive and kinv not in positive:
                expected = 1
            elif kinv in positive and k not in positive:
                expected = -1
            else:
                unresolved += 1
                continue
            if sigma_sign(w).sign != expected:
                disagreements += 1

    # fast comparison on all positive words of length <= 6, up to equality
    reps = {}
    for length in range(7):
        for letters in itertools.product((1, 2), repeat=length):
            reps.setdefault(positive_class_key(letters), word(n, letters))
    fast_decided = fast_wrong = 0
    items = list(reps.values())
    for x in items:
        for y in items:
            fc = fast_compare(x, y)
            if fc.verdict == "Unknown":
                continue
            fast_decided += 1
            if fc.verdict != compare(x, y).verdict.value:
                fast_wrong += 1
    ok = disagreements == 0 and unresolved == 0 and fast_wrong == 0
    report(7, ok, f"sign of {total} words vs sigma-positive search (unresolved={unresolved}, "
                  f"disagreements={disagreements}); fast_compare on {fast_decided} decided pairs, wrong={fast_wrong}")
    assert ok


def test_amplifier_end_to_end(report):
    failures = []
    worst = 0.0
    for n in (3, 4):
        gens = {"s1^-2": word(n, (-1, -1)), "Delta^-2": delta_power(n, -2), "s2^-1 s1^-1": word(n, (-2, -1))}
        for name, gamma in gens.items():
            for N in (1, 2, 3):
                t0 = time.perf_counter()
                res = amplify(gamma, N)
                problems = []
                if not equals(res.certificate.evaluate(), res.element):
                    problems.append("certificate")
                if not (res.order_receipt.check() and compare(delta_power(n, 2 * N), res.element).verdict is LESS):
                    problems.append("receipt")
                # re-derive the alignment inequalities independently of the trace
                g = normalize_generator(gamma)
                al = conjugate_align(g)
                if compare(g, word(n)).verdict is not LESS or compare(g, al.gamma0).verdict is LESS:
                    problems.append("gamma0 <= gamma < 1")
                if al.m - al.N > 1:
                    problems.append("m - N <= 1")
                for level in res.branch_trace:
                    for att in level.get("attempts", []):
                        if "bound" in att and att["alt_length"] > att["bound"]:
                            problems.append(f"alt length at i={att['i']}")
                dt = time.perf_counter() - t0
                worst = max(worst, dt)
                if dt > 120:
                    problems.append("runtime")
                if problems:
                    failures.append((n, name, N, problems))
    ok = not failures
    report(8, ok, f"amplify on 18 cases, failures={failures}, slowest {worst:.2f}s (< 120s)")
    assert ok


def test_pipeline(report):
    alpha = word(3, (1, 2))
    gamma = word(3, (1, 1))
    pr = main_pipeline(alpha, gamma, 2)
    knot = pr.knot_braid
    checks = {
        "knot": equals(knot, concat(alpha, pr.beta)),
        "3-cycle": underlying_permutation(knot).is_full_cycle(),
        "genus": pr.genus_bound >= 2 and (genus_certificate(knot).bound or 0) >= 2,
        "precondition": compare(concat(invert(alpha), delta_power(3, 4)), pr.beta).verdict is LESS,
        "receipt": pr.receipts["beta_above_alpha_inv_Delta_2N"].check(),
        "membership": equals(pr.membership.evaluate(), pr.beta),
        "hyperbolicity": "hyperbolicity" in pr.not_certified,
    }
    ok = all(checks.values())
    report(9, ok, f"pipeline (s1 s2, s1^2, N=2): genus >= {pr.genus_bound}, checks={checks}")
    assert ok
