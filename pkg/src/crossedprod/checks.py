"""Named property suites runnable from the command line.

Each suite takes the configured system, a seed and a tolerance, runs a
fixed battery of randomized law checks, and returns a report; the command
line maps failed reports to a nonzero exit code.
"""

from __future__ import annotations

import random

from .algebra import (
    alg_add, alg_adj, alg_mul, alg_norm, delta_power, dual_action,
    dual_average, elem_close, expectation, from_func, unit,
)
from .dynsys import (
    enumerate_invariant_closed_sets,
)
from .errors import UnsupportedQueryError
from .funcspace import (
    f_add, f_compose_sigma, f_conj, f_is_zero, f_mul, f_sub,
    zero_func,
)
from .galois import (
    CheckReport, check_assumption, check_fixed_point_laws, check_min_max,
    check_order_reflection, check_three_maps, classical_pair,
    hull_kernel_pair, zeros_synth_pair,
)
from .reps_ideals import (
    PxLambdaIdeal, ideal_member, rep_is_zero, rep_periodic,
)
from .sampling import (
    canonical_handles, random_element, random_func, random_member,
    random_unimodular,
)
from .transform import zeros_of_ideal


def _rep(name, checked, failures) -> CheckReport:
    return CheckReport(name, not failures, checked, tuple(failures))


def suite_algebra_axioms(system, exact: bool, seed: int, tol: float,
                         rounds: int = 60) -> CheckReport:
    rng = random.Random(seed)
    failures = []
    checked = 0
    one = unit(system, exact)
    for _ in range(rounds):
        a = random_element(system, rng, 3, exact)
        b = random_element(system, rng, 3, exact)
        c = random_element(system, rng, 3, exact)
        checked += 6
        if not elem_close(alg_mul(alg_mul(a, b), c), alg_mul(a, alg_mul(b, c)), tol):
            failures.append("associativity")
        if not elem_close(alg_mul(a, alg_add(b, c)),
                          alg_add(alg_mul(a, b), alg_mul(a, c)), tol):
            failures.append("distributivity")
        if not (elem_close(alg_mul(one, a), a, tol) and elem_close(alg_mul(a, one), a, tol)):
            failures.append("unit")
        if not elem_close(alg_adj(alg_mul(a, b)), alg_mul(alg_adj(b), alg_adj(a)), tol):
            failures.append("involution anti-multiplicativity")
        if alg_norm(alg_mul(a, b)) > alg_norm(a) * alg_norm(b) + tol:
            failures.append("submultiplicativity")
        if abs(alg_norm(alg_adj(a)) - alg_norm(a)) > tol:
            failures.append("adjoint isometry")
    return _rep("algebra.axioms", checked, failures)


def suite_expectation(system, exact: bool, seed: int, tol: float,
                      rounds: int = 60) -> CheckReport:
    rng = random.Random(seed)
    failures = []
    checked = 0
    for _ in range(rounds):
        a = random_element(system, rng, 3, exact)
        f = random_func(system, rng, exact)
        g = random_func(system, rng, exact)
        checked += 4
        lhs = expectation(alg_mul(alg_mul(from_func(f), a), from_func(g)))
        rhs = f_mul(f_mul(f, g), expectation(a))
        if not f_is_zero(f_sub(lhs, rhs), tol):
            failures.append("two-sided function multiplication")
        d = delta_power(system, 1, exact)
        dinv = delta_power(system, -1, exact)
        lhs2 = expectation(alg_mul(alg_mul(d, a), dinv))
        if not f_is_zero(f_sub(lhs2, f_compose_sigma(expectation(a), -1)), tol):
            failures.append("conjugation by the shift generator")
        star = alg_mul(alg_adj(a), a)
        got = expectation(star)
        want = zero_func(system, exact)
        for n, fn in a.coeffs.items():
            shifted = f_compose_sigma(fn, n)
            want = f_add(want, f_mul(f_conj(shifted), shifted))
        if not f_is_zero(f_sub(got, want), max(tol, 1e-8)):
            failures.append("positive square formula")
        if alg_norm(from_func(expectation(a))) > alg_norm(a) + tol:
            failures.append("contractivity")
    return _rep("expectation.laws", checked, failures)


def suite_reps_kernel(system, exact: bool, seed: int, tol: float,
                      rounds: int = 40) -> CheckReport:
    rng = random.Random(seed)
    failures = []
    checked = 0
    handles = [h for h in canonical_handles(system) if isinstance(h, PxLambdaIdeal)]
    if not handles:
        return _rep("reps.kernel", 0, [])
    for _ in range(rounds):
        I = rng.choice(handles)
        a = random_member(I, rng, 2, exact) if rng.random() < 0.5 \
            else random_element(system, rng, 2, exact)
        checked += 1
        member = ideal_member(I, a, tol)
        mat = rep_is_zero(rep_periodic(system, I.x, I.lam, a), max(tol, 1e-8))
        if member != mat:
            failures.append(f"membership and matrix kernel disagree on {I!r}")
    return _rep("reps.kernel", checked, failures)


def suite_dual_average(system, exact: bool, seed: int, tol: float,
                       rounds: int = 50) -> CheckReport:
    rng = random.Random(seed)
    failures = []
    checked = 0
    for _ in range(rounds):
        a = random_element(system, rng, 3, exact)
        M = 2 * a.support_radius() + 1 + rng.randint(0, 3)
        checked += 2
        if not elem_close(dual_average(a, M), from_func(expectation(a)), 0.0 if exact else tol):
            failures.append("average beyond the support radius")
        lam = random_unimodular(rng, exact)
        if abs(alg_norm(dual_action(a, lam)) - alg_norm(a)) > max(tol, 1e-8):
            failures.append("dual action not isometric")
    return _rep("dual.average", checked, failures)


def suite_inclusion_table(system, exact: bool, seed: int, tol: float,
                          samples: int = 25) -> CheckReport:
    from .reps_ideals import ideal_inclusion
    rng = random.Random(seed)
    failures = []
    checked = 0
    handles = canonical_handles(system)
    for I in handles:
        for J in handles:
            predicted = ideal_inclusion(I, J)
            sampled = True
            for _ in range(samples):
                m = random_member(I, rng, 2, exact)
                if not ideal_member(J, m, tol):
                    sampled = False
                    break
            checked += 1
            if predicted and not sampled:
                failures.append(f"table says {I!r} <= {J!r} but a member escapes")
            if not predicted and sampled:
                # sampling may miss a separating element; try harder before flagging
                extra = all(ideal_member(J, random_member(I, rng, 3, exact), tol)
                            for _ in range(4 * samples))
                if extra:
                    failures.append(f"table denies {I!r} <= {J!r} but sampling agrees")
    return _rep("inclusion.table", checked, failures)


def _galois_samples(system, kind: str, seed: int, count: int):
    rng = random.Random(seed)
    if kind == "hk":
        fams = [tuple(random_func(system, rng) for _ in range(rng.randint(1, 3)))
                for _ in range(count)]
        from .funcspace import f_zero_set
        subs = [f_zero_set(random_func(system, rng)) for _ in range(max(2, count // 2))]
        return classical_pair(system), fams, subs
    handles = canonical_handles(system)
    sets_inv = enumerate_invariant_closed_sets(system)
    if kind == "HK":
        if sets_inv is None:
            raise UnsupportedQueryError("invariant sets are not enumerable here")
        return hull_kernel_pair(system), handles, sets_inv
    tsets = [zeros_of_ideal(h) for h in handles]
    return zeros_synth_pair(system), handles, tsets


def suite_galois(system, kind: str, seed: int, count: int = 40) -> CheckReport:
    pair, a_samples, b_samples = _galois_samples(system, kind, seed, count)
    a_samples = list(a_samples)[:count]
    b_samples = list(b_samples)[:count]
    out = check_assumption(pair, a_samples, b_samples)
    out = out.merged_with(check_three_maps(pair, a_samples, b_samples))
    out = out.merged_with(check_fixed_point_laws(pair, a_samples, b_samples))
    fixed = [pair.beta(pair.alpha(a)) for a in a_samples]
    for a in a_samples[: max(3, count // 8)]:
        out = out.merged_with(check_min_max(pair, a, fixed))
        out = out.merged_with(check_order_reflection(pair, pair.beta(pair.alpha(a)), a_samples))
    return CheckReport(f"galois.{kind}", out.ok, out.checked, out.failures)


SUITES = {
    "algebra.axioms": lambda system, exact, seed, tol: suite_algebra_axioms(system, exact, seed, tol),
    "expectation.laws": lambda system, exact, seed, tol: suite_expectation(system, exact, seed, tol),
    "reps.kernel": lambda system, exact, seed, tol: suite_reps_kernel(system, exact, seed, tol),
    "dual.average": lambda system, exact, seed, tol: suite_dual_average(system, exact, seed, tol),
    "inclusion.table": lambda system, exact, seed, tol: suite_inclusion_table(system, exact, seed, tol),
    "galois.hk": lambda system, exact, seed, tol: suite_galois(system, "hk", seed),
    "galois.HK": lambda system, exact, seed, tol: suite_galois(system, "HK", seed),
    "galois.ZI": lambda system, exact, seed, tol: suite_galois(system, "ZI", seed),
}
