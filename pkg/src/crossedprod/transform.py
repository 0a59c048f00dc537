"""Transform-side operators: zero sets in X x T and synthesized ideals.

The transform of an element collects the Fourier transforms of its
coefficient sequences at every point.  Zero sets of ideals are stored
per orbit as (representative, torus subset) records; the reverse operator
rebuilds an ideal as an intersection of canonical ones.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import scalars as sc
from .algebra import Element, alg_adj, alg_mul, demote_to_float, from_func
from .dynsys import (
    INF, FiniteSystem, Point, RotationSystem, ShiftSystem, UnionSystem,
    cover_representatives, is_periodic, orbit_closure,
    orbit_points, orbit_set, period, set_contains, set_is_empty, set_subset,
    whole_space,
)
from .errors import UnsupportedQueryError
from .funcspace import (
    DEFAULT_TOL, Func, cx_basis, f_add, f_eval, f_scale, vanishes_on,
    zero_func,
)
from .hullkernel import hull
from .reps_ideals import (
    GeneratedIdeal, IdealHandle, IntersectionIdeal, KernelIdeal, PxIdeal,
    PxLambdaIdeal, QxIdeal, canonical_px, canonical_px_lambda, canonical_qx,
    ideal_inclusion, intersection_ideal,
)

ROOT_MATCH_TOL = 1e-6


# ---------------------------------------------------------------------------
# Torus subsets


@dataclass(frozen=True)
class FullCircle:
    def __repr__(self):
        return "full"


@dataclass(frozen=True)
class FiniteRoots:
    roots: tuple

    def __repr__(self):
        return "roots{" + ",".join(f"{complex(r):.6g}" for r in self.roots) + "}"


@dataclass(frozen=True)
class PolynomialRoots:
    """Unit-circle roots of a polynomial, ascending coefficients."""

    coeffs: tuple
    tol: float = DEFAULT_TOL

    def __repr__(self):
        return "poly{" + ",".join(f"{complex(c):.6g}" for c in self.coeffs) + "}"


LambdaSet = object


@dataclass(frozen=True, eq=False)
class TorusEntry:
    """One orbit of the product set: the X part is the orbit of the point
    (its closure when use_closure is set), the torus part is the lambda set."""

    point: Point
    lamset: object
    use_closure: bool = False

    def __repr__(self):
        mark = "*" if self.use_closure else ""
        return f"{self.point!r}{mark}: {self.lamset!r}"


@dataclass(frozen=True, eq=False)
class TorusSubset:
    system: object
    entries: tuple

    def __repr__(self):
        return "t[" + "; ".join(repr(e) for e in self.entries) + "]"


def unit_roots_of_poly(coeffs, tol: float = DEFAULT_TOL) -> list[complex]:
    """Unit-circle roots of sum_i coeffs[i] mu^i."""
    cs = [complex(c) for c in coeffs]
    while cs and abs(cs[-1]) <= tol:
        cs.pop()
    if len(cs) <= 1:
        return []
    roots = np.roots(cs[::-1])
    out: list[complex] = []
    for r in roots:
        r = complex(r)
        if abs(abs(r) - 1.0) <= max(math.sqrt(tol), 1e-6):
            r = r / abs(r)
            if not any(abs(r - u) <= ROOT_MATCH_TOL for u in out):
                out.append(r)
    return sorted(out, key=lambda z: cmath.phase(z) % (2 * math.pi))


def lamset_roots(ls) -> list[complex] | None:
    """Explicit root list, or None for the full circle."""
    if isinstance(ls, FullCircle):
        return None
    if isinstance(ls, FiniteRoots):
        return [complex(r) for r in ls.roots]
    return unit_roots_of_poly(ls.coeffs, ls.tol)


def lamset_is_empty(ls) -> bool:
    r = lamset_roots(ls)
    return r is not None and not r


def lamset_contains(ls, mu, tol: float = ROOT_MATCH_TOL) -> bool:
    r = lamset_roots(ls)
    if r is None:
        return True
    return any(abs(complex(mu) - u) <= tol for u in r)


def entry_xpart(system, e: TorusEntry):
    if e.use_closure or not is_periodic(system, e.point):
        return orbit_closure(system, e.point)
    return orbit_set(system, e.point)


def torus_contains(T: TorusSubset, x: Point, mu, tol: float = ROOT_MATCH_TOL) -> bool:
    for e in T.entries:
        if set_contains(T.system, entry_xpart(T.system, e), x) and lamset_contains(e.lamset, mu, tol):
            return True
    return False


def torus_is_empty(T: TorusSubset) -> bool:
    return all(
        lamset_is_empty(e.lamset) or set_is_empty(entry_xpart(T.system, e))
        for e in T.entries
    )


def pth_roots(lam, p: int) -> list[complex]:
    lam = complex(lam)
    base_angle = cmath.phase(lam)
    return [cmath.exp(1j * (base_angle + 2 * math.pi * k) / p) for k in range(p)]


# ---------------------------------------------------------------------------
# Float polynomial gcd


def _poly_trim(p: list[complex], tol: float) -> list[complex]:
    scale = max((abs(c) for c in p), default=0.0)
    if scale == 0.0:
        return []
    q = [c if abs(c) > tol * scale else 0j for c in p]
    while q and q[-1] == 0j:
        q.pop()
    return q


def _poly_mod(a: list[complex], b: list[complex], tol: float) -> list[complex]:
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    while len(a) - 1 >= db and _poly_trim(a, tol):
        a = _poly_trim(a, tol)
        if len(a) - 1 < db:
            break
        q = a[-1] / lead
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] -= q * c
        a.pop()
    return _poly_trim(a, tol)


def poly_gcd(polys, tol: float = DEFAULT_TOL):
    """Monic gcd (ascending coefficients) of float polynomials.

    Returns None when every input is the zero polynomial, and a constant
    [1] when the inputs are coprime.  Exact to rounding on desk-scale
    degrees; coefficients below tol (relative) are treated as zero.
    """
    g: list[complex] | None = None
    for p in polys:
        p = _poly_trim([complex(c) for c in p], tol)
        if not p:
            continue
        g = p if g is None else _euclid(g, p, tol)
        if len(g) == 1:
            return [1 + 0j]
    if g is None:
        return None
    return [c / g[-1] for c in g]


def _euclid(a, b, tol):
    while b:
        a, b = b, _poly_mod(a, b, tol)
    return a


# ---------------------------------------------------------------------------
# Zero sets of ideals


def zeros_of_ideal(I: IdealHandle, tol: float = DEFAULT_TOL) -> TorusSubset:
    """The common zero set of the transforms of the ideal's elements."""
    system = I.system
    if isinstance(I, PxIdeal):
        return TorusSubset(system, (TorusEntry(I.x, FullCircle(), use_closure=True),))
    if isinstance(I, QxIdeal):
        return TorusSubset(system, (TorusEntry(I.x, FullCircle()),))
    if isinstance(I, PxLambdaIdeal):
        p = period(system, I.x)
        return TorusSubset(system, (TorusEntry(I.x, FiniteRoots(tuple(pth_roots(I.lam, p)))),))
    if isinstance(I, KernelIdeal):
        reps = cover_representatives(system, I.subset)
        return TorusSubset(system, tuple(
            TorusEntry(x, FullCircle(), use_closure=True) for x in reps
        ))
    if isinstance(I, IntersectionIdeal):
        entries: list = []
        for p in I.parts:
            entries.extend(zeros_of_ideal(p, tol).entries)
        return TorusSubset(system, tuple(entries))
    if isinstance(I, GeneratedIdeal):
        return TorusSubset(system, tuple(_generated_zero_entries(system, I, (), tol)))
    raise UnsupportedQueryError("zero sets are not defined for this handle")


def _generated_zero_entries(system, I: GeneratedIdeal, path, tol):
    if isinstance(system, UnionSystem):
        out = []
        for i, comp in enumerate(system.components):
            out.extend(_generated_zero_entries(comp, I, path + (i,), tol))
        return out
    if isinstance(system, RotationSystem):
        if not system.irrational:
            raise UnsupportedQueryError(
                "zero sets of generated ideals are unsupported on rational rotations"
            )
        x0 = Point(0.0, path)
        closure = orbit_closure(I.system, x0)
        ok = all(
            vanishes_on(f, closure, tol)
            for g in I.gens for f in g.coeffs.values()
        )
        return [TorusEntry(x0, FullCircle(), use_closure=True)] if ok else []
    out = []
    if isinstance(system, FiniteSystem):
        local_reps = cover_representatives(system, whole_space(system))
    else:
        local_reps = [Point(0), Point(INF)]
    for rep in local_reps:
        x = Point(rep.coord, path + rep.path)
        if is_periodic(I.system, x):
            ls = _periodic_lambda_set(I, x, tol)
            if ls is not None:
                out.append(TorusEntry(x, ls))
        else:
            closure = orbit_closure(I.system, x)
            ok = all(
                vanishes_on(f, closure, tol)
                for g in I.gens for f in g.coeffs.values()
            )
            if ok:
                out.append(TorusEntry(x, FullCircle(), use_closure=True))
    return out


def _periodic_lambda_set(I: GeneratedIdeal, x: Point, tol):
    """Lambda set of a periodic orbit for a generated ideal: common unit
    roots of the per-generator vanishing conditions, as one gcd polynomial.

    Each condition is the mu-polynomial sum_l mu^{p l} g_{l p + j}(x') with
    powers cleared; an orbit with coprime conditions is omitted (None), and
    all-zero conditions give the full circle.
    """
    system = I.system
    p = period(system, x)
    orbit = orbit_points(system, x)
    conds: list[list[complex]] = []
    for g in I.gens:
        if not g.coeffs:
            continue
        support = sorted(g.coeffs)
        for j in range(p):
            sel = [n for n in support if (n - j) % p == 0]
            if not sel:
                continue
            lmin = min((n - j) // p for n in sel)
            lmax = max((n - j) // p for n in sel)
            for xp in orbit:
                poly = [0j] * ((lmax - lmin) * p + 1)
                for n in sel:
                    l = (n - j) // p
                    poly[(l - lmin) * p] += complex(f_eval(g.coeffs[n], xp))
                conds.append(poly)
    nonzero = [c for c in conds if _poly_trim(c, tol)]
    if not nonzero:
        return FullCircle()
    g = poly_gcd(nonzero, tol)
    if g is None:
        return FullCircle()
    if len(g) == 1:
        return None
    return PolynomialRoots(tuple(g), tol)


# ---------------------------------------------------------------------------
# Synthesized ideals


def ideal_of_torus_set(T: TorusSubset, tol: float = DEFAULT_TOL) -> IntersectionIdeal:
    """The largest ideal whose transforms vanish on T, written as an
    intersection of canonical ideals (one per orbit/root)."""
    system = T.system
    parts: list = []
    for e in T.entries:
        if lamset_is_empty(e.lamset):
            continue
        if not is_periodic(system, e.point):
            parts.append(canonical_px(system, e.point))
            continue
        p = period(system, e.point)
        roots = lamset_roots(e.lamset)
        if roots is None:
            parts.append(canonical_qx(system, e.point))
            continue
        lams: list[complex] = []
        for mu in roots:
            lam = complex(mu) ** p
            if not any(abs(lam - l) <= ROOT_MATCH_TOL for l in lams):
                lams.append(lam)
        for lam in lams:
            parts.append(canonical_px_lambda(system, e.point, lam))
    dedup: list = []
    for p_ in parts:
        if not any(_handle_same(p_, q) for q in dedup):
            dedup.append(p_)
    return intersection_ideal(system, dedup)


def _handle_same(a, b) -> bool:
    if type(a) is not type(b):
        return False
    if isinstance(a, PxIdeal):
        return a.x == b.x
    if isinstance(a, QxIdeal):
        return a.x == b.x
    if isinstance(a, PxLambdaIdeal):
        return a.x == b.x and abs(complex(a.lam) - complex(b.lam)) <= ROOT_MATCH_TOL
    return False


def tilde_member(T: TorusSubset, a: Element, tol: float = DEFAULT_TOL) -> bool:
    """Whether the transform of a vanishes on all of T.

    For each entry the condition reduces to a single C(X)-model function,
    the lambda-weighted sum of the coefficients, vanishing on the orbit
    closure; the full-circle case asks every coefficient to vanish there.
    """
    system = T.system
    for e in T.entries:
        closure = orbit_closure(system, e.point)
        roots = lamset_roots(e.lamset)
        if roots is None:
            if not all(vanishes_on(f, closure, tol) for f in a.coeffs.values()):
                return False
            continue
        for mu in roots:
            h = _lambda_weighted_sum(a, mu)
            if not vanishes_on(h, closure, tol):
                return False
    return True


def _lambda_weighted_sum(a: Element, mu) -> Func:
    """The function x -> sum_n mu**n a_n(x), evaluated in float mode."""
    af = demote_to_float(a) if a.exact else a
    mu = complex(mu)
    acc = zero_func(af.system)
    for n, f in af.coeffs.items():
        w = mu ** n if n >= 0 else mu.conjugate() ** (-n)
        acc = f_add(acc, f_scale(w, f))
    return acc


def ideal_member_via_S(T: TorusSubset, a: Element, tol: float = DEFAULT_TOL) -> bool:
    """Membership in the synthesized ideal of T, realised by testing the
    products a.f against the raw vanishing condition, with f running over a
    point-indicator style basis of the function model."""
    window = _shift_window(T, a)
    basis = cx_basis(a.system, ints_window=window, max_freq=max(1, len(a.coeffs)))
    return all(tilde_member(T, alg_mul(a, from_func(f)), tol) for f in basis)


def _shift_window(T: TorusSubset, a: Element) -> tuple:
    ints: set[int] = set()
    for f in a.coeffs.values():
        ints.update(_exceptional_ints(f))
    for e in T.entries:
        if isinstance(e.point.coord, int):
            ints.add(e.point.coord)
    N = a.support_radius()
    if not ints:
        ints = {0}
    lo, hi = min(ints) - N, max(ints) + N
    return tuple(range(lo, hi + 1)) + (hi + N + 1,)


def _exceptional_ints(f: Func):
    system = f.system
    if isinstance(system, ShiftSystem):
        return set(f.data[1])
    if isinstance(system, UnionSystem):
        out: set[int] = set()
        for p in f.data:
            out |= _exceptional_ints(p)
        return out
    return set()


def zi_closure(I: IdealHandle, tol: float = DEFAULT_TOL) -> IntersectionIdeal:
    """Smallest representation kernel containing the ideal: the synthesized
    ideal of its zero set."""
    return ideal_of_torus_set(zeros_of_ideal(I, tol), tol)


@dataclass(frozen=True, eq=False)
class ZerosReport:
    nonempty: bool
    witness: tuple | None  # (Point, mu)
    note: str
    zeros: TorusSubset


def zeros_nonempty_report(I: IdealHandle, tol: float = DEFAULT_TOL) -> ZerosReport:
    """Report whether the zero set is nonempty, with a witness pair.

    A nonempty zero set means the ideal sits inside the kernel of one of
    the canonical irreducible representations (at the witness point, with
    the witness torus parameter); an empty one means no such kernel
    contains it.
    """
    Z = zeros_of_ideal(I, tol)
    for e in Z.entries:
        if lamset_is_empty(e.lamset):
            continue
        roots = lamset_roots(e.lamset)
        mu = (1 + 0j) if roots is None else roots[0]
        return ZerosReport(True, (e.point, mu),
                           "contained in a canonical representation kernel at the witness",
                           Z)
    return ZerosReport(False, None,
                       "no canonical representation kernel contains the ideal", Z)


def adjoint_zeros_equal(I: GeneratedIdeal, grid_order: int = 64,
                        tol: float = 1e-8) -> bool:
    """Zero sets of a generated ideal and of its adjoint ideal coincide.

    Compared two ways: membership patterns over a root-of-unity grid of
    the given order, and matching of the computed per-orbit root lists.
    """
    if not isinstance(I, GeneratedIdeal):
        raise UnsupportedQueryError("adjoint comparison takes a generated ideal")
    Iadj = GeneratedIdeal(I.system, tuple(alg_adj(g) for g in I.gens))
    Z1 = zeros_of_ideal(I)
    Z2 = zeros_of_ideal(Iadj)
    probes = cover_representatives(I.system, whole_space(I.system))
    grid = sc.roots_of_unity(grid_order)
    for x in probes:
        for mu in grid:
            if torus_contains(Z1, x, mu, max(tol, ROOT_MATCH_TOL)) != \
                    torus_contains(Z2, x, mu, max(tol, ROOT_MATCH_TOL)):
                return False
    return _same_root_lists(Z1, Z2)


def _same_root_lists(Z1: TorusSubset, Z2: TorusSubset) -> bool:
    def gather(Z):
        out = {}
        for e in Z.entries:
            key = repr(e.point)
            r = lamset_roots(e.lamset)
            out[key] = None if r is None else tuple(r)
        return out

    g1, g2 = gather(Z1), gather(Z2)
    if set(g1) != set(g2):
        return False
    for k in g1:
        r1, r2 = g1[k], g2[k]
        if (r1 is None) != (r2 is None):
            return False
        if r1 is None:
            continue
        if len(r1) != len(r2):
            return False
        for u, v in zip(r1, r2):
            if abs(u - v) > ROOT_MATCH_TOL:
                return False
    return True


# ---------------------------------------------------------------------------
# General containment of handles


def ideal_leq(I: IdealHandle, J: IdealHandle, tol: float = DEFAULT_TOL) -> bool:
    """Containment of I in J for every constructible handle pair.

    Canonical pairs use the orbit-data table; kernel-type targets reduce to
    hulls; torus-parameter targets reduce to the zero set of I meeting the
    zero set of J, which characterises containment.
    """
    if isinstance(J, IntersectionIdeal):
        return all(ideal_leq(I, p, tol) for p in J.parts)
    canonical = (PxIdeal, QxIdeal, PxLambdaIdeal)
    if isinstance(I, canonical) and isinstance(J, canonical):
        return ideal_inclusion(I, J)
    system = I.system
    if isinstance(J, KernelIdeal):
        return set_subset(system, J.subset, hull(I, tol).subset)
    if isinstance(J, PxIdeal):
        return set_subset(system, orbit_closure(system, J.x), hull(I, tol).subset)
    if isinstance(J, QxIdeal):
        return set_subset(system, orbit_set(system, J.x), hull(I, tol).subset)
    if isinstance(J, PxLambdaIdeal):
        Z = zeros_of_ideal(I, tol)
        p = period(system, J.x)
        return any(torus_contains(Z, J.x, mu) for mu in pth_roots(J.lam, p))
    raise UnsupportedQueryError("containment is not decidable for this pair")
