"""Seeded random generators for functions, elements and ideal members.

Shared between the command-line property suites and the test suite; all
randomness flows through one ``random.Random`` instance for repeatability.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import scalars as sc
from .algebra import Element, alg_add, alg_mul
from .dynsys import (
    FiniteSystem, Point, RotationSystem, ShiftSystem, UnionSystem,
    cover_representatives, is_periodic, orbit_closure, orbit_set, period,
    whole_space,
)
from .errors import UnsupportedQueryError
from .funcspace import Func, zero_func
from .reps_ideals import (
    IdealHandle, IntersectionIdeal, KernelIdeal, PxIdeal,
    PxLambdaIdeal, QxIdeal, canonical_px, canonical_px_lambda, canonical_qx,
    escape_element,
)


def random_scalar(rng: random.Random, exact: bool):
    if exact:
        return sc.QComplex(Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                           Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
    return complex(rng.uniform(-1, 1), rng.uniform(-1, 1))


def random_func(system, rng: random.Random, exact: bool = False) -> Func:
    if isinstance(system, FiniteSystem):
        return Func(system, tuple(random_scalar(rng, exact) for _ in range(system.size)))
    if isinstance(system, ShiftSystem):
        exc = {rng.randint(-3, 3): random_scalar(rng, exact)
               for _ in range(rng.randint(0, 3))}
        return Func(system, (random_scalar(rng, exact), exc))
    if isinstance(system, RotationSystem):
        coeffs = {k: complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                  for k in range(-2, 3) if rng.random() < 0.6}
        return Func(system, coeffs or {0: complex(rng.uniform(-1, 1), 0)})
    return Func(system, tuple(random_func(c, rng, exact) for c in system.components))


def random_element(system, rng: random.Random, radius: int = 3,
                   exact: bool = False, density: float = 0.6) -> Element:
    coeffs = {}
    for n in range(-radius, radius + 1):
        if rng.random() < density:
            coeffs[n] = random_func(system, rng, exact)
    if not coeffs:
        coeffs[0] = random_func(system, rng, exact)
    return Element(system, coeffs)


def random_unimodular(rng: random.Random, exact: bool = False):
    if exact:
        return sc.rational_circle_point(Fraction(rng.randint(-6, 6), rng.randint(1, 6)))
    import cmath, math
    return cmath.exp(2j * math.pi * rng.random())


def random_func_vanishing_on(system, S, rng: random.Random, exact: bool = False) -> Func:
    """A random function that vanishes on S and is generically nonzero
    elsewhere."""
    if isinstance(system, UnionSystem):
        return Func(system, tuple(
            random_func_vanishing_on(c, p, rng, exact)
            for c, p in zip(system.components, S.parts)
        ))
    zero = sc.zero_like(exact)
    if isinstance(system, FiniteSystem):
        return Func(system, tuple(
            zero if i in S.points else random_scalar(rng, exact)
            for i in range(system.size)
        ))
    if isinstance(system, ShiftSystem):
        if S.cofinite:
            return Func(system, (zero, {n: random_scalar(rng, exact) for n in S.ints}))
        exc = {n: zero for n in S.ints}
        if S.has_inf:
            v = zero
            for _ in range(rng.randint(0, 3)):
                n = rng.randint(-3, 3)
                if n not in exc:
                    exc[n] = random_scalar(rng, exact)
        else:
            v = random_scalar(rng, exact)
            for _ in range(rng.randint(0, 2)):
                n = rng.randint(-3, 3)
                if n not in exc:
                    exc[n] = random_scalar(rng, exact)
        return Func(system, (v, exc))
    if S.whole:
        return zero_func(system)
    if not S.turns:
        return random_func(system, rng, exact=False)
    from .dynsys import set_contains
    from .funcspace import f_mul, separating_func
    t = (float(S.turns[0]) + 0.25) % 1.0
    while set_contains(system, S, Point(t)):
        t = (t + 0.13) % 1.0
    base = separating_func(system, S, Point(t))
    return f_mul(base, random_func(system, rng, exact=False))


def random_member(I: IdealHandle, rng: random.Random, radius: int = 3,
                  exact: bool = False) -> Element:
    """A random element of a canonical or intersection handle."""
    system = I.system
    if isinstance(I, (PxIdeal, QxIdeal, KernelIdeal)):
        S = _hull_set(I)
        coeffs = {}
        for n in range(-radius, radius + 1):
            if rng.random() < 0.6:
                coeffs[n] = random_func_vanishing_on(system, S, rng, exact)
        if not coeffs:
            coeffs[0] = random_func_vanishing_on(system, S, rng, exact)
        return Element(system, coeffs)
    if isinstance(I, PxLambdaIdeal):
        p = period(system, I.x)
        f = random_func(system, rng, exact)
        g = escape_element(f, I.lam, p)
        b = random_element(system, rng, 1, exact)
        c = random_element(system, rng, 1, exact)
        prod = alg_mul(alg_mul(b, g), c)
        if rng.random() < 0.5:
            extra = random_member(canonical_qx(system, I.x), rng, 1, exact)
            prod = alg_add(prod, extra)
        return prod
    if isinstance(I, IntersectionIdeal):
        if not I.parts:
            return random_element(system, rng, radius, exact)
        out = random_member(I.parts[0], rng, 1, exact)
        for p in I.parts[1:]:
            out = alg_mul(out, random_member(p, rng, 1, exact))
        return out
    raise UnsupportedQueryError("no member generator for this handle")


def _hull_set(I):
    if isinstance(I, PxIdeal):
        return orbit_closure(I.system, I.x)
    if isinstance(I, QxIdeal):
        return orbit_set(I.system, I.x)
    return I.subset


def canonical_handles(system, lam_values=(1 + 0j, -1 + 0j, 1j)) -> list[IdealHandle]:
    """All canonical handles over orbit representatives, with the given
    torus parameters for the periodic families."""
    out: list[IdealHandle] = []
    for x in _lenient_orbit_reps(system):
        if is_periodic(system, x):
            out.append(canonical_qx(system, x))
            out.extend(canonical_px_lambda(system, x, lam) for lam in lam_values)
        else:
            out.append(canonical_px(system, x))
    return out


def _lenient_orbit_reps(system) -> list[Point]:
    """Every orbit when enumerable, a dense covering orbit otherwise."""
    from .dynsys import all_orbits_in, in_component
    if isinstance(system, UnionSystem):
        out = []
        for i, c in enumerate(system.components):
            out.extend(in_component(i, x) for x in _lenient_orbit_reps(c))
        return out
    try:
        return all_orbits_in(system, whole_space(system))
    except UnsupportedQueryError:
        return cover_representatives(system, whole_space(system))
