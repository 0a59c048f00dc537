"""Concrete models of the continuous functions on each system.

Finite systems carry plain value vectors, the compactified shift carries
finitely-perturbed constants, and the rotation carries trigonometric
polynomials with absolutely summable coefficients.  The rotation model
runs in float mode only; finite and shift models also support exact
rational scalars.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import scalars as sc
from .dynsys import (
    INF, CircleSet, FiniteSet, FiniteSystem, Point, RotationSystem, ShiftSet,
    ShiftSystem, UnionSet, UnionSystem, _lcm_order, sigma_power_map, turns_eq,
    validate_point,
)
from .errors import ModeMismatchError, SystemMismatchError, UnsupportedQueryError

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Func:
    """A function in the C(X) model of its system.

    data layout:
      finite system   -> tuple of scalars, one per point
      shift system    -> (value at infinity, {n: value} finite exceptions)
      rotation system -> {frequency: coefficient} trigonometric polynomial
      union system    -> tuple of component Funcs
    """

    system: object
    data: object

    def __post_init__(self):
        object.__setattr__(self, "data", _normal_form(self.system, self.data))

    @property
    def exact(self) -> bool:
        vals = list(_scalars_of(self.system, self.data))
        return sc.check_same_mode(vals) if vals else False


def _normal_form(system, data):
    if isinstance(system, FiniteSystem):
        data = tuple(data)
        if len(data) != system.size:
            raise SystemMismatchError("value vector length mismatch")
        sc.check_same_mode(data)
        return data
    if isinstance(system, ShiftSystem):
        v_inf, exc = data
        exc = {int(n): v for n, v in exc.items() if v != v_inf}
        sc.check_same_mode([v_inf, *exc.values()])
        return (v_inf, exc)
    if isinstance(system, RotationSystem):
        coeffs = {int(k): c for k, c in data.items() if not sc.is_zero(c)}
        if any(sc.is_exact(c) for c in coeffs.values()):
            raise ModeMismatchError("the rotation model runs in float mode")
        return coeffs
    if isinstance(system, UnionSystem):
        parts = tuple(data)
        if len(parts) != len(system.components):
            raise SystemMismatchError("union function arity mismatch")
        for c, p in zip(system.components, parts):
            if p.system != c:
                raise SystemMismatchError("component function on wrong system")
        return parts
    raise SystemMismatchError("unknown system kind")


def _scalars_of(system, data):
    if isinstance(system, FiniteSystem):
        yield from data
    elif isinstance(system, ShiftSystem):
        yield data[0]
        yield from data[1].values()
    elif isinstance(system, RotationSystem):
        yield from data.values()
    else:
        for p in data:
            yield from _scalars_of(p.system, p.data)


# ---------------------------------------------------------------------------
# Constructors


def const_func(system, value) -> Func:
    if isinstance(system, FiniteSystem):
        return Func(system, (value,) * system.size)
    if isinstance(system, ShiftSystem):
        return Func(system, (value, {}))
    if isinstance(system, RotationSystem):
        return Func(system, {0: value})
    return Func(system, tuple(const_func(c, value) for c in system.components))


def zero_func(system, exact: bool = False) -> Func:
    return const_func(system, sc.zero_like(exact))


def one_func(system, exact: bool = False) -> Func:
    return const_func(system, sc.one_like(exact))


def finite_func(system: FiniteSystem, values) -> Func:
    return Func(system, tuple(values))


def shift_func(system: ShiftSystem, v_inf, exceptional=None) -> Func:
    return Func(system, (v_inf, dict(exceptional or {})))


def trig_poly(system: RotationSystem, coeffs) -> Func:
    return Func(system, dict(coeffs))


def union_func(system: UnionSystem, parts) -> Func:
    return Func(system, tuple(parts))


def embed_func(system: UnionSystem, index: int, part: Func, exact: bool = False) -> Func:
    parts = [zero_func(c, exact) for c in system.components]
    parts[index] = part
    return Func(system, tuple(parts))


def point_indicator(system, x: Point, exact: bool = False) -> Func:
    """Continuous indicator of an isolated point."""
    validate_point(system, x)
    if isinstance(system, UnionSystem):
        i = x.path[0]
        inner = point_indicator(system.components[i], Point(x.coord, x.path[1:]), exact)
        return embed_func(system, i, inner, exact)
    one, zero = sc.one_like(exact), sc.zero_like(exact)
    if isinstance(system, FiniteSystem):
        return Func(system, tuple(one if i == x.coord else zero for i in range(system.size)))
    if isinstance(system, ShiftSystem):
        if x.coord is INF:
            raise UnsupportedQueryError("the point at infinity is not isolated")
        return Func(system, (zero, {x.coord: one}))
    raise UnsupportedQueryError("circle points are not isolated")


# ---------------------------------------------------------------------------
# Pointwise algebra


def _binop(f: Func, g: Func, op):
    if f.system != g.system:
        raise SystemMismatchError("functions live on different systems")
    system = f.system
    if isinstance(system, FiniteSystem):
        return Func(system, tuple(op(a, b) for a, b in zip(f.data, g.data)))
    if isinstance(system, ShiftSystem):
        vf, ef = f.data
        vg, eg = g.data
        keys = set(ef) | set(eg)
        return Func(system, (op(vf, vg), {n: op(ef.get(n, vf), eg.get(n, vg)) for n in keys}))
    if isinstance(system, RotationSystem):
        raise AssertionError("rotation handled by caller")
    return Func(system, tuple(_binop(a, b, op) for a, b in zip(f.data, g.data)))


def f_add(f: Func, g: Func) -> Func:
    if isinstance(f.system, RotationSystem):
        if f.system != g.system:
            raise SystemMismatchError("functions live on different systems")
        keys = set(f.data) | set(g.data)
        return Func(f.system, {k: f.data.get(k, 0j) + g.data.get(k, 0j) for k in keys})
    if isinstance(f.system, UnionSystem):
        if f.system != g.system:
            raise SystemMismatchError("functions live on different systems")
        return Func(f.system, tuple(f_add(a, b) for a, b in zip(f.data, g.data)))
    return _binop(f, g, lambda a, b: a + b)


def f_sub(f: Func, g: Func) -> Func:
    return f_add(f, f_scale(sc.qc(-1) if g.exact else -1 + 0j, g))


def f_mul(f: Func, g: Func) -> Func:
    """Pointwise product; coefficient convolution on the rotation model."""
    if isinstance(f.system, RotationSystem):
        if f.system != g.system:
            raise SystemMismatchError("functions live on different systems")
        out: dict = {}
        for j, a in f.data.items():
            for k, b in g.data.items():
                out[j + k] = out.get(j + k, 0j) + a * b
        return Func(f.system, out)
    if isinstance(f.system, UnionSystem):
        if f.system != g.system:
            raise SystemMismatchError("functions live on different systems")
        return Func(f.system, tuple(f_mul(a, b) for a, b in zip(f.data, g.data)))
    return _binop(f, g, lambda a, b: a * b)


def f_scale(c, f: Func) -> Func:
    system = f.system
    if isinstance(system, FiniteSystem):
        return Func(system, tuple(c * v for v in f.data))
    if isinstance(system, ShiftSystem):
        v, e = f.data
        return Func(system, (c * v, {n: c * w for n, w in e.items()}))
    if isinstance(system, RotationSystem):
        return Func(system, {k: c * w for k, w in f.data.items()})
    return Func(system, tuple(f_scale(c, p) for p in f.data))


def f_conj(f: Func) -> Func:
    """Pointwise complex conjugate."""
    system = f.system
    if isinstance(system, FiniteSystem):
        return Func(system, tuple(sc.conj(v) for v in f.data))
    if isinstance(system, ShiftSystem):
        v, e = f.data
        return Func(system, (sc.conj(v), {n: sc.conj(w) for n, w in e.items()}))
    if isinstance(system, RotationSystem):
        return Func(system, {-k: sc.conj(c) for k, c in f.data.items()})
    return Func(system, tuple(f_conj(p) for p in f.data))


@lru_cache(maxsize=8192)
def rotation_phase(system: RotationSystem, m: int) -> complex:
    """exp(2 pi i theta m), reduced mod 1 before exponentiating."""
    return cmath.exp(2j * math.pi * float(system.theta_times_mod1(m)))


def f_compose_sigma(f: Func, k: int) -> Func:
    """The function x -> f(sigma^k x)."""
    system = f.system
    if isinstance(system, FiniteSystem):
        m = sigma_power_map(system, k % _lcm_order(system))
        return Func(system, tuple(f.data[m[i]] for i in range(system.size)))
    if isinstance(system, ShiftSystem):
        v, e = f.data
        return Func(system, (v, {n - k: w for n, w in e.items()}))
    if isinstance(system, RotationSystem):
        return Func(system, {j: c * rotation_phase(system, k * j) for j, c in f.data.items()})
    return Func(system, tuple(f_compose_sigma(p, k) for p in f.data))


def f_eval(f: Func, x: Point):
    validate_point(f.system, x)
    system = f.system
    if isinstance(system, UnionSystem):
        i = x.path[0]
        return f_eval(f.data[i], Point(x.coord, x.path[1:]))
    if isinstance(system, FiniteSystem):
        return f.data[x.coord]
    if isinstance(system, ShiftSystem):
        v, e = f.data
        return v if x.coord is INF else e.get(x.coord, v)
    t = float(x.coord)
    return sum(
        (c * cmath.exp(2j * math.pi * ((t * k) % 1.0)) for k, c in f.data.items()),
        0j,
    )


# ---------------------------------------------------------------------------
# Norms and zero sets


def grid_size(f: Func) -> int:
    maxfreq = max((abs(k) for k in f.data), default=0)
    return 8 * maxfreq + 16


def f_supnorm_bounds(f: Func) -> tuple[float, float]:
    """(lower, upper) for the sup norm; equal except on the rotation model."""
    system = f.system
    if isinstance(system, FiniteSystem):
        m = max((abs(v) for v in f.data), default=0.0)
        return (m, m)
    if isinstance(system, ShiftSystem):
        v, e = f.data
        m = max([abs(v)] + [abs(w) for w in e.values()])
        return (m, m)
    if isinstance(system, RotationSystem):
        upper = float(sum(abs(c) for c in f.data.values()))
        G = grid_size(f)
        lower = max(
            abs(f_eval(f, Point(Fraction(j, G)))) for j in range(G)
        ) if f.data else 0.0
        return (lower, upper)
    los, his = zip(*(f_supnorm_bounds(p) for p in f.data))
    return (max(los), max(his))


def f_algnorm(f: Func) -> float:
    """The computable algebra norm: exact sup where available, the
    coefficient-sum norm on the rotation model."""
    system = f.system
    if isinstance(system, RotationSystem):
        return float(sum(abs(c) for c in f.data.values()))
    if isinstance(system, UnionSystem):
        return max(f_algnorm(p) for p in f.data)
    return f_supnorm_bounds(f)[0]


def f_is_zero(f: Func, tol: float = 0.0) -> bool:
    return all(sc.is_zero(v, tol) for v in _scalars_of(f.system, f.data))


def func_close(f: Func, g: Func, tol: float = DEFAULT_TOL) -> bool:
    return f_is_zero(f_sub(f, g), tol)


def f_zero_set(f: Func, tol: float = DEFAULT_TOL):
    """The set of points where f vanishes, as a ClosedSet."""
    system = f.system
    if isinstance(system, FiniteSystem):
        return FiniteSet(frozenset(i for i, v in enumerate(f.data) if sc.is_zero(v, tol)))
    if isinstance(system, ShiftSystem):
        v, e = f.data
        if sc.is_zero(v, tol):
            excluded = frozenset(n for n, w in e.items() if not sc.is_zero(w, tol))
            return ShiftSet(excluded, True, True)
        return ShiftSet(
            frozenset(n for n, w in e.items() if sc.is_zero(w, tol)), False
        )
    if isinstance(system, RotationSystem):
        if not f.data:
            return CircleSet(True)
        return CircleSet(False, tuple(unit_circle_roots(f.data, tol)))
    return UnionSet(tuple(f_zero_set(p, tol) for p in f.data))


def unit_circle_roots(coeffs: dict, tol: float) -> list[float]:
    """Turns of the unit-circle roots of sum_k c_k z^k."""
    lo = min(coeffs)
    hi = max(coeffs)
    poly = [complex(coeffs.get(k, 0j)) for k in range(hi, lo - 1, -1)]
    roots = np.roots(poly) if len(poly) > 1 else np.array([])
    turns = []
    for r in roots:
        if abs(abs(r) - 1.0) <= max(tol, 1e-7):
            t = (cmath.phase(complex(r)) / (2 * math.pi)) % 1.0
            if not any(turns_eq(t, u) for u in turns):
                turns.append(t)
    return sorted(turns)


def vanishes_on(f: Func, S, tol: float = DEFAULT_TOL) -> bool:
    """Whether f restricted to the closed set S is zero."""
    system = f.system
    if isinstance(system, UnionSystem):
        return all(vanishes_on(p, s, tol) for p, s in zip(f.data, S.parts))
    if isinstance(system, FiniteSystem):
        return all(sc.is_zero(f.data[i], tol) for i in S.points)
    if isinstance(system, ShiftSystem):
        v, e = f.data
        if S.cofinite:
            if not sc.is_zero(v, tol):
                return False
            return all(sc.is_zero(w, tol) for n, w in e.items() if n not in S.ints)
        ok_inf = not S.has_inf or sc.is_zero(v, tol)
        return ok_inf and all(sc.is_zero(e.get(n, v), tol) for n in S.ints)
    if S.whole:
        return f_is_zero(f, tol)
    return all(sc.is_zero(f_eval(f, Point(t)), tol) for t in S.turns)


def separating_func(system, S, x: Point, exact: bool = False) -> Func:
    """A function vanishing on S and nonzero at x (x outside S)."""
    validate_point(system, x)
    if isinstance(system, UnionSystem):
        i = x.path[0]
        parts = [zero_func(c, exact) for c in system.components]
        parts[i] = separating_func(
            system.components[i], S.parts[i], Point(x.coord, x.path[1:]), exact
        )
        return Func(system, tuple(parts))
    one, zero = sc.one_like(exact), sc.zero_like(exact)
    if isinstance(system, FiniteSystem):
        return Func(system, tuple(one if i == x.coord else zero for i in range(system.size)))
    if isinstance(system, ShiftSystem):
        if x.coord is INF:
            if S.cofinite or S.has_inf:
                raise UnsupportedQueryError("x lies in the closure of S")
            return Func(system, (one, {n: zero for n in S.ints}))
        return Func(system, (zero, {x.coord: one}))
    if S.whole:
        raise UnsupportedQueryError("no nonzero function vanishes on the whole circle")
    coeffs = {0: 1 + 0j}
    for t in S.turns:
        root = cmath.exp(2j * math.pi * float(t))
        new: dict = {}
        for k, c in coeffs.items():
            new[k + 1] = new.get(k + 1, 0j) + c
            new[k] = new.get(k, 0j) - c * root
        coeffs = new
    return Func(system, coeffs)


def cx_basis(system, ints_window=(), max_freq: int = 0, exact: bool = False) -> list[Func]:
    """A finite test family in C(X) that spans enough directions to probe
    the values of finitely supported coefficients.

    Finite components contribute all point indicators; shift components
    the constant plus indicators of the given integer window; rotation
    components the monomials of frequency 0..max_freq.
    """
    if isinstance(system, UnionSystem):
        out = []
        for i, c in enumerate(system.components):
            for b in cx_basis(c, ints_window, max_freq, exact):
                out.append(embed_func(system, i, b, exact))
        return out
    if isinstance(system, FiniteSystem):
        return [point_indicator(system, Point(i), exact) for i in range(system.size)]
    if isinstance(system, ShiftSystem):
        base = [one_func(system, exact)]
        base.extend(point_indicator(system, Point(n), exact) for n in ints_window)
        return base
    return [trig_poly(system, {k: 1 + 0j}) for k in range(max_freq + 1)]
