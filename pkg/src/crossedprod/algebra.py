"""Finitely supported elements of the crossed product algebra.

An element is a finite sum of coefficient functions indexed by integers,
multiplied with the twisted convolution determined by the dynamics.  All
identities of the algebra hold coefficientwise on finitely supported
elements, so no truncation is ever performed.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import scalars as sc
from .dynsys import Point, validate_point
from .errors import SystemMismatchError
from .funcspace import (
    Func, f_add, f_algnorm, f_compose_sigma, f_conj, f_eval, f_is_zero,
    f_mul, f_scale, f_sub, one_func, zero_func,
)


@dataclass(frozen=True)
class Element:
    """Finitely supported series sum_n a_n delta^n."""

    system: object
    coeffs: dict

    def __post_init__(self):
        clean = {}
        for n, f in self.coeffs.items():
            if f.system != self.system:
                raise SystemMismatchError("coefficient on the wrong system")
            if not f_is_zero(f):
                clean[int(n)] = f
        if len({f.exact for f in clean.values()}) > 1:
            raise SystemMismatchError("coefficients mix numeric modes")
        object.__setattr__(self, "coeffs", clean)

    @property
    def exact(self) -> bool:
        return any(f.exact for f in self.coeffs.values())

    def coeff(self, n: int) -> Func:
        got = self.coeffs.get(n)
        if got is not None:
            return got
        return zero_func(self.system, self.exact)

    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def support_radius(self) -> int:
        return max((abs(n) for n in self.coeffs), default=0)


def element(system, coeffs) -> Element:
    return Element(system, dict(coeffs))


def from_func(f: Func) -> Element:
    return Element(f.system, {0: f})


def unit(system, exact: bool = False) -> Element:
    return Element(system, {0: one_func(system, exact)})


def delta_power(system, n: int, exact: bool = False) -> Element:
    return Element(system, {n: one_func(system, exact)})


def zero_element(system) -> Element:
    return Element(system, {})


def _check_pair(a: Element, b: Element) -> None:
    if a.system != b.system:
        raise SystemMismatchError("elements live on different systems")


def alg_add(a: Element, b: Element) -> Element:
    _check_pair(a, b)
    out = dict(a.coeffs)
    for n, f in b.coeffs.items():
        out[n] = f_add(out[n], f) if n in out else f
    return Element(a.system, out)


def alg_scale(c, a: Element) -> Element:
    return Element(a.system, {n: f_scale(c, f) for n, f in a.coeffs.items()})


def alg_neg(a: Element) -> Element:
    return alg_scale(sc.qc(-1) if a.exact else -1 + 0j, a)


def alg_sub(a: Element, b: Element) -> Element:
    return alg_add(a, alg_neg(b))


def alg_mul(a: Element, b: Element) -> Element:
    """Twisted convolution: coefficient n collects a_k . (b_{n-k} o sigma^{-k})."""
    _check_pair(a, b)
    out: dict = {}
    for k, ak in a.coeffs.items():
        for m, bm in b.coeffs.items():
            n = k + m
            term = f_mul(ak, f_compose_sigma(bm, -k))
            out[n] = f_add(out[n], term) if n in out else term
    return Element(a.system, out)


def alg_adj(a: Element) -> Element:
    """Involution: coefficient n is the conjugate of a_{-n} o sigma^{-n}."""
    out = {}
    for m, g in a.coeffs.items():
        n = -m
        out[n] = f_conj(f_compose_sigma(g, -n))
    return Element(a.system, out)


def alg_norm(a: Element) -> float:
    """Sum of the coefficient norms."""
    return float(sum(f_algnorm(f) for f in a.coeffs.values()))


def expectation(a: Element) -> Func:
    """The coefficient at index zero (a contractive projection onto C(X))."""
    return a.coeff(0)


def dual_action(a: Element, lam) -> Element:
    """Scale the n-th coefficient by lam**n for unimodular lam."""
    return Element(a.system, {
        n: f_scale(sc.unit_pow(lam, n), f) for n, f in a.coeffs.items()
    })


def dual_average(a: Element, order: int) -> Element:
    """Average of the dual action over the order-th roots of unity.

    The root-of-unity power sums vanish exactly unless the coefficient
    index is a multiple of the order, so the average keeps exactly those
    coefficients; this holds in both numeric modes without float residue.
    """
    if order < 1:
        raise ValueError("averaging order must be positive")
    return Element(a.system, {n: f for n, f in a.coeffs.items() if n % order == 0})


def fourier_eval(a: Element, x: Point, lam):
    """The transform value sum_n lam**n a_n(x)."""
    validate_point(a.system, x)
    total = None
    for n, f in a.coeffs.items():
        term = sc.unit_pow(lam, n) * f_eval(f, x)
        total = term if total is None else total + term
    if total is None:
        return sc.zero_like(a.exact)
    return total


def demote_to_float(a: Element) -> Element:
    """Copy of the element with exact scalars converted to complex."""
    from .dynsys import FiniteSystem, RotationSystem, ShiftSystem

    def dem(f: Func) -> Func:
        system = f.system
        if isinstance(system, FiniteSystem):
            return Func(system, tuple(complex(v) for v in f.data))
        if isinstance(system, ShiftSystem):
            v, e = f.data
            return Func(system, (complex(v), {n: complex(w) for n, w in e.items()}))
        if isinstance(system, RotationSystem):
            return f
        return Func(system, tuple(dem(p) for p in f.data))

    return Element(a.system, {n: dem(f) for n, f in a.coeffs.items()})


def elem_is_zero(a: Element, tol: float = 0.0) -> bool:
    return all(f_is_zero(f, tol) for f in a.coeffs.values())


def elem_close(a: Element, b: Element, tol: float = 1e-9) -> bool:
    _check_pair(a, b)
    for n in set(a.coeffs) | set(b.coeffs):
        if not f_is_zero(f_sub(a.coeff(n), b.coeff(n)), tol):
            return False
    return True
