"""Hull and kernel operators between ideals and invariant closed sets.

The hull of an ideal is the common zero set of all coefficients of all its
elements; the kernel of an invariant closed set is the ideal of elements
whose coefficients vanish there.  On the canonical families both have exact
closed forms; generated ideals go through coefficient zero sets.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import scalars as sc
from .algebra import Element
from .dynsys import (
    FiniteSystem, ShiftSystem, UnionSystem,
    cover_representatives, empty_set, enumerate_invariant_closed_sets,
    is_invariant_closed, is_minimal, is_periodic, largest_invariant_subset,
    orbit_closure, orbit_set, set_intersect, set_union, whole_space,
)
from .errors import UnsupportedQueryError
from .funcspace import DEFAULT_TOL, Func, f_zero_set
from .reps_ideals import (
    GeneratedIdeal, IdealHandle, IntersectionIdeal, KernelIdeal, PxIdeal,
    PxLambdaIdeal, QxIdeal, canonical_px, canonical_qx, ideal_member,
    kernel_ideal,
)


@dataclass(frozen=True, eq=False)
class HullResult:
    subset: object
    provenance: tuple


def hull(I: IdealHandle, tol: float = DEFAULT_TOL) -> HullResult:
    """Common zero set of all coefficient functions of the ideal."""
    system = I.system
    if isinstance(I, PxIdeal):
        return HullResult(orbit_closure(system, I.x), ("orbit closure of the base point",))
    if isinstance(I, QxIdeal):
        return HullResult(orbit_set(system, I.x), ("orbit of the base point",))
    if isinstance(I, PxLambdaIdeal):
        return HullResult(empty_set(system),
                          ("badly behaved: the zero-coefficient image is dense",))
    if isinstance(I, KernelIdeal):
        return HullResult(I.subset, ("kernel ideals recover their set",))
    if isinstance(I, IntersectionIdeal):
        acc = empty_set(system)
        notes = []
        for p in I.parts:
            h = hull(p, tol)
            acc = set_union(system, acc, h.subset)
            notes.extend(h.provenance)
        return HullResult(acc, ("union over the intersection parts", *notes))
    if isinstance(I, GeneratedIdeal):
        acc = whole_space(system)
        count = 0
        for g in I.gens:
            for n, f in g.coeffs.items():
                acc = set_intersect(system, acc, f_zero_set(f, tol))
                count += 1
        inv = largest_invariant_subset(system, acc)
        return HullResult(inv, (f"intersected {count} coefficient zero sets",
                                "largest invariant subset taken"))
    raise UnsupportedQueryError("hull is not defined for this handle")


def kernel_of_invariant_set(system, S) -> KernelIdeal:
    return kernel_ideal(system, S)


def kernel_member(system, S, a: Element, tol: float = DEFAULT_TOL) -> bool:
    return ideal_member(kernel_ideal(system, S), a, tol)


def kernel_project(system, S, a: Element) -> Element:
    """Zero the coefficients on S, keeping them unchanged elsewhere.

    Only defined when the complement indicator is continuous (S clopen);
    a shift set containing infinity together with finitely many integers
    has no such indicator and is rejected.
    """
    return Element(system, {n: _project_func(system, S, f) for n, f in a.coeffs.items()})


def _project_func(system, S, f: Func) -> Func:
    if isinstance(system, UnionSystem):
        return Func(system, tuple(
            _project_func(c, p, g) for c, p, g in zip(system.components, S.parts, f.data)
        ))
    exact = f.exact
    zero = sc.zero_like(exact)
    if isinstance(system, FiniteSystem):
        return Func(system, tuple(
            zero if i in S.points else v for i, v in enumerate(f.data)
        ))
    if isinstance(system, ShiftSystem):
        v, e = f.data
        if S.cofinite:
            return Func(system, (zero, {n: e.get(n, v) for n in S.ints}))
        if S.has_inf:
            if not S.ints and sc.is_zero(v):
                return f  # the set is just infinity and f already vanishes there
            raise UnsupportedQueryError(
                "projection needs a clopen set; finite shift sets with infinity are not clopen"
            )
        merged = dict(e)
        for n in S.ints:
            merged[n] = zero
        return Func(system, (v, merged))
    if S.whole:
        return Func(system, {})
    if not S.turns:
        return f
    raise UnsupportedQueryError("rotation projection supports only the empty or full circle")


def hull_kernel_compose(system, S, tol: float = DEFAULT_TOL):
    """Hull of the kernel of S; equals S for invariant closed S."""
    return hull(kernel_ideal(system, S), tol).subset


def kernel_hull_compose(I: IdealHandle, tol: float = DEFAULT_TOL) -> KernelIdeal:
    """Kernel of the hull of I; the smallest well behaved closed ideal
    containing I, and equal to I exactly for well behaved handles."""
    return kernel_ideal(I.system, hull(I, tol).subset)


def decompose_as_intersection(system, S) -> list[IdealHandle]:
    """Write the kernel ideal of S as an intersection of canonical ideals,
    one per orbit representative covering S."""
    if not is_invariant_closed(system, S):
        raise UnsupportedQueryError("decomposition needs an invariant closed set")
    out = []
    for x in cover_representatives(system, S):
        if is_periodic(system, x):
            out.append(canonical_qx(system, x))
        else:
            out.append(canonical_px(system, x))
    return out


@dataclass(frozen=True, eq=False)
class MinimalityReport:
    minimal: bool
    invariant_closed_set_count: int | None  # None means infinitely many
    well_behaved_closed_ideal_count: int | None
    sets: tuple | None


def minimality_dichotomy(system) -> MinimalityReport:
    """Count invariant closed sets (equivalently, well behaved closed ideals)
    and report whether the system is minimal, i.e. the count is two."""
    sets = enumerate_invariant_closed_sets(system)
    if sets is None:
        return MinimalityReport(is_minimal(system), None, None, None)
    count = len(sets)
    listed = tuple(sets) if count <= 64 else None
    minimal = count == 2
    assert minimal == is_minimal(system)
    return MinimalityReport(minimal, count, count, listed)
