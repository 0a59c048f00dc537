"""Parsers for system configs, element expressions and ideal literals.

Config grammar (line oriented, braces for nesting):

    config   : stmt*
    stmt     : "system" sysdecl | "mode" ("exact" | "float") | "tolerance" NUM
    sysdecl  : kind "{" fields "}"
    kind     : "finite" | "shift" | "rotation" | "union"
    fields   : finite  -> "points" INT , "sigma" INT+
               rotation-> "theta" ("surd" INT INT INT INT | NUM) ,
                          "irrational" ("true"|"false")
               union   -> ("component" sysdecl)+

Element expression grammar:

    expr    : term (("+" | "-") term)*
    term    : factor ("*" factor)*
    factor  : atom ("^" SINT)?
    atom    : scalar | funcLit | "d" | "adj" "(" expr ")" | "E" "(" expr ")"
            | "(" expr ")"
    funcLit : "f{" point ":" scalar ("," point ":" scalar)* "}"      finite
            | "sh{" "inf" ":" scalar ("," INT ":" scalar)* "}"       shift
            | "tp{" INT ":" scalar ("," INT ":" scalar)* "}"         rotation
            | "u[" funcLit (";" funcLit)* "]"                        union
    scalar  : complex literal with rational or decimal parts, e.g. 2, -1/2,
              0.25, 3i, 1+2i, -1/3-1/4i

Ideal literals: Px(point), Pxl(point, scalar), Qx(point), K(set),
meet(ideal, ...), gen(expr, ...).
Set literals: all | empty | circle | {points} | co{ints} | u[set; ...].
Torus literals: t[entry; ...] with entry = point "*"? ":" lamdesc and
lamdesc = full | roots{scalar, ...} | poly{scalar, ...}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import scalars as sc
from .algebra import Element, alg_add, alg_mul, alg_adj, alg_scale, alg_sub, \
    delta_power, element, expectation, from_func, unit
from .dynsys import (
    INF, CircleSet, FiniteSet, FiniteSystem, Point, RotationSystem, ShiftSet,
    ShiftSystem, Surd, UnionSet, UnionSystem, validate_point,
)
from .errors import ParseError, UnsupportedQueryError
from .funcspace import Func, f_compose_sigma, zero_func
from .reps_ideals import (
    GeneratedIdeal, IntersectionIdeal, KernelIdeal, PxIdeal, PxLambdaIdeal,
    QxIdeal, canonical_px, canonical_px_lambda, canonical_qx, generated_ideal,
    intersection_ideal, kernel_ideal,
)
from .transform import FiniteRoots, FullCircle, PolynomialRoots, TorusEntry, TorusSubset


# ---------------------------------------------------------------------------
# Tokenizer

_PUNCT = "{}()[]^*+-:,;/"


@dataclass(frozen=True)
class Token:
    kind: str  # "num" | "name" | punct literal | "end"
    text: str
    line: int
    col: int


def _tokenize(src: str) -> list[Token]:
    toks = []
    line, col = 1, 1
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and src[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch.isdigit() or (ch == "." and i + 1 < n and src[i + 1].isdigit()):
            j = i
            seen_dot = seen_exp = False
            while j < n:
                c = src[j]
                if c.isdigit():
                    j += 1
                elif c == "." and not seen_dot and not seen_exp:
                    seen_dot = True
                    j += 1
                elif c in "eE" and not seen_exp and j + 1 < n and \
                        (src[j + 1].isdigit() or src[j + 1] in "+-" and j + 2 < n and src[j + 2].isdigit()):
                    seen_exp = True
                    j += 1
                    if src[j] in "+-":
                        j += 1
                else:
                    break
            text = src[i:j]
            toks.append(Token("num", text, line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            toks.append(Token("name", src[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in _PUNCT:
            toks.append(Token(ch, ch, line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    toks.append(Token("end", "", line, col))
    return toks


class _Stream:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.pos = 0

    def peek(self) -> Token:
        return self.toks[self.pos]

    def next(self) -> Token:
        t = self.toks[self.pos]
        if t.kind != "end":
            self.pos += 1
        return t

    def expect(self, kind: str, what: str | None = None) -> Token:
        t = self.peek()
        if t.kind != kind:
            raise ParseError(
                f"found {t.text!r}" if t.kind != "end" else "unexpected end of input",
                t.line, t.col, expected=(what or kind,),
            )
        return self.next()

    def accept(self, kind: str) -> Token | None:
        if self.peek().kind == kind:
            return self.next()
        return None

    def expect_name(self, *names: str) -> Token:
        t = self.peek()
        if t.kind != "name" or (names and t.text not in names):
            raise ParseError(
                f"found {t.text!r}" if t.kind != "end" else "unexpected end of input",
                t.line, t.col, expected=names or ("identifier",),
            )
        return self.next()

    def at_end(self) -> bool:
        return self.peek().kind == "end"


# ---------------------------------------------------------------------------
# System configs


@dataclass(frozen=True, eq=False)
class SystemConfig:
    system: object
    mode: str  # "exact" | "float"
    tolerance: float


def parse_config(text: str) -> SystemConfig:
    s = _Stream(text)
    system = None
    mode = "float"
    tol = 1e-9
    while not s.at_end():
        key = s.expect_name("system", "mode", "tolerance")
        if key.text == "system":
            system = _parse_sysdecl(s)
        elif key.text == "mode":
            mode = s.expect_name("exact", "float").text
        else:
            tol = float(_parse_number(s))
    if system is None:
        t = s.peek()
        raise ParseError("config declares no system", t.line, t.col)
    if mode == "exact" and _has_rotation(system):
        t = s.peek()
        raise ParseError("exact mode is not available with rotation components",
                         t.line, t.col)
    return SystemConfig(system, mode, tol)


def _has_rotation(system) -> bool:
    if isinstance(system, RotationSystem):
        return True
    if isinstance(system, UnionSystem):
        return any(_has_rotation(c) for c in system.components)
    return False


def _parse_number(s: _Stream):
    neg = s.accept("-") is not None
    t = s.expect("num", "number")
    if "." in t.text or "e" in t.text or "E" in t.text:
        v = float(t.text)
        return -v if neg else v
    if s.accept("/"):
        den = s.expect("num", "integer denominator")
        if "." in den.text or int(den.text) == 0:
            raise ParseError("fraction denominator must be a nonzero integer",
                             den.line, den.col)
        v = Fraction(int(t.text), int(den.text))
        return -v if neg else v
    v = int(t.text)
    return -v if neg else v


def _parse_sysdecl(s: _Stream):
    kind = s.expect_name("finite", "shift", "rotation", "union")
    s.expect("{")
    if kind.text == "finite":
        points = None
        sigma = None
        while not s.accept("}"):
            field = s.expect_name("points", "sigma")
            if field.text == "points":
                points = int(s.expect("num", "point count").text)
            else:
                sigma = []
                while s.peek().kind == "num":
                    sigma.append(int(s.next().text))
        if points is None or sigma is None:
            t = s.peek()
            raise ParseError("finite system needs points and sigma", t.line, t.col)
        return FiniteSystem(points, tuple(sigma))
    if kind.text == "shift":
        s.expect("}")
        return ShiftSystem()
    if kind.text == "rotation":
        theta = None
        irrational = True
        while not s.accept("}"):
            field = s.expect_name("theta", "irrational")
            if field.text == "theta":
                if s.peek().kind == "name" and s.peek().text == "surd":
                    s.next()
                    vals = [int(_parse_number(s)) for _ in range(4)]
                    theta = Surd(*vals)
                else:
                    theta = _parse_number(s)
            else:
                irrational = s.expect_name("true", "false").text == "true"
        if theta is None:
            t = s.peek()
            raise ParseError("rotation system needs theta", t.line, t.col)
        if not irrational and isinstance(theta, Surd):
            t = s.peek()
            raise ParseError("a surd angle declares an irrational rotation", t.line, t.col)
        if not isinstance(theta, Surd):
            theta = Fraction(theta) if not irrational else float(theta)
        return RotationSystem(theta, irrational)
    comps = []
    while not s.accept("}"):
        s.expect_name("component")
        comps.append(_parse_sysdecl(s))
    return UnionSystem(tuple(comps))


def render_config(cfg: SystemConfig) -> str:
    lines = [_render_system(cfg.system, "")]
    lines.append(f"mode {cfg.mode}")
    lines.append(f"tolerance {fmt_real(cfg.tolerance)}")
    return "\n".join(lines) + "\n"


def _render_system(system, indent, head="system") -> str:
    pad = indent
    if isinstance(system, FiniteSystem):
        sig = " ".join(str(i) for i in system.sigma)
        return f"{pad}{head} finite {{ points {system.size} sigma {sig} }}"
    if isinstance(system, ShiftSystem):
        return f"{pad}{head} shift {{ }}"
    if isinstance(system, RotationSystem):
        if isinstance(system.theta, Surd):
            th = f"surd {system.theta.p} {system.theta.q} {system.theta.r} {system.theta.d}"
        else:
            th = str(system.theta)
        flag = "true" if system.irrational else "false"
        return f"{pad}{head} rotation {{ theta {th} irrational {flag} }}"
    inner = "\n".join(_render_system(c, indent + "  ", "component")
                      for c in system.components)
    return f"{pad}{head} union {{\n{inner}\n{pad}}}"


# ---------------------------------------------------------------------------
# Scalars and points


def parse_scalar_text(text: str, exact: bool):
    s = _Stream(text)
    v = _parse_scalar(s, exact)
    if not s.at_end():
        t = s.peek()
        raise ParseError("trailing input after scalar", t.line, t.col)
    return v


def _parse_scalar(s: _Stream, exact: bool):
    total = _parse_signed_part(s, exact)
    while s.peek().kind in "+-":
        total = total + _parse_signed_part(s, exact)
    return total


def _parse_signed_part(s: _Stream, exact: bool):
    sign = 1
    if s.accept("-"):
        sign = -1
    else:
        s.accept("+")
    t = s.peek()
    if t.kind == "name" and t.text == "i":
        s.next()
        return sc.QComplex(Fraction(0), Fraction(sign)) if exact else complex(0, sign)
    num = s.expect("num", "number")
    if "." in num.text or "e" in num.text or "E" in num.text:
        if exact:
            raise ParseError("decimal literal in exact mode", num.line, num.col)
        val = float(num.text)
    else:
        val = Fraction(int(num.text)) if exact else float(int(num.text))
    if s.accept("/"):
        den = s.expect("num", "denominator")
        if "." in den.text or int(den.text) == 0:
            raise ParseError("fraction denominator must be a nonzero integer",
                             den.line, den.col)
        val = val / (Fraction(int(den.text)) if exact else float(int(den.text)))
    if s.peek().kind == "name" and s.peek().text == "i":
        s.next()
        return sc.QComplex(Fraction(0), sign * val) if exact else complex(0, sign * val)
    return sc.QComplex(sign * val, Fraction(0)) if exact else complex(sign * val, 0)


def parse_point(text: str, system) -> Point:
    s = _Stream(text)
    x = _parse_point(s, system)
    if not s.at_end():
        t = s.peek()
        raise ParseError("trailing input after point", t.line, t.col)
    return x


def _parse_point(s: _Stream, system) -> Point:
    path = []
    sys_cursor = system
    while s.peek().kind == "name" and s.peek().text.startswith("c") \
            and s.peek().text[1:].isdigit():
        idx = int(s.next().text[1:])
        s.expect(":")
        if not isinstance(sys_cursor, UnionSystem):
            t = s.peek()
            raise ParseError("component prefix on a non-union system", t.line, t.col)
        path.append(idx)
        sys_cursor = sys_cursor.components[idx]
    t = s.peek()
    if t.kind == "name" and t.text == "inf":
        s.next()
        coord: object = INF
    else:
        v = _parse_number(s)
        if isinstance(sys_cursor, RotationSystem):
            coord = v % 1 if not isinstance(v, float) else v % 1.0
        else:
            if isinstance(v, (float, Fraction)) and not float(v).is_integer():
                raise ParseError("integer point expected", t.line, t.col)
            coord = int(v)
    x = Point(coord, tuple(path))
    validate_point(system, x)
    return x


def render_point(x: Point) -> str:
    base = "inf" if x.coord is INF else (
        str(x.coord) if not isinstance(x.coord, float) else fmt_real(x.coord)
    )
    for i in reversed(x.path):
        base = f"c{i}:{base}"
    return base


# ---------------------------------------------------------------------------
# Element expressions


def parse_elem(text: str, system, exact: bool = False) -> Element:
    s = _Stream(text)
    e = _parse_expr(s, system, exact)
    if not s.at_end():
        t = s.peek()
        raise ParseError("trailing input after expression", t.line, t.col,
                         expected=("+", "-", "*", "^", "end of input"))
    return e


def _parse_expr(s: _Stream, system, exact) -> Element:
    e = _parse_term(s, system, exact)
    while True:
        if s.accept("+"):
            e = alg_add(e, _parse_term(s, system, exact))
        elif s.accept("-"):
            e = alg_sub(e, _parse_term(s, system, exact))
        else:
            return e


def _parse_term(s: _Stream, system, exact) -> Element:
    e = _parse_factor(s, system, exact)
    while s.accept("*"):
        e = alg_mul(e, _parse_factor(s, system, exact))
    return e


def _parse_factor(s: _Stream, system, exact) -> Element:
    a = _parse_atom(s, system, exact)
    if s.accept("^"):
        neg = s.accept("-") is not None
        t = s.expect("num", "integer exponent")
        if "." in t.text:
            raise ParseError("integer exponent expected", t.line, t.col)
        n = int(t.text)
        if neg:
            inv = _try_invert(a)
            if inv is None:
                raise ParseError("negative power of a non-invertible element",
                                 t.line, t.col)
            a = inv
        out = unit(system, exact)
        for _ in range(n):
            out = alg_mul(out, a)
        return out
    return a


def _try_invert(a: Element) -> Element | None:
    if len(a.coeffs) != 1:
        return None
    (k, f), = a.coeffs.items()
    inv = _func_pointwise_inverse(f)
    if inv is None:
        return None
    # (f d^k)^-1 = d^-k f^-1 = (f^-1 o sigma^k) d^-k
    return Element(a.system, {-k: f_compose_sigma(inv, k)})


def _func_pointwise_inverse(f: Func) -> Func | None:
    system = f.system
    if isinstance(system, FiniteSystem):
        if any(sc.is_zero(v) for v in f.data):
            return None
        one = sc.one_like(f.exact)
        return Func(system, tuple(one / v for v in f.data))
    if isinstance(system, ShiftSystem):
        v, e = f.data
        if sc.is_zero(v) or any(sc.is_zero(w) for w in e.values()):
            return None
        one = sc.one_like(f.exact)
        return Func(system, (one / v, {n: one / w for n, w in e.items()}))
    if isinstance(system, RotationSystem):
        if len(f.data) != 1:
            return None
        (k, c), = f.data.items()
        return Func(system, {-k: 1.0 / c})
    parts = [_func_pointwise_inverse(p) for p in f.data]
    if any(p is None for p in parts):
        return None
    return Func(system, tuple(parts))


def _parse_atom(s: _Stream, system, exact) -> Element:
    t = s.peek()
    if t.kind == "(":
        s.next()
        e = _parse_expr(s, system, exact)
        s.expect(")")
        return e
    if t.kind == "num" or t.kind in "+-" or (t.kind == "name" and t.text == "i"):
        v = _parse_signed_part(s, exact)
        return alg_scale(v, unit(system, exact))
    if t.kind == "name":
        if t.text == "d":
            s.next()
            return delta_power(system, 1, exact)
        if t.text == "adj":
            s.next()
            s.expect("(")
            e = _parse_expr(s, system, exact)
            s.expect(")")
            return alg_adj(e)
        if t.text == "E":
            s.next()
            s.expect("(")
            e = _parse_expr(s, system, exact)
            s.expect(")")
            return from_func(expectation(e))
        if t.text in ("f", "sh", "tp", "u"):
            f = _parse_func_literal(s, system, exact)
            return from_func(f)
    raise ParseError(
        f"found {t.text!r}" if t.kind != "end" else "unexpected end of input",
        t.line, t.col,
        expected=("scalar", "function literal", "d", "adj", "E", "("),
    )


def _parse_func_literal(s: _Stream, system, exact) -> Func:
    t = s.expect_name("f", "sh", "tp", "u")
    if t.text == "u":
        if not isinstance(system, UnionSystem):
            raise ParseError("union literal on a non-union system", t.line, t.col)
        s.expect("[")
        parts = []
        for i, comp in enumerate(system.components):
            if i:
                s.expect(";")
            if s.peek().kind == "num" and s.peek().text == "0" and \
                    s.toks[s.pos + 1].kind in (";", "]"):
                s.next()
                parts.append(zero_func(comp, exact))
            else:
                parts.append(_parse_func_literal(s, comp, exact))
        s.expect("]")
        return Func(system, tuple(parts))
    if t.text == "f":
        if not isinstance(system, FiniteSystem):
            raise ParseError("finite literal on a non-finite system", t.line, t.col)
        entries = _parse_brace_entries(s, exact, int_keys=True)
        vals = [sc.zero_like(exact)] * system.size
        for k, v in entries:
            if not 0 <= k < system.size:
                raise ParseError(f"point {k} outside the system", t.line, t.col)
            vals[k] = v
        return Func(system, tuple(vals))
    if t.text == "sh":
        if not isinstance(system, ShiftSystem):
            raise ParseError("shift literal on a non-shift system", t.line, t.col)
        s.expect("{")
        s.expect_name("inf")
        s.expect(":")
        v_inf = _parse_scalar(s, exact)
        exc = {}
        while s.accept(","):
            k = int(_parse_number(s))
            s.expect(":")
            exc[k] = _parse_scalar(s, exact)
        s.expect("}")
        return Func(system, (v_inf, exc))
    if not isinstance(system, RotationSystem):
        raise ParseError("trig literal on a non-rotation system", t.line, t.col)
    entries = _parse_brace_entries(s, False, int_keys=True)
    return Func(system, {k: v for k, v in entries})


def _parse_brace_entries(s: _Stream, exact, int_keys: bool):
    s.expect("{")
    out = []
    if s.accept("}"):
        return out
    while True:
        k = int(_parse_number(s))
        s.expect(":")
        v = _parse_scalar(s, exact)
        out.append((k, v))
        if s.accept("}"):
            return out
        s.expect(",")


# ---------------------------------------------------------------------------
# Closed set literals


def parse_set(text: str, system):
    s = _Stream(text)
    S = _parse_set(s, system)
    if not s.at_end():
        t = s.peek()
        raise ParseError("trailing input after set", t.line, t.col)
    return S


def _parse_set(s: _Stream, system):
    from .dynsys import empty_set, whole_space
    t = s.peek()
    if t.kind == "name" and t.text == "all":
        s.next()
        return whole_space(system)
    if t.kind == "name" and t.text == "empty":
        s.next()
        return empty_set(system)
    if t.kind == "name" and t.text == "circle":
        if not isinstance(system, RotationSystem):
            raise ParseError("circle literal on a non-rotation system", t.line, t.col)
        s.next()
        return CircleSet(True)
    if t.kind == "name" and t.text == "co":
        if not isinstance(system, ShiftSystem):
            raise ParseError("cofinite literal on a non-shift system", t.line, t.col)
        s.next()
        s.expect("{")
        ints = set()
        if not s.accept("}"):
            while True:
                ints.add(int(_parse_number(s)))
                if s.accept("}"):
                    break
                s.expect(",")
        return ShiftSet(frozenset(ints), True, True)
    if t.kind == "name" and t.text == "u":
        if not isinstance(system, UnionSystem):
            raise ParseError("union literal on a non-union system", t.line, t.col)
        s.next()
        s.expect("[")
        parts = []
        for i, comp in enumerate(system.components):
            if i:
                s.expect(";")
            parts.append(_parse_set(s, comp))
        s.expect("]")
        return UnionSet(tuple(parts))
    if t.kind == "{":
        s.next()
        if isinstance(system, FiniteSystem):
            pts = set()
            if not s.accept("}"):
                while True:
                    pts.add(int(_parse_number(s)))
                    if s.accept("}"):
                        break
                    s.expect(",")
            for i in pts:
                if not 0 <= i < system.size:
                    raise ParseError(f"point {i} outside the system", t.line, t.col)
            return FiniteSet(frozenset(pts))
        if isinstance(system, ShiftSystem):
            ints = set()
            has_inf = False
            if not s.accept("}"):
                while True:
                    if s.peek().kind == "name" and s.peek().text == "inf":
                        s.next()
                        has_inf = True
                    else:
                        ints.add(int(_parse_number(s)))
                    if s.accept("}"):
                        break
                    s.expect(",")
            return ShiftSet(frozenset(ints), has_inf)
        if isinstance(system, RotationSystem):
            turns = []
            if not s.accept("}"):
                while True:
                    v = _parse_number(s)
                    turns.append(Fraction(v) % 1 if not isinstance(v, float) else v % 1.0)
                    if s.accept("}"):
                        break
                    s.expect(",")
            return CircleSet(False, tuple(turns))
        raise ParseError("brace set literal on a union system needs u[...]",
                         t.line, t.col)
    raise ParseError(
        f"found {t.text!r}" if t.kind != "end" else "unexpected end of input",
        t.line, t.col, expected=("all", "empty", "circle", "co", "u", "{"),
    )


# ---------------------------------------------------------------------------
# Ideal literals


def parse_ideal(text: str, system, exact: bool = False):
    s = _Stream(text)
    I = _parse_ideal(s, system, exact)
    if not s.at_end():
        t = s.peek()
        raise ParseError("trailing input after ideal", t.line, t.col)
    return I


def _parse_ideal(s: _Stream, system, exact):
    t = s.expect_name("Px", "Pxl", "Qx", "K", "meet", "gen")
    s.expect("(")
    if t.text == "Px":
        x = _parse_point(s, system)
        s.expect(")")
        return canonical_px(system, x)
    if t.text == "Pxl":
        x = _parse_point(s, system)
        s.expect(",")
        lam = _parse_scalar(s, exact)
        s.expect(")")
        return canonical_px_lambda(system, x, lam)
    if t.text == "Qx":
        x = _parse_point(s, system)
        s.expect(")")
        return canonical_qx(system, x)
    if t.text == "K":
        S = _parse_set(s, system)
        s.expect(")")
        return kernel_ideal(system, S)
    if t.text == "meet":
        parts = [_parse_ideal(s, system, exact)]
        while s.accept(","):
            parts.append(_parse_ideal(s, system, exact))
        s.expect(")")
        return intersection_ideal(system, parts)
    gens = [_parse_expr(s, system, exact)]
    while s.accept(","):
        gens.append(_parse_expr(s, system, exact))
    s.expect(")")
    return generated_ideal(system, gens)


# ---------------------------------------------------------------------------
# Torus subset literals


def parse_torus(text: str, system, exact: bool = False) -> TorusSubset:
    s = _Stream(text)
    s.expect_name("t")
    s.expect("[")
    entries = []
    if not s.accept("]"):
        while True:
            x = _parse_point(s, system)
            closure = s.accept("*") is not None
            s.expect(":")
            entries.append(TorusEntry(x, _parse_lamdesc(s, exact), use_closure=closure))
            if s.accept("]"):
                break
            s.expect(";")
    if not s.at_end():
        t = s.peek()
        raise ParseError("trailing input after torus set", t.line, t.col)
    return TorusSubset(system, tuple(entries))


def _parse_lamdesc(s: _Stream, exact):
    t = s.expect_name("full", "roots", "poly")
    if t.text == "full":
        return FullCircle()
    s.expect("{")
    vals = []
    if not s.accept("}"):
        while True:
            vals.append(complex(_parse_scalar(s, False)))
            if s.accept("}"):
                break
            s.expect(",")
    if t.text == "roots":
        return FiniteRoots(tuple(vals))
    return PolynomialRoots(tuple(vals))


# ---------------------------------------------------------------------------
# Rendering (canonical, reparseable forms)


def fmt_real(v) -> str:
    if isinstance(v, Fraction):
        return str(v)
    f = float(v)
    if f == int(f) and abs(f) < 1e15:
        return str(int(f))
    return f"{f:.12g}"


def render_scalar(z) -> str:
    if sc.is_exact(z):
        re, im = z.re, z.im
    else:
        z = complex(z)
        re, im = z.real, z.imag
    re_s, im_s = fmt_real(re), fmt_real(im)
    if im == 0:
        return re_s
    if re == 0:
        return f"{im_s}i"
    sign = "+" if not im_s.startswith("-") else ""
    return f"{re_s}{sign}{im_s}i"


def render_func(f: Func) -> str:
    system = f.system
    if isinstance(system, FiniteSystem):
        inner = ",".join(f"{i}:{render_scalar(v)}" for i, v in enumerate(f.data))
        return "f{" + inner + "}"
    if isinstance(system, ShiftSystem):
        v, e = f.data
        parts = [f"inf:{render_scalar(v)}"]
        parts.extend(f"{n}:{render_scalar(e[n])}" for n in sorted(e))
        return "sh{" + ",".join(parts) + "}"
    if isinstance(system, RotationSystem):
        if not f.data:
            return "tp{0:0}"
        inner = ",".join(f"{k}:{render_scalar(f.data[k])}" for k in sorted(f.data))
        return "tp{" + inner + "}"
    return "u[" + "; ".join(render_func(p) for p in f.data) + "]"


def render_element(a: Element) -> str:
    """Canonical form: function literals times powers of d, ascending index."""
    if not a.coeffs:
        return "0"
    parts = []
    for n in a.support():
        lit = render_func(a.coeffs[n])
        if n == 0:
            parts.append(lit)
        elif n == 1:
            parts.append(f"{lit}*d")
        else:
            parts.append(f"{lit}*d^{n}")
    return " + ".join(parts)


def render_set(S) -> str:
    if isinstance(S, FiniteSet):
        return "{" + ",".join(str(i) for i in sorted(S.points)) + "}"
    if isinstance(S, ShiftSet):
        if S.cofinite:
            return "co{" + ",".join(str(i) for i in sorted(S.ints)) + "}"
        items = (["inf"] if S.has_inf else []) + [str(i) for i in sorted(S.ints)]
        return "{" + ",".join(items) + "}"
    if isinstance(S, CircleSet):
        if S.whole:
            return "circle"
        return "{" + ",".join(fmt_real(t) for t in S.turns) + "}"
    return "u[" + "; ".join(render_set(p) for p in S.parts) + "]"


def render_ideal(I) -> str:
    if isinstance(I, PxIdeal):
        return f"Px({render_point(I.x)})"
    if isinstance(I, PxLambdaIdeal):
        return f"Pxl({render_point(I.x)}, {render_scalar(I.lam)})"
    if isinstance(I, QxIdeal):
        return f"Qx({render_point(I.x)})"
    if isinstance(I, KernelIdeal):
        return f"K({render_set(I.subset)})"
    if isinstance(I, IntersectionIdeal):
        return "meet(" + ", ".join(render_ideal(p) for p in I.parts) + ")"
    if isinstance(I, GeneratedIdeal):
        return "gen(" + ", ".join(render_element(g) for g in I.gens) + ")"
    raise UnsupportedQueryError("cannot render this handle")


def render_lamdesc(ls) -> str:
    if isinstance(ls, FullCircle):
        return "full"
    if isinstance(ls, FiniteRoots):
        return "roots{" + ",".join(render_scalar(r) for r in ls.roots) + "}"
    return "poly{" + ",".join(render_scalar(c) for c in ls.coeffs) + "}"


def render_torus(T: TorusSubset) -> str:
    entries = []
    for e in T.entries:
        mark = "*" if e.use_closure else ""
        entries.append(f"{render_point(e.point)}{mark}: {render_lamdesc(e.lamset)}")
    return "t[" + "; ".join(entries) + "]"
