"""Finite transformations of SL(3,O) acting on the Jordan algebra.

The 135 generators are the 45 basic 2x2 transformations (9 boosts, 15
rotations, 21 transverse rotations recombined into the A/G/S classes) embedded
at each of the three type positions.  Every generator acts by a nest of
conjugations chi -> M(...(M1 chi M1†)...)M†, with matrix entries drawn from a
single complex subalgebra of O so the nest is well defined.

Entries are symbolic in the parameter alpha and evaluated through a pluggable
scalar backend: floats for finite alpha, DualScalar for d/dalpha at 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .jordan import JordanElement, from_matrix, matmul, to_matrix
from .octonion import (DISPLAY, DISPLAY_TO_NAME, IMAGINARY_UNITS, UNIT_INDEX,
                       Octonion, _AGS_PAIRS)


class IllegalLabel(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorLabel:
    """One of the 135 generators.

    category "B" or "R": plane is a pair over {t, x, z} + imaginary units.
    category "A", "G", "S": axis is an imaginary unit; plane is None.
    """
    category: str
    type_index: int
    plane: Optional[tuple[str, str]] = None
    axis: Optional[str] = None

    def __str__(self) -> str:
        return format_label(self)


def _disp(name: str) -> str:
    return DISPLAY.get(name, name)


def format_label(label: GeneratorLabel) -> str:
    if label.category in ("A", "G", "S"):
        core = f"{label.category}:{_disp(label.axis)}"
    else:
        core = f"{label.category}:{label.plane[0]},{_disp(label.plane[1])}"
    if label.type_index != 1:
        core += f":{label.type_index}"
    return core


def parse_label(text: str) -> GeneratorLabel:
    parts = text.strip().split(":")
    if len(parts) not in (2, 3):
        raise IllegalLabel(f"bad label {text!r}")
    cat = parts[0]
    type_index = 1
    if len(parts) == 3:
        try:
            type_index = int(parts[2])
        except ValueError:
            raise IllegalLabel(f"bad type index in {text!r}") from None
    if type_index not in (1, 2, 3):
        raise IllegalLabel(f"type index out of range in {text!r}")

    def unit_of(s: str) -> str:
        s = DISPLAY_TO_NAME.get(s, s)
        if s not in IMAGINARY_UNITS:
            raise IllegalLabel(f"unknown unit {s!r} in {text!r}")
        return s

    if cat in ("A", "G", "S"):
        label = GeneratorLabel(cat, type_index, axis=unit_of(parts[1]))
    elif cat in ("B", "R"):
        names = parts[1].split(",")
        if len(names) != 2:
            raise IllegalLabel(f"bad plane in {text!r}")
        plane = tuple(n if n in ("t", "x", "z") else unit_of(n) for n in names)
        label = GeneratorLabel(cat, type_index, plane=plane)
    else:
        raise IllegalLabel(f"unknown category {cat!r}")
    validate_label(label)
    return label


_B_PLANES = [("t", "z"), ("t", "x")] + [("t", q) for q in IMAGINARY_UNITS]
_R_PLANES = [("x", "z")] + [("x", q) for q in IMAGINARY_UNITS] + \
            [("z", q) for q in IMAGINARY_UNITS]


def validate_label(label: GeneratorLabel) -> None:
    ok = ((label.category == "B" and label.plane in _B_PLANES)
          or (label.category == "R" and label.plane in _R_PLANES)
          or (label.category in ("A", "G", "S") and label.axis in IMAGINARY_UNITS))
    if not ok or label.type_index not in (1, 2, 3):
        raise IllegalLabel(f"illegal label {label!r}")


def all_labels() -> list[GeneratorLabel]:
    """The 135 generator labels in canonical order."""
    out = []
    for t in (1, 2, 3):
        for plane in _B_PLANES:
            out.append(GeneratorLabel("B", t, plane=plane))
        for plane in _R_PLANES:
            out.append(GeneratorLabel("R", t, plane=plane))
        for cat in ("A", "G", "S"):
            for q in IMAGINARY_UNITS:
                out.append(GeneratorLabel(cat, t, axis=q))
    return out


# ---------------------------------------------------------------------------
# scalar backends

@dataclass(frozen=True)
class DualScalar:
    """value + derivative at alpha = 0 (forward-mode, first order)."""
    val: Fraction
    der: Fraction

    @staticmethod
    def lift(x) -> "DualScalar":
        return x if isinstance(x, DualScalar) else DualScalar(Fraction(x), Fraction(0))

    def __add__(self, o):
        o = DualScalar.lift(o)
        return DualScalar(self.val + o.val, self.der + o.der)

    __radd__ = __add__

    def __sub__(self, o):
        o = DualScalar.lift(o)
        return DualScalar(self.val - o.val, self.der - o.der)

    def __rsub__(self, o):
        return DualScalar.lift(o) - self

    def __mul__(self, o):
        o = DualScalar.lift(o)
        return DualScalar(self.val * o.val, self.val * o.der + self.der * o.val)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = Fraction(o)
        return DualScalar(self.val / o, self.der / o)

    def __neg__(self):
        return DualScalar(-self.val, -self.der)

    def __bool__(self):
        return bool(self.val) or bool(self.der)

    def __eq__(self, o):
        o = DualScalar.lift(o) if isinstance(o, (int, Fraction)) else o
        return isinstance(o, DualScalar) and self.val == o.val and self.der == o.der


class FloatBackend:
    """Evaluates entry terms at a concrete float alpha."""

    def __init__(self, alpha: float):
        self.alpha = float(alpha)
        self.zero = 0.0

    def term(self, kind: str, k: Fraction, coeff: Fraction) -> float:
        c, x = float(coeff), float(k) * self.alpha
        if kind == "const":
            return c
        if kind == "cos":
            return c * math.cos(x)
        if kind == "sin":
            return c * math.sin(x)
        if kind == "cosh":
            return c * math.cosh(x)
        if kind == "sinh":
            return c * math.sinh(x)
        if kind == "exp":
            return c * math.exp(x)
        raise AssertionError(kind)

    def lift(self, x):
        return float(x)


class DualBackend:
    """Evaluates entry terms as (value, d/dalpha) at alpha = 0."""

    def __init__(self):
        self.zero = DualScalar(Fraction(0), Fraction(0))

    def term(self, kind: str, k: Fraction, coeff: Fraction) -> DualScalar:
        c = Fraction(coeff)
        if kind in ("const", "cos", "cosh"):
            return DualScalar(c, Fraction(0))
        if kind in ("sin", "sinh"):
            return DualScalar(Fraction(0), c * k)
        if kind == "exp":
            return DualScalar(c, c * k)
        raise AssertionError(kind)

    def lift(self, x):
        return DualScalar.lift(x)


# ---------------------------------------------------------------------------
# symbolic matrices

# A matrix entry is a tuple of terms (kind, k, unit_index, coeff): the entry
# value is sum over terms of coeff * kind(k * alpha) * e_unit.

@dataclass(frozen=True)
class ParamMatrix:
    entries: tuple  # 3x3 nested tuples of term tuples

    def evaluate(self, backend) -> list[list[Octonion]]:
        out = []
        for i in range(3):
            row = []
            for j in range(3):
                coeffs = [backend.zero] * 8
                for kind, k, unit, coeff in self.entries[i][j]:
                    coeffs[unit] = coeffs[unit] + backend.term(kind, k, coeff)
                row.append(Octonion(coeffs))
            out.append(row)
        return out


_ONE = (("const", Fraction(0), 0, Fraction(1)),)
_EMPTY = ()


def _scale_terms(terms, angle: Fraction):
    """Replace alpha by angle*alpha inside every term."""
    return tuple((kind, k * angle, unit, coeff) for kind, k, unit, coeff in terms)


def _core_stages(category: str, plane: tuple[str, str], angle: Fraction = Fraction(1)):
    """2x2 stage matrices (application order) for a basic transformation."""
    h = Fraction(1, 2)

    def t(kind, k, unit, coeff=Fraction(1)):
        return (kind, k, UNIT_INDEX[unit], Fraction(coeff))

    if category == "B":
        if plane == ("t", "z"):
            stages = [[[(t("exp", h, "1"),), _EMPTY],
                       [_EMPTY, (t("exp", -h, "1"),)]]]
        elif plane == ("t", "x"):
            stages = [[[(t("cosh", h, "1"),), (t("sinh", h, "1"),)],
                       [(t("sinh", h, "1"),), (t("cosh", h, "1"),)]]]
        else:
            q = plane[1]
            stages = [[[(t("cosh", h, "1"),), (t("sinh", h, q),)],
                       [(t("sinh", h, q, -1),), (t("cosh", h, "1"),)]]]
    elif category == "R":
        if plane == ("x", "z"):
            stages = [[[(t("cos", h, "1"),), (t("sin", h, "1", -1),)],
                       [(t("sin", h, "1"),), (t("cos", h, "1"),)]]]
        elif plane[0] == "x":
            q = plane[1]
            stages = [[[(t("cos", h, "1"), t("sin", h, q)), _EMPTY],
                       [_EMPTY, (t("cos", h, "1"), t("sin", h, q, -1))]]]
        elif plane[0] == "z":
            q = plane[1]
            stages = [[[(t("cos", h, "1"),), (t("sin", h, q),)],
                       [(t("sin", h, q),), (t("cos", h, "1"),)]]]
        else:
            # transverse rotation in the plane of two imaginary units p, q:
            # M1 = -q I, then M2 = (cos(alpha/2) q + sin(alpha/2) p) I.
            # This orientation is chosen so that the tangent vector of
            # A_l matches ada = -a_il i + a_jl j - a_j jl + a_i il exactly.
            p, q = plane
            flip = (t("const", Fraction(0), q, -1),)
            turn = (t("cos", h, q), t("sin", h, p))
            stages = [[[flip, _EMPTY], [_EMPTY, flip]],
                      [[turn, _EMPTY], [_EMPTY, turn]]]
    else:
        raise IllegalLabel(f"no core for category {category}")
    return [[[_scale_terms(e, angle) for e in row] for row in stage] for stage in stages]


def _embed(stage, type_index: int) -> ParamMatrix:
    m = [[_EMPTY] * 3 for _ in range(3)]
    if type_index == 1:
        m[0][0], m[0][1] = stage[0][0], stage[0][1]
        m[1][0], m[1][1] = stage[1][0], stage[1][1]
        m[2][2] = _ONE
    elif type_index == 2:
        m[0][0] = _ONE
        m[1][1], m[1][2] = stage[0][0], stage[0][1]
        m[2][1], m[2][2] = stage[1][0], stage[1][1]
    elif type_index == 3:
        m[0][0], m[0][2] = stage[1][1], stage[1][0]
        m[1][1] = _ONE
        m[2][0], m[2][2] = stage[0][1], stage[0][0]
    else:
        raise IllegalLabel(f"bad type index {type_index}")
    return ParamMatrix(tuple(tuple(row) for row in m))


def build_sequence(label: GeneratorLabel) -> list[ParamMatrix]:
    """Stage matrices in application order (innermost first)."""
    validate_label(label)
    if label.category in ("B", "R"):
        stages = _core_stages(label.category, label.plane)
    else:
        pairs = _AGS_PAIRS[label.axis]
        angles = {"A": (Fraction(1), Fraction(-1)),
                  "G": (Fraction(1), Fraction(1), Fraction(-2)),
                  "S": (Fraction(1), Fraction(1), Fraction(1))}[label.category]
        stages = []
        for pair, angle in zip(pairs, angles):
            stages += _core_stages("R", pair, angle)
    return [_embed(stage, label.type_index) for stage in stages]


_SEQUENCE_CACHE: dict[GeneratorLabel, list[ParamMatrix]] = {}


def _sequence(label: GeneratorLabel) -> list[ParamMatrix]:
    seq = _SEQUENCE_CACHE.get(label)
    if seq is None:
        seq = _SEQUENCE_CACHE[label] = build_sequence(label)
    return seq


def _dagger(mat: list[list[Octonion]]) -> list[list[Octonion]]:
    return [[mat[j][i].conj() for j in range(3)] for i in range(3)]


def apply_backend(label: GeneratorLabel, backend, chi: JordanElement) -> JordanElement:
    lift = backend.lift
    x = JordanElement(lift(chi.p), lift(chi.m), lift(chi.n),
                      Octonion([lift(c) for c in chi.a.coeffs]),
                      Octonion([lift(c) for c in chi.b.coeffs]),
                      Octonion([lift(c) for c in chi.c.coeffs]))
    mat = to_matrix(x)
    for stage in _sequence(label):
        m = stage.evaluate(backend)
        mat = matmul(matmul(m, mat), _dagger(m))
    return from_matrix(mat)


def apply(label: GeneratorLabel, alpha: float, chi: JordanElement) -> JordanElement:
    """Float evaluation of the finite group action at parameter alpha."""
    return apply_backend(label, FloatBackend(alpha), chi)


def action_matrix(label: GeneratorLabel, alpha: float) -> list[list[float]]:
    """The finite action at parameter alpha as a 27x27 float matrix.

    Columns are the images of the coordinate basis elements, so
    action_matrix(label, alpha) @ to_coords(chi) == to_coords(apply(label, alpha, chi)).
    """
    from .jordan import from_coords, to_coords
    cols = []
    for idx in range(27):
        basis = from_coords([1.0 if i == idx else 0.0 for i in range(27)])
        cols.append([float(v) for v in to_coords(apply(label, alpha, basis))])
    return [[cols[j][i] for j in range(27)] for i in range(27)]


def apply_dual(label: GeneratorLabel, chi: JordanElement) -> JordanElement:
    """DualScalar evaluation at alpha = 0 (value = chi, derivative = tangent)."""
    return apply_backend(label, DualBackend(), chi)


def type_cycle(chi: JordanElement) -> JordanElement:
    """The discrete transformation chi -> T chi T†: (p,m,n,a,b,c) -> (n,p,m,c,a,b)."""
    return JordanElement(chi.n, chi.p, chi.m, chi.c, chi.a, chi.b)


def type_cycle_matrix() -> list[list[Octonion]]:
    z, o = Octonion.zero(), Octonion.scalar(Fraction(1))
    return [[z, z, o], [o, z, z], [z, o, z]]


def one_parameter_check(label: GeneratorLabel, alpha: float, beta: float,
                        chi: JordanElement, tol: float = 1e-9) -> bool:
    """apply(alpha) ∘ apply(beta) == apply(alpha+beta) within tol."""
    from .jordan import to_coords
    lhs = to_coords(apply(label, alpha, apply(label, beta, chi)))
    rhs = to_coords(apply(label, alpha + beta, chi))
    return max(abs(float(x) - float(y)) for x, y in zip(lhs, rhs)) < tol
