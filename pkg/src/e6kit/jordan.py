"""The exceptional Jordan algebra: hermitian 3x3 octonionic matrices.

A general element is

    chi = [[ p,    conj(a), c       ],
           [ a,    m,       conj(b) ],
           [ conj(c), b,    n       ]]

with rational diagonal (p, m, n) = (t+z, t-z, n) and octonions a, b, c.  The
flat coordinate order (Coord27) is (p, m, n, a[0..7], b[0..7], c[0..7]) with
the fixed octonion basis order inside each block.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .octonion import Octonion


@dataclass(frozen=True)
class JordanElement:
    p: object
    m: object
    n: object
    a: Octonion
    b: Octonion
    c: Octonion

    @staticmethod
    def zero() -> "JordanElement":
        z = Fraction(0)
        o = Octonion.zero()
        return JordanElement(z, z, z, o, o, o)

    @staticmethod
    def identity() -> "JordanElement":
        one = Fraction(1)
        o = Octonion.zero()
        return JordanElement(one, one, one, o, o, o)

    @staticmethod
    def diag(p, m, n) -> "JordanElement":
        o = Octonion.zero()
        return JordanElement(p, m, n, o, o, o)

    def __add__(self, other: "JordanElement") -> "JordanElement":
        return JordanElement(self.p + other.p, self.m + other.m, self.n + other.n,
                             self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: "JordanElement") -> "JordanElement":
        return JordanElement(self.p - other.p, self.m - other.m, self.n - other.n,
                             self.a - other.a, self.b - other.b, self.c - other.c)

    def scale(self, s) -> "JordanElement":
        return JordanElement(s * self.p, s * self.m, s * self.n,
                             self.a.scale(s), self.b.scale(s), self.c.scale(s))

    @property
    def t(self):
        return (self.p + self.m) / 2

    @property
    def z(self):
        return (self.p - self.m) / 2


def to_matrix(x: JordanElement) -> list[list[Octonion]]:
    """Full 3x3 octonionic matrix (private plumbing for products)."""
    sp = Octonion.scalar
    return [
        [sp(x.p), x.a.conj(), x.c],
        [x.a, sp(x.m), x.b.conj()],
        [x.c.conj(), x.b, sp(x.n)],
    ]


def matmul(xm: list[list[Octonion]], ym: list[list[Octonion]]) -> list[list[Octonion]]:
    out = []
    for i in range(3):
        row = []
        for j in range(3):
            acc = Octonion.zero()
            for k in range(3):
                if xm[i][k].is_zero() or ym[k][j].is_zero():
                    continue
                acc = acc + xm[i][k] * ym[k][j]
            row.append(acc)
        out.append(row)
    return out


def from_matrix(mat: list[list[Octonion]]) -> JordanElement:
    """Read off a hermitian matrix; the caller guarantees hermiticity."""
    return JordanElement(
        mat[0][0].real_part(), mat[1][1].real_part(), mat[2][2].real_part(),
        mat[1][0], mat[2][1], mat[0][2])


def jordan_product(x: JordanElement, y: JordanElement) -> JordanElement:
    xm, ym = to_matrix(x), to_matrix(y)
    xy, yx = matmul(xm, ym), matmul(ym, xm)
    half = Fraction(1, 2)
    sym = [[(xy[i][j] + yx[i][j]).scale(half) for j in range(3)] for i in range(3)]
    return from_matrix(sym)


def trace(x: JordanElement):
    return x.p + x.m + x.n


def sigma(x: JordanElement):
    """sigma(A) = ((tr A)^2 - tr(A∘A)) / 2."""
    t = trace(x)
    return (t * t - trace(jordan_product(x, x))) / 2


def det(x: JordanElement):
    """det chi = pmn - (p|b|^2 + m|c|^2 + n|a|^2) + 2 Re(conj(a) conj(b) conj(c))."""
    abc = (x.a.conj() * x.b.conj()) * x.c.conj()
    return (x.p * x.m * x.n
            - (x.p * x.b.norm2() + x.m * x.c.norm2() + x.n * x.a.norm2())
            + 2 * abc.real_part())


def det_trace_form(x: JordanElement):
    """det via the characteristic-equation form (Jordan powers)."""
    x2 = jordan_product(x, x)
    x3 = jordan_product(x2, x)
    t1, t2, t3 = trace(x), trace(x2), trace(x3)
    return (t3 - Fraction(3, 2) * t2 * t1 + t1 * t1 * t1 / 2) / 3


@dataclass(frozen=True)
class Vector2:
    """Hermitian 2x2 octonionic matrix [[t+z, conj(q)], [q, t-z]]."""
    tz_plus: object
    tz_minus: object
    q: Octonion

    def __add__(self, other: "Vector2") -> "Vector2":
        return Vector2(self.tz_plus + other.tz_plus,
                       self.tz_minus + other.tz_minus, self.q + other.q)


def vector2_det(v: Vector2):
    return v.tz_plus * v.tz_minus - v.q.norm2()


def lorentz_dot(a: Vector2, b: Vector2):
    """tr(A∘B) - trA trB = -(a+ b-) - (a- b+) + 2 Re(conj(a_q) b_q)."""
    cross = (a.q.conj() * b.q).real_part()
    return -(a.tz_plus * b.tz_minus) - (a.tz_minus * b.tz_plus) + 2 * cross


@dataclass(frozen=True)
class Spinor:
    top: Octonion
    bottom: Octonion


@dataclass(frozen=True)
class DualSpinor:
    left: Octonion
    right: Octonion


def spinor_square(theta: Spinor) -> Vector2:
    """theta theta† — always a null vector (det 0)."""
    return Vector2(theta.top.norm2(), theta.bottom.norm2(),
                   theta.bottom * theta.top.conj())


def vector_block(x: JordanElement) -> Vector2:
    """Upper-left 2x2 block of chi viewed as a vector."""
    return Vector2(x.p, x.m, x.a)


def spinor_block(x: JordanElement) -> Spinor:
    """Third column of chi above the diagonal: theta = (c, conj(b))."""
    return Spinor(x.c, x.b.conj())


COORD_NAMES = (
    ["p", "m", "n"]
    + [f"a_{u}" for u in ("1", "i", "j", "k", "kl", "jl", "il", "l")]
    + [f"b_{u}" for u in ("1", "i", "j", "k", "kl", "jl", "il", "l")]
    + [f"c_{u}" for u in ("1", "i", "j", "k", "kl", "jl", "il", "l")]
)


def to_coords(x: JordanElement) -> list:
    return [x.p, x.m, x.n] + list(x.a.coeffs) + list(x.b.coeffs) + list(x.c.coeffs)


def from_coords(v) -> JordanElement:
    v = list(v)
    if len(v) != 27:
        raise ValueError("Coord27 needs 27 entries")
    return JordanElement(v[0], v[1], v[2],
                         Octonion(v[3:11]), Octonion(v[11:19]), Octonion(v[19:27]))


def basis_element(k: int) -> JordanElement:
    coords = [Fraction(0)] * 27
    coords[k] = Fraction(1)
    return from_coords(coords)


def to_json_dict(x: JordanElement) -> dict:
    return {
        "p": str(Fraction(x.p)), "m": str(Fraction(x.m)), "n": str(Fraction(x.n)),
        "a": x.a.to_strings(), "b": x.b.to_strings(), "c": x.c.to_strings(),
    }


def from_json_dict(d: dict) -> JordanElement:
    return JordanElement(Fraction(d["p"]), Fraction(d["m"]), Fraction(d["n"]),
                         Octonion.from_rationals(d["a"]),
                         Octonion.from_rationals(d["b"]),
                         Octonion.from_rationals(d["c"]))
