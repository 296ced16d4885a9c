"""Exact rational linear algebra over sparse and dense vectors.

Vectors are dicts index -> Fraction (zero entries omitted); dense matrices are
lists of lists of Fraction.  Everything here is deterministic and exact except
rank_mod_p, which works modulo a fixed large prime.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Optional

MOD_PRIME = (1 << 61) - 1


def vec_add(a: dict, b: dict, scale: Fraction = Fraction(1)) -> dict:
    """Return a + scale*b as a sparse vector."""
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + scale * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vec_scale(a: dict, scale: Fraction) -> dict:
    if not scale:
        return {}
    return {k: scale * v for k, v in a.items()}


class SpanBasis:
    """Incremental reduced row-echelon span of sparse vectors.

    Each inserted vector is reduced against the existing rows; surviving rows
    are kept fully reduced (each row is 1 at its own pivot and 0 at every
    other pivot).  Alongside each row we track its expression in terms of the
    originally inserted vectors, so `express` can return coefficients in the
    caller's basis.
    """

    def __init__(self) -> None:
        self.rows: list[dict] = []          # reduced vectors
        self.combos: list[dict] = []        # row -> {tag: coeff}
        self.pivots: list[Hashable] = []    # pivot index of each row
        self._pivot_of: dict = {}           # pivot index -> row number

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: dict, combo: dict) -> tuple[dict, dict]:
        vec = dict(vec)
        combo = dict(combo)
        for p in list(vec.keys()):
            r = self._pivot_of.get(p)
            if r is None:
                continue
            coeff = vec[p]
            vec = vec_add(vec, self.rows[r], -coeff)
            combo = vec_add(combo, self.combos[r], -coeff)
        return vec, combo

    def add(self, vec: dict, tag: Hashable) -> bool:
        """Insert a vector; returns True if it enlarged the span."""
        vec, combo = self._reduce(vec, {tag: Fraction(1)})
        if not vec:
            return False
        pivot = min(vec.keys(), key=_pivot_key)
        inv = Fraction(1) / Fraction(vec[pivot])
        vec = vec_scale(vec, inv)
        combo = vec_scale(combo, inv)
        # back-eliminate the new pivot from existing rows
        for r, row in enumerate(self.rows):
            c = row.get(pivot)
            if c:
                self.rows[r] = vec_add(row, vec, -c)
                self.combos[r] = vec_add(self.combos[r], combo, -c)
        self._pivot_of[pivot] = len(self.rows)
        self.rows.append(vec)
        self.combos.append(combo)
        self.pivots.append(pivot)
        return True

    def express(self, vec: dict) -> Optional[dict]:
        """Coefficients {tag: Fraction} with vec = sum coeff * original, or None."""
        residual, combo = self._reduce(vec, {})
        if residual:
            return None
        return {t: -c for t, c in combo.items() if c}

    def contains(self, vec: dict) -> bool:
        return self.express(vec) is not None


def _pivot_key(k):
    # stable ordering for heterogeneous hashable pivot indices
    return (str(type(k)), repr(k))


def rank_of(vectors: Iterable[dict]) -> int:
    sb = SpanBasis()
    for n, v in enumerate(vectors):
        sb.add(v, n)
    return sb.rank


def signature_symmetric(mat: list[list[Fraction]]) -> tuple[int, int, int]:
    """Signature (n_neg, n_pos, n_zero) of a symmetric rational matrix.

    Uses congruence transformations (Lagrange diagonalization): the returned
    counts are those of any diagonalizing congruence, by Sylvester's law.
    """
    n = len(mat)
    a = [[Fraction(mat[i][j]) for j in range(n)] for i in range(n)]
    neg = pos = zero = 0
    todo = list(range(n))
    while todo:
        # find a usable diagonal pivot
        piv = next((i for i in todo if a[i][i]), None)
        if piv is None:
            # look for an off-diagonal nonzero; fold it onto the diagonal
            found = None
            for i in todo:
                for j in todo:
                    if j != i and a[i][j]:
                        found = (i, j)
                        break
                if found:
                    break
            if found is None:
                zero += len(todo)
                break
            i, j = found
            # row/col operation: row_i += row_j (congruence) makes a[i][i] = 2a[i][j] != 0
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        d = a[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        todo.remove(piv)
        for i in todo:
            c = a[i][piv] / d
            if c:
                for k in range(n):
                    a[i][k] -= c * a[piv][k]
                for k in range(n):
                    a[k][i] -= c * a[k][piv]
    return (neg, pos, zero)


def rank_mod_p(rows: list[list[Fraction]], p: int = MOD_PRIME) -> int:
    """Rank of a dense rational matrix modulo a large prime."""
    m = []
    for row in rows:
        r = []
        for x in row:
            f = Fraction(x)
            r.append(f.numerator * pow(f.denominator, -1, p) % p)
        m.append(r)
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    col = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(nrows):
            if r != rank and m[r][col]:
                c = m[r][col]
                m[r] = [(x - c * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def solve_dense(a: list[list[Fraction]], b: list[Fraction]) -> Optional[list[Fraction]]:
    """Solve a x = b exactly (a need not be square); None if inconsistent.

    Returns one solution (free variables set to 0).
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    m = [[Fraction(a[i][j]) for j in range(ncols)] + [Fraction(b[i])] for i in range(nrows)]
    pivcols = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = Fraction(1) / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(nrows):
            if r != rank and m[r][col]:
                c = m[r][col]
                m[r] = [x - c * y for x, y in zip(m[r], m[rank])]
        pivcols.append(col)
        rank += 1
    for r in range(rank, nrows):
        if m[r][ncols]:
            return None
    x = [Fraction(0)] * ncols
    for r, col in enumerate(pivcols):
        x[col] = m[r][ncols]
    return x


def invert_dense(a: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse of a square rational matrix."""
    n = len(a)
    m = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = Fraction(1) / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                c = m[r][col]
                m[r] = [x - c * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]
