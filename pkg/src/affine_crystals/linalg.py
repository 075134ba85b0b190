"""Exact linear algebra over Q and over a large prime field.

No floating point anywhere.  Matrices are plain lists of integer rows.  The
prime route reduces mod p = 2^31 - 1; the rational route uses fraction-free
Bareiss elimination for ranks and Fraction-based reduced echelon form for
nullspace bases (cleared to integer vectors).  Pivots are always the first
nonzero entry in column order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .cartan import RootVec

PRIME = 2**31 - 1


def mat_shape(a) -> tuple[int, int]:
    return len(a), len(a[0]) if a else 0


def mat_mul(a, b, p: int | None = None):
    rows, inner = len(a), len(b)
    cols = len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for r in range(rows):
        ar, outr = a[r], out[r]
        for t in range(inner):
            x = ar[t]
            if x:
                bt = b[t]
                for c in range(cols):
                    outr[c] += x * bt[c]
        if p is not None:
            out[r] = [v % p for v in outr]
    return out


def mat_is_zero(a) -> bool:
    return all(not v for row in a for v in row)


def rank_modp(a, p: int = PRIME) -> int:
    rows = [[v % p for v in row] for row in a]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == nrows:
            break
    return r


def nullspace_modp(a, ncols: int, p: int = PRIME):
    """Basis of the right nullspace over F_p (vectors of length ncols)."""
    rows = [[v % p for v in row] for row in a if any(v % p for v in row)]
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for c in free:
        v = [0] * ncols
        v[c] = 1
        for rr, pc in enumerate(pivots):
            v[pc] = (-rows[rr][c]) % p
        basis.append(v)
    return basis


def rank_bareiss(a) -> int:
    """Exact rank of an integer matrix over Q, fraction-free elimination."""
    m = [[int(v) for v in row] for row in a]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == nrows:
            break
    return r


def nullspace_exact(a, ncols: int):
    """Integer basis of the right nullspace over Q (denominators cleared)."""
    rows = [[Fraction(v) for v in row] for row in a if any(row)]
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c]
        rows[r] = [v / inv for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for c in free:
        v = [Fraction(0)] * ncols
        v[c] = Fraction(1)
        for rr, pc in enumerate(pivots):
            v[pc] = -rows[rr][c]
        den = lcm(*(x.denominator for x in v)) if v else 1
        basis.append([int(x * den) for x in v])
    return basis


def rank(a, p: int | None = PRIME) -> int:
    return rank_modp(a, p) if p is not None else rank_bareiss(a)


def nullspace(a, ncols: int, p: int | None = PRIME):
    return nullspace_modp(a, ncols, p) if p is not None else nullspace_exact(a, ncols)


# --------------------------------------------------------------- graded maps

@dataclass(frozen=True)
class GradedMap:
    """Homogeneous degree-``shift`` endomap of an I-graded space.

    blocks[i] maps component (i - shift) mod m into component i, so it has
    shape dims[i] x dims[(i - shift) mod m].  shift +1 is the raising
    direction (component i-1 -> i), -1 the lowering one.
    """

    shift: int
    dims: tuple[int, ...]
    blocks: tuple

    @property
    def m(self) -> int:
        return len(self.dims)

    def block_in(self, i: int):
        """The block landing in component i."""
        return self.blocks[i % self.m]

    def block_out(self, i: int):
        """The block leaving component i."""
        return self.blocks[(i + self.shift) % self.m]


def gm_zero(dims, shift: int) -> GradedMap:
    dims = tuple(dims)
    m = len(dims)
    blocks = tuple(
        tuple(tuple(0 for _ in range(dims[(i - shift) % m])) for _ in range(dims[i]))
        for i in range(m)
    )
    return GradedMap(shift, dims, blocks)


def gm_identity(dims) -> GradedMap:
    dims = tuple(dims)
    blocks = tuple(
        tuple(tuple(int(r == c) for c in range(d)) for r in range(d)) for d in dims
    )
    return GradedMap(0, dims, blocks)


def _freeze(mat) -> tuple:
    return tuple(tuple(row) for row in mat)


def gm_from_blocks(dims, shift: int, blocks) -> GradedMap:
    return GradedMap(shift, tuple(dims), tuple(_freeze(b) for b in blocks))


def gm_compose(a: GradedMap, b: GradedMap, p: int | None = None) -> GradedMap:
    """a after b; degree shifts add.

    Shapes come from dims, not from the block tuples: a 0-row block cannot
    carry its column count.
    """
    assert a.dims == b.dims
    m = a.m
    shift = a.shift + b.shift
    blocks = []
    for i in range(m):
        left = a.blocks[i]
        right = b.blocks[(i - a.shift) % m]
        rows = a.dims[i]
        mid = a.dims[(i - a.shift) % m]
        cols = a.dims[(i - shift) % m]
        out = [[0] * cols for _ in range(rows)]
        for r in range(rows):
            lrow, orow = left[r], out[r]
            for t in range(mid):
                v = lrow[t]
                if v:
                    rrow = right[t]
                    for c in range(cols):
                        orow[c] += v * rrow[c]
            if p is not None:
                out[r] = [u % p for u in orow]
        blocks.append(_freeze(out))
    return GradedMap(shift, a.dims, tuple(blocks))


def gm_power(a: GradedMap, k: int, p: int | None = None) -> GradedMap:
    out = gm_identity(a.dims)
    for _ in range(k):
        out = gm_compose(a, out, p)
    return out


def gm_is_zero(a: GradedMap) -> bool:
    return all(mat_is_zero([list(r) for r in blk]) for blk in a.blocks)


def gm_kernel_dims(a: GradedMap, p: int | None = PRIME) -> RootVec:
    """Graded nullity: per component i, dim ker of the block leaving V_i."""
    dims = []
    for i in range(a.m):
        blk = [list(r) for r in a.block_out(i)]
        dims.append(a.dims[i] - rank(blk, p))
    return RootVec(tuple(dims))


def kernel_dim(a, p: int | None = PRIME):
    """Nullity of a plain matrix, or graded nullity of a GradedMap."""
    if isinstance(a, GradedMap):
        return gm_kernel_dims(a, p)
    nrows, ncols = mat_shape(a)
    return ncols - rank(a, p)
