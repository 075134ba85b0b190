"""Quiver-variety data at generic points of a wall-tuple component.

A wall tuple determines a strictly triangular graded map (one matrix unit per
horizontal adjacency of blocks, indices given by the per-color enumeration of
blocks in lex order wall > row > column).  A component is represented by the
canonical pair: that map fixed, the opposite-degree partner sampled
generically inside its commutant, which is exactly the conormal fiber since
the moment map vanishes iff the commutator does.  Group quotients are never
formed.

Generic values are taken as the componentwise minimum over >= 3 independent
prime-field samples that must agree; disagreement triggers resampling and,
past a bound, a GenericityError.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .cartan import RootVec, Weight, zero_root
from .linalg import (
    PRIME,
    GradedMap,
    gm_compose,
    gm_from_blocks,
    gm_is_zero,
    gm_kernel_dims,
    gm_power,
    gm_zero,
    nullspace,
    rank,
)
from .walls import WallTuple, block_color, total_content


class GenericityError(RuntimeError):
    """Sampling failed to reach agreeing generic values."""


@dataclass(frozen=True)
class MatrixUnit:
    direction: str  # "x" (degree +1) or "xbar" (degree -1)
    s: int
    src: int
    dst: int

    def to_json(self) -> dict:
        return {"dir": self.direction, "s": self.s, "from": self.src, "to": self.dst}


def wall_blocks(n: int, walls: WallTuple):
    """Blocks in lex order (wall, row, column) with colors and o-indices."""
    seen = [0] * (n + 1)
    out = []
    for w, (charge, heights) in enumerate(zip(walls.charges, walls.heights)):
        top = heights[0] if heights else 0
        for row in range(1, top + 1):
            for col in range(len(heights)):
                if heights[col] < row:
                    break
                color = block_color(n, walls.kind, charge, row, col)
                out.append((w, row, col, color, seen[color]))
                seen[color] += 1
    return out


def wall_matrix_units(n: int, walls: WallTuple) -> list[MatrixUnit]:
    """One unit per horizontal adjacency; P1 tuples give the degree +1 map."""
    blocks = wall_blocks(n, walls)
    order = {(w, r, c): o for w, r, c, _, o in blocks}
    units = []
    m = n + 1
    for w, row, col, color, o in blocks:
        if col == 0:
            continue
        right = order[(w, row, col - 1)]
        if walls.kind == "P1":
            units.append(MatrixUnit("x", (color + 1) % m, o, right))
        else:
            units.append(MatrixUnit("xbar", color, o, right))
    return units


def units_to_graded_map(dims, units) -> GradedMap:
    dims = tuple(dims)
    m = len(dims)
    direction = units[0].direction if units else "x"
    shift = 1 if direction == "x" else -1
    blocks = [
        [[0] * dims[(i - shift) % m] for _ in range(dims[i])] for i in range(m)
    ]
    for u in units:
        assert u.direction == direction
        # x unit: v^{s-1}_src -> v^s_dst ; xbar unit: v^s_src -> v^{s-1}_dst
        i = u.s if direction == "x" else (u.s - 1) % m
        blocks[i][u.dst][u.src] = 1
    return gm_from_blocks(dims, shift, blocks)


def wall_graded_map(n: int, walls: WallTuple) -> tuple[GradedMap, list[MatrixUnit]]:
    alpha = total_content(n, walls)
    units = wall_matrix_units(n, walls)
    shift = 1 if walls.kind == "P1" else -1
    if not units:
        return gm_zero(alpha.k, shift), []
    return units_to_graded_map(alpha.k, units), units


# ------------------------------------------------------------- commutant

def commutant_basis(a: GradedMap, p: int | None = PRIME) -> list[GradedMap]:
    """Basis of the opposite-degree maps commuting with a.

    Solved as one exact linear system: the moment map vanishes iff the
    commutator does, so these are precisely the conormal-fiber directions.
    """
    assert a.shift in (1, -1)
    m = a.m
    dims = a.dims
    shift = -a.shift
    # unknown blocks u[b]: component (b - shift) -> b, shape dims[b] x dims[b - shift]
    offsets = []
    total = 0
    for b in range(m):
        offsets.append(total)
        total += dims[b] * dims[(b - shift) % m]

    def uidx(b, r, c):
        return offsets[b] + r * dims[(b - shift) % m] + c

    rows = []
    for i in range(m):
        # [a, u] on component i: a.block_out(i-shift') ... written directly:
        # (a o u)|V_i = a.block_out((i + shift) % m ... keep it concrete:
        au_left = a.blocks[i % m]  # maps V_{i - a.shift} -> V_i
        # u-block landing in V_{i - a.shift}: index (i - a.shift) % m
        b1 = (i - a.shift) % m
        # (u o a)|: u-block landing in V_i has index i; a-block landing in
        # V_{(i - shift) % m} = V_{i + a.shift}
        ua_right = a.blocks[(i + a.shift) % m]  # maps V_i -> V_{i + a.shift}
        ki = dims[i]
        kin = dims[b1]  # = dims[(i - a.shift) % m]
        for r in range(ki):
            for c in range(ki):
                coeffs: dict[int, int] = {}
                for t in range(kin):
                    v = au_left[r][t]
                    if v:
                        coeffs[uidx(b1, t, c)] = coeffs.get(uidx(b1, t, c), 0) + v
                for t in range(dims[(i + a.shift) % m]):
                    v = ua_right[t][c]
                    if v:
                        coeffs[uidx(i, r, t)] = coeffs.get(uidx(i, r, t), 0) - v
                if coeffs:
                    row = [0] * total
                    for pos, v in coeffs.items():
                        row[pos] = v
                    rows.append(row)
    basis_vecs = nullspace(rows, total, p)
    out = []
    for vec in basis_vecs:
        blocks = []
        for b in range(m):
            cols = dims[(b - shift) % m]
            blk = [
                [vec[uidx(b, r, c)] for c in range(cols)] for r in range(dims[b])
            ]
            blocks.append(blk)
        out.append(gm_from_blocks(dims, shift, blocks))
    return out


def sample_in_commutant(basis, dims, shift: int, rng: random.Random,
                        p: int | None = PRIME) -> GradedMap:
    """Deterministic random combination of the basis (zero map if empty)."""
    if not basis:
        return gm_zero(dims, shift)
    m = len(dims)
    hi = p if p is not None else 10**6
    coeffs = [rng.randrange(hi) for _ in basis]
    blocks = []
    for i in range(m):
        rows = len(basis[0].blocks[i])
        cols = len(basis[0].blocks[i][0]) if rows else 0
        blk = [[0] * cols for _ in range(rows)]
        for co, gmap in zip(coeffs, basis):
            if not co:
                continue
            src = gmap.blocks[i]
            for r in range(rows):
                for c in range(cols):
                    blk[r][c] += co * src[r][c]
        if p is not None:
            blk = [[v % p for v in row] for row in blk]
        blocks.append(blk)
    return gm_from_blocks(dims, shift, blocks)


# ------------------------------------------------------- point diagnostics

def check_moment(x: GradedMap, xbar: GradedMap, p: int | None = PRIME) -> bool:
    """True iff [x, xbar] = 0 (equivalently, the moment map vanishes)."""
    ab = gm_compose(x, xbar, p)
    ba = gm_compose(xbar, x, p)
    for i in range(x.m):
        for r1, r2 in zip(ab.blocks[i], ba.blocks[i]):
            for v1, v2 in zip(r1, r2):
                d = (v1 - v2) % p if p is not None else v1 - v2
                if d:
                    return False
    return True


def is_nilpotent(a: GradedMap, p: int | None = PRIME) -> bool:
    return gm_is_zero(gm_power(a, sum(a.dims), p))


# ------------------------------------------------------------ kernel tables

@dataclass(frozen=True)
class KernelTable:
    """Graded kernel dimensions until stabilization (last row = alpha)."""

    alpha: RootVec
    x_pow: tuple[RootVec, ...]      # ker x^k, k = 0..
    xbar_pow: tuple[RootVec, ...]   # ker xbar^k
    xy_pow: tuple[RootVec, ...]     # ker (x xbar)^k
    yxy_pow: tuple[RootVec, ...]    # ker xbar (x xbar)^k

    def at(self, seq: str, k: int) -> RootVec:
        rows = getattr(self, seq)
        return rows[k] if k < len(rows) else rows[-1]

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha.k),
            "ker_x": [list(r.k) for r in self.x_pow],
            "ker_xbar": [list(r.k) for r in self.xbar_pow],
            "ker_xxbar": [list(r.k) for r in self.xy_pow],
            "ker_xbar_xxbar": [list(r.k) for r in self.yxy_pow],
        }


def _kernel_sequence(base: GradedMap, step: GradedMap, alpha: RootVec,
                     p: int | None) -> tuple[RootVec, ...]:
    """ker(base), ker(base o step), ker(base o step^2), ... until stable at alpha."""
    rows = [gm_kernel_dims(base, p)]
    cur = base
    bound = sum(alpha.k) + 2
    for _ in range(bound):
        if rows[-1] == alpha:
            return tuple(rows)
        cur = gm_compose(cur, step, p)
        nxt = gm_kernel_dims(cur, p)
        if nxt == rows[-1]:
            raise GenericityError(
                f"kernel filtration stabilized at {nxt} below alpha = {alpha}"
            )
        rows.append(nxt)
    raise GenericityError("kernel filtration failed to stabilize")


def kernel_table_at(x: GradedMap, xbar: GradedMap, p: int | None = PRIME) -> KernelTable:
    """Kernel table at one point; requires a commuting pair."""
    if not check_moment(x, xbar, p):
        raise ValueError("kernel table requested at a non-commuting point")
    alpha = RootVec(x.dims)
    zero = zero_root(len(x.dims) - 1)
    if alpha.is_zero():
        single = (zero,)
        return KernelTable(alpha, single, single, single, single)
    xy = gm_compose(x, xbar, p)
    x_pow = (zero,) + _kernel_sequence(x, x, alpha, p)
    xbar_pow = (zero,) + _kernel_sequence(xbar, xbar, alpha, p)
    xy_pow = (zero,) + _kernel_sequence(xy, xy, alpha, p)
    yxy_pow = _kernel_sequence(xbar, xy, alpha, p)
    return KernelTable(alpha, x_pow, xbar_pow, xy_pow, yxy_pow)


def _table_rows_eq(a: KernelTable, b: KernelTable) -> bool:
    for seq in ("x_pow", "xbar_pow", "xy_pow", "yxy_pow"):
        la, lb = getattr(a, seq), getattr(b, seq)
        for k in range(max(len(la), len(lb))):
            if a.at(seq, k) != b.at(seq, k):
                return False
    return True


def _table_min(tables: list[KernelTable]) -> KernelTable:
    alpha = tables[0].alpha
    out = {}
    for seq in ("x_pow", "xbar_pow", "xy_pow", "yxy_pow"):
        span = max(len(getattr(t, seq)) for t in tables)
        rows = []
        for k in range(span):
            rows.append(RootVec(tuple(
                min(t.at(seq, k).k[i] for t in tables) for i in range(len(alpha.k))
            )))
        while len(rows) > 1 and rows[-1] == rows[-2]:
            rows.pop()
        out[seq] = tuple(rows)
    return KernelTable(alpha, out["x_pow"], out["xbar_pow"], out["xy_pow"], out["yxy_pow"])


def generic_kernel_table(x: GradedMap, basis, seed: int = 0,
                         p: int | None = PRIME, min_samples: int = 3,
                         max_samples: int = 10) -> KernelTable:
    """Componentwise-minimum table over agreeing independent samples."""
    rng = random.Random(seed)
    tables: list[KernelTable] = []
    for _ in range(max_samples):
        xbar = sample_in_commutant(basis, x.dims, -x.shift, rng, p)
        tables.append(kernel_table_at(x, xbar, p))
        if len(tables) < min_samples:
            continue
        lower = _table_min(tables)
        agree = sum(1 for t in tables if _table_rows_eq(t, lower))
        if agree >= 2:
            return lower
    raise GenericityError(f"no agreeing generic kernel table after {max_samples} samples")


# ---------------------------------------------------------------- stability

def sample_framing(lam: Weight, dims, rng: random.Random, p: int | None = PRIME):
    """Random framing maps t_i: V_i -> W_i with dim W_i = <h_i, lam>."""
    hi = p if p is not None else 10**6
    return [
        [[rng.randrange(hi) for _ in range(dims[i])] for _ in range(lam.a[i])]
        for i in range(len(dims))
    ]


def is_stable(x: GradedMap, xbar: GradedMap, framing, p: int | None = PRIME) -> bool:
    """ker x  ∩ ker xbar ∩ ker t = 0, one rank computation per component."""
    m = x.m
    for i in range(m):
        if x.dims[i] == 0:
            continue
        stacked = [list(r) for r in x.block_out(i)]
        stacked += [list(r) for r in xbar.block_out(i)]
        stacked += [list(r) for r in framing[i]]
        if rank(stacked, p) < x.dims[i]:
            return False
    return True
