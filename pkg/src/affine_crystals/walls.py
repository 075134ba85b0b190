"""Young-wall tuples for the row and column path models.

A wall is a stack of colored unit blocks over the pattern of a fundamental
weight: rows grow leftward from column 0 and may not leave free space to
their right, so a wall is just a weakly decreasing column-height sequence.
Block colors walk by one residue per step:

    P1 pattern of charge c: color(row i, col j) = (c - j + i - 1) mod (n+1)
    Pn pattern of charge c: color(row i, col j) = (c + j - i + 1) mod (n+1)

with rows counted from 1 at the bottom and columns from 0 at the right.

An l-tuple additionally satisfies a cyclic interlacing order between
consecutive walls and a reducedness condition (the left-end colors of the
rows of any fixed length never exhaust all residues; this is what kills the
delta-direction redundancy).
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import RootVec, Weight, cl_root, decompose, fundamental_weight, zero_root, zero_weight
from .paths import Path, ground_elem, make_path
from .perfect import b1_from_weight, bn_from_weight

WALL_KINDS = ("P1", "Pn")


class InversionError(RuntimeError):
    """The wall-tuple search found no solution or more than one."""


@dataclass(frozen=True)
class WallTuple:
    kind: str
    charges: tuple[int, ...]
    heights: tuple[tuple[int, ...], ...]  # per wall, index = column from the right

    @property
    def ell(self) -> int:
        return len(self.charges)

    def n_cols(self) -> int:
        return max((len(h) for h in self.heights), default=0)

    def block_count(self) -> int:
        return sum(sum(h) for h in self.heights)

    def __str__(self) -> str:
        walls = "; ".join(f"c{c}:{list(h)}" for c, h in zip(self.charges, self.heights))
        return f"{self.kind}({walls})"


def make_walls(kind: str, charges, heights) -> WallTuple:
    if kind not in WALL_KINDS:
        raise ValueError(f"unknown wall kind {kind!r}")
    charges = tuple(charges)
    heights = tuple(heights)
    if len(heights) != len(charges):
        raise ValueError("one height sequence per charge required")
    if any(charges[t] > charges[t + 1] for t in range(len(charges) - 1)):
        raise ValueError("charges must be ascending")
    trimmed = []
    for h in heights:
        h = list(h)
        while h and h[-1] == 0:
            h.pop()
        trimmed.append(tuple(h))
    return WallTuple(kind, charges, tuple(trimmed))


def block_color(n: int, kind: str, charge: int, row: int, col: int) -> int:
    if kind == "P1":
        return (charge - col + row - 1) % (n + 1)
    return (charge + col - row + 1) % (n + 1)


def wall_lambda(n: int, walls: WallTuple) -> Weight:
    lam = zero_weight(n)
    for c in walls.charges:
        lam = lam + fundamental_weight(n, c)
    return lam


def column_content(n: int, walls: WallTuple, j: int) -> RootVec:
    counts = [0] * (n + 1)
    for charge, h in zip(walls.charges, walls.heights):
        height = h[j] if j < len(h) else 0
        for row in range(1, height + 1):
            counts[block_color(n, walls.kind, charge, row, j)] += 1
    return RootVec(tuple(counts))


def total_content(n: int, walls: WallTuple) -> RootVec:
    out = zero_root(n)
    for j in range(walls.n_cols()):
        out = out + column_content(n, walls, j)
    return out


def _row_data(heights: tuple[int, ...]):
    """Rows of one wall as (row_index from 1, length)."""
    if not heights:
        return []
    return [(r, sum(1 for h in heights if h >= r)) for r in range(1, heights[0] + 1)]


def validate(n: int, walls: WallTuple) -> tuple[bool, str]:
    """Stacking, cyclic interlacing, and reducedness; first witness on failure."""
    for w, h in enumerate(walls.heights):
        for j in range(len(h) - 1):
            if h[j] < h[j + 1]:
                return False, f"wall {w}: free space right of column {j + 1}"
        if h and h[-1] < 0:
            return False, f"wall {w}: negative height"

    ell = walls.ell
    cols = walls.n_cols()
    ch = walls.charges

    def ht(w, j):
        return walls.heights[w][j] if j < len(walls.heights[w]) else 0

    for j in range(cols):
        for w in range(ell - 1):
            d = ch[w + 1] - ch[w]
            if walls.kind == "P1" and ht(w, j) > ht(w + 1, j) + d:
                return False, f"interlacing fails between walls {w},{w + 1} at column {j}"
            if walls.kind == "Pn" and ht(w, j) < ht(w + 1, j) - d:
                return False, f"interlacing fails between walls {w},{w + 1} at column {j}"
        if walls.kind == "P1" and ht(ell - 1, j) > ht(0, j) + ch[0] - ch[ell - 1] + n + 1:
            return False, f"cyclic interlacing fails at column {j}"
        if walls.kind == "Pn" and ht(ell - 1, j) < ht(0, j) + ch[ell - 1] - ch[0] - n - 1:
            return False, f"cyclic interlacing fails at column {j}"

    lengths: dict[int, set[int]] = {}
    for charge, h in zip(walls.charges, walls.heights):
        for row, length in _row_data(h):
            lengths.setdefault(length, set()).add(
                block_color(n, walls.kind, charge, row, length - 1)
            )
    for length, colors in lengths.items():
        if len(colors) == n + 1:
            return False, f"not reduced: rows of length {length} use every color"
    return True, "ok"


# ------------------------------------------------------------ wall <-> path

def _path_kind(wall_kind: str) -> str:
    return "B1" if wall_kind == "P1" else "Bn"


def walls_to_path(n: int, walls: WallTuple) -> Path:
    """Factor j = section(wt(ground_j) - cl(column content j))."""
    lam = wall_lambda(n, walls)
    kind = _path_kind(walls.kind)
    section = b1_from_weight if kind == "B1" else bn_from_weight
    factors = []
    for j in range(walls.n_cols()):
        target = ground_elem(lam, kind, j).wt() - cl_root(column_content(n, walls, j))
        factors.append(section(target, lam.level))
    return make_path(lam, kind, factors)


def path_to_walls(n: int, lam: Weight, path: Path, alpha: RootVec, kind: str) -> WallTuple:
    """Invert walls_to_path by a bounded exact search over column heights.

    Each column's color content is pinned by the path factor only up to
    multiples of (1,..,1); the exact total alpha, the stacking and
    interlacing bands and final reducedness cut the candidates down, and the
    unique survivor is returned.  Zero or multiple survivors falsify the
    pattern rules or the input and raise.
    """
    if path.lam != lam:
        raise ValueError("path does not belong to the given weight")
    m = n + 1
    charges = decompose(lam)
    ell = len(charges)
    pkind = _path_kind(kind)
    top = path.tail_start + n + 1
    targets = [
        ground_elem(lam, pkind, j).wt() - path.factor(j).wt() for j in range(top + 1)
    ]

    solutions: list[tuple[tuple[int, ...], ...]] = []
    chosen: list[tuple[int, ...]] = []  # heights for columns top, top-1, ...

    def column_candidates(j: int, prev, remaining: RootVec):
        """All (heights, content) choices for column j consistent locally."""
        found: list[tuple[tuple[int, ...], RootVec]] = []
        picks: list[int] = []

        def per_wall(w: int, counts: list[int]):
            if w == ell:
                if walls_cyclic_ok(picks):
                    content = RootVec(tuple(counts))
                    if cl_root(content) == targets[j]:
                        found.append((tuple(picks), content))
                return
            lo = prev[w]
            if w > 0:
                d = charges[w] - charges[w - 1]
                if kind == "P1":
                    lo = max(lo, picks[w - 1] - d)
            cur = list(counts)
            feasible = True
            for row in range(1, lo + 1):
                c = block_color(n, kind, charges[w], row, j)
                cur[c] += 1
                if cur[c] > remaining.k[c]:
                    feasible = False
                    break
            h = lo
            while feasible:
                if kind == "Pn" and w > 0 and h > picks[w - 1] + charges[w] - charges[w - 1]:
                    break
                picks.append(h)
                per_wall(w + 1, cur)
                picks.pop()
                c = block_color(n, kind, charges[w], h + 1, j)
                if cur[c] >= remaining.k[c]:
                    break
                cur = list(cur)
                cur[c] += 1
                h += 1

        def walls_cyclic_ok(hs) -> bool:
            if kind == "P1":
                return hs[-1] <= hs[0] + charges[0] - charges[-1] + n + 1
            return hs[-1] >= hs[0] + charges[-1] - charges[0] - n - 1

        per_wall(0, [0] * m)
        return found

    def over_columns(j: int, prev, remaining: RootVec):
        if j < 0:
            if remaining.is_zero():
                heights = tuple(
                    tuple(chosen[top - jj][w] for jj in range(top + 1))
                    for w in range(ell)
                )
                solutions.append(heights)
            return
        for picks, content in column_candidates(j, prev, remaining):
            chosen.append(picks)
            over_columns(j - 1, picks, remaining - content)
            chosen.pop()

    over_columns(top, (0,) * ell, alpha)

    survivors = []
    for heights in solutions:
        cand = make_walls(kind, charges, heights)
        ok, _ = validate(n, cand)
        if ok and walls_to_path(n, cand) == path:
            survivors.append(cand)
    if len(survivors) != 1:
        raise InversionError(
            f"expected a unique wall tuple, found {len(survivors)} for {path}"
        )
    return survivors[0]


def strip_column0(n: int, walls: WallTuple) -> tuple[WallTuple, RootVec]:
    """Remove column 0 everywhere; charges shift by -1 (P1) or +1 (Pn).

    Walls whose charge wraps move cyclically to the other end so charges stay
    ascending; the result lives over the rotated dominant weight.
    """
    m = n + 1
    beta = column_content(n, walls, 0)
    shift = -1 if walls.kind == "P1" else 1
    items = sorted(
        (((c + shift) % m, tuple(h[1:])) for c, h in zip(walls.charges, walls.heights)),
        key=lambda it: it[0],
    )
    out = make_walls(walls.kind, tuple(c for c, _ in items), tuple(h for _, h in items))
    ok, msg = validate(n, out)
    if not ok:
        raise AssertionError(f"stripping column 0 broke validity: {msg}")
    return out, beta


# ------------------------------------------------------------------- JSON

def walls_to_json(walls: WallTuple) -> dict:
    return {
        "schema": "v1",
        "kind": walls.kind,
        "charges": list(walls.charges),
        "heights": [list(h) for h in walls.heights],
    }


def walls_from_json(data) -> WallTuple:
    return make_walls(data["kind"], data["charges"], data["heights"])
