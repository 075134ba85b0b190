"""The level-l perfect crystals of type A_n^(1) used by the path models.

Three families:

* B1Elem -- the row crystal: multiplicity vector nu over the letters 1..n+1,
  sum(nu) = l.  f_i turns a letter i into i+1 (indices cyclic, so f_0 turns
  n+1 into 1).
* BnElem -- the column crystal: multiplicity vector nubar over the barred
  letters 1~..n+1~ (i~ is the height-n column missing i).  f_i turns i+1~
  into i~, f_0 turns 1~ into n+1~.
* AdjElem -- the adjoint crystal B(0) + B(theta) + ... + B(l*theta), encoded
  as the pair (mbar, m): mbar counts barred columns, m counts boxes, both of
  size k <= l, with mbar_1 * m_1 = 0 (semistandardness of the two-row
  tableau).  Classical operators act through the pair tensor (box part left,
  barred part right, matching the column reading of the tableau); the affine
  operators follow the explicit four-case rules.

``merge_pair``/``split_adj`` realize the crystal isomorphism
B1 (x) Bn  ~~>  Adj by cancelling c = min(nu_1, nubar_1) leading pairs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .cartan import Weight
from .crystal_core import TensorProd, eps_phi_tensor, eps_weight, phi_weight, tensor_apply


class WeightSectionError(ValueError):
    """A weight outside the image of wt was handed to a section map."""


@dataclass(frozen=True)
class B1Elem:
    """Row-crystal element; nu[t] counts the letter t+1."""

    nu: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.nu) - 1

    @property
    def level(self) -> int:
        return sum(self.nu)

    def eps(self, i: int) -> int:
        return self.nu[i % (self.n + 1)]

    def phi(self, i: int) -> int:
        return self.nu[(i - 1) % (self.n + 1)]

    def wt(self) -> Weight:
        m = self.n + 1
        return Weight(tuple(self.nu[(j - 1) % m] - self.nu[j] for j in range(m)))

    def f(self, i: int):
        m = self.n + 1
        s, d = (i - 1) % m, i % m
        if self.nu[s] == 0:
            return None
        nu = list(self.nu)
        nu[s] -= 1
        nu[d] += 1
        return B1Elem(tuple(nu))

    def e(self, i: int):
        m = self.n + 1
        s, d = i % m, (i - 1) % m
        if self.nu[s] == 0:
            return None
        nu = list(self.nu)
        nu[s] -= 1
        nu[d] += 1
        return B1Elem(tuple(nu))


@dataclass(frozen=True)
class BnElem:
    """Column-crystal element; nubar[t] counts the barred letter (t+1)~."""

    nubar: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.nubar) - 1

    @property
    def level(self) -> int:
        return sum(self.nubar)

    def eps(self, i: int) -> int:
        return self.nubar[(i - 1) % (self.n + 1)]

    def phi(self, i: int) -> int:
        return self.nubar[i % (self.n + 1)]

    def wt(self) -> Weight:
        m = self.n + 1
        return Weight(tuple(self.nubar[j] - self.nubar[(j - 1) % m] for j in range(m)))

    def f(self, i: int):
        m = self.n + 1
        s, d = i % m, (i - 1) % m
        if self.nubar[s] == 0:
            return None
        nb = list(self.nubar)
        nb[s] -= 1
        nb[d] += 1
        return BnElem(tuple(nb))

    def e(self, i: int):
        m = self.n + 1
        s, d = (i - 1) % m, i % m
        if self.nubar[s] == 0:
            return None
        nb = list(self.nubar)
        nb[s] -= 1
        nb[d] += 1
        return BnElem(tuple(nb))


@dataclass(frozen=True)
class AdjElem:
    """Adjoint-crystal element as a (barred columns, boxes) multiplicity pair."""

    mbar: tuple[int, ...]
    m: tuple[int, ...]
    cap: int

    def __post_init__(self):
        assert sum(self.mbar) == sum(self.m) <= self.cap
        assert self.mbar[0] * self.m[0] == 0, "pair breaks semistandardness"

    @property
    def n(self) -> int:
        return len(self.m) - 1

    @property
    def k(self) -> int:
        return sum(self.m)

    def box_part(self) -> B1Elem:
        return B1Elem(self.m)

    def bar_part(self) -> BnElem:
        return BnElem(self.mbar)

    def wt(self) -> Weight:
        return self.box_part().wt() + self.bar_part().wt()

    def eps(self, i: int) -> int:
        if i % (self.n + 1) == 0:
            return _affine_count(self, "e")
        return eps_phi_tensor(i, (self.box_part(), self.bar_part()))[0]

    def phi(self, i: int) -> int:
        if i % (self.n + 1) == 0:
            return _affine_count(self, "f")
        return eps_phi_tensor(i, (self.box_part(), self.bar_part()))[1]

    def _f0(self):
        phi1, eps1 = self.m[-1], self.m[0]
        eps2, phi2 = self.mbar[-1], self.mbar[0]
        mbar, m = list(self.mbar), list(self.m)
        if phi1 > eps2 and phi2 > 0:
            mbar[0] -= 1
            m[-1] -= 1
        elif phi1 > eps2 and phi2 == 0:
            m[-1] -= 1
            m[0] += 1
        elif phi1 <= eps2 and phi2 > 0:
            mbar[0] -= 1
            mbar[-1] += 1
        elif phi1 <= eps2 and phi2 == 0 and self.k < self.cap:
            mbar[-1] += 1
            m[0] += 1
        else:
            return None
        return AdjElem(tuple(mbar), tuple(m), self.cap)

    def _e0(self):
        phi1, eps1 = self.m[-1], self.m[0]
        eps2 = self.mbar[-1]
        mbar, m = list(self.mbar), list(self.m)
        if phi1 >= eps2 and eps1 > 0:
            m[0] -= 1
            m[-1] += 1
        elif phi1 >= eps2 and eps1 == 0 and self.k < self.cap:
            mbar[0] += 1
            m[-1] += 1
        elif phi1 < eps2 and eps1 > 0:
            mbar[-1] -= 1
            m[0] -= 1
        elif phi1 < eps2 and eps1 == 0:
            mbar[0] += 1
            mbar[-1] -= 1
        else:
            return None
        return AdjElem(tuple(mbar), tuple(m), self.cap)

    def _classical(self, op: str, i: int):
        res = tensor_apply(op, i, (self.box_part(), self.bar_part()))
        if res is None:
            return None
        idx, new = res
        if idx == 0:
            return AdjElem(self.mbar, new.nu, self.cap)
        return AdjElem(new.nubar, self.m, self.cap)

    def f(self, i: int):
        return self._f0() if i % (self.n + 1) == 0 else self._classical("f", i)

    def e(self, i: int):
        return self._e0() if i % (self.n + 1) == 0 else self._classical("e", i)


@lru_cache(maxsize=None)
def _affine_count(elem: AdjElem, op: str) -> int:
    """eps_0/phi_0 by repeated application; closed forms are not trusted."""
    count = 0
    cur = elem
    while True:
        nxt = cur._e0() if op == "e" else cur._f0()
        if nxt is None:
            return count
        count += 1
        cur = nxt


# ---------------------------------------------------------------- sections

def b1_from_weight(w: Weight, lvl: int) -> B1Elem:
    """Inverse of wt on the row crystal of level lvl."""
    m = w.n + 1
    s = lvl - sum(k * w.a[k] for k in range(1, m))
    if w.level != 0 or s % m:
        raise WeightSectionError(f"{w} is not a B1 weight at level {lvl}")
    base = s // m
    nu = tuple(base + sum(w.a[i:m]) for i in range(1, m + 1))
    if any(v < 0 for v in nu):
        raise WeightSectionError(f"{w} is not a B1 weight at level {lvl}")
    return B1Elem(nu)


def bn_from_weight(w: Weight, lvl: int) -> BnElem:
    """Inverse of wt on the column crystal of level lvl."""
    m = w.n + 1
    s = lvl + sum(k * w.a[k] for k in range(1, m))
    if w.level != 0 or s % m:
        raise WeightSectionError(f"{w} is not a Bn weight at level {lvl}")
    base = s // m
    nubar = tuple(base - sum(w.a[i:m]) for i in range(1, m + 1))
    if any(v < 0 for v in nubar):
        raise WeightSectionError(f"{w} is not a Bn weight at level {lvl}")
    return BnElem(nubar)


def merge_pair(b: B1Elem, bb: BnElem) -> AdjElem:
    """Pair (b, bb) -> adjoint element, cancelling min(nu_1, nubar_1) 1/1~ pairs."""
    assert b.level == bb.level
    c = min(b.nu[0], bb.nubar[0])
    mbar = (bb.nubar[0] - c,) + bb.nubar[1:]
    m = (b.nu[0] - c,) + b.nu[1:]
    return AdjElem(mbar, m, b.level)


def split_adj(a: AdjElem) -> tuple[B1Elem, BnElem]:
    """Inverse of merge_pair: pad both first entries back up to the level."""
    c = a.cap - a.k
    return B1Elem((a.m[0] + c,) + a.m[1:]), BnElem((a.mbar[0] + c,) + a.mbar[1:])


def adj_from_weights(r: Weight, s: Weight, lvl: int) -> AdjElem:
    """Adjoint element with box-part weight r and barred-part weight s."""
    return merge_pair(b1_from_weight(r, lvl), bn_from_weight(s, lvl))


# ------------------------------------------------------- ground-state data

def ground_b1(lam: Weight, k: int) -> B1Elem:
    """Position-k factor of the ground-state path in the row crystal."""
    m = lam.n + 1
    return B1Elem(tuple(lam.a[(j + k) % m] for j in range(1, m + 1)))


def ground_bn(lam: Weight, k: int) -> BnElem:
    """Position-k factor of the ground-state path in the column crystal."""
    m = lam.n + 1
    return BnElem(tuple(lam.a[(j - k - 1) % m] for j in range(1, m + 1)))


def ground_adj(lam: Weight) -> AdjElem:
    """The constant ground-state factor of the adjoint path model."""
    m = lam.n + 1
    vec = (0,) + tuple(lam.a[j] for j in range(1, m))
    return AdjElem(vec, vec, lam.level)


# ------------------------------------------------------------ enumeration

def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def all_b1(n: int, lvl: int) -> list[B1Elem]:
    return [B1Elem(c) for c in _compositions(lvl, n + 1)]


def all_bn(n: int, lvl: int) -> list[BnElem]:
    return [BnElem(c) for c in _compositions(lvl, n + 1)]


def all_adj(n: int, lvl: int) -> list[AdjElem]:
    out = []
    for k in range(lvl + 1):
        for mbar, m in itertools.product(_compositions(k, n + 1), repeat=2):
            if mbar[0] * m[0] == 0:
                out.append(AdjElem(mbar, m, lvl))
    return out


# ------------------------------------------------------------ perfectness

@dataclass
class PerfectReport:
    ok: bool
    failures: list[str]


def verify_perfect(elements, lvl: int, index_set=None) -> PerfectReport:
    """Check the combinatorial perfectness conditions on a finite crystal.

    Verified: B (x) B is connected; <c, eps(b)> >= lvl for every b; for each
    classical dominant weight of level lvl there are unique elements b^L and
    b_L with eps(b^L) = L and phi(b_L) = L.  The module-theoretic conditions
    are out of scope here.
    """
    elements = list(elements)
    failures: list[str] = []
    n = elements[0].wt().n
    idx = tuple(index_set) if index_set is not None else tuple(range(n + 1))

    # connectivity of B (x) B under f_i (e_i edges are the reverses)
    pairs = [TensorProd((a, b)) for a in elements for b in elements]
    ids = {p: t for t, p in enumerate(pairs)}
    parent = list(range(len(pairs)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p, t in ids.items():
        for i in idx:
            q = p.f(i)
            if q is not None:
                ra, rb = find(t), find(ids[q])
                if ra != rb:
                    parent[ra] = rb
    roots = {find(t) for t in range(len(pairs))}
    if len(roots) != 1:
        failures.append(f"B(x)B has {len(roots)} components")

    for b in elements:
        if sum(b.eps(i) for i in range(n + 1)) < lvl:
            failures.append(f"<c, eps(b)> < level at {b}")
            break

    eps_map: dict[tuple[int, ...], int] = {}
    phi_map: dict[tuple[int, ...], int] = {}
    for b in elements:
        eps_map[eps_weight(b).a] = eps_map.get(eps_weight(b).a, 0) + 1
        phi_map[phi_weight(b).a] = phi_map.get(phi_weight(b).a, 0) + 1
    for lam_a in _compositions(lvl, n + 1):
        if eps_map.get(lam_a, 0) != 1:
            failures.append(f"eps(b) = {lam_a} hit {eps_map.get(lam_a, 0)} times")
        if phi_map.get(lam_a, 0) != 1:
            failures.append(f"phi(b) = {lam_a} hit {phi_map.get(lam_a, 0)} times")
    return PerfectReport(ok=not failures, failures=failures)


# -------------------------------------------------------------- rendering

def render_b1(b: B1Elem) -> str:
    letters = []
    for t, c in enumerate(b.nu):
        letters.extend([str(t + 1)] * c)
    return "[" + ",".join(letters) + "]"


def render_bn(b: BnElem) -> str:
    letters = []
    for t in range(b.n, -1, -1):
        letters.extend([f"{t + 1}~"] * b.nubar[t])
    return "[" + ",".join(letters) + "]"


def render_adj(a: AdjElem) -> str:
    """Row-major rendering of the two-part tableau, e.g. "rows: [1,2],[3]"."""
    n = a.n
    cols = []  # barred columns, largest letter first, then the boxes
    for t in range(n, -1, -1):
        col = [x for x in range(1, n + 2) if x != t + 1]
        cols.extend([col] * a.mbar[t])
    boxes = []
    for t, c in enumerate(a.m):
        boxes.extend([[t + 1]] * c)
    cols.extend(boxes)
    if not cols:
        return "rows:"
    rows = []
    for r in range(n):
        row = [str(col[r]) for col in cols if len(col) > r]
        if row:
            rows.append("[" + ",".join(row) + "]")
    return "rows: " + ",".join(rows)


def render(elem) -> str:
    if isinstance(elem, B1Elem):
        return render_b1(elem)
    if isinstance(elem, BnElem):
        return render_bn(elem)
    if isinstance(elem, AdjElem):
        return render_adj(elem)
    return str(elem)
