"""
Finite crystallographic root data of types A-G.

Conventions
-----------
Points of $t^*$ are written in the fundamental-weight basis: the coordinate
$x_i$ of a point $x$ is $\\langle x, \\check\\alpha_i\\rangle$. A weight is
stored the same way, so the simple root $\\alpha_j$ has coordinates
``cartan[i][j]`` (column $j$ of the Cartan matrix). Coroots are stored in the
simple-coroot basis, so that $\\langle \\mu, v\\rangle = \\sum_i v_i \\mu_i$.

The Cartan matrix is ``cartan[i][j] = <alpha_j, coroot_i>`` with Bourbaki
numbering:

* ``B_r``: $\\alpha_r$ short; ``C_r``: $\\alpha_r$ long;
* ``D_r``: $\\alpha_{r-2}$ is the branch node;
* ``E_r``: 1-3-4-5-6(-7-8) with 2 attached to 4;
* ``F4``: $\\alpha_1, \\alpha_2$ long; ``G2``: $\\alpha_1$ short, so the
  highest root is $3\\alpha_1 + 2\\alpha_2$.

>>> rd = build_root_datum("A2")
>>> len(rd.roots), rd.highest_root.simple_coords
(6, (1, 1))
"""

from __future__ import annotations

import itertools
import json
import math
import re
from dataclasses import dataclass, field
from functools import lru_cache

__all__ = [
    "Weight", "Coroot", "Root", "RootDatum",
    "cartan_matrix", "build_root_datum", "pairing", "find_weight_pairing_one",
]


@dataclass(frozen=True)
class Weight:
    """An element of the weight lattice, in fundamental-weight coordinates."""
    coords: tuple[int, ...]

    def __add__(self, other: Weight) -> Weight:
        _check_rank(self.coords, other.coords)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coords))

    def __sub__(self, other: Weight) -> Weight:
        return self + (-other)

    def __rmul__(self, k: int) -> Weight:
        return Weight(tuple(k * a for a in self.coords))


@dataclass(frozen=True)
class Coroot:
    """An element of the coroot lattice, in simple-coroot coordinates.

    Viewed as a linear function on $t^*$ it is $x \\mapsto \\sum_i v_i x_i$.
    """
    coords: tuple[int, ...]

    def __add__(self, other: Coroot) -> Coroot:
        _check_rank(self.coords, other.coords)
        return Coroot(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Coroot:
        return Coroot(tuple(-a for a in self.coords))


@dataclass(frozen=True)
class Root:
    simple_coords: tuple[int, ...]  # in the basis of simple roots
    weight: Weight                   # same root, fundamental-weight coordinates
    coroot: Coroot

    @property
    def height(self) -> int:
        return sum(self.simple_coords)

    @property
    def is_positive(self) -> bool:
        return any(c > 0 for c in self.simple_coords)


def _check_rank(a, b):
    if len(a) != len(b):
        raise ValueError(f"rank mismatch: {len(a)} vs {len(b)}")


def pairing(mu: Weight, v: Coroot) -> int:
    """$\\langle \\mu, v\\rangle$.

    >>> pairing(Weight((1,)), Coroot((1,)))
    1
    """
    _check_rank(mu.coords, v.coords)
    return sum(a * b for a, b in zip(mu.coords, v.coords))


_LABEL = re.compile(r"^\s*([A-Ga-g])_?(\d+)\s*$")

_E_EDGES = {6: [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)],
            7: [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
            8: [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]}


def _parse_label(label: str) -> tuple[str, int]:
    m = _LABEL.match(label)
    if not m:
        raise ValueError(f"unknown Cartan type label {label!r}")
    letter, rank = m.group(1).upper(), int(m.group(2))
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }[letter]
    if not ok:
        raise ValueError(f"unsupported rank {rank} for type {letter}")
    return letter, rank


def cartan_matrix(label: str) -> tuple[tuple[int, ...], ...]:
    """The Cartan matrix ``a[i][j] = <alpha_j, coroot_i>`` for a type label.

    >>> cartan_matrix("G2")
    ((2, -3), (-1, 2))
    """
    letter, r = _parse_label(label)
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def link(i, j):  # 1-based, simply laced
        a[i - 1][j - 1] = a[j - 1][i - 1] = -1

    if letter in "ABC":
        for i in range(1, r):
            link(i, i + 1)
        if letter == "B":
            a[r - 1][r - 2] = -2
        elif letter == "C":
            a[r - 2][r - 1] = -2
    elif letter == "D":
        for i in range(1, r - 1):
            link(i, i + 1)
        link(r - 2, r)
    elif letter == "E":
        for i, j in _E_EDGES[r]:
            link(i, j)
    elif letter == "F":
        link(1, 2)
        link(3, 4)
        a[1][2] = -1
        a[2][1] = -2
    elif letter == "G":
        a[0][1] = -3
        a[1][0] = -1
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True)
class RootDatum:
    """Roots, coroots and pairings of a finite root system.

    ``highest_root`` is the highest root $\\delta$. ``affine_root`` is the
    positive root whose coroot is the highest coroot; the affine simple
    reflection $s_0$ is the reflection in $\\langle x, \\check\\theta\\rangle =
    \\hbar$ for this root $\\theta$. In simply laced types the two coincide.
    """
    cartan_type: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    roots: tuple[Root, ...]
    highest_root: Root
    affine_root: Root
    _index: dict = field(repr=False, compare=False, hash=False)

    @property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(b for b in self.roots if b.is_positive)

    def simple_root(self, i: int) -> Root:
        """Simple root $\\alpha_i$, ``i`` 1-based."""
        return self.root_from_weight(tuple(row[i - 1] for row in self.cartan))

    def root_from_weight(self, coords: tuple[int, ...]) -> Root:
        try:
            return self._index[tuple(coords)]
        except KeyError:
            raise ValueError(f"{coords} is not a root of {self.cartan_type}") from None

    def is_root(self, coords: tuple[int, ...]) -> bool:
        return tuple(coords) in self._index

    def fundamental_weight(self, i: int) -> Weight:
        return Weight(tuple(int(j == i - 1) for j in range(self.rank)))

    def simple_coroot(self, i: int) -> Coroot:
        return Coroot(tuple(int(j == i - 1) for j in range(self.rank)))

    def to_json(self) -> dict:
        return {
            "type": self.cartan_type,
            "rank": self.rank,
            "cartan": [list(row) for row in self.cartan],
            "positive_roots": [list(b.simple_coords) for b in self.positive_roots],
            "highest_root": list(self.highest_root.simple_coords),
            "affine_root": list(self.affine_root.simple_coords),
            "coordinates": "x_i = <x, coroot_i> (fundamental-weight basis)",
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


@lru_cache(maxsize=None)
def build_root_datum(label: str) -> RootDatum:
    """Build the root datum for a Cartan type label such as ``"A2"`` or ``"G2"``.

    Roots are produced by closing the simple roots under simple reflections.

    >>> build_root_datum("G2").highest_root.simple_coords
    (3, 2)
    >>> build_root_datum("X3")
    Traceback (most recent call last):
    ...
    ValueError: unknown Cartan type label 'X3'
    """
    letter, r = _parse_label(label)
    a = cartan_matrix(label)
    label = f"{letter}{r}"

    def reflect(pair, i):
        b, c = pair
        bi = sum(a[i][j] * b[j] for j in range(r))        # <beta, coroot_i>
        ci = sum(c[k] * a[k][i] for k in range(r))        # <alpha_i, coroot of beta>
        b = tuple(b[j] - (bi if j == i else 0) for j in range(r))
        c = tuple(c[k] - (ci if k == i else 0) for k in range(r))
        return b, c

    unit = [tuple(int(j == i) for j in range(r)) for i in range(r)]
    seen = {(u, u) for u in unit}
    frontier = list(seen)
    while frontier:
        nxt = []
        for pair in frontier:
            for i in range(r):
                q = reflect(pair, i)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt

    roots = []
    for b, c in seen:
        w = tuple(sum(a[i][j] * b[j] for j in range(r)) for i in range(r))
        roots.append(Root(b, Weight(w), Coroot(c)))
    roots.sort(key=lambda x: (-x.is_positive, x.height if x.is_positive else -x.height,
                              x.simple_coords))
    index = {x.weight.coords: x for x in roots}
    pos = [x for x in roots if x.is_positive]
    highest = max(pos, key=lambda x: (x.height, x.simple_coords))
    affine = max(pos, key=lambda x: (sum(x.coroot.coords), x.simple_coords))
    return RootDatum(label, r, a, tuple(roots), highest, affine, index)


def find_weight_pairing_one(datum: RootDatum, v: Coroot) -> Weight:
    """A weight $\\mu$ with $\\langle\\mu, v\\rangle = 1$.

    Since $\\langle\\varpi_i, v\\rangle = v_i$ this is an integer solution
    of $\\sum_i \\mu_i v_i = 1$. The first fundamental weight with
    $v_i = \\pm 1$ is used when there is one; otherwise the first pair
    ``i < j`` with coprime ``v_i, v_j`` gets an extended-gcd solution, and
    failing that the extended gcd is chained over all coordinates.

    >>> rd = build_root_datum("A2")
    >>> find_weight_pairing_one(rd, Coroot((1, 1)))
    Weight(coords=(1, 0))
    """
    c = v.coords
    if len(c) != datum.rank:
        raise ValueError("coroot does not belong to this datum")
    g = 0
    for ci in c:
        g = math.gcd(g, ci)
    if g != 1:
        raise ValueError(f"no weight pairs to 1 with {c}: gcd is {g}")
    r = datum.rank
    for i in range(r):
        if abs(c[i]) == 1:
            return Weight(tuple(c[i] if k == i else 0 for k in range(r)))
    for i, j in itertools.combinations(range(r), 2):
        if math.gcd(c[i], c[j]) == 1:
            _, s, t = _xgcd(c[i], c[j])
            return Weight(tuple(s if k == i else t if k == j else 0 for k in range(r)))
    mu = [0] * r
    acc, first = 0, True
    for k in range(r):
        if c[k] == 0:
            continue
        if first:
            acc, mu[k], first = c[k], 1, False
            continue
        g, s, t = _xgcd(acc, c[k])
        mu = [s * m for m in mu]
        mu[k] = t
        acc = g
    if acc < 0:
        mu = [-m for m in mu]
    return Weight(tuple(mu))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0
