"""Simplicial homology over GF(p), induced maps, and union/intersection zigzags.

Simplices are sorted vertex tuples.  The boundary of ``(v_0, ..., v_l)`` is
``sum_i (-1)^i (v_0, ..., v̂_i, ..., v_l)`` reduced mod p.

Union and intersection zigzags of ``X_1 .. X_n`` live on the grid
``1, 1.5, 2, ..., n`` which is stored internally as ``1 .. 2n-1``: odd
positions hold the ``X_i`` and even positions the unions or intersections.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .decompose import pers
from .field import NoSolution, kernel, mat_mul, rank, rref, solve_linear, zeros
from .filtration import InvariantViolation
from .zigzag import Barcode, ZigzagModule


class SimplicialComplex:
    """A finite simplicial complex on the vertex set ``0 .. n_vertices - 1``."""

    def __init__(self, n_vertices: int, simplices: Iterable[Sequence[int]] = (), close: bool = True):
        self.n_vertices = int(n_vertices)
        simplices = {tuple(sorted(set(s))) for s in simplices}
        simplices.discard(())
        for s in simplices:
            if any(not 0 <= v < self.n_vertices for v in s):
                raise ValueError(f"simplex {s} uses a vertex outside 0..{self.n_vertices - 1}")
        if close:
            simplices = _closure(simplices)
        elif _closure(simplices) != simplices:
            raise ValueError("simplex set is not closed under faces")
        self.simplices: frozenset[tuple[int, ...]] = frozenset(simplices)

    @cached_property
    def _by_dim(self) -> dict[int, list[tuple[int, ...]]]:
        out: dict[int, list] = {}
        for s in self.simplices:
            out.setdefault(len(s) - 1, []).append(s)
        return {d: sorted(v) for d, v in out.items()}

    def simplices_of_dim(self, ell: int) -> list[tuple[int, ...]]:
        return self._by_dim.get(ell, [])

    @property
    def dimension(self) -> int:
        return max(self._by_dim, default=-1)

    def __or__(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex(max(self.n_vertices, other.n_vertices), self.simplices | other.simplices, close=False)

    def __and__(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex(max(self.n_vertices, other.n_vertices), self.simplices & other.simplices, close=False)

    def __le__(self, other: "SimplicialComplex") -> bool:
        return self.simplices <= other.simplices

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.simplices == other.simplices

    def __hash__(self):
        return hash(self.simplices)

    def __repr__(self):
        tops = [s for s in self.simplices if not any(set(s) < set(t) for t in self.simplices)]
        return f"SimplicialComplex({self.n_vertices}, {sorted(tops)})"


def _closure(simplices: set) -> set:
    out = set()
    for s in simplices:
        for size in range(1, len(s) + 1):
            out.update(combinations(s, size))
    return out


def boundary_matrix(c: SimplicialComplex, ell: int, p: int) -> np.ndarray:
    """Matrix of the boundary from ``ell``-chains to ``(ell-1)``-chains."""
    cols = c.simplices_of_dim(ell)
    if ell <= 0:
        return zeros(0, len(cols))
    rows = c.simplices_of_dim(ell - 1)
    index = {s: i for i, s in enumerate(rows)}
    m = zeros(len(rows), len(cols))
    for j, s in enumerate(cols):
        for i in range(len(s)):
            m[index[s[:i] + s[i + 1:]], j] = (-1) ** i % p
    return m


@dataclass
class HomologyBasis:
    """Chosen basis of ``H_ell``.

    ``cycles`` holds representative cycles as columns over the ordered
    ``ell``-simplices; ``boundaries`` holds a basis of the boundary space.
    """

    ell: int
    p: int
    simplices: list[tuple[int, ...]]
    cycles: np.ndarray
    boundaries: np.ndarray
    _index: dict = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return self.cycles.shape[1]

    def index(self) -> dict:
        if self._index is None:
            self._index = {s: i for i, s in enumerate(self.simplices)}
        return self._index

    def coordinates(self, chains: np.ndarray) -> np.ndarray:
        """Homology coordinates of cycles given as columns over this basis's simplices."""
        basis = np.concatenate([self.boundaries, self.cycles], axis=1)
        try:
            x = solve_linear(basis, chains, self.p)
        except NoSolution:
            raise InvariantViolation("chain is not a cycle of this complex") from None
        return x[self.boundaries.shape[1]:]


def _independent_columns(m: np.ndarray, p: int) -> np.ndarray:
    """Greedy left-to-right selection of linearly independent columns."""
    # pivot columns of the RREF are exactly the greedy choice
    return m[:, rref(m, p)[1]]


def homology_basis(c: SimplicialComplex, ell: int, p: int) -> HomologyBasis:
    """Cycle representatives extending a basis of the boundaries to one of the cycles."""
    simplices = c.simplices_of_dim(ell)
    z = kernel(boundary_matrix(c, ell, p), p)
    bnd = _independent_columns(boundary_matrix(c, ell + 1, p), p)
    both = _independent_columns(np.concatenate([bnd, z], axis=1), p)
    cycles = both[:, bnd.shape[1]:]
    return HomologyBasis(ell, p, simplices, cycles, bnd)


def induced_map(
    src: SimplicialComplex,
    dst: SimplicialComplex,
    ell: int,
    p: int,
    src_basis: HomologyBasis | None = None,
    dst_basis: HomologyBasis | None = None,
) -> np.ndarray:
    """Matrix of ``H_ell(src) -> H_ell(dst)`` induced by the inclusion."""
    if not src <= dst:
        raise ValueError("source complex is not contained in the target")
    hs = src_basis or homology_basis(src, ell, p)
    hd = dst_basis or homology_basis(dst, ell, p)
    idx = hd.index()
    embedded = zeros(len(hd.simplices), hs.dim)
    for i, s in enumerate(hs.simplices):
        embedded[idx[s]] = hs.cycles[i]
    return hd.coordinates(embedded)


@dataclass
class SimplicialZigzag:
    complexes: list[SimplicialComplex]
    mode: str = "union"

    def __post_init__(self):
        if self.mode not in ("union", "intersection"):
            raise ValueError(f"mode must be 'union' or 'intersection', got {self.mode!r}")
        if not self.complexes:
            raise ValueError("need at least one complex")

    def grid(self) -> list[SimplicialComplex]:
        """The ``2n - 1`` complexes in order."""
        out = [self.complexes[0]]
        for a, b in zip(self.complexes, self.complexes[1:]):
            out.append(a | b if self.mode == "union" else a & b)
            out.append(b)
        return out

    def tau(self) -> str:
        step = "fg" if self.mode == "union" else "gf"
        return step * (len(self.complexes) - 1)


def grid_labels(n: int) -> list[str]:
    """Labels ``"1", "1.5", "2", ...`` for internal indices ``1 .. 2n-1``."""
    return [str(i // 2 + 1) if i % 2 == 0 else f"{i // 2 + 1}.5" for i in range(2 * n - 1)]


def build_zigzag(z: SimplicialZigzag, ell: int, p: int) -> ZigzagModule:
    """The ``H_ell`` zigzag module of a union or intersection zigzag."""
    spaces = z.grid()
    tau = z.tau()
    bases = [homology_basis(x, ell, p) for x in spaces]
    maps = []
    for i, arrow in enumerate(tau):
        a, b = (i, i + 1) if arrow == "f" else (i + 1, i)
        maps.append(induced_map(spaces[a], spaces[b], ell, p, bases[a], bases[b]))
    return ZigzagModule(p, tau, tuple(h.dim for h in bases), tuple(maps))


@dataclass
class MayerVietoris:
    ell: int
    d1: np.ndarray  # H(A∩B) -> H(A) ⊕ H(B)
    d2: np.ndarray  # H(A) ⊕ H(B) -> H(A∪B)
    exact: bool


def mayer_vietoris(a: SimplicialComplex, b: SimplicialComplex, ell: int, p: int) -> MayerVietoris:
    cap, cup = a & b, a | b
    h_cap, h_a, h_b, h_cup = (homology_basis(x, ell, p) for x in (cap, a, b, cup))
    ia = induced_map(cap, a, ell, p, h_cap, h_a)
    ib = induced_map(cap, b, ell, p, h_cap, h_b)
    ja = induced_map(a, cup, ell, p, h_a, h_cup)
    jb = induced_map(b, cup, ell, p, h_b, h_cup)
    d1 = np.concatenate([ia, ib], axis=0)
    d2 = np.concatenate([ja, (-jb) % p], axis=1)
    composite_zero = not mat_mul(d2, d1, p).any()
    exact = composite_zero and rank(d1, p) == d2.shape[1] - rank(d2, p)
    return MayerVietoris(ell, d1, d2, exact)


def mv_check(a: SimplicialComplex, b: SimplicialComplex, ell: int, p: int) -> bool:
    """Exactness at ``H_ell(A) ⊕ H_ell(B)`` and ``dim Coker D_2`` (at ``ell+1``) ``== dim Ker D_1`` (at ``ell``)."""
    here = mayer_vietoris(a, b, ell, p)
    up = mayer_vietoris(a, b, ell + 1, p)
    coker_up = up.d2.shape[0] - rank(up.d2, p)
    ker_here = here.d1.shape[1] - rank(here.d1, p)
    return here.exact and coker_up == ker_here


@dataclass
class StrongDiamondReport:
    union: dict[int, Barcode]
    intersection: dict[int, Barcode]
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def union_to_intersection(b: int, d: int, n_grid: int) -> tuple[int, int]:
    """Endpoint swaps carrying a union-zigzag interval to its intersection partner.

    Births swap ``{2j, 2j+1}`` and deaths swap ``{2j-1, 2j}`` (internal
    indices).  ``[2j, 2j]`` intervals are excluded; they change dimension.
    """
    if b == d and b % 2 == 0:
        raise ValueError("half-integer point intervals are matched across dimensions")
    if b % 2 == 0:
        nb = b + 1
    elif b > 1:
        nb = b - 1
    else:
        nb = b
    if d % 2 == 0:
        nd = d - 1
    elif d < n_grid:
        nd = d + 1
    else:
        nd = d
    return nb, nd


def verify_strong_diamond(complexes: Sequence[SimplicialComplex], ell_max: int, p: int) -> StrongDiamondReport:
    """Check the union/intersection correspondence in dimensions ``0 .. ell_max``.

    (a) restrictions to the integer slots agree; (b) ``[j, j]`` at a
    half-integer slot in ``H_ell`` of the intersection zigzag matches ``[j, j]``
    in ``H_{ell+1}`` of the union zigzag (and ``H_0`` of the union has none);
    (c) all other intervals correspond under the birth/death endpoint swaps.
    """
    n = len(complexes)
    if n < 2:
        raise ValueError("need at least two complexes")
    n_grid = 2 * n - 1
    ells = range(ell_max + 2)
    union = {ell: pers(build_zigzag(SimplicialZigzag(list(complexes), "union"), ell, p)) for ell in ells}
    inter = {ell: pers(build_zigzag(SimplicialZigzag(list(complexes), "intersection"), ell, p)) for ell in ells}
    report = StrongDiamondReport(union, inter)
    labels = grid_labels(n)
    odd = list(range(1, n_grid + 1, 2))
    half = list(range(2, n_grid, 2))
    for ell in range(ell_max + 1):
        if union[ell].restrict(odd) != inter[ell].restrict(odd):
            report.violations.append(
                f"(a) H_{ell}: integer-slot restrictions differ: {union[ell].restrict(odd)} vs {inter[ell].restrict(odd)}"
            )
        for j in half:
            lo, up = inter[ell].multiplicity(j, j), union[ell + 1].multiplicity(j, j)
            if lo != up:
                report.violations.append(
                    f"(b) slot {labels[j - 1]}: [j,j] x{lo} in H_{ell}(intersection) vs x{up} in H_{ell + 1}(union)"
                )
        moved = Barcode(
            {
                (*union_to_intersection(b, d, n_grid), None): c
                for b, d, c, _ in union[ell].entries()
                if not (b == d and b % 2 == 0)
            }
        )
        rest = Barcode({(b, d, None): c for b, d, c, _ in inter[ell].entries() if not (b == d and b % 2 == 0)})
        if moved != rest:
            report.violations.append(f"(c) H_{ell}: swapped union barcode {moved} != intersection {rest}")
    for j in half:
        if union[0].multiplicity(j, j):
            report.violations.append(f"(b) slot {labels[j - 1]}: H_0(union) has a [j,j] interval")
    return report
