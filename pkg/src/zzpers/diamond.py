"""Exact diamonds and the interval matching between the two zigzags through them.

Layout around index ``k`` (``2 <= k <= n-1``)::

                  W_k
        f_{k-1} /     \\ g_k
    ... V_{k-1}         V_{k+1} ...
        g_{k-1} \\     / f_k
                  U_k

The upper module passes through ``W_k`` (type ``...fg...``), the lower one
through ``U_k`` (type ``...gf...``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import subspace as sub
from .decompose import pers
from .field import kernel, zeros
from .zigzag import Barcode, ZigzagModule, concat, restrict


@dataclass(eq=False)
class DiamondInstance:
    left: ZigzagModule  # V_1 .. V_{k-1}
    right: ZigzagModule  # V_{k+1} .. V_n
    up_from_left: np.ndarray  # f_{k-1}: V_{k-1} -> W_k
    up_from_right: np.ndarray  # g_k: V_{k+1} -> W_k
    down_to_left: np.ndarray  # g_{k-1}: U_k -> V_{k-1}
    down_to_right: np.ndarray  # f_k: U_k -> V_{k+1}

    def __post_init__(self):
        a_left, a_right = self.left.dims[-1], self.right.dims[0]
        w = self.up_from_left.shape[0]
        u = self.down_to_left.shape[1]
        want = {
            "up_from_left": (w, a_left),
            "up_from_right": (w, a_right),
            "down_to_left": (a_left, u),
            "down_to_right": (a_right, u),
        }
        for name, shape in want.items():
            if getattr(self, name).shape != shape:
                raise ValueError(f"{name}: expected {shape}, got {getattr(self, name).shape}")
        if self.left.p != self.right.p:
            raise ValueError("field mismatch")

    @property
    def p(self) -> int:
        return self.left.p

    @property
    def k(self) -> int:
        return self.left.n + 1

    @property
    def n(self) -> int:
        return self.left.n + 1 + self.right.n

    def upper(self) -> ZigzagModule:
        w = self.up_from_left.shape[0]
        top = ZigzagModule(self.p, "", (w,), ())
        return concat(concat(self.left, "f", self.up_from_left, top), "g", self.up_from_right, self.right)

    def lower(self) -> ZigzagModule:
        u = self.down_to_left.shape[1]
        bottom = ZigzagModule(self.p, "", (u,), ())
        return concat(concat(self.left, "g", self.down_to_left, bottom), "f", self.down_to_right, self.right)

    @classmethod
    def from_modules(cls, upper: ZigzagModule, lower: ZigzagModule, k: int) -> "DiamondInstance":
        """Split two modules that agree away from index ``k``."""
        n = upper.n
        if lower.n != n or lower.p != upper.p:
            raise ValueError("upper and lower modules must share length and field")
        if not 2 <= k <= n - 1:
            raise ValueError(f"diamond index must satisfy 2 <= k <= n-1, got k={k}, n={n}")
        if upper.tau[k - 2: k] != "fg" or lower.tau[k - 2: k] != "gf":
            raise ValueError(f"arrows {k - 1}, {k} must be 'fg' above and 'gf' below")
        left, right = restrict(upper, 1, k - 1), restrict(upper, k + 1, n)
        if left != restrict(lower, 1, k - 1) or right != restrict(lower, k + 1, n):
            raise ValueError("modules differ away from the diamond")
        return cls(left, right, upper.arrow(k - 1), upper.arrow(k), lower.arrow(k - 1), lower.arrow(k))

    def d1(self) -> np.ndarray:
        """``u -> g_{k-1}(u) ⊕ f_k(u)``."""
        return np.concatenate([self.down_to_left, self.down_to_right], axis=0)

    def d2(self) -> np.ndarray:
        """``v ⊕ v' -> f_{k-1}(v) - g_k(v')``."""
        return np.concatenate([self.up_from_left, (-self.up_from_right) % self.p], axis=1)


def check_exact(d: DiamondInstance) -> bool:
    """``Im(D_1) == Ker(D_2)``."""
    p = d.p
    return sub.equal(sub.column_space(d.d1(), p), sub.null_space(d.d2(), p), p)


def diamond_partner(b: int, d: int, k: int) -> tuple[int, int]:
    """The interval matched with ``[b, d]`` across the diamond at ``k`` (not for ``[k, k]``)."""
    if (b, d) == (k, k):
        raise ValueError("[k, k] intervals are unmatched")
    if b <= k - 1 and d == k:
        return b, k - 1
    if b <= k - 1 and d == k - 1:
        return b, k
    if b == k and d >= k + 1:
        return k + 1, d
    if b == k + 1 and d >= k + 1:
        return k, d
    return b, d


@dataclass
class DiamondReport:
    k: int
    upper: Barcode
    lower: Barcode
    kk_upper: int
    kk_lower: int
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        head = "ok" if self.ok else f"FAILED: {self.violations[0]}"
        return f"k={self.k} upper={self.upper} lower={self.lower} [k,k]: {self.kk_upper} vs {self.kk_lower} -> {head}"


def matching_violations(upper: Barcode, lower: Barcode, k: int, n: int) -> list[str]:
    """Multiplicity equalities of the matching rules that fail, in canonical order."""
    moved = Barcode(
        {(*diamond_partner(b, d, k), dm): c for b, d, c, dm in upper.entries() if (b, d) != (k, k)}
    )
    rest = Barcode({(b, d, dm): c for b, d, c, dm in lower.entries() if (b, d) != (k, k)})
    out = []
    for b, d in sorted({(b, d) for b, d, _, _ in moved.entries()} | {(b, d) for b, d, _, _ in rest.entries()}):
        for dm in sorted(moved.dims() | rest.dims(), key=lambda x: -1 if x is None else x):
            lo, up = rest.multiplicity(b, d, dm), moved.multiplicity(b, d, dm)
            if lo != up:
                pb, pd = diamond_partner(b, d, k)
                out.append(f"mult[{pb},{pd}](upper)={up} but mult[{b},{d}](lower)={lo}")
    K = [i for i in range(1, n + 1) if i != k]
    if upper.restrict(K) != lower.restrict(K):
        out.append(f"restrictions to {{1..{n}}}\\{{{k}}} differ")
    return out


def verify_diamond_matching(d: DiamondInstance) -> DiamondReport:
    """Compare ``Pers`` of the upper and lower modules under the matching rules."""
    k, n = d.k, d.n
    if not 2 <= k <= n - 1:
        raise ValueError(f"diamond index must satisfy 2 <= k <= n-1, got k={k}, n={n}")
    upper, lower = pers(d.upper()), pers(d.lower())
    report = DiamondReport(k, upper, lower, upper.multiplicity(k, k), lower.multiplicity(k, k))
    if not check_exact(d):
        report.violations.append("diamond is not exact")
    report.violations.extend(matching_violations(upper, lower, k, n))
    return report


def pushout_diamond(lower: ZigzagModule, k: int, extra: int = 0) -> DiamondInstance:
    """Complete the lower module at ``k`` by the pushout ``W = (V_{k-1} ⊕ V_{k+1}) / Im D_1``.

    ``extra`` appends that many free dimensions to ``W`` (outside the image of
    ``D_2``), which keeps the diamond exact and creates ``[k, k]`` summands
    upstairs.
    """
    n, p = lower.n, lower.p
    if not 2 <= k <= n - 1:
        raise ValueError(f"diamond index must satisfy 2 <= k <= n-1, got k={k}, n={n}")
    if lower.tau[k - 2: k] != "gf":
        raise ValueError(f"lower module needs arrows 'gf' at {k - 1}, {k}, got {lower.tau[k - 2: k]!r}")
    g_down, f_down = lower.arrow(k - 1), lower.arrow(k)
    a_left, a_right = lower.dims[k - 2], lower.dims[k]
    d1 = np.concatenate([g_down, f_down], axis=0)
    q = quotient_map(d1, p)
    q = np.concatenate([q, zeros(extra, a_left + a_right)], axis=0)
    up_left = q[:, :a_left]
    up_right = (-q[:, a_left:]) % p
    return DiamondInstance(
        restrict(lower, 1, k - 1), restrict(lower, k + 1, n), up_left, up_right, g_down, f_down
    )


def quotient_map(a: np.ndarray, p: int) -> np.ndarray:
    """Matrix of the projection ``F^m -> F^m / colspace(a)`` in some basis of the quotient."""
    # rows: a basis of the left null space of a, so the kernel is exactly colspace(a)
    return kernel(a.T % p, p).T.copy()
