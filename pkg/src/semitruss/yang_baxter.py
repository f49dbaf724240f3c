"""Set-theoretic Yang-Baxter maps built from qualifying semi-trusses or
semi-braces, and brute-force verification of the braid relation
(r x id)(id x r)(r x id) = (id x r)(r x id)(id x r).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    FiniteBinaryOp,
    is_left_cancellative,
    structure_report,
)
from .errors import (
    NotGroup,
    NotIdempotent,
    NotLeftCancellative,
    NotSemibrace,
)
from .truss import SemiTruss, verify_semibrace


@dataclass(frozen=True)
class PairMap:
    """A function AxA -> AxA as a dense table; pairs[a*n + b] = r(a, b)."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.pairs) != self.n * self.n:
            raise ValueError(f"expected {self.n * self.n} pairs, got {len(self.pairs)}")
        for x, y in self.pairs:
            if not (0 <= x < self.n and 0 <= y < self.n):
                raise ValueError(f"pair ({x},{y}) outside carrier [0, {self.n})")

    @classmethod
    def from_function(cls, n: int, fn) -> PairMap:
        return cls(n, tuple(fn(a, b) for a in range(n) for b in range(n)))

    def __call__(self, a: int, b: int) -> tuple[int, int]:
        return self.pairs[a * self.n + b]


def build_yb_from_semitruss(T: SemiTruss, e: int) -> PairMap:
    """The explicit map
    r(a,b) = (a∘e^∘∘w, e∘w^∘∘b) with w = (e∘a^∘∘e)⋄b, inverses in (A,∘).

    Requires ∘ a group and ⋄ left-cancellative with idempotent e."""
    rep = structure_report(T.circ)
    if not rep.is_group:
        raise NotGroup("circ must be a group to build the Yang-Baxter map")
    if not is_left_cancellative(T.diamond):
        raise NotLeftCancellative("diamond must be left-cancellative")
    dt, ct = T.diamond.table, T.circ.table
    if dt[e][e] != e:
        raise NotIdempotent(f"{e} is not an idempotent of diamond")
    cinv = rep.group_inverse
    einv = cinv[e]

    def cell(a: int, b: int) -> tuple[int, int]:
        w = dt[ct[ct[e][cinv[a]]][e]][b]
        return (ct[ct[a][einv]][w], ct[ct[e][cinv[w]]][b])

    return PairMap.from_function(T.n, cell)


def build_yb_from_semibrace(diamond: FiniteBinaryOp, bullet: FiniteBinaryOp) -> PairMap:
    """r(a,b) = (a•(a^•⋄b), (a^•⋄b)^• • b) with inverses in (A,•)."""
    check = verify_semibrace(diamond, bullet)
    if not check:
        raise NotSemibrace(check.reason, check.witness)
    binv = structure_report(bullet).group_inverse
    dt, bt = diamond.table, bullet.table

    def cell(a: int, b: int) -> tuple[int, int]:
        w = dt[binv[a]][b]
        return (bt[a][w], bt[binv[w]][b])

    return PairMap.from_function(diamond.n, cell)


def ybe_counterexample(r: PairMap) -> tuple[int, int, int] | None:
    """First triple where the two braid composites disagree, or None.

    Each side costs three table lookups per triple."""
    n = r.n
    pairs = r.pairs

    def r12(x, y, z):
        p, q = pairs[x * n + y]
        return p, q, z

    def r23(x, y, z):
        p, q = pairs[y * n + z]
        return x, p, q

    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = r12(*r23(*r12(a, b, c)))
                rhs = r23(*r12(*r23(a, b, c)))
                if lhs != rhs:
                    return (a, b, c)
    return None


def verify_ybe(r: PairMap) -> bool:
    """Brute-force braid relation over all n^3 triples."""
    return ybe_counterexample(r) is None


def is_bijective(r: PairMap) -> bool:
    """True iff the map permutes the n^2 pair set (empirical metadata; the
    construction does not promise it)."""
    return len(set(r.pairs)) == r.n * r.n
