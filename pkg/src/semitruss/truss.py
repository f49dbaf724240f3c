"""Two-operation structures tied by the distributive law
a∘(b⋄c) = (a∘b)⋄λ(a,c), with the cancellative-side constructions:
action laws, the σ map and its cocycle behaviour, quotient-form
equivalences, and conversion to a semi-brace.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    CheckResult,
    FiniteBinaryOp,
    Table,
    idempotents,
    is_associative,
    is_left_cancellative,
    left_identities,
    left_quotient_table,
    structure_report,
)
from .errors import (
    InternalCheckError,
    LambdaMissing,
    NotAssociative,
    NotIdempotent,
    NotLeftCancellative,
    SemiTrussLawViolation,
    SigmaNotBijective,
    SizeMismatch,
)

BoolTable = tuple[tuple[bool, ...], ...]


@dataclass(frozen=True)
class SemiTruss:
    """Carrier with two associative operations ⋄ (diamond), ∘ (circ), a
    lambda table satisfying a∘(b⋄c) = (a∘b)⋄λ(a,c), and per-cell provenance:
    lam_unique[a][c] is True where the law forces that cell."""

    diamond: FiniteBinaryOp
    circ: FiniteBinaryOp
    lam: Table
    lam_unique: BoolTable

    @property
    def n(self) -> int:
        return self.diamond.n


@dataclass(frozen=True)
class SigmaData:
    """The map σ(a) = a∘e for a chosen ⋄-idempotent e.

    When σ is a bijection the table scan also yields the right identity
    m = σ^{-1}(e) of ∘ and u = σ^{-1}(m), the ∘-inverse of e with respect
    to m; σ^{-1}(a) = a∘u holds and is verified at construction."""

    e: int
    sigma: tuple[int, ...]
    sigma_inverse: tuple[int, ...] | None
    right_identity: int | None
    e_inverse: int | None

    @property
    def bijective(self) -> bool:
        return self.sigma_inverse is not None


def _require_compatible(diamond: FiniteBinaryOp, circ: FiniteBinaryOp) -> None:
    if diamond.n != circ.n:
        raise SizeMismatch(f"diamond has n={diamond.n} but circ has n={circ.n}")
    if not is_associative(diamond):
        raise NotAssociative("diamond operation is not associative")
    if not is_associative(circ):
        raise NotAssociative("circ operation is not associative")


def law_holds_at(
    diamond: FiniteBinaryOp, circ: FiniteBinaryOp, lam: Table, a: int, b: int, c: int
) -> bool:
    """Pointwise distributive law: a∘(b⋄c) == (a∘b)⋄λ(a,c)."""
    dt, ct = diamond.table, circ.table
    return ct[a][dt[b][c]] == dt[ct[a][b]][lam[a][c]]


def semitruss_counterexample(
    diamond: FiniteBinaryOp, circ: FiniteBinaryOp, lam: Table
) -> tuple[int, int, int] | None:
    """First triple violating the distributive law, or None."""
    _require_compatible(diamond, circ)
    n = diamond.n
    dt, ct = diamond.table, circ.table
    for a in range(n):
        for b in range(n):
            ab = ct[a][b]
            for c in range(n):
                if ct[a][dt[b][c]] != dt[ab][lam[a][c]]:
                    return (a, b, c)
    return None


def verify_semitruss(diamond: FiniteBinaryOp, circ: FiniteBinaryOp, lam: Table) -> bool:
    """Exhaustively check the distributive law over all n^3 triples."""
    return semitruss_counterexample(diamond, circ, lam) is None


def _lambda_candidates(
    diamond: FiniteBinaryOp, circ: FiniteBinaryOp, a: int, c: int
) -> list[int]:
    dt, ct = diamond.table, circ.table
    n = diamond.n
    return [
        x
        for x in range(n)
        if all(ct[a][dt[b][c]] == dt[ct[a][b]][x] for b in range(n))
    ]


def derive_lambda(
    diamond: FiniteBinaryOp, circ: FiniteBinaryOp
) -> tuple[Table, BoolTable] | None:
    """Compute a lambda table from the pair, or None when no table works.

    Cell (a, c) is the set of x validating a∘(b⋄c) = (a∘b)⋄x for every b;
    the minimum is taken so runs are reproducible, and the boolean table
    records which cells were singletons.  When diamond is left-cancellative
    every nonempty cell is forced, so the result is the unique lambda.
    O(n^4).
    """
    _require_compatible(diamond, circ)
    n = diamond.n
    lam_rows: list[tuple[int, ...]] = []
    uniq_rows: list[tuple[bool, ...]] = []
    for a in range(n):
        lam_row: list[int] = []
        uniq_row: list[bool] = []
        for c in range(n):
            cands = _lambda_candidates(diamond, circ, a, c)
            if not cands:
                return None
            lam_row.append(cands[0])
            uniq_row.append(len(cands) == 1)
        lam_rows.append(tuple(lam_row))
        uniq_rows.append(tuple(uniq_row))
    return tuple(lam_rows), tuple(uniq_rows)


def make_semitruss(
    diamond: FiniteBinaryOp, circ: FiniteBinaryOp, lam: Table | None = None
) -> SemiTruss:
    """Build a verified SemiTruss, deriving lambda when none is supplied.

    A supplied lambda is validated against the law (SemiTrussLawViolation on
    failure) and its per-cell uniqueness recomputed, so provenance flags are
    meaningful either way.
    """
    _require_compatible(diamond, circ)
    if lam is None:
        derived = derive_lambda(diamond, circ)
        if derived is None:
            raise LambdaMissing("no lambda table satisfies the distributive law")
        lam, uniq = derived
        return SemiTruss(diamond, circ, lam, uniq)
    lam = tuple(tuple(row) for row in lam)
    witness = semitruss_counterexample(diamond, circ, lam)
    if witness is not None:
        raise SemiTrussLawViolation(witness)
    n = diamond.n
    uniq = tuple(
        tuple(len(_lambda_candidates(diamond, circ, a, c)) == 1 for c in range(n))
        for a in range(n)
    )
    return SemiTruss(diamond, circ, lam, uniq)


# ---------------------------------------------------------------------------
# action laws


@dataclass(frozen=True)
class ActionLawReport:
    """act1: λ(a∘b,c)=λ(a,λ(b,c)); act2: λ(a,b⋄c)=λ(a,b)⋄λ(a,c);
    act3: λ(m,a)=a for every left identity m of ∘ (None when ∘ has none)."""

    act1: CheckResult
    act2: CheckResult
    act3: CheckResult | None

    @property
    def all_hold(self) -> bool:
        return bool(self.act1) and bool(self.act2) and (self.act3 is None or bool(self.act3))


def check_action_laws(T: SemiTruss) -> ActionLawReport:
    n = T.n
    dt, ct, lam = T.diamond.table, T.circ.table, T.lam

    act1 = CheckResult(True)
    for a in range(n):
        for b in range(n):
            ab = ct[a][b]
            for c in range(n):
                if lam[ab][c] != lam[a][lam[b][c]]:
                    act1 = CheckResult(False, (a, b, c))
                    break
            if not act1:
                break
        if not act1:
            break

    act2 = CheckResult(True)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if lam[a][dt[b][c]] != dt[lam[a][b]][lam[a][c]]:
                    act2 = CheckResult(False, (a, b, c))
                    break
            if not act2:
                break
        if not act2:
            break

    lids = left_identities(T.circ)
    act3: CheckResult | None = None
    if lids:
        act3 = CheckResult(True)
        for m in lids:
            for a in range(n):
                if lam[m][a] != a:
                    act3 = CheckResult(False, (m, a))
                    break
            if not act3:
                break

    return ActionLawReport(act1, act2, act3)


# ---------------------------------------------------------------------------
# sigma


def has_bijectivity_witness(circ: FiniteBinaryOp, e: int) -> bool:
    """True iff ∘ has a right identity m with some u satisfying
    u∘e = e∘u = m (the characterization of σ being a bijection)."""
    ct = circ.table
    n = circ.n
    for m in range(n):
        if all(ct[a][m] == a for a in range(n)):
            for u in range(n):
                if ct[u][e] == m and ct[e][u] == m:
                    return True
    return False


def sigma_from_idempotent(T: SemiTruss, e: int) -> SigmaData:
    """Build σ(a) = a∘e and, when bijective, its inverse data.

    The bijective branch verifies that m = σ^{-1}(e) is a right identity of
    ∘, that u = σ^{-1}(m) inverts e with respect to m, and that
    σ^{-1}(a) = a∘u; these must hold, so a violation aborts with a dump.
    """
    dt, ct = T.diamond.table, T.circ.table
    if dt[e][e] != e:
        raise NotIdempotent(f"{e} is not an idempotent of diamond")
    n = T.n
    sigma = tuple(ct[a][e] for a in range(n))
    if len(set(sigma)) != n:
        return SigmaData(e, sigma, None, None, None)
    sigma_inverse = [0] * n
    for a, img in enumerate(sigma):
        sigma_inverse[img] = a
    m = sigma_inverse[e]
    u = sigma_inverse[m]
    if any(ct[a][m] != a for a in range(n)):
        raise InternalCheckError(
            "sigma bijective but sigma^-1(e) is not a right identity",
            diamond=T.diamond.table, circ=T.circ.table, e=e, m=m,
        )
    if ct[u][e] != m or ct[e][u] != m:
        raise InternalCheckError(
            "sigma bijective but sigma^-1(m) does not invert e",
            diamond=T.diamond.table, circ=T.circ.table, e=e, m=m, u=u,
        )
    if any(sigma_inverse[a] != ct[a][u] for a in range(n)):
        raise InternalCheckError(
            "sigma inverse is not right translation by u",
            diamond=T.diamond.table, circ=T.circ.table, e=e, m=m, u=u,
        )
    return SigmaData(e, sigma, tuple(sigma_inverse), m, u)


@dataclass(frozen=True)
class SigmaLawReport:
    """equivariance: σ(a∘b)=a∘σ(b); cocycle: σ(a∘b)=σ(a)⋄λ(a,σ(b));
    product_rule: a∘b=σ(a)⋄λ(a,b)."""

    equivariance: CheckResult
    cocycle: CheckResult
    product_rule: CheckResult

    @property
    def all_hold(self) -> bool:
        return bool(self.equivariance) and bool(self.cocycle) and bool(self.product_rule)


def check_sigma_laws(T: SemiTruss, S: SigmaData) -> SigmaLawReport:
    n = T.n
    dt, ct, lam, sig = T.diamond.table, T.circ.table, T.lam, S.sigma

    def scan(pointwise) -> CheckResult:
        for a in range(n):
            for b in range(n):
                if not pointwise(a, b):
                    return CheckResult(False, (a, b))
        return CheckResult(True)

    return SigmaLawReport(
        equivariance=scan(lambda a, b: sig[ct[a][b]] == ct[a][sig[b]]),
        cocycle=scan(lambda a, b: sig[ct[a][b]] == dt[sig[a]][lam[a][sig[b]]]),
        product_rule=scan(lambda a, b: ct[a][b] == dt[sig[a]][lam[a][b]]),
    )


# ---------------------------------------------------------------------------
# quotient-form equivalences (left-cancellative diamond)


@dataclass(frozen=True)
class IdempotentEquivalences:
    """Checks tied to one idempotent e: σ(a)=a∘e dominates every a∘c in the
    divisibility pre-order, and the quotient form of the law holds."""

    e: int
    sigma_dominates: CheckResult
    sigma_quotient_law: CheckResult


@dataclass(frozen=True)
class EquivalenceReport:
    semitruss_law: CheckResult
    quotient_heap_law: CheckResult
    per_idempotent: tuple[IdempotentEquivalences, ...]
    identity_remark: CheckResult | None

    @property
    def all_hold(self) -> bool:
        if not (self.semitruss_law and self.quotient_heap_law):
            return False
        if any(not (p.sigma_dominates and p.sigma_quotient_law) for p in self.per_idempotent):
            return False
        return self.identity_remark is None or bool(self.identity_remark)


def check_equivalence_laws(T: SemiTruss) -> EquivalenceReport:
    """The three equivalent faces of the law when ⋄ is left-cancellative.

    Verifies the stored law, the quotient ("heap") form over all pairs
    c <= d, and, for every idempotent e, that σ(a) = a∘e divides a∘c and the
    σ-quotient form holds.  Also checks that m∘e is idempotent for every
    left identity m of ∘ (None when ∘ has none or ⋄ has no idempotent)."""
    if not is_left_cancellative(T.diamond):
        raise NotLeftCancellative("equivalence checks require a left-cancellative diamond")
    n = T.n
    dt, ct = T.diamond.table, T.circ.table
    q = left_quotient_table(T.diamond)

    witness = semitruss_counterexample(T.diamond, T.circ, T.lam)
    law = CheckResult(witness is None, witness)

    heap = CheckResult(True)
    for c in range(n):
        for d in range(n):
            qcd = q[c][d]
            if qcd is None:
                continue
            for a in range(n):
                rq = q[ct[a][c]][ct[a][d]]
                for b in range(n):
                    if rq is None or ct[a][dt[b][qcd]] != dt[ct[a][b]][rq]:
                        heap = CheckResult(False, (a, b, c, d))
                        break
                if not heap:
                    break
            if not heap:
                break
        if not heap:
            break

    per_e = []
    idem = idempotents(T.diamond)
    for e in idem:
        sig = tuple(ct[a][e] for a in range(n))
        dominates = CheckResult(True)
        for a in range(n):
            for c in range(n):
                if q[sig[a]][ct[a][c]] is None:
                    dominates = CheckResult(False, (a, c))
                    break
            if not dominates:
                break
        sigma_q = CheckResult(True)
        for a in range(n):
            for c in range(n):
                rq = q[sig[a]][ct[a][c]]
                for b in range(n):
                    if rq is None or ct[a][dt[b][c]] != dt[ct[a][b]][rq]:
                        sigma_q = CheckResult(False, (a, b, c))
                        break
                if not sigma_q:
                    break
            if not sigma_q:
                break
        per_e.append(IdempotentEquivalences(e, dominates, sigma_q))

    remark: CheckResult | None = None
    lids = left_identities(T.circ)
    if lids and idem:
        remark = CheckResult(True)
        for m in lids:
            for e in idem:
                s = ct[m][e]
                if dt[s][s] != s:
                    remark = CheckResult(False, (m, e))
                    break
            if not remark:
                break

    return EquivalenceReport(law, heap, tuple(per_e), remark)


# ---------------------------------------------------------------------------
# semi-brace conversion


def to_semibrace(T: SemiTruss, e: int) -> FiniteBinaryOp:
    """Replace ∘ by a•b = σ(σ^{-1}(a)∘σ^{-1}(b)); requires σ bijective.

    When ∘ is a group the result must also equal a∘e^∘∘b, which is
    cross-checked cell by cell.
    """
    S = sigma_from_idempotent(T, e)
    if S.sigma_inverse is None:
        raise SigmaNotBijective(f"sigma from idempotent {e} is not a bijection")
    n = T.n
    ct = T.circ.table
    sig, si = S.sigma, S.sigma_inverse
    bullet = FiniteBinaryOp.from_function(n, lambda a, b: sig[ct[si[a]][si[b]]])
    rep = structure_report(T.circ)
    if rep.is_group:
        einv = rep.group_inverse[e]
        for a in range(n):
            for b in range(n):
                if bullet.table[a][b] != ct[ct[a][einv]][b]:
                    raise InternalCheckError(
                        "bullet disagrees with a∘e^∘∘b on a group circ",
                        diamond=T.diamond.table, circ=T.circ.table, e=e, cell=(a, b),
                    )
    return bullet


@dataclass(frozen=True)
class SemibraceCheck:
    """Result of verify_semibrace; reason is one of the REASON_* codes."""

    ok: bool
    reason: str | None = None
    witness: tuple | None = None

    REASON_NOT_CANCELLATIVE = "not-cancellative"
    REASON_NOT_GROUP = "not-group"
    REASON_LAW_FAILS = "law-fails"

    def __bool__(self) -> bool:
        return self.ok


def verify_semibrace(diamond: FiniteBinaryOp, bullet: FiniteBinaryOp) -> SemibraceCheck:
    """Check that ⋄ is a left-cancellative semigroup, • is a group, and
    a•(b⋄c) = (a•b)⋄(a•(a^•⋄c)) for all triples.  Nothing is assumed."""
    if diamond.n != bullet.n:
        raise SizeMismatch(f"diamond has n={diamond.n} but bullet has n={bullet.n}")
    if not (is_associative(diamond) and is_left_cancellative(diamond)):
        return SemibraceCheck(False, SemibraceCheck.REASON_NOT_CANCELLATIVE)
    rep = structure_report(bullet)
    if not rep.is_group:
        return SemibraceCheck(False, SemibraceCheck.REASON_NOT_GROUP)
    n = diamond.n
    dt, bt, binv = diamond.table, bullet.table, rep.group_inverse
    for a in range(n):
        ainv = binv[a]
        for b in range(n):
            ab = bt[a][b]
            for c in range(n):
                if bt[a][dt[b][c]] != dt[ab][bt[a][dt[ainv][c]]]:
                    return SemibraceCheck(False, SemibraceCheck.REASON_LAW_FAILS, (a, b, c))
    return SemibraceCheck(True)
