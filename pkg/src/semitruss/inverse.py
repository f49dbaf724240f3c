"""Distributive-law structure when the diamond operation is an inverse
semigroup: the ternary (heap) law and its one-sided consequences, the
two-argument σ and τ maps, their identities against lambda and the natural
partial order, and the induced-lambda refinements.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    CheckResult,
    FiniteBinaryOp,
    InverseStructure,
    Table,
    inverse_structure,
    is_associative,
)
from .errors import (
    HypothesisFails,
    LambdaMissing,
    NotAssociative,
    NotInverseSemigroup,
)
from .truss import SemiTruss, derive_lambda, verify_semitruss


@dataclass(frozen=True)
class InverseSemiTruss:
    """A SemiTruss whose diamond is an inverse semigroup, with the derived
    two-argument maps σ(a,c) = a∘(c⋄c^⋄) and τ(a,b) = a∘(b^⋄⋄b) as tables."""

    base: SemiTruss
    istr: InverseStructure
    sigma2: Table
    tau2: Table

    @property
    def n(self) -> int:
        return self.base.n


def inverse_semitruss(T: SemiTruss) -> InverseSemiTruss:
    """Attach inverse-semigroup data to a semi-truss; raises
    NotInverseSemigroup when the diamond has non-unique inverses."""
    istr = inverse_structure(T.diamond)
    if istr is None:
        raise NotInverseSemigroup("diamond is not an inverse semigroup")
    n = T.n
    dt, ct, inv = T.diamond.table, T.circ.table, istr.inv
    sigma2 = tuple(tuple(ct[a][dt[c][inv[c]]] for c in range(n)) for a in range(n))
    tau2 = tuple(tuple(ct[a][dt[inv[b]][b]] for b in range(n)) for a in range(n))
    return InverseSemiTruss(T, istr, sigma2, tau2)


def _validate_inverse_pair(
    diamond: FiniteBinaryOp, circ: FiniteBinaryOp, istr: InverseStructure
) -> None:
    if not is_associative(circ):
        raise NotAssociative("circ operation is not associative")
    fresh = inverse_structure(diamond)  # also raises NotAssociative on diamond
    if fresh is None or fresh.inv != istr.inv:
        raise NotInverseSemigroup("istr does not match the diamond operation")


def check_ternary_law(
    diamond: FiniteBinaryOp, circ: FiniteBinaryOp, istr: InverseStructure
) -> CheckResult:
    """a∘(b⋄c^⋄⋄d) == (a∘b)⋄(a∘c)^⋄⋄(a∘d) over all n^4 quadruples."""
    _validate_inverse_pair(diamond, circ, istr)
    n = diamond.n
    dt, ct, inv = diamond.table, circ.table, istr.inv
    for a in range(n):
        for b in range(n):
            ab = ct[a][b]
            for c in range(n):
                bic = dt[b][inv[c]]
                left_head = dt[ab][inv[ct[a][c]]]
                for d in range(n):
                    if ct[a][dt[bic][d]] != dt[left_head][ct[a][d]]:
                        return CheckResult(False, (a, b, c, d))
    return CheckResult(True)


def derive_mu(diamond: FiniteBinaryOp, circ: FiniteBinaryOp) -> Table | None:
    """Mirror-image of derive_lambda: for each (a,b) the candidates m with
    a∘(b⋄c) = m⋄(a∘c) for every c; min-index choice, None if any cell is
    empty.  Never stored on a structure, derived on demand."""
    n = diamond.n
    dt, ct = diamond.table, circ.table
    rows = []
    for a in range(n):
        row = []
        for b in range(n):
            cands = [
                m
                for m in range(n)
                if all(ct[a][dt[b][c]] == dt[m][ct[a][c]] for c in range(n))
            ]
            if not cands:
                return None
            row.append(cands[0])
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class HeapImplicationsReport:
    """s1: ternary law; s2/s4: one-sided laws with the canonical σ/τ;
    s3/s5: existence of lambda/mu; implications_ok: s1→(s2..s5), s2→s3, s4→s5
    on this instance."""

    s1: CheckResult
    s2: CheckResult
    s3: CheckResult
    s4: CheckResult
    s5: CheckResult
    implications_ok: bool

    @property
    def non_reversal_witness(self) -> bool:
        """True when lambda exists but the ternary law fails (the implication
        chain is one-directional; such instances are legitimate)."""
        return bool(self.s3) and not bool(self.s1)


def check_heap_implications(
    diamond: FiniteBinaryOp, circ: FiniteBinaryOp, istr: InverseStructure
) -> HeapImplicationsReport:
    _validate_inverse_pair(diamond, circ, istr)
    n = diamond.n
    dt, ct, inv = diamond.table, circ.table, istr.inv

    s1 = check_ternary_law(diamond, circ, istr)

    s2 = CheckResult(True)
    for a in range(n):
        for c in range(n):
            sig = ct[a][dt[c][inv[c]]]
            ac = ct[a][c]
            for b in range(n):
                if ct[a][dt[b][c]] != dt[dt[ct[a][b]][inv[sig]]][ac]:
                    s2 = CheckResult(False, (a, b, c))
                    break
            if not s2:
                break
        if not s2:
            break

    s3 = CheckResult(derive_lambda(diamond, circ) is not None)

    s4 = CheckResult(True)
    for a in range(n):
        for b in range(n):
            tau = ct[a][dt[inv[b]][b]]
            head = dt[ct[a][b]][inv[tau]]
            for c in range(n):
                if ct[a][dt[b][c]] != dt[head][ct[a][c]]:
                    s4 = CheckResult(False, (a, b, c))
                    break
            if not s4:
                break
        if not s4:
            break

    s5 = CheckResult(derive_mu(diamond, circ) is not None)

    implications_ok = (
        (not s1 or (s2 and s3 and s4 and s5))
        and (not s2 or bool(s3))
        and (not s4 or bool(s5))
    )
    return HeapImplicationsReport(s1, s2, s3, s4, s5, implications_ok)


# ---------------------------------------------------------------------------
# sigma/lambda identities (hold for every semi-truss with inverse diamond)


@dataclass(frozen=True)
class SigmaLambdaReport:
    """Seven unconditional identities tying σ(a,b), λ(a,b), a∘b and the
    natural partial order; all must hold whenever the diamond is inverse."""

    sigma_at_idempotent: CheckResult       # σ(a,e) = a∘e
    sigma_projection_absorbed: CheckResult # σ(a,b⋄b^⋄) = σ(a,b)
    product_factorization: CheckResult     # a∘b = σ(a,b)⋄λ(a,b)
    factor_order_bounds: CheckResult       # (a∘b)⋄λ^⋄ ≤ σ and σ^⋄⋄(a∘b) ≤ λ
    idempotent_order_bounds: CheckResult   # (a∘b)(a∘b)^⋄ ≤ σσ^⋄ and (a∘b)^⋄(a∘b) ≤ λ^⋄λ
    product_lower_bound: CheckResult       # a∘(b⋄c) ≥ (a∘b)⋄σ(a,c)^⋄⋄(a∘c)
    product_shift_bound: CheckResult       # (a∘(b⋄c))⋄(a∘c)^⋄ ≤ (a∘b)⋄σ(a,b)^⋄

    def items(self) -> tuple[tuple[str, CheckResult], ...]:
        return (
            ("sigma-at-idempotent", self.sigma_at_idempotent),
            ("sigma-projection-absorbed", self.sigma_projection_absorbed),
            ("product-factorization", self.product_factorization),
            ("factor-order-bounds", self.factor_order_bounds),
            ("idempotent-order-bounds", self.idempotent_order_bounds),
            ("product-lower-bound", self.product_lower_bound),
            ("product-shift-bound", self.product_shift_bound),
        )

    @property
    def all_hold(self) -> bool:
        return all(bool(r) for _, r in self.items())


def check_sigma_lambda_identities(ist: InverseSemiTruss) -> SigmaLambdaReport:
    T = ist.base
    if T.lam is None:  # defensive; SemiTruss always carries a table
        raise LambdaMissing("semi-truss has no lambda table")
    n = ist.n
    dt, ct = T.diamond.table, T.circ.table
    lam, sig = T.lam, ist.sigma2
    inv, leq = ist.istr.inv, ist.istr.leq
    E = ist.istr.idempotent_set

    r1 = CheckResult(True)
    for a in range(n):
        for e in E:
            if sig[a][e] != ct[a][e]:
                r1 = CheckResult(False, (a, e))
                break
        if not r1:
            break

    r2 = CheckResult(True)
    for a in range(n):
        for b in range(n):
            if sig[a][dt[b][inv[b]]] != sig[a][b]:
                r2 = CheckResult(False, (a, b))
                break
        if not r2:
            break

    r3 = CheckResult(True)
    for a in range(n):
        for b in range(n):
            if ct[a][b] != dt[sig[a][b]][lam[a][b]]:
                r3 = CheckResult(False, (a, b))
                break
        if not r3:
            break

    r4 = CheckResult(True)
    for a in range(n):
        for b in range(n):
            ab = ct[a][b]
            s, l = sig[a][b], lam[a][b]
            if not (leq[dt[ab][inv[l]]][s] and leq[dt[inv[s]][ab]][l]):
                r4 = CheckResult(False, (a, b))
                break
        if not r4:
            break

    r5 = CheckResult(True)
    for a in range(n):
        for b in range(n):
            ab = ct[a][b]
            s, l = sig[a][b], lam[a][b]
            if not (
                leq[dt[ab][inv[ab]]][dt[s][inv[s]]]
                and leq[dt[inv[ab]][ab]][dt[inv[l]][l]]
            ):
                r5 = CheckResult(False, (a, b))
                break
        if not r5:
            break

    r6 = CheckResult(True)
    for a in range(n):
        for b in range(n):
            ab = ct[a][b]
            for c in range(n):
                rhs = dt[dt[ab][inv[sig[a][c]]]][ct[a][c]]
                if not leq[rhs][ct[a][dt[b][c]]]:
                    r6 = CheckResult(False, (a, b, c))
                    break
            if not r6:
                break
        if not r6:
            break

    r7 = CheckResult(True)
    for a in range(n):
        for b in range(n):
            head = dt[ct[a][b]][inv[sig[a][b]]]
            for c in range(n):
                lhs = dt[ct[a][dt[b][c]]][inv[ct[a][c]]]
                if not leq[lhs][head]:
                    r7 = CheckResult(False, (a, b, c))
                    break
            if not r7:
                break
        if not r7:
            break

    return SigmaLambdaReport(r1, r2, r3, r4, r5, r6, r7)


# ---------------------------------------------------------------------------
# induced-lambda refinements


def induced_lambda(ist: InverseSemiTruss) -> Table:
    """The table λ*(a,b) = σ(a,b)^⋄ ⋄ (a∘b); the only candidate that can
    satisfy the induced-lambda hypothesis."""
    n = ist.n
    dt, ct = ist.base.diamond.table, ist.base.circ.table
    inv, sig = ist.istr.inv, ist.sigma2
    return tuple(
        tuple(dt[inv[sig[a][b]]][ct[a][b]] for b in range(n)) for a in range(n)
    )


def resolve_hypothesis_lambda(ist: InverseSemiTruss) -> tuple[Table, str] | None:
    """Lambda table satisfying λ(a,b) = σ(a,b)^⋄⋄(a∘b), if one exists.

    The hypothesis pins every cell, so either the stored lambda already
    equals the induced table ("stored"), or the induced table itself is a
    valid lambda ("induced"), or the hypothesis is unsatisfiable (None).
    """
    star = induced_lambda(ist)
    if star == ist.base.lam:
        return star, "stored"
    if verify_semitruss(ist.base.diamond, ist.base.circ, star):
        return star, "induced"
    return None


@dataclass(frozen=True)
class InducedLambdaReport:
    """Eight identities available under the hypothesis
    λ(a,b) = σ(a,b)^⋄⋄(a∘b); lambda_source records whether the structure's
    own table satisfied it ("stored") or the induced table was used."""

    lambda_source: str
    sigma_expand_left: CheckResult      # σ(a,e⋄b) = σ(a,e)⋄σ(a,b)^⋄⋄σ(a,b)
    sigma_expand_right: CheckResult     # σ(a,e⋄b) = σ(a,b)⋄σ(a,e)^⋄⋄σ(a,e)
    sigma_difference_idempotent: CheckResult  # σ(a,b)⋄σ(a,c)^⋄ = σ(a,c)⋄σ(a,b)^⋄, both idempotent
    sigma_left_compatible: CheckResult  # σ(a,b) ~ₗ σ(a,c)
    inverse_exchange: CheckResult       # σ(a,b^⋄)⋄(a∘b)^⋄ = (a∘b^⋄)⋄σ(a,b)^⋄
    inverse_exchange_dual: CheckResult  # (a∘b)^⋄⋄σ(a,b) = σ(a,b^⋄)^⋄⋄(a∘b^⋄)
    lambda_commutes_with_inverse: CheckResult  # λ(a,b^⋄) = λ(a,b)^⋄
    lambda_idempotent_product: CheckResult     # λ(a,e⋄b) = λ(a,e)⋄λ(a,b)

    def items(self) -> tuple[tuple[str, CheckResult], ...]:
        return (
            ("sigma-expand-left", self.sigma_expand_left),
            ("sigma-expand-right", self.sigma_expand_right),
            ("sigma-difference-idempotent", self.sigma_difference_idempotent),
            ("sigma-left-compatible", self.sigma_left_compatible),
            ("inverse-exchange", self.inverse_exchange),
            ("inverse-exchange-dual", self.inverse_exchange_dual),
            ("lambda-commutes-with-inverse", self.lambda_commutes_with_inverse),
            ("lambda-idempotent-product", self.lambda_idempotent_product),
        )

    @property
    def all_hold(self) -> bool:
        return all(bool(r) for _, r in self.items())


def check_induced_lambda_identities(ist: InverseSemiTruss) -> InducedLambdaReport | None:
    """Run the eight refinement identities, or None when the induced-lambda
    hypothesis cannot be satisfied by any valid lambda for this pair."""
    resolved = resolve_hypothesis_lambda(ist)
    if resolved is None:
        return None
    lam, source = resolved
    n = ist.n
    dt, ct = ist.base.diamond.table, ist.base.circ.table
    sig = ist.sigma2
    inv = ist.istr.inv
    E = ist.istr.idempotent_set
    Eset = set(E)

    r1 = CheckResult(True)
    r2 = CheckResult(True)
    r8 = CheckResult(True)
    for a in range(n):
        for e in E:
            for b in range(n):
                seb = sig[a][dt[e][b]]
                sab, sae = sig[a][b], sig[a][e]
                if r1 and seb != dt[dt[sae][inv[sab]]][sab]:
                    r1 = CheckResult(False, (a, e, b))
                if r2 and seb != dt[dt[sab][inv[sae]]][sae]:
                    r2 = CheckResult(False, (a, e, b))
                if r8 and lam[a][dt[e][b]] != dt[lam[a][e]][lam[a][b]]:
                    r8 = CheckResult(False, (a, e, b))

    r3 = CheckResult(True)
    r4 = CheckResult(True)
    for a in range(n):
        for b in range(n):
            sab = sig[a][b]
            for c in range(n):
                sac = sig[a][c]
                x = dt[sab][inv[sac]]
                y = dt[sac][inv[sab]]
                if r3 and not (x == y and x in Eset):
                    r3 = CheckResult(False, (a, b, c))
                if r4 and x not in Eset:
                    r4 = CheckResult(False, (a, b, c))

    r5 = CheckResult(True)
    r6 = CheckResult(True)
    r7 = CheckResult(True)
    for a in range(n):
        for b in range(n):
            ab, aib = ct[a][b], ct[a][inv[b]]
            sab, sib = sig[a][b], sig[a][inv[b]]
            if r5 and dt[sib][inv[ab]] != dt[aib][inv[sab]]:
                r5 = CheckResult(False, (a, b))
            if r6 and dt[inv[ab]][sab] != dt[inv[sib]][aib]:
                r6 = CheckResult(False, (a, b))
            if r7 and lam[a][inv[b]] != inv[lam[a][b]]:
                r7 = CheckResult(False, (a, b))

    return InducedLambdaReport(source, r1, r2, r3, r4, r5, r6, r7, r8)


def lambda_restricts_to_idempotents(ist: InverseSemiTruss) -> CheckResult:
    """Under the induced-lambda hypothesis, λ(a,-) maps idempotents to
    idempotents and respects their products; raises HypothesisFails when
    the hypothesis cannot be satisfied."""
    resolved = resolve_hypothesis_lambda(ist)
    if resolved is None:
        raise HypothesisFails("no valid lambda satisfies the induced-lambda hypothesis")
    lam, _ = resolved
    dt = ist.base.diamond.table
    E = ist.istr.idempotent_set
    Eset = set(E)
    for a in range(ist.n):
        for e in E:
            if lam[a][e] not in Eset:
                return CheckResult(False, (a, e))
            for f in E:
                if lam[a][dt[e][f]] != dt[lam[a][e]][lam[a][f]]:
                    return CheckResult(False, (a, e, f))
    return CheckResult(True)


# ---------------------------------------------------------------------------
# order inequalities for products (standalone lemma suite)


def check_order_inequalities(op: FiniteBinaryOp, istr: InverseStructure) -> CheckResult:
    """For every product a⋄b = c in an inverse semigroup, the derived
    inequalities hold:

      c⋄b^⋄ ≤ a                  a^⋄⋄c ≤ b
      b⋄c^⋄ ≤ a^⋄  then  a⋄b⋄c^⋄ ≤ a⋄a^⋄  then  c⋄c^⋄ ≤ a⋄a^⋄
      c^⋄⋄a ≤ b^⋄  then  c^⋄⋄a⋄b ≤ b^⋄⋄b  then  c^⋄⋄c ≤ b^⋄⋄b

    The witness names the failing pair and inequality."""
    t = op.table
    inv, leq = istr.inv, istr.leq
    for a in range(op.n):
        for b in range(op.n):
            c = t[a][b]
            steps = (
                ("c*b' <= a", leq[t[c][inv[b]]][a]),
                ("a'*c <= b", leq[t[inv[a]][c]][b]),
                ("b*c' <= a'", leq[t[b][inv[c]]][inv[a]]),
                ("a*b*c' <= a*a'", leq[t[t[a][b]][inv[c]]][t[a][inv[a]]]),
                ("c*c' <= a*a'", leq[t[c][inv[c]]][t[a][inv[a]]]),
                ("c'*a <= b'", leq[t[inv[c]][a]][inv[b]]),
                ("c'*a*b <= b'*b", leq[t[t[inv[c]][a]][b]][t[inv[b]][b]]),
                ("c'*c <= b'*b", leq[t[inv[c]][c]][t[inv[b]][b]]),
            )
            for name, holds in steps:
                if not holds:
                    return CheckResult(False, (a, b, name))
    return CheckResult(True)
