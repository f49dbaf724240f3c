"""Structured check reports: building them from a bundle, rendering them as
canonical JSON, and replaying failure witnesses through the laws they name.

Check names are stable identifiers (documented in the README's law map);
idempotent-parameterized checks carry the choice in the name, e.g.
"sigma-cocycle[e=1]".  Every fail verdict carries the first counterexample
tuple, which replay_witness re-evaluates pointwise.
"""

from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass

from .core import (
    CheckResult,
    FiniteBinaryOp,
    StructureReport,
    Table,
    inverse_structure,
    left_quotient_table,
    structure_report,
)
from .inverse import (
    check_heap_implications,
    check_induced_lambda_identities,
    check_sigma_lambda_identities,
    inverse_semitruss,
    lambda_restricts_to_idempotents,
)
from .truss import (
    SemiTruss,
    check_action_laws,
    check_equivalence_laws,
    check_sigma_laws,
    derive_lambda,
    has_bijectivity_witness,
    law_holds_at,
    semitruss_counterexample,
    sigma_from_idempotent,
    to_semibrace,
    verify_semibrace,
)
from .yang_baxter import build_yb_from_semibrace, build_yb_from_semitruss, ybe_counterexample

SCHEMA_VERSION = "1"

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"

_TIMING_KEYS = {"duration_ms", "total_ms", "wall_time"}


@dataclass(frozen=True)
class Check:
    name: str
    law: str
    verdict: str
    witness: tuple | None
    duration_ms: float

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "law": self.law,
            "verdict": self.verdict,
            "witness": list(self.witness) if self.witness is not None else None,
            "duration_ms": self.duration_ms,
        }


@dataclass(frozen=True)
class Report:
    schema_version: str
    subject: dict
    structure: dict
    checks: tuple[Check, ...]
    total_ms: float

    @property
    def has_failure(self) -> bool:
        return any(c.verdict == FAIL for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "subject": self.subject,
            "structure": self.structure,
            "checks": [c.to_dict() for c in self.checks],
            "total_ms": self.total_ms,
        }


def _strip_timing(value):
    if isinstance(value, dict):
        return {k: _strip_timing(v) for k, v in value.items() if k not in _TIMING_KEYS}
    if isinstance(value, list):
        return [_strip_timing(v) for v in value]
    return value


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def canonical_json(doc: dict) -> str:
    """Render with all timing fields removed; used for golden comparisons."""
    return render_json(_strip_timing(doc))


class _Runner:
    def __init__(self):
        self.checks: list[Check] = []

    def add(self, name: str, law: str, fn) -> CheckResult | None:
        t0 = time.perf_counter()
        result = fn()
        dt = (time.perf_counter() - t0) * 1000.0
        if result is None:
            self.checks.append(Check(name, law, NOT_APPLICABLE, None, dt))
        else:
            verdict = PASS if result.ok else FAIL
            self.checks.append(Check(name, law, verdict, result.witness, dt))
        return result

    def skip(self, name: str, law: str) -> None:
        self.checks.append(Check(name, law, NOT_APPLICABLE, None, 0.0))


def _structure_dict(rep: StructureReport) -> dict:
    return {
        "associative": rep.associative,
        "idempotents": list(rep.idempotents),
        "left_identities": list(rep.left_identities),
        "two_sided_identity": rep.two_sided_identity,
        "left_cancellative": rep.left_cancellative,
        "is_group": rep.is_group,
        "group_inverse": list(rep.group_inverse) if rep.group_inverse else None,
        "is_inverse_semigroup": rep.is_inverse_semigroup,
    }


LAW_SEMITRUSS = "a∘(b⋄c) = (a∘b)⋄λ(a,c)"
LAW_ACT1 = "λ(a∘b,c) = λ(a,λ(b,c))"
LAW_ACT2 = "λ(a,b⋄c) = λ(a,b)⋄λ(a,c)"
LAW_ACT3 = "λ(m,a) = a for every left identity m of ∘"
LAW_HEAP_QUOTIENT = "a∘(b⋄[c\\d]) = (a∘b)⋄[(a∘c)\\(a∘d)] for c ≤ d (unique quotients)"
LAW_SIGMA_DOMINATES = "σ(a) ≤ a∘c in the divisibility pre-order"
LAW_SIGMA_QUOTIENT = "a∘(b⋄c) = (a∘b)⋄[σ(a)\\(a∘c)]"
LAW_IDENTITY_REMARK = "m∘e is a ⋄-idempotent for every left identity m of ∘"
LAW_EQUIVARIANCE = "σ(a∘b) = a∘σ(b)"
LAW_COCYCLE = "σ(a∘b) = σ(a)⋄λ(a,σ(b))"
LAW_PRODUCT_RULE = "a∘b = σ(a)⋄λ(a,b)"
LAW_BIJECTIVITY = "σ bijective iff ∘ has a right identity with respect to which e is invertible"
LAW_SEMIBRACE = "a•(b⋄c) = (a•b)⋄(a•(a^•⋄c)), ⋄ left-cancellative, • a group"
LAW_YBE = "(r×id)(id×r)(r×id) = (id×r)(r×id)(id×r)"
LAW_YB_AGREE = "corollary map equals the semi-brace map via a^• = e∘a^∘∘e"
LAW_TERNARY = "a∘(b⋄c^⋄⋄d) = (a∘b)⋄(a∘c)^⋄⋄(a∘d)"
LAW_TAU_SIGMA = "τ(a,b) = σ(a,b^⋄)"
LAW_IMPLICATIONS = "ternary ⟹ σ/τ forms ⟹ λ/μ existence (one-directional)"
LAW_HYPOTHESIS = "λ(a,b) = σ(a,b)^⋄⋄(a∘b)"
LAW_LAMBDA_ENDO = "λ(a,-) maps E(A,⋄) into itself and respects e⋄f"

SIGMA_LAMBDA_LAWS = {
    "sigma-at-idempotent": "σ(a,e) = a∘e",
    "sigma-projection-absorbed": "σ(a,b⋄b^⋄) = σ(a,b)",
    "product-factorization": "a∘b = σ(a,b)⋄λ(a,b)",
    "factor-order-bounds": "(a∘b)⋄λ(a,b)^⋄ ≤ σ(a,b) and σ(a,b)^⋄⋄(a∘b) ≤ λ(a,b)",
    "idempotent-order-bounds": "(a∘b)⋄(a∘b)^⋄ ≤ σσ^⋄ and (a∘b)^⋄⋄(a∘b) ≤ λ^⋄λ",
    "product-lower-bound": "a∘(b⋄c) ≥ (a∘b)⋄σ(a,c)^⋄⋄(a∘c)",
    "product-shift-bound": "(a∘(b⋄c))⋄(a∘c)^⋄ ≤ (a∘b)⋄σ(a,b)^⋄",
}

INDUCED_LAMBDA_LAWS = {
    "sigma-expand-left": "σ(a,e⋄b) = σ(a,e)⋄σ(a,b)^⋄⋄σ(a,b)",
    "sigma-expand-right": "σ(a,e⋄b) = σ(a,b)⋄σ(a,e)^⋄⋄σ(a,e)",
    "sigma-difference-idempotent": "σ(a,b)⋄σ(a,c)^⋄ = σ(a,c)⋄σ(a,b)^⋄ ∈ E(A,⋄)",
    "sigma-left-compatible": "σ(a,b) ~ₗ σ(a,c)",
    "inverse-exchange": "σ(a,b^⋄)⋄(a∘b)^⋄ = (a∘b^⋄)⋄σ(a,b)^⋄",
    "inverse-exchange-dual": "(a∘b)^⋄⋄σ(a,b) = σ(a,b^⋄)^⋄⋄(a∘b^⋄)",
    "lambda-commutes-with-inverse": "λ(a,b^⋄) = λ(a,b)^⋄",
    "lambda-idempotent-product": "λ(a,e⋄b) = λ(a,e)⋄λ(a,b)",
}


def bundle_report(
    diamond: FiniteBinaryOp,
    circ: FiniteBinaryOp,
    lam: Table | None,
    subject: dict,
) -> Report:
    """Run every applicable check suite on a bundle, auto-selected by the
    detected properties of the diamond operation."""
    t0 = time.perf_counter()
    runner = _Runner()

    d_rep = structure_report(diamond)
    c_rep = structure_report(circ)
    structure: dict = {
        "diamond": _structure_dict(d_rep),
        "circ": _structure_dict(c_rep),
        "lambda_provided": lam is not None,
    }

    runner.add(
        "diamond-associative", "(a⋄b)⋄c = a⋄(b⋄c)",
        lambda: _assoc_check(diamond),
    )
    runner.add(
        "circ-associative", "(a∘b)∘c = a∘(b∘c)",
        lambda: _assoc_check(circ),
    )
    if not (d_rep.associative and c_rep.associative):
        return _finish(runner, subject, structure, t0)

    if lam is None:
        holder: dict = {}

        def _derive() -> CheckResult:
            holder["derived"] = derive_lambda(diamond, circ)
            return CheckResult(holder["derived"] is not None)

        runner.add("lambda-derivable", LAW_SEMITRUSS, _derive)
        if holder["derived"] is None:
            return _finish(runner, subject, structure, t0)
        lam, uniq = holder["derived"]
    else:
        uniq = None
    law_result = runner.add(
        "semitruss-law", LAW_SEMITRUSS,
        lambda: _law_check(diamond, circ, lam),
    )
    if not law_result:
        return _finish(runner, subject, structure, t0)

    if uniq is None:
        from .truss import make_semitruss

        T = make_semitruss(diamond, circ, lam)
    else:
        T = SemiTruss(diamond, circ, lam, uniq)
    structure["lambda_unique_everywhere"] = all(all(row) for row in T.lam_unique)

    suites = []
    if d_rep.left_cancellative:
        suites.append("cancellative")
        _run_cancellative_suite(runner, T, d_rep, c_rep, structure)
    if d_rep.is_inverse_semigroup:
        suites.append("inverse")
        _run_inverse_suite(runner, T, structure)
    structure["suites"] = suites
    return _finish(runner, subject, structure, t0)


def _assoc_check(op: FiniteBinaryOp) -> CheckResult:
    from .core import associativity_counterexample

    witness = associativity_counterexample(op)
    return CheckResult(witness is None, witness)


def _law_check(diamond, circ, lam) -> CheckResult:
    witness = semitruss_counterexample(diamond, circ, lam)
    return CheckResult(witness is None, witness)


def _run_cancellative_suite(runner, T, d_rep, c_rep, structure) -> None:
    actions = check_action_laws(T)
    runner.add("action-composition", LAW_ACT1, lambda: actions.act1)
    runner.add("action-distributes", LAW_ACT2, lambda: actions.act2)
    runner.add("action-identity", LAW_ACT3, lambda: actions.act3)

    equiv = check_equivalence_laws(T)
    runner.add("quotient-heap-law", LAW_HEAP_QUOTIENT, lambda: equiv.quotient_heap_law)
    for per_e in equiv.per_idempotent:
        e = per_e.e
        runner.add(f"sigma-dominates[e={e}]", LAW_SIGMA_DOMINATES, lambda p=per_e: p.sigma_dominates)
        runner.add(f"sigma-quotient-law[e={e}]", LAW_SIGMA_QUOTIENT, lambda p=per_e: p.sigma_quotient_law)
    runner.add("sigma-idempotent-at-identity", LAW_IDENTITY_REMARK, lambda: equiv.identity_remark)

    for e in d_rep.idempotents:
        S = sigma_from_idempotent(T, e)
        laws = check_sigma_laws(T, S)
        runner.add(f"sigma-equivariance[e={e}]", LAW_EQUIVARIANCE, lambda r=laws: r.equivariance)
        runner.add(f"sigma-cocycle[e={e}]", LAW_COCYCLE, lambda r=laws: r.cocycle)
        runner.add(f"sigma-product-rule[e={e}]", LAW_PRODUCT_RULE, lambda r=laws: r.product_rule)
        def _bijectivity(S=S, e=e) -> CheckResult:
            agrees = S.bijective == has_bijectivity_witness(T.circ, e)
            return CheckResult(agrees, None if agrees else (e,))

        runner.add(f"sigma-bijectivity-characterization[e={e}]", LAW_BIJECTIVITY, _bijectivity)
        # the semi-brace and Yang-Baxter checks carry a group hypothesis on
        # ∘; with a bijective σ alone the conversion exists but the result
        # need not be a group, so those checks do not apply
        if not (S.bijective and c_rep.is_group):
            runner.skip(f"semibrace-law[e={e}]", LAW_SEMIBRACE)
            runner.skip(f"yb-braid[e={e}]", LAW_YBE)
            runner.skip(f"yb-agreement[e={e}]", LAW_YB_AGREE)
            continue
        bullet = to_semibrace(T, e)
        runner.add(
            f"semibrace-law[e={e}]", LAW_SEMIBRACE,
            lambda b=bullet: _semibrace_check(T.diamond, b),
        )
        r_map = build_yb_from_semitruss(T, e)

        def _braid(r=r_map) -> CheckResult:
            witness = ybe_counterexample(r)
            return CheckResult(witness is None, witness)

        runner.add(f"yb-braid[e={e}]", LAW_YBE, _braid)
        runner.add(
            f"yb-agreement[e={e}]", LAW_YB_AGREE,
            lambda r=r_map, b=bullet: _yb_agreement(T.diamond, b, r),
        )


def _semibrace_check(diamond, bullet) -> CheckResult:
    result = verify_semibrace(diamond, bullet)
    return CheckResult(result.ok, result.witness)


def _yb_agreement(diamond, bullet, r_map) -> CheckResult:
    other = build_yb_from_semibrace(diamond, bullet)
    for idx, (x, y) in enumerate(r_map.pairs):
        if other.pairs[idx] != (x, y):
            a, b = divmod(idx, r_map.n)
            return CheckResult(False, (a, b))
    return CheckResult(True)


def _run_inverse_suite(runner, T, structure) -> None:
    ist = inverse_semitruss(T)
    istr = ist.istr

    runner.add(
        "tau-sigma-inverse", LAW_TAU_SIGMA,
        lambda: _tau_sigma_check(ist),
    )
    heap = check_heap_implications(T.diamond, T.circ, istr)
    structure["heap_statements"] = {
        "ternary_law": bool(heap.s1),
        "sigma_pair_law": bool(heap.s2),
        "lambda_exists": bool(heap.s3),
        "tau_pair_law": bool(heap.s4),
        "mu_exists": bool(heap.s5),
    }
    runner.add(
        "heap-law-implications", LAW_IMPLICATIONS,
        lambda: CheckResult(heap.implications_ok),
    )

    sl = check_sigma_lambda_identities(ist)
    for name, result in sl.items():
        runner.add(f"sigma-lambda.{name}", SIGMA_LAMBDA_LAWS[name], lambda r=result: r)

    induced = check_induced_lambda_identities(ist)
    if induced is None:
        runner.skip("induced-lambda-hypothesis", LAW_HYPOTHESIS)
        return
    runner.add(
        "induced-lambda-hypothesis", LAW_HYPOTHESIS,
        lambda: CheckResult(True),
    )
    structure["induced_lambda_source"] = induced.lambda_source
    for name, result in induced.items():
        runner.add(f"induced-lambda.{name}", INDUCED_LAMBDA_LAWS[name], lambda r=result: r)
    runner.add(
        "lambda-idempotent-endomorphism", LAW_LAMBDA_ENDO,
        lambda: lambda_restricts_to_idempotents(ist),
    )


def _tau_sigma_check(ist) -> CheckResult:
    n = ist.n
    inv = ist.istr.inv
    for a in range(n):
        for b in range(n):
            if ist.tau2[a][b] != ist.sigma2[a][inv[b]]:
                return CheckResult(False, (a, b))
    return CheckResult(True)


def _finish(runner: _Runner, subject: dict, structure: dict, t0: float) -> Report:
    return Report(
        schema_version=SCHEMA_VERSION,
        subject=subject,
        structure=structure,
        checks=tuple(runner.checks),
        total_ms=(time.perf_counter() - t0) * 1000.0,
    )


# ---------------------------------------------------------------------------
# witness replay

_NAME_PARAM = re.compile(r"^(?P<base>[a-z0-9.-]+?)(?:\[e=(?P<e>\d+)\])?$")


def replay_witness(
    name: str,
    diamond: FiniteBinaryOp,
    circ: FiniteBinaryOp,
    lam: Table | None,
    witness: tuple,
) -> bool:
    """Re-evaluate the named check's law at the witness tuple.

    Returns True when the law holds there, so feeding back a reported fail
    witness must return False.  Raises KeyError for checks without a
    pointwise law."""
    m = _NAME_PARAM.match(name)
    if not m:
        raise KeyError(f"unparseable check name {name!r}")
    base = m.group("base")
    e = int(m.group("e")) if m.group("e") is not None else None
    dt, ct = diamond.table, circ.table

    if base in ("diamond-associative", "circ-associative"):
        t = dt if base.startswith("diamond") else ct
        a, b, c = witness
        return t[t[a][b]][c] == t[a][t[b][c]]
    if base in ("semitruss-law", "lambda-derivable"):
        a, b, c = witness
        return law_holds_at(diamond, circ, lam, a, b, c)
    if base == "action-composition":
        a, b, c = witness
        return lam[ct[a][b]][c] == lam[a][lam[b][c]]
    if base == "action-distributes":
        a, b, c = witness
        return lam[a][dt[b][c]] == dt[lam[a][b]][lam[a][c]]
    if base == "action-identity":
        m_id, a = witness
        return lam[m_id][a] == a
    if base == "quotient-heap-law":
        a, b, c, d = witness
        q = left_quotient_table(diamond)
        if q[c][d] is None:
            return True  # pair was not in the pre-order; not a violation
        rq = q[ct[a][c]][ct[a][d]]
        return rq is not None and ct[a][dt[b][q[c][d]]] == dt[ct[a][b]][rq]
    if base == "sigma-dominates":
        a, c = witness
        q = left_quotient_table(diamond)
        return q[ct[a][e]][ct[a][c]] is not None
    if base == "sigma-quotient-law":
        a, b, c = witness
        q = left_quotient_table(diamond)
        rq = q[ct[a][e]][ct[a][c]]
        return rq is not None and ct[a][dt[b][c]] == dt[ct[a][b]][rq]
    if base == "sigma-idempotent-at-identity":
        m_id, e_id = witness
        s = ct[m_id][e_id]
        return dt[s][s] == s
    if base in ("sigma-equivariance", "sigma-cocycle", "sigma-product-rule"):
        a, b = witness
        sig = tuple(ct[x][e] for x in range(diamond.n))
        if base == "sigma-equivariance":
            return sig[ct[a][b]] == ct[a][sig[b]]
        if base == "sigma-cocycle":
            return sig[ct[a][b]] == dt[sig[a]][lam[a][sig[b]]]
        return ct[a][b] == dt[sig[a]][lam[a][b]]
    if base == "semibrace-law":
        from .truss import make_semitruss

        T = make_semitruss(diamond, circ, lam)
        bullet = to_semibrace(T, e)
        rep = structure_report(bullet)
        a, b, c = witness
        bt, binv = bullet.table, rep.group_inverse
        return bt[a][dt[b][c]] == dt[bt[a][b]][bt[a][dt[binv[a]][c]]]
    if base == "yb-braid":
        from .truss import make_semitruss

        T = make_semitruss(diamond, circ, lam)
        r = build_yb_from_semitruss(T, e)
        a, b, c = witness
        n = r.n

        def r12(x, y, z):
            p, q = r.pairs[x * n + y]
            return p, q, z

        def r23(x, y, z):
            p, q = r.pairs[y * n + z]
            return x, p, q

        return r12(*r23(*r12(a, b, c))) == r23(*r12(*r23(a, b, c)))
    if base == "ternary-heap-law":
        istr = inverse_structure(diamond)
        a, b, c, d = witness
        inv = istr.inv
        return ct[a][dt[dt[b][inv[c]]][d]] == dt[dt[ct[a][b]][inv[ct[a][c]]]][ct[a][d]]
    if base == "tau-sigma-inverse":
        istr = inverse_structure(diamond)
        inv = istr.inv
        a, b = witness
        return ct[a][dt[inv[b]][b]] == ct[a][dt[inv[b]][inv[inv[b]]]]
    raise KeyError(f"no pointwise replay evaluator for check {name!r}")


# ---------------------------------------------------------------------------
# census and lemma-suite documents


def census_document(record) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "subject": {
            "kind": "census",
            "n": record.n,
            "filters": list(record.filters),
            "iso": record.iso,
        },
        "census": record.to_dict(),
    }


def lemma_document(max_n: int, results: list[tuple[int, int, CheckResult]]) -> dict:
    """results: (carrier size, semigroup index in enumeration order, outcome)."""
    checks = []
    for n, index, result in results:
        checks.append(
            {
                "name": f"order-inequalities[n={n}][{index}]",
                "law": "product inequalities c⋄b^⋄ ≤ a etc. for every a⋄b = c",
                "verdict": PASS if result.ok else FAIL,
                "witness": list(result.witness) if result.witness else None,
            }
        )
    return {
        "schema_version": SCHEMA_VERSION,
        "subject": {"kind": "lemma-tests", "max_n": max_n},
        "checks": checks,
    }
