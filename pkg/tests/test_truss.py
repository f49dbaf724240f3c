import pytest

from semitruss import (
    FiniteBinaryOp,
    check_action_laws,
    check_equivalence_laws,
    check_sigma_laws,
    derive_lambda,
    make_semitruss,
    sigma_from_idempotent,
    to_semibrace,
    verify_semibrace,
    verify_semitruss,
)
from semitruss.census import enumerate_semigroups
from semitruss.errors import (
    LambdaMissing,
    NotAssociative,
    NotIdempotent,
    NotLeftCancellative,
    SemiTrussLawViolation,
    SigmaNotBijective,
    SizeMismatch,
)
from semitruss.truss import SemibraceCheck, has_bijectivity_witness

C_PROJECTION = ((0, 1), (0, 1))  # lambda(a, c) = c
XOR = ((0, 1), (1, 0))           # lambda(a, c) = a xor c


def test_verify_semitruss_examples(z2, right2):
    from semitruss.truss import semitruss_counterexample

    assert verify_semitruss(z2, z2, C_PROJECTION)
    assert verify_semitruss(right2, z2, XOR)
    assert not verify_semitruss(z2, z2, ((0, 0), (0, 0)))
    assert semitruss_counterexample(z2, z2, ((0, 0), (0, 0))) == (0, 0, 1)


def test_verify_semitruss_errors(z2, z3, nand2):
    with pytest.raises(SizeMismatch):
        verify_semitruss(z2, z3, C_PROJECTION)
    with pytest.raises(SizeMismatch):
        derive_lambda(z2, z3)
    with pytest.raises(NotAssociative):
        verify_semitruss(nand2, z2, C_PROJECTION)
    with pytest.raises(NotAssociative):
        verify_semitruss(z2, nand2, C_PROJECTION)


def test_derive_lambda_group_truss(z2):
    lam, uniq = derive_lambda(z2, z2)
    assert lam == C_PROJECTION
    assert all(all(row) for row in uniq)


def test_derive_lambda_right_projection(right2, z2):
    lam, uniq = derive_lambda(right2, z2)
    assert lam == XOR
    assert all(all(row) for row in uniq)


def test_derive_lambda_left_zero_not_unique(leftz2, z2):
    # both sides ignore the right diamond factor, so every cell is free
    lam, uniq = derive_lambda(leftz2, z2)
    assert lam == ((0, 0), (0, 0))  # min-index choice
    assert not any(any(row) for row in uniq)
    assert verify_semitruss(leftz2, z2, lam)
    assert verify_semitruss(leftz2, z2, ((1, 1), (1, 1)))


def test_derive_lambda_absent(meet2, z2):
    assert derive_lambda(meet2, z2) is None


def test_derive_roundtrip_all_n2_pairs(semigroups):
    for dia in semigroups[2]:
        for circ in semigroups[2]:
            derived = derive_lambda(dia, circ)
            if derived is not None:
                assert verify_semitruss(dia, circ, derived[0])


def test_lambda_unique_iff_cancellative(lc_trusses):
    for _, trusses in lc_trusses.items():
        for T in trusses:
            assert all(all(row) for row in T.lam_unique)


def test_make_semitruss_rejects_bad_lambda(z2):
    with pytest.raises(SemiTrussLawViolation):
        make_semitruss(z2, z2, ((0, 0), (0, 0)))


def test_make_semitruss_lambda_missing(meet2, z2):
    with pytest.raises(LambdaMissing):
        make_semitruss(meet2, z2)


def test_action_laws_group_truss(z2):
    T = make_semitruss(z2, z2)
    rep = check_action_laws(T)
    assert rep.act1 and rep.act2
    assert rep.act3 is not None and rep.act3.ok
    assert rep.all_hold


def test_action_laws_right_projection(right2, z2):
    rep = check_action_laws(make_semitruss(right2, z2))
    assert rep.all_hold


def test_action_laws_can_fail_without_cancellation(leftz2, z2):
    # min-candidate lambda on a non-cancellative diamond: the identity law
    # breaks (lambda(0, a) = 0), while both composition laws happen to hold
    rep = check_action_laws(make_semitruss(leftz2, z2))
    assert rep.act1.ok and rep.act2.ok
    assert rep.act3 is not None and not rep.act3.ok
    assert rep.act3.witness == (0, 1)


def test_sigma_group_truss(z2):
    T = make_semitruss(z2, z2)
    S = sigma_from_idempotent(T, 0)
    assert S.sigma == (0, 1)
    assert S.bijective
    assert S.right_identity == 0 and S.e_inverse == 0
    laws = check_sigma_laws(T, S)
    assert laws.all_hold


def test_sigma_right_projection_both_idempotents(right2, z2):
    T = make_semitruss(right2, z2)
    S0 = sigma_from_idempotent(T, 0)
    assert S0.sigma == (0, 1) and S0.bijective
    # e = 1: sigma(a) = a xor 1; sigma^{-1}(1) = 0 is the right identity of
    # xor and u = sigma^{-1}(0) = 1 inverts e with respect to it
    S1 = sigma_from_idempotent(T, 1)
    assert S1.sigma == (1, 0) and S1.bijective
    assert S1.right_identity == 0 and S1.e_inverse == 1
    assert S1.sigma_inverse == (1, 0)
    for S in (S0, S1):
        assert check_sigma_laws(T, S).all_hold


def test_sigma_not_idempotent(z2):
    T = make_semitruss(z2, z2)
    with pytest.raises(NotIdempotent):
        sigma_from_idempotent(T, 1)


def test_sigma_bijectivity_characterization(lc_trusses):
    from semitruss import idempotents

    for _, trusses in lc_trusses.items():
        for T in trusses:
            for e in idempotents(T.diamond):
                S = sigma_from_idempotent(T, e)
                assert S.bijective == has_bijectivity_witness(T.circ, e)


def test_equivalence_laws(z2, right2):
    assert check_equivalence_laws(make_semitruss(z2, z2)).all_hold
    rep = check_equivalence_laws(make_semitruss(right2, z2))
    assert rep.all_hold
    assert {p.e for p in rep.per_idempotent} == {0, 1}
    assert rep.identity_remark is not None and rep.identity_remark.ok


def test_equivalence_requires_cancellative(leftz2, z2):
    with pytest.raises(NotLeftCancellative):
        check_equivalence_laws(make_semitruss(leftz2, z2))


def test_to_semibrace_group_truss(z2):
    T = make_semitruss(z2, z2)
    bullet = to_semibrace(T, 0)
    assert bullet.table == z2.table


def test_to_semibrace_right_projection(right2, z2):
    T = make_semitruss(right2, z2)
    assert to_semibrace(T, 0).table == z2.table  # sigma = id, so bullet = circ
    # e = 1: bullet(a, b) = a xor b xor 1
    assert to_semibrace(T, 1).table == ((1, 0), (0, 1))


def test_to_semibrace_sigma_not_bijective(right2, const0_2):
    T = make_semitruss(right2, const0_2)
    with pytest.raises(SigmaNotBijective):
        to_semibrace(T, 0)


def test_to_semibrace_not_idempotent(z2):
    with pytest.raises(NotIdempotent):
        to_semibrace(make_semitruss(z2, z2), 1)


def test_verify_semibrace_examples(z2, right2, leftz2):
    assert verify_semibrace(z2, z2).ok
    assert verify_semibrace(right2, z2).ok
    bad = verify_semibrace(leftz2, z2)
    assert not bad
    assert bad.reason == SemibraceCheck.REASON_NOT_CANCELLATIVE


def test_verify_semibrace_not_group(z2, meet2):
    res = verify_semibrace(z2, meet2)
    assert not res and res.reason == SemibraceCheck.REASON_NOT_GROUP


def test_verify_semibrace_law_fails(z2):
    # the group with identity 1 on {0, 1} does not satisfy the law against z2
    other_group = FiniteBinaryOp.from_rows([[1, 0], [0, 1]])
    res = verify_semibrace(z2, other_group)
    assert not res
    assert res.reason == SemibraceCheck.REASON_LAW_FAILS
    assert res.witness == (0, 0, 0)


def test_semibrace_route_matches_direct_formula(lc_trusses):
    # whenever circ is a group, bullet must equal a∘e^∘∘b (cross-checked
    # internally; this exercises that path across the population)
    from semitruss import idempotents, structure_report

    for _, trusses in lc_trusses.items():
        for T in trusses:
            rep = structure_report(T.circ)
            if not rep.is_group:
                continue
            for e in idempotents(T.diamond):
                bullet = to_semibrace(T, e)
                assert verify_semibrace(T.diamond, bullet).ok


def test_action_and_equivalence_sampled_order_four():
    """Same law suites on a deterministic order-4 sample: every
    left-cancellative diamond against all group circs plus the first fifty
    semigroups."""
    from semitruss import idempotents, is_left_cancellative, structure_report

    all4 = list(enumerate_semigroups(4, allow_order_four=True))
    diamonds = [op for op in all4 if is_left_cancellative(op)]
    circs = [op for op in all4 if structure_report(op).is_group] + all4[:50]
    for dia in diamonds:
        for circ in circs:
            derived = derive_lambda(dia, circ)
            if derived is None:
                continue
            T = make_semitruss(dia, circ, derived[0])
            assert check_action_laws(T).all_hold
            assert check_equivalence_laws(T).all_hold
            for e in idempotents(dia):
                S = sigma_from_idempotent(T, e)
                assert check_sigma_laws(T, S).all_hold
                assert S.bijective == has_bijectivity_witness(circ, e)
