import pytest

from semitruss import (
    FiniteBinaryOp,
    cyclic_group,
    idempotents,
    inverse_structure,
    is_associative,
    is_left_cancellative,
    left_compatible,
    left_identities,
    left_quotient,
    structure_report,
)
from semitruss.core import associativity_counterexample, left_quotient_table
from semitruss.errors import NotAssociative, NotLeftCancellative


def test_table_validation():
    with pytest.raises(ValueError):
        FiniteBinaryOp(2, ((0, 1), (1, 2)))
    with pytest.raises(ValueError):
        FiniteBinaryOp(2, ((0, 1),))
    with pytest.raises(ValueError):
        FiniteBinaryOp(0, ())


def test_associativity_named_tables(z2, right2, or2, nand2):
    assert is_associative(z2)
    assert is_associative(right2)
    assert is_associative(or2)
    assert not is_associative(nand2)
    witness = associativity_counterexample(nand2)
    a, b, c = witness
    t = nand2.table
    assert t[t[a][b]][c] != t[a][t[b][c]]


def test_associativity_matches_brute_force_n2():
    # all 16 tables on two elements, checked against an inline triple loop
    import itertools

    for cells in itertools.product(range(2), repeat=4):
        op = FiniteBinaryOp(2, (cells[:2], cells[2:]))
        brute = all(
            op.table[op.table[a][b]][c] == op.table[a][op.table[b][c]]
            for a in range(2)
            for b in range(2)
            for c in range(2)
        )
        assert is_associative(op) == brute


def test_idempotents(z2, right2, meet2):
    assert idempotents(z2) == (0,)
    assert idempotents(right2) == (0, 1)
    assert idempotents(meet2) == (0, 1)


def test_left_cancellative(z2, leftz2, right2):
    assert is_left_cancellative(z2)
    assert not is_left_cancellative(leftz2)
    assert is_left_cancellative(right2)


def test_left_quotient_examples(z2, right2, leftz2):
    assert left_quotient(z2, 1, 0) == 1
    for a in range(2):
        for b in range(2):
            assert left_quotient(right2, a, b) == b
    with pytest.raises(NotLeftCancellative):
        left_quotient(leftz2, 0, 0)


def test_left_quotient_consistency(semigroups):
    # cross-check against a brute scan on every left-cancellative semigroup
    for n, ops in semigroups.items():
        for op in ops:
            if not is_left_cancellative(op):
                continue
            q = left_quotient_table(op)
            for a in range(n):
                for b in range(n):
                    brute = [c for c in range(n) if op.table[a][c] == b]
                    if q[a][b] is None:
                        assert brute == []
                    else:
                        assert brute == [q[a][b]]
                        assert op.table[a][q[a][b]] == b


def test_structure_report_group(z2):
    rep = structure_report(z2)
    assert rep.is_group
    assert rep.group_inverse == (0, 1)
    assert rep.two_sided_identity == 0
    assert rep.associative and rep.left_cancellative


def test_structure_report_meet(meet2):
    rep = structure_report(meet2)
    assert rep.associative
    assert not rep.left_cancellative  # row 0 is constant
    assert rep.is_inverse_semigroup
    assert not rep.is_group


def test_structure_report_left_zero(leftz2):
    # every x satisfies a*x*a = a and x*a*x = x, so inverses are non-unique
    rep = structure_report(leftz2)
    assert rep.associative
    assert not rep.is_inverse_semigroup


def test_inverse_structure_group(z2, z3):
    for op in (z2, z3):
        istr = inverse_structure(op)
        rep = structure_report(op)
        assert istr is not None
        assert istr.inv == rep.group_inverse
        # sole idempotent is the identity, so the order is equality
        for a in range(op.n):
            for b in range(op.n):
                assert istr.leq[a][b] == (a == b)


def test_inverse_structure_meet(meet2):
    istr = inverse_structure(meet2)
    assert istr.inv == (0, 1)
    assert istr.idempotent_set == (0, 1)
    assert istr.leq[0][1] and istr.leq[0][0] and istr.leq[1][1]
    assert not istr.leq[1][0]


def test_inverse_structure_absent(leftz2):
    assert inverse_structure(leftz2) is None


def test_inverse_structure_requires_associative(nand2):
    with pytest.raises(NotAssociative):
        inverse_structure(nand2)


def test_left_compatible(meet2, z3):
    istr = inverse_structure(meet2)
    assert left_compatible(istr, meet2, 0, 1)  # 0*1 = 0 idempotent
    istr3 = inverse_structure(z3)
    assert not left_compatible(istr3, z3, 1, 0)  # 1*0^inv = 1 not idempotent
    for a in range(2):
        assert left_compatible(istr, meet2, a, a)


def test_left_compatible_reflexive_everywhere(semigroups):
    for n, ops in semigroups.items():
        for op in ops:
            istr = inverse_structure(op)
            if istr is None:
                continue
            for a in range(n):
                assert left_compatible(istr, op, a, a)


def test_idempotents_are_left_identities_when_cancellative(semigroups):
    for _, ops in semigroups.items():
        for op in ops:
            if not is_left_cancellative(op):
                continue
            lids = set(left_identities(op))
            for e in idempotents(op):
                assert e in lids


def test_group_implies_inverse_structure(semigroups):
    for _, ops in semigroups.items():
        for op in ops:
            rep = structure_report(op)
            if rep.is_group:
                istr = inverse_structure(op)
                assert istr is not None
                assert istr.inv == rep.group_inverse


def test_structure_report_internal_consistency(semigroups):
    for _, ops in semigroups.items():
        for op in ops:
            rep = structure_report(op)
            if rep.is_group:
                assert rep.associative and rep.left_cancellative
                assert rep.two_sided_identity is not None
                assert rep.group_inverse is not None
            if rep.is_inverse_semigroup:
                assert rep.associative
            if rep.group_inverse is not None:
                assert rep.is_group


def test_inverse_structure_invariants(semigroups):
    """Involution, antihomomorphism, commuting idempotents, and the partial
    order's axioms, for every accepted operation."""
    for n, ops in semigroups.items():
        for op in ops:
            istr = inverse_structure(op)
            if istr is None:
                continue
            t, inv, leq = op.table, istr.inv, istr.leq
            E = set(istr.idempotent_set)
            for a in range(n):
                assert t[t[a][inv[a]]][a] == a
                assert t[t[inv[a]][a]][inv[a]] == inv[a]
                assert inv[inv[a]] == a
                for b in range(n):
                    assert inv[t[a][b]] == t[inv[b]][inv[a]]
            for e in E:
                for f in E:
                    assert t[e][f] == t[f][e]
            # leq is a partial order...
            for a in range(n):
                assert leq[a][a]
                for b in range(n):
                    if leq[a][b] and leq[b][a]:
                        assert a == b
                    for c in range(n):
                        if leq[a][b] and leq[b][c]:
                            assert leq[a][c]
            # ...compatible on both sides and preserved by inv...
            for a in range(n):
                for b in range(n):
                    if not leq[a][b]:
                        continue
                    assert leq[inv[a]][inv[b]]
                    for c in range(n):
                        assert leq[t[c][a]][t[c][b]]
                        assert leq[t[a][c]][t[b][c]]
            # ...and agrees with the left-sided characterization
            for a in range(n):
                for b in range(n):
                    alt = any(t[e][b] == a for e in E)
                    assert leq[a][b] == alt


def test_degenerate_carrier():
    one = cyclic_group(1)
    rep = structure_report(one)
    assert rep.is_group and rep.is_inverse_semigroup and rep.left_cancellative
    assert left_quotient(one, 0, 0) == 0
    istr = inverse_structure(one)
    assert istr.inv == (0,) and istr.leq == ((True,),)
