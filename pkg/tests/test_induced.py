import pytest

import qgl21.scalars as sc
from qgl21.induced import (
    ACT_GENERATORS, A0Rep, Gl11Rep, InducedVector, RepresentationError,
    act, act_oracle, apply_uelement, check_relations_on_module,
    fermionic_gl11_rep, highest_weight_a0rep, trivial_gl11_rep,
    validate_a0rep, validate_gl11_rep,
)
from qgl21.qmatrix import QMatrix
from qgl21.superalgebra import UElement, relation_set
from qgl21.reporting import all_passed

state = InducedVector.basis_state


@pytest.fixture(scope="module")
def trivial_rep():
    return highest_weight_a0rep(trivial_gl11_rep())


@pytest.fixture(scope="module")
def fermionic_rep():
    return highest_weight_a0rep(fermionic_gl11_rep())


def test_gl11_plugins_satisfy_their_relations():
    assert all_passed(validate_gl11_rep(trivial_gl11_rep()))
    assert all_passed(validate_gl11_rep(fermionic_gl11_rep()))


def test_highest_weight_structure(trivial_rep, fermionic_rep):
    for rep in (trivial_rep, fermionic_rep):
        assert rep.mats["E21"].nnz() == 0
        assert rep.mats["K1"] == QMatrix.identity(rep.dim, sc.P1)
        # E31 = -E21 E32 + q^-1 E32 E21 vanishes automatically
        assert rep.mat("E31").nnz() == 0
    assert trivial_rep.dim == 1
    assert fermionic_rep.dim == 2


def test_a0rep_validation_passes(trivial_rep, fermionic_rep):
    assert all_passed(validate_a0rep(trivial_rep))
    assert all_passed(validate_a0rep(fermionic_rep))


def test_corrupted_rep_is_detected():
    base = fermionic_gl11_rep()
    mats = dict(base.mats)
    mats["k2"] = mats["k2"].scale(sc.Q)
    bad = Gl11Rep(dim=2, mats=mats, parity=base.parity)
    report = {r.name: r.passed for r in validate_gl11_rep(bad)}
    assert not report["k2 k2^-1 = 1"]
    assert not report["{e23, e32} = cartan"]
    assert report["k2 e23 = q e23 k2"]      # a global scale cancels here
    with pytest.raises(RepresentationError):
        highest_weight_a0rep(bad)


def test_corrupted_a0rep_reports_relations(fermionic_rep):
    mats = dict(fermionic_rep.mats)
    mats["K2"] = mats["K2"].scale(sc.Q)
    bad = A0Rep(dim=2, mats=mats, parity=fermionic_rep.parity)
    names = [r.name for r in validate_a0rep(bad) if not r.passed]
    assert any("K2 K2^-1" in n for n in names)
    assert any("E23, E32" in n for n in names)


# -- closed-form action -------------------------------------------------------

def test_act_e12_raises(fermionic_rep):
    assert act("E12", state(2, 1, 1), fermionic_rep) == state(3, 1, 1)


def test_act_k2_scaling(fermionic_rep):
    out = act("K2", state(3, 0, 0), fermionic_rep)
    assert out == state(3, 0, 0, coeff=sc.q_power(-3) * sc.P2)


def test_act_e23_at_origin(trivial_rep, fermionic_rep):
    # the -q[N] term vanishes at N = 0
    assert act("E23", state(0, 0, 0), trivial_rep).is_zero()
    out = act("E23", state(0, 0, 0), fermionic_rep)
    assert out == state(0, 0, 1)


def test_act_e32_at_m_zero(fermionic_rep):
    # the M-lowering term vanishes at M = 0
    out = act("E32", state(4, 0, 1), fermionic_rep)
    lam = (sc.P2 * sc.P3 - (sc.P2 * sc.P3).invert()) * sc.EPS_INV
    assert out == state(4, 0, 0, coeff=lam)


def test_act_e13_nilpotent(fermionic_rep):
    assert act("E13", state(2, 0, 0), fermionic_rep) == \
        state(2, 1, 0, coeff=sc.q_power(-2))
    assert act("E13", state(2, 1, 0), fermionic_rep).is_zero()


def test_act_oracle_e21_matches_theorem_at_n1(trivial_rep):
    out = act_oracle("E21", state(1, 0, 0), trivial_rep)
    coeff = -(sc.EPS_INV) * (sc.P1 * sc.P2.invert() - sc.P1.invert() * sc.P2)
    assert out == state(0, 0, 0, coeff=coeff)
    assert out == act("E21", state(1, 0, 0), trivial_rep)


@pytest.mark.parametrize("g", ACT_GENERATORS)
def test_act_matches_oracle(g, trivial_rep, fermionic_rep):
    for rep in (trivial_rep, fermionic_rep):
        for N in range(4):
            for M in (0, 1):
                for i in range(rep.dim):
                    v = state(N, M, i)
                    assert act(g, v, rep) == act_oracle(g, v, rep)


def test_act_matches_single_swap_oracle(fermionic_rep):
    for g in ("E21", "E31", "E23"):
        v = state(2, 1, 0)
        assert act(g, v, fermionic_rep) == \
            act_oracle(g, v, fermionic_rep, single_swaps=True)


def test_linearity(fermionic_rep):
    v = state(1, 0, 0).scale(sc.Q) + state(2, 1, 1)
    direct = act("E21", v, fermionic_rep)
    split = act("E21", state(1, 0, 0), fermionic_rep).scale(sc.Q) \
        + act("E21", state(2, 1, 1), fermionic_rep)
    assert direct == split


# -- relations on the module --------------------------------------------------

def test_module_relations_trivial(trivial_rep):
    assert all_passed(check_relations_on_module(trivial_rep, 6))


def test_module_relations_fermionic_small(fermionic_rep):
    assert all_passed(check_relations_on_module(fermionic_rep, 4))


def test_cartan_anticommutator_instance(fermionic_rep):
    rel = next(r for r in relation_set() if "E23, E32" in r.name)
    for N, M, i in ((0, 0, 0), (2, 1, 1), (3, 0, 1)):
        v = state(N, M, i)
        lhs = apply_uelement(rel.lhs, v, fermionic_rep)
        rhs = apply_uelement(rel.rhs, v, fermionic_rep)
        assert lhs == rhs


def test_odd_squares_annihilate(fermionic_rep):
    sq = UElement.word(("E23", 1), ("E23", 1))
    for N, M in ((0, 0), (1, 1), (3, 0)):
        assert apply_uelement(sq, state(N, M, 0), fermionic_rep).is_zero()


def test_weight_consistency(trivial_rep, fermionic_rep):
    # K1 K2 K3 scales |N,M> (x) v independently of N and M
    word = UElement.word(("K1", 1), ("K2", 1), ("K3", 1))
    out = apply_uelement(word, state(0, 0, 0), trivial_rep)
    assert out == state(0, 0, 0, coeff=sc.P1)
    for N, M in ((1, 0), (3, 1), (5, 0)):
        out = apply_uelement(word, state(N, M, 0), trivial_rep)
        assert out == state(N, M, 0, coeff=sc.P1)
    eig = {}
    for i in (0, 1):
        base = apply_uelement(word, state(0, 0, i), fermionic_rep)
        eig[i] = base.terms[(0, 0, i)]
        for N, M in ((2, 1), (4, 0)):
            out = apply_uelement(word, state(N, M, i), fermionic_rep)
            assert out == state(N, M, i, coeff=eig[i])


def test_check_relations_rejects_small_nmax(trivial_rep):
    with pytest.raises(ValueError):
        check_relations_on_module(trivial_rep, 1)


def test_basis_state_validation():
    with pytest.raises(ValueError):
        InducedVector.basis_state(-1, 0)
    with pytest.raises(ValueError):
        InducedVector.basis_state(0, 2)
