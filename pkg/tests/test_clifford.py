import numpy as np
import pytest

from spinlift import (
    Bivector,
    CliffordElement,
    InvalidBivectorError,
    blade_mask,
    blade_name,
    clifford_mul,
    gamma_rep,
    lie_bracket_check,
    make_metric,
    random_bivector,
    regular_rep,
    representation,
    spin_rep,
    wedge,
)

E = np.eye(4)


def mabs(m):
    return float(np.abs(np.asarray(m)).max())


def test_blade_indexing():
    assert blade_mask([]) == 0
    assert blade_mask([0, 1]) == 3
    assert blade_mask([3]) == 8
    assert blade_name(0) == "1"
    assert blade_name(3) == "e01"
    assert blade_name(15) == "e0123"


def test_clifford_mul_generator_examples(g):
    e0 = CliffordElement.basis_vector(0)
    e1 = CliffordElement.basis_vector(1)
    assert clifford_mul(e0, e0, g).coeffs[0] == 1.0  # e0 e0 = g(e0,e0) = +1
    assert clifford_mul(e1, e1, g).coeffs[0] == -1.0
    e0e1 = clifford_mul(e0, e1, g)
    assert e0e1.coeffs[blade_mask([0, 1])] == 1.0
    e1e0 = clifford_mul(e1, e0, g)
    assert e1e0.coeffs[blade_mask([0, 1])] == -1.0


@pytest.mark.parametrize("tag", ["pmmm", "mppp"])
def test_clifford_mul_associative(tag):
    g = make_metric(tag)
    rng = np.random.default_rng(21)
    for _ in range(20):
        a, b, c = (CliffordElement(rng.uniform(-1.0, 1.0, 16)) for _ in range(3))
        lhs = clifford_mul(clifford_mul(a, b, g), c, g)
        rhs = clifford_mul(a, clifford_mul(b, c, g), g)
        assert mabs(lhs.coeffs - rhs.coeffs) < 1e-12


def test_regular_rep_scalar_is_identity(g):
    assert np.array_equal(regular_rep(g, CliffordElement.scalar(1.0)), np.eye(16))


def test_regular_rep_vector_squares(g):
    r0 = regular_rep(g, CliffordElement.basis_vector(0))
    r1 = regular_rep(g, CliffordElement.basis_vector(1))
    assert mabs(r0 @ r0 - np.eye(16)) == 0.0
    assert mabs(r1 @ r1 + np.eye(16)) == 0.0
    # signed permutation: one entry of modulus 1 per column
    assert np.array_equal(np.sort(np.abs(r0), axis=0)[-1], np.ones(16))
    assert np.count_nonzero(r0) == 16


def test_regular_rep_multiplicative(g):
    rng = np.random.default_rng(22)
    for _ in range(15):
        x = CliffordElement(rng.uniform(-1.0, 1.0, 16))
        y = CliffordElement(rng.uniform(-1.0, 1.0, 16))
        lhs = regular_rep(g, clifford_mul(x, y, g))
        rhs = regular_rep(g, x) @ regular_rep(g, y)
        assert mabs(lhs - rhs) < 1e-12


def test_gamma_time_matrix(g):
    assert np.array_equal(gamma_rep(g, E[0]), np.diag([1.0, 1.0, -1.0, -1.0]))


def test_gamma_squares(g):
    assert mabs(gamma_rep(g, E[1]) @ gamma_rep(g, E[1]) + np.eye(4)) == 0.0
    g0g1 = gamma_rep(g, E[0]) @ gamma_rep(g, E[1]) + gamma_rep(g, E[1]) @ gamma_rep(g, E[0])
    assert mabs(g0g1) == 0.0


@pytest.mark.parametrize("tag", ["pmmm", "mppp"])
@pytest.mark.parametrize("kind", ["gamma", "regular"])
def test_clifford_relation_all_pairs(tag, kind):
    g = make_metric(tag)
    rep = representation(kind, g)
    for a in range(4):
        for b in range(4):
            ra, rb = rep.vector(E[a]), rep.vector(E[b])
            anti = ra @ rb + rb @ ra
            assert mabs(anti - 2.0 * g.matrix[a, b] * rep.identity) < 1e-12


def test_rep_metadata(g):
    gamma = representation("gamma", g)
    reg = representation("regular", g)
    assert gamma.dim == 4 and gamma.identity_trace == 4.0 and gamma.is_complex
    assert reg.dim == 16 and reg.identity_trace == 16.0 and not reg.is_complex


def test_spin_rep_wedge_is_quarter_commutator(g, rep):
    rng = np.random.default_rng(23)
    for _ in range(20):
        u = rng.uniform(-1.5, 1.5, 4)
        v = rng.uniform(-1.5, 1.5, 4)
        ru, rv = rep.vector(u), rep.vector(v)
        expected = 0.25 * (ru @ rv - rv @ ru)
        assert mabs(spin_rep(rep, wedge(g, u, v)) - expected) < 1e-12


def test_spin_rep_frozen_gamma(g):
    rep = representation("gamma", g)
    s = spin_rep(rep, wedge(g, E[0], E[1]))
    half_g0g1 = 0.5 * gamma_rep(g, E[0]) @ gamma_rep(g, E[1])
    assert mabs(s - half_g0g1) == 0.0
    assert mabs(s @ s - 0.25 * np.eye(4)) == 0.0  # tr2 = -1, so square is +1/4


def test_spin_rep_zero_and_linear(g, rep):
    zero = Bivector(np.zeros((4, 4)), g)
    assert mabs(spin_rep(rep, zero)) == 0.0
    l1 = random_bivector(g, 31)
    l2 = random_bivector(g, 32)
    lhs = spin_rep(rep, 2.0 * l1 - 0.5 * l2)
    rhs = 2.0 * spin_rep(rep, l1) - 0.5 * spin_rep(rep, l2)
    assert mabs(lhs - rhs) < 1e-12


def test_infinitesimal_intertwining(g, rep):
    # [sigma(L), rho(u)] = rho(L u): the defining property of the spin map
    rng = np.random.default_rng(24)
    for seed in range(25):
        L = random_bivector(g, seed)
        u = rng.uniform(-1.0, 1.0, 4)
        s = spin_rep(rep, L)
        ru = rep.vector(u)
        assert mabs(s @ ru - ru @ s - rep.vector(L.matrix @ u)) < 1e-10


def test_lie_bracket_homomorphism(g, rep):
    l1 = wedge(g, E[0], E[1])
    assert lie_bracket_check(rep, l1, l1) == 0.0
    assert lie_bracket_check(rep, l1, wedge(g, E[1], E[2])) < 1e-10
    for seed in range(15):
        a = random_bivector(g, 2 * seed)
        b = random_bivector(g, 2 * seed + 1)
        scale = max(1.0, mabs(a.matrix) * mabs(b.matrix))
        assert lie_bracket_check(rep, a, b) < 1e-10 * scale


def test_spin_rep_rejects_non_bivector(g, rep):
    class Fake:
        matrix = np.eye(4)
        metric = g

    with pytest.raises(InvalidBivectorError):
        spin_rep(rep, Fake())
