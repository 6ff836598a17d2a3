import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

import perispec as ps


def test_conventions():
    conv = ps.convention_block()
    assert conv["clifford_sign"] == -1
    assert conv["index_sign"] == -1


def test_circle_and_sphere_spectra():
    circle = ps.circle_spectrum("bounding", 0.0, 3)
    assert sorted(v for v, _ in circle) == [-2.5, -1.5, -0.5, 0.5, 1.5, 2.5]
    assert any(v == 0.0 for v, _ in ps.circle_spectrum("bounding", 0.5, 2))
    sphere = dict(ps.sphere_spectrum(2, 1))
    assert sphere == {-2.0: 4, -1.0: 2, 1.0: 2, 2.0: 4}


def test_discrete_operator_matches_numpy():
    d = ps.circle_dirac(16, "central", "bounding", 0.3)
    assert np.allclose(d, d.conj().T)
    ours = ps.hermitian_eigenvalues(d)
    assert np.allclose(ours, np.linalg.eigvalsh(d), atol=1e-10)
    m = np.random.default_rng(0).normal(size=(5, 3)) + 1j
    assert np.allclose(ps.singular_values(m), np.linalg.svd(m, compute_uv=False), atol=1e-12)


def test_fourier_laplace_is_the_twist():
    c = 0.37
    fl = ps.fourier_laplace(16, "spectral", "bounding", ps.twist_to_z(c))
    direct = ps.circle_dirac(16, "spectral", "bounding", c)
    assert np.allclose(np.linalg.eigvalsh(fl), np.linalg.eigvalsh(direct), atol=1e-10)


def test_symbols():
    zm2 = ps.LaurentSymbol.scalar({0: -2, 1: 1})
    r = ps.is_fredholm(zm2)
    assert r["is_fredholm"] and r["index"] == 0
    assert abs(r["min_singular"] - 1.0) < 1e-8
    assert ps.toeplitz_index(ps.LaurentSymbol.scalar({1: 1})) == -1
    assert ps.toeplitz_index(ps.LaurentSymbol.scalar({0: -0.25, 2: 1})) == -2
    zm1 = ps.LaurentSymbol.scalar({0: -1, 1: 1})
    r = ps.is_fredholm(zm1)
    assert not r["is_fredholm"] and abs(r["witness"] - 1) < 1e-6
    with pytest.raises(ps.DomainError):
        ps.toeplitz_index(zm1)
    assert ps.fredholm_via_sections(zm1, [16, 32, 64])["verdict"] == "decaying"
    block = ps.LaurentSymbol({0: np.eye(2), 1: np.array([[0, 0.5], [0, 0]])})
    assert block.block_size == 2
    assert np.allclose(block(1j), np.eye(2) + 1j * np.array([[0, 0.5], [0, 0]]))
    assert ps.finite_section(block, 4).shape == (8, 8)
    circle = ps.LaurentSymbol.from_circle(16, "bounding")
    assert not ps.is_fredholm(circle)["is_fredholm"]
    assert ps.is_fredholm(circle.with_mass(1.0))["is_fredholm"]


def test_spectral_flow_with_python_family():
    r = ps.spectral_flow(lambda c: np.diag([c - 0.5, c + 2.0]).astype(complex))
    assert r["flow"] == 1
    assert abs(r["crossings"][0][0] - 0.5) < 1e-9
    r = ps.spectral_flow(lambda c: ps.circle_dirac(16, "spectral", "bounding", c))
    assert abs(r["flow"]) == 1


def test_exact_invariants():
    assert ps.beta(1, -16)[1] == 0
    assert ps.beta(0, -16)[1] == 1
    assert ps.beta(Fraction(1, 2), 4)[0] == Fraction(1, 4)
    assert ps.rohlin(8) == (Fraction(1), Fraction(1))
    assert ps.w_invariant(0, 8) == 1
    assert ps.w_cs(-2, 0, -16) == -1
    assert ps.alpha_n(4, sign=-16) == ("Z", 1)
    assert ps.alpha_n(9, dim_ker=3) == ("Z/2", 1)
    with pytest.raises(ps.DomainError):
        ps.alpha_n(4, sign=8)
    assert ps.form_signature("K3") == (22, -16)
    assert ps.form_signature("-E8+E8+3H") == (22, 0)
    assert ps.matrix_signature(ps.form_matrix("E8")) == 8
    with pytest.raises(ps.ContractViolation):
        ps.form_signature("E7")


def test_problem_text_round_trip():
    rep = ps.run_problem("[symbol]\nblock = 1\nA[1] = 1\n", "index")
    assert rep["results"]["index"] == -1
    rep = ps.run_problem("[invariant]\nkind = beta\nrho = 1\nsig_v = -16\n", "invariant")
    assert rep["results"]["mod2"] == "0"
    with pytest.raises(ps.ParseError):
        ps.run_problem("[symbol]\nblock = 1\nA[0] = [[1\n", "fredholm")
    with pytest.raises(ps.InputError):
        ps.run_problem("[form]\nbuiltin = H\n", "index")
