import math
from fractions import Fraction

import numpy as np
import pytest

import heckelab as hl


def test_structure_counts():
    assert hl.structure_count(3, 1, 1, "1") == 1
    assert hl.structure_count(3, 1, 1, "w") == 12
    assert hl.structure_count(3, 1, 1, "wu") == 3
    assert hl.structure_count(5, 0, 2, "w") == 5


def test_convolution_coefficients():
    same = sorted(hl.convolve_t(3, 2, 2).values())
    assert same == [Fraction(1, 9), Fraction(1, 3), Fraction(4, 3)]
    diff = sorted(hl.convolve_t(3, 0, 1).values())
    assert diff == [Fraction(1, 9), Fraction(1, 3)]
    assert hl.convolve_t(5, 1, 3) == hl.convolve_t(5, 3, 1)


def test_operator_matches_oracle():
    for kind, v, cond in [("split", 2, 1), ("nonsplit", 3, 0), ("nilpotent", 0, 2)]:
        a = hl.operator_matrix(kind, q=3, v=v, conductor=cond)
        b = hl.oracle_matrix(kind, x=0, q=3, v=v, conductor=cond)
        assert a.shape == b.shape == (hl.dimension(kind, q=3, v=v, conductor=cond),) * 2
        assert np.max(np.abs(a - b)) < 1e-9


def test_spectrum_and_weil():
    rep = hl.spectrum("pure", 3, 50)
    lam = rep["eigenvalues"]
    assert lam.shape == (50,)
    assert rep["bounded_and_simple"]
    expected = sorted(2 * math.sqrt(3) * math.cos(math.pi * k / 51) for k in range(1, 51))
    assert np.allclose(np.sort(lam), expected, atol=1e-10)
    coeffs = hl.char_poly("split-chi+1", 3, 6)
    assert coeffs[-1] == 1
    assert hl.certify_weil(coeffs, 3)["pass"]
    assert not hl.certify_weil([-3, 1], 1)["pass"]


def test_moments_and_measure():
    assert hl.moment_exact(11, 20, 3) == 16796 * 3**10
    atoms = hl.truncated_measure(64, math.sqrt(5))
    assert abs(sum(w for _, w in atoms) - 1) < 1e-12


@pytest.mark.parametrize("name", ["structure", "commutativity", "cosets", "operators", "x_independence", "algebra", "springer", "measure"])
def test_suites_pass(name):
    r = hl.run_suite(name, p=3, seed=5)
    assert r["pass"], r["detail"]
    assert r["rows"] and len(r["header"]) == len(r["rows"][0])


def test_special_representation_reports_mismatch():
    r = hl.run_suite("special", p=3)
    assert not r["pass"]
    assert "max dev" in r["detail"]


def test_bad_input():
    with pytest.raises(ValueError):
        hl.spectrum("no-such-family", 3, 5)
    with pytest.raises(ValueError):
        hl.operator_matrix("bogus")
