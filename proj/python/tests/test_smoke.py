import json
from fractions import Fraction

import pytest
import sympy

import ktree


def test_simple_tuple_of_8_13():
    assert ktree.simple_tuple(8, 13, 2) == [1, 1, 0, 1, 1]
    assert ktree.brute_simple_tuples(8, 13, 2) == [[1, 1, 0, 1, 1]]
    assert ktree.simple_stable([1, 1, 0, 1, 1])


def test_root_classes():
    assert ktree.classify_root(1, 3, 3) == "real"
    assert ktree.classify_root(2, 5, 3) == "imaginary"
    assert ktree.classify_root(1, 5, 3) == "not-root"
    assert ktree.reflect_dim(3, 8, 3) == (8, 21)


def test_tree_module_8_21():
    tm = ktree.tree_module(8, 21, 3)
    assert tm["tree"]
    assert (tm["gamma_vertices"], tm["gamma_arrows"]) == (29, 28)
    assert ktree.dims(tm["representation"]) == {"1": 8, "2": 21}


def test_verify_cover_of_8_13():
    tm = ktree.tree_module(8, 13, 3)
    results = ktree.verify(tm["cover"])
    assert all(ok for ok, _ in results.values()), results


def _sympy_end_dim(rep):
    """dim End over K(m) from a dense sympy nullspace, independent of the C++ solver."""
    d, e = rep["quiver"]["vertices"][0]["dim"], rep["quiver"]["vertices"][1]["dim"]
    unknowns = d * d + e * e
    rows = []
    for mat in rep["matrices"].values():
        x = [[Fraction(v) for v in row] for row in mat]
        # phi2 X - X phi1 = 0, phi1 is d x d (first), phi2 is e x e
        for r in range(e):
            for c in range(d):
                row = [0] * unknowns
                for k in range(e):
                    row[d * d + r * e + k] += x[k][c]
                for k in range(d):
                    row[k * d + c] -= x[r][k]
                rows.append(row)
    return unknowns - sympy.Matrix(rows).rank()


def test_schur_2_5_against_sympy():
    rep = ktree.tree_module(2, 5, 3)["representation"]
    text = json.dumps(rep)
    assert ktree.hom_dim(text, text) == 1
    assert _sympy_end_dim(rep) == 1
    assert ktree.is_indecomposable(text)


def test_reflection_round_trip():
    rep = ktree.tree_module(2, 5, 3)["representation"]
    up = ktree.reflect(rep)
    assert ktree.dims(up) == {"1": 5, "2": 13}
    back = ktree.reflect(up, inverse=True)
    assert ktree.dims(back) == {"1": 2, "2": 5}
    assert ktree.hom_dim(json.dumps(rep), json.dumps(back)) == 1


def test_errors():
    with pytest.raises(ValueError):
        ktree.tree_module(1, 5, 3)
    with pytest.raises(ktree.PropertyViolation):
        ktree.tree_module(2, 4, 3, stable=True)
    with pytest.raises(ValueError, match="extra"):
        ktree.verify('{"quiver": {}, "matrices": {}, "basis": {}, "extra": 1}')
