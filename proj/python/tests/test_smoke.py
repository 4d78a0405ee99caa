import math

import numpy as np
import pytest

import hsm


def test_atlas():
    r = hsm.lookup("VI")
    assert r["dim"] == 54 and r["rank"] == 3 and r["tube"]
    assert hsm.normalize_type("IV:4") == "I:2:2"
    assert hsm.cominuscule_roots("D", 6) == [1, 5, 6]
    assert not hsm.tube_type("V")


def test_membership():
    assert hsm.contains("I:1:1", np.array([0j])) == "member"
    assert hsm.contains("I:1:1", np.array([1 + 0j])) == "boundary"
    assert hsm.contains("I:1:1", np.array([2 + 0j])) == "exterior"
    rng = np.random.default_rng(0)
    d = hsm.domain_dim("V")
    for _ in range(20):
        z = 0.3 * (rng.normal(size=d) + 1j * rng.normal(size=d)) / math.sqrt(d)
        assert hsm.contains("V", z) == hsm.contains_via_box("V", z)


def test_triple_conventions():
    x, y = np.array([1, 0], dtype=complex), np.array([0, 1], dtype=complex)
    assert np.allclose(hsm.triple("IV:2", x, y, x), [0, -1])
    assert np.allclose(hsm.triple("IV:2", x, y, x, convention="printed"), [0, 1])


def test_triple_matches_matrix_formula():
    # type I: {x,y,z} = (x y* z + z y* x) / 2
    rng = np.random.default_rng(1)
    X, Y, Z = (rng.normal(size=(3, 2)) + 1j * rng.normal(size=(3, 2)) for _ in range(3))
    t = hsm.triple("I:3:2", *(hsm.from_matrix("I:3:2", M) for M in (X, Y, Z)))
    ref = (X @ Y.conj().T @ Z + Z @ Y.conj().T @ X) / 2
    assert np.allclose(hsm.to_matrix("I:3:2", t), ref, atol=1e-12)
    assert hsm.rank("I:3:2") == 2


def test_octonions_alternative():
    rng = np.random.default_rng(2)
    x, y = rng.normal(size=8), rng.normal(size=8)
    xx_y = hsm.oct_mul(hsm.oct_mul(x, x), y)
    x_xy = hsm.oct_mul(x, hsm.oct_mul(x, y))
    assert np.allclose(xx_y, x_xy, atol=1e-12)


def test_cones_and_cayley():
    assert hsm.cone_classify("psd-r:2", hsm.jordan_unit("herm-r:2")) == "member"
    assert hsm.cone_for_jordan("herm-r:2") == "psd-r:2"
    u = hsm.cayley("herm-r:1", np.array([0.5 + 0j]))
    assert np.allclose(u, [3j])
    assert np.allclose(hsm.cayley_inverse("herm-r:1", u), [0.5])
    assert hsm.tube_member("herm-r:1", u) == "member"


def test_siegel_catalog():
    assert not hsm.catalog_criteria("I:3:1:1")["symmetric"]
    assert hsm.catalog_criteria("I:3:1:0")["symmetric"]
    assert hsm.catalog_symmetric_equivalent("VI0") == "VI"


def test_verify_and_errors():
    res = hsm.verify("bracket-triple", seed=7, samples=10)
    assert res and all(c["pass"] for c in res)
    with pytest.raises(hsm.HsmError):
        hsm.verify("nope")
    with pytest.raises(hsm.HsmError):
        hsm.lookup("VII")
