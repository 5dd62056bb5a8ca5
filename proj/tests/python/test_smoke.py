import pytest

import quatring as q


def test_arith():
    assert q.legendre(2, 7) == 1
    assert q.legendre(3, 7) == -1
    assert q.sqrt_mod_p(2, 7) == 3
    assert q.is_prime(97)
    assert not q.is_prime(91)
    sign, entries = q.factor(-16)
    assert sign == -1 and entries == [(2, 4)]
    assert q.sqrad(45) == 5
    assert q.is_prime(2**89 - 1)


def test_symbols():
    assert q.hilbert(-1, -1, 2) == -1
    assert q.hilbert(-1, -1, "inf") == -1
    assert q.hilbert(-1, -1, 3) == 1
    assert q.jacobi(2, 15) == 1
    assert q.jacobi(7, 15) == -1
    assert q.ramified_set(-1, -1) == ["2", "inf"]
    assert q.algebra_discriminant(-1, -1) == 2
    assert q.is_matrix_ring(1, 1)
    assert not q.is_matrix_ring(-1, -1)
    assert q.reciprocity_check(-37, 210)


def test_recognize():
    # (1, 1 | Q) in its standard table
    def e(k, v="1"):
        row = ["0"] * 4
        row[k] = v
        return row

    c = [
        [e(0), e(1), e(2), e(3)],
        [e(1), e(0), e(3), e(2)],
        [e(2), e(3, "-1"), e(0), e(1, "-1")],
        [e(3), e(2, "-1"), e(1), e(0, "-1")],
    ]
    out = q.recognize({"dim": 4, "c": c})
    assert out["quaternion"]
    assert out["a"] == "1" and out["b"] == "1"


def test_normalize():
    form = {"rank": 2, "q": ["0", "0"], "t": {"1,2": "1"}}
    out = q.normalize(form, 2)
    assert out["blocks"] == [{"kind": "binary", "a": "0", "b": "1", "c": "0", "e": 0}]


def test_orders():
    lam = q.standard_order(-1, -1)
    assert q.reduced_discriminant(lam) == 4
    assert not q.is_maximal(lam)
    m = q.max_order(lam)
    assert q.reduced_discriminant(m) == 2
    assert q.is_maximal(m)
    # emitted JSON is accepted back
    assert q.max_order(m) == m


def test_demos():
    f = q.factor_via_maxorder(91, seed=5)
    assert f in (7, 13)
    assert q.quadratic_residuosity(4, 15)
    assert not q.quadratic_residuosity(7, 15)
    r = q.residuosity_via_splitting(2, 7, seed=3)
    assert r["value"] == q.quadratic_residuosity(2, 7)


def test_errors():
    with pytest.raises(q.QuatringError):
        q.sqrt_mod_p(3, 5)
    with pytest.raises(q.QuatringError):
        q.jacobi(3, 4)
