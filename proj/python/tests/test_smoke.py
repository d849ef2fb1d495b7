import pytest

import dwork


def naive_points(n, q, psi):
    count = 0
    for lead in range(n):
        free = n - lead - 1
        for code in range(q**free):
            x = [0] * n
            x[lead] = 1
            c = code
            for i in range(lead + 1, n):
                x[i] = c % q
                c //= q
            prod = 1
            for v in x:
                prod = prod * v % q
            if (sum(pow(v, n, q) for v in x) - n * psi * prod) % q == 0:
                count += 1
    return count


def test_dimensions():
    assert [dwork.prim_dimension(n) for n in (3, 4, 5, 7)] == [2, 21, 204, 39990]


def test_predict_n4():
    rows = dwork.predict(4)["rows"]
    assert {tuple(r["class"]): (r["deg_Q"], r["exponent"], r["D_a"]) for r in rows} == {
        (0, 0, 0, 0): (3, 1, "Q"),
        (0, 0, 2, 2): (1, 3, "Q"),
        (0, 0, 1, 3): (1, 12, "Q"),
    }
    assert "Q(sqrt(5))" in dwork.predict_markdown(5)


@pytest.mark.parametrize("n,q,psi", [(3, 7, 3), (3, 13, 2), (4, 13, 2)])
def test_point_counts(n, q, psi):
    assert dwork.count_points(n, q, psi) == naive_points(n, q, psi)


def test_twisted_count_matches_oracle():
    for sigma in ("", "(1 2)", "(1 3)(2 4)", "(1 2 3 4)"):
        assert dwork.fixed_count(4, 13, 2, sigma=sigma) == dwork.oracle_fixed_count(4, 13, 2, sigma=sigma)


def test_zeta_n4_published_factor():
    report = dwork.zeta(4, 13, 2)
    polys = {(tuple(f["class"]), f["kind"]): f for f in report["factors"] if f["kind"] == "orbit"}
    assert polys[((0, 0, 2, 2), "orbit")]["coefficients"] == [1, 0, -169]
    omegas = sorted(f["polynomial"] for f in report["factors"] if f["kind"] == "omega")
    assert omegas == ["1 + 13t", "1 - 13t"]
    assert report["consistency"]["pass"]
    assert all(c["pass"] for c in report["certificates"])


def test_invalid_input_raises():
    with pytest.raises(dwork.DworkError, match="q"):
        dwork.count_points(3, 10, 2)
    with pytest.raises(ValueError):
        dwork.count_points(3, 7, 2)


def test_verify_rep():
    assert all(c["pass"] for c in dwork.verify_rep(4))
