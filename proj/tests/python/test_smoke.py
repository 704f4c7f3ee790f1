import pytest

import powershift as ps


def test_pell():
    assert ps.fundamental_solution(2) == (3, 2)
    assert ps.pell_solutions(2, 3) == [(3, 2), (17, 12), (99, 70)]
    assert ps.continued_fraction_sqrt(3) == (1, [1, 2])
    u, v = ps.fundamental_solution(61)
    assert (u, v) == (1766319049, 226153980)
    assert u * u - 61 * v * v == 1
    with pytest.raises(ps.SquareInput):
        ps.fundamental_solution(4)


def test_big_integers_cross_the_boundary():
    n = 10**40 + 1
    assert ps.isqrt(n) == 10**20
    x, y = ps.witness_family(1, 1, 200)[-1]
    assert x.bit_length() > 256
    assert x * x + 1 == 2 * y * y
    assert ps.verify_witness(1, 1, x, y)


def test_family_and_patil():
    assert ps.witness_family(1, 1, 2) == [(7, 5), (41, 29)]
    for a in range(1, 200):
        assert ps.patil_witness(a) == ps.witness_family(a, 1, 1)[0]
    assert ps.witness_from_pell(1, 2, 2, 1) == (5, 3)
    z, x = ps.norm_form_solutions(1, 1, 1)[0]
    assert (z, x) == (10, 7)
    with pytest.raises(ps.SquareD):
        ps.witness_family(1, 3, 1)
    with pytest.raises(ValueError):
        ps.witness_family(0, 3, 1)


def test_square_products():
    assert [c["a"] for c in ps.enumerate_square_products(9)] == [3, 16]
    assert ps.enumerate_square_products(1) == []
    assert ps.is_square_product(16, 9) == 20
    assert ps.is_square_product(1, 1) is None


def test_syndetic():
    outcomes = ps.find_geometric_pairs(list(range(1, 201)), 1, 200, 1)
    first = outcomes[0]
    assert first["status"] == "Found"
    assert first["branch"] == "Direct"
    assert (first["base"], first["product"]) == (1, 49)
    assert ps.verify_hitting(list(range(1, 100, 2)), 99, 1)
    with pytest.raises(ps.IngestionError):
        ps.find_geometric_pairs([1, 4, 5], 2, 5, 1)


def test_search_and_survey():
    r = ps.search_solutions(1, 1, 1, x_bound=100, y_bound=100)
    assert r["solutions"] == [(1, 1), (7, 5), (41, 29)]
    assert ps.search_solutions(2, 3, 4)["obstructed"]
    assert ps.gcd_obstruction(2, 3, 4)
    parallel = ps.search_solutions(1, 2, 2, x_bound=5000, y_bound=5000, workers=4)
    assert parallel == ps.search_solutions(1, 2, 2, x_bound=5000, y_bound=5000)
    rows = ps.survey((1, 2), (1, 2), (1, 2), bound=200)
    assert len(rows) == 8
    assert [(r["a"], r["k"], r["ell"]) for r in rows] == sorted((r["a"], r["k"], r["ell"]) for r in rows)
