import pytest

from ogschubert import lr
from ogschubert.shapes import count_sst, count_syt, partitions_in_box, staircase, strict_partitions


@pytest.mark.parametrize("lam,mu,nu,expected", [
    ((1,), (1,), (2,), 1),
    ((2, 1), (2, 1), (3, 2, 1), 2),
    ((1,), (1,), (1, 1), 1),
    ((2,), (2,), (2, 2), 1),
    ((2,), (2,), (3, 1), 1),
])
def test_lr_gr_examples(lam, mu, nu, expected):
    assert lr.lr_gr(lam, mu, nu) == expected
    assert lr.lr_gr_oracle(lam, mu, nu) == expected


def test_lr_gr_degree_mismatch_is_zero():
    assert lr.lr_gr((1,), (1,), (3,)) == 0
    assert lr.lr_gr_oracle((1,), (1,), (3,)) == 0


def test_lr_gr_is_symmetric_in_factors():
    box = [p for p in partitions_in_box(3, 3) if sum(p) <= 6]
    for nu in box:
        for lam in box:
            for mu in box:
                if sum(lam) + sum(mu) == sum(nu) and sum(lam) <= sum(mu):
                    assert lr.lr_gr(lam, mu, nu) == lr.lr_gr(mu, lam, nu)


@pytest.mark.parametrize("sigma,tau,kappa,expected", [
    ((1,), (1,), (2,), 1),
    ((2,), (1,), (2, 1), 1),
    ((1,), (2,), (2, 1), 1),
    ((2, 1), (2, 1), (3, 2, 1), 0),
    ((1,), (1,), (2, 1), 0),
])
def test_lr_og_examples(sigma, tau, kappa, expected):
    assert lr.lr_og(sigma, tau, kappa, 3) == expected
    assert lr.lr_og_oracle(sigma, tau, kappa) == expected


def test_lr_og_matches_oracle_exhaustively_in_delta3():
    sigmas = strict_partitions(3)
    for kappa in sigmas:
        for sigma in sigmas:
            for tau in sigmas:
                if sum(sigma) + sum(tau) == sum(kappa):
                    assert lr.lr_og(sigma, tau, kappa, 3) == lr.lr_og_oracle(sigma, tau, kappa)


def test_query_validation():
    with pytest.raises(ValueError):
        lr.LRQuery(lr.ORTHOGONAL, (2, 2), (1,), (3, 2), 3)
    with pytest.raises(ValueError):
        lr.LRQuery(lr.ORTHOGONAL, (4,), (1,), (4, 1), 3)
    assert not lr.LRQuery(lr.GRASSMANNIAN, (1,), (1,), (1,), 2).degree_ok


def test_p_oracle_basics():
    assert lr.p_product_expansion((1,), (1,)) == {(2,): 1}
    assert lr.p_monomial_coefficient((1,), (1,)) == 1
    # P_2 = m_2 + 2 m_11 in the monomial basis
    assert lr.p_monomial_coefficient((2,), (1, 1)) == 2


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dual_strict(n):
    assert lr.dual_strict(staircase(n), n) == ()
    assert lr.dual_strict((), n) == staircase(n)


def test_dual_strict_example():
    assert lr.dual_strict((3, 1), 3) == (2,)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_duality_pairing(n):
    for kappa in strict_partitions(n):
        dual = lr.dual_strict(kappa, n)
        assert sum(kappa) + sum(dual) == sum(staircase(n))
        assert lr.lr_og(kappa, dual, staircase(n), n) == 1


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 1), (3, 2), (4, 12)])
def test_pieri_power_top_coefficient(n, expected):
    assert lr.og_power_coefficient(n) == expected == count_sst(staircase(n))


def test_pieri_power_table_coefficients_count_tableaux():
    table = lr.pieri_power_table(3)
    assert table[()] == 1
    for sigma, c in table.items():
        assert c == count_sst(sigma)


@pytest.mark.parametrize("comp,expected", [
    ((1, 1), 1),
    ((2,), 1),
    ((6,), 1),
    ((1, 1, 1, 1, 1, 1), 5),
    ((2, 2, 2), 5),
    ((3, 3), 2),
])
def test_segment_class_counts(comp, expected):
    n = 1 if sum(comp) == 2 else 2
    assert lr.segment_class_count(comp, n) == expected
    assert lr.segment_intersection_number(comp, n) == expected


def test_all_ones_composition_counts_rectangle_tableaux():
    assert lr.segment_class_count((1,) * 6, 2) == count_syt((3, 3))


def test_segment_composition_must_fill_rectangle():
    with pytest.raises(ValueError):
        lr.segment_class_count((1, 2), 2)


def test_lr_og_is_symmetric_and_sums_to_class_count():
    from ogschubert.shapes import contains
    from ogschubert.lr import skew_class_table

    sigmas = strict_partitions(4)
    for kappa in sigmas:
        for tau in sigmas:
            if not contains(kappa, tau):
                continue
            row = [s for s in sigmas if sum(s) + sum(tau) == sum(kappa)]
            total = sum(lr.lr_og(s, tau, kappa, 4) for s in row)
            assert total == sum(skew_class_table(kappa, tau, True).values())
            for s in row:
                assert lr.lr_og(s, tau, kappa, 4) == lr.lr_og(tau, s, kappa, 4)
