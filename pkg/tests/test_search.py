from fractions import Fraction

import pytest

from sqpairs.arith import DomainError
from sqpairs.families import j_value
from sqpairs.intervals import CaseParams, discriminant, verify_solution
from sqpairs.search import (
    BIPYTH,
    DOSTOR,
    EXCEPTION,
    FAMILY,
    SearchConfig,
    classify_pair,
    disc_rows,
    exceptions,
    j0_k_bound,
    product_type,
    render,
    s_ratio,
    scan_discriminant,
    scan_square_pairs,
    squarefree_part,
    swap23,
    type2_from_euler,
    type2_scan,
)

from golden import TABLE_4
from oracles import is_square, quad_number, square_pairs, type2_pairs


def test_squarefree_part():
    assert [squarefree_part(n) for n in (1, 2, 8, 12, 72, 600)] == [1, 2, 2, 3, 2, 6]


def test_scan_square_pairs_examples():
    recs = {(r.k, r.j): r for r in scan_square_pairs(1, 300)}
    assert recs[(1, 0)].kind == DOSTOR
    assert [recs[(1, j)].family for j in (7, 48, 287)] == [1, 2, 3]
    recs = {(r.k, r.j): r for r in scan_square_pairs(8, 60)}
    assert recs[(8, 41)].kind == BIPYTH
    recs = {(r.k, r.j): r for r in scan_square_pairs(3, 50)}
    assert recs[(3, 45)].label == "Family(1)"


def test_scan_square_pairs_matches_oracle():
    got = [(r.k, r.j, r.sqrt_pi) for r in scan_square_pairs(30, 500)]
    assert got == square_pairs(30, 500)


def test_scan_square_pairs_workers_agree():
    assert scan_square_pairs(40, 5000, workers=1) == scan_square_pairs(40, 5000, workers=3)


def test_classification_soundness():
    for r in scan_square_pairs(30, 3000):
        assert r.sqrt_pi ** 2 == quad_number(r.k, r.j)
        if r.kind == DOSTOR:
            assert r.j == 0
        elif r.kind == FAMILY:
            assert j_value(r.family, r.k) == r.j
        elif r.kind == BIPYTH:
            assert is_square(r.k * (r.k + 1) // 2)
            assert is_square((r.k + r.j) * (r.k + r.j + 1) // 2)
            assert r.same_parity is not None


def test_classify_precedence():
    assert classify_pair(8, 0, 72).kind == DOSTOR
    assert classify_pair(8, 280, 0).kind == FAMILY    # also bi-Pythagorean
    assert classify_pair(24, 218, 5940).kind == EXCEPTION


def test_known_exceptions_at_small_scale():
    found = [(r.k, r.j) for r in exceptions(scan_square_pairs(60, 100000))]
    assert found == [(24, 218), (24, 23738), (48, 627)]


def test_scan_discriminant_table4():
    rows = [(m, k, n, s) for _, m, k, n, s in disc_rows(scan_discriminant([0], 100, 100))]
    assert rows == [(m, k, Fraction(n), s) for m, k, n, s in TABLE_4]


def test_scan_discriminant_j1_and_double_root():
    rows = disc_rows(scan_discriminant([1], 100, 100))
    assert (1, 22, 22, Fraction(-11), 2024) in rows
    assert (1, 22, 22, Fraction(77), 2024) in rows
    rows = disc_rows(scan_discriminant([4], 100, 100))
    assert (4, 9, 1, Fraction(5), 0) in rows


def test_disc_hits_are_consistent():
    hits = scan_discriminant(range(0, 6), 60, 60)
    for h in hits:
        p = CaseParams(h.j, h.m, h.k)
        assert h.sqrtD ** 2 == discriminant(p)
        for x in h.roots:
            assert (2 * (h.m + 1)) % x.denominator == 0
            if x.denominator == 1:
                assert verify_solution(p, int(x))


def test_j0_pruning_is_safe():
    pruned = scan_discriminant([0], 100, 100, prune_j0=True)
    full = scan_discriminant([0], 100, 100, prune_j0=False)
    assert pruned == full
    for h in full:
        assert h.k in j0_k_bound(h.m).k_range(100)


def test_j0_bound_examples():
    assert j0_k_bound(1).k_upper == 0
    assert len(j0_k_bound(1).k_range(100)) == 0
    assert j0_k_bound(5).k_upper == 7
    assert j0_k_bound(6).k_upper == 10
    assert j0_k_bound(0).k_upper is None


def test_scan_discriminant_workers_agree():
    a = scan_discriminant(range(0, 4), 40, 40, workers=1)
    b = scan_discriminant(range(0, 4), 40, 40, workers=4)
    assert a == b


def test_type2_examples():
    hits = {(h.a, h.b): h.d for h in type2_scan(20, 150)}
    assert hits[(3, 24)] == 120 and hits[(4, 9)] == 60 and hits[(7, 63)] == 672


def test_type2_scan_matches_oracle():
    assert [(h.a, h.b, h.d) for h in type2_scan(40, 400)] == type2_pairs(40, 400)


def test_type2_from_euler():
    e = type2_from_euler(1)
    assert (e.k, e.euler_d, e.a, e.b, e.euler_root, e.d) == (1, 2, 2, 3, 6, 12)
    assert 2 * (2 * 3) * (3 * 4) == 12 ** 2
    e = type2_from_euler(2)
    assert (e.k, e.euler_d, e.a, e.b) == (8, 12, 16, 17)
    for i in range(1, 20):
        e = type2_from_euler(i)
        assert 2 * e.a * (e.a + 1) * e.b * (e.b + 1) == e.d ** 2
    with pytest.raises(DomainError):
        type2_from_euler(0)


def test_swap23():
    assert swap23([3, 24]) == [2, 24]
    assert product_type([3, 24]) == "ii" and product_type([2, 24]) == "i"
    assert swap23([2, 24]) == [3, 24]
    with pytest.raises(DomainError):
        swap23([4, 9])


def _s_oracle(N):
    return sum(1 for a in range(1, N + 1) for b in range(1, N + 1)
               if is_square(a * (a + 1) * b * (b + 1)))


def test_s_ratio():
    assert s_ratio(1).S_N == 1
    assert s_ratio(7).S_N == 7
    assert s_ratio(8).S_N == 10
    for N in (1, 7, 8, 20, 49, 120):
        r = s_ratio(N)
        assert r.S_N == _s_oracle(N) and r.ratio == Fraction(r.S_N, N)
        assert s_ratio(N, distinct=True).S_N == r.S_N - N
    with pytest.raises(DomainError):
        s_ratio(0)


def test_search_config_validation():
    SearchConfig((0, 0), (1, 100), (1, 100), 1, "csv", False)
    with pytest.raises(DomainError):
        SearchConfig((0, 0), (1, 100), (0, 100), 1, "csv", False)
    with pytest.raises(DomainError):
        SearchConfig((0, 0), (1, 100), (1, 100), 1, "xml", False)


def test_render():
    text = render(("a", "b"), [(Fraction(-34, 9), 10 ** 30)], "csv")
    assert text == "a,b\n-34/9,1000000000000000000000000000000\n"
    text = render(("a",), [(5,)], "json")
    assert text == '{"a": "5"}\n'
