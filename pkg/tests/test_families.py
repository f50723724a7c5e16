import pytest

from sqpairs.arith import DomainError, is_perfect_square
from sqpairs.families import (
    FamilyTriple,
    bi_pyth_pair,
    double_factorial,
    even_family,
    family,
    family_index,
    family_roots,
    j_poly,
    j_value,
    odd_family,
    pi_sqrt,
    table2,
    verify_family,
)
from sqpairs.intervals import CaseParams, verify_solution
from sqpairs.polynomial import K, IntPolynomial

from closed_forms import GOLDEN_J, GOLDEN_ROOTS, GOLDEN_S, P
from golden import TABLE_T2
from oracles import quad_number


def test_double_factorial():
    assert [double_factorial(n) for n in (-1, 1, 3, 5, 7)] == [1, 1, 3, 15, 105]
    for bad in (-3, 0, 4):
        with pytest.raises(DomainError):
            double_factorial(bad)


def test_even_family_examples():
    f = even_family(1)
    assert (f.A, f.B, f.C) == (P(3, 4), P(1, 4), P(1, 9, 24, 16))
    f = even_family(2)
    assert (f.A, f.B) == (P(5, 20, 16), P(1, 12, 16))
    f = even_family(0)
    assert (f.A, f.B) == (P(1), P(1)) and j_poly(0) == 0


def test_odd_family_examples():
    f = odd_family(0)
    assert (f.A, f.B, f.C) == (P(2), P(1, 2), P(1, 4, 4))
    f = odd_family(1)
    assert (f.A, f.B) == (P(4, 8), P(1, 8, 8))
    assert odd_family(3).B == P(1, 32, 160, 256, 128)


def test_family_domain():
    for fn in (even_family, odd_family, family):
        with pytest.raises(DomainError):
            fn(-1)
    with pytest.raises(DomainError):
        j_value(1, 0)


@pytest.mark.parametrize("ell", range(0, 41))
def test_family_identities_and_positivity(ell):
    for f in (even_family(ell), odd_family(ell)):
        assert verify_family(f)
        for poly in (f.A, f.B, f.C):
            assert all(c > 0 for c in poly.coeffs)
        if f.parity == "even":
            assert (f.A.degree, f.B.degree, f.C.degree) == (ell, ell, 2 * ell + 1)
        else:
            assert (f.A.degree, f.B.degree, f.C.degree) == (ell, ell + 1, 2 * ell + 2)


def _mutations(f):
    for name in ("A", "B", "C"):
        poly = getattr(f, name)
        for t in range(len(poly.coeffs)):
            cs = list(poly.coeffs)
            cs[t] += 1
            yield FamilyTriple(f.parity, f.ell, **{**{"A": f.A, "B": f.B, "C": f.C},
                                                   name: IntPolynomial(cs)})


@pytest.mark.parametrize("ell", [0, 1, 2, 5, 12])
def test_mutation_detected(ell):
    for f in (even_family(ell), odd_family(ell)):
        for bad in _mutations(f):
            assert not verify_family(bad)


@pytest.mark.parametrize("i, k, v", [(1, 1, 7), (3, 2, 2398), (8, 8, 15061377048192)])
def test_j_value_examples(i, k, v):
    assert j_value(i, k) == v


def test_nesting_and_square():
    for i in range(1, 13):
        f, s = family(i), pi_sqrt(i)
        if f.parity == "even":
            assert f.C - 1 == K * f.A ** 2
        else:
            assert f.C - 1 == K * (K + 1) * f.A ** 2
        for k in range(1, 51):
            assert quad_number(k, j_value(i, k)) == s(k) ** 2


@pytest.mark.parametrize("i", range(1, 9))
def test_closed_forms(i):
    assert j_poly(i) == GOLDEN_J[i]
    assert pi_sqrt(i) == GOLDEN_S[i]
    if i in GOLDEN_ROOTS:
        hi, lo = GOLDEN_ROOTS[i]
        for k in range(1, 30):
            r = family_roots(i, k)
            assert (r.n_plus, r.n_minus) == (hi(k), lo(k))


def test_family_roots_examples():
    r = family_roots(1, 1)
    assert (r.n_plus, r.n_minus) == (20, -4)
    r = family_roots(1, 3)
    assert (r.n_plus, r.n_minus) == (312, -24)
    assert family_roots(2, 1).n_plus == 119


def test_family_roots_verify():
    for i in range(1, 9):
        for k in range(1, 21):
            r = family_roots(i, k)
            p = CaseParams(r.j, 0, k)
            assert verify_solution(p, r.n_plus) and verify_solution(p, r.n_minus)


def test_bi_pyth_pair_examples():
    b = bi_pyth_pair(2, 3)
    assert (b.k, b.j, b.sqrt_pi) == (8, 41, 420)
    assert bi_pyth_pair(2, 4).j == 280
    b = bi_pyth_pair(1, 2)
    assert (b.k, b.j) == (1, 7)
    with pytest.raises(DomainError):
        bi_pyth_pair(3, 3)
    with pytest.raises(DomainError):
        bi_pyth_pair(0, 2)


def test_table2_matches_reference():
    rows = table2(8, 8)
    assert {k: row for k, row in enumerate(rows, start=1)} == TABLE_T2
    assert rows[5][4] == 2948400
    assert all(row[0] == 0 for row in rows)


def test_family_index():
    assert family_index(1, 287) == 3
    assert family_index(8, 41) is None


def test_j_two_never_square():
    # k(k+1)(k+2)(k+3) sits one below a square
    for k in range(1, 10001):
        assert is_perfect_square(quad_number(k, 2)) is None
