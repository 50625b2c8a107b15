"""GF(2) polynomials, cyclotomic factorizations, and binary sublattices."""
import pytest

from glattice._primes import primes_upto
from glattice.errors import NotOddPrime
from glattice.gf2cyclo import (
    GF2Poly,
    _rref_masks,
    binary_coefficient_vector,
    binary_sublattice,
    binary_sublattices,
    cp_stable_subspaces,
    diag_generators,
    factor_xp_minus_1,
    ord2,
)
from glattice.intmat import full_lattice, index, is_primitive, member

ODD_PRIMES_200 = [p for p in primes_upto(200) if p > 2]


def test_poly_arithmetic():
    a = GF2Poly.from_coeffs([1, 1])  # x + 1
    b = GF2Poly.from_coeffs([1, 1, 1])  # x^2 + x + 1
    assert (a * b).coeffs() == (1, 0, 0, 1)  # x^3 + 1
    assert (a * b) % a == GF2Poly(0)
    assert (a * b) // b == a
    assert a.gcd(b).degree == 0


def test_ord2_examples():
    assert ord2(7) == 3
    assert ord2(3) == 2
    assert ord2(5) == 4
    with pytest.raises(NotOddPrime):
        ord2(9)
    with pytest.raises(NotOddPrime):
        ord2(2)


def test_factorization_p3():
    f = factor_xp_minus_1(3)
    assert [g.coeff_string() for g in f.factors] == ["11", "111"]


def test_factorization_p7():
    f = factor_xp_minus_1(7)
    assert [g.coeff_string() for g in f.factors] == ["11", "1101", "1011"]
    assert [sorted(c) for c in f.cosets] == [[0], [1, 2, 4], [3, 5, 6]]


def test_factor_count_p23():
    f = factor_xp_minus_1(23)
    assert len(f.factors) == (23 - 1) // 11 + 1 == 3


@pytest.mark.parametrize("p", ODD_PRIMES_200)
def test_factorization_sweep(p):
    f = factor_xp_minus_1(p)
    d = ord2(p)
    assert len(f.factors) == (p - 1) // d + 1
    assert all(g.degree == d for g in f.factors[1:])
    prod = GF2Poly(1)
    for g in f.factors:
        prod = prod * g
    assert prod == GF2Poly((1 << p) | 1)


def test_primitive_root_primes_have_four_subsets():
    for p in (3, 5, 11, 13, 19, 29):
        f = factor_xp_minus_1(p)
        assert len(f.factors) == 2  # so exactly 4 subsets of components
        subs = cp_stable_subspaces(p)
        dims = sorted(subs.dimension(s) for s in [(), (0,), (1,), (0, 1)])
        assert dims == [0, 1, p - 1, p]


def test_canonical_subspaces_p7():
    subs = cp_stable_subspaces(7)
    assert subs.subspace(()) == ()
    assert subs.subspace({0}) == ((1 << 7) - 1,)
    ve = subs.subspace({1, 2})
    assert len(ve) == 6
    assert all(bin(b).count("1") % 2 == 0 for b in ve)
    assert len(subs.subspace({0, 1, 2})) == 7


def test_diag_generators_p3():
    d = diag_generators(3)
    assert [d[0][i, i] for i in range(3)] == [-1, -1, -1]
    assert [d[1][i, i] for i in range(3)] == [-1, -1, 1]


def test_diag_generator_closure_matches_subspace():
    # closing D_1 under conjugation by the 3-cycle gives the even-sign group
    from glattice.monomial import MonomialGroup, closure_elements, cycle_element, diagonal_element

    d1 = diagonal_element(diag_generators(3)[1])
    shift = cycle_element(3)
    conj = [d1]
    cur = d1
    for _ in range(2):
        cur = shift.compose(cur).compose(shift.inverse())
        conj.append(cur)
    group = MonomialGroup(3, tuple(conj))
    elems = closure_elements(group)
    assert len(elems) == 4  # even-sign diagonal group
    assert all(e.is_diagonal() and bin(e.sign_mask()).count("1") % 2 == 0 for e in elems)


def test_binary_sublattices_p3():
    lats = binary_sublattices(3)
    assert lats[frozenset()].rank == 0
    le = lats[frozenset({1})]
    assert member((1, 1, 0), le) and not member((1, 0, 0), le)
    assert index(le, full_lattice(3)) == 2
    assert lats[frozenset({0, 1})] == full_lattice(3)
    l1 = lats[frozenset({0})]
    assert member((1, 1, 1), l1) and member((2, 0, 0), l1) and not member((1, 0, 0), l1)


def test_binary_sublattice_count_p7():
    assert len(binary_sublattices(7)) == 8


def test_sublattices_primitive_and_mod2_image():
    for p in (3, 5, 7, 11, 13):
        subs = cp_stable_subspaces(p)
        for subset, lat in binary_sublattices(p).items():
            if subset:
                assert is_primitive(lat)
            masks = _rref_masks(
                [sum((e & 1) << i for i, e in enumerate(r)) for r in lat.rows()]
            )
            assert tuple(masks) == subs.subspace(subset)


def test_sublattice_index_matches_subspace_codimension():
    for p in (3, 5, 7):
        subs = cp_stable_subspaces(p)
        for subset, lat in binary_sublattices(p).items():
            if lat.rank == p:
                assert index(lat, full_lattice(p)) == 2 ** (p - subs.dimension(subset))


def test_binary_vector_weights_even_for_nontrivial_components():
    for p in (7, 23, 31):
        f = factor_xp_minus_1(p)
        for i in range(1, len(f.factors)):
            v = binary_coefficient_vector(p, i)
            assert sum(v.entries) % 2 == 0


def test_l1_with_and_without_doubles():
    with_doubles = binary_sublattice(7, {0})
    bare = binary_sublattice(7, {0}, include_doubles=False)
    assert bare.rank == 1 and with_doubles.rank == 7
    assert member((1,) * 7, bare)
