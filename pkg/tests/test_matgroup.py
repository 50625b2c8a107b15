"""Finite matrix groups: closure, orbits, stabilizers, conjugation."""
import itertools
import random

import pytest

from glattice.errors import CapExceeded, NonUnimodularConjugator, NonUnimodularGenerator
from glattice.intmat import IntMatrix, full_lattice, hnf_from_rows, index
from glattice.matgroup import (
    MatGroup,
    closure,
    commutant_dimension,
    conjugate,
    element_matrices,
    orbit,
    orbit_span,
    restrict_lattice,
    stabilizer_order,
    stabilizer_order_direct,
)
from glattice.rootsys import RootSystemSpec, build

NEG = IntMatrix.from_rows([(-1,)])


def wgroup(fam, n):
    return build(RootSystemSpec(fam, n)).matgroup()


def test_closure_order_two():
    _, order = closure(MatGroup(1, [NEG]))
    assert order == 2


def test_closure_weyl_orders():
    assert closure(wgroup("G", 2))[1] == 12
    assert closure(wgroup("A", 3))[1] == 24


def test_closure_cap():
    with pytest.raises(CapExceeded):
        closure(MatGroup(2, [IntMatrix.from_rows([(0, -1), (1, 0)])]), cap=3)


def test_non_unimodular_generator_rejected():
    with pytest.raises(NonUnimodularGenerator):
        MatGroup(1, [IntMatrix.from_rows([(2,)])])


def test_closure_is_closed():
    g = wgroup("A", 2)
    mats = element_matrices(g)
    entries = {m.entries for m in mats}
    for a, b in itertools.product(mats, mats):
        assert a.mul(b).entries in entries


def test_orbit_sizes():
    a2 = wgroup("A", 2)
    assert orbit(a2, (1, 0)).size == 3
    g2model = build(RootSystemSpec("G", 2))
    assert orbit(g2model.matgroup(), g2model.simple_root(0)).size == 6
    assert orbit(a2, (0, 0)).size == 1


def test_orbit_representative_is_lex_min():
    orb = orbit(wgroup("A", 2), (1, 0))
    assert orb.representative.entries == min(orb.elements)


def test_orbit_span_examples():
    a2 = build(RootSystemSpec("A", 2))
    g = a2.matgroup()
    assert orbit_span(g, (1, 0)) == full_lattice(2)
    root_span = orbit_span(g, a2.simple_root(0))
    assert index(root_span, full_lattice(2)) == 3
    assert orbit_span(g, (0, 0)).rank == 0


def test_stabilizer_orders_with_direct_oracle():
    a2 = wgroup("A", 2)
    assert stabilizer_order(a2, (1, 0)) == 2 == stabilizer_order_direct(a2, (1, 0))
    assert stabilizer_order(a2, (0, 0)) == 6
    g2model = build(RootSystemSpec("G", 2))
    g2 = g2model.matgroup()
    v = g2model.simple_root(0)
    assert stabilizer_order(g2, v) == 2 == stabilizer_order_direct(g2, v)


def test_orbit_stabilizer_product():
    g = wgroup("B", 2)
    _, order = closure(g)
    for v in [(1, 0), (0, 1), (1, 1), (2, 1), (0, 0)]:
        assert orbit(g, v).size * stabilizer_order(g, v) == order


def test_conjugate_identity_and_permutation():
    a2 = wgroup("A", 2)
    assert conjugate(a2, IntMatrix.identity(2)).generators == a2.generators
    perm = IntMatrix.from_rows([(0, 1), (1, 0)])
    conj = conjugate(a2, perm)
    assert closure(conj)[1] == 6


def test_conjugate_rejects_non_unimodular():
    with pytest.raises(NonUnimodularConjugator):
        conjugate(wgroup("A", 2), IntMatrix.from_rows([(2, 0), (0, 1)]))


def test_paired_conjugation_preserves_orbit_sizes():
    rng = random.Random(5)
    g = wgroup("A", 3)
    for _ in range(20):
        # random unimodular conjugator from elementary operations
        a = IntMatrix.identity(3)
        for _ in range(4):
            i, j = rng.sample(range(3), 2)
            e = [[int(r == c) for c in range(3)] for r in range(3)]
            e[i][j] = rng.choice((-2, -1, 1, 2))
            a = a.mul(IntMatrix.from_rows(e))
        conj = conjugate(g, a)
        v = tuple(rng.randint(-2, 2) for _ in range(3))
        assert orbit(g, v).size == orbit(conj, a.apply(v)).size


def test_restrict_lattice_pairs_with_conjugation():
    g = wgroup("A", 2)
    a = IntMatrix.from_rows([(1, 1), (0, 1)])
    l = hnf_from_rows([(2, -1), (-1, 2)], 2)
    moved = restrict_lattice(l, a)
    assert moved.rank == l.rank
    assert index(moved, full_lattice(2)) == index(l, full_lattice(2))


def test_subgroup_orbits_contained_in_group_orbits():
    g = build(RootSystemSpec("B", 3))
    full = g.matgroup()
    sub = MatGroup(3, full.generators[:2])
    for v in [(1, 0, 0), (1, 1, 0), (0, 0, 1)]:
        assert orbit(sub, v).elements <= orbit(full, v).elements


def test_commutant_dimension():
    assert commutant_dimension(MatGroup.trivial(2)) == 4
    assert commutant_dimension(wgroup("A", 2)) == 1
    minus = IntMatrix.from_rows([(-1, 0), (0, -1)])
    assert commutant_dimension(MatGroup(2, [minus])) == 4


def test_irreducibility_certificate_language():
    from glattice.matgroup import CERTIFIED_IRREDUCIBLE, NOT_CERTIFIED, irreducibility_certificate

    assert irreducibility_certificate(wgroup("A", 2)) == CERTIFIED_IRREDUCIBLE
    # scalars commute with everything: nothing is certified (and nothing
    # is claimed reducible either)
    minus = IntMatrix.from_rows([(-1, 0), (0, -1)])
    assert irreducibility_certificate(MatGroup(2, [minus])) == NOT_CERTIFIED


def test_stable_span_agrees_with_orbit_span():
    """Dual route: fixpoint span must equal the enumerated orbit span."""
    import random

    from glattice.matgroup import stable_span

    rng = random.Random(17)
    groups = [wgroup("A", 2), wgroup("B", 3), wgroup("D", 4), wgroup("G", 2)]
    for g in groups:
        for _ in range(8):
            v = tuple(rng.randint(-3, 3) for _ in range(g.dim))
            assert stable_span(g, v) == orbit_span(g, v)


def test_restricted_action_preserves_orbit_sizes():
    """Orbit sizes agree between ambient and lattice coordinates."""
    from glattice.intmat import coordinates_in
    from glattice.matgroup import in_lattice_coordinates
    from glattice.rootsys import lattice as named_lattice

    for fam, n in [("A", 2), ("B", 3), ("C", 3), ("D", 4)]:
        model = build(RootSystemSpec(fam, n))
        g = model.matgroup()
        root = named_lattice(model, "root").basis
        gl = in_lattice_coordinates(g, root)
        assert gl.order() == g.order()
        for i in range(n):
            amb = model.simple_root(i)
            coords = coordinates_in(amb, root)
            assert coords is not None
            assert orbit(g, amb).size == orbit(gl, coords).size
