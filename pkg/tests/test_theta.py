"""Theta series: enumeration completeness, counts, diagonal bounds."""
import itertools
import random

import pytest

from glattice.errors import CapExceeded, FormNotPreserved
from glattice.intmat import IntMatrix
from glattice.matgroup import MatGroup, action_in_row_basis
from glattice.rootsys import RootSystemSpec, build
from glattice.theta import (
    GramForm,
    diagonal_bound,
    identity_form,
    orbit_within_norm_class,
    short_vectors,
    theta_prefix,
)

GRAM_A2 = GramForm(IntMatrix.from_rows([(2, -1), (-1, 2)]))


def brute_force(form, bound):
    n = form.dim
    out = []
    for v in itertools.product(range(-bound - 1, bound + 2), repeat=n):
        nm = form.norm(v)
        if nm <= bound:
            out.append((v, nm))
    return sorted(out)


def test_rejects_non_positive_definite():
    with pytest.raises(ValueError):
        GramForm(IntMatrix.from_rows([(1, 2), (2, 1)]))
    with pytest.raises(ValueError):
        GramForm(IntMatrix.from_rows([(0, 1), (1, 0)]))
    with pytest.raises(ValueError):
        GramForm(IntMatrix.from_rows([(1, 2), (3, 4)]))  # not symmetric


def test_short_vectors_identity_bound_one():
    got = [(v.entries, nm) for v, nm in short_vectors(identity_form(2), 1)]
    assert got == [((-1, 0), 1), ((0, -1), 1), ((0, 0), 0), ((0, 1), 1), ((1, 0), 1)]


def test_short_vectors_a2_roots():
    roots = [v for v, nm in short_vectors(GRAM_A2, 2) if nm == 2]
    assert len(roots) == 6


def test_short_vectors_bound_zero():
    got = short_vectors(GRAM_A2, 0)
    assert [(v.entries, nm) for v, nm in got] == [((0, 0), 0)]


def test_short_vectors_cap():
    with pytest.raises(CapExceeded):
        short_vectors(identity_form(3), 4, cap=5)


def test_completeness_random_small_forms():
    rng = random.Random(11)
    trials = 0
    while trials < 30:
        n = rng.randint(1, 4)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1):
                x = rng.randint(1, 4) if i == j else rng.randint(-2, 2)
                m[i][j] = m[j][i] = x
        try:
            form = GramForm(IntMatrix.from_rows(m))
        except ValueError:
            continue
        trials += 1
        bound = rng.randint(0, 6)
        got = [(v.entries, nm) for v, nm in short_vectors(form, bound)]
        assert got == brute_force(form, bound)


def test_theta_prefix_examples():
    assert theta_prefix(identity_form(3), 2).coefficients == (1, 6, 12)
    assert theta_prefix(identity_form(1), 4).coefficients == (1, 2, 0, 0, 2)
    assert theta_prefix(GRAM_A2, 2).coefficients == (1, 0, 6)


def test_theta_plus_minus_symmetry():
    rng = random.Random(12)
    pre = theta_prefix(identity_form(4), 6)
    assert pre.coefficients[0] == 1
    assert all(c % 2 == 0 for c in pre.coefficients[1:])


def test_diagonal_bound_identity():
    for n in range(1, 8):
        db = diagonal_bound(identity_form(n))
        assert db.diagonal_norms == frozenset({1})
        assert db.bound == 2 * n


def test_diagonal_bound_examples():
    assert diagonal_bound(GRAM_A2).bound == 6
    db = diagonal_bound(GramForm(IntMatrix.from_rows([(1, 0), (0, 3)])))
    assert db.diagonal_norms == frozenset({1, 3})
    assert db.bound == 4  # N_1 + N_3 = 2 + 2


def test_diagonal_bound_witnesses_contain_basis_and_are_stable():
    form = GRAM_A2
    db = diagonal_bound(form)
    ents = {w.entries for w in db.witnesses}
    assert (1, 0) in ents and (0, 1) in ents
    # stability under an automorphism of the form (Weyl action in root basis)
    a2 = build(RootSystemSpec("A", 2))
    g = action_in_row_basis(a2.matgroup(), a2.cartan)
    for h in g.generators:
        for w in db.witnesses:
            assert h.apply(w).entries in ents


def test_orbit_within_norm_class_weyl():
    a2 = build(RootSystemSpec("A", 2))
    g = action_in_row_basis(a2.matgroup(), a2.cartan)
    res = orbit_within_norm_class(g, GRAM_A2, (1, 0))
    assert res.orbit.size == 6 and res.norm == 2 and res.class_size == 6
    assert res.spans_ambient


def test_orbit_within_norm_class_trivial_cases():
    minus = MatGroup(2, [IntMatrix.from_rows([(-1, 0), (0, -1)])])
    res = orbit_within_norm_class(minus, identity_form(2), (1, 0))
    assert res.orbit.size == 2 and res.norm == 1 and res.span.rank == 1
    res0 = orbit_within_norm_class(minus, identity_form(2), (0, 0))
    assert res0.orbit.size == 1 and res0.span.rank == 0


def test_orbit_within_norm_class_rejects_bad_group():
    shear = MatGroup(2, [IntMatrix.from_rows([(1, 1), (0, 1)])])
    with pytest.raises(FormNotPreserved):
        orbit_within_norm_class(shear, identity_form(2), (1, 0))
