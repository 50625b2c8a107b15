"""Positive definite integral forms, short-vector enumeration, theta coefficients.

Positive definiteness is certified exactly (fraction-free leading minors),
and the enumeration uses exact rational interval bounds derived from an
LDL^T decomposition over Fractions, so the vector lists and coefficient
counts are complete by construction -- no pruning heuristic, no floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import CapExceeded, FormNotPreserved
from .intmat import IntMatrix, IntVector, LatticeBasis, as_vector, hnf_from_rows, leading_principal_minors
from .matgroup import MatGroup, Orbit, orbit

DEFAULT_VECTOR_CAP = 10**7


@dataclass(frozen=True)
class GramForm:
    """Symmetric positive definite integral matrix."""

    matrix: IntMatrix

    def __post_init__(self):
        m = self.matrix
        if not m.is_symmetric():
            raise ValueError("Gram matrix must be symmetric")
        if any(d <= 0 for d in leading_principal_minors(m)):
            raise ValueError("Gram matrix must be positive definite")

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def norm(self, v) -> int:
        """v^T X v, exact."""
        vv = as_vector(v)
        m = self.matrix
        n = self.dim
        return sum(vv[i] * m[i, j] * vv[j] for i in range(n) for j in range(n))

    def diagonal_norms(self) -> frozenset:
        return frozenset(self.matrix[i, i] for i in range(self.dim))


def identity_form(n: int) -> GramForm:
    return GramForm(IntMatrix.identity(n))


def _ldl(form: GramForm) -> tuple[list[Fraction], list[list[Fraction]]]:
    """X = U^T diag(d) U with U unit upper triangular; both exact rationals."""
    n = form.dim
    a = [[Fraction(form.matrix[i, j]) for j in range(n)] for i in range(n)]
    d = [Fraction(0)] * n
    u = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        for j in range(i + 1, n):
            u[i][j] = a[i][j] / d[i]
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] -= a[r][i] * a[i][c] / d[i]
    return d, u


def _floor_sqrt(q: Fraction) -> int:
    """floor(sqrt(q)) for a nonnegative rational, exactly."""
    if q < 0:
        raise ValueError("negative radicand")
    return isqrt(q.numerator * q.denominator) // q.denominator


def _coordinate_range(budget: Fraction, d: Fraction, center: Fraction) -> range:
    """Integers x with d*(x + center)^2 <= budget (d > 0, budget >= 0)."""
    s = budget / d
    r = _floor_sqrt(s)
    lo = -r - 1 - (center.numerator // center.denominator if center else 0)
    hi = r + 1 - (center.numerator // center.denominator if center else 0)
    # tighten the float-free bracket by exact comparison
    while d * (Fraction(lo) + center) ** 2 > budget:
        lo += 1
        if lo > hi:
            return range(0, 0)
    while d * (Fraction(hi) + center) ** 2 > budget:
        hi -= 1
    return range(lo, hi + 1)


def short_vectors(form: GramForm, bound: int, cap: int = DEFAULT_VECTOR_CAP) -> list[tuple[IntVector, int]]:
    """Complete list of (v, v^T X v) with norm <= bound, lexicographic order.

    Both v and -v appear (and the zero vector, whenever bound >= 0).
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    n = form.dim
    d, u = _ldl(form)
    out: list[tuple[tuple[int, ...], int]] = []
    coords = [0] * n

    def descend(i: int, budget: Fraction):
        if i < 0:
            v = tuple(coords)
            out.append((v, form.norm(v)))
            if len(out) > cap:
                raise CapExceeded("short vector enumeration", cap)
            return
        center = sum(u[i][j] * coords[j] for j in range(i + 1, n)) or Fraction(0)
        for x in _coordinate_range(budget, d[i], center):
            coords[i] = x
            descend(i - 1, budget - d[i] * (Fraction(x) + center) ** 2)
        coords[i] = 0

    descend(n - 1, Fraction(bound))
    out.sort()
    return [(IntVector(v), norm) for v, norm in out]


@dataclass(frozen=True)
class ThetaPrefix:
    """Coefficients N_0..N_T of the theta series of a form."""

    coefficients: tuple[int, ...]

    @property
    def horizon(self) -> int:
        return len(self.coefficients) - 1


def theta_prefix(form: GramForm, horizon: int, cap: int = DEFAULT_VECTOR_CAP) -> ThetaPrefix:
    """N_i = #{v : v^T X v = i} for 0 <= i <= horizon."""
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    counts = [0] * (horizon + 1)
    for _, norm in short_vectors(form, horizon, cap):
        counts[norm] += 1
    return ThetaPrefix(tuple(counts))


@dataclass(frozen=True)
class DiagonalBound:
    """Stable-generating-set bound from the diagonal norm classes.

    The witness set {v : v^T X v in D} is stable under every automorphism
    of the form and contains all standard basis vectors, so its size bounds
    the symmetric rank of Z^n under Aut(X) from above.
    """

    diagonal_norms: frozenset
    bound: int
    witnesses: tuple[IntVector, ...]


def diagonal_bound(form: GramForm, cap: int = DEFAULT_VECTOR_CAP) -> DiagonalBound:
    norms = form.diagonal_norms()
    top = max(norms)
    witnesses = [v for v, nm in short_vectors(form, top, cap) if nm in norms]
    return DiagonalBound(norms, len(witnesses), tuple(witnesses))


@dataclass(frozen=True)
class NormClassOrbit:
    orbit: Orbit
    norm: int
    class_size: int
    span: LatticeBasis
    spans_ambient: bool


def orbit_within_norm_class(
    g: MatGroup, form: GramForm, v, cap: int = DEFAULT_VECTOR_CAP
) -> NormClassOrbit:
    """Orbit of v under a form-preserving group, checked against its norm class.

    Verifies that every generator preserves the form, that the whole orbit
    sits inside one norm class, and reports whether the orbit spans Z^n.
    """
    if g.dim != form.dim:
        raise ValueError("group and form dimensions differ")
    for h in g.generators:
        if h.transpose().mul(form.matrix).mul(h) != form.matrix:
            raise FormNotPreserved("a generator does not preserve the form")
    vv = as_vector(v)
    nm = form.norm(vv)
    orb = orbit(g, vv, cap)
    for e in orb.elements:
        if form.norm(e) != nm:
            raise AssertionError("orbit left its norm class despite preserved form")
    if nm > 0:
        class_size = theta_prefix(form, nm, cap).coefficients[nm]
    else:
        class_size = 1
    span = hnf_from_rows(sorted(orb.elements), form.dim)
    return NormClassOrbit(orb, nm, class_size, span, span.is_full())
