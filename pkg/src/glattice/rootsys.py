"""Irreducible root systems, Weyl groups in the weight basis, and their lattices.

Coordinates: the weight lattice is identified with Z^n by sending the
fundamental weight lambda_i to the standard basis vector e_i.  The simple
reflection sigma_i then fixes every e_j except e_i and sends e_i to
e_i - alpha_i, where alpha_i expands in the lambda-basis as row i of the
Cartan matrix (Humphreys ordering and conventions).  Build-time assertions
check that every reflection is an involution, that the braid relations
hold, and that the Weyl order matches its closed form.

Two cells of the classical symmetric-rank table need care and are handled
explicitly here:

* for even D_n the orbit of lambda_1 spans the index-2 standard sublattice
  Lambda_r + Z lambda_1, not the full weight lattice (no single orbit can
  span it, since Lambda/Lambda_r is C2 x C2); the emitted row keeps the
  conventional label while span verification targets the lattice actually
  spanned;
* for F_4 the first simple root is long and its orbit spans an index-4
  sublattice; the short simple root has the same orbit size (24) and does
  span, so it is used as the span witness.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import InvalidRank, KindUnavailable
from .intmat import (
    IntMatrix,
    IntVector,
    LatticeBasis,
    as_vector,
    full_lattice,
    hnf,
    hnf_from_rows,
    index,
    snf,
    unit_vector,
)
from .matgroup import MatGroup

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class RootSystemSpec:
    family: str
    rank: int

    def __post_init__(self):
        lo, hi = _RANK_RANGE.get(self.family, (None, None))
        if lo is None:
            raise InvalidRank(f"unknown family {self.family!r}")
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidRank(f"{self.family}_{self.rank} is out of range")

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_matrix(spec: RootSystemSpec) -> IntMatrix:
    """Cartan matrix (rows express simple roots in the weight basis)."""
    n = spec.rank
    fam = spec.family
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2

    def edge(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if fam in ("A", "B", "C"):
        for i in range(n - 1):
            edge(i, i + 1)
        if fam == "B" and n >= 2:
            c[n - 2][n - 1] = -2
        if fam == "C":
            c[n - 1][n - 2] = -2
    elif fam == "D":
        for i in range(n - 2):
            edge(i, i + 1)
        c[n - 3][n - 1] = c[n - 1][n - 3] = -1
        c[n - 2][n - 1] = c[n - 1][n - 2] = 0
    elif fam == "E":
        # chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4 (1-indexed)
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            edge(a, b)
        edge(1, 3)
    elif fam == "F":
        edge(0, 1)
        edge(2, 3)
        c[1][2] = -2
        c[2][1] = -1
    elif fam == "G":
        c[0][1] = -1
        c[1][0] = -3
    return IntMatrix.from_rows(c)


def weyl_order_closed_form(spec: RootSystemSpec) -> int:
    n = spec.rank
    return {
        "A": factorial(n + 1),
        "B": 2**n * factorial(n),
        "C": 2**n * factorial(n),
        "D": 2 ** (n - 1) * factorial(n),
        "E": {6: 51840, 7: 2903040, 8: 696729600}.get(n, 0),
        "F": 1152,
        "G": 12,
    }[spec.family]


@dataclass(frozen=True)
class WeylModel:
    """A Weyl group acting on weight coordinates."""

    spec: RootSystemSpec
    cartan: IntMatrix
    simple_reflections: tuple[IntMatrix, ...]
    weyl_order: int

    @property
    def rank(self) -> int:
        return self.spec.rank

    def simple_root(self, i: int) -> IntVector:
        """alpha_{i+1} in weight coordinates (0-indexed argument)."""
        return IntVector(self.cartan.row(i))

    def matgroup(self) -> MatGroup:
        return MatGroup(self.rank, self.simple_reflections, label=f"W({self.spec})")


def _reflection(cartan: IntMatrix, i: int) -> IntMatrix:
    n = cartan.rows
    rows = [[int(r == s) for s in range(n)] for r in range(n)]
    for j in range(n):
        rows[j][i] -= cartan[i, j]
    return IntMatrix.from_rows(rows)


def _braid_exponent(cij: int, cji: int) -> int:
    return {0: 2, 1: 3, 2: 4, 3: 6}[cij * cji]


def build(spec: RootSystemSpec) -> WeylModel:
    """Construct the Weyl model and verify its structural invariants."""
    cartan = cartan_matrix(spec)
    n = spec.rank
    refl = tuple(_reflection(cartan, i) for i in range(n))
    ident = IntMatrix.identity(n)
    for i, s in enumerate(refl):
        if s.mul(s) != ident:
            raise AssertionError(f"sigma_{i + 1} is not an involution")
    for i in range(n):
        for j in range(i + 1, n):
            m = _braid_exponent(cartan[i, j], cartan[j, i])
            prod = refl[i].mul(refl[j])
            acc = ident
            for _ in range(m):
                acc = acc.mul(prod)
            if acc != ident:
                raise AssertionError(f"braid relation fails for ({i + 1}, {j + 1})")
    return WeylModel(spec, cartan, refl, weyl_order_closed_form(spec))


def dominant_representative(model: WeylModel, v) -> IntVector:
    """The dominant vector in the W-orbit of v, via explicit reflections."""
    cur = list(as_vector(v).entries)
    n = model.rank
    cartan = model.cartan
    fuse = model.weyl_order
    steps = 0
    while True:
        i = next((k for k in range(n) if cur[k] < 0), None)
        if i is None:
            return IntVector(tuple(cur))
        # sigma_i: v_j -= C[i, j] * v_i
        vi = cur[i]
        for j in range(n):
            cur[j] -= cartan[i, j] * vi
        steps += 1
        if steps > fuse:
            raise AssertionError("dominance reduction failed to terminate")


def _components(cartan: IntMatrix, nodes: list[int]) -> list[list[int]]:
    nodeset = set(nodes)
    seen = set()
    comps = []
    for start in nodes:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = [start]
        while queue:
            u = queue.pop()
            for w in nodeset:
                if w not in seen and cartan[u, w] != 0:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def _component_weyl_order(cartan: IntMatrix, comp: list[int]) -> int:
    """Weyl order of the sub-Dynkin diagram induced on comp."""
    k = len(comp)
    if k == 1:
        return 2
    adj = {u: [w for w in comp if w != u and cartan[u, w] != 0] for u in comp}
    mults = {
        frozenset((u, w)): cartan[u, w] * cartan[w, u] for u in comp for w in adj[u]
    }
    if any(m == 3 for m in mults.values()):
        if k != 2:
            raise AssertionError("triple edge in a diagram of size > 2")
        return 12
    branch = [u for u in comp if len(adj[u]) == 3]
    doubles = [e for e, m in mults.items() if m == 2]
    if doubles:
        if branch or len(doubles) != 1:
            raise AssertionError("unexpected multiply-laced diagram shape")
        u, w = tuple(doubles[0])
        if len(adj[u]) == 1 or len(adj[w]) == 1:
            return 2**k * factorial(k)  # B_k / C_k (same order)
        if k != 4:
            raise AssertionError("interior double edge outside F_4")
        return 1152
    if branch:
        if len(branch) != 1:
            raise AssertionError("diagram with two branch nodes")
        b = branch[0]
        arms = []
        for start in adj[b]:
            length = 1
            prev, cur = b, start
            while True:
                nxt = [w for w in adj[cur] if w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[0] == 1 and arms[1] == 1:
            return 2 ** (k - 1) * factorial(k)  # D_k
        if arms == [1, 2, 2]:
            return 51840
        if arms == [1, 2, 3]:
            return 2903040
        if arms == [1, 2, 4]:
            return 696729600
        raise AssertionError(f"unrecognized branched diagram with arms {arms}")
    return factorial(k + 1)  # A_k


def stabilizer_order_dominant(model: WeylModel, dominant: IntVector) -> int:
    """Order of the parabolic stabilizer <sigma_i : v_i = 0> of a dominant v."""
    zero_nodes = [i for i, e in enumerate(dominant.entries) if e == 0]
    out = 1
    for comp in _components(model.cartan, zero_nodes):
        out *= _component_weyl_order(model.cartan, comp)
    return out


def weyl_orbit_size(model: WeylModel, v) -> int:
    """|W v| via the parabolic stabilizer of the dominant representative."""
    dom = dominant_representative(model, v)
    return model.weyl_order // stabilizer_order_dominant(model, dom)


def root_length_squares(model: WeylModel) -> tuple[Fraction, ...]:
    """Relative squared lengths of the simple roots (min normalized to 1)."""
    n = model.rank
    c = model.cartan
    s: list[Fraction | None] = [None] * n
    s[0] = Fraction(1)
    queue = [0]
    while queue:
        i = queue.pop()
        for j in range(n):
            if j != i and c[i, j] != 0 and s[j] is None:
                s[j] = s[i] * Fraction(c[j, i], c[i, j])
                queue.append(j)
    if any(x is None for x in s):
        raise AssertionError("Dynkin diagram is disconnected")
    m = min(s)
    return tuple(x / m for x in s)


def short_simple_root_index(model: WeylModel) -> int:
    """0-indexed position of the first short simple root."""
    lengths = root_length_squares(model)
    return lengths.index(min(lengths))


def short_root_count(model: WeylModel) -> int:
    """Number of short roots (all roots, when simply laced)."""
    i = short_simple_root_index(model)
    return weyl_orbit_size(model, model.simple_root(i))


@dataclass(frozen=True)
class NamedLattice:
    """One of the W-stable lattices between the root and weight lattices."""

    kind: str  # "weight" | "root" | "intermediate" | "intermediate_D"
    d: int | None
    basis: LatticeBasis
    generator_hint: IntVector
    index_in_weight: int


def lattice(model: WeylModel, kind: str, d: int | None = None) -> NamedLattice:
    """Named W-stable lattice in weight coordinates, canonical HNF basis.

    Kinds:
      weight            the full weight lattice Z^n
      root              row span of the Cartan matrix
      intermediate      family A only: root lattice + Z lambda_d, d | n+1
      intermediate_D    family D only: root lattice + Z lambda_d for
                        d in {1, n-1, n} (d = 1 is the standard Z^n copy;
                        the two spin kinds need even n)
    """
    n = model.rank
    fam = model.spec.family
    weight = full_lattice(n)
    root = hnf(model.cartan)
    if kind == "weight":
        # the conventional single-orbit generator of the weight lattice;
        # for even D_n no single orbit spans it (see module docstring) and
        # the hint is the conventional lambda_1 column entry
        if fam == "B" or (fam == "D" and n % 2 == 1):
            hint = unit_vector(n, n - 1)
        elif fam == "E" and n == 7:
            hint = unit_vector(n, 6)
        elif fam in ("F", "G") or (fam == "E" and n == 8):
            hint = model.simple_root(short_simple_root_index(model))
        else:
            hint = unit_vector(n, 0)
        return NamedLattice("weight", None, weight, hint, 1)
    if kind == "root":
        i = short_simple_root_index(model)
        return NamedLattice("root", None, root, model.simple_root(i), int(index(root, weight)))
    if kind == "intermediate":
        if fam != "A" or d is None or d < 1 or d > n or (n + 1) % d != 0:
            raise KindUnavailable(f"intermediate({d}) is not available for {model.spec}")
        basis = hnf_from_rows(root.rows() + [unit_vector(n, d - 1).entries], n)
        return NamedLattice("intermediate", d, basis, unit_vector(n, d - 1), int(index(basis, weight)))
    if kind == "intermediate_D":
        if fam != "D" or d is None:
            raise KindUnavailable(f"intermediate_D is not available for {model.spec}")
        if d not in (1, n - 1, n):
            raise KindUnavailable(f"intermediate_D({d}) is not available for {model.spec}")
        if d in (n - 1, n) and n % 2 != 0:
            raise KindUnavailable("the two spin intermediates need even rank")
        basis = hnf_from_rows(root.rows() + [unit_vector(n, d - 1).entries], n)
        return NamedLattice("intermediate_D", d, basis, unit_vector(n, d - 1), int(index(basis, weight)))
    raise KindUnavailable(f"unknown lattice kind {kind!r}")


@dataclass(frozen=True)
class SymrankTableRow:
    """One row of the symmetric-rank table for Weyl lattices.

    ``generator_label``/``generator`` are the conventional table entries;
    ``witness`` is the vector whose orbit is verified to span ``target``
    (it differs from ``generator`` only for F_4, where the conventional
    entry is a long root), and ``spans_labelled_lattice`` records whether
    the conventional lattice label names the lattice the orbit spans (it
    does not for the even-D weight row; see the module docstring).
    """

    family: str
    rank: int
    lattice_label: str
    symrank: int
    generator_label: str
    generator: IntVector
    witness: IntVector
    target: NamedLattice
    spans_labelled_lattice: bool


def _row(model: WeylModel, label: str, gen_label: str, gen: IntVector, target: NamedLattice,
         witness: IntVector | None = None, spans: bool = True) -> SymrankTableRow:
    w = witness if witness is not None else gen
    return SymrankTableRow(
        model.spec.family,
        model.rank,
        label,
        weyl_orbit_size(model, w),
        gen_label,
        gen,
        w,
        target,
        spans,
    )


def symrank_table_rows_for(model: WeylModel) -> list[SymrankTableRow]:
    """All table rows for one root system, in table order."""
    n = model.rank
    fam = model.spec.family
    lam = lambda i: unit_vector(n, i - 1)  # noqa: E731
    alpha = model.simple_root
    rows: list[SymrankTableRow] = []
    if fam == "A":
        rows.append(_row(model, "L", "lambda_1", lam(1), lattice(model, "weight")))
        for d in range(2, n + 1):
            if (n + 1) % d == 0:
                rows.append(
                    _row(model, f"L+{d}", f"lambda_{d}", lam(d), lattice(model, "intermediate", d))
                )
        rows.append(_row(model, "Lr", "alpha_1", alpha(0), lattice(model, "root")))
    elif fam == "B":
        rows.append(_row(model, "L", f"lambda_{n}", lam(n), lattice(model, "weight")))
        rows.append(_row(model, "Lr", f"alpha_{n}", alpha(n - 1), lattice(model, "root")))
    elif fam == "C":
        rows.append(_row(model, "L", "lambda_1", lam(1), lattice(model, "weight")))
        rows.append(_row(model, "Lr", "alpha_1", alpha(0), lattice(model, "root")))
    elif fam == "D":
        if n % 2 == 0:
            # the lambda_1 orbit spans the index-2 standard sublattice, and
            # Lambda/Lambda_r = C2 x C2 admits no single spanning orbit
            rows.append(
                _row(model, "L", "lambda_1", lam(1), lattice(model, "intermediate_D", 1), spans=False)
            )
            rows.append(
                _row(model, f"L+2({n - 1})", f"lambda_{n - 1}", lam(n - 1), lattice(model, "intermediate_D", n - 1))
            )
            rows.append(
                _row(model, f"L+2({n})", f"lambda_{n}", lam(n), lattice(model, "intermediate_D", n))
            )
        else:
            rows.append(_row(model, "L", f"lambda_{n}", lam(n), lattice(model, "weight")))
            rows.append(_row(model, "L+2", "lambda_1", lam(1), lattice(model, "intermediate_D", 1)))
        rows.append(_row(model, "Lr", "alpha_1", alpha(0), lattice(model, "root")))
    elif fam == "E":
        top = {6: 1, 7: 7, 8: None}[n]
        if top is not None:
            rows.append(_row(model, "L", f"lambda_{top}", lam(top), lattice(model, "weight")))
            rows.append(_row(model, "Lr", "alpha_1", alpha(0), lattice(model, "root")))
        else:
            rows.append(_row(model, "L=Lr", "alpha_1", alpha(0), lattice(model, "root")))
    elif fam == "F":
        short = short_simple_root_index(model)
        rows.append(
            _row(model, "L=Lr", "alpha_1", alpha(0), lattice(model, "root"), witness=alpha(short))
        )
    elif fam == "G":
        rows.append(_row(model, "L=Lr", "alpha_1", alpha(0), lattice(model, "root")))
    return rows


def _specs_up_to(max_rank: int) -> list[RootSystemSpec]:
    specs = []
    for fam in FAMILIES:
        lo, hi = _RANK_RANGE[fam]
        top = max_rank if hi is None else min(hi, max_rank)
        for n in range(lo, top + 1):
            specs.append(RootSystemSpec(fam, n))
    return specs


def weyl_symrank_table(max_rank: int) -> list[SymrankTableRow]:
    """All symmetric-rank table rows with rank <= max_rank."""
    if max_rank < 1:
        raise ValueError("max_rank must be >= 1")
    rows: list[SymrankTableRow] = []
    for spec in _specs_up_to(max_rank):
        rows.extend(symrank_table_rows_for(build(spec)))
    return rows


def expected_symrank(row: SymrankTableRow) -> int:
    """Closed-form value for a table row (independent of orbit machinery)."""
    n = row.rank
    fam = row.family
    label = row.lattice_label
    if fam == "A":
        if label == "L":
            return n + 1
        if label.startswith("L+"):
            return comb(n + 1, int(label[2:]))
        return n * (n + 1)
    if fam == "B":
        return 2**n if label == "L" else 2 * n
    if fam == "C":
        return 2 * n if label == "L" else 2 * n * (n - 1)
    if fam == "D":
        if n % 2 == 0:
            if label == "L":
                return 2 * n
            if label.startswith("L+2("):
                return 2 ** (n - 1)
        else:
            if label == "L":
                return 2 ** (n - 1)
            if label == "L+2":
                return 2 * n
        return 2 * n * (n - 1)
    if fam == "E":
        return {(6, "L"): 27, (6, "Lr"): 72, (7, "L"): 56, (7, "Lr"): 126, (8, "L=Lr"): 240}[(n, label)]
    if fam == "F":
        return 24
    return 6


@dataclass(frozen=True)
class RdimBound:
    n: int
    value: int
    witness_family: str
    witness_rank: int
    witness_kind: str  # "root" or "weight"


def rdim_lower_bound(n: int) -> RdimBound:
    """Best Weyl-lattice lower bound on the maximal representation dimension."""
    if n < 1:
        raise ValueError("dimension must be positive")
    small = {
        1: (2, "A", 1, "root"),
        2: (6, "G", 2, "root"),
        3: (12, "A", 3, "root"),
        4: (24, "C", 4, "root"),
        5: (40, "D", 5, "root"),
        6: (72, "E", 6, "root"),
    }
    if n in small:
        v, fam, r, kind = small[n]
        return RdimBound(n, v, fam, r, kind)
    return RdimBound(n, 2**n, "B", n, "weight")


# ---------------------------------------------------------------------------
# Regression fixtures for the membership matrices P^-1 D.
#
# The published bottom-row matrices are one valid choice among many (the
# transforms in a Smith decomposition are not canonical), so they are
# compared modulo unimodular equivalence: the lattice generated by the
# matrix columns must equal the root lattice.
# ---------------------------------------------------------------------------


def published_pinv_d(spec: RootSystemSpec) -> IntMatrix | None:
    """Published membership matrix (identity rows + special bottom rows)."""
    n = spec.rank
    fam = spec.family

    def with_bottom(bottom_rows: list[list[int]]) -> IntMatrix:
        k = len(bottom_rows)
        rows = [[int(i == j) for j in range(n)] for i in range(n - k)] + bottom_rows
        return IntMatrix.from_rows(rows)

    if fam == "A":
        return with_bottom([[*range(1, n), n + 1]]) if n >= 1 else None
    if fam == "B":
        return with_bottom([[0] * (n - 1) + [2]])
    if fam == "C":
        if n % 2 == 1:
            return with_bottom([[1, 0] * ((n - 1) // 2) + [2]])
        return with_bottom(
            [[1, 0] * ((n - 2) // 2) + [0, -2], [0] * (n - 2) + [1, 2]]
        )
    if fam == "D":
        if n % 2 == 0:
            return with_bottom(
                [[1, 0] * ((n - 2) // 2) + [2, 0], [1, 0] * ((n - 2) // 2) + [0, 2]]
            )
        return with_bottom([[2, 0] * ((n - 3) // 2) + [2, 1, 4]])
    if fam == "E" and n == 6:
        return with_bottom([[1, 0, 2, 0, 1, 3]])
    if fam == "E" and n == 7:
        return with_bottom([[0, 1, 0, 0, 1, 0, 2]])
    return None  # E_8, F_4, G_2: root lattice equals weight lattice


def column_span(m: IntMatrix) -> LatticeBasis:
    return hnf(m.transpose())


def membership_matrix_from_snf(model: WeylModel) -> IntMatrix:
    """P^-1 D computed from this package's own Smith decomposition.

    Solvability of (P^-1 D) u = v over Z characterizes membership in the
    root lattice written in weight coordinates; equivalently the column
    span of P^-1 D is the root lattice.
    """
    dec = snf(model.cartan.transpose())
    return dec.P.inverse_unimodular().mul(dec.D)


def root_membership_by_snf(model: WeylModel, v) -> bool:
    """Membership test for the root lattice via the Smith decomposition."""
    dec = snf(model.cartan.transpose())
    pv = dec.P.apply(as_vector(v))
    return all(
        (pv[i] % dec.D[i, i] == 0) if dec.D[i, i] != 0 else (pv[i] == 0)
        for i in range(model.rank)
    )
