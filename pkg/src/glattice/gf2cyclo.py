"""Polynomials over the two-element field and the factor structure of x^p - 1.

Polynomials are bit-packed integers (bit k is the x^k coefficient), as is
usual for GF(2) work.  Factorization is Berlekamp's algorithm, which is
deterministic over GF(2); the factor list is ordered canonically: x + 1
first, then the remaining irreducible factors ordered by the smallest
exponent in their cyclotomic coset (cosets are labelled by anchoring a
primitive p-th root of unity at the lexicographically smallest nontrivial
factor).

The constructions downstream of the factorization -- the sign matrices
D_i, the mod-2 stable subspaces, and the binary sublattices of Z^p --
follow the i-th complementary product g_i = prod_{j != i} f_j.
"""
from __future__ import annotations

from dataclasses import dataclass

from ._primes import is_prime, multiplicative_order
from .errors import CapExceeded, NotOddPrime
from .intmat import IntMatrix, IntVector, LatticeBasis, hnf_from_rows, zero_lattice


@dataclass(frozen=True)
class GF2Poly:
    """Polynomial over GF(2), packed into an int (bit k <-> x^k)."""

    bits: int

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("negative bit pattern")

    @classmethod
    def from_coeffs(cls, coeffs) -> "GF2Poly":
        bits = 0
        for k, c in enumerate(coeffs):
            if c & 1:
                bits |= 1 << k
        return cls(bits)

    @classmethod
    def x_pow(cls, k: int) -> "GF2Poly":
        return cls(1 << k)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return self.bits.bit_length() - 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def coeff(self, k: int) -> int:
        return (self.bits >> k) & 1

    def coeffs(self, length: int | None = None) -> tuple[int, ...]:
        n = self.bits.bit_length() if length is None else length
        return tuple((self.bits >> k) & 1 for k in range(max(n, 1)))

    def weight(self) -> int:
        return bin(self.bits).count("1")

    def __add__(self, other: "GF2Poly") -> "GF2Poly":
        return GF2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "GF2Poly") -> "GF2Poly":
        a, b = self.bits, other.bits
        out = 0
        while b:
            if b & 1:
                out ^= a
            a <<= 1
            b >>= 1
        return GF2Poly(out)

    def __mod__(self, other: "GF2Poly") -> "GF2Poly":
        if other.bits == 0:
            raise ZeroDivisionError("mod by zero polynomial")
        a, b = self.bits, other.bits
        db = b.bit_length()
        while a.bit_length() >= db:
            a ^= b << (a.bit_length() - db)
        return GF2Poly(a)

    def __floordiv__(self, other: "GF2Poly") -> "GF2Poly":
        if other.bits == 0:
            raise ZeroDivisionError("division by zero polynomial")
        a, b = self.bits, other.bits
        db = b.bit_length()
        q = 0
        while a.bit_length() >= db:
            shift = a.bit_length() - db
            q |= 1 << shift
            a ^= b << shift
        return GF2Poly(q)

    def gcd(self, other: "GF2Poly") -> "GF2Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a

    def powmod(self, e: int, modulus: "GF2Poly") -> "GF2Poly":
        result = GF2Poly(1) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def compose_mod(self, arg: "GF2Poly", modulus: "GF2Poly") -> "GF2Poly":
        """self(arg) mod modulus, by Horner's rule."""
        out = GF2Poly(0)
        for k in range(self.degree, -1, -1):
            out = (out * arg) % modulus
            if self.coeff(k):
                out = out + GF2Poly(1)
        return out

    def coeff_string(self) -> str:
        """LSB-first coefficient string, e.g. x^3+x -> '0101'."""
        return "".join(str(c) for c in self.coeffs())


ONE = GF2Poly(1)
X = GF2Poly(2)
X_PLUS_1 = GF2Poly(3)


def _berlekamp_factor(g: GF2Poly) -> list[GF2Poly]:
    """Irreducible factors of a squarefree monic g over GF(2), deterministic."""
    n = g.degree
    if n <= 1:
        return [g]
    # Q[i] = x^{2i} mod g as a bit row over the basis 1, x, ..., x^{n-1}
    q_rows = [GF2Poly(2).powmod(2 * i, g).bits for i in range(n)]
    # null space of (Q - I) over GF(2), bitmask Gaussian elimination
    rows = [q_rows[i] ^ (1 << i) for i in range(n)]
    # eliminate: work over columns; track transposed combination
    basis: list[tuple[int, int]] = []  # (row bits, combo bits over original rows)
    combos = [(rows[i], 1 << i) for i in range(n)]
    pivots = {}
    null_combos = []
    for row, combo in combos:
        r, c = row, combo
        while r:
            p = r.bit_length() - 1
            if p in pivots:
                pr, pc = pivots[p]
                r ^= pr
                c ^= pc
            else:
                pivots[p] = (r, c)
                break
        if r == 0:
            null_combos.append(c)
    # null_combos encode polynomials v with v^2 = v mod g
    if len(null_combos) == 1:
        return [g]
    factors = [g]
    for combo in null_combos:
        v = GF2Poly(combo)
        if v.degree <= 0:
            continue
        next_factors = []
        for f in factors:
            if f.degree <= 1:
                next_factors.append(f)
                continue
            a = f.gcd(v % f)
            if 0 < a.degree < f.degree:
                next_factors.extend([a, f // a])
            else:
                b = f.gcd((v + ONE) % f)
                if 0 < b.degree < f.degree:
                    next_factors.extend([b, f // b])
                else:
                    next_factors.append(f)
        factors = next_factors
        if len(factors) == len(null_combos):
            break
    return factors


def ord2(p: int) -> int:
    """Multiplicative order of 2 modulo an odd prime p."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")
    return multiplicative_order(2, p)


def _cyclotomic_cosets(p: int) -> list[frozenset]:
    """Orbits of multiplication by 2 on F_p^*, ordered by smallest element."""
    seen = set()
    cosets = []
    for t in range(1, p):
        if t in seen:
            continue
        orbit = set()
        c = t
        while c not in orbit:
            orbit.add(c)
            c = 2 * c % p
        seen |= orbit
        cosets.append(frozenset(orbit))
    return sorted(cosets, key=min)


@dataclass(frozen=True)
class CyclotomicFactorization:
    """x^p - 1 = prod factors over GF(2), with coset labels.

    factors[0] is x + 1 (labelled by the exponent coset {0}); the factor
    labelled by coset C has roots {zeta^c : c in C} for the anchored
    primitive p-th root zeta.
    """

    p: int
    d: int
    factors: tuple[GF2Poly, ...]
    cosets: tuple[frozenset, ...]

    @property
    def nontrivial_count(self) -> int:
        return len(self.factors) - 1

    def complementary_product(self, i: int) -> GF2Poly:
        """g_i = product of all factors except the i-th."""
        out = ONE
        for j, f in enumerate(self.factors):
            if j != i:
                out = out * f
        return out


def factor_xp_minus_1(p: int) -> CyclotomicFactorization:
    """Deterministic factorization of x^p - 1 over GF(2), coset-labelled."""
    d = ord2(p)  # validates p
    total = GF2Poly((1 << p) | 1)  # x^p + 1
    phi_part = total // X_PLUS_1
    raw = sorted(_berlekamp_factor(phi_part), key=lambda f: f.bits) if phi_part.degree > 0 else []
    if any(f.degree != d for f in raw):
        raise AssertionError("nontrivial factor of unexpected degree")
    anchor = raw[0] if raw else None
    cosets = _cyclotomic_cosets(p)
    if len(cosets) != len(raw):
        raise AssertionError("coset count does not match factor count")
    # match each factor to its exponent coset: f has zeta^c as a root iff
    # f(x^c) = 0 mod anchor, where zeta is the class of x mod anchor
    labelled = []
    remaining = dict(enumerate(raw))
    for coset in cosets:
        c = min(coset)
        xc = X.powmod(c, anchor)
        hit = None
        for k, f in remaining.items():
            if f.compose_mod(xc, anchor).is_zero():
                hit = k
                break
        if hit is None:
            raise AssertionError("no factor vanishes on a coset")
        labelled.append((coset, remaining.pop(hit)))
    factors = (X_PLUS_1,) + tuple(f for _, f in labelled)
    coset_list = (frozenset({0}),) + tuple(c for c, _ in labelled)
    prod = ONE
    for f in factors:
        prod = prod * f
    if prod != total:
        raise AssertionError("factor product does not reconstitute x^p + 1")
    return CyclotomicFactorization(p, d, factors, coset_list)


# --- mod-2 subspaces -------------------------------------------------------


def _rref_masks(masks: list[int]) -> list[int]:
    """Reduced echelon basis of a span of bitmask vectors, canonical order."""
    basis: list[int] = []  # fully reduced, pivots descending
    for m in masks:
        cur = m
        for b in basis:
            if cur >> (b.bit_length() - 1) & 1:
                cur ^= b
        if cur == 0:
            continue
        piv = cur.bit_length() - 1
        basis = [b ^ cur if b >> piv & 1 else b for b in basis]
        basis.append(cur)
        basis.sort(key=lambda x: -x.bit_length())
    return basis


class CpStableSubspaces:
    """The stable subspaces of F_2^p under the cyclic coordinate shift.

    Subsets S of {0, .., (p-1)/d} index the subspaces; component 0 is the
    line through the all-ones vector, and the union of all nonzero
    components is the even-support subspace.
    """

    def __init__(self, p: int):
        self.fact = factor_xp_minus_1(p)
        self.p = p
        self.component_count = len(self.fact.factors)

    def component_basis(self, i: int) -> tuple[int, ...]:
        """Bitmask basis of the i-th irreducible component."""
        p = self.p
        g = self.fact.complementary_product(i)
        dim = self.fact.factors[i].degree
        mask = g.bits
        full = (1 << p) - 1
        shifts = [mask]
        for k in range(1, dim):
            shifts.append(((mask << k) | (mask >> (p - k))) & full)
        basis = _rref_masks(shifts)
        if len(basis) != dim:
            raise AssertionError("component dimension mismatch")
        return tuple(basis)

    def subspace(self, subset) -> tuple[int, ...]:
        """Bitmask basis for the subspace indexed by a subset of components."""
        subset = frozenset(subset)
        if any(i < 0 or i >= self.component_count for i in subset):
            raise ValueError("component index out of range")
        masks: list[int] = []
        for i in sorted(subset):
            masks.extend(self.component_basis(i))
        return tuple(_rref_masks(masks))

    def dimension(self, subset) -> int:
        return len(self.subspace(subset))


def cp_stable_subspaces(p: int) -> CpStableSubspaces:
    return CpStableSubspaces(p)


def diag_generators(p: int) -> tuple[IntMatrix, ...]:
    """Sign matrices D_i: -1 exactly where g_i has coefficient 1."""
    fact = factor_xp_minus_1(p)
    out = []
    for i in range(len(fact.factors)):
        g = fact.complementary_product(i)
        diag = tuple(-1 if g.coeff(k) else 1 for k in range(p))
        out.append(IntMatrix.diagonal(diag))
    return tuple(out)


def binary_coefficient_vector(p: int, i: int) -> IntVector:
    """v_i: the 0/1 coefficient vector of g_i, as an integer vector."""
    fact = factor_xp_minus_1(p)
    g = fact.complementary_product(i)
    return IntVector(g.coeffs(p))


def _cyclic_shifts(v: IntVector) -> list[tuple[int, ...]]:
    n = v.dim
    e = v.entries
    return [tuple(e[(j - k) % n] for j in range(n)) for k in range(n)]


def binary_sublattice(p: int, subset, include_doubles: bool = True) -> LatticeBasis:
    """Sublattice of Z^p spanned by shifts of the v_i, i in subset.

    With include_doubles (the default) the lattice 2 Z^p is added, matching
    the primitive sublattices of a monomial group containing all sign
    matrices and a p-cycle.  Without it, only the shift span is returned
    (the all-ones case differs between the two conventions when the
    ambient group has no sign part).
    """
    subset = frozenset(subset)
    fact = factor_xp_minus_1(p)
    if any(i < 0 or i >= len(fact.factors) for i in subset):
        raise ValueError("component index out of range")
    if not subset:
        return zero_lattice(p)
    rows: list[tuple[int, ...]] = []
    for i in sorted(subset):
        rows.extend(_cyclic_shifts(binary_coefficient_vector(p, i)))
    if include_doubles:
        for j in range(p):
            rows.append(tuple(2 if k == j else 0 for k in range(p)))
    return hnf_from_rows(rows, p)


def binary_sublattices(p: int, cap: int = 4096) -> dict[frozenset, LatticeBasis]:
    """All sublattices indexed by subsets (guarded: 2^(m+1) can be large)."""
    fact = factor_xp_minus_1(p)
    m = len(fact.factors)
    if 2**m > cap:
        raise CapExceeded("subset enumeration", cap)
    out = {}
    for bits in range(2**m):
        subset = frozenset(i for i in range(m) if bits >> i & 1)
        out[subset] = binary_sublattice(p, subset)
    return out
