"""Sublattices of Z^2, quotient groups, and characters as rational angles.

All scalars here are roots of unity stored as exact rationals mod 1:
a RationalAngle q represents exp(2*pi*i*q), so angle addition is scalar
multiplication.  Sublattices are kept in Hermite normal form so equal
lattices compare equal; rank-2 lattices also carry Smith normal form
data with the transformation matrices, which character extension needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence


class LatticeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class RationalAngle:
    """A rational number mod 1, representing the scalar exp(2*pi*i*value)."""

    value: Fraction

    def __init__(self, value: Fraction | int | str = 0):
        object.__setattr__(self, "value", Fraction(value) % 1)

    def __add__(self, other: "RationalAngle") -> "RationalAngle":
        return RationalAngle(self.value + other.value)

    def __sub__(self, other: "RationalAngle") -> "RationalAngle":
        return RationalAngle(self.value - other.value)

    def __neg__(self) -> "RationalAngle":
        return RationalAngle(-self.value)

    def __mul__(self, k: int) -> "RationalAngle":
        return RationalAngle(self.value * k)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return f"{self.value.numerator}/{self.value.denominator}"

    @classmethod
    def parse(cls, text: str) -> "RationalAngle":
        return cls(Fraction(text))


ZERO_ANGLE = RationalAngle(0)

Vec = tuple[int, int]


def _hnf_rows(gens: Iterable[Vec]) -> list[Vec]:
    """Row Hermite normal form of the lattice spanned by gens.

    Returns [] (rank 0), [(a, b)] with a > 0 or (a == 0 and b > 0)
    (rank 1), or [(a, b), (0, d)] with a, d > 0 and 0 <= b < d (rank 2).
    """
    rows = [tuple(int(x) for x in g) for g in gens if tuple(g) != (0, 0)]
    if not rows:
        return []
    # Euclidean elimination in the first column.
    while True:
        nonzero = sorted((r for r in rows if r[0] != 0), key=lambda r: abs(r[0]))
        if len(nonzero) <= 1:
            break
        a = nonzero[0]
        new_rows = [a]
        for r in rows:
            if r is a or r[0] == 0:
                if r is not a:
                    new_rows.append(r)
                continue
            q = r[0] // a[0]
            new_rows.append((r[0] - q * a[0], r[1] - q * a[1]))
        rows = [r for r in new_rows if r != (0, 0)]
    first = [r for r in rows if r[0] != 0]
    rest = [r[1] for r in rows if r[0] == 0]
    from math import gcd

    d = 0
    for b in rest:
        d = gcd(d, b)
    if not first:
        return [(0, d)] if d else []
    (a, b) = first[0]
    if a < 0:
        a, b = -a, -b
    if d == 0:
        return [(a, b)]
    b %= d
    return [(a, b), (0, d)]


def _snf_2x2(m: list[list[int]]) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form of a 2x2 integer matrix.

    Returns (D, U, V) with U * m * V = D = diag(d1, d2), d1 | d2, and
    U, V unimodular.
    """
    a = [row[:] for row in m]
    u = [[1, 0], [0, 1]]
    v = [[1, 0], [0, 1]]

    def row_op(i, j, q):  # row i -= q * row j
        for c in range(2):
            a[i][c] -= q * a[j][c]
            u[i][c] -= q * u[j][c]

    def col_op(i, j, q):  # col i -= q * col j
        for r in range(2):
            a[r][i] -= q * a[r][j]
            v[r][i] -= q * v[r][j]

    def swap_rows():
        a[0], a[1] = a[1], a[0]
        u[0], u[1] = u[1], u[0]

    def swap_cols():
        for r in range(2):
            a[r][0], a[r][1] = a[r][1], a[r][0]
            v[r][0], v[r][1] = v[r][1], v[r][0]

    for _ in range(200):
        if a[0][0] == 0:
            if a[1][0] != 0:
                swap_rows()
            elif a[0][1] != 0:
                swap_cols()
            elif a[1][1] != 0:
                swap_rows()
                swap_cols()
            else:
                break
        if a[1][0] != 0:
            q = a[1][0] // a[0][0]
            row_op(1, 0, q)
            if a[1][0] != 0:
                swap_rows()
            continue
        if a[0][1] != 0:
            q = a[0][1] // a[0][0]
            col_op(1, 0, q)
            if a[0][1] != 0:
                swap_cols()
            continue
        if a[1][1] % a[0][0] != 0:
            # fold the divisibility defect into position (0, 0)
            row_op(0, 1, -1)
            continue
        break
    if a[0][0] < 0:
        a[0][0] = -a[0][0]
        u[0][0], u[0][1] = -u[0][0], -u[0][1]
    if a[1][1] < 0:
        a[1][1] = -a[1][1]
        u[1][0], u[1][1] = -u[1][0], -u[1][1]
    return a, u, v


class Sublattice:
    """A sublattice K <= Z^2, canonical by Hermite normal form."""

    def __init__(self, gens: Iterable[Vec] = ()):
        self.basis: tuple[Vec, ...] = tuple(_hnf_rows(gens))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Sublattice):
            return NotImplemented
        return self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def __repr__(self) -> str:
        return f"Sublattice({list(self.basis)})"

    def __contains__(self, vec: Sequence[int]) -> bool:
        s, t = int(vec[0]), int(vec[1])
        if self.rank == 0:
            return (s, t) == (0, 0)
        if self.rank == 1:
            (a, b) = self.basis[0]
            if a != 0:
                return s % a == 0 and t == (s // a) * b
            return s == 0 and t % b == 0
        (a, b), (_, d) = self.basis
        if s % a != 0:
            return False
        return (t - (s // a) * b) % d == 0

    @cached_property
    def snf(self) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
        """(D, U, V) with U * basis_matrix * V = D for rank-2 lattices."""
        if self.rank != 2:
            raise LatticeError("SNF requires a rank-2 sublattice")
        return _snf_2x2([list(self.basis[0]), list(self.basis[1])])

    @property
    def invariant_factors(self) -> tuple[int, int]:
        d, _, _ = self.snf
        return (d[0][0], d[1][1])

    @property
    def index(self) -> int:
        """Index of K in Z^2 (group order of the quotient); requires rank 2."""
        if self.rank != 2:
            raise LatticeError("infinite index: rank < 2")
        (a, _), (_, d) = self.basis
        return a * d

    def coefficients_of(self, vec: Vec) -> tuple[int, ...]:
        """Integer coordinates of vec in the HNF basis; vec must lie in K."""
        s, t = vec
        if self.rank == 0:
            if (s, t) != (0, 0):
                raise LatticeError(f"{vec} not in lattice")
            return ()
        if self.rank == 1:
            (a, b) = self.basis[0]
            c = s // a if a != 0 else t // b
            if (c * a, c * b) != (s, t):
                raise LatticeError(f"{vec} not in lattice")
            return (c,)
        (a, b), (_, d) = self.basis
        if s % a != 0:
            raise LatticeError(f"{vec} not in lattice")
        c1 = s // a
        if (t - c1 * b) % d != 0:
            raise LatticeError(f"{vec} not in lattice")
        return (c1, (t - c1 * b) // d)


def sublattice_from(gens: Iterable[Vec]) -> Sublattice:
    return Sublattice(gens)


def join(a: Sublattice, b: Sublattice) -> Sublattice:
    """Smallest sublattice containing both (the lattice sum)."""
    return Sublattice(list(a.basis) + list(b.basis))


class QuotientGroup:
    """G = Z^2 / K with designated generators g1 = [1,0]+K, g2 = [0,1]+K."""

    def __init__(self, kernel: Sublattice):
        self.kernel = kernel

    @property
    def is_finite(self) -> bool:
        return self.kernel.rank == 2

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise LatticeError("infinite group")
        return self.kernel.index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuotientGroup):
            return NotImplemented
        return self.kernel == other.kernel

    def __hash__(self) -> int:
        return hash(("QuotientGroup", self.kernel))

    def __repr__(self) -> str:
        return f"QuotientGroup(Z^2 / {self.kernel!r})"

    def reduce(self, vec: Sequence[int]) -> "Coset":
        return coset_reduce(self, vec)

    @property
    def g1(self) -> "Coset":
        return self.reduce((1, 0))

    @property
    def g2(self) -> "Coset":
        return self.reduce((0, 1))

    def zero(self) -> "Coset":
        return self.reduce((0, 0))


@dataclass(frozen=True)
class Coset:
    """A coset of K in Z^2 by its canonical representative."""

    representative: Vec
    parent: QuotientGroup

    def __add__(self, other) -> "Coset":
        s, t = self.representative
        if isinstance(other, Coset):
            os, ot = other.representative
        else:
            os, ot = other
        return coset_reduce(self.parent, (s + os, t + ot))

    def __sub__(self, other) -> "Coset":
        s, t = self.representative
        if isinstance(other, Coset):
            os, ot = other.representative
        else:
            os, ot = other
        return coset_reduce(self.parent, (s - os, t - ot))

    def __neg__(self) -> "Coset":
        s, t = self.representative
        return coset_reduce(self.parent, (-s, -t))

    def __str__(self) -> str:
        return f"[{self.representative[0]},{self.representative[1]}]"


def coset_reduce(g: QuotientGroup, vec: Sequence[int]) -> Coset:
    """Canonical representative of vec + K.

    Rank 2: representative in [0, a) x [0, d) for HNF basis (a,b),(0,d).
    Rank 1: first (or only) reducible coordinate brought into [0, |lead|).
    """
    s, t = int(vec[0]), int(vec[1])
    k = g.kernel
    if k.rank == 0:
        return Coset((s, t), g)
    if k.rank == 1:
        (a, b) = k.basis[0]
        if a != 0:
            q = s // a
            return Coset((s - q * a, t - q * b), g)
        q = t // b
        return Coset((s, t - q * b), g)
    (a, b), (_, d) = k.basis
    q = s // a
    s, t = s - q * a, t - q * b
    t %= d
    return Coset((s, t), g)


def enumerate_group(g: QuotientGroup) -> list[Coset]:
    """All cosets of a finite quotient in canonical (lexicographic) order."""
    if not g.is_finite:
        raise LatticeError("cannot enumerate an infinite group")
    (a, _), (_, d) = g.kernel.basis
    return [Coset((s, t), g) for s in range(a) for t in range(d)]


@dataclass(frozen=True)
class CharacterOnZ2:
    """A character of Z^2 by its rational angles at (1,0) and (0,1)."""

    at10: RationalAngle
    at01: RationalAngle

    def __call__(self, vec: Sequence[int] | Coset) -> RationalAngle:
        if isinstance(vec, Coset):
            vec = vec.representative
        s, t = int(vec[0]), int(vec[1])
        return s * self.at10 + t * self.at01

    def __add__(self, other: "CharacterOnZ2") -> "CharacterOnZ2":
        return CharacterOnZ2(self.at10 + other.at10, self.at01 + other.at01)

    def __sub__(self, other: "CharacterOnZ2") -> "CharacterOnZ2":
        return CharacterOnZ2(self.at10 - other.at10, self.at01 - other.at01)

    def vanishes_on(self, lattice: Sublattice) -> bool:
        return all(not self(b) for b in lattice.basis)

    def restrict(self, lattice: Sublattice) -> "CharacterOnSublattice":
        return CharacterOnSublattice(
            lattice, tuple(self(b) for b in lattice.basis)
        )

    def __str__(self) -> str:
        return f"phi(1,0)={self.at10} phi(0,1)={self.at01}"


@dataclass(frozen=True)
class CharacterOnSublattice:
    """A character psi of a sublattice, by its values on the HNF basis."""

    domain: Sublattice
    basis_values: tuple[RationalAngle, ...]

    def __post_init__(self):
        if len(self.basis_values) != self.domain.rank:
            raise LatticeError("need one value per basis vector")

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[tuple[Vec, RationalAngle]]
    ) -> "CharacterOnSublattice":
        """Build psi from (vector, angle) pairs, checking consistency."""
        pairs = [(tuple(v), a) for v, a in pairs]
        lattice = Sublattice([v for v, _ in pairs])
        values = _solve_basis_values(lattice, pairs)
        psi = cls(lattice, values)
        for v, a in pairs:
            if psi(v) != a:
                raise LatticeError(f"inconsistent character data at {v}")
        return psi

    def __call__(self, vec: Sequence[int]) -> RationalAngle:
        coeffs = self.domain.coefficients_of((int(vec[0]), int(vec[1])))
        total = ZERO_ANGLE
        for c, val in zip(coeffs, self.basis_values):
            total = total + c * val
        return total

    def __str__(self) -> str:
        parts = [
            f"psi{b}={v}" for b, v in zip(self.domain.basis, self.basis_values)
        ]
        return " ".join(parts) if parts else "psi=trivial"


def _solve_basis_values(lattice, pairs) -> tuple[RationalAngle, ...]:
    """Angles on the HNF basis consistent with the given (vector, angle) pairs.

    Each HNF basis vector is an integer combination of the generators; the
    combination is found by Gaussian elimination over Q (coefficients are
    integers because HNF rows lie in the generated lattice).
    """
    if lattice.rank == 0:
        return ()
    vecs = [v for v, _ in pairs]
    angles = [a for _, a in pairs]
    out = []
    for b in lattice.basis:
        coeffs = _integer_combination(vecs, b)
        total = ZERO_ANGLE
        for c, a in zip(coeffs, angles):
            total = total + c * a
        out.append(total)
    return tuple(out)


def _integer_combination(vecs: list[Vec], target: Vec) -> list[int]:
    """Integers c with sum(c_i * vecs[i]) == target.

    Tracked Euclidean elimination: rows carry their expression in the
    original generators, so the triangularized basis can be pulled back.
    Raises LatticeError when target is outside the generated lattice.
    """
    n = len(vecs)
    rows = []
    for idx, (x, y) in enumerate(vecs):
        expr = [0] * n
        expr[idx] = 1
        rows.append([x, y, expr])
    rows = [r for r in rows if (r[0], r[1]) != (0, 0)]

    def combine(dst, src, q):
        dst[0] -= q * src[0]
        dst[1] -= q * src[1]
        dst[2] = [a - q * b for a, b in zip(dst[2], src[2])]

    while sum(1 for r in rows if r[0] != 0) > 1:
        live = sorted((r for r in rows if r[0] != 0), key=lambda r: abs(r[0]))
        pivot = live[0]
        for r in live[1:]:
            combine(r, pivot, r[0] // pivot[0])
        rows = [r for r in rows if (r[0], r[1]) != (0, 0)]
    while sum(1 for r in rows if r[0] == 0) > 1:
        live = sorted((r for r in rows if r[0] == 0), key=lambda r: abs(r[1]))
        pivot = live[0]
        for r in live[1:]:
            combine(r, pivot, r[1] // pivot[1])
        rows = [r for r in rows if (r[0], r[1]) != (0, 0)]

    first = next((r for r in rows if r[0] != 0), None)
    second = next((r for r in rows if r[0] == 0), None)
    tx, ty = target
    coeffs = [0] * n
    if first is not None:
        if tx % first[0] != 0:
            raise LatticeError(f"{target} not reachable from {vecs}")
        c = tx // first[0]
        tx, ty = tx - c * first[0], ty - c * first[1]
        coeffs = [a + c * b for a, b in zip(coeffs, first[2])]
    if tx != 0:
        raise LatticeError(f"{target} not reachable from {vecs}")
    if ty != 0:
        if second is None or ty % second[1] != 0:
            raise LatticeError(f"{target} not reachable from {vecs}")
        c = ty // second[1]
        coeffs = [a + c * b for a, b in zip(coeffs, second[2])]
    return coeffs


def characters(g: QuotientGroup) -> list[CharacterOnZ2]:
    """All |G| characters of a finite G = Z^2/K, as characters of Z^2.

    Solved via SNF: with U*M*V = diag(d1,d2), the characters are
    x = V*y over y in (1/d1)Z x (1/d2)Z mod 1.
    """
    if not g.is_finite:
        raise LatticeError("infinite group has infinitely many characters")
    d, _, v = g.kernel.snf
    d1, d2 = d[0][0], d[1][1]
    out = []
    for k1 in range(d1):
        for k2 in range(d2):
            y1, y2 = Fraction(k1, d1), Fraction(k2, d2)
            x1 = v[0][0] * y1 + v[0][1] * y2
            x2 = v[1][0] * y1 + v[1][1] * y2
            out.append(CharacterOnZ2(RationalAngle(x1), RationalAngle(x2)))
    out.sort(key=lambda c: (c.at10.value, c.at01.value))
    return out


def extend_character(psi: CharacterOnSublattice) -> CharacterOnZ2:
    """The canonical extension phi of psi to all of Z^2.

    Rank 2: solve on the SNF-diagonalized basis, taking the smallest
    non-negative angle in each diagonal coordinate.  Rank 1 with basis
    (a, b): phi(1,0) = 0 and phi(0,1) = psi/b when b != 0 (so a kernel
    Z(k,l) with value beta extends to beta/l at (0,1)), else solve at
    (1,0).  Rank 0: phi = 0.
    """
    k = psi.domain
    if k.rank == 0:
        return CharacterOnZ2(ZERO_ANGLE, ZERO_ANGLE)
    if k.rank == 1:
        (a, b) = k.basis[0]
        val = psi.basis_values[0]
        if b != 0:
            # need a*x1 + b*x2 = val with x1 = 0
            x2 = RationalAngle(val.value / b)
            if a != 0 and a * ZERO_ANGLE + b * x2 != val:
                raise LatticeError("unreachable: rational division failed")
            return CharacterOnZ2(ZERO_ANGLE, x2)
        return CharacterOnZ2(RationalAngle(val.value / a), ZERO_ANGLE)
    d, u, v = k.snf
    d1, d2 = d[0][0], d[1][1]
    c1 = u[0][0] * psi.basis_values[0] + u[0][1] * psi.basis_values[1]
    c2 = u[1][0] * psi.basis_values[0] + u[1][1] * psi.basis_values[1]
    y1 = RationalAngle(c1.value / d1)
    y2 = RationalAngle(c2.value / d2)
    x1 = RationalAngle(v[0][0] * y1.value + v[0][1] * y2.value)
    x2 = RationalAngle(v[1][0] * y1.value + v[1][1] * y2.value)
    phi = CharacterOnZ2(x1, x2)
    for b, val in zip(k.basis, psi.basis_values):
        if phi(b) != val:
            raise LatticeError("extension check failed (SNF transform bug)")
    return phi
