"""Finite Heisenberg groups and their Schroedinger representations.

The group on Z/m x (Z/m)^g x (Z/m)^g multiplies by

    (t, x, y) (t', x', y') = (t + t' + <x, y'>, x + x', y + y')

with <x, y'> the dot product mod m.  The cocycle is one-sided by
convention; any nondegenerate choice gives an isomorphic group, and
every check here is convention independent.  The center is the set of
(t, 0, 0) and the commutator of two elements is central with value
<x, y'> - <y, x'>.

For odd m and a central weight n prime to m, the Schroedinger
representation acts on functions f on (Z/m)^g by

    (rho(t, x, y) f)(z) = zeta_m^{n (t + <y, z>)} f(z + x),

an m^g-dimensional representation whose center acts by zeta_m^{n t}.
Matrices are exact, with entries in Q(zeta_m).

irrep_census rebuilds the whole character table of the group by brute
force: conjugacy classes from literal conjugation, candidate irreducibles
from Schroedinger representations of every quotient modulus pulled back
and twisted by linear characters, then a completeness proof by exact
character norms, pairwise distinctness, the sum-of-squares count, and
the class count.  Even m is rejected everywhere; the construction with
half-integer weights it would need is out of scope.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .exactnum import ConsistencyError, CycNum, HypothesisError, extract_rational

CENSUS_BUDGET = 100_000


@dataclass(frozen=True)
class HeisenbergElement:
    """Group element (t, x, y) over Z/m with the one-sided cocycle."""

    m: int
    t: int
    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise HypothesisError(f"modulus must be >= 1, got {self.m}")
        if not self.x or len(self.x) != len(self.y):
            raise HypothesisError("x and y must be nonempty and equal length")
        for c in (self.t, *self.x, *self.y):
            if c < 0 or c >= self.m:
                raise HypothesisError(f"residues must lie in [0, {self.m})")

    @property
    def g(self) -> int:
        return len(self.x)

    @classmethod
    def identity(cls, m: int, g: int) -> HeisenbergElement:
        return cls(m, 0, (0,) * g, (0,) * g)

    def __mul__(self, other: HeisenbergElement) -> HeisenbergElement:
        if self.m != other.m or self.g != other.g:
            raise HypothesisError("elements live in different groups")
        m = self.m
        twist = sum(a * b for a, b in zip(self.x, other.y))
        return HeisenbergElement(
            m,
            (self.t + other.t + twist) % m,
            tuple((a + b) % m for a, b in zip(self.x, other.x)),
            tuple((a + b) % m for a, b in zip(self.y, other.y)),
        )

    def inverse(self) -> HeisenbergElement:
        m = self.m
        twist = sum(a * b for a, b in zip(self.x, self.y))
        return HeisenbergElement(
            m,
            (-self.t + twist) % m,
            tuple(-a % m for a in self.x),
            tuple(-a % m for a in self.y),
        )

    def reduce(self, f: int) -> HeisenbergElement:
        """Image under coordinatewise reduction mod f, for f | m."""
        if self.m % f != 0:
            raise HypothesisError(f"{f} does not divide {self.m}")
        return HeisenbergElement(
            f, self.t % f, tuple(a % f for a in self.x), tuple(a % f for a in self.y)
        )

    def is_central(self) -> bool:
        return not any(self.x) and not any(self.y)


def all_elements(m: int, g: int) -> Iterator[HeisenbergElement]:
    """The whole group, of order m^{2g+1}."""
    for coords in itertools.product(range(m), repeat=2 * g + 1):
        yield HeisenbergElement(m, coords[0], coords[1 : g + 1], coords[g + 1 :])


@dataclass(frozen=True)
class SchrodingerRep:
    """The weight-n Schroedinger representation on functions on (Z/m)^g."""

    m: int
    n: int
    g: int

    @property
    def dim(self) -> int:
        return self.m**self.g

    def _basis(self) -> list[tuple[int, ...]]:
        return list(itertools.product(range(self.m), repeat=self.g))

    def matrix(self, h: HeisenbergElement) -> tuple[tuple[CycNum, ...], ...]:
        """rho(h) in the delta-function basis, an exact dim x dim matrix.

        rho(t, x, y) sends e_w to zeta^{n (t + <y, w - x>)} e_{w - x}.
        """
        if h.m != self.m or h.g != self.g:
            raise HypothesisError("element does not match the representation")
        m, n = self.m, self.n
        basis = self._basis()
        index = {w: i for i, w in enumerate(basis)}
        zero = CycNum.from_rational(m, 0)
        rows = [[zero] * len(basis) for _ in basis]
        for col, w in enumerate(basis):
            target = tuple((a - b) % m for a, b in zip(w, h.x))
            phase = n * (h.t + sum(b * c for b, c in zip(h.y, target)))
            rows[index[target]][col] = CycNum.zeta(m, phase)
        return tuple(tuple(row) for row in rows)

    def character(self, h: HeisenbergElement) -> CycNum:
        """Trace of rho(h), summed straight down the matrix diagonal."""
        if h.m != self.m or h.g != self.g:
            raise HypothesisError("element does not match the representation")
        m, n = self.m, self.n
        total = CycNum.from_rational(m, 0)
        for w in self._basis():
            if tuple((a - b) % m for a, b in zip(w, h.x)) == w:
                phase = n * (h.t + sum(b * c for b, c in zip(h.y, w)))
                total = total + CycNum.zeta(m, phase)
        return total


def _mat_mul(a, b, m: int):
    size = len(a)
    zero = CycNum.from_rational(m, 0)
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            acc = zero
            for l in range(size):
                acc = acc + a[i][l] * b[l][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def schrodinger_rep(m: int, n: int, g: int) -> SchrodingerRep:
    """Build the representation and assert the group law on generators."""
    if m < 1 or m % 2 == 0:
        raise HypothesisError(f"modulus must be odd and positive, got {m}")
    if g < 1:
        raise HypothesisError(f"genus must be >= 1, got {g}")
    if math.gcd(m, n) != 1:
        raise HypothesisError(
            f"gcd({m}, {n}) != 1: no irreducible with a full-order central "
            "character at that weight"
        )
    rep = SchrodingerRep(m, n % m, g)
    if m > 1:
        gens = [HeisenbergElement(m, 1, (0,) * g, (0,) * g)]
        for i in range(g):
            e = tuple(int(i == j) for j in range(g))
            gens.append(HeisenbergElement(m, 0, e, (0,) * g))
            gens.append(HeisenbergElement(m, 0, (0,) * g, e))
        mats = {h: rep.matrix(h) for h in gens}
        for a in gens:
            for b in gens:
                if _mat_mul(mats[a], mats[b], m) != rep.matrix(a * b):
                    raise ConsistencyError(
                        f"matrix assignment is not a homomorphism at {a}, {b}"
                    )
    return rep


def _check_budget(m: int, g: int) -> None:
    order = m ** (2 * g + 1)
    if order > CENSUS_BUDGET:
        raise HypothesisError(
            f"group order {order} exceeds the brute-force budget {CENSUS_BUDGET}"
        )


def check_schrodinger_irreducible(rep: SchrodingerRep) -> bool:
    """Exact character norm: (1/|G|) sum_h chi(h) conj(chi(h)) = 1."""
    m, g = rep.m, rep.g
    _check_budget(m, g)
    total = CycNum.from_rational(m, 0)
    for h in all_elements(m, g):
        chi = rep.character(h)
        total = total + chi * chi.conjugate()
    return extract_rational(total) == Fraction(m ** (2 * g + 1))


def check_character_supported_on_center(rep: SchrodingerRep) -> bool:
    """chi vanishes at every element outside the center."""
    m, g = rep.m, rep.g
    _check_budget(m, g)
    for h in all_elements(m, g):
        if not h.is_central() and not rep.character(h).is_zero():
            return False
    return True


def _conjugacy_classes(m: int, g: int) -> list[tuple[HeisenbergElement, int]]:
    """Class representatives and sizes, by literal conjugation."""
    elements = list(all_elements(m, g))
    seen: set[HeisenbergElement] = set()
    classes = []
    for h in elements:
        if h in seen:
            continue
        orbit = {c * h * c.inverse() for c in elements}
        seen |= orbit
        classes.append((h, len(orbit)))
    return classes


def _central_weight(chi_central: CycNum, dim: int, m: int) -> int:
    """The w with chi((1, 0, 0)) = dim * zeta_m^w."""
    value = chi_central * Fraction(1, dim)
    for w in range(m):
        if value == CycNum.zeta(m, w):
            return w
    raise ConsistencyError("central character value is not a root of unity")


def irrep_census(m: int, g: int) -> list[tuple[int, int, int]]:
    """Complete character table, aggregated as (dimension, weight, count).

    Candidates are the linear-character twists of Schroedinger
    representations pulled back from every quotient modulus f | m.  The
    returned list is proved complete, not assumed: every candidate has
    exact character norm 1, candidates are pairwise distinct (hence
    orthogonal), their squared dimensions sum to the group order, and
    they are as numerous as the conjugacy classes.
    """
    if m < 1 or m % 2 == 0:
        raise HypothesisError(f"modulus must be odd and positive, got {m}")
    if g < 1:
        raise HypothesisError(f"genus must be >= 1, got {g}")
    _check_budget(m, g)
    order = m ** (2 * g + 1)
    classes = _conjugacy_classes(m, g)
    reps = [h for h, _ in classes]
    central_index = next(
        i for i, h in enumerate(reps) if h.is_central() and h.t == 1 % m
    )
    rows: list[tuple[int, int, tuple[CycNum, ...]]] = []
    for f in (f for f in range(1, m + 1) if m % f == 0):
        for np in (np for np in range(f) if math.gcd(f, np) == 1) if f > 1 else [0]:
            sub = SchrodingerRep(f, np, g)
            base = [sub.character(h.reduce(f)).lift(m) for h in reps]
            for twist in itertools.product(range(m), repeat=2 * g):
                u, v = twist[:g], twist[g:]
                values = tuple(
                    chi
                    * CycNum.zeta(
                        m,
                        sum(a * b for a, b in zip(u, h.x))
                        + sum(a * b for a, b in zip(v, h.y)),
                    )
                    for h, chi in zip(reps, base)
                )
                dim = f**g
                weight = _central_weight(values[central_index], dim, m)
                rows.append((dim, weight, values))
    unique: dict[tuple[CycNum, ...], tuple[int, int]] = {}
    for dim, weight, values in rows:
        unique[values] = (dim, weight)
    if len(unique) != len(classes):
        raise ConsistencyError(
            f"found {len(unique)} distinct candidates but {len(classes)} classes"
        )
    dim_square_sum = 0
    for values, (dim, weight) in unique.items():
        norm = CycNum.from_rational(m, 0)
        for (_, size), chi in zip(classes, values):
            norm = norm + chi * chi.conjugate() * size
        if extract_rational(norm) != Fraction(order):
            raise ConsistencyError(
                f"candidate of dimension {dim}, weight {weight} has non-unit norm"
            )
        dim_square_sum += dim * dim
    if dim_square_sum != order:
        raise ConsistencyError(
            f"squared dimensions sum to {dim_square_sum}, group order is {order}"
        )
    tally: dict[tuple[int, int], int] = {}
    for dim, weight in unique.values():
        tally[(dim, weight)] = tally.get((dim, weight), 0) + 1
    if m > 1:
        for n in range(m):
            if math.gcd(n, m) == 1 and tally.get((m**g, n), 0) != 1:
                raise ConsistencyError(
                    f"expected exactly one irreducible of dimension {m**g} at "
                    f"weight {n}, found {tally.get((m ** g, n), 0)}"
                )
    return sorted((d, w, c) for (d, w), c in tally.items())
