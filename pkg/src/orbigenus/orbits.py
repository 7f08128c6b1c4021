"""Finite transitive Z^h-sets as canonical sublattices of Z^h.

A transitive Z^h-set of size n is determined up to isomorphism by its
stabilizer sublattice L of index n.  We store L as the unique row-style
Hermite normal form basis, so isomorphism testing is equality testing.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import prod


class ModeError(ValueError):
    """Requested size/order is not admissible for the order mode."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Mode:
    """Order constraint on the acting group: all orders, or powers of a fixed prime.

    ``Mode()`` plays the role of Z^h acting with no order restriction;
    ``Mode(p)`` restricts to p-power orders (the p-typical situation).
    """

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p!r}")

    @classmethod
    def all_orders(cls) -> "Mode":
        return cls(None)

    @classmethod
    def p_power(cls, p: int) -> "Mode":
        return cls(p)

    @property
    def is_p_typical(self) -> bool:
        return self.p is not None

    def admits_size(self, n: int) -> bool:
        if n < 1:
            return False
        if self.p is None:
            return True
        while n % self.p == 0:
            n //= self.p
        return n == 1

    def sizes_up_to(self, bound: int) -> list[int]:
        """Admissible orbit sizes in 1..bound, increasing."""
        if self.p is None:
            return list(range(1, bound + 1))
        out = []
        s = 1
        while s <= bound:
            out.append(s)
            s *= self.p
        return out

    def __str__(self) -> str:
        return "all-orders" if self.p is None else f"{self.p}-power"


ALL_ORDERS = Mode()


@dataclass(frozen=True)
class TransitiveOrbit:
    """A finite transitive Z^h-set, given by the HNF basis of its stabilizer lattice.

    ``rows`` generate the stabilizer L inside Z^h.  Canonical form: upper
    triangular, positive diagonal, and 0 <= rows[i][j] < rows[j][j] for
    i < j.  The size of the set is the index [Z^h : L] = det = product of
    the diagonal.
    """

    h: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.h < 1:
            raise ValueError("h must be positive")
        if len(self.rows) != self.h or any(len(r) != self.h for r in self.rows):
            raise ValueError("rows must form an h x h matrix")
        for i, row in enumerate(self.rows):
            if any(row[j] != 0 for j in range(i)):
                raise ValueError("matrix is not upper triangular")
            if row[i] <= 0:
                raise ValueError("diagonal entries must be positive")
            for j in range(i + 1, self.h):
                if not 0 <= row[j] < self.rows[j][j]:
                    raise ValueError("off-diagonal entry not reduced")

    @classmethod
    def trivial(cls, h: int) -> "TransitiveOrbit":
        """The one-point orbit: stabilizer is all of Z^h."""
        return cls(h, tuple(tuple(int(i == j) for j in range(h)) for i in range(h)))

    @property
    def size(self) -> int:
        return prod(self.rows[i][i] for i in range(self.h))

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(self.h))

    @property
    def sort_key(self):
        off = tuple(self.rows[i][j] for i in range(self.h) for j in range(i + 1, self.h))
        return (self.h, self.size, self.diagonal, off)

    def is_trivial(self) -> bool:
        return self.size == 1

    def reduce(self, v) -> tuple[int, ...]:
        """Canonical representative of v modulo the stabilizer lattice.

        Returns the unique w = v mod L with 0 <= w[i] < rows[i][i].
        """
        w = list(v)
        for i in range(self.h):
            q = w[i] // self.rows[i][i]
            if q:
                row = self.rows[i]
                for j in range(i, self.h):
                    w[j] -= q * row[j]
        return tuple(w)

    def points(self) -> list[tuple[int, ...]]:
        """Coset representatives of Z^h / L, in lexicographic order."""
        return [tuple(v) for v in itertools.product(*(range(d) for d in self.diagonal))]

    def label(self) -> str:
        """Compact matrix label, rows joined by '|': e.g. '1,1|0,2'."""
        return "|".join(",".join(str(e) for e in row) for row in self.rows)

    def __str__(self) -> str:
        return f"T[{self.label()}]"


def _diagonal_choices(n: int, h: int):
    """All h-tuples of positive integers with product n, lexicographic."""
    if h == 1:
        yield (n,)
        return
    for d in range(1, n + 1):
        if n % d == 0:
            for rest in _diagonal_choices(n // d, h - 1):
                yield (d,) + rest


@lru_cache(maxsize=None)
def _enumerate_orbits_cached(h: int, n: int) -> tuple[TransitiveOrbit, ...]:
    orbits = []
    for diag in _diagonal_choices(n, h):
        # free positions (i, j) for i < j range over 0..diag[j]-1
        positions = [(i, j) for i in range(h) for j in range(i + 1, h)]
        for values in itertools.product(*(range(diag[j]) for (_, j) in positions)):
            rows = [[0] * h for _ in range(h)]
            for i in range(h):
                rows[i][i] = diag[i]
            for (i, j), v in zip(positions, values):
                rows[i][j] = v
            orbits.append(TransitiveOrbit(h, tuple(tuple(r) for r in rows)))
    orbits.sort(key=lambda t: t.sort_key)
    return tuple(orbits)


def enumerate_orbits(h: int, n: int, mode: Mode = ALL_ORDERS) -> tuple[TransitiveOrbit, ...]:
    """One canonical representative per isomorphism class of transitive sets of size n.

    In p-power mode n must be a power of p (the diagonals then are p-powers
    automatically).  Deterministic order: by diagonal vector, then
    off-diagonal entries lexicographically.
    """
    if h < 1:
        raise ValueError("h must be positive")
    if n < 1:
        raise ValueError("orbit size must be positive")
    if not mode.admits_size(n):
        raise ModeError(f"size {n} is not admissible in {mode} mode")
    return _enumerate_orbits_cached(h, n)


def canonicalize(h: int, generators) -> TransitiveOrbit:
    """Canonical HNF orbit for the sublattice spanned by integer generator vectors.

    Accepts any number of generators (rows); raises ValueError when they span
    a sublattice of infinite index (rank below h).
    """
    if h < 1:
        raise ValueError("h must be positive")
    work = []
    for g in generators:
        row = [int(x) for x in g]
        if len(row) != h:
            raise ValueError(f"generator {g!r} does not have length {h}")
        if any(row):
            work.append(row)

    pivots: list[list[int]] = []
    for col in range(h):
        live = [r for r in work if r[col] != 0]
        if not live:
            raise ValueError("generators span a sublattice of infinite index")
        # gcd elimination within this column
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            base = live[0]
            for r in live[1:]:
                q = r[col] // base[col]
                for j in range(col, h):
                    r[j] -= q * base[j]
            live = [r for r in live if r[col] != 0]
        pivot = live[0]
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        pivots.append(pivot)
        work = [r for r in work if r is not live[0] and any(r)]

    # reduce above-diagonal entries: 0 <= entry < column pivot
    for j in range(h):
        for i in range(j):
            q = pivots[i][j] // pivots[j][j]
            if q:
                for jj in range(j, h):
                    pivots[i][jj] -= q * pivots[j][jj]
    return TransitiveOrbit(h, tuple(tuple(r) for r in pivots))


def aut_order(orbit: TransitiveOrbit) -> int:
    """Order of the equivariant automorphism group of the orbit.

    The acting group is abelian and the action transitive, so translation
    through the orbit gives all automorphisms: the order equals the size.
    """
    return orbit.size
