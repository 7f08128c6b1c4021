"""Conjugacy classes of commuting h-tuples in symmetric groups.

A commuting h-tuple in Sigma_l is an action of Z^h on l points; its
conjugacy class is the multiset of isomorphism types of the orbits.  We
represent classes as multisets of canonical transitive orbits with total
size l, and provide the centralizer/class-size count, a decomposition map
from explicit permutation tuples, explicit representatives, and a
brute-force enumeration over all tuples for cross-checking.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod

from .orbits import ALL_ORDERS, Mode, ModeError, TransitiveOrbit, canonicalize, enumerate_orbits


class GuardExceededError(ValueError):
    """A brute-force computation was asked to exceed its size guard."""


@dataclass(frozen=True)
class Permutation:
    """A permutation of {0, ..., l-1} stored as its image tuple."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError(f"not a permutation of 0..{len(self.image) - 1}: {self.image!r}")

    @classmethod
    def identity(cls, l: int) -> "Permutation":
        return cls(tuple(range(l)))

    @classmethod
    def from_cycles(cls, l: int, cycles) -> "Permutation":
        img = list(range(l))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.image[other.image[i]] for i in range(self.degree)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(tuple(inv))

    def cycle_lengths(self) -> list[int]:
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i]:
                continue
            n = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self.image[j]
                n += 1
            out.append(n)
        return out

    def order_admissible(self, mode: Mode) -> bool:
        # the order is the lcm of the cycle lengths, so p-power order is
        # exactly "every cycle length is a p-power"
        return all(mode.admits_size(n) for n in self.cycle_lengths())


def commute(a: Permutation, b: Permutation) -> bool:
    ia, ib = a.image, b.image
    return all(ia[ib[i]] == ib[ia[i]] for i in range(len(ia)))


@dataclass(frozen=True)
class OrbitTypeMultiset:
    """A conjugacy class of commuting h-tuples: orbits with multiplicities.

    ``entries`` is sorted by orbit sort key with multiplicities >= 1; the
    degree l is the total number of points moved.
    """

    h: int
    mode: Mode
    entries: tuple[tuple[TransitiveOrbit, int], ...]

    def __post_init__(self):
        keys = []
        for orbit, mult in self.entries:
            if orbit.h != self.h:
                raise ValueError("orbit rank does not match h")
            if mult < 1:
                raise ValueError("multiplicities must be positive")
            if not self.mode.admits_size(orbit.size):
                raise ModeError(f"orbit size {orbit.size} not admissible in {self.mode} mode")
            keys.append(orbit.sort_key)
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise ValueError("entries must be sorted by orbit and duplicate-free")

    @classmethod
    def empty(cls, h: int, mode: Mode = ALL_ORDERS) -> "OrbitTypeMultiset":
        return cls(h, mode, ())

    @classmethod
    def from_pairs(cls, h: int, mode: Mode, pairs) -> "OrbitTypeMultiset":
        acc: dict[TransitiveOrbit, int] = {}
        for orbit, mult in pairs:
            acc[orbit] = acc.get(orbit, 0) + mult
        entries = tuple(
            (o, m) for o, m in sorted(acc.items(), key=lambda om: om[0].sort_key) if m
        )
        return cls(h, mode, entries)

    @property
    def degree(self) -> int:
        return sum(orbit.size * mult for orbit, mult in self.entries)

    @property
    def sort_key(self):
        return tuple((orbit.sort_key, mult) for orbit, mult in self.entries)

    def multiplicity(self, orbit: TransitiveOrbit) -> int:
        for o, m in self.entries:
            if o == orbit:
                return m
        return 0

    def union(self, other: "OrbitTypeMultiset") -> "OrbitTypeMultiset":
        """Disjoint union of the underlying Z^h-sets (add multiplicities)."""
        if self.h != other.h or self.mode != other.mode:
            raise ValueError("cannot union classes with different h or mode")
        return OrbitTypeMultiset.from_pairs(
            self.h, self.mode, list(self.entries) + list(other.entries)
        )

    def sub_multisets(self, degree: int):
        """All ways to split off a sub-multiset of the given total size.

        Yields (left, right) pairs with left of the requested degree and
        left union right == self.  Deterministic order.
        """
        ranges = [range(m + 1) for _, m in self.entries]
        for choice in itertools.product(*ranges):
            d = sum(c * self.entries[i][0].size for i, c in enumerate(choice))
            if d != degree:
                continue
            left = tuple(
                (o, c) for (o, _), c in zip(self.entries, choice) if c
            )
            right = tuple(
                (o, m - c) for (o, m), c in zip(self.entries, choice) if m - c
            )
            yield (
                OrbitTypeMultiset(self.h, self.mode, left),
                OrbitTypeMultiset(self.h, self.mode, right),
            )

    def __str__(self) -> str:
        if not self.entries:
            return "[]"
        return " + ".join(
            (f"{m}*{o}" if m > 1 else str(o)) for o, m in self.entries
        )


def centralizer_order(cls: OrbitTypeMultiset) -> int:
    """Size of the simultaneous centralizer of a representative tuple.

    Product over orbit types of |T|^mult * mult!: automorphisms of each
    copy, times permutations of identical copies.
    """
    return prod(orbit.size ** mult * factorial(mult) for orbit, mult in cls.entries)


def class_size(cls: OrbitTypeMultiset) -> int:
    n = factorial(cls.degree)
    z = centralizer_order(cls)
    assert n % z == 0
    return n // z


@lru_cache(maxsize=None)
def _enumerate_classes_cached(h: int, l: int, mode: Mode) -> tuple[OrbitTypeMultiset, ...]:
    pool: list[TransitiveOrbit] = []
    for s in mode.sizes_up_to(l):
        pool.extend(enumerate_orbits(h, s, mode))
    out: list[OrbitTypeMultiset] = []
    picked: list[tuple[TransitiveOrbit, int]] = []

    def rec(i: int, remaining: int):
        if remaining == 0:
            out.append(OrbitTypeMultiset(h, mode, tuple(picked)))
            return
        if i == len(pool):
            return
        size = pool[i].size
        if size > remaining:
            return  # pool is sorted by size, nothing later fits either
        rec(i + 1, remaining)
        for mult in range(1, remaining // size + 1):
            picked.append((pool[i], mult))
            rec(i + 1, remaining - mult * size)
            picked.pop()

    rec(0, l)
    out.sort(key=lambda c: c.sort_key)
    return tuple(out)


def enumerate_classes(h: int, l: int, mode: Mode = ALL_ORDERS) -> tuple[OrbitTypeMultiset, ...]:
    """All conjugacy classes of commuting h-tuples of degree l, canonical order.

    In p-power mode only tuples of p-power-order permutations count, which
    restricts the orbit sizes to powers of p.  l = 0 gives the empty class.
    """
    if h < 1:
        raise ValueError("h must be positive")
    if l < 0:
        raise ValueError("degree must be nonnegative")
    return _enumerate_classes_cached(h, l, mode)


def _orbit_type_from_images(h: int, images: list[tuple[int, ...]], mode: Mode) -> OrbitTypeMultiset:
    """Decompose an action of Z^h given by commuting image tuples on 0..l-1."""
    l = len(images[0])
    seen = [False] * l
    pairs = []
    for start in range(l):
        if seen[start]:
            continue
        # walk the orbit of the smallest unvisited point, recording for each
        # point one exponent vector reaching it; each closed edge yields a
        # stabilizer relation, and those span the stabilizer lattice
        vecs: dict[int, tuple[int, ...]] = {start: (0,) * h}
        queue = [start]
        relations = []
        while queue:
            x = queue.pop()
            vx = vecs[x]
            for i in range(h):
                y = images[i][x]
                vy = tuple(vx[j] + (1 if j == i else 0) for j in range(h))
                if y in vecs:
                    relations.append(tuple(a - b for a, b in zip(vy, vecs[y])))
                else:
                    vecs[y] = vy
                    queue.append(y)
        for x in vecs:
            seen[x] = True
        orbit = canonicalize(h, relations)
        assert orbit.size == len(vecs)
        pairs.append((orbit, 1))
    return OrbitTypeMultiset.from_pairs(h, mode, pairs)


def orbit_type_of_tuple(perms, mode: Mode = ALL_ORDERS, h: int | None = None) -> OrbitTypeMultiset:
    """Conjugacy class of a commuting tuple of permutations.

    Validates that the permutations commute pairwise and, in p-power mode,
    that each has p-power order.  The result is conjugation invariant.
    """
    perms = list(perms)
    if h is None:
        h = len(perms)
    if len(perms) != h or h < 1:
        raise ValueError("need a nonempty tuple of permutations")
    l = perms[0].degree
    for a in perms:
        if a.degree != l:
            raise ValueError("permutations act on different point sets")
        if not a.order_admissible(mode):
            raise ModeError(f"permutation order not admissible in {mode} mode")
    for a, b in itertools.combinations(perms, 2):
        if not commute(a, b):
            raise ValueError("permutations do not commute")
    return _orbit_type_from_images(h, [a.image for a in perms], mode)


def class_representative(cls: OrbitTypeMultiset) -> tuple[Permutation, ...]:
    """A concrete commuting tuple with the given orbit type.

    Points are laid out orbit by orbit (entries in canonical order, copies
    consecutively); on each orbit, generator i acts as translation by e_i
    on the coset representatives.
    """
    l = cls.degree
    images = [[None] * l for _ in range(cls.h)]
    offset = 0
    for orbit, mult in cls.entries:
        pts = orbit.points()
        index = {pt: k for k, pt in enumerate(pts)}
        local = []
        for i in range(cls.h):
            e_i = tuple(int(j == i) for j in range(cls.h))
            local.append(
                [index[orbit.reduce(tuple(a + b for a, b in zip(pt, e_i)))] for pt in pts]
            )
        for _ in range(mult):
            for i in range(cls.h):
                for k, target in enumerate(local[i]):
                    images[i][offset + k] = offset + target
            offset += orbit.size
    out = tuple(Permutation(tuple(img)) for img in images)
    assert orbit_type_of_tuple(out, cls.mode, cls.h) == cls
    return out


def _default_guard(h: int) -> int:
    return 6 if h <= 2 else 5


def brute_force_classes(
    h: int, l: int, mode: Mode = ALL_ORDERS, guard: int | None = None
) -> dict[OrbitTypeMultiset, int]:
    """Count commuting h-tuples in Sigma_l by conjugacy class, by enumeration.

    Walks every tuple of pairwise-commuting mode-admissible permutations
    and buckets it through orbit_type_of_tuple.  Exponential; refuses when
    l exceeds the guard (default 6 for h <= 2, else 5) rather than hang.
    """
    limit = _default_guard(h) if guard is None else guard
    if l > limit:
        raise GuardExceededError(f"degree {l} exceeds brute-force guard {limit}")
    if h < 1:
        raise ValueError("h must be positive")
    admissible = [
        p
        for p in itertools.permutations(range(l))
        if all(mode.admits_size(n) for n in Permutation(p).cycle_lengths())
    ]

    def compose(a, b):
        return tuple(a[b[i]] for i in range(l))

    counts: dict[OrbitTypeMultiset, int] = {}

    def extend(prefix: list, candidates: list):
        if len(prefix) == h:
            cls = _orbit_type_from_images(h, prefix, mode)
            counts[cls] = counts.get(cls, 0) + 1
            return
        need_filter = len(prefix) + 1 < h
        for q in candidates:
            rest = (
                [r for r in candidates if compose(q, r) == compose(r, q)]
                if need_filter
                else candidates
            )
            extend(prefix + [q], rest)

    extend([], admissible)
    return counts


def hom_count(h: int, l: int, mode: Mode = ALL_ORDERS) -> int:
    """Number of commuting h-tuples of degree l, from the class-size formula."""
    return sum(class_size(c) for c in enumerate_classes(h, l, mode))
