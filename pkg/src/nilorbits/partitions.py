"""Partitions, the sets P_eps(N), collapses and orbit classifications.

A nilpotent orbit of a classical Lie algebra is recorded by its Jordan type,
a partition of the natural representation's dimension N.  For so(N) the
even parts must occur with even multiplicity, for sp(N) the odd parts must.
Partitions are stored trimmed of zeros; algorithms that index pairs of
parts pad with zeros locally.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    InvalidOrbit,
    NotSorted,
    TotalMismatch,
    UnsupportedAlgebra,
)

FAMILIES = ("A", "B", "C", "D")


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise NotSorted(f"parts must be weakly decreasing: {list(parts)}")
        if parts and parts[-1] < 0:
            raise InvalidOrbit(f"negative part in {list(parts)}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def part(self, j: int) -> int:
        """1-indexed part, reading 0 past the end."""
        return self.parts[j - 1] if 1 <= j <= len(self.parts) else 0

    def padded(self, length: int) -> list:
        return list(self.parts) + [0] * max(0, length - len(self.parts))

    def multiplicity(self, value: int) -> int:
        return self.parts.count(value)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def to_list(self) -> list:
        return list(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"


def make_partition(raw: Iterable[int]) -> Partition:
    """Validate a raw list of nonnegative integers; reject unsorted input."""
    raw = [int(x) for x in raw]
    if any(x < 0 for x in raw):
        raise InvalidOrbit(f"negative entry in {raw}")
    return Partition(tuple(raw))


@dataclass(frozen=True)
class AlgebraType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnsupportedAlgebra(f"unknown family {self.family!r}")
        if self.rank < 0 or (self.rank == 0 and self.family == "A"):
            raise UnsupportedAlgebra(f"bad rank {self.rank} for {self.family}")

    @property
    def N(self) -> int:
        return {
            "A": self.rank + 1,
            "B": 2 * self.rank + 1,
            "C": 2 * self.rank,
            "D": 2 * self.rank,
        }[self.family]

    @property
    def eps(self):
        """+1 for B/D, -1 for C, None for A (no parity condition)."""
        return {"A": None, "B": 1, "C": -1, "D": 1}[self.family]

    @property
    def chi(self):
        return {"A": None, "B": 0, "C": 1, "D": 0}[self.family]

    @property
    def dim(self) -> int:
        n, N = self.rank, self.N
        if self.family == "A":
            return N * N - 1
        if self.family == "C":
            return 2 * n * n + n
        return N * (N - 1) // 2

    @classmethod
    def for_total(cls, family: str, total: int) -> "AlgebraType":
        """The algebra of the given family whose natural module has dimension total."""
        if family == "A":
            return cls("A", total - 1)
        if family == "B":
            if total % 2 != 1:
                raise TotalMismatch(f"type B needs an odd total, got {total}")
            return cls("B", (total - 1) // 2)
        if total % 2 != 0:
            raise TotalMismatch(f"type {family} needs an even total, got {total}")
        return cls(family, total // 2)

    def to_json(self):
        return {"family": self.family, "rank": self.rank}

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class OrbitLabel:
    algebra: AlgebraType
    partition: Partition

    def __post_init__(self):
        _check_orbit(self.partition, self.algebra)

    def to_json(self):
        return {"algebra": self.algebra.to_json(), "partition": self.partition.to_list()}


def _bad_parity(algebra: AlgebraType):
    """Parity of the parts forced to even multiplicity (None in type A)."""
    eps = algebra.eps
    if eps is None:
        return None
    return 0 if eps == 1 else 1


def _check_total(d: Partition, algebra: AlgebraType):
    if d.total != algebra.N:
        raise TotalMismatch(f"{d} has total {d.total}, {algebra} needs {algebra.N}")


def in_P_eps(d: Partition, algebra: AlgebraType) -> bool:
    _check_total(d, algebra)
    return _in_P(d.parts, _bad_parity(algebra))


def _in_P(parts, bad) -> bool:
    if bad is None:
        return True
    counts = Counter(parts)
    return all(m % 2 == 0 for v, m in counts.items() if v % 2 == bad)


def _check_orbit(d: Partition, algebra: AlgebraType):
    if not in_P_eps(d, algebra):
        raise InvalidOrbit(f"{d} is not an orbit of {algebra}")


# -- elementary combinatorics -------------------------------------------------


def dual_partition(d: Partition) -> Partition:
    if not d.parts:
        return Partition(())
    return Partition(tuple(sum(1 for p in d.parts if p >= i) for i in range(1, d.parts[0] + 1)))


def dominates(d: Partition, f: Partition) -> bool:
    """True when every prefix sum of d is at least the matching prefix sum of f."""
    if d.total != f.total:
        raise TotalMismatch(f"{d} and {f} have different totals")
    a = b = 0
    for j in range(max(len(d), len(f))):
        a += d.part(j + 1)
        b += f.part(j + 1)
        if a < b:
            return False
    return True


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of n, in reverse lexicographic order."""
    for parts in _partition_tuples(n, n if largest is None else min(largest, n)):
        yield Partition(parts)


def _partition_tuples(n, largest):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partition_tuples(n - first, first):
            yield (first,) + rest


def orbits(algebra: AlgebraType) -> Iterator[Partition]:
    """Every partition labelling a nilpotent orbit of the algebra."""
    bad = _bad_parity(algebra)
    for parts in _partition_tuples(algebra.N, algebra.N):
        if _in_P(parts, bad):
            yield Partition(parts)


# -- collapse -----------------------------------------------------------------


def collapse_with_steps(d: Partition, algebra: AlgebraType) -> tuple:
    """Collapse d into P_eps(N) and report how many moves that took.

    One move: take the largest part q of the forbidden parity that occurs an
    odd number of times, lower its last occurrence to q-1, and raise the first
    later part r < q-1 to r+1 (a padded zero counts as such a part).
    """
    _check_total(d, algebra)
    bad = _bad_parity(algebra)
    if bad is None:
        return d, 0
    parts = list(d.parts)
    steps = 0
    while True:
        counts = Counter(parts)
        odd = [v for v, m in counts.items() if v > 0 and v % 2 == bad and m % 2 == 1]
        if not odd:
            break
        q = max(odd)
        last = max(i for i, v in enumerate(parts) if v == q)
        parts[last] = q - 1
        j = last + 1
        while j < len(parts) and parts[j] >= q - 1:
            j += 1
        if j == len(parts):
            parts.append(0)
        parts[j] += 1
        steps += 1
    return Partition(tuple(parts)), steps


def collapse(d: Partition, algebra: AlgebraType) -> Partition:
    """The largest element of P_eps(N) dominated by d."""
    return collapse_with_steps(d, algebra)[0]


# -- classifications ----------------------------------------------------------


def is_special(d: Partition, algebra: AlgebraType) -> bool:
    """Special orbits: the transpose lies in P_eps(N).

    Type D uses the symplectic condition on the transpose, which is the
    standard form of the criterion for even orthogonal algebras.
    """
    _check_orbit(d, algebra)
    if algebra.family == "A":
        return True
    t = dual_partition(d)
    if algebra.family == "D":
        return _in_P(t.parts, 1)
    return _in_P(t.parts, _bad_parity(algebra))


def special_by_pattern(d: Partition, algebra: AlgebraType) -> bool:
    """Parity-pattern test for specialness, independent of the transpose."""
    _check_orbit(d, algebra)
    fam = algebra.family
    if fam == "A":
        return True
    # For C count even parts relative to odd ones; for B/D the other way round.
    marker, counted = (1, 0) if fam == "C" else (0, 1)
    above = 0
    seen_marker = False
    between = 0
    for p in d.parts:
        if p % 2 == marker:
            if seen_marker and between % 2:
                return False
            seen_marker = True
            between = 0
        elif not seen_marker:
            above += 1
        else:
            between += 1
    if fam == "C" and not seen_marker:
        return True
    if fam == "B":
        if not seen_marker:
            # every part is odd; padding zeros play the role of even parts
            return len(d.parts) % 2 == 1
        return above % 2 == 1
    return above % 2 == 0


def is_rigid(d: Partition, algebra: AlgebraType) -> bool:
    """Rigid orbits: no gaps down to 0, and no multiplicity 2 in the free parity."""
    _check_orbit(d, algebra)
    if algebra.family == "A":
        return all(p == 1 for p in d.parts)
    padded = d.padded(len(d) + 1)
    if any(a - b > 1 for a, b in zip(padded, padded[1:])):
        return False
    free = 1 - _bad_parity(algebra)
    counts = d.multiplicities()
    return all(m != 2 for v, m in counts.items() if v % 2 == free)


def is_richardson(d: Partition, algebra: AlgebraType) -> bool:
    """Parity-pattern criterion for orbits induced from a zero orbit (B and C)."""
    _check_orbit(d, algebra)
    if algebra.family == "C":
        return _richardson_C(d)
    if algebra.family == "B":
        return _richardson_B(d)
    raise UnsupportedAlgebra("Richardson criterion is implemented for B and C only")


def _richardson_C(d: Partition) -> bool:
    odd_idx = [j for j in range(1, len(d) + 1) if d.part(j) % 2 == 1]
    top = max(odd_idx, default=0)
    if top % 2:
        return False
    k = top // 2
    for j in range(1, k + 1):
        if d.part(2 * j - 1) % 2 != d.part(2 * j) % 2:
            return False
        a, b = d.part(2 * j), d.part(2 * j + 1)
        if a % 2 == 0 and b % 2 == 0 and a < b + 2:
            return False
    return True


def _richardson_B(d: Partition) -> bool:
    length = len(d) + 2
    first_even = next(j for j in range(1, length + 1) if d.part(j) % 2 == 0)
    if first_even % 2:
        return False
    l = first_even // 2
    for j in range(l, length // 2 + 1):
        if d.part(2 * j) % 2 != d.part(2 * j + 1) % 2:
            return False
        a, b = d.part(2 * j - 1), d.part(2 * j)
        if a % 2 == 1 and b % 2 == 1 and a < b + 2:
            return False
    return True


def is_spherical(d: Partition, algebra: AlgebraType) -> bool:
    """Spherical orbits are those with x^2 = 0, or rank x^2 <= 1 in orthogonal type."""
    _check_orbit(d, algebra)
    if algebra.family in ("A", "C"):
        return d.part(1) <= 2
    return d.part(1) <= 3 and d.multiplicity(3) <= 1 and d.part(2) <= 2


def orbit_dimension(d: Partition, algebra: AlgebraType) -> int:
    """Dimension of the orbit via the centraliser formula."""
    _check_orbit(d, algebra)
    squares = sum(c * c for c in dual_partition(d).parts)
    if algebra.family == "A":
        return algebra.N ** 2 - squares
    odd = sum(1 for p in d.parts if p % 2)
    if algebra.family == "C":
        return algebra.dim - (squares + odd) // 2
    return algebra.dim - (squares - odd) // 2


def classify(d: Partition, algebra: AlgebraType) -> dict:
    out = {
        "special": is_special(d, algebra),
        "rigid": is_rigid(d, algebra),
        "spherical": is_spherical(d, algebra),
        "dimension": orbit_dimension(d, algebra),
    }
    if algebra.family in ("B", "C"):
        out["richardson"] = is_richardson(d, algebra)
    return out
