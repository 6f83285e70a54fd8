"""Levi types of parabolic subalgebras and induction data.

A Levi factor of a classical algebra of natural dimension N is
gl(p_1) x ... x gl(p_l) x g', where g' has natural dimension
tail = N - 2(p_1 + ... + p_l) and the same family as the ambient algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidDatum, UnsupportedAlgebra
from .partitions import AlgebraType, Partition, _in_P, _bad_parity, collapse


@dataclass(frozen=True)
class LeviType:
    gl_parts: tuple
    tail: int
    algebra: AlgebraType

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.gl_parts), reverse=True))
        if any(p <= 0 for p in parts):
            raise InvalidDatum(f"gl parts must be positive: {parts}")
        object.__setattr__(self, "gl_parts", parts)
        if self.algebra.family == "A":
            raise UnsupportedAlgebra("Levi types are tracked for B, C and D")
        if 2 * sum(parts) + self.tail != self.algebra.N or self.tail < 0:
            raise InvalidDatum(
                f"2*sum{parts} + {self.tail} != {self.algebra.N} for {self.algebra}"
            )

    @property
    def tail_algebra(self) -> AlgebraType:
        return AlgebraType.for_total(self.algebra.family, self.tail)

    @property
    def gl_total(self) -> int:
        return sum(self.gl_parts)

    @classmethod
    def of(cls, family: str, gl_parts, tail: int) -> "LeviType":
        N = 2 * sum(gl_parts) + tail
        return cls(tuple(gl_parts), tail, AlgebraType.for_total(family, N))

    def to_json(self):
        return {"gl": list(self.gl_parts), "tail": self.tail, "family": self.algebra.family}

    def __str__(self):
        return f"({','.join(map(str, self.gl_parts))};{self.tail})"


def langlands_dual_levi(levi: LeviType) -> LeviType:
    """Swap sp(2q) and so(2q+1) in the tail; the gl factors are unchanged."""
    fam = levi.algebra.family
    if fam == "C":
        return LeviType(levi.gl_parts, levi.tail + 1, AlgebraType("B", levi.algebra.rank))
    if fam == "B":
        return LeviType(levi.gl_parts, levi.tail - 1, AlgebraType("C", levi.algebra.rank))
    raise UnsupportedAlgebra("Langlands duality of Levi types is defined for B and C")


@dataclass(frozen=True)
class InductionDatum:
    levi: LeviType
    gl_orbits: tuple
    tail_orbit: Partition

    def __post_init__(self):
        if len(self.gl_orbits) != len(self.levi.gl_parts):
            raise InvalidDatum("one gl orbit per gl factor is required")
        # keep factor/orbit pairs aligned after sorting the factors
        pairs = sorted(
            zip(self.levi.gl_parts, (Partition(tuple(o)) for o in self.gl_orbits)),
            key=lambda t: (t[0], t[1].parts),
            reverse=True,
        )
        for p, o in pairs:
            if o.total != p:
                raise InvalidDatum(f"gl({p}) orbit {o} has the wrong size")
        object.__setattr__(self, "gl_orbits", tuple(o for _, o in pairs))
        tail = Partition(tuple(self.tail_orbit))
        object.__setattr__(self, "tail_orbit", tail)
        if tail.total != self.levi.tail:
            raise InvalidDatum(f"tail orbit {tail} is not a partition of {self.levi.tail}")
        if not _in_P(tail.parts, _bad_parity(self.levi.algebra)):
            raise InvalidDatum(f"tail orbit {tail} is not an orbit of the tail algebra")

    @property
    def is_zero_on_gl(self) -> bool:
        return all(all(x == 1 for x in o.parts) for o in self.gl_orbits)

    def to_json(self):
        return {
            "levi": self.levi.to_json(),
            "gl_orbits": [o.to_list() for o in self.gl_orbits],
            "tail_orbit": self.tail_orbit.to_list(),
        }


def zero_datum(levi: LeviType) -> InductionDatum:
    return InductionDatum(
        levi,
        tuple(Partition((1,) * p) for p in levi.gl_parts),
        Partition((1,) * levi.tail),
    )


def pre_collapse(datum: InductionDatum) -> Partition:
    """d'_j = 2 * sum_i d_ij + d_0j before any collapse."""
    length = max([len(o) for o in datum.gl_orbits] + [len(datum.tail_orbit), 0])
    rows = [datum.tail_orbit.part(j) for j in range(1, length + 1)]
    for o in datum.gl_orbits:
        for j in range(length):
            rows[j] += 2 * o.part(j + 1)
    return Partition(tuple(rows))


def induced_partition(datum: InductionDatum) -> Partition:
    return collapse(pre_collapse(datum), datum.levi.algebra)
