"""Induction of orbits, degrees of generalized Springer maps, footprints and the seesaw."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotRichardson, NotSpecial, UnsupportedAlgebra, UnsupportedDatum
from .groups import lusztig_quotient, stabilizer_A_P, script_A
from .levi import (
    InductionDatum,
    LeviType,
    langlands_dual_levi,
    pre_collapse,
    zero_datum,
)
from .partitions import (
    AlgebraType,
    Partition,
    collapse,
    collapse_with_steps,
    dual_partition,
    is_richardson,
    is_rigid,
    is_special,
    partitions,
)
from .springer import springer_dual, springer_inverse


def _require_BC(algebra: AlgebraType):
    if algebra.family not in ("B", "C"):
        raise UnsupportedAlgebra(f"{algebra} is not of type B or C")


def _quotient_rank(d: Partition, algebra: AlgebraType) -> int:
    if not d.parts:
        return 0
    return lusztig_quotient(d, algebra).rank


def _dual_tail(tail: Partition, algebra: AlgebraType) -> Partition:
    # Springer dual of the tail orbit, defined on both sides
    if algebra.family == "C":
        return springer_dual(tail) if tail.parts else Partition((1,))
    return springer_inverse(tail)


def dual_datum(datum: InductionDatum) -> InductionDatum:
    """Langlands dual Levi with the Springer dual of the (rigid special) tail."""
    levi = datum.levi
    if not datum.is_zero_on_gl:
        raise UnsupportedDatum("only data with zero gl orbits are dualized")
    dual = langlands_dual_levi(levi)
    return InductionDatum(dual, datum.gl_orbits, _dual_tail(datum.tail_orbit, levi.algebra))


def generalized_springer_degree(datum: InductionDatum) -> int:
    """2 ** (number of pair collapses turning d' into the induced partition)."""
    tail = datum.tail_orbit
    algebra = datum.levi.tail_algebra
    if not datum.is_zero_on_gl:
        raise UnsupportedDatum("nonzero gl orbits are outside the degree formula")
    if tail.parts and not (is_special(tail, algebra) and is_rigid(tail, algebra)):
        raise UnsupportedDatum(f"tail orbit {tail} is not rigid special")
    _, steps = collapse_with_steps(pre_collapse(datum), datum.levi.algebra)
    return 2**steps


def enumerate_polarizations(d: Partition, algebra: AlgebraType) -> list:
    """Every Levi type whose zero orbit induces d, gl factors sorted decreasingly."""
    _require_BC(algebra)
    if not is_richardson(d, algebra):
        raise NotRichardson(f"{d} is not Richardson in {algebra}")
    found = []
    for s in range(algebra.rank + 1):
        tail = algebra.N - 2 * s
        for p in partitions(s):
            levi = LeviType(p.parts, tail, algebra)
            if collapse(pre_collapse(zero_datum(levi)), algebra) == d:
                found.append(levi)
    return found


def _levels_C(parts: list) -> tuple:
    """Row levels of the rigid special piece, plus the two rows bent by a collapse."""
    size = len(parts)
    level = [0] * size
    bent = []
    odd_rows = [j for j, v in enumerate(parts) if v % 2]
    j = odd_rows[-1]
    h = 1
    while j >= 0:
        # odd run ending at row j
        while j >= 0 and parts[j] % 2:
            level[j] = h
            j -= 1
        top = j
        while j >= 0 and parts[j] % 2 == 0:
            j -= 1
        t = top - j
        rows = range(j + 1, top + 1)
        if t >= 4:
            for r in rows:
                level[r] = h + 1
            if j >= 0:
                h += 2
        elif t == 2:
            for r in rows:
                level[r] = h
            bent.append(j + 1)
    return level, bent


def _decompose_C(d: Partition) -> InductionDatum:
    C = AlgebraType.for_total("C", d.total)
    parts = list(d.parts)
    level, bent = _levels_C(parts)
    rows = list(parts)
    for r in bent:
        rows[r] += 1
        rows[r + 1] -= 1
    even = [rows[j] - level[j] for j in range(len(rows))]
    gl = dual_partition(Partition(tuple(e // 2 for e in even)))
    tail = Partition(tuple(x for x in level if x))
    levi = LeviType(gl.parts, tail.total, C)
    return InductionDatum(levi, tuple(Partition((1,) * p) for p in levi.gl_parts), tail)


def rigid_special_decomposition(d: Partition, algebra: AlgebraType) -> InductionDatum:
    """A datum (Levi, zero gl orbits, rigid special tail) inducing d."""
    _require_BC(algebra)
    if not is_special(d, algebra):
        raise NotSpecial(f"{d} is not special in {algebra}")
    if is_rigid(d, algebra):
        return InductionDatum(LeviType((), algebra.N, algebra), (), d)
    if is_richardson(d, algebra):
        return zero_datum(enumerate_polarizations(d, algebra)[0])
    if algebra.family == "C":
        datum = _decompose_C(d)
    else:
        datum = dual_datum(_decompose_C(springer_inverse(d)))
    image = collapse(pre_collapse(datum), algebra)
    if image != d:
        raise AssertionError(f"decomposition of {d} re-induces {image}")
    return datum


@dataclass(frozen=True)
class FootprintReport:
    partition: Partition
    alpha: int
    beta: int
    m: int
    degree_pairs: tuple
    canonical_order: int
    polarizations: tuple = field(default=(), compare=False)

    @property
    def chain(self) -> tuple:
        """The pairs predicted from alpha, beta and m (C-side degree first)."""
        a, b, m = self.alpha, self.beta, self.m
        return tuple((2 ** (a + i), 2 ** (b + m - i)) for i in range(m + 1))

    @property
    def ok(self) -> bool:
        return (
            set(self.degree_pairs) == set(self.chain)
            and self.canonical_order == 2 ** (self.alpha + self.beta + self.m)
            and all(x * y == self.canonical_order for x, y in self.degree_pairs)
        )

    def to_json(self):
        return {
            "partition": self.partition.to_list(),
            "alpha": self.alpha,
            "beta": self.beta,
            "m": self.m,
            "degree_pairs": [list(p) for p in self.degree_pairs],
            "canonical_order": self.canonical_order,
            "ok": self.ok,
        }


def _odd_padded(d: Partition) -> list:
    n = len(d)
    return d.padded(n if n % 2 else n + 1)


def footprint_lines(d: Partition) -> tuple:
    """alpha, beta and m read off the two dividing lines."""
    c = _odd_padded(d)
    r = (len(c) - 1) // 2
    odd_idx = [j for j in range(1, len(c) + 1) if c[j - 1] % 2]
    k = odd_idx[-1] // 2 if odd_idx else 0
    alpha2 = sum(1 for j in range(1, 2 * k + 1) if c[j - 1] % 2 == 0)
    m = 0
    if k < r:
        while True:
            a = 2 * k + 2 * m + 1
            if a == 2 * r + 1 or c[a] == c[a + 1]:
                break
            m += 1
    b = _odd_padded(springer_dual(d))
    even_idx = [j for j in range(1, len(b) + 1) if b[j - 1] % 2 == 0]
    start = even_idx[0] if even_idx else len(b) + 1
    beta2 = sum(1 for j in range(start, len(b) + 1) if b[j - 1] % 2)
    return alpha2 // 2, beta2 // 2, m


def footprint(d: Partition) -> FootprintReport:
    C = AlgebraType.for_total("C", d.total)
    if not is_special(d, C):
        raise NotSpecial(f"{d} is not special")
    pols = enumerate_polarizations(d, C)
    pairs = set()
    for levi in pols:
        z = zero_datum(levi)
        pairs.add((generalized_springer_degree(z), generalized_springer_degree(dual_datum(z))))
    alpha, beta, m = footprint_lines(d)
    return FootprintReport(
        d,
        alpha,
        beta,
        m,
        tuple(sorted(pairs)),
        2 ** _quotient_rank(d, C),
        tuple(pols),
    )


@dataclass(frozen=True)
class SeesawReport:
    partition: Partition
    datum: InductionDatum
    degree: int
    dual_degree: int
    quotient_order: int
    rigid_quotient_order: int
    dual_quotient_order: int
    dual_rigid_quotient_order: int
    dual_image_ok: bool

    @property
    def ok(self) -> bool:
        lhs = self.degree * self.dual_degree
        return (
            self.dual_image_ok
            and lhs * self.rigid_quotient_order == self.quotient_order
            and lhs * self.dual_rigid_quotient_order == self.dual_quotient_order
        )

    def to_json(self):
        return {
            "partition": self.partition.to_list(),
            "datum": self.datum.to_json(),
            "degree": self.degree,
            "dual_degree": self.dual_degree,
            "quotient_order": self.quotient_order,
            "rigid_quotient_order": self.rigid_quotient_order,
            "dual_quotient_order": self.dual_quotient_order,
            "dual_rigid_quotient_order": self.dual_rigid_quotient_order,
            "ok": self.ok,
        }


def seesaw_check(d: Partition) -> SeesawReport:
    C = AlgebraType.for_total("C", d.total)
    if not is_special(d, C):
        raise NotSpecial(f"{d} is not special")
    datum = rigid_special_decomposition(d, C)
    dual = dual_datum(datum)
    f = springer_dual(d)
    B = dual.levi.algebra
    image_ok = collapse(pre_collapse(dual), B) == f
    return SeesawReport(
        d,
        datum,
        generalized_springer_degree(datum),
        generalized_springer_degree(dual),
        2 ** _quotient_rank(d, C),
        2 ** _quotient_rank(datum.tail_orbit, datum.levi.tail_algebra),
        2 ** _quotient_rank(f, B),
        2 ** _quotient_rank(dual.tail_orbit, dual.levi.tail_algebra),
        image_ok,
    )


def polarization_index(d: Partition, levi: LeviType) -> int:
    """[A(O) : A_P] from Hesselink's description."""
    return script_A(d, levi.algebra).order // stabilizer_A_P(d, levi).order
