"""Elementary abelian 2-groups attached to special orbits.

Group elements are int bitmasks over a labelled basis: bit i stands for the
generator x_v with v = basis_labels[i].  Subgroups are GF(2) spans kept in
reduced row-echelon form, so equal subgroups have equal bases.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotPolarization, NotRichardson, NotSpecial
from .levi import LeviType, langlands_dual_levi, pre_collapse, zero_datum
from .partitions import (
    AlgebraType,
    Partition,
    _check_orbit,
    collapse_with_steps,
    is_richardson,
    is_special,
)
from .springer import springer_dual


def reduce_rows(rows) -> tuple:
    """Reduced row-echelon basis of the span of the given bitmasks."""
    pivots = {}
    for r in rows:
        for top in sorted(pivots, reverse=True):
            if r >> top & 1:
                r ^= pivots[top]
        if r:
            top = r.bit_length() - 1
            for t in pivots:
                if pivots[t] >> top & 1:
                    pivots[t] ^= r
            pivots[top] = r
    return tuple(pivots[t] for t in sorted(pivots, reverse=True))


def parity(x: int) -> int:
    return bin(x).count("1") & 1


@dataclass(frozen=True)
class TwoGroup:
    basis_labels: tuple

    def __post_init__(self):
        labels = tuple(self.basis_labels)
        if any(a <= b for a, b in zip(labels, labels[1:])) or any(v <= 0 for v in labels):
            raise ValueError(f"labels must be positive and strictly decreasing: {labels}")
        object.__setattr__(self, "basis_labels", labels)

    @property
    def rank(self) -> int:
        return len(self.basis_labels)

    @property
    def order(self) -> int:
        return 2 ** self.rank

    def bit(self, label) -> int:
        return 1 << self.basis_labels.index(label)

    def element(self, labels) -> int:
        x = 0
        for v in labels:
            x ^= self.bit(v)
        return x

    def support(self, x: int) -> tuple:
        return tuple(v for i, v in enumerate(self.basis_labels) if x >> i & 1)

    def full(self) -> "TwoSubgroup":
        return TwoSubgroup(self, tuple(1 << i for i in range(self.rank)))

    def to_json(self):
        return {"rank": self.rank, "basis": list(self.basis_labels)}


@dataclass(frozen=True)
class TwoSubgroup:
    ambient: TwoGroup
    generators: tuple

    def __post_init__(self):
        top = 1 << self.ambient.rank
        if any(g < 0 or g >= top for g in self.generators):
            raise ValueError("generator outside the ambient group")
        object.__setattr__(self, "generators", reduce_rows(self.generators))

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def order(self) -> int:
        return 2 ** self.rank

    def elements(self):
        out = [0]
        for g in self.generators:
            out += [x ^ g for x in out]
        return sorted(out)

    def __contains__(self, x: int) -> bool:
        return reduce_rows(self.generators + (x,)) == self.generators

    def issubset(self, other: "TwoSubgroup") -> bool:
        return all(g in other for g in self.generators)

    def index_in(self, other: "TwoSubgroup") -> int:
        return 2 ** (other.rank - self.rank)

    def cut(self, constraints) -> "TwoSubgroup":
        """Elements x of self with <c, x> = 0 for every constraint mask c."""
        gens = list(self.generators)
        constraints = list(constraints)
        # evaluate constraints on generators, then take the GF(2) null space
        columns = []
        for g in gens:
            col = 0
            for i, c in enumerate(constraints):
                col |= parity(c & g) << i
            columns.append(col)
        kernel = _null_combinations(columns)
        new = []
        for combo in kernel:
            x = 0
            for i, g in enumerate(gens):
                if combo >> i & 1:
                    x ^= g
            new.append(x)
        return TwoSubgroup(self.ambient, tuple(new))

    def to_json(self):
        r = self.ambient.rank
        return {
            "rank": self.rank,
            "basis": list(self.ambient.basis_labels),
            "generators": [[g >> i & 1 for i in range(r)] for g in self.generators],
        }


def _null_combinations(columns) -> list:
    """Basis (as bitmasks over positions) of {a : sum a_i columns_i = 0}."""
    pivots = {}  # pivot bit -> (vector, combination)
    kernel = []
    for i, col in enumerate(columns):
        v, combo = col, 1 << i
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = (v, combo)
                break
            pv, pc = pivots[top]
            v ^= pv
            combo ^= pc
        if not v:
            kernel.append(combo)
    return kernel


# -- orbit groups -------------------------------------------------------------


@dataclass(frozen=True)
class Pi1Info:
    elementary_rank: int
    central_extension: bool

    @property
    def order(self) -> int:
        return 2 ** (self.elementary_rank + (1 if self.central_extension else 0))

    def to_json(self):
        return {
            "elementary_rank": self.elementary_rank,
            "central_extension": self.central_extension,
            "order": self.order,
        }


def b_set(d: Partition, algebra: AlgebraType) -> tuple:
    """Labels d_j with d_j > d_{j+1} and d_j of parity opposite to chi."""
    _check_orbit(d, algebra)
    chi = algebra.chi
    labels = []
    for j in range(1, len(d) + 1):
        v = d.part(j)
        if v > d.part(j + 1) and v % 2 != chi:
            labels.append(v)
    return tuple(labels)


def script_A(d: Partition, algebra: AlgebraType) -> TwoSubgroup:
    """The group on B(d): everything for C, the even-weight part for B and D."""
    group = TwoGroup(b_set(d, algebra))
    if algebra.family == "C":
        return group.full()
    gens = tuple((1 << i) | (1 << (i + 1)) for i in range(group.rank - 1))
    return TwoSubgroup(group, gens)


def component_and_pi1(d: Partition, algebra: AlgebraType) -> tuple:
    """Rank of A(O) and the shape of pi_1(O)."""
    _check_orbit(d, algebra)
    counts = d.multiplicities()
    if algebra.family == "C":
        evens = [v for v in counts if v % 2 == 0]
        very_even = all(counts[v] % 2 == 0 for v in evens)
        a = len(evens) if very_even else max(len(evens) - 1, 0)
        return a, Pi1Info(len(evens), False)
    if algebra.family == "B":
        odds = [v for v in counts if v % 2 == 1]
        rather_odd = all(counts[v] == 1 for v in odds)
        a = len(odds) - 1
        return a, Pi1Info(a, rather_odd)
    raise NotImplementedError("component groups are tabulated for B and C")


@dataclass(frozen=True)
class QuotientInfo:
    rank: int
    core: tuple

    @property
    def order(self) -> int:
        return 2 ** self.rank

    def to_json(self):
        return {"rank": self.rank, "core": list(self.core)}


def _padded_for_quotient(d: Partition, algebra: AlgebraType) -> list:
    parts = list(d.parts)
    if len(parts) % 2 == 0:
        parts.append(0)
    return parts


def _removable(parts, i) -> bool:
    """Does the pair at 0-based positions (i, i+1) get separated?

    Even values pair up at 1-based positions (2j, 2j+1); odd values at
    (2j+1, 2j+2).
    """
    a, b = parts[i], parts[i + 1]
    if a != b or a == 0:
        return False
    first = i + 1  # 1-based index of the left member
    return (a % 2 == 0 and first % 2 == 0) or (a % 2 == 1 and first % 2 == 1)


def separation_core(d: Partition, algebra: AlgebraType) -> tuple:
    """Remove separable pairs repeatedly, re-indexing after each removal."""
    parts = _padded_for_quotient(d, algebra)
    changed = True
    while changed:
        changed = False
        for i in range(len(parts) - 1):
            if _removable(parts, i):
                del parts[i : i + 2]
                changed = True
                break
    return tuple(parts)


def separation_core_single_pass(d: Partition, algebra: AlgebraType) -> tuple:
    """Straight-line variant: mark separable pairs on the original positions."""
    parts = _padded_for_quotient(d, algebra)
    taken = [False] * len(parts)
    i = 0
    while i < len(parts) - 1:
        if _removable(parts, i):
            taken[i] = taken[i + 1] = True
            i += 2
        else:
            i += 1
    return tuple(p for p, t in zip(parts, taken) if not t)


def lusztig_quotient(d: Partition, algebra: AlgebraType) -> QuotientInfo:
    """Lusztig's canonical quotient (Z/2)^q, where the core has 2q+1 entries."""
    if algebra.family not in ("B", "C") or not is_special(d, algebra):
        raise NotSpecial(f"{d} is not a special orbit of {algebra}")
    core = separation_core(d, algebra)
    return QuotientInfo((len(core) - 1) // 2, core)


def _kernel_ladder(d: Partition, algebra: AlgebraType, A: TwoSubgroup) -> TwoSubgroup:
    # odd-multiplicity labels form a ladder i_1 < ... < i_l, with i_0 = 0;
    # even-multiplicity labels are counted inside each rung
    group = A.ambient
    chi = algebra.chi
    counts = d.multiplicities()
    s_odd = sorted(v for v, m in counts.items() if v % 2 != chi and m % 2)
    s_even = sorted(v for v, m in counts.items() if v % 2 != chi and m % 2 == 0)
    ladder = [0] + s_odd
    l = len(s_odd)

    def delta_mask(j):
        if 1 <= j <= l and ladder[j] in group.basis_labels:
            return group.bit(ladder[j])
        return 0

    constraints = []
    for m in range(0, l + 1):
        lo = ladder[m]
        hi = ladder[m + 1] if m < l else float("inf")
        window = [v for v in s_even if lo <= v <= hi]
        t_mask = 0
        for v in window:
            t_mask |= group.bit(v)
        if m % 2 == 0:
            constraints.extend(group.bit(v) for v in window)
        else:
            constraints.append(delta_mask(m + 1) ^ t_mask ^ delta_mask(m))
    return A.cut(c for c in constraints if c)


def _kernel_heights(d: Partition, A: TwoSubgroup) -> TwoSubgroup:
    # a label whose last row h is odd lies in K, glued to the label just
    # below when that one occupies row h+1 alone
    group = A.ambient
    gens = []
    for v in group.basis_labels:
        h = max(j for j in range(1, len(d) + 1) if d.part(j) == v)
        if h % 2 == 0:
            continue
        w = d.part(h + 1)
        if w in group.basis_labels and d.part(h + 2) < w:
            gens.append(group.bit(v) | group.bit(w))
        else:
            gens.append(group.bit(v))
    return TwoSubgroup(group, tuple(gens))


def kernel_K(d: Partition, algebra: AlgebraType) -> TwoSubgroup:
    """Kernel K of the surjection from the component group onto the canonical quotient."""
    if algebra.family not in ("B", "C") or not is_special(d, algebra):
        raise NotSpecial(f"{d} is not a special orbit of {algebra}")
    A = script_A(d, algebra)
    if algebra.family == "C":
        return _kernel_heights(d, A)
    return _kernel_ladder(d, algebra, A)


def hesselink_pairs(d_prime: Partition, algebra: AlgebraType) -> list:
    """I_chi(d'): indices j with j = d'_j = chi mod 2 and d'_j >= d'_{j+1} + 2."""
    chi = algebra.chi
    return [
        j
        for j in range(1, len(d_prime) + 1)
        if j % 2 == chi and d_prime.part(j) % 2 == chi and d_prime.part(j) >= d_prime.part(j + 1) + 2
    ]


def _carried(d: Partition, group: TwoGroup, j: int) -> int:
    """Generator sitting at row j: the row must end a block of its value."""
    v = d.part(j)
    if v > 0 and v > d.part(j + 1) and v in group.basis_labels:
        return group.bit(v)
    return 0


def stabilizer_A_P(d: Partition, levi: LeviType) -> TwoSubgroup:
    """Image of the polarization stabilizer in the component group (Hesselink)."""
    algebra = levi.algebra
    d_prime = pre_collapse(zero_datum(levi))
    image, _ = collapse_with_steps(d_prime, algebra)
    if image != d:
        raise NotPolarization(f"{levi} induces {image}, not {d}")
    A = script_A(d, algebra)
    rows = []
    for j in hesselink_pairs(d_prime, algebra):
        rows.append(_carried(d, A.ambient, j) ^ _carried(d, A.ambient, j + 1))
    return A.cut(r for r in rows if r)


def canonical_decomposition(d: Partition, levi: LeviType) -> tuple:
    """Ranks of A/A_P on the C side and of its counterpart on the B side.

    These are the exponents of the two Springer-map degrees; together they
    account for the whole canonical quotient.
    """
    C = levi.algebra
    if C.family != "C":
        raise NotPolarization("pass the C-side polarization")
    if not is_special(d, C) or not is_richardson(d, C):
        raise NotRichardson(f"{d} is not a special Richardson orbit")
    f = springer_dual(d)
    dual = langlands_dual_levi(levi)
    A = script_A(d, C)
    A_dual = script_A(f, dual.algebra)
    left = A.rank - stabilizer_A_P(d, levi).rank
    right = A_dual.rank - stabilizer_A_P(f, dual).rank
    q = lusztig_quotient(d, C).rank
    if left + right != q:
        raise AssertionError(f"decomposition ranks {left}+{right} != {q} for {d} via {levi}")
    return left, right
