"""The Springer dual bijection between special orbits of sp(2n) and so(2n+1)."""

from __future__ import annotations

from .errors import NotSpecial, TotalMismatch
from .partitions import (
    AlgebraType,
    OrbitLabel,
    Partition,
    collapse,
    is_special,
)


def plus(d: Partition) -> Partition:
    """Add one box to the first row (the empty partition becomes [1])."""
    if not d.parts:
        return Partition((1,))
    return Partition((d.parts[0] + 1,) + d.parts[1:])


def minus(f: Partition) -> Partition:
    """Remove one box from the last nonzero row."""
    if not f.parts:
        raise TotalMismatch("cannot remove a box from the empty partition")
    return Partition(f.parts[:-1] + (f.parts[-1] - 1,))


def springer_dual(d: Partition) -> Partition:
    """S(d) = (d+)_B for a special partition d of 2n."""
    C = AlgebraType.for_total("C", d.total)
    if not is_special(d, C):
        raise NotSpecial(f"{d} is not a special C-partition")
    return collapse(plus(d), AlgebraType("B", C.rank))


def springer_inverse(f: Partition) -> Partition:
    """(f-)_C for a special partition f of 2n+1."""
    B = AlgebraType.for_total("B", f.total)
    if not is_special(f, B):
        raise NotSpecial(f"{f} is not a special B-partition")
    return collapse(minus(f), AlgebraType("C", B.rank))


def spherical_double_cover_partner(r: int, l: int) -> OrbitLabel:
    """The D-orbit [2^{2r},1^{2l+2}] in so(4r+2l+2).

    It double covers the B-orbit [3,2^{2r-2},1^{2l+2}], which is the Springer
    dual of [2^{2r},1^{2l}] in sp(4r+2l).
    """
    if r < 1 or l < 1:
        raise ValueError("r and l must be positive")
    d = Partition((2,) * (2 * r) + (1,) * (2 * l + 2))
    return OrbitLabel(AlgebraType("D", 2 * r + l + 1), d)
