"""E-polynomials (in q = uv) of homogeneous spaces and rank strata."""

from __future__ import annotations

from functools import lru_cache

from .errors import OutOfRange, UnsupportedAlgebra
from .levi import LeviType
from .qseries import ONE, Q, QPoly


def _qm1(e: int) -> QPoly:
    return QPoly.monomial(e) - 1


def _qp1(e: int) -> QPoly:
    return QPoly.monomial(e) + 1


def _ratio(nums, dens) -> QPoly:
    num, den = ONE, ONE
    for x in nums:
        num = num * x
    for x in dens:
        den = den * x
    return num.exact_div(den)


def q_integer(n: int) -> QPoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    return QPoly((1,) * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    out = ONE
    for j in range(1, n + 1):
        out = out * q_integer(j)
    return out


def e_projective(n: int) -> QPoly:
    """E(P^n)."""
    return q_integer(n + 1)


@lru_cache(maxsize=None)
def e_grassmannian(k: int, n: int) -> QPoly:
    if not 0 <= k <= n:
        raise OutOfRange(f"Gr({k},{n}) needs 0 <= k <= n")
    return _ratio([_qm1(n - k + j) for j in range(1, k + 1)], [_qm1(j) for j in range(1, k + 1)])


@lru_cache(maxsize=None)
def e_ig(k: int, n2: int) -> QPoly:
    """E(IG(k, 2n)), from the product over j of (q^(2n-2k+2j) - 1)/(q^j - 1)."""
    if n2 % 2 or n2 < 0:
        raise OutOfRange("IG(k, N) needs N even")
    n = n2 // 2
    if not 0 <= k <= n:
        raise OutOfRange(f"IG({k},{n2}) needs 0 <= k <= {n}")
    return _ratio(
        [_qm1(2 * n - 2 * k + 2 * j) for j in range(1, k + 1)],
        [_qm1(j) for j in range(1, k + 1)],
    )


@lru_cache(maxsize=None)
def e_full_flag_A(k: int) -> QPoly:
    """E(SL_k/B) = [k]_q!."""
    return q_factorial(k)


@lru_cache(maxsize=None)
def e_full_flag_B(n: int) -> QPoly:
    """E(SO_{2n+1}/B), fibred over Q^{2n-1} with fibre SO_{2n-1}/B."""
    out = ONE
    for j in range(1, n + 1):
        out = out * e_quadric(2 * j - 1)
    return out


@lru_cache(maxsize=None)
def e_full_flag_D(n: int) -> QPoly:
    """E(SO_{2n}/B), fibred over Q^{2n-2} with fibre SO_{2n-2}/B."""
    out = ONE
    for j in range(2, n + 1):
        out = out * e_quadric(2 * j - 2)
    return out


@lru_cache(maxsize=None)
def e_og_odd(k: int, n2plus1: int) -> QPoly:
    """E(OG(k, 2n+1)) as SO_{2n+1}/B over the fibre SL_k/B x SO_{2n-2k+1}/B."""
    if n2plus1 % 2 == 0 or n2plus1 < 1:
        raise OutOfRange("OG(k, N) with N odd expected")
    n = (n2plus1 - 1) // 2
    if not 0 <= k <= n:
        raise OutOfRange(f"OG({k},{n2plus1}) needs 0 <= k <= {n}")
    return e_full_flag_B(n).exact_div(e_full_flag_A(k) * e_full_flag_B(n - k))


@lru_cache(maxsize=None)
def e_og_even(k: int, n2: int) -> QPoly:
    """E(OG(k, 2n)) for k < n (the two families of maximal ones are not split here)."""
    if n2 % 2 or n2 < 2:
        raise OutOfRange("OG(k, N) with N even expected")
    n = n2 // 2
    if not 0 <= k <= n - 1:
        raise OutOfRange(f"OG({k},{n2}) needs 0 <= k <= {n - 1}")
    return _ratio(
        [_qp1(n - k - 1 + j) * _qm1(n - k + j) for j in range(1, k + 1)],
        [_qm1(j) for j in range(1, k + 1)],
    )


def e_flag(parts) -> QPoly:
    """Type A partial flag Fl(p_1, ..., p_l): a Gaussian multinomial."""
    parts = [int(p) for p in parts]
    if not parts or any(p < 0 for p in parts):
        raise OutOfRange("e_flag needs a nonempty list of nonnegative sizes")
    den = ONE
    for p in parts:
        den = den * q_factorial(p)
    return q_factorial(sum(parts)).exact_div(den)


@lru_cache(maxsize=None)
def e_quadric(m: int) -> QPoly:
    """Smooth quadric of dimension m."""
    if m < 1:
        raise OutOfRange("quadrics of dimension >= 1 only")
    if m % 2 == 0:
        return QPoly.monomial(m // 2) + q_integer(m + 1)
    return q_integer(m + 1)


@lru_cache(maxsize=None)
def _sym_full_rank(m: int) -> QPoly:
    if m == 0:
        return ONE
    lower = sum((e_grassmannian(k, m) * _sym_full_rank(k) for k in range(m)), QPoly())
    return QPoly.monomial(m * (m + 1) // 2) - lower


def e_rank_strata_sym(k: int, m: int) -> QPoly:
    """Symmetric m x m matrices of rank exactly k."""
    if not 0 <= k <= m:
        raise OutOfRange(f"rank {k} outside 0..{m}")
    return e_grassmannian(k, m) * _sym_full_rank(k)


@lru_cache(maxsize=None)
def _skew_full_rank(m: int) -> QPoly:
    if m == 0:
        return ONE
    lower = sum(
        (e_grassmannian(k, m) * _skew_full_rank(k) for k in range(0, m, 2)),
        QPoly(),
    )
    return QPoly.monomial(m * (m - 1) // 2) - lower


def e_rank_strata_skew(k2: int, m: int) -> QPoly:
    """Skew m x m matrices of rank exactly k2 (k2 even)."""
    if k2 % 2 or not 0 <= k2 <= m:
        raise OutOfRange(f"skew rank {k2} must be even and in 0..{m}")
    return e_grassmannian(k2, m) * _skew_full_rank(k2)


@lru_cache(maxsize=None)
def complete_quadrics_poly(m: int) -> QPoly:
    """E of the variety of complete quadrics in m variables."""
    if m < 0:
        raise OutOfRange("m must be nonnegative")
    if m == 0:
        return ONE
    total = QPoly()
    for i in range(1, m + 1):
        proj = e_rank_strata_sym(i, m).exact_div(Q - 1)
        total = total + proj * complete_quadrics_poly(m - i)
    return total


def dim_flag_quotient(levi: LeviType) -> int:
    """Positive roots of the ambient algebra minus those of the Levi factor."""
    algebra = levi.algebra
    if algebra.family not in ("B", "C"):
        raise UnsupportedAlgebra("dim G/P is tracked for B and C")
    tail_rank = levi.tail_algebra.rank
    return algebra.rank**2 - sum(p * (p - 1) // 2 for p in levi.gl_parts) - tail_rank**2


def e_flag_quotient(levi: LeviType) -> QPoly:
    """E(G/P) = E(isotropic or orthogonal Grassmannian) * E(type A flag)."""
    algebra = levi.algebra
    p = levi.gl_total
    flag = e_flag(levi.gl_parts) if levi.gl_parts else ONE
    if algebra.family == "C":
        return e_ig(p, algebra.N) * flag
    if algebra.family == "B":
        return e_og_odd(p, algebra.N) * flag
    raise UnsupportedAlgebra("G/P is tracked for B and C")
