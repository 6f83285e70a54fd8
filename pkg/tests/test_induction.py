import pytest
from hypothesis import given, settings, strategies as st

from nilorbits.errors import InvalidDatum, NotRichardson, UnsupportedDatum
from nilorbits.induction import (
    dual_datum,
    enumerate_polarizations,
    footprint,
    footprint_lines,
    generalized_springer_degree,
    polarization_index,
    rigid_special_decomposition,
    seesaw_check,
)
from nilorbits.levi import InductionDatum, LeviType, induced_partition, langlands_dual_levi, zero_datum
from nilorbits.partitions import AlgebraType, Partition, is_richardson, is_rigid, is_special, orbits
from nilorbits.springer import springer_dual


def P(*parts):
    return Partition(tuple(parts))


def C(d):
    return AlgebraType.for_total("C", d.total)


def test_levi_validation():
    with pytest.raises(InvalidDatum):
        LeviType((2,), 3, AlgebraType("C", 3))
    lv = LeviType((1, 3), 0, AlgebraType("C", 4))
    assert lv.gl_parts == (3, 1) and lv.tail_algebra.rank == 0


def test_langlands_dual_levi():
    for n, k in [(3, 1), (4, 2), (5, 5)]:
        lv = LeviType((k,), 2 * n - 2 * k, AlgebraType("C", n))
        dual = langlands_dual_levi(lv)
        assert dual == LeviType((k,), 2 * n - 2 * k + 1, AlgebraType("B", n))
        assert langlands_dual_levi(dual) == lv
    borel = LeviType((1,) * 4, 0, AlgebraType("C", 4))
    assert langlands_dual_levi(borel).tail == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_regular_from_minimal_of_sp2(n):
    lv = LeviType((1,) * (n - 1), 2, AlgebraType("C", n))
    datum = InductionDatum(lv, tuple(P(1) for _ in range(n - 1)), P(2))
    assert induced_partition(datum) == P(2 * n)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 9) for k in range(1, 2 * n // 3 + 1)])
def test_maximal_parabolic_family(n, k):
    C_n = AlgebraType("C", n)
    lv = LeviType((k,), 2 * n - 2 * k, C_n)
    z = zero_datum(lv)
    got = induced_partition(z)
    if k % 2 == 0:
        assert got == Partition((3,) * k + (1,) * (2 * n - 3 * k))
        assert generalized_springer_degree(z) == 1
        assert lv in enumerate_polarizations(got, C_n)
    else:
        assert got == Partition((3,) * (k - 1) + (2, 2) + (1,) * (2 * n - 3 * k - 1))
        assert generalized_springer_degree(z) == 2
        pairs = footprint(got).degree_pairs
        assert (2, 1) in pairs


@pytest.mark.parametrize("k", [1, 2, 3])
def test_type_B_maximal_parabolics(k):
    n = 3 * k - 1
    B = AlgebraType("B", n)
    at = lambda j: zero_datum(LeviType((j,), 2 * n - 2 * j + 1, B))  # noqa: E731
    assert generalized_springer_degree(at(2 * k)) == 2
    assert generalized_springer_degree(at(2 * k - 1)) == 1


def test_degree_rejects_non_rigid_tail():
    lv = LeviType((1,), 4, AlgebraType("C", 3))
    datum = InductionDatum(lv, (P(1),), P(2, 2))
    with pytest.raises(UnsupportedDatum):
        generalized_springer_degree(datum)


def test_polarizations():
    for n in range(1, 7):
        assert enumerate_polarizations(P(2 * n), AlgebraType("C", n)) == [LeviType((1,) * n, 0, AlgebraType("C", n))]
    with pytest.raises(NotRichardson):
        enumerate_polarizations(P(2, 2, 2, 2, 1, 1), AlgebraType("C", 5))


def test_rigid_special_decomposition_examples():
    d = P(8, 8, 8, 8, 6, 6, 4, 4, 4, 4, 3, 3)
    datum = rigid_special_decomposition(d, C(d))
    assert datum.tail_orbit == Partition((2,) * 10 + (1, 1))
    rs = P(2, 2, 2, 2, 1, 1)
    datum = rigid_special_decomposition(rs, C(rs))
    assert datum.levi.gl_parts == () and datum.tail_orbit == rs
    d = P(4, 4, 1, 1)
    assert set(rigid_special_decomposition(d, C(d)).tail_orbit.parts) <= {1}


@pytest.mark.parametrize("n", range(1, 8))
def test_decomposition_has_rigid_special_tail(n):
    for family in "BC":
        algebra = AlgebraType(family, n)
        for d in orbits(algebra):
            if not is_special(d, algebra):
                continue
            datum = rigid_special_decomposition(d, algebra)
            t, ta = datum.tail_orbit, datum.levi.tail_algebra
            assert datum.is_zero_on_gl and (not t.parts or (is_special(t, ta) and is_rigid(t, ta)))
            assert induced_partition(datum) == d


def test_footprint_worked_example():
    rep = footprint(P(4, 4, 1, 1))
    assert (rep.alpha, rep.beta, rep.m) == (1, 0, 0)
    assert rep.degree_pairs == ((2, 1),) and rep.canonical_order == 2 and rep.ok


def test_footprint_regular():
    for n in range(1, 7):
        rep = footprint(P(2 * n))
        assert footprint_lines(P(2 * n)) == (0, 0, 0) and rep.degree_pairs == ((1, 1),)


@pytest.mark.parametrize("n", range(1, 9))
def test_footprint_chain(n):
    algebra = AlgebraType("C", n)
    for d in orbits(algebra):
        if is_special(d, algebra) and is_richardson(d, algebra):
            rep = footprint(d)
            assert rep.ok, rep.to_json()


def test_seesaw_example():
    rep = seesaw_check(P(8, 8, 8, 8, 6, 6, 4, 4, 4, 4, 3, 3))
    assert rep.ok and rep.degree * rep.dual_degree == rep.quotient_order // rep.rigid_quotient_order
    rep = seesaw_check(P(2, 2, 2, 2, 1, 1))
    assert (rep.degree, rep.dual_degree) == (1, 1) and rep.ok


@pytest.mark.parametrize("n", range(1, 9))
def test_seesaw_and_degree_index(n):
    algebra = AlgebraType("C", n)
    for d in orbits(algebra):
        if not is_special(d, algebra):
            continue
        assert seesaw_check(d).ok
        if not is_richardson(d, algebra):
            continue
        f = springer_dual(d)
        q = seesaw_check(d).quotient_order
        for lv in enumerate_polarizations(d, algebra):
            z = zero_datum(lv)
            deg, ddeg = generalized_springer_degree(z), generalized_springer_degree(dual_datum(z))
            assert deg == polarization_index(d, lv)
            assert induced_partition(zero_datum(langlands_dual_levi(lv))) == f
            assert deg * ddeg == q


@st.composite
def staged_levi(draw):
    family = draw(st.sampled_from("BC"))
    gl = draw(st.lists(st.integers(1, 3), min_size=1, max_size=4))
    tail_n = draw(st.integers(0, 3))
    tail = 2 * tail_n + (1 if family == "B" else 0)
    tail_alg = AlgebraType.for_total(family, tail) if tail else None
    if tail_alg is not None and tail_alg.rank > 0:
        choices = [d for d in orbits(tail_alg)]
        tail_orbit = draw(st.sampled_from(choices))
    else:
        tail_orbit = Partition((1,) * tail)
    cut = draw(st.integers(0, len(gl)))
    return family, gl, tail, tail_orbit, cut


@settings(max_examples=100, deadline=None)
@given(staged_levi())
def test_induction_in_stages(case):
    family, gl, tail, tail_orbit, cut = case
    N = 2 * sum(gl) + tail
    inner_gl, outer_gl = gl[:cut], gl[cut:]

    def induce(parts, t, orbit):
        lv = LeviType.of(family, parts, t)
        return induced_partition(InductionDatum(lv, tuple(Partition((1,) * p) for p in lv.gl_parts), orbit))

    once = induce(gl, tail, tail_orbit)
    middle = induce(inner_gl, tail, tail_orbit) if inner_gl else tail_orbit
    staged = induce(outer_gl, tail + 2 * sum(inner_gl), middle)
    assert staged == once and once.total == N
