"""Exhaustive verification sweeps and the orbit catalog.

Every suite splits its work into independent cases.  A case is a small tuple
so it can be shipped to a worker process; each case returns a list of failure
records and the merged list is sorted, which keeps the output independent of
the worker count.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .epoly import (
    complete_quadrics_poly,
    dim_flag_quotient,
    e_ig,
    e_og_odd,
    e_rank_strata_skew,
    e_rank_strata_sym,
)
from .errors import NilOrbitError, OutOfRange, ResourceLimit
from .groups import (
    canonical_decomposition,
    component_and_pi1,
    kernel_K,
    lusztig_quotient,
    script_A,
    stabilizer_A_P,
)
from .induction import (
    dual_datum,
    enumerate_polarizations,
    footprint,
    generalized_springer_degree,
    polarization_index,
    seesaw_check,
)
from .levi import induced_partition, langlands_dual_levi, zero_datum
from .partitions import (
    AlgebraType,
    collapse,
    dominates,
    in_P_eps,
    is_richardson,
    is_rigid,
    is_special,
    orbit_dimension,
    orbits,
    partitions,
    classify,
)
from .qseries import Q, QPoly, QRational, as_polynomial, is_palindromic, leading_terms
from .springer import springer_dual, springer_inverse
from .stringy import (
    c21_leading_model,
    minimal_orbit_closed_form,
    minimal_orbit_strata,
    batyrev_combine,
    spherical_closed_form,
    spherical_from_strata,
    stringy_parabolic_cover,
    stringy_spherical,
    subregular_B_closure,
    universal_cover_regular,
)

SCHEMA = 1

# Hard caps: beyond these the exhaustive sweeps stop being desk-scale.
LIMITS = {
    "collapse-oracle": 20,
    "duality": 13,
    "canonical-quotient": 13,
    "seesaw": 9,
    "footprint": 9,
    "mirror": 8,
    "stringy-formulas": 8,
    "epoly-catalog": 12,
    "catalog": 8,
}

DEFAULTS = {
    "collapse-oracle": 14,
    "duality": 12,
    "canonical-quotient": 12,
    "seesaw": 8,
    "footprint": 8,
    "mirror": 7,
    "stringy-formulas": 6,
    "epoly-catalog": 10,
}


@dataclass
class VerificationReport:
    suite: str
    parameters: dict
    cases: int = 0
    failures: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_json(self, timing: bool = True):
        out = {
            "schema": SCHEMA,
            "suite": self.suite,
            "parameters": self.parameters,
            "cases": self.cases,
            "failures": len(self.failures),
            "ok": self.ok,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


def _fail(check: str, case, expected, actual) -> dict:
    return {"check": check, "case": case, "expected": expected, "actual": actual}


def _specials(algebra: AlgebraType) -> list:
    return [d for d in orbits(algebra) if is_special(d, algebra)]


# -- collapse oracle ----------------------------------------------------------


def _oracle_max(d, elements):
    below = [p for p in elements if dominates(d, p)]
    tops = [p for p in below if all(dominates(p, x) for x in below)]
    return tops[0] if len(tops) == 1 else None


def _case_collapse(N: int, family: str) -> list:
    algebra = AlgebraType.for_total(family, N)
    everything = list(partitions(N))
    elements = [p for p in everything if in_P_eps(p, algebra)]
    out = []
    image = {}
    for d in everything:
        got = collapse(d, algebra)
        image[d] = got
        want = _oracle_max(d, elements)
        if got != want:
            out.append(_fail("dominance-maximum", [family, d.to_list()], want and want.to_list(), got.to_list()))
        if collapse(got, algebra) != got:
            out.append(_fail("idempotent", [family, d.to_list()], got.to_list(), collapse(got, algebra).to_list()))
    if N <= 14:
        for d in everything:
            for f in everything:
                if dominates(d, f) and not dominates(image[d], image[f]):
                    out.append(_fail("monotone", [family, d.to_list(), f.to_list()], True, False))
    return out


def _cases_collapse(bound: int) -> list:
    cases = []
    for N in range(1, bound + 1):
        for family in ("B", "C", "D"):
            if (family == "B") == (N % 2 == 1):
                cases.append(("collapse", N, family))
    return cases


# -- Springer duality ---------------------------------------------------------


def _case_duality(n: int) -> list:
    C, B = AlgebraType("C", n), AlgebraType("B", n)
    sc, sb = _specials(C), _specials(B)
    out = []
    image = {d: springer_dual(d) for d in sc}
    if len(set(image.values())) != len(sc):
        out.append(_fail("injective", [n], len(sc), len(set(image.values()))))
    if set(image.values()) != set(sb):
        out.append(_fail("onto specials", [n], len(sb), len(set(image.values()))))
    for d, f in image.items():
        case = [d.to_list()]
        if springer_inverse(f) != d:
            out.append(_fail("inverse", case, d.to_list(), springer_inverse(f).to_list()))
        if orbit_dimension(d, C) != orbit_dimension(f, B):
            out.append(_fail("dimension", case, orbit_dimension(d, C), orbit_dimension(f, B)))
        if is_rigid(d, C) != is_rigid(f, B):
            out.append(_fail("rigid special", case, is_rigid(d, C), is_rigid(f, B)))
    for f in sb:
        if springer_dual(springer_inverse(f)) != f:
            out.append(_fail("inverse", [f.to_list()], f.to_list(), springer_dual(springer_inverse(f)).to_list()))
    if 2 * n <= 20:
        for d in sc:
            for e in sc:
                if dominates(d, e) != dominates(image[d], image[e]):
                    out.append(_fail("order", [d.to_list(), e.to_list()], dominates(d, e), not dominates(d, e)))
    return out


# -- canonical quotient and kernel --------------------------------------------


def _case_quotient(n: int) -> list:
    C, B = AlgebraType("C", n), AlgebraType("B", n)
    out = []
    for algebra in (C, B):
        for d in _specials(algebra):
            case = [algebra.family, d.to_list()]
            A = script_A(d, algebra)
            q = lusztig_quotient(d, algebra).rank
            K = kernel_K(d, algebra)
            if A.order != K.order * 2**q:
                out.append(_fail("|A| = |K| 2^q", case, A.order, K.order * 2**q))
            if is_rigid(d, algebra) and A.rank != q:
                out.append(_fail("rigid A = Abar", case, A.rank, q))
            a, pi1 = component_and_pi1(d, algebra)
            side = pi1.elementary_rank if algebra.family == "C" else a
            if side != A.rank:
                out.append(_fail("component rank", case, A.rank, side))
            if algebra.family == "C":
                f = springer_dual(d)
                qb = lusztig_quotient(f, B).rank
                if q != qb:
                    out.append(_fail("Abar(O) = Abar(S O)", case, q, qb))
                if 2 * n <= 20 and is_richardson(d, C):
                    for levi in enumerate_polarizations(d, C):
                        pcase = case + [str(levi)]
                        if not K.issubset(stabilizer_A_P(d, levi)):
                            out.append(_fail("K in A_P", pcase, True, False))
                        try:
                            left, right = canonical_decomposition(d, levi)
                        except AssertionError as exc:
                            out.append(_fail("rank split", pcase, q, str(exc)))
                            continue
                        if left + right != q:
                            out.append(_fail("rank split", pcase, q, left + right))
    return out


# -- induction: seesaw, degrees, polarization duality -------------------------


def _case_seesaw(n: int) -> list:
    C = AlgebraType("C", n)
    out = []
    for d in _specials(C):
        case = [d.to_list()]
        report = seesaw_check(d)
        if not report.ok:
            out.append(_fail("seesaw", case, report.quotient_order, report.degree * report.dual_degree))
        if not is_richardson(d, C):
            continue
        f = springer_dual(d)
        for levi in enumerate_polarizations(d, C):
            pcase = case + [str(levi)]
            z = zero_datum(levi)
            deg = generalized_springer_degree(z)
            idx = polarization_index(d, levi)
            if deg != idx:
                out.append(_fail("degree = index", pcase, idx, deg))
            dual = langlands_dual_levi(levi)
            got = induced_partition(zero_datum(dual))
            if got != f:
                out.append(_fail("dual polarization", pcase, f.to_list(), got.to_list()))
            dz = dual_datum(z)
            didx = polarization_index(f, dual)
            if generalized_springer_degree(dz) != didx:
                out.append(_fail("dual degree = index", pcase, didx, generalized_springer_degree(dz)))
    return out


def _case_footprint(n: int) -> list:
    C = AlgebraType("C", n)
    out = []
    for d in _specials(C):
        if not is_richardson(d, C):
            continue
        report = footprint(d)
        if not report.ok:
            out.append(
                _fail(
                    "footprint chain",
                    [d.to_list()],
                    [list(p) for p in report.chain],
                    [list(p) for p in report.degree_pairs],
                )
            )
    return out


# -- mirror pairs -------------------------------------------------------------


def _case_mirror(n: int) -> list:
    C = AlgebraType("C", n)
    out = []
    for d in _specials(C):
        if not is_richardson(d, C):
            continue
        for levi in enumerate_polarizations(d, C):
            dual = langlands_dual_levi(levi)
            case = [d.to_list(), str(levi)]
            if dim_flag_quotient(levi) != dim_flag_quotient(dual):
                out.append(_fail("dim G/P", case, dim_flag_quotient(levi), dim_flag_quotient(dual)))
                continue
            a = stringy_parabolic_cover(levi).value
            b = stringy_parabolic_cover(dual).value
            if a != b:
                out.append(_fail("E(T*G/P) = E(T*G/LP)", case, a.render(), b.render()))
    return out


# -- stringy formulas ---------------------------------------------------------

REMARK_D21 = QPoly({28: 1, 26: 2, 24: 3, 23: 1, 22: 3, 21: 3, 20: 2, 19: 5, 18: 1, 17: 6, 16: 1,
                    15: 5, 14: 2, 13: 3, 12: 3, 11: 1, 10: 3, 8: 2, 6: 1})
C21_LEADING = ((28, 1), (26, 1), (25, 2), (24, 2), (23, 4))


def _case_stringy(kind: str, a: int, b: int) -> list:
    out = []
    if kind == "closed":
        fam, r = ("C", 1) if a == 0 else ("D", a)
        l = b
        got, want = spherical_from_strata(fam, r, l), spherical_closed_form(fam, r, l)
        if got != want:
            out.append(_fail("strata = closed form", [fam, r, l], want.render(), got.render()))
        if fam == "D" and r == 2:
            poly = as_polynomial(got)
            if bool(poly) != (l <= 2):
                out.append(_fail("D2 polynomiality", [l], l <= 2, bool(poly)))
    elif kind == "asym1":
        c, d = stringy_spherical("C", 1, b).value, stringy_spherical("D", 1, b).value
        if c == d:
            out.append(_fail("C1 != D1", [b], False, True))
    elif kind == "asym2":
        lead = stringy_spherical("C", 2, 1).leading
        model = tuple(leading_terms(c21_leading_model(), 5))
        d21 = stringy_spherical("D", 2, 1)
        if lead != C21_LEADING:
            out.append(_fail("C21 leading terms", [], list(C21_LEADING), list(lead)))
        if model != C21_LEADING:
            out.append(_fail("C21 leading model", [], list(C21_LEADING), list(model)))
        if d21.polynomial != REMARK_D21:
            out.append(_fail("D21 expansion", [], REMARK_D21.render(), d21.value.render()))
        elif not is_palindromic(d21.polynomial, 6, 28):
            out.append(_fail("D21 palindromic", [], True, False))
        if d21.polynomial is not None and d21.polynomial.coeff(25) == dict(lead).get(25, 0):
            out.append(_fail("C21 and D21 differ at q^25", [], "distinct", "equal"))
    elif kind == "minimal":
        algebra = AlgebraType("ABCD"[a], b)
        got = batyrev_combine(minimal_orbit_strata(algebra))
        want = minimal_orbit_closed_form(algebra)
        if got != want:
            out.append(_fail("minimal orbit", [algebra.family, b], want.render(), got.render()))
    elif kind == "regular":
        lhs = universal_cover_regular(b)
        rhs = subregular_B_closure(b) * Q**2
        if lhs != rhs:
            out.append(_fail("regular cover mirror", [b], rhs.render(), lhs.render()))
    return out


def _cases_stringy(bound: int) -> list:
    cases = []
    for l in range(1, bound + 1):
        for a in (0, 1, 2):
            cases.append(("stringy", "closed", a, l))
        cases.append(("stringy", "asym1", 0, l))
    cases.append(("stringy", "asym2", 0, 1))
    for n in range(1, bound + 1):
        for a, fam in enumerate("ABCD"):
            lowest = {"A": 1, "B": 2, "C": 1, "D": 4}[fam]
            if n >= lowest:
                cases.append(("stringy", "minimal", a, n))
        if n >= 2:
            cases.append(("stringy", "regular", 0, n))
    return cases


# -- E-polynomial catalog -----------------------------------------------------

COR_SYM4 = {
    1: (Q**4 - 1),
    2: Q**2 * (Q**2 + 1) * (Q**3 - 1),
    3: Q**2 * (Q**3 - 1) * (Q**4 - 1),
    4: Q**6 * (Q - 1) * (Q**3 - 1),
}
COR_P = {
    2: QRational(Q**3 - 1, Q - 1),
    3: QRational((Q**3 - 1) * (Q**4 - 1), (Q - 1) ** 2),
    4: QRational((Q**2 - 1) * (Q**3 - 1) * QPoly({7: 1, 5: 1, 4: 1, 3: -1, 2: -1, 0: -1}), (Q - 1) ** 3),
}


def _case_epoly(kind: str, n: int) -> list:
    out = []
    if kind == "ig-og":
        for k in range(n + 1):
            if e_ig(k, 2 * n) != e_og_odd(k, 2 * n + 1):
                out.append(_fail("IG = OG", [k, n], e_ig(k, 2 * n).render(), e_og_odd(k, 2 * n + 1).render()))
    elif kind == "strata":
        m = n
        sym = sum((e_rank_strata_sym(k, m) for k in range(m + 1)), QPoly())
        if sym != QPoly.monomial(m * (m + 1) // 2):
            out.append(_fail("sym strata sum", [m], m * (m + 1) // 2, sym.render()))
        skew = sum((e_rank_strata_skew(k, m) for k in range(0, m + 1, 2)), QPoly())
        if skew != QPoly.monomial(m * (m - 1) // 2):
            out.append(_fail("skew strata sum", [m], m * (m - 1) // 2, skew.render()))
        if m <= 6 and m >= 1:
            p = complete_quadrics_poly(m)
            if p.degree != m * (m + 1) // 2 - 1 or not is_palindromic(p, 0, p.degree):
                out.append(_fail("complete quadrics", [m], "palindromic", p.render()))
    elif kind == "values":
        for i, want in COR_SYM4.items():
            if e_rank_strata_sym(i, 4) != want:
                out.append(_fail("E(O_i) in Sym^2 C^4", [i], want.render(), e_rank_strata_sym(i, 4).render()))
        for m, want in COR_P.items():
            if complete_quadrics_poly(m) != want:
                out.append(_fail("P_m", [m], want.render(), complete_quadrics_poly(m).render()))
        lead = tuple(leading_terms(e_ig(4, 10), 5))
        if lead != ((18, 1), (17, 1), (16, 2), (15, 3), (14, 4)):
            out.append(_fail("IG(4,10) leading", [], "q^18+q^17+2q^16+3q^15+4q^14", list(lead)))
    return out


def _cases_epoly(bound: int) -> list:
    cases = [("epoly", "ig-og", 0, n) for n in range(1, bound + 1)]
    cases += [("epoly", "strata", 0, m) for m in range(0, min(bound, 8) + 1)]
    cases.append(("epoly", "values", 0, 0))
    return cases


# -- dispatch -----------------------------------------------------------------


def _run_case(case: tuple) -> list:
    tag = case[0]
    try:
        if tag == "collapse":
            return _case_collapse(case[1], case[2])
        if tag == "duality":
            return _case_duality(case[1])
        if tag == "quotient":
            return _case_quotient(case[1])
        if tag == "seesaw":
            return _case_seesaw(case[1])
        if tag == "footprint":
            return _case_footprint(case[1])
        if tag == "mirror":
            return _case_mirror(case[1])
        if tag == "stringy":
            return _case_stringy(case[1], case[2], case[3])
        if tag == "epoly":
            return _case_epoly(case[1], case[3])
    except (NilOrbitError, AssertionError) as exc:
        return [_fail("raised", list(case), None, f"{type(exc).__name__}: {exc}")]
    raise ValueError(f"unknown case {case!r}")


def suite_cases(suite: str, bound: int) -> list:
    ranks = range(1, bound + 1)
    if suite == "collapse-oracle":
        return _cases_collapse(bound)
    if suite == "duality":
        return [("duality", n) for n in ranks]
    if suite == "canonical-quotient":
        return [("quotient", n) for n in ranks]
    if suite == "seesaw":
        return [("seesaw", n) for n in ranks]
    if suite == "footprint":
        return [("footprint", n) for n in ranks]
    if suite == "mirror":
        return [("mirror", n) for n in ranks]
    if suite == "stringy-formulas":
        return _cases_stringy(bound)
    if suite == "epoly-catalog":
        return _cases_epoly(bound)
    raise OutOfRange(f"unknown suite {suite!r}")


SUITES = tuple(DEFAULTS)


def _map(fn, items, jobs: int) -> list:
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _sort_key(record) -> str:
    return json.dumps(record, sort_keys=True, default=str)


def run_suite(suite: str, bound: int | None = None, jobs: int = 1) -> VerificationReport:
    """Run one suite.  `bound` is the largest N for the collapse oracle, the
    largest rank for orbit sweeps and the largest l or n for formula sweeps."""
    if suite not in DEFAULTS:
        raise OutOfRange(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    bound = DEFAULTS[suite] if bound is None else int(bound)
    if bound < 1:
        raise OutOfRange("the bound must be positive")
    if bound > LIMITS[suite]:
        raise ResourceLimit(f"{suite} is capped at {LIMITS[suite]}, got {bound}")
    start = time.perf_counter()
    cases = suite_cases(suite, bound)
    results = _map(_run_case, cases, jobs)
    failures = sorted((f for chunk in results for f in chunk), key=_sort_key)
    return VerificationReport(
        suite,
        {"bound": bound, "jobs": jobs},
        len(cases),
        failures,
        time.perf_counter() - start,
    )


def write_jsonl(path, records):
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")


# -- catalog ------------------------------------------------------------------


def orbit_groups(d, algebra: AlgebraType) -> dict:
    A = script_A(d, algebra)
    a, pi1 = component_and_pi1(d, algebra)
    out = {
        "script_A": A.to_json(),
        "A_rank": a,
        "pi1": pi1.to_json(),
    }
    if is_special(d, algebra):
        out["quotient"] = lusztig_quotient(d, algebra).to_json()
        out["K"] = kernel_K(d, algebra).to_json()
    return out


def orbit_record(d, algebra: AlgebraType) -> dict:
    """Everything the catalog stores about one special orbit."""
    rec = {
        "schema": SCHEMA,
        "family": algebra.family,
        "rank": algebra.rank,
        "partition": d.to_list(),
        "dual": (springer_dual(d) if algebra.family == "C" else springer_inverse(d)).to_list(),
        "classification": classify(d, algebra),
        "groups": orbit_groups(d, algebra),
    }
    if is_richardson(d, algebra):
        pols = []
        for levi in enumerate_polarizations(d, algebra):
            z = zero_datum(levi)
            pols.append({
                "levi": levi.to_json(),
                "degree": generalized_springer_degree(z),
                "dual_degree": generalized_springer_degree(dual_datum(z)),
            })
        rec["polarizations"] = pols
        if algebra.family == "C":
            rec["footprint"] = footprint(d).to_json()
    return rec


def _catalog_chunk(job: tuple) -> list:
    family, rank = job
    algebra = AlgebraType(family, rank)
    return [orbit_record(d, algebra) for d in _specials(algebra)]


def catalog_records(max_rank: int, families=("B", "C"), jobs: int = 1) -> list:
    if max_rank > LIMITS["catalog"]:
        raise ResourceLimit(f"catalog is capped at rank {LIMITS['catalog']}")
    for fam in families:
        if fam not in ("B", "C"):
            raise OutOfRange(f"catalog covers B and C, not {fam}")
    work = [(fam, n) for fam in sorted(families) for n in range(1, max_rank + 1)]
    records = [r for chunk in _map(_catalog_chunk, work, jobs) for r in chunk]
    records.sort(key=lambda r: (r["rank"], r["family"], r["partition"]))
    return records
