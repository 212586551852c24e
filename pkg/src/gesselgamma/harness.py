"""Theorem-verification campaigns over families of multisets.

Each check exhaustively tests one identity on one multiset at a time and
reports a counterexample payload on failure (the multiset, the offending
permutation or tree, and both sides of the failed equality).  Campaigns
run a check over a family of multisets, optionally in parallel, and
refuse families whose total permutation count exceeds a budget.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Callable

from .action import (
    BalanceStatus,
    balance_report,
    canonical_representative,
    enumerate_canonical,
    is_canonical,
    is_canonical_ternary,
    orbit,
    prune,
)
from .counts import (
    c_polynomial_enum,
    gamma_count_mma,
    gamma_count_perms,
    gamma_count_ternary,
    gamma_count_trees,
)
from .errors import DomainError, FamilyTooLargeError
from .grammar import c_polynomial_grammar, gamma_polynomial_grammar
from .multiset import Multiset
from .poly import (
    UVZ,
    XYZ,
    GammaTable,
    Poly3,
    gamma_extract,
    gamma_table_to_uvz,
    is_symmetric,
)
from .stirling import (
    StirlingPermutation,
    count_stirling,
    enumerate_stirling,
    statistics,
)
from .trees import (
    first_last_occurrence_flags,
    gessel_forward,
    gessel_inverse,
    leaf_census,
    parse_tree,
    serialize,
)

DEFAULT_COST_CAP = 10**6


# --------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class FamilySpec:
    """A family of multisets: either an explicit list or bound-generated.

    Bound generation takes every multiplicity vector with 1 <= n <= max_n,
    1 <= k_i <= max_k and K <= max_total, ordered lexicographically.
    """

    max_n: int = 4
    max_k: int = 3
    max_total: int = 10
    explicit: tuple[Multiset, ...] | None = None

    def members(self) -> list[Multiset]:
        if self.explicit is not None:
            return sorted(set(self.explicit), key=lambda m: m.mults)
        out = []
        for n in range(1, self.max_n + 1):
            for mults in product(range(1, self.max_k + 1), repeat=n):
                if sum(mults) <= self.max_total:
                    out.append(Multiset(mults))
        out.sort(key=lambda m: m.mults)
        return out


def default_campaign_family() -> list[Multiset]:
    """The default verification family: all bounded multisets plus the
    doubled multisets up to n = 6 and the plain permutation case up to n = 7."""
    members = set(FamilySpec(max_n=4, max_k=3, max_total=10).members())
    members.update(Multiset.uniform(n, 2) for n in range(1, 7))
    members.update(Multiset.uniform(n, 1) for n in range(1, 8))
    return sorted(members, key=lambda m: m.mults)


def family_cost(members: list[Multiset]) -> int:
    return sum(count_stirling(m) for m in members)


# --------------------------------------------------------------------------
# individual checks; each returns a list of failure payloads (empty = pass)

Failure = dict


def _fail(m: Multiset, detail: str, **extra) -> Failure:
    payload = {"multiset": m.spec(), "detail": detail}
    payload.update(extra)
    return payload


def _gamma_via_extract(m: Multiset) -> GammaTable:
    return gamma_extract(c_polynomial_enum(m), m.K)


def _table_mismatch(m: Multiset, what: str, lhs: GammaTable, rhs: GammaTable) -> list[Failure]:
    if lhs == rhs:
        return []
    return [_fail(m, what, lhs=lhs.to_json_dict(), rhs=rhs.to_json_dict())]


def _poly_mismatch(m: Multiset, what: str, lhs: Poly3, rhs: Poly3) -> list[Failure]:
    if lhs == rhs:
        return []
    return [_fail(m, what, lhs=lhs.to_json_dict(), rhs=rhs.to_json_dict())]


def _check_roundtrip(m: Multiset) -> list[Failure]:
    seen: set[str] = set()
    count = 0
    for s in enumerate_stirling(m):
        t = gessel_forward(s)
        back = gessel_inverse(t)
        if back.word != s.word:
            return [_fail(m, "word -> tree -> word is not the identity",
                          sigma=str(s), lhs=str(s), rhs=str(back))]
        text = serialize(t)
        t2 = parse_tree(text)
        if t2 != t:
            return [_fail(m, "serialize -> parse is not the identity",
                          sigma=str(s), tree=text)]
        if serialize(gessel_forward(gessel_inverse(t))) != text:
            return [_fail(m, "tree -> word -> tree is not the identity",
                          sigma=str(s), tree=text)]
        seen.add(text)
        count += 1
    if len(seen) != count:
        return [_fail(m, "correspondence is not injective",
                      lhs=count, rhs=len(seen))]
    formula = count_stirling(m)
    if count != formula:
        return [_fail(m, "enumeration size differs from the counting product",
                      lhs=count, rhs=formula)]
    return []


def _check_p21(m: Multiset) -> list[Failure]:
    for s in enumerate_stirling(m):
        prof = statistics(s)
        census = leaf_census(gessel_forward(s))
        if prof.triple != census.triple:
            return [_fail(m, "(asc, des, plat) differs from (x, y, z) leaf counts",
                          sigma=str(s), lhs=list(prof.triple), rhs=list(census.triple))]
    return []


def _check_jkp(m: Multiset) -> list[Failure]:
    for s in enumerate_stirling(m):
        prof = statistics(s)
        census = leaf_census(gessel_forward(s))
        if prof.plat_by_j != census.zleaf_by_j:
            return [_fail(m, "plateaux by occurrence index differ from z-leaves by position",
                          sigma=str(s), lhs=prof.plat_by_j, rhs=census.zleaf_by_j)]
    return []


def _check_p22(m: Multiset) -> list[Failure]:
    for s in enumerate_stirling(m):
        census = leaf_census(gessel_forward(s))
        for i in range(1, m.n + 1):
            flags = first_last_occurrence_flags(s, i)
            has_x, has_y, _ = census.per_vertex[i]
            if flags != (has_x, has_y):
                return [_fail(m, f"occurrence flags of value {i} differ from leaf flags",
                              sigma=str(s), lhs=list(flags), rhs=[has_x, has_y])]
    return []


def _check_t31(m: Multiset) -> list[Failure]:
    return _table_mismatch(m, "extracted gamma table differs from canonical-tree counts",
                           _gamma_via_extract(m), gamma_count_trees(m))


def _check_t41(m: Multiset) -> list[Failure]:
    return _poly_mismatch(m, "derivative chain differs from the enumerated polynomial",
                          c_polynomial_grammar(m), c_polynomial_enum(m))


def _check_t43(m: Multiset) -> list[Failure]:
    total = Poly3.zero(UVZ)
    for t in enumerate_canonical(m):
        p = prune(t)
        u, v = p.weight()
        total = total + Poly3.monomial((u, v, p.zleaf), 1, UVZ)
    expected = gamma_table_to_uvz(_gamma_via_extract(m))
    return _poly_mismatch(m, "pruned-tree weights do not sum to the gamma polynomial",
                          total, expected)


def _check_t44(m: Multiset) -> list[Failure]:
    return _poly_mismatch(m, "uvz derivative chain differs from the extracted gamma polynomial",
                          gamma_polynomial_grammar(m),
                          gamma_table_to_uvz(_gamma_via_extract(m)))


def _check_t52(m: Multiset) -> list[Failure]:
    return _table_mismatch(m, "extracted gamma table differs from double-fall-free counts",
                           _gamma_via_extract(m), gamma_count_perms(m))


def _check_p51(m: Multiset) -> list[Failure]:
    for s in enumerate_stirling(m):
        prof = statistics(s)
        report = balance_report(gessel_forward(s))
        unbalanced_y = set(report.vertices_with(BalanceStatus.UNBALANCED_Y))
        dfall_values = {s.word[i - 1] for i in prof.dfall_positions}
        if dfall_values != unbalanced_y or len(prof.dfall_positions) != len(unbalanced_y):
            return [_fail(m, "double-fall values differ from unbalanced-y vertices",
                          sigma=str(s), lhs=sorted(dfall_values), rhs=sorted(unbalanced_y))]
        for i in prof.dfall_positions:
            v = s.word[i - 1]
            last = max(p for p, w in enumerate(s.word, start=1) if w == v)
            if i != last:
                return [_fail(m, f"double fall at {i} is not the last occurrence of {v}",
                              sigma=str(s))]
    return []


def _check_t61(m: Multiset) -> list[Failure]:
    return _table_mismatch(m, "extracted gamma table differs from descent-plateau-free counts",
                           _gamma_via_extract(m), gamma_count_mma(m.n))


def _check_t62(m: Multiset) -> list[Failure]:
    return _table_mismatch(m, "descent-plateau-free counts differ from canonical ternary trees",
                           gamma_count_mma(m.n), gamma_count_ternary(m.n))


def _check_p63(m: Multiset) -> list[Failure]:
    for s in enumerate_stirling(m):
        prof = statistics(s)
        t = gessel_forward(s)
        census = leaf_census(t)
        z_without_x = {v for v, (hx, _, zc) in census.per_vertex.items() if zc and not hx}
        x_with_z = {v for v, (hx, _, zc) in census.per_vertex.items() if zc and hx}
        dplat_values = {s.word[i - 1] for i in prof.dplat_positions}
        aplat_values = {s.word[i - 1] for i in prof.aplat_positions}
        if dplat_values != z_without_x or len(prof.dplat_positions) != len(z_without_x):
            return [_fail(m, "descent-plateau values differ from z-without-x vertices",
                          sigma=str(s), lhs=sorted(dplat_values), rhs=sorted(z_without_x))]
        if aplat_values != x_with_z or len(prof.aplat_positions) != len(x_with_z):
            return [_fail(m, "ascent-plateau values differ from x-with-z vertices",
                          sigma=str(s), lhs=sorted(aplat_values), rhs=sorted(x_with_z))]
        if (prof.dplat == 0) != is_canonical_ternary(t):
            return [_fail(m, "descent-plateau-freeness differs from ternary canonicity",
                          sigma=str(s))]
    return []


def _check_sym_xy(m: Multiset) -> list[Failure]:
    p = c_polynomial_enum(m)
    if not is_symmetric(p, ("x", "y")):
        return [_fail(m, "polynomial is not symmetric in x, y", lhs=p.to_json_dict())]
    return []


def _check_sym_xyz(m: Multiset) -> list[Failure]:
    p = c_polynomial_enum(m)
    if not is_symmetric(p, ("x", "y", "z")):
        return [_fail(m, "polynomial is not symmetric in x, y, z", lhs=p.to_json_dict())]
    return []


def _check_orbit(m: Multiset) -> list[Failure]:
    groups: dict[str, list] = {}
    for s in enumerate_stirling(m):
        t = gessel_forward(s)
        groups.setdefault(serialize(canonical_representative(t)), []).append(t)
    total = Poly3.zero(XYZ)
    for canon_text in sorted(groups):
        members = groups[canon_text]
        canon = parse_tree(canon_text)
        if not is_canonical(canon):
            return [_fail(m, "orbit representative is not canonical", tree=canon_text)]
        canonical_members = [t for t in members if is_canonical(t)]
        if len(canonical_members) != 1:
            return [_fail(m, f"orbit has {len(canonical_members)} canonical members, expected 1",
                          tree=canon_text)]
        if orbit(members[0]) != frozenset(members):
            return [_fail(m, "orbit closure differs from the canonical-representative class",
                          tree=canon_text)]
        report = balance_report(canon)
        if len(members) != 2 ** report.uxleaf:
            return [_fail(m, "orbit size is not 2^(unbalanced-x vertices)",
                          tree=canon_text, lhs=len(members), rhs=2 ** report.uxleaf)]
        census = leaf_census(canon)
        if report.uxleaf != m.K + 1 - census.zleaf - 2 * census.yleaf:
            return [_fail(m, "unbalanced-x count differs from K+1 - zleaf - 2*yleaf",
                          tree=canon_text, lhs=report.uxleaf,
                          rhs=m.K + 1 - census.zleaf - 2 * census.yleaf)]
        x = Poly3.variable("x", XYZ)
        y = Poly3.variable("y", XYZ)
        expected = ((x * y) ** census.yleaf) * ((x + y) ** report.uxleaf) \
            * Poly3.monomial((0, 0, census.zleaf), 1, XYZ)
        actual = Poly3.zero(XYZ)
        for t in members:
            prof = statistics(gessel_inverse(t))
            actual = actual + Poly3.monomial(prof.triple, 1, XYZ)
        if actual != expected:
            return [_fail(m, "orbit monomial sum differs from (xy)^y (x+y)^ux z^z",
                          tree=canon_text, lhs=actual.to_json_dict(),
                          rhs=expected.to_json_dict())]
        total = total + actual
    return _poly_mismatch(m, "orbit sums do not add up to the full polynomial",
                          total, c_polynomial_enum(m))


def _doubled_only(m: Multiset) -> bool:
    return m.is_uniform(2)


@dataclass(frozen=True)
class CheckDef:
    description: str
    run: Callable[[Multiset], list[Failure]]
    applies: Callable[[Multiset], bool] | None = None


CHECKS: dict[str, CheckDef] = {
    "ROUNDTRIP": CheckDef(
        "word -> tree -> word and tree -> word -> tree are identities; the map is injective",
        _check_roundtrip),
    "P2.1": CheckDef(
        "(asc, des, plat) equals (x-leaf, y-leaf, z-leaf) counts under the correspondence",
        _check_p21),
    "JKP-ZJ": CheckDef(
        "plateaux keyed by occurrence index match z-leaves keyed by child position",
        _check_jkp),
    "P2.2": CheckDef(
        "vertex i has an x-leaf iff the first i tops an ascent, a y-leaf iff the last i tops a descent",
        _check_p22),
    "T3.1": CheckDef(
        "extracted gamma table equals canonical-tree counts by (z-leaves, y-leaves)",
        _check_t31),
    "T4.1": CheckDef(
        "the xyz derivative chain rebuilds the enumerated (asc, des, plat) polynomial",
        _check_t41),
    "T4.3": CheckDef(
        "pruned canonical trees, weighted u^#u v^#v z^#z, sum to the gamma polynomial",
        _check_t43),
    "T4.4": CheckDef(
        "the uvz derivative chain builds the gamma polynomial directly",
        _check_t44),
    "T5.2": CheckDef(
        "extracted gamma table equals double-fall-free counts by (plateaux, descents)",
        _check_t52),
    "P5.1": CheckDef(
        "double-fall positions map onto the unbalanced-y vertices",
        _check_p51),
    "T6.1": CheckDef(
        "extracted gamma table equals descent-plateau-free counts (doubled multisets)",
        _check_t61, _doubled_only),
    "T6.2": CheckDef(
        "descent-plateau-free counts equal canonical ternary tree counts (doubled multisets)",
        _check_t62, _doubled_only),
    "P6.3": CheckDef(
        "descent-plateaux map to z-without-x vertices, ascent-plateaux to x-with-z vertices (doubled multisets)",
        _check_p63, _doubled_only),
    "SYM-XY": CheckDef(
        "the (asc, des, plat) polynomial is symmetric in x and y",
        _check_sym_xy),
    "SYM-XYZ": CheckDef(
        "for doubled multisets the polynomial is symmetric in x, y and z",
        _check_sym_xyz, _doubled_only),
    "ORBIT": CheckDef(
        "orbits have one canonical member, size 2^ux, and monomial sum (xy)^y (x+y)^ux z^z",
        _check_orbit),
}


# --------------------------------------------------------------------------
# campaign running


@dataclass
class CheckOutcome:
    multiset: str
    status: str  # "PASS" | "FAIL" | "SKIP"
    detail: str | None = None
    counterexample: Failure | None = None

    def to_json_dict(self) -> dict:
        out = {"multiset": self.multiset, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.counterexample:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class CheckReport:
    check: str
    description: str
    outcomes: list[CheckOutcome]
    elapsed_ms: float

    @property
    def passed(self) -> bool:
        return all(o.status != "FAIL" for o in self.outcomes)

    def counts(self) -> dict[str, int]:
        c = {"pass": 0, "fail": 0, "skip": 0}
        for o in self.outcomes:
            c[o.status.lower()] += 1
        return c

    def to_json_dict(self, include_timing: bool = True) -> dict:
        out = {
            "check": self.check,
            "description": self.description,
            "passed": self.passed,
            "counts": self.counts(),
            "outcomes": [o.to_json_dict() for o in self.outcomes],
        }
        if include_timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


@dataclass
class CampaignReport:
    reports: list[CheckReport]
    multisets: list[str]
    cost: int

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def to_json_dict(self, include_timing: bool = True) -> dict:
        return {
            "family": {"multisets": self.multisets, "cost": self.cost},
            "passed": self.passed,
            "checks": [r.to_json_dict(include_timing) for r in self.reports],
        }


def _run_cell(args: tuple[str, str]) -> dict:
    """One (check, multiset) cell; module-level so process pools can pickle it."""
    check_id, spec = args
    cd = CHECKS[check_id]
    m = Multiset.parse(spec)
    start = time.perf_counter()
    if cd.applies is not None and not cd.applies(m):
        out = {"status": "SKIP", "detail": "check applies to doubled multisets only"}
    else:
        try:
            failures = cd.run(m)
        except Exception as exc:  # a crash is a verification failure, not a harness abort
            failures = [{"multiset": spec, "detail": f"exception: {exc!r}"}]
        if failures:
            out = {"status": "FAIL", "detail": failures[0].get("detail"),
                   "counterexample": failures[0]}
        else:
            out = {"status": "PASS"}
    out["elapsed_ms"] = (time.perf_counter() - start) * 1000.0
    return out


def run_campaign(
    check_ids: list[str],
    members: list[Multiset],
    *,
    cap: int = DEFAULT_COST_CAP,
    jobs: int = 1,
) -> CampaignReport:
    for cid in check_ids:
        if cid not in CHECKS:
            raise DomainError(
                f"unknown check id {cid!r}; known ids: {', '.join(sorted(CHECKS))}")
    cost = family_cost(members)
    if cost > cap:
        raise FamilyTooLargeError(cost, cap)
    specs = [m.spec() for m in members]
    cells = [(cid, spec) for cid in check_ids for spec in specs]
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_cell, cells, chunksize=4))
    else:
        results = [_run_cell(cell) for cell in cells]
    reports = []
    idx = 0
    for cid in check_ids:
        outcomes = []
        elapsed = 0.0
        for spec in specs:
            r = results[idx]
            idx += 1
            elapsed += r.get("elapsed_ms", 0.0)
            outcomes.append(CheckOutcome(
                multiset=spec,
                status=r["status"],
                detail=r.get("detail"),
                counterexample=r.get("counterexample"),
            ))
        reports.append(CheckReport(
            check=cid,
            description=CHECKS[cid].description,
            outcomes=outcomes,
            elapsed_ms=elapsed,
        ))
    return CampaignReport(reports=reports, multisets=specs, cost=cost)


def verify(
    check_id: str,
    members: list[Multiset] | None = None,
    *,
    cap: int = DEFAULT_COST_CAP,
    jobs: int = 1,
) -> CampaignReport:
    """Run one check id (or "all") over a family (default campaign if omitted)."""
    if members is None:
        members = default_campaign_family()
    ids = sorted(CHECKS) if check_id == "all" else [check_id]
    return run_campaign(ids, members, cap=cap, jobs=jobs)


# --------------------------------------------------------------------------
# golden examples


@dataclass
class GoldenItem:
    name: str
    passed: bool
    expected: str
    actual: str

    def to_json_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed,
                "expected": self.expected, "actual": self.actual}


@dataclass
class GoldenReport:
    items: list[GoldenItem]

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def to_json_dict(self) -> dict:
        return {"passed": self.passed,
                "items": [item.to_json_dict() for item in self.items]}


_BIG_WORD = (3, 3, 5, 5, 2, 2, 1, 7, 7, 1, 4, 6, 6, 4)
_BIG_TREE = "(1 (2 (3 * * (5 * * *)) * *) (7 * * *) (4 * (6 * * *) *))"
_SEG_WORD = (5, 5, 3, 3, 2, 1, 1, 4, 6, 6, 6, 7, 4)
_SEG_TREE = "(1 (2 (3 (5 * * *) * *) *) * (4 * (6 * * * (7 * *)) *))"
_FLIPPED_TREE = "(1 (2 * (3 (5 * * *) * *)) * (4 * (6 * * * (7 * *)) *))"
_CANONICAL_TREE = "(1 (2 * (3 * * (5 * * *))) * (4 * (6 * * * (7 * *)) *))"
_PRUNED_TEXT = "(1 (2:v (3:v * (5:u *))) * (4:u (6:v * * (7:u))))"
_TERNARY_WORD = (2, 2, 3, 3, 5, 5, 1, 7, 7, 1, 4, 6, 6, 4)
_TERNARY_TREE = "(1 (2 * * (3 * * (5 * * *))) (7 * * *) (4 * (6 * * *) *))"
_DFALL_WORD = (2, 5, 3, 3, 1, 1, 4, 6, 6, 4)


def golden_examples() -> GoldenReport:
    """Replay the worked examples with frozen expected values."""
    items: list[GoldenItem] = []

    def record(name: str, expected, actual) -> None:
        items.append(GoldenItem(
            name=name, passed=(expected == actual),
            expected=repr(expected), actual=repr(actual)))

    from .action import psi, serialize_pruned
    from .grammar import derive, uvz_rules, xyz_rules
    from .trees import gessel_decomposition, first_last_occurrence_flags, segment_word

    s1 = StirlingPermutation.from_word(_BIG_WORD)
    t1 = gessel_forward(s1)
    record("big-example/tree", _BIG_TREE, serialize(t1))
    record("big-example/census", (5, 5, 5), leaf_census(t1).triple)
    prof1 = statistics(s1)
    record("big-example/stats", (5, 5, 5), prof1.triple)
    record("big-example/aplat-dplat", (4, 1), (prof1.aplat, prof1.dplat))
    record("big-example/dplat-position", frozenset({5}), prof1.dplat_positions)

    s2 = StirlingPermutation.from_word(_SEG_WORD)
    t2 = gessel_forward(s2)
    record("segment-example/multiset", "2,1,2,2,2,3,1", s2.multiset.spec())
    record("segment-example/count", 74880, count_stirling(s2.multiset))
    record("segment-example/tree", _SEG_TREE, serialize(t2))
    record("segment-example/census", (4, 5, 5), leaf_census(t2).triple)
    expected_segments = {
        1: (5, 5, 3, 3, 2, 1, 1, 4, 6, 6, 6, 7, 4),
        2: (5, 5, 3, 3, 2),
        3: (5, 5, 3, 3),
        4: (4, 6, 6, 6, 7, 4),
        5: (5, 5),
        6: (6, 6, 6, 7),
        7: (7,),
    }
    for i, seg in expected_segments.items():
        record(f"segment-example/segment-{i}", seg, segment_word(s2, i))
    record("segment-example/decomposition-1",
           ((5, 5, 3, 3, 2), (), (4, 6, 6, 6, 7, 4)), gessel_decomposition(s2, 1))
    record("segment-example/decomposition-4",
           ((), (6, 6, 6, 7), ()), gessel_decomposition(s2, 4))
    record("segment-example/decomposition-7", ((), ()), gessel_decomposition(s2, 7))
    record("segment-example/flags-5", (True, True), first_last_occurrence_flags(s2, 5))
    record("segment-example/flags-2", (False, True), first_last_occurrence_flags(s2, 2))

    report2 = balance_report(t2)
    record("flip-example/statuses", {
        1: "no-xy-leaf", 2: "unbalanced-y", 3: "unbalanced-y", 4: "balanced-pair",
        5: "balanced-pair", 6: "unbalanced-x", 7: "balanced-pair",
    }, {v: st.value for v, st in sorted(report2.status.items())})
    record("flip-example/psi-2", _FLIPPED_TREE, serialize(psi(t2, 2)))
    canon2 = canonical_representative(t2)
    record("flip-example/canonical", _CANONICAL_TREE, serialize(canon2))
    record("flip-example/canonical-is-canonical", True, is_canonical(canon2))

    pruned = prune(canon2)
    record("prune-example/serialized", _PRUNED_TEXT, serialize_pruned(pruned))
    record("prune-example/weight", (3, 3), pruned.weight())
    record("prune-example/zleaf", 5, pruned.zleaf)

    s5 = StirlingPermutation.from_word(_DFALL_WORD)
    prof5 = statistics(s5)
    record("double-fall-example/descents", frozenset({2, 4, 9, 10}), prof5.descent_positions)
    record("double-fall-example/dfalls", frozenset({4}), prof5.dfall_positions)

    s7 = StirlingPermutation.from_word(_TERNARY_WORD)
    t7 = gessel_forward(s7)
    record("ternary-example/tree", _TERNARY_TREE, serialize(t7))
    record("ternary-example/is-canonical-ternary", True, is_canonical_ternary(t7))
    record("ternary-example/dplat", 0, statistics(s7).dplat)
    record("ternary-example/big-example-not-ternary", False, is_canonical_ternary(t1))

    m22 = Multiset((2, 2))
    c22 = c_polynomial_enum(m22)
    record("doubled-pair/c-polynomial",
           {(1, 2, 2): 1, (2, 1, 2): 1, (2, 2, 1): 1}, c22.terms)
    record("doubled-pair/gamma-table",
           {(1, 2): 1, (2, 1): 1}, gamma_extract(c22, 4).entries)
    record("doubled-pair/gamma-uvz",
           {(2, 0, 1): 1, (1, 1, 2): 1}, gamma_polynomial_grammar(m22).terms)

    record("grammar/derive-x", {(1, 1, 1): 1},
           derive(Poly3.variable("x", XYZ), xyz_rules(2)).terms)
    record("grammar/derive-xyz",
           {(2, 2, 1): 1, (2, 1, 2): 1, (1, 2, 2): 1},
           derive(Poly3.monomial((1, 1, 1), 1, XYZ), xyz_rules(2)).terms)
    record("grammar/derive-uz",
           {(1, 1, 2): 1, (2, 0, 1): 1},
           derive(Poly3.monomial((1, 0, 1), 1, UVZ), uvz_rules(2)).terms)

    a2 = Poly3(XYZ, {(2, 1, 0): 1, (1, 2, 0): 1})
    record("eulerian/gamma-of-A2", {(0, 1): 1}, gamma_extract(a2, 2).entries)

    return GoldenReport(items)
