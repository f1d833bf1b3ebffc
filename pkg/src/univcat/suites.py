"""Bundled verification suites with deterministic plain-text reports.

Each suite prints one line per check and ends with ``RESULT: PASS <name>`` or
``RESULT: FAIL <name>``. Reports contain no timings so that repeated runs are
byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Callable, Optional

from .catalog import arrow_category, discrete_category, monoid_catalog, oriented_catalog
from .category import (check_graph_functor, delta_count, delta_maps, delta_truncation,
                       monoid_to_category, rt_functor, validate_category)
from .density import density_profile, monotone_in_n, subdivided_clique
from .errors import UnivcatError
from .gadget import (embed_in_subdivided_clique, indicator_for_depth, make_gadget,
                     short_cycle_copies_check, star_replace, verify_full_faithful_pair)
from .graphs import Graph
from .homs import EnumLimit, endomorphisms
from .representation import (MonoidTable, cross_category_homs, represent_batch,
                             represent_category, represent_monoid)
from .stability import OrderVerdict, check_order_property, order_witness, shift_strict

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_LISTED = 5


@dataclass
class Check:
    label: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        text = f"[{'ok' if self.ok else 'FAIL'}] {self.label}"
        return f"{text}: {self.detail}" if self.detail else text


@dataclass
class SuiteReport:
    name: str
    checks: list = field(default_factory=list)

    def add(self, label: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(label, bool(ok), detail))
        return bool(ok)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def text(self) -> str:
        lines = [f"suite {self.name}"]
        lines += [c.line() for c in self.checks]
        lines.append(f"RESULT: {'PASS' if self.ok else 'FAIL'} {self.name}")
        return "\n".join(lines) + "\n"


def _listing(items) -> str:
    items = list(items)
    shown = "; ".join(str(x) for x in items[:MAX_LISTED])
    more = f" (+{len(items) - MAX_LISTED} more)" if len(items) > MAX_LISTED else ""
    return f"{len(items)} failing: {shown}{more}" if items else ""


def replacement_bijection_failures(d: int, catalog=None) -> list:
    """Pairs where the replacement fails to induce a bijection on hom-sets."""
    catalog = oriented_catalog() if catalog is None else catalog
    gadget = indicator_for_depth(d)
    bad = []
    for (i, g), (j, h) in product(enumerate(catalog), repeat=2):
        rep = verify_full_faithful_pair(g, h, gadget, EnumLimit.unlimited())
        if not rep.bijection:
            bad.append((i, j, rep.hom_base, rep.hom_replaced, len(rep.unprojectable)))
    return bad


def replacement_cycle_failures(d: int, catalog=None) -> list:
    catalog = oriented_catalog() if catalog is None else catalog
    gadget = indicator_for_depth(d)
    bad = []
    for i, g in enumerate(catalog):
        verdict = short_cycle_copies_check(star_replace(g, gadget))
        if not verdict.ok:
            bad.append((i, verdict.offending[0]))
    return bad


def replacement_embedding_failures(d: int, catalog=None) -> list:
    catalog = oriented_catalog() if catalog is None else catalog
    gadget = indicator_for_depth(d)
    bad = []
    for i, g in enumerate(catalog):
        try:
            embed_in_subdivided_clique(star_replace(g, gadget))
        except UnivcatError as exc:
            bad.append((i, str(exc)))
    return bad


def suite_replacement(report: SuiteReport) -> None:
    catalog = oriented_catalog()
    report.add("catalog", len(catalog) == 10, f"{len(catalog)} oriented graphs on 1..3 vertices")
    loose = [(L, s) for L in (6, 9, 12) for s in range(1, L - 1)
             if len(endomorphisms(make_gadget(L, s).I)) != 1]
    report.add("gadget rigidity for L in (6, 9, 12), every span", not loose, _listing(loose))
    for d in (1, 2):
        bad = [(f"G={i}", f"H={j}", f"{a} vs {b} homs", f"{u} unprojectable")
               for i, j, a, b, u in replacement_bijection_failures(d, catalog)]
        report.add(f"d={d} hom bijection on {len(catalog) ** 2} pairs", not bad, _listing(bad))
        bad = [(f"G={i}", f"cycle {c}") for i, c in replacement_cycle_failures(d, catalog)]
        report.add(f"d={d} short cycles are gadget copies", not bad, _listing(bad))
        bad = replacement_embedding_failures(d, catalog)
        report.add(f"d={d} embedding into subdivided clique", not bad, _listing(bad))


def suite_order(report: SuiteReport, n_max: int = 6) -> None:
    for n in range(n_max + 1):
        F = rt_functor(sorted({0, 1, n}))
        w = order_witness(F, n)
        ok = w.verdict is OrderVerdict.NONSTRICT and w.matrix == [
            [i <= j for j in range(n + 1)] for i in range(n + 1)]
        report.add(f"n={n} witness matrix", ok, w.verdict.value)
        if n == 0:
            report.add("n=0 shift", w.degenerate, "single tuple, nothing to shift")
            continue
        s = shift_strict(w)
        strict = check_order_property(w.eta, w.witness.model, s.a_tuples, s.b_tuples)
        report.add(f"n={n} shifted witness", strict, "STRICT" if strict else "not strict")


def suite_delta(report: SuiteReport, bound: int = 5) -> None:
    bad = []
    for i, j in product(range(bound + 1), repeat=2):
        maps = delta_maps(i, j)
        brute = [v for v in product(range(j + 1), repeat=i + 1)
                 if all(v[k] <= v[k + 1] for k in range(i))]
        if not (len(maps) == delta_count(i, j) == comb(i + j + 1, i + 1) == len(brute)
                and [m.values for m in maps] == brute):
            bad.append((i, j))
    report.add(f"monotone map counts for i, j <= {bound}", not bad, _listing(bad))
    report.add("[0] -> [1] has the two maps", [m.values for m in delta_maps(0, 1)] == [(0,), (1,)])
    report.add("[0] -> [n] has n+1 maps", all(len(delta_maps(0, n)) == n + 1 for n in range(8)))
    verdict = validate_category(delta_truncation(3))
    report.add("truncation at 3 is a category", verdict.ok, verdict.law or "")
    for n in range(4):
        rep = check_graph_functor(rt_functor(range(n + 1)))
        report.add(f"tournament functor on ordinals <= {n} is full and faithful", rep.embedding)


TREES = (
    Graph(5, frozenset({(0, 1), (1, 2), (2, 3), (3, 4)})),
    Graph(5, frozenset({(0, 1), (0, 2), (0, 3), (0, 4)})),
    Graph(7, frozenset({(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)})),
)


def suite_density(report: SuiteReport, p_max: int = 2, n_max: int = 4) -> None:
    bad, non_monotone = [], []
    for p in range(p_max + 1):
        for N in range(2, n_max + 1):
            sample = [subdivided_clique(N, p)]
            prof = density_profile(sample, p, N)
            if prof.table[p] != N:
                bad.append((p, N, prof.table[p]))
            if not monotone_in_n(prof, sample):
                non_monotone.append((p, N))
    report.add(f"Sub_p(K_N) found in itself, p <= {p_max}, N <= {n_max}", not bad, _listing(bad))
    tree_prof = density_profile(list(TREES), p_max, n_max)
    dense = tree_prof.dense_entries()
    report.add("trees contain no subdivided K_N with N >= 3", not dense, str(dense) if dense else "")
    if not monotone_in_n(tree_prof, list(TREES)):
        non_monotone.append("trees")
    report.add("profiles monotone in N", not non_monotone, _listing(non_monotone))
    report.add("profile note", True, tree_prof.note)


def suite_represent(report: SuiteReport, max_order: int = 3) -> None:
    for mul, e in monoid_catalog(max_order):
        label = "monoid " + "/".join("".join(str(x) for x in row) for row in mul)
        try:
            r = represent_monoid(MonoidTable(len(mul), mul, e))
            report.add(label, r.verified and r.monoid_iso is not None,
                       f"|End| = {r.certificate['endomorphisms']}, {r.graphs[0].n} vertices")
        except UnivcatError as exc:
            report.add(label, False, str(exc))
    named = [("one-object Z2", monoid_to_category(((0, 1), (1, 0)), 0)),
             ("discrete 2-object", discrete_category(2)),
             ("arrow", arrow_category())]
    for label, K in named:
        try:
            r = represent_category(K)
            counts = ", ".join(f"{a}->{b}:{c}" for (a, b), c in sorted(r.certificate["hom_counts"].items()))
            report.add(f"category {label} full and faithful", r.verified, counts)
        except UnivcatError as exc:
            report.add(f"category {label} full and faithful", False, str(exc))
    results = represent_batch([K for _, K in named])
    cross = cross_category_homs(results)
    report.add("cross-category hom-sets empty", not cross, _listing(cross))


SUITES: dict = {
    "lemma1": suite_replacement,
    "lemma2": suite_order,
    "delta": suite_delta,
    "density": suite_density,
    "represent": suite_represent,
}


def run_suite(name: str, emit: Optional[Callable[[str], None]] = None):
    """Run suite ``name``; return ``(exit code, report text)``."""
    if name not in SUITES:
        text = f"unknown suite {name!r}; choose from {', '.join(SUITES)}\n"
        if emit:
            emit(text)
        return EXIT_USAGE, text
    report = SuiteReport(name)
    try:
        SUITES[name](report)
    except UnivcatError as exc:
        report.add("suite aborted", False, f"{type(exc).__name__}: {exc}")
    text = report.text()
    if emit:
        emit(text)
    return (EXIT_PASS if report.ok else EXIT_FAIL), text
