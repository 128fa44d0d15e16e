"""Named law suites shared by the command line and the acceptance tests."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable

from .corpus import fixtures, trivial_bottom
from .groups import CyclicGroup, symmetric_group
from .homotopy import (
    build_hom2groupoid,
    is_quadratic_derivation,
    omega_dual_check,
    omega_identity_report,
    random_words,
)
from .lax import (
    all_morphisms,
    bijection_report,
    correspondence_report,
    counterexample_report,
    extend_2derivation,
    kernel_relations_check,
    lax_groupoid_report,
    lax_target,
    lax_to_strict,
    q1,
    search_lax_homotopies,
)
from .pathspace import (
    compare_disk,
    compare_double_faces,
    compare_tetra,
    compare_triangle,
    disk_lifting_vanishes,
    lifted_action_special_cases,
    path_space,
    path_space_checks,
    peiffer_pairing_check,
    triangle_pullback_check,
)
from .xmod import (
    VerificationReport,
    homotopy_groups,
    identity_morphism,
    report_from,
    rnn_suite,
    verify_two_crossed,
)


@dataclass
class SuiteResult:
    name: str
    report: VerificationReport
    seconds: float
    limit: float | None = None
    notes: tuple[str, ...] = ()

    @property
    def within_time(self) -> bool:
        return self.limit is None or self.seconds <= self.limit

    @property
    def passed(self) -> bool:
        return self.report.passed and self.within_time

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        limit = f" (limit {self.limit:g} s)" if self.limit is not None else ""
        return f"{status} {self.name}: {self.report.summary()} in {self.seconds:.2f} s{limit}"


def _timed(fn: Callable[[], VerificationReport]) -> tuple[VerificationReport, float]:
    start = time.perf_counter()
    rep = fn()
    return rep, time.perf_counter() - start


def axioms(seed: int = 0, **_) -> SuiteResult:
    """Axioms of the finite fixtures exhaustively and of the integer fixture on probes."""
    fx = fixtures()
    report = report_from([], {}, {})
    slowest = 0.0
    for name, exhaustive in (("fixC_Z2", True), ("fixC_S3", True), ("fixD", True), ("fixB", False)):
        rep, secs = _timed(lambda: verify_two_crossed(fx[name], exhaustive=exhaustive, seed=seed))
        slowest = max(slowest, secs)
        report = report.merge(rep, prefix=f"{name}:")
    return SuiteResult("axiom suites", report, slowest, 10.0, ("time is the slowest single fixture",))


def pathspace(seed: int = 0, **_) -> SuiteResult:
    fx = fixtures()

    def run() -> VerificationReport:
        rep = report_from([], {}, {})
        for name in ("fixC_S3", "fixD"):
            A = fx[name]
            rep = rep.merge(verify_two_crossed(path_space(A).total, exhaustive=True, seed=seed), prefix=f"{name}:")
            rep = rep.merge(path_space_checks(A, seed=seed), prefix=f"{name}:")
        return rep

    rep, secs = _timed(run)
    return SuiteResult("path-space soundness", rep, secs, 60.0)


def oracles(seed: int = 0, **_) -> SuiteResult:
    """Closed-form faces, triangle, disk and tetrahedron operations against the inherited ones."""
    D = fixtures()["fixD"]

    def run() -> VerificationReport:
        rep = compare_double_faces(D, max_tuples=200_000, seed=seed)
        rep = rep.merge(compare_triangle(D, seed=seed), prefix="triangle:")
        rep = rep.merge(triangle_pullback_check(D), prefix="triangle:")
        rep = rep.merge(compare_disk(D, max_tuples=200_000, seed=seed), prefix="disk:")
        rep = rep.merge(disk_lifting_vanishes(D, seed=seed), prefix="disk:")
        rep = rep.merge(compare_tetra(D, seed=seed), prefix="tetra:")
        return rep

    rep, secs = _timed(run)
    return SuiteResult("explicit-vs-generic oracle", rep, secs)


def _lax_cells(jobs: int = 1):
    fx = fixtures()
    A, D = fx["fixC_Z2"], fx["fixD"]
    homotopies = [lh for f in all_morphisms(A, D) for lh in search_lax_homotopies(f, jobs=jobs)]
    return A, D, homotopies


def omega(seed: int = 0, words: int = 500, pairs: int = 0, jobs: int = 1, **_) -> SuiteResult:
    """Both computations of the concatenation correction agree on seeded random words."""

    def run() -> VerificationReport:
        A, D, hs = _lax_cells(jobs)
        Q = q1(A)
        ws = random_words(Q.free, words, seed=seed, max_length=8)
        strict = [lax_to_strict(lh) for lh in hs]
        by_start: dict = {}
        for i, lh in enumerate(hs):
            by_start.setdefault(_signature(lh.base, A), []).append(i)
        todo = [(i, j) for i, lh in enumerate(hs) for j in by_start.get(_signature(lax_target(lh), A), [])]
        if pairs:
            todo = todo[:: max(1, len(todo) // pairs)][:pairs]
        rep = report_from([], {"seed": seed, "words": len(ws), "pairs": len(todo)}, {})
        for i, j in todo:
            rep = rep.merge(omega_dual_check(strict[i], strict[j], ws), prefix=f"{i},{j}:")
        return _collapse(rep)

    rep, secs = _timed(run)
    return SuiteResult("omega dual computation", rep, secs)


def _signature(f, A) -> tuple:
    return tuple(f.phi(g) for g in A.G.elements()) + tuple(f.psi(e) for e in A.E.elements())


def _collapse(rep: VerificationReport) -> VerificationReport:
    """Sum per-pair counters into per-law counters."""
    checked: dict[str, int] = {}
    for k, v in rep.checked.items():
        law = k.split(":", 1)[-1]
        checked[law] = checked.get(law, 0) + v
    return VerificationReport(rep.passed, rep.failures, rep.probe, checked)


def groupoid(seed: int = 0, jobs: int = 1, max_triples: int = 3000, **_) -> SuiteResult:
    """2-groupoid laws on exact tables over every lax cell, plus the strict-side omega identities."""

    def run() -> VerificationReport:
        A, D, hs = _lax_cells(jobs)
        rep = lax_groupoid_report(hs, max_triples=max_triples, max_cells=len(hs) * len(D.L.elements()) ** 2,
                                  seed=seed)
        Q = q1(A)
        strict = [lax_to_strict(lh) for lh in hs]
        cells = [extend_2derivation(h, list(v)) for h in strict
                 for v in itertools.product(D.L.elements(), repeat=len(Q.points))]
        hom2 = build_hom2groupoid(Q.total, D, strict, cells)
        rep = rep.merge(hom2.laws(max_cells=60, seed=seed), prefix="strict:")
        ws = random_words(Q.free, 60, seed=seed)
        by_start: dict = {}
        for i, lh in enumerate(hs):
            by_start.setdefault(_signature(lh.base, A), []).append(i)
        for i, lh in enumerate(hs):
            for j in by_start.get(_signature(lax_target(lh), A), [])[:4]:
                rep = rep.merge(omega_identity_report(strict[i], strict[j], ws), prefix="omega:")
        rep.probe["cells"] = len(hs)
        rep.probe["twofold cells"] = len(cells)
        return rep

    rep, secs = _timed(run)
    return SuiteResult("2-groupoid laws", rep, secs, 300.0)


def counterexample(bound: int = 100, **_) -> SuiteResult:
    start = time.perf_counter()
    result = counterexample_report(bound)
    secs = time.perf_counter() - start
    failures = []
    if not result.forward.passed:
        failures += [("forward", w) for w in result.forward.failures]
    if not result.forward_target_trivial:
        failures.append(("forward-target", ()))
    if result.reverse_found:
        failures.append(("reverse-found", tuple(result.reverse_found)))
    if not result.analytic_blocks_reverse:
        failures.append(("analytic", ()))
    rep = report_from(failures, {"bound": bound}, {"forward": 1, "reverse-search": result.reverse_candidates,
                                                    "analytic": 1})
    return SuiteResult("counterexample", rep, secs, notes=tuple(result.lines()))


def bijection(seed: int = 0, jobs: int = 1, **_) -> SuiteResult:
    """Lax and strict acceptance agree on every tuple; every lax operation matches its strict image."""

    def run() -> VerificationReport:
        rep = bijection_report(jobs=jobs)
        A, D, hs = _lax_cells(jobs)
        by_start: dict = {}
        for i, lh in enumerate(hs):
            by_start.setdefault(_signature(lh.base, A), []).append(i)
        Ls = D.L.elements()
        tables = [dict(zip(A.G.elements(), v)) for v in itertools.product(Ls, repeat=len(A.G.elements()))]
        for i, lh in enumerate(hs):
            follow = by_start.get(_signature(lax_target(lh), A), [])
            j = follow[i % len(follow)]
            rep = rep.merge(correspondence_report(lh, hs[j], tables[i % len(tables)],
                                                  tables[(3 * i + 1) % len(tables)]), prefix="operations:")
        return _collapse(rep)

    rep, secs = _timed(run)
    return SuiteResult("strict/lax bijection", rep, secs)


def kernel(seed: int = 0, **_) -> SuiteResult:
    fx = fixtures()

    def run() -> VerificationReport:
        rep = kernel_relations_check(fx["fixC_Z2"], max_triples=10 ** 6, seed=seed)
        rep.probe["G=Z2"] = rep.probe.pop("mode")
        other = kernel_relations_check(fx["fixC_S3"], max_triples=500, seed=seed)
        rep = rep.merge(other, prefix="S3:")
        return rep

    rep, secs = _timed(run)
    return SuiteResult("kernel presentation relations", rep, secs)


def homotopy_group_suite(**_) -> SuiteResult:
    fx = fixtures()
    cases = [("fixB", fx["fixB"], ("1", "1", "1")), ("fixD", fx["fixD"], ("1", "Z2", "1"))]
    for G, label in ((CyclicGroup(2), "Z2"), (symmetric_group(3), "order 6")):
        cases.append((f"bottom_{G.name}", trivial_bottom(G), (label, "1", "1")))
    failures, checked, slowest = [], {}, 0.0
    probe = {}
    for name, A, expected in cases:
        start = time.perf_counter()
        got = homotopy_groups(A).describe()
        secs = time.perf_counter() - start
        slowest = max(slowest, secs)
        probe[name] = got
        checked[name] = 1
        if got != expected or secs > 1.0:
            failures.append((name, (got, expected, secs)))
    return SuiteResult("homotopy groups", report_from(failures, probe, checked), slowest, 1.0)


def identities(seed: int = 0, **_) -> SuiteResult:
    D = fixtures()["fixD"]

    def run() -> VerificationReport:
        rep = rnn_suite(D, exhaustive=True, seed=seed)
        rep = rep.merge(mnnbv_suite(D), prefix="derivations:")
        rep = rep.merge(lifted_action_special_cases(D), prefix="lifted:")
        rep = rep.merge(peiffer_pairing_check(D, max_tuples=10 ** 6, seed=seed), prefix="lifted:")
        return rep

    rep, secs = _timed(run)
    return SuiteResult("identity suites", rep, secs)


def mnnbv_suite(A) -> VerificationReport:
    """Every quadratic derivation of the identity of ``A`` with trivial ``s`` satisfies the Peiffer identity.

    Needs ``G`` trivial so that ``s`` is forced; ``t`` ranges over all tables ``E -> L``.
    """
    f = identity_morphism(A)
    Es, Ls = A.E.elements(), A.L.elements()
    s = lambda g: A.E.identity  # noqa: E731
    found, failures, checked = 0, [], 0
    for values in itertools.product(Ls, repeat=len(Es)):
        table = dict(zip(Es, values))
        rep = is_quadratic_derivation(f, s, table.__getitem__, max_tuples=10 ** 6, include_path_space=False,
                                      fail_fast=True)
        if rep.passed:
            found += 1
            checked += rep.checked.get("mnnbv", 0)
            continue
        if any(law != "mnnbv" for law in rep.failed_laws()):
            continue
        failures += rep.failures
    return report_from(failures, {"derivations": found}, {"mnnbv": checked})


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "axioms": axioms,
    "pathspace": pathspace,
    "oracles": oracles,
    "omega": omega,
    "groupoid": groupoid,
    "counterexample": counterexample,
    "bijection": bijection,
    "kernel": kernel,
    "homotopy-groups": homotopy_group_suite,
    "identities": identities,
}
