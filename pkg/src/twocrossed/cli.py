"""Command line: verification reports over the bundled corpus and user model files."""

from __future__ import annotations

import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import click

from .homotopy import (
    concat_homotopies,
    invert_homotopy,
    is_quadratic_derivation,
    omega_dual_check,
    random_words,
)
from .lax import (
    InvalidLaxData,
    NotStrictEndpoints,
    correspondence_report,
    is_lax_equivalence,
    kernel_relations_check,
    lax_concat,
    lax_invert,
    lax_target,
    lax_to_strict,
    lax_twofold_target,
    lax_validate,
    lax_vertical,
    lax_whisker_left,
    lax_whisker_right,
    q1_report,
    strict_side_accepts,
)
from .modelfile import ModelError, ModelFile, corpus, extend
from .pathspace import path_space, path_space_checks
from .suites import SUITES
from .xmod import VerificationReport, homotopy_groups, report_from, verify_two_crossed, xmod_map_verify


def _jsonable(x: Any) -> Any:
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return repr(x)


@dataclass
class Check:
    name: str
    report: VerificationReport

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.report.passed, "checked": self.report.checked,
                "failures": [{"law": law, "witness": _jsonable(w)} for law, w in self.report.failures[:20]],
                "probe": _jsonable(self.report.probe)}


@dataclass
class Report:
    command: str
    seed: int
    probes: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.report.passed for c in self.checks)

    def add(self, name: str, report: VerificationReport) -> None:
        self.checks.append(Check(name, report))

    def as_dict(self) -> dict:
        return {"command": self.command, "seed": self.seed, "probes": _jsonable(self.probes),
                "passed": self.passed, "checks": [c.as_dict() for c in self.checks], "notes": self.notes,
                "seconds": round(self.seconds, 4)}

    def text(self) -> str:
        lines = [f"command: {self.command}", f"seed: {self.seed}"]
        if self.probes:
            lines.append("probes: " + ", ".join(f"{k}={v}" for k, v in self.probes.items()))
        for c in self.checks:
            status = "PASS" if c.report.passed else "FAIL"
            total = sum(c.report.checked.values())
            lines.append(f"{status} {c.name} ({len(c.report.checked)} laws, {total} cases)")
            for law, w in c.report.failures[:5]:
                lines.append(f"    {law}: {w!r}")
        lines += [f"note: {n}" for n in self.notes]
        lines.append(f"result: {'pass' if self.passed else 'FAIL'} in {self.seconds:.2f} s")
        return "\n".join(lines)


@dataclass
class Context:
    model: ModelFile
    seed: int
    depth: int
    samples: int
    fmt: str
    jobs: int


def _finish(ctx: Context, report: Report, start: float) -> None:
    report.seconds = time.perf_counter() - start
    report.probes.setdefault("depth", ctx.depth)
    report.probes.setdefault("samples", ctx.samples)
    if ctx.fmt == "json":
        click.echo(json.dumps(report.as_dict(), indent=2))
    else:
        click.echo(report.text())
    sys.exit(0 if report.passed else 1)


def _lookup(ctx: Context, table: str, name: str) -> Any:
    try:
        return ctx.model.lookup(table, name)
    except ModelError as exc:
        raise click.ClickException(str(exc)) from None


def _command(ctx: click.Context) -> str:
    return " ".join([ctx.command_path.split(" ", 1)[-1]] + [str(a) for a in ctx.params.values() if a is not None])


@click.group()
@click.option("--model", "model_path", type=click.Path(exists=True, dir_okay=False),
              help="Model file whose sections extend the bundled corpus.")
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--probe-depth", default=2, show_default=True, type=int)
@click.option("--samples", default=100, show_default=True, type=int)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--jobs", default=1, show_default=True, type=int)
@click.pass_context
def main(ctx: click.Context, model_path: str | None, seed: int, probe_depth: int, samples: int, fmt: str,
         jobs: int) -> None:
    """Check 2-crossed modules, their homotopies and lax homotopies."""
    try:
        model = extend(corpus(), Path(model_path).read_text()) if model_path else corpus()
    except ModelError as exc:
        raise click.ClickException(f"{model_path}: {exc}") from None
    ctx.obj = Context(model, seed, probe_depth, samples, fmt, jobs)


@main.command()
@click.argument("xmod")
@click.pass_context
def verify(ctx: click.Context, xmod: str) -> None:
    """Axioms of a 2-crossed module (exhaustive when finite)."""
    c: Context = ctx.obj
    start = time.perf_counter()
    A = _lookup(c, "xmods", xmod)
    rep = Report(_command(ctx), c.seed)
    result = verify_two_crossed(A, seed=c.seed)
    rep.probes["mode"] = result.probe.get("mode")
    rep.add("axioms", result)
    _finish(c, rep, start)


@main.command()
@click.argument("xmod")
@click.pass_context
def pi(ctx: click.Context, xmod: str) -> None:
    """Homotopy groups pi1, pi2, pi3."""
    c: Context = ctx.obj
    start = time.perf_counter()
    A = _lookup(c, "xmods", xmod)
    rep = Report(_command(ctx), c.seed)
    groups = homotopy_groups(A).describe()
    rep.add("homotopy-groups", report_from([], {"pi1": groups[0], "pi2": groups[1], "pi3": groups[2]},
                                           {"computed": 1}))
    rep.notes.append(f"pi1 = {groups[0]}, pi2 = {groups[1]}, pi3 = {groups[2]}")
    _finish(c, rep, start)


@main.command()
@click.argument("xmod")
@click.pass_context
def pathspace(ctx: click.Context, xmod: str) -> None:
    """Axioms of the path space and its endpoint maps."""
    c: Context = ctx.obj
    start = time.perf_counter()
    A = _lookup(c, "xmods", xmod)
    rep = Report(_command(ctx), c.seed)
    P = path_space(A)
    rep.add("path-space axioms", verify_two_crossed(P.total, seed=c.seed))
    rep.add("endpoints", path_space_checks(A, seed=c.seed))
    for name, f in (("pr0", P.pr0), ("pr1", P.pr1), ("incl", P.incl)):
        rep.add(f"{name} is a morphism", xmod_map_verify(f, seed=c.seed))
    _finish(c, rep, start)


@main.command(name="q1")
@click.argument("xmod")
@click.pass_context
def q1_command(ctx: click.Context, xmod: str) -> None:
    """The free resolution of the bottom group and its kernel relations."""
    c: Context = ctx.obj
    start = time.perf_counter()
    A = _lookup(c, "xmods", xmod)
    rep = Report(_command(ctx), c.seed)
    rep.add("q1 axioms and projection", q1_report(A, seed=c.seed))
    rep.add("kernel relations", kernel_relations_check(A, seed=c.seed))
    _finish(c, rep, start)


def _strict(c: Context, name: str):
    """A strict homotopy by name; lax cells are taken through their strict image."""
    if name in c.model.homotopies:
        return c.model.homotopies[name]
    lh = _lookup(c, "lax", name)
    return lax_to_strict(lh)


def _probe_kwargs(c: Context) -> dict:
    return {"depth": c.depth, "samples": c.samples, "seed": c.seed}


@main.group()
def homotopy() -> None:
    """Quadratic derivations between strict maps."""


@homotopy.command(name="check")
@click.argument("name")
@click.pass_context
def homotopy_check(ctx: click.Context, name: str) -> None:
    c: Context = ctx.obj
    start = time.perf_counter()
    h = _strict(c, name)
    rep = Report(_command(ctx), c.seed)
    rep.add("quadratic derivation", is_quadratic_derivation(h.base, h.s, h.t, **_probe_kwargs(c)))
    _finish(c, rep, start)


@homotopy.command(name="compose")
@click.argument("first")
@click.argument("second")
@click.pass_context
def homotopy_compose(ctx: click.Context, first: str, second: str) -> None:
    c: Context = ctx.obj
    start = time.perf_counter()
    h1, h2 = _strict(c, first), _strict(c, second)
    rep = Report(_command(ctx), c.seed)
    try:
        h = concat_homotopies(h1, h2)
    except Exception as exc:
        raise click.ClickException(str(exc)) from None
    words = random_words(h.base.source.G, c.samples, seed=c.seed)
    rep.add("omega dual computation", omega_dual_check(h1, h2, words))
    rep.add("composite", is_quadratic_derivation(h.base, h.s, h.t, **_probe_kwargs(c)))
    _finish(c, rep, start)


@homotopy.command(name="invert")
@click.argument("name")
@click.pass_context
def homotopy_invert(ctx: click.Context, name: str) -> None:
    c: Context = ctx.obj
    start = time.perf_counter()
    h = _strict(c, name)
    rep = Report(_command(ctx), c.seed)
    try:
        inv = invert_homotopy(h)
    except Exception as exc:
        raise click.ClickException(str(exc)) from None
    rep.add("inverse", is_quadratic_derivation(inv.base, inv.s, inv.t, **_probe_kwargs(c)))
    _finish(c, rep, start)


@homotopy.command(name="laws")
@click.pass_context
def homotopy_laws(ctx: click.Context) -> None:
    """The 2-groupoid laws over every lax cell of the corpus."""
    ctx.invoke(laws, suite="groupoid")


@main.group()
def twofold() -> None:
    """2-fold homotopies given as lax tables."""


def _twofold_report(ctx: click.Context, names: list[str], build) -> None:
    c: Context = ctx.obj
    start = time.perf_counter()
    ks = [_lookup(c, "twofolds", n) for n in names]
    rep = Report(_command(ctx), c.seed)
    try:
        lh = build(*ks)
    except (NotStrictEndpoints, InvalidLaxData) as exc:
        raise click.ClickException(str(exc)) from None
    rep.add("resulting homotopy", lax_validate(lh.base, lh.s_hat, lh.t_hat, lh.Pi))
    _finish(c, rep, start)


@twofold.command(name="check")
@click.argument("name")
@click.pass_context
def twofold_check(ctx: click.Context, name: str) -> None:
    c: Context = ctx.obj
    start = time.perf_counter()
    k = _lookup(c, "twofolds", name)
    rep = Report(_command(ctx), c.seed)
    top = lax_twofold_target(k)
    rep.add("base", lax_validate(k.base.base, k.base.s_hat, k.base.t_hat, k.base.Pi))
    rep.add("target", lax_validate(top.base, top.s_hat, top.t_hat, top.Pi))
    rep.add("correspondence", correspondence_report(k.base, None, k.k_hat))
    _finish(c, rep, start)


@twofold.command(name="target")
@click.argument("name")
@click.pass_context
def twofold_target_command(ctx: click.Context, name: str) -> None:
    _twofold_report(ctx, [name], lax_twofold_target)


@twofold.command(name="compose")
@click.argument("first")
@click.argument("second")
@click.pass_context
def twofold_compose(ctx: click.Context, first: str, second: str) -> None:
    _twofold_report(ctx, [first, second], lambda a, b: lax_twofold_target(lax_vertical(a, b)))


@twofold.command(name="whisker")
@click.argument("name")
@click.argument("homotopy_name")
@click.option("--side", type=click.Choice(["left", "right"]), default="right", show_default=True)
@click.pass_context
def twofold_whisker(ctx: click.Context, name: str, homotopy_name: str, side: str) -> None:
    c: Context = ctx.obj
    u = _lookup(c, "lax", homotopy_name)
    if side == "right":
        _twofold_report(ctx, [name], lambda k: lax_twofold_target(lax_whisker_right(k, u)))
    else:
        _twofold_report(ctx, [name], lambda k: lax_twofold_target(lax_whisker_left(u, k)))


@main.group()
def lax() -> None:
    """Lax homotopies ``(s, t, Pi)`` between maps of finite modules."""


def _lax_checks(rep: Report, lh) -> None:
    rep.add(f"lax {lh.name}", lax_validate(lh.base, lh.s_hat, lh.t_hat, lh.Pi))


@lax.command(name="check")
@click.argument("name")
@click.pass_context
def lax_check(ctx: click.Context, name: str) -> None:
    c: Context = ctx.obj
    start = time.perf_counter()
    lh = _lookup(c, "lax", name)
    rep = Report(_command(ctx), c.seed)
    _lax_checks(rep, lh)
    rep.add("strict image", strict_side_accepts(lh, seed=c.seed, fail_fast=False))
    _finish(c, rep, start)


@lax.command(name="target")
@click.argument("name")
@click.pass_context
def lax_target_command(ctx: click.Context, name: str) -> None:
    c: Context = ctx.obj
    start = time.perf_counter()
    lh = _lookup(c, "lax", name)
    rep = Report(_command(ctx), c.seed)
    _lax_checks(rep, lh)
    f = lax_target(lh)
    A = lh.source
    rep.add("target is a morphism", xmod_map_verify(f, seed=c.seed))
    rep.notes.append("phi: " + ", ".join(f"{A.G.label(g)}->{f.target.G.label(f.phi(g))}" for g in A.G.elements()))
    rep.notes.append("psi: " + ", ".join(f"{A.E.label(e)}->{f.target.E.label(f.psi(e))}" for e in A.E.elements()))
    _finish(c, rep, start)


@lax.command(name="compose")
@click.argument("first")
@click.argument("second")
@click.pass_context
def lax_compose(ctx: click.Context, first: str, second: str) -> None:
    c: Context = ctx.obj
    start = time.perf_counter()
    a, b = _lookup(c, "lax", first), _lookup(c, "lax", second)
    rep = Report(_command(ctx), c.seed)
    try:
        lh = lax_concat(a, b)
    except NotStrictEndpoints as exc:
        raise click.ClickException(str(exc)) from None
    _lax_checks(rep, lh)
    rep.add("agrees with strict composite", correspondence_report(a, b))
    _finish(c, rep, start)


@lax.command(name="invert")
@click.argument("name")
@click.pass_context
def lax_invert_command(ctx: click.Context, name: str) -> None:
    c: Context = ctx.obj
    start = time.perf_counter()
    a = _lookup(c, "lax", name)
    rep = Report(_command(ctx), c.seed)
    _lax_checks(rep, lax_invert(a))
    rep.add("agrees with strict inverse", correspondence_report(a))
    _finish(c, rep, start)


@lax.command(name="equiv")
@click.argument("forward")
@click.argument("backward")
@click.option("--source-witness", default=None, help="Lax homotopy id -> backward∘forward.")
@click.option("--target-witness", default=None, help="Lax homotopy id -> forward∘backward.")
@click.option("--limit", default=30_000, show_default=True, type=int)
@click.pass_context
def lax_equiv(ctx: click.Context, forward: str, backward: str, source_witness: str | None,
              target_witness: str | None, limit: int) -> None:
    c: Context = ctx.obj
    start = time.perf_counter()
    f, g = _lookup(c, "morphisms", forward), _lookup(c, "morphisms", backward)
    w1 = _lookup(c, "lax", source_witness) if source_witness else None
    w2 = _lookup(c, "lax", target_witness) if target_witness else None
    rep = Report(_command(ctx), c.seed)
    try:
        result = is_lax_equivalence(f, g, w1, w2, limit=limit)
    except NotStrictEndpoints as exc:
        raise click.ClickException(str(exc)) from None
    rep.add("lax homotopy equivalence", result)
    rep.notes += [f"{k}: {v}" for k, v in result.probe.items()]
    _finish(c, rep, start)


@main.command()
@click.argument("suite", type=click.Choice(sorted(SUITES)))
@click.pass_context
def laws(ctx: click.Context, suite: str) -> None:
    """Run a named law suite."""
    c: Context = ctx.obj
    start = time.perf_counter()
    rep = Report(f"laws {suite}", c.seed)
    result = SUITES[suite](seed=c.seed, jobs=c.jobs)
    rep.add(result.name, result.report)
    if not result.within_time:
        rep.add("time limit", report_from([("time", (result.seconds, result.limit))], {}, {"time": 1}))
    rep.notes += list(result.notes)
    _finish(c, rep, start)


@main.command()
@click.option("--bound", default=100, show_default=True, type=int)
@click.pass_context
def counterexample(ctx: click.Context, bound: int) -> None:
    """The forward homotopy between the asymmetric pair exists; no reverse one does."""
    c: Context = ctx.obj
    start = time.perf_counter()
    result = SUITES["counterexample"](bound=bound)
    rep = Report(_command(ctx), c.seed)
    rep.add(result.name, result.report)
    rep.notes += list(result.notes)
    _finish(c, rep, start)


if __name__ == "__main__":
    main()
