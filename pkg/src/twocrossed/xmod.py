"""Pre-crossed, crossed and 2-crossed modules, their morphisms and law suites.

Law checking runs in one of two modes.  When every carrier is finite and
small, the module is tabulated into numpy arrays and each law is evaluated
over the whole grid of tuples at once.  Otherwise each law is evaluated
element by element on the groups' probe sets, falling back to a seeded
sample when the probe product is too large.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from functools import reduce
from typing import Any, Callable, Sequence

import numpy as np

from .groups import (
    CyclicGroup,
    Element,
    Group,
    GroupError,
    Homomorphism,
    IntegerGroup,
    QuotientGroup,
    Subgroup,
    TabulatedGroup,
    bounded_product,
    check_action,
    identity_hom,
    subgroup_closure,
)


class NotComputable(GroupError):
    pass


@dataclass
class VerificationReport:
    """Outcome of a law suite: ``failures`` holds ``(law-id, witness)`` pairs."""

    passed: bool
    failures: list[tuple[str, tuple]] = field(default_factory=list)
    probe: dict[str, Any] = field(default_factory=dict)
    checked: dict[str, int] = field(default_factory=dict)

    def merge(self, other: "VerificationReport", prefix: str = "") -> "VerificationReport":
        failures = self.failures + [(prefix + law, w) for law, w in other.failures]
        checked = dict(self.checked)
        checked.update({prefix + k: v for k, v in other.checked.items()})
        probe = dict(self.probe)
        for k, v in other.probe.items():
            probe.setdefault(prefix + k if k in probe else k, v)
        return VerificationReport(not failures, failures, probe, checked)

    def failed_laws(self) -> list[str]:
        return list(dict.fromkeys(law for law, _ in self.failures))

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        laws = ", ".join(self.failed_laws())
        return f"{status} ({len(self.checked)} laws{'; failing: ' + laws if laws else ''})"


def report_from(failures: list[tuple[str, tuple]], probe: dict | None = None,
                checked: dict | None = None) -> VerificationReport:
    return VerificationReport(not failures, list(failures), dict(probe or {}), dict(checked or {}))


@dataclass(frozen=True)
class PreCrossedModule:
    E: Group
    G: Group
    boundary: Homomorphism
    act: Callable[[Element, Element], Element]
    name: str = "pcm"

    def peiffer(self, x: Element, y: Element) -> Element:
        return peiffer_commutator(self, x, y)

    def failures(self, max_tuples: int = 20000, seed: int = 0) -> list[tuple[str, tuple]]:
        rng = random.Random(seed)
        out = [("action-" + law, w) for law, w in check_action(self.G, self.E, self.act, max_tuples, rng)]
        for g, e in bounded_product([self.G.probe(), self.E.probe()], max_tuples, rng):
            if self.boundary(self.act(g, e)) != self.G.conj(g, self.boundary(e)):
                out.append(("first-peiffer", (g, e)))
        return out


@dataclass(frozen=True)
class CrossedModule(PreCrossedModule):
    def failures(self, max_tuples: int = 20000, seed: int = 0) -> list[tuple[str, tuple]]:
        out = super().failures(max_tuples, seed)
        rng = random.Random(seed)
        xs = self.E.probe()
        for x, y in bounded_product([xs, xs], max_tuples, rng):
            if self.act(self.boundary(x), y) != self.E.conj(x, y):
                out.append(("second-peiffer", (x, y)))
        return out


def verify_crossed(cm: PreCrossedModule, max_tuples: int = 20000, seed: int = 0) -> VerificationReport:
    """Both Peiffer relations and the action laws on probes."""
    failures = CrossedModule.failures(cm, max_tuples, seed)
    if cm.E.is_finite:
        one = cm.G.identity
        kernel = [x for x in cm.E.elements() if cm.boundary(x) == one]
        failures += [("kernel-central", (k, x)) for k in kernel for x in cm.E.probe()
                     if cm.E.mul(k, x) != cm.E.mul(x, k)]
    return report_from(failures, {"seed": seed})


def peiffer_commutator(pcm: Any, x: Element, y: Element) -> Element:
    """``x y x^-1 (∂x ▷ y^-1)``; works for pre-crossed and 2-crossed modules."""
    E = pcm.E
    act = pcm.act if isinstance(pcm, PreCrossedModule) else pcm.act_E
    return E.mul(E.conj(x, y), act(pcm.boundary(x), E.inv(y)))


@dataclass(frozen=True)
class TwoCrossedModule:
    """A complex ``L --delta--> E --boundary--> G`` with G-actions and a Peiffer lifting."""

    L: Group
    E: Group
    G: Group
    delta: Homomorphism
    boundary: Homomorphism
    act_E: Callable[[Element, Element], Element]
    act_L: Callable[[Element, Element], Element]
    lifting: Callable[[Element, Element], Element]
    name: str = "A"

    def secondary_action(self, e: Element, l: Element) -> Element:
        return secondary_action(self, e, l)

    def peiffer(self, x: Element, y: Element) -> Element:
        return peiffer_commutator(self, x, y)

    def underlying_precrossed(self) -> PreCrossedModule:
        return PreCrossedModule(self.E, self.G, self.boundary, self.act_E, self.name)

    def secondary_crossed(self) -> PreCrossedModule:
        """``delta: L -> E`` with the secondary action."""
        return CrossedModule(self.L, self.E, self.delta, self.secondary_action, self.name + "'")

    def is_finite(self) -> bool:
        return self.L.is_finite and self.E.is_finite and self.G.is_finite

    def sizes(self) -> tuple[int, int, int] | None:
        if not self.is_finite():
            return None
        return (len(self.L.elements()), len(self.E.elements()), len(self.G.elements()))

    def __repr__(self) -> str:
        return f"<TwoCrossedModule {self.name}>"


def secondary_action(A: TwoCrossedModule, e: Element, l: Element) -> Element:
    """``e ▷' l = l {δ(l)^-1, e}``."""
    return A.L.mul(l, A.lifting(A.E.inv(A.delta(l)), e))


@dataclass(frozen=True)
class XModMorphism:
    """``(mu, psi, phi)`` between 2-crossed modules."""

    source: TwoCrossedModule
    target: TwoCrossedModule
    mu: Callable[[Element], Element]
    psi: Callable[[Element], Element]
    phi: Callable[[Element], Element]
    name: str = "f"

    def compose(self, inner: "XModMorphism") -> "XModMorphism":
        """``self ∘ inner``."""
        mu, psi, phi = self.mu, self.psi, self.phi
        imu, ipsi, iphi = inner.mu, inner.psi, inner.phi
        return XModMorphism(inner.source, self.target,
                            lambda l: mu(imu(l)), lambda e: psi(ipsi(e)), lambda g: phi(iphi(g)),
                            f"{self.name}.{inner.name}")

    def __repr__(self) -> str:
        return f"<XModMorphism {self.name}: {self.source.name} -> {self.target.name}>"


def identity_morphism(A: TwoCrossedModule) -> XModMorphism:
    ident = lambda x: x  # noqa: E731
    return XModMorphism(A, A, ident, ident, ident, f"id_{A.name}")


def trivial_morphism(A: TwoCrossedModule, B: TwoCrossedModule) -> XModMorphism:
    l1, e1, g1 = B.L.identity, B.E.identity, B.G.identity
    return XModMorphism(A, B, lambda l: l1, lambda e: e1, lambda g: g1, "1")


# ---------------------------------------------------------------------------
# law-checking machinery


class GenericOps:
    """Operations of a 2-crossed module on raw payloads."""

    tabulated = False

    def __init__(self, A: TwoCrossedModule):
        self.A = A
        L, E, G = A.L, A.E, A.G
        self.L1, self.E1, self.G1 = L.identity, E.identity, G.identity
        self._L, self._E, self._G = L, E, G
        self.d = A.delta
        self.b = A.boundary
        self.aE = A.act_E
        self.aL = A.act_L
        self.lift = A.lifting

    def Lm(self, *xs):
        return reduce(self._L.mul, xs, self.L1)

    def Em(self, *xs):
        return reduce(self._E.mul, xs, self.E1)

    def Gm(self, *xs):
        return reduce(self._G.mul, xs, self.G1)

    def Li(self, x):
        return self._L.inv(x)

    def Ei(self, x):
        return self._E.inv(x)

    def Gi(self, x):
        return self._G.inv(x)

    def sec(self, e, l):
        return self.Lm(l, self.lift(self.Ei(self.d(l)), e))

    def peif(self, x, y):
        return self.Em(x, y, self.Ei(x), self.aE(self.b(x), self.Ei(y)))

    def Econj(self, x, y):
        return self.Em(x, y, self.Ei(x))

    def Lconj(self, x, y):
        return self.Lm(x, y, self.Li(x))

    def Gconj(self, x, y):
        return self.Gm(x, y, self.Gi(x))


@dataclass
class TableXMod:
    """A finite 2-crossed module re-indexed as integer arrays."""

    source: TwoCrossedModule
    L: TabulatedGroup
    E: TabulatedGroup
    G: TabulatedGroup
    delta: np.ndarray
    boundary: np.ndarray
    act_E: np.ndarray
    act_L: np.ndarray
    lifting: np.ndarray


def tabulate_xmod(A: TwoCrossedModule) -> TableXMod:
    L, E, G = TabulatedGroup(A.L), TabulatedGroup(A.E), TabulatedGroup(A.G)
    delta = np.array([E.encode[A.delta(l)] for l in L.decode], dtype=np.int64)
    boundary = np.array([G.encode[A.boundary(e)] for e in E.decode], dtype=np.int64)
    act_E = np.array([[E.encode[A.act_E(g, e)] for e in E.decode] for g in G.decode], dtype=np.int64)
    act_L = np.array([[L.encode[A.act_L(g, l)] for l in L.decode] for g in G.decode], dtype=np.int64)
    lifting = np.array([[L.encode[A.lifting(e, f)] for f in E.decode] for e in E.decode], dtype=np.int64)
    return TableXMod(A, L, E, G, delta, boundary, act_E, act_L, lifting)


class TableOps(GenericOps):
    """Same interface as :class:`GenericOps`, vectorised over numpy index arrays."""

    tabulated = True

    def __init__(self, T: TableXMod):
        self.T = T
        self.L1, self.E1, self.G1 = T.L.identity, T.E.identity, T.G.identity
        self._Lmul, self._Emul, self._Gmul = T.L.mul_array, T.E.mul_array, T.G.mul_array
        self._Linv, self._Einv, self._Ginv = T.L.inv_array, T.E.inv_array, T.G.inv_array
        self._d, self._b = T.delta, T.boundary
        self._aE, self._aL, self._lift = T.act_E, T.act_L, T.lifting

    def Lm(self, *xs):
        return reduce(lambda a, b: self._Lmul[a, b], xs, self.L1)

    def Em(self, *xs):
        return reduce(lambda a, b: self._Emul[a, b], xs, self.E1)

    def Gm(self, *xs):
        return reduce(lambda a, b: self._Gmul[a, b], xs, self.G1)

    def Li(self, x):
        return self._Linv[x]

    def Ei(self, x):
        return self._Einv[x]

    def Gi(self, x):
        return self._Ginv[x]

    def d(self, x):
        return self._d[x]

    def b(self, x):
        return self._b[x]

    def aE(self, g, e):
        return self._aE[g, e]

    def aL(self, g, l):
        return self._aL[g, l]

    def lift(self, e, f):
        return self._lift[e, f]


GRID_LIMIT = 2_000_000
DEFAULT_MAX_TUPLES = 20_000
TABULATE_LIMIT = 2_000


class LawChecker:
    """Evaluates named laws quantified over the carriers ``L``, ``E`` and ``G``.

    ``check("id", "GEE", pred)`` quantifies ``pred(g, e, f)`` over G x E x E.
    """

    def __init__(self, A: TwoCrossedModule, *, exhaustive: bool | None = None,
                 max_tuples: int = DEFAULT_MAX_TUPLES, seed: int = 0,
                 max_witnesses: int = 5, table: TableXMod | None = None):
        self.A = A
        self.seed = seed
        self.rng = random.Random(seed)
        self.max_tuples = max_tuples
        self.max_witnesses = max_witnesses
        sizes = A.sizes() if A.is_finite() else None
        if exhaustive is None:
            exhaustive = sizes is not None and max(sizes) <= TABULATE_LIMIT
        if exhaustive and sizes is None:
            raise NotComputable(f"{A.name} has infinite carriers; exhaustive checking impossible")
        self.exhaustive = exhaustive
        if exhaustive:
            self.table = table or tabulate_xmod(A)
            self.ops: GenericOps = TableOps(self.table)
            self.domains = {"L": np.arange(len(self.table.L.decode)),
                            "E": np.arange(len(self.table.E.decode)),
                            "G": np.arange(len(self.table.G.decode))}
            self.decoders = {"L": self.table.L.decode, "E": self.table.E.decode, "G": self.table.G.decode}
        else:
            self.table = None
            self.ops = GenericOps(A)
            self.domains = {"L": A.L.probe(), "E": A.E.probe(), "G": A.G.probe()}
            self.decoders = None
        self.failures: list[tuple[str, tuple]] = []
        self.checked: dict[str, int] = {}
        self.sampled: set[str] = set()

    def check(self, law: str, kinds: str, predicate: Callable[..., Any]) -> None:
        doms = [self.domains[k] for k in kinds]
        if self.exhaustive:
            self._check_grid(law, kinds, doms, predicate)
        else:
            self._check_probe(law, kinds, doms, predicate)

    def _check_grid(self, law, kinds, doms, predicate):
        total = math.prod(len(d) for d in doms)
        found = 0
        if total <= GRID_LIMIT or len(doms) == 1:
            chunks = [(None, doms)]
        else:
            chunks = [(int(x), doms[1:]) for x in doms[0]]
        for head, rest in chunks:
            grids = np.meshgrid(*rest, indexing="ij") if rest else []
            flat = [g.ravel() for g in grids]
            args = flat if head is None else [head] + flat
            ok = np.broadcast_to(np.asarray(predicate(*args)), flat[0].shape if flat else ())
            bad = np.flatnonzero(~ok)
            for idx in bad[: max(0, self.max_witnesses - found)]:
                raw = [a if np.ndim(a) == 0 else a[idx] for a in args]
                witness = tuple(self.decoders[k][int(v)] for k, v in zip(kinds, raw))
                self.failures.append((law, witness))
            found += len(bad)
        self.checked[law] = total

    def _check_probe(self, law, kinds, doms, predicate):
        total = math.prod(len(d) for d in doms)
        if total > self.max_tuples:
            self.sampled.add(law)
        count = 0
        found = 0
        for args in bounded_product(doms, self.max_tuples, self.rng):
            count += 1
            if not predicate(*args):
                if found < self.max_witnesses:
                    self.failures.append((law, tuple(args)))
                found += 1
        self.checked[law] = count

    def report(self, **extra) -> VerificationReport:
        probe = {
            "mode": "exhaustive" if self.exhaustive else "probe",
            "seed": self.seed,
            "sizes": {k: len(v) for k, v in self.domains.items()},
        }
        if self.sampled:
            probe["sampled_laws"] = sorted(self.sampled)
            probe["max_tuples"] = self.max_tuples
        probe.update(extra)
        return report_from(self.failures, probe, self.checked)


def _axiom_laws(c: LawChecker) -> None:
    o = c.ops
    c.check("delta-homomorphism", "LL", lambda l, k: o.d(o.Lm(l, k)) == o.Em(o.d(l), o.d(k)))
    c.check("boundary-homomorphism", "EE", lambda e, f: o.b(o.Em(e, f)) == o.Gm(o.b(e), o.b(f)))
    for target, act, mul in (("E", o.aE, o.Em), ("L", o.aL, o.Lm)):
        c.check(f"action-{target}-unit", target, lambda x, act=act: act(o.G1, x) == x)
        c.check(f"action-{target}-composition", "GG" + target,
                lambda g, h, x, act=act: act(o.Gm(g, h), x) == act(g, act(h, x)))
        c.check(f"action-{target}-automorphism", "G" + target * 2,
                lambda g, x, y, act=act, mul=mul: act(g, mul(x, y)) == mul(act(g, x), act(g, y)))
    c.check("complex", "L", lambda l: o.b(o.d(l)) == o.G1)
    c.check("delta-equivariant", "GL", lambda g, l: o.d(o.aL(g, l)) == o.aE(g, o.d(l)))
    c.check("boundary-equivariant", "GE", lambda g, e: o.b(o.aE(g, e)) == o.Gconj(g, o.b(e)))
    c.check("lifting-equivariant", "GEE",
            lambda g, e, f: o.aL(g, o.lift(e, f)) == o.lift(o.aE(g, e), o.aE(g, f)))
    c.check("lifting-lifts-peiffer", "EE", lambda e, f: o.d(o.lift(e, f)) == o.peif(e, f))
    c.check("lifting-on-boundaries", "LL",
            lambda l, k: o.Lm(l, k, o.Li(l), o.Li(k)) == o.lift(o.d(l), o.d(k)))
    c.check("lifting-symmetrised", "LE",
            lambda l, e: o.Lm(o.lift(o.d(l), e), o.lift(e, o.d(l)))
            == o.Lm(l, o.aL(o.b(e), o.Li(l))))
    c.check("lifting-left-product", "EEE",
            lambda e, f, g: o.lift(o.Em(e, f), g)
            == o.Lm(o.lift(e, o.Econj(f, g)), o.aL(o.b(e), o.lift(f, g))))
    c.check("lifting-right-product", "EEE",
            lambda e, f, g: o.lift(e, o.Em(f, g))
            == o.Lm(o.lift(e, f), o.sec(o.aE(o.b(e), f), o.lift(e, g))))


def verify_two_crossed(A: TwoCrossedModule, *, exhaustive: bool | None = None,
                       max_tuples: int = DEFAULT_MAX_TUPLES, seed: int = 0) -> VerificationReport:
    """Check the 2-crossed module axioms; exhaustive for small finite carriers."""
    c = LawChecker(A, exhaustive=exhaustive, max_tuples=max_tuples, seed=seed)
    _axiom_laws(c)
    return c.report()


def _rnn_laws(c: LawChecker) -> None:
    o = c.ops
    c.check("lift-right-unit", "E", lambda e: o.lift(e, o.E1) == o.L1)
    c.check("lift-left-unit", "E", lambda e: o.lift(o.E1, e) == o.L1)
    c.check("secondary-equivariant", "GEL",
            lambda a, e, k: o.aL(a, o.sec(e, k)) == o.sec(o.aE(a, e), o.aL(a, k)))
    c.check("lift-left-product-secondary", "EEE",
            lambda e, f, g: o.lift(o.Em(e, f), g)
            == o.Lm(o.sec(e, o.lift(f, g)), o.lift(e, o.aE(o.b(f), g))))
    c.check("lift-right-product-secondary", "EEE",
            lambda e, f, g: o.lift(e, o.Em(f, g))
            == o.Lm(o.sec(o.Econj(e, f), o.lift(e, g)), o.lift(e, f)))
    c.check("lift-inverse-conjugate", "EE",
            lambda e, f: o.Li(o.lift(e, f)) == o.aL(o.b(e), o.lift(o.Ei(e), o.Econj(e, f))))
    c.check("lift-inverse-secondary-conjugate", "EE",
            lambda e, f: o.Li(o.lift(e, f)) == o.sec(o.Econj(e, f), o.lift(e, o.Ei(f))))
    c.check("lift-inverse-secondary-boundary", "EE",
            lambda e, f: o.Li(o.lift(e, f)) == o.sec(o.aE(o.b(e), f), o.lift(e, o.Ei(f))))
    c.check("lift-inverse-secondary-self", "EE",
            lambda e, f: o.Li(o.lift(e, f)) == o.sec(e, o.lift(o.Ei(e), o.aE(o.b(e), f))))
    c.check("secondary-via-lift", "EL",
            lambda e, l: o.sec(e, l) == o.Lm(o.Li(o.lift(o.d(l), e)), l))
    c.check("boundary-action-via-secondary", "EL",
            lambda e, l: o.aL(o.b(e), l) == o.Lm(o.sec(e, l), o.lift(e, o.Ei(o.d(l)))))
    c.check("boundary-action-via-secondary-inverse", "EL",
            lambda e, l: o.aL(o.b(e), l) == o.Lm(o.Li(o.lift(e, o.d(l))), o.sec(e, l)))
    c.check("secondary-inverse", "EL",
            lambda e, l: o.Li(o.sec(e, l)) == o.sec(e, o.Li(l)))
    c.check("secondary-inverse-via-lift", "EL",
            lambda e, l: o.Li(o.sec(e, l)) == o.Lm(o.Li(l), o.lift(o.d(l), e)))
    c.check("secondary-on-lift", "EEE",
            lambda a, b, x: o.sec(a, o.lift(b, x))
            == o.Lm(o.aL(o.b(a), o.lift(b, x)), o.Li(o.lift(a, o.Ei(o.peif(b, x))))))
    c.check("secondary-action-composition", "EEL",
            lambda e, f, l: o.sec(o.Em(e, f), l) == o.sec(e, o.sec(f, l)))
    c.check("secondary-action-automorphism", "ELL",
            lambda e, l, k: o.sec(e, o.Lm(l, k)) == o.Lm(o.sec(e, l), o.sec(e, k)))
    c.check("secondary-first-peiffer", "EL",
            lambda e, l: o.d(o.sec(e, l)) == o.Econj(e, o.d(l)))
    c.check("secondary-second-peiffer", "LL",
            lambda l, k: o.sec(o.d(l), k) == o.Lconj(l, k))


def rnn_suite(A: TwoCrossedModule, *, exhaustive: bool | None = None,
              max_tuples: int = DEFAULT_MAX_TUPLES, seed: int = 0) -> VerificationReport:
    """Derived identities of the Peiffer lifting and the secondary action."""
    c = LawChecker(A, exhaustive=exhaustive, max_tuples=max_tuples, seed=seed)
    _rnn_laws(c)
    return c.report()


def peiffer_lift_from_precrossed(pcm: PreCrossedModule, name: str | None = None) -> TwoCrossedModule:
    """The 2-crossed module ``P -> E -> G`` with ``P`` the Peiffer subgroup and lifting ``⟨,⟩``."""
    E = pcm.E
    if not E.is_finite:
        from .groups import NotEnumerable

        raise NotEnumerable(f"{E.name} is not enumerable")
    elems = E.elements()
    L = subgroup_closure(E, [peiffer_commutator(pcm, a, b) for a in elems for b in elems],
                         name=f"P({E.name})")
    delta = Homomorphism(L, E, lambda l: l, "incl")
    return TwoCrossedModule(
        L=L, E=E, G=pcm.G, delta=delta, boundary=pcm.boundary,
        act_E=pcm.act, act_L=pcm.act,
        lifting=lambda a, b: peiffer_commutator(pcm, a, b),
        name=name or f"peiffer({pcm.name})",
    )


def xmod_map_verify(f: XModMorphism, *, max_tuples: int = DEFAULT_MAX_TUPLES,
                    seed: int = 0) -> VerificationReport:
    """Homomorphism, chain-map, equivariance and lifting conditions on probes."""
    A, B = f.source, f.target
    rng = random.Random(seed)
    Ls, Es, Gs = _domain(A.L), _domain(A.E), _domain(A.G)
    failures: list[tuple[str, tuple]] = []
    checked: dict[str, int] = {}

    def run(law, doms, pred):
        n = 0
        for args in bounded_product(doms, max_tuples, rng):
            n += 1
            if not pred(*args) and sum(1 for x, _ in failures if x == law) < 5:
                failures.append((law, args))
        checked[law] = n

    run("mu-homomorphism", [Ls, Ls], lambda a, b: f.mu(A.L.mul(a, b)) == B.L.mul(f.mu(a), f.mu(b)))
    run("psi-homomorphism", [Es, Es], lambda a, b: f.psi(A.E.mul(a, b)) == B.E.mul(f.psi(a), f.psi(b)))
    run("phi-homomorphism", [Gs, Gs], lambda a, b: f.phi(A.G.mul(a, b)) == B.G.mul(f.phi(a), f.phi(b)))
    run("chain-delta", [Ls], lambda l: f.psi(A.delta(l)) == B.delta(f.mu(l)))
    run("chain-boundary", [Es], lambda e: f.phi(A.boundary(e)) == B.boundary(f.psi(e)))
    run("lifting", [Es, Es], lambda e, x: f.mu(A.lifting(e, x)) == B.lifting(f.psi(e), f.psi(x)))
    run("equivariant-E", [Gs, Es], lambda g, e: f.psi(A.act_E(g, e)) == B.act_E(f.phi(g), f.psi(e)))
    run("equivariant-L", [Gs, Ls], lambda g, l: f.mu(A.act_L(g, l)) == B.act_L(f.phi(g), f.mu(l)))
    return report_from(failures, {"seed": seed, "mode": "exhaustive" if A.is_finite() else "probe"}, checked)


def _domain(G: Group) -> list:
    return G.elements() if G.is_finite else G.probe()


# ---------------------------------------------------------------------------
# homotopy groups


@dataclass
class HomotopyGroups:
    pi1: Group
    pi2: Group
    pi3: Group

    def orders(self) -> tuple[int | None, int | None, int | None]:
        return tuple(g.order() if g.is_finite else None for g in (self.pi1, self.pi2, self.pi3))

    def describe(self) -> tuple[str, str, str]:
        return tuple(_describe(g) for g in (self.pi1, self.pi2, self.pi3))


def _describe(group: Group) -> str:
    if not group.is_finite:
        return "Z"
    n = group.order()
    if n == 1:
        return "1"
    if _is_cyclic(group):
        return f"Z{n}"
    return f"order {n}"


def _is_cyclic(group: Group) -> bool:
    elems = group.elements()
    n = len(elems)
    for g in elems:
        x, k = g, 1
        while x != group.identity:
            x = group.mul(x, g)
            k += 1
        if k == n:
            return True
    return False


def homotopy_groups(A: TwoCrossedModule) -> HomotopyGroups:
    """``(G / im ∂, ker ∂ / im δ, ker δ)``."""
    if A.is_finite():
        return _finite_homotopy_groups(A)
    return _linear_homotopy_groups(A)


def _finite_homotopy_groups(A: TwoCrossedModule) -> HomotopyGroups:
    G, E, L = A.G, A.E, A.L
    im_b = Subgroup(G, [A.boundary(e) for e in E.elements()], "im")
    pi1 = QuotientGroup(G, im_b, "pi1")
    ker_b = Subgroup(E, [e for e in E.elements() if A.boundary(e) == G.identity], "ker")
    im_d = Subgroup(ker_b, [A.delta(l) for l in L.elements()], "im")
    if any(A.boundary(x) != G.identity for x in im_d.elements()):
        raise NotComputable("image of delta is not inside the kernel of the boundary")
    pi2 = QuotientGroup(ker_b, im_d, "pi2")
    pi3 = Subgroup(L, [l for l in L.elements() if A.delta(l) == E.identity], "pi3")
    return HomotopyGroups(pi1, pi2, pi3)


def _integer_coefficient(hom: Homomorphism) -> Element:
    """Image of 1 for a map out of the integers, after checking linearity on probes."""
    one = hom(1)
    C = hom.codomain
    for n in hom.domain.probe():
        if hom(n) != C.power(one, n):
            raise NotComputable(f"{hom.name} is not determined by the image of 1")
    return one


def _element_order(group: Group, x: Element) -> int:
    """Order of ``x``; 0 encodes infinite order in the integers."""
    if isinstance(group, IntegerGroup):
        return 0 if x != 0 else 1
    k, y = 1, x
    while y != group.identity:
        y = group.mul(y, x)
        k += 1
    return k


def _linear_homotopy_groups(A: TwoCrossedModule) -> HomotopyGroups:
    L, E, G = A.L, A.E, A.G
    if not isinstance(E, IntegerGroup) or not (isinstance(L, IntegerGroup) or L.is_finite and L.order() == 1):
        raise NotComputable("homotopy groups need finite carriers or integer carriers with linear maps")
    # pi1: the image of the integers is cyclic, generated by the image of 1
    b1 = _integer_coefficient(A.boundary)
    if G.is_finite:
        pi1: Group = QuotientGroup(G, Subgroup(G, [b1], "im"), "pi1")
        kernel_step = _element_order(G, b1)
    elif isinstance(G, IntegerGroup):
        kernel_step = 0 if b1 != 0 else 1
        pi1 = CyclicGroup(abs(b1), "pi1") if b1 != 0 else IntegerGroup("pi1")
    else:
        raise NotComputable(f"unsupported carrier {G.name}")
    # ker ∂ = kernel_step * Z (0 meaning {0}); im δ = |c| Z
    if isinstance(L, IntegerGroup):
        c = abs(_integer_coefficient(A.delta))
        pi3: Group = CyclicGroup(1, "pi3") if c != 0 else IntegerGroup("pi3")
    else:
        c = 0
        pi3 = CyclicGroup(1, "pi3")
    if kernel_step == 0:
        pi2: Group = CyclicGroup(1, "pi2")
    elif c == 0:
        pi2 = IntegerGroup("pi2")
    else:
        if c % kernel_step:
            raise NotComputable("image of delta is not inside the kernel of the boundary")
        pi2 = CyclicGroup(c // kernel_step, "pi2")
    return HomotopyGroups(pi1, pi2, pi3)
