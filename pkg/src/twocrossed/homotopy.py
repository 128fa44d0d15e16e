"""Quadratic derivations, homotopies, 2-fold homotopies and their composition calculus.

A homotopy out of a 2-crossed module whose bottom group is free is stored by
the values of ``s`` on the basis; every other value comes from homomorphic
extension into ``G' x| E'``.  The correction term ``omega`` is computed by
homomorphic extension into the bottom group of the double path space, and a
letter-by-letter recursion serves as an independent oracle for it.

Element coordinates in the double path space and in the disk space assume
that the target module's groups have scalar payloads (flat arity one).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .groups import (
    Element,
    FreeGroup,
    Group,
    GroupError,
    Homomorphism,
    bounded_product,
    hom_extend_free,
)
from .pathspace import disk_space, double_faces, path_space
from .xmod import (
    GenericOps,
    TwoCrossedModule,
    VerificationReport,
    XModMorphism,
    report_from,
    xmod_map_verify,
)

Map = Callable[[Element], Element]

DEFAULT_DEPTH = 3
DEFAULT_SAMPLES = 500
DEFAULT_PAIRS = 4000


class InvalidDerivation(GroupError):
    def __init__(self, report: VerificationReport):
        super().__init__(f"not a quadratic derivation: {', '.join(report.failed_laws())}")
        self.report = report


class DualComputationMismatch(GroupError):
    def __init__(self, word, homomorphic, recursive):
        super().__init__(f"omega disagrees at {word!r}: {homomorphic!r} != {recursive!r}")
        self.word = word
        self.values = (homomorphic, recursive)


class SourceNotFree(GroupError):
    pass


class BaseMismatch(GroupError):
    pass


class CompositionMismatch(GroupError):
    pass


# ---------------------------------------------------------------------------
# probes


def probe_elements(group: Group, *, depth: int = DEFAULT_DEPTH, samples: int = DEFAULT_SAMPLES,
                   seed: int = 0, max_length: int = 8) -> list:
    """All elements of a finite group; otherwise short words or probes plus seeded random elements."""
    if group.is_finite:
        return group.elements()
    rng = random.Random(seed)
    if isinstance(group, FreeGroup):
        base = list(group.words_up_to(depth))
        extra = [group.random_element(rng, max_length) for _ in range(samples)]
    else:
        base = group.probe()
        extra = [group.random_element(rng) for _ in range(samples)]
    return list(dict.fromkeys(base + extra))


def random_words(free: FreeGroup, count: int, *, seed: int = 0, max_length: int = 8) -> list:
    rng = random.Random(seed)
    return [free.random_element(rng, max_length) for _ in range(count)]


def free_bottom(A: TwoCrossedModule) -> FreeGroup | None:
    return A.G if isinstance(A.G, FreeGroup) else None


def _require_free(A: TwoCrossedModule) -> FreeGroup:
    F = free_bottom(A)
    if F is None:
        raise SourceNotFree(f"{A.name} has no free bottom group")
    return F


# ---------------------------------------------------------------------------
# derivations


class FreeDerivation:
    """The ``phi``-derivation out of a free group with prescribed basis values."""

    def __init__(self, phi: Map, free: FreeGroup, target: TwoCrossedModule,
                 basis_values: Sequence[Element], name: str = "s"):
        self.free = free
        self.target = target
        self.phi = phi
        self.basis_values = tuple(basis_values)
        self.name = name
        self._bundle = path_space(target)
        P = self._bundle
        images = [P.path_g(phi(free.generator(i)), v) for i, v in enumerate(self.basis_values)]
        self._hom = hom_extend_free(free, P.total.G, images, f"({name})")

    def pair(self, g: Element) -> tuple:
        """``(phi(g), s(g))`` in ``G' x| E'``."""
        return self._bundle.split_g(self._hom(g))

    def __call__(self, g: Element) -> Element:
        return self.pair(g)[1]


def extend_derivation(phi: Map, free: FreeGroup, target: TwoCrossedModule,
                      basis_values: Sequence[Element], name: str = "s") -> FreeDerivation:
    return FreeDerivation(phi, free, target, basis_values, name)


def derivation_failures(phi: Map, s: Map, G: Group, target: TwoCrossedModule, elements: list,
                        max_tuples: int = DEFAULT_PAIRS, seed: int = 0) -> list[tuple[str, tuple]]:
    """Pairs where ``s(gh) = phi(h)^-1 ▷ s(g) s(h)`` fails."""
    E, G2 = target.E, target.G
    out = []
    for g, h in bounded_product([elements, elements], max_tuples, random.Random(seed)):
        if s(G.mul(g, h)) != E.mul(target.act_E(G2.inv(phi(h)), s(g)), s(h)):
            out.append(("derivation", (g, h)))
    return out


@dataclass
class QuadraticDerivation:
    base: XModMorphism
    s: Map
    t: Map
    name: str = "(s,t)"

    @property
    def source(self) -> TwoCrossedModule:
        return self.base.source

    @property
    def target_module(self) -> TwoCrossedModule:
        return self.base.target

    def basis_values(self) -> tuple | None:
        F = free_bottom(self.source)
        if F is None:
            return None
        return tuple(self.s(F.generator(i)) for i in range(F.rank))


def _probe_sets(A: TwoCrossedModule, depth: int, samples: int, seed: int):
    return (probe_elements(A.G, depth=depth, samples=samples, seed=seed),
            probe_elements(A.E, depth=depth, samples=samples, seed=seed + 1))


def is_quadratic_derivation(f: XModMorphism, s: Map, t: Map, *, depth: int = DEFAULT_DEPTH,
                            samples: int = DEFAULT_SAMPLES, max_tuples: int = DEFAULT_PAIRS,
                            seed: int = 0, fail_fast: bool = False,
                            include_path_space: bool = True) -> VerificationReport:
    """Check the derivation equations and that the induced map into the path space is a morphism."""
    A, B = f.source, f.target
    O = GenericOps(B)
    psi, phi = f.psi, f.phi
    Gs, Es = _probe_sets(A, depth, samples, seed)
    rng = random.Random(seed)
    failures: list[tuple[str, tuple]] = []
    checked: dict[str, int] = {}

    def h1(g, h):
        return s(A.G.mul(g, h)) == O.Em(O.aE(O.Gi(phi(h)), s(g)), s(h))

    def h2(a, b):
        sda, sdb = s(A.boundary(a)), s(A.boundary(b))
        inner = O.Lm(O.lift(psi(b), O.aE(phi(A.G.inv(A.boundary(b))), O.Ei(sda))), t(a))
        return t(A.E.mul(a, b)) == O.Lm(O.sec(O.Ei(O.Em(psi(b), sdb)), inner), t(b))

    def h3alt(a, b):
        sda, sdb = s(A.boundary(a)), s(A.boundary(b))
        inner = O.Lm(O.Li(O.lift(O.Ei(psi(b)), O.Ei(sda))), O.sec(O.Ei(psi(b)), t(a)))
        return t(A.E.mul(a, b)) == O.Lm(O.sec(O.Ei(sdb), inner), t(b))

    def h3(g, a):
        pg, sg, sda, pa = phi(g), s(g), s(A.boundary(a)), psi(a)
        rhs = O.Lm(
            O.aL(pg, O.sec(O.Em(sg, O.Ei(sda)), O.Li(O.lift(O.Ei(pa), O.Ei(sg))))),
            O.aL(pg, O.lift(sg, O.Em(O.Ei(sda), O.Ei(pa)))),
            O.aL(O.Gm(pg, O.b(sg)), t(a)),
        )
        return t(A.act_E(g, a)) == rhs

    def mnnbv(a, b):
        pa, pb = psi(a), psi(b)
        ea = O.Em(pa, s(A.boundary(a)), O.d(t(a)))
        eb = O.Em(pb, s(A.boundary(b)), O.d(t(b)))
        return t(A.peiffer(a, b)) == O.Lm(O.Li(O.lift(pa, pb)), O.lift(ea, eb))

    laws = [("h1", [Gs, Gs], h1), ("h2", [Es, Es], h2), ("h3alt", [Es, Es], h3alt),
            ("h3", [Gs, Es], h3), ("mnnbv", [Es, Es], mnnbv)]
    for law, doms, pred in laws:
        n = 0
        for args in bounded_product(doms, max_tuples, rng):
            n += 1
            if not pred(*args):
                failures.append((law, args))
                if fail_fast or sum(1 for x, _ in failures if x == law) >= 5:
                    break
        checked[law] = n
        if fail_fast and failures:
            return report_from(failures, {"seed": seed, "depth": depth, "samples": samples}, checked)
    report = report_from(failures, {"seed": seed, "depth": depth, "samples": samples}, checked)
    if include_path_space:
        report = report.merge(xmod_map_verify(path_space_morphism(f, s, t), max_tuples=max_tuples,
                                              seed=seed), prefix="path-space-")
    return report


def path_space_morphism(f: XModMorphism, s: Map, t: Map) -> XModMorphism:
    """The map into the path space of the target determined by ``(s, t)``."""
    A, P = f.source, path_space(f.target)
    mu, psi, phi = f.mu, f.psi, f.phi
    return XModMorphism(
        A, P.total,
        lambda l: P.path_l(mu(l), t(A.delta(l))),
        lambda a: P.path_e(psi(a), s(A.boundary(a)), t(a)),
        lambda g: P.path_g(phi(g), s(g)),
        "H",
    )


def homotopy_target(f: XModMorphism, s: Map, t: Map, *, validate: bool = False,
                    **probe) -> XModMorphism:
    """The far endpoint ``(mu t delta, psi s∂ δt, phi ∂s)`` of the homotopy ``(s, t)``."""
    if validate:
        report = is_quadratic_derivation(f, s, t, **probe)
        if not report.passed:
            raise InvalidDerivation(report)
    A, B = f.source, f.target
    mu, psi, phi = f.mu, f.psi, f.phi
    return XModMorphism(
        A, B,
        lambda l: B.L.mul(mu(l), t(A.delta(l))),
        lambda a: B.E.mul(B.E.mul(psi(a), s(A.boundary(a))), B.delta(t(a))),
        lambda g: B.G.mul(phi(g), B.boundary(s(g))),
        f"{f.name}'",
    )


@dataclass
class Homotopy:
    """A quadratic derivation together with the morphism it ends at."""

    derivation: QuadraticDerivation
    target: XModMorphism

    @property
    def base(self) -> XModMorphism:
        return self.derivation.base

    @property
    def s(self) -> Map:
        return self.derivation.s

    @property
    def t(self) -> Map:
        return self.derivation.t

    @property
    def name(self) -> str:
        return self.derivation.name

    def basis_values(self) -> tuple | None:
        return self.derivation.basis_values()


def make_homotopy(f: XModMorphism, s: Map, t: Map, name: str = "(s,t)", *,
                  validate: bool = False, **probe) -> Homotopy:
    target = homotopy_target(f, s, t, validate=validate, **probe)
    return Homotopy(QuadraticDerivation(f, s, t, name), target)


def free_homotopy(f: XModMorphism, basis_values: Sequence[Element], t: Map, name: str = "(s,t)",
                  *, validate: bool = False, **probe) -> Homotopy:
    """Homotopy out of a free-bottom source, ``s`` given on the basis."""
    F = _require_free(f.source)
    s = extend_derivation(f.phi, F, f.target, basis_values, name=f"s{name}")
    return make_homotopy(f, s, t, name, validate=validate, **probe)


def unit_homotopy(f: XModMorphism) -> Homotopy:
    """``s ≡ 1``, ``t ≡ 1``, from ``f`` to ``f``."""
    B = f.target
    e1, l1 = B.E.identity, B.L.identity
    F = free_bottom(f.source)
    if F is not None:
        s = extend_derivation(f.phi, F, B, [e1] * F.rank, name="s0")
    else:
        s = lambda g: e1  # noqa: E731
    return Homotopy(QuadraticDerivation(f, s, lambda e: l1, "unit"), f)


def morphisms_equal_on(f: XModMorphism, g: XModMorphism, Ls: Iterable, Es: Iterable,
                       Gs: Iterable) -> list[tuple[str, tuple]]:
    out = []
    for level, xs, a, b in (("L", Ls, f.mu, g.mu), ("E", Es, f.psi, g.psi), ("G", Gs, f.phi, g.phi)):
        for x in xs:
            if a(x) != b(x):
                out.append((f"endpoint-{level}", (x, a(x), b(x))))
                break
    return out


def _endpoint_probes(A: TwoCrossedModule, depth: int = 2, samples: int = 50, seed: int = 0):
    return (probe_elements(A.L, depth=depth, samples=samples, seed=seed),
            probe_elements(A.E, depth=depth, samples=samples, seed=seed),
            probe_elements(A.G, depth=depth, samples=samples, seed=seed))


def same_morphism(f: XModMorphism, g: XModMorphism, **probe) -> bool:
    return not morphisms_equal_on(f, g, *_endpoint_probes(f.source, **probe))


def homotopy_failures(h1: Homotopy, h2: Homotopy, *, depth: int = 2, samples: int = 100,
                      seed: int = 0, label: str = "equal") -> list[tuple[str, tuple]]:
    """Where two homotopies differ: basis values of ``s`` (or ``s`` on probes) and ``t`` on probes."""
    A = h1.base.source
    out = []
    b1, b2 = h1.basis_values(), h2.basis_values()
    Gs, Es = _probe_sets(A, depth, samples, seed)
    if b1 is not None:
        if b1 != b2:
            out.append((f"{label}-s", (b1, b2)))
    else:
        out += [(f"{label}-s", (g,)) for g in Gs if h1.s(g) != h2.s(g)][:3]
    out += [(f"{label}-t", (e,)) for e in Es if h1.t(e) != h2.t(e)][:3]
    return out


# ---------------------------------------------------------------------------
# omega


class OmegaData:
    """The correction ``omega^{(s,s')}`` for consecutive homotopies out of a free bottom group.

    ``homomorphic`` extends the basis values ``(phi b, s b, 1, s' b, 1)`` into the
    bottom group of the double path space and reads the last coordinate;
    ``recursive`` processes the word letter by letter.  Calling the object
    evaluates both and raises on disagreement.
    """

    def __init__(self, first: Homotopy, second: Homotopy, *, check: bool = True):
        self.first = first
        self.second = second
        self.check = check
        B = first.base.target
        self.target = B
        self.free = _require_free(first.base.source)
        self.phi = first.base.phi
        self.phi2 = second.base.phi
        self.s = first.s
        self.s2 = second.s
        self.ops = GenericOps(B)
        F = self.free
        D = double_faces(B)
        inner, outer = D.inner, D.outer
        self._outer, self._inner = outer, inner
        e1, l1 = B.E.identity, B.L.identity
        images = []
        for i in range(F.rank):
            b = F.generator(i)
            images.append(outer.path_g(inner.path_g(self.phi(b), self.s(b)),
                                       inner.path_e(e1, self.s2(b), l1)))
        self.X = hom_extend_free(F, D.total.G, images, "X")
        self._letters = {}
        O = self.ops
        for i in range(F.rank):
            b = F.generator(i)
            pb, sb, s2b = self.phi(b), self.s(b), self.s2(b)
            p2b = O.Gm(pb, O.b(sb))
            self._letters[i + 1] = (pb, sb, s2b, l1)
            self._letters[-(i + 1)] = (O.Gi(pb), O.aE(pb, O.Ei(sb)), O.aE(p2b, O.Ei(s2b)),
                                       O.aL(pb, O.lift(sb, s2b)))

    def homomorphic(self, g: Element) -> Element:
        gp, ep = self._outer.split_g(self.X(g))
        return self._inner.split_e(ep)[2]

    def triangle(self, g: Element) -> tuple:
        """The full image ``X(g)`` as ``(phi, s, 1, s'', omega)``-shaped coordinates."""
        gp, ep = self._outer.split_g(self.X(g))
        return self._inner.split_g(gp) + self._inner.split_e(ep)

    def recursive(self, g: Element) -> Element:
        O = self.ops
        phi, s, s2, om = O.G1, O.E1, O.E1, O.L1
        for x in g:
            ph, sh, s2h, omh = self._letters[x]
            p2h = O.Gm(ph, O.b(sh))
            term = O.Lm(
                O.aL(O.Gi(ph), O.lift(O.aE(ph, O.Ei(sh)), O.Em(O.d(om), O.Ei(s2)))),
                O.aL(O.Gi(p2h), om),
            )
            om = O.Lm(omh, O.sec(O.Ei(s2h), term))
            s = O.Em(O.aE(O.Gi(ph), s), sh)
            s2 = O.Em(O.aE(O.Gi(p2h), s2), s2h)
            phi = O.Gm(phi, ph)
        return om

    def __call__(self, g: Element) -> Element:
        value = self.homomorphic(g)
        if self.check:
            other = self.recursive(g)
            if other != value:
                raise DualComputationMismatch(g, value, other)
        return value


def omega(first: Homotopy, second: Homotopy, *, check: bool = True) -> OmegaData:
    return OmegaData(first, second, check=check)


def theta(first: Homotopy, second: Homotopy, b: int, b1: int, b2: int) -> Element:
    """Closed form of ``omega(b^-1 b' b'')`` for basis indices ``b, b', b''``."""
    F = _require_free(first.base.source)
    O = GenericOps(first.base.target)
    phi, s, s2 = first.base.phi, first.s, second.s
    x, y, z = F.generator(b), F.generator(b1), F.generator(b2)
    yz = F.mul(y, z)

    def phi2(g):
        return O.Gm(phi(g), O.b(s(g)))

    first_term = O.sec(O.Ei(s2(z)), O.lift(O.Ei(s(z)), O.aE(O.Gi(phi(z)), O.Ei(s2(y)))))
    outer = O.Em(O.aE(O.Gi(phi2(z)), s2(y)), s2(z))
    u = O.Ei(O.Em(O.aE(O.Gi(phi(z)), s(y)), s(z)))
    v = O.aE(O.Gm(O.Gi(phi(yz)), phi(x)), O.Em(s(x), s2(x), O.Ei(s(x))))
    w = O.aL(O.Gm(O.Gi(phi2(yz)), phi(x)), O.lift(s(x), s2(x)))
    return O.Lm(first_term, O.sec(O.Ei(outer), O.Lm(O.lift(u, v), w)))


def omega_dual_check(first: Homotopy, second: Homotopy, words: Iterable) -> VerificationReport:
    om = omega(first, second, check=False)
    failures, n = [], 0
    for w in words:
        n += 1
        if om.homomorphic(w) != om.recursive(w):
            failures.append(("omega-dual", (w,)))
    return report_from(failures, {}, {"omega-dual": n})


def omega_identity_report(first: Homotopy, second: Homotopy, words: Sequence) -> VerificationReport:
    """Basis vanishing, the product formula for ``s ⊗ s'`` and the closed form on basis triples."""
    om = omega(first, second)
    F, B = om.free, om.target
    O = om.ops
    composite = concat_homotopies(first, second, check_endpoints=False)
    failures = []
    checked = {"omega-basis": F.rank, "omega-product": len(words)}
    for i in range(F.rank):
        if om(F.generator(i)) != O.L1:
            failures.append(("omega-basis", (i,)))
    for w in words:
        expected = O.Em(first.s(w), second.s(w), O.Ei(O.d(om(w))))
        if composite.s(w) != expected:
            failures.append(("omega-product", (w,)))
    triples = list(itertools.product(range(F.rank), repeat=3))
    checked["theta"] = len(triples)
    for b, b1, b2 in triples:
        word = F.mul(F.inv(F.generator(b)), F.mul(F.generator(b1), F.generator(b2)))
        if om(word) != theta(first, second, b, b1, b2):
            failures.append(("theta", (b, b1, b2)))
    return report_from(failures, {}, checked)


# ---------------------------------------------------------------------------
# concatenation and inverses


def concat_homotopies(first: Homotopy, second: Homotopy, *, check_endpoints: bool = True) -> Homotopy:
    """``(s ⊗ s', t ⊗ t')`` from the base of ``first`` to the target of ``second``."""
    A, B = first.base.source, first.base.target
    F = _require_free(A)
    if check_endpoints and not same_morphism(first.target, second.base):
        raise BaseMismatch("the first homotopy does not end where the second begins")
    O = GenericOps(B)
    basis = [O.Em(first.s(F.generator(i)), second.s(F.generator(i))) for i in range(F.rank)]
    s = extend_derivation(first.base.phi, F, B, basis, name="s⊗s'")
    om = omega(first, second)
    t1, t2, s2 = first.t, second.t, second.s

    def t(e):
        g = A.boundary(e)
        return O.Lm(om(g), O.sec(O.Ei(s2(g)), t1(e)), t2(e))

    name = f"{first.name}⊗{second.name}"
    return Homotopy(QuadraticDerivation(first.base, s, t, name), second.target)


def invert_homotopy(h: Homotopy) -> Homotopy:
    """``s̄(b) = s(b)^-1`` and ``t̄(e) = omega^{(s,s̄)}(∂e)^-1 · s(∂e) ▷' t(e)^-1``."""
    A, B = h.base.source, h.base.target
    F = _require_free(A)
    O = GenericOps(B)
    basis = [O.Ei(h.s(F.generator(i))) for i in range(F.rank)]
    sbar = extend_derivation(h.target.phi, F, B, basis, name="s̄")
    partial = Homotopy(QuadraticDerivation(h.target, sbar, lambda e: O.L1, "partial"), h.base)
    om = omega(h, partial)
    s, t = h.s, h.t

    def tbar(e):
        g = A.boundary(e)
        return O.Lm(O.Li(om(g)), O.sec(s(g), O.Li(t(e))))

    return Homotopy(QuadraticDerivation(h.target, sbar, tbar, f"{h.name}^-1"), h.base)


def winv_report(h: Homotopy, words: Sequence) -> VerificationReport:
    """Compare ``omega^{(s̄,s)}`` with both ``s^-1 ▷' omega^{(s,s̄)}`` and ``s ▷' omega^{(s,s̄)}``.

    ``winv-inverse-action`` and ``winv-direct-action`` are reported separately
    so that a failure of one form is visible without masking the other.
    """
    inv = invert_homotopy(h)
    O = GenericOps(h.base.target)
    forward = omega(h, inv)
    backward = omega(inv, h)
    failures = []
    for w in words:
        a, b = backward(w), forward(w)
        if a != O.sec(O.Ei(h.s(w)), b):
            failures.append(("winv-inverse-action", (w,)))
        if a != O.sec(h.s(w), b):
            failures.append(("winv-direct-action", (w,)))
    return report_from(failures, {}, {"winv-inverse-action": len(words), "winv-direct-action": len(words)})


# ---------------------------------------------------------------------------
# 2-fold homotopies


class Quadratic2Derivation:
    """A map ``k: G -> L'`` based on a homotopy ``(f, s, t)``.

    Over a free bottom group ``k`` is the last coordinate of the homomorphic
    extension of ``b -> (phi b, s b, k b)`` into the bottom group of the disk space.
    """

    def __init__(self, homotopy: Homotopy, k: Map, basis_values: Sequence[Element] | None = None,
                 name: str = "k"):
        self.homotopy = homotopy
        self.k = k
        self.basis_values = tuple(basis_values) if basis_values is not None else None
        self.name = name

    def __call__(self, g: Element) -> Element:
        return self.k(g)

    @property
    def base(self) -> XModMorphism:
        return self.homotopy.base


def extend_2derivation(h: Homotopy, basis_values: Sequence[Element], name: str = "k") -> Quadratic2Derivation:
    F = _require_free(h.base.source)
    B = h.base.target
    D0 = disk_space(B).inherited.G
    phi, s = h.base.phi, h.s
    images = [(phi(F.generator(i)), s(F.generator(i)), v) for i, v in enumerate(basis_values)]
    hom = hom_extend_free(F, D0, images, name)
    return Quadratic2Derivation(h, lambda g: hom(g)[2], basis_values, name)


def is_quadratic_2derivation(k: Quadratic2Derivation, *, depth: int = DEFAULT_DEPTH,
                             samples: int = DEFAULT_SAMPLES, max_tuples: int = DEFAULT_PAIRS,
                             seed: int = 0) -> VerificationReport:
    h = k.homotopy
    A, O = h.base.source, GenericOps(h.base.target)
    phi, s = h.base.phi, h.s
    Gs = probe_elements(A.G, depth=depth, samples=samples, seed=seed)
    failures, checked = [], {}
    n = 0
    for g, x in bounded_product([Gs, Gs], max_tuples, random.Random(seed)):
        n += 1
        rhs = O.Lm(O.sec(O.Ei(s(x)), O.aL(O.Gi(phi(x)), k(g))), k(x))
        if k(A.G.mul(g, x)) != rhs:
            failures.append(("2der", (g, x)))
            if len(failures) >= 5:
                break
    checked["2der"] = n
    bad_inv = [g for g in Gs if k(A.G.inv(g)) != O.aL(phi(g), O.sec(s(g), O.Li(k(g))))]
    failures += [("2der-inverse", (g,)) for g in bad_inv[:5]]
    checked["2der-inverse"] = len(Gs)
    return report_from(failures, {"seed": seed}, checked)


def xi(k: Quadratic2Derivation, g: Element, x: Element, y: Element) -> Element:
    """Closed form of ``k(g^-1 x y)``."""
    h = k.homotopy
    A, O = h.base.source, GenericOps(h.base.target)
    phi, s = h.base.phi, h.s
    inner = O.aL(O.Gm(phi(A.G.inv(x)), phi(g)), O.sec(s(g), O.Li(k(g))))
    middle = O.Lm(O.sec(O.Ei(s(x)), inner), k(x))
    return O.Lm(O.sec(O.Ei(s(y)), O.aL(O.Gi(phi(y)), middle)), k(y))


def twofold_target(k: Quadratic2Derivation) -> Homotopy:
    """``s' = s δk`` and ``t' = k(∂e)^-1 t``, with the same endpoints."""
    h = k.homotopy
    A, B = h.base.source, h.base.target
    O = GenericOps(B)
    s, t = h.s, h.t
    F = free_bottom(A)
    if F is not None:
        basis = [O.Em(s(F.generator(i)), O.d(k(F.generator(i)))) for i in range(F.rank)]
        s2 = extend_derivation(h.base.phi, F, B, basis, name="s'")
    else:
        s2 = lambda g: O.Em(s(g), O.d(k(g)))  # noqa: E731
    t2 = lambda e: O.Lm(O.Li(k(A.boundary(e))), t(e))  # noqa: E731
    return Homotopy(QuadraticDerivation(h.base, s2, t2, f"{h.name}'"), h.target)


def _same_basis(h1: Homotopy, h2: Homotopy) -> bool:
    return h1.basis_values() == h2.basis_values()


def vertical_compose(k1: Quadratic2Derivation, k2: Quadratic2Derivation, *,
                     check_endpoints: bool = True) -> Quadratic2Derivation:
    """``(k ⋄ k')(g) = k(g) k'(g)`` for ``k`` ending where ``k'`` starts."""
    B = k1.base.target
    if check_endpoints and not _same_basis(twofold_target(k1), k2.homotopy):
        raise CompositionMismatch("2-fold homotopies are not vertically composable")
    F = free_bottom(k1.base.source)
    if F is not None:
        basis = [B.L.mul(k1(F.generator(i)), k2(F.generator(i))) for i in range(F.rank)]
        return extend_2derivation(k1.homotopy, basis, f"{k1.name}⋄{k2.name}")
    return Quadratic2Derivation(k1.homotopy, lambda g: B.L.mul(k1(g), k2(g)), None,
                                f"{k1.name}⋄{k2.name}")


def invert_twofold(k: Quadratic2Derivation) -> Quadratic2Derivation:
    """``k̄(g) = k(g)^-1``, based on the target homotopy of ``k``."""
    B = k.base.target
    h2 = twofold_target(k)
    F = free_bottom(k.base.source)
    if F is not None:
        return extend_2derivation(h2, [B.L.inv(k(F.generator(i))) for i in range(F.rank)], f"{k.name}^-1")
    return Quadratic2Derivation(h2, lambda g: B.L.inv(k(g)), None, f"{k.name}^-1")


def unit_twofold(h: Homotopy) -> Quadratic2Derivation:
    B = h.base.target
    F = free_bottom(h.base.source)
    if F is not None:
        return extend_2derivation(h, [B.L.identity] * F.rank, "1")
    return Quadratic2Derivation(h, lambda g: B.L.identity, None, "1")


def whisker_right(k: Quadratic2Derivation, h2: Homotopy, *, check_endpoints: bool = True) -> Quadratic2Derivation:
    """``k ⊗ s''`` with basis values ``s''(b)^-1 ▷' k(b)``, based on ``h ⊗ h''``."""
    h = k.homotopy
    F = _require_free(h.base.source)
    if check_endpoints and not same_morphism(h.target, h2.base):
        raise CompositionMismatch("the homotopy does not start where the 2-fold homotopy ends")
    O = GenericOps(h.base.target)
    composite = concat_homotopies(h, h2, check_endpoints=False)
    basis = [O.sec(O.Ei(h2.s(F.generator(i))), k(F.generator(i))) for i in range(F.rank)]
    return extend_2derivation(composite, basis, f"{k.name}⊗{h2.name}")


def whisker_left(h2: Homotopy, k: Quadratic2Derivation, *, check_endpoints: bool = True) -> Quadratic2Derivation:
    """``s'' ⊗ k`` with basis values ``k(b)``, based on ``h'' ⊗ h``."""
    h = k.homotopy
    F = _require_free(h.base.source)
    if check_endpoints and not same_morphism(h2.target, h.base):
        raise CompositionMismatch("the homotopy does not end where the 2-fold homotopy starts")
    composite = concat_homotopies(h2, h, check_endpoints=False)
    basis = [k(F.generator(i)) for i in range(F.rank)]
    return extend_2derivation(composite, basis, f"{h2.name}⊗{k.name}")


def whisker_right_report(k: Quadratic2Derivation, h2: Homotopy, words: Sequence,
                         e_probes: Sequence) -> VerificationReport:
    """The target, ``t`` and ``omega`` identities satisfied by right whiskering."""
    h = k.homotopy
    A, O = h.base.source, GenericOps(h.base.target)
    kw = whisker_right(k, h2, check_endpoints=False)
    h_top = twofold_target(k)
    lower = concat_homotopies(h, h2, check_endpoints=False)
    upper = concat_homotopies(h_top, h2, check_endpoints=False)
    om_low, om_up = omega(h, h2), omega(h_top, h2)
    failures = []
    for g in words:
        if O.Em(lower.s(g), O.d(kw(g))) != upper.s(g):
            failures.append(("whisker-right-target", (g,)))
        lhs = O.Lm(O.Li(kw(g)), om_low(g))
        rhs = O.Lm(om_up(g), O.sec(O.Ei(h2.s(g)), O.Li(k(g))))
        if lhs != rhs:
            failures.append(("whisker-right-omega", (g,)))
    for e in e_probes:
        if O.Lm(O.Li(kw(A.boundary(e))), lower.t(e)) != upper.t(e):
            failures.append(("whisker-right-t", (e,)))
    return report_from(failures, {}, {"whisker-right-target": len(words), "whisker-right-omega": len(words),
                                      "whisker-right-t": len(e_probes)})


def whisker_left_report(h2: Homotopy, k: Quadratic2Derivation, words: Sequence,
                        e_probes: Sequence) -> VerificationReport:
    h = k.homotopy
    A, O = h.base.source, GenericOps(h.base.target)
    kw = whisker_left(h2, k, check_endpoints=False)
    h_top = twofold_target(k)
    lower = concat_homotopies(h2, h, check_endpoints=False)
    upper = concat_homotopies(h2, h_top, check_endpoints=False)
    om_low, om_up = omega(h2, h), omega(h2, h_top)
    failures = []
    for g in words:
        if O.Em(lower.s(g), O.d(kw(g))) != upper.s(g):
            failures.append(("whisker-left-target", (g,)))
        if O.Lm(O.Li(kw(g)), om_low(g)) != O.Lm(om_up(g), O.Li(k(g))):
            failures.append(("whisker-left-omega", (g,)))
    for e in e_probes:
        if O.Lm(O.Li(kw(A.boundary(e))), lower.t(e)) != upper.t(e):
            failures.append(("whisker-left-t", (e,)))
    return report_from(failures, {}, {"whisker-left-target": len(words), "whisker-left-omega": len(words),
                                      "whisker-left-t": len(e_probes)})


def interchange_report(k: Quadratic2Derivation, k2: Quadratic2Derivation) -> VerificationReport:
    """Horizontal composites of ``k: s => s'`` and ``k': u => u'`` agree in both orders."""
    h, u = k.homotopy, k2.homotopy
    F = _require_free(h.base.source)
    O = GenericOps(h.base.target)
    s_top, u_top = twofold_target(k), twofold_target(k2)
    failures = []
    for i in range(F.rank):
        b = F.generator(i)
        lhs = O.Lm(O.sec(O.Ei(u.s(b)), k(b)), k2(b))
        rhs = O.Lm(k2(b), O.sec(O.Ei(u_top.s(b)), k(b)))
        if lhs != rhs:
            failures.append(("interchange-basis", (i,)))
    first = vertical_compose(whisker_right(k, u, check_endpoints=False),
                             whisker_left(s_top, k2, check_endpoints=False), check_endpoints=False)
    second = vertical_compose(whisker_left(h, k2, check_endpoints=False),
                              whisker_right(k, u_top, check_endpoints=False), check_endpoints=False)
    if first.basis_values != second.basis_values:
        failures.append(("interchange-composite", (first.basis_values, second.basis_values)))
    return report_from(failures, {}, {"interchange-basis": F.rank, "interchange-composite": 1})


# ---------------------------------------------------------------------------
# the 2-groupoid of homotopies


@dataclass
class Hom2Groupoid:
    """Objects, homotopies and 2-fold homotopies between two fixed modules."""

    source: TwoCrossedModule
    target: TwoCrossedModule
    objects: list[XModMorphism]
    homotopies: list[Homotopy]
    twofolds: list[Quadratic2Derivation] = field(default_factory=list)

    def __post_init__(self):
        self._free = _require_free(self.source)
        self._index = {}
        for idx, f in enumerate(self.objects):
            self._index[self._key(f)] = idx
        self.starts = [self.object_of(h.base) for h in self.homotopies]
        self.ends = [self.object_of(h.target) for h in self.homotopies]

    def _key(self, f: XModMorphism) -> tuple:
        A = self.source
        Ls, Es, Gs = _endpoint_probes(A, depth=2, samples=20)
        return (tuple(f.mu(x) for x in Ls), tuple(f.psi(x) for x in Es), tuple(f.phi(x) for x in Gs))

    def object_of(self, f: XModMorphism) -> int:
        key = self._key(f)
        if key not in self._index:
            self._index[key] = len(self.objects)
            self.objects.append(f)
        return self._index[key]

    def composable_pairs(self) -> list[tuple[int, int]]:
        n = len(self.homotopies)
        return [(i, j) for i in range(n) for j in range(n) if self.ends[i] == self.starts[j]]

    def composable_triples(self) -> list[tuple[int, int, int]]:
        pairs = self.composable_pairs()
        by_start: dict[int, list[int]] = {}
        for j, st in enumerate(self.starts):
            by_start.setdefault(st, []).append(j)
        return [(i, j, m) for i, j in pairs for m in by_start.get(self.ends[j], [])]

    def laws(self, *, words: int = 40, max_cells: int = 40, seed: int = 0,
             depth: int = 2) -> VerificationReport:
        """Associativity, units, inverses, whisker functoriality and interchange on sampled cells."""
        rng = random.Random(seed)
        F = self._free
        ws = list(F.words_up_to(depth)) + random_words(F, words, seed=seed)
        Es = probe_elements(self.source.E, depth=depth, samples=words, seed=seed)
        report = report_from([], {"seed": seed, "words": len(ws)}, {})

        def sample(xs):
            xs = list(xs)
            return xs if len(xs) <= max_cells else rng.sample(xs, max_cells)

        B = self.target
        O = GenericOps(B)
        failures: list[tuple[str, tuple]] = []
        counts: dict[str, int] = {}

        def bump(law):
            counts[law] = counts.get(law, 0) + 1

        for i, j, m in sample(self.composable_triples()):
            h1, h2, h3 = self.homotopies[i], self.homotopies[j], self.homotopies[m]
            left = concat_homotopies(concat_homotopies(h1, h2, check_endpoints=False), h3, check_endpoints=False)
            right = concat_homotopies(h1, concat_homotopies(h2, h3, check_endpoints=False), check_endpoints=False)
            failures += homotopy_failures(left, right, label="associativity")
            bump("associativity")
            o12 = omega(h1, h2)
            o1_23 = omega(h1, concat_homotopies(h2, h3, check_endpoints=False))
            o12_3 = omega(concat_homotopies(h1, h2, check_endpoints=False), h3)
            o23 = omega(h2, h3)
            for g in ws:
                rhs = O.Lm(o12_3(g), O.sec(O.Ei(h3.s(g)), o12(g)), O.Li(o23(g)))
                if o1_23(g) != rhs:
                    failures.append(("associativity-omega", (i, j, m, g)))
                    break
            bump("associativity-omega")
        for i in sample(range(len(self.homotopies))):
            h = self.homotopies[i]
            unit_l, unit_r = unit_homotopy(h.base), unit_homotopy(h.target)
            failures += homotopy_failures(concat_homotopies(unit_l, h, check_endpoints=False), h, label="left-unit")
            failures += homotopy_failures(concat_homotopies(h, unit_r, check_endpoints=False), h, label="right-unit")
            for g in ws:
                if omega(unit_l, h)(g) != O.L1 or omega(h, unit_r)(g) != O.L1:
                    failures.append(("unit-omega", (i, g)))
                    break
            inv = invert_homotopy(h)
            failures += homotopy_failures(concat_homotopies(h, inv, check_endpoints=False), unit_l,
                                          label="right-inverse")
            failures += homotopy_failures(concat_homotopies(inv, h, check_endpoints=False), unit_r,
                                          label="left-inverse")
            winv = winv_report(h, ws[: max(10, len(ws) // 4)])
            failures += [x for x in winv.failures if x[0] == "winv-direct-action"]
            for law in ("left-unit", "right-unit", "unit-omega", "right-inverse", "left-inverse", "winv"):
                bump(law)
        cells = self.twofolds
        hom_pos = {id(h): i for i, h in enumerate(self.homotopies)}
        cell_end = [self.object_of(k.homotopy.target) if id(k.homotopy) not in hom_pos
                    else self.ends[hom_pos[id(k.homotopy)]] for k in cells]
        cell_start = [self.object_of(k.homotopy.base) if id(k.homotopy) not in hom_pos
                      else self.starts[hom_pos[id(k.homotopy)]] for k in cells]
        by_start_cell: dict[int, list[int]] = {}
        for b, st in enumerate(cell_start):
            by_start_cell.setdefault(st, []).append(b)
        top_basis = [twofold_target(k).basis_values() for k in cells]
        cell_basis = [k.homotopy.basis_values() for k in cells]
        by_basis: dict = {}
        for b, key in enumerate(cell_basis):
            by_basis.setdefault(key, []).append(b)
        vertical = [(a, b) for a in range(len(cells)) for b in by_basis.get(top_basis[a], [])]
        for a, b in sample(vertical):
            k1, k2 = cells[a], cells[b]
            if homotopy_failures(twofold_target(k1), k2.homotopy):
                continue
            comp = vertical_compose(k1, k2, check_endpoints=False)
            bad = [g for g in ws if comp(g) != B.L.mul(k1(g), k2(g))]
            if bad:
                failures.append(("vertical-pointwise", (a, b, bad[0])))
            bump("vertical-pointwise")
            for u_idx in sample(j for j, st in enumerate(self.starts) if st == cell_end[a])[:3]:
                u = self.homotopies[u_idx]
                lhs = whisker_right(comp, u, check_endpoints=False)
                rhs = vertical_compose(whisker_right(k1, u, check_endpoints=False),
                                       whisker_right(k2, u, check_endpoints=False), check_endpoints=False)
                if lhs.basis_values != rhs.basis_values:
                    failures.append(("whisker-right-functorial", (a, b, u_idx)))
                bump("whisker-right-functorial")
            for u_idx in sample(j for j, en in enumerate(self.ends) if en == cell_start[a])[:3]:
                u = self.homotopies[u_idx]
                lhs = whisker_left(u, comp, check_endpoints=False)
                rhs = vertical_compose(whisker_left(u, k1, check_endpoints=False),
                                       whisker_left(u, k2, check_endpoints=False), check_endpoints=False)
                if lhs.basis_values != rhs.basis_values:
                    failures.append(("whisker-left-functorial", (a, b, u_idx)))
                bump("whisker-left-functorial")
        for a in sample(range(len(cells))):
            k = cells[a]
            inv = invert_twofold(k)
            comp = vertical_compose(k, inv, check_endpoints=False)
            if any(comp(g) != B.L.identity for g in ws):
                failures.append(("twofold-inverse", (a,)))
            bump("twofold-inverse")
            if not _same_basis(twofold_target(inv), k.homotopy):
                failures.append(("twofold-inverse-endpoint", (a,)))
        horizontal = [(a, b) for a in range(len(cells)) for b in by_start_cell.get(cell_end[a], [])]
        for a, b in sample(horizontal):
            rep = interchange_report(cells[a], cells[b])
            failures += [(law, (a, b) + w) for law, w in rep.failures]
            bump("interchange")
        return report.merge(report_from(failures, {}, counts))


def build_hom2groupoid(source: TwoCrossedModule, target: TwoCrossedModule,
                       homotopies: Sequence[Homotopy],
                       twofolds: Sequence[Quadratic2Derivation] = ()) -> Hom2Groupoid:
    objects: list[XModMorphism] = []
    return Hom2Groupoid(source, target, objects, list(homotopies), list(twofolds))


def compose_with_strict(h: Homotopy, g: XModMorphism | None = None,
                        pre: XModMorphism | None = None) -> Homotopy:
    """Whisker a homotopy by strict maps: ``(g∘s, g∘t)`` after, ``(s∘h, t∘h)`` before."""
    s, t, base, end = h.s, h.t, h.base, h.target
    if g is not None:
        s2, t2 = (lambda x, s=s: g.psi(s(x))), (lambda x, t=t: g.mu(t(x)))
        base, end, s, t = g.compose(base), g.compose(end), s2, t2
    if pre is not None:
        s2, t2 = (lambda x, s=s: s(pre.phi(x))), (lambda x, t=t: t(pre.psi(x)))
        base, end, s, t = base.compose(pre), end.compose(pre), s2, t2
    return Homotopy(QuadraticDerivation(base, s, t, f"{h.name}*"), end)
