"""The free resolution ``Q1`` of the bottom group and the unpacked lax homotopy calculus.

``Q1(A)`` replaces the bottom group ``G`` by the free group on its underlying
set, with basis symbols ``[g]``.  Lax homotopies between strict maps are
stored as finite tables ``(s_hat, t_hat, Pi)``; ``lax_to_strict`` turns them
into homotopies out of ``Q1(A)`` by Reidemeister-Schreier rewriting of the
kernel of ``p: F(G) -> G`` with the transversal ``1 -> empty``, ``g -> [g]``.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .groups import (
    Element,
    FreeGroup,
    Group,
    GroupError,
    Homomorphism,
    PullbackGroup,
    bounded_product,
    hom_extend_free,
)
from .homotopy import (
    Homotopy,
    Quadratic2Derivation,
    QuadraticDerivation,
    extend_2derivation,
    extend_derivation,
    invert_homotopy,
    is_quadratic_derivation,
    make_homotopy,
    theta,
    xi,
)
from .pathspace import path_space
from .xmod import (
    GenericOps,
    TwoCrossedModule,
    VerificationReport,
    XModMorphism,
    identity_morphism,
    report_from,
    verify_two_crossed,
    xmod_map_verify,
)


class NotStrictEndpoints(GroupError):
    pass


class InvalidLaxData(GroupError):
    def __init__(self, report: VerificationReport):
        super().__init__(f"invalid lax homotopy: {', '.join(report.failed_laws())}")
        self.report = report


# ---------------------------------------------------------------------------
# Q1


class Q1LevelOne(PullbackGroup):
    """``E x_{∂,p} F(G)`` with probes built from generators and short words."""

    def __init__(self, boundary: Homomorphism, p: Homomorphism, bundle: "Q1Bundle", depth: int):
        super().__init__(boundary, p, f"{boundary.domain.name} x F({boundary.codomain.name})")
        self.bundle = bundle
        self.depth = depth

    def probe(self) -> list:
        Q = self.bundle
        E, F = self.G, self.M
        out = [Q.bracket_e(e) for e in E.elements()] + [Q.pair(g, h) for g in Q.points for h in Q.points]
        by_image: dict = {}
        for w in F.words_up_to(self.depth):
            by_image.setdefault(self.right(w), []).append(w)
        for e in E.elements():
            out += [(e, w) for w in by_image.get(self.left(e), [])]
        return list(dict.fromkeys(out))

    def random_element(self, rng: random.Random) -> tuple:
        Q = self.bundle
        F = self.M
        e = self.G.random_element(rng)
        w = F.random_element(rng)
        u = F.mul(F.mul(w, F.inv(Q.bracket(self.right(w)))), Q.bracket(self.left(e)))
        return (e, u)


@dataclass
class Q1Bundle:
    base: TwoCrossedModule
    total: TwoCrossedModule
    proj: XModMorphism
    points: list
    free: FreeGroup
    p: Homomorphism

    def index(self, g: Element) -> int:
        return self._index[g]

    def bracket(self, g: Element) -> tuple:
        """The basis word ``[g]``."""
        return (self._index[g] + 1,)

    def bracket_e(self, e: Element) -> tuple:
        """``[e] = (e, [∂e])``."""
        return (e, self.bracket(self.base.boundary(e)))

    def kernel_word(self, g: Element, h: Element) -> tuple:
        """``[g,h] = [gh]^-1 [g][h]``."""
        F, G = self.free, self.base.G
        return F.mul(F.inv(self.bracket(G.mul(g, h))), F.mul(self.bracket(g), self.bracket(h)))

    def pair(self, g: Element, h: Element) -> tuple:
        """``(g,h) = (1, [g,h])`` in level one."""
        return (self.base.E.identity, self.kernel_word(g, h))

    def section(self) -> tuple[Callable, Callable]:
        return self.bracket, self.bracket_e


_Q1: dict[int, tuple[TwoCrossedModule, Q1Bundle]] = {}


def q1(A: TwoCrossedModule, *, probe_depth: int = 2) -> Q1Bundle:
    """``L -> E x_{∂,p} F(G) -> F(G)`` with lifting ``{(e,u),(e',u')} = {e,e'}`` and its projection."""
    hit = _Q1.get(id(A))
    if hit is not None and hit[0] is A:
        return hit[1]
    points = A.G.elements()
    F = FreeGroup([A.G.label(g) for g in points], f"F({A.G.name})", probe_depth=probe_depth)
    p = hom_extend_free(F, A.G, points, "p")
    bundle = Q1Bundle(A, None, None, points, F, p)  # type: ignore[arg-type]
    bundle._index = {g: i for i, g in enumerate(points)}
    E1 = Q1LevelOne(A.boundary, p, bundle, probe_depth)
    total = TwoCrossedModule(
        A.L, E1, F,
        delta=Homomorphism(A.L, E1, lambda l: (A.delta(l), ()), "delta'"),
        boundary=Homomorphism(E1, F, lambda x: x[1], "boundary'"),
        act_E=lambda u, x: (A.act_E(p(u), x[0]), F.mul(F.mul(u, x[1]), F.inv(u))),
        act_L=lambda u, l: A.act_L(p(u), l),
        lifting=lambda x, y: A.lifting(x[0], y[0]),
        name=f"Q1({A.name})",
    )
    bundle.total = total
    bundle.proj = XModMorphism(total, A, lambda l: l, lambda x: x[0], p, "proj")
    _Q1[id(A)] = (A, bundle)
    return bundle


def q1_report(A: TwoCrossedModule, *, max_tuples: int = 4000, seed: int = 0) -> VerificationReport:
    """Axioms of ``Q1(A)`` on probes, the projection as a morphism, and ``proj ∘ section = id``."""
    Q = q1(A)
    rep = verify_two_crossed(Q.total, exhaustive=False, max_tuples=max_tuples, seed=seed)
    rep = rep.merge(xmod_map_verify(Q.proj, max_tuples=max_tuples, seed=seed), prefix="proj-")
    failures = []
    for g in A.G.elements():
        if Q.p(Q.bracket(g)) != g:
            failures.append(("section-G", (g,)))
    for e in A.E.elements():
        if Q.proj.psi(Q.bracket_e(e)) != e:
            failures.append(("section-E", (e,)))
    return rep.merge(report_from(failures, {}, {"section-G": len(Q.points),
                                                "section-E": len(A.E.elements())}))


def kernel_relations_check(A: TwoCrossedModule, *, max_triples: int = 2000, seed: int = 0) -> VerificationReport:
    """Relations among the words ``[g]``, ``[g,h]`` and the generators of level one of ``Q1(A)``."""
    Q = q1(A)
    F, G, T = Q.free, A.G, Q.total
    EQ = T.E
    rng = random.Random(seed)
    B, K = Q.bracket, Q.kernel_word
    pts = Q.points
    one = G.identity
    m = lambda *ws: _prod(F, ws)  # noqa: E731
    em = lambda *xs: _prod(EQ, xs)  # noqa: E731
    failures: list[tuple[str, tuple]] = []
    checked: dict[str, int] = {}

    def run(law, doms, pred):
        n = 0
        for args in bounded_product(doms, max_triples, rng):
            n += 1
            if not pred(*args):
                failures.append((law, args))
        checked[law] = n

    if B(one) == F.identity:
        failures.append(("bracket-one-nonempty", ()))
    checked["bracket-one-nonempty"] = 1
    run("cocycle", [pts, pts, pts], lambda g, h, i: m(K(G.mul(g, h), i), F.inv(B(i)), K(g, h), B(i))
        == m(K(g, G.mul(h, i)), K(h, i)))
    run("product", [pts, pts], lambda g, h: m(B(g), B(h), F.inv(K(g, h))) == B(G.mul(g, h)))
    run("unit", [[()]], lambda _: B(one) == K(one, one))
    run("inverse", [pts], lambda g: B(G.inv(g)) == m(F.inv(B(g)), B(one), K(g, G.inv(g))))
    run("conjugate", [pts, pts], lambda g, h: B(G.conj(g, h)) == m(
        B(g), B(h), F.inv(B(g)), B(one), K(g, G.inv(g)), F.inv(K(h, G.inv(g))), F.inv(K(g, G.mul(h, G.inv(g))))))
    Es = A.E.elements()
    P = Q.pair
    d = A.boundary
    run("conj-product", [Es, Es], lambda e, f: em(Q.bracket_e(e), Q.bracket_e(f))
        == em(Q.bracket_e(A.E.mul(e, f)), P(d(e), d(f))))
    run("conj-action", [pts, Es], lambda g, e: T.act_E(B(g), Q.bracket_e(e)) == em(
        Q.bracket_e(A.act_E(g, e)), P(g, G.mul(d(e), G.inv(g))), P(d(e), G.inv(g)),
        EQ.inv(P(g, G.inv(g))), EQ.inv(P(one, one))))
    run("conj-cocycle", [pts, pts, pts], lambda g, h, i: em(P(G.mul(g, h), i), T.act_E(F.inv(B(i)), P(g, h)))
        == em(P(g, G.mul(h, i)), P(h, i)))
    words = list(F.words_up_to(1)) + [F.random_element(rng, 4) for _ in range(4)]
    run("conj-peiffer", [pts, pts, pts, pts, words], lambda g, h, g2, h2, l: T.act_E(
        F.mul(K(g, h), l), P(g2, h2)) == em(P(g, h), T.act_E(l, P(g2, h2)), EQ.inv(P(g, h))))
    return report_from(failures, {"seed": seed, "mode": "exhaustive" if len(pts) ** 3 <= max_triples else "sampled"},
                       checked)


def _prod(group: Group, xs: Iterable) -> Element:
    out = group.identity
    for x in xs:
        out = group.mul(out, x)
    return out


def strictify(f: XModMorphism) -> XModMorphism:
    """``f ∘ proj`` out of ``Q1`` of the source."""
    Q = q1(f.source)
    out = f.compose(Q.proj)
    out.__dict__  # noqa: B018 -- frozen dataclass, keep the composite as-is
    return XModMorphism(Q.total, f.target, out.mu, out.psi, out.phi, f"{f.name}∘proj")


def factor_strict(h: XModMorphism, A: TwoCrossedModule) -> XModMorphism | None:
    """The map ``A -> A'`` through which ``h: Q1(A) -> A'`` factors, if it does."""
    Q = q1(A)
    B = h.target
    for g in Q.points:
        for x in Q.points:
            if h.phi(Q.kernel_word(g, x)) != B.G.identity or h.psi(Q.pair(g, x)) != B.E.identity:
                return None
    return XModMorphism(A, B, h.mu, lambda e: h.psi(Q.bracket_e(e)), lambda g: h.phi(Q.bracket(g)),
                        f"{h.name}|")


# ---------------------------------------------------------------------------
# lax homotopies


@dataclass
class LaxHomotopy:
    base: XModMorphism
    s_hat: dict
    t_hat: dict
    Pi: dict
    name: str = "lax"

    @property
    def source(self) -> TwoCrossedModule:
        return self.base.source

    def key(self) -> tuple:
        A = self.source
        G, E = A.G.elements(), A.E.elements()
        return (tuple(self.s_hat[g] for g in G), tuple(self.t_hat[e] for e in E),
                tuple(self.Pi[g, h] for g in G for h in G))


def trivial_lax(f: XModMorphism) -> LaxHomotopy:
    A, B = f.source, f.target
    G, E = A.G.elements(), A.E.elements()
    return LaxHomotopy(f, {g: B.E.identity for g in G}, {e: B.L.identity for e in E},
                       {(g, h): B.L.identity for g in G for h in G}, "unit")


def lax_validate(f1: XModMorphism, s_hat: dict, t_hat: dict, Pi: dict, *,
                 fail_fast: bool = False) -> VerificationReport:
    """The five defining equations of a lax homotopy over all tuples of the finite source."""
    A, O = f1.source, GenericOps(f1.target)
    G, E = A.G, A.E
    Gs, Es = G.elements(), E.elements()
    phi, psi = f1.phi, f1.psi
    s, t = s_hat, t_hat
    d = A.boundary
    failures: list[tuple[str, tuple]] = []
    checked: dict[str, int] = {}

    def lax1(g, h):
        return O.b(s[G.mul(g, h)]) == O.b(O.Em(O.aE(O.Gi(phi(h)), s[g]), s[h]))

    def lax2(g, h):
        return s[G.mul(g, h)] == O.Em(O.aE(O.Gi(phi(h)), s[g]), s[h], O.d(Pi[g, h]))

    def lax3(a, b):
        sb, sa, pb = s[d(b)], s[d(a)], psi(b)
        inner = O.Lm(O.Li(O.lift(O.Ei(pb), O.Ei(sa))), O.sec(O.Ei(pb), t[a]))
        return O.Lm(Pi[d(a), d(b)], t[E.mul(a, b)]) == O.Lm(O.sec(O.Ei(sb), inner), t[b])

    def lax4(g, a):
        pg, sg, sa, pa = phi(g), s[g], s[d(a)], psi(a)
        lhs = O.Lm(
            O.aL(pg, O.sec(O.Em(sg, O.Ei(sa)), O.Li(O.lift(O.Ei(pa), O.Ei(sg))))),
            O.aL(pg, O.lift(sg, O.Em(O.Ei(sa), O.Ei(pa)))),
            O.aL(O.Gm(pg, O.b(sg)), t[a]),
        )
        gi = G.inv(g)
        one = G.identity
        rhs = O.Lm(O.Li(Pi[one, one]), O.Li(Pi[g, gi]), Pi[d(a), gi], Pi[g, G.mul(d(a), gi)],
                   t[A.act_E(g, a)])
        return lhs == rhs

    def lax5(g, h, i):
        lhs = O.Lm(O.sec(s[i], O.aL(O.Gi(phi(i)), Pi[g, h])), Pi[G.mul(g, h), i])
        return lhs == O.Lm(Pi[h, i], Pi[g, G.mul(h, i)])

    for law, doms, pred in (("1lax1", [Gs, Gs], lax1), ("1lax2", [Gs, Gs], lax2),
                            ("1lax5", [Gs, Gs, Gs], lax5), ("1lax3", [Es, Es], lax3),
                            ("1lax4", [Gs, Es], lax4)):
        n = 0
        for args in itertools.product(*doms):
            n += 1
            if not pred(*args):
                failures.append((law, args))
                if fail_fast:
                    return report_from(failures, {}, checked)
        checked[law] = n
    return report_from(failures, {"mode": "exhaustive"}, checked)


def lax_target(lh: LaxHomotopy, *, validate: bool = False) -> XModMorphism:
    """``phi2 = phi1 ∂s``, ``psi2 = psi1 s∂ δt``, ``mu2 = mu1 Pi(1,1)^-1 t δ``."""
    f1 = lh.base
    A, B = f1.source, f1.target
    if validate:
        rep = lax_validate(f1, lh.s_hat, lh.t_hat, lh.Pi)
        if not rep.passed:
            raise InvalidLaxData(rep)
    O = GenericOps(B)
    one = A.G.identity
    p11 = O.Li(lh.Pi[one, one])
    s, t = lh.s_hat, lh.t_hat
    return XModMorphism(
        A, B,
        lambda l: O.Lm(f1.mu(l), p11, t[A.delta(l)]),
        lambda e: O.Em(f1.psi(e), s[A.boundary(e)], O.d(t[e])),
        lambda g: O.Gm(f1.phi(g), O.b(s[g])),
        f"{f1.name}~",
    )


class Q1TEvaluator:
    """``t`` on level one of ``Q1(A)`` from ``t_hat``, ``Pi`` and the extended ``s``."""

    def __init__(self, Q: Q1Bundle, f1: XModMorphism, s: Callable, t_hat: dict, Pi: dict):
        self.Q = Q
        self.f1 = f1
        self.s = s
        self.t_hat = t_hat
        self.Pi = Pi
        self.P = path_space(f1.target)
        self.group = self.P.total.E
        self._factor = lru_cache(maxsize=None)(self._factor_value)
        self.value = lru_cache(maxsize=1 << 16)(self._value)

    def _generator(self, g, h):
        P, B = self.P, self.f1.target
        return P.path_e(B.E.identity, self.s(self.Q.kernel_word(g, h)), self.Pi[g, h])

    def _conj(self, word, x):
        P, phi = self.P, self.f1.phi
        return P.total.act_E(P.path_g(phi(self.Q.p(word)), self.s(word)), x)

    def _factor_value(self, g, h):
        """Image of the Schreier generator for the letter ``[h]`` read at coset ``g``."""
        Q, G, M = self.Q, self.Q.base.G, self.group
        one = G.identity
        gh = G.mul(g, h)
        if g == one:
            return self._generator(one, one) if h == one else M.identity
        if gh == one:
            return M.mul(self._generator(one, one), self._generator(g, h))
        return self._conj(Q.bracket(gh), self._generator(g, h))

    def kernel_image(self, word: tuple) -> Element:
        """Image of a word in the kernel of ``p``, rewritten into Schreier generators."""
        Q, G, M = self.Q, self.Q.base.G, self.group
        coset = G.identity
        out = M.identity
        for x in word:
            h = Q.points[abs(x) - 1]
            if x > 0:
                out = M.mul(out, self._factor(coset, h))
                coset = G.mul(coset, h)
            else:
                coset = G.mul(coset, G.inv(h))
                out = M.mul(out, M.inv(self._factor(coset, h)))
        if coset != G.identity:
            raise GroupError(f"{word!r} is not in the kernel of p")
        return out

    def image(self, x: tuple) -> Element:
        """Image in level one of the path space of the target."""
        e, u = x
        Q, F, P = self.Q, self.Q.free, self.P
        head = Q.bracket(Q.base.boundary(e))
        lead = P.path_e(self.f1.psi(e), self.s(head), self.t_hat[e])
        return self.group.mul(lead, self.kernel_image(F.mul(F.inv(head), u)))

    def _value(self, x: tuple) -> Element:
        return self.P.split_e(self.image(x))[2]

    def __call__(self, x: tuple) -> Element:
        return self.value(x)


def lax_to_strict(lh: LaxHomotopy) -> Homotopy:
    """The homotopy out of ``Q1`` with ``s([g]) = s_hat(g)``, ``t[e] = t_hat(e)``, ``t(g,h) = Pi(g,h)``."""
    f1 = lh.base
    Q = q1(f1.source)
    base = strictify(f1)
    s = extend_derivation(base.phi, Q.free, f1.target, [lh.s_hat[g] for g in Q.points], name="s")
    t = Q1TEvaluator(Q, f1, s, lh.t_hat, lh.Pi)
    return make_homotopy(base, s, t, lh.name)


def strict_to_lax(h: Homotopy, A: TwoCrossedModule) -> LaxHomotopy:
    """Read ``(s_hat, t_hat, Pi)`` off a homotopy between strict maps out of ``Q1(A)``."""
    Q = q1(A)
    f1 = factor_strict(h.base, A)
    if f1 is None or factor_strict(h.target, A) is None:
        raise NotStrictEndpoints(f"{h.name} does not connect strict maps")
    G = Q.points
    return LaxHomotopy(
        f1,
        {g: h.s(Q.bracket(g)) for g in G},
        {e: h.t(Q.bracket_e(e)) for e in A.E.elements()},
        {(g, x): h.t(Q.pair(g, x)) for g in G for x in G},
        h.name,
    )


def strict_target_report(h: Homotopy, A: TwoCrossedModule) -> VerificationReport:
    """The target of ``h`` kills the kernel of ``proj`` on its normal generators."""
    Q = q1(A)
    B = h.base.target
    failures = []
    for g in Q.points:
        for x in Q.points:
            if h.target.phi(Q.kernel_word(g, x)) != B.G.identity:
                failures.append(("strict-target-G", (g, x)))
            if h.target.psi(Q.pair(g, x)) != B.E.identity:
                failures.append(("strict-target-E", (g, x)))
    n = len(Q.points) ** 2
    return report_from(failures, {}, {"strict-target-G": n, "strict-target-E": n})


def extension_report(lh: LaxHomotopy, h: Homotopy) -> VerificationReport:
    """``h`` restricts to ``(s_hat, t_hat, Pi)`` on the generators of ``Q1``."""
    Q = q1(lh.source)
    failures = []
    for g in Q.points:
        if h.s(Q.bracket(g)) != lh.s_hat[g]:
            failures.append(("extension-s", (g,)))
        for x in Q.points:
            if h.t(Q.pair(g, x)) != lh.Pi[g, x]:
                failures.append(("extension-Pi", (g, x)))
    for e in lh.source.E.elements():
        if h.t(Q.bracket_e(e)) != lh.t_hat[e]:
            failures.append(("extension-t", (e,)))
    n = len(Q.points)
    return report_from(failures, {}, {"extension-s": n, "extension-Pi": n * n,
                                      "extension-t": len(lh.source.E.elements())})


def strict_side_accepts(lh: LaxHomotopy, *, depth: int = 2, samples: int = 30,
                        max_tuples: int = 1500, seed: int = 0, fail_fast: bool = True,
                        include_path_space: bool = False) -> VerificationReport:
    """The strict oracle: ``lax_to_strict(lh)`` reproduces the tables and is a quadratic derivation with a strict target."""
    h = lax_to_strict(lh)
    rep = extension_report(lh, h)
    if fail_fast and not rep.passed:
        return rep
    rep = rep.merge(strict_target_report(h, lh.source))
    if fail_fast and not rep.passed:
        return rep
    return rep.merge(is_quadratic_derivation(h.base, h.s, h.t, depth=depth, samples=samples,
                                             max_tuples=max_tuples, seed=seed, fail_fast=fail_fast,
                                             include_path_space=include_path_space))


def _check_endpoints(lh1: LaxHomotopy, lh2: LaxHomotopy) -> None:
    f = lax_target(lh1)
    g = lh2.base
    A = lh1.source
    for x in A.G.elements():
        if f.phi(x) != g.phi(x):
            raise NotStrictEndpoints("lax homotopies are not composable")
    for x in A.E.elements():
        if f.psi(x) != g.psi(x):
            raise NotStrictEndpoints("lax homotopies are not composable")


def lax_concat(lh1: LaxHomotopy, lh2: LaxHomotopy, *, check_endpoints: bool = True) -> LaxHomotopy:
    A, B = lh1.source, lh1.base.target
    if check_endpoints:
        _check_endpoints(lh1, lh2)
    O = GenericOps(B)
    Q = q1(A)
    G, E = A.G, A.E
    h1, h2 = lax_to_strict(lh1), lax_to_strict(lh2)
    s = {g: O.Em(lh1.s_hat[g], lh2.s_hat[g]) for g in G.elements()}
    t = {e: O.Lm(O.sec(O.Ei(lh2.s_hat[A.boundary(e)]), lh1.t_hat[e]), lh2.t_hat[e]) for e in E.elements()}
    Pi = {}
    for g in G.elements():
        for x in G.elements():
            th = theta(h1, h2, Q.index(G.mul(g, x)), Q.index(g), Q.index(x))
            Pi[g, x] = O.Lm(th, lh2.Pi[g, x], lh1.Pi[g, x])
    return LaxHomotopy(lh1.base, s, t, Pi, f"{lh1.name}⊗{lh2.name}")


def lax_invert(lh: LaxHomotopy) -> LaxHomotopy:
    A, B = lh.source, lh.base.target
    O = GenericOps(B)
    Q = q1(A)
    G = A.G
    h = lax_to_strict(lh)
    hbar = invert_homotopy(h)
    s = {g: O.Ei(lh.s_hat[g]) for g in G.elements()}
    t = {e: O.sec(lh.s_hat[A.boundary(e)], O.Li(lh.t_hat[e])) for e in A.E.elements()}
    Pi = {}
    for g in G.elements():
        for x in G.elements():
            th = theta(h, hbar, Q.index(G.mul(g, x)), Q.index(g), Q.index(x))
            Pi[g, x] = O.Lm(O.Li(th), O.Li(lh.Pi[g, x]))
    return LaxHomotopy(lax_target(lh), s, t, Pi, f"{lh.name}^-1")


def lax_equal(lh1: LaxHomotopy, lh2: LaxHomotopy) -> bool:
    return lh1.key() == lh2.key()


# ---------------------------------------------------------------------------
# lax 2-fold homotopies


@dataclass
class LaxTwoFold:
    base: LaxHomotopy
    k_hat: dict
    name: str = "k"


def lax_twofold_to_strict(k: LaxTwoFold) -> Quadratic2Derivation:
    Q = q1(k.base.source)
    return extend_2derivation(lax_to_strict(k.base), [k.k_hat[g] for g in Q.points], k.name)


def lax_twofold_target(k: LaxTwoFold) -> LaxHomotopy:
    """``s' = s δk``, ``t' = k(∂e)^-1 t``, ``Pi'(g,h) = Xi([gh],[g],[h])^-1 Pi(g,h)``."""
    lh = k.base
    A, B = lh.source, lh.base.target
    O = GenericOps(B)
    Q = q1(A)
    G = A.G
    strict = lax_twofold_to_strict(k)
    s = {g: O.Em(lh.s_hat[g], O.d(k.k_hat[g])) for g in G.elements()}
    t = {e: O.Lm(O.Li(k.k_hat[A.boundary(e)]), lh.t_hat[e]) for e in A.E.elements()}
    Pi = {(g, x): O.Lm(O.Li(xi(strict, Q.bracket(G.mul(g, x)), Q.bracket(g), Q.bracket(x))), lh.Pi[g, x])
          for g in G.elements() for x in G.elements()}
    return LaxHomotopy(lh.base, s, t, Pi, f"{lh.name}'")


def lax_vertical(k1: LaxTwoFold, k2: LaxTwoFold) -> LaxTwoFold:
    B = k1.base.base.target
    return LaxTwoFold(k1.base, {g: B.L.mul(k1.k_hat[g], v) for g, v in k2.k_hat.items()},
                      f"{k1.name}⋄{k2.name}")


def lax_invert_twofold(k: LaxTwoFold) -> LaxTwoFold:
    B = k.base.base.target
    return LaxTwoFold(lax_twofold_target(k), {g: B.L.inv(v) for g, v in k.k_hat.items()}, f"{k.name}^-1")


def lax_whisker_right(k: LaxTwoFold, lh2: LaxHomotopy) -> LaxTwoFold:
    O = GenericOps(k.base.base.target)
    return LaxTwoFold(lax_concat(k.base, lh2, check_endpoints=False),
                      {g: O.sec(O.Ei(lh2.s_hat[g]), v) for g, v in k.k_hat.items()},
                      f"{k.name}⊗{lh2.name}")


def lax_whisker_left(lh2: LaxHomotopy, k: LaxTwoFold) -> LaxTwoFold:
    return LaxTwoFold(lax_concat(lh2, k.base, check_endpoints=False), dict(k.k_hat), f"{lh2.name}⊗{k.name}")


# ---------------------------------------------------------------------------
# composition with strict maps


def lax_compose_strict(h: XModMorphism, lh: LaxHomotopy, side: str = "left") -> LaxHomotopy:
    """``h ∘ lh`` (side ``left``) or ``lh ∘ h`` (side ``right``)."""
    if side == "left":
        return LaxHomotopy(h.compose(lh.base), {g: h.psi(v) for g, v in lh.s_hat.items()},
                           {e: h.mu(v) for e, v in lh.t_hat.items()},
                           {gh: h.mu(v) for gh, v in lh.Pi.items()}, f"{h.name}∘{lh.name}")
    if side == "right":
        A2 = h.source
        G, E = A2.G.elements(), A2.E.elements()
        return LaxHomotopy(lh.base.compose(h), {g: lh.s_hat[h.phi(g)] for g in G},
                           {e: lh.t_hat[h.psi(e)] for e in E},
                           {(g, x): lh.Pi[h.phi(g), h.phi(x)] for g in G for x in G}, f"{lh.name}∘{h.name}")
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


# ---------------------------------------------------------------------------
# exhaustive search


def lax_search_space(f1: XModMorphism) -> tuple[list, list, list, int]:
    A, B = f1.source, f1.target
    nG, nE = len(A.G.elements()), len(A.E.elements())
    Es, Ls = B.E.elements(), B.L.elements()
    size = len(Es) ** nG * len(Ls) ** nE * len(Ls) ** (nG * nG)
    return Es, Ls, [nG, nE], size


def _tuples(f1: XModMorphism) -> Iterable[LaxHomotopy]:
    A = f1.source
    Gs, Es = A.G.elements(), A.E.elements()
    E2, L2, _, _ = lax_search_space(f1)
    pairs = [(g, h) for g in Gs for h in Gs]
    for sv in itertools.product(E2, repeat=len(Gs)):
        for tv in itertools.product(L2, repeat=len(Es)):
            for pv in itertools.product(L2, repeat=len(pairs)):
                yield LaxHomotopy(f1, dict(zip(Gs, sv)), dict(zip(Es, tv)), dict(zip(pairs, pv)))


def search_lax_homotopies(f1: XModMorphism, *, limit: int = 200_000, jobs: int = 1) -> list[LaxHomotopy]:
    """All lax homotopies starting at ``f1`` whose tables fit in ``limit`` tuples, in tuple order."""
    *_, size = lax_search_space(f1)
    if size > limit:
        raise GroupError(f"search space of {size} tuples exceeds the bound {limit}")
    if jobs <= 1:
        return [lh for lh in _tuples(f1) if lax_validate(f1, lh.s_hat, lh.t_hat, lh.Pi, fail_fast=True).passed]
    chunks = list(_chunks(list(_tuples(f1)), jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_validate_chunk, chunks))
    return [lh for part in results for lh in part]


def _chunks(xs: list, n: int) -> Iterable[list]:
    size = max(1, -(-len(xs) // n))
    for i in range(0, len(xs), size):
        yield xs[i:i + size]


def _validate_chunk(chunk: list[LaxHomotopy]) -> list[LaxHomotopy]:
    return [lh for lh in chunk if lax_validate(lh.base, lh.s_hat, lh.t_hat, lh.Pi, fail_fast=True).passed]


def all_lax_tuples(f1: XModMorphism) -> Iterable[LaxHomotopy]:
    return _tuples(f1)


def all_morphisms(A: TwoCrossedModule, B: TwoCrossedModule) -> list[XModMorphism]:
    """Every morphism between finite modules with ``A``'s groups cyclic or small (brute force over tables)."""
    Ls, Es, Gs = A.L.elements(), A.E.elements(), A.G.elements()
    out = []
    for phi_vals in itertools.product(B.G.elements(), repeat=len(Gs)):
        phi = dict(zip(Gs, phi_vals))
        if any(phi[A.G.mul(a, b)] != B.G.mul(phi[a], phi[b]) for a in Gs for b in Gs):
            continue
        for psi_vals in itertools.product(B.E.elements(), repeat=len(Es)):
            psi = dict(zip(Es, psi_vals))
            if any(psi[A.E.mul(a, b)] != B.E.mul(psi[a], psi[b]) for a in Es for b in Es):
                continue
            for mu_vals in itertools.product(B.L.elements(), repeat=len(Ls)):
                mu = dict(zip(Ls, mu_vals))
                f = XModMorphism(A, B, mu.__getitem__, psi.__getitem__, phi.__getitem__, f"f{len(out)}")
                if xmod_map_verify(f).passed:
                    out.append(f)
    return out


def lax_cells(A: TwoCrossedModule, B: TwoCrossedModule, *, jobs: int = 1) -> dict:
    """Every morphism ``A -> B`` and every lax homotopy between them (finite search)."""
    morphisms = all_morphisms(A, B)
    homotopies = []
    for f in morphisms:
        homotopies += search_lax_homotopies(f, jobs=jobs)
    return {"morphisms": morphisms, "homotopies": homotopies}


# ---------------------------------------------------------------------------
# lax homotopy equivalence


def _agree(f: XModMorphism, g: XModMorphism) -> bool:
    A = f.source
    return (all(f.mu(x) == g.mu(x) for x in A.L.elements())
            and all(f.psi(x) == g.psi(x) for x in A.E.elements())
            and all(f.phi(x) == g.phi(x) for x in A.G.elements()))


def _witness(f_start: XModMorphism, f_end: XModMorphism, given: LaxHomotopy | None,
             limit: int, label: str) -> tuple[list, dict, str]:
    failures, checked = [], {label: 1}
    if given is not None:
        rep = lax_validate(given.base, given.s_hat, given.t_hat, given.Pi)
        failures += [(f"{label}-{law}", w) for law, w in rep.failures]
        if not _agree(given.base, f_start):
            failures.append((f"{label}-start", ()))
        if rep.passed and not _agree(lax_target(given), f_end):
            failures.append((f"{label}-end", ()))
        return failures, checked, "given"
    *_, size = lax_search_space(f_start)
    if size > limit:
        failures.append((f"{label}-not-found-within-bounds", (size, limit)))
        return failures, checked, "search too large"
    for lh in search_lax_homotopies(f_start, limit=limit):
        if _agree(lax_target(lh), f_end):
            return failures, checked, "found"
    failures.append((f"{label}-not-found-within-bounds", (size, limit)))
    return failures, checked, "not found within bounds"


def is_lax_equivalence(f: XModMorphism, g: XModMorphism, lh1: LaxHomotopy | None = None,
                       lh2: LaxHomotopy | None = None, *, limit: int = 200_000) -> VerificationReport:
    """Witnesses ``id -> g∘f`` and ``id -> f∘g``, validated or searched for within ``limit`` tuples."""
    A, B = f.source, f.target
    if g.source is not B or g.target is not A:
        raise NotStrictEndpoints(f"{g.name} does not go from {B.name} back to {A.name}")
    fail1, chk1, how1 = _witness(identity_morphism(A), g.compose(f), lh1, limit, "source-witness")
    fail2, chk2, how2 = _witness(identity_morphism(B), f.compose(g), lh2, limit, "target-witness")
    return report_from(fail1 + fail2, {"source-witness": how1, "target-witness": how2}, {**chk1, **chk2})


def compose_equivalences(f: XModMorphism, g: XModMorphism, lh_src: LaxHomotopy, lh_tgt: LaxHomotopy,
                         f2: XModMorphism, g2: XModMorphism, lh2_src: LaxHomotopy,
                         lh2_tgt: LaxHomotopy) -> tuple[LaxHomotopy, LaxHomotopy]:
    """Witnesses for ``f2∘f`` with inverse ``g∘g2`` built by whiskering and concatenation."""
    first = lax_concat(lh_src, lax_compose_strict(f, lax_compose_strict(g, lh2_src, "left"), "right"),
                       check_endpoints=False)
    second = lax_concat(lh2_tgt, lax_compose_strict(g2, lax_compose_strict(f2, lh_tgt, "left"), "right"),
                        check_endpoints=False)
    return first, second


# ---------------------------------------------------------------------------
# the asymmetry example


def integer_solutions_of_torsion(n: int) -> set[int] | None:
    """Solutions of ``n x = 0`` in the integers; ``None`` stands for all integers."""
    return None if n == 0 else {0}


@dataclass
class CounterexampleResult:
    forward: VerificationReport
    forward_target_trivial: bool
    reverse_candidates: int
    reverse_found: list
    analytic_solutions: set[int] | None
    analytic_blocks_reverse: bool

    @property
    def passed(self) -> bool:
        return (self.forward.passed and self.forward_target_trivial and not self.reverse_found
                and self.analytic_blocks_reverse)

    def lines(self) -> list[str]:
        return [
            f"forward homotopy (s(1)=1, s(0)=0, t=0): {'pass' if self.forward.passed else 'FAIL'}",
            f"forward target is the trivial map: {self.forward_target_trivial}",
            f"reverse search over s'(1) in bounds: {self.reverse_candidates} candidates, "
            f"{'none valid (not found within bounds)' if not self.reverse_found else self.reverse_found}",
            f"exact check: 2x = 0 over the integers has solutions {sorted(self.analytic_solutions or [])}; "
            f"s'(1) = 0 gives boundary 0 != 1, so no reverse homotopy exists: {self.analytic_blocks_reverse}",
        ]


def counterexample_report(bound: int = 100) -> CounterexampleResult:
    from .corpus import counterexample_morphism, reverse_counterexample_morphism

    f = counterexample_morphism()
    f_rev = reverse_counterexample_morphism()
    A, B = f.source, f.target
    s = {0: 0, 1: 1}.__getitem__
    t = lambda e: 0  # noqa: E731
    forward = is_quadratic_derivation(f, s, t).merge(xmod_map_verify(f), prefix="morphism-")
    target = make_homotopy(f, s, t).target
    trivial = all(target.phi(g) == 0 for g in A.G.elements()) and all(target.psi(e) == 0 for e in A.E.elements())
    found = []
    for x in range(-bound, bound + 1):
        s2 = {0: 0, 1: x}.__getitem__
        if not is_quadratic_derivation(f_rev, s2, t, fail_fast=True).passed:
            continue
        end = make_homotopy(f_rev, s2, t).target
        if all(end.phi(g) == f.phi(g) for g in A.G.elements()):
            found.append(x)
    # s' is a homomorphism Z2 -> Z, so s'(1) + s'(1) = s'(0) = 0.
    solutions = integer_solutions_of_torsion(2)
    blocks = solutions is not None and all(B.boundary(x) != f.phi(1) for x in solutions)
    return CounterexampleResult(forward, trivial, 2 * bound + 1, found, solutions, blocks)


# ---------------------------------------------------------------------------
# agreement with the strict calculus and the 2-groupoid laws on tables


def _strict_maps_agree(f: XModMorphism, g: XModMorphism, Q: Q1Bundle) -> bool:
    T = Q.total
    Es = T.E.probe()
    Gs = list(Q.free.words_up_to(2)) + [Q.kernel_word(a, b) for a in Q.points for b in Q.points]
    return (all(f.mu(x) == g.mu(x) for x in T.L.elements())
            and all(f.psi(x) == g.psi(x) for x in Es) and all(f.phi(x) == g.phi(x) for x in Gs))


def _basis_report(law: str, lax_k: "LaxTwoFold", strict_k: Quadratic2Derivation) -> list:
    Q = q1(lax_k.base.source)
    expected = tuple(lax_k.k_hat[g] for g in Q.points)
    got = tuple(strict_k(Q.free.generator(i)) for i in range(len(Q.points)))
    return [] if expected == got else [(law, (expected, got))]


def correspondence_report(lh: LaxHomotopy, lh2: LaxHomotopy | None = None,
                          k_hat: dict | None = None, k2_hat: dict | None = None) -> VerificationReport:
    """Every lax operation agrees with its strict counterpart through ``lax_to_strict``.

    ``lh2`` must start at the target of ``lh``; ``k_hat`` is a 2-fold table on
    ``lh`` and ``k2_hat`` one on the target homotopy of ``k_hat``.
    """
    from .homotopy import (concat_homotopies, invert_twofold, twofold_target, vertical_compose,
                           whisker_left, whisker_right)

    Q = q1(lh.source)
    h = lax_to_strict(lh)
    failures: list = []
    checked: dict[str, int] = {}

    def note(law: str, rep_or_list) -> None:
        checked[law] = checked.get(law, 0) + 1
        items = rep_or_list.failures if isinstance(rep_or_list, VerificationReport) else rep_or_list
        failures.extend((f"{law}:{name}", w) for name, w in items)

    note("target", [] if _strict_maps_agree(strictify(lax_target(lh)), h.target, Q) else [("maps", ())])
    note("invert", extension_report(lax_invert(lh), invert_homotopy(h)))
    if lh2 is not None:
        h2 = lax_to_strict(lh2)
        note("concat", extension_report(lax_concat(lh, lh2), concat_homotopies(h, h2, check_endpoints=False)))
    if k_hat is not None:
        k = LaxTwoFold(lh, k_hat)
        ks = lax_twofold_to_strict(k)
        note("twofold-target", extension_report(lax_twofold_target(k), twofold_target(ks)))
        note("twofold-invert", _basis_report("basis", lax_invert_twofold(k), invert_twofold(ks)))
        if k2_hat is not None:
            top = lax_twofold_target(k)
            k2 = LaxTwoFold(top, k2_hat)
            ks2 = extend_2derivation(twofold_target(ks), [k2_hat[g] for g in Q.points])
            note("twofold-vertical", _basis_report("basis", lax_vertical(k, k2),
                                                   vertical_compose(ks, ks2, check_endpoints=False)))
        if lh2 is not None:
            h2 = lax_to_strict(lh2)
            note("whisker-right", _basis_report("basis", lax_whisker_right(k, lh2),
                                                whisker_right(ks, h2, check_endpoints=False)))
        pre = trivial_lax(lh.base)
        note("whisker-left", _basis_report("basis", lax_whisker_left(pre, k),
                                           whisker_left(lax_to_strict(pre), ks, check_endpoints=False)))
    return report_from(failures, {}, checked)


def _ends_at(lh: LaxHomotopy) -> tuple:
    f = lax_target(lh)
    A = lh.source
    return tuple(f.phi(g) for g in A.G.elements()) + tuple(f.psi(e) for e in A.E.elements())


def _starts_at(lh: LaxHomotopy) -> tuple:
    f = lh.base
    A = lh.source
    return tuple(f.phi(g) for g in A.G.elements()) + tuple(f.psi(e) for e in A.E.elements())


def lax_groupoid_report(homotopies: Sequence[LaxHomotopy], *, max_triples: int = 400, max_cells: int = 200,
                        seed: int = 0) -> VerificationReport:
    """Associativity, units, inverses, 2-fold composition, whiskering and interchange on exact tables."""
    rng = random.Random(seed)
    hs = list(homotopies)
    if not hs:
        return report_from([], {}, {})
    B = hs[0].base.target
    Gs = hs[0].source.G.elements()
    starts = [_starts_at(x) for x in hs]
    ends = [_ends_at(x) for x in hs]
    by_start: dict[tuple, list[int]] = {}
    for i, st in enumerate(starts):
        by_start.setdefault(st, []).append(i)
    failures: list = []
    checked: dict[str, int] = {}

    def check(law: str, ok: bool, witness: tuple) -> None:
        checked[law] = checked.get(law, 0) + 1
        if not ok:
            failures.append((law, witness))

    def sample(xs: list, n: int) -> list:
        return xs if len(xs) <= n else rng.sample(xs, n)

    triples = [(i, j, m) for i in range(len(hs)) for j in by_start.get(ends[i], [])
               for m in by_start.get(ends[j], [])] if len(hs) ** 3 <= 10 ** 7 else []
    for i, j, m in sample(triples, max_triples):
        left = lax_concat(lax_concat(hs[i], hs[j], check_endpoints=False), hs[m], check_endpoints=False)
        right = lax_concat(hs[i], lax_concat(hs[j], hs[m], check_endpoints=False), check_endpoints=False)
        check("associativity", lax_equal(left, right), (i, j, m))
    for i, x in enumerate(hs):
        unit_l, unit_r = trivial_lax(x.base), trivial_lax(lax_target(x))
        check("left-unit", lax_equal(lax_concat(unit_l, x, check_endpoints=False), x), (i,))
        check("right-unit", lax_equal(lax_concat(x, unit_r, check_endpoints=False), x), (i,))
        inv = lax_invert(x)
        check("inverse-valid", lax_validate(inv.base, inv.s_hat, inv.t_hat, inv.Pi, fail_fast=True).passed, (i,))
        check("right-inverse", lax_equal(lax_concat(x, inv, check_endpoints=False), unit_l), (i,))
        check("left-inverse", lax_equal(lax_concat(inv, x, check_endpoints=False), unit_r), (i,))
        check("inverse-involution", lax_equal(lax_invert(inv), x), (i,))
    Ls = B.L.elements()
    tables = [dict(zip(Gs, v)) for v in itertools.product(Ls, repeat=len(Gs))]
    cells = [(i, tab) for i in range(len(hs)) for tab in tables]
    keys = {x.key(): i for i, x in enumerate(hs)}
    for i, tab in sample(cells, max_cells):
        k = LaxTwoFold(hs[i], tab)
        top = lax_twofold_target(k)
        check("twofold-target-valid", top.key() in keys, (i,))
        if top.key() not in keys:
            continue
        inv = lax_invert_twofold(k)
        check("twofold-inverse-endpoint", lax_equal(lax_twofold_target(inv), hs[i]), (i,))
        check("twofold-inverse", all(v == B.L.identity for v in lax_vertical(k, inv).k_hat.values()), (i,))
        tab2 = rng.choice(tables)
        k2 = LaxTwoFold(top, tab2)
        vert = lax_vertical(k, k2)
        check("vertical-endpoint", lax_equal(lax_twofold_target(vert), lax_twofold_target(k2)), (i,))
        followers = by_start.get(ends[i], [])
        preceding = [j for j in range(len(hs)) if ends[j] == starts[i]]
        if followers:
            u = hs[rng.choice(followers)]
            wr = lax_whisker_right(vert, u)
            parts = lax_vertical(lax_whisker_right(k, u), lax_whisker_right(k2, u))
            check("whisker-right-functorial", wr.k_hat == parts.k_hat, (i,))
            check("whisker-right-endpoint", lax_equal(lax_twofold_target(lax_whisker_right(k, u)),
                                                      lax_concat(top, u, check_endpoints=False)), (i,))
            k3 = LaxTwoFold(u, rng.choice(tables))
            u_top = lax_twofold_target(k3)
            if u_top.key() in keys:
                first = lax_vertical(lax_whisker_right(k, u), lax_whisker_left(top, k3))
                second = lax_vertical(lax_whisker_left(hs[i], k3), lax_whisker_right(k, u_top))
                check("interchange", first.k_hat == second.k_hat, (i,))
        if preceding:
            u = hs[rng.choice(preceding)]
            wl = lax_whisker_left(u, vert)
            parts = lax_vertical(lax_whisker_left(u, k), lax_whisker_left(u, k2))
            check("whisker-left-functorial", wl.k_hat == parts.k_hat, (i,))
            check("whisker-left-endpoint", lax_equal(lax_twofold_target(lax_whisker_left(u, k)),
                                                     lax_concat(u, top, check_endpoints=False)), (i,))
    return report_from(failures, {"seed": seed, "homotopies": len(hs)}, checked)


# ---------------------------------------------------------------------------
# the strict/lax bijection over the finite corpus

BIJECTION_PAIRS = (("fixC_Z2", "fixD"), ("fixC_Z2", "fixC_Z2"), ("fixA", "fixC_Z2"),
                   ("fixA", "fixD"), ("fixC_Z2", "fixA"))


def _corpus_morphisms(source: str, target: str) -> list[XModMorphism]:
    from .corpus import fixtures

    fx = _corpus_cache.get("fixtures")
    if fx is None:
        fx = _corpus_cache["fixtures"] = fixtures()
    key = (source, target)
    if key not in _corpus_cache:
        _corpus_cache[key] = all_morphisms(fx[source], fx[target])
    return _corpus_cache[key]


_corpus_cache: dict = {}


def _bijection_chunk(job: tuple) -> tuple[int, int, int, list]:
    """``(lax accepted, strict accepted, tuples, mismatches)`` on one slice of one search space."""
    source, target, index, start, stop = job
    f = _corpus_morphisms(source, target)[index]
    lax_ok = strict_ok = n = 0
    mismatches = []
    for lh in itertools.islice(_tuples(f), start, stop):
        n += 1
        a = lax_validate(f, lh.s_hat, lh.t_hat, lh.Pi, fail_fast=True).passed
        b = strict_side_accepts(lh).passed
        lax_ok += a
        strict_ok += b
        if a != b:
            mismatches.append((index, lh.key(), a, b))
    return lax_ok, strict_ok, n, mismatches


def bijection_report(pairs: Sequence[tuple[str, str]] = BIJECTION_PAIRS, *, limit: int = 30_000,
                     jobs: int = 1, chunk: int = 2000) -> VerificationReport:
    """Compare ``lax_validate`` with the strict oracle on every tuple of every corpus search space."""
    work = []
    skipped = []
    for source, target in pairs:
        for index, f in enumerate(_corpus_morphisms(source, target)):
            size = lax_search_space(f)[3]
            if size > limit:
                skipped.append((source, target, index, size))
                continue
            work += [(source, target, index, lo, min(lo + chunk, size)) for lo in range(0, size, chunk)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_bijection_chunk, work))
    else:
        results = [_bijection_chunk(job) for job in work]
    failures, checked, totals = [], {}, {}
    for job, (lax_ok, strict_ok, n, bad) in zip(work, results):
        name = f"{job[0]}->{job[1]}"
        checked[name] = checked.get(name, 0) + n
        t = totals.setdefault(name, [0, 0])
        t[0] += lax_ok
        t[1] += strict_ok
        failures += [(f"bijection {name}", m) for m in bad]
    probe = {"accepted (lax, strict)": {k: tuple(v) for k, v in totals.items()}, "skipped": skipped,
             "limit": limit}
    return report_from(failures, probe, checked)
