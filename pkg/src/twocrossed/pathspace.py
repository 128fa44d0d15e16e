"""Path spaces of 2-crossed modules and the simplicial shapes built from them.

``path_space(A)`` assembles the pointed path space from the derived action
and the two lifted actions.  Iterating it gives the double path space, inside
which the triangle space, the disk space and the tetrahedron group live as
constrained sub-carriers with inherited operations.  The closed-form
coordinate formulas for faces and operations are kept next to them as
independent oracles.

Coordinates are flat tuples: ``(k, l)`` for ``L x| L``, ``(a, e, k)`` for
``E x| (E x| L)`` and ``(g, e)`` for ``G x| E``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Iterable

from .groups import (
    Element,
    EmbeddedGroup,
    FlatSemidirectProduct,
    Group,
    GroupError,
    Homomorphism,
    bounded_product,
    flat_arity,
)
from .xmod import (
    TwoCrossedModule,
    VerificationReport,
    XModMorphism,
    report_from,
)

CACHE_SIZE = 1 << 18


class ClosureFailure(GroupError):
    pass


class EmbeddingNotHomomorphic(GroupError):
    pass


def derived_action(A: TwoCrossedModule, b: Element, ek: tuple) -> tuple:
    """``b * (e, k) = (∂b ▷ e, {b, e^-1}^-1 (b ▷' k))``."""
    e, k = ek if flat_arity(A.E) == 1 and flat_arity(A.L) == 1 else _split_el(A, ek)
    L, E = A.L, A.E
    e2 = A.act_E(A.boundary(b), e)
    k2 = L.mul(L.inv(A.lifting(b, E.inv(e))), A.secondary_action(b, k))
    return _join_el(A, e2, k2)


def _split_el(A: TwoCrossedModule, ek: tuple) -> tuple:
    m = flat_arity(A.E)
    n = flat_arity(A.L)
    return (ek[0] if m == 1 else ek[:m]), (ek[m] if n == 1 else ek[m:])


def _join_el(A: TwoCrossedModule, e: Element, k: Element) -> tuple:
    return ((e,) if flat_arity(A.E) == 1 else e) + ((k,) if flat_arity(A.L) == 1 else k)


def first_lifted_action(A: TwoCrossedModule, gx: tuple, aek: tuple) -> tuple:
    """Action of ``G x| E`` on ``E x| (E x| L)``.

    ``x • (a, e, k) = (a, (∂a^-1 ▷ x) e x^-1, (x e^-1) ▷' {a^-1, x^-1}^-1 · {x, e^-1 a^-1} · ∂x ▷ k)``
    followed by the componentwise action of ``g``.
    """
    L, E, G = A.L, A.E, A.G
    g, x = _split(A.G, A.E, gx)
    a, e, k = _split3(A, aek)
    ai, ei, xi = E.inv(a), E.inv(e), E.inv(x)
    e2 = E.mul(E.mul(A.act_E(G.inv(A.boundary(a)), x), e), xi)
    k2 = L.mul(
        L.mul(A.secondary_action(E.mul(x, ei), L.inv(A.lifting(ai, xi))), A.lifting(x, E.mul(ei, ai))),
        A.act_L(A.boundary(x), k),
    )
    return _join3(A, A.act_E(g, a), A.act_E(g, e2), A.act_L(g, k2))


def second_lifted_action(A: TwoCrossedModule, gx: tuple, kl: tuple) -> tuple:
    """``(g, x) • (k, l) = g ▷ (k, k^-1 · ∂x ▷ (k l))``."""
    L = A.L
    g, x = _split(A.G, A.E, gx)
    k, l = _split(A.L, A.L, kl)
    l2 = L.mul(L.inv(k), A.act_L(A.boundary(x), L.mul(k, l)))
    return _join(A.L, A.L, A.act_L(g, k), A.act_L(g, l2))


def _split(H: Group, N: Group, x: tuple) -> tuple:
    m, n = flat_arity(H), flat_arity(N)
    return (x[0] if m == 1 else x[:m]), (x[m] if n == 1 else x[m:])


def _join(H: Group, N: Group, h: Element, n: Element) -> tuple:
    return ((h,) if flat_arity(H) == 1 else h) + ((n,) if flat_arity(N) == 1 else n)


def _split3(A: TwoCrossedModule, aek: tuple) -> tuple:
    m, n = flat_arity(A.E), flat_arity(A.L)
    if m == 1 and n == 1:
        return aek
    return ((aek[0] if m == 1 else aek[:m]),
            (aek[m] if m == 1 else aek[m:2 * m]),
            (aek[2 * m] if n == 1 else aek[2 * m:]))


def _join3(A: TwoCrossedModule, a: Element, e: Element, k: Element) -> tuple:
    wrap_e = (lambda x: (x,)) if flat_arity(A.E) == 1 else (lambda x: x)
    wrap_l = (lambda x: (x,)) if flat_arity(A.L) == 1 else (lambda x: x)
    return wrap_e(a) + wrap_e(e) + wrap_l(k)


@dataclass
class PathSpaceBundle:
    """The path space ``total`` of ``base`` with its two endpoint maps and the constant-path map."""

    base: TwoCrossedModule
    total: TwoCrossedModule
    pr0: XModMorphism
    pr1: XModMorphism
    incl: XModMorphism
    secondary_product: FlatSemidirectProduct

    # coordinate helpers

    def path_l(self, k: Element, l: Element) -> tuple:
        return _join(self.base.L, self.base.L, k, l)

    def path_e(self, a: Element, e: Element, k: Element) -> tuple:
        return _join3(self.base, a, e, k)

    def path_g(self, g: Element, e: Element) -> tuple:
        return _join(self.base.G, self.base.E, g, e)

    def split_l(self, x: tuple) -> tuple:
        return _split(self.base.L, self.base.L, x)

    def split_e(self, x: tuple) -> tuple:
        return _split3(self.base, x)

    def split_g(self, x: tuple) -> tuple:
        return _split(self.base.G, self.base.E, x)


_PATH_SPACES: dict[int, tuple[TwoCrossedModule, PathSpaceBundle]] = {}


def path_space(A: TwoCrossedModule) -> PathSpaceBundle:
    """The pointed path space of ``A`` (memoised per module object)."""
    hit = _PATH_SPACES.get(id(A))
    if hit is not None and hit[0] is A:
        return hit[1]
    bundle = _build_path_space(A)
    _PATH_SPACES[id(A)] = (A, bundle)
    return bundle


def _build_path_space(A: TwoCrossedModule) -> PathSpaceBundle:
    L, E, G = A.L, A.E, A.G
    name = f"P({A.name})"

    @lru_cache(maxsize=CACHE_SIZE)
    def derived(b, ek):
        return derived_action(A, b, ek)

    @lru_cache(maxsize=CACHE_SIZE)
    def lifted_e(gx, aek):
        return first_lifted_action(A, gx, aek)

    @lru_cache(maxsize=CACHE_SIZE)
    def lifted_l(gx, kl):
        return second_lifted_action(A, gx, kl)

    L2 = FlatSemidirectProduct(L, L, L.conj, f"{L.name}x|{L.name}")
    EL = FlatSemidirectProduct(E, L, A.secondary_action, f"{E.name}x|'{L.name}")
    E2 = FlatSemidirectProduct(E, EL, derived, f"{E.name}x|*({EL.name})")
    G2 = FlatSemidirectProduct(G, E, A.act_E, f"{G.name}x|{E.name}")

    def alpha(kl):
        k, l = _split(L, L, kl)
        return _join3(A, A.delta(k), E.identity, l)

    def beta(aek):
        a, e, _ = _split3(A, aek)
        return _join(G, E, A.boundary(a), e)

    @lru_cache(maxsize=CACHE_SIZE)
    def lifting(x, y):
        a, e, k = _split3(A, x)
        a2, e2, k2 = _split3(A, y)
        c = A.lifting(a, a2)
        end1 = E.mul(E.mul(a, e), A.delta(k))
        end2 = E.mul(E.mul(a2, e2), A.delta(k2))
        return _join(L, L, c, L.mul(L.inv(c), A.lifting(end1, end2)))

    total = TwoCrossedModule(
        L=L2, E=E2, G=G2,
        delta=Homomorphism(L2, E2, alpha, "alpha"),
        boundary=Homomorphism(E2, G2, beta, "beta"),
        act_E=lifted_e, act_L=lifted_l, lifting=lifting, name=name,
    )

    def p0_l(kl):
        return _split(L, L, kl)[0]

    def p0_e(aek):
        return _split3(A, aek)[0]

    def p0_g(ge):
        return _split(G, E, ge)[0]

    def p1_l(kl):
        k, l = _split(L, L, kl)
        return L.mul(k, l)

    def p1_e(aek):
        a, e, k = _split3(A, aek)
        return E.mul(E.mul(a, e), A.delta(k))

    def p1_g(ge):
        g, e = _split(G, E, ge)
        return G.mul(g, A.boundary(e))

    pr0 = XModMorphism(total, A, p0_l, p0_e, p0_g, "pr0")
    pr1 = XModMorphism(total, A, p1_l, p1_e, p1_g, "pr1")
    incl = XModMorphism(
        A, total,
        lambda k: _join(L, L, k, L.identity),
        lambda a: _join3(A, a, E.identity, L.identity),
        lambda g: _join(G, E, g, E.identity),
        "incl",
    )
    return PathSpaceBundle(A, total, pr0, pr1, incl, EL)


def path_space_map(f: XModMorphism) -> XModMorphism:
    """Apply ``f`` coordinatewise to paths."""
    Pa, Pb = path_space(f.source), path_space(f.target)
    mu, psi, phi = f.mu, f.psi, f.phi

    def on_l(kl):
        k, l = Pa.split_l(kl)
        return Pb.path_l(mu(k), mu(l))

    def on_e(aek):
        a, e, k = Pa.split_e(aek)
        return Pb.path_e(psi(a), psi(e), mu(k))

    def on_g(ge):
        g, e = Pa.split_g(ge)
        return Pb.path_g(phi(g), psi(e))

    return XModMorphism(Pa.total, Pb.total, on_l, on_e, on_g, f"P({f.name})")


def morphisms_agree(f: XModMorphism, g: XModMorphism, *, max_tuples: int = 20000,
                    seed: int = 0, label: str = "agree") -> VerificationReport:
    """Pointwise equality of two morphisms with the same source on probe elements."""
    A = f.source
    rng = random.Random(seed)
    failures = []
    checked = {}
    for level, grp, a, b in (("L", A.L, f.mu, g.mu), ("E", A.E, f.psi, g.psi), ("G", A.G, f.phi, g.phi)):
        xs = grp.elements() if grp.is_finite else grp.probe()
        count = 0
        for (x,) in bounded_product([xs], max_tuples, rng):
            count += 1
            if a(x) != b(x):
                failures.append((f"{label}-{level}", (x, a(x), b(x))))
        checked[f"{label}-{level}"] = count
    return report_from(failures, {"seed": seed}, checked)


def path_space_checks(A: TwoCrossedModule, *, max_tuples: int = 20000, seed: int = 0) -> VerificationReport:
    """Endpoint maps split the constant-path map and are jointly surjective where enumerable."""
    P = path_space(A)
    ident = XModMorphism(A, A, lambda x: x, lambda x: x, lambda x: x, "id")
    rep = morphisms_agree(P.pr0.compose(P.incl), ident, max_tuples=max_tuples, seed=seed, label="pr0-incl")
    rep = rep.merge(morphisms_agree(P.pr1.compose(P.incl), ident, max_tuples=max_tuples, seed=seed,
                                    label="pr1-incl"))
    failures = []
    checked = {}
    for level, grp, src, p0, p1 in (
        ("L", A.L, P.total.L, P.pr0.mu, P.pr1.mu),
        ("E", A.E, P.total.E, P.pr0.psi, P.pr1.psi),
    ):
        if not grp.is_finite:
            continue
        image = {(p0(x), p1(x)) for x in src.elements()}
        missing = [(x, y) for x in grp.elements() for y in grp.elements() if (x, y) not in image]
        checked[f"surjective-{level}"] = len(grp.elements()) ** 2
        failures += [(f"surjective-{level}", w) for w in missing[:5]]
    return rep.merge(report_from(failures, {}, checked))


# ---------------------------------------------------------------------------
# double path space


@dataclass
class DoublePathSpace:
    """``P(P(A))`` with its four faces to ``P(A)``."""

    base: TwoCrossedModule
    inner: PathSpaceBundle
    outer: PathSpaceBundle
    d0: XModMorphism
    d1: XModMorphism
    d2: XModMorphism
    d3: XModMorphism

    @property
    def total(self) -> TwoCrossedModule:
        return self.outer.total

    def faces(self) -> dict[str, XModMorphism]:
        return {"d0": self.d0, "d1": self.d1, "d2": self.d2, "d3": self.d3}


_DOUBLES: dict[int, tuple[TwoCrossedModule, DoublePathSpace]] = {}


def double_faces(A: TwoCrossedModule) -> DoublePathSpace:
    """Faces ``d1 = pr1``, ``d2 = pr0`` of the outer path space and ``d0, d3`` induced from ``A``'s."""
    hit = _DOUBLES.get(id(A))
    if hit is not None and hit[0] is A:
        return hit[1]
    P = path_space(A)
    PP = path_space(P.total)
    out = DoublePathSpace(
        A, P, PP,
        d0=_renamed(path_space_map(P.pr1), "d0"),
        d1=_renamed(PP.pr1, "d1"),
        d2=_renamed(PP.pr0, "d2"),
        d3=_renamed(path_space_map(P.pr0), "d3"),
    )
    _DOUBLES[id(A)] = (A, out)
    return out


def _renamed(f: XModMorphism, name: str) -> XModMorphism:
    return XModMorphism(f.source, f.target, f.mu, f.psi, f.phi, name)


class ExplicitDoubleFaces:
    """Closed-form coordinate formulas for the four faces of ``P(P(A))``.

    Level coordinates are ``(k, l, k', l')``, ``(a, e, k, a', e', k', l, l')``
    and ``(g, x, a, e, k)``.
    """

    def __init__(self, A: TwoCrossedModule):
        self.A = A
        self.P = path_space(A)

    def d0(self, level: str, x: tuple) -> tuple:
        A, L, E, G = self.A, self.A.L, self.A.E, self.A.G
        if level == "L":
            k, l, k2, l2 = x
            return (L.mul(k, l), L.mul(k2, l2))
        if level == "E":
            a, e, k, a2, e2, k2, l, l2 = x
            return (E.prod(a, e, A.delta(k)), E.prod(a2, e2, A.delta(k2)), L.mul(l, l2))
        g, y, a, e, k = x
        return (G.mul(g, A.boundary(y)), E.prod(a, e, A.delta(k)))

    def d1(self, level: str, x: tuple) -> tuple:
        A, L, E, G = self.A, self.A.L, self.A.E, self.A.G
        PE = self.P.total.E
        if level == "L":
            k, l, k2, l2 = x
            return (L.mul(k, k2), L.prod(L.inv(k2), l, k2, l2))
        if level == "E":
            a, e, k, a2, e2, k2, l, l2 = x
            return PE.prod((a, e, k), (a2, e2, k2), (A.delta(l), E.identity, l2))
        g, y, a, e, k = x
        return (G.mul(g, A.boundary(a)), E.mul(A.act_E(G.inv(A.boundary(a)), y), e))

    def d2(self, level: str, x: tuple) -> tuple:
        return {"L": x[:2], "E": x[:3], "G": x[:2]}[level]

    def d3(self, level: str, x: tuple) -> tuple:
        if level == "L":
            return (x[0], x[2])
        if level == "E":
            return (x[0], x[3], x[6])
        return (x[0], x[2])


def compare_double_faces(A: TwoCrossedModule, *, max_tuples: int = 20000, seed: int = 0) -> VerificationReport:
    """Generic faces against the closed forms on every probed tuple of each level."""
    D = double_faces(A)
    X = ExplicitDoubleFaces(A)
    PP = D.total
    rng = random.Random(seed)
    failures = []
    checked = {}
    for name, face in D.faces().items():
        explicit = getattr(X, name)
        for level, grp, gen in (("L", PP.L, face.mu), ("E", PP.E, face.psi), ("G", PP.G, face.phi)):
            law = f"{name}-{level}"
            count = 0
            for (x,) in bounded_product([_elements(grp)], max_tuples, rng):
                count += 1
                lhs, rhs = gen(x), explicit(level, x)
                if lhs != rhs:
                    failures.append((law, (x, lhs, rhs)))
            checked[law] = count
    return report_from(failures, {"seed": seed, "max_tuples": max_tuples}, checked)


def _elements(G: Group) -> list:
    return G.elements() if G.is_finite else G.probe()


# ---------------------------------------------------------------------------
# triangle space


class SubsetGroup(Group):
    """Subgroup of ``parent`` cut out by a predicate, with an explicit element enumerator."""

    def __init__(self, parent: Group, member: Callable[[Any], bool],
                 enumerate_: Callable[[], Iterable], sampler: Callable[[random.Random], Any],
                 name: str, finite: bool):
        self.parent = parent
        self.member = member
        self._enumerate = enumerate_
        self._sampler = sampler
        self.name = name
        self._finite = finite
        self.flat_arity = flat_arity(parent)
        self._cache: list | None = None

    @property
    def identity(self):
        return self.parent.identity

    def mul(self, a, b):
        return self.parent.mul(a, b)

    def inv(self, a):
        return self.parent.inv(a)

    def contains(self, a) -> bool:
        return self.parent.contains(a) and self.member(a)

    @property
    def is_finite(self) -> bool:
        return self._finite

    def elements(self) -> list:
        if self._cache is None:
            self._cache = list(self._enumerate())
        return list(self._cache)

    def probe(self) -> list:
        return self.elements() if self._finite else list(self._enumerate())

    def random_element(self, rng: random.Random):
        return self._sampler(rng)

    def label(self, a) -> str:
        return self.parent.label(a)


def _restrict(A: TwoCrossedModule, L: Group, E: Group, G: Group, name: str) -> TwoCrossedModule:
    def checked(group, f):
        def rule(x):
            y = f(x)
            if not group.member(y):
                raise ClosureFailure(f"{name}: {y!r} leaves {group.name}")
            return y
        return rule

    return TwoCrossedModule(
        L, E, G,
        delta=Homomorphism(L, E, checked(E, A.delta), "delta"),
        boundary=Homomorphism(E, G, checked(G, A.boundary), "boundary"),
        act_E=lambda g, e: checked(E, lambda y: A.act_E(g, y))(e),
        act_L=lambda g, l: checked(L, lambda y: A.act_L(g, y))(l),
        lifting=lambda e, f: checked(L, lambda y: A.lifting(e, y))(f),
        name=name,
    )


class TriangleSpace:
    """Triangles in ``P(P(A))`` whose ``d3`` face is a constant path.

    Elements are the PP tuples ``(g, x, 1, e, k)``, ``(a, e, k, 1, f, l, 1, m)``
    and ``(k, l, 1, l')``.
    """

    def __init__(self, A: TwoCrossedModule):
        self.A = A
        self.double = double_faces(A)
        self.P = self.double.inner
        PP = self.double.total
        L, E, G = A.L, A.E, A.G
        e1, l1 = E.identity, L.identity
        finite = A.is_finite()

        def member0(x):
            return x[2] == e1

        def member1(y):
            return y[3] == e1 and y[6] == l1

        def member2(z):
            return z[2] == l1

        def gen0():
            return ((g, x, e1, e, k) for g in _elements(G) for x in _elements(E)
                    for e in _elements(E) for k in _elements(L))

        def gen1():
            return ((a, e, k, e1, f, l, l1, m) for a in _elements(E) for e in _elements(E)
                    for k in _elements(L) for f in _elements(E) for l in _elements(L) for m in _elements(L))

        def gen2():
            return ((k, l, l1, m) for k in _elements(L) for l in _elements(L) for m in _elements(L))

        def sample0(rng):
            return (G.random_element(rng), E.random_element(rng), e1, E.random_element(rng), L.random_element(rng))

        def sample1(rng):
            return (E.random_element(rng), E.random_element(rng), L.random_element(rng), e1,
                    E.random_element(rng), L.random_element(rng), l1, L.random_element(rng))

        def sample2(rng):
            return (L.random_element(rng), L.random_element(rng), l1, L.random_element(rng))

        self.gr0 = SubsetGroup(PP.G, member0, gen0, sample0, f"Gr0T({A.name})", finite)
        self.gr1 = SubsetGroup(PP.E, member1, gen1, sample1, f"Gr1T({A.name})", finite)
        self.gr2 = SubsetGroup(PP.L, member2, gen2, sample2, f"Gr2T({A.name})", finite)
        self.total = _restrict(PP, self.gr2, self.gr1, self.gr0, f"T({A.name})")

    def element0(self, g, x, e, k) -> tuple:
        return (g, x, self.A.E.identity, e, k)

    def element1(self, a, e, k, f, l, m) -> tuple:
        one_e, one_l = self.A.E.identity, self.A.L.identity
        return (a, e, k, one_e, f, l, one_l, m)

    def beta_prime(self, y: tuple) -> tuple:
        return self.double.total.boundary(y)

    def faces(self) -> dict[str, XModMorphism]:
        return self.double.faces()

    # closed forms

    def explicit_beta_prime(self, y: tuple) -> tuple:
        a, e, k, _, f, l, _, _ = y
        return (self.A.boundary(a), e, self.A.E.identity, f, l)

    def explicit_face(self, name: str, level: str, y: tuple) -> tuple:
        A, L, E, G = self.A, self.A.L, self.A.E, self.A.G
        if level == "E":
            a, e, k, _, f, l, _, m = y
            if name == "d2":
                return (a, e, k)
            if name == "d1":
                return (a, E.mul(e, f), L.prod(A.secondary_action(E.inv(f), k), l, m))
            if name == "d0":
                return (E.prod(a, e, A.delta(k)), E.mul(f, A.delta(l)), m)
            return (a, E.identity, L.identity)
        g, x, _, e, k = y
        if name == "d2":
            return (g, x)
        if name == "d1":
            return (g, E.mul(x, e))
        if name == "d0":
            return (G.mul(g, A.boundary(x)), E.mul(e, A.delta(k)))
        return (g, E.identity)

    def explicit_product(self, y: tuple, y2: tuple) -> tuple:
        """Product in ``Gr1`` by the closed formula."""
        A, L, E = self.A, self.A.L, self.A.E
        P = self.P.total
        sec = A.secondary_action
        a, e, k, _, f, l, _, m = y
        a2, e2, k2, _, f2, l2, _, m2 = y2
        first = P.E.mul((a, e, k), (a2, e2, k2))
        middle = P.E.mul(P.act_E(P.G.inv((A.boundary(a2), e2)), (E.identity, f, l)), (E.identity, f2, l2))
        end2 = E.prod(a2, e2, A.delta(k2))
        twist = E.inv(E.mul(f2, A.delta(l2)))
        last = L.prod(
            sec(twist, L.inv(A.lifting(E.inv(end2), E.inv(E.mul(f, A.delta(l)))))),
            sec(twist, sec(E.inv(end2), m)),
            m2,
        )
        return first + middle + (L.identity, last)

    def explicit_action(self, x: tuple, y: tuple) -> tuple:
        """Action of ``Gr0`` on ``Gr1`` by the closed formula."""
        A, L, E = self.A, self.A.L, self.A.E
        P = self.P.total
        sec = A.secondary_action
        g, xx, _, z, w = x
        a, e, k, _, f, l, _, m = y
        zw = (E.identity, z, w)
        middle = P.E.prod(
            P.act_E(P.G.inv((A.boundary(a), e)), zw), (E.identity, f, l), P.E.inv(zw))
        end = E.prod(a, e, A.delta(k))
        twist = E.prod(z, A.delta(L.mul(w, L.inv(l))), E.inv(f))
        last = L.prod(
            sec(twist, L.inv(A.lifting(E.inv(end), E.mul(E.inv(A.delta(w)), E.inv(z))))),
            A.lifting(E.mul(z, A.delta(w)), E.inv(E.prod(end, f, A.delta(l)))),
            A.act_L(A.boundary(z), m),
        )
        gx = (g, xx)
        return (P.act_E(gx, (a, e, k)) + P.act_E(gx, middle) + P.act_L(gx, (L.identity, last)))

    def pullback_map(self, y: tuple) -> tuple:
        """``Gr1(T)`` into ``Gr0(T) x Gr1(P) x Gr1(P)``."""
        A, E = self.A, self.A.E
        a, e, k, _, f, l, _, m = y
        return (self.beta_prime(y), (a, e, k), (E.prod(a, e, A.delta(k)), E.mul(f, A.delta(l)), m))


def triangle_space(A: TwoCrossedModule) -> TriangleSpace:
    return TriangleSpace(A)


def compare_triangle(A: TwoCrossedModule, *, samples: int = 2000, seed: int = 0) -> VerificationReport:
    """Inherited triangle operations against the closed forms, plus closure."""
    T = triangle_space(A)
    PP = T.double.total
    rng = random.Random(seed)
    failures: list = []
    checked: dict = {}

    def pick(group, n):
        elems = group.elements() if group.is_finite and len(group.elements()) <= n else None
        return elems if elems is not None else [group.random_element(rng) for _ in range(n)]

    gr0 = pick(T.gr0, samples)
    gr1 = pick(T.gr1, samples)

    def record(law, ok, witness):
        checked[law] = checked.get(law, 0) + 1
        if not ok and sum(1 for x, _ in failures if x == law) < 5:
            failures.append((law, witness))

    for y in gr1:
        record("beta-prime", T.beta_prime(y) == T.explicit_beta_prime(y), (y,))
        for name, face in T.faces().items():
            record(f"{name}-E", face.psi(y) == T.explicit_face(name, "E", y), (y,))
    for x in gr0:
        for name, face in T.faces().items():
            record(f"{name}-G", face.phi(x) == T.explicit_face(name, "G", x), (x,))
    for _ in range(samples):
        y, y2 = rng.choice(gr1), rng.choice(gr1)
        prod = PP.E.mul(y, y2)
        record("closure-gr1", T.gr1.member(prod), (y, y2))
        record("product", prod == T.explicit_product(y, y2), (y, y2))
        x, x2 = rng.choice(gr0), rng.choice(gr0)
        record("closure-gr0", T.gr0.member(PP.G.mul(x, x2)), (x, x2))
        act = PP.act_E(x, y)
        record("closure-action", T.gr1.member(act), (x, y))
        record("action", act == T.explicit_action(x, y), (x, y))
    return report_from(failures, {"seed": seed, "samples": samples}, checked)


def triangle_pullback_check(A: TwoCrossedModule) -> VerificationReport:
    """The map ``Gr1(T) -> Gr0(T) x_{β'} Gr1(P x P)`` is a bijective homomorphism (finite ``A``)."""
    T = triangle_space(A)
    P = T.P.total
    E = A.E
    failures: list = []
    elems = T.gr1.elements()
    images = {}
    for y in elems:
        img = T.pullback_map(y)
        if img in images:
            failures.append(("injective", (y, images[img])))
        images[img] = y
    target = set()
    for x in T.gr0.elements():
        g, e, _, f, l = x
        for a in E.elements():
            if A.boundary(a) != g:
                continue
            for k in A.L.elements():
                for m in A.L.elements():
                    target.add((x, (a, e, k), (E.prod(a, e, A.delta(k)), E.mul(f, A.delta(l)), m)))
    missing = target.difference(images)
    extra = set(images).difference(target)
    failures += [("surjective", (w,)) for w in list(missing)[:5]]
    failures += [("lands-in-pullback", (w,)) for w in list(extra)[:5]]
    rng = random.Random(0)
    PPE = T.double.total.E
    for _ in range(2000):
        y, y2 = rng.choice(elems), rng.choice(elems)
        lhs = T.pullback_map(PPE.mul(y, y2))
        u, v = T.pullback_map(y), T.pullback_map(y2)
        rhs = (T.double.total.G.mul(u[0], v[0]), P.E.mul(u[1], v[1]), P.E.mul(u[2], v[2]))
        if lhs != rhs:
            failures.append(("homomorphism", (y, y2)))
    return report_from(failures, {"domain": len(elems), "codomain": len(target)},
                       {"bijection": len(elems), "homomorphism": 2000})


# ---------------------------------------------------------------------------
# disk space


class DiskSpace:
    """Triangles whose ``d0`` face is a constant path, in disk coordinates.

    ``inherited`` computes through the embedding into ``P(P(A))``;
    ``explicit`` is the closed-form semidirect description.
    Coordinates are ``(g, e, k)``, ``(a, e, k, l)`` and ``(k, l)``.
    """

    def __init__(self, A: TwoCrossedModule):
        self.A = A
        self.double = double_faces(A)
        self.P = self.double.inner
        P = self.P.total
        PP = self.double.total
        L, E, G = A.L, A.E, A.G
        e1, l1 = E.identity, L.identity
        sec = A.secondary_action

        def bullet(ge, k):
            g, e = ge
            return A.act_L(g, sec(e, k))

        def star(aek, l):
            a, e, _ = aek
            return A.act_L(A.boundary(a), sec(e, l))

        self.chart0 = FlatSemidirectProduct(P.G, L, bullet, f"({P.G.name})x|{L.name}")
        self.chart1 = FlatSemidirectProduct(P.E, L, star, f"({P.E.name})x|{L.name}")
        self.chart2 = P.L

        def embed0(x):
            g, y, k = x
            return (g, y, e1, A.delta(k), L.inv(k))

        def embed1(x):
            a, e, k, l = x
            return (a, e, k, e1, A.delta(l), L.inv(l), l1, l1)

        def embed2(x):
            k, l = x
            return (k, l, l1, l1)

        def project0(z):
            g, y, a, f, m = z
            k = L.inv(m)
            if a != e1 or f != A.delta(k):
                raise EmbeddingNotHomomorphic(f"{z!r} is not a disk element")
            return (g, y, k)

        def project1(z):
            a, e, k, a2, f, m, l, l2 = z
            lk = L.inv(m)
            if a2 != e1 or l != l1 or l2 != l1 or f != A.delta(lk):
                raise EmbeddingNotHomomorphic(f"{z!r} is not a disk element")
            return (a, e, k, lk)

        def project2(z):
            k, l, k2, l2 = z
            if k2 != l1 or l2 != l1:
                raise EmbeddingNotHomomorphic(f"{z!r} is not a disk element")
            return (k, l)

        self.embed = (embed2, embed1, embed0)
        self.project = (project2, project1, project0)
        g0 = EmbeddedGroup(PP.G, embed0, project0, self.chart0, f"Gr0D({A.name})")
        g1 = EmbeddedGroup(PP.E, embed1, project1, self.chart1, f"Gr1D({A.name})")
        g2 = EmbeddedGroup(PP.L, embed2, project2, self.chart2, f"Gr2D({A.name})")
        self.inherited = TwoCrossedModule(
            g2, g1, g0,
            delta=Homomorphism(g2, g1, lambda x: project1(PP.delta(embed2(x))), "alpha2"),
            boundary=Homomorphism(g1, g0, lambda x: project0(PP.boundary(embed1(x))), "beta2"),
            act_E=lambda g, x: project1(PP.act_E(embed0(g), embed1(x))),
            act_L=lambda g, x: project2(PP.act_L(embed0(g), embed2(x))),
            lifting=lambda x, y: project2(PP.lifting(embed1(x), embed1(y))),
            name=f"D({A.name})",
        )
        self.explicit = self._explicit_module()

    def _explicit_module(self) -> TwoCrossedModule:
        A, L, E, G = self.A, self.A.L, self.A.E, self.A.G
        P = self.P.total
        sec = A.secondary_action

        def act_e(gek, afll):
            g, e, k = gek
            a, f, l, l2 = afll
            # k first, then (g, e)
            l2 = L.prod(sec(E.inv(f), A.act_L(G.inv(A.boundary(a)), k)), l2, L.inv(k))
            moved = P.act_E((g, e), (a, f, l))
            return moved + (A.act_L(g, sec(e, l2)),)

        def act_l(gek, kk):
            g, e, _ = gek
            return P.act_L((g, e), kk)

        def lifting(x, y):
            return P.lifting(x[:3], y[:3])

        return TwoCrossedModule(
            self.chart2, self.chart1, self.chart0,
            delta=Homomorphism(self.chart2, self.chart1,
                               lambda kl: (A.delta(kl[0]), E.identity, kl[1], L.identity), "alpha2"),
            boundary=Homomorphism(self.chart1, self.chart0,
                                  lambda x: (A.boundary(x[0]), x[1], x[3]), "beta2"),
            act_E=act_e, act_L=act_l, lifting=lifting, name=f"Dx({A.name})",
        )

    def face(self, name: str) -> XModMorphism:
        """``d2`` and ``d1`` as the outer endpoint maps restricted through the embedding."""
        outer = self.double.d2 if name == "d2" else self.double.d1
        e2, e1, e0 = self.embed
        return XModMorphism(self.inherited, self.P.total,
                            lambda x: outer.mu(e2(x)), lambda x: outer.psi(e1(x)),
                            lambda x: outer.phi(e0(x)), name)

    def explicit_face(self, name: str, level: str, x: tuple) -> tuple:
        A, L, E = self.A, self.A.L, self.A.E
        if level == "L":
            return x
        if name == "d2":
            return x[:3] if level == "E" else x[:2]
        if level == "E":
            a, e, k, l = x
            return (a, E.mul(e, A.delta(l)), L.mul(L.inv(l), k))
        g, e, k = x
        return (g, E.mul(e, A.delta(k)))


def disk_space(A: TwoCrossedModule) -> DiskSpace:
    return DiskSpace(A)


def compare_disk(A: TwoCrossedModule, *, max_tuples: int = 20000, seed: int = 0) -> VerificationReport:
    """Inherited and explicit disk operations agree; the embedding lands in the triangle space."""
    D = disk_space(A)
    I, X = D.inherited, D.explicit
    T = triangle_space(A)
    rng = random.Random(seed)
    failures: list = []
    checked: dict = {}

    def run(law, doms, pred):
        n = 0
        for args in bounded_product(doms, max_tuples, rng):
            n += 1
            try:
                ok = pred(*args)
            except EmbeddingNotHomomorphic as exc:
                ok = False
                args = args + (str(exc),)
            if not ok and sum(1 for x, _ in failures if x == law) < 5:
                failures.append((law, args))
        checked[law] = n

    Ls, Es, Gs = _elements(X.L), _elements(X.E), _elements(X.G)
    run("mul-L", [Ls, Ls], lambda a, b: I.L.mul(a, b) == X.L.mul(a, b))
    run("mul-E", [Es, Es], lambda a, b: I.E.mul(a, b) == X.E.mul(a, b))
    run("mul-G", [Gs, Gs], lambda a, b: I.G.mul(a, b) == X.G.mul(a, b))
    run("inv-E", [Es], lambda a: I.E.inv(a) == X.E.inv(a))
    run("inv-G", [Gs], lambda a: I.G.inv(a) == X.G.inv(a))
    run("alpha", [Ls], lambda a: I.delta(a) == X.delta(a))
    run("beta", [Es], lambda a: I.boundary(a) == X.boundary(a))
    run("action-E", [Gs, Es], lambda g, a: I.act_E(g, a) == X.act_E(g, a))
    run("action-L", [Gs, Ls], lambda g, a: I.act_L(g, a) == X.act_L(g, a))
    run("lifting", [Es, Es], lambda a, b: I.lifting(a, b) == X.lifting(a, b))
    e2, e1, e0 = D.embed
    run("embed-in-triangle", [Gs, Es, Ls],
        lambda g, a, l: T.gr0.member(e0(g)) and T.gr1.member(e1(a)) and T.gr2.member(e2(l)))
    run("embed-d0-constant", [Gs, Es],
        lambda g, a: D.double.d0.phi(e0(g))[1] == A.E.identity
        and D.double.d0.psi(e1(a))[1:] == (A.E.identity, A.L.identity))
    for name in ("d1", "d2"):
        face = D.face(name)
        run(f"{name}-L", [Ls], lambda x, f=face, n=name: f.mu(x) == D.explicit_face(n, "L", x))
        run(f"{name}-E", [Es], lambda x, f=face, n=name: f.psi(x) == D.explicit_face(n, "E", x))
        run(f"{name}-G", [Gs], lambda x, f=face, n=name: f.phi(x) == D.explicit_face(n, "G", x))
    return report_from(failures, {"seed": seed, "max_tuples": max_tuples}, checked)


def disk_lifting_vanishes(A: TwoCrossedModule, *, max_tuples: int = 20000, seed: int = 0) -> VerificationReport:
    """``|(a,e,k), (1, δl, l^-1)| = 1 = |(1, δl, l^-1), (a,e,k)|`` in ``P(A)``."""
    P = path_space(A).total
    L, E = A.L, A.E
    one = P.L.identity
    failures = []
    rng = random.Random(seed)
    n = 0
    for x, l in bounded_product([_elements(P.E), _elements(L)], max_tuples, rng):
        n += 1
        disk = (E.identity, A.delta(l), L.inv(l))
        if P.lifting(x, disk) != one or P.lifting(disk, x) != one:
            failures.append(("disk-lifting", (x, l)))
    return report_from(failures[:5], {"seed": seed}, {"disk-lifting": n})


# ---------------------------------------------------------------------------
# tetrahedron group


class TetraGroup:
    """Elements ``((g,x,1,z,w), (1,1,1,1,f,l,1,m))`` of ``Gr0(P(T(A)))`` inside ``Gr0(P(P(P(A))))``."""

    def __init__(self, A: TwoCrossedModule):
        self.A = A
        self.triangle = triangle_space(A)
        self.double = self.triangle.double
        self.outer = path_space(self.double.total)
        self.ambient = self.outer.total.G
        E, L = A.E, A.L
        e1, l1 = E.identity, L.identity
        self._ones = {2: e1, 5: e1, 6: e1, 7: l1, 8: e1, 11: l1}

    def element(self, g, x, z, w, f, l, m) -> tuple:
        e1, l1 = self.A.E.identity, self.A.L.identity
        return (g, x, e1, z, w) + (e1, e1, l1, e1, f, l, l1, m)

    def member(self, t: tuple) -> bool:
        return len(t) == 13 and all(t[i] == v for i, v in self._ones.items())

    def coordinates(self, t: tuple) -> tuple:
        return (t[0], t[1], t[3], t[4], t[9], t[10], t[12])

    def mul(self, s: tuple, t: tuple) -> tuple:
        return self.ambient.mul(s, t)

    def inv(self, t: tuple) -> tuple:
        return self.ambient.inv(t)

    def faces(self) -> dict[str, Callable[[tuple], tuple]]:
        """Generic faces to ``Gr0(T) ⊂ Gr0(P(P(A)))``."""
        d = self.double
        lift0 = path_space_map(d.d0).phi
        lift1 = path_space_map(d.d1).phi
        return {
            "d0": lift0,
            "d1": lift1,
            "pr0": self.outer.pr0.phi,
            "pr1": self.outer.pr1.phi,
        }

    def explicit_faces(self, t: tuple) -> dict[str, tuple]:
        A, L, E, G = self.A, self.A.L, self.A.E, self.A.G
        g, x, z, w, f, l, m = self.coordinates(t)
        e1 = E.identity
        return {
            "d1": (g, E.mul(x, z), e1, f, L.mul(l, m)),
            "d0": (G.mul(g, A.boundary(x)), E.mul(z, A.delta(w)), e1, E.mul(f, A.delta(l)), m),
            "pr0": (g, x, e1, z, w),
            "pr1": (g, x, e1, E.mul(z, f), L.mul(A.secondary_action(E.inv(f), w), l)),
        }

    def random_element(self, rng: random.Random) -> tuple:
        A = self.A
        return self.element(A.G.random_element(rng), A.E.random_element(rng), A.E.random_element(rng),
                            A.L.random_element(rng), A.E.random_element(rng), A.L.random_element(rng),
                            A.L.random_element(rng))


def tetra_group(A: TwoCrossedModule) -> TetraGroup:
    return TetraGroup(A)


def compare_tetra(A: TwoCrossedModule, *, samples: int = 1000, seed: int = 0) -> VerificationReport:
    """Generic tetrahedron faces against the closed forms; closure; faces are homomorphic."""
    T = tetra_group(A)
    rng = random.Random(seed)
    faces = T.faces()
    G0 = T.double.total.G
    failures: list = []
    checked: dict = {}

    def record(law, ok, witness):
        checked[law] = checked.get(law, 0) + 1
        if not ok and sum(1 for x, _ in failures if x == law) < 5:
            failures.append((law, witness))

    for _ in range(samples):
        s, t = T.random_element(rng), T.random_element(rng)
        explicit = T.explicit_faces(s)
        for name, face in faces.items():
            record(f"face-{name}", face(s) == explicit[name], (s,))
        st = T.mul(s, t)
        record("closure", T.member(st), (s, t))
        record("closure-inverse", T.member(T.inv(s)), (s,))
        for name, face in faces.items():
            record(f"homomorphic-{name}", face(st) == G0.mul(face(s), face(t)), (s, t))
    return report_from(failures, {"seed": seed, "samples": samples}, checked)


def lifted_action_special_cases(A: TwoCrossedModule) -> VerificationReport:
    """Closed-form special cases of the derived and lifted actions, exhaustive on finite ``A``."""
    P = path_space(A)
    L, E, G = A.L, A.E, A.G
    sec = A.secondary_action
    act = P.total.act_E
    act_l = P.total.act_L
    e1, l1, g1 = E.identity, L.identity, G.identity
    Ls, Es, Gs = _elements(L), _elements(E), _elements(G)
    failures: list = []
    checked: dict = {}

    def run(law, doms, pred):
        n = 0
        for args in bounded_product(doms, 10**9):
            n += 1
            if not pred(*args) and sum(1 for x, _ in failures if x == law) < 5:
                failures.append((law, args))
        checked[law] = n

    run("derived-on-disk", [Es, Ls],
        lambda b, k: derived_action(A, b, (A.delta(k), L.inv(k)))
        == (A.delta(A.act_L(A.boundary(b), k)), A.act_L(A.boundary(b), L.inv(k))))
    run("derived-unit", [Es, Ls], lambda e, k: derived_action(A, e1, (e, k)) == (e, k))
    run("lifted-by-G", [Gs, Es, Es, Ls],
        lambda g, a, e, k: act((g, e1), (a, e, k)) == (A.act_E(g, a), A.act_E(g, e), A.act_L(g, k)))
    run("lifted-unit", [Es, Es, Ls], lambda a, e, k: act((g1, e1), (a, e, k)) == (a, e, k))
    run("lifted-on-alpha", [Es, Ls, Ls],
        lambda x, k, l: act((g1, x), (A.delta(k), e1, l))
        == (A.delta(k), e1, L.mul(L.inv(k), A.act_L(A.boundary(x), L.mul(k, l)))))
    run("lifted-on-second", [Es, Es, Ls],
        lambda x, e, k: act((g1, x), (e1, e, k))
        == (e1, E.conj(x, e), L.mul(A.lifting(x, E.inv(e)), A.act_L(A.boundary(x), k))))
    run("lifted-full-on-second", [Gs, Es, Es, Ls],
        lambda g, x, e, k: act((g, x), (e1, e, k))
        == (e1, A.act_E(g, E.conj(x, e)),
            A.act_L(g, L.mul(A.lifting(x, E.inv(e)), A.act_L(A.boundary(x), k)))))
    run("lifted-on-disk", [Es, Ls],
        lambda x, k: act((g1, x), (e1, A.delta(k), L.inv(k)))
        == (e1, E.conj(x, A.delta(k)), sec(x, L.inv(k))))
    run("lifted-on-disk-lifting-form", [Es, Ls],
        lambda x, k: sec(x, L.inv(k))
        == L.mul(A.lifting(x, E.inv(A.delta(k))), A.act_L(A.boundary(x), L.inv(k))))
    run("lifted-full-on-disk", [Gs, Es, Ls],
        lambda g, x, k: act((g, x), (e1, A.delta(k), L.inv(k)))
        == (e1, A.act_E(g, A.delta(sec(x, k))), A.act_L(g, sec(x, L.inv(k)))))
    run("lifted-on-first", [Es, Es],
        lambda x, a: act((g1, x), (a, e1, l1))
        == (a, E.mul(A.act_E(G.inv(A.boundary(a)), x), E.inv(x)),
            L.mul(sec(x, L.inv(A.lifting(E.inv(a), E.inv(x)))), A.lifting(x, E.inv(a)))))
    run("lifted-by-delta-on-first", [Ls, Es],
        lambda k, a: act((g1, A.delta(k)), (a, e1, l1))
        == (a, E.mul(A.act_E(G.inv(A.boundary(a)), A.delta(k)), E.inv(A.delta(k))),
            L.mul(k, A.act_L(A.boundary(a), L.inv(k)))))
    central = [x for x in Es if all(A.lifting(x, y) == l1 and A.lifting(y, x) == l1 for y in Es)]
    run("lifted-by-central", [central, Es, Es, Ls],
        lambda x, a, e, k: act((g1, x), (a, e, k))
        == (a, E.prod(A.act_E(G.inv(A.boundary(a)), x), e, E.inv(x)), A.act_L(A.boundary(x), k)))
    run("second-lifted-by-E", [Es, Ls, Ls],
        lambda x, k, l: act_l((g1, x), (k, l))
        == (k, L.mul(L.inv(k), A.act_L(A.boundary(x), L.mul(k, l)))))
    run("second-lifted-by-G", [Gs, Ls, Ls],
        lambda g, k, l: act_l((g, e1), (k, l)) == (A.act_L(g, k), A.act_L(g, l)))
    run("second-lifted-unit", [Ls, Ls], lambda k, l: act_l((g1, e1), (k, l)) == (k, l))
    return report_from(failures, {"mode": "exhaustive"}, checked)


def peiffer_pairing_check(A: TwoCrossedModule, *, max_tuples: int = 20000, seed: int = 0) -> VerificationReport:
    """Peiffer commutator of ``P(A)`` equals ``(⟨a,a'⟩, 1, {a,a'}^-1 {aeδk, a'e'δk'})``."""
    P = path_space(A).total
    L, E = A.L, A.E
    rng = random.Random(seed)
    failures = []
    n = 0
    for x, y in bounded_product([_elements(P.E), _elements(P.E)], max_tuples, rng):
        n += 1
        a, e, k = x
        a2, e2, k2 = y
        c = A.lifting(a, a2)
        expected = (A.peiffer(a, a2), E.identity,
                    L.mul(L.inv(c), A.lifting(E.prod(a, e, A.delta(k)), E.prod(a2, e2, A.delta(k2)))))
        if P.peiffer(x, y) != expected:
            failures.append(("path-peiffer-pairing", (x, y)))
    return report_from(failures[:5], {"seed": seed}, {"path-peiffer-pairing": n})
