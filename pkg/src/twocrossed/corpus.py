"""The fixture corpus: small 2-crossed modules and morphisms between them."""

from __future__ import annotations

from .groups import (
    CyclicGroup,
    Group,
    Homomorphism,
    IntegerGroup,
    identity_hom,
    symmetric_group,
    trivial_hom,
)
from .xmod import (
    PreCrossedModule,
    TwoCrossedModule,
    XModMorphism,
    peiffer_lift_from_precrossed,
)


def _trivial_action(g, x):
    return x


def _trivial_lifting_to(L: Group):
    one = L.identity
    return lambda e, f: one


def fix_a() -> TwoCrossedModule:
    """``0 -> 0 -> Z2`` with everything trivial."""
    L = CyclicGroup(1, "0")
    E = CyclicGroup(1, "0")
    G = CyclicGroup(2, "Z2")
    return TwoCrossedModule(
        L, E, G,
        delta=trivial_hom(L, E), boundary=trivial_hom(E, G),
        act_E=_trivial_action, act_L=_trivial_action,
        lifting=_trivial_lifting_to(L), name="fixA",
    )


def sign_action(g: int, n: int) -> int:
    """The nontrivial element of Z2 acts on the integers by negation."""
    return -n if g % 2 else n


def fix_b() -> TwoCrossedModule:
    """``2Z -> Z -> Z2``: ``L`` is the integers with ``delta(l) = 2l``, ``∂`` is reduction mod 2.

    The lifting is the Peiffer commutator divided by two:
    ``{m, n} = n`` for odd ``m`` and ``0`` otherwise.
    """
    L = IntegerGroup("2Z")
    E = IntegerGroup("Z")
    G = CyclicGroup(2, "Z2")
    return TwoCrossedModule(
        L, E, G,
        delta=Homomorphism(L, E, lambda l: 2 * l, "double"),
        boundary=Homomorphism(E, G, lambda n: n % 2, "mod2"),
        act_E=sign_action, act_L=sign_action,
        lifting=lambda m, n: n if m % 2 else 0,
        name="fixB",
    )


def fix_c(G: Group, name: str | None = None) -> TwoCrossedModule:
    """``1 -> G -> G`` with identity boundary, conjugation action and trivial lifting."""
    L = CyclicGroup(1, "1")
    return TwoCrossedModule(
        L, G, G,
        delta=trivial_hom(L, G), boundary=identity_hom(G),
        act_E=G.conj, act_L=_trivial_action,
        lifting=_trivial_lifting_to(L), name=name or f"fixC_{G.name}",
    )


def fix_d() -> TwoCrossedModule:
    """``A3 -> S3 -> 1`` with the commutator as lifting (the Peiffer lift of ``S3 -> 1``)."""
    S3 = symmetric_group(3)
    one = CyclicGroup(1, "1")
    pcm = PreCrossedModule(S3, one, trivial_hom(S3, one), _trivial_action, "S3->1")
    return peiffer_lift_from_precrossed(pcm, name="fixD")


def trivial_bottom(G: Group, name: str | None = None) -> TwoCrossedModule:
    """``1 -> 1 -> G``."""
    L = CyclicGroup(1, "1")
    E = CyclicGroup(1, "1")
    return TwoCrossedModule(
        L, E, G,
        delta=trivial_hom(L, E), boundary=trivial_hom(E, G),
        act_E=_trivial_action, act_L=_trivial_action,
        lifting=_trivial_lifting_to(L), name=name or f"bottom_{G.name}",
    )


def counterexample_morphism() -> XModMorphism:
    """``(0, 0, id)`` from ``fixA`` to ``fixB``."""
    A, B = fix_a(), fix_b()
    return XModMorphism(A, B, lambda l: 0, lambda e: 0, lambda g: g, "f")


def reverse_counterexample_morphism() -> XModMorphism:
    """The all-trivial map ``fixA -> fixB``."""
    A, B = fix_a(), fix_b()
    return XModMorphism(A, B, lambda l: 0, lambda e: 0, lambda g: 0, "f'")


def fixtures() -> dict[str, TwoCrossedModule]:
    """Every base fixture by name."""
    return {
        "fixA": fix_a(),
        "fixB": fix_b(),
        "fixC_Z2": fix_c(CyclicGroup(2, "Z2"), "fixC_Z2"),
        "fixC_S3": fix_c(symmetric_group(3), "fixC_S3"),
        "fixD": fix_d(),
    }
