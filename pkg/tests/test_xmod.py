from __future__ import annotations

import dataclasses

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twocrossed.corpus import counterexample_morphism, fix_c, trivial_bottom
from twocrossed.groups import CyclicGroup, IntegerGroup, symmetric_group
from twocrossed.xmod import (
    NotComputable,
    PreCrossedModule,
    XModMorphism,
    homotopy_groups,
    identity_morphism,
    peiffer_commutator,
    rnn_suite,
    secondary_action,
    trivial_morphism,
    verify_crossed,
    verify_two_crossed,
    xmod_map_verify,
)

from strategies import elements_of


@pytest.mark.parametrize("name", ["fixA", "fixC_Z2", "fixC_S3", "fixD"])
def test_finite_fixtures_pass_exhaustively(fx, name):
    report = verify_two_crossed(fx[name], exhaustive=True)
    assert report.passed, report.failures
    assert report.probe["mode"] == "exhaustive"
    assert len(report.checked) == 17


def test_integer_fixture_passes_on_probes(fx):
    report = verify_two_crossed(fx["fixB"])
    assert report.passed, report.failures
    assert report.probe["mode"] == "probe"


def test_exhaustive_check_refuses_infinite_carriers(fx):
    with pytest.raises(NotComputable):
        verify_two_crossed(fx["fixB"], exhaustive=True)


def test_fixture_sizes(fx):
    assert fx["fixA"].sizes() == (1, 1, 2)
    assert fx["fixC_Z2"].sizes() == (1, 2, 2)
    assert fx["fixC_S3"].sizes() == (1, 6, 6)
    # the Peiffer subgroup of S3 under the trivial action is the commutator subgroup A3
    assert fx["fixD"].sizes() == (3, 6, 1)
    assert fx["fixB"].sizes() is None


def test_trivial_lifting_on_fixd_is_rejected(fx):
    D = fx["fixD"]
    broken = dataclasses.replace(D, lifting=lambda e, f: D.L.identity, name="broken")
    report = verify_two_crossed(broken, exhaustive=True)
    assert not report.passed
    assert "lifting-lifts-peiffer" in report.failed_laws()


def test_wrong_action_is_rejected(fx):
    S3 = symmetric_group(3)
    broken = dataclasses.replace(fix_c(S3), act_E=lambda g, e: e, name="no-conjugation")
    report = verify_two_crossed(broken, exhaustive=True)
    assert "boundary-equivariant" in report.failed_laws()


@pytest.mark.parametrize("name", ["fixC_Z2", "fixC_S3", "fixD"])
def test_derived_identities_hold(fx, name):
    report = rnn_suite(fx[name], exhaustive=True)
    assert report.passed, report.failures


def test_derived_identities_on_integer_fixture(fx):
    assert rnn_suite(fx["fixB"]).passed


def test_secondary_action_gives_crossed_module(fx):
    for name in ("fixB", "fixD"):
        assert verify_crossed(fx[name].secondary_crossed()).passed


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_integer_lifting_lifts_peiffer_commutator(m, n):
    from twocrossed.corpus import fix_b

    B = fix_b()
    assert B.delta(B.lifting(m, n)) == peiffer_commutator(B, m, n)


@given(elements_of(symmetric_group(3)), elements_of(symmetric_group(3)))
def test_fixd_lifting_is_group_commutator(x, y):
    from twocrossed.corpus import fix_d

    D = fix_d()
    E = D.E
    assert D.lifting(x, y) == E.commutator(x, y)
    assert secondary_action(D, x, D.lifting(x, y)) == E.conj(x, E.commutator(x, y))


def _homotopy_group_orders(A) -> tuple[int, int, int]:
    """Orders of (G / im ∂, ker ∂ / im δ, ker δ) computed directly from element sets."""
    G, E, L = A.G, A.E, A.L
    im_b = {A.boundary(e) for e in E.elements()}
    ker_b = {e for e in E.elements() if A.boundary(e) == G.identity}
    im_d = {A.delta(l) for l in L.elements()}
    ker_d = {l for l in L.elements() if A.delta(l) == E.identity}
    return (len(G.elements()) // len(im_b), len(ker_b) // len(im_d), len(ker_d))


@pytest.mark.parametrize("name", ["fixA", "fixC_Z2", "fixC_S3", "fixD"])
def test_homotopy_group_orders_match_counting(fx, name):
    assert homotopy_groups(fx[name]).orders() == _homotopy_group_orders(fx[name])


def test_homotopy_groups_of_reference_modules(fx):
    assert homotopy_groups(fx["fixB"]).describe() == ("1", "1", "1")
    assert homotopy_groups(fx["fixD"]).describe() == ("1", "Z2", "1")
    assert homotopy_groups(trivial_bottom(CyclicGroup(2))).describe() == ("Z2", "1", "1")
    assert homotopy_groups(trivial_bottom(symmetric_group(3))).orders() == (6, 1, 1)


def test_homotopy_groups_of_integer_module_with_trivial_top():
    from twocrossed.corpus import fix_b
    from twocrossed.groups import trivial_hom

    B = fix_b()
    one = CyclicGroup(1, "1")
    flat = dataclasses.replace(B, L=one, delta=trivial_hom(one, B.E), act_L=lambda g, l: l,
                               lifting=lambda a, b: 0, name="flat")
    # the kernel of reduction mod 2 is 2Z, and nothing divides it out
    assert homotopy_groups(flat).describe() == ("1", "Z", "1")


def test_identity_and_trivial_morphisms_verify(fx):
    for name in ("fixC_Z2", "fixD", "fixB"):
        assert xmod_map_verify(identity_morphism(fx[name])).passed
    assert xmod_map_verify(trivial_morphism(fx["fixC_Z2"], fx["fixD"])).passed
    assert xmod_map_verify(counterexample_morphism()).passed


def test_non_equivariant_morphism_is_rejected(fx):
    A, D = fx["fixC_S3"], fx["fixD"]
    # A acts on E by conjugation, D acts trivially, so psi = id is not equivariant
    f = XModMorphism(A, D, lambda l: D.L.identity, lambda e: e, lambda g: 0, "bad")
    assert not xmod_map_verify(f).passed


def test_composition_of_morphisms(fx):
    A = fx["fixC_Z2"]
    f = identity_morphism(A)
    g = f.compose(f)
    assert all(g.psi(e) == e for e in A.E.elements())
    assert g.source is A and g.target is A


def test_peiffer_lift_of_crossed_module_has_trivial_peiffer_subgroup():
    S3 = symmetric_group(3)
    from twocrossed.groups import identity_hom
    from twocrossed.xmod import peiffer_lift_from_precrossed

    pcm = PreCrossedModule(S3, S3, identity_hom(S3), S3.conj, "S3->S3")
    A = peiffer_lift_from_precrossed(pcm)
    assert A.sizes() == (1, 6, 6)
    assert verify_two_crossed(A).passed


def test_infinite_peiffer_lift_is_refused():
    from twocrossed.groups import NotEnumerable, trivial_hom
    from twocrossed.xmod import peiffer_lift_from_precrossed

    Z = IntegerGroup()
    one = CyclicGroup(1)
    with pytest.raises(NotEnumerable):
        peiffer_lift_from_precrossed(PreCrossedModule(Z, one, trivial_hom(Z, one), lambda g, x: x))


def test_report_merge_prefixes_laws():
    from twocrossed.xmod import report_from

    a = report_from([], {}, {"x": 1})
    b = report_from([("y", (1,))], {}, {"y": 2})
    merged = a.merge(b, prefix="p:")
    assert not merged.passed
    assert merged.failed_laws() == ["p:y"]
    assert merged.checked == {"x": 1, "p:y": 2}
    assert "FAIL" in merged.summary()


def test_all_finite_tuples_counted(fx):
    report = verify_two_crossed(fx["fixD"], exhaustive=True)
    L, E, G = 3, 6, 1
    assert report.checked["lifting-left-product"] == E ** 3
    assert report.checked["lifting-symmetrised"] == L * E
    assert report.checked["action-L-composition"] == G * G * L
