from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twocrossed.corpus import fixtures
from twocrossed.groups import GroupError
from twocrossed.homotopy import is_quadratic_derivation
from twocrossed.lax import (
    InvalidLaxData,
    LaxHomotopy,
    LaxTwoFold,
    NotStrictEndpoints,
    all_lax_tuples,
    all_morphisms,
    bijection_report,
    correspondence_report,
    counterexample_report,
    integer_solutions_of_torsion,
    is_lax_equivalence,
    kernel_relations_check,
    lax_compose_strict,
    lax_concat,
    lax_equal,
    lax_groupoid_report,
    lax_invert,
    lax_search_space,
    lax_target,
    lax_to_strict,
    lax_twofold_target,
    lax_validate,
    q1,
    q1_report,
    search_lax_homotopies,
    strict_side_accepts,
    strict_to_lax,
    trivial_lax,
)
from twocrossed.xmod import identity_morphism, trivial_morphism, xmod_map_verify

from strategies import elements_of, words


@pytest.fixture(scope="module")
def cells(fx):
    A, D = fx["fixC_Z2"], fx["fixD"]
    morphisms = all_morphisms(A, D)
    return {"A": A, "D": D, "morphisms": morphisms,
            "lax": [lh for f in morphisms for lh in search_lax_homotopies(f)]}


def _signature(f, A) -> tuple:
    return tuple(f.psi(e) for e in A.E.elements()) + tuple(f.phi(g) for g in A.G.elements())


@pytest.mark.parametrize("name", ["fixA", "fixC_Z2", "fixC_S3", "fixD"])
def test_resolution_is_two_crossed_with_section(fx, name):
    report = q1_report(fx[name], max_tuples=1500)
    assert report.passed, report.failed_laws()


def test_resolution_bottom_is_free_on_group_elements(fx):
    Q = q1(fx["fixC_S3"])
    assert Q.free.rank == 6
    assert q1(fx["fixC_S3"]) is Q


S3_FIXTURE = fixtures()["fixC_S3"]


@given(elements_of(S3_FIXTURE.G), elements_of(S3_FIXTURE.G))
def test_kernel_words_project_to_identity(g, h):
    Q = q1(S3_FIXTURE)
    assert Q.p(Q.kernel_word(g, h)) == Q.base.G.identity
    assert Q.total.boundary(Q.pair(g, h)) == Q.kernel_word(g, h)


def test_kernel_relations_exhaustive_over_z2(fx):
    report = kernel_relations_check(fx["fixC_Z2"], max_triples=10 ** 6)
    assert report.passed, report.failures
    assert report.probe["mode"] == "exhaustive"


def test_kernel_relations_sampled_over_s3(fx):
    report = kernel_relations_check(fx["fixC_S3"], max_triples=300, seed=11)
    assert report.passed, report.failures


def test_search_space_sizes(cells, fx):
    # 6^2 values of s_hat, 3^2 of t_hat and 3^4 of Pi
    assert lax_search_space(cells["morphisms"][0])[3] == 36 * 9 * 81
    f = all_morphisms(fx["fixA"], fx["fixC_Z2"])[0]
    assert lax_search_space(f)[3] == 2 ** 2
    assert sum(1 for _ in all_lax_tuples(f)) == 4


def test_lax_cell_counts(cells, fx):
    assert len(cells["morphisms"]) == 4
    assert len(cells["lax"]) == 144
    counts = [len(search_lax_homotopies(f)) for f in all_morphisms(fx["fixA"], fx["fixC_Z2"])]
    assert counts == [2, 2]


def test_search_refuses_large_spaces(fx):
    f = identity_morphism(fx["fixD"])
    with pytest.raises(GroupError):
        search_lax_homotopies(f, limit=1000)


def test_trivial_lax_homotopy_is_valid(cells):
    for f in cells["morphisms"]:
        lh = trivial_lax(f)
        assert lax_validate(f, lh.s_hat, lh.t_hat, lh.Pi).passed


@settings(max_examples=40)
@given(st.data())
def test_lax_and_strict_acceptance_agree_on_random_tables(cells, data):
    D, A = cells["D"], cells["A"]
    f = data.draw(st.sampled_from(cells["morphisms"]))
    Es, Ls = D.E.elements(), D.L.elements()
    G, E = A.G.elements(), A.E.elements()
    s_hat = {g: data.draw(st.sampled_from(Es)) for g in G}
    t_hat = {e: data.draw(st.sampled_from(Ls)) for e in E}
    Pi = {(g, h): data.draw(st.sampled_from(Ls)) for g in G for h in G}
    lh = LaxHomotopy(f, s_hat, t_hat, Pi)
    assert lax_validate(f, s_hat, t_hat, Pi, fail_fast=True).passed == strict_side_accepts(lh).passed


@settings(max_examples=20)
@given(st.data())
def test_valid_cells_round_trip_through_strict_side(cells, data):
    lh = data.draw(st.sampled_from(cells["lax"]))
    h = lax_to_strict(lh)
    back = strict_to_lax(h, cells["A"])
    assert lax_equal(back, lh)
    Q = q1(cells["A"])
    w = data.draw(words(Q.free, max_size=6))
    assert lax_target(lh).compose(Q.proj).phi(w) == h.target.phi(w)


def test_strict_image_is_quadratic_derivation_with_path_space_map(cells):
    h = lax_to_strict(cells["lax"][50])
    report = is_quadratic_derivation(h.base, h.s, h.t, samples=30, max_tuples=1500)
    assert report.passed, report.failed_laws()


def test_lax_target_is_morphism(cells):
    for lh in cells["lax"][::10]:
        assert xmod_map_verify(lax_target(lh, validate=True)).passed


def test_lax_target_validation_rejects_bad_data(cells):
    f = cells["morphisms"][0]
    lh = trivial_lax(f)
    D = cells["D"]
    bad = type(lh)(f, dict(lh.s_hat), dict(lh.t_hat), {k: D.L.elements()[1] for k in lh.Pi})
    with pytest.raises(InvalidLaxData):
        lax_target(bad, validate=True)


def test_concatenation_and_inverse_are_valid(cells):
    A, hs = cells["A"], cells["lax"]
    by_start = {}
    for lh in hs:
        by_start.setdefault(_signature(lh.base, A), []).append(lh)
    for lh in hs[::13]:
        nxt = by_start[_signature(lax_target(lh), A)][0]
        c = lax_concat(lh, nxt)
        assert lax_validate(c.base, c.s_hat, c.t_hat, c.Pi).passed
        inv = lax_invert(lh)
        assert lax_validate(inv.base, inv.s_hat, inv.t_hat, inv.Pi).passed
        assert lax_equal(lax_invert(inv), lh)


def test_concatenation_checks_endpoints(cells):
    A, hs = cells["A"], cells["lax"]
    lh = next(x for x in hs if _signature(lax_target(x), A) != _signature(x.base, A))
    with pytest.raises(NotStrictEndpoints):
        lax_concat(lh, lh)


def test_correspondence_with_strict_operations(cells):
    A, D, hs = cells["A"], cells["D"], cells["lax"]
    Ls = D.L.elements()
    by_start = {}
    for lh in hs:
        by_start.setdefault(_signature(lh.base, A), []).append(lh)
    for i, lh in enumerate(hs[::29]):
        nxt = by_start[_signature(lax_target(lh), A)][i % 36]
        k1 = {0: Ls[i % 3], 1: Ls[(i + 1) % 3]}
        k2 = {0: Ls[(2 * i) % 3], 1: Ls[0]}
        report = correspondence_report(lh, nxt, k1, k2)
        assert report.passed, report.failures


def test_twofold_target_is_valid(cells):
    D = cells["D"]
    lh = cells["lax"][77]
    for values in itertools.product(D.L.elements(), repeat=2):
        k = LaxTwoFold(lh, dict(zip((0, 1), values)))
        top = lax_twofold_target(k)
        assert lax_validate(top.base, top.s_hat, top.t_hat, top.Pi).passed


def test_groupoid_laws_on_tables(cells):
    report = lax_groupoid_report(cells["lax"], max_triples=300, max_cells=150, seed=3)
    assert report.passed, report.failures


def test_composition_with_strict_maps(cells, fx):
    lh = cells["lax"][20]
    D = cells["D"]
    left = lax_compose_strict(identity_morphism(D), lh, "left")
    assert lax_equal(left, lh)
    right = lax_compose_strict(identity_morphism(cells["A"]), lh, "right")
    assert lax_equal(right, lh)
    to_one = trivial_morphism(D, fx["fixA"])
    pushed = lax_compose_strict(to_one, lh, "left")
    assert lax_validate(pushed.base, pushed.s_hat, pushed.t_hat, pushed.Pi).passed
    with pytest.raises(ValueError):
        lax_compose_strict(to_one, lh, "middle")


def test_identity_is_lax_equivalence(fx):
    A = fx["fixC_Z2"]
    f = identity_morphism(A)
    assert is_lax_equivalence(f, f).passed
    given_witness = trivial_lax(f)
    assert is_lax_equivalence(f, f, given_witness, given_witness).passed


def test_equivalence_needs_a_round_trip(fx):
    f = trivial_morphism(fx["fixC_Z2"], fx["fixD"])
    with pytest.raises(NotStrictEndpoints):
        is_lax_equivalence(f, f)


def test_maps_of_contractible_fixture_are_equivalences(fx):
    A = fx["fixC_Z2"]
    f = trivial_morphism(A, A)
    report = is_lax_equivalence(f, f)
    # fixC_Z2 is contractible, so every pair of maps is homotopic
    assert report.passed


def test_bijection_on_small_pairs():
    report = bijection_report(pairs=(("fixA", "fixC_Z2"), ("fixC_Z2", "fixC_Z2")))
    assert report.passed, report.failures
    accepted = report.probe["accepted (lax, strict)"]
    assert accepted["fixA->fixC_Z2"] == (4, 4)
    assert accepted["fixC_Z2->fixC_Z2"] == (4, 4)


def test_counterexample_report():
    result = counterexample_report(bound=20)
    assert result.forward.passed
    assert result.forward_target_trivial
    assert result.reverse_candidates == 41
    assert result.reverse_found == []
    assert result.analytic_solutions == {0}
    assert result.analytic_blocks_reverse
    assert result.passed
    assert len(result.lines()) == 4


@given(st.integers(-1000, 1000))
def test_torsion_solutions_in_integers(n):
    solutions = integer_solutions_of_torsion(n)
    if n == 0:
        assert solutions is None
    else:
        assert solutions == {x for x in range(-50, 51) if n * x == 0}
