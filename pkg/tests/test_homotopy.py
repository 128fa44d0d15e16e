from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twocrossed.homotopy import (
    BaseMismatch,
    CompositionMismatch,
    SourceNotFree,
    build_hom2groupoid,
    compose_with_strict,
    concat_homotopies,
    extend_2derivation,
    free_homotopy,
    interchange_report,
    invert_homotopy,
    invert_twofold,
    is_quadratic_2derivation,
    is_quadratic_derivation,
    omega,
    omega_dual_check,
    omega_identity_report,
    random_words,
    same_morphism,
    twofold_target,
    unit_homotopy,
    unit_twofold,
    vertical_compose,
    whisker_left,
    whisker_left_report,
    whisker_right,
    whisker_right_report,
    winv_report,
)
from twocrossed.lax import all_morphisms, lax_target, lax_to_strict, q1, search_lax_homotopies
from twocrossed.xmod import identity_morphism, xmod_map_verify

from strategies import words


@pytest.fixture(scope="module")
def cells(fx):
    """Every strict homotopy Q1(fixC_Z2) -> fixD obtained from the exhaustive lax search."""
    A, D = fx["fixC_Z2"], fx["fixD"]
    lax = [lh for f in all_morphisms(A, D) for lh in search_lax_homotopies(f)]
    strict = [lax_to_strict(lh) for lh in lax]
    composable = [(i, j) for i, h in enumerate(lax) for j, k in enumerate(lax)
                  if _signature(lax_target(h), A) == _signature(k.base, A)]
    return {"A": A, "D": D, "Q": q1(A), "lax": lax, "strict": strict, "composable": composable}


def _signature(f, A) -> tuple:
    return tuple(f.psi(e) for e in A.E.elements()) + tuple(f.phi(g) for g in A.G.elements())


def _composable(cells) -> list[tuple[int, int]]:
    return cells["composable"]


def test_cell_counts(cells):
    assert len(_composable(cells)) == 4 * 36 * 36
    # four morphisms, each with 36 lax homotopies out of 26,244 candidate tables
    assert len(cells["lax"]) == 144
    starts = {tuple(lh.base.psi(e) for e in (0, 1)) for lh in cells["lax"]}
    assert len(starts) == 4


def test_every_cell_is_quadratic_derivation(cells):
    for h in cells["strict"][::9]:
        report = is_quadratic_derivation(h.base, h.s, h.t, depth=2, samples=30, max_tuples=1500)
        assert report.passed, report.failures


def test_unit_homotopy_is_valid_and_stationary(cells):
    Q, D = cells["Q"], cells["D"]
    for f in all_morphisms(cells["A"], D):
        base = f.compose(Q.proj)
        h = unit_homotopy(base)
        assert is_quadratic_derivation(base, h.s, h.t, max_tuples=800).passed
        assert same_morphism(h.target, base)


def test_homotopy_target_is_morphism(cells):
    for h in cells["strict"][::12]:
        assert xmod_map_verify(h.target, max_tuples=2000).passed


@settings(max_examples=25)
@given(st.data())
def test_omega_computations_agree(cells, data):
    pairs = _composable(cells)
    i, j = data.draw(st.sampled_from(pairs))
    w = data.draw(words(cells["Q"].free, max_size=8))
    om = omega(cells["strict"][i], cells["strict"][j], check=False)
    assert om.homomorphic(w) == om.recursive(w)


def test_omega_dual_check_counts_words(cells):
    h = cells["strict"][5]
    k = next(cells["strict"][j] for i, j in _composable(cells) if i == 5)
    ws = random_words(cells["Q"].free, 40, seed=3)
    report = omega_dual_check(h, k, ws)
    assert report.passed
    assert report.checked["omega-dual"] == 40


def test_omega_identities(cells):
    ws = random_words(cells["Q"].free, 30, seed=1)
    for i, j in _composable(cells)[::97]:
        report = omega_identity_report(cells["strict"][i], cells["strict"][j], ws)
        assert report.passed, report.failures


def test_concatenation_endpoints_and_validity(cells):
    strict = cells["strict"]
    for i, j in _composable(cells)[::401]:
        c = concat_homotopies(strict[i], strict[j])
        assert same_morphism(c.base, strict[i].base)
        assert same_morphism(c.target, strict[j].target)
        assert is_quadratic_derivation(c.base, c.s, c.t, samples=30, max_tuples=800,
                                       include_path_space=False).passed


def test_concatenation_refuses_mismatched_endpoints(cells):
    strict = cells["strict"]
    i, j = next((i, j) for i in range(len(strict)) for j in range(len(strict))
                if not same_morphism(strict[i].target, strict[j].base))
    with pytest.raises(BaseMismatch):
        concat_homotopies(strict[i], strict[j])


def test_inverse_runs_backwards(cells):
    Q = cells["Q"]
    for h in cells["strict"][::11]:
        inv = invert_homotopy(h)
        assert same_morphism(inv.base, h.target)
        assert same_morphism(inv.target, h.base)
        assert is_quadratic_derivation(inv.base, inv.s, inv.t, samples=30, max_tuples=800,
                                       include_path_space=False).passed
        loop = concat_homotopies(h, inv)
        gens = [Q.free.generator(i) for i in range(Q.free.rank)]
        assert all(loop.s(b) == cells["D"].E.identity for b in gens)


def test_both_inverse_correction_forms_hold(cells):
    ws = random_words(cells["Q"].free, 20, seed=2)
    for h in cells["strict"][::7]:
        report = winv_report(h, ws)
        assert report.passed, report.failures


def test_twofold_operations(cells):
    D, Q = cells["D"], cells["Q"]
    Ls = D.L.elements()
    h = cells["strict"][17]
    for values in itertools.product(Ls, repeat=Q.free.rank):
        k = extend_2derivation(h, list(values))
        assert is_quadratic_2derivation(k).passed
        top = twofold_target(k)
        assert same_morphism(top.base, h.base) and same_morphism(top.target, h.target)
        assert is_quadratic_derivation(top.base, top.s, top.t, samples=20, max_tuples=400).passed
        kinv = invert_twofold(k)
        assert twofold_target(kinv).basis_values() == h.basis_values()
        both = vertical_compose(k, kinv)
        assert both.basis_values == unit_twofold(h).basis_values


def test_vertical_composition_checks_endpoints(cells):
    D, Q = cells["D"], cells["Q"]
    h = cells["strict"][17]
    nontrivial = next(v for v in D.L.elements() if v != D.L.identity)
    k = extend_2derivation(h, [nontrivial] * Q.free.rank)
    with pytest.raises(CompositionMismatch):
        vertical_compose(k, k)


def test_whiskering_and_interchange(cells):
    D, Q = cells["D"], cells["Q"]
    strict = cells["strict"]
    ws = random_words(Q.free, 15, seed=4)
    es = Q.total.E.probe()[:20]
    nontrivial = next(v for v in D.L.elements() if v != D.L.identity)
    for i, j in _composable(cells)[::211]:
        k = extend_2derivation(strict[i], [nontrivial, D.L.identity])
        assert whisker_right_report(k, strict[j], ws, es).passed
        kw = whisker_right(k, strict[j])
        assert is_quadratic_2derivation(kw).passed
        k2 = extend_2derivation(strict[j], [D.L.identity, nontrivial])
        assert whisker_left_report(strict[i], k2, ws, es).passed
        assert is_quadratic_2derivation(whisker_left(strict[i], k2)).passed
        assert interchange_report(k, k2).passed


def test_hom2groupoid_laws_on_sample(cells):
    D, Q = cells["D"], cells["Q"]
    strict = cells["strict"][:36]
    twofolds = [extend_2derivation(h, [v, D.L.identity]) for h in strict[:6] for v in D.L.elements()]
    groupoid = build_hom2groupoid(Q.total, D, strict, twofolds)
    report = groupoid.laws(max_cells=10, seed=0)
    assert report.passed, report.failed_laws()


def test_compose_with_strict_map(cells):
    D = cells["D"]
    h = cells["strict"][3]
    g = identity_morphism(D)
    whiskered = compose_with_strict(h, g=g)
    assert is_quadratic_derivation(whiskered.base, whiskered.s, whiskered.t, samples=30,
                                   max_tuples=800).passed
    assert same_morphism(whiskered.target, h.target)


def test_free_homotopy_needs_free_bottom(fx):
    f = identity_morphism(fx["fixC_Z2"])
    with pytest.raises(SourceNotFree):
        free_homotopy(f, [0, 0], lambda e: 0)


def test_free_homotopy_matches_lax_image(cells):
    lh = cells["lax"][40]
    h = lax_to_strict(lh)
    rebuilt = free_homotopy(h.base, h.basis_values(), h.t)
    Q = cells["Q"]
    for w in random_words(Q.free, 20, seed=5):
        assert rebuilt.s(w) == h.s(w)
    assert same_morphism(rebuilt.target, lax_target(lh).compose(Q.proj))
