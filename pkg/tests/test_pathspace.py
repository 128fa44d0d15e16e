from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twocrossed.groups import symmetric_group
from twocrossed.pathspace import (
    compare_disk,
    compare_double_faces,
    compare_tetra,
    compare_triangle,
    disk_lifting_vanishes,
    double_faces,
    lifted_action_special_cases,
    morphisms_agree,
    path_space,
    path_space_checks,
    path_space_map,
    peiffer_pairing_check,
    triangle_pullback_check,
)
from twocrossed.xmod import identity_morphism, verify_two_crossed, xmod_map_verify


def _expected_sizes(A) -> tuple[int, int, int]:
    # paths in L are pairs, paths in E carry a start, a displacement and a top-level correction
    nL, nE, nG = A.sizes()
    return (nL * nL, nE * nE * nL, nG * nE)


@pytest.mark.parametrize("name", ["fixA", "fixC_Z2", "fixC_S3", "fixD"])
def test_path_space_sizes(fx, name):
    assert path_space(fx[name]).total.sizes() == _expected_sizes(fx[name])


def test_frozen_path_space_sizes(fx):
    assert path_space(fx["fixC_S3"]).total.sizes() == (1, 36, 36)
    assert path_space(fx["fixD"]).total.sizes() == (9, 108, 6)


@pytest.mark.parametrize("name", ["fixC_Z2", "fixC_S3", "fixD"])
def test_path_space_is_two_crossed_module(fx, name):
    report = verify_two_crossed(path_space(fx[name]).total, exhaustive=True)
    assert report.passed, report.failures


def test_path_space_of_integer_fixture_on_probes(fx):
    report = verify_two_crossed(path_space(fx["fixB"]).total, max_tuples=3000)
    assert report.passed, report.failures


@pytest.mark.parametrize("name", ["fixC_Z2", "fixC_S3", "fixD", "fixB"])
def test_endpoint_maps(fx, name):
    A = fx[name]
    P = path_space(A)
    report = path_space_checks(A, max_tuples=2000)
    assert report.passed, report.failures
    for f in (P.pr0, P.pr1, P.incl):
        assert xmod_map_verify(f, max_tuples=3000).passed, f.name


def test_path_space_is_memoised(fx):
    assert path_space(fx["fixD"]) is path_space(fx["fixD"])


@given(st.sampled_from(range(6)), st.sampled_from(range(6)))
def test_g_level_path_runs_from_g_to_g_times_boundary(g, e):
    S3 = symmetric_group(3)
    from twocrossed.corpus import fix_c

    A = fix_c(S3)
    P = path_space(A)
    x = P.path_g(g, e)
    assert P.split_g(x) == (g, e)
    assert P.pr0.phi(x) == g
    assert P.pr1.phi(x) == S3.mul(g, e)


@given(st.sampled_from(range(6)), st.sampled_from(range(6)), st.sampled_from(range(3)))
def test_e_level_path_endpoints(a, e, k):
    from twocrossed.corpus import fix_d

    A = fix_d()
    P = path_space(A)
    kk = A.L.elements()[k]
    x = P.path_e(a, e, kk)
    assert P.split_e(x) == (a, e, kk)
    assert P.pr0.psi(x) == a
    assert P.pr1.psi(x) == A.E.mul(A.E.mul(a, e), A.delta(kk))


def test_path_space_map_of_identity_is_identity(fx):
    A = fx["fixD"]
    P = path_space(A)
    f = path_space_map(identity_morphism(A))
    ident = identity_morphism(P.total)
    assert morphisms_agree(f, ident).passed
    assert xmod_map_verify(f).passed


def test_double_path_space_sizes(fx):
    D = double_faces(fx["fixC_Z2"])
    inner = path_space(fx["fixC_Z2"]).total
    assert D.total.sizes() == _expected_sizes(inner)
    assert set(D.faces()) == {"d0", "d1", "d2", "d3"}


@pytest.mark.parametrize("name", ["fixC_Z2", "fixC_S3"])
def test_explicit_double_faces(fx, name):
    report = compare_double_faces(fx[name], max_tuples=4000)
    assert report.passed, report.failures


def test_explicit_double_faces_on_fixd_sampled(fx):
    report = compare_double_faces(fx["fixD"], max_tuples=3000, seed=7)
    assert report.passed, report.failures


@pytest.mark.parametrize("name", ["fixC_Z2", "fixD"])
def test_triangle_operations(fx, name):
    A = fx[name]
    assert compare_triangle(A, samples=300).passed
    assert triangle_pullback_check(A).passed


@pytest.mark.parametrize("name", ["fixC_Z2", "fixD"])
def test_disk_embedding(fx, name):
    A = fx[name]
    report = compare_disk(A, max_tuples=3000)
    assert report.passed, report.failures
    assert disk_lifting_vanishes(A, max_tuples=3000).passed


@pytest.mark.parametrize("name", ["fixC_Z2", "fixD"])
def test_tetrahedral_faces(fx, name):
    report = compare_tetra(fx[name], samples=200)
    assert report.passed, report.failures


def test_lifted_action_special_cases(fx):
    for name in ("fixC_S3", "fixD"):
        report = lifted_action_special_cases(fx[name])
        assert report.passed, (name, report.failures)
    assert peiffer_pairing_check(fx["fixD"]).passed


def test_broken_lifting_breaks_path_space(fx):
    import dataclasses

    D = fx["fixD"]
    broken = dataclasses.replace(D, lifting=lambda e, f: D.L.identity, name="broken")
    assert not verify_two_crossed(path_space(broken).total, exhaustive=True).passed
