from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twocrossed.groups import (
    CyclicGroup,
    FreeGroup,
    GroupError,
    Homomorphism,
    IntegerGroup,
    NotAHomomorphism,
    NotNormal,
    PullbackGroup,
    QuotientGroup,
    SemidirectProduct,
    Subgroup,
    TableGroup,
    TabulatedGroup,
    bounded_product,
    check_action,
    direct_product,
    free_reduce,
    group_axiom_failures,
    hom_extend_free,
    symmetric_group,
)

from strategies import elements_of, raw_words, words

S3 = symmetric_group(3)
Z6 = CyclicGroup(6)
F2 = FreeGroup(["a", "b"], "F2")


def _perm_of(label: str) -> tuple[int, ...]:
    return tuple(int(c) - 1 for c in label)


@given(elements_of(S3), elements_of(S3))
def test_symmetric_group_multiplies_as_composition(x, y):
    p, q = _perm_of(S3.label(x)), _perm_of(S3.label(y))
    composed = tuple(p[q[i]] for i in range(3))
    assert _perm_of(S3.label(S3.mul(x, y))) == composed


def test_symmetric_group_identity_first_and_nonabelian():
    assert S3.identity == 0
    assert S3.order() == 6
    assert not S3.is_abelian()
    assert group_axiom_failures(S3) == []


@pytest.mark.parametrize("group", [Z6, S3, CyclicGroup(1), symmetric_group(4)], ids=lambda g: g.name)
def test_finite_groups_satisfy_axioms(group):
    assert group_axiom_failures(group, max_tuples=20_000) == []


def test_table_group_rejects_bad_tables():
    with pytest.raises(GroupError):
        TableGroup(["a", "b"], [[0, 1]])
    with pytest.raises(GroupError):
        TableGroup(["a", "b"], [[0, 0], [0, 0]])
    with pytest.raises(GroupError):
        CyclicGroup(0)


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_integer_group_is_addition(a, b):
    Z = IntegerGroup()
    assert Z.mul(a, b) == a + b
    assert Z.mul(a, Z.inv(a)) == 0
    assert Z.contains(a) and not Z.contains(True)


@given(raw_words(2))
def test_free_reduce_is_idempotent_and_reduced(letters):
    w = free_reduce(letters)
    assert free_reduce(w) == w
    assert all(x != -y for x, y in zip(w, w[1:]))


@given(words(F2), words(F2), words(F2))
def test_free_group_axioms(u, v, w):
    assert F2.mul(F2.mul(u, v), w) == F2.mul(u, F2.mul(v, w))
    assert F2.mul(u, F2.inv(u)) == ()
    assert F2.mul(u, ()) == u
    assert F2.mul(u, v) == free_reduce(u + v)


@given(words(F2), words(F2))
def test_extension_from_free_group_is_homomorphism(u, v):
    a, b = S3.element("213"), S3.element("231")
    f = hom_extend_free(F2, S3, [a, b])
    assert f(F2.mul(u, v)) == S3.mul(f(u), f(v))
    assert f(F2.generator(0)) == a


def test_extension_needs_one_image_per_basis_letter():
    with pytest.raises(GroupError):
        hom_extend_free(F2, S3, [0])


def test_free_words_up_to_counts_reduced_words():
    # reduced words of length n over rank r: 2r(2r-1)^(n-1)
    expected = 1 + 4 + 4 * 3
    assert len(list(F2.words_up_to(2))) == expected


def _sign(x: int) -> int:
    p = _perm_of(S3.label(x))
    inversions = sum(1 for i, j in itertools.combinations(range(3), 2) if p[i] > p[j])
    return inversions % 2


@given(elements_of(Z6), elements_of(Z6), elements_of(Z6), elements_of(Z6))
def test_semidirect_product_multiplication_rule(h1, n1, h2, n2):
    C2 = CyclicGroup(2)
    negate = lambda g, n: (-n) % 6 if g else n  # noqa: E731
    P = SemidirectProduct(C2, Z6, negate)
    a, b = (h1 % 2, n1), (h2 % 2, n2)
    got = P.mul(a, b)
    assert got == ((a[0] + b[0]) % 2, (negate(b[0], a[1]) + b[1]) % 6)
    assert P.mul(a, P.inv(a)) == P.identity


def test_dihedral_semidirect_product_is_nonabelian_group():
    C2 = CyclicGroup(2)
    P = SemidirectProduct(C2, CyclicGroup(3), lambda g, n: (-n) % 3 if g else n, "D3")
    assert len(P.elements()) == 6
    assert group_axiom_failures(P) == []
    assert not P.is_abelian()


def test_direct_product_is_abelian_for_abelian_factors():
    P = direct_product(CyclicGroup(2), CyclicGroup(3))
    assert P.is_abelian()
    assert len(P.elements()) == 6


def test_check_action_detects_non_action():
    bad = lambda g, n: (n + g) % 3  # noqa: E731
    assert check_action(CyclicGroup(2), CyclicGroup(3), bad, 1000, random.Random(0))


def test_pullback_of_sign_and_projection():
    C2 = CyclicGroup(2)
    sign = Homomorphism(S3, C2, _sign, "sign")
    P = PullbackGroup(sign, Homomorphism(C2, C2, lambda x: x, "id"))
    # pairs (x, c) with sign(x) = c: one for each x
    assert len(P.elements()) == 6
    assert group_axiom_failures(P) == []


@given(elements_of(S3))
def test_alternating_subgroup_cosets(x):
    A3 = Subgroup(S3, [S3.element("231")], "A3")
    assert A3.order() == 3
    assert A3.is_normal()
    Q = QuotientGroup(S3, A3)
    assert Q.order() == 2
    assert (Q.project(x) == Q.identity) == (_sign(x) == 0)


def test_quotient_by_non_normal_subgroup_raises():
    with pytest.raises(NotNormal):
        QuotientGroup(S3, Subgroup(S3, [S3.element("213")]))


def test_homomorphism_kernel_and_image():
    sign = Homomorphism(S3, CyclicGroup(2), _sign, "sign")
    assert sign.failures() == []
    assert sign.kernel().order() == 3
    assert sign.image().order() == 2
    not_hom = Homomorphism(S3, CyclicGroup(2), lambda x: 1, "const")
    assert not_hom.failures()
    assert issubclass(NotAHomomorphism, GroupError)


def test_tabulated_group_round_trip():
    P = direct_product(CyclicGroup(2), CyclicGroup(2))
    T = TabulatedGroup(P)
    assert group_axiom_failures(T) == []
    for a, b in itertools.product(T.elements(), repeat=2):
        assert T.decode[T.mul(a, b)] == P.mul(T.decode[a], T.decode[b])


def test_bounded_product_switches_to_sampling():
    assert len(list(bounded_product([range(3), range(3)], 100))) == 9
    sample = list(bounded_product([range(10), range(10)], 7, random.Random(1)))
    assert len(sample) == 7
