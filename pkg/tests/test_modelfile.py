from __future__ import annotations

import textwrap

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twocrossed.lax import lax_target, lax_validate
from twocrossed.homotopy import is_quadratic_derivation
from twocrossed.modelfile import (
    CORPUS_TEXT,
    ModelError,
    ParseError,
    Section,
    TypeMismatch,
    UnresolvedName,
    corpus,
    emit,
    extend,
    load,
    loads,
    merge,
    parse,
)
from twocrossed.xmod import verify_two_crossed, xmod_map_verify

Z3_TABLE = textwrap.dedent("""\
    [group C3]
    kind = table
    elements = a b c
    row a = a b c
    row b = b c a
    row c = c a b
""")


def test_corpus_resolves_every_section_kind():
    model = corpus()
    assert set(model.xmods) >= {"fixA", "fixB", "fixC_Z2", "fixC_S3", "fixD", "q1_fixD"}
    assert set(model.morphisms) == {"f", "f_reverse", "c_trivial", "c_swap"}
    assert set(model.homotopies) == {"forward"}
    assert set(model.lax) == {"unit_trivial", "to_swap"}
    assert set(model.twofolds) == {"k_unit"}
    assert model.seed == 0


@pytest.mark.parametrize("name", ["fixA", "fixC_Z2", "fixC_S3", "fixD"])
def test_corpus_modules_match_builtin_fixtures(fx, name):
    A = corpus().xmods[name]
    assert A.sizes() == fx[name].sizes()
    assert verify_two_crossed(A, exhaustive=True).passed


def test_corpus_integer_module_on_probes():
    assert verify_two_crossed(corpus().xmods["fixB"]).passed


def test_corpus_cells_are_valid():
    model = corpus()
    for f in model.morphisms.values():
        assert xmod_map_verify(f).passed, f.name
    h = model.homotopies["forward"]
    assert is_quadratic_derivation(h.base, h.s, h.t).passed
    for lh in model.lax.values():
        assert lax_validate(lh.base, lh.s_hat, lh.t_hat, lh.Pi).passed
    end = lax_target(model.lax["to_swap"])
    swap = model.morphisms["c_swap"]
    assert all(end.psi(e) == swap.psi(e) for e in (0, 1))


def test_round_trip_is_equivalent():
    model = corpus()
    again = loads(model.text())
    assert again.equivalent(model)
    assert again.text() == model.text()


def test_comments_and_spacing_do_not_matter():
    noisy = CORPUS_TEXT.replace(" = ", "   =    ").replace("[group Z2]", "[group Z2]   # the sign group")
    assert loads(noisy).equivalent(corpus())


_labels = st.from_regex(r"[a-z][a-z0-9_]{0,6}", fullmatch=True)


@st.composite
def sections(draw) -> list[Section]:
    out = []
    for i in range(draw(st.integers(1, 4))):
        name = f"{draw(_labels)}{i}"
        n = draw(st.integers(1, 9))
        out.append(parse(f"[group {name}]\nkind = cyclic {n}\n")[0])
    return out


@given(sections())
def test_emit_then_parse_preserves_sections(secs):
    again = parse(emit(secs))
    assert [s.canonical() for s in again] == [s.canonical() for s in secs]


@given(st.integers(1, 12), st.integers(0, 11))
def test_linear_maps_between_cyclic_groups(n, k):
    text = f"[group C]\nkind = cyclic {n}\n[map times]\nfrom = C\nto = C\nkind = linear {k}\n"
    f = loads(text).maps["times"]
    assert [f(x) for x in range(n)] == [(k * x) % n for x in range(n)]
    assert f.failures() == []


def test_table_group():
    G = loads(Z3_TABLE).groups["C3"]
    assert G.order() == 3
    assert G.label(G.mul(G.element("b"), G.element("c"))) == "a"


def test_table_group_must_be_total():
    text = Z3_TABLE.replace("row c = c a b\n", "")
    with pytest.raises(TypeMismatch, match="missing rows"):
        loads(text)


def test_unresolved_name_reports_position():
    text = "[map m]\nfrom = Q\nto = Q\nkind = identity\n"
    with pytest.raises(UnresolvedName) as info:
        loads(text)
    assert (info.value.line, info.value.col) == (2, 8)
    assert "line 2, column 8" in str(info.value)


def test_bad_element_reports_position():
    text = Z3_TABLE + "[map m]\nfrom = C3\nto = C3\nkind = table\nentry = a -> a\nentry = b -> z\nentry = c -> c\n"
    with pytest.raises(TypeMismatch) as info:
        loads(text)
    assert (info.value.line, info.value.col) == (12, 9)


@pytest.mark.parametrize(
    "text, message",
    [
        ("kind = cyclic 2\n", "outside of a section"),
        ("[group G\nkind = cyclic 2\n", "malformed section header"),
        ("[monoid M]\n", "unknown section kind"),
        ("[group G]\nkind cyclic 2\n", "expected 'key = value'"),
        ("[group G]\nkind = dihedral 4\n", "unknown group kind"),
        ("[group G]\nkind = cyclic\n", "bad arguments"),
        ("[group G]\nkind = cyclic 2\n[group G]\nkind = cyclic 3\n", "duplicate section"),
    ],
)
def test_parse_errors(text, message):
    with pytest.raises(ModelError, match=message):
        loads(text)


def test_partial_table_is_rejected():
    text = CORPUS_TEXT.replace("pi = 1, 1 -> 123\n\n[lax to_swap]", "\n[lax to_swap]")
    with pytest.raises(TypeMismatch, match="not total"):
        loads(text)


def test_mistyped_map_in_module_is_rejected():
    text = CORPUS_TEXT.replace("[xmod fixD]\nL = A3\nE = S3\nG = 1\ndelta = incl_A3",
                               "[xmod fixD]\nL = A3\nE = S3\nG = 1\ndelta = id_S3")
    with pytest.raises(TypeMismatch, match="expected A3 -> S3"):
        loads(text)


def test_peiffer_lifting_must_land_in_top_group():
    text = CORPUS_TEXT.replace("[group A3]\nkind = subgroup S3\ngenerators = 231",
                               "[group A3]\nkind = subgroup S3\ngenerators = 123")
    with pytest.raises(TypeMismatch, match="Peiffer commutators leave"):
        loads(text)


def test_extend_resolves_against_the_corpus():
    extra = textwrap.dedent("""\
        [map zero_A3_1]
        from = A3
        to = 1
        kind = trivial

        [map zero_S3_Z2]
        from = S3
        to = Z2
        kind = trivial

        [morphism back]
        source = fixD
        target = fixC_Z2
        mu = zero_A3_1
        psi = zero_S3_Z2
        phi = zero_1_Z2
    """)
    model = extend(corpus(), extra)
    back = model.morphisms["back"]
    assert back.source is model.xmods["fixD"]
    assert xmod_map_verify(back).passed


def test_extend_errors_point_into_the_extra_text():
    with pytest.raises(UnresolvedName) as info:
        extend(corpus(), "\n\n[map m]\nfrom = nowhere\nto = Z2\nkind = trivial\n")
    assert info.value.line == 4


def test_merge_and_load(tmp_path):
    path = tmp_path / "c3.model"
    path.write_text(Z3_TABLE)
    model = merge(corpus(), load(path))
    assert "C3" in model.groups and "fixD" in model.xmods


def test_lookup_names_the_table():
    with pytest.raises(UnresolvedName, match="no xmod named 'nope'"):
        corpus().lookup("xmods", "nope")


def test_free_group_words():
    model = loads("[group F]\nkind = free a b\n[group C]\nkind = cyclic 2\n"
                  "[map p]\nfrom = F\nto = C\nkind = trivial\n")
    assert model.groups["F"].rank == 2


def test_parse_error_is_model_error():
    assert issubclass(ParseError, ModelError)
