"""A line-oriented text format for groups, 2-crossed modules and the cells between them.

A file is a sequence of sections.  Each section starts with a header
``[kind name]`` and continues with ``key = value`` entries; ``#`` starts a
comment.  Keys may repeat (table rows, table entries).  Section kinds:

``model``
    ``seed = <int>``.
``group``
    ``kind = cyclic <n> | integers | symmetric <n> | table | subgroup <parent> | free <labels...>``;
    ``elements = ...`` and ``row <label> = ...`` for tables, ``generators = ...`` for subgroups,
    ``probe = <bound>`` for infinite carriers.
``map``
    ``from``, ``to``, ``kind = identity | trivial | inclusion | linear <k> | table``,
    entries ``x -> y``.
``action``
    ``group``, ``on``, ``kind = trivial | conjugation | sign | table``, entries ``g, x -> y``.
``lifting``
    ``on``, ``into``, ``kind = trivial | peiffer | parity | table``, entries ``x, y -> l``.
``xmod``
    ``L, E, G, delta, boundary, act_E, act_L, lifting``, or ``kind = q1 <xmod>``.
``morphism``
    ``source``, ``target``, ``mu``, ``psi``, ``phi`` naming maps.
``homotopy``
    ``base`` naming a morphism, entries ``s = g -> e`` and ``t = e -> l``.
``lax``
    ``base`` naming a morphism, entries ``s = g -> e``, ``t = e -> l``, ``pi = g, h -> l``.
``twofold``
    ``base`` naming a lax homotopy, entries ``k = g -> l``.
``probes``
    ``<group> = <bound>`` overriding probe bounds of infinite carriers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from .groups import (
    CyclicGroup,
    Element,
    FreeGroup,
    Group,
    Homomorphism,
    IntegerGroup,
    Subgroup,
    TableGroup,
    free_reduce,
    identity_hom,
    symmetric_group,
    trivial_hom,
)
from .homotopy import Homotopy, make_homotopy
from .lax import LaxHomotopy, LaxTwoFold, q1
from .xmod import PreCrossedModule, TwoCrossedModule, XModMorphism, peiffer_commutator


class ModelError(Exception):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        where = f"line {line}, column {col}: " if line else ""
        super().__init__(where + message)
        self.line = line
        self.col = col


class ParseError(ModelError):
    pass


class UnresolvedName(ModelError):
    pass


class TypeMismatch(ModelError):
    pass


@dataclass(frozen=True)
class Entry:
    key: str
    value: str
    line: int = 0
    col: int = 0


@dataclass
class Section:
    kind: str
    name: str
    entries: list[Entry] = field(default_factory=list)
    line: int = 0

    def get(self, key: str, default: str | None = None) -> str | None:
        for e in self.entries:
            if e.key == key:
                return e.value
        return default

    def entry(self, key: str) -> Entry:
        for e in self.entries:
            if e.key == key:
                return e
        raise ParseError(f"[{self.kind} {self.name}] is missing '{key}'", self.line, 1)

    def all(self, key: str) -> list[Entry]:
        return [e for e in self.entries if e.key == key]

    def canonical(self) -> tuple:
        return (self.kind, self.name, tuple((e.key, " ".join(e.value.split())) for e in self.entries))


SECTION_KINDS = ("model", "group", "map", "action", "lifting", "xmod", "morphism", "homotopy", "lax",
                 "twofold", "probes")
_HEADER = re.compile(r"^\[\s*([A-Za-z]+)(?:\s+([^\]\s]+))?\s*\]\s*$")
_NAME = re.compile(r"^[A-Za-z0-9_][A-Za-z0-9_'.-]*$")


def parse(text: str) -> list[Section]:
    """Split text into sections; syntax errors carry line and column."""
    sections: list[Section] = []
    current: Section | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        stripped = line.strip()
        if stripped.startswith("["):
            m = _HEADER.match(stripped)
            if not m:
                raise ParseError("malformed section header", lineno, col)
            kind, name = m.group(1), m.group(2) or ""
            if kind not in SECTION_KINDS:
                raise ParseError(f"unknown section kind '{kind}'", lineno, col + 1)
            if kind not in ("model", "probes") and not _NAME.match(name):
                raise ParseError(f"section [{kind}] needs a name", lineno, col + 1)
            current = Section(kind, name, [], lineno)
            sections.append(current)
            continue
        if current is None:
            raise ParseError("entry outside of a section", lineno, col)
        if "=" not in stripped:
            raise ParseError("expected 'key = value'", lineno, col)
        key, value = stripped.split("=", 1)
        key = " ".join(key.split())
        if not key:
            raise ParseError("empty key", lineno, col)
        value_col = col + len(stripped) - len(value.lstrip())
        current.entries.append(Entry(key, value.strip(), lineno, value_col))
    return sections


def emit(sections: list[Section]) -> str:
    """Canonical text for a list of sections."""
    out = []
    for s in sections:
        out.append(f"[{s.kind} {s.name}]".replace(" ]", "]"))
        out += [f"{e.key} = {' '.join(e.value.split())}" for e in s.entries]
        out.append("")
    return "\n".join(out)


# ---------------------------------------------------------------------------
# resolution


@dataclass
class ModelFile:
    sections: list[Section]
    seed: int = 0
    groups: dict[str, Group] = field(default_factory=dict)
    maps: dict[str, Homomorphism] = field(default_factory=dict)
    actions: dict[str, tuple[str, str, Callable]] = field(default_factory=dict)
    liftings: dict[str, Section] = field(default_factory=dict)
    xmods: dict[str, TwoCrossedModule] = field(default_factory=dict)
    morphisms: dict[str, XModMorphism] = field(default_factory=dict)
    homotopies: dict[str, Homotopy] = field(default_factory=dict)
    lax: dict[str, LaxHomotopy] = field(default_factory=dict)
    twofolds: dict[str, LaxTwoFold] = field(default_factory=dict)
    probes: dict[str, int] = field(default_factory=dict)

    def text(self) -> str:
        return emit(self.sections)

    def equivalent(self, other: "ModelFile") -> bool:
        return [s.canonical() for s in self.sections] == [s.canonical() for s in other.sections]

    def lookup(self, table: str, name: str) -> Any:
        store = getattr(self, table)
        if name not in store:
            raise UnresolvedName(f"no {table[:-1] if table.endswith('s') else table} named '{name}'")
        return store[name]


class _Resolver:
    def __init__(self, sections: list[Section]):
        self.model = ModelFile(sections)
        self.labels: dict[str, dict[str, Element]] = {}

    # names and elements

    def _get(self, table: str, entry: Entry, name: str | None = None) -> Any:
        key = name if name is not None else entry.value
        store = getattr(self.model, table)
        if key not in store:
            raise UnresolvedName(f"unresolved name '{key}'", entry.line, entry.col)
        return store[key]

    def element(self, group: Group, token: str, entry: Entry) -> Element:
        token = token.strip()
        if isinstance(group, IntegerGroup):
            try:
                return int(token)
            except ValueError:
                raise TypeMismatch(f"'{token}' is not an integer in {group.name}", entry.line, entry.col) from None
        if isinstance(group, FreeGroup):
            return self._word(group, token, entry)
        table = self.labels.get(group.name)
        if table is None:
            table = {group.label(x): x for x in group.elements()}
            self.labels[group.name] = table
        if token not in table:
            raise TypeMismatch(f"'{token}' is not an element of {group.name}", entry.line, entry.col)
        return table[token]

    def _word(self, free: FreeGroup, token: str, entry: Entry) -> tuple:
        if token in ("1", "e", "()"):
            return ()
        index = {b: i + 1 for i, b in enumerate(free.basis)}
        letters = []
        for part in token.split():
            base, _, power = part.partition("^")
            if base not in index:
                raise TypeMismatch(f"'{base}' is not a generator of {free.name}", entry.line, entry.col)
            letters.append(index[base] if power in ("", "1") else -index[base])
        return free_reduce(letters)

    def _arrow(self, entry: Entry, arity: int) -> tuple[list[str], str]:
        if "->" not in entry.value:
            raise ParseError("expected 'x -> y'", entry.line, entry.col)
        lhs, rhs = entry.value.split("->", 1)
        args = [a.strip() for a in lhs.split(",")]
        if len(args) != arity:
            raise ParseError(f"expected {arity} argument(s) before '->'", entry.line, entry.col)
        return args, rhs.strip()

    # sections

    def run(self) -> ModelFile:
        handlers = {
            "model": self._model, "probes": self._probes, "group": self._group, "map": self._map,
            "action": self._action, "lifting": self._lifting, "xmod": self._xmod,
            "morphism": self._morphism, "homotopy": self._homotopy, "lax": self._lax,
            "twofold": self._twofold,
        }
        seen: set[tuple[str, str]] = set()
        for s in self.model.sections:
            if s.name and (s.kind, s.name) in seen:
                raise ParseError(f"duplicate section [{s.kind} {s.name}]", s.line, 1)
            seen.add((s.kind, s.name))
            handlers[s.kind](s)
        return self.model

    def _model(self, s: Section) -> None:
        e = s.get("seed")
        if e is not None:
            try:
                self.model.seed = int(e)
            except ValueError:
                raise ParseError("seed must be an integer", s.entry("seed").line, s.entry("seed").col) from None

    def _probes(self, s: Section) -> None:
        for e in s.entries:
            try:
                self.model.probes[e.key] = int(e.value)
            except ValueError:
                raise ParseError("probe bound must be an integer", e.line, e.col) from None
            g = self.model.groups.get(e.key)
            if isinstance(g, IntegerGroup):
                g.probe_bound = int(e.value)

    def _group(self, s: Section) -> None:
        kind_entry = s.entry("kind")
        words = kind_entry.value.split()
        kind, args = words[0], words[1:]
        G: Group
        try:
            if kind == "cyclic":
                G = CyclicGroup(int(args[0]), s.name)
            elif kind == "integers":
                G = IntegerGroup(s.name, probe_bound=int(s.get("probe", "8")))
            elif kind == "symmetric":
                G = symmetric_group(int(args[0]), s.name)
            elif kind == "free":
                G = FreeGroup(args, s.name, probe_depth=int(s.get("probe", "3")))
            elif kind == "table":
                G = self._table_group(s)
            elif kind == "subgroup":
                e = s.entry("generators")
                parent = self._get("groups", kind_entry, args[0])
                gens = [self.element(parent, t, e) for t in e.value.split()]
                G = Subgroup(parent, gens, s.name)
            else:
                raise ParseError(f"unknown group kind '{kind}'", kind_entry.line, kind_entry.col)
        except (IndexError, ValueError):
            raise ParseError(f"bad arguments for group kind '{kind}'", kind_entry.line, kind_entry.col) from None
        self.model.groups[s.name] = G

    def _table_group(self, s: Section) -> TableGroup:
        names = s.entry("elements").value.split()
        index = {n: i for i, n in enumerate(names)}
        rows: dict[str, list[int]] = {}
        for e in s.entries:
            if not e.key.startswith("row "):
                continue
            head = e.key[4:].strip()
            cells = e.value.split()
            if head not in index or len(cells) != len(names) or any(c not in index for c in cells):
                raise TypeMismatch(f"row '{head}' is not a total row over the declared elements", e.line, e.col)
            rows[head] = [index[c] for c in cells]
        missing = [n for n in names if n not in rows]
        if missing:
            raise TypeMismatch(f"table for {s.name} is missing rows {missing}", s.line, 1)
        try:
            return TableGroup(names, [rows[n] for n in names], s.name)
        except Exception as exc:  # the table is not a group
            raise TypeMismatch(str(exc), s.line, 1) from None

    def _map(self, s: Section) -> None:
        src = self._get("groups", s.entry("from"))
        dst = self._get("groups", s.entry("to"))
        kind_entry = s.entry("kind")
        words = kind_entry.value.split()
        kind = words[0]
        if kind == "identity":
            h = identity_hom(src)
        elif kind == "trivial":
            h = trivial_hom(src, dst)
        elif kind == "inclusion":
            h = Homomorphism(src, dst, lambda x: x, s.name)
        elif kind == "linear":
            k = int(words[1])
            if isinstance(dst, CyclicGroup):
                h = Homomorphism(src, dst, lambda x, k=k, n=dst.n: (k * x) % n, s.name)
            else:
                h = Homomorphism(src, dst, lambda x, k=k: k * x, s.name)
        elif kind == "table":
            table = {}
            for e in s.all("entry"):
                (x,), y = self._arrow(e, 1)
                table[self.element(src, x, e)] = self.element(dst, y, e)
            self._total(src, table, s)
            h = Homomorphism(src, dst, table.__getitem__, s.name)
        else:
            raise ParseError(f"unknown map kind '{kind}'", kind_entry.line, kind_entry.col)
        h.name = s.name
        self.model.maps[s.name] = h

    def _total(self, group: Group, table: dict, s: Section, arity: int = 1) -> None:
        if not group.is_finite:
            raise TypeMismatch(f"table over infinite carrier {group.name}", s.line, 1)
        n = len(group.elements()) ** arity
        if len(table) != n:
            raise TypeMismatch(f"table in [{s.kind} {s.name}] is not total ({len(table)} of {n})", s.line, 1)

    def _action(self, s: Section) -> None:
        actor_name, target_name = s.entry("group").value, s.entry("on").value
        actor = self._get("groups", s.entry("group"))
        target = self._get("groups", s.entry("on"))
        kind_entry = s.entry("kind")
        kind = kind_entry.value
        if kind == "trivial":
            act = lambda g, x: x  # noqa: E731
        elif kind == "conjugation":
            act = target.conj
        elif kind == "sign":
            act = lambda g, x: -x if g % 2 else x  # noqa: E731
        elif kind == "table":
            table = {}
            for e in s.all("entry"):
                (g, x), y = self._arrow(e, 2)
                table[self.element(actor, g, e), self.element(target, x, e)] = self.element(target, y, e)
            if len(table) != len(actor.elements()) * len(target.elements()):
                raise TypeMismatch(f"table in [action {s.name}] is not total", s.line, 1)
            act = lambda g, x, t=table: t[g, x]  # noqa: E731
        else:
            raise ParseError(f"unknown action kind '{kind}'", kind_entry.line, kind_entry.col)
        self.model.actions[s.name] = (actor_name, target_name, act)

    def _lifting(self, s: Section) -> None:
        self._get("groups", s.entry("on"))
        self._get("groups", s.entry("into"))
        self.model.liftings[s.name] = s

    def _build_lifting(self, s: Section, E: Group, L: Group, boundary: Homomorphism,
                       act_E: Callable) -> Callable:
        kind_entry = s.entry("kind")
        kind = kind_entry.value
        if kind == "trivial":
            one = L.identity
            return lambda x, y: one
        if kind == "parity":
            return lambda x, y: y if x % 2 else 0
        if kind == "peiffer":
            pcm = PreCrossedModule(E, boundary.codomain, boundary, act_E, s.name)
            if E.is_finite:
                bad = [(x, y) for x in E.elements() for y in E.elements()
                       if not L.contains(peiffer_commutator(pcm, x, y))]
                if bad:
                    raise TypeMismatch(f"Peiffer commutators leave {L.name} at {bad[0]}", kind_entry.line,
                                       kind_entry.col)
            return lambda x, y: peiffer_commutator(pcm, x, y)
        if kind == "table":
            table = {}
            for e in s.all("entry"):
                (x, y), z = self._arrow(e, 2)
                table[self.element(E, x, e), self.element(E, y, e)] = self.element(L, z, e)
            self._total(E, table, s, arity=2)
            return lambda x, y: table[x, y]
        raise ParseError(f"unknown lifting kind '{kind}'", kind_entry.line, kind_entry.col)

    def _check_map(self, entry: Entry, h: Homomorphism, src: Group, dst: Group) -> None:
        if h.domain is not src or h.codomain is not dst:
            raise TypeMismatch(f"map '{entry.value}' is {h.domain.name} -> {h.codomain.name}, "
                               f"expected {src.name} -> {dst.name}", entry.line, entry.col)

    def _xmod(self, s: Section) -> None:
        kind = s.get("kind")
        if kind is not None:
            words = kind.split()
            e = s.entry("kind")
            if words[0] != "q1" or len(words) != 2:
                raise ParseError(f"unknown xmod kind '{kind}'", e.line, e.col)
            base = self._get("xmods", e, words[1])
            self.model.xmods[s.name] = q1(base).total
            return
        L = self._get("groups", s.entry("L"))
        E = self._get("groups", s.entry("E"))
        G = self._get("groups", s.entry("G"))
        delta = self._get("maps", s.entry("delta"))
        boundary = self._get("maps", s.entry("boundary"))
        self._check_map(s.entry("delta"), delta, L, E)
        self._check_map(s.entry("boundary"), boundary, E, G)
        acts = {}
        for key, target, group in (("act_E", E, "E"), ("act_L", L, "L")):
            e = s.entry(key)
            actor_name, target_name, act = self._get("actions", e)
            if self.model.groups[actor_name] is not G or self.model.groups[target_name] is not target:
                raise TypeMismatch(f"action '{e.value}' must be {G.name} on {target.name}", e.line, e.col)
            acts[key] = act
        le = s.entry("lifting")
        lift_section = self._get("liftings", le)
        if (self.model.groups[lift_section.get("on")] is not E
                or self.model.groups[lift_section.get("into")] is not L):
            raise TypeMismatch(f"lifting '{le.value}' must be {E.name} x {E.name} -> {L.name}", le.line, le.col)
        lifting = self._build_lifting(lift_section, E, L, boundary, acts["act_E"])
        self.model.xmods[s.name] = TwoCrossedModule(L, E, G, delta=delta, boundary=boundary,
                                                    act_E=acts["act_E"], act_L=acts["act_L"],
                                                    lifting=lifting, name=s.name)

    def _morphism(self, s: Section) -> None:
        A = self._get("xmods", s.entry("source"))
        B = self._get("xmods", s.entry("target"))
        parts = []
        for key, src, dst in (("mu", A.L, B.L), ("psi", A.E, B.E), ("phi", A.G, B.G)):
            e = s.entry(key)
            h = self._get("maps", e)
            if h.domain.name != src.name or h.codomain.name != dst.name:
                raise TypeMismatch(f"map '{e.value}' is {h.domain.name} -> {h.codomain.name}, "
                                   f"expected {src.name} -> {dst.name}", e.line, e.col)
            parts.append(h)
        self.model.morphisms[s.name] = XModMorphism(A, B, parts[0], parts[1], parts[2], s.name)

    def _tables(self, s: Section, specs: dict[str, tuple[int, list[Group], Group]]) -> dict[str, dict]:
        out: dict[str, dict] = {}
        for key, (arity, domains, codomain) in specs.items():
            table = {}
            for e in s.all(key):
                args, y = self._arrow(e, arity)
                xs = tuple(self.element(d, a, e) for d, a in zip(domains, args))
                table[xs[0] if arity == 1 else xs] = self.element(codomain, y, e)
            n = 1
            for d in domains:
                if not d.is_finite:
                    raise TypeMismatch(f"table '{key}' over infinite carrier {d.name}", s.line, 1)
                n *= len(d.elements())
            if len(table) != n:
                raise TypeMismatch(f"table '{key}' in [{s.kind} {s.name}] is not total ({len(table)} of {n})",
                                   s.line, 1)
            out[key] = table
        return out

    def _homotopy(self, s: Section) -> None:
        f = self._get("morphisms", s.entry("base"))
        A, B = f.source, f.target
        t = self._tables(s, {"s": (1, [A.G], B.E), "t": (1, [A.E], B.L)})
        self.model.homotopies[s.name] = make_homotopy(f, t["s"].__getitem__, t["t"].__getitem__, s.name)

    def _lax(self, s: Section) -> None:
        f = self._get("morphisms", s.entry("base"))
        A, B = f.source, f.target
        t = self._tables(s, {"s": (1, [A.G], B.E), "t": (1, [A.E], B.L), "pi": (2, [A.G, A.G], B.L)})
        self.model.lax[s.name] = LaxHomotopy(f, t["s"], t["t"], t["pi"], s.name)

    def _twofold(self, s: Section) -> None:
        lh = self._get("lax", s.entry("base"))
        A, B = lh.source, lh.base.target
        t = self._tables(s, {"k": (1, [A.G], B.L)})
        self.model.twofolds[s.name] = LaxTwoFold(lh, t["k"], s.name)


def loads(text: str) -> ModelFile:
    return _Resolver(parse(text)).run()


def load(path: str | Path) -> ModelFile:
    return loads(Path(path).read_text())


def extend(base: ModelFile, text: str) -> ModelFile:
    """Resolve ``text`` after the sections of ``base``; positions in errors refer to ``text``."""
    return _Resolver(base.sections + parse(text)).run()


def merge(*models: ModelFile) -> ModelFile:
    """Resolve the concatenation of several models, later sections may refer to earlier ones."""
    return _Resolver([s for m in models for s in m.sections]).run()


# ---------------------------------------------------------------------------
# the bundled corpus

CORPUS_TEXT = """\
# Fixture corpus: four small 2-crossed modules, their Q1 resolutions and a few cells.

[model]
seed = 0

[group 0]
kind = cyclic 1

[group 1]
kind = cyclic 1

[group Z2]
kind = cyclic 2

[group Z]
kind = integers
probe = 8

[group 2Z]
kind = integers
probe = 8

[group S3]
kind = symmetric 3

[group A3]
kind = subgroup S3
generators = 231

[map zero_0_0]
from = 0
to = 0
kind = identity

[map zero_0_Z2]
from = 0
to = Z2
kind = trivial

[map id_Z2]
from = Z2
to = Z2
kind = identity

[map id_S3]
from = S3
to = S3
kind = identity

[map zero_1_Z2]
from = 1
to = Z2
kind = trivial

[map zero_1_S3]
from = 1
to = S3
kind = trivial

[map zero_S3_1]
from = S3
to = 1
kind = trivial

[map incl_A3]
from = A3
to = S3
kind = inclusion

[map double]
from = 2Z
to = Z
kind = linear 2

[map mod2]
from = Z
to = Z2
kind = linear 1

[map zero_0_2Z]
from = 0
to = 2Z
kind = trivial

[map zero_0_Z]
from = 0
to = Z
kind = trivial

[action trivial_Z2_0]
group = Z2
on = 0
kind = trivial

[action sign_Z]
group = Z2
on = Z
kind = sign

[action sign_2Z]
group = Z2
on = 2Z
kind = sign

[action conj_Z2]
group = Z2
on = Z2
kind = conjugation

[action trivial_Z2_1]
group = Z2
on = 1
kind = trivial

[action conj_S3]
group = S3
on = S3
kind = conjugation

[action trivial_S3_1]
group = S3
on = 1
kind = trivial

[action trivial_1_S3]
group = 1
on = S3
kind = trivial

[action trivial_1_A3]
group = 1
on = A3
kind = trivial

[lifting none_0]
on = 0
into = 0
kind = trivial

[lifting parity]
on = Z
into = 2Z
kind = parity

[lifting none_Z2]
on = Z2
into = 1
kind = trivial

[lifting none_S3]
on = S3
into = 1
kind = trivial

[lifting commutator]
on = S3
into = A3
kind = peiffer

[xmod fixA]
L = 0
E = 0
G = Z2
delta = zero_0_0
boundary = zero_0_Z2
act_E = trivial_Z2_0
act_L = trivial_Z2_0
lifting = none_0

[xmod fixB]
L = 2Z
E = Z
G = Z2
delta = double
boundary = mod2
act_E = sign_Z
act_L = sign_2Z
lifting = parity

[xmod fixC_Z2]
L = 1
E = Z2
G = Z2
delta = zero_1_Z2
boundary = id_Z2
act_E = conj_Z2
act_L = trivial_Z2_1
lifting = none_Z2

[xmod fixC_S3]
L = 1
E = S3
G = S3
delta = zero_1_S3
boundary = id_S3
act_E = conj_S3
act_L = trivial_S3_1
lifting = none_S3

[xmod fixD]
L = A3
E = S3
G = 1
delta = incl_A3
boundary = zero_S3_1
act_E = trivial_1_S3
act_L = trivial_1_A3
lifting = commutator

[xmod q1_fixA]
kind = q1 fixA

[xmod q1_fixC_Z2]
kind = q1 fixC_Z2

[xmod q1_fixC_S3]
kind = q1 fixC_S3

[xmod q1_fixD]
kind = q1 fixD

# the asymmetric pair of maps fixA -> fixB

[map f_mu]
from = 0
to = 2Z
kind = trivial

[map f_psi]
from = 0
to = Z
kind = trivial

[map zero_Z2_Z2]
from = Z2
to = Z2
kind = trivial

[morphism f]
source = fixA
target = fixB
mu = f_mu
psi = f_psi
phi = id_Z2

[morphism f_reverse]
source = fixA
target = fixB
mu = f_mu
psi = f_psi
phi = zero_Z2_Z2

[homotopy forward]
base = f
s = 0 -> 0
s = 1 -> 1
t = 0 -> 0

# maps fixC_Z2 -> fixD and lax cells between them

[map zero_1_A3]
from = 1
to = A3
kind = trivial

[map zero_Z2_S3]
from = Z2
to = S3
kind = trivial

[map swap_Z2_S3]
from = Z2
to = S3
kind = table
entry = 0 -> 123
entry = 1 -> 213

[map zero_Z2_1]
from = Z2
to = 1
kind = trivial

[morphism c_trivial]
source = fixC_Z2
target = fixD
mu = zero_1_A3
psi = zero_Z2_S3
phi = zero_Z2_1

[morphism c_swap]
source = fixC_Z2
target = fixD
mu = zero_1_A3
psi = swap_Z2_S3
phi = zero_Z2_1

[lax unit_trivial]
base = c_trivial
s = 0 -> 123
s = 1 -> 123
t = 0 -> 123
t = 1 -> 123
pi = 0, 0 -> 123
pi = 0, 1 -> 123
pi = 1, 0 -> 123
pi = 1, 1 -> 123

[lax to_swap]
base = c_trivial
s = 0 -> 123
s = 1 -> 213
t = 0 -> 123
t = 1 -> 123
pi = 0, 0 -> 123
pi = 0, 1 -> 123
pi = 1, 0 -> 123
pi = 1, 1 -> 123

[twofold k_unit]
base = to_swap
k = 0 -> 123
k = 1 -> 123
"""


def corpus() -> ModelFile:
    """The bundled fixtures, their ``Q1`` resolutions and example cells."""
    return loads(CORPUS_TEXT)
