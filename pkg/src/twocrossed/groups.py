"""Exact computational groups: finite tables, cyclic groups, the integers,
free groups, semidirect products, pullbacks, subgroups and quotients.

Elements are plain hashable payloads owned by their group:

* table and cyclic groups use ``int`` indices / residues,
* the integers use ``int``,
* free groups use reduced words, i.e. tuples of nonzero ints where ``i + 1``
  is the ``i``-th basis letter and ``-(i + 1)`` its inverse,
* semidirect products and pullbacks use pairs.
"""

from __future__ import annotations

import itertools
import math
import random
from abc import ABC, abstractmethod
from collections import deque
from typing import Any, Callable, Hashable, Iterable, Iterator, Sequence

import numpy as np

Element = Hashable


class GroupError(Exception):
    """Base class for errors raised by group constructions."""


class ActionLawViolation(GroupError):
    def __init__(self, law: str, witness: tuple):
        super().__init__(f"action law {law!r} fails at {witness!r}")
        self.law = law
        self.witness = witness


class NotNormal(GroupError):
    def __init__(self, witness: tuple):
        super().__init__(f"subgroup is not normal: conjugate of {witness[1]!r} by {witness[0]!r} escapes")
        self.witness = witness


class NotEnumerable(GroupError):
    pass


class NotAHomomorphism(GroupError):
    def __init__(self, witness: tuple):
        super().__init__(f"map is not a homomorphism at {witness!r}")
        self.witness = witness


class Group(ABC):
    """Abstract group with exact multiplication on hashable payloads."""

    name: str = "G"

    @property
    @abstractmethod
    def identity(self) -> Element: ...

    @abstractmethod
    def mul(self, a: Element, b: Element) -> Element: ...

    @abstractmethod
    def inv(self, a: Element) -> Element: ...

    @abstractmethod
    def contains(self, a: Any) -> bool: ...

    @property
    @abstractmethod
    def is_finite(self) -> bool: ...

    def elements(self) -> list:
        raise NotEnumerable(f"{self.name} is infinite")

    def probe(self) -> list:
        """Finite list of elements used for bounded law checking."""
        return self.elements()

    @abstractmethod
    def random_element(self, rng: random.Random) -> Element: ...

    def label(self, a: Element) -> str:
        return repr(a)

    # derived operations

    def order(self) -> int:
        return len(self.elements())

    def prod(self, *xs: Element) -> Element:
        out = self.identity
        for x in xs:
            out = self.mul(out, x)
        return out

    def div(self, a: Element, b: Element) -> Element:
        return self.mul(a, self.inv(b))

    def power(self, a: Element, n: int) -> Element:
        base = a if n >= 0 else self.inv(a)
        out = self.identity
        for _ in range(abs(n)):
            out = self.mul(out, base)
        return out

    def conj(self, g: Element, x: Element) -> Element:
        """g x g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    def commutator(self, a: Element, b: Element) -> Element:
        """a b a^-1 b^-1."""
        return self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))

    def is_identity(self, a: Element) -> bool:
        return a == self.identity

    def is_abelian(self) -> bool:
        xs = self.probe()
        return all(self.mul(a, b) == self.mul(b, a) for a in xs for b in xs)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


class TableGroup(Group):
    """Finite group given by a Cayley table on ``0..n-1``; ``0`` need not be the identity."""

    def __init__(self, names: Sequence[str], table: Sequence[Sequence[int]], name: str = "T"):
        self.name = name
        self.names = list(names)
        n = len(self.names)
        arr = np.asarray(table, dtype=np.int64)
        if arr.shape != (n, n):
            raise GroupError(f"table for {name} must be {n}x{n}")
        if arr.min(initial=0) < 0 or arr.max(initial=0) >= n:
            raise GroupError(f"table for {name} has entries out of range")
        self.mul_array = arr
        self._rows = [list(map(int, row)) for row in arr]
        ids = [i for i in range(n) if all(self._rows[i][j] == j for j in range(n))]
        if not ids:
            raise GroupError(f"table for {name} has no identity")
        self._identity = ids[0]
        inv = []
        for i in range(n):
            found = [j for j in range(n) if self._rows[i][j] == self._identity]
            if len(found) != 1:
                raise GroupError(f"element {self.names[i]} of {name} has no unique inverse")
            inv.append(found[0])
        self.inv_array = np.asarray(inv, dtype=np.int64)
        self._inv = inv
        self._index = {s: i for i, s in enumerate(self.names)}

    @property
    def identity(self) -> int:
        return self._identity

    def mul(self, a: int, b: int) -> int:
        return self._rows[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def contains(self, a: Any) -> bool:
        return isinstance(a, (int, np.integer)) and 0 <= a < len(self.names)

    @property
    def is_finite(self) -> bool:
        return True

    def elements(self) -> list:
        return list(range(len(self.names)))

    def random_element(self, rng: random.Random) -> int:
        return rng.randrange(len(self.names))

    def label(self, a: int) -> str:
        return self.names[a]

    def element(self, label: str) -> int:
        return self._index[label]

    def order(self) -> int:
        return len(self.names)


class CyclicGroup(Group):
    """Z/n written additively on residues ``0..n-1``."""

    def __init__(self, n: int, name: str | None = None):
        if n < 1:
            raise GroupError("cyclic order must be positive")
        self.n = n
        self.name = name or f"Z{n}"

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def inv(self, a: int) -> int:
        return (-a) % self.n

    def contains(self, a: Any) -> bool:
        return isinstance(a, (int, np.integer)) and 0 <= a < self.n

    @property
    def is_finite(self) -> bool:
        return True

    def elements(self) -> list:
        return list(range(self.n))

    def random_element(self, rng: random.Random) -> int:
        return rng.randrange(self.n)

    def label(self, a: int) -> str:
        return str(a)

    def order(self) -> int:
        return self.n


class IntegerGroup(Group):
    """The integers under addition, probed on a bounded window."""

    def __init__(self, name: str = "Z", probe_bound: int = 8, random_bound: int = 100):
        self.name = name
        self.probe_bound = probe_bound
        self.random_bound = random_bound

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return a + b

    def inv(self, a: int) -> int:
        return -a

    def contains(self, a: Any) -> bool:
        return isinstance(a, (int, np.integer)) and not isinstance(a, bool)

    @property
    def is_finite(self) -> bool:
        return False

    def probe(self) -> list:
        return list(range(-self.probe_bound, self.probe_bound + 1))

    def random_element(self, rng: random.Random) -> int:
        return rng.randint(-self.random_bound, self.random_bound)

    def label(self, a: int) -> str:
        return str(a)


Word = tuple


def free_reduce(letters: Iterable[int]) -> Word:
    """Freely reduce a sequence of signed letters."""
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


class FreeGroup(Group):
    """Free group on named basis symbols, elements are reduced words."""

    def __init__(self, basis: Sequence[str], name: str = "F", probe_depth: int = 4, random_length: int = 8):
        self.name = name
        self.basis = list(basis)
        self.probe_depth = probe_depth
        self.random_length = random_length

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def identity(self) -> Word:
        return ()

    def mul(self, a: Word, b: Word) -> Word:
        i = 0
        n = min(len(a), len(b))
        while i < n and a[len(a) - 1 - i] == -b[i]:
            i += 1
        return a[: len(a) - i] + b[i:]

    def inv(self, a: Word) -> Word:
        return tuple(-x for x in reversed(a))

    def contains(self, a: Any) -> bool:
        if not isinstance(a, tuple):
            return False
        r = self.rank
        if any(not isinstance(x, int) or x == 0 or abs(x) > r for x in a):
            return False
        return all(a[i] != -a[i + 1] for i in range(len(a) - 1))

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    def elements(self) -> list:
        if self.rank == 0:
            return [()]
        return super().elements()

    def generator(self, index: int) -> Word:
        return (index + 1,)

    def letters(self) -> list[int]:
        return [s * (i + 1) for i in range(self.rank) for s in (1, -1)]

    def words_up_to(self, depth: int) -> Iterator[Word]:
        """All reduced words of length at most ``depth``, shortest first."""
        layer: list[Word] = [()]
        yield ()
        letters = self.letters()
        for _ in range(depth):
            nxt = []
            for w in layer:
                for x in letters:
                    if w and w[-1] == -x:
                        continue
                    v = w + (x,)
                    nxt.append(v)
                    yield v
            layer = nxt

    def probe(self) -> list:
        return list(self.words_up_to(self.probe_depth))

    def random_element(self, rng: random.Random, max_length: int | None = None) -> Word:
        length = rng.randint(0, self.random_length if max_length is None else max_length)
        letters = self.letters()
        if not letters:
            return ()
        return free_reduce(rng.choice(letters) for _ in range(length))

    def label(self, a: Word) -> str:
        if not a:
            return "1"
        parts = []
        for x in a:
            sym = self.basis[abs(x) - 1]
            parts.append(sym if x > 0 else f"{sym}^-1")
        return "*".join(parts)


Action = Callable[[Element, Element], Element]


class SemidirectProduct(Group):
    """``actor ⋉ target`` on pairs ``(h, n)`` with
    ``(h, n)(h', n') = (h h', (h'^-1 ▷ n) n')``."""

    def __init__(self, actor: Group, target: Group, action: Action, name: str | None = None):
        self.actor = actor
        self.target = target
        self.action = action
        self.name = name or f"({actor.name} x| {target.name})"
        self._identity = (actor.identity, target.identity)

    @property
    def identity(self) -> tuple:
        return self._identity

    def mul(self, a: tuple, b: tuple) -> tuple:
        H, N = self.actor, self.target
        return (H.mul(a[0], b[0]), N.mul(self.action(H.inv(b[0]), a[1]), b[1]))

    def inv(self, a: tuple) -> tuple:
        H, N = self.actor, self.target
        return (H.inv(a[0]), self.action(a[0], N.inv(a[1])))

    def contains(self, a: Any) -> bool:
        return (
            isinstance(a, tuple)
            and len(a) == 2
            and self.actor.contains(a[0])
            and self.target.contains(a[1])
        )

    @property
    def is_finite(self) -> bool:
        return self.actor.is_finite and self.target.is_finite

    def elements(self) -> list:
        return [(h, n) for h in self.actor.elements() for n in self.target.elements()]

    def probe(self) -> list:
        return [(h, n) for h in self.actor.probe() for n in self.target.probe()]

    def random_element(self, rng: random.Random) -> tuple:
        return (self.actor.random_element(rng), self.target.random_element(rng))

    def label(self, a: tuple) -> str:
        return f"({self.actor.label(a[0])}, {self.target.label(a[1])})"

    def embed_actor(self, h: Element) -> tuple:
        return (h, self.target.identity)

    def embed_target(self, n: Element) -> tuple:
        return (self.actor.identity, n)


def trivial_action(g: Element, x: Element) -> Element:
    return x


def direct_product(left: Group, right: Group, name: str | None = None) -> SemidirectProduct:
    return SemidirectProduct(left, right, trivial_action, name or f"({left.name} x {right.name})")


def check_action(actor: Group, target: Group, action: Action, max_tuples: int = 20000,
                 rng: random.Random | None = None) -> list[tuple[str, tuple]]:
    """Check that ``action`` is a left action by automorphisms on probe elements."""
    failures: list[tuple[str, tuple]] = []
    hs = actor.probe()
    ns = target.probe()
    for n in ns:
        if action(actor.identity, n) != n:
            failures.append(("unit", (actor.identity, n)))
    for h, k, n in bounded_product([hs, hs, ns], max_tuples, rng):
        if action(actor.mul(h, k), n) != action(h, action(k, n)):
            failures.append(("composition", (h, k, n)))
    for h, n, m in bounded_product([hs, ns, ns], max_tuples, rng):
        if action(h, target.mul(n, m)) != target.mul(action(h, n), action(h, m)):
            failures.append(("automorphism", (h, n, m)))
    return failures


def semidirect(actor: Group, target: Group, action: Action, name: str | None = None,
               validate: bool = True) -> SemidirectProduct:
    """Build ``actor ⋉ target``; validates the action on probes unless told otherwise."""
    if validate:
        failures = check_action(actor, target, action)
        if failures:
            law, witness = failures[0]
            raise ActionLawViolation(law, witness)
    return SemidirectProduct(actor, target, action, name)


class Homomorphism:
    """A map of groups given by a rule; callable."""

    def __init__(self, domain: Group, codomain: Group, rule: Callable[[Element], Element],
                 name: str = "f"):
        self.domain = domain
        self.codomain = codomain
        self.rule = rule
        self.name = name

    def __call__(self, x: Element) -> Element:
        return self.rule(x)

    def compose(self, inner: "Homomorphism") -> "Homomorphism":
        """``self ∘ inner``."""
        return Homomorphism(inner.domain, self.codomain, lambda x: self.rule(inner.rule(x)),
                            f"{self.name}.{inner.name}")

    def failures(self, max_tuples: int = 20000, rng: random.Random | None = None) -> list[tuple]:
        D, C = self.domain, self.codomain
        xs = D.probe()
        return [
            (a, b)
            for a, b in bounded_product([xs, xs], max_tuples, rng)
            if self.rule(D.mul(a, b)) != C.mul(self.rule(a), self.rule(b))
        ]

    def image(self) -> "Subgroup":
        return Subgroup(self.codomain, [self(x) for x in self.domain.elements()])

    def kernel(self) -> "Subgroup":
        one = self.codomain.identity
        return Subgroup(self.domain, [x for x in self.domain.elements() if self(x) == one])

    def __repr__(self) -> str:
        return f"<Homomorphism {self.name}: {self.domain.name} -> {self.codomain.name}>"


def identity_hom(group: Group) -> Homomorphism:
    return Homomorphism(group, group, lambda x: x, f"id_{group.name}")


def trivial_hom(domain: Group, codomain: Group) -> Homomorphism:
    one = codomain.identity
    return Homomorphism(domain, codomain, lambda x: one, "1")


def hom_extend_free(free: FreeGroup, codomain: Group, basis_images: Sequence[Element],
                    name: str = "f") -> Homomorphism:
    """The unique homomorphism out of a free group with given basis images."""
    images = list(basis_images)
    if len(images) != free.rank:
        raise GroupError(f"need {free.rank} basis images, got {len(images)}")
    inverses = [codomain.inv(x) for x in images]
    cache: dict[Word, Element] = {(): codomain.identity}

    def rule(word: Word) -> Element:
        hit = cache.get(word)
        if hit is not None:
            return hit
        out = rule(word[:-1])
        x = word[-1]
        out = codomain.mul(out, images[x - 1] if x > 0 else inverses[-x - 1])
        if len(cache) < 200000:
            cache[word] = out
        return out

    hom = Homomorphism(free, codomain, rule, name)
    hom.basis_images = images
    return hom


class PullbackGroup(Group):
    """``{(g, m) : left(g) = right(m)}`` inside ``G x M``."""

    def __init__(self, left: Homomorphism, right: Homomorphism, name: str | None = None):
        if left.codomain is not right.codomain:
            raise GroupError("pullback legs must share a codomain")
        self.left = left
        self.right = right
        self.G = left.domain
        self.M = right.domain
        self.name = name or f"({self.G.name} x_{left.codomain.name} {self.M.name})"
        self._identity = (self.G.identity, self.M.identity)
        self._fibers: dict | None = None

    @property
    def identity(self) -> tuple:
        return self._identity

    def mul(self, a: tuple, b: tuple) -> tuple:
        return (self.G.mul(a[0], b[0]), self.M.mul(a[1], b[1]))

    def inv(self, a: tuple) -> tuple:
        return (self.G.inv(a[0]), self.M.inv(a[1]))

    def contains(self, a: Any) -> bool:
        return (
            isinstance(a, tuple)
            and len(a) == 2
            and self.G.contains(a[0])
            and self.M.contains(a[1])
            and self.left(a[0]) == self.right(a[1])
        )

    @property
    def is_finite(self) -> bool:
        return self.G.is_finite and self.M.is_finite

    def elements(self) -> list:
        return [(g, m) for g in self.G.elements() for m in self.M.elements()
                if self.left(g) == self.right(m)]

    def _fiber(self, p: Element) -> list:
        if self._fibers is None:
            self._fibers = {}
            for m in self.M.elements():
                self._fibers.setdefault(self.right(m), []).append(m)
        return self._fibers.get(p, [])

    def probe(self) -> list:
        if self.M.is_finite:
            return [(g, m) for g in self.G.probe() for m in self._fiber(self.left(g))]
        return [(g, m) for g in self.G.probe() for m in self.M.probe()
                if self.left(g) == self.right(m)]

    def random_element(self, rng: random.Random) -> tuple:
        if self.M.is_finite:
            for _ in range(1000):
                g = self.G.random_element(rng)
                fiber = self._fiber(self.left(g))
                if fiber:
                    return (g, rng.choice(fiber))
        for _ in range(1000):
            g, m = self.G.random_element(rng), self.M.random_element(rng)
            if self.left(g) == self.right(m):
                return (g, m)
        return self._identity

    def label(self, a: tuple) -> str:
        return f"({self.G.label(a[0])}, {self.M.label(a[1])})"


def pullback(left: Homomorphism, right: Homomorphism, name: str | None = None) -> PullbackGroup:
    return PullbackGroup(left, right, name)


class Subgroup(Group):
    """Subgroup of a finite group generated by a set of elements."""

    def __init__(self, parent: Group, generators: Iterable[Element], name: str | None = None):
        self.parent = parent
        self.generators = list(dict.fromkeys(generators))
        self.name = name or f"<{parent.name}>"
        one = parent.identity
        seen = {one}
        order = [one]
        queue = deque([one])
        while queue:
            x = queue.popleft()
            for g in self.generators:
                y = parent.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    queue.append(y)
        self._members = seen
        self._order = order

    @property
    def identity(self) -> Element:
        return self.parent.identity

    def mul(self, a, b):
        return self.parent.mul(a, b)

    def inv(self, a):
        return self.parent.inv(a)

    def contains(self, a: Any) -> bool:
        try:
            return a in self._members
        except TypeError:
            return False

    @property
    def is_finite(self) -> bool:
        return True

    def elements(self) -> list:
        return list(self._order)

    def random_element(self, rng: random.Random):
        return rng.choice(self._order)

    def label(self, a) -> str:
        return self.parent.label(a)

    def order(self) -> int:
        return len(self._order)

    def is_normal(self) -> bool:
        return self.normality_witness() is None

    def normality_witness(self) -> tuple | None:
        P = self.parent
        for g in P.elements():
            for h in self.generators:
                if P.conj(g, h) not in self._members:
                    return (g, h)
        return None


def subgroup_closure(parent: Group, generators: Iterable[Element], name: str | None = None) -> Subgroup:
    if not parent.is_finite:
        raise NotEnumerable(f"subgroup closure needs a finite parent, {parent.name} is infinite")
    return Subgroup(parent, generators, name)


class QuotientGroup(Group):
    """``parent / normal`` with canonical coset representatives."""

    def __init__(self, parent: Group, normal: Subgroup, name: str | None = None):
        if not parent.is_finite:
            raise NotEnumerable("quotients are only formed for finite parents")
        witness = normal.normality_witness()
        if witness is not None:
            raise NotNormal(witness)
        self.parent = parent
        self.normal = normal
        self.name = name or f"{parent.name}/{normal.name}"
        position = {x: i for i, x in enumerate(parent.elements())}
        self._rep: dict = {}
        self._reps: list = []
        for x in parent.elements():
            if x in self._rep:
                continue
            coset = [parent.mul(x, n) for n in normal.elements()]
            rep = min(coset, key=position.__getitem__)
            for y in coset:
                self._rep[y] = rep
            self._reps.append(rep)

    def project(self, x) -> Element:
        return self._rep[x]

    @property
    def identity(self):
        return self._rep[self.parent.identity]

    def mul(self, a, b):
        return self._rep[self.parent.mul(a, b)]

    def inv(self, a):
        return self._rep[self.parent.inv(a)]

    def contains(self, a: Any) -> bool:
        try:
            return self._rep.get(a) == a
        except TypeError:
            return False

    @property
    def is_finite(self) -> bool:
        return True

    def elements(self) -> list:
        return list(self._reps)

    def random_element(self, rng: random.Random):
        return rng.choice(self._reps)

    def label(self, a) -> str:
        return "[" + self.parent.label(a) + "]"

    def order(self) -> int:
        return len(self._reps)


def quotient(parent: Group, normal: Subgroup, name: str | None = None) -> QuotientGroup:
    return QuotientGroup(parent, normal, name)


def bounded_product(domains: Sequence[Sequence], max_tuples: int,
                    rng: random.Random | None = None) -> Iterator[tuple]:
    """Exhaustive product when small enough, otherwise a seeded sample of tuples."""
    total = math.prod(len(d) for d in domains)
    if total <= max_tuples:
        yield from itertools.product(*domains)
        return
    rng = rng or random.Random(0)
    for _ in range(max_tuples):
        yield tuple(rng.choice(d) for d in domains)


def group_axiom_failures(group: Group, max_tuples: int = 50000,
                         rng: random.Random | None = None) -> list[tuple[str, tuple]]:
    """Associativity, unit and inverse laws on probe elements."""
    xs = group.probe()
    one = group.identity
    out: list[tuple[str, tuple]] = []
    for x in xs:
        if group.mul(one, x) != x or group.mul(x, one) != x:
            out.append(("unit", (x,)))
        if group.mul(x, group.inv(x)) != one or group.mul(group.inv(x), x) != one:
            out.append(("inverse", (x,)))
    for a, b, c in bounded_product([xs, xs, xs], max_tuples, rng):
        if group.mul(group.mul(a, b), c) != group.mul(a, group.mul(b, c)):
            out.append(("associativity", (a, b, c)))
    return out


class TabulatedGroup(TableGroup):
    """A finite group re-indexed as a Cayley table, remembering the original payloads."""

    def __init__(self, source: Group, name: str | None = None):
        elems = source.elements()
        index = {x: i for i, x in enumerate(elems)}
        table = [[index[source.mul(a, b)] for b in elems] for a in elems]
        super().__init__([source.label(x) for x in elems], table, name or source.name)
        self.source = source
        self.decode = elems
        self.encode = index


def symmetric_group(n: int, name: str | None = None) -> TableGroup:
    """Symmetric group on ``n`` points; identity first, then lexicographic order."""
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    names = ["".join(str(i + 1) for i in p) for p in perms]
    return TableGroup(names, table, name or f"S{n}")


def flat_arity(group: Group) -> int:
    """Number of flat coordinates an element of ``group`` occupies."""
    return getattr(group, "flat_arity", 1)


class FlatSemidirectProduct(SemidirectProduct):
    """Semidirect product whose elements are flat coordinate tuples.

    If the actor has arity ``m`` and the target arity ``n``, an element is the
    concatenation of the actor's and the target's coordinates.  The action
    receives the actor payload and the target payload in their own shapes.
    """

    def __init__(self, actor: Group, target: Group, action: Action, name: str | None = None):
        super().__init__(actor, target, action, name)
        self.actor_arity = flat_arity(actor)
        self.target_arity = flat_arity(target)
        self.flat_arity = self.actor_arity + self.target_arity
        self._identity = self.join(actor.identity, target.identity)

    def split(self, x: tuple) -> tuple[Element, Element]:
        m, n = self.actor_arity, self.target_arity
        return (x[0] if m == 1 else x[:m]), (x[m] if n == 1 else x[m:])

    def join(self, h: Element, n: Element) -> tuple:
        return ((h,) if self.actor_arity == 1 else h) + ((n,) if self.target_arity == 1 else n)

    def mul(self, a: tuple, b: tuple) -> tuple:
        h, n = self.split(a)
        h2, n2 = self.split(b)
        H, N = self.actor, self.target
        return self.join(H.mul(h, h2), N.mul(self.action(H.inv(h2), n), n2))

    def inv(self, a: tuple) -> tuple:
        h, n = self.split(a)
        return self.join(self.actor.inv(h), self.action(h, self.target.inv(n)))

    def contains(self, a: Any) -> bool:
        if not isinstance(a, tuple) or len(a) != self.flat_arity:
            return False
        h, n = self.split(a)
        return self.actor.contains(h) and self.target.contains(n)

    def elements(self) -> list:
        return [self.join(h, n) for h in self.actor.elements() for n in self.target.elements()]

    def probe(self) -> list:
        return [self.join(h, n) for h in self.actor.probe() for n in self.target.probe()]

    def random_element(self, rng: random.Random) -> tuple:
        return self.join(self.actor.random_element(rng), self.target.random_element(rng))

    def label(self, a: tuple) -> str:
        h, n = self.split(a)
        hl = self.actor.label(h)
        nl = self.target.label(n)
        strip = lambda s, k: s[1:-1] if k > 1 and s.startswith("(") else s  # noqa: E731
        return f"({strip(hl, self.actor_arity)}, {strip(nl, self.target_arity)})"

    def embed_actor(self, h: Element) -> tuple:
        return self.join(h, self.target.identity)

    def embed_target(self, n: Element) -> tuple:
        return self.join(self.actor.identity, n)


class EmbeddedGroup(Group):
    """A group carried by a subgroup of ``ambient`` through an explicit coordinate chart.

    ``embed`` maps chart coordinates into the ambient group and ``project``
    maps back, raising ``GroupError`` when an ambient element leaves the image.
    Operations are inherited from the ambient group.
    """

    def __init__(self, ambient: Group, embed: Callable[[Element], Element],
                 project: Callable[[Element], Element], chart: Group, name: str | None = None):
        self.ambient = ambient
        self.embed = embed
        self.project = project
        self.chart = chart
        self.name = name or f"sub({ambient.name})"
        self.flat_arity = flat_arity(chart)

    @property
    def identity(self):
        return self.chart.identity

    def mul(self, a, b):
        return self.project(self.ambient.mul(self.embed(a), self.embed(b)))

    def inv(self, a):
        return self.project(self.ambient.inv(self.embed(a)))

    def contains(self, a: Any) -> bool:
        return self.chart.contains(a)

    @property
    def is_finite(self) -> bool:
        return self.chart.is_finite

    def elements(self) -> list:
        return self.chart.elements()

    def probe(self) -> list:
        return self.chart.probe()

    def random_element(self, rng: random.Random):
        return self.chart.random_element(rng)

    def label(self, a) -> str:
        return self.chart.label(a)
