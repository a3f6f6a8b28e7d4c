"""Finite permutation groups at desk scale.

Points are numbered 1..degree in every public API.  Multiplication is
functional composition: ``(g * h)(x) == g(h(x))``, so ``h`` acts first.
Cycle strings follow the same rule, ``"(1,2)(1,3)"`` means ``(1,2)`` after
``(1,3)``.  Internally images are stored 0-based.

Order and membership of a :class:`PermGroup` come from a deterministic
Schreier-Sims stabilizer chain.  Everything else (centralizers, subgroup
lattices, automorphisms) is done by element scans, which is fine for the
groups of order at most a few thousand this package targets.
"""

from __future__ import annotations

import contextlib
import math
import re
from collections import Counter
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence


class CapExceededError(RuntimeError):
    """A brute-force scan would exceed one of the configured size caps."""

    def __init__(self, cap: str, limit: int, needed: int):
        super().__init__(f"{cap} cap exceeded: need {needed}, limit {limit}")
        self.cap = cap
        self.limit = limit
        self.needed = needed


class ContradictionError(RuntimeError):
    """Raised when two independent computations disagree (an implementation bug)."""


@dataclass(frozen=True)
class Caps:
    elements: int = 10_000
    subgroups: int = 256
    automorphisms: int = 256
    morphisms: int = 100_000
    aut_subgroups: int = 2000
    out_order: int = 5000
    alperin_depth: int = 8


CAPS = Caps()


def get_caps() -> Caps:
    return CAPS


@contextlib.contextmanager
def caps(**overrides):
    """Temporarily override size caps, e.g. ``with caps(subgroups=2000): ...``."""
    global CAPS
    old = CAPS
    CAPS = replace(old, **overrides)
    try:
        yield CAPS
    finally:
        CAPS = old


def set_caps(**overrides) -> None:
    global CAPS
    CAPS = replace(CAPS, **overrides)


def _check_cap(name: str, needed: int) -> None:
    limit = getattr(CAPS, name)
    if needed > limit:
        raise CapExceededError(name, limit, needed)


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def is_prime_power(n: int, p: int) -> bool:
    return n >= 1 and p_part(n, p) == n


def prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_divisors(n) == [n]


# ---------------------------------------------------------------------------
# Permutations


class Permutation:
    """A bijection of {1..degree}.

    ``Permutation([2, 3, 1, 4])`` maps 1->2, 2->3, 3->1, 4->4.
    """

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Sequence[int]):
        img = tuple(int(i) - 1 for i in images)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a permutation of 1..{len(img)}: {list(images)}")
        self._img = img
        self._hash = hash(img)

    @classmethod
    def _raw(cls, img: tuple) -> "Permutation":
        obj = object.__new__(cls)
        obj._img = img
        obj._hash = hash(img)
        return obj

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Product of cycles, rightmost applied first."""
        result = cls.identity(degree)
        for cyc in cycles:
            result = result * _cycle_perm(cyc, degree)
        return result

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        """Images of 1..degree, 1-based."""
        return tuple(i + 1 for i in self._img)

    def __call__(self, point: int) -> int:
        return self._img[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation._raw(tuple(map(self._img.__getitem__, other._img)))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._img)
        for i, j in enumerate(self._img):
            inv[j] = i
        return Permutation._raw(tuple(inv))

    def conj(self, x: "Permutation") -> "Permutation":
        """``self * x * self^-1``."""
        g = self._img
        res = [0] * len(g)
        xi = x._img
        for i in range(len(g)):
            res[g[i]] = g[xi[i]]
        return Permutation._raw(tuple(res))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._img))

    def order(self) -> int:
        o = 1
        for c in self.cycles():
            o = o * len(c) // math.gcd(o, len(c))
        return o

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its smallest point."""
        seen = set()
        out = []
        for i in range(len(self._img)):
            if i in seen or self._img[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self._img[i]
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self._img[j]
            out.append(tuple(k + 1 for k in cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return self._img < other._img

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({str(self)!r}, degree={self.degree})"


def _cycle_perm(cycle: Sequence[int], degree: int) -> Permutation:
    img = list(range(degree))
    for a in cycle:
        if not 1 <= a <= degree:
            raise ValueError(f"point {a} out of range 1..{degree}")
    if len(set(cycle)) != len(cycle):
        raise ValueError(f"repeated point in cycle {tuple(cycle)}")
    for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
        img[a - 1] = b - 1
    return Permutation._raw(tuple(img))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation such as ``"(1,2,3)(4,5)"``.

    Cycles are composed as functions, so the rightmost cycle acts first.
    Commas or whitespace separate points; ``"()"`` is the identity.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty permutation text")
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(s):
        if s[pos:m.start()].strip():
            raise ValueError(f"malformed cycle notation: {text!r}")
        pos = m.end()
        body = m.group(1).strip()
        if not body:
            continue
        parts = [t for t in re.split(r"[,\s]+", body) if t]
        try:
            cycles.append([int(t) for t in parts])
        except ValueError:
            raise ValueError(f"malformed cycle notation: {text!r}") from None
    if s[pos:].strip() or pos == 0:
        raise ValueError(f"malformed cycle notation: {text!r}")
    return Permutation.from_cycles(cycles, degree)


# ---------------------------------------------------------------------------
# Stabilizer chain


class _Level:
    __slots__ = ("base", "gens", "trans")

    def __init__(self, base: int, ident: Permutation):
        self.base = base
        self.gens: list[Permutation] = []
        self.trans: dict[int, Permutation] = {base: ident}

    def rebuild_orbit(self, ident: Permutation) -> None:
        trans = {self.base: ident}
        queue = [self.base]
        for b in queue:
            u = trans[b]
            for s in self.gens:
                c = s._img[b]
                if c not in trans:
                    trans[c] = s * u
                    queue.append(c)
        self.trans = trans


def _sift(levels: list[_Level], g: Permutation, start: int = 0):
    for i in range(start, len(levels)):
        lvl = levels[i]
        b = g._img[lvl.base]
        u = lvl.trans.get(b)
        if u is None:
            return g, i
        g = u.inverse() * g
    return g, len(levels)


def _schreier_sims(gens: Sequence[Permutation], degree: int) -> list[_Level]:
    ident = Permutation.identity(degree)
    levels: list[_Level] = []

    def insert(h: Permutation) -> None:
        k = 0
        while k < len(levels) and h._img[levels[k].base] == levels[k].base:
            k += 1
        if k == len(levels):
            moved = next(i for i, j in enumerate(h._img) if i != j)
            levels.append(_Level(moved, ident))
        for m in range(k + 1):
            levels[m].gens.append(h)
            levels[m].rebuild_orbit(ident)

    for g in gens:
        h, _ = _sift(levels, g)
        if not h.is_identity():
            insert(h)

    changed = True
    while changed:
        changed = False
        for i in reversed(range(len(levels))):
            lvl = levels[i]
            for b, u in list(lvl.trans.items()):
                for s in lvl.gens:
                    sg = lvl.trans[s._img[b]].inverse() * s * u
                    h, _ = _sift(levels, sg, i + 1)
                    if not h.is_identity():
                        insert(h)
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
    return levels


# ---------------------------------------------------------------------------
# Groups


def _closure(gens: Sequence[Permutation], degree: int, start: Iterable[Permutation] = ()) -> set:
    """Element set of the group generated by ``gens`` (and ``start``)."""
    ident = Permutation.identity(degree)
    elems = {ident}
    queue = [ident]
    for x in start:
        if x not in elems:
            elems.add(x)
            queue.append(x)
    limit = CAPS.elements
    for x in queue:
        for s in gens:
            y = s * x
            if y not in elems:
                elems.add(y)
                queue.append(y)
                if len(elems) > limit:
                    raise CapExceededError("elements", limit, len(elems))
    return elems


class PermGroup:
    """A permutation group given by generators.

    The stabilizer chain is built lazily on the first call to :meth:`order`
    or :meth:`contains`.
    """

    def __init__(self, gens: Iterable[Permutation] = (), degree: int | None = None, name: str | None = None):
        gens = list(gens)
        if degree is None:
            if not gens:
                raise ValueError("degree is required for a group without generators")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"degree mismatch: generator of degree {g.degree} in degree {degree}")
        self.degree = degree
        self.gens = tuple(g for g in gens if not g.is_identity())
        self.name = name

    # -- chain based ------------------------------------------------------

    @cached_property
    def _chain(self) -> list[_Level]:
        return _schreier_sims(self.gens, self.degree)

    def base(self) -> list[int]:
        return [lvl.base + 1 for lvl in self._chain]

    def order(self) -> int:
        return math.prod(len(lvl.trans) for lvl in self._chain)

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        h, depth = _sift(self._chain, g)
        return depth == len(self._chain) and h.is_identity()

    def __contains__(self, g) -> bool:
        return self.contains(g)

    def __len__(self) -> int:
        return self.order()

    @cached_property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    @cached_property
    def elements(self) -> frozenset:
        """All elements, materialized (subject to the ``elements`` cap)."""
        _check_cap("elements", self.order())
        elems = [self.identity]
        for lvl in reversed(self._chain):
            elems = [u * e for u in lvl.trans.values() for e in elems]
        return frozenset(elems)

    @cached_property
    def sorted_elements(self) -> tuple:
        return tuple(sorted(self.elements))

    # -- element-set identity ---------------------------------------------

    @cached_property
    def key(self) -> tuple:
        """Canonical key: order, then sorted images of all elements."""
        return (len(self.elements), tuple(e._img for e in self.sorted_elements))

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.degree == other.degree and self.order() == other.order() and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __le__(self, other: "PermGroup") -> bool:
        return all(other.contains(g) for g in self.gens)

    # -- simple queries ---------------------------------------------------

    def is_trivial(self) -> bool:
        return not self.gens

    def is_abelian(self) -> bool:
        return all(a * b == b * a for i, a in enumerate(self.gens) for b in self.gens[i + 1:])

    def is_p_group(self, p: int) -> bool:
        return is_prime_power(self.order(), p)

    def order_histogram(self) -> Counter:
        return Counter(g.order() for g in self.elements)

    def exponent(self) -> int:
        e = 1
        for g in self.elements:
            e = e * g.order() // math.gcd(e, g.order())
        return e

    def subgroup(self, gens: Iterable[Permutation]) -> "Subgroup":
        return Subgroup(self, gens)

    def as_subgroup(self) -> "Subgroup":
        if isinstance(self, Subgroup):
            return self
        return Subgroup(self, self.gens, elements=self.elements)

    def is_normal_subgroup(self, N: "PermGroup") -> bool:
        """Is ``N`` a normal subgroup of this group?"""
        if not N <= self:
            return False
        Ne = N.elements
        return all(g.conj(x) in Ne for g in self.gens for x in N.gens)

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<PermGroup{label} degree={self.degree} order={self.order()}>"


class Subgroup(PermGroup):
    """A subgroup of ``ambient`` with an explicit element set.

    Two subgroups are equal when their element sets are equal; generators
    are only a convenience.
    """

    def __init__(self, ambient: PermGroup, gens: Iterable[Permutation] = (), elements: Iterable[Permutation] | None = None,
                 name: str | None = None):
        gens = list(gens)
        super().__init__(gens, degree=ambient.degree, name=name)
        self.ambient = ambient
        if elements is None:
            elems = frozenset(_closure(self.gens, self.degree))
        else:
            elems = frozenset(elements)
            _check_cap("elements", len(elems))
        self.__dict__["elements"] = elems

    @classmethod
    def from_elements(cls, ambient: PermGroup, elements: Iterable[Permutation], name: str | None = None) -> "Subgroup":
        elems = frozenset(elements)
        if not elems:
            elems = frozenset([ambient.identity])
        return cls(ambient, small_generating_set(elems, ambient.degree), elements=elems, name=name)

    def order(self) -> int:
        return len(self.elements)

    def contains(self, g: Permutation) -> bool:
        return g in self.elements

    def __le__(self, other: PermGroup) -> bool:
        if isinstance(other, Subgroup):
            return self.elements <= other.elements
        return super().__le__(other)

    def __repr__(self):
        gens = ", ".join(map(str, self.gens)) or "()"
        return f"<Subgroup order={self.order()} gens=[{gens}]>"


def small_generating_set(elements: Iterable[Permutation], degree: int) -> list[Permutation]:
    """Greedy generating set: take elements of largest order first."""
    pool = sorted(elements, key=lambda g: (-g.order(), g._img))
    target = len(pool)
    gens: list[Permutation] = []
    current = {Permutation.identity(degree)}
    for g in pool:
        if len(current) == target:
            break
        if g in current:
            continue
        gens.append(g)
        current = _closure(gens, degree, current)
    return gens


def _elements(G: PermGroup) -> frozenset:
    return G.elements


def group_from_generators(gens: Sequence[Permutation], degree: int | None = None, name: str | None = None) -> PermGroup:
    return PermGroup(gens, degree=degree, name=name)


def join(G: PermGroup, *subgroups: PermGroup) -> Subgroup:
    gens = [g for H in subgroups for g in H.gens]
    start = set()
    for H in subgroups:
        if isinstance(H, Subgroup):
            start |= H.elements
    return Subgroup(G, gens, elements=_closure(gens, G.degree, start))


def trivial_subgroup(G: PermGroup) -> Subgroup:
    return Subgroup(G, (), elements=[G.identity])


def cyclic_subgroup(G: PermGroup, g: Permutation) -> Subgroup:
    elems = []
    x = g
    while not x.is_identity():
        elems.append(x)
        x = x * g
    elems.append(x)
    return Subgroup(G, [g], elements=elems)


# ---------------------------------------------------------------------------
# Group specification text


def parse_group_text(text: str) -> PermGroup:
    """Parse the ``degree: / gens: / name:`` group file format."""
    fields: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ValueError(f"malformed group spec line: {raw!r}")
        k, v = line.split(":", 1)
        k = k.strip().lower()
        if k not in ("degree", "gens", "name"):
            raise ValueError(f"unknown group spec field: {k!r}")
        if k in fields:
            raise ValueError(f"duplicate group spec field: {k!r}")
        fields[k] = v.strip()
    if "degree" not in fields:
        raise ValueError("group spec needs a 'degree:' line")
    try:
        degree = int(fields["degree"])
    except ValueError:
        raise ValueError(f"bad degree: {fields['degree']!r}") from None
    if degree < 1:
        raise ValueError("degree must be positive")
    gens = []
    for tok in fields.get("gens", "").split(";"):
        tok = "".join(tok.split())
        if tok:
            gens.append(parse_cycles(tok, degree))
    return PermGroup(gens, degree=degree, name=fields.get("name"))


def load_group(path) -> PermGroup:
    with open(path) as fh:
        return parse_group_text(fh.read())


# ---------------------------------------------------------------------------
# Homomorphisms


def extend_generator_map(gens: Sequence, images: Sequence, mul: Callable, identity, image_identity) -> dict | None:
    """Extend ``gens[i] -> images[i]`` along the Cayley graph of ``<gens>``.

    Returns the full element table, or None when the assignment does not
    define a homomorphism.  ``mul`` multiplies in both groups.
    """
    table = {identity: image_identity}
    queue = [identity]
    for x in queue:
        fx = table[x]
        for g, y in zip(gens, images):
            z = mul(g, x)
            fz = mul(y, fx)
            prev = table.get(z)
            if prev is None:
                table[z] = fz
                queue.append(z)
            elif prev != fz:
                return None
    return table


def _perm_mul(a, b):
    return a * b


class GroupHom:
    """A homomorphism between permutation groups, stored as a full element table.

    Composition follows the functional convention: ``f.compose(g)`` is
    ``f`` after ``g``.  Equality is extensional on the element table.
    """

    __slots__ = ("domain", "codomain", "table", "_items")

    def __init__(self, domain: PermGroup, codomain: PermGroup, table: Mapping[Permutation, Permutation]):
        self.domain = domain
        self.codomain = codomain
        self.table = dict(table)
        self._items = None

    @classmethod
    def from_images(cls, domain: PermGroup, codomain: PermGroup, gens: Sequence[Permutation],
                    images: Sequence[Permutation], injective: bool = True) -> "GroupHom":
        if len(gens) != len(images):
            raise ValueError("generator and image lists differ in length")
        for y in images:
            if not codomain.contains(y):
                raise ValueError(f"image {y} is not in the codomain")
        table = extend_generator_map(gens, images, _perm_mul, domain.identity, codomain.identity)
        if table is None:
            raise ValueError("generator images do not define a homomorphism")
        if len(table) != domain.order():
            raise ValueError("listed generators do not generate the domain")
        if injective and len(set(table.values())) != len(table):
            raise ValueError("homomorphism is not injective")
        return cls(domain, codomain, table)

    @classmethod
    def identity_map(cls, P: PermGroup) -> "GroupHom":
        return cls(P, P, {x: x for x in P.elements})

    @classmethod
    def conjugation(cls, g: Permutation, P: PermGroup, codomain: PermGroup | None = None) -> "GroupHom":
        table = {x: g.conj(x) for x in P.elements}
        return cls(P, codomain if codomain is not None else P, table)

    def __call__(self, x: Permutation) -> Permutation:
        return self.table[x]

    def image_elements(self) -> frozenset:
        return frozenset(self.table.values())

    def image(self) -> Subgroup:
        amb = self.codomain.ambient if isinstance(self.codomain, Subgroup) else self.codomain
        return Subgroup.from_elements(amb, self.table.values())

    def restrict(self, P: PermGroup, codomain: PermGroup | None = None) -> "GroupHom":
        return GroupHom(P, codomain if codomain is not None else self.codomain, {x: self.table[x] for x in P.elements})

    def with_codomain(self, Q: PermGroup) -> "GroupHom":
        return GroupHom(self.domain, Q, self.table)

    def compose(self, other: "GroupHom") -> "GroupHom":
        """``self`` after ``other``."""
        t = self.table
        return GroupHom(other.domain, self.codomain, {x: t[y] for x, y in other.table.items()})

    def inverse(self, codomain: PermGroup | None = None) -> "GroupHom":
        """Inverse of an injective map, defined on its image."""
        inv = {y: x for x, y in self.table.items()}
        if len(inv) != len(self.table):
            raise ValueError("not injective")
        dom = self.codomain if len(self.codomain.elements) == len(inv) else self.image()
        return GroupHom(dom, codomain if codomain is not None else self.domain, inv)

    def is_identity(self) -> bool:
        return all(x == y for x, y in self.table.items())

    def is_injective(self) -> bool:
        return len(set(self.table.values())) == len(self.table)

    def fixed_points(self) -> list[Permutation]:
        return sorted(x for x, y in self.table.items() if x == y)

    def order(self) -> int:
        """Order as a permutation of the domain (for automorphisms)."""
        o = 1
        seen = set()
        for x in self.table:
            if x in seen:
                continue
            n = 0
            y = x
            while True:
                seen.add(y)
                y = self.table[y]
                n += 1
                if y == x:
                    break
            o = o * n // math.gcd(o, n)
        return o

    def generator_images(self) -> list[tuple[Permutation, Permutation]]:
        return [(g, self.table[g]) for g in self.domain.gens]

    @property
    def items(self) -> frozenset:
        if self._items is None:
            self._items = frozenset(self.table.items())
        return self._items

    def sort_key(self) -> tuple:
        return tuple(self.table[x]._img for x in sorted(self.table))

    def __eq__(self, other):
        return isinstance(other, GroupHom) and self.items == other.items

    def __hash__(self):
        return hash(self.items)

    def __repr__(self):
        pairs = "; ".join(f"{g}->{h}" for g, h in self.generator_images()) or "trivial"
        return f"<GroupHom {pairs}>"


# ---------------------------------------------------------------------------
# Subgroup computations by element scan


def centralizer(G: PermGroup, P: PermGroup) -> Subgroup:
    gens = P.gens
    return Subgroup.from_elements(G, [g for g in G.elements if all(g * x == x * g for x in gens)])


def normalizer(G: PermGroup, P: PermGroup) -> Subgroup:
    Pe = P.elements
    gens = P.gens
    return Subgroup.from_elements(G, [g for g in G.elements if all(g.conj(x) in Pe for x in gens)])


def center(G: PermGroup) -> Subgroup:
    return centralizer(G, G)


def omega(G: PermGroup, p: int) -> Subgroup:
    """Subgroup generated by the elements of order ``p``."""
    gens = sorted(g for g in G.elements if g.order() == p)
    return Subgroup(G, gens)


def conjugate_subgroup(g: Permutation, P: PermGroup, ambient: PermGroup) -> Subgroup:
    return Subgroup(ambient, [g.conj(x) for x in P.gens], elements=[g.conj(x) for x in P.elements])


def sylow_subgroup(G: PermGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown one step at a time through normalizers.

    At each step the p-element of the normalizer with the largest order
    modulo the current subgroup is adjoined (ties go to the smallest
    element), which makes the result deterministic.
    """
    target = p_part(G.order(), p)
    P = trivial_subgroup(G)
    while P.order() < target:
        N = normalizer(G, P)
        Pe = P.elements
        best = None
        best_ord = 1
        for g in N.sorted_elements:
            if g in Pe or not is_prime_power(g.order(), p):
                continue
            k = 1
            x = g
            while x not in Pe:
                x = x ** p
                k *= p
            if k > best_ord:
                best, best_ord = g, k
        if best is None:
            raise ContradictionError("no p-element in the normalizer although the index is divisible by p")
        P = Subgroup(G, list(P.gens) + [best])
    return P


def sylow_subgroups(G: PermGroup, p: int) -> list[Subgroup]:
    """All Sylow p-subgroups, as conjugates of :func:`sylow_subgroup`."""
    S = sylow_subgroup(G, p)
    seen = {}
    for g in G.sorted_elements:
        C = conjugate_subgroup(g, S, G)
        seen.setdefault(C.elements, C)
    return sorted(seen.values(), key=lambda H: H.key)


def cyclic_subgroups(P: PermGroup) -> list[Subgroup]:
    seen: dict[frozenset, Subgroup] = {}
    for g in P.sorted_elements:
        C = cyclic_subgroup(P, g)
        seen.setdefault(C.elements, C)
    return sorted(seen.values(), key=lambda H: H.key)


def enumerate_subgroups(P: PermGroup, cap: int | None = None) -> list[Subgroup]:
    """All subgroups of ``P``, sorted by order then element key.

    Every subgroup is a join of cyclic subgroups, so closing the set of
    cyclic subgroups under joins with a single cyclic subgroup is complete.
    """
    limit = CAPS.subgroups if cap is None else cap
    if P.order() > limit:
        raise CapExceededError("subgroups", limit, P.order())
    cyclics = cyclic_subgroups(P)
    found: dict[frozenset, Subgroup] = {C.elements: C for C in cyclics}
    queue = list(found.values())
    for A in queue:
        for C in cyclics:
            if C.elements <= A.elements:
                continue
            gens = list(A.gens) + list(C.gens)
            elems = frozenset(_closure(gens, P.degree, A.elements | C.elements))
            if elems not in found:
                J = Subgroup(P, gens, elements=elems)
                found[elems] = J
                queue.append(J)
    out = [Subgroup.from_elements(P, H.elements) if len(H.gens) > 2 else H for H in found.values()]
    return sorted(out, key=lambda H: H.key)


def conjugacy_classes(G: PermGroup) -> list[list[Permutation]]:
    remaining = set(G.elements)
    classes = []
    for x in G.sorted_elements:
        if x not in remaining:
            continue
        cls = sorted({g.conj(x) for g in G.elements})
        remaining.difference_update(cls)
        classes.append(cls)
    return classes


def normal_closure(G: PermGroup, gens: Iterable[Permutation]) -> Subgroup:
    gens = list(gens)
    elems = _closure(gens, G.degree)
    queue = list(gens)
    for h in queue:
        for g in G.gens:
            c = g.conj(h)
            if c not in elems:
                gens.append(c)
                queue.append(c)
                elems = _closure(gens, G.degree, elems)
    return Subgroup(G, gens, elements=elems)


def normal_subgroups(G: PermGroup) -> list[Subgroup]:
    """All normal subgroups, as joins of normal closures of conjugacy classes."""
    _check_cap("elements", G.order())
    seen: dict[frozenset, Subgroup] = {}
    for cls in conjugacy_classes(G):
        N = Subgroup(G, cls)
        seen.setdefault(N.elements, N)
    minimal = list(seen.values())
    queue = list(minimal)
    for A in queue:
        for B in minimal:
            if B.elements <= A.elements:
                continue
            gens = list(A.gens) + list(B.gens)
            elems = frozenset(_closure(gens, G.degree, A.elements | B.elements))
            if elems not in seen:
                J = Subgroup(G, gens, elements=elems)
                seen[elems] = J
                queue.append(J)
    out = [Subgroup.from_elements(G, H.elements) for H in seen.values()]
    return sorted(out, key=lambda H: H.key)


def o_p_prime(G: PermGroup, p: int) -> Subgroup:
    """Largest normal subgroup of order prime to ``p``."""
    best = trivial_subgroup(G)
    for N in normal_subgroups(G):
        if N.order() % p and N.order() > best.order():
            best = N
    return best


def o_p(G: PermGroup, p: int) -> Subgroup:
    """Largest normal p-subgroup."""
    best = trivial_subgroup(G)
    for N in normal_subgroups(G):
        if is_prime_power(N.order(), p) and N.order() > best.order():
            best = N
    return best


class QuotientGroup(PermGroup):
    """``G/N`` realized by the action of ``G`` on the left cosets of ``N``."""

    def __init__(self, G: PermGroup, N: PermGroup):
        if not G.is_normal_subgroup(N):
            raise ValueError("N is not a normal subgroup of G")
        Ne = N.elements
        index: dict[Permutation, int] = {}
        reps: list[Permutation] = []
        for g in G.sorted_elements:
            if g in index:
                continue
            i = len(reps)
            reps.append(g)
            for n in Ne:
                index[g * n] = i
        self.source = G
        self.kernel = N
        self._coset_index = index
        self.coset_reps = tuple(reps)
        self._proj: dict[Permutation, Permutation] = {}
        super().__init__([self.project(g) for g in G.gens], degree=len(reps))

    def project(self, g: Permutation) -> Permutation:
        img = self._proj.get(g)
        if img is None:
            idx = self._coset_index
            img = Permutation._raw(tuple(idx[g * r] for r in self.coset_reps))
            self._proj[g] = img
        return img

    def coset(self, g: Permutation) -> int:
        return self._coset_index[g]

    def lift(self, h: Permutation) -> Permutation:
        """A preimage of ``h``: the coset representative hit from the identity coset."""
        return self.coset_reps[h._img[0]]

    def projection(self) -> GroupHom:
        return GroupHom(self.source, self, {g: self.project(g) for g in self.source.elements})


def quotient_group(G: PermGroup, N: PermGroup) -> QuotientGroup:
    return QuotientGroup(G, N)


# ---------------------------------------------------------------------------
# Automorphisms and isomorphisms


def _backtrack_maps(A: PermGroup, B: PermGroup, bijective: bool, first_only: bool) -> list[dict]:
    gens = small_generating_set(A.elements, A.degree)
    by_order: dict[int, list[Permutation]] = {}
    for y in B.sorted_elements:
        by_order.setdefault(y.order(), []).append(y)
    results: list[dict] = []

    def rec(i: int, imgs: list[Permutation]) -> bool:
        if i == len(gens):
            table = extend_generator_map(gens, imgs, _perm_mul, A.identity, B.identity)
            if bijective and len(set(table.values())) != len(table):
                return False
            results.append(table)
            return first_only
        for y in by_order.get(gens[i].order(), ()):
            cand = imgs + [y]
            table = extend_generator_map(gens[: i + 1], cand, _perm_mul, A.identity, B.identity)
            if table is None or len(set(table.values())) != len(table):
                continue
            if rec(i + 1, cand):
                return True
        return False

    rec(0, [])
    return results


def automorphism_group(P: PermGroup) -> list[GroupHom]:
    """All automorphisms of ``P`` by backtracking over generator images."""
    _check_cap("automorphisms", P.order())
    maps = _backtrack_maps(P, P, bijective=True, first_only=False)
    homs = [GroupHom(P, P, t) for t in maps]
    return sorted(homs, key=GroupHom.sort_key)


def isomorphism(A: PermGroup, B: PermGroup) -> GroupHom | None:
    """An isomorphism ``A -> B`` or None."""
    if A.order() != B.order():
        return None
    _check_cap("automorphisms", A.order())
    if A.is_abelian() != B.is_abelian():
        return None
    if A.order_histogram() != B.order_histogram():
        return None
    maps = _backtrack_maps(A, B, bijective=True, first_only=True)
    return GroupHom(A, B, maps[0]) if maps else None


def isomorphic_to(A: PermGroup, B: PermGroup) -> bool:
    return isomorphism(A, B) is not None


# ---------------------------------------------------------------------------
# Semidirect products


@dataclass
class SemidirectProduct:
    group: PermGroup
    embed_V: GroupHom
    embed_H: GroupHom

    @property
    def V(self) -> Subgroup:
        return self.embed_V.image()

    @property
    def H(self) -> Subgroup:
        return self.embed_H.image()


def semidirect_product(V: PermGroup, H: PermGroup, action: Mapping[Permutation, GroupHom]) -> SemidirectProduct:
    """``V ⋊ H`` where ``action`` sends each generator of ``H`` to an automorphism of ``V``.

    The product acts on the elements of ``V`` (``v`` by left multiplication,
    ``h`` through its automorphism) together with a disjoint copy of the
    points of ``H``.  This action is faithful.
    """
    Ve = V.sorted_elements
    vidx = {v: i for i, v in enumerate(Ve)}
    nV = len(Ve)
    deg = nV + H.degree
    hgens = list(H.gens)
    missing = [h for h in hgens if h not in action]
    if missing:
        raise ValueError(f"no action given for generator {missing[0]}")
    for h in hgens:
        a = action[h]
        if a.domain.elements != V.elements or not a.is_injective() or a.image_elements() != V.elements:
            raise ValueError(f"action of {h} is not an automorphism of V")
    # action(h) as a permutation of V's elements
    act_perm = {h: Permutation._raw(tuple(vidx[action[h](v)] for v in Ve)) for h in hgens}
    ident_V = Permutation.identity(nV)
    if extend_generator_map(hgens, [act_perm[h] for h in hgens], _perm_mul, H.identity, ident_V) is None:
        raise ValueError("action is not a homomorphism H -> Aut(V)")

    def embed_v(v: Permutation) -> Permutation:
        img = [vidx[v * w] for w in Ve] + [nV + i for i in range(H.degree)]
        return Permutation._raw(tuple(img))

    def embed_h_gen(h: Permutation) -> Permutation:
        img = list(act_perm[h]._img) + [nV + j for j in h._img]
        return Permutation._raw(tuple(img))

    gens = [embed_v(v) for v in V.gens] + [embed_h_gen(h) for h in hgens]
    G = PermGroup(gens, degree=deg)
    Vemb = GroupHom(V, G, {v: embed_v(v) for v in V.elements})
    hgen_imgs = [embed_h_gen(h) for h in hgens]
    table = extend_generator_map(hgens, hgen_imgs, _perm_mul, H.identity, G.identity)
    Hemb = GroupHom(H, G, table)
    return SemidirectProduct(G, Vemb, Hemb)


# ---------------------------------------------------------------------------
# Nilpotency and characteristic subgroups


def commutator(a: Permutation, b: Permutation) -> Permutation:
    return a.inverse() * b.inverse() * a * b


def commutator_subgroup(G: PermGroup, N: PermGroup) -> Subgroup:
    """``[N, G]`` for ``N`` normal in ``G``."""
    comms = [commutator(x, g) for x in N.gens for g in G.gens]
    comms = [c for c in comms if not c.is_identity()]
    return normal_closure(G, comms)


@dataclass
class NilpotencyData:
    series: list[Subgroup]
    nilpotent: bool


def nilpotency_data(G: PermGroup) -> NilpotencyData:
    """Lower central series of ``G`` and whether it reaches 1.

    The answer is cross-checked against normality of every Sylow subgroup.
    """
    _check_cap("elements", G.order())
    term = G.as_subgroup()
    series = [term]
    while True:
        nxt = commutator_subgroup(G, term)
        if nxt.elements == term.elements:
            break
        series.append(nxt)
        term = nxt
    nilpotent = term.order() == 1
    sylow_normal = all(G.is_normal_subgroup(sylow_subgroup(G, p)) for p in prime_divisors(G.order()))
    if nilpotent != sylow_normal:
        raise ContradictionError(f"lower central series says nilpotent={nilpotent}, Sylow test says {sylow_normal}")
    return NilpotencyData(series, nilpotent)


def is_elementary_abelian(P: PermGroup, p: int) -> bool:
    return P.is_abelian() and all(g.order() in (1, p) for g in P.gens)


@dataclass
class CharacteristicSubgroups:
    center: Subgroup
    omega_center: Subgroup
    thompson: Subgroup
    omega_center_thompson: Subgroup


def characteristic_subgroups(S: PermGroup, p: int | None = None) -> CharacteristicSubgroups:
    """Z(S), Ω(Z(S)), J(S) and Ω(Z(J(S))) for a p-group ``S``.

    J(S) is taken to be the subgroup generated by the elementary abelian
    subgroups of maximal order.
    """
    n = S.order()
    if p is None:
        ps = prime_divisors(n)
        if len(ps) > 1:
            raise ValueError("S is not a p-group")
        p = ps[0] if ps else 2
    if not is_prime_power(n, p):
        raise ValueError("S is not a p-group")
    Z = center(S)
    OZ = omega(Z, p)
    elem = [A for A in enumerate_subgroups(S) if is_elementary_abelian(A, p)]
    top = max(A.order() for A in elem)
    J = join(S, *[A for A in elem if A.order() == top])
    OZJ = omega(center(J), p)
    if not OZ.elements <= OZJ.elements:
        raise ContradictionError("Ω(Z(S)) is not contained in Ω(Z(J(S)))")
    return CharacteristicSubgroups(Z, OZ, J, OZJ)


def describe(G: PermGroup) -> str:
    gens = ", ".join(map(str, G.gens)) or "()"
    return f"<{gens}>"
