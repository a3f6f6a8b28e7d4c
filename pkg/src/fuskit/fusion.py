"""Fusion systems over a finite p-group and the saturation axioms.

A fusion system is stored through its isomorphisms: for each subgroup P of
S, :meth:`FusionSystem.isomorphisms_from` lists every F-isomorphism out of
P (each with codomain its image).  Every morphism factors as an isomorphism
followed by an inclusion, so ``Hom_F(P, Q)`` is recovered by keeping the
isomorphisms whose image lies in Q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .permgroup import (
    get_caps,
    CapExceededError,
    GroupHom,
    PermGroup,
    Permutation,
    Subgroup,
    centralizer,
    enumerate_subgroups,
    is_prime_power,
    normalizer,
    p_part,
    prime_divisors,
    quotient_group,
    sylow_subgroup,
)
from . import permgroup as _pg


class FusionSystem:
    """Base class; subclasses supply :meth:`_compute_isomorphisms`."""

    def __init__(self, p: int, S: Subgroup):
        if not is_prime_power(S.order(), p):
            raise ValueError(f"S has order {S.order()}, not a power of {p}")
        self.p = p
        self.S = S
        self._isos: dict[frozenset, list[GroupHom]] = {}

    # -- subgroups of S -----------------------------------------------------

    @cached_property
    def subgroups(self) -> list[Subgroup]:
        """All subgroups of S, sorted by order then element key."""
        return enumerate_subgroups(self.S)

    @cached_property
    def _by_elements(self) -> dict[frozenset, Subgroup]:
        return {P.elements: P for P in self.subgroups}

    def subgroup(self, P: PermGroup | frozenset) -> Subgroup:
        """The canonical handle of a subgroup of S."""
        key = P if isinstance(P, frozenset) else P.elements
        try:
            return self._by_elements[key]
        except KeyError:
            raise ValueError("subgroup is not contained in S") from None

    def subgroup_from(self, elements) -> Subgroup:
        return self.subgroup(frozenset(elements))

    @cached_property
    def trivial(self) -> Subgroup:
        return self.subgroups[0]

    # -- morphisms ---------------------------------------------------------

    def _compute_isomorphisms(self, P: Subgroup) -> list[GroupHom]:
        raise NotImplementedError

    def isomorphisms_from(self, P: PermGroup) -> list[GroupHom]:
        P = self.subgroup(P)
        isos = self._isos.get(P.elements)
        if isos is None:
            isos = sorted(self._compute_isomorphisms(P), key=GroupHom.sort_key)
            self._isos[P.elements] = isos
        return isos

    def hom_set(self, P: PermGroup, Q: PermGroup) -> list[GroupHom]:
        Q = self.subgroup(Q)
        Qe = Q.elements
        return [phi.with_codomain(Q) for phi in self.isomorphisms_from(P) if phi.image_elements() <= Qe]

    def aut(self, P: PermGroup) -> list[GroupHom]:
        P = self.subgroup(P)
        return [phi for phi in self.isomorphisms_from(P) if phi.codomain.elements == P.elements]

    def conjugates(self, P: PermGroup) -> list[Subgroup]:
        """The F-conjugacy class of P."""
        seen = {phi.codomain.elements: phi.codomain for phi in self.isomorphisms_from(P)}
        return sorted(seen.values(), key=lambda H: H.key)

    def is_conjugate(self, P: PermGroup, Q: PermGroup) -> bool:
        Qe = self.subgroup(Q).elements
        return any(phi.codomain.elements == Qe for phi in self.isomorphisms_from(P))

    def contains_morphism(self, phi: GroupHom) -> bool:
        return phi.items in {psi.items for psi in self.isomorphisms_from(phi.domain)}

    # -- S-local data ------------------------------------------------------

    def centralizer_in_S(self, P: PermGroup) -> Subgroup:
        return self.subgroup(centralizer(self.S, P).elements)

    def normalizer_in_S(self, P: PermGroup) -> Subgroup:
        return self.subgroup(normalizer(self.S, P).elements)

    def aut_S(self, P: PermGroup) -> list[GroupHom]:
        """Aut_S(P): restrictions of conjugation by N_S(P)."""
        P = self.subgroup(P)
        seen = {}
        for s in self.normalizer_in_S(P).sorted_elements:
            c = GroupHom.conjugation(s, P)
            seen.setdefault(c.items, c)
        return sorted(seen.values(), key=GroupHom.sort_key)

    def morphism_count(self) -> int:
        return sum(len(self.isomorphisms_from(P)) for P in self.subgroups)

    def is_group_realized(self) -> bool:
        return isinstance(self, ConjugationFusionSystem)


class ConjugationFusionSystem(FusionSystem):
    """F_S(G): morphisms are restrictions of conjugation by elements of G."""

    def __init__(self, G: PermGroup, p: int, S: Subgroup):
        super().__init__(p, S)
        self.G = G

    def _compute_isomorphisms(self, P: Subgroup) -> list[GroupHom]:
        Se = self.S.elements
        gens = P.gens
        seen: dict[tuple, Permutation] = {}
        for g in self.G.sorted_elements:
            imgs = tuple(g.conj(x) for x in gens)
            if imgs in seen:
                continue
            seen[imgs] = g if all(y in Se for y in imgs) else None
        out = []
        for g in seen.values():
            if g is None:
                continue
            table = {x: g.conj(x) for x in P.elements}
            out.append(GroupHom(P, self.subgroup_from(table.values()), table))
        return out

    def conjugating_elements(self, phi: GroupHom) -> list[Permutation]:
        """Elements g of G with c_g restricted to the domain equal to phi."""
        return [g for g in self.G.sorted_elements if all(g.conj(x) == y for x, y in phi.table.items())]


class GeneratedFusionSystem(FusionSystem):
    """Smallest fusion system over S containing the inner maps and ``generators``.

    Closure is taken under inverses, restriction to subgroups and composition.
    """

    def __init__(self, S: Subgroup, generators, p: int | None = None):
        if p is None:
            ps = prime_divisors(S.order())
            if len(ps) > 1:
                raise ValueError("S is not a p-group")
            p = ps[0] if ps else 2
        super().__init__(p, S)
        self.generators = list(generators)
        for phi in self.generators:
            if not phi.is_injective():
                raise ValueError("generator is not injective")
            if not phi.domain.elements <= S.elements or not phi.image_elements() <= S.elements:
                raise ValueError("generator is not a map between subgroups of S")
        self._close()

    def _close(self) -> None:
        limit = get_caps().morphisms
        subs = self.subgroups
        # isos[P] maps items -> table for isos out of P; into[Q] lists (P, items) with image Q
        isos: dict[frozenset, dict[frozenset, dict]] = {P.elements: {} for P in subs}
        into: dict[frozenset, list] = {P.elements: [] for P in subs}
        below = {P.elements: [R.elements for R in subs if R.elements < P.elements] for P in subs}
        count = 0
        queue = []

        def add(table: dict) -> None:
            nonlocal count
            dom = frozenset(table)
            items = frozenset(table.items())
            bucket = isos[dom]
            if items in bucket:
                return
            bucket[items] = table
            into[frozenset(table.values())].append((dom, items))
            count += 1
            if count > limit:
                raise CapExceededError("morphisms", limit, count)
            queue.append(table)

        for P in subs:
            for s in self.S.sorted_elements:
                add({x: s.conj(x) for x in P.elements})
        for phi in self.generators:
            add(dict(phi.table))

        while queue:
            t = queue.pop()
            dom = frozenset(t)
            img = frozenset(t.values())
            add({y: x for x, y in t.items()})
            for R in below[dom]:
                add({x: t[x] for x in R})
            for u in list(isos[img].values()):
                add({x: u[y] for x, y in t.items()})
            for src, items in list(into[dom]):
                v = isos[src][items]
                add({x: t[y] for x, y in v.items()})
        self._tables = {P: [t for t in bucket.values()] for P, bucket in isos.items()}

    def _compute_isomorphisms(self, P: Subgroup) -> list[GroupHom]:
        return [GroupHom(P, self.subgroup_from(t.values()), t) for t in self._tables[P.elements]]


def fusion_from_group(G: PermGroup, p: int, S: PermGroup | None = None) -> ConjugationFusionSystem:
    """F_S(G) for a Sylow p-subgroup S (computed when not given)."""
    if S is None:
        S = sylow_subgroup(G, p)
    else:
        if S.order() != p_part(G.order(), p) or not all(G.contains(s) for s in S.gens):
            raise ValueError("S is not a Sylow p-subgroup of G")
        S = S if isinstance(S, Subgroup) else S.as_subgroup()
    return ConjugationFusionSystem(G, p, S)


def inner_fusion_system(S: PermGroup, p: int | None = None) -> ConjugationFusionSystem:
    """F_S(S)."""
    S = S if isinstance(S, Subgroup) else S.as_subgroup()
    if p is None:
        ps = prime_divisors(S.order())
        if len(ps) > 1:
            raise ValueError("S is not a p-group")
        p = ps[0] if ps else 2
    return ConjugationFusionSystem(S, p, S)


def generate_fusion_system(S: PermGroup, gens, p: int | None = None) -> GeneratedFusionSystem:
    S = S if isinstance(S, Subgroup) else S.as_subgroup()
    return GeneratedFusionSystem(S, gens, p)


# ---------------------------------------------------------------------------
# Queries


def hom_set(F: FusionSystem, P: PermGroup, Q: PermGroup) -> list[GroupHom]:
    return F.hom_set(P, Q)


def f_conjugacy_classes(F: FusionSystem) -> list[list[Subgroup]]:
    done = set()
    classes = []
    for P in F.subgroups:
        if P.elements in done:
            continue
        cls = F.conjugates(P)
        done.update(Q.elements for Q in cls)
        classes.append(cls)
    return classes


@dataclass(frozen=True)
class Fullness:
    fully_centralized: bool
    fully_normalized: bool


def fullness_status(F: FusionSystem, P: PermGroup) -> Fullness:
    P = F.subgroup(P)
    conj = F.conjugates(P)
    c = F.centralizer_in_S(P).order()
    n = F.normalizer_in_S(P).order()
    return Fullness(
        all(c >= F.centralizer_in_S(Q).order() for Q in conj),
        all(n >= F.normalizer_in_S(Q).order() for Q in conj),
    )


def aut_f(F: FusionSystem, P: PermGroup) -> list[GroupHom]:
    return F.aut(P)


def aut_perm_group(P: PermGroup, auts) -> PermGroup:
    """Realize a list of automorphisms of P as permutations of P's sorted elements."""
    elems = P.sorted_elements
    idx = {x: i for i, x in enumerate(elems)}
    perms = [Permutation._raw(tuple(idx[a(x)] for x in elems)) for a in auts]
    return PermGroup(perms, degree=len(elems))


@dataclass
class OutF:
    aut_group: PermGroup
    inner: Subgroup
    group: PermGroup


def out_f(F: FusionSystem, P: PermGroup) -> PermGroup:
    """Out_F(P) = Aut_F(P)/Aut_P(P) as a concrete permutation group."""
    return out_f_data(F, P).group


def out_f_data(F: FusionSystem, P: PermGroup) -> OutF:
    P = F.subgroup(P)
    auts = F.aut(P)
    A = aut_perm_group(P, auts)
    inner = [GroupHom.conjugation(x, P) for x in P.gens]
    Inn = _pg.Subgroup(A, aut_perm_group(P, inner).gens)
    if len(auts) // Inn.order() > get_caps().out_order:
        raise CapExceededError("out_order", get_caps().out_order, len(auts) // Inn.order())
    return OutF(A, Inn, quotient_group(A, Inn))


# ---------------------------------------------------------------------------
# Saturation


@dataclass
class ExtensionProblem:
    phi: GroupHom
    N_phi: Subgroup
    extension: GroupHom | None = None


@dataclass
class SaturationReport:
    axiom_I_failures: list = field(default_factory=list)
    axiom_II_failures: list = field(default_factory=list)

    @property
    def saturated(self) -> bool:
        return not self.axiom_I_failures and not self.axiom_II_failures


def n_phi(F: FusionSystem, phi: GroupHom) -> Subgroup:
    """N_phi = {g in N_S(P) : phi c_g phi^-1 in Aut_S(phi P)}."""
    P = F.subgroup(phi.domain)
    Q = F.subgroup(phi.image_elements())
    autS = {a.items for a in F.aut_S(Q)}
    inv = {y: x for x, y in phi.table.items()}
    keep = []
    for g in F.normalizer_in_S(P).sorted_elements:
        twisted = frozenset((y, phi(g.conj(inv[y]))) for y in Q.elements)
        if twisted in autS:
            keep.append(g)
    return F.subgroup_from(keep)


def check_saturation(F: FusionSystem) -> SaturationReport:
    report = SaturationReport()
    p = F.p
    for P in F.subgroups:
        status = fullness_status(F, P)
        if status.fully_normalized:
            if not status.fully_centralized:
                report.axiom_I_failures.append((P, "fully normalized but not fully centralized"))
            a_f = len(F.aut(P))
            a_s = len(F.aut_S(P))
            if a_s != p_part(a_f, p):
                report.axiom_I_failures.append((P, f"|Aut_S(P)| = {a_s} but the {p}-part of |Aut_F(P)| = {a_f} is {p_part(a_f, p)}"))
    centralized = {P.elements: fullness_status(F, P).fully_centralized for P in F.subgroups}
    for P in F.subgroups:
        for phi in F.isomorphisms_from(P):
            if not centralized[phi.codomain.elements]:
                continue
            N = n_phi(F, phi)
            prob = ExtensionProblem(phi, N)
            for psi in F.isomorphisms_from(N):
                if all(psi.table[x] == y for x, y in phi.table.items()):
                    prob.extension = psi
                    break
            if prob.extension is None:
                report.axiom_II_failures.append(prob)
    return report
