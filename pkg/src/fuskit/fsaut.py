"""Automorphisms of fusion systems and fixed-point-freeness."""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import alperin_family, is_normal_in_S
from .fusion import FusionSystem, fusion_from_group
from .permgroup import (
    get_caps,
    CapExceededError,
    ContradictionError,
    GroupHom,
    PermGroup,
    QuotientGroup,
    Subgroup,
    automorphism_group,
    is_prime,
    sylow_subgroups,
)


class FusionAut:
    """An automorphism of S that preserves the fusion system F."""

    def __init__(self, F: FusionSystem, phi: GroupHom, check: bool = True):
        if phi.domain.elements != F.S.elements or phi.image_elements() != F.S.elements:
            raise ValueError("not an automorphism of S")
        if check and not preserves_fusion(F, phi):
            raise ValueError("automorphism does not preserve the fusion system")
        self.system = F
        self.hom = GroupHom(F.S, F.S, phi.table)

    def __call__(self, x):
        return self.hom(x)

    def order(self) -> int:
        return self.hom.order()

    def is_identity(self) -> bool:
        return self.hom.is_identity()

    def image(self, P: PermGroup) -> Subgroup:
        return self.system.subgroup_from(self.hom(x) for x in P.elements)

    def compose(self, other: "FusionAut") -> "FusionAut":
        return FusionAut(self.system, self.hom.compose(other.hom), check=False)

    def inverse(self) -> "FusionAut":
        return FusionAut(self.system, self.hom.inverse(), check=False)

    def fixed_points(self):
        return self.hom.fixed_points()

    def __eq__(self, other):
        return isinstance(other, FusionAut) and self.hom == other.hom

    def __hash__(self):
        return hash(self.hom)

    def __repr__(self):
        return f"<FusionAut order={self.order()} {self.hom!r}>"


def _conjugate_map(phi: GroupHom, alpha: GroupHom) -> frozenset:
    """Items of phi ∘ alpha ∘ phi^-1 on phi(domain(alpha))."""
    return frozenset((phi(x), phi(y)) for x, y in alpha.table.items())


def preserves_fusion(F: FusionSystem, phi: GroupHom, exhaustive: bool = False) -> bool:
    """Does ``phi`` in Aut(S) carry F-morphisms to F-morphisms?

    By default only Aut_F(Q) for the fully normalized centric radical Q
    are tested; every morphism is a composite of restrictions of those when
    F is saturated.  ``exhaustive=True`` tests every morphism.
    """
    subs = F.subgroups if exhaustive else alperin_family(F)
    for P in subs:
        morphisms = F.isomorphisms_from(P) if exhaustive else F.aut(P)
        if not morphisms:
            continue
        target = F.subgroup_from(phi(x) for x in P.elements)
        allowed = {m.items for m in F.isomorphisms_from(target)}
        for a in morphisms:
            if _conjugate_map(phi, a) not in allowed:
                return False
    return True


def fusion_preserving_automorphisms(F: FusionSystem) -> list[FusionAut]:
    """Aut(F) as a sorted list."""
    if F.S.order() > get_caps().automorphisms:
        raise CapExceededError("automorphisms", get_caps().automorphisms, F.S.order())
    family = alperin_family(F)
    out = []
    for phi in automorphism_group(F.S):
        ok = True
        for P in family:
            target = F.subgroup_from(phi(x) for x in P.elements)
            allowed = {m.items for m in F.isomorphisms_from(target)}
            if any(_conjugate_map(phi, a) not in allowed for a in F.aut(P)):
                ok = False
                break
        if ok:
            out.append(FusionAut(F, phi, check=False))
    return out


def induced_sharp(phi: FusionAut, P: PermGroup) -> dict:
    """phi_# on Aut_F(P): alpha -> phi ∘ alpha ∘ phi|_P^-1, as a dict on morphisms."""
    F = phi.system
    P = F.subgroup(P)
    if phi.image(P).elements != P.elements:
        raise ValueError("P is not phi-invariant")
    auts = F.aut(P)
    by_items = {a.items: a for a in auts}
    out = {}
    for a in auts:
        img = by_items.get(_conjugate_map(phi.hom, a))
        if img is None:
            raise ContradictionError("phi_# leaves Aut_F(P); phi does not preserve the fusion system")
        out[a] = img
    return out


def invariant_subgroups(phi: FusionAut) -> list[Subgroup]:
    return [P for P in phi.system.subgroups if phi.image(P).elements == P.elements]


def is_fpf_fusion_aut(phi: FusionAut) -> bool:
    r = phi.order()
    # orbit counting: prime order r without fixed points needs r | |S| - 1
    if is_prime(r) and (phi.system.S.order() - 1) % r:
        return False
    if any(not x.is_identity() for x in phi.fixed_points()):
        return False
    for P in invariant_subgroups(phi):
        sharp = induced_sharp(phi, P)
        if any(a == b and not a.is_identity() for a, b in sharp.items()):
            return False
    return True


def is_fpf_group_aut(phi: GroupHom) -> bool:
    return all(x.is_identity() for x in phi.fixed_points())


# ---------------------------------------------------------------------------
# From group automorphisms


def induced_quotient_automorphism(phi: GroupHom, Q: QuotientGroup) -> GroupHom:
    """The automorphism of G/H induced by a phi-invariant normal H."""
    H = Q.kernel.elements
    if frozenset(phi(h) for h in H) != H:
        raise ValueError("kernel is not phi-invariant")
    table = {}
    for g in Q.source.elements:
        a, b = Q.project(g), Q.project(phi(g))
        if table.setdefault(a, b) != b:
            raise ContradictionError("induced map on the quotient is not well defined")
    return GroupHom(Q.as_subgroup(), Q.as_subgroup(), table)


@dataclass
class InducedFusionAut:
    S: Subgroup
    aut: FusionAut
    invariant_sylows: int


def induced_fusion_aut_from_group(G: PermGroup, phi: GroupHom, p: int) -> InducedFusionAut:
    """Restrict an automorphism of G to a phi-invariant Sylow p-subgroup.

    All Sylow p-subgroups are scanned; when phi is fixed-point-free there
    must be exactly one invariant one.
    """
    if phi.domain.elements != G.elements or phi.image_elements() != G.elements:
        raise ValueError("phi is not an automorphism of G")
    invariant = [S for S in sylow_subgroups(G, p) if frozenset(phi(x) for x in S.elements) == S.elements]
    if not invariant:
        raise ValueError(f"no phi-invariant Sylow {p}-subgroup")
    if is_fpf_group_aut(phi) and len(invariant) != 1:
        raise ContradictionError(f"fixed-point-free automorphism with {len(invariant)} invariant Sylow subgroups")
    S = invariant[0]
    F = fusion_from_group(G, p, S)
    restricted = GroupHom(F.S, F.S, {x: phi(x) for x in S.elements})
    if not preserves_fusion(F, restricted, exhaustive=F.S.order() <= 16):
        raise ContradictionError("restriction of a group automorphism does not preserve F_S(G)")
    aut = FusionAut(F, restricted, check=False)
    if is_fpf_group_aut(phi) and not is_fpf_fusion_aut(aut):
        raise ContradictionError("fixed-point-free group automorphism induced a non-fpf fusion automorphism")
    return InducedFusionAut(F.S, aut, len(invariant))


# ---------------------------------------------------------------------------
# Automorphism groups U


class AutGroupU:
    """A subgroup of Aut(F), with all elements materialized."""

    def __init__(self, F: FusionSystem, generators=()):
        self.system = F
        self.generators = list(generators)
        ident = FusionAut(F, GroupHom.identity_map(F.S), check=False)
        elems = {ident}
        queue = [ident]
        for x in queue:
            for g in self.generators:
                y = g.compose(x)
                if y not in elems:
                    elems.add(y)
                    queue.append(y)
        self.elements = sorted(elems, key=lambda a: a.hom.sort_key())

    @classmethod
    def trivial(cls, F: FusionSystem) -> "AutGroupU":
        return cls(F, [])

    def order(self) -> int:
        return len(self.elements)

    def leaves_invariant(self, P: PermGroup) -> bool:
        Pe = P.elements
        return all(frozenset(g(x) for x in Pe) == Pe for g in self.generators)


@dataclass
class TAutomorphismResult:
    holds: bool
    branch: str  # "fpf" | "p-group-auts" | "none"
    witness: object = None


def is_T_automorphism_group(F: FusionSystem, U: AutGroupU) -> TAutomorphismResult:
    """Does U certify that F admits T-automorphisms?

    Branch "fpf": U has prime order and is generated by a fixed-point-free
    fusion automorphism.  Branch "p-group-auts": Aut_F(Q) is a p-group for
    every U-invariant normal subgroup Q of S.
    """
    for g in U.generators:
        if not preserves_fusion(F, g.hom):
            raise ValueError("U contains a map that does not preserve F")
    if is_prime(U.order()):
        gen = next(a for a in U.elements if not a.is_identity())
        if is_fpf_fusion_aut(gen):
            return TAutomorphismResult(True, "fpf", gen)
    witness = aut_f_p_group_witness(F, U)
    if witness is not None:
        return TAutomorphismResult(False, "none", witness)
    return TAutomorphismResult(True, "p-group-auts", None)


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def aut_f_p_group_witness(F: FusionSystem, U: AutGroupU):
    """First U-invariant normal Q with Aut_F(Q) not a p-group, or None."""
    for Q in F.subgroups:
        if is_normal_in_S(F, Q) and U.leaves_invariant(Q) and not _is_p_power(len(F.aut(Q)), F.p):
            return Q
    return None
