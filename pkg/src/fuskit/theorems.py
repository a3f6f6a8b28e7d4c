"""Nilpotency of fusion systems, model groups, H-freeness and the Thompson-type checks."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .analysis import alperin_family, is_centric, normalizer_fusion_system
from .catalog import sym
from .fsaut import (
    AutGroupU,
    FusionAut,
    aut_f_p_group_witness,
    fusion_preserving_automorphisms,
    is_fpf_fusion_aut,
    is_T_automorphism_group,
)
from .fusion import (
    ConjugationFusionSystem,
    FusionSystem,
    check_saturation,
    fullness_status,
    aut_perm_group,
    fusion_from_group,
    inner_fusion_system,
)
from .permgroup import (
    get_caps,
    ContradictionError,
    PermGroup,
    Permutation,
    Subgroup,
    center,
    centralizer,
    enumerate_subgroups,
    extend_generator_map,
    isomorphic_to,
    is_elementary_abelian,
    is_prime,
    normal_subgroups,
    normalizer,
    o_p_prime,
    p_part,
    quotient_group,
    semidirect_product,
)

log = logging.getLogger(__name__)


@dataclass
class Hypothesis:
    name: str
    holds: bool
    witness: object = None


@dataclass
class TheoremReport:
    theorem: str
    hypotheses: list[Hypothesis] = field(default_factory=list)
    conclusion_holds: bool = False
    details: dict = field(default_factory=dict)

    @property
    def applicable(self) -> bool:
        return all(h.holds for h in self.hypotheses)

    @property
    def contradiction(self) -> bool:
        return self.applicable and not self.conclusion_holds

    def hypothesis(self, name: str) -> Hypothesis:
        return next(h for h in self.hypotheses if h.name == name)


# ---------------------------------------------------------------------------
# Nilpotency


def _hom_sets_equal(F: FusionSystem, E: FusionSystem) -> bool:
    for P in F.subgroups:
        if {a.items for a in F.isomorphisms_from(P)} != {a.items for a in E.isomorphisms_from(P)}:
            return False
    return True


def is_nilpotent_fusion(F: FusionSystem) -> bool:
    """F = F_S(S), decided by direct comparison and by the Alperin criterion."""
    direct = _hom_sets_equal(F, inner_fusion_system(F.S, F.p))
    via_alperin = all(len(F.aut(Q)) == len(F.aut_S(Q)) for Q in alperin_family(F))
    if direct != via_alperin:
        raise ContradictionError(f"nilpotency: direct comparison says {direct}, Alperin criterion says {via_alperin}")
    return direct


# ---------------------------------------------------------------------------
# Model groups


@dataclass
class ModelGroup:
    P: Subgroup
    L: PermGroup
    project: object             # callable N_G(P) -> L
    sylow_image: Subgroup       # image of N_S(P) in L
    P_image: Subgroup
    provenance: str

    def verify(self, F: ConjugationFusionSystem) -> None:
        """Check the Sylow embedding, C_L(P) = Z(P) and N_F(P) = F_{N_S(P)}(L)."""
        p = F.p
        if self.sylow_image.order() != p_part(self.L.order(), p):
            raise ContradictionError("N_S(P) is not a Sylow subgroup of the model")
        if centralizer(self.L, self.P_image).elements != center(self.P_image).elements:
            raise ContradictionError("C_L(P) != Z(P) in the model")
        NF = normalizer_fusion_system(F, self.P)
        LF = ConjugationFusionSystem(self.L, p, self.sylow_image)
        proj = {x: self.project(x) for x in NF.S.elements}
        back = {y: x for x, y in proj.items()}
        for R in NF.subgroups:
            mine = {a.items for a in NF.isomorphisms_from(R)}
            Rbar = LF.subgroup_from(proj[x] for x in R.elements)
            theirs = {frozenset((back[x], back[y]) for x, y in a.table.items()) for a in LF.isomorphisms_from(Rbar)}
            if mine != theirs:
                raise ContradictionError(f"N_F(P) and the model fusion differ on {R!r}")


def model_group(F: FusionSystem, P: PermGroup, verify: bool = True) -> ModelGroup:
    """L = N_G(P)/O_p'(C_G(P)) for a group-realized F and centric, fully normalized P."""
    if not isinstance(F, ConjugationFusionSystem):
        raise ValueError("model groups are only computed for fusion systems of finite groups")
    P = F.subgroup(P)
    if not is_centric(F, P):
        raise ValueError("P is not F-centric")
    if not fullness_status(F, P).fully_normalized:
        raise ValueError("P is not fully normalized")
    G = F.G
    N = normalizer(G, P)
    O = o_p_prime(centralizer(G, P), F.p)
    NS = F.normalizer_in_S(P)
    if O.order() == 1:
        L = PermGroup(N.gens, degree=N.degree)
        project = lambda x: x  # noqa: E731
    else:
        Qt = quotient_group(N, O)
        L, project = Qt, Qt.project
    sylow_image = Subgroup.from_elements(L, {project(x) for x in NS.elements})
    P_image = Subgroup.from_elements(L, {project(x) for x in P.elements})
    M = ModelGroup(P, L, project, sylow_image, P_image, "N_G(P)/O_p'(C_G(P))")
    if verify:
        M.verify(F)
    return M


def involves(L: PermGroup, H: PermGroup) -> bool:
    """Is H isomorphic to A/B for some B normal in A <= L?"""
    h = H.order()
    if L.order() % h:
        return False
    for A in enumerate_subgroups(L):
        if A.order() % h:
            continue
        for B in normal_subgroups(A):
            if A.order() // B.order() != h:
                continue
            Abar = A if B.order() == 1 else quotient_group(A, B)
            if isomorphic_to(Abar, H):
                return True
    return False


@dataclass
class HFreeResult:
    free: bool
    witness: tuple | None = None   # (P, model)
    models: list = field(default_factory=list)


def is_H_free(F: FusionSystem, H: PermGroup) -> HFreeResult:
    """No model group L_P (P centric, fully normalized) involves H."""
    result = HFreeResult(True)
    for P in F.subgroups:
        if not is_centric(F, P) or not fullness_status(F, P).fully_normalized:
            continue
        M = model_group(F, P)
        result.models.append(M)
        if result.free and involves(M.L, H):
            result.free = False
            result.witness = (P, M)
    return result


def sigma4_free(F: FusionSystem) -> HFreeResult:
    return is_H_free(F, sym(4))


# ---------------------------------------------------------------------------
# Theorems A and B


def _prime_hypothesis(F: FusionSystem, report: TheoremReport) -> None:
    if F.is_group_realized():
        s4 = sigma4_free(F)
        report.details["sigma4_free"] = s4.free
        witness = s4.witness
    else:
        if F.p == 2:
            raise ValueError("Σ4-freeness is only decided for group-realized systems")
        s4, witness = None, None
        report.details["sigma4_free"] = None
    holds = F.p % 2 == 1 or (s4 is not None and s4.free)
    report.hypotheses.append(Hypothesis("p odd or Σ4-free", holds, witness))


def _finish(report: TheoremReport, F: FusionSystem) -> TheoremReport:
    report.conclusion_holds = is_nilpotent_fusion(F)
    if report.contradiction:
        log.error("CONTRADICTION in %s: hypotheses=%s", report.theorem, report.hypotheses)
        for P in F.subgroups:
            log.error("  |Hom_F(%r, S)| = %d", P, len(F.isomorphisms_from(P)))
    return report


def check_theorem_A(F: FusionSystem, U: AutGroupU | None = None) -> TheoremReport:
    """Saturated F, p odd or Σ4-free, Aut_F(Q) a p-group for U-invariant Q ⊴ S  =>  F = F_S(S)."""
    if U is None:
        U = AutGroupU.trivial(F)
    report = TheoremReport("A")
    report.hypotheses.append(Hypothesis("saturated", check_saturation(F).saturated))
    _prime_hypothesis(F, report)
    witness = aut_f_p_group_witness(F, U)
    report.hypotheses.append(Hypothesis("Aut_F(Q) is a p-group for U-invariant Q ⊴ S", witness is None, witness))
    return _finish(report, F)


def check_theorem_B(F: FusionSystem, phi: FusionAut) -> TheoremReport:
    """Saturated F, p odd or Σ4-free, a fixed-point-free automorphism of prime order  =>  F = F_S(S)."""
    report = TheoremReport("B")
    report.hypotheses.append(Hypothesis("saturated", check_saturation(F).saturated))
    _prime_hypothesis(F, report)
    order = phi.order()
    report.hypotheses.append(Hypothesis("prime order", is_prime(order), order))
    report.hypotheses.append(Hypothesis("fixed-point-free", is_fpf_fusion_aut(phi)))
    return _finish(report, F)


# ---------------------------------------------------------------------------
# Semidirect products V ⋊ H


@dataclass
class LemmaReport:
    precondition: bool
    group_order: int = 0
    sylow_order: int = 0
    aut_F_order: int = 0
    subgroups_examined: int = 0
    t_automorphism_groups: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        """No T-automorphism group leaving V invariant was found."""
        return self.precondition and not self.t_automorphism_groups


def _acts_nontrivially_with_p_prime_element(V: PermGroup, H: PermGroup, action, p: int) -> bool:
    gens = list(H.gens)
    Ve = V.sorted_elements
    vidx = {v: i for i, v in enumerate(Ve)}
    perms = [Permutation._raw(tuple(vidx[action[h](v)] for v in Ve)) for h in gens]
    table = extend_generator_map(gens, perms, lambda a, b: a * b, H.identity, Permutation.identity(len(Ve)))
    if table is None:
        raise ValueError("action is not a homomorphism H -> Aut(V)")
    return any(h.order() % p and not img.is_identity() for h, img in table.items())


def check_lemma_semidirect(V: PermGroup, H: PermGroup, action, p: int) -> LemmaReport:
    """Scan every U <= Aut(F_S(V ⋊ H)) leaving V invariant for T-automorphism groups."""
    if not is_elementary_abelian(V, p) or V.order() == 1:
        raise ValueError("V must be a nontrivial elementary abelian p-group")
    if not _acts_nontrivially_with_p_prime_element(V, H, action, p):
        raise ValueError("no element of H of order prime to p acts nontrivially on V")
    sd = semidirect_product(V, H, action)
    G = sd.group
    F = fusion_from_group(G, p)
    Vimg = F.subgroup(sd.V)
    auts = fusion_preserving_automorphisms(F)
    report = LemmaReport(True, G.order(), F.S.order(), len(auts))
    A = aut_perm_group(F.S, [a.hom for a in auts])
    by_perm = {}
    elems = F.S.sorted_elements
    idx = {x: i for i, x in enumerate(elems)}
    for a in auts:
        by_perm[Permutation._raw(tuple(idx[a(x)] for x in elems))] = a
    for Usub in enumerate_subgroups(A, cap=get_caps().aut_subgroups):
        U = AutGroupU(F, [by_perm[g] for g in Usub.gens])
        if not U.leaves_invariant(Vimg):
            continue
        report.subgroups_examined += 1
        res = is_T_automorphism_group(F, U)
        if res.holds:
            report.t_automorphism_groups.append((U, res))
    return report


# ---------------------------------------------------------------------------
# Corpus sweeps


@dataclass
class SweepRow:
    group: str
    p: int
    sylow_order: int
    applicable: bool
    nilpotent: bool
    contradiction: bool


def _sweep_one(name: str, p: int) -> SweepRow:
    from .catalog import make_named_group
    F = fusion_from_group(make_named_group(name), p)
    rep = check_theorem_A(F)
    return SweepRow(name, p, F.S.order(), rep.applicable, rep.conclusion_holds, rep.contradiction)


def theorem_A_sweep(names, workers: int | None = None) -> list[SweepRow]:
    """Theorem A with trivial U over every (group, prime) pair.

    Pairs are independent, so ``workers > 1`` farms them out to processes.
    """
    from .catalog import make_named_group
    from .permgroup import prime_divisors
    jobs = [(n, p) for n in names for p in prime_divisors(make_named_group(n).order())]
    if not workers or workers <= 1:
        return [_sweep_one(n, p) for n, p in jobs]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_sweep_one, *zip(*jobs)))
