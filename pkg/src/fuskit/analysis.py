"""Centric and radical subgroups, normalizer and quotient systems, Alperin decompositions."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field

from .fusion import (
    FusionSystem,
    GroupHom,
    fullness_status,
    out_f_data,
)
from .permgroup import (
    get_caps,
    ContradictionError,
    PermGroup,
    Subgroup,
    join,
    o_p,
    quotient_group,
)

log = logging.getLogger(__name__)


def is_centric(F: FusionSystem, P: PermGroup) -> bool:
    """C_S(P') <= P' for every F-conjugate P' of P."""
    return all(F.centralizer_in_S(Q).elements <= Q.elements for Q in F.conjugates(P))


def is_radical(F: FusionSystem, P: PermGroup) -> bool:
    """O_p(Out_F(P)) = 1."""
    out = out_f_data(F, P).group
    return o_p(out, F.p).order() == 1


def is_weakly_closed(F: FusionSystem, Q: PermGroup) -> bool:
    return len(F.conjugates(Q)) == 1


def is_normal_in_S(F: FusionSystem, Q: PermGroup) -> bool:
    return F.normalizer_in_S(Q).order() == F.S.order()


def is_normal_in_F(F: FusionSystem, Q: PermGroup) -> bool:
    """Q normal in S and N_F(Q) = F."""
    if not is_normal_in_S(F, Q):
        return False
    N = normalizer_fusion_system(F, Q)
    for P in F.subgroups:
        if {phi.items for phi in F.isomorphisms_from(P)} != {phi.items for phi in N.isomorphisms_from(P)}:
            return False
    return True


def alperin_family(F: FusionSystem) -> list[Subgroup]:
    """Subgroups that are fully normalized, F-centric and F-radical."""
    out = []
    for P in F.subgroups:
        if fullness_status(F, P).fully_normalized and is_centric(F, P) and is_radical(F, P):
            out.append(P)
    return out


@dataclass
class CentricRadicalRow:
    subgroup: Subgroup
    fully_centralized: bool
    fully_normalized: bool
    centric: bool
    radical: bool
    aut_order: int
    out_order: int


def centric_radical_table(F: FusionSystem) -> list[CentricRadicalRow]:
    rows = []
    for P in F.subgroups:
        st = fullness_status(F, P)
        centric = is_centric(F, P)
        od = out_f_data(F, P)
        rows.append(CentricRadicalRow(P, st.fully_centralized, st.fully_normalized, centric,
                                      o_p(od.group, F.p).order() == 1, len(F.aut(P)), od.group.order()))
    return rows


# ---------------------------------------------------------------------------
# Normalizer systems


class NormalizerFusionSystem(FusionSystem):
    """N_F(Q) over N_S(Q).

    A morphism phi of F between subgroups of N_S(Q) belongs to N_F(Q) when
    it extends to some psi in Hom_F(PQ, S) with psi(Q) = Q.
    """

    def __init__(self, F: FusionSystem, Q: PermGroup):
        self.parent = F
        self.Q = F.subgroup(Q)
        super().__init__(F.p, F.normalizer_in_S(self.Q))

    def _compute_isomorphisms(self, P: Subgroup) -> list[GroupHom]:
        F = self.parent
        Qe = self.Q.elements
        NSe = self.S.elements
        PQ = F.subgroup(join(self.S, P, self.Q).elements)
        allowed = set()
        for psi in F.isomorphisms_from(PQ):
            if psi.image_elements() >= Qe and frozenset(psi(x) for x in Qe) == Qe:
                allowed.add(frozenset((x, psi(x)) for x in P.elements))
        out = []
        for phi in F.isomorphisms_from(P):
            if phi.image_elements() <= NSe and phi.items in allowed:
                out.append(GroupHom(P, self.subgroup(phi.image_elements()), phi.table))
        return out


def normalizer_fusion_system(F: FusionSystem, Q: PermGroup) -> NormalizerFusionSystem:
    return NormalizerFusionSystem(F, Q)


# ---------------------------------------------------------------------------
# Quotient systems


class QuotientFusionSystem(FusionSystem):
    """F/Q over S/Q for Q normal in S and weakly F-closed."""

    def __init__(self, F: FusionSystem, Q: PermGroup):
        Q = F.subgroup(Q)
        if not is_normal_in_S(F, Q):
            raise ValueError("Q is not normal in S")
        if not is_weakly_closed(F, Q):
            raise ValueError("Q is not weakly F-closed")
        self.parent = F
        self.Q = Q
        self.quotient = quotient_group(F.S, Q)
        self._proj = {x: self.quotient.project(x) for x in F.S.elements}
        super().__init__(F.p, self.quotient.as_subgroup())

    def project(self, x):
        return self._proj[x]

    def preimage(self, Pbar: PermGroup) -> Subgroup:
        Pe = Pbar.elements
        return self.parent.subgroup_from(x for x, y in self._proj.items() if y in Pe)

    def _compute_isomorphisms(self, Pbar: Subgroup) -> list[GroupHom]:
        P = self.preimage(Pbar)
        proj = self._proj
        seen = {}
        for phi in self.parent.isomorphisms_from(P):
            table = {}
            for x, y in phi.table.items():
                table[proj[x]] = proj[y]
            items = frozenset(table.items())
            if items not in seen:
                seen[items] = GroupHom(Pbar, self.subgroup(frozenset(table.values())), table)
        return list(seen.values())


def quotient_fusion_system(F: FusionSystem, Q: PermGroup) -> QuotientFusionSystem:
    return QuotientFusionSystem(F, Q)


# ---------------------------------------------------------------------------
# Alperin decomposition


@dataclass
class AlperinStep:
    Q: Subgroup
    psi: GroupHom       # element of Aut_F(Q)
    source: Subgroup    # P_{i-1}
    target: Subgroup    # P_i


@dataclass
class AlperinDecomposition:
    target: GroupHom
    steps: list[AlperinStep] = field(default_factory=list)

    def recompose(self) -> dict:
        """Compose the restricted steps on the domain of the target map."""
        table = {x: x for x in self.target.table}
        for st in self.steps:
            table = {x: st.psi(y) for x, y in table.items()}
        return table

    def is_valid(self) -> bool:
        return self.recompose() == self.target.table


def alperin_decompose(F: FusionSystem, psi: GroupHom, family: list[Subgroup] | None = None,
                      max_depth: int | None = None) -> AlperinDecomposition:
    """Write the F-isomorphism ``psi`` as a composite of restrictions of
    automorphisms of fully normalized, centric, radical subgroups.

    Breadth-first over (current image, accumulated map), so the returned
    witness has minimal length.
    """
    depth_cap = get_caps().alperin_depth if max_depth is None else max_depth
    P = F.subgroup(psi.domain)
    if family is None:
        family = alperin_family(F)
    # among equally short witnesses prefer higher-order automorphisms
    moves = [(Q, a) for Q in family for a in sorted(F.aut(Q), key=lambda a: (-a.order(), a.sort_key()))]
    goal = frozenset(psi.table.items())
    start = tuple(sorted(P.elements))
    start_state = tuple(start)
    if goal == frozenset((x, x) for x in start):
        return AlperinDecomposition(psi, [])
    parents = {start_state: None}
    frontier = deque([(start_state, 0)])
    while frontier:
        state, depth = frontier.popleft()
        if depth >= depth_cap:
            continue
        cur = frozenset(state)
        for idx, (Q, a) in enumerate(moves):
            if not cur <= Q.elements:
                continue
            nxt = tuple(a(y) for y in state)
            if nxt in parents:
                continue
            parents[nxt] = (state, idx)
            if frozenset(zip(start, nxt)) == goal:
                return _unwind(F, psi, parents, nxt, moves)
            frontier.append((nxt, depth + 1))
    log.error("no Alperin decomposition for %r within depth %d", psi, depth_cap)
    raise ContradictionError(f"no Alperin decomposition found for {psi!r} (depth {depth_cap})")


def _unwind(F, psi, parents, state, moves) -> AlperinDecomposition:
    steps = []
    while parents[state] is not None:
        prev, idx = parents[state]
        Q, a = moves[idx]
        steps.append(AlperinStep(Q, a, F.subgroup_from(prev), F.subgroup_from(state)))
        state = prev
    steps.reverse()
    return AlperinDecomposition(psi, steps)
