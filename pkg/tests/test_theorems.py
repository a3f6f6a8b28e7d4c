import logging

import pytest

import oracles
from fuskit.analysis import is_centric
from fuskit.catalog import (
    CORPUS,
    alt,
    cyclic,
    dihedral,
    elementary_abelian,
    make_fpf_example,
    make_named_group,
    quaternion8,
    semidirect_case,
    sym,
)
from fuskit.fsaut import AutGroupU, FusionAut, induced_fusion_aut_from_group
from fuskit.fusion import fullness_status, fusion_from_group, inner_fusion_system
from fuskit.permgroup import GroupHom, isomorphic_to, prime_divisors
from fuskit.theorems import (
    TheoremReport,
    Hypothesis,
    check_lemma_semidirect,
    check_theorem_A,
    check_theorem_B,
    involves,
    is_nilpotent_fusion,
    model_group,
    sigma4_free,
)
from conftest import sub


def test_nilpotency_examples(F_A4_3, F_A4_2, F_L217):
    assert is_nilpotent_fusion(F_A4_3)
    assert not is_nilpotent_fusion(F_A4_2)
    assert not is_nilpotent_fusion(F_L217)


def test_nilpotency_methods_agree_on_corpus(corpus_groups):
    # is_nilpotent_fusion raises if its two methods disagree
    for G in corpus_groups:
        for p in prime_divisors(G.order()):
            is_nilpotent_fusion(fusion_from_group(G, p))


def test_model_group_examples(F_S4, F_L217):
    V4 = sub(F_S4.S, "(1,2)(3,4)", "(1,3)(2,4)")
    M = model_group(F_S4, V4)
    assert isomorphic_to(M.L, sym(4))

    E = next(P for P in F_L217.subgroups
             if P.order() == 4 and P.exponent() == 2 and is_centric(F_L217, P)
             and fullness_status(F_L217, P).fully_normalized)
    M = model_group(F_L217, E)
    assert M.L.order() == 24 and isomorphic_to(M.L, sym(4))

    F = inner_fusion_system(dihedral(8))
    M = model_group(F, F.S)
    assert isomorphic_to(M.L, dihedral(8))


def test_model_group_preconditions(F_S4):
    with pytest.raises(ValueError):
        model_group(F_S4, sub(F_S4.S, "(1,3)(2,4)"))
    from fuskit.fusion import generate_fusion_system
    F = generate_fusion_system(dihedral(8).as_subgroup(), [])
    with pytest.raises(ValueError):
        model_group(F, F.S)


def test_model_invariants_across_corpus(corpus_groups, L217):
    # verify=True checks the Sylow embedding, C_L(P) = Z(P) and N_F(P) = F_{N_S(P)}(L)
    for G in corpus_groups + [L217]:
        for p in prime_divisors(G.order()):
            F = fusion_from_group(G, p)
            for P in F.subgroups:
                if is_centric(F, P) and fullness_status(F, P).fully_normalized:
                    model_group(F, P, verify=True)


def test_involves_examples():
    assert involves(sym(4), sym(4))
    assert not involves(dihedral(16), sym(4))
    assert involves(sym(4), sym(3))
    assert not involves(dihedral(8), sym(3))


@pytest.mark.parametrize("L", ["sym(4)", "alt(4)", "dihedral(12)", "frobenius(5,4)", "direct_product(sym(3),cyclic(3))",
                               "dihedral(8)", "quaternion8", "frobenius(7,3)"])
def test_involves_against_oracle(L):
    L = make_named_group(L)
    Le = oracles.group_elements(L)
    for H in [sym(3), elementary_abelian(2, 2), cyclic(4), alt(4), sym(4), dihedral(8), quaternion8(), cyclic(3)]:
        assert involves(L, H) == oracles.involves(Le, oracles.group_elements(H)), (L.name, H.name)


def test_h_free_examples(F_L217, F_S4):
    res = sigma4_free(F_L217)
    assert not res.free
    P, M = res.witness
    assert P.order() == 4 and P.exponent() == 2 and isomorphic_to(M.L, sym(4))
    assert not sigma4_free(F_S4).free
    assert sigma4_free(inner_fusion_system(dihedral(8))).free


def test_theorem_a_examples(F_L217, F_A4_2):
    rep = check_theorem_A(F_L217)
    assert not rep.hypothesis("p odd or Σ4-free").holds
    assert not rep.applicable and not rep.conclusion_holds and not rep.contradiction

    rep = check_theorem_A(inner_fusion_system(dihedral(8)))
    assert rep.applicable and rep.conclusion_holds

    rep = check_theorem_A(F_A4_2)
    h = rep.hypotheses[-1]
    assert not h.holds and h.witness.order() == 4
    assert not rep.conclusion_holds and not rep.contradiction


def test_theorem_b_examples(F_A4_2):
    ex = make_fpf_example("a4_conj12")
    phi = induced_fusion_aut_from_group(ex.group, ex.automorphism, 3).aut
    rep = check_theorem_B(phi.system, phi)
    assert rep.applicable and rep.conclusion_holds

    ex = make_fpf_example("c2cubed_singer")
    phi = induced_fusion_aut_from_group(ex.group, ex.automorphism, 2).aut
    assert phi.order() == 7
    rep = check_theorem_B(phi.system, phi)
    assert rep.details["sigma4_free"] is True
    assert rep.applicable and rep.conclusion_holds

    ident = FusionAut(F_A4_2, GroupHom.identity_map(F_A4_2.S))
    rep = check_theorem_B(F_A4_2, ident)
    assert not rep.hypothesis("fixed-point-free").holds
    assert not rep.applicable


def test_theorem_b_sweep():
    for name in ["a4_conj12", "c3c3_inversion", "c2cubed_singer", "c7_squaring", "c15_doubling", "c5_squaring"]:
        ex = make_fpf_example(name)
        for p in prime_divisors(ex.group.order()):
            ind = induced_fusion_aut_from_group(ex.group, ex.automorphism, p)
            if ind.aut.order() == 1:
                continue
            rep = check_theorem_B(ind.aut.system, ind.aut)
            assert not rep.contradiction
            if rep.applicable:
                assert rep.conclusion_holds


def test_contradiction_flag():
    rep = TheoremReport("A", [Hypothesis("h", True)], conclusion_holds=False)
    assert rep.applicable and rep.contradiction
    rep.hypotheses.append(Hypothesis("g", False))
    assert not rep.contradiction


def test_prime_two_needs_realized_system():
    from fuskit.fusion import generate_fusion_system
    F = generate_fusion_system(dihedral(8).as_subgroup(), [])
    with pytest.raises(ValueError):
        check_theorem_A(F)
    F3 = generate_fusion_system(cyclic(3).as_subgroup(), [])
    assert check_theorem_A(F3).applicable


def test_theorem_a_with_nontrivial_u(F_A4_3):
    ex = make_fpf_example("a4_conj12")
    phi = induced_fusion_aut_from_group(ex.group, ex.automorphism, 3).aut
    rep = check_theorem_A(phi.system, AutGroupU(phi.system, [phi]))
    assert rep.applicable and rep.conclusion_holds


def test_lemma_cases():
    c = semidirect_case("v4-c3")
    rep = check_lemma_semidirect(c.V, c.H, c.action, c.p)
    assert rep.group_order == 12 and rep.sylow_order == 4 and rep.aut_F_order == 6
    assert rep.subgroups_examined == 6 and rep.holds

    c = semidirect_case("c3-c2")
    rep = check_lemma_semidirect(c.V, c.H, c.action, c.p)
    assert rep.group_order == 6 and rep.aut_F_order == 2
    assert rep.subgroups_examined == 2 and rep.holds

    c = semidirect_case("v4-c3-trivial")
    with pytest.raises(ValueError):
        check_lemma_semidirect(c.V, c.H, c.action, c.p)


def test_lemma_rejects_non_elementary():
    C4 = cyclic(4)
    with pytest.raises(ValueError):
        check_lemma_semidirect(C4, cyclic(2), {cyclic(2).gens[0]: GroupHom.identity_map(C4)}, 2)


def test_contradiction_logs(caplog, monkeypatch):
    import fuskit.theorems as th
    F = fusion_from_group(alt(4), 3)
    monkeypatch.setattr(th, "is_nilpotent_fusion", lambda F: False)
    with caplog.at_level(logging.ERROR):
        rep = th.check_theorem_A(F)
    assert rep.contradiction
    assert "CONTRADICTION" in caplog.text


def test_all_corpus_names_build():
    assert all(make_named_group(n).order() > 0 for n in CORPUS)


def test_parallel_sweep_matches_serial():
    from fuskit.theorems import theorem_A_sweep
    names = ["sym(4)", "alt(4)", "dihedral(8)", "frobenius(7,3)"]
    serial = theorem_A_sweep(names)
    assert serial == theorem_A_sweep(names, workers=2)
    assert not any(r.contradiction for r in serial)
    assert {(r.group, r.p) for r in serial if r.applicable} >= {("alt(4)", 3), ("dihedral(8)", 2)}
