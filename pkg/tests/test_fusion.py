import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import sub
from fuskit.catalog import CORPUS, alt, cyclic, dihedral, elementary_abelian, make_named_group
from fuskit.fusion import (
    check_saturation,
    f_conjugacy_classes,
    fullness_status,
    fusion_from_group,
    generate_fusion_system,
    inner_fusion_system,
    n_phi,
    out_f,
)
from fuskit.permgroup import GroupHom, PermGroup, Subgroup, center, prime_divisors


def test_s4_double_transposition_homs(F_S4):
    P = F_S4.subgroup(sub(F_S4.S, "(1,2)(3,4)"))
    homs = F_S4.isomorphisms_from(P)
    assert len(homs) == 3
    images = {str(h(h.domain.gens[0])) for h in homs}
    assert images == {"(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"}


def test_c3_system_is_trivial():
    F = fusion_from_group(cyclic(3), 3)
    for P in F.subgroups:
        assert [h.is_identity() for h in F.isomorphisms_from(P)] == [True]


def test_psl2_17_klein_fours(F_L217):
    fours = [P for P in F_L217.subgroups if P.order() == 4 and P.exponent() == 2]
    centric = [E for E in fours if F_L217.centralizer_in_S(E).elements <= E.elements]
    assert centric
    for E in centric:
        assert len(F_L217.aut(E)) == 6


def test_inner_system_examples():
    D8 = dihedral(8)
    F = inner_fusion_system(D8)
    Z = F.subgroup(center(D8))
    assert [h.is_identity() for h in F.isomorphisms_from(Z)] == [True]

    F = inner_fusion_system(PermGroup([], degree=2))
    assert len(F.subgroups) == 1 and F.morphism_count() == 1

    V4 = elementary_abelian(2, 2)
    F = inner_fusion_system(V4)
    twos = [P for P in F.subgroups if P.order() == 2]
    for P in twos:
        for Q in twos:
            if P != Q:
                assert F.hom_set(P, Q) == []


def test_hom_set_examples(F_S4, F_A4_3):
    V4 = F_S4.subgroup(sub(F_S4.S, "(1,2)(3,4)", "(1,3)(2,4)"))
    assert len(F_S4.hom_set(V4, V4)) == 6
    for Q in F_S4.subgroups:
        assert len(F_S4.hom_set(F_S4.trivial, Q)) == 1
    assert len(F_A4_3.aut(F_A4_3.S)) == 1


def test_hom_set_sizes_against_oracle():
    for name in CORPUS:
        G = make_named_group(name)
        if G.order() > 60:
            continue
        Ge = oracles.group_elements(G)
        for p in prime_divisors(G.order()):
            F = fusion_from_group(G, p)
            Se = frozenset(oracles.raw(x) for x in F.S.elements)
            for P in F.subgroups:
                Pe = [oracles.raw(x) for x in P.elements]
                assert len(F.isomorphisms_from(P)) == oracles.conjugation_hom_count(Ge, Pe, Se), (name, p, P)


def test_conjugacy_classes(F_S4):
    classes = f_conjugacy_classes(F_S4)
    by_elem = {}
    for i, cls in enumerate(classes):
        for P in cls:
            by_elem[P.elements] = i
    t1, t2 = sub(F_S4.S, "(1,3)"), sub(F_S4.S, "(2,4)")
    assert by_elem[t1.elements] == by_elem[t2.elements]
    Z = center(F_S4.S)
    assert str(Z.gens[0]) == "(1,3)(2,4)"
    assert by_elem[Z.elements] == by_elem[sub(F_S4.S, "(1,2)(3,4)").elements]
    assert sum(len(c) for c in classes) == len(F_S4.subgroups)

    F = inner_fusion_system(elementary_abelian(2, 3))
    assert all(len(c) == 1 for c in f_conjugacy_classes(F))


def test_fullness(F_S4):
    P = sub(F_S4.S, "(1,2)(3,4)")
    st_ = fullness_status(F_S4, P)
    assert not st_.fully_centralized and not st_.fully_normalized
    st_ = fullness_status(F_S4, F_S4.S)
    assert st_.fully_centralized and st_.fully_normalized
    st_ = fullness_status(F_S4, center(F_S4.S))
    assert st_.fully_centralized and st_.fully_normalized


def test_aut_and_out(F_S4):
    V4 = sub(F_S4.S, "(1,2)(3,4)", "(1,3)(2,4)")
    assert len(F_S4.aut(V4)) == 6 and out_f(F_S4, V4).order() == 6
    assert len(F_S4.aut(F_S4.S)) == 4 and out_f(F_S4, F_S4.S).order() == 1
    assert len(F_S4.aut(F_S4.trivial)) == 1 and out_f(F_S4, F_S4.trivial).order() == 1


def _c4_inversion():
    C4 = cyclic(4).as_subgroup()
    g = C4.gens[0]
    return generate_fusion_system(C4, [GroupHom.from_images(C4, C4, [g], [g ** 3])])


def test_broken_c4_closure():
    F = _c4_inversion()
    assert len(F.aut(F.S)) == 2
    rep = check_saturation(F)
    assert not rep.saturated
    assert [P.order() for P, _ in rep.axiom_I_failures] == [4]
    assert rep.axiom_II_failures == []


def test_generated_system_matches_a4():
    A4 = alt(4)
    F_real = fusion_from_group(A4, 2)
    V4 = F_real.S
    order3 = next(a for a in F_real.aut(V4) if a.order() == 3)
    F_gen = generate_fusion_system(V4, [order3])
    for P in F_real.subgroups:
        assert {a.items for a in F_real.isomorphisms_from(P)} == {a.items for a in F_gen.isomorphisms_from(P)}


def test_empty_generators_give_inner_system():
    D8 = dihedral(8).as_subgroup()
    F, E = generate_fusion_system(D8, []), inner_fusion_system(D8)
    for P in F.subgroups:
        assert {a.items for a in F.isomorphisms_from(P)} == {a.items for a in E.isomorphisms_from(P)}


def test_saturation_examples(F_S4):
    assert check_saturation(F_S4).saturated
    for name in ["dihedral(8)", "quaternion8", "dihedral(16)", "elementary_abelian(2,3)", "cyclic(8)"]:
        assert check_saturation(inner_fusion_system(make_named_group(name))).saturated


def test_n_phi_contains_domain(F_S4):
    for P in F_S4.subgroups:
        for phi in F_S4.isomorphisms_from(P):
            N = n_phi(F_S4, phi)
            assert P.elements <= N.elements <= F_S4.normalizer_in_S(P).elements


def test_subgroup_outside_s_rejected(F_S4):
    with pytest.raises(ValueError):
        F_S4.subgroup(Subgroup(F_S4.G, [F_S4.G.gens[0] * F_S4.G.gens[1]]))


@pytest.mark.parametrize("name", ["sym(4)", "alt(5)", "frobenius(9,4)", "direct_product(alt(4),cyclic(2))"])
def test_fusion_system_axioms(name):
    """Contains Hom_S, closed under composition and inverses, hom-sets well formed."""
    G = make_named_group(name)
    for p in prime_divisors(G.order()):
        F = fusion_from_group(G, p)
        for P in F.subgroups:
            isos = {a.items for a in F.isomorphisms_from(P)}
            for s in F.S.sorted_elements:
                assert frozenset((x, s.conj(x)) for x in P.elements) in isos
            for a in F.isomorphisms_from(P):
                assert a.inverse().items in {b.items for b in F.isomorphisms_from(a.image())}
                for b in F.isomorphisms_from(a.image()):
                    assert b.compose(a).items in isos


@given(st.sampled_from(["sym(4)", "dihedral(12)", "frobenius(7,3)", "psl2(7)"]), st.data())
def test_restriction_closure(name, data):
    G = make_named_group(name)
    p = data.draw(st.sampled_from(prime_divisors(G.order())))
    F = fusion_from_group(G, p)
    P = data.draw(st.sampled_from(F.subgroups))
    phi = data.draw(st.sampled_from(F.isomorphisms_from(P)))
    R = data.draw(st.sampled_from([R for R in F.subgroups if R.elements <= P.elements]))
    restricted = frozenset((x, phi(x)) for x in R.elements)
    assert restricted in {a.items for a in F.isomorphisms_from(R)}
