"""Property checks of structural invariants over the corpus and random inputs."""

from math import factorial

from hypothesis import given, strategies as st

import oracles
from fuskit.analysis import is_normal_in_F, is_weakly_closed
from fuskit.catalog import (
    CORPUS,
    affine_frobenius,
    alt,
    cyclic,
    dihedral,
    elementary_abelian,
    make_named_group,
    psl2,
    sym,
)
from fuskit.fsaut import fusion_preserving_automorphisms, induced_sharp, invariant_subgroups, is_fpf_fusion_aut
from fuskit.fusion import f_conjugacy_classes, fusion_from_group
from fuskit.permgroup import (
    Permutation,
    PermGroup,
    automorphism_group,
    centralizer,
    enumerate_subgroups,
    nilpotency_data,
    normalizer,
    prime_divisors,
    quotient_group,
    sylow_subgroup,
)

SMALL = [n for n in CORPUS if make_named_group(n).order() <= 60]
group_names = st.sampled_from(SMALL)


def test_closed_form_orders():
    for n in range(1, 13):
        assert cyclic(n).order() == n
    for n in range(3, 13):
        assert dihedral(2 * n).order() == 2 * n
    for n in range(1, 7):
        assert sym(n).order() == factorial(n)
    for n in range(3, 7):
        assert alt(n).order() == factorial(n) // 2
    for p, k in [(2, 1), (2, 4), (3, 3), (5, 2)]:
        assert elementary_abelian(p, k).order() == p ** k
    for q in (5, 7, 11, 13, 17, 19, 23):
        assert psl2(q).order() == q * (q * q - 1) // 2
    for q, m in [(7, 3), (8, 7), (5, 4), (9, 4), (7, 6), (9, 8)]:
        assert affine_frobenius(q, m).order() == q * m


@given(group_names, st.data())
def test_membership_matches_closure(name, data):
    G = make_named_group(name)
    elems = oracles.group_elements(G)
    x = Permutation(data.draw(st.permutations(list(range(1, G.degree + 1)))))
    assert G.contains(x) == (oracles.raw(x) in elems)


@given(group_names, st.data())
def test_centralizer_in_normalizer(name, data):
    G = make_named_group(name)
    P = data.draw(st.sampled_from(enumerate_subgroups(G)))
    N, C = normalizer(G, P), centralizer(G, P)
    assert C.elements <= N.elements and N.is_normal_subgroup(C)
    assert len(automorphism_group(P)) % (N.order() // C.order()) == 0


@given(group_names, st.data())
def test_quotients_are_surjective_homomorphisms(name, data):
    G = make_named_group(name)
    from fuskit.permgroup import normal_subgroups
    N = data.draw(st.sampled_from(normal_subgroups(G)))
    Q = quotient_group(G, N)
    assert Q.order() * N.order() == G.order()
    images = {Q.project(g) for g in G.elements}
    assert images == Q.elements
    a, b = data.draw(st.sampled_from(G.sorted_elements)), data.draw(st.sampled_from(G.sorted_elements))
    assert Q.project(a * b) == Q.project(a) * Q.project(b)


def test_nilpotent_iff_sylows_normal():
    for name in CORPUS:
        G = make_named_group(name)
        sylows_normal = all(G.is_normal_subgroup(sylow_subgroup(G, p)) for p in prime_divisors(G.order()))
        assert nilpotency_data(G).nilpotent == sylows_normal, name


def test_subgroups_are_closed():
    for name in CORPUS:
        G = make_named_group(name)
        if G.order() > 60:
            continue
        for H in enumerate_subgroups(G):
            E = H.elements
            assert all(a * b in E for a in E for b in E)


@given(group_names, st.data())
def test_conjugate_subgroups_have_equal_order(name, data):
    G = make_named_group(name)
    p = data.draw(st.sampled_from(prime_divisors(G.order())))
    F = fusion_from_group(G, p)
    for cls in f_conjugacy_classes(F):
        assert len({P.order() for P in cls}) == 1
    for P in F.subgroups:
        for phi in F.isomorphisms_from(P):
            assert phi.domain.elements == P.elements
            assert phi.image_elements() == phi.codomain.elements <= F.S.elements
            assert all(phi(a * b) == phi(a) * phi(b) for a in P.elements for b in P.elements)


def test_normal_in_F_implies_weakly_closed():
    for name in CORPUS:
        G = make_named_group(name)
        for p in prime_divisors(G.order()):
            F = fusion_from_group(G, p)
            for Q in F.subgroups:
                if is_normal_in_F(F, Q):
                    assert is_weakly_closed(F, Q)


def test_sharp_is_an_automorphism():
    for name in SMALL:
        G = make_named_group(name)
        for p in prime_divisors(G.order()):
            F = fusion_from_group(G, p)
            if F.S.order() > 16:
                continue
            for phi in fusion_preserving_automorphisms(F):
                for P in invariant_subgroups(phi):
                    sharp = induced_sharp(phi, P)
                    assert len(set(sharp.values())) == len(sharp)
                    for a in sharp:
                        for b in sharp:
                            ab = next(c for c in sharp if c.items == a.compose(b).items)
                            assert sharp[ab].items == sharp[a].compose(sharp[b]).items


def test_fpf_prime_order_divides():
    for name in SMALL:
        G = make_named_group(name)
        for p in prime_divisors(G.order()):
            F = fusion_from_group(G, p)
            for phi in fusion_preserving_automorphisms(F):
                r = phi.order()
                if is_fpf_fusion_aut(phi) and r > 1 and all(r % d for d in range(2, r)):
                    assert (F.S.order() - 1) % r == 0


@given(st.lists(st.permutations(list(range(1, 6))).map(Permutation), min_size=1, max_size=2), st.sampled_from([2, 3, 5]))
def test_random_group_fusion_is_saturated(gens, p):
    from fuskit.fusion import check_saturation
    G = PermGroup(gens, degree=5)
    F = fusion_from_group(G, p)
    assert check_saturation(F).saturated
