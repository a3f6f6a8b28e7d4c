"""Slow, independent reference computations used to freeze expected values.

Everything here works on plain 0-based image tuples and never calls into
the library's algorithms, so agreement is meaningful.
"""

from itertools import product

from sympy.combinatorics import Permutation as SymPerm
from sympy.combinatorics import PermutationGroup as SymGroup


def raw(g):
    return tuple(i - 1 for i in g.images)


def mul(a, b):
    """a after b."""
    return tuple(a[i] for i in b)


def inv(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def ident(n):
    return tuple(range(n))


def closure(gens, n):
    """Naive word closure: multiply until nothing new appears."""
    elems = {ident(n)}
    frontier = [ident(n)]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = mul(g, x)
                if y not in elems:
                    elems.add(y)
                    new.append(y)
        frontier = new
    return frozenset(elems)


def group_elements(G):
    return closure([raw(g) for g in G.gens], G.degree)


def sympy_order(G):
    gens = [SymPerm(list(raw(g))) for g in G.gens] or [SymPerm(list(range(G.degree)))]
    return SymGroup(gens).order()


def all_subgroups(elems):
    """Every subgroup, by repeatedly adjoining one element to known subgroups."""
    elems = frozenset(elems)
    n = len(next(iter(elems)))
    known = {frozenset([ident(n)])}
    frontier = list(known)
    while frontier:
        new = []
        for H in frontier:
            for g in elems - H:
                K = closure(list(H) + [g], n)
                if K not in known:
                    known.add(K)
                    new.append(K)
        frontier = new
    return known


def is_normal(H, G):
    return all(mul(mul(g, h), inv(g)) in H for g in G for h in H)


def normal_subgroups(G):
    return {H for H in all_subgroups(G) if is_normal(H, G)}


def centralizer_size(G, P):
    return sum(1 for g in G if all(mul(g, x) == mul(x, g) for x in P))


def conjugation_hom_count(G, P, S):
    """|Hom_{F_S(G)}(P, S)| = #{g : gPg^-1 <= S} / |C_G(P)|."""
    good = sum(1 for g in G if all(mul(mul(g, x), inv(g)) in S for x in P))
    return good // centralizer_size(G, P)


def _generating_set(G):
    n = len(next(iter(G)))
    gens, H = [], frozenset([ident(n)])
    for g in sorted(G, key=lambda x: (-_order(x), x)):
        if g not in H:
            gens.append(g)
            H = closure(gens, n)
        if len(H) == len(G):
            break
    return gens


def _order(a):
    k, x, e = 1, a, ident(len(a))
    while x != e:
        x = mul(a, x)
        k += 1
    return k


def _extend(gens, images, op_dom, op_cod, id_dom, id_cod):
    """Extend a generator assignment to a map, or None if ill defined."""
    table = {id_dom: id_cod}
    frontier = [id_dom]
    while frontier:
        new = []
        for x in frontier:
            for g, y in zip(gens, images):
                z = op_dom(g, x)
                w = op_cod(y, table[x])
                if z in table:
                    if table[z] != w:
                        return None
                else:
                    table[z] = w
                    new.append(z)
        frontier = new
    return table


def _check_hom(table, op_dom, op_cod):
    return all(table[op_dom(a, b)] == op_cod(table[a], table[b]) for a in table for b in table)


def count_automorphisms(G):
    G = frozenset(G)
    gens = _generating_set(G)
    n = len(next(iter(G)))
    count = 0
    for images in product(sorted(G), repeat=len(gens)):
        t = _extend(gens, images, mul, mul, ident(n), ident(n))
        if t is not None and len(set(t.values())) == len(G) and _check_hom(t, mul, mul):
            count += 1
    return count


# Abstract finite groups as (elements, op, identity) for quotients.


def quotient(G, N):
    cosets = {}
    for g in G:
        key = frozenset(mul(g, x) for x in N)
        cosets.setdefault(key, key)
    elems = list(cosets)

    def op(a, b):
        x, y = next(iter(a)), next(iter(b))
        return frozenset(mul(mul(x, y), z) for z in N)

    return elems, op, frozenset(N)


def isomorphic(A, B):
    """A, B given as (elements, op, identity)."""
    ea, opa, ida = A
    eb, opb, idb = B
    if len(ea) != len(eb):
        return False
    gens = _abstract_gens(A)
    for images in product(eb, repeat=len(gens)):
        t = _extend(gens, images, opa, opb, ida, idb)
        if t is not None and len(t) == len(ea) and len(set(t.values())) == len(eb) and _check_hom(t, opa, opb):
            return True
    return False


def _abstract_gens(A):
    elems, op, e = A
    gens, H = [], {e}
    for g in elems:
        if g in H:
            continue
        gens.append(g)
        H = set(_extend_closure(gens, op, e))
        if len(H) == len(elems):
            break
    return gens


def _extend_closure(gens, op, e):
    seen, frontier = {e}, [e]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = op(g, x)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return seen


def as_abstract(G):
    n = len(next(iter(G)))
    return list(G), mul, ident(n)


def involves(L, H):
    """Brute force: some B normal in A <= L with A/B isomorphic to H."""
    h = len(H)
    target = as_abstract(H)
    for A in all_subgroups(L):
        if len(A) % h:
            continue
        for B in normal_subgroups(A):
            if len(A) // len(B) == h and isomorphic(quotient(A, B), target):
                return True
    return False


def p_part(n, p):
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q
