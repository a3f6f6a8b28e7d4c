"""Named groups and automorphisms used by the examples and the test corpus."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product

from .permgroup import (
    GroupHom,
    PermGroup,
    Permutation,
    is_prime,
    parse_cycles,
    prime_divisors,
)


class GF:
    """The field with ``q = p**k`` elements, elements encoded as ints 0..q-1.

    The integer ``a`` stands for the polynomial whose coefficients are the
    base-p digits of ``a``; arithmetic is modulo the first monic irreducible
    polynomial of degree k found by search.
    """

    def __init__(self, q: int):
        ps = prime_divisors(q)
        if len(ps) != 1:
            raise ValueError(f"{q} is not a prime power")
        p = ps[0]
        k = 0
        n = q
        while n > 1:
            n //= p
            k += 1
        self.q, self.p, self.k = q, p, k
        self.modulus = self._find_irreducible() if k > 1 else None
        self._mul = [[self._slow_mul(a, b) for b in range(q)] for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            self._inv[a] = next(b for b in range(1, q) if self._mul[a][b] == 1)
        self.primitive = next(a for a in range(1, q) if self.mult_order(a) == q - 1)

    def _digits(self, a: int) -> list[int]:
        return [(a // self.p ** i) % self.p for i in range(self.k)]

    def _from_digits(self, d) -> int:
        return sum(c * self.p ** i for i, c in enumerate(d))

    def _polymulmod(self, a: list[int], b: list[int], mod: list[int]) -> list[int]:
        p = self.p
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        deg = len(mod) - 1
        for i in range(len(prod) - 1, deg - 1, -1):
            c = prod[i]
            if c:
                for j in range(deg + 1):
                    prod[i - deg + j] = (prod[i - deg + j] - c * mod[j]) % p
        return (prod + [0] * deg)[:deg]

    def _find_irreducible(self) -> list[int]:
        p, k = self.p, self.k
        for tail in product(range(p), repeat=k):
            poly = list(reversed(tail)) + [1]  # coefficients low to high, monic
            if poly[0] == 0:
                continue
            # irreducible iff no root-free factorization: check x^(p^k) = x and
            # that x generates a field of size p^k (no smaller period)
            x = [0, 1] + [0] * (k - 2)
            y = x
            period = None
            for step in range(1, k + 1):
                acc = [1] + [0] * (k - 1)
                for _ in range(p):
                    acc = self._polymulmod(acc, y, poly)
                y = acc
                if y == x:
                    period = step
                    break
            if period == k:
                return poly
        raise ValueError(f"no irreducible polynomial of degree {k} over GF({p})")

    def _slow_mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        return self._from_digits(self._polymulmod(self._digits(a), self._digits(b), self.modulus))

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return self._from_digits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        return self._from_digits([-x % self.p for x in self._digits(a)])

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[a]

    def power(self, a: int, n: int) -> int:
        r = 1
        for _ in range(n):
            r = self.mul(r, a)
        return r

    def mult_order(self, a: int) -> int:
        x, n = a, 1
        while x != 1:
            x = self._slow_mul(x, a)
            n += 1
        return n


def _perm0(img) -> Permutation:
    return Permutation([i + 1 for i in img])


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("cyclic(n) needs n >= 1")
    if n == 1:
        return PermGroup([], degree=1, name="C1")
    return PermGroup([_perm0([(i + 1) % n for i in range(n)])], name=f"C{n}")


def dihedral(order: int) -> PermGroup:
    """Dihedral group of the given order (``dihedral(8)`` is D8)."""
    if order < 4 or order % 2:
        raise ValueError("dihedral(order) needs an even order >= 4")
    n = order // 2
    if n == 2:
        return PermGroup([parse_cycles("(1,2)", 4), parse_cycles("(3,4)", 4)], name="D4")
    r = _perm0([(i + 1) % n for i in range(n)])
    s = _perm0([(-i) % n for i in range(n)])
    return PermGroup([r, s], name=f"D{order}")


def elementary_abelian(p: int, k: int) -> PermGroup:
    if not is_prime(p) or k < 0:
        raise ValueError("elementary_abelian(p, k) needs p prime and k >= 0")
    if k == 0:
        return PermGroup([], degree=1, name="1")
    deg = p * k
    gens = []
    for j in range(k):
        img = list(range(deg))
        for i in range(p):
            img[j * p + i] = j * p + (i + 1) % p
        gens.append(_perm0(img))
    return PermGroup(gens, name=f"{p}^{k}")


def quaternion8() -> PermGroup:
    return PermGroup([parse_cycles("(1,2,3,4)(5,6,7,8)", 8), parse_cycles("(1,5,3,7)(2,8,4,6)", 8)], name="Q8")


def sym(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("sym(n) needs n >= 1")
    if n == 1:
        return PermGroup([], degree=1, name="S1")
    if n == 2:
        return PermGroup([parse_cycles("(1,2)", 2)], name="S2")
    return PermGroup([_perm0([(i + 1) % n for i in range(n)]), parse_cycles("(1,2)", n)], name=f"S{n}")


def alt(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("alt(n) needs n >= 1")
    if n < 3:
        return PermGroup([], degree=n, name=f"A{n}")
    gens = [parse_cycles(f"(1,2,{i})", n) for i in range(3, n + 1)]
    return PermGroup(gens, name=f"A{n}")


def psl2(q: int) -> PermGroup:
    """PSL(2,q) on the projective line: points are 0..q-1 and infinity (last).

    Generators are x -> x+1, x -> w^2 x (w primitive) and x -> -1/x.
    """
    if q > 23:
        raise ValueError("psl2(q) is only provided for q <= 23")
    F = GF(q)
    inf = q

    def mobius(f):
        return _perm0([f(x) for x in range(q + 1)])

    def shift(x):
        return inf if x == inf else F.add(x, 1)

    w2 = F.mul(F.primitive, F.primitive)

    def scale(x):
        return inf if x == inf else F.mul(w2, x)

    def invert(x):
        if x == inf:
            return 0
        if x == 0:
            return inf
        return F.neg(F.inv(x))

    gens = [mobius(shift), mobius(invert)]
    if F.k > 1:
        gens.append(mobius(scale))
    return PermGroup(gens, name=f"L2({q})")


def affine_frobenius(q: int, m: int) -> PermGroup:
    """``F_q ⋊ C_m`` acting on F_q by x -> a x + b with a of order m."""
    F = GF(q)
    if m < 1 or (q - 1) % m:
        raise ValueError(f"frobenius({q},{m}) needs m dividing q-1")
    a = F.power(F.primitive, (q - 1) // m)
    gens = []
    for i in range(F.k):
        t = F.p ** i
        gens.append(_perm0([F.add(x, t) for x in range(q)]))
    if m > 1:
        gens.append(_perm0([F.mul(a, x) for x in range(q)]))
    return PermGroup(gens, name=f"{q}:{m}")


def direct_product(A: PermGroup, B: PermGroup) -> PermGroup:
    n, m = A.degree, B.degree
    gens = [_perm0(list(g._img) + [n + j for j in range(m)]) for g in A.gens]
    gens += [_perm0(list(range(n)) + [n + j for j in h._img]) for h in B.gens]
    name = f"{A.name or 'A'}x{B.name or 'B'}"
    return PermGroup(gens, degree=n + m, name=name)


# ---------------------------------------------------------------------------
# Name parsing


@dataclass(frozen=True)
class NamedGroupSpec:
    name: str
    parameters: tuple = field(default_factory=tuple)

    def __str__(self):
        if not self.parameters:
            return self.name
        return f"{self.name}({','.join(map(str, self.parameters))})"


_INT_CONSTRUCTORS = {
    "cyclic": (cyclic, 1),
    "dihedral": (dihedral, 1),
    "elementary_abelian": (elementary_abelian, 2),
    "quaternion8": (quaternion8, 0),
    "sym": (sym, 1),
    "alt": (alt, 1),
    "psl2": (psl2, 1),
    "frobenius": (affine_frobenius, 2),
}


def split_top_level(s: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur)
    return [a.strip() for a in out]


def parse_group_name(text: str) -> NamedGroupSpec:
    """``"psl2(17)"`` -> NamedGroupSpec('psl2', (17,)); nested specs allowed for direct_product."""
    s = "".join(text.split())
    m = re.fullmatch(r"([a-z_0-9]+)(?:\((.*)\))?", s)
    if not m:
        raise ValueError(f"malformed group name: {text!r}")
    name, args = m.group(1), m.group(2)
    if name == "direct_product":
        parts = split_top_level(args or "")
        if len(parts) != 2:
            raise ValueError("direct_product takes two group specs")
        return NamedGroupSpec(name, tuple(parse_group_name(a) for a in parts))
    if name not in _INT_CONSTRUCTORS:
        raise ValueError(f"unsupported group name: {name!r}")
    params = ()
    if args:
        try:
            params = tuple(int(a) for a in split_top_level(args))
        except ValueError:
            raise ValueError(f"bad parameters in {text!r}") from None
    if len(params) != _INT_CONSTRUCTORS[name][1]:
        raise ValueError(f"{name} takes {_INT_CONSTRUCTORS[name][1]} parameter(s)")
    return NamedGroupSpec(name, params)


def make_named_group(spec: NamedGroupSpec | str) -> PermGroup:
    if isinstance(spec, str):
        spec = parse_group_name(spec)
    if spec.name == "direct_product":
        a, b = (make_named_group(s) for s in spec.parameters)
        G = direct_product(a, b)
    else:
        ctor, _ = _INT_CONSTRUCTORS[spec.name]
        G = ctor(*spec.parameters)
    G.name = str(spec)
    return G


# ---------------------------------------------------------------------------
# Automorphism examples


@dataclass
class FpfExample:
    group: PermGroup
    automorphism: GroupHom
    notes: str
    fixed_point_free: bool


def _aut_from_images(G: PermGroup, images) -> GroupHom:
    return GroupHom.from_images(G, G, list(G.gens), list(images))


def _a4_conj12() -> FpfExample:
    G = alt(4)
    t = parse_cycles("(1,2)", 4)
    phi = GroupHom.conjugation(t, G)
    return FpfExample(G, phi, "conjugation by (1,2) on A4; fixes (1,2)(3,4), inverts <(1,2,3)>", False)


def _c3c3_inversion() -> FpfExample:
    G = elementary_abelian(3, 2)
    phi = _aut_from_images(G, [g.inverse() for g in G.gens])
    return FpfExample(G, phi, "inversion on C3 x C3", True)


def _c2cubed_singer() -> FpfExample:
    # multiplication by a root of x^3 + x + 1 on F_2^3, basis e1, e2, e3:
    # e1 -> e2, e2 -> e3, e3 -> e1 + e2
    G = elementary_abelian(2, 3)
    e1, e2, e3 = G.gens
    phi = _aut_from_images(G, [e2, e3, e1 * e2])
    return FpfExample(G, phi, "Singer cycle of order 7 on C2^3", True)


def _power_map_example(n: int, k: int) -> FpfExample:
    G = cyclic(n)
    (g,) = G.gens
    phi = _aut_from_images(G, [g ** k])
    return FpfExample(G, phi, f"x -> x^{k} on C{n}", True)


FPF_EXAMPLES = {
    "a4_conj12": _a4_conj12,
    "c3c3_inversion": _c3c3_inversion,
    "c2cubed_singer": _c2cubed_singer,
    "c7_squaring": lambda: _power_map_example(7, 2),
    "c15_doubling": lambda: _power_map_example(15, 2),
    "c5_squaring": lambda: _power_map_example(5, 2),
}


def make_fpf_example(name: str) -> FpfExample:
    try:
        ctor = FPF_EXAMPLES[name]
    except KeyError:
        raise ValueError(f"unknown automorphism example: {name!r}") from None
    return ctor()


# Test corpus: every group here has order <= 200.
CORPUS = [
    "cyclic(2)", "cyclic(3)", "cyclic(4)", "cyclic(6)", "cyclic(8)",
    "elementary_abelian(2,2)", "elementary_abelian(2,3)", "elementary_abelian(3,2)",
    "dihedral(6)", "dihedral(8)", "dihedral(10)", "dihedral(12)", "dihedral(16)", "dihedral(18)",
    "quaternion8", "alt(4)", "sym(4)", "alt(5)",
    "frobenius(7,3)", "frobenius(8,7)", "frobenius(5,4)", "frobenius(9,4)",
    "direct_product(sym(3),cyclic(3))", "direct_product(alt(4),cyclic(2))",
    "direct_product(quaternion8,cyclic(3))", "psl2(7)",
]


# ---------------------------------------------------------------------------
# Semidirect product presets: (V, H, action on generators of H, p)


@dataclass
class SemidirectCase:
    V: PermGroup
    H: PermGroup
    action: dict
    p: int


def _v4_c3(trivial: bool = False) -> SemidirectCase:
    V, H = elementary_abelian(2, 2), cyclic(3)
    a, b = V.gens
    images = [a, b] if trivial else [b, a * b]
    act = {H.gens[0]: GroupHom.from_images(V, V, [a, b], images)}
    return SemidirectCase(V, H, act, 2)


def _c3_c2() -> SemidirectCase:
    V, H = cyclic(3), cyclic(2)
    a = V.gens[0]
    act = {H.gens[0]: GroupHom.from_images(V, V, [a], [a ** 2])}
    return SemidirectCase(V, H, act, 3)


SEMIDIRECT_CASES = {
    "v4-c3": _v4_c3,
    "c3-c2": _c3_c2,
    "v4-c3-trivial": lambda: _v4_c3(trivial=True),
}


def semidirect_case(name: str) -> SemidirectCase:
    try:
        return SEMIDIRECT_CASES[name]()
    except KeyError:
        raise ValueError(f"unknown semidirect case: {name!r}") from None
