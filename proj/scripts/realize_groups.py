#!/usr/bin/env python3
"""Permutation realizations of the catalog groups that have no cyclic-by-
elementary-abelian description. Prints one `Perm[...]` spec per group.

Every group is built from an explicit model, closed under multiplication, and
emitted either as its natural action or as its right regular representation
(x -> x*g), so products compose left to right like the C++ library.
"""
import itertools
import sys


def closure(gens, mul, identity):
    elems = [identity]
    seen = {identity}
    i = 0
    while i < len(elems):
        for g in gens:
            p = mul(elems[i], g)
            if p not in seen:
                seen.add(p)
                elems.append(p)
        i += 1
    return elems


def cycles(images):
    """images: 0-based list; returns disjoint-cycle string on 1-based points."""
    n = len(images)
    done = [False] * n
    out = []
    for s in range(n):
        if done[s] or images[s] == s:
            done[s] = True
            continue
        c = [s]
        done[s] = True
        j = images[s]
        while j != s:
            c.append(j)
            done[j] = True
            j = images[j]
        out.append("(" + ",".join(str(x + 1) for x in c) + ")")
    return "".join(out) if out else "()"


def regular(gens, mul, identity):
    elems = closure(gens, mul, identity)
    index = {e: i for i, e in enumerate(elems)}
    perms = []
    for g in gens:
        perms.append(cycles([index[mul(e, g)] for e in elems]))
    return len(elems), "Perm[" + ";".join(perms) + "]"


def natural(points, gens, act):
    index = {p: i for i, p in enumerate(points)}
    return "Perm[" + ";".join(cycles([index[act(p, g)] for p in points]) for g in gens) + "]"


# ---- matrices over prime fields and F9 -------------------------------------

def matmul(a, b, add, mul, zero):
    n = len(a)
    return tuple(tuple(
        _sum([mul(a[i][k], b[k][j]) for k in range(n)], add, zero) for j in range(n)) for i in range(n))


def _sum(xs, add, zero):
    s = zero
    for x in xs:
        s = add(s, x)
    return s


def prime_field(p):
    return (lambda x, y: (x + y) % p, lambda x, y: (x * y) % p, 0, 1)


# F9 = F3[i], elements (a, b) = a + b i
def f9_add(x, y):
    return ((x[0] + y[0]) % 3, (x[1] + y[1]) % 3)


def f9_mul(x, y):
    return ((x[0] * y[0] - x[1] * y[1]) % 3, (x[0] * y[1] + x[1] * y[0]) % 3)


F9_ZERO, F9_ONE = (0, 0), (1, 0)


def vecmat(v, m, add, mul, zero):
    return tuple(_sum([mul(v[k], m[k][j]) for k in range(len(v))], add, zero) for j in range(len(v)))


def pauli():
    add, mul, z, o = prime_field(5)
    X = ((0, 1), (1, 0))
    Z = ((1, 0), (0, 4))
    I2 = ((2, 0), (0, 2))
    pts = [v for v in itertools.product(range(5), repeat=2) if v != (0, 0)]
    gens = [X, Z, I2]
    return natural(pts, gens, lambda v, m: vecmat(v, m, add, mul, z))


def central_product_c4_d4():
    # (C4 x D4) / <(2, r^2)>; D4 element (k, e) = s^e r^k with s r s = r^-1
    def d4mul(x, y):
        k1, e1 = x
        k2, e2 = y
        return (((-k1 if e2 else k1) + k2) % 4, e1 ^ e2)

    def norm(x):
        c, d = x
        # quotient identifies (c, d) with (c+2, d*r^2)
        alt = ((c + 2) % 4, d4mul(d, (2, 0)))
        return min((c, d), alt)

    def mul(x, y):
        return norm(((x[0] + y[0]) % 4, d4mul(x[1], y[1])))

    e = norm((0, (0, 0)))
    gens = [norm((1, (0, 0))), norm((0, (1, 0))), norm((0, (0, 1)))]
    return regular(gens, mul, e)


def c6c2_c2():
    # (C6 x C2) x| C2, w: u -> u^-1, v -> u^3 v. Element (i, j, k) = u^i v^j w^k.
    def act(k, i, j):
        if not k:
            return i, j
        return (-i + 3 * j) % 6, j

    def mul(x, y):
        i1, j1, k1 = x
        i2, j2, k2 = y
        # w^k1 (u^i2 v^j2) = act(u^i2 v^j2) w^k1 ; act v -> u^3 v
        if k1:
            i2n = (-i2 + 3 * j2) % 6
        else:
            i2n = i2
        return ((i1 + i2n) % 6, (j1 + j2) % 2, (k1 + k2) % 2)

    return regular([(1, 0, 0), (0, 1, 0), (0, 0, 1)], mul, (0, 0, 0))


def gl23(natural_action=True):
    add, mul, z, o = prime_field(3)
    A = ((1, 1), (0, 1))
    B = ((0, 1), (2, 0))
    C = ((2, 0), (0, 1))
    gens = [A, B, C]
    if natural_action:
        pts = [v for v in itertools.product(range(3), repeat=2) if v != (0, 0)]
        return natural(pts, gens, lambda v, m: vecmat(v, m, add, mul, z))
    ident = ((1, 0), (0, 1))
    return regular(gens, lambda a, b: matmul(a, b, add, mul, z), ident)


def c4_sl23_f9():
    # SL(2,3) inside GL(2,9) together with the scalar i
    def lift(m):
        return tuple(tuple((x, 0) for x in row) for row in m)

    A = lift(((1, 1), (0, 1)))
    B = lift(((0, 1), (2, 0)))
    S = (((0, 1), F9_ZERO), (F9_ZERO, (0, 1)))
    gens = [A, B, S]
    pts = [v for v in itertools.product(itertools.product(range(3), repeat=2), repeat=2)
           if v != (F9_ZERO, F9_ZERO)]
    return natural(pts, gens, lambda v, m: vecmat(v, m, f9_add, f9_mul, F9_ZERO))


def c4_sl23_quotient():
    add, mul, z, o = prime_field(3)

    def mm(a, b):
        return matmul(a, b, add, mul, z)

    neg = ((2, 0), (0, 2))

    def norm(x):
        c, m = x
        return min((c, m), ((c + 2) % 4, mm(m, neg)))

    def gmul(x, y):
        return norm(((x[0] + y[0]) % 4, mm(x[1], y[1])))

    ident = ((1, 0), (0, 1))
    gens = [norm((0, ((1, 1), (0, 1)))), norm((0, ((0, 1), (2, 0)))), norm((1, ident))]
    return regular(gens, gmul, norm((0, ident)))


def g32_9():
    # <x,y,z : x^8, y^2, z^2, [x,y], [z,y], zxzxy>, element x^i y^j z^k
    def mul(p, q):
        i1, j1, k1 = p
        i2, j2, k2 = q
        if k1:
            i2n, j2n = (-i2) % 8, (j2 + i2) % 2
        else:
            i2n, j2n = i2, j2
        return ((i1 + i2n) % 8, (j1 + j2n) % 2, (k1 + k2) % 2)

    return regular([(1, 0, 0), (0, 1, 0), (0, 0, 1)], mul, (0, 0, 0))


def fermat_quartic():
    # monomial 3x3 matrices with entries in <i>, modulo scalars
    def norm(x):
        p, e = x
        return (p, tuple((v - e[0]) % 4 for v in e))

    def mul(x, y):
        p, e = x
        q, f = y
        return norm((tuple(q[p[k]] for k in range(3)), tuple((e[k] + f[p[k]]) % 4 for k in range(3))))

    ident = ((0, 1, 2), (0, 0, 0))
    gens = [norm(((0, 1, 2), (0, 1, 0))), norm(((1, 2, 0), (0, 0, 0))), norm(((1, 0, 2), (0, 0, 0)))]
    return regular(gens, mul, ident)


def fano():
    lines = [{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}]
    lineset = {frozenset(l) for l in lines}
    cyc = {i: i % 7 + 1 for i in range(1, 8)}
    # find an involution preserving lines, not commuting with the 7-cycle
    for p in itertools.permutations(range(1, 8)):
        m = {i + 1: p[i] for i in range(7)}
        if any(m[m[i]] != i for i in m) or all(m[i] == i for i in m):
            continue
        if {frozenset(m[x] for x in l) for l in lines} != lineset:
            continue
        imgs1 = [cyc[i] - 1 for i in range(1, 8)]
        imgs2 = [m[i] - 1 for i in range(1, 8)]
        return "Perm[" + cycles(imgs1) + ";" + cycles(imgs2) + "]"


def gl32():
    add, mul, z, o = prime_field(2)
    ident = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    A = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    B = ((0, 1, 0), (0, 0, 1), (1, 0, 0))
    return regular([A, B], lambda a, b: matmul(a, b, add, mul, z), ident)


def pgl23():
    add, mul, z, o = prime_field(3)
    pts = [(0, 1), (1, 0), (1, 1), (1, 2)]  # normalized projective points

    def normp(v):
        for c in v:
            if c:
                inv = 1 if c == 1 else 2
                return tuple((x * inv) % 3 for x in v)

    gens = [((1, 1), (0, 1)), ((0, 1), (1, 0)), ((2, 0), (0, 1))]
    return natural(pts, gens, lambda v, m: normp(vecmat(v, m, add, mul, z)))


if __name__ == "__main__":
    out = {
        "16_13_pauli": pauli(),
        "16_13_central_product": central_product_c4_d4()[1],
        "24_8_c6c2_c2": c6c2_c2()[1],
        "48_29_natural": gl23(True),
        "48_29_regular": gl23(False)[1],
        "48_33_f9": c4_sl23_f9(),
        "48_33_quotient": c4_sl23_quotient()[1],
        "32_9": g32_9()[1],
        "96_64": fermat_quartic()[1],
        "168_fano": fano(),
        "168_gl32": gl32()[1],
        "24_12_pgl23": pgl23(),
    }
    for k, v in out.items():
        print(k, v)
