"""Independent reference computations used by the tests.

Everything here works in the standard basis a + b v + c v^2 with plain
Python lists and its own Gaussian elimination, so it shares no code path
with the idempotent-coordinate implementation under test.
"""
from itertools import product
from math import lcm


def std_mul(p, x, y):
    a1, b1, c1 = x
    a2, b2, c2 = y
    # v^3 = v, v^4 = v^2
    d = [a1 * a2, a1 * b2 + b1 * a2, a1 * c2 + b1 * b2 + c1 * a2, b1 * c2 + c1 * b2, c1 * c2]
    return (d[0] % p, (d[1] + d[3]) % p, (d[2] + d[4]) % p)


def std_add(p, x, y):
    return tuple((u + w) % p for u, w in zip(x, y))


def std_poly_mul(p, f, g):
    """Product of two R[x] polynomials given as ascending lists of triples."""
    if not f or not g:
        return []
    out = [(0, 0, 0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = std_add(p, out[i + j], std_mul(p, a, b))
    return out


def rank_mod_p(rows, p):
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(u - f * w) % p for u, w in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def solvable(columns, target, p):
    """Is target in the F_p span of the given column vectors?"""
    if not any(v % p for v in target):
        return True
    if not columns:
        return False
    rows = [list(r) for r in zip(*columns)]
    aug = [r + [t] for r, t in zip(rows, target)]
    return rank_mod_p(rows, p) == rank_mod_p(aug, p)


def _flatten(f, length):
    f = list(f) + [(0, 0, 0)] * (length - len(f))
    return [v for t in f for v in t]


UNITS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def multiples_basis(p, a, deg_e, length):
    """Columns spanning {e * a : deg e <= deg_e} as flat standard vectors."""
    cols = []
    for j in range(deg_e + 1):
        for u in UNITS:
            e = [(0, 0, 0)] * j + [u]
            cols.append(_flatten(std_poly_mul(p, e, a), length))
    return cols


def std_divides(p, a, b):
    """Does a divide b in R[x]? Solved as a linear system over F_p."""
    deg_b = max(len(b) - 1, 0)
    length = len(b) + len(a)
    return solvable(multiples_basis(p, a, deg_b, length), _flatten(b, length), p)


def std_in_ideal(p, g, gens):
    """Is g in the R[x]-ideal generated by gens, using multipliers of bounded degree?"""
    bound = max([len(g)] + [len(f) for f in gens]) + 1
    length = bound * 2 + 2
    cols = []
    for f in gens:
        cols.extend(multiples_basis(p, f, bound, length))
    return solvable(cols, _flatten(g, length), p)


def std_shift(block_m, block_n, word):
    """Simultaneous cyclic shift of a flat list of triples."""
    left, right = word[:block_m], word[block_m:]
    return [left[-1]] + left[:-1] + [right[-1]] + right[:-1]


def std_inner(p, c, d):
    acc = (0, 0, 0)
    for x, y in zip(c, d):
        acc = std_add(p, acc, std_mul(p, x, y))
    return acc


def all_shift_inner_products_vanish(p, m, n, c, d):
    w = list(d)
    for _ in range(lcm(m, n)):
        if any(std_inner(p, c, w)):
            return False
        w = std_shift(m, n, w)
    return True


def span_closure(p, gens):
    """Set of all F_p-combinations of the given flat tuples, by saturation."""
    if not gens:
        return set()
    zero = tuple(0 for _ in gens[0])
    span = {zero}
    for g in gens:
        g = tuple(v % p for v in g)
        if g in span:
            continue
        span = {tuple((s + k * x) % p for s, x in zip(vec, g)) for vec in span for k in range(p)}
    return span


def all_r_elements(p):
    return list(product(range(p), repeat=3))


def submodule_closure(p, m, n, words):
    """Smallest set containing the words that is closed under +, R-scaling and the shift.

    Words are lists of standard triples; the result holds flat tuples.
    """
    gens = []
    for w in words:
        cur = list(w)
        for _ in range(lcm(m, n)):
            for u in UNITS:
                gens.append(tuple(v for t in cur for v in std_mul(p, u, t)))
            cur = std_shift(m, n, cur)
    return span_closure(p, gens)
