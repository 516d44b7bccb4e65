"""Pure-Python/numpy versions of the compiled kernels (same signatures)."""
import numpy as np


def rref(a_in, p):
    a = np.array(a_in, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), p - 2, p) % p
        factors = a[:, c].copy()
        factors[r] = 0
        a = (a - np.outer(factors, a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def _messages(k, p, start, stop):
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, k), dtype=np.int64)
    for j in range(k):
        out[:, j] = idx % p
        idx //= p
    return out


def span_all(g_in, p):
    g = np.asarray(g_in, dtype=np.int64) % p
    k, n = g.shape
    total = p**k
    if k == 0:
        return np.zeros((1, n), dtype=np.int64)
    return _messages(k, p, 0, total) @ g % p


def min_weight(g_in, p, chunk=1 << 16):
    g = np.asarray(g_in, dtype=np.int64) % p
    k, n = g.shape
    best = -1
    for t in range(k):
        # first nonzero digit at position t, fixed to 1
        rest = k - t - 1
        total = p**rest
        for start in range(0, total, chunk):
            msgs = _messages(rest, p, start, min(total, start + chunk))
            words = (g[t] + msgs @ g[t + 1:]) % p
            wts = np.count_nonzero(words, axis=1)
            wts = wts[wts > 0]
            if wts.size:
                m = int(wts.min())
                if best < 0 or m < best:
                    best = m
    return best
