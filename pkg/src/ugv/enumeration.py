"""Exact short-vector enumeration in low-rank Z-lattices.

This is the hot kernel of the whole package: every minimum computation,
Voronoi step and automorphism backtrack funnels through it.  Three backends
produce identical output:

  * "python": exact Fincke-Pohst with rational Cholesky, always available and
    always correct; used automatically whenever int64 safety cannot be proved.
  * "numba":  @njit int64 kernel enumerating an LLL-reduced coordinate box.
  * "numpy":  vectorized int64 evaluation of the same box, the pure-numpy
    fallback when numba is not installed.

The accelerated backends are exact too: the Gram matrix is scaled to
integers, the enclosing box is derived from exact inverse diagonal entries,
and a proven overflow bound gates the int64 paths.  Select a backend with
the UGV_ENUM_BACKEND environment variable (auto|python|numpy|numba).
"""

from __future__ import annotations

import math
import os
from fractions import Fraction

import numpy as np

from .exactlinalg import identity, inverse, mat_mul, transpose

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        return wrap


_INT64_SAFE = 1 << 60  # headroom: kernel sums a handful of bounded terms


def default_backend() -> str:
    env = os.environ.get("UGV_ENUM_BACKEND", "auto").lower()
    if env not in ("auto", "python", "numpy", "numba"):
        raise ValueError(f"bad UGV_ENUM_BACKEND {env!r}")
    if env == "auto":
        return "numba" if HAS_NUMBA else "numpy"
    if env == "numba" and not HAS_NUMBA:
        raise RuntimeError("UGV_ENUM_BACKEND=numba but numba is not importable")
    return env


# ---------------------------------------------------------------------------
# exact LLL on a Gram matrix


def _gso(gram):
    """Gram-Schmidt data (squared norms B*, coefficients mu) from a Gram matrix."""
    n = len(gram)
    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = [Fraction(0)] * n
    # inner[i][j] = <b_i, b*_j>
    inner = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            s = gram[i][j]
            for k in range(j):
                s -= mu[j][k] * inner[i][k]
            inner[i][j] = s
            if j < i:
                mu[i][j] = s / bstar[j]
        bstar[i] = inner[i][i]
    return bstar, mu


def lll_gram(gram, delta: Fraction = Fraction(99, 100)):
    """Exact LLL on a PD rational Gram matrix; returns unimodular U (columns
    are the reduced basis in old coordinates), so U^T * G * U is reduced."""
    n = len(gram)
    u = [[int(i == j) for j in range(n)] for i in range(n)]

    def cur_gram():
        uf = [[Fraction(x) for x in row] for row in u]
        return mat_mul(transpose(uf), mat_mul(gram, uf))

    g = [[Fraction(x) for x in row] for row in gram]
    k = 1
    while k < n:
        bstar, mu = _gso(g)
        # size-reduce column k
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                for i in range(n):
                    u[i][k] -= q * u[i][j]
                g = cur_gram()
                bstar, mu = _gso(g)
        if bstar[k] >= (delta - mu[k][k - 1] ** 2) * bstar[k - 1]:
            k += 1
        else:
            for i in range(n):
                u[i][k], u[i][k - 1] = u[i][k - 1], u[i][k]
            g = cur_gram()
            k = max(k - 1, 1)
    return u


# ---------------------------------------------------------------------------
# exact Fincke-Pohst (python backend)


def _floor_plus_sqrt(c: Fraction, r2: Fraction) -> int:
    """floor(c + sqrt(r2)) for rationals c and r2 >= 0, exactly."""
    approx = math.isqrt(r2.numerator // r2.denominator) if r2 >= 1 else 0
    m = math.floor(c) + approx + 2
    while True:
        diff = m - c
        if diff <= 0 or diff * diff <= r2:
            return m
        m -= 1


def _fincke_pohst(gram, bound: Fraction):
    """All z != 0 with z^T G z <= bound, one per +-pair (leading sign from the
    outermost coordinate), by exact rational Fincke-Pohst."""
    n = len(gram)
    # LDL^T: Q(x) = sum_j d[j] * (x_j + sum_{k>j} lmat[k][j) x_k)^2
    d = [Fraction(0)] * n
    lmat = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        s = Fraction(gram[j][j])
        for k in range(j):
            s -= lmat[j][k] * lmat[j][k] * d[k]
        d[j] = s
        if s <= 0:
            raise ValueError("Gram matrix is not positive definite")
        for i in range(j + 1, n):
            t = Fraction(gram[i][j])
            for k in range(j):
                t -= lmat[i][k] * lmat[j][k] * d[k]
            lmat[i][j] = t / s
    out = []
    z = [0] * n

    def descend(level: int, remaining: Fraction, all_zero: bool):
        if level < 0:
            if not all_zero:
                out.append((tuple(z), bound - remaining))
            return
        center = sum(
            (lmat[m][level] * z[m] for m in range(level + 1, n)), Fraction(0)
        )
        r2 = remaining / d[level]
        hi = _floor_plus_sqrt(-center, r2)
        lo = -_floor_plus_sqrt(center, r2)
        if all_zero:
            lo = max(lo, 0)
        for zl in range(lo, hi + 1):
            step = d[level] * (zl + center) ** 2
            if step <= remaining:
                z[level] = zl
                descend(level - 1, remaining - step, all_zero and zl == 0)
        z[level] = 0

    descend(n - 1, Fraction(bound), True)
    return out


# ---------------------------------------------------------------------------
# int64 box kernels (numba / numpy backends)


@njit(cache=True, nogil=True)
def _enum_box_numba(g, bound, r):  # pragma: no cover - compiled
    cap = 256
    out = np.empty((cap, 4), dtype=np.int64)
    vals = np.empty(cap, dtype=np.int64)
    cnt = 0
    a3 = g[3, 3]
    for z0 in range(0, r[0] + 1):
        lo1 = -r[1] if z0 > 0 else 0
        for z1 in range(lo1, r[1] + 1):
            lo2 = -r[2] if (z0 > 0 or z1 > 0) else 0
            for z2 in range(lo2, r[2] + 1):
                pre = z0 > 0 or z1 > 0 or z2 > 0
                lo3 = -r[3] if pre else 1
                bc = 2 * (g[0, 3] * z0 + g[1, 3] * z1 + g[2, 3] * z2)
                cc = (
                    g[0, 0] * z0 * z0
                    + g[1, 1] * z1 * z1
                    + g[2, 2] * z2 * z2
                    + 2 * (g[0, 1] * z0 * z1 + g[0, 2] * z0 * z2 + g[1, 2] * z1 * z2)
                )
                if 4 * a3 * (bound - cc) + bc * bc < 0:
                    continue
                for z3 in range(lo3, r[3] + 1):
                    v = a3 * z3 * z3 + bc * z3 + cc
                    if v <= bound:
                        if cnt == cap:
                            cap *= 2
                            new_out = np.empty((cap, 4), dtype=np.int64)
                            new_vals = np.empty(cap, dtype=np.int64)
                            new_out[:cnt] = out
                            new_vals[:cnt] = vals
                            out = new_out
                            vals = new_vals
                        out[cnt, 0] = z0
                        out[cnt, 1] = z1
                        out[cnt, 2] = z2
                        out[cnt, 3] = z3
                        vals[cnt] = v
                        cnt += 1
    return out[:cnt], vals[:cnt]


def _enum_box_numpy(g, bound, r):
    """Same enumeration as the numba kernel, vectorized over the inner plane."""
    hits = []
    vals = []
    z2g = np.arange(-r[2], r[2] + 1, dtype=np.int64)[:, None]
    z3g = np.arange(-r[3], r[3] + 1, dtype=np.int64)[None, :]
    base = (
        g[2, 2] * z2g * z2g + g[3, 3] * z3g * z3g + 2 * g[2, 3] * z2g * z3g
    )
    for z0 in range(0, int(r[0]) + 1):
        lo1 = -int(r[1]) if z0 > 0 else 0
        for z1 in range(lo1, int(r[1]) + 1):
            c0 = g[0, 0] * z0 * z0 + g[1, 1] * z1 * z1 + 2 * g[0, 1] * z0 * z1
            lin = 2 * (g[0, 2] * z0 + g[1, 2] * z1) * z2g + 2 * (
                g[0, 3] * z0 + g[1, 3] * z1
            ) * z3g
            q = base + lin + c0
            mask = q <= bound
            if z0 == 0 and z1 == 0:
                # lex-positive: z2 > 0, or z2 == 0 and z3 > 0
                mask &= (z2g > 0) | ((z2g == 0) & (z3g > 0))
            i2, i3 = np.nonzero(mask)
            for a, b in zip(i2, i3):
                hits.append((z0, z1, int(z2g[a, 0]), int(z3g[0, b])))
                vals.append(int(q[a, b]))
    return hits, vals


def _int64_safe(gmax: int, rmax: int, bound: int) -> bool:
    term = 16 * gmax * (rmax + 1) * (rmax + 1)
    if term >= _INT64_SAFE or abs(bound) >= _INT64_SAFE:
        return False
    bc = 8 * gmax * (rmax + 1)
    return bc * bc < _INT64_SAFE and 4 * gmax * (abs(bound) + term) < _INT64_SAFE


# ---------------------------------------------------------------------------
# public entry point


def _canonical_pair(z: tuple[int, ...]) -> tuple[int, ...]:
    for x in z:
        if x > 0:
            return z
        if x < 0:
            return tuple(-y for y in z)
    return z


def short_vector_coords(gram, bound, backend: str | None = None):
    """All integer z != 0 with z^T G z <= bound for a PD rational Gram matrix,
    one representative per +-pair, as a sorted list of (coords, exact value)."""
    n = len(gram)
    gram = [[Fraction(x) for x in row] for row in gram]
    bound = Fraction(bound)
    if bound <= 0:
        return []
    if backend is None:
        backend = default_backend()
    u = lll_gram(gram)
    uf = [[Fraction(x) for x in row] for row in u]
    gred = mat_mul(transpose(uf), mat_mul(gram, uf))

    scale = 1
    for row in gred:
        for x in row:
            scale = scale * x.denominator // math.gcd(scale, x.denominator)
    gi = [[int(x * scale) for x in row] for row in gred]
    bi = math.floor(bound * scale)

    use_int64 = backend in ("numba", "numpy") and n == 4
    radii = None
    if use_int64:
        ginv = inverse(gred)
        radii = []
        for i in range(n):
            r2 = bound * ginv[i][i]
            radii.append(math.isqrt(r2.numerator * r2.denominator) // r2.denominator)
        gmax = max(abs(x) for row in gi for x in row)
        use_int64 = _int64_safe(gmax, max(radii), bi)

    if use_int64:
        garr = np.array(gi, dtype=np.int64)
        rarr = np.array(radii, dtype=np.int64)
        if backend == "numba":
            zs, vs = _enum_box_numba(garr, np.int64(bi), rarr)
            pairs = [(tuple(int(x) for x in zrow), Fraction(int(v), scale)) for zrow, v in zip(zs, vs)]
        else:
            zs, vs = _enum_box_numpy(garr, bi, radii)
            pairs = [(z, Fraction(v, scale)) for z, v in zip(zs, vs)]
    else:
        pairs = _fincke_pohst(gred, bound)

    out = []
    for zred, val in pairs:
        z = tuple(
            sum(u[i][k] * zred[k] for k in range(n)) for i in range(n)
        )
        out.append((_canonical_pair(z), val))
    out.sort(key=lambda t: (t[1], t[0]))
    return out


def warm_up():
    """Trigger numba compilation on a trivial instance."""
    if HAS_NUMBA:
        short_vector_coords(identity(4), 1, backend="numba")
