"""Self-contained brute-force oracles used to pin expected test values.

Nothing here imports the package under test: polynomials are plain
exponent->coefficient dicts and partitions are tuples, so these results are
an independent route to every number the tests freeze.
"""


def poly_mul(a, b, order):
    out = {}
    for i, ca in a.items():
        for j, cb in b.items():
            k = i + j
            if k <= order:
                out[k] = out.get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def expand_product(factors, order):
    """Multiply out factors given as (sign, exp) pairs meaning 1 - sign*q^exp."""
    acc = {0: 1}
    for sign, exp in factors:
        factor = {0: 1}
        factor[exp] = factor.get(exp, 0) - sign  # exp may be 0
        acc = poly_mul(acc, factor, order)
    return acc


def brute_poch_infinite(sign, exp, step, order):
    factors = []
    e = exp
    while e <= order:
        factors.append((sign, e))
        e += step
    return expand_product(factors, order)


def brute_poch_finite(sign, exp, step, count, order):
    return expand_product(
        [(sign, exp + step * j) for j in range(count)], order
    )


def coeff_list(poly, order):
    return [poly.get(k, 0) for k in range(order + 1)]


def all_partitions(n, max_part=None):
    """Every partition of n as a nonincreasing tuple, lex decreasing order."""
    if n == 0:
        return [()]
    if max_part is None:
        max_part = n
    out = []
    for k in range(min(n, max_part), 0, -1):
        for rest in all_partitions(n - k, k):
            out.append((k,) + rest)
    return out


def pentagonal_euler_coeffs(order):
    """Coefficients of the Euler product from the alternating pentagonal sums."""
    cs = [0] * (order + 1)
    cs[0] = 1
    k = 1
    while k * (3 * k - 1) // 2 <= order:
        sign = -1 if k % 2 else 1
        for e in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if e <= order:
                cs[e] += sign
        k += 1
    return cs
