"""
Closed-form Ramsey–Turán quantities in exact integer and rational arithmetic.

For `n/3 < s < n/2` the integer `k >= 2` with `k/(3k-1) n <= s < (k-1)/(3k-4) n` selects the quadratic
`g_k(n, s)`; below a third the answer is the trivial bound `ns/2`, from a half on it is Mantel's `n²/4`.
All range tests are done by cross-multiplication.
"""
from fractions import Fraction

from tri_struct import Struct

from ramsey_turan.base import RamseyTuranException

BELOW_THIRD = 'below-third'
K_RANGE = 'k-range'
AT_OR_ABOVE_HALF = 'at-or-above-half'


class FormulaException(RamseyTuranException):
    pass


class FormulaPoint(Struct):
    pass


def _check_k(k):
    if k < 2:
        raise FormulaException(f'k must be at least 2, got {k}')


def g_k_value(k, n, s):
    _check_k(k)
    doubled = k * (k - 1) * n * n - 2 * k * (3 * k - 4) * n * s + (3 * k - 4) * (3 * k - 1) * s * s
    if isinstance(doubled, int):
        assert doubled % 2 == 0
        return doubled // 2
    return Fraction(doubled) / 2


def g2_value(n, s):
    return n * n - 4 * n * s + 5 * s * s


def g3_value(n, s):
    return 3 * n * n - 15 * n * s + 20 * s * s


def f_k_value(k, alpha):
    _check_k(k)
    alpha = Fraction(alpha)
    return k * (k - 1) - 2 * k * (3 * k - 4) * alpha + (3 * k - 4) * (3 * k - 1) * alpha * alpha


def range_endpoints(k):
    _check_k(k)
    return Fraction(k, 3 * k - 1), Fraction(k - 1, 3 * k - 4)


def _in_k_range(k, n, s):
    return k * n <= (3 * k - 1) * s and (3 * k - 4) * s < (k - 1) * n


def _range_index(n, s):
    if 3 * s <= n:
        return BELOW_THIRD
    if 2 * s >= n:
        return AT_OR_ABOVE_HALF
    k = 2
    while not _in_k_range(k, n, s):
        k += 1
    return k


def range_index(n, s):
    """
    `'below-third'` if `s <= n/3`, `'at-or-above-half'` if `s >= n/2`, otherwise the unique `k >= 2` with
    `k/(3k-1) n <= s < (k-1)/(3k-4) n`.
    """
    if not 0 <= s <= n:
        raise FormulaException(f'need 0 <= s <= n, got n={n}, s={s}')
    return _range_index(n, s)


def trivial_bound(n, s):
    return n * s // 2


def trivial_bound_rational(n, s):
    return Fraction(n * s, 2)


def mantel_bound(n):
    return n * n // 4


def g_value(n, s):
    k = range_index(n, s)
    if k == BELOW_THIRD:
        return trivial_bound_rational(n, s)
    if k == AT_OR_ABOVE_HALF:
        return Fraction(mantel_bound(n))
    return Fraction(g_k_value(k, n, s))


def g_min_over_k(n, s):
    return min(g_k_value(k, n, s) for k in range(2, max(n, 2) + 1))


def f_conjectured(alpha):
    alpha = Fraction(alpha)
    if not 0 < alpha <= 1:
        raise FormulaException(f'alpha must lie in (0, 1], got {alpha}')
    k = _range_index(1, alpha)
    if k == BELOW_THIRD:
        return alpha
    if k == AT_OR_ABOVE_HALF:
        return Fraction(1, 2)
    return f_k_value(k, alpha)


def fact26_identity(k, n, s):
    """
    The two sides of `2 g_k(n, s) - ns = (kn - (3k-1)s)((k-1)n - (3k-4)s)`.

    The right side is a product of two factors that have opposite signs exactly inside the k-range, so
    `g_k(n, s) >= ns/2` outside it, with equality only at the endpoints.
    """
    _check_k(k)
    lhs = 2 * g_k_value(k, n, s) - n * s
    rhs = (k * n - (3 * k - 1) * s) * ((k - 1) * n - (3 * k - 4) * s)
    return lhs, rhs


def wagner_reduction_numbers(n, s):
    """
    Order and independence bound `(4n - 9s, n - 2s)` of the graph left after removing the three
    `(3s - n)`-sets of the triple structure. The removed part contributes `2s(3s-n) + (2n-5s)(3s-n)` edges,
    and together with `g_2` of the remainder this is exactly `g_3(n, s)`.
    """
    return 4 * n - 9 * s, n - 2 * s


def wagner_reduction_identity(n, s):
    t = 3 * s - n
    n_star, s_star = wagner_reduction_numbers(n, s)
    return 2 * s * t + (2 * n - 5 * s) * t + g2_value(n_star, s_star), g3_value(n, s)


def region_of(k):
    if k in (BELOW_THIRD, AT_OR_ABOVE_HALF):
        return k
    return K_RANGE


def formula_point(n, s):
    k = range_index(n, s)
    g = g_value(n, s)
    return FormulaPoint(
        n=n,
        s=s,
        region=region_of(k),
        k=k if region_of(k) == K_RANGE else None,
        g=g,
        g_floor=g.numerator // g.denominator,
        trivial=trivial_bound(n, s),
        mantel=mantel_bound(n),
        g2=g2_value(n, s),
        g3=g3_value(n, s),
    )


def formula_table(n_max, n_min=1):
    return [
        formula_point(n, s)
        for n in range(n_min, n_max + 1)
        for s in range(0, n + 1)
    ]


def density_point(alpha):
    alpha = Fraction(alpha)
    k = range_index(1, alpha) if 0 < alpha <= 1 else None
    return FormulaPoint(
        alpha=alpha,
        region=region_of(k),
        k=k if region_of(k) == K_RANGE else None,
        f=f_conjectured(alpha),
        trivial=alpha,
    )


def density_table(denominator):
    return [density_point(Fraction(p, denominator)) for p in range(1, denominator + 1)]
