"""Independent reference computations used only by the tests.

Coefficients here come from truncated power-series arithmetic on exact
rationals (exp-type series, division, integration of a derivative), never
from the closed forms the package uses.
"""

from fractions import Fraction
from math import comb, factorial

DEGREE = 24


def exp_like(sign_even=1, sign_odd=1, parity=None, n=DEGREE):
    out = []
    for k in range(n + 1):
        if parity == "even" and k % 2:
            out.append(Fraction(0))
            continue
        if parity == "odd" and not k % 2:
            out.append(Fraction(0))
            continue
        sign = 1
        if k % 2 == 0 and (k // 2) % 2 == 1:
            sign = sign_even
        if k % 2 == 1 and (k // 2) % 2 == 1:
            sign = sign_odd
        out.append(Fraction(sign, factorial(k)))
    return out


def sin_series(n=DEGREE):
    return exp_like(sign_odd=-1, parity="odd", n=n)


def cos_series(n=DEGREE):
    return exp_like(sign_even=-1, parity="even", n=n)


def sinh_series(n=DEGREE):
    return exp_like(parity="odd", n=n)


def cosh_series(n=DEGREE):
    return exp_like(parity="even", n=n)


def shift_down(a):
    """a(x)/x for a series with a_0 = 0."""
    assert a[0] == 0
    return a[1:] + [Fraction(0)]


def shift_up(a):
    return [Fraction(0)] + a[:-1]


def multiply(a, b):
    n = len(a)
    return [sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n)]


def divide(a, b):
    """a/b by long division; b_0 must be nonzero."""
    q = []
    for k in range(len(a)):
        acc = a[k] - sum((q[i] * b[k - i] for i in range(k)), Fraction(0))
        q.append(acc / b[0])
    return q


def integrate(a):
    """Antiderivative vanishing at 0, truncated to the same length."""
    return [Fraction(0)] + [a[k] / (k + 1) for k in range(len(a) - 1)]


def binomial_half(sign, n=DEGREE):
    """(1 + sign*x^2)^(-1/2) from the generalized binomial theorem."""
    out = [Fraction(0)] * (n + 1)
    c = Fraction(1)
    for j in range(n // 2 + 1):
        out[2 * j] = c * sign**j
        c = c * Fraction(-1, 2) - c * j
        c /= j + 1
    return out


def geometric_sq(sign, n=DEGREE):
    """1/(1 + sign*x^2)."""
    out = [Fraction(0)] * (n + 1)
    for j in range(n // 2 + 1):
        out[2 * j] = Fraction((-sign) ** j)
    return out


def reference_series(name, n=DEGREE):
    s, c, sh, ch = sin_series(n + 1), cos_series(n + 1), sinh_series(n + 1), cosh_series(n + 1)
    table = {
        "sin": lambda: s,
        "cos": lambda: c,
        "sinh": lambda: sh,
        "cosh": lambda: ch,
        "tan": lambda: divide(s, c),
        "sec": lambda: divide([Fraction(1)] + [Fraction(0)] * (n + 1), c),
        "sech": lambda: divide([Fraction(1)] + [Fraction(0)] * (n + 1), ch),
        "x_cot_x": lambda: divide(c, shift_down(s)),
        "x_over_sin_x": lambda: divide([Fraction(1)] + [Fraction(0)] * (n + 1), shift_down(s)),
        "x_over_sinh_x": lambda: divide([Fraction(1)] + [Fraction(0)] * (n + 1), shift_down(sh)),
        "arctan": lambda: integrate(geometric_sq(+1, n + 1)),
        "artanh": lambda: integrate(geometric_sq(-1, n + 1)),
        "arcsin": lambda: integrate(binomial_half(-1, n + 1)),
        "arsinh": lambda: integrate(binomial_half(+1, n + 1)),
    }
    return table[name]()[: n + 1]


def bernoulli_signed(m):
    """Standard B_0..B_m from sum_{j<=m} C(m+1, j) B_j = 0."""
    b = [Fraction(1)]
    for k in range(1, m + 1):
        b.append(-sum((comb(k + 1, j) * b[j] for j in range(k)), Fraction(0)) / (k + 1))
    return b


def bernoulli_positive_ref(count):
    b = bernoulli_signed(2 * count)
    return [abs(b[2 * k]) for k in range(1, count + 1)]


def euler_positive_ref(count):
    sec = reference_series("sec", 2 * count)
    return [sec[2 * k] * factorial(2 * k) for k in range(1, count + 1)]


def wallis_brute(m):
    """Integral of sin^m over [0, pi/2] as (rational, power of pi/2) by reduction."""
    if m == 0:
        return Fraction(1), 1
    if m == 1:
        return Fraction(1), 0
    value, pi_power = wallis_brute(m - 2)
    return value * Fraction(m - 1, m), pi_power
