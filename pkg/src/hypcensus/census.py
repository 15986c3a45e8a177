"""Exact counts of hyperelliptic curve classes over F_q, q odd.

A genus-g curve is a pair (square class of the quadratic twist, rational
(2g+2)-set of branch points on the projective line) up to the fractional
linear action, so the count is a Burnside sum over the action's conjugacy
classes.  Everything here is closed-form integer arithmetic in g and q;
no field elements are touched.

The building blocks a0/a1/a2 count n-sets weighted by the sign character
for the three nontrivial element kinds (order m dividing q+1, order p,
order m dividing q-1); a_p1 is the plain number of rational n-sets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .field import is_prime


def divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def phi(n: int) -> int:
    count = 0
    for k in range(1, n + 1):
        a, b = k, n
        while b:
            a, b = b, a % b
        if a == 1:
            count += 1
    return count


def factor_prime_power(q: int) -> tuple[int, int]:
    """q -> (p, e) with q = p^e, p an odd prime; rejects anything else."""
    if q < 3 or q % 2 == 0:
        raise ValueError(f"q must be an odd prime power >= 3, got {q}")
    p = 3
    while p * p <= q:
        if q % p == 0:
            break
        p += 2
    else:
        return q, 1
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise ValueError(f"q must be a prime power, got {q}")
    return p, e


def odd_prime_powers(limit: int) -> list[tuple[int, int]]:
    """All (q, p) with q = p^e an odd prime power, 3 <= q <= limit."""
    out = []
    for q in range(3, limit + 1, 2):
        try:
            p, _ = factor_prime_power(q)
        except ValueError:
            continue
        out.append((q, p))
    return out


def _exact_int(x) -> int:
    if isinstance(x, Fraction):
        assert x.denominator == 1, f"non-integer value {x}"
        return int(x)
    return int(x)


def a0(n: int, q) -> int:
    """Signed n-set count for an element whose order divides q + 1.

    Zero unless n is a positive integer.  Note a0(1, q) = 1 for every q.
    """
    if n != int(n) or n < 1:
        return 0
    n = int(n)
    s1 = -1 if ((n + 1) // 2) % 2 else 1
    s2 = -1 if (n // 2) % 2 else 1
    num = q ** (n + 1) - q**n - s1 * q + s2
    val = Fraction(num) / (q**2 + 1)
    return _exact_int(val)


def a1(n: int, q) -> int:
    """Signed n-set count for an element of order p (the characteristic)."""
    if n != int(n) or n < 1:
        return 0
    n = int(n)
    if n == 1:
        return 1
    return _exact_int(q ** (n - 1) - q ** (n - 2))


def a2(n: int, q) -> int:
    """Signed n-set count for an element whose order divides q - 1."""
    if n != int(n) or n < 1:
        return 0
    n = int(n)
    s = 1 if n % 2 else -1
    val = Fraction(q**n + s) / (q + 1)
    return _exact_int(val)


def a_p1(n: int, q) -> int:
    """Number of rational n-sets on the projective line.

    q^n - q^(n-2) for n >= 3; the small cases are q + 1 and q^2.
    """
    if n != int(n) or n < 1:
        return 0
    n = int(n)
    if n == 1:
        return _exact_int(q + 1)
    if n == 2:
        return _exact_int(q**2)
    return _exact_int(q**n - q ** (n - 2))


def _adiv(fn, n: int, m: int, q: int) -> int:
    # fn(n / m) with the convention that a non-integral argument counts 0
    return fn(n // m, q) if n % m == 0 else 0


def plain_fixed_count(q: int, n: int, kind: str, m: int) -> int:
    """Rational n-sets fixed by a nonidentity class of the given kind.

    kind "C" has order m dividing q - 1, kind "A" order m dividing q + 1,
    kind "B" order m = p.  Valid for n >= 3; at n = 1, 2 the signed counts
    miss degenerate configurations such as the fixed pair itself.
    """
    if n < 3:
        raise ValueError(f"fixed-count formulas need n >= 3, got {n}")
    if kind == "C":
        assert m > 1 and (q - 1) % m == 0
        return (q - 1) * (
            _adiv(a2, n, m, q) + 2 * _adiv(a2, n - 1, m, q) + _adiv(a2, n - 2, m, q)
        )
    if kind == "B":
        return q * (_adiv(a1, n, m, q) + _adiv(a1, n - 1, m, q))
    if kind == "A":
        assert m > 1 and (q + 1) % m == 0
        return (q + 1) * (_adiv(a0, n, m, q) + _adiv(a0, n - 2, m, q))
    raise ValueError(f"unknown kind {kind!r}")


def twisted_fixed_count(q: int, n: int, kind: str, m: int) -> int:
    """Fixed (twist, n-set) pairs of a nonidentity class; even n >= 4 only."""
    if n < 4 or n % 2 != 0:
        raise ValueError(f"twisted fixed counts need even n >= 4, got {n}")
    if kind == "C":
        assert m > 1 and (q - 1) % m == 0
        extra = _adiv(a2, n - 2, m, q) if ((q - 1) // m) % 2 == 0 else 0
        return 2 * (q - 1) * (_adiv(a2, n, m, q) + 2 * _adiv(a2, n - 1, m, q) + extra)
    if kind == "B":
        return 2 * q * (_adiv(a1, n, m, q) + _adiv(a1, n - 1, m, q))
    if kind == "A":
        assert m > 1 and (q + 1) % m == 0
        t1 = a0(n // m, q) if n % m == 0 and (n // m) % 2 == 0 else 0
        t2 = 0
        if (n - 2) % m == 0 and ((n - 2) // m - (q + 1) // m) % 2 == 0:
            t2 = a0((n - 2) // m, q)
        return 2 * (q + 1) * (t1 + t2)
    raise ValueError(f"unknown kind {kind!r}")


def _validate(g: int, q: int) -> tuple[int, int]:
    if g < 2:
        raise ValueError(f"genus must be >= 2, got {g}")
    return factor_prime_power(q)


def hyp_components(g: int, q: int) -> tuple[int, int, int, int]:
    """The four conjugacy-kind contributions (h_a, h_b, h_c, h_d) to hyp.

    h_d is the identity term 2q^(2g-1); h_a, h_b, h_c gather the elements
    of order dividing q+1, of order p, and of order dividing q-1.  All four
    are integers and sum to hyp(g, q).
    """
    p, _ = _validate(g, q)
    h_a = 0
    h_b = 0
    h_c = 0
    h_d = 2 * q ** (2 * g - 1)
    for m in divisors(2 * g + 2):
        if m == 1:
            continue
        k = (2 * g + 2) // m
        if (q + 1) % m == 0 and k % 2 == 0:
            h_a += phi(m) * a0(k, q)
        if (q - 1) % m == 0:
            h_c += phi(m) * a2(k, q)
        if m == p:
            h_b += 2 * a1(k, q)
    for m in divisors(2 * g + 1):
        if m == 1:
            continue
        k = (2 * g + 1) // m
        if (q - 1) % m == 0:
            h_c += 2 * phi(m) * a2(k, q)
        if m == p:
            h_b += 2 * a1(k, q)
    for m in divisors(2 * g):
        if m == 1:
            continue
        k = (2 * g) // m
        if (q + 1) % m == 0 and (k - (q + 1) // m) % 2 == 0:
            h_a += phi(m) * a0(k, q)
        if (q - 1) % m == 0 and ((q - 1) // m) % 2 == 0:
            h_c += phi(m) * a2(k, q)
    return h_a, h_b, h_c, h_d


def hyp(g: int, q: int) -> int:
    """Number of F_q-isomorphism classes of genus-g hyperelliptic curves."""
    h_a, h_b, h_c, h_d = hyp_components(g, q)
    return h_a + h_b + h_c + h_d


def y_nset_classes(g: int, q: int) -> int:
    """Number of (2g+2)-set orbits on the projective line (untwisted count)."""
    total = hyp(g, q) + sd(g, q)
    assert total % 2 == 0
    return total // 2


def sd(g: int, q: int) -> int:
    """Number of self-dual classes: curves isomorphic to their own twist."""
    _validate(g, q)
    total = 0
    for m in divisors(2 * g + 2):
        if m == 1:
            continue
        k = (2 * g + 2) // m
        if (q + 1) % m == 0 and k % 2 == 1:
            total += phi(m) * a0(k, q)
    for m in divisors(2 * g):
        if m == 1:
            continue
        k = (2 * g) // m
        if (q + 1) % m == 0 and (k - (q + 1) // m) % 2 == 1:
            total += phi(m) * a0(k, q)
        if (q - 1) % m == 0 and ((q - 1) // m) % 2 == 1:
            total += phi(m) * a2(k, q)
    return total


@dataclass(frozen=True)
class CensusReport:
    """One (g, q) census row with the component breakdown."""

    g: int
    q: int
    p: int
    e: int
    hyp: int
    sd: int
    y: int
    h_a: int
    h_b: int
    h_c: int
    h_d: int

    def to_json_dict(self) -> dict:
        # counts as decimal strings: they overflow doubles long before g=30
        return {
            "g": self.g,
            "q": self.q,
            "p": self.p,
            "e": self.e,
            "hyp": str(self.hyp),
            "sd": str(self.sd),
            "y": str(self.y),
            "components": {
                "h_a": str(self.h_a),
                "h_b": str(self.h_b),
                "h_c": str(self.h_c),
                "h_d": str(self.h_d),
            },
        }


def census_report(g: int, q: int) -> CensusReport:
    p, e = _validate(g, q)
    h_a, h_b, h_c, h_d = hyp_components(g, q)
    h = h_a + h_b + h_c + h_d
    s = sd(g, q)
    assert (h + s) % 2 == 0
    return CensusReport(g, q, p, e, h, s, (h + s) // 2, h_a, h_b, h_c, h_d)


def report_json(reports: list[CensusReport]) -> str:
    return json.dumps([r.to_json_dict() for r in reports], indent=2)
