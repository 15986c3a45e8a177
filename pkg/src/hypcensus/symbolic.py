"""Census values as polynomials in q with congruence corrections.

hyp(g, q) and sd(g, q) are polynomial in q once the residue of q modulo
small integers (divisors of 2g+2, 2g+1, 2g and their doubles) and the
characteristic are fixed.  A ConditionalPolynomial captures that: a
generic polynomial valid for every odd prime power q plus correction
terms switched on by guards.

A Guard is a conjunction of an optional congruence condition (q mod M
lies in a residue set) and an optional characteristic condition (p equal
to a prime, or p greater than a bound; the latter only occurs in
transcribed reference rows).  Polynomials are integer coefficient tuples
in ascending degree.

simplify() normalizes raw term lists into the compact reference shape:
it prunes residues no odd prime power can hit, folds families of equal
polynomials whose guards partition all admissible q into the generic
part, reduces moduli, and unions residue sets at the same modulus.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd

from .census import divisors, factor_prime_power, phi

Poly = tuple[int, ...]


def poly_norm(cs) -> Poly:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def poly_add(f: Poly, g: Poly) -> Poly:
    n = max(len(f), len(g))
    return poly_norm(
        [(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)]
    )


def poly_neg(f: Poly) -> Poly:
    return tuple(-c for c in f)


def poly_sub(f: Poly, g: Poly) -> Poly:
    return poly_add(f, poly_neg(g))


def poly_scale(k: int, f: Poly) -> Poly:
    if k == 0:
        return ()
    return tuple(k * c for c in f)


def poly_mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return poly_norm(out)


def poly_eval(f: Poly, q: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = acc * q + c
    return acc


def poly_divexact(num: Poly, den: Poly) -> Poly:
    """Exact polynomial division over the integers; asserts remainder 0."""
    num_l = list(num)
    den = poly_norm(den)
    assert den and den[-1] in (1, -1)
    out = [0] * max(0, len(num_l) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num_l[i + len(den) - 1] // den[-1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num_l[i + j] -= c * d
    assert all(v == 0 for v in num_l), "division must be exact"
    return poly_norm(out)


def poly_degree(f: Poly) -> int:
    """Degree, with the zero polynomial at -1."""
    return len(f) - 1


def poly_str(f: Poly, var: str = "q") -> str:
    if not f:
        return "0"
    parts = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            head = "" if mag == 1 else str(mag)
            body = f"{head}{var}" + (f"^{i}" if i > 1 else "")
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


ALWAYS = None  # placeholder for readability below


@dataclass(frozen=True)
class Guard:
    """Conjunction of a congruence condition on q and a characteristic
    condition on p.  mod=1 means no congruence condition."""

    mod: int = 1
    residues: frozenset[int] = frozenset({0})
    char_eq: int | None = None
    char_gt: int | None = None

    def holds(self, q: int, p: int) -> bool:
        if q % self.mod not in self.residues:
            return False
        if self.char_eq is not None and p != self.char_eq:
            return False
        if self.char_gt is not None and p <= self.char_gt:
            return False
        return True

    def is_always_true(self) -> bool:
        return self.mod == 1 and self.char_eq is None and self.char_gt is None

    def key(self):
        return (
            self.mod,
            tuple(sorted(self.residues)),
            self.char_eq or 0,
            self.char_gt or 0,
        )


def guard_congruence(mod: int, residues) -> Guard:
    return Guard(mod=mod, residues=frozenset(r % mod for r in residues))


def guard_char(p: int) -> Guard:
    return Guard(char_eq=p)


def guard_str(g: Guard) -> str:
    parts = []
    if g.mod > 1:
        rs = ",".join(str(r) for r in sorted(g.residues))
        parts.append(f"q = {rs} (mod {g.mod})")
    if g.char_eq is not None:
        parts.append(f"p = {g.char_eq}")
    if g.char_gt is not None:
        parts.append(f"p > {g.char_gt}")
    return "; ".join(parts) if parts else "always"


@dataclass(frozen=True)
class ConditionalPolynomial:
    generic: Poly = ()
    terms: tuple[tuple[Guard, Poly], ...] = ()

    def evaluate(self, q: int, p: int | None = None) -> int:
        if p is None:
            p, _ = factor_prime_power(q)
        total = poly_eval(self.generic, q)
        for g, f in self.terms:
            if g.holds(q, p):
                total += poly_eval(f, q)
        return total


# ---------------------------------------------------------------------------
# residue achievability: which residues mod M are hit by odd prime powers


_ACHIEVE_CACHE: dict[int, frozenset[int]] = {}


def achievable_residues(mod: int) -> frozenset[int]:
    """Residues mod `mod` attained by some odd prime power q >= 3.

    Coprime residues are attained by primes in the arithmetic progression;
    a residue sharing a factor with mod is attained only along powers of a
    single odd prime dividing mod.
    """
    hit = _ACHIEVE_CACHE.get(mod)
    if hit is not None:
        return hit
    out = {r for r in range(mod) if gcd(r, mod) == 1}
    # prime power chains for odd primes dividing mod
    m = mod
    while m % 2 == 0:
        m //= 2
    ell = 3
    primes = []
    while ell * ell <= m:
        if m % ell == 0:
            primes.append(ell)
            while m % ell == 0:
                m //= ell
        ell += 2
    if m > 1:
        primes.append(m)
    for ell in primes:
        x = ell % mod
        seen = set()
        while x not in seen:
            seen.add(x)
            out.add(x)
            x = x * ell % mod
    res = frozenset(out)
    _ACHIEVE_CACHE[mod] = res
    return res


def _achievable_in(mod: int, residues: frozenset[int]) -> frozenset[int]:
    return frozenset(r for r in residues if r in achievable_residues(mod))


# ---------------------------------------------------------------------------
# raw building blocks as polynomials in q


def a0_poly(n: int) -> Poly:
    assert n >= 1
    s1 = -1 if ((n + 1) // 2) % 2 else 1
    s2 = -1 if (n // 2) % 2 else 1
    num = [0] * (n + 2)
    num[n + 1] += 1
    num[n] -= 1
    num[1] -= s1
    num[0] += s2
    return poly_divexact(poly_norm(num), (1, 0, 1))


def a1_poly(n: int) -> Poly:
    assert n >= 1
    if n == 1:
        return (1,)
    out = [0] * n
    out[n - 1] = 1
    out[n - 2] = -1
    return tuple(out)


def a2_poly(n: int) -> Poly:
    assert n >= 1
    s = 1 if n % 2 else -1
    num = [0] * (n + 1)
    num[n] = 1
    num[0] = s
    return poly_divexact(poly_norm(num), (1, 1))


# ---------------------------------------------------------------------------
# raw census rows


def _raw_hyp_terms(g: int) -> tuple[Poly, list[tuple[Guard, Poly]]]:
    n = 2 * g + 2
    generic: Poly = poly_norm([0] * (2 * g - 1) + [2])
    terms: list[tuple[Guard, Poly]] = []
    for m in divisors(n):
        if m == 1:
            continue
        k = n // m
        if k % 2 == 0:
            terms.append((guard_congruence(m, {-1}), poly_scale(phi(m), a0_poly(k))))
        terms.append((guard_congruence(m, {1}), poly_scale(phi(m), a2_poly(k))))
        if _is_odd_prime(m):
            terms.append((guard_char(m), poly_scale(2, a1_poly(k))))
    for m in divisors(2 * g + 1):
        if m == 1:
            continue
        k = (2 * g + 1) // m
        terms.append((guard_congruence(m, {1}), poly_scale(2 * phi(m), a2_poly(k))))
        if _is_odd_prime(m):
            terms.append((guard_char(m), poly_scale(2, a1_poly(k))))
    for m in divisors(2 * g):
        if m == 1:
            continue
        k = (2 * g) // m
        # q = -1 mod m with (q+1)/m = k mod 2, i.e. q = k m - 1 mod 2m
        r = (k * m - 1) % (2 * m)
        if r % 2 == 1:
            terms.append((guard_congruence(2 * m, {r}), poly_scale(phi(m), a0_poly(k))))
        # q = 1 mod m with (q-1)/m even, i.e. q = 1 mod 2m
        terms.append((guard_congruence(2 * m, {1}), poly_scale(phi(m), a2_poly(k))))
    return generic, terms


def _raw_sd_terms(g: int) -> tuple[Poly, list[tuple[Guard, Poly]]]:
    terms: list[tuple[Guard, Poly]] = []
    for m in divisors(2 * g + 2):
        if m == 1:
            continue
        k = (2 * g + 2) // m
        if k % 2 == 1:
            terms.append((guard_congruence(m, {-1}), poly_scale(phi(m), a0_poly(k))))
    for m in divisors(2 * g):
        if m == 1:
            continue
        k = (2 * g) // m
        # q = -1 mod m with (q+1)/m = k+1 mod 2
        r = ((k + 1) * m - 1) % (2 * m)
        if r % 2 == 1:
            terms.append((guard_congruence(2 * m, {r}), poly_scale(phi(m), a0_poly(k))))
        # q = 1 mod m with (q-1)/m odd, i.e. q = m+1 mod 2m (m even only)
        r = (m + 1) % (2 * m)
        if r % 2 == 1:
            terms.append((guard_congruence(2 * m, {r}), poly_scale(phi(m), a2_poly(k))))
    return (), terms


def _is_odd_prime(m: int) -> bool:
    if m < 3 or m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# simplification


def _normalize_term(g: Guard, f: Poly):
    """Prune unreachable residues; None-out dead terms; detach congruences
    that hold for every admissible q."""
    f = poly_norm(f)
    if not f:
        return None
    if g.mod > 1:
        res = _achievable_in(g.mod, g.residues)
        if not res:
            return None
        if res == achievable_residues(g.mod):
            g = Guard(1, frozenset({0}), g.char_eq, g.char_gt)
        else:
            g = Guard(g.mod, res, g.char_eq, g.char_gt)
    return g, f


def _char_coverage(mod: int, ell: int) -> frozenset[int] | None:
    """Residues mod `mod` reachable by powers of ell, provided q = r (mod
    mod) with r in that set forces p = ell; None when that inference fails."""
    if mod % ell != 0:
        return None
    x = ell % mod
    seen = set()
    while x not in seen:
        seen.add(x)
        x = x * ell % mod
    for r in seen:
        d = gcd(r, mod)
        if d == 1:
            return None  # a coprime residue cannot pin the characteristic
        m = d
        while m % ell == 0:
            m //= ell
        if m != 1:
            return None
    return frozenset(seen)


def _try_cover_merge(terms):
    """Find a subset of same-polynomial terms whose guards partition all
    admissible q; fold it into the generic part.  Returns (new_terms,
    merged_poly) or None."""
    from itertools import combinations

    by_poly: dict[Poly, list[int]] = {}
    for i, (g, f) in enumerate(terms):
        if g.char_gt is None:
            by_poly.setdefault(f, []).append(i)
    for f, idxs in by_poly.items():
        if len(idxs) < 2:
            continue
        for size in range(len(idxs), 1, -1):
            for subset in combinations(idxs, size):
                mods = [terms[i][0].mod for i in subset]
                lcm = 1
                for m in mods:
                    lcm = lcm * m // gcd(lcm, m)
                for i in subset:
                    ell = terms[i][0].char_eq
                    if ell is not None:
                        lcm = lcm * ell // gcd(lcm, ell)
                cover = []
                ok = True
                for i in subset:
                    gd = terms[i][0]
                    if gd.char_eq is not None:
                        if gd.mod != 1:
                            ok = False
                            break
                        cov = _char_coverage(lcm, gd.char_eq)
                        if cov is None:
                            ok = False
                            break
                    else:
                        cov = frozenset(
                            r
                            for r in achievable_residues(lcm)
                            if r % gd.mod in gd.residues
                        )
                    cover.append(cov)
                if not ok:
                    continue
                union = set()
                disjoint = True
                for cov in cover:
                    if union & cov:
                        disjoint = False
                        break
                    union |= cov
                if disjoint and union == set(achievable_residues(lcm)):
                    rest = [t for i, t in enumerate(terms) if i not in subset]
                    return rest, f
    return None


def _reduce_modulus(g: Guard) -> Guard:
    """Smallest modulus presenting the same set of admissible q."""
    if g.mod == 1:
        return g
    best = g
    for mprime in divisors(g.mod):
        if mprime >= best.mod:
            continue
        mapped = frozenset(r % mprime for r in g.residues)
        back = frozenset(
            r for r in achievable_residues(g.mod) if r % mprime in mapped
        )
        if back == g.residues:
            mapped = _achievable_in(mprime, mapped)
            best = Guard(mprime, mapped, g.char_eq, g.char_gt)
    return best


def simplify(cp: ConditionalPolynomial) -> ConditionalPolynomial:
    generic = poly_norm(cp.generic)
    terms: list[tuple[Guard, Poly]] = []
    for g, f in cp.terms:
        norm = _normalize_term(g, f)
        if norm is None:
            continue
        g, f = norm
        if g.is_always_true():
            generic = poly_add(generic, f)
        else:
            terms.append((g, f))

    changed = True
    while changed:
        changed = False
        # identical guards merge by adding polynomials
        merged: dict = {}
        order: list = []
        for g, f in terms:
            k = g.key()
            if k in merged:
                merged[k] = (g, poly_add(merged[k][1], f))
                changed = True
            else:
                merged[k] = (g, f)
                order.append(k)
        terms = [merged[k] for k in order if poly_norm(merged[k][1])]
        # guard partitions folding into the generic part
        hit = _try_cover_merge(terms)
        if hit is not None:
            terms, f = hit
            generic = poly_add(generic, f)
            changed = True
            continue
        # modulus reduction
        reduced = []
        for g, f in terms:
            g2 = _reduce_modulus(g)
            if g2 != g:
                changed = True
            if g2.is_always_true():
                generic = poly_add(generic, f)
                changed = True
            else:
                reduced.append((g2, f))
        terms = reduced
        # same modulus, same characteristic condition, same polynomial:
        # union the residue sets
        bykey: dict = {}
        out = []
        for g, f in terms:
            k = (g.mod, g.char_eq, g.char_gt, f)
            if k in bykey:
                prev = bykey[k]
                bykey[k] = Guard(
                    g.mod, prev.residues | g.residues, g.char_eq, g.char_gt
                )
                changed = True
            else:
                bykey[k] = g
                out.append(k)
        terms = [(bykey[k], k[3]) for k in out]

    terms.sort(key=lambda t: (t[0].key(), t[1]))
    return ConditionalPolynomial(generic, tuple(terms))


_HYP_CACHE: dict[int, ConditionalPolynomial] = {}
_SD_CACHE: dict[int, ConditionalPolynomial] = {}


def symbolic_hyp(g: int) -> ConditionalPolynomial:
    """hyp(g, -) as a simplified conditional polynomial in q."""
    if g < 2:
        raise ValueError(f"genus must be >= 2, got {g}")
    hit = _HYP_CACHE.get(g)
    if hit is None:
        generic, terms = _raw_hyp_terms(g)
        hit = simplify(ConditionalPolynomial(generic, tuple(terms)))
        _HYP_CACHE[g] = hit
    return hit


def symbolic_sd(g: int) -> ConditionalPolynomial:
    """sd(g, -) as a simplified conditional polynomial in q."""
    if g < 2:
        raise ValueError(f"genus must be >= 2, got {g}")
    hit = _SD_CACHE.get(g)
    if hit is None:
        generic, terms = _raw_sd_terms(g)
        hit = simplify(ConditionalPolynomial(generic, tuple(terms)))
        _SD_CACHE[g] = hit
    return hit


# ---------------------------------------------------------------------------
# class restriction


def restrict_to_class(
    cp: ConditionalPolynomial, r: int, mod: int, assume_large_char: bool = False
) -> Poly:
    """Plain polynomial giving the value for q = r (mod mod).

    mod must be a multiple of every congruence modulus in cp so the class
    decides each congruence guard.  Characteristic guards are only decided
    under assume_large_char, which reads them for q in the class with p
    larger than every referenced bound: char_eq terms drop, char_gt terms
    apply.
    """
    out = cp.generic
    for g, f in cp.terms:
        if mod % g.mod != 0:
            raise ValueError(
                f"class modulus {mod} does not decide a guard with modulus {g.mod}"
            )
        if r % g.mod not in g.residues:
            continue
        if g.char_eq is not None:
            if not assume_large_char:
                raise ValueError("characteristic guard needs assume_large_char")
            continue
        if g.char_gt is not None and not assume_large_char:
            raise ValueError("characteristic guard needs assume_large_char")
        out = poly_add(out, f)
    return out


def congruence_lcm(cp: ConditionalPolynomial, base: int = 1) -> int:
    """lcm of base and every congruence modulus appearing in cp."""
    out = base
    for g, _ in cp.terms:
        out = out * g.mod // gcd(out, g.mod)
    return out


def max_char_term_degree(cp: ConditionalPolynomial) -> int:
    """Largest degree among terms guarded by a characteristic condition."""
    degs = [poly_degree(f) for g, f in cp.terms if g.char_eq is not None]
    return max(degs, default=-1)


# ---------------------------------------------------------------------------
# rendering and JSON


def render(cp: ConditionalPolynomial, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(cp_to_json_dict(cp), indent=2)
    pieces = [poly_str(cp.generic)]
    for g, f in cp.terms:
        pieces.append(f"[{poly_str(f)}]_{{{guard_str(g)}}}")
    joined = "  +  ".join(pieces)
    if fmt == "text":
        return joined
    if fmt == "markdown":
        return "`" + joined + "`"
    raise ValueError(f"unknown format {fmt!r}")


def cp_to_json_dict(cp: ConditionalPolynomial) -> dict:
    return {
        "generic": list(cp.generic),
        "terms": [
            {
                "mod": g.mod,
                "residues": sorted(g.residues),
                "char_eq": g.char_eq,
                "char_gt": g.char_gt,
                "poly": list(f),
            }
            for g, f in cp.terms
        ],
    }


def cp_from_json_dict(d: dict) -> ConditionalPolynomial:
    terms = []
    for t in d.get("terms", []):
        terms.append(
            (
                Guard(
                    t.get("mod", 1),
                    frozenset(t.get("residues", [0])),
                    t.get("char_eq"),
                    t.get("char_gt"),
                ),
                poly_norm(t.get("poly", [])),
            )
        )
    return ConditionalPolynomial(poly_norm(d.get("generic", [])), tuple(terms))
