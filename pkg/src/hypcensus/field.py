"""Exact arithmetic in F_q, q = p^e with p an odd prime.

Field elements are plain ints in [0, q).  The base-p digits of the int,
least significant first, are the coordinates of the element in the power
basis 1, x, x^2, ... of the defining modulus.  For prime fields this makes
the element code equal to the residue it represents.  Keeping elements as
ints means they are hashable, cheap to store in bulk arrays, and carry no
hidden context; every operation takes the field context explicitly.

Polynomials over a field are tuples of element codes in ascending degree
order with no trailing zeros; the empty tuple is the zero polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FieldCtx:
    """Immutable description of one concrete finite field."""

    p: int
    e: int
    q: int
    modulus: tuple[int, ...]  # monic, ascending coefficients, length e + 1


_FIELD_CACHE: dict[tuple[int, int], FieldCtx] = {}
_REDROW_CACHE: dict[FieldCtx, list[list[int]]] = {}
_MUL_CACHE: dict[FieldCtx, list[list[int]]] = {}
_INV_CACHE: dict[FieldCtx, list[int]] = {}
_GEN_CACHE: dict[FieldCtx, int] = {}
_EXT_CACHE: dict[tuple[FieldCtx, int], tuple[FieldCtx, tuple[int, ...]]] = {}

# mul() builds a full q x q lookup table below this size; beyond it the
# digit convolution path is used per call.
_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def to_digits(ctx: FieldCtx, x: int) -> list[int]:
    """Base-p digits of x, least significant first, padded to length e."""
    ds = []
    for _ in range(ctx.e):
        x, r = divmod(x, ctx.p)
        ds.append(r)
    return ds


def from_digits(ctx: FieldCtx, ds) -> int:
    x = 0
    for d in reversed(list(ds)):
        x = x * ctx.p + d % ctx.p
    return x


def _poly_mulmod_p(a: list[int], b: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    # schoolbook product of digit vectors, reduced mod the monic modulus
    e = len(mod) - 1
    conv = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                conv[i + j] = (conv[i + j] + ai * bj) % p
    for k in range(len(conv) - 1, e - 1, -1):
        c = conv[k]
        if c:
            conv[k] = 0
            for j in range(e):
                conv[k - e + j] = (conv[k - e + j] - c * mod[j]) % p
    out = conv[:e]
    out += [0] * (e - len(out))
    return out


def _irreducible(p: int, coeffs: tuple[int, ...]) -> bool:
    """Irreducibility of a monic polynomial over F_p.

    Checks x^(p^e) == x mod f together with gcd(x^(p^(e/l)) - x, f) = 1
    for every prime l dividing e.
    """
    e = len(coeffs) - 1
    if e == 1:
        return True

    def powx(k: int) -> list[int]:
        # x^(p^k) mod coeffs via repeated p-th powers
        cur = [0, 1] + [0] * (e - 2) if e >= 2 else [0]
        for _ in range(k):
            acc = [1] + [0] * (e - 1)
            base = cur
            n = p
            while n:
                if n & 1:
                    acc = _poly_mulmod_p(acc, base, coeffs, p)
                base = _poly_mulmod_p(base, base, coeffs, p)
                n >>= 1
            cur = acc
        return cur

    xq = powx(e)
    if xq != [0, 1] + [0] * (e - 2):
        return False
    ell = 2
    m = e
    primes = set()
    while m > 1:
        if m % ell == 0:
            primes.add(ell)
            while m % ell == 0:
                m //= ell
        ell += 1
    for ell in primes:
        h = powx(e // ell)
        h = [(hv - (1 if i == 1 else 0)) % p for i, hv in enumerate(h)]
        # gcd(h, coeffs) over F_p; coeffs is irreducible iff gcd is 1
        a = [c % p for c in coeffs]
        b = list(h)
        while any(b):
            while b and b[-1] == 0:
                b.pop()
            if not b:
                break
            lead = b[-1]
            linv = pow(lead, p - 2, p)
            while len(a) >= len(b) and any(a):
                while a and a[-1] == 0:
                    a.pop()
                if len(a) < len(b):
                    break
                f = a[-1] * linv % p
                off = len(a) - len(b)
                for i, bv in enumerate(b):
                    a[off + i] = (a[off + i] - f * bv) % p
            a, b = b, a
        while a and a[-1] == 0:
            a.pop()
        if len(a) != 1:
            return False
    return True


def make_field(p: int, e: int) -> FieldCtx:
    """Field context for F_{p^e}, p odd prime, e >= 1.

    The modulus is the first monic irreducible of degree e in integer-code
    order of its non-leading coefficients (constant coefficient is the low
    digit), so repeated calls always build the same field.
    """
    key = (p, e)
    hit = _FIELD_CACHE.get(key)
    if hit is not None:
        return hit
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if e < 1:
        raise ValueError(f"e must be >= 1, got {e}")
    if e == 1:
        ctx = FieldCtx(p, 1, p, (0, 1))
    else:
        ctx = None
        for code in range(p**e):
            lower = []
            c = code
            for _ in range(e):
                c, r = divmod(c, p)
                lower.append(r)
            coeffs = tuple(lower) + (1,)
            if _irreducible(p, coeffs):
                ctx = FieldCtx(p, e, p**e, coeffs)
                break
        assert ctx is not None
    _FIELD_CACHE[key] = ctx
    return ctx


def add(ctx: FieldCtx, x: int, y: int) -> int:
    if ctx.e == 1:
        return (x + y) % ctx.p
    p = ctx.p
    out = 0
    mult = 1
    for _ in range(ctx.e):
        out += (x % p + y % p) % p * mult
        x //= p
        y //= p
        mult *= p
    return out


def neg(ctx: FieldCtx, x: int) -> int:
    if ctx.e == 1:
        return (-x) % ctx.p
    p = ctx.p
    out = 0
    mult = 1
    for _ in range(ctx.e):
        out += (-x % p) % p * mult
        x //= p
        mult *= p
    return out


def sub(ctx: FieldCtx, x: int, y: int) -> int:
    return add(ctx, x, neg(ctx, y))


def _mul_table(ctx: FieldCtx) -> list[list[int]]:
    tab = _MUL_CACHE.get(ctx)
    if tab is None:
        tab = [[_mul_raw(ctx, x, y) for y in range(ctx.q)] for x in range(ctx.q)]
        _MUL_CACHE[ctx] = tab
    return tab


def _mul_raw(ctx: FieldCtx, x: int, y: int) -> int:
    if ctx.e == 1:
        return x * y % ctx.p
    ds = _poly_mulmod_p(to_digits(ctx, x), to_digits(ctx, y), ctx.modulus, ctx.p)
    return from_digits(ctx, ds)


def mul(ctx: FieldCtx, x: int, y: int) -> int:
    if ctx.e == 1:
        return x * y % ctx.p
    if ctx.q <= _TABLE_LIMIT:
        return _mul_table(ctx)[x][y]
    return _mul_raw(ctx, x, y)


def pw(ctx: FieldCtx, x: int, k: int) -> int:
    """x^k for k >= 0 (0^0 = 1)."""
    if ctx.e == 1:
        return pow(x, k, ctx.p)
    acc = 1
    base = x
    while k:
        if k & 1:
            acc = mul(ctx, acc, base)
        base = mul(ctx, base, base)
        k >>= 1
    return acc


def inv(ctx: FieldCtx, x: int) -> int:
    if x == 0:
        raise ZeroDivisionError("inverse of 0")
    if ctx.e == 1:
        return pow(x, ctx.p - 2, ctx.p)
    if ctx.q <= _TABLE_LIMIT:
        cache = _INV_CACHE.get(ctx)
        if cache is None:
            cache = [0] * ctx.q
            for v in range(1, ctx.q):
                cache[v] = pw(ctx, v, ctx.q - 2)
            _INV_CACHE[ctx] = cache
        return cache[x]
    return pw(ctx, x, ctx.q - 2)


def div(ctx: FieldCtx, x: int, y: int) -> int:
    return mul(ctx, x, inv(ctx, y))


def is_square(x: int, ctx: FieldCtx) -> bool:
    """Euler criterion; rejects 0 since 0 is neither square nor non-square here."""
    if x == 0:
        raise ValueError("is_square is undefined at 0")
    return pw(ctx, x, (ctx.q - 1) // 2) == 1


def chi(x: int, ctx: FieldCtx) -> int:
    """Quadratic character on nonzero elements: +1 on squares, -1 otherwise."""
    return 1 if is_square(x, ctx) else -1


def mult_generator(ctx: FieldCtx) -> int:
    """Least element code generating the multiplicative group."""
    hit = _GEN_CACHE.get(ctx)
    if hit is not None:
        return hit
    n = ctx.q - 1
    m = n
    primes = []
    ell = 2
    while ell * ell <= m:
        if m % ell == 0:
            primes.append(ell)
            while m % ell == 0:
                m //= ell
        ell += 1
    if m > 1:
        primes.append(m)
    for x in range(1, ctx.q):
        if all(pw(ctx, x, n // ell) != 1 for ell in primes):
            _GEN_CACHE[ctx] = x
            return x
    raise AssertionError("no generator found")


def frobenius(x: int, ctx: FieldCtx, base_q: int) -> int:
    """The base_q-power Frobenius of x inside ctx."""
    return pw(ctx, x, base_q)


def extend(base: FieldCtx, d: int) -> tuple[FieldCtx, tuple[int, ...]]:
    """Degree-d extension of base, d >= 2.

    Returns (ext, emb) where emb is a lookup tuple of length base.q taking
    each base element code to its image in ext.  The embedding sends the
    power-basis generator of base to the least root of base.modulus in ext,
    so it is deterministic and compatible across repeated calls.
    """
    if d < 2:
        raise ValueError(f"extension degree must be >= 2, got {d}")
    key = (base, d)
    hit = _EXT_CACHE.get(key)
    if hit is not None:
        return hit
    ext = make_field(base.p, base.e * d)
    if base.e == 1:
        emb = tuple(range(base.q))
    else:
        root = None
        for cand in range(ext.q):
            acc = 0
            for c in reversed(base.modulus):
                acc = add(ext, mul(ext, acc, cand), c)
            if acc == 0:
                root = cand
                break
        assert root is not None, "modulus must split in the extension"
        emb_list = []
        for x in range(base.q):
            img = 0
            rp = 1
            for dgt in to_digits(base, x):
                if dgt:
                    img = add(ext, img, mul(ext, dgt, rp))
                rp = mul(ext, rp, root)
            emb_list.append(img)
        emb = tuple(emb_list)
    _EXT_CACHE[key] = (ext, emb)
    return ext, emb


# ---------------------------------------------------------------------------
# polynomials over a field: tuples of codes, ascending degree, no trailing 0s


def pnorm(f) -> tuple[int, ...]:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def padd(ctx: FieldCtx, f, g) -> tuple[int, ...]:
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out.append(add(ctx, a, b))
    return pnorm(out)


def pscale(ctx: FieldCtx, c: int, f) -> tuple[int, ...]:
    if c == 0:
        return ()
    return pnorm([mul(ctx, c, a) for a in f])


def pmul(ctx: FieldCtx, f, g) -> tuple[int, ...]:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = add(ctx, out[i + j], mul(ctx, a, b))
    return pnorm(out)


def pmod(ctx: FieldCtx, f, g) -> tuple[int, ...]:
    g = pnorm(g)
    if not g:
        raise ZeroDivisionError("poly mod by zero")
    r = list(f)
    dg = len(g) - 1
    ginv = inv(ctx, g[-1])
    while len(pnorm(r)) - 1 >= dg and pnorm(r):
        r = list(pnorm(r))
        if len(r) - 1 < dg:
            break
        c = mul(ctx, r[-1], ginv)
        off = len(r) - 1 - dg
        for i, b in enumerate(g):
            r[off + i] = sub(ctx, r[off + i], mul(ctx, c, b))
    return pnorm(r)


def pgcd(ctx: FieldCtx, f, g) -> tuple[int, ...]:
    """Monic gcd."""
    a, b = pnorm(f), pnorm(g)
    while b:
        a, b = b, pmod(ctx, a, b)
    if a:
        a = pscale(ctx, inv(ctx, a[-1]), a)
    return a


def pderiv(ctx: FieldCtx, f) -> tuple[int, ...]:
    out = []
    for i in range(1, len(f)):
        c = mul(ctx, i % ctx.p, f[i])
        out.append(c)
    return pnorm(out)


def peval(ctx: FieldCtx, f, x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = add(ctx, mul(ctx, acc, x), c)
    return acc


def is_squarefree_poly(ctx: FieldCtx, f) -> bool:
    f = pnorm(f)
    if not f:
        return False
    if len(f) == 1:
        return True
    return len(pgcd(ctx, f, pderiv(ctx, f))) == 1
