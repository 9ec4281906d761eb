"""Exact univariate polynomial arithmetic over the rationals.

A polynomial is a list of ``Fraction`` coefficients, constant term first,
with no trailing zeros; ``[]`` is the zero polynomial.  Everything here is
exact: no floating point is used anywhere, so these routines are safe in
certification paths.  Real-root counting and isolation go through Sturm
sequences with rational interval endpoints.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import count

Poly = list  # list[Fraction], constant term first


def poly(coefficients) -> Poly:
    """Normalize a coefficient sequence into canonical form."""
    p = [Fraction(c) for c in coefficients]
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Poly) -> int:
    """Degree, with the convention deg(0) = -1."""
    return len(p) - 1


def is_zero(p: Poly) -> bool:
    return not p


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return out


def neg(p: Poly) -> Poly:
    return [-c for c in p]


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def scale(p: Poly, c) -> Poly:
    c = Fraction(c)
    if c == 0:
        return []
    return [c * a for a in p]


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    while out and out[-1] == 0:
        out.pop()
    return out


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = p[:]
    quot = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    dq = degree(q)
    lead = q[-1]
    while degree(r) >= dq and r:
        k = degree(r) - dq
        f = r[-1] / lead
        quot[k] = f
        for i, c in enumerate(q):
            r[i + k] -= f * c
        while r and r[-1] == 0:
            r.pop()
    while quot and quot[-1] == 0:
        quot.pop()
    return quot, r


def monic(p: Poly) -> Poly:
    if not p:
        return []
    lead = p[-1]
    return [c / lead for c in p]


def gcd_poly(p: Poly, q: Poly) -> Poly:
    a, b = p[:], q[:]
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, r
    return monic(a)


def ext_gcd_poly(p: Poly, q: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (g, u, v) with u*p + v*q = g = gcd(p, q), g monic."""
    a, b = p[:], q[:]
    ua, va = poly([1]), poly([])
    ub, vb = poly([]), poly([1])
    while b:
        quot, r = divmod_poly(a, b)
        a, b = b, r
        ua, ub = ub, sub(ua, mul(quot, ub))
        va, vb = vb, sub(va, mul(quot, vb))
    if not a:
        return [], ua, va
    lead = a[-1]
    return monic(a), scale(ua, 1 / lead), scale(va, 1 / lead)


def derivative(p: Poly) -> Poly:
    return [i * c for i, c in enumerate(p)][1:]


def eval_at(p: Poly, x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def eval_interval(p: Poly, lo, hi) -> tuple[Fraction, Fraction]:
    """Bounds of p over [lo, hi] by interval Horner (a valid enclosure)."""
    lo, hi = Fraction(lo), Fraction(hi)
    alo = ahi = Fraction(0)
    for c in reversed(p):
        prods = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(prods) + c, max(prods) + c
    return alo, ahi


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [p[:], derivative(p)]
    while chain[-1]:
        _, r = divmod_poly(chain[-2], chain[-1])
        if not r:
            break
        chain.append(neg(r))
    return [q for q in chain if q]


def _sign_changes(values) -> int:
    changes = 0
    prev = 0
    for v in values:
        s = (v > 0) - (v < 0)
        if s == 0:
            continue
        if prev and s != prev:
            changes += 1
        prev = s
    return changes


def _variations_at(chain, x) -> int:
    return _sign_changes(eval_at(q, x) for q in chain)


def _variations_at_inf(chain, positive: bool) -> int:
    signs = []
    for q in chain:
        s = (q[-1] > 0) - (q[-1] < 0)
        if not positive and degree(q) % 2 == 1:
            s = -s
        signs.append(s)
    return _sign_changes(signs)


def count_real_roots(p: Poly, lo=None, hi=None) -> int:
    """Distinct real roots in (lo, hi]; None endpoints mean -inf / +inf.

    Requires p squarefree when counting with finite endpoints at roots;
    the defining polynomials handled here are irreducible, hence squarefree.
    """
    chain = sturm_chain(p)
    va = _variations_at_inf(chain, False) if lo is None else _variations_at(chain, lo)
    vb = _variations_at_inf(chain, True) if hi is None else _variations_at(chain, hi)
    return va - vb


def cauchy_bound(p: Poly) -> Fraction:
    if degree(p) < 1:
        return Fraction(1)
    lead = abs(p[-1])
    return 1 + max(abs(c) for c in p[:-1]) / lead


def isolate_real_roots(p: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational intervals (lo, hi], one distinct real root each."""
    total = count_real_roots(p)
    if total == 0:
        return []
    bound = cauchy_bound(p)
    chain = sturm_chain(p)

    def var(x):
        return _variations_at(chain, x)

    out = []
    stack = [(-bound, bound, var(-bound), var(bound))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        k = vlo - vhi
        if k == 0:
            continue
        if k == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        vmid = var(mid)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi, vmid, vhi))
    out.sort()
    assert len(out) == total
    return out


def refine_root_interval(p: Poly, lo, hi) -> tuple[Fraction, Fraction]:
    """Halve an isolating interval (lo, hi] containing exactly one root."""
    mid = (Fraction(lo) + Fraction(hi)) / 2
    if eval_at(p, mid) == 0:
        # Rational root hit exactly; shrink around it.
        width = (hi - lo) / 4
        return mid - width, mid + width
    if count_real_roots(p, lo, mid) == 1:
        return Fraction(lo), mid
    return mid, Fraction(hi)


def sign_at_root(p: Poly, g: Poly, lo, hi) -> int:
    """Exact sign of g at the unique root of p in (lo, hi].

    Requires g(root) != 0, which holds whenever p is irreducible and g is a
    nonzero polynomial of degree < deg p.  Refines the isolating interval
    until interval evaluation of g resolves the sign.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    while True:
        glo, ghi = eval_interval(g, lo, hi)
        if glo > 0:
            return 1
        if ghi < 0:
            return -1
        lo, hi = refine_root_interval(p, lo, hi)


def resultant(p: Poly, q: Poly) -> Fraction:
    """Resultant via the subresultant-free Euclidean recursion."""
    if not p or not q:
        return Fraction(0)
    a, b = p[:], q[:]
    acc = Fraction(1)
    sign = 1
    while degree(b) > 0:
        _, r = divmod_poly(a, b)
        if not r:
            return Fraction(0)
        da, db, dr = degree(a), degree(b), degree(r)
        acc *= b[-1] ** (da - dr)
        if (da % 2) and (db % 2):
            sign = -sign
        a, b = b, r
    # b is a nonzero constant
    return sign * acc * b[0] ** degree(a)


def discriminant(p: Poly) -> Fraction:
    n = degree(p)
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    res = resultant(p, derivative(p))
    s = -1 if (n * (n - 1) // 2) % 2 else 1
    return s * res / p[-1]


def int_coefficients(p: Poly) -> list[int]:
    out = []
    for c in p:
        if c.denominator != 1:
            raise ValueError("polynomial has non-integer coefficient %s" % c)
        out.append(c.numerator)
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in count(1):
        if d * d > n:
            break
        if n % d == 0:
            small.append(d)
            large.append(n // d)
    return small + large[::-1]


def is_irreducible_deg_le4(p: Poly) -> bool:
    """Exhaustive irreducibility test over Q for monic integer p, deg <= 4.

    Gauss: a monic integer polynomial factors over Q iff it factors into
    monic integer polynomials, so rational-root and integer-quadratic-factor
    searches are complete through degree 4.
    """
    coeffs = int_coefficients(p)
    n = degree(p)
    if n > 4:
        raise ValueError("exhaustive check limited to degree <= 4")
    if p[-1] != 1:
        raise ValueError("expected a monic polynomial")
    if n <= 0:
        return False
    if n == 1:
        return True
    c0 = coeffs[0]
    if c0 == 0:
        return False
    for d in _divisors(c0):
        for root in (d, -d):
            if eval_at(p, root) == 0:
                return False
    if n <= 3:
        return True
    # Degree 4: search monic quadratic factors (x^2+ax+b)(x^2+cx+d).
    e0, e1, e2, e3 = coeffs[0], coeffs[1], coeffs[2], coeffs[3]
    for b in _divisors(e0):
        for bb in (b, -b):
            if e0 % bb != 0:
                continue
            dd = e0 // bb
            # a + c = e3, a*c = e2 - bb - dd, constrained by e1 = a*dd + c*bb
            s = e3
            prod = e2 - bb - dd
            disc = s * s - 4 * prod
            if disc < 0:
                continue
            root = _isqrt_exact(disc)
            if root is None:
                continue
            for a in {(s + root) // 2, (s - root) // 2}:
                c = s - a
                if a * c == prod and a * dd + c * bb == e1:
                    return False
    return True


def _isqrt_exact(n: int):
    if n < 0:
        return None
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None
