"""Decidable certification on congruence quotients.

Generators are reduced modulo a rational prime p coprime to the field
discriminant; the generated subgroup of SL(size, O_K/pO_K) is computed by
exhaustive breadth-first closure; orders and indices are reported exactly.

Residue-ring elements are encoded as integer indices (little-endian base-p
digit vectors of polynomial coefficients).  For small rings, addition and
multiplication tables are precomputed and the closure loop runs on plain
table lookups; matrices hash by a canonical byte string: fixed-width
little-endian residue limbs in row-major order, bit-exact and stable
across runs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

from .construct import GeneratorTriple, ElementaryCertificate
from .numberfield import NumberField
from .matgroup import MatN, word_eval

DEFAULT_TABLE_CAP = 512           # largest ring size with precomputed tables
DEFAULT_CLOSURE_CAP = 2_000_000   # stored matrices before tri-state unknown
DEFAULT_ENUM_CAP = 10 ** 8        # hard candidate cap for enumeration
AUTO_ENUM_LIMIT = 2_000_000       # auto mode enumerates below this many


class ResourceCapError(RuntimeError):
    """An exact computation would exceed its configured resource cap."""


# ---------------------------------------------------------------------------
# Polynomial helpers over F_p (small degrees only)

def _pmod_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod_trim(out)


def _pmod_divmod(a, f, p):
    # f monic; returns (quotient, remainder)
    a = a[:]
    df = len(f) - 1
    if df < 0:
        raise ZeroDivisionError
    q = [0] * max(0, len(a) - df)
    while a and len(a) - 1 >= df:
        k = len(a) - 1 - df
        c = a[-1] % p
        q[k] = c
        for i in range(len(f)):
            a[i + k] = (a[i + k] - c * f[i]) % p
        _pmod_trim(a)
    return _pmod_trim(q), a


def _pmod_rem(a, f, p):
    return _pmod_divmod(a, f, p)[1]


def _pmod_gcd(a, b, p):
    a, b = a[:], b[:]
    while b:
        lead_inv = pow(b[-1], -1, p)
        bm = [(c * lead_inv) % p for c in b]
        a, b = b, _pmod_rem(a, bm, p)
    if a:
        lead_inv = pow(a[-1], -1, p)
        a = [(c * lead_inv) % p for c in a]
    return a


def _pmod_powmod(base, e, f, p):
    result = [1]
    cur = _pmod_rem(base[:], f, p)
    while e:
        if e & 1:
            result = _pmod_rem(_pmod_mul(result, cur, p), f, p)
        cur = _pmod_rem(_pmod_mul(cur, cur, p), f, p)
        e >>= 1
    return result


def factor_degrees(modulus, p):
    """Degrees (with multiplicity one) of the irreducible factors of a
    squarefree monic polynomial over F_p, by distinct-degree splitting."""
    f = _pmod_trim([c % p for c in modulus])
    degrees = []
    h = [0, 1]  # x
    k = 0
    while len(f) - 1 > 0:
        k += 1
        if k > len(modulus):
            raise AssertionError("distinct-degree factorization did not terminate")
        h = _pmod_powmod(h, p, f, p)
        diff = h + [0] * (2 - len(h))
        diff = diff[:]
        diff[1] = (diff[1] - 1) % p
        g = _pmod_gcd(f, _pmod_trim(diff), p)
        dg = len(g) - 1
        if dg > 0:
            degrees.extend([k] * (dg // k))
            q, rem = _pmod_divmod(f, g, p)
            assert not rem, "squarefree modulus expected"
            f = q
            if len(f) - 1 > 0:
                h = _pmod_rem(h, f, p)
    return sorted(degrees)


def sl_order_over_field(size: int, q: int) -> int:
    """|SL(size, F_q)| by column counting: |GL| = prod(q^size - q^i), then
    divide by q-1 for the determinant fiber."""
    gl = 1
    for i in range(size):
        gl *= q ** size - q ** i
    return gl // (q - 1)


# ---------------------------------------------------------------------------
# Residue rings

class ResidueRing:
    """O_K/pO_K as F_p[x]/(f mod p), elements indexed 0..p^n - 1.

    Rejects primes dividing the field discriminant (ramified or singular
    reductions are out of scope by design).  Precomputes full operation
    tables when the ring is small enough; otherwise operations decompose
    indices into digit vectors on the fly.
    """

    def __init__(self, field: NumberField, p: int,
                 table_cap: int = DEFAULT_TABLE_CAP):
        if p < 2:
            raise ValueError("p must be a prime >= 2")
        if field.discriminant % p == 0:
            raise ValueError(
                "p = %d divides the field discriminant %d; rejected"
                % (p, field.discriminant))
        self.field = field
        self.p = p
        self.n = field.degree
        self.modulus_poly = tuple(int(c) % p for c in field.coefficients)
        self.element_count = p ** self.n
        self.limb_width = 1 if p <= 256 else 2

        n, count = self.n, self.element_count
        digits = []
        for idx in range(count):
            v = idx
            d = []
            for _ in range(n):
                d.append(v % p)
                v //= p
            digits.append(tuple(d))
        self._digits = digits

        # reduction rows: digits of x^(n+k) mod (f, p), k = 0..n-2
        base = [(-c) % p for c in self.modulus_poly[:-1]]
        rows = []
        if n > 1:
            rows.append(base)
            cur = base
            for _ in range(n - 2):
                carry = cur[-1]
                nxt = [0] + cur[:-1]
                if carry:
                    nxt = [(a + carry * b) % p for a, b in zip(nxt, base)]
                rows.append(nxt)
                cur = nxt
        self._reduction = rows

        enc = []
        for d in digits:
            if self.limb_width == 1:
                enc.append(bytes(d))
            else:
                enc.append(b"".join(v.to_bytes(2, "little") for v in d))
        self.element_bytes = enc

        if count <= table_cap:
            add_t = [[0] * count for _ in range(count)]
            mul_t = [[0] * count for _ in range(count)]
            neg_t = [0] * count
            for a in range(count):
                da = digits[a]
                neg_t[a] = self._index([(-v) % p for v in da])
                for b in range(a, count):
                    s = self._index([(x + y) % p for x, y in zip(da, digits[b])])
                    add_t[a][b] = s
                    add_t[b][a] = s
                    m = self._mul_digits(da, digits[b])
                    mi = self._index(m)
                    mul_t[a][b] = mi
                    mul_t[b][a] = mi
            self.add_table = add_t
            self.mul_table = mul_t
            self.neg_table = neg_t
        else:
            self.add_table = None
            self.mul_table = None
            self.neg_table = None

    # -- index/digit plumbing ----------------------------------------------

    def _index(self, digit_list) -> int:
        idx = 0
        for v in reversed(digit_list):
            idx = idx * self.p + v
        return idx

    def digits(self, idx: int):
        return self._digits[idx]

    def _mul_digits(self, da, db):
        p, n = self.p, self.n
        conv = [0] * (2 * n - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] = (conv[i + j] + x * y) % p
        out = list(conv[:n]) + [0] * (n - len(conv))
        for k in range(n, len(conv)):
            c = conv[k]
            if c:
                row = self._reduction[k - n]
                for i in range(n):
                    out[i] = (out[i] + c * row[i]) % p
        return out

    # -- ring operations -----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return self.add_table[a][b]
        p = self.p
        return self._index([(x + y) % p
                            for x, y in zip(self._digits[a], self._digits[b])])

    def mul(self, a: int, b: int) -> int:
        if self.mul_table is not None:
            return self.mul_table[a][b]
        return self._index(self._mul_digits(self._digits[a], self._digits[b]))

    def neg(self, a: int) -> int:
        if self.neg_table is not None:
            return self.neg_table[a]
        p = self.p
        return self._index([(-x) % p for x in self._digits[a]])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1 if self.n >= 1 else 0

    def is_unit(self, a: int) -> bool:
        poly = list(self._digits[a])
        g = _pmod_gcd(list(self.modulus_poly), _pmod_trim(poly), self.p)
        return len(g) - 1 == 0

    def unit_group_order(self) -> int:
        """|(O_K/p)^*| = prod (p^d_i - 1) over the factor degrees (the
        modulus is squarefree, so the ring is a product of fields)."""
        total = 1
        for d in factor_degrees(list(self.modulus_poly), self.p):
            total *= self.p ** d - 1
        return total

    def pow(self, a: int, e: int) -> int:
        result = self.one
        cur = a
        while e:
            if e & 1:
                result = self.mul(result, cur)
            cur = self.mul(cur, cur)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        """Inverse of a unit: a^(|units| - 1), Lagrange in the unit group."""
        if not self.is_unit(a):
            raise ZeroDivisionError("element %d is not a unit" % a)
        return self.pow(a, self.unit_group_order() - 1)

    def reduce_coeffs(self, fractions) -> int:
        """Index of an element given rational power-basis coordinates; the
        denominators must be coprime to p."""
        p = self.p
        digits = []
        for c in fractions:
            den = c.denominator % p
            if den == 0:
                raise ValueError("denominator divisible by p = %d" % p)
            digits.append((c.numerator * pow(den, -1, p)) % p)
        return self._index(digits[: self.n] + [0] * max(0, self.n - len(digits)))

    def __repr__(self):
        return "ResidueRing(p=%d, size=%d)" % (self.p, self.element_count)


# ---------------------------------------------------------------------------
# Matrices over a residue ring

class ResidueMat:
    """Square matrix of residue-ring element indices."""

    __slots__ = ("ring", "size", "flat")

    def __init__(self, ring: ResidueRing, size: int, flat):
        self.ring = ring
        self.size = size
        self.flat = tuple(flat)

    @classmethod
    def identity(cls, ring: ResidueRing, size: int) -> "ResidueMat":
        one, zero = ring.one, ring.zero
        return cls(ring, size,
                   [one if i == j else zero
                    for i in range(size) for j in range(size)])

    def __mul__(self, other: "ResidueMat") -> "ResidueMat":
        if self.ring is not other.ring or self.size != other.size:
            raise ValueError("ring or size mismatch")
        n = self.size
        mul, add = self.ring.mul, self.ring.add
        a, b = self.flat, other.flat
        out = []
        for i in range(n):
            base = i * n
            for j in range(n):
                acc = mul(a[base], b[j])
                for k in range(1, n):
                    acc = add(acc, mul(a[base + k], b[k * n + j]))
                out.append(acc)
        return ResidueMat(self.ring, n, out)

    def det(self) -> int:
        n, ring = self.size, self.ring
        if n == 1:
            return self.flat[0]
        if n == 2:
            a, b, c, d = self.flat
            return ring.sub(ring.mul(a, d), ring.mul(b, c))
        total = ring.zero
        for j in range(n):
            minor = [self.flat[i * n + k]
                     for i in range(1, n) for k in range(n) if k != j]
            cof = ring.mul(self.flat[j],
                           ResidueMat(ring, n - 1, minor).det())
            total = ring.add(total, cof if j % 2 == 0 else ring.neg(cof))
        return total

    def inverse(self) -> "ResidueMat":
        """Adjugate times det^{-1}; valid over any finite commutative ring
        when det is a unit."""
        ring, n = self.ring, self.size
        d = self.det()
        dinv = ring.inv(d)
        if n == 1:
            return ResidueMat(ring, 1, [dinv])
        out = [ring.zero] * (n * n)
        for i in range(n):
            for j in range(n):
                minor = [self.flat[r * n + c]
                         for r in range(n) if r != j
                         for c in range(n) if c != i]
                cof = ResidueMat(ring, n - 1, minor).det()
                if (i + j) % 2:
                    cof = ring.neg(cof)
                out[i * n + j] = ring.mul(cof, dinv)
        return ResidueMat(ring, n, out)

    def encode(self) -> bytes:
        """Canonical key: little-endian residue limbs, row-major."""
        enc = self.ring.element_bytes
        return b"".join(enc[v] for v in self.flat)

    def __eq__(self, other):
        return (isinstance(other, ResidueMat) and self.ring is other.ring
                and self.size == other.size and self.flat == other.flat)

    def __hash__(self):
        return hash((id(self.ring), self.flat))

    def __repr__(self):
        n = self.size
        rows = [list(self.flat[i * n:(i + 1) * n]) for i in range(n)]
        return "ResidueMat(%r)" % rows


def reduce_mod(g: MatN, ring: ResidueRing) -> ResidueMat:
    """Entrywise reduction of an integral matrix modulo p."""
    if g.field != ring.field:
        raise ValueError("matrix field does not match the residue ring")
    flat = []
    for row in g.entries:
        for v in row:
            if not v.is_integral():
                raise ValueError("matrix entry is not integral: %r" % (v,))
            flat.append(ring.reduce_coeffs(v.coords))
    return ResidueMat(ring, g.size, flat)


# ---------------------------------------------------------------------------
# Ambient orders

def ambient_order(ring: ResidueRing, size: int, method: str = "auto",
                  enumeration_cap: int = DEFAULT_ENUM_CAP) -> int:
    """|SL(size, ring)| exactly.

    'enumerate' scans all candidate matrices (formula-free; candidate count
    capped); 'count' multiplies per-factor field orders obtained from the
    distinct-degree splitting of the modulus (valid since rejected primes
    keep it squarefree).  'auto' enumerates only for small rings and falls
    back to counting.
    """
    candidates = ring.element_count ** (size * size)
    if method == "auto":
        method = ("enumerate"
                  if ring.element_count <= 49 and candidates <= AUTO_ENUM_LIMIT
                  else "count")
    if method == "count":
        total = 1
        for d in factor_degrees(list(ring.modulus_poly), ring.p):
            total *= sl_order_over_field(size, ring.p ** d)
        return total
    if method != "enumerate":
        raise ValueError("unknown method %r" % method)
    if candidates > enumeration_cap:
        raise ResourceCapError(
            "enumeration needs %d candidates, cap is %d"
            % (candidates, enumeration_cap))
    count = ring.element_count
    one = ring.one
    if size == 2 and ring.mul_table is not None:
        mt, at, nt = ring.mul_table, ring.add_table, ring.neg_table
        total = 0
        rng = range(count)
        for a in rng:
            ma = mt[a]
            for d in rng:
                row = at[ma[d]]  # row of (a*d + .)
                for b in rng:
                    mb = mt[b]
                    for c in rng:
                        if row[nt[mb[c]]] == one:
                            total += 1
        return total
    total = 0
    for flat in product(range(count), repeat=size * size):
        if ResidueMat(ring, size, flat).det() == one:
            total += 1
    return total


# ---------------------------------------------------------------------------
# Breadth-first closure

@dataclass(frozen=True)
class ClosureResult:
    """Exact subgroup data from a BFS closure run.

    When the memory cap was hit, subgroup_order is only a lower bound,
    index is None and surjective is None (tri-state unknown).
    """

    subgroup_order: int
    ambient_order: int
    index: int | None
    surjective: bool | None
    frontier_peak: int
    elements_visited: int
    capped: bool = False

    def __post_init__(self):
        if not self.capped:
            if self.index is None or self.index * self.subgroup_order != self.ambient_order:
                raise ValueError("Lagrange check failed: index * order != ambient")
            if self.surjective != (self.index == 1):
                raise ValueError("surjectivity flag inconsistent with index")

    def serialize(self):
        return {
            "subgroup_order": self.subgroup_order,
            "ambient_order": self.ambient_order,
            "index": self.index,
            "surjective": self.surjective,
            "frontier_peak": self.frontier_peak,
            "elements_visited": self.elements_visited,
            "capped": self.capped,
        }


def closure(generators, max_elements: int = DEFAULT_CLOSURE_CAP,
            ambient: int | None = None) -> ClosureResult:
    """BFS closure of the group generated by the given residue matrices,
    under right-multiplication by generators and their inverses."""
    if not generators:
        raise ValueError("need at least one generator")
    ring = generators[0].ring
    size = generators[0].size
    for g in generators:
        if g.ring is not ring or g.size != size:
            raise ValueError("generators over different rings or sizes")
        if not ring.is_unit(g.det()):
            raise ValueError("generator is not invertible over the ring")
    if ambient is None:
        ambient = ambient_order(ring, size, method="count")

    multipliers = []
    seen_mult = set()
    for g in generators:
        for m in (g, g.inverse()):
            if m.flat not in seen_mult:
                seen_mult.add(m.flat)
                multipliers.append(m.flat)

    n = size
    enc = ring.element_bytes
    mul_tab, add_tab = ring.mul_table, ring.add_table
    ident = ResidueMat.identity(ring, size)
    start = ident.flat
    visited = {b"".join(enc[v] for v in start)}
    queue = deque([start])
    frontier_peak = 1
    capped = False

    if mul_tab is not None:
        # hot path: direct table indexing, flat tuples
        while queue:
            frontier_peak = max(frontier_peak, len(queue))
            cur = queue.popleft()
            for m in multipliers:
                out = []
                for i in range(n):
                    base = i * n
                    for j in range(n):
                        acc = mul_tab[cur[base]][m[j]]
                        for k in range(1, n):
                            acc = add_tab[acc][mul_tab[cur[base + k]][m[k * n + j]]]
                        out.append(acc)
                key = b"".join(enc[v] for v in out)
                if key not in visited:
                    if len(visited) >= max_elements:
                        capped = True
                        queue.clear()
                        break
                    visited.add(key)
                    queue.append(tuple(out))
            if capped:
                break
    else:
        rmul, radd = ring.mul, ring.add
        while queue:
            frontier_peak = max(frontier_peak, len(queue))
            cur = queue.popleft()
            for m in multipliers:
                out = []
                for i in range(n):
                    base = i * n
                    for j in range(n):
                        acc = rmul(cur[base], m[j])
                        for k in range(1, n):
                            acc = radd(acc, rmul(cur[base + k], m[k * n + j]))
                        out.append(acc)
                key = b"".join(enc[v] for v in out)
                if key not in visited:
                    if len(visited) >= max_elements:
                        capped = True
                        queue.clear()
                        break
                    visited.add(key)
                    queue.append(tuple(out))
            if capped:
                break

    order = len(visited)
    if capped:
        return ClosureResult(order, ambient, None, None, frontier_peak,
                             order, capped=True)
    if ambient % order:
        raise AssertionError("Lagrange violation: closure order %d does not "
                             "divide ambient %d" % (order, ambient))
    index = ambient // order
    return ClosureResult(order, ambient, index, index == 1, frontier_peak,
                         order)


# ---------------------------------------------------------------------------
# End-to-end certificates

@dataclass(frozen=True)
class WordIdentityRecord:
    index: int
    holds: bool
    word_length: int


@dataclass(frozen=True)
class PrimeClosureRecord:
    p: int
    ring_size: int
    result: ClosureResult | None
    error: str | None = None

    def serialize(self):
        out = {"p": self.p, "ring_size": self.ring_size}
        if self.error is not None:
            out["error"] = self.error
        if self.result is not None:
            out["closure"] = self.result.serialize()
        return out


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable bundle: word identities re-verified, per-prime
    congruence closure, and the theta certificate from the provenance."""

    case_tag: str
    r: int
    word_identities: tuple
    closures: tuple
    theta_indices: tuple
    verdict: str
    failures: tuple

    def serialize(self):
        return {
            "case": self.case_tag,
            "r": self.r,
            "word_identities": [
                {"index": w.index, "holds": w.holds, "word_length": w.word_length}
                for w in self.word_identities
            ],
            "primes": [c.serialize() for c in self.closures],
            "theta_indices": [[r, idx] for r, idx in self.theta_indices],
            "verdict": self.verdict,
            "failures": list(self.failures),
        }


def certify(triple: GeneratorTriple, primes,
            elementary_cert: ElementaryCertificate | None = None,
            closure_cap: int = DEFAULT_CLOSURE_CAP,
            table_cap: int = DEFAULT_TABLE_CAP,
            ambient_provider=None) -> Certificate:
    """Aggregate verdict: PASS iff every word identity holds and the image is
    surjective at every tested prime; failures are recorded, not raised.

    ambient_provider(ring, size) may supply cached ambient orders.
    """
    failures = []
    word_records = []
    if elementary_cert is not None:
        for i, w in enumerate(elementary_cert.words):
            holds = word_eval(w) == elementary_cert.expected_matrix(i)
            word_records.append(WordIdentityRecord(i, holds, w.length()))
            if not holds:
                failures.append("word identity %d fails" % i)

    closure_records = []
    unknown = False
    field = triple.provenance.field
    mats = triple.matrices()
    for p in primes:
        try:
            ring = ResidueRing(field, p, table_cap=table_cap)
            reduced = [reduce_mod(m, ring) for m in mats]
            ambient = (ambient_provider(ring, reduced[0].size)
                       if ambient_provider is not None else None)
            result = closure(reduced, max_elements=closure_cap, ambient=ambient)
            closure_records.append(PrimeClosureRecord(p, ring.element_count,
                                                      result))
            if result.surjective is None:
                unknown = True
            elif not result.surjective:
                failures.append("not surjective at p=%d (index %d)"
                                % (p, result.index))
        except (ValueError, ResourceCapError) as exc:
            closure_records.append(
                PrimeClosureRecord(p, 0, None, error=str(exc)))
            failures.append("p=%d: %s" % (p, exc))

    theta_indices = ()
    if triple.provenance.theta_cert is not None:
        theta_indices = triple.provenance.theta_cert.indices

    if failures:
        verdict = "FAIL"
    elif unknown:
        verdict = "UNKNOWN"
    else:
        verdict = "PASS"
    return Certificate(triple.case_tag, triple.r, tuple(word_records),
                       tuple(closure_records), theta_indices, verdict,
                       tuple(failures))
