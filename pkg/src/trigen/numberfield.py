"""Exact arithmetic in a number field K = Q[x]/(f) with a designated order.

Elements are stored as coordinate vectors in the power basis, as exact
rationals; integrality is tested through the integral-basis matrix.  The
signature is computed by Sturm-sequence real-root counting, and positivity
under real embeddings by isolating-interval refinement, so no floating
point enters any certification path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg, polyq


class _Infinite:
    """Sentinel for an infinite subring index [O_K : Z[theta^r]]."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"


INFINITE = _Infinite()


class NumberField:
    """Q[x]/(f) together with an integral basis of the working order.

    The basis is a row matrix over Q expressing basis elements in the power
    basis; the default is the power basis itself.  Maximal-order computation
    is out of scope: callers supply the basis when the power basis is not
    maximal.
    """

    def __init__(self, coefficients, integral_basis=None, name: str | None = None):
        f = polyq.poly(coefficients)
        n = polyq.degree(f)
        if n < 1:
            raise ValueError("defining polynomial must have degree >= 1")
        if f[-1] != 1:
            raise ValueError("defining polynomial must be monic")
        self.defining_poly = f
        self.coefficients = tuple(polyq.int_coefficients(f))
        self.degree = n
        self.name = name

        if n <= 4:
            if not polyq.is_irreducible_deg_le4(f):
                raise ValueError("defining polynomial is reducible over Q")
            self.irreducibility_checked = True
        else:
            # Trusted above degree 4; the flag surfaces in reports.
            self.irreducibility_checked = False

        if integral_basis is None:
            basis = linalg.identity(n)
        else:
            basis = [[Fraction(x) for x in row] for row in integral_basis]
            if len(basis) != n or any(len(row) != n for row in basis):
                raise ValueError("integral basis must be a %d x %d matrix" % (n, n))
        if [x for x in basis[0]] != [Fraction(1)] + [Fraction(0)] * (n - 1):
            raise ValueError("first integral-basis row must represent 1")
        inv = linalg.inverse(basis)
        if inv is None:
            raise ValueError("singular basis matrix")
        self.integral_basis = tuple(tuple(row) for row in basis)
        self._basis_inv = tuple(tuple(row) for row in inv)

        r1 = polyq.count_real_roots(f)
        if (n - r1) % 2:
            raise ValueError("inconsistent real-root count")
        self.signature = (r1, (n - r1) // 2)

        disc_f = polyq.discriminant(f)
        if disc_f == 0:
            raise ValueError("defining polynomial is not squarefree")
        disc = disc_f * linalg.det(basis) ** 2
        if disc.denominator != 1:
            raise ValueError("basis does not define an order containing Z[x]")
        self.discriminant = disc.numerator

        self._reduction = self._reduction_rows()
        self._root_intervals = None

    def _reduction_rows(self):
        # rows[k] = power-basis coordinates of x^(n+k) mod f, k = 0..n-2
        n = self.degree
        if n == 1:
            return []
        base = [Fraction(-c) for c in self.defining_poly[:-1]]
        rows = [base]
        cur = base
        for _ in range(n - 2):
            carry = cur[-1]
            nxt = [Fraction(0)] + cur[:-1]
            if carry:
                nxt = [a + carry * b for a, b in zip(nxt, base)]
            rows.append(nxt)
            cur = nxt
        return rows

    # -- element constructors -------------------------------------------------

    def element(self, coords) -> "FieldElement":
        c = [Fraction(v) for v in coords]
        if len(c) > self.degree:
            raise ValueError("coordinate vector longer than field degree")
        c += [Fraction(0)] * (self.degree - len(c))
        return FieldElement(self, tuple(c))

    def zero(self) -> "FieldElement":
        return self.element([])

    def one(self) -> "FieldElement":
        return self.element([1])

    def gen(self) -> "FieldElement":
        if self.degree == 1:
            # Q[x]/(x - c): the generator is the rational root.
            return self.element([-self.defining_poly[0]])
        return self.element([0, 1])

    def from_rational(self, value) -> "FieldElement":
        return self.element([Fraction(value)])

    def from_integral_coords(self, coords) -> "FieldElement":
        c = [Fraction(v) for v in coords]
        if len(c) != self.degree:
            raise ValueError("expected %d integral-basis coordinates" % self.degree)
        power = [
            sum((c[i] * self.integral_basis[i][j] for i in range(self.degree)),
                Fraction(0))
            for j in range(self.degree)
        ]
        return self.element(power)

    # -- internals ------------------------------------------------------------

    def _reduce(self, conv):
        n = self.degree
        out = list(conv[:n]) + [Fraction(0)] * (n - len(conv))
        for k in range(n, len(conv)):
            extra = conv[k]
            if extra:
                row = self._reduction[k - n]
                for i in range(n):
                    out[i] += extra * row[i]
        return out

    def real_root_intervals(self):
        if self._root_intervals is None:
            self._root_intervals = tuple(polyq.isolate_real_roots(self.defining_poly))
        return self._root_intervals

    # -- identity -------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, NumberField)
            and self.coefficients == other.coefficients
            and self.integral_basis == other.integral_basis
        )

    def __hash__(self):
        return hash((self.coefficients, self.integral_basis))

    def __repr__(self):
        label = self.name or _poly_str(self.defining_poly)
        return "NumberField(%s)" % label


def _poly_str(p) -> str:
    terms = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append("%s*x" % c if abs(c) != 1 else ("-x" if c < 0 else "x"))
        else:
            terms.append("%s*x^%d" % (c, i) if abs(c) != 1
                         else ("-x^%d" % i if c < 0 else "x^%d" % i))
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


class FieldElement:
    """An element of a NumberField, exact rational power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: tuple):
        self.field = field
        self.coords = coords

    # -- coercion -------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return other
            raise ValueError("parent field mismatch")
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field,
                            tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field,
                            tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = self.field.degree
        conv = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(o.coords):
                    if b:
                        conv[i + j] += a * b
        return FieldElement(self.field, tuple(self.field._reduce(conv)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        result = self.field.one()
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        """Inverse via extended gcd of the representative with f."""
        rep = polyq.poly(self.coords)
        if not rep:
            raise ZeroDivisionError("division by zero in number field")
        g, u, _ = polyq.ext_gcd_poly(rep, self.field.defining_poly)
        if polyq.degree(g) != 0:
            # Cannot happen for irreducible f; guards trusted high-degree input.
            raise ZeroDivisionError("element is a zero divisor modulo f")
        inv = polyq.scale(u, 1 / g[0])
        _, inv = polyq.divmod_poly(inv, self.field.defining_poly)
        return self.field.element(inv)

    # -- predicates and maps --------------------------------------------------

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.field.coefficients, self.coords))

    def integral_coords(self):
        """Coordinates in the integral basis."""
        inv = self.field._basis_inv
        n = self.field.degree
        return tuple(
            sum((self.coords[i] * inv[i][j] for i in range(n)), Fraction(0))
            for j in range(n)
        )

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.integral_coords())

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    def multiplication_matrix(self):
        """Rows: power-basis coordinates of self * x^i."""
        n = self.field.degree
        rows = []
        cur = self
        gen = self.field.gen()
        for _ in range(n):
            rows.append(list(cur.coords))
            cur = cur * gen
        return rows

    def norm(self) -> Fraction:
        return linalg.det(self.multiplication_matrix())

    def trace(self) -> Fraction:
        rows = self.multiplication_matrix()
        return sum((rows[i][i] for i in range(len(rows))), Fraction(0))

    def __repr__(self):
        return "FieldElement(%s)" % _poly_str(list(self.coords))


# ---------------------------------------------------------------------------
# Module operations

def field_new(coefficients, integral_basis=None, name=None) -> NumberField:
    """Construct a number field; power basis when no basis is supplied."""
    return NumberField(coefficients, integral_basis, name=name)


def elem_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Exact field arithmetic dispatch: add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown operation %r" % op)


def minimal_polynomial(a: FieldElement):
    """Monic minimal polynomial of a over Q, by linear dependency search."""
    n = a.field.degree
    powers = [a.field.one().coords]
    cur = a.field.one()
    for d in range(1, n + 1):
        cur = cur * a
        columns = [list(p) for p in powers]
        sol = linalg.solve_columns(columns, list(cur.coords))
        if sol is not None:
            return polyq.poly([-c for c in sol] + [1])
        powers.append(cur.coords)
    raise AssertionError("minimal polynomial search failed")  # unreachable


def subring_index(theta: FieldElement, r: int):
    """[O_K : Z[theta^r]] as |det| of the power coordinate matrix, or INFINITE."""
    if not theta.is_integral():
        raise ValueError("theta must be integral")
    if r < 1:
        raise ValueError("power r must be >= 1")
    n = theta.field.degree
    beta = theta ** r
    rows = []
    cur = theta.field.one()
    for _ in range(n):
        rows.append(list(cur.integral_coords()))
        cur = cur * beta
    d = linalg.det(rows)
    if d == 0:
        return INFINITE
    d = abs(d)
    assert d.denominator == 1, "index of a suborder must be an integer"
    return d.numerator


def unit_rank(field: NumberField) -> int:
    """Rank of the unit group: r1 + r2 - 1."""
    r1, r2 = field.signature
    return r1 + r2 - 1


def is_cm_field(field: NumberField, candidate_real_subfield: NumberField,
                embedding: FieldElement) -> bool:
    """True iff field is a totally imaginary quadratic extension of the
    given totally real subfield, witnessed by the embedding element."""
    if field.degree != 2 * candidate_real_subfield.degree:
        raise ValueError("degree mismatch: [E:Q] must equal 2*[F:Q]")
    if embedding.field != field:
        raise ValueError("embedding element must live in the extension field")
    if candidate_real_subfield.signature[1] != 0:
        return False
    if field.signature != (0, field.degree // 2):
        return False
    return minimal_polynomial(embedding) == candidate_real_subfield.defining_poly


def totally_positive(a: FieldElement) -> bool:
    """True iff a > 0 under every real embedding of a totally real field."""
    field = a.field
    if field.signature[1] != 0:
        raise ValueError("field is not totally real")
    if not a:
        raise ValueError("totally_positive is undefined at zero")
    if field.degree == 1:
        return a.coords[0] > 0
    g = polyq.poly(a.coords)
    for lo, hi in field.real_root_intervals():
        if polyq.sign_at_root(field.defining_poly, g, lo, hi) < 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Automorphisms and declared subfields

class FieldAutomorphism:
    """A field automorphism given by the image of the power-basis generator."""

    def __init__(self, field: NumberField, gen_image: FieldElement):
        if gen_image.field != field:
            raise ValueError("generator image must live in the same field")
        value = field.zero()
        power = field.one()
        for c in field.defining_poly:
            value = value + power * c
            power = power * gen_image
        if value:
            raise ValueError("generator image is not a root of the defining polynomial")
        self.field = field
        self.gen_image = gen_image
        powers = [field.one()]
        for _ in range(field.degree - 1):
            powers.append(powers[-1] * gen_image)
        self._powers = powers

    def __call__(self, element: FieldElement) -> FieldElement:
        if element.field != self.field:
            raise ValueError("element from a different field")
        out = self.field.zero()
        for c, p in zip(element.coords, self._powers):
            if c:
                out = out + p * c
        return out

    def is_involution(self) -> bool:
        gen = self.field.gen()
        return self(self.gen_image) == gen

    @classmethod
    def quadratic_conjugation(cls, field: NumberField) -> "FieldAutomorphism":
        """sqrt(z) -> -sqrt(z) on Q(sqrt z); generator negation in general.

        Valid whenever x -> -x preserves f, e.g. x^2 - z or x^4 + 1.
        """
        return cls(field, -field.gen())


@dataclass(frozen=True)
class SubfieldEmbedding:
    """A declared subfield F of E with the image of F's generator in E."""

    sub: NumberField
    field: NumberField
    gen_image: FieldElement

    def __post_init__(self):
        if self.gen_image.field != self.field:
            raise ValueError("embedding image must live in the extension field")
        if self.field.degree % self.sub.degree:
            raise ValueError("subfield degree must divide field degree")
        value = self.field.zero()
        power = self.field.one()
        for c in self.sub.defining_poly:
            value = value + power * c
            power = power * self.gen_image
        if value:
            raise ValueError("image does not satisfy the subfield polynomial")
        powers = [self.field.one()]
        for _ in range(self.sub.degree - 1):
            powers.append(powers[-1] * self.gen_image)
        object.__setattr__(self, "_powers", tuple(powers))

    def relative_degree(self) -> int:
        return self.field.degree // self.sub.degree

    def lift(self, element: FieldElement) -> FieldElement:
        """Map an element of F into E."""
        if element.field != self.sub:
            raise ValueError("element must belong to the declared subfield")
        out = self.field.zero()
        for c, p in zip(element.coords, self._powers):
            if c:
                out = out + p * c
        return out

    def coords_in_sub(self, element: FieldElement):
        """Coordinates over powers of the image, or None if not in F."""
        if element.field != self.field:
            raise ValueError("element from a different field")
        columns = [list(p.coords) for p in self._powers]
        return linalg.solve_columns(columns, list(element.coords))

    def contains(self, element: FieldElement) -> bool:
        return self.coords_in_sub(element) is not None

    def to_sub(self, element: FieldElement) -> FieldElement:
        coords = self.coords_in_sub(element)
        if coords is None:
            raise ValueError("element does not lie in the declared subfield")
        return self.sub.element(coords)
