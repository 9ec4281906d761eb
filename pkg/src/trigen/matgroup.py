"""Exact matrices over a number field, generator words, Bruhat factors,
and the rank-one special unitary machinery for an anti-diagonal hermitian
form over a quadratic extension.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numberfield import FieldAutomorphism, FieldElement, NumberField


class MatN:
    """Square matrix with FieldElement entries over a common parent field."""

    __slots__ = ("field", "size", "entries")

    def __init__(self, field: NumberField, rows):
        entries = []
        for row in rows:
            out_row = []
            for v in row:
                if isinstance(v, FieldElement):
                    if v.field != field:
                        raise ValueError("matrix entry from a different field")
                    out_row.append(v)
                else:
                    out_row.append(field.from_rational(Fraction(v)))
            entries.append(tuple(out_row))
        n = len(entries)
        if any(len(r) != n for r in entries):
            raise ValueError("matrix must be square")
        self.field = field
        self.size = n
        self.entries = tuple(entries)

    # -- constructors ----------------------------------------------------

    @classmethod
    def identity(cls, field: NumberField, size: int) -> "MatN":
        return cls(field, [[1 if i == j else 0 for j in range(size)]
                           for i in range(size)])

    @classmethod
    def sl(cls, field: NumberField, rows) -> "MatN":
        """Construct and assert determinant one (group elements)."""
        m = cls(field, rows)
        if m.det() != field.one():
            raise ValueError("matrix does not have determinant 1")
        return m

    # -- arithmetic ------------------------------------------------------

    def __mul__(self, other: "MatN") -> "MatN":
        if not isinstance(other, MatN):
            return NotImplemented
        if other.size != self.size or other.field != self.field:
            raise ValueError("matrix size or field mismatch")
        n = self.size
        a, b = self.entries, other.entries
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = a[i][0] * b[0][j]
                for k in range(1, n):
                    acc = acc + a[i][k] * b[k][j]
                row.append(acc)
            rows.append(row)
        return MatN(self.field, rows)

    def __neg__(self) -> "MatN":
        return MatN(self.field, [[-v for v in row] for row in self.entries])

    def scale(self, c) -> "MatN":
        return MatN(self.field, [[v * c for v in row] for row in self.entries])

    def __pow__(self, exponent: int) -> "MatN":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        result = MatN.identity(self.field, self.size)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def det(self) -> FieldElement:
        n = self.size
        if n == 1:
            return self.entries[0][0]
        if n == 2:
            a, b = self.entries[0]
            c, d = self.entries[1]
            return a * d - b * c
        # cofactor expansion along the first row; n stays tiny here
        total = self.field.zero()
        for j in range(n):
            minor = [
                [self.entries[i][k] for k in range(n) if k != j]
                for i in range(1, n)
            ]
            term = self.entries[0][j] * MatN(self.field, minor).det()
            total = total + (term if j % 2 == 0 else -term)
        return total

    def inverse(self) -> "MatN":
        """Adjugate divided by determinant (exact; raises on singular)."""
        n = self.size
        d = self.det()
        if not d:
            raise ZeroDivisionError("matrix is singular")
        if n == 1:
            return MatN(self.field, [[d.inverse()]])
        dinv = d.inverse()
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                minor = [
                    [self.entries[r][c] for c in range(n) if c != i]
                    for r in range(n) if r != j
                ]
                cof = MatN(self.field, minor).det()
                if (i + j) % 2:
                    cof = -cof
                row.append(cof * dinv)
            rows.append(row)
        return MatN(self.field, rows)

    def transpose(self) -> "MatN":
        return MatN(self.field, [[self.entries[j][i] for j in range(self.size)]
                                 for i in range(self.size)])

    def apply(self, automorphism: FieldAutomorphism) -> "MatN":
        return MatN(self.field, [[automorphism(v) for v in row]
                                 for row in self.entries])

    def conj_transpose(self, automorphism: FieldAutomorphism) -> "MatN":
        return self.transpose().apply(automorphism)

    # -- predicates and views ---------------------------------------------

    def is_identity(self) -> bool:
        return self == MatN.identity(self.field, self.size)

    def __eq__(self, other):
        return (isinstance(other, MatN) and self.field == other.field
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field.coefficients,
                     tuple(v.coords for row in self.entries for v in row)))

    def serialize(self):
        """Nested arrays of coordinate-vector strings (exact)."""
        return [[[str(c) for c in v.coords] for v in row] for row in self.entries]

    def __repr__(self):
        return "MatN(%d, %r)" % (self.size, [[str(v) for v in row]
                                             for row in self.entries])


# ---------------------------------------------------------------------------
# Common SL(2) generators

def upper_elementary(field: NumberField, x) -> MatN:
    """[[1, x], [0, 1]]"""
    return MatN(field, [[1, x], [0, 1]])


def lower_elementary(field: NumberField, x) -> MatN:
    """[[1, 0], [x, 1]]"""
    return MatN(field, [[1, 0], [x, 1]])


def torus_diag(field: NumberField, t: FieldElement) -> MatN:
    """diag(t, 1/t)"""
    return MatN(field, [[t, field.zero()], [field.zero(), t.inverse()]])


def commutator(a: MatN, b: MatN) -> MatN:
    return a * b * a.inverse() * b.inverse()


# ---------------------------------------------------------------------------
# Words in named generators

class Word:
    """Formal word: a sequence of (generator name, integer exponent) letters
    over a named alphabet of matrices."""

    __slots__ = ("letters", "alphabet")

    def __init__(self, letters, alphabet):
        letters = tuple((str(n), int(e)) for n, e in letters)
        for name, _ in letters:
            if name not in alphabet:
                raise ValueError("unknown generator name %r" % name)
        self.letters = letters
        self.alphabet = dict(alphabet)

    def eval(self) -> MatN:
        return word_eval(self)

    def concat(self, other: "Word") -> "Word":
        merged = dict(self.alphabet)
        for name, mat in other.alphabet.items():
            if name in merged and merged[name] != mat:
                raise ValueError("alphabets disagree on generator %r" % name)
            merged[name] = mat
        return Word(self.letters + other.letters, merged)

    def inverse(self) -> "Word":
        return Word(tuple((n, -e) for n, e in reversed(self.letters)),
                    self.alphabet)

    def syllable_count(self) -> int:
        return len(self.letters)

    def length(self) -> int:
        """Total letter count, exponents included."""
        return sum(abs(e) for _, e in self.letters)

    def serialize(self):
        return [[n, e] for n, e in self.letters]

    def __eq__(self, other):
        return (isinstance(other, Word) and self.letters == other.letters
                and self.alphabet == other.alphabet)

    def __repr__(self):
        return "Word(%s)" % " ".join("%s^%d" % l for l in self.letters)


def word_eval(w: Word) -> MatN:
    """Exact product of generator powers, left to right."""
    mats = w.alphabet
    if not mats:
        raise ValueError("word over an empty alphabet")
    some = next(iter(mats.values()))
    result = MatN.identity(some.field, some.size)
    for name, e in w.letters:
        result = result * (mats[name] ** e)
    return result


# ---------------------------------------------------------------------------
# Bruhat decomposition for SL(2)

@dataclass(frozen=True)
class BruhatFactors:
    """g = u1 * torus * weyl * u2 when the lower-left entry is nonzero;
    g = u1 * torus (weyl = u2 = identity) in the Borel case."""

    u1: MatN
    torus: MatN
    weyl: MatN
    u2: MatN
    is_borel: bool

    def recompose(self) -> MatN:
        return self.u1 * self.torus * self.weyl * self.u2

    def flipped_sign_display(self):
        """The same factorization in the opposite sign convention:
        (u1, -torus, -weyl, u2); the product is unchanged."""
        if self.is_borel:
            raise ValueError("no sign-flipped display in the Borel case")
        return self.u1, -self.torus, -self.weyl, self.u2


def bruhat_decompose(g: MatN) -> BruhatFactors:
    """Exact Bruhat factors of an SL(2) element.

    For c != 0:
      u1 = [[1, a/c], [0, 1]], torus = diag(1/c, c), weyl = [[0, -1], [1, 0]],
      u2 = [[1, d/c], [0, 1]].
    For c == 0 the element is upper triangular: u1 = [[1, a*b], [0, 1]],
    torus = diag(a, d), weyl = u2 = identity.
    """
    if g.size != 2:
        raise ValueError("Bruhat decomposition implemented for size 2")
    field = g.field
    if g.det() != field.one():
        raise ValueError("matrix must have determinant 1")
    (a, b), (c, d) = g.entries
    if not c:
        u1 = upper_elementary(field, a * b)
        torus = MatN(field, [[a, 0], [0, d]])
        ident = MatN.identity(field, 2)
        return BruhatFactors(u1, torus, ident, ident, True)
    cinv = c.inverse()
    u1 = upper_elementary(field, a * cinv)
    torus = MatN(field, [[cinv, field.zero()], [field.zero(), c]])
    weyl = MatN(field, [[0, -1], [1, 0]])
    u2 = upper_elementary(field, d * cinv)
    return BruhatFactors(u1, torus, weyl, u2, False)


# ---------------------------------------------------------------------------
# SU(2,1) for the anti-diagonal hermitian form

@dataclass(frozen=True)
class HermitianData:
    """The 3x3 anti-diagonal hermitian form with its conjugation.

    The conjugation is the order-two field automorphism acting on matrix
    entries; for a quadratic field it is sqrt(z) -> -sqrt(z).
    """

    form: MatN
    conjugation: FieldAutomorphism

    def __post_init__(self):
        if self.form.size != 3:
            raise ValueError("hermitian form must be 3x3")
        if not self.conjugation.is_involution():
            raise ValueError("conjugation must be an involution")
        if self.form.conj_transpose(self.conjugation) != self.form:
            raise ValueError("form is not hermitian for the conjugation")

    @classmethod
    def standard(cls, field: NumberField,
                 conjugation: FieldAutomorphism | None = None) -> "HermitianData":
        if conjugation is None:
            conjugation = FieldAutomorphism.quadratic_conjugation(field)
        form = MatN(field, [[0, 0, 1], [0, 1, 0], [1, 0, 0]])
        return cls(form, conjugation)


def su21_check(g: MatN, data: HermitianData) -> bool:
    """True iff conj-transpose(g) * h * g == h and det(g) == 1."""
    if g.size != 3:
        raise ValueError("expected a 3x3 matrix")
    h = data.form
    return (g.conj_transpose(data.conjugation) * h * g == h
            and g.det() == g.field.one())


def su21_uplus_generator(data: HermitianData, sqrt_z: FieldElement,
                         t_param: FieldElement, x: int,
                         u: FieldElement | None = None) -> MatN:
    """A generator of the t-scaled upper unipotent subgroup.

    With u omitted: the central family [[1, 0, t*x*sqrt_z], [0,1,0], [0,0,1]].
    With u given (integral): the full family
    [[1, t*u*x, -t^2 x^2 u ubar / 2], [0, 1, -t*ubar*x], [0, 0, 1]].
    """
    field = data.form.field
    conj = data.conjugation
    if sqrt_z.field != field or t_param.field != field:
        raise ValueError("parameters must live in the form's field")
    if conj(sqrt_z) != -sqrt_z:
        raise ValueError("sqrt_z must be skew under the conjugation")
    if conj(t_param) != t_param or not t_param.is_integral():
        raise ValueError("t parameter must be integral and fixed by the conjugation")
    if not isinstance(x, int):
        raise ValueError("x must be a rational integer")
    if u is None:
        w = t_param * sqrt_z * x
        return MatN(field, [[1, 0, w], [0, 1, 0], [0, 0, 1]])
    if u.field != field or not u.is_integral():
        raise ValueError("u must be an integral element of the field")
    ubar = conj(u)
    a = t_param * u * x
    top = -(t_param * t_param) * (u * ubar) * Fraction(x * x, 2)
    side = -(t_param * ubar) * x
    return MatN(field, [[1, a, top], [0, 1, side], [0, 0, 1]])


def u2alpha_parameter(g: MatN, sqrt_z: FieldElement, t_param: FieldElement):
    """If g = [[1,0,w],[0,1,0],[0,0,1]] with w = t * y * sqrt_z for a rational
    integer y, return y; otherwise None."""
    field = g.field
    ident = MatN.identity(field, 3)
    expected_zeros = all(
        g.entries[i][j] == ident.entries[i][j]
        for i in range(3) for j in range(3) if (i, j) != (0, 2)
    )
    if not expected_zeros:
        return None
    w = g.entries[0][2]
    denom = t_param * sqrt_z
    if not denom:
        return None
    y = w / denom
    if not y.is_rational():
        return None
    f = y.as_fraction()
    if f.denominator != 1:
        return None
    return f.numerator


def sl2_to_su21(g: MatN, sqrt_z: FieldElement) -> MatN:
    """The rank-one embedding [[a,b],[c,d]] ->
    [[a, 0, b*sqrt_z], [0, 1, 0], [c/sqrt_z, 0, d]].

    A homomorphism into SL(3); lands in the special unitary group whenever
    the entries of g are fixed by the conjugation.
    """
    if g.size != 2:
        raise ValueError("expected an SL(2) element")
    field = g.field
    if g.det() != field.one():
        raise ValueError("matrix must have determinant 1")
    if sqrt_z.field != field:
        raise ValueError("sqrt_z must live in the matrix field")
    (a, b), (c, d) = g.entries
    z = field.zero()
    return MatN(field, [[a, z, b * sqrt_z],
                        [z, field.one(), z],
                        [c / sqrt_z, z, d]])
