"""Explicit three-generator sets and their symbolic word certificates.

The constructions pair a distinguished infinite-order unit with elementary
matrices; the word certificates realize target ring elements as upper (or
lower) unipotent entries through exact conjugation words, with the reachable
entry lattice controlled by an integer Hermite normal form.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .numberfield import (
    FieldElement,
    NumberField,
    SubfieldEmbedding,
    is_cm_field,
    totally_positive,
    unit_rank,
)
from .units import ThetaCertificate
from .matgroup import (
    MatN,
    Word,
    lower_elementary,
    torus_diag,
    upper_elementary,
    word_eval,
)

SL2_NONCM = "SL2_NONCM"
SL2_CM = "SL2_CM"
SL2_CMPRIME = "SL2_CMPRIME"
SU21 = "SU21"
SLN_MULTONE = "SLN_MULTONE"

CASE_TAGS = (SL2_NONCM, SL2_CM, SL2_CMPRIME, SU21, SLN_MULTONE)

_TRIPLE_CASES = (SL2_NONCM, SL2_CM, SLN_MULTONE)


class ConstructionError(ValueError):
    pass


class CMRedirect(ConstructionError):
    """Raised when the requested construction must be rerouted to the CM
    builder (trace zero / degenerate-unit situations)."""


@dataclass(frozen=True)
class Provenance:
    field: NumberField
    subfield: SubfieldEmbedding | None = None
    theta_cert: ThetaCertificate | None = None
    alpha: FieldElement | None = None
    notes: tuple = ()


@dataclass(frozen=True)
class GeneratorTriple:
    """Named generators with the common power r and their provenance."""

    case_tag: str
    gens: tuple  # ((name, MatN), ...)
    r: int
    provenance: Provenance

    def __post_init__(self):
        if self.case_tag not in CASE_TAGS:
            raise ValueError("unknown case tag %r" % self.case_tag)
        if self.case_tag in _TRIPLE_CASES and len(self.gens) != 3:
            raise ValueError("headline cases carry exactly three generators")

    def matrices(self):
        return tuple(m for _, m in self.gens)

    def named(self):
        return dict(self.gens)

    def serialize(self):
        return {
            "case": self.case_tag,
            "r": self.r,
            "generators": {name: m.serialize() for name, m in self.gens},
        }


def build_noncm(field: NumberField, theta_cert: ThetaCertificate,
                r: int) -> GeneratorTriple:
    """{u+^r, u-^r, h(theta)^r} over a field with an infinite unit group.

    Rejects the rationals and rank-zero fields outright; CM fields are
    rejected indirectly, because no unit of a CM field survives the
    full-degree checks behind the theta certificate.
    """
    if r < 1:
        raise ConstructionError("power r must be >= 1")
    if field.degree == 1:
        raise ConstructionError("the rational field has no infinite-order units")
    if unit_rank(field) < 1:
        raise ConstructionError("unit rank 0: no infinite-order unit exists")
    theta = theta_cert.theta
    if theta.field != field:
        raise ConstructionError("theta certificate belongs to a different field")
    u_plus = upper_elementary(field, 1) ** r
    u_minus = lower_elementary(field, 1) ** r
    h = torus_diag(field, theta) ** r
    prov = Provenance(field=field, theta_cert=theta_cert)
    return GeneratorTriple(SL2_NONCM, (("u+", u_plus), ("u-", u_minus), ("h", h)),
                           r, prov)


def build_cm(field_E: NumberField, subfield: SubfieldEmbedding,
             alpha: FieldElement, theta_cert: ThetaCertificate,
             r: int) -> GeneratorTriple:
    """{h(theta)^r, u+^r, u-^r} with u- = [[1,0],[alpha,1]] for a totally
    imaginary quadratic extension E of the totally real subfield F.

    alpha must satisfy alpha^2 = -beta with beta in F totally positive, and
    theta must come from F (its certificate is computed in F and the unit is
    embedded into E here).
    """
    if r < 1:
        raise ConstructionError("power r must be >= 1")
    if subfield.field != field_E:
        raise ConstructionError("subfield embedding does not target E")
    if not is_cm_field(field_E, subfield.sub, subfield.gen_image):
        raise ConstructionError("field is not CM over the declared subfield")
    if alpha.field != field_E:
        raise ConstructionError("alpha must live in E")
    beta_E = -(alpha * alpha)
    beta_coords = subfield.coords_in_sub(beta_E)
    if beta_coords is None:
        raise ConstructionError("alpha^2 is not the negative of a subfield element")
    beta_F = subfield.sub.element(beta_coords)
    if not beta_F or not totally_positive(beta_F):
        raise ConstructionError("-alpha^2 must be totally positive in F")
    theta_F = theta_cert.theta
    if theta_F.field != subfield.sub:
        raise ConstructionError("theta must come from the totally real subfield")
    theta_E = subfield.lift(theta_F)
    u_plus = upper_elementary(field_E, 1) ** r
    u_minus = lower_elementary(field_E, alpha) ** r
    h = torus_diag(field_E, theta_E) ** r
    prov = Provenance(field=field_E, subfield=subfield, theta_cert=theta_cert,
                      alpha=alpha)
    return GeneratorTriple(SL2_CM, (("h", h), ("u+", u_plus), ("u-", u_minus)),
                           r, prov)


# ---------------------------------------------------------------------------
# Elementary word certificates

@dataclass(frozen=True)
class ElementaryCertificate:
    """Words realizing elementary matrices with prescribed entries.

    achieved[i] is the ring element actually realized for the i-th input
    target (the target itself, or its N-multiple when only that is reachable);
    words[i] evaluates exactly to the corresponding elementary matrix.
    lattice_hnf columns span the reachable entry lattice; N is the smallest
    positive integer with N * (whole ring of the solving field) inside it.
    """

    achieved: tuple
    words: tuple
    n_achieved: int
    lattice_hnf: tuple
    kind: str  # "E12" or "E21"
    solving_field: NumberField
    matrix_field: NumberField
    embedding: SubfieldEmbedding | None = None

    def entry_of(self, index: int) -> FieldElement:
        """The achieved entry as an element of the matrix field."""
        x = self.achieved[index]
        if self.embedding is not None:
            return self.embedding.lift(x)
        return x

    def expected_matrix(self, index: int) -> MatN:
        entry = self.entry_of(index)
        fld = self.matrix_field
        if self.kind == "E12":
            return upper_elementary(fld, entry)
        return lower_elementary(fld, entry)

    def verify_words(self) -> bool:
        """Re-evaluate every word and compare with the claimed matrix."""
        return all(word_eval(w) == self.expected_matrix(i)
                   for i, w in enumerate(self.words))

    def serialize(self):
        return {
            "kind": self.kind,
            "n_achieved": self.n_achieved,
            "lattice_hnf": [list(col) for col in self.lattice_hnf],
            "achieved": [[str(c) for c in x.coords] for x in self.achieved],
            "words": [w.serialize() for w in self.words],
            "word_lengths": [w.length() for w in self.words],
        }


def _elementary_kind(u: MatN) -> tuple[str, FieldElement]:
    """Classify a unipotent generator as E12(x) or E21(x), x nonzero."""
    if u.size != 2:
        raise ConstructionError("elementary generator must be 2x2")
    (a, b), (c, d) = u.entries
    one = u.field.one()
    if a == one and d == one and not c and b:
        return "E12", b
    if a == one and d == one and not b and c:
        return "E21", c
    raise ConstructionError("generator is not a nontrivial elementary matrix")


def elementary_words(theta: FieldElement, u_plus: MatN, r: int, targets,
                     m_max: int | None = None,
                     embedding: SubfieldEmbedding | None = None) -> ElementaryCertificate:
    """Realize each target as the entry of an elementary matrix by a word in
    the r-th powers of the torus generator and of u_plus.

    Solves the integer linear system whose columns are the coordinate vectors
    of r * theta^(2mr) for m = 0..n-1, extending the power range up to m_max
    (default 4n) when the square system is singular or the solution is not
    integral; when a target is unreachable, its smallest reachable multiple
    N*target is certified instead, with N read off the Hermite normal form of
    the reachable lattice.

    theta lives in the solving field (the field, or the declared totally real
    subfield in the CM situation, passed as `embedding`); u_plus lives over
    the matrix field.
    """
    solving_field = theta.field
    n = solving_field.degree
    if m_max is None:
        m_max = 4 * n
    if r < 1:
        raise ConstructionError("power r must be >= 1")
    if embedding is not None and embedding.sub != solving_field:
        raise ConstructionError("embedding does not match theta's field")
    kind, base_entry = _elementary_kind(u_plus)
    matrix_field = u_plus.field
    if embedding is None and matrix_field != solving_field:
        raise ConstructionError("u_plus field differs from theta's field; "
                                "pass the subfield embedding")
    if base_entry != matrix_field.one():
        raise ConstructionError("expected unit entry in the elementary generator")

    targets = list(targets)
    for x in targets:
        if x.field != solving_field:
            raise ConstructionError("targets must live in theta's field")

    theta_sq_r = theta ** (2 * r)
    columns = []
    power = solving_field.from_rational(r)
    for _ in range(m_max):
        coords = power.integral_coords()
        if any(c.denominator != 1 for c in coords):
            raise ConstructionError("theta powers must be integral")
        columns.append([c.numerator for c in coords])
        power = power * theta_sq_r

    n_mult = linalg.lattice_index_multiplier(columns, n)
    if n_mult is None:
        raise ConstructionError(
            "reachable lattice has rank < %d within %d powers; the theta "
            "certificate is inconsistent with this configuration" % (n, m_max))
    h_cols, _, _ = linalg.column_hnf(columns)

    # The word alphabet is the triple's actual generators: the r-th powers.
    theta_mat = embedding.lift(theta) if embedding is not None else theta
    h_gen = torus_diag(matrix_field, theta_mat) ** r
    u_name = "u+" if kind == "E12" else "u-"
    alphabet = {"h": h_gen, u_name: u_plus ** r}
    # Conjugating E21 by h inverts the torus action; the exponent sign flips.
    h_sign = 1 if kind == "E12" else -1

    achieved = []
    words = []
    for x in targets:
        coords = x.integral_coords()
        if any(c.denominator != 1 for c in coords):
            raise ConstructionError("targets must be integral elements")
        tvec = [c.numerator for c in coords]

        solution = None
        goal = x
        # Square system over the first n powers first, per the construction.
        sq = linalg.solve_columns([columns[m] for m in range(n)], tvec)
        if sq is not None and all(c.denominator == 1 for c in sq):
            solution = [int(c) for c in sq] + [0] * (m_max - n)
        if solution is None:
            solution = linalg.lattice_solve(columns, tvec)
        if solution is None:
            scaled = [n_mult * t for t in tvec]
            solution = linalg.lattice_solve(columns, scaled)
            goal = x * n_mult
            if solution is None:
                raise ConstructionError(
                    "lattice solve failed for a multiple inside N*O_K")
        letters = []
        for m, coeff in enumerate(solution):
            if coeff:
                letters.extend([("h", h_sign * m), (u_name, coeff),
                                ("h", -h_sign * m)])
        if not letters:
            letters = [(u_name, 0)]
        words.append(Word(letters, alphabet))
        achieved.append(goal)

    cert = ElementaryCertificate(
        achieved=tuple(achieved),
        words=tuple(words),
        n_achieved=n_mult,
        lattice_hnf=tuple(tuple(col) for col in h_cols),
        kind=kind,
        solving_field=solving_field,
        matrix_field=matrix_field,
        embedding=embedding,
    )
    if not cert.verify_words():
        raise AssertionError("internal error: a certificate word fails to evaluate")
    return cert


def lattice_contains_multiple(cert: ElementaryCertificate) -> bool:
    """Confirm N * O ⊆ lattice by solving for N times each basis vector."""
    n = cert.solving_field.degree
    columns = [list(col) for col in cert.lattice_hnf]
    for i in range(n):
        target = [cert.n_achieved if j == i else 0 for j in range(n)]
        if linalg.lattice_solve(columns, target) is None:
            return False
    return True


# ---------------------------------------------------------------------------
# The product element of the trace-twisted construction

@dataclass(frozen=True)
class CMPrimeElement:
    g: MatN
    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement
    x: FieldElement
    theta: FieldElement
    t: FieldElement
    n: FieldElement


def relative_trace_norm(subfield: SubfieldEmbedding, x: FieldElement):
    """(t, n) in F with x^2 = t*x - n, for x in a quadratic extension E/F."""
    E = subfield.field
    if x.field != E:
        raise ConstructionError("x must live in the extension field")
    if subfield.relative_degree() != 2:
        raise ConstructionError("relative degree must be 2")
    if subfield.contains(x):
        raise ConstructionError("x must not lie in the subfield")
    m = subfield.sub.degree
    powers = [subfield.lift(subfield.sub.element([1 if i == j else 0
                                                  for i in range(m)]))
              for j in range(m)]
    columns = [list((p * x).coords) for p in powers]
    columns += [list((-p).coords) for p in powers]
    sol = linalg.solve_columns(columns, list((x * x).coords))
    if sol is None:
        raise ConstructionError("x does not satisfy a quadratic relation over F")
    t = subfield.sub.element(sol[:m])
    n = subfield.sub.element(sol[m:])
    return t, n


def cmprime_g_element(field_E: NumberField, subfield: SubfieldEmbedding,
                      x: FieldElement, theta: FieldElement) -> CMPrimeElement:
    """The product [[1,0],[-x/theta,1]] [[1,(theta-1)/t],[0,1]] [[1,0],[x,1]],
    with its components verified against the closed forms
    a = 1 + x(theta-1)/t and c = n(1-theta^-1)/t.

    Preconditions: x integral, x outside F, t = tr(x) != 0, and theta a unit
    congruent to 1 modulo t*O_F (theta may be handed over either in F or
    already embedded in E).
    """
    if subfield.field != field_E:
        raise ConstructionError("subfield embedding does not target E")
    if not x.is_integral():
        raise ConstructionError("x must be integral")
    t_F, n_F = relative_trace_norm(subfield, x)
    if not t_F:
        raise CMRedirect("trace zero: this x is covered by the CM construction")
    if theta.field == subfield.sub:
        theta_E = subfield.lift(theta)
    elif theta.field == field_E:
        theta_E = theta
        if not subfield.contains(theta_E):
            raise ConstructionError("theta must come from the subfield")
    else:
        raise ConstructionError("theta from an unrelated field")
    if theta_E == field_E.one():
        raise ConstructionError("theta = 1 is degenerate (a = 1, c = 0)")
    if abs(theta_E.norm()) != 1 or not theta_E.is_integral():
        raise ConstructionError("theta must be an integral unit")
    t_E = subfield.lift(t_F)
    n_E = subfield.lift(n_F)
    quotient = (theta_E - field_E.one()) / t_E
    q_coords = subfield.coords_in_sub(quotient)
    if q_coords is None or not subfield.sub.element(q_coords).is_integral():
        raise ConstructionError("theta is not congruent to 1 modulo t*O_F")

    g = (lower_elementary(field_E, -(x / theta_E))
         * upper_elementary(field_E, quotient)
         * lower_elementary(field_E, x))
    (a, b), (c, d) = g.entries
    # Closed forms from the construction; exact identities.
    assert a == field_E.one() + x * quotient
    assert c == n_E * (field_E.one() - theta_E.inverse()) / t_E
    if subfield.contains(a):
        raise ConstructionError("degenerate data: a lies in the subfield")
    if not subfield.contains(c) or not c:
        raise ConstructionError("c must be a nonzero subfield element")
    return CMPrimeElement(g=g, a=a, b=b, c=c, d=d, x=x, theta=theta_E,
                          t=t_E, n=n_E)


# ---------------------------------------------------------------------------
# SL(n) with the determinant-twisted column representation

@dataclass(frozen=True)
class WedgeReport:
    """Exact nonvanishing witness for the conjugate-span criterion."""

    exponents: tuple
    determinant: object  # Fraction for K = Q; FieldElement otherwise
    independent: bool

    def serialize(self):
        return {
            "exponents": list(self.exponents),
            "determinant": str(self.determinant),
            "independent": self.independent,
        }


def levi_embed(levi: MatN, size: int) -> MatN:
    """block diag(g, det(g)^-1) inside SL(size), g of size-1."""
    field = levi.field
    if levi.size != size - 1:
        raise ConstructionError("Levi block must have size n-1")
    det = levi.det()
    if not det.is_integral() or not det.inverse().is_integral():
        raise ConstructionError("Levi block determinant must be a unit")
    rows = []
    for i in range(size - 1):
        rows.append(list(levi.entries[i]) + [field.zero()])
    rows.append([field.zero()] * (size - 1) + [det.inverse()])
    return MatN.sl(field, rows)


def column_unipotent(field: NumberField, u_col) -> MatN:
    """[[I, x], [0, 1]] with x the given column over O_K."""
    size = len(u_col) + 1
    rows = []
    for i in range(size - 1):
        rows.append([1 if i == j else 0 for j in range(size - 1)] + [u_col[i]])
    rows.append([0] * (size - 1) + [1])
    return MatN(field, rows)


def diagonal_levi_from_unit(field: NumberField, theta: FieldElement,
                            exponents) -> MatN:
    """diag(theta^k1, ..., theta^k_{n-1}) as a Levi block."""
    ex = list(exponents)
    size = len(ex)
    rows = [[theta ** ex[i] if i == j else field.zero() for j in range(size)]
            for i in range(size)]
    return MatN(field, rows)


def build_sln_multone(field: NumberField, size: int, levi: MatN, u_col,
                      wedge_exponents=None, r: int = 1):
    """{m^r, u^r, (u^-)^r} in SL(size) with m = block diag(g, det g^-1),
    plus the exact wedge-criterion report.

    The criterion: the columns det(g)^k g^k x, k over the exponent list
    (default 0..size-2), are linearly independent; their determinant is the
    nonvanishing witness.  A zero determinant signals non-generic inputs and
    is an error (perturb u_col or the exponents).
    """
    if size < 3:
        raise ConstructionError("size must be >= 3")
    if r < 1:
        raise ConstructionError("power r must be >= 1")
    u_col = [v if isinstance(v, FieldElement) else field.from_rational(v)
             for v in u_col]
    if len(u_col) != size - 1:
        raise ConstructionError("u_col must have length n-1")
    for v in u_col:
        if not v.is_integral():
            raise ConstructionError("u_col entries must be integral")
    if wedge_exponents is None:
        wedge_exponents = tuple(range(size - 1))
    else:
        wedge_exponents = tuple(int(k) for k in wedge_exponents)
    if len(wedge_exponents) != size - 1:
        raise ConstructionError("need exactly n-1 wedge exponents")

    m = levi_embed(levi, size)
    det_g = levi.det()
    # Ad(m^k) on the column space is x -> det(g)^k g^k x.
    vectors = []
    for k in wedge_exponents:
        gk = levi ** k
        scale = det_g ** k
        col = [sum((gk.entries[i][j] * u_col[j] for j in range(size - 1)),
                   field.zero()) * scale
               for i in range(size - 1)]
        vectors.append(col)
    wedge_matrix = MatN(field, [[vectors[j][i] for j in range(size - 1)]
                                for i in range(size - 1)])
    det_w = wedge_matrix.det()
    report = WedgeReport(wedge_exponents,
                         det_w.as_fraction() if det_w.is_rational() else det_w,
                         bool(det_w))
    if not det_w:
        raise ConstructionError(
            "wedge determinant is zero: inputs are not generic "
            "(perturb u_col or the exponents)")

    u = column_unipotent(field, u_col)
    u_minus = u.transpose()
    triple = GeneratorTriple(
        SLN_MULTONE,
        (("m", m ** r), ("u", u ** r), ("u-", u_minus ** r)),
        r,
        Provenance(field=field, notes=("sln",)),
    )
    return triple, report
