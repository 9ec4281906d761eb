"""Unit acquisition and selection of the distinguished unit theta.

The only general-purpose machinery needed downstream is one infinite-order
unit per field.  Real quadratic fields get an exact continued-fraction Pell
solver (covering the half-integer maximal order when the basis allows it);
other fields take units from configuration or from a bounded, deterministic
coordinate search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt

from .numberfield import (
    INFINITE,
    FieldElement,
    NumberField,
    minimal_polynomial,
    subring_index,
    unit_rank,
)
from . import polyq

TORSION_TEST_BOUND = 24  # theta^r != 1 checked for r up to this bound


class NoThetaError(ValueError):
    """No unit in the source passes the full-degree / finite-index tests.

    Either the source must be enlarged, or the field violates the construction
    hypotheses (a CM field must be redirected to its totally real subfield).
    """


@dataclass(frozen=True)
class UnitSource:
    """Where units come from: 'pell', 'configured', or 'search'."""

    mode: str
    units: tuple = ()
    height_bound: int = 3

    def __post_init__(self):
        if self.mode not in ("pell", "configured", "search"):
            raise ValueError("unknown unit source mode %r" % self.mode)


@dataclass(frozen=True)
class ThetaCertificate:
    """Observed evidence that Z[theta^r] has finite index for r <= r_checked."""

    theta: FieldElement
    r_checked: int
    indices: tuple  # ((r, index), ...)
    full_degree: tuple  # (bool, ...) — deg minpoly(theta^r) == n

    def __post_init__(self):
        for _, idx in self.indices:
            if idx is INFINITE or idx <= 0:
                raise ValueError("certificate indices must be finite and positive")


def is_torsion_unit(u: FieldElement, bound: int = TORSION_TEST_BOUND) -> bool:
    one = u.field.one()
    cur = u
    for _ in range(bound):
        if cur == one:
            return True
        cur = cur * u
    return False


def pell_min_solution(d: int) -> tuple[int, int, int]:
    """Minimal (x, y), y >= 1, with x^2 - d*y^2 = +-1, via the continued
    fraction of sqrt(d).  Returns (x, y, norm)."""
    if d < 2:
        raise ValueError("d must be >= 2")
    a0 = isqrt(d)
    if a0 * a0 == d:
        raise ValueError("d must not be a perfect square")
    m, den, a = 0, 1, a0
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    while True:
        v = p * p - d * q * q
        if v == 1 or v == -1:
            return p, q, v
        m = den * a - m
        den = (d - m * m) // den
        a = (a0 + m) // den
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q


def fundamental_unit_real_quadratic(field: NumberField) -> FieldElement:
    """Fundamental unit of the field's order, by the Pell solver.

    Works for any monic quadratic with positive discriminant: sqrt(d) is
    expressed through the field generator, and when (1 + sqrt(d))/2 is
    integral the half-coordinate norm form a^2 - d b^2 = +-4 is searched as
    well, so that e.g. (1 + sqrt 5)/2 is found for the maximal order.
    """
    if field.degree != 2 or field.signature != (2, 0):
        raise ValueError("field is not real quadratic")
    b, _one = field.defining_poly[1], field.defining_poly[2]
    disc = b * b - 4 * field.defining_poly[0]
    # squarefree part: disc = d * s^2
    s = 1
    k = 2
    rem = int(disc)
    while k * k <= rem:
        while rem % (k * k) == 0:
            rem //= k * k
            s *= k
        k += 1
    d = rem
    if d < 2:
        raise ValueError("discriminant has no irrational part")
    sqrt_d = (2 * field.gen() + b) / s
    assert sqrt_d * sqrt_d == d

    x0, y0, _ = pell_min_solution(d)
    candidate = field.from_rational(x0) + sqrt_d * y0

    half = (field.one() + sqrt_d) / 2
    if d % 4 == 1 and half.is_integral():
        # a^2 - d b^2 = +-4 with a == b (mod 2); any solution smaller than the
        # Pell one has b <= 2*y0.
        for bb in range(1, 2 * y0 + 3):
            for target in (d * bb * bb - 4, d * bb * bb + 4):
                if target < 0:
                    continue
                aa = isqrt(target)
                if aa * aa != target or (aa - bb) % 2:
                    continue
                u = (field.from_rational(aa) + sqrt_d * bb) / 2
                if not u.is_integral():
                    continue
                if (bb, aa) < (2 * y0, 2 * x0):
                    candidate = u
                break
            else:
                continue
            break

    assert abs(candidate.norm()) == 1
    assert candidate.is_integral()
    assert not is_torsion_unit(candidate)
    return candidate


def unit_coordinate_search(field: NumberField, height_bound: int):
    """Deterministic (lexicographic) scan for infinite-order units.

    Yields integral elements with integral-basis coordinates in
    [-H, H]^n, absolute field norm 1, excluding roots of unity.
    """
    n = field.degree
    span = range(-height_bound, height_bound + 1)
    for coords in product(span, repeat=n):
        if not any(coords):
            continue
        u = field.from_integral_coords(coords)
        if abs(u.norm()) != 1:
            continue
        if is_torsion_unit(u):
            continue
        yield u


def _iter_units(field: NumberField, source: UnitSource):
    if source.mode == "pell":
        yield fundamental_unit_real_quadratic(field)
        return
    if source.mode == "configured":
        for u in source.units:
            if u.field != field:
                raise ValueError("configured unit from a different field")
            if not u.is_integral() or abs(u.norm()) != 1:
                raise ValueError("configured element is not a unit: %r" % (u,))
            yield u
        return
    yield from unit_coordinate_search(field, source.height_bound)


def select_theta(field: NumberField, source: UnitSource, r_max: int = 12) -> ThetaCertificate:
    """First unit theta (in source order) whose powers theta^r keep full
    minimal-polynomial degree and finite subring index for r = 1..r_max."""
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    n = field.degree
    if unit_rank(field) == 0:
        raise NoThetaError(
            "no infinite-order unit: unit rank of the field is 0")
    saw_candidate = False
    for theta in _iter_units(field, source):
        if is_torsion_unit(theta):
            continue
        saw_candidate = True
        indices = []
        full = []
        ok = True
        for r in range(1, r_max + 1):
            deg = polyq.degree(minimal_polynomial(theta ** r))
            idx = subring_index(theta, r)
            if deg != n or idx is INFINITE:
                ok = False
                break
            full.append(True)
            indices.append((r, idx))
        if ok:
            return ThetaCertificate(theta, r_max, tuple(indices), tuple(full))
    if saw_candidate:
        raise NoThetaError(
            "no unit passes the full-degree tests up to r_max=%d; enlarge the "
            "source, or if the field is CM use its totally real subfield" % r_max)
    raise NoThetaError("no infinite-order unit found in the source")


def check_eq_card(field_E: NumberField, subfield_F: NumberField,
                  real_place_data, complex_places_count: int) -> bool:
    """Evaluate the unit-rank place-count equation for E over F.

    real_place_data lists, for each real place a of F, the pair (x(a), y(a))
    of real places and non-conjugate complex places of E above a;
    complex_places_count is the number of non-conjugate complex places of F
    (each carries exactly d = [E:F] complex places of E above it).  Returns
    whether

        Card(A) + Card(B) == sum_a (x(a) + y(a)) + sum_b y(b)

    holds, i.e. whether the unit ranks of E and F agree.
    """
    if field_E.degree % subfield_F.degree:
        raise ValueError("[E:Q] must be divisible by [F:Q]")
    d = field_E.degree // subfield_F.degree
    r1_F, r2_F = subfield_F.signature
    if len(real_place_data) != r1_F or complex_places_count != r2_F:
        raise ValueError("place data does not match the signature of F")
    for x, y in real_place_data:
        if x < 0 or y < 0 or x + 2 * y != d:
            raise ValueError("inconsistent place data: x(a) + 2 y(a) must equal %d" % d)
    lhs = len(real_place_data) + complex_places_count
    rhs = sum(x + y for x, y in real_place_data) + complex_places_count * d
    return lhs == rhs
