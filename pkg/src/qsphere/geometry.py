"""Spheres, their sizes, and pairwise intersections.

Every closed-form count here has a brute-force counterpart that enumerates
F_q^d directly, so formula and oracle can be cross-checked.  Points of
F_q^d are encoded as tuples of element indices; the flat enumeration index
of a point is sum_j x_j * q^j (coordinate 0 varies fastest), which fixes
"enumeration order" for point lists and witness scans.

Size of a sphere of radius r: q^(d-1) + N(kind, d, eta(-r)) where N is
`size_deviation`.  Size of the intersection of two distinct spheres with
radii r1, r2 and center distance t = Q(c1 - c2): q^(d-2) + N2, where N2
depends only on the row of the six-way classification below (d >= 3).
The reduction behind the table: points of the intersection project onto a
fiber parameter x in F_q with f(x) = t*x^2 - (r1 - r2 + t)*x + r1, and

    N2 = sum over x in F_q of size_deviation(kind, d-2, eta(-f(x))),

which `fiber_profile` / `fiber_reconstructed_size` realize directly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .errors import (
    DimensionMismatchError,
    DimensionTooSmallError,
    EqualPointsError,
    ParityMismatchError,
    SameSphereError,
    TooLargeError,
)
from .field import Field
from .forms import EVEN_KINDS, FormKind, KIND_SIGN, ODD_KINDS, QuadraticForm, effective_kind

ENUM_CAP = 10_000_000


# ---------------------------------------------------------------------------
# point enumeration
# ---------------------------------------------------------------------------

def num_points(field: Field, d: int) -> int:
    return field.q**d


def point_at(field: Field, d: int, index: int) -> tuple[int, ...]:
    q = field.q
    return tuple((index // q**j) % q for j in range(d))


def point_index(field: Field, d: int, point) -> int:
    q = field.q
    return sum(c * q**j for j, c in enumerate(point))


@lru_cache(maxsize=8)
def _coord_arrays(field: Field, d: int) -> tuple[np.ndarray, ...]:
    """Per-coordinate index arrays over all q^d points, in enumeration order."""
    q = field.q
    idx = np.arange(q**d, dtype=np.int64)
    return tuple((idx // q**j) % q for j in range(d))


def check_enum_cap(field: Field, d: int, cap: int = ENUM_CAP) -> None:
    if field.q**d > cap:
        raise TooLargeError(f"q^d = {field.q}^{d} exceeds enumeration cap {cap}")


def form_values_everywhere(form: QuadraticForm, center=None, cap: int = ENUM_CAP) -> np.ndarray:
    """Q(x - center) for every x in F_q^d, indexed in enumeration order."""
    check_enum_cap(form.field, form.d, cap)
    coords = _coord_arrays(form.field, form.d)
    if center is not None:
        if len(center) != form.d:
            raise DimensionMismatchError("center has wrong length")
        coords = [form.field.vsub(coords[j], center[j]) for j in range(form.d)]
    return form.evaluate_bulk(list(coords))


# ---------------------------------------------------------------------------
# spheres
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Sphere:
    """Level set {x : Q(x - center) = radius}."""

    form: QuadraticForm
    center: tuple[int, ...]
    radius: int

    def __post_init__(self):
        if len(self.center) != self.form.d:
            raise DimensionMismatchError(
                f"center has {len(self.center)} coordinates, form has d={self.form.d}"
            )


def sphere_contains(sphere: Sphere, x) -> bool:
    if len(x) != sphere.form.d:
        raise DimensionMismatchError("point has wrong length")
    F = sphere.form.field
    diff = tuple(F.sub(a, b) for a, b in zip(x, sphere.center))
    return sphere.form.evaluate(diff) == sphere.radius


def sphere_mask(sphere: Sphere, cap: int = ENUM_CAP) -> np.ndarray:
    """Boolean membership over all q^d points, in enumeration order."""
    return form_values_everywhere(sphere.form, sphere.center, cap) == sphere.radius


def sphere_points_brute(sphere: Sphere, cap: int = ENUM_CAP) -> list[tuple[int, ...]]:
    mask = sphere_mask(sphere, cap)
    F, d = sphere.form.field, sphere.form.d
    return [point_at(F, d, int(i)) for i in np.flatnonzero(mask)]


def sphere_size_brute(sphere: Sphere, cap: int = ENUM_CAP) -> int:
    return int(np.count_nonzero(sphere_mask(sphere, cap)))


# ---------------------------------------------------------------------------
# closed-form sizes
# ---------------------------------------------------------------------------

def size_deviation(kind: FormKind, d: int, field: Field, eta_minus_r: int) -> int:
    """The deviation N of a sphere's size from q^(d-1).

    `eta_minus_r` is the character of the negated radius.  Valid for every
    d >= 1, which lets the intersection reduction recurse into d-2.
    """
    q = field.q
    sign = KIND_SIGN[kind]
    if kind in ODD_KINDS:
        if d % 2 == 0:
            raise ParityMismatchError(f"{kind} needs odd dimension")
        return -sign * eta_minus_r * q ** ((d - 1) // 2)
    if d % 2:
        raise ParityMismatchError(f"{kind} needs even dimension")
    if eta_minus_r == 0:
        return -sign * (q ** (d // 2) - q ** ((d - 2) // 2))
    return sign * q ** ((d - 2) // 2)


def sphere_size_formula(form: QuadraticForm, r: int) -> int:
    """Closed-form point count of any sphere of radius r under this form."""
    kind = effective_kind(form)
    F = form.field
    eta = F.quadratic_character(F.neg(r))
    return F.q ** (form.d - 1) + size_deviation(kind, form.d, F, eta)


# ---------------------------------------------------------------------------
# the six-way intersection classification
# ---------------------------------------------------------------------------

class IntersectionRow(str, Enum):
    T0_BOTH_ZERO = "t0_both_zero"      # t = 0, r1 = r2 = 0
    T0_EQUAL = "t0_equal"              # t = 0, r1 = r2 != 0
    T0_DISTINCT = "t0_distinct"        # t = 0, r1 != r2
    D_ZERO = "D_zero"                  # t != 0, D = 0
    D_SQUARE = "D_square"              # t != 0, D a non-zero square
    D_NONSQUARE = "D_nonsquare"        # t != 0, D a non-square

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class IntersectionClass:
    t: int
    r1: int
    r2: int
    D: int
    row: IntersectionRow


def discriminant(field: Field, t: int, r1: int, r2: int) -> int:
    """t^2 + r1^2 + r2^2 - 2(t*r1 + t*r2 + r1*r2); symmetric in its arguments."""
    F = field
    sq = F.add(F.add(F.mul(t, t), F.mul(r1, r1)), F.mul(r2, r2))
    cross = F.add(F.add(F.mul(t, r1), F.mul(t, r2)), F.mul(r1, r2))
    return F.sub(sq, F.mul(F.from_int(2), cross))


def classify_intersection(field: Field, r1: int, r2: int, t: int) -> IntersectionClass:
    D = discriminant(field, t, r1, r2)
    if t == 0:
        if r1 == r2:
            row = IntersectionRow.T0_BOTH_ZERO if r1 == 0 else IntersectionRow.T0_EQUAL
        else:
            row = IntersectionRow.T0_DISTINCT
    else:
        eta = field.quadratic_character(D)
        if eta == 0:
            row = IntersectionRow.D_ZERO
        elif eta == 1:
            row = IntersectionRow.D_SQUARE
        else:
            row = IntersectionRow.D_NONSQUARE
    return IntersectionClass(t=t, r1=r1, r2=r2, D=D, row=row)


def intersection_deviation(kind: FormKind, d: int, field: Field, r1: int, r2: int, t: int) -> int:
    """The deviation N2 of |s1 ∩ s2| from q^(d-2), per classification row."""
    if d < 3:
        raise DimensionTooSmallError("closed-form intersections need d >= 3")
    if (kind in EVEN_KINDS) != (d % 2 == 0):
        raise ParityMismatchError(f"{kind} does not match dimension {d}")
    q = field.q
    sign = KIND_SIGN[kind]
    cls = classify_intersection(field, r1, r2, t)
    eta_mt = field.quadratic_character(field.neg(t))
    if kind in EVEN_KINDS:
        if cls.row is IntersectionRow.T0_BOTH_ZERO:
            return -sign * (q ** (d // 2) - q ** ((d - 2) // 2))
        if cls.row is IntersectionRow.T0_EQUAL:
            return sign * q ** ((d - 2) // 2)
        if cls.row in (IntersectionRow.T0_DISTINCT, IntersectionRow.D_ZERO):
            return 0
        if cls.row is IntersectionRow.D_SQUARE:
            return -sign * q ** ((d - 2) // 2)
        return sign * q ** ((d - 2) // 2)
    # odd-dimension kinds
    if cls.row is IntersectionRow.T0_BOTH_ZERO:
        return 0
    if cls.row is IntersectionRow.T0_EQUAL:
        eta_mr = field.quadratic_character(field.neg(r1))
        return -sign * eta_mr * q ** ((d - 1) // 2)
    if cls.row is IntersectionRow.T0_DISTINCT:
        return 0
    if cls.row is IntersectionRow.D_ZERO:
        return -sign * eta_mt * (q ** ((d - 1) // 2) - q ** ((d - 3) // 2))
    return sign * eta_mt * q ** ((d - 3) // 2)


def intersection_size_formula(form: QuadraticForm, r1: int, r2: int, t: int) -> int:
    """Closed-form |s1 ∩ s2| for spheres with distinct centers.

    t is the form value of the (nonzero) difference of centers.  The t = 0
    rows mean a nonzero isotropic difference; a concentric pair is a
    different orbit entirely (same sphere if r1 = r2, empty intersection
    otherwise) and is not covered by the table.
    """
    kind = effective_kind(form)
    q = form.field.q
    return q ** (form.d - 2) + intersection_deviation(kind, form.d, form.field, r1, r2, t)


def intersection_size_brute(s1: Sphere, s2: Sphere, cap: int = ENUM_CAP) -> int:
    if s1.form != s2.form:
        raise ValueError("spheres live under different forms")
    if s1 == s2:
        raise SameSphereError("intersection of a sphere with itself")
    return int(np.count_nonzero(sphere_mask(s1, cap) & sphere_mask(s2, cap)))


# ---------------------------------------------------------------------------
# fiber profile of the intersection reduction
# ---------------------------------------------------------------------------

def fiber_profile(form: QuadraticForm, r1: int, r2: int, t: int) -> Counter:
    """Multiset of eta(-f(x)) over x in F_q, f(x) = t*x^2 - (r1-r2+t)*x + r1."""
    if form.d < 3:
        raise DimensionTooSmallError("the fiber reduction needs d >= 3")
    F = form.field
    lin = F.add(F.sub(r1, r2), t)
    profile: Counter = Counter()
    for x in F.elements():
        fx = F.add(F.sub(F.mul(t, F.mul(x, x)), F.mul(lin, x)), r1)
        profile[F.quadratic_character(F.neg(fx))] += 1
    return profile


def fiber_reconstructed_size(form: QuadraticForm, r1: int, r2: int, t: int) -> int:
    """|s1 ∩ s2| rebuilt from the fiber profile and the (d-2)-size deviations."""
    kind = effective_kind(form)
    F, d = form.field, form.d
    profile = fiber_profile(form, r1, r2, t)
    n2 = sum(count * size_deviation(kind, d - 2, F, eta) for eta, count in profile.items())
    return F.q ** (d - 2) + n2


# ---------------------------------------------------------------------------
# radius sign class (odd dimensions)
# ---------------------------------------------------------------------------

def sign_class(kind: FormKind, field: Field, r: int) -> int:
    """-sign(kind) * eta(-r); the sign steering odd-dimension size deviations."""
    if kind not in ODD_KINDS:
        raise ParityMismatchError("sign_class applies to odd-dimension kinds")
    return -KIND_SIGN[kind] * field.quadratic_character(field.neg(r))


# ---------------------------------------------------------------------------
# bisector counts
# ---------------------------------------------------------------------------

def bisector_count_brute(form: QuadraticForm, x, y, cap: int = ENUM_CAP) -> int:
    """Number of centers z with Q(z - x) = Q(z - y); equivalently the number
    of spheres through both points."""
    if tuple(x) == tuple(y):
        raise EqualPointsError("bisector needs two distinct points")
    vx = form_values_everywhere(form, x, cap)
    vy = form_values_everywhere(form, y, cap)
    return int(np.count_nonzero(vx == vy))


def bisector_counts_from(form: QuadraticForm, x, y_indices: np.ndarray, cap: int = ENUM_CAP) -> np.ndarray:
    """Bisector counts for the pairs (x, y) over a batch of point indices y.

    Equivalent to calling `bisector_count_brute` per pair, but evaluated on a
    (len(y_indices), q^d) grid so exhaustive all-pairs sweeps stay cheap.
    """
    F, d, q = form.field, form.d, form.field.q
    check_enum_cap(F, d, cap)
    vx = form_values_everywhere(form, x, cap)
    coords = _coord_arrays(F, d)
    y_indices = np.asarray(y_indices, dtype=np.int64)
    grid = [F.vsub(coords[j][None, :], ((y_indices // q**j) % q)[:, None]) for j in range(d)]
    vy = form.evaluate_bulk(grid)
    return np.count_nonzero(vy == vx[None, :], axis=1)


def spheres_through_point_brute(form: QuadraticForm, x, cap: int = ENUM_CAP) -> int:
    """Number of (center, radius) spheres containing x: one per center."""
    check_enum_cap(form.field, form.d, cap)
    # every center admits exactly one radius, namely Q(x - center)
    return num_points(form.field, form.d)


# ---------------------------------------------------------------------------
# witness spheres at a prescribed center distance
# ---------------------------------------------------------------------------

def center_at_distance(form: QuadraticForm, t: int, exclude_origin: bool = False,
                       cap: int = ENUM_CAP) -> tuple[int, ...]:
    """First center c in enumeration order with Q(c) = t."""
    values = form_values_everywhere(form, None, cap)
    for idx in np.flatnonzero(values == t):
        idx = int(idx)
        if exclude_origin and idx == 0:
            continue
        return point_at(form.field, form.d, idx)
    raise ValueError(f"no point at distance {t}")  # non-degenerate forms: unreachable


def witness_sphere_pair(form: QuadraticForm, r1: int, r2: int, t: int,
                        cap: int = ENUM_CAP) -> tuple[Sphere, Sphere]:
    """A distinct-center sphere pair realizing radii (r1, r2) at distance t.

    The first center is the origin; the second is the first nonzero point in
    enumeration order with form value t (nonzero even when t = 0, since the
    intersection table is about genuinely distinct centers).
    """
    origin = (0,) * form.d
    c2 = center_at_distance(form, t, exclude_origin=(t == 0), cap=cap)
    return Sphere(form, origin, r1), Sphere(form, c2, r2)
