"""Canonical non-degenerate quadratic forms and their classification.

Five kinds are supported.  With 0-based coordinates x[0..d-1]:

    Q1 (d even):  x0*x1 + x2*x3 + ... + x[d-2]*x[d-1]
    Q2 (d even):  x0*x1 + ... + x[d-4]*x[d-3] + x[d-2]^2 - eps*x[d-1]^2
    Q3 (d odd):   x0*x1 + ... + x[d-3]*x[d-2] - x[d-1]^2
    Q4 (d odd):   x0*x1 + ... + x[d-3]*x[d-2] - eps*x[d-1]^2
    sum-of-squares ("norm"):  x0^2 + ... + x[d-1]^2, any d

where eps is a fixed non-square (the index-smallest one unless overridden).
Every non-degenerate form in dimension d is equivalent to exactly one of
the two parity-matching canonical kinds, decided by whether the character
of its matrix determinant is +1 or -1; `norm_equivalence_class` resolves
the sum-of-squares form to its canonical kind for given (d, q).
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .errors import DimensionMismatchError, ParityMismatchError
from .field import Field


class FormKind(str, Enum):
    Q1 = "Q1"
    Q2 = "Q2"
    Q3 = "Q3"
    Q4 = "Q4"
    NORM = "norm"

    def __str__(self):
        return self.value


EVEN_KINDS = (FormKind.Q1, FormKind.Q2)
ODD_KINDS = (FormKind.Q3, FormKind.Q4)

# the alternating sign (-1)^i attached to kind Q_i
KIND_SIGN = {FormKind.Q1: -1, FormKind.Q2: 1, FormKind.Q3: -1, FormKind.Q4: 1}


def parse_kind(text: str) -> FormKind:
    for kind in FormKind:
        if kind.value.lower() == text.lower():
            return kind
    raise ValueError(f"unknown form kind {text!r}")


def _num_pairs(kind: FormKind, d: int) -> int:
    """Count of x[2i]*x[2i+1] product terms in the canonical shape."""
    if kind is FormKind.Q1:
        return d // 2
    if kind is FormKind.Q2:
        return (d - 2) // 2
    return (d - 1) // 2


class QuadraticForm:
    """One canonical form at a fixed dimension over a fixed field."""

    def __init__(self, field: Field, kind: FormKind, d: int, epsilon: int | None = None):
        if d < 2:
            raise ValueError(f"dimension must be >= 2, got {d}")
        if kind in EVEN_KINDS and d % 2:
            raise ParityMismatchError(f"{kind} needs even dimension, got {d}")
        if kind in ODD_KINDS and d % 2 == 0:
            raise ParityMismatchError(f"{kind} needs odd dimension, got {d}")
        if kind in (FormKind.Q2, FormKind.Q4):
            if epsilon is None:
                epsilon = field.smallest_nonsquare()
            if field.quadratic_character(epsilon) != -1:
                raise ValueError("epsilon must be a non-square")
        else:
            epsilon = None
        self.field = field
        self.kind = kind
        self.d = d
        self.epsilon = epsilon

    def __repr__(self):
        return f"QuadraticForm({self.kind}, d={self.d}, q={self.field.q})"

    def __eq__(self, other):
        return (
            isinstance(other, QuadraticForm)
            and (self.field, self.kind, self.d, self.epsilon)
            == (other.field, other.kind, other.d, other.epsilon)
        )

    def __hash__(self):
        return hash((self.field, self.kind, self.d, self.epsilon))

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, x) -> int:
        """Value of the form at a length-d vector of element indices."""
        if len(x) != self.d:
            raise DimensionMismatchError(f"expected {self.d} coordinates, got {len(x)}")
        F, d = self.field, self.d
        kind = self.kind
        if kind is FormKind.NORM:
            acc = 0
            for c in x:
                acc = F.add(acc, F.mul(c, c))
            return acc
        pairs = _num_pairs(kind, d)
        acc = 0
        for i in range(pairs):
            acc = F.add(acc, F.mul(x[2 * i], x[2 * i + 1]))
        if kind is FormKind.Q1:
            return acc
        if kind is FormKind.Q2:
            acc = F.add(acc, F.mul(x[d - 2], x[d - 2]))
            return F.sub(acc, F.mul(self.epsilon, F.mul(x[d - 1], x[d - 1])))
        last_sq = F.mul(x[d - 1], x[d - 1])
        if kind is FormKind.Q4:
            last_sq = F.mul(self.epsilon, last_sq)
        return F.sub(acc, last_sq)

    def evaluate_bulk(self, coords: list[np.ndarray]) -> np.ndarray:
        """Elementwise form values over d parallel index arrays."""
        if len(coords) != self.d:
            raise DimensionMismatchError(f"expected {self.d} coordinate arrays")
        F, d, kind = self.field, self.d, self.kind
        if kind is FormKind.NORM:
            acc = F.vmul(coords[0], coords[0])
            for j in range(1, d):
                acc = F.vadd(acc, F.vmul(coords[j], coords[j]))
            return acc
        pairs = _num_pairs(kind, d)
        acc = np.zeros_like(coords[0])
        for i in range(pairs):
            acc = F.vadd(acc, F.vmul(coords[2 * i], coords[2 * i + 1]))
        if kind is FormKind.Q1:
            return acc
        if kind is FormKind.Q2:
            acc = F.vadd(acc, F.vmul(coords[d - 2], coords[d - 2]))
            neg = F.vmul(F.vmul(coords[d - 1], coords[d - 1]), self.epsilon)
            return F.vsub(acc, neg)
        last = F.vmul(coords[d - 1], coords[d - 1])
        if kind is FormKind.Q4:
            last = F.vmul(last, self.epsilon)
        return F.vsub(acc, last)

    # -- associated symmetric matrix ------------------------------------------

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Symmetric matrix A with Q(x) = x^T A x; cross terms split by 1/2."""
        F, d, kind = self.field, self.d, self.kind
        half = F.inv(F.from_int(2))
        A = [[0] * d for _ in range(d)]
        if kind is FormKind.NORM:
            for j in range(d):
                A[j][j] = 1
            return tuple(tuple(row) for row in A)
        pairs = _num_pairs(kind, d)
        for i in range(pairs):
            A[2 * i][2 * i + 1] = half
            A[2 * i + 1][2 * i] = half
        if kind is FormKind.Q2:
            A[d - 2][d - 2] = 1
            A[d - 1][d - 1] = F.neg(self.epsilon)
        elif kind is FormKind.Q3:
            A[d - 1][d - 1] = F.neg(1)
        elif kind is FormKind.Q4:
            A[d - 1][d - 1] = F.neg(self.epsilon)
        return tuple(tuple(row) for row in A)

    def determinant(self) -> int:
        """Determinant of the associated matrix, by elimination over GF(q)."""
        F = self.field
        A = [list(row) for row in self.matrix()]
        d = self.d
        det = 1
        for col in range(d):
            pivot = next((r for r in range(col, d) if A[r][col] != 0), None)
            if pivot is None:
                return 0
            if pivot != col:
                A[col], A[pivot] = A[pivot], A[col]
                det = F.neg(det)
            det = F.mul(det, A[col][col])
            inv_p = F.inv(A[col][col])
            for r in range(col + 1, d):
                factor = F.mul(A[r][col], inv_p)
                if factor:
                    for c in range(col, d):
                        A[r][c] = F.sub(A[r][c], F.mul(factor, A[col][c]))
        return det

    def det_character(self) -> int:
        """Character of the matrix determinant; +1 or -1 (non-degenerate)."""
        return self.field.quadratic_character(self.determinant())


def make_form(field: Field, kind: FormKind | str, d: int, epsilon: int | None = None) -> QuadraticForm:
    if isinstance(kind, str):
        kind = parse_kind(kind)
    return QuadraticForm(field, kind, d, epsilon)


def norm_equivalence_class(d: int, field: Field) -> FormKind:
    """Canonical kind equivalent to the sum-of-squares form in dimension d."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    q = field.q
    if d % 2 == 0:
        return FormKind.Q2 if (q % 4 == 3 and d % 4 == 2) else FormKind.Q1
    return FormKind.Q4 if (q % 4 == 3 and d % 4 == 1) else FormKind.Q3


def effective_kind(form: QuadraticForm) -> FormKind:
    """The canonical kind governing closed-form counts for this form."""
    if form.kind is FormKind.NORM:
        return norm_equivalence_class(form.d, form.field)
    return form.kind
