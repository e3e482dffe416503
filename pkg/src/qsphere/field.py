"""Exact arithmetic, element enumeration, and the quadratic character for GF(q).

q = p^k with p an odd prime.  Elements are encoded as integers in [0, q):
the element with coefficient vector (c0, ..., c_{k-1}) in the power basis
1, a, ..., a^{k-1} has index c0 + c1*p + ... + c_{k-1}*p^{k-1}.  Index 0 is
the zero element and index 1 is the multiplicative identity.  Index order
is the canonical element order everywhere: enumeration, serialization, and
"smallest" choices such as the preferred non-square.

Extension fields are built over the reduction polynomial X^k + c(X) where
c is the element-index-smallest choice making the polynomial irreducible,
so the encoding is reproducible from (p, k) alone.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import (
    DivisionByZeroError,
    EvenCharacteristicError,
    NotPrimeError,
    TooLargeError,
)

MAX_FIELD_SIZE = 10_000


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p); coefficient tuples, constant term first
# ---------------------------------------------------------------------------

def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_rem(num, den, p):
    """Remainder of num modulo monic den."""
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c:
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    return num[:dd]


def _is_irreducible(poly, p):
    """Trial division by every monic polynomial of degree 1..deg/2."""
    k = len(poly) - 1
    for deg in range(1, k // 2 + 1):
        for idx in range(p**deg):
            div = [(idx // p**j) % p for j in range(deg)] + [1]
            if not any(_poly_rem(poly, div, p)):
                return False
    return True


def _smallest_modulus(p: int, k: int) -> tuple[int, ...]:
    """Monic degree-k irreducible with the index-smallest low-coefficient part."""
    if k == 1:
        return (0, 1)  # the polynomial X; unused for prime fields
    for idx in range(p**k):
        low = [(idx // p**j) % p for j in range(k)]
        poly = low + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


class Field:
    """GF(p^k) for odd prime p, with all operations on element indices.

    Scalar operations take and return plain ints.  The v*-methods operate
    elementwise on numpy integer arrays of indices and back the brute-force
    enumeration oracles.
    """

    def __init__(self, p: int, k: int = 1, max_size: int = MAX_FIELD_SIZE):
        if p == 2 or (p % 2 == 0):
            raise EvenCharacteristicError(f"characteristic must be odd, got {p}")
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        if k < 1:
            raise ValueError(f"extension degree must be >= 1, got {k}")
        if p**k > max_size:
            raise TooLargeError(f"q = {p}^{k} exceeds the cap {max_size}")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = _smallest_modulus(p, k)
        self._powers = tuple(p**j for j in range(k))
        if k > 1:
            self._build_log_tables()
        self._build_eta()

    # -- construction internals --------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        """Table-free product; used to bootstrap the log tables."""
        if self.k == 1:
            return (a * b) % self.p
        va = [(a // pw) % self.p for pw in self._powers]
        vb = [(b // pw) % self.p for pw in self._powers]
        vc = _poly_rem(_poly_mul(va, vb, self.p), self.modulus, self.p)
        return sum(c * pw for c, pw in zip(vc, self._powers))

    def _raw_pow(self, a: int, e: int) -> int:
        out, base = 1, a
        while e:
            if e & 1:
                out = self._raw_mul(out, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return out

    def _build_log_tables(self) -> None:
        q = self.q
        factors = _prime_factors(q - 1)
        gen = 0
        for cand in range(2, q):
            if all(self._raw_pow(cand, (q - 1) // f) != 1 for f in factors):
                gen = cand
                break
        assert gen, "no multiplicative generator found"
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            exp[i + q - 1] = x
            log[x] = i
            x = self._raw_mul(x, gen)
        assert x == 1, "generator order mismatch"
        self._exp = exp
        self._log = log

    def _build_eta(self) -> None:
        q = self.q
        eta = np.zeros(q, dtype=np.int64)
        half = (q - 1) // 2
        one, minus_one = 1, self.neg(1)
        for x in range(1, q):
            v = self._raw_pow(x, half) if self.k > 1 else pow(x, half, self.p)
            if v == one:
                eta[x] = 1
            elif v == minus_one:
                eta[x] = -1
            else:  # pragma: no cover - impossible for odd q
                raise AssertionError("x^((q-1)/2) outside {1,-1}")
        # cross-check against the table of squares
        squares = {self._raw_mul(x, x) for x in range(1, q)}
        for x in range(1, q):
            assert (eta[x] == 1) == (x in squares), "character/squares mismatch"
        self._eta = eta

    # -- identity / ordering -------------------------------------------------

    def __repr__(self):
        return f"GF({self.q})"

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    # -- element encoding ----------------------------------------------------

    def elements(self) -> range:
        """All q elements exactly once, in canonical index order."""
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def coeffs(self, x: int) -> tuple[int, ...]:
        """Coefficient vector of x in the power basis, constant term first."""
        return tuple((x // pw) % self.p for pw in self._powers)

    def element(self, coeffs) -> int:
        """Index of the element with the given coefficient vector."""
        if len(coeffs) != self.k:
            raise ValueError(f"need {self.k} coefficients, got {len(coeffs)}")
        return sum((c % self.p) * pw for c, pw in zip(coeffs, self._powers))

    def from_int(self, n: int) -> int:
        """Image of the rational integer n in the prime subfield."""
        return n % self.p

    # -- scalar arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        return sum((((a // pw) % p + (b // pw) % p) % p) * pw for pw in self._powers)

    def sub(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a - b) % self.p
        p = self.p
        return sum((((a // pw) % p - (b // pw) % p) % p) * pw for pw in self._powers)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        return sum(((-((a // pw) % p)) % p) * pw for pw in self._powers)

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return int(self._exp[self._log[a] + self._log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZeroError("inverse of zero")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return int(self._exp[(self.q - 1) - self._log[a]])

    def power(self, a: int, e: int) -> int:
        """a**e for a non-negative integer exponent."""
        if e < 0:
            raise ValueError("exponent must be non-negative")
        if a == 0:
            return 1 if e == 0 else 0
        if self.k == 1:
            return pow(a, e, self.p)
        return int(self._exp[(self._log[a] * e) % (self.q - 1)])

    def quadratic_character(self, x: int) -> int:
        """0 for x = 0, +1 for a non-zero square, -1 otherwise."""
        return int(self._eta[x])

    @property
    def eta_table(self) -> np.ndarray:
        """Length-q table of quadratic-character values (read-only view)."""
        return self._eta

    def smallest_nonsquare(self) -> int:
        """First element in index order with character -1."""
        for x in range(1, self.q):
            if self._eta[x] == -1:
                return x
        raise AssertionError("odd field without non-squares")  # unreachable

    # -- vectorized arithmetic on index arrays --------------------------------

    def varray(self, values) -> np.ndarray:
        return np.asarray(values, dtype=np.int64)

    def vadd(self, a: np.ndarray, b) -> np.ndarray:
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        out = np.zeros_like(a)
        for pw in self._powers:
            out += (((a // pw) % p + (b // pw) % p) % p) * pw
        return out

    def vsub(self, a, b) -> np.ndarray:
        if self.k == 1:
            return (a - b) % self.p
        p = self.p
        a = np.asarray(a)
        out = np.zeros_like(a)
        for pw in self._powers:
            out += (((a // pw) % p - (b // pw) % p) % p) * pw
        return out

    def vneg(self, a) -> np.ndarray:
        return self.vsub(0 * np.asarray(a), a)

    def vmul(self, a, b) -> np.ndarray:
        if self.k == 1:
            return (np.asarray(a) * b) % self.p
        a = np.asarray(a)
        b = np.asarray(b)
        prod = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, prod)

    def veta(self, a) -> np.ndarray:
        return self._eta[np.asarray(a)]


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1, max_size: int = MAX_FIELD_SIZE) -> Field:
    """Build (and cache) GF(p^k) with the canonical reduction polynomial."""
    return Field(p, k, max_size)


def field_of_order(q: int, max_size: int = MAX_FIELD_SIZE) -> Field:
    """GF(q) for a prime power q, factoring q automatically."""
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                raise NotPrimeError(f"{q} is not a prime power")
            return make_field(p, k, max_size)
    raise NotPrimeError(f"{q} is not a prime power")
