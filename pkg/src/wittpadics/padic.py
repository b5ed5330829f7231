"""Exact arithmetic on residues mod p^K with precision tracking.

A PAdicInt is a residue modulo p^K read as a p-adic integer known to K
base-p digits of absolute precision.  A PAdicNumber scales a unit PAdicInt
by a power of p, so it covers the whole p-adic field together with a
distinguished exact zero.  Everything here is immutable and every operation
is a pure function; binary operations carry the smaller of the two operand
precisions, and exact division by p^j costs j digits.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    ExactDivisionFailure,
    InvalidDegree,
    LengthLimit,
    MismatchedRing,
    NotAUnit,
    NotCoprime,
    PrecisionTooLow,
    WrongPrime,
    ZeroInput,
)
from .primes import check_prime

#: Ghost-sequence entries grow like n**(p**k); the default cap keeps the
#: exact-integer recursion affordable.
GHOST_LENGTH_CAP = 8


def padic_valuation(n: int, p: int) -> int:
    """Largest e such that p**e divides the nonzero integer n."""
    if n == 0:
        raise ValueError("the zero integer has no finite valuation")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


@dataclass(frozen=True, slots=True)
class PAdicInt:
    """Residue mod p**precision; the canonical representative is stored."""

    p: int
    precision: int
    residue: int

    def __post_init__(self):
        check_prime(self.p)
        if self.precision < 1:
            raise ValueError(f"precision must be >= 1, got {self.precision}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    @property
    def modulus(self) -> int:
        return self.p**self.precision

    @property
    def is_unit(self) -> bool:
        return self.residue % self.p != 0

    def lift_signed(self) -> int:
        """Representative of least absolute value (display helper)."""
        return self.residue - self.modulus if 2 * self.residue > self.modulus else self.residue

    def digits(self) -> list[int]:
        return digit_expansion(self)

    def with_precision(self, k: int) -> "PAdicInt":
        """Truncate to k <= precision digits."""
        if k > self.precision:
            raise PrecisionTooLow(f"cannot raise precision {self.precision} to {k}")
        return PAdicInt(self.p, k, self.residue)

    def exact_div_p_power(self, j: int) -> "PAdicInt":
        """Divide by p**j exactly; the result has j fewer digits."""
        if j == 0:
            return self
        if j < 0 or j >= self.precision:
            raise PrecisionTooLow(f"cannot divide a {self.precision}-digit value by p^{j}")
        q, r = divmod(self.residue, self.p**j)
        if r:
            raise ExactDivisionFailure(f"{self.residue} is not divisible by {self.p}^{j}")
        return PAdicInt(self.p, self.precision - j, q)

    def _binary(self, other, fn):
        if isinstance(other, int):
            other = PAdicInt(self.p, self.precision, other)
        elif not isinstance(other, PAdicInt):
            return NotImplemented
        if other.p != self.p:
            raise MismatchedRing(f"cannot mix residues for p={self.p} and p={other.p}")
        k = min(self.precision, other.precision)
        return PAdicInt(self.p, k, fn(self.residue, other.residue))

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __neg__(self):
        return PAdicInt(self.p, self.precision, -self.residue)

    def __str__(self):
        return f"{self.residue} (mod {self.p}^{self.precision})"


def unit_inverse(x: PAdicInt) -> PAdicInt:
    """Multiplicative inverse mod p^K of a unit."""
    if not x.is_unit:
        raise NotAUnit(f"{x.residue} is divisible by {x.p}")
    return PAdicInt(x.p, x.precision, pow(x.residue, -1, x.modulus))


def teichmuller(a: PAdicInt) -> PAdicInt:
    """The lift of a mod p that is fixed by the p-power map mod p^K.

    Iterating w -> w^p settles one more digit per step, so the loop is done
    after at most K rounds.  Residues divisible by p collapse to zero.
    """
    m = a.modulus
    w = a.residue
    for _ in range(a.precision + 1):
        nxt = pow(w, a.p, m)
        if nxt == w:
            return PAdicInt(a.p, a.precision, w)
        w = nxt
    raise AssertionError("p-power iteration failed to settle")


def digit_expansion(x: PAdicInt) -> list[int]:
    """Base-p digits l_0, ..., l_{K-1} with x = sum l_i p^i."""
    out = []
    r = x.residue
    for _ in range(x.precision):
        r, d = divmod(r, x.p)
        out.append(d)
    return out


def from_digits(p: int, digits) -> PAdicInt:
    """Rebuild a residue from its base-p digits (inverse of digit_expansion)."""
    residue = 0
    for i, d in enumerate(digits):
        if not 0 <= d < p:
            raise ValueError(f"digit {d} out of range for base {p}")
        residue += d * p**i
    return PAdicInt(p, len(digits), residue)


def kth_power_residue_test(p: int, a: int, k: int) -> bool:
    """Whether a is a k-th power mod p; requires p not dividing k.

    a is a k-th power in the units mod p iff a^((p-1)/g) = 1 where
    g = gcd(k, p-1).
    """
    check_prime(p)
    if k % p == 0:
        raise InvalidDegree(f"p = {p} divides the degree {k}")
    a %= p
    if a == 0:
        raise NotAUnit("a must be nonzero mod p")
    g = gcd(k, p - 1)
    return pow(a, (p - 1) // g, p) == 1


def _newton_lift_root(r: int, k: int, target: int, p: int, precision: int) -> int:
    # r is a simple mod-p root of x^k - target; double the precision each step.
    prec = 1
    while prec < precision:
        prec = min(2 * prec, precision)
        m = p**prec
        fr = (pow(r, k, m) - target) % m
        dr = k * pow(r, k - 1, m) % m
        r = (r - fr * pow(dr, -1, m)) % m
    return r


def hensel_kth_root(a: PAdicInt, k: int) -> tuple[PAdicInt, ...]:
    """All k-th roots of a unit mod p^K, for odd p with p not dividing k.

    There are exactly gcd(k, p-1) roots when the mod-p residue test passes
    and none otherwise; each mod-p solution lifts uniquely by Newton
    iteration because the derivative k*x^(k-1) stays a unit.
    """
    p, K = a.p, a.precision
    if p == 2:
        raise WrongPrime("p = 2 roots are handled by the square-root routine")
    if k < 1:
        raise InvalidDegree(f"degree must be >= 1, got {k}")
    if k % p == 0:
        raise InvalidDegree(f"p = {p} divides the degree {k}")
    a0 = a.residue % p
    if a0 == 0:
        raise NotAUnit(f"{a.residue} is divisible by {p}")
    g = gcd(k, p - 1)
    if pow(a0, (p - 1) // g, p) != 1:
        return ()
    base = []
    for r in range(1, p):
        if pow(r, k, p) == a0:
            base.append(r)
            if len(base) == g:
                break
    return tuple(PAdicInt(p, K, _newton_lift_root(r, k, a.residue, p, K)) for r in base)


@dataclass(frozen=True, slots=True)
class GhostSequence:
    """Exact integers a_0..a_k with constant ghost values, plus quotients.

    quotients holds q_i = -a_i / n (exact integers when p does not divide n)
    and is None when the sequence was built without them.
    """

    p: int
    n: int
    entries: tuple[int, ...]
    quotients: tuple[int, ...] | None


def ghost_value(p: int, entries, j: int) -> int:
    """The j-th ghost polynomial sum(p^i * a_i^(p^(j-i)), i <= j)."""
    return sum(p**i * entries[i] ** (p ** (j - i)) for i in range(j + 1))


def ghost_sequence(
    p: int,
    n: int,
    length: int,
    *,
    cap: int = GHOST_LENGTH_CAP,
    with_quotients: bool = True,
) -> GhostSequence:
    """Entries a_0 = n, a_1, ..., a_length keeping every ghost value equal to n.

    Each next entry is sum((a_i^(p^(k-i)) - a_i^(p^(k-i+1))) / p^(k-i+1), i <= k);
    every division is exact in integers, which is verified term by term.
    """
    check_prime(p)
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    if length > cap:
        raise LengthLimit(f"ghost length {length} exceeds the cap {cap}")
    if with_quotients and n % p == 0:
        raise NotCoprime(f"quotients need p = {p} not to divide n = {n}")
    entries = [n]
    for k in range(length):
        acc = 0
        for i in range(k + 1):
            num = entries[i] ** (p ** (k - i)) - entries[i] ** (p ** (k - i + 1))
            q, r = divmod(num, p ** (k - i + 1))
            if r:
                raise ExactDivisionFailure(
                    f"ghost recursion term (i={i}, k={k}) is not divisible by {p}^{k - i + 1}"
                )
            acc += q
        entries.append(acc)
    quotients = None
    if with_quotients:
        qs = []
        for a_i in entries:
            q, r = divmod(-a_i, n)
            if r:
                raise ExactDivisionFailure(f"entry {a_i} is not divisible by n = {n}")
            qs.append(q)
        quotients = tuple(qs)
    return GhostSequence(p, n, tuple(entries), quotients)


@dataclass(frozen=True, slots=True)
class PAdicNumber:
    """p^valuation times a unit residue, or the exact zero (unit is None)."""

    p: int
    valuation: int
    unit: PAdicInt | None

    def __post_init__(self):
        check_prime(self.p)
        if self.unit is None:
            if self.valuation != 0:
                raise ValueError("the exact zero must store valuation 0")
        else:
            if self.unit.p != self.p:
                raise MismatchedRing(f"unit is over p={self.unit.p}, expected {self.p}")
            if not self.unit.is_unit:
                raise NotAUnit(f"{self.unit.residue} is divisible by {self.p}")

    @classmethod
    def zero(cls, p: int) -> "PAdicNumber":
        return cls(p, 0, None)

    @classmethod
    def from_integer(cls, n: int, p: int, precision: int) -> "PAdicNumber":
        if n == 0:
            return cls.zero(p)
        v = padic_valuation(n, p)
        return cls(p, v, PAdicInt(p, precision, n // p**v))

    @classmethod
    def from_rational(cls, numerator: int, denominator: int, p: int, precision: int) -> "PAdicNumber":
        if denominator == 0:
            raise ZeroDivisionError("denominator must be nonzero")
        if numerator == 0:
            return cls.zero(p)
        vn = padic_valuation(numerator, p)
        vd = padic_valuation(denominator, p)
        m = p**precision
        unit = numerator // p**vn * pow(denominator // p**vd, -1, m)
        return cls(p, vn - vd, PAdicInt(p, precision, unit))

    @property
    def is_zero(self) -> bool:
        return self.unit is None

    @property
    def unit_precision(self) -> int:
        if self.unit is None:
            raise ZeroInput("the exact zero carries no precision")
        return self.unit.precision

    def abs_value(self) -> Fraction:
        """The p-adic absolute value p^(-valuation); 0 for the exact zero."""
        if self.is_zero:
            return Fraction(0)
        if self.valuation >= 0:
            return Fraction(1, self.p**self.valuation)
        return Fraction(self.p ** -self.valuation)

    def to_padic_int(self) -> PAdicInt:
        """The value as a plain residue; needs valuation >= 0."""
        if self.is_zero:
            raise ZeroInput("the exact zero has no unit form")
        if self.valuation < 0:
            raise ValueError(f"valuation {self.valuation} is negative")
        return PAdicInt(
            self.p,
            self.unit.precision + self.valuation,
            self.unit.residue * self.p**self.valuation,
        )

    def __mul__(self, other):
        if not isinstance(other, PAdicNumber):
            return NotImplemented
        if other.p != self.p:
            raise MismatchedRing(f"cannot mix p={self.p} and p={other.p}")
        if self.is_zero or other.is_zero:
            return PAdicNumber.zero(self.p)
        return PAdicNumber(self.p, self.valuation + other.valuation, self.unit * other.unit)

    def inverse(self) -> "PAdicNumber":
        if self.is_zero:
            raise ZeroDivisionError("zero is not invertible")
        return PAdicNumber(self.p, -self.valuation, unit_inverse(self.unit))

    def pow_int(self, e: int) -> "PAdicNumber":
        if self.is_zero:
            if e > 0:
                return self
            raise ZeroDivisionError("zero cannot be raised to a non-positive power")
        r = pow(self.unit.residue, e, self.unit.modulus)
        return PAdicNumber(self.p, self.valuation * e, PAdicInt(self.p, self.unit.precision, r))

    def __str__(self):
        if self.is_zero:
            return "0"
        if self.valuation == 0:
            return str(self.unit)
        return f"{self.p}^{self.valuation} * {self.unit}"
