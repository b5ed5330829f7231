"""Truncated Witt vectors over Z/pZ and the residue-ring isomorphism.

A length-k vector of digits in [0, p) corresponds to the residue
sum(p^i * teichmuller(x_i)) mod p^k.  Ring operations round-trip through
that bijection; the explicit length-2 factor system is kept alongside as an
independent formula for cross-checking.
"""

from dataclasses import dataclass

from .errors import MismatchedRing, NotAUnit, WrongPrime
from .padic import (
    GHOST_LENGTH_CAP,
    PAdicInt,
    ghost_sequence,
    teichmuller,
    unit_inverse,
)
from .primes import check_prime


@dataclass(frozen=True, slots=True)
class WittVector:
    p: int
    digits: tuple[int, ...]

    def __post_init__(self):
        check_prime(self.p)
        if len(self.digits) == 0:
            raise ValueError("a Witt vector needs at least one digit")
        object.__setattr__(self, "digits", tuple(d % self.p for d in self.digits))

    @property
    def length(self) -> int:
        return len(self.digits)

    def truncated(self, k: int) -> "WittVector":
        if not 1 <= k <= self.length:
            raise ValueError(f"cannot truncate length {self.length} to {k}")
        return WittVector(self.p, self.digits[:k])

    def to_json_dict(self) -> dict:
        return {"p": self.p, "digits": list(self.digits)}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "WittVector":
        return cls(int(obj["p"]), tuple(int(d) for d in obj["digits"]))

    def __str__(self):
        return "(" + ",".join(str(d) for d in self.digits) + "]"

    def __add__(self, other):
        return witt_add(self, other)

    def __mul__(self, other):
        return witt_mul(self, other)

    def __neg__(self):
        return witt_neg(self)


def witt_to_padic(w: WittVector) -> PAdicInt:
    """Residue mod p^k of a length-k vector: sum of p^i * teichmuller(x_i)."""
    k = w.length
    total = PAdicInt(w.p, k, 0)
    for i, d in enumerate(w.digits):
        total = total + teichmuller(PAdicInt(w.p, k, d)) * w.p**i
    return total


def padic_to_witt(x: PAdicInt) -> WittVector:
    """Digits of a residue, peeled off one Teichmuller lift at a time."""
    digits = []
    cur = x
    while True:
        d = cur.residue % cur.p
        digits.append(d)
        if cur.precision == 1:
            return WittVector(x.p, tuple(digits))
        cur = (cur - teichmuller(PAdicInt(cur.p, cur.precision, d))).exact_div_p_power(1)


def integer_to_witt(n: int, p: int, length: int, *, ghost_cap: int = GHOST_LENGTH_CAP) -> WittVector:
    """Witt digits of an integer via its ghost quotients.

    For p not dividing n the digits are (n, -n q_1(n), -n q_2(n), ...) mod p;
    multiples of p fall back to digit peeling.
    """
    check_prime(p)
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    if n % p == 0:
        return padic_to_witt(PAdicInt(p, length, n))
    seq = ghost_sequence(p, n, length - 1, cap=ghost_cap)
    digits = [n % p] + [(-n * q) % p for q in seq.quotients[1:]]
    return WittVector(p, tuple(digits))


def rational_to_witt(m: int, n: int, p: int, length: int) -> WittVector:
    """Witt digits of the p-adic integer m/n; requires p not dividing n."""
    check_prime(p)
    if n % p == 0:
        from .errors import NotCoprime

        raise NotCoprime(f"denominator {n} is divisible by {p}")
    mod = p**length
    value = m % mod * pow(n % mod, -1, mod)
    return padic_to_witt(PAdicInt(p, length, value))


def _aligned(x: WittVector, y: WittVector) -> tuple[WittVector, WittVector]:
    if x.p != y.p:
        raise MismatchedRing(f"cannot mix Witt vectors for p={x.p} and p={y.p}")
    k = min(x.length, y.length)
    return x.truncated(k), y.truncated(k)


def witt_add(x: WittVector, y: WittVector) -> WittVector:
    a, b = _aligned(x, y)
    return padic_to_witt(witt_to_padic(a) + witt_to_padic(b))


def witt_mul(x: WittVector, y: WittVector) -> WittVector:
    a, b = _aligned(x, y)
    return padic_to_witt(witt_to_padic(a) * witt_to_padic(b))


def witt_neg(x: WittVector) -> WittVector:
    return padic_to_witt(-witt_to_padic(x))


def witt_inv(x: WittVector) -> WittVector:
    if x.digits[0] == 0:
        raise NotAUnit("leading digit is zero")
    return padic_to_witt(unit_inverse(witt_to_padic(x)))


def witt_arith(op: str, x: WittVector, y: WittVector | None = None) -> WittVector:
    """Dispatch add/mul/neg/inv by name."""
    if op in ("add", "mul"):
        if y is None:
            raise ValueError(f"'{op}' needs two operands")
        return witt_add(x, y) if op == "add" else witt_mul(x, y)
    if op in ("neg", "inv"):
        if y is not None:
            raise ValueError(f"'{op}' takes one operand")
        return witt_neg(x) if op == "neg" else witt_inv(x)
    raise ValueError(f"unknown operation {op!r}")


def factor_system_phi1(p: int, x0: int, y0: int) -> int:
    """Carry digit of length-2 addition: sum((-1)^i/i x0^i y0^(p-i)) mod p."""
    check_prime(p)
    if p == 2:
        raise WrongPrime("the factor-system formula needs p odd")
    x0 %= p
    y0 %= p
    acc = 0
    for i in range(1, p):
        term = pow(i, -1, p) * pow(x0, i, p) * pow(y0, p - i, p)
        acc = (acc - term) if i % 2 else (acc + term)
    return acc % p
