"""Existence tests and constructions for roots of p-adic numbers.

Covers p^k-th roots of units via the Witt-digit criterion, square roots for
p = 2, general degrees by splitting off the p-part, Fermat quotients, and
the number-theoretic searches built on them.
"""

import enum
from dataclasses import dataclass

from .analytic import ExactExponent, pexp, plog, ppow
from .errors import (
    NotAUnit,
    PrecisionTooLow,
    RootCondition,
    WrongPrime,
    ZeroInput,
)
from .padic import PAdicInt, PAdicNumber, hensel_kth_root
from .primes import check_prime, primes_up_to
from .witt import factor_system_phi1, padic_to_witt


class RootReason(enum.Enum):
    OK = "ok"
    VALUATION_NOT_DIVISIBLE = "valuation not divisible"
    WITT_DIGIT_NONZERO = "witt digit nonzero"
    NOT_KTH_RESIDUE = "not a k-th power residue"
    MOD8_FAILURE = "not 1 mod 8"


@dataclass(frozen=True, slots=True)
class RootCheck:
    """Outcome of an existence test, before any root is constructed."""

    ok: bool
    reason: RootReason
    digit_index: int | None = None


@dataclass(frozen=True, slots=True)
class RootReport:
    """Roots of a given degree, or the first obstruction met.

    exists iff roots is non-empty; every root raised to the degree
    reproduces the input at its full input precision, while the roots
    themselves are determined to output_precision digits.
    """

    exists: bool
    reason: RootReason
    digit_index: int | None
    roots: tuple[PAdicNumber, ...]
    output_precision: int


@dataclass(frozen=True, slots=True)
class QuotientCongruenceReport:
    """Both sides of the root/quotient congruence, reduced mod p."""

    holds: bool
    root_quotient: int
    scaled_quotient: int
    digit_value: int
    digit_predicted: int


@dataclass(frozen=True, slots=True)
class FermatWitness:
    """Residue pair with vanishing carry whose p-th-power sum has a p-th root.

    (x, y, -root) solves X^p + Y^p + Z^p = 0 in the p-adic integers: the
    root satisfies root^p = x^p + y^p, so negating it moves the sum to zero.
    """

    p: int
    x: int
    y: int
    sum: int
    root: PAdicInt


def _require_unit(x: PAdicNumber) -> PAdicInt:
    if x.is_zero:
        raise ZeroInput("expected a unit, got the exact zero")
    if x.valuation != 0:
        raise NotAUnit(f"valuation {x.valuation} is nonzero")
    return x.unit


def fermat_quotient(x: PAdicNumber) -> PAdicInt:
    """(x^(p-1) - 1) / p for a unit; carries one digit less than x."""
    if x.p == 2:
        raise WrongPrime("Fermat quotients are defined for odd p")
    u = _require_unit(x)
    if u.precision < 2:
        raise PrecisionTooLow("need at least 2 digits to form the quotient")
    power = PAdicInt(x.p, u.precision, pow(u.residue, x.p - 1, u.modulus))
    return (power - 1).exact_div_p_power(1)


def _k1_cross_check(unit: PAdicInt, digit_ok: bool) -> None:
    # The three equivalent degree-p tests must agree; a mismatch is a bug.
    p = unit.p
    q = fermat_quotient(PAdicNumber(p, 0, unit))
    quot_ok = q.residue % p == 0
    a = unit.residue % p**2
    power_ok = pow(a, p, p**2) == a
    l0, l1 = a % p, a // p % p
    predicted = (pow(l0, p, p**3) - l0) % p**2 // p % p
    digit_form_ok = l1 == predicted
    if not (digit_ok == quot_ok == power_ok == digit_form_ok):
        raise AssertionError(
            f"degree-p criteria disagree for {unit}: digit={digit_ok} "
            f"quotient={quot_ok} power={power_ok} digit-form={digit_form_ok}"
        )


def pk_root_exists(x: PAdicNumber, k: int) -> RootCheck:
    """Criterion for a p^k-th root: p^k | valuation and unit digits 1..k zero."""
    if x.is_zero:
        raise ZeroInput("zero has no root report")
    if x.p == 2:
        raise WrongPrime("use the p = 2 square-root routine")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    p = x.p
    if x.valuation % p**k != 0:
        return RootCheck(False, RootReason.VALUATION_NOT_DIVISIBLE)
    K = x.unit.precision
    if K < k + 1:
        raise PrecisionTooLow(f"need {k + 1} digits to read Witt digits 1..{k}, have {K}")
    digits = padic_to_witt(x.unit).digits
    for i in range(1, k + 1):
        if digits[i]:
            if k == 1:
                _k1_cross_check(x.unit, digit_ok=False)
            return RootCheck(False, RootReason.WITT_DIGIT_NONZERO, i)
    if k == 1:
        _k1_cross_check(x.unit, digit_ok=True)
    return RootCheck(True, RootReason.OK)


def pk_root(x: PAdicNumber, k: int) -> RootReport:
    """The unique p^k-th root of x when the digit criterion holds.

    The root is p^(z/p^k) * teichmuller(x_0) * exp(log(principal part)/p^k)
    and is determined to K - k digits.
    """
    check = pk_root_exists(x, k)
    K = x.unit.precision
    if not check.ok:
        return RootReport(False, check.reason, check.digit_index, (), K)
    root = ppow(x, ExactExponent(1, k))
    return RootReport(True, RootReason.OK, None, (root,), K - k)


def root_quotient_congruence_check(x: PAdicNumber, k: int) -> QuotientCongruenceReport:
    """Compare q_1(root) with q_1(x)/p^k mod p, and the digit congruence.

    Also evaluates the precursor form: Witt digit k+1 of the unit part must
    be -x_0 * (q_1(x)/p^k) mod p.  Needs precision k+2.
    """
    p = x.p
    u = _require_unit(x)
    if u.precision < k + 2:
        raise PrecisionTooLow(f"need {k + 2} digits, have {u.precision}")
    report = pk_root(x, k)
    if not report.exists:
        raise RootCondition(f"no p^{k}-th root: {report.reason.value}", report.digit_index)
    scaled = fermat_quotient(x).exact_div_p_power(k)
    rhs = scaled.residue % p
    lhs = fermat_quotient(report.roots[0]).residue % p
    digits = padic_to_witt(u).digits
    digit_value = digits[k + 1]
    digit_predicted = -(u.residue % p) * rhs % p
    return QuotientCongruenceReport(
        holds=(lhs == rhs and digit_value == digit_predicted),
        root_quotient=lhs,
        scaled_quotient=rhs,
        digit_value=digit_value,
        digit_predicted=digit_predicted,
    )


def sqrt_2adic(x: PAdicNumber) -> RootReport:
    """The two opposite square roots of a 2-adic unit congruent to 1 mod 8.

    The principal root is exp(log(x)/2); the pair is determined to K - 1
    digits, and either representative squares back to x mod 2^K.
    """
    if x.p != 2:
        raise WrongPrime(f"square-root routine is for p = 2, got p = {x.p}")
    u = _require_unit(x)
    K = u.precision
    if K < 3:
        raise PrecisionTooLow(f"need at least 3 digits to test mod 8, have {K}")
    if u.residue % 8 != 1:
        return RootReport(False, RootReason.MOD8_FAILURE, None, (), K)
    r = pexp(plog(u).exact_div_p_power(1))
    small = min(r.residue, (-r).residue)
    pair = (
        PAdicNumber(2, 0, PAdicInt(2, K - 1, small)),
        PAdicNumber(2, 0, PAdicInt(2, K - 1, -small)),
    )
    return RootReport(True, RootReason.OK, None, pair, K - 1)


def general_root(x: PAdicNumber, m: int) -> RootReport:
    """All m-th roots of x for odd p, splitting m into p^v times m'.

    The p-free part is handled by Hensel lifting (gcd(m', p-1) roots), the
    p-part by the digit criterion (one root).  The p-part obstruction is
    reported first when both fail.  Roots are determined to K - v digits.
    """
    if x.is_zero:
        raise ZeroInput("zero has no root report")
    if x.p == 2:
        raise WrongPrime("use the p = 2 square-root routine")
    if m < 1:
        raise ValueError(f"degree must be >= 1, got {m}")
    p = x.p
    K = x.unit.precision
    if m == 1:
        return RootReport(True, RootReason.OK, None, (x,), K)
    v = 0
    m_prime = m
    while m_prime % p == 0:
        v += 1
        m_prime //= p
    out_prec = K - v
    if x.valuation % m != 0:
        return RootReport(False, RootReason.VALUATION_NOT_DIVISIBLE, None, (), max(out_prec, 1))
    w = x.valuation // m
    if v > 0:
        check = pk_root_exists(PAdicNumber(p, 0, x.unit), v)
        if not check.ok:
            return RootReport(False, check.reason, check.digit_index, (), out_prec)
    unit_roots = hensel_kth_root(x.unit, m_prime) if m_prime > 1 else (x.unit,)
    if not unit_roots:
        return RootReport(False, RootReason.NOT_KTH_RESIDUE, None, (), out_prec)
    final = []
    for s in unit_roots:
        if v == 0:
            final.append(PAdicNumber(p, w, s))
            continue
        rep = pk_root(PAdicNumber(p, 0, s), v)
        if not rep.exists:
            return RootReport(False, rep.reason, rep.digit_index, (), out_prec)
        final.append(PAdicNumber(p, w, rep.roots[0].unit))
    final.sort(key=lambda r: r.unit.residue)
    return RootReport(True, RootReason.OK, None, tuple(final), K if v == 0 else out_prec)


def wieferich_search(base: int, limit: int) -> list[int]:
    """Odd primes p <= limit, coprime to base, with base^(p-1) = 1 mod p^2."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if limit < 3:
        raise ValueError(f"limit must be >= 3, got {limit}")
    hits = []
    for p in primes_up_to(limit):
        if p == 2 or base % p == 0:
            continue
        if pow(base, p - 1, p * p) == 1:
            hits.append(p)
    return hits


def flt_local_witness(p: int, precision: int = 6) -> FermatWitness | None:
    """Search 0 < y < p-1 for a vanishing carry phi_1(1, y).

    A hit means 1 + y^p is a p-th power sum whose degree-p digit vanishes,
    so its p-th root exists; the root is verified at the given precision.
    """
    check_prime(p)
    if p == 2:
        raise WrongPrime("the witness search needs p odd")
    for y in range(1, p - 1):
        if factor_system_phi1(p, 1, y) != 0:
            continue
        total = 1 + y**p
        report = pk_root(PAdicNumber.from_integer(total, p, precision), 1)
        if not report.exists:
            raise AssertionError(f"phi_1(1, {y}) = 0 but 1 + {y}^{p} has no {p}-th root")
        return FermatWitness(p, 1, y, total, report.roots[0].unit)
    return None
