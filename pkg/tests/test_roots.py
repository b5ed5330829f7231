"""Root criteria and constructions, Fermat quotients, searches."""

import random

import pytest

import oracles
from wittpadics import (
    NotAUnit,
    PAdicInt,
    PAdicNumber,
    PrecisionTooLow,
    RootReason,
    WittVector,
    WrongPrime,
    fermat_quotient,
    flt_local_witness,
    general_root,
    padic_to_witt,
    pk_root,
    pk_root_exists,
    root_quotient_congruence_check,
    sqrt_2adic,
    wieferich_search,
    witt_to_padic,
)


def unit(p, prec, r):
    return PAdicNumber(p, 0, PAdicInt(p, prec, r))


# ------------------------------------------------------------ fermat quotient


def test_fermat_quotient_examples():
    q = fermat_quotient(unit(11, 3, 3))
    assert (q.precision, q.residue) == (2, 44)
    assert 5368 % 121 == 44 and q.residue % 11 == 0
    assert fermat_quotient(unit(7, 3, 1)).residue == 0
    assert fermat_quotient(unit(5, 2, 2)).residue == 3
    assert (2**4 - 1) // 5 == 3


def test_fermat_quotient_preconditions():
    with pytest.raises(NotAUnit):
        fermat_quotient(PAdicNumber.from_integer(10, 5, 3))
    with pytest.raises(PrecisionTooLow):
        fermat_quotient(unit(5, 1, 2))
    with pytest.raises(WrongPrime):
        fermat_quotient(unit(2, 4, 3))


def test_fermat_quotient_digit_identity():
    # Witt digit 1 of a unit x is -x q_1(x) mod p
    rng = random.Random(30)
    for _ in range(100):
        p = rng.choice((3, 5, 7, 11, 13))
        prec = rng.randint(2, 6)
        r = rng.randrange(1, p**prec)
        if r % p == 0:
            continue
        x = unit(p, prec, r)
        digit1 = padic_to_witt(x.unit).digits[1]
        assert digit1 == -r * fermat_quotient(x).residue % p


# ------------------------------------------------------------------ existence


def test_pk_root_exists_examples():
    assert pk_root_exists(PAdicNumber.from_integer(3, 11, 3), 1).ok
    check = pk_root_exists(PAdicNumber.from_integer(2, 5, 3), 1)
    assert (check.ok, check.reason, check.digit_index) == (
        False,
        RootReason.WITT_DIGIT_NONZERO,
        1,
    )
    check = pk_root_exists(PAdicNumber.from_integer(11 * 4, 11, 3), 1)
    assert (check.ok, check.reason) == (False, RootReason.VALUATION_NOT_DIVISIBLE)


def test_pk_root_exists_needs_digits():
    with pytest.raises(PrecisionTooLow):
        pk_root_exists(unit(5, 2, 6), 2)


def test_criterion_equivalence_500_units():
    # Witt digit 1, q_1 mod p, and a^p = a mod p^2 must agree everywhere.
    rng = random.Random(31)
    disagreements = 0
    for _ in range(500):
        p = rng.choice((3, 5, 7, 11, 13))
        prec = rng.randint(2, 8)
        r = rng.randrange(1, p**prec)
        if r % p == 0:
            r += 1
        x = unit(p, prec, r)
        # pk_root_exists cross-asserts internally and would raise on mismatch
        digit_test = pk_root_exists(x, 1).ok
        quotient_test = fermat_quotient(x).residue % p == 0
        a = r % p**2
        power_test = pow(a, p, p**2) == a
        if not (digit_test == quotient_test == power_test):
            disagreements += 1
    assert disagreements == 0


# --------------------------------------------------------------- construction


def test_pk_root_eleventh_root_of_three():
    report = pk_root(PAdicNumber.from_integer(3, 11, 3), 1)
    assert report.exists and report.output_precision == 2
    root = report.roots[0]
    assert root.unit.residue == 113  # that is -8 mod 121
    assert pow(113, 11, 121) == 3
    assert oracles.brute_force_roots(11, 3, 11, 3) == [113 + 121 * c for c in range(11)]


def test_pk_root_trivial_and_seven_adic():
    report = pk_root(PAdicNumber.from_integer(1, 7, 4), 2)
    assert report.roots[0].unit.residue == 1

    report = pk_root(PAdicNumber.from_integer(129, 7, 3), 1)
    root = report.roots[0]
    assert root.unit.residue % 49 == 3
    assert pow(root.unit.residue, 7, 49) == 129 % 49
    brute = oracles.brute_force_roots(7, 3, 7, 129)
    assert sorted({r % 49 for r in brute}) == [3]


def test_pk_root_with_valuation():
    x = PAdicNumber.from_integer(3 * 11**11, 11, 3)
    report = pk_root(x, 1)
    root = report.roots[0]
    assert (root.valuation, root.unit.residue) == (1, 113)


def test_pk_root_failure_report():
    report = pk_root(PAdicNumber.from_integer(2, 5, 4), 1)
    assert not report.exists
    assert report.reason is RootReason.WITT_DIGIT_NONZERO
    assert report.roots == ()


def test_pk_root_soundness_random():
    rng = random.Random(32)
    found = 0
    for _ in range(400):
        p = rng.choice((3, 5, 7, 11))
        k = rng.choice((1, 2))
        prec = rng.randint(k + 1, 7)
        digits = [rng.randrange(1, p)] + [0] * k + [rng.randrange(p) for _ in range(prec - k - 1)]
        x = PAdicNumber(p, 0, witt_to_padic(WittVector(p, tuple(digits))))
        report = pk_root(x, k)
        assert report.exists
        root = report.roots[0]
        assert pow(root.unit.residue, p**k, p**prec) == x.unit.residue
        found += 1
    assert found == 400


def test_power_then_root_round_trip():
    rng = random.Random(33)
    for _ in range(150):
        p = rng.choice((3, 5, 7, 11))
        k = rng.choice((1, 2))
        prec = rng.randint(k + 1, 7)
        r = rng.randrange(1, p**prec)
        if r % p == 0:
            continue
        x = unit(p, prec, r)
        report = pk_root(x.pow_int(p**k), k)
        assert report.exists
        assert report.roots[0].unit == x.unit.with_precision(prec - k)


def test_zero_pattern_necessity():
    # digits 1..k of any p^k-th power vanish
    rng = random.Random(34)
    for _ in range(200):
        p = rng.choice((3, 5, 7, 11))
        k = rng.choice((1, 2))
        prec = rng.randint(k + 1, 6)
        r = rng.randrange(1, p**prec)
        if r % p == 0:
            continue
        y = unit(p, prec, r).pow_int(p**k)
        assert all(d == 0 for d in padic_to_witt(y.unit).digits[1 : k + 1])


# -------------------------------------------------------- quotient congruence


def test_root_quotient_congruence_example():
    report = root_quotient_congruence_check(PAdicNumber.from_integer(3, 11, 3), 1)
    assert report.holds
    assert report.scaled_quotient == 4  # q_1(3)/11 = 488 = 4 mod 11
    assert report.root_quotient == 4
    assert report.digit_value == report.digit_predicted == -3 * 4 % 11


def test_root_quotient_congruence_trivial():
    report = root_quotient_congruence_check(PAdicNumber.from_integer(1, 5, 4), 1)
    assert report.holds
    assert report.root_quotient == report.scaled_quotient == 0


def test_root_quotient_congruence_random():
    rng = random.Random(35)
    count = 0
    while count < 100:
        p = rng.choice((5, 7, 11))
        prec = rng.randint(3, 6)
        digits = [rng.randrange(1, p), 0] + [rng.randrange(p) for _ in range(prec - 2)]
        x = PAdicNumber(p, 0, witt_to_padic(WittVector(p, tuple(digits))))
        assert root_quotient_congruence_check(x, 1).holds
        count += 1


# ------------------------------------------------------------------ p = 2


def test_sqrt_2adic_17():
    report = sqrt_2adic(PAdicNumber.from_integer(17, 2, 10))
    assert report.exists and report.output_precision == 9
    residues = sorted(r.unit.residue for r in report.roots)
    assert residues == [233, 279]
    for r in residues:
        assert pow(r, 2, 1024) == 17
    brute = oracles.brute_force_roots(2, 10, 2, 17)
    assert sorted({r % 512 for r in brute}) == residues


def test_sqrt_2adic_one_and_three():
    report = sqrt_2adic(PAdicNumber.from_integer(1, 2, 6))
    residues = sorted(r.unit.residue for r in report.roots)
    assert residues == [1, 2**5 - 1]  # 1 and -1

    report = sqrt_2adic(PAdicNumber.from_integer(3, 2, 6))
    assert (report.exists, report.reason) == (False, RootReason.MOD8_FAILURE)


def test_sqrt_2adic_guards():
    with pytest.raises(WrongPrime):
        sqrt_2adic(PAdicNumber.from_integer(17, 5, 4))
    with pytest.raises(PrecisionTooLow):
        sqrt_2adic(PAdicNumber.from_integer(17, 2, 2))


def test_sqrt_2adic_matches_brute_force():
    rng = random.Random(36)
    for _ in range(40):
        prec = rng.randint(4, 9)
        x = rng.randrange(1, 2**prec, 2)
        report = sqrt_2adic(unit(2, prec, x))
        brute = oracles.brute_force_roots(2, prec, 2, x)
        if x % 8 != 1:
            assert not report.exists
            assert brute == []
            continue
        got = sorted(r.unit.residue for r in report.roots)
        assert sorted({r % 2 ** (prec - 1) for r in brute}) == got


# ------------------------------------------------------------- general degree


def test_general_root_examples():
    report = general_root(PAdicNumber.from_integer(64, 5, 3), 6)
    assert sorted(r.unit.residue for r in report.roots) == [2, 123]
    assert pow(123, 6, 125) == 64

    x = PAdicNumber.from_integer(77, 7, 4)
    assert general_root(x, 1).roots == (x,)

    report = general_root(PAdicNumber.from_integer(2, 5, 4), 10)
    assert (report.exists, report.reason, report.digit_index) == (
        False,
        RootReason.WITT_DIGIT_NONZERO,
        1,
    )


def test_general_root_valuation_handling():
    # 3^6 * 5^6 has the 6th root 3 * 5
    x = PAdicNumber.from_integer(3**6 * 5**6, 5, 4)
    report = general_root(x, 6)
    assert report.exists
    assert {(r.valuation, r.unit.residue % 5) for r in report.roots} >= {(1, 3)}
    for r in report.roots:
        assert r.valuation == 1
        assert pow(r.unit.residue, 6, 5**4) == 3**6 % 5**4

    report = general_root(PAdicNumber.from_integer(5, 5, 4), 2)
    assert (report.exists, report.reason) == (False, RootReason.VALUATION_NOT_DIVISIBLE)


def test_general_root_not_kth_residue():
    report = general_root(PAdicNumber.from_integer(3, 7, 3), 2)
    assert (report.exists, report.reason) == (False, RootReason.NOT_KTH_RESIDUE)


def test_general_root_matches_brute_force():
    rng = random.Random(37)
    cases = 0
    for p, prec_max in ((3, 6), (5, 4)):
        while cases < (60 if p == 3 else 120):
            prec = rng.randint(3, prec_max)
            r = rng.randrange(1, p**prec)
            if r % p == 0:
                continue
            m = rng.randint(2, 12)
            v = 0
            mm = m
            while mm % p == 0:
                v += 1
                mm //= p
            if prec <= v:
                continue
            report = general_root(unit(p, prec, r), m)
            brute = oracles.brute_force_roots(p, prec, m, r)
            out_mod = p ** report.output_precision
            got = sorted(root.unit.residue % out_mod for root in report.roots)
            assert got == sorted({b % out_mod for b in brute})
            assert report.exists == bool(brute)
            cases += 1
    assert cases >= 120


def test_general_root_rejects_p2_and_zero():
    with pytest.raises(WrongPrime):
        general_root(PAdicNumber.from_integer(17, 2, 6), 3)
    import wittpadics

    with pytest.raises(wittpadics.ZeroInput):
        general_root(PAdicNumber.zero(5), 2)


# ----------------------------------------------------------------- searches


def test_wieferich_search():
    assert wieferich_search(2, 10**4) == [1093, 3511]
    assert wieferich_search(2, 1000) == []
    assert wieferich_search(3, 100) == [11]


def test_wieferich_matches_direct_scan():
    from wittpadics import primes_up_to

    for base in (2, 3, 5):
        expected = [
            p
            for p in primes_up_to(500)
            if p != 2 and base % p and pow(base, p - 1, p * p) == 1
        ]
        assert wieferich_search(base, 500) == expected


def test_wieferich_preconditions():
    with pytest.raises(ValueError):
        wieferich_search(1, 100)
    with pytest.raises(ValueError):
        wieferich_search(2, 2)


# ------------------------------------------------------------- local witness


def test_flt_witness_seven():
    w = flt_local_witness(7)
    assert (w.x, w.y, w.sum) == (1, 2, 129)
    assert w.root.residue % 49 == 3
    assert pow(w.root.residue, 7, 7**6) == 129
    # sign pattern: x^p + y^p + (-root)^p = 0 in the 7-adics
    assert (w.x**7 + w.y**7 - pow(w.root.residue, 7, 7**6)) % 7**6 == 0


def test_flt_witness_small_primes_none():
    assert flt_local_witness(3) is None
    assert flt_local_witness(5) is None


def test_flt_witness_matches_phi1_scan():
    from wittpadics import factor_system_phi1

    for p in (11, 13, 17, 19):
        hits = [y for y in range(1, p - 1) if factor_system_phi1(p, 1, y) == 0]
        w = flt_local_witness(p)
        if hits:
            assert w is not None and w.y == hits[0]
            assert pow(w.root.residue, p, p**6) == (1 + w.y**p) % p**6
        else:
            assert w is None
