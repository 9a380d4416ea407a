import random

import pytest

from eigenone.arith import (
    Fq,
    bad_primes,
    curve_count,
    disc_resultant,
    factor_mod_p,
    field_modulus,
    frobenius_charpoly_gf2,
    frobenius_scan,
    lpoly_from_counts,
    malle_disc_formula,
    malle_g,
    malle_r,
    primes_up_to,
    resultant,
    zp_eval,
)
from eigenone.perms import builtin_group


def test_malle_g_special_coefficients():
    # the distinguished specialization, descending coefficients
    assert malle_g(1, -32)[::-1] == [1, -15, 84, -204, 150, 150, -172, -12, -15, 1]


def test_malle_r_in_t_at_a1():
    # r(1,t) = t^2 + 128 t + 4096
    for t in [-32, 0, 1, 7, 100]:
        assert malle_r(1, t) == t * t + 128 * t + 4096
    assert malle_r(1, -32) == 1024


def test_squarefree_specialization_guard():
    from eigenone.arith import malle_is_squarefree_specialization

    assert malle_is_squarefree_specialization(1, -32)
    assert not malle_is_squarefree_specialization(0, 5)
    assert not malle_is_squarefree_specialization(5, 0)
    # r(1,t) = t^2 + 128t + 4096 = (t+64)^2 vanishes at t = -64
    assert malle_r(1, -64) == 0
    assert not malle_is_squarefree_specialization(1, -64)
    assert disc_resultant(malle_g(1, -64)) == 0


def test_disc_x2_plus_1():
    assert disc_resultant([1, 0, 1]) == -4


def test_disc_special_value():
    assert disc_resultant(malle_g(1, -32)) == -(2**58) * 3**9


def test_disc_formula_at_2_3():
    d = disc_resultant(malle_g(2, 3))
    assert d == -(2**8) * 3**9 * 3**4 * 2**6 * malle_r(2, 3) ** 3


def test_disc_identity_20_samples_and_negative_control():
    rng = random.Random(42)
    n = 0
    while n < 20:
        a, t = rng.randint(-50, 50), rng.randint(-50, 50)
        if a == 0 or t == 0 or malle_r(a, t) == 0:
            continue
        assert disc_resultant(malle_g(a, t)) == malle_disc_formula(a, t)
        n += 1
    # negative control: corrupt one coefficient and the identity must fail
    g = malle_g(3, 5)
    g[4] += 1
    assert disc_resultant(g) != malle_disc_formula(3, 5)


def test_resultant_against_root_product():
    # Res(f, g) for f = (x-1)(x-2), g = (x-3)(x+4): product of g at roots of f
    f = [2, -3, 1]
    g = [-12, 1, 1]
    assert resultant(f, g) == zp_eval(g, 1) * zp_eval(g, 2)


def test_bad_primes_special():
    assert bad_primes(malle_g(1, -32)) == [2, 3]
    assert bad_primes(malle_g(1, 1)) == [2, 3, 5, 13]


def test_factor_mod_p_quadratic():
    assert factor_mod_p([1, 0, 1], 5).degrees == (1, 1)
    assert factor_mod_p([1, 0, 1], 7).degrees == (2,)


def test_factor_mod_p_pinned_oracle_values():
    # degrees pinned from an independent computer-algebra run
    g = malle_g(1, -32)
    assert factor_mod_p(g, 5).degrees == (1, 8)
    assert factor_mod_p(g, 7).degrees == (3, 3, 3)
    assert factor_mod_p(g, 11).degrees == (1, 8)
    assert factor_mod_p(g, 13).degrees == (1, 2, 6)
    assert all(factor_mod_p(g, p).squarefree for p in [5, 7, 11, 13])


def test_factor_mod_p_non_squarefree_flag():
    ft = factor_mod_p([1, 2, 1], 3)  # (x+1)^2
    assert not ft.squarefree
    with pytest.raises(ValueError):
        ft.cycle_type


def test_factor_mod_p_rejects_bad_input():
    with pytest.raises(ValueError):
        factor_mod_p([1, 0, 1], 2)
    with pytest.raises(ValueError):
        factor_mod_p([1, 0, 5], 5)


def test_factor_mod_p_deterministic_across_reseeds():
    g = malle_g(2, 7)
    base = factor_mod_p(g, 101, seed=1).degrees
    for seed in range(2, 7):
        assert factor_mod_p(g, 101, seed=seed).degrees == base


def test_frobenius_scan_x9_minus_2_has_eig1_offenders():
    f = [-2] + [0] * 8 + [1]
    scan = frobenius_scan(f, 10**3, builtin_group("s_n", n=9))
    assert not scan.all_eig1
    assert scan.all_types_in_group  # S9 contains every cycle type
    # irreducible reductions give 9-cycles, which lack eigenvalue 1
    offenders = [r for r in scan.records if not r.has_eigenvalue_one]
    assert offenders and all(r.degrees == (9,) for r in offenders)


def test_frobenius_scan_jobs_parallel_matches_serial():
    f = malle_g(1, -32)
    G = builtin_group("agl2_3")
    a = frobenius_scan(f, 300, G, jobs=1)
    b = frobenius_scan(f, 300, G, jobs=2)
    assert [r.to_payload() for r in a.records] == [r.to_payload() for r in b.records]


def test_field_modulus_lexicographically_least():
    # F_9 = F_3[x]/(x^2+1) is the least irreducible monic quadratic
    assert field_modulus(3, 2) == (1, 0, 1)
    assert field_modulus(5, 1) == (0, 1)
    # degree-4 modulus over F_5 is irreducible and minimal
    m = field_modulus(5, 4)
    assert len(m) == 5 and m[-1] == 1


def test_fq_arithmetic():
    F = Fq(3, 2)
    # (1 + x)^2 = 1 + 2x + x^2 = 2x  (since x^2 = -1)
    a = F.encode([1, 1])
    assert F.mul(a, a) == F.encode([0, 2])
    sq = F.squares()
    assert len(sq) == 5  # 0 plus (9-1)/2 nonzero squares


def test_curve_count_genus1_sanity():
    assert curve_count([1, 0, 0, 1], 5, 1) == 6


def test_curve_count_weil_bound_and_bad_prime_rejection():
    g = malle_g(1, -32)
    for p in [5, 7]:
        for k in [1, 2]:
            c = curve_count(g, p, k)
            q = p**k
            assert (c - (q + 1)) ** 2 <= 64 * q  # genus 4
    with pytest.raises(ValueError):
        curve_count(g, 3, 1)  # bad prime


def test_curve_count_budget():
    with pytest.raises(ValueError):
        curve_count(malle_g(1, -32), 101, 4)


def test_lpoly_structure():
    g = malle_g(1, -32)
    L = lpoly_from_counts(g, 5)
    assert L.coeffs[0] == 1
    # functional equation c_{8-i} = p^{4-i} c_i
    for i in range(4):
        assert L.coeffs[8 - i] == 5 ** (4 - i) * L.coeffs[i]


def test_lpoly_parity_and_frobenius_match():
    g = malle_g(1, -32)
    for p in [5, 7, 11, 13]:
        L = lpoly_from_counts(g, p)
        assert L.jacobian_order() % 2 == 0
        assert L.reversed_mod2() == frobenius_charpoly_gf2(g, p)


def test_primes_up_to():
    assert primes_up_to(20) == [2, 3, 5, 7, 11, 13, 17, 19]
