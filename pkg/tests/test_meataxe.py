import random

import pytest

from eigenone.gf2 import BitMatrix, GF2Module
from eigenone.meataxe import (
    composition_factors,
    endomorphism_algebra_dim,
    factor_dimensions,
    is_absolutely_irreducible,
    is_irreducible,
)
from eigenone.perms import Partition, builtin_group
from eigenone.specht import specht_mod2_module
from eigenone.symplectic import embed_group, permutation_module_gf2


def test_trivial_module():
    mod = GF2Module(1, [BitMatrix.identity(1)])
    assert factor_dimensions(mod) == [1]
    assert is_irreducible(mod)
    assert is_absolutely_irreducible(mod)


def test_specht_311_mod2():
    mod = specht_mod2_module(5, Partition((3, 1, 1)))
    assert factor_dimensions(mod) == [1, 1, 4]


def test_specht_52_mod2_irreducible():
    mod = specht_mod2_module(7, Partition((5, 2)))
    assert factor_dimensions(mod) == [14]
    assert is_irreducible(mod)


def test_agl2_3_absolutely_irreducible():
    mod = embed_group(builtin_group("agl2_3"))
    assert is_irreducible(mod)
    assert is_absolutely_irreducible(mod)


def test_flag_module_8dim_factor_absolutely_irreducible():
    pm = permutation_module_gf2(builtin_group("l3_2_flags"))
    factors = composition_factors(pm)
    eight = [f for f in factors if f.dim == 8]
    assert len(eight) == 1
    assert is_absolutely_irreducible(eight[0])


def test_reducible_input_rejected_for_absolute_irreducibility():
    mod = specht_mod2_module(5, Partition((3, 1, 1)))
    with pytest.raises(ValueError):
        is_absolutely_irreducible(mod)


def test_not_absolutely_irreducible_example():
    # C9 acting on the 2-dimensional GF(2) factor: commuting algebra is GF(4)
    C = BitMatrix.from_entries([[0, 1], [1, 1]])  # companion of x^2+x+1
    mod = GF2Module(2, [C])
    assert is_irreducible(mod)
    assert endomorphism_algebra_dim(mod) == 2
    assert not is_absolutely_irreducible(mod)


def _direct_sum(a: GF2Module, b: GF2Module) -> GF2Module:
    n = a.dim + b.dim
    gens = []
    for ga, gb in zip(a.gens, b.gens):
        rows = [r for r in ga.rows] + [r << a.dim for r in gb.rows]
        gens.append(BitMatrix(rows, n))
    return GF2Module(n, gens)


def test_direct_sum_factors_are_multiset_union():
    m1 = specht_mod2_module(5, Partition((3, 1, 1)))
    m2 = specht_mod2_module(5, Partition((3, 2)))
    d1 = factor_dimensions(m1)
    d2 = factor_dimensions(m2)
    assert factor_dimensions(_direct_sum(m1, m2)) == sorted(d1 + d2)


def _random_basis_change(mod: GF2Module, rng: random.Random) -> GF2Module:
    from eigenone.audit import _matrix_inverse

    n = mod.dim
    while True:
        P = BitMatrix([rng.getrandbits(n) for _ in range(n)], n)
        try:
            Pi = _matrix_inverse(P)
            break
        except ValueError:
            continue
    return GF2Module(n, [P * g * Pi for g in mod.gens])


def test_factors_invariant_under_basis_change():
    rng = random.Random(99)
    mod = specht_mod2_module(5, Partition((3, 1, 1)))
    base = factor_dimensions(mod)
    for _ in range(10):
        assert factor_dimensions(_random_basis_change(mod, rng)) == base


def test_factors_re_irreducible():
    pm = permutation_module_gf2(builtin_group("l3_2_flags"))
    for f in composition_factors(pm):
        assert is_irreducible(f)


def test_determinism_of_seeded_runs():
    mod = specht_mod2_module(5, Partition((3, 1, 1)))
    a = [tuple(g.rows) for f in composition_factors(mod, seed=0xC0FFEE) for g in f.gens]
    b = [tuple(g.rows) for f in composition_factors(mod, seed=0xC0FFEE) for g in f.gens]
    assert a == b


def test_factor_dims_independent_of_seed():
    mod = specht_mod2_module(7, Partition((5, 1, 1)))
    base = factor_dimensions(mod, seed=1)
    for seed in [2, 3, 0xC0FFEE]:
        assert factor_dimensions(mod, seed=seed) == base


def test_dimension_bound():
    big = GF2Module(1, [BitMatrix.identity(1)])
    big.dim = 257  # simulate oversize
    big.gens = [BitMatrix.identity(257)]
    with pytest.raises(ValueError):
        factor_dimensions(big)
