import random

import pytest

from eigenone.audit import (
    FAMILY_HOOK,
    FAMILY_TWO,
    FAMILY_TWO_CONJ,
    audit_embedded_group,
    audit_gf2_classes,
    audit_int_classes,
    audit_specht,
    conjecture_table,
    subgroup_census,
)
from eigenone.gf2 import BitMatrix, matrix_group_closure, rank_nullspace
from eigenone.intlinalg import IntMatrix
from eigenone.perms import Partition, Permutation, builtin_group, class_reps_symmetric
from eigenone.specht import action_matrix, twisted_action_matrix
from eigenone.symplectic import build_space, embed_group, embed_permutation


def test_trivial_representation_unisingular():
    classes = [("1", 1, 1, IntMatrix.identity(1)), ("2", 3, 2, IntMatrix.identity(1))]
    rep = audit_int_classes("trivial", classes)
    assert rep.unisingular and rep.offenders == []


def test_audit_specht_examples():
    rep = audit_specht(7, FAMILY_TWO)
    assert rep.unisingular
    rep = audit_specht(5, FAMILY_TWO_CONJ)
    assert rep.offenders == ["3,2"]
    rec = {r.label: r for r in rep.records}["3,2"]
    assert rec.det_one_minus == 6
    repA = audit_specht(7, FAMILY_TWO_CONJ, group="a_n")
    assert repA.unisingular


def test_audit_specht_rejects_bad_args():
    with pytest.raises(ValueError):
        audit_specht(4, FAMILY_HOOK)
    with pytest.raises(ValueError):
        audit_specht(7, "(n-3,3)")
    with pytest.raises(ValueError):
        audit_specht(7, FAMILY_HOOK, group="d_n")


def test_geometric_multiplicity_matches_character_average():
    # dual route: fixed-space dimension = average of the character over the
    # cyclic group generated by a class representative
    from eigenone.specht import fixed_space_dim_via_characters

    for n in range(5, 9):
        for shape in [(n - 2, 2), (n - 2, 1, 1)]:
            rep = audit_specht(n, FAMILY_TWO if shape[1] == 2 else FAMILY_HOOK)
            by_label = {r.label: r for r in rep.records}
            for ct, _ in class_reps_symmetric(n):
                expected = fixed_space_dim_via_characters(Partition(shape), ct)
                assert by_label[str(ct)].geo_mult == expected, (n, shape, ct)


def test_det_constant_on_class_sampled():
    from eigenone.intlinalg import det_exact

    rng = random.Random(0)
    n = 6
    sh = Partition((4, 2))
    els = builtin_group("s_n", n=n).elements()
    for ct, rep in class_reps_symmetric(n):
        M = action_matrix(rep, sh)
        base = det_exact(IntMatrix.identity(M.nrows) - M)
        for _ in range(3):
            g = els[rng.randrange(len(els))]
            M2 = action_matrix(rep.conjugate_by(g), sh)
            assert det_exact(IntMatrix.identity(M2.nrows) - M2) == base


def test_sign_twist_changes_only_odd_classes():
    n = 6
    sh = Partition((4, 2))
    from eigenone.intlinalg import det_exact

    for ct, rep in class_reps_symmetric(n):
        M = action_matrix(rep, sh)
        Mt = twisted_action_matrix(rep, sh)
        d = det_exact(IntMatrix.identity(M.nrows) - M)
        dt = det_exact(IntMatrix.identity(M.nrows) - Mt)
        if ct.is_even_class():
            assert d == dt
        # odd classes may or may not differ; the even case is the invariant


def test_conjecture_table_values():
    rows = conjecture_table([5, 7, 9])
    assert [int(r["det_one_minus"]) for r in rows] == [6, 20, 56]
    assert all(r["matches"] for r in rows)


def test_conjecture_table_rejects_even_n():
    with pytest.raises(ValueError):
        conjecture_table([6])


def test_agl2_3_embedded_audit():
    rep = audit_embedded_group(builtin_group("agl2_3"))
    assert rep.unisingular
    assert rep.irreducible and rep.absolutely_irreducible
    assert rep.dim == 8


def test_pgl2_19_offenders_exactly_order_19():
    G = builtin_group("pgl2", q=19)
    rep = audit_embedded_group(G)
    assert not rep.unisingular
    offender_orders = {
        r.element_order for r in rep.records if not r.has_eigenvalue_one
    }
    assert offender_orders == {19}
    non_offender_orders = {
        r.element_order for r in rep.records if r.has_eigenvalue_one
    }
    assert 19 not in non_offender_orders


def test_gf2_det_verdict_matches_nullity_verdict():
    G = builtin_group("pgl2", q=19)
    sp = build_space(20)
    ident = BitMatrix.identity(18)
    for size, rep, order in G.conjugacy_classes():
        M = embed_permutation(rep, sp)
        rank, _ = rank_nullspace(M + ident)
        from eigenone.gf2 import gf2_charpoly, peval1

        assert (rank < 18) == (peval1(gf2_charpoly(M)) == 0)


def test_agl2_3_every_element_has_eigenvalue_one():
    # per-element confirmation of what the class audit asserts classwise
    mod = embed_group(builtin_group("agl2_3"))
    ident = BitMatrix.identity(8)
    for m in matrix_group_closure(mod.gens):
        rank, _ = rank_nullspace(m + ident)
        assert rank < 8


def test_census_trivial_input():
    entries = subgroup_census([BitMatrix.identity(8)])
    assert len(entries) == 1
    e = entries[0]
    assert e.order == 1 and not e.irreducible and e.unisingular


def test_census_cyclic_nine_contains_non_unisingular():
    # the cyclic group generated by an embedded 9-cycle: its generator has no
    # eigenvalue 1, so some census subgroup is not unisingular
    sp = build_space(9)
    M = embed_permutation(Permutation.from_cycles(9, [tuple(range(1, 10))]), sp)
    els = matrix_group_closure([M])
    assert len(els) == 9
    entries = subgroup_census(els)
    assert any(not e.unisingular for e in entries)
    orders = {e.order for e in entries}
    assert orders == {1, 3, 9}


def test_census_restriction_consistency():
    # subgroups of a unisingular group are unisingular on the audited classes
    mod = embed_group(builtin_group("asl2_3"))
    els = matrix_group_closure(mod.gens)
    entries = subgroup_census(els)
    assert all(e.unisingular for e in entries)


def test_census_input_caps():
    with pytest.raises(ValueError):
        subgroup_census([BitMatrix.identity(2)] * 2001)


def test_census_requires_closed_input():
    from eigenone.symplectic import build_space

    sp = build_space(9)
    M = embed_permutation(Permutation.from_cycles(9, [(1, 2)]), sp)
    N = embed_permutation(Permutation.from_cycles(9, [(1, 2, 3)]), sp)
    with pytest.raises(ValueError):
        subgroup_census([M, N])


def test_audit_gf2_module_elements_flag_factor():
    # close the 8-dimensional flag-module factor and audit its own classes
    from eigenone.audit import audit_gf2_module_elements
    from eigenone.meataxe import composition_factors
    from eigenone.symplectic import permutation_module_gf2

    pm = permutation_module_gf2(builtin_group("l3_2_flags"))
    top = max(composition_factors(pm), key=lambda f: f.dim)
    rep = audit_gf2_module_elements("flag-8dim", top)
    assert rep.dim == 8
    assert rep.unisingular
    assert rep.irreducible and rep.absolutely_irreducible
    assert sum(r.size for r in rep.records) == 168


def test_audit_gf2_classes_reducible_module_flags():
    from eigenone.specht import specht_mod2_module

    mod = specht_mod2_module(5, Partition((3, 1, 1)))
    classes = [("id", 1, 1, BitMatrix.identity(6))]
    rep = audit_gf2_classes("s311-mod2", classes, mod)
    assert rep.irreducible is False
    assert rep.absolutely_irreducible is False
