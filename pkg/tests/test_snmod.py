"""Symmetric group modules in positive characteristic: construction from
tabloid combinatorics, quotients by the form radical, and the structural
invariants of restrictions to 2-subgroups and p-cycles."""

import numpy as np
import pytest

from symprep import perm as pm
from symprep.field import make_field
from symprep.linalg import Mat
from symprep.snmod import (Fingerprint, GModule, basic_spin_restriction,
                           check_partition, conjugate, cyclic_profile,
                           fingerprint, fingerprint_of_mats,
                           free_summand_count, hook_length_dim, irreducible_D,
                           is_p_regular, loewy_length, module_from_json,
                           module_to_json, p_regular_partitions, partitions,
                           specht_gram, specht_module, standard_tableaux,
                           tensor_module, verify_appendix)


# ---------------------------------------------------------------------------
# partition combinatorics


def test_partition_counts():
    assert len(list(partitions(5))) == 7
    assert len(list(partitions(8))) == 22
    assert len(list(partitions(4, max_part=2))) == 3


def test_check_partition():
    assert check_partition([3, 1]) == (3, 1)
    with pytest.raises(AssertionError):
        check_partition([1, 3])
    with pytest.raises(AssertionError):
        check_partition([3, 0])
    with pytest.raises(AssertionError):
        check_partition([])


def test_regularity_and_conjugate():
    assert is_p_regular((4, 1), 2)
    assert not is_p_regular((2, 2, 1), 2)
    assert is_p_regular((2, 2, 1), 3)
    assert not is_p_regular((1, 1, 1), 3)
    assert len(p_regular_partitions(6, 2)) == 4  # (6),(5,1),(4,2),(3,2,1)
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert conjugate(conjugate((5, 3, 3, 1))) == (5, 3, 3, 1)


def test_tableaux_vs_hook():
    for lam in ((3,), (2, 1), (3, 2), (5, 2), (2, 2, 1), (4, 3, 1)):
        assert len(standard_tableaux(lam)) == hook_length_dim(lam)
    assert hook_length_dim((5, 2)) == 14
    assert hook_length_dim((2, 1)) == 2
    assert hook_length_dim((3, 3, 2)) == 42


# ---------------------------------------------------------------------------
# module construction


def test_specht_dims():
    assert specht_module((4, 1), 3).dim == 4
    assert specht_module((2, 2), 2).dim == 2
    assert specht_module((3, 2), 2).dim == 5
    assert specht_module((2, 2, 1), 3).dim == 5


def test_irreducible_dims_known_values():
    assert irreducible_D((5, 1), 2).dim == 4
    assert irreducible_D((6, 1), 2).dim == 6
    assert irreducible_D((7, 1), 2).dim == 6
    assert irreducible_D((5, 2), 2).dim == 14  # nondegenerate form here
    assert irreducible_D((5, 3), 2).dim == 8
    assert irreducible_D((4, 1), 5).dim == 3
    assert irreducible_D((3, 2), 2).dim == 4


def test_irreducible_rejects_singular_partition():
    with pytest.raises(ValueError):
        irreducible_D((2, 2, 1), 2)
    with pytest.raises(ValueError):
        irreducible_D((1, 1, 1), 3)


def test_gram_radical_consistency():
    lam, p = (3, 1), 2
    gram = specht_gram(lam, p)
    assert gram.rows == specht_module(lam, p).dim
    assert irreducible_D(lam, p).dim == gram.rank()


def test_relation_check_rejects_garbage():
    f = make_field(3)
    good = Mat(f, [[0, 1], [1, 0]])
    bad = Mat(f, [[1, 1], [0, 1]])  # order 3, not an involution
    with pytest.raises(AssertionError):
        GModule(3, f, [good, bad])


def test_act_is_multiplicative():
    mod = irreducible_D((4, 2), 3)
    rng = np.random.default_rng(11)
    for _ in range(10):
        a = tuple(rng.permutation(6))
        b = tuple(rng.permutation(6))
        assert mod.act(pm.compose(a, b)) == mod.act(a) @ mod.act(b)


def test_restrict_keeps_prefix_action():
    mod = irreducible_D((5, 2), 2)
    res = mod.restrict(5)
    assert res.n == 5 and res.dim == mod.dim
    g5 = pm.transposition(5, 0, 1)
    g7 = pm.transposition(7, 0, 1)
    assert res.act(g5) == mod.act(g7)


# ---------------------------------------------------------------------------
# restriction invariants


def test_loewy_layers_sum_and_cyclic_consistency():
    # for a single order-p generator the filtration depth must equal the
    # largest Jordan block size
    mod = irreducible_D((4, 1), 5)
    grp = pm.GroupPresentation("perm", 5, (pm.from_cycles("(1 2 3 4 5)", 5),), "C5")
    series = loewy_length(mod, grp)
    prof = cyclic_profile(mod, pm.from_cycles("(1 2 3 4 5)", 5))
    assert sum(series.layer_dims) == mod.dim
    assert series.length == max(prof) == 3
    assert prof == (3,)


def test_loewy_over_transposition_subgroup():
    mod = irreducible_D((7, 1), 2)
    sub = pm.special_subgroups(8, "H")
    series = loewy_length(mod, sub)
    assert series.layer_dims == (3, 3)


def test_loewy_rejects_non_p_subgroup():
    mod = irreducible_D((4, 1), 2)
    bad = pm.GroupPresentation("perm", 5, (pm.from_cycles("(1 2 3)", 5),), "C3")
    with pytest.raises(ValueError):
        loewy_length(mod, bad)


def test_free_summand_counts():
    assert free_summand_count(irreducible_D((3, 2), 2).restrict(4),
                              pm.special_subgroups(4, "H")) == 1
    assert free_summand_count(irreducible_D((4, 1), 2).restrict(4),
                              pm.special_subgroups(4, "K")) == 1
    assert free_summand_count(irreducible_D((4, 1), 2).restrict(4),
                              pm.special_subgroups(4, "H")) == 0


def test_free_summand_rejects_dependent_generators():
    mod = irreducible_D((4, 1), 2)
    g = pm.double_transposition(5, 0, 1, 2, 3)
    dependent = pm.GroupPresentation("perm", 5, (g, g), "dup")
    with pytest.raises(AssertionError):
        free_summand_count(mod, dependent)
    not_elab = pm.GroupPresentation("perm", 5, (pm.from_cycles("(1 2 3 4)", 5),), "C4")
    with pytest.raises(ValueError):
        free_summand_count(mod, not_elab)


def test_cyclic_profile_order_guard():
    mod = irreducible_D((4, 1), 5)
    with pytest.raises(ValueError):
        cyclic_profile(mod, pm.transposition(5, 0, 1))


def test_tensor_module():
    a = irreducible_D((4, 1), 5)
    t = tensor_module(a, a)
    assert t.dim == a.dim**2
    g = pm.from_cycles("(1 2 3 4 5)", 5)
    assert t.act(g) == a.act(g).kron(a.act(g))
    b = irreducible_D((3, 1), 5)
    with pytest.raises(ValueError):
        tensor_module(a, b)


def test_tensor_profile_all_odd():
    a = irreducible_D((4, 1), 5)
    prof = cyclic_profile(tensor_module(a, a), pm.from_cycles("(1 2 3 4 5)", 5))
    assert prof == (1, 3, 5)
    assert all(b % 2 == 1 for b in prof)


# ---------------------------------------------------------------------------
# spin restrictions and fingerprints


def test_spin_restriction_dims():
    for k in (1, 2, 3, 4):
        assert basic_spin_restriction(k).dim == 2**k


def test_fingerprint_equality_tensor_square():
    m4 = basic_spin_restriction(2)
    m2 = basic_spin_restriction(1)
    left = fingerprint(m4, pm.special_subgroups(4, "H"))
    a = m2.gen_actions[0]
    ident = Mat.identity(m2.field, m2.dim)
    right = fingerprint_of_mats([a.kron(ident), ident.kron(a)], m2.field)
    assert left == right
    assert left.dim == 4 and left.free_count == 1


def test_fingerprint_independence_check():
    f = make_field(2)
    swap = Mat(f, [[0, 1], [1, 0]])
    with pytest.raises(AssertionError):
        fingerprint_of_mats([swap, swap], f)  # dependent pair
    assert fingerprint_of_mats([], f) == Fingerprint(0, (), 0, ())


def test_fingerprint_distinguishes():
    mod = irreducible_D((5, 1), 2)
    h6 = pm.special_subgroups(6, "H")
    k6 = pm.special_subgroups(6, "K")
    assert fingerprint(mod, h6) != fingerprint(mod, k6)


# ---------------------------------------------------------------------------
# serialization and sweeps


def test_module_json_round_trip():
    mod = irreducible_D((3, 2), 2)
    back = module_from_json(module_to_json(mod))
    assert back.n == mod.n and back.dim == mod.dim
    assert all(a == b for a, b in zip(back.gen_actions, mod.gen_actions))


def test_verify_appendix_odd_cyclic():
    reports = verify_appendix("charnot2", [5], 3)
    assert reports and all(r.status == "pass" for r in reports)
    ids = {r.claim_id for r in reports}
    assert "appendix/odd-cyclic-depth/p3/n5/4-1" in ids


def test_verify_appendix_quadratic_n8():
    (report,) = verify_appendix("char2", [8], 2)
    assert report.status == "pass"
    assert report.computed == [["5-3", "K^2xH_0"], ["7-1", "H_8"]]


def test_verify_appendix_alt_n8_recorded():
    (report,) = verify_appendix("char2_alt", [8], 2)
    assert report.status == "recorded"
    assert ["7-1", "H~_8"] in report.computed


def test_verify_appendix_length2():
    reports = verify_appendix("length2", [6], 2)
    assert reports and all(r.status == "pass" for r in reports)
