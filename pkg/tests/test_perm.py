"""Permutation layer: composition conventions, cycles, subgroups, searches."""

import itertools

import pytest

from symprep import perm as pm


def test_compose_applies_right_first():
    # a = (1 2), b = (2 3) as 0-based swaps; compose(a, b) sends 2 -> b -> 1 -> a -> 0
    a = pm.transposition(3, 0, 1)
    b = pm.transposition(3, 1, 2)
    c = pm.compose(a, b)
    assert c[2] == 0 and c[0] == 1 and c[1] == 2


def test_inverse_and_order():
    g = pm.from_cycles("(1 2 3)(4 5)", 6)
    assert pm.compose(g, pm.inverse(g)) == pm.identity(6)
    assert pm.order(g) == 6
    assert pm.order(pm.identity(4)) == 1


def test_sign_multiplicative():
    for a in itertools.permutations(range(4)):
        for b in itertools.permutations(range(4)):
            assert pm.sign(pm.compose(a, b)) == pm.sign(a) * pm.sign(b)


def test_cycle_round_trip():
    g = pm.from_cycles("(1 4 2)(3 6)", 7)
    assert pm.from_cycles(pm.to_cycles(g), 7) == g
    assert pm.to_cycles(pm.identity(3)) == "()"
    # 1-based cycle text, 0-based tuples
    assert pm.from_cycles("(1 2)", 2) == (1, 0)


def test_extend_keeps_action():
    g = pm.from_cycles("(1 2 3)", 3)
    h = pm.extend(g, 6)
    assert h[:3] == g and h[3:] == (3, 4, 5)


def test_adjacent_factorization_reconstructs():
    for g in itertools.permutations(range(5)):
        word = pm.adjacent_factorization(g)
        acc = pm.identity(5)
        for i in word:
            acc = pm.compose(pm.transposition(5, i, i + 1), acc)
        assert acc == g
        # length parity equals the sign
        assert (-1) ** len(word) == pm.sign(g)


def test_standard_gens_generate():
    for kind, n, size in (("sym", 4, 24), ("alt", 4, 12), ("sym", 5, 120), ("alt", 5, 60)):
        es = pm.closure(pm.standard_gens(kind, n))
        assert es.complete and len(es) == size
        if kind == "alt":
            assert all(pm.sign(g) == 1 for g in es.elements)


def test_closure_cap():
    es = pm.closure(pm.standard_gens("sym", 7), cap=100)
    assert not es.complete


def test_is_elementary_abelian():
    h = pm.special_subgroups(8, "H")
    ok, rank = pm.is_elementary_abelian(h, 2)
    assert ok and rank == 4
    ht = pm.special_subgroups(8, "Htilde")
    ok, rank = pm.is_elementary_abelian(ht, 2)
    assert ok and rank == 3
    k = pm.special_subgroups(8, "K")
    ok, rank = pm.is_elementary_abelian(k, 2)
    assert ok and rank == 2
    # a 3-cycle is not an involution group
    bad = pm.GroupPresentation("perm", 4, (pm.from_cycles("(1 2 3)", 4),))
    ok, _ = pm.is_elementary_abelian(bad, 2)
    assert not ok


def test_special_subgroup_chain_labels_and_ranks():
    kxh = pm.special_subgroups(8, "KmH", m=1)
    assert kxh.label == "KxH_4" and len(kxh.generators) == 4
    k2 = pm.special_subgroups(8, "KmH", m=2)
    assert k2.label == "K^2xH_0" and len(k2.generators) == 4
    ok, rank = pm.is_elementary_abelian(k2, 2)
    assert ok and rank == 4
    kxht = pm.special_subgroups(9, "KmHtilde", m=1)
    ok, rank = pm.is_elementary_abelian(kxht, 2)
    assert ok and rank == 2 + (5 // 2 - 1)


def test_h_pair_count_parameter():
    h4 = pm.special_subgroups(9, "H", m=2)
    assert h4.label == "H_4" and len(h4.generators) == 2
    assert all(len(g) == 9 for g in h4.generators)


def test_elem_abelian_rank_search_small():
    es = pm.closure(pm.standard_gens("sym", 4))
    sr = pm.elem_abelian_rank_search(es, 2)
    assert sr.exact and sr.rank == 2  # the Klein four group inside S_4
    es6 = pm.closure(pm.standard_gens("alt", 6))
    sr6 = pm.elem_abelian_rank_search(es6, 2)
    assert sr6.exact and sr6.rank == 2
    es3 = pm.closure(pm.standard_gens("sym", 3))
    sr3 = pm.elem_abelian_rank_search(es3, 3)
    assert sr3.exact and sr3.rank == 1


def test_double_transposition_even():
    g = pm.double_transposition(6, 0, 1, 2, 3)
    assert pm.sign(g) == 1 and pm.order(g) == 2
