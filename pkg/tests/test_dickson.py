"""The mod-p representation cut from the permutation module, its symplectic
pairing, Lagrangian structure, and parabolic subgroup computations."""

import numpy as np
import pytest

from symprep import perm as pm
from symprep.dickson import (check_invariance, diagonal_rep, dickson_form,
                             gl_parabolic_check, half_dim, lagrangian_pair,
                             natural_perm_rep, parabolic_trivial_subgroup,
                             perm_irrep, rep_from_json, rep_to_json,
                             restrict_to_alternating, siegel_unipotent_dim)
from symprep.forms import preserves_form
from symprep.linalg import Mat


def test_dimensions_by_characteristic():
    # char 2: dim = n - 2 for even n, n - 1 for odd n (always even)
    assert perm_irrep(6, 2).dim == 4
    assert perm_irrep(7, 2).dim == 6
    assert perm_irrep(8, 2).dim == 6
    assert perm_irrep(9, 2).dim == 8
    # odd characteristic: n - 2 when p divides n, else n - 1
    assert perm_irrep(6, 3).dim == 4
    assert perm_irrep(7, 3).dim == 6
    assert perm_irrep(10, 5).dim == 8
    assert perm_irrep(7, 5).dim == 6
    assert half_dim(8) == 3 and half_dim(9) == 4


def test_rejects_bad_parameters():
    with pytest.raises(ValueError):
        perm_irrep(1, 2)
    with pytest.raises(ValueError):
        perm_irrep(3, 2)  # needs n >= 4 in characteristic 2


def test_homomorphism_on_random_words():
    rng = np.random.default_rng(4)
    rep = perm_irrep(7, 3)
    for _ in range(15):
        a = tuple(rng.permutation(7))
        b = tuple(rng.permutation(7))
        assert rep.act(pm.compose(a, b)) == rep.act(a) @ rep.act(b)


def test_faithfulness_flags():
    assert perm_irrep(5, 2).faithful
    assert perm_irrep(8, 2).faithful
    assert not perm_irrep(4, 2).faithful  # Klein kernel at n = 4


def test_invariance_all_small_degrees():
    for n in range(5, 11):
        rep = perm_irrep(n, 2)
        form = dickson_form(rep.dim // 2)
        assert check_invariance(rep, form)


def test_natural_rep_is_permutation_matrices():
    rep = natural_perm_rep(4, 3)
    g = pm.from_cycles("(1 2 3 4)", 4)
    m = rep.act(g)
    assert sorted(int(np.argmax(m.a[:, j])) for j in range(4)) == [0, 1, 2, 3]
    assert m @ rep.act(pm.inverse(g)) == Mat.identity(rep.field, 4)


def test_lagrangian_duality():
    for d in (2, 3, 4):
        w, dual, pairing = lagrangian_pair(d)
        assert w.dim == d and dual.dim == d
        assert pairing == Mat.identity(pairing.field, d)


def test_parabolic_ranks_exact_small():
    for n in (5, 6, 7, 8):
        rep = perm_irrep(n, 2)
        w, _, _ = lagrangian_pair(rep.dim // 2)
        res = parabolic_trivial_subgroup(rep, w)
        assert res.exact and res.rank == n // 2 and res.order == 2 ** (n // 2)
        alt = restrict_to_alternating(rep)
        res_a = parabolic_trivial_subgroup(alt, w)
        assert res_a.exact and res_a.rank == n // 2 - 1


def test_parabolic_witnesses_are_disjoint_transpositions():
    rep = perm_irrep(8, 2)
    w, _, _ = lagrangian_pair(rep.dim // 2)
    res = parabolic_trivial_subgroup(rep, w)
    cycles = sorted(pm.to_cycles(g) for g in res.witness)
    assert cycles == ["(1 2)", "(3 4)", "(5 6)", "(7 8)"]


def test_certified_mode_matches_exact():
    rep = perm_irrep(9, 2)
    w, _, _ = lagrangian_pair(rep.dim // 2)
    exact = parabolic_trivial_subgroup(rep, w)
    cert = parabolic_trivial_subgroup(rep, w, mode="certified_bound")
    assert not cert.exact and cert.rank == exact.rank


def test_certified_rejects_bad_candidate():
    rep = perm_irrep(8, 2)
    w, _, _ = lagrangian_pair(rep.dim // 2)
    with pytest.raises(ValueError):
        parabolic_trivial_subgroup(rep, w, mode="certified_bound",
                                   candidates=[pm.transposition(8, 0, 2)])


def test_enum_cap_enforced():
    rep = perm_irrep(8, 2)
    w, _, _ = lagrangian_pair(rep.dim // 2)
    with pytest.raises(ValueError):
        parabolic_trivial_subgroup(rep, w, cap=1000)


def test_gl_parabolic_check():
    rep = perm_irrep(8, 2)
    w, _, _ = lagrangian_pair(rep.dim // 2)
    h = pm.special_subgroups(8, "H")
    assert gl_parabolic_check(rep, w, h)
    s8 = pm.standard_gens("sym", 8)
    assert not gl_parabolic_check(rep, w, s8)


def test_diagonal_rep_symplectic():
    rep = perm_irrep(6, 2)
    doubled, form = diagonal_rep(rep)
    assert doubled.dim == 2 * rep.dim
    g = pm.from_cycles("(1 2 3 4 5 6)", 6)
    assert preserves_form(doubled.act(g), form)


def test_siegel_dims():
    for g in range(1, 6):
        for p in (2, 3, 5):
            assert siegel_unipotent_dim(g, p) == g * (g + 1) // 2


def test_json_round_trip():
    rep = perm_irrep(6, 2)
    doc = rep_to_json(rep)
    back = rep_from_json(doc)
    assert back.dim == rep.dim and back.field == rep.field
    assert all(a == b for a, b in zip(back.images, rep.images))
