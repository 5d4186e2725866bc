"""Mod-p permutation representations of S_n and their symplectic geometry.

The heart of the module: over GF(2) the (n-1 or n-2)-dimensional quotient of
the permutation module carries a nondegenerate alternating form (all-ones
minus identity Gram), the span of e_{2i-1}+e_{2i} is a Lagrangian W, and the
subgroup of S_n acting trivially on both W and V/W is elementary abelian of
rank floor(n/2).  Everything here is computed exactly, with a per-element
image formula that avoids multiplying out generator words.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import perm as pm
from .field import GF, make_field
from .forms import FormSpec, bilinear, is_isotropic, preserves_form
from .linalg import GF2, Mat, Subspace, mm_modp


def half_dim(n: int) -> int:
    """d_n = ceil(n/2) - 1: half the mod-2 irrep dimension."""
    return (n + 1) // 2 - 1


@dataclass
class Representation:
    """A matrix representation of a permutation group with exact per-element images."""

    group: pm.GroupPresentation
    field: GF
    dim: int
    images: tuple
    act: Optional[Callable]  # Perm (degree group.degree) -> Mat
    faithful: Optional[bool]
    label: str = ""

    def act_perm(self, g: pm.Perm) -> Mat:
        if self.act is None:
            raise ValueError("representation has no per-element action attached")
        return self.act(g)


# ---------------------------------------------------------------------------
# the permutation irreducible


def _irrep_tables(n: int, p: int):
    """(ambient point count N, dim, E) for the reduced permutation module.

    E is an N x dim integer array whose row j is the expansion of the j-th
    ambient "difference vector" in the chosen basis; the image of any
    permutation g is then column-by-column E[g(i)] - E[g(N)], so arbitrary
    elements cost O(dim^2) with no generator factorization.
    """
    if p == 2:
        big = n + (n % 2)
        dim = big - 2
        e = np.zeros((big, dim), dtype=np.int64)
        e[:dim] = np.eye(dim, dtype=np.int64)
        e[big - 2] = 1  # sum of all basis vectors
        return big, dim, e
    if n % p == 0:
        dim = n - 2
        e = np.zeros((n, dim), dtype=np.int64)
        e[:dim] = np.eye(dim, dtype=np.int64)
        e[n - 2] = (p - 1)  # minus the sum of all basis vectors
        return n, dim, e
    dim = n - 1
    e = np.zeros((n, dim), dtype=np.int64)
    e[:dim] = np.eye(dim, dtype=np.int64)
    return n, dim, e


def _make_act(n: int, p: int, big: int, dim: int, e: np.ndarray, fld: GF):
    def act(g: pm.Perm) -> Mat:
        assert len(g) == n
        gg = pm.extend(g, big)
        last = e[gg[big - 1]]
        cols = e[[gg[i] for i in range(dim)]]  # dim x dim, rows are images
        return Mat(fld, (cols - last).T % p)

    return act


def _faithful_exactly(n: int, act, dim: int, fld: GF, alternating: bool) -> bool:
    """Exact kernel triviality.

    Small n: sweep every element.  n >= 5: the kernel is a normal subgroup,
    and the only normal subgroups of S_n (resp. A_n) are 1, A_n, S_n (resp.
    1, A_n), so nontrivial action of a 3-cycle plus (for S_n) a transposition
    settles it.
    """
    ident = Mat.identity(fld, dim)
    if n >= 5:
        three = pm.from_cycles("(1 2 3)", n)
        if act(three) == ident:
            return False
        if not alternating and act(pm.transposition(n, 0, 1)) == ident:
            return False
        return True
    kernel_size = 0
    for g in itertools.permutations(range(n)):
        if alternating and pm.sign(g) != 1:
            continue
        if act(g) == ident:
            kernel_size += 1
    return kernel_size == 1


def _check_word_consistency(rep: Representation, seed: int = 0, words: int = 20):
    """Products of generator images must match the image of the composed element."""
    rng = random.Random(seed)
    gens = rep.group.generators
    if not gens:
        return
    n = rep.group.degree
    for _ in range(words):
        length = rng.randint(1, 10)
        word = [rng.randrange(len(gens)) for _ in range(length)]
        g = pm.identity(n)
        m = Mat.identity(rep.field, rep.dim)
        for idx in word:
            g = pm.compose(g, gens[idx])
            m = m @ rep.images[idx]
        assert m == rep.act(g), "generator images disagree with the element formula"


def perm_irrep(n: int, p: int) -> Representation:
    """The reduced permutation representation of S_n over GF(p).

    dim = n-1 when p does not divide n, n-2 when it does; for p = 2 the
    module is realized inside GF(2)^(2 ceil(n/2)) so that the symplectic
    basis conventions below apply verbatim for odd and even n alike.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if p == 2 and n < 4:
        raise ValueError("mod-2 reduced module needs n >= 4 to be nonzero")
    fld = make_field(p)
    big, dim, e = _irrep_tables(n, p)
    act = _make_act(n, p, big, dim, e, fld)
    group = pm.standard_gens("sym", n)
    images = tuple(act(g) for g in group.generators)
    rep = Representation(
        group=group,
        field=fld,
        dim=dim,
        images=images,
        act=act,
        faithful=_faithful_exactly(n, act, dim, fld, alternating=False),
        label=f"perm-irrep(S{n}, p={p})",
    )
    rep._tables = (big, dim, e)  # used by the optimized element sweeps
    _check_word_consistency(rep)
    return rep


def restrict_to_alternating(rep: Representation) -> Representation:
    """Same matrices, generators of A_n instead of S_n."""
    n = rep.group.degree
    group = pm.standard_gens("alt", n)
    images = tuple(rep.act(g) for g in group.generators)
    out = Representation(
        group=group,
        field=rep.field,
        dim=rep.dim,
        images=images,
        act=rep.act,
        faithful=_faithful_exactly(n, rep.act, rep.dim, rep.field, alternating=True),
        label=rep.label + "|alt",
    )
    if hasattr(rep, "_tables"):
        out._tables = rep._tables
    _check_word_consistency(out)
    return out


def natural_perm_rep(n: int, p: int) -> Representation:
    """Plain permutation matrices on GF(p)^n."""
    fld = make_field(p)

    def act(g: pm.Perm) -> Mat:
        m = np.zeros((n, n), dtype=np.int64)
        for i, gi in enumerate(g):
            m[gi, i] = 1
        return Mat(fld, m)

    group = pm.standard_gens("sym", n)
    rep = Representation(
        group=group,
        field=fld,
        dim=n,
        images=tuple(act(g) for g in group.generators),
        act=act,
        faithful=True,
        label=f"natural(S{n}, p={p})",
    )
    _check_word_consistency(rep)
    return rep


# ---------------------------------------------------------------------------
# the symplectic structure


def dickson_form(d: int) -> FormSpec:
    """All-ones-minus-identity Gram on GF(2)^(2d): B(x, y) = sum_{i != j} x_i y_j."""
    if d < 1:
        raise ValueError("need d >= 1")
    j = np.ones((2 * d, 2 * d), dtype=np.int64) - np.eye(2 * d, dtype=np.int64)
    return FormSpec(kind="symplectic", gram=Mat(GF2, j))


def check_invariance(rep: Representation, form: FormSpec) -> bool:
    if rep.dim != form.dim or rep.field != form.gram.field:
        raise ValueError("representation and form live on different spaces")
    return all(preserves_form(m, form) for m in rep.images)


def lagrangian_pair(d: int):
    """Dual pair of Lagrangians for the Dickson form on GF(2)^(2d).

    W is spanned by w_i = e_{2i-1} + e_{2i}; the dual basis vectors are
    partial sums e_1 + ... + e_{2i-1}.  The pairing matrix of the two bases
    is checked to be the identity before anything is returned.
    """
    form = dickson_form(d)
    dim = 2 * d
    w_rows = np.zeros((d, dim), dtype=np.int64)
    dual_rows = np.zeros((d, dim), dtype=np.int64)
    for i in range(d):
        w_rows[i, 2 * i] = 1
        w_rows[i, 2 * i + 1] = 1
        dual_rows[i, : 2 * i + 1] = 1
    duality = np.zeros((d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            duality[i, j] = bilinear(form, w_rows[i], dual_rows[j])
    if not np.array_equal(duality, np.eye(d, dtype=np.int64)):
        raise AssertionError("Lagrangian bases do not pair to the identity")
    assert is_isotropic(form, w_rows) and is_isotropic(form, dual_rows)
    return (
        Subspace.from_rows(GF2, w_rows),
        Subspace.from_rows(GF2, dual_rows),
        Mat(GF2, duality),
    )


# ---------------------------------------------------------------------------
# trivial-action subgroup of a parabolic


def _acts_trivially(m: Mat, w: Subspace) -> bool:
    """Does m fix w pointwise and act as the identity on V/w?"""
    f = m.field
    for row in w.basis:
        img = mm_modp(m.a, row.reshape(-1, 1), f.p)[:, 0]
        if not np.array_equal(img, row):
            return False
    shifted = (m - Mat.identity(f, m.rows)).a
    return all(w.contains(shifted[:, c]) for c in range(m.cols))


@dataclass
class ParabolicResult:
    rank: int
    order: int
    witness: tuple
    exact: bool
    elements: Optional[list] = None


def _sweep_survivors_gf2(n: int, big: int, e: np.ndarray, w: Subspace, parity: Optional[int]):
    """All g in S_n (or A_n when parity=1) acting trivially on w and V/w.

    Pure-integer bitmask formulation of the trivial-action conditions so the
    full n! sweep stays cheap; permutations stream in lexicographic order.
    """
    dim = big - 2
    ebits = []
    for j in range(big):
        ebits.append(int(sum((1 << k) for k in range(dim) if e[j, k] % 2)))
    fixrows = []
    for row in w.basis:
        bits = [k for k in range(dim) if row[k]]
        val = int(sum(1 << k for k in bits))
        fixrows.append((tuple(bits), val, len(bits) & 1))
    red = [(piv, int(sum((1 << k) for k in range(dim) if w.basis[i, k]))) for i, piv in enumerate(w.pivots)]
    unit = [1 << j for j in range(dim)]
    survivors = []
    extended_fixed = big != n  # last ambient point is not moved by S_n
    for g in itertools.permutations(range(n)):
        eg_last = 0 if extended_fixed else ebits[g[big - 1]]
        ok = True
        for bits, val, par in fixrows:
            acc = eg_last if par else 0
            for b in bits:
                acc ^= ebits[g[b]]
            if acc != val:
                ok = False
                break
        if not ok:
            continue
        for j in range(dim):
            v = ebits[g[j]] ^ eg_last ^ unit[j]
            for pivbit, rowmask in red:
                if (v >> pivbit) & 1:
                    v ^= rowmask
            if v:
                ok = False
                break
        if not ok:
            continue
        if parity is not None and pm.sign(g) != parity:
            continue
        survivors.append(g)
    return survivors


def _independent_witness(elements, p: int, degree: int):
    """Greedy increasing independent generating subset of an elementary abelian list."""
    chosen = []
    span = {pm.identity(degree)}
    for g in sorted(elements):
        if g in span:
            continue
        chosen.append(g)
        acc = g
        extra = set()
        for _ in range(p - 1):
            for s in span:
                extra.add(pm.compose(s, acc))
            acc = pm.compose(acc, g)
        span |= extra
    return tuple(chosen), len(span)


def parabolic_trivial_subgroup(
    rep: Representation,
    w: Subspace,
    mode: str = "exact_enum",
    cap: int = 10**7,
    candidates=None,
) -> ParabolicResult:
    """Subgroup of the represented group acting trivially on both w and V/w.

    exact_enum sweeps the whole group (full factorial for S_n / A_n, BFS
    closure otherwise) and certifies the subgroup is elementary abelian.
    certified_bound only verifies a candidate generating set lies inside and
    reports its rank, with exact=False.
    """
    n = rep.group.degree
    fld = rep.field
    if w.ambient != rep.dim or w.field != fld:
        raise ValueError("subspace does not live in the representation space")
    p = fld.p

    if mode == "certified_bound":
        if candidates is None:
            if rep.group.kind == "sym":
                candidates = [pm.transposition(n, 2 * i, 2 * i + 1) for i in range(n // 2)]
            elif rep.group.kind == "alt":
                candidates = [
                    pm.double_transposition(n, 0, 1, 2 * i, 2 * i + 1) for i in range(1, n // 2)
                ]
            else:
                raise ValueError("certified_bound needs explicit candidates for this group")
        for g in candidates:
            if not _acts_trivially(rep.act(g), w):
                raise ValueError(f"candidate generator {pm.to_cycles(g)} fails the trivial-action test")
        ok, rank = pm.is_elementary_abelian(candidates, p)
        assert ok, "candidate generators do not span an elementary abelian p-group"
        return ParabolicResult(rank=rank, order=p**rank, witness=tuple(candidates), exact=False)

    if mode != "exact_enum":
        raise ValueError(f"unknown mode {mode!r}")

    if rep.group.kind in ("sym", "alt") and p == 2 and hasattr(rep, "_tables"):
        import math

        if math.factorial(n) > cap:
            raise ValueError(f"group order {math.factorial(n)} exceeds enumeration cap {cap}")
        big, dim, e = rep._tables
        parity = 1 if rep.group.kind == "alt" else None
        survivors = _sweep_survivors_gf2(n, big, e, w, parity)
    else:
        es = pm.closure(rep.group, cap=cap)
        if not es.complete:
            raise ValueError(f"group enumeration exceeded cap {cap}")
        survivors = [g for g in es.elements if _acts_trivially(rep.act(g), w)]

    ok, rank = pm.is_elementary_abelian(
        [g for g in survivors if g != pm.identity(n)], p
    )
    assert ok, "trivial-action subgroup is not elementary abelian"
    witness, span_size = _independent_witness(survivors, p, n)
    assert span_size == len(survivors) == p**rank
    return ParabolicResult(
        rank=rank, order=p**rank, witness=witness, exact=True, elements=survivors
    )


def gl_parabolic_check(rep: Representation, w: Subspace, group: pm.GroupPresentation) -> bool:
    """Do all generators of the given subgroup act trivially on w and V/w?"""
    if group.degree != rep.group.degree:
        raise ValueError("subgroup degree does not match the represented group")
    return all(_acts_trivially(rep.act(g), w) for g in group.generators)


# ---------------------------------------------------------------------------
# doubling into the symplectic group


def diagonal_rep(rep: Representation):
    """g |-> diag(g, g^-T) on V + V*, preserving the standard symplectic form."""
    fld = rep.field
    d = rep.dim
    gram = np.zeros((2 * d, 2 * d), dtype=np.int64)
    gram[:d, d:] = np.eye(d, dtype=np.int64)
    gram[d:, :d] = (-np.eye(d, dtype=np.int64)) % fld.p
    form = FormSpec(kind="symplectic", gram=Mat(fld, gram))

    def act(g: pm.Perm) -> Mat:
        m = rep.act(g)
        minvt = m.inverse().T
        out = np.zeros((2 * d, 2 * d), dtype=np.int64)
        out[:d, :d] = m.a
        out[d:, d:] = minvt.a
        return Mat(fld, out)

    images = tuple(act(g) for g in rep.group.generators)
    for m in images:
        assert preserves_form(m, form), "doubled image must preserve the symplectic form"
    doubled = Representation(
        group=rep.group,
        field=fld,
        dim=2 * d,
        images=images,
        act=act,
        faithful=rep.faithful,
        label=rep.label + "+dual",
    )
    return doubled, form


def siegel_unipotent_dim(g: int, p: int) -> int:
    """Dimension of the full unipotent radical of the Lagrangian stabilizer in Sp_2g.

    Computed as the solution-space dimension of the invariance constraints on
    phi: V/W -> W, not from the closed form, so it can serve as a cross-check
    of binom(g+1, 2).
    """
    from .forms import unipotent_hom_dim

    fld = make_field(p)
    gram = np.zeros((2 * g, 2 * g), dtype=np.int64)
    gram[:g, g:] = np.eye(g, dtype=np.int64)
    gram[g:, :g] = (-np.eye(g, dtype=np.int64)) % p
    form = FormSpec(kind="symplectic", gram=Mat(fld, gram))
    return unipotent_hom_dim(form, g)


# ---------------------------------------------------------------------------
# serialization


def rep_to_json(rep: Representation) -> dict:
    return {
        "kind": "representation",
        "label": rep.label,
        "field": {"p": rep.field.p, "r": rep.field.r, "modulus": list(rep.field.modulus)},
        "group": {
            "kind": rep.group.kind,
            "degree": rep.group.degree,
            "label": rep.group.label,
            "generators": [pm.to_cycles(g) for g in rep.group.generators],
        },
        "dim": rep.dim,
        "faithful": rep.faithful,
        "generators": [
            {"cycles": pm.to_cycles(g), "matrix": m.tolist()}
            for g, m in zip(rep.group.generators, rep.images)
        ],
    }


def rep_from_json(data: dict) -> Representation:
    fld = make_field(data["field"]["p"], data["field"]["r"])
    degree = data["group"]["degree"]
    gens = tuple(pm.from_cycles(c, degree) for c in data["group"]["generators"])
    group = pm.GroupPresentation(
        kind=data["group"]["kind"], degree=degree, generators=gens, label=data["group"]["label"]
    )
    images = tuple(Mat(fld, g["matrix"]) for g in data["generators"])
    return Representation(
        group=group,
        field=fld,
        dim=data["dim"],
        images=images,
        act=None,
        faithful=data["faithful"],
        label=data["label"],
    )
