"""Modular representations of symmetric groups: Specht modules, their
irreducible quotients, and restriction behavior on 2-subgroups.

The construction is concrete: the tabloid permutation module is an explicit
coordinate space, standard polytabloids are integer vectors in it, and every
Coxeter-generator action is straightened back into the standard-polytabloid
basis by solving against the pivot columns.  Everything downstream (Loewy
filtrations, norm ranks, Jordan profiles, fingerprints) is plain linear
algebra over GF(p).
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from . import perm as pm
from .field import GF, make_field
from .linalg import (Mat, Subspace, joint_fixed_space, kernel, mm_modp,
                     quotient_action, rref_array)
from .records import VerificationReport, make_report

MAX_N = 12


# ---------------------------------------------------------------------------
# partition combinatorics


def partitions(n: int, max_part: Optional[int] = None):
    """Weakly decreasing tuples summing to n, largest first."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(max_part, n)
    for first in range(top, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def check_partition(lam) -> tuple:
    lam = tuple(int(x) for x in lam)
    assert lam and all(a > 0 for a in lam), "parts must be positive"
    assert all(a >= b for a, b in zip(lam, lam[1:])), "parts must be weakly decreasing"
    return lam


def is_p_regular(lam, p: int) -> bool:
    """No part repeated p or more times."""
    lam = check_partition(lam)
    return all(lam.count(v) < p for v in set(lam))


def p_regular_partitions(n: int, p: int) -> list[tuple]:
    return [lam for lam in partitions(n) if is_p_regular(lam, p)]


def conjugate(lam) -> tuple:
    lam = check_partition(lam)
    return tuple(sum(1 for a in lam if a > j) for j in range(lam[0]))


def standard_tableaux(lam) -> list[tuple]:
    """All row-and-column increasing fillings with 0..n-1, rows as tuples."""
    lam = check_partition(lam)
    n = sum(lam)
    rows = [[] for _ in lam]
    out = []

    def place(v):
        if v == n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i, r in enumerate(rows):
            if len(r) < lam[i] and (i == 0 or len(rows[i - 1]) > len(r)):
                r.append(v)
                place(v + 1)
                r.pop()

    place(0)
    return out


def hook_length_dim(lam) -> int:
    lam = check_partition(lam)
    conj = conjugate(lam)
    prod = 1
    for i, li in enumerate(lam):
        for j in range(li):
            prod *= li - j + conj[j] - i - 1
    num = math.factorial(sum(lam))
    assert num % prod == 0
    return num // prod


# ---------------------------------------------------------------------------
# tabloids and polytabloids


def _tabloids(points: tuple, shape: tuple):
    """Ordered tuples of disjoint sorted rows with the given sizes."""
    if not shape:
        yield ()
        return
    for row in itertools.combinations(points, shape[0]):
        taken = set(row)
        rest = tuple(x for x in points if x not in taken)
        for tail in _tabloids(rest, shape[1:]):
            yield (row,) + tail


def _polytabloid_vector(tab, index: dict, shape: tuple, p: int) -> np.ndarray:
    """Signed sum over the column group of the row-sorted images of tab."""
    conj = conjugate(shape)
    cols = [tuple(tab[i][j] for i in range(conj[j])) for j in range(len(conj))]
    n = sum(shape)
    col_perms = [
        [(s, pm.sign(s)) for s in itertools.permutations(range(len(c)))]
        for c in cols
    ]
    vec = np.zeros(len(index), dtype=np.int64)
    for choice in itertools.product(*col_perms):
        mapping = list(range(n))
        sgn = 1
        for col, (sig, s) in zip(cols, choice):
            sgn *= s
            for a, b in enumerate(sig):
                mapping[col[a]] = col[b]
        key = tuple(tuple(sorted(mapping[x] for x in row)) for row in tab)
        vec[index[key]] += sgn
    return vec % p


def _tabloid_swap_perm(tabs: list, index: dict, k: int) -> np.ndarray:
    """Index map m with (s_k . x) = x[m] for coefficient vectors x over tabloids."""
    out = np.empty(len(tabs), dtype=np.int64)
    for j, tab in enumerate(tabs):
        moved = tuple(
            tuple(sorted(k + 1 if x == k else k if x == k + 1 else x for x in row))
            for row in tab
        )
        out[index[moved]] = j
    return out


# ---------------------------------------------------------------------------
# the module class


class GModule:
    """A representation of S_n over GF(p), stored as Coxeter-generator matrices.

    gen_actions[i] is the matrix of the adjacent swap (i, i+1), 0-based, in
    column convention.  Generator relations (involution, braid, distant
    commutation) are checked at construction: full matrix identities up to
    dimension 400, then against a 64-column random block, which any violation
    survives with probability at most p^-64.
    """

    def __init__(self, n: int, field: GF, gen_actions, label: str = "",
                 check: str = "auto", seed: int = 0):
        assert 2 <= n <= MAX_N
        gen_actions = tuple(gen_actions)
        assert len(gen_actions) == n - 1
        self.n = n
        self.field = field
        self.gen_actions = gen_actions
        self.dim = gen_actions[0].rows
        self.label = label
        self._act_cache = {}
        for g in gen_actions:
            assert g.field == field and g.shape == (self.dim, self.dim)
        if check == "auto":
            check = "full" if self.dim <= 400 else "sampled"
        if check != "skip" and self.dim > 0:
            self._check_relations(seed, full=(check == "full"))

    def _check_relations(self, seed: int, full: bool):
        gens = self.gen_actions
        f = self.field
        if full:
            ident = Mat.identity(f, self.dim)
            for a in gens:
                assert a @ a == ident, "generator is not an involution"
            for i in range(len(gens) - 1):
                a, b = gens[i], gens[i + 1]
                assert a @ (b @ a) == b @ (a @ b), "braid relation fails"
            for i in range(len(gens)):
                for j in range(i + 2, len(gens)):
                    assert gens[i] @ gens[j] == gens[j] @ gens[i], \
                        "distant generators must commute"
            return
        rng = np.random.default_rng(seed + 77003)
        v = Mat(f, rng.integers(0, f.q, size=(self.dim, 64)))
        for a in gens:
            assert a @ (a @ v) == v, "generator is not an involution"
        for i in range(len(gens) - 1):
            a, b = gens[i], gens[i + 1]
            assert a @ (b @ (a @ v)) == b @ (a @ (b @ v)), "braid relation fails"
        for i in range(len(gens)):
            for j in range(i + 2, len(gens)):
                assert gens[i] @ (gens[j] @ v) == gens[j] @ (gens[i] @ v), \
                    "distant generators must commute"

    def act(self, g: pm.Perm) -> Mat:
        """Image of an arbitrary permutation via its adjacent-swap factorization."""
        assert len(g) == self.n
        g = tuple(g)
        cached = self._act_cache.get(g)
        if cached is not None:
            return cached
        out = Mat.identity(self.field, self.dim)
        for i in pm.adjacent_factorization(g):
            out = self.gen_actions[i] @ out
        self._act_cache[g] = out
        return out

    def restrict(self, new_n: int) -> "GModule":
        """Same space as a module for the smaller symmetric group."""
        assert 2 <= new_n <= self.n
        return GModule(new_n, self.field, self.gen_actions[: new_n - 1],
                       label=f"{self.label}|S{new_n}", check="skip")

    def __repr__(self):
        return f"GModule({self.label or 'S_' + str(self.n)}, dim {self.dim})"


# ---------------------------------------------------------------------------
# Specht modules and irreducible quotients


@functools.lru_cache(maxsize=None)
def _specht_core(lam: tuple, p: int):
    """(n, dim, generator matrices, Gram matrix) for the standard-polytabloid basis."""
    lam = check_partition(lam)
    n = sum(lam)
    assert 2 <= n <= MAX_N, "degree outside supported range"
    fld = make_field(p)
    tabs = list(_tabloids(tuple(range(n)), lam))
    index = {t: i for i, t in enumerate(tabs)}
    st = standard_tableaux(lam)
    dim = len(st)
    assert dim == hook_length_dim(lam), "tableau count disagrees with hook lengths"
    b = np.zeros((dim, len(tabs)), dtype=np.int64)
    for i, t in enumerate(st):
        b[i] = _polytabloid_vector(t, index, lam, p)
    _, piv = rref_array(b, fld)
    assert len(piv) == dim, "standard polytabloids must stay independent mod p"
    piv = list(piv)
    binv = Mat(fld, b[:, piv]).inverse().a
    rng = np.random.default_rng(409 + 97 * n + p)
    gen_mats = []
    for k in range(n - 1):
        shuffle = _tabloid_swap_perm(tabs, index, k)
        gb = b[:, shuffle]
        coef = mm_modp(gb[:, piv], binv, p)
        if dim <= 200:
            assert np.array_equal(mm_modp(coef, b, p), gb), "straightening failed"
        else:
            proj = rng.integers(0, p, size=(64, dim))
            lhs = mm_modp(mm_modp(proj, coef, p), b, p)
            rhs = mm_modp(proj, gb, p)
            assert np.array_equal(lhs, rhs), "straightening failed"
        gen_mats.append(Mat(fld, coef.T))
    gram = Mat(fld, mm_modp(b, b.T, p))
    return n, dim, tuple(gen_mats), gram


@functools.lru_cache(maxsize=None)
def specht_module(lam: tuple, p: int) -> GModule:
    """Row span of the standard polytabloids inside the tabloid module."""
    lam = check_partition(lam)
    n, dim, gens, _ = _specht_core(lam, p)
    return GModule(n, make_field(p), gens, label=f"S{lam} mod {p}")


def specht_gram(lam: tuple, p: int) -> Mat:
    """Gram matrix of the tabloid inner product on the standard basis."""
    return _specht_core(check_partition(lam), p)[3]


@functools.lru_cache(maxsize=None)
def irreducible_D(lam: tuple, p: int) -> GModule:
    """Quotient of the Specht module by the radical of its bilinear form."""
    lam = check_partition(lam)
    if not is_p_regular(lam, p):
        raise ValueError(f"{lam} is not {p}-regular")
    s = specht_module(lam, p)
    gram = specht_gram(lam, p)
    rad = kernel(gram)
    label = f"D{lam} mod {p}"
    if rad.dim == 0:
        return GModule(s.n, s.field, s.gen_actions, label=label, check="skip")
    mats = quotient_action(list(s.gen_actions), rad)
    mod = GModule(s.n, s.field, tuple(mats), label=label)
    assert mod.dim == gram.rank()
    return mod


def basic_spin_restriction(k: int) -> GModule:
    """Restriction to S_2k of the mod-2 irreducible for the partition (k+1, k)."""
    assert 1 <= k and 2 * k + 1 <= MAX_N
    return irreducible_D((k + 1, k), 2).restrict(2 * k)


# ---------------------------------------------------------------------------
# structural invariants of restrictions


@dataclass(frozen=True)
class LoewySeries:
    layer_dims: tuple

    @property
    def length(self) -> int:
        return len(self.layer_dims)


def _layers_of_mats(mats: list[Mat]) -> tuple:
    """Invariants-quotient filtration layer dimensions for commuting p-actions."""
    layers = []
    while mats[0].rows > 0:
        fixed = joint_fixed_space(mats)
        assert fixed.dim > 0, "invariant space of a p-group vanished on a nonzero module"
        layers.append(fixed.dim)
        if fixed.dim == mats[0].rows:
            break
        mats = quotient_action(mats, fixed)
    return tuple(layers)


def _check_p_subgroup(group: pm.GroupPresentation, n: int, p: int):
    for g in group.generators:
        if len(g) != n:
            raise ValueError("subgroup degree does not match the module")
        o = pm.order(g)
        while o % p == 0:
            o //= p
        if o != 1:
            raise ValueError(f"{group.label or 'subgroup'} is not a {p}-group")


def loewy_length(mod: GModule, group: pm.GroupPresentation) -> LoewySeries:
    """Number of invariants-quotient steps to exhaust the module over the subgroup."""
    _check_p_subgroup(group, mod.n, mod.field.p)
    if mod.dim == 0:
        return LoewySeries(())
    mats = [mod.act(g) for g in group.generators]
    if not mats:
        mats = [Mat.identity(mod.field, mod.dim)]
    series = LoewySeries(_layers_of_mats(mats))
    assert sum(series.layer_dims) == mod.dim
    return series


def _geometric_sum(a: Mat, p: int) -> Mat:
    out = Mat.identity(a.field, a.rows)
    power = a
    for _ in range(p - 1):
        out = out + power
        power = power @ a
    return out


def free_summand_count(mod: GModule, group: pm.GroupPresentation) -> int:
    """Rank of the norm operator: the number of free summands over the subgroup.

    The subgroup must be elementary abelian with independent listed
    generators, so the norm factors as a product of generator geometric sums.
    """
    p = mod.field.p
    ok, rank = pm.is_elementary_abelian(list(group.generators), p)
    if not ok:
        raise ValueError("subgroup is not elementary abelian")
    assert rank == len(group.generators), "listed generators must be independent"
    norm = Mat.identity(mod.field, mod.dim)
    for g in group.generators:
        norm = norm @ _geometric_sum(mod.act(g), p)
    count = norm.rank()
    assert count * p**rank <= mod.dim
    return count


def cyclic_profile(mod: GModule, g: pm.Perm) -> tuple:
    """Multiset (ascending tuple) of Jordan block sizes of an order-p element."""
    p = mod.field.p
    if pm.order(g) != p:
        raise ValueError("element order must equal the field characteristic")
    x = mod.act(g) - Mat.identity(mod.field, mod.dim)
    ranks = [mod.dim]
    power = x
    for _ in range(p):
        ranks.append(power.rank())
        power = power @ x
    assert ranks[p] == 0, "p-th power of a unipotent difference must vanish"
    blocks = []
    for k in range(1, p + 1):
        at_least_k = ranks[k - 1] - ranks[k]
        at_least_next = (ranks[k] - ranks[k + 1]) if k < p else 0
        blocks.extend([k] * (at_least_k - at_least_next))
    assert sum(blocks) == mod.dim
    return tuple(blocks)


def tensor_module(a: GModule, b: GModule) -> GModule:
    if a.n != b.n or a.field != b.field:
        raise ValueError("tensor factors must share degree and field")
    gens = tuple(x.kron(y) for x, y in zip(a.gen_actions, b.gen_actions))
    return GModule(a.n, a.field, gens, label=f"({a.label})*({b.label})")


# ---------------------------------------------------------------------------
# fingerprints: the implemented proxy for isomorphism of restrictions


@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism invariants of a module over a listed elementary abelian group.

    Equal fingerprints are the documented stand-in for an isomorphism of
    restrictions; inequality genuinely refutes one.
    """

    dim: int
    layers: tuple
    free_count: int
    gen_fixed_dims: tuple


def fingerprint_of_mats(mats: list[Mat], field: GF,
                        verify_independent: bool = True, cap: int = 4096) -> Fingerprint:
    """Fingerprint from explicit commuting order-p generator matrices."""
    p = field.p
    if not mats or mats[0].rows == 0:
        return Fingerprint(0, (), 0, ())
    dim = mats[0].rows
    ident = Mat.identity(field, dim)
    for a in mats:
        assert a.pow(p) == ident, "generator order must divide p"
        for b in mats:
            assert a @ b == b @ a, "generators must commute"
    if verify_independent:
        seen = {ident.key()}
        frontier = [ident]
        while frontier:
            nxt = []
            for m in frontier:
                for a in mats:
                    y = m @ a
                    if y.key() not in seen:
                        assert len(seen) < cap, "matrix group too large to verify"
                        seen.add(y.key())
                        nxt.append(y)
            frontier = nxt
        assert len(seen) == p ** len(mats), "generator matrices are not independent"
    norm = ident
    for a in mats:
        norm = norm @ _geometric_sum(a, p)
    return Fingerprint(
        dim=dim,
        layers=_layers_of_mats(list(mats)),
        free_count=norm.rank(),
        gen_fixed_dims=tuple(joint_fixed_space([a]).dim for a in mats),
    )


def fingerprint(mod: GModule, group: pm.GroupPresentation) -> Fingerprint:
    """Fingerprint of the module restricted to an elementary abelian subgroup."""
    p = mod.field.p
    ok, rank = pm.is_elementary_abelian(list(group.generators), p)
    if not ok:
        raise ValueError("subgroup is not elementary abelian")
    assert rank == len(group.generators), "listed generators must be independent"
    if mod.dim == 0:
        return Fingerprint(0, (), 0, ())
    mats = [mod.act(g) for g in group.generators]
    return fingerprint_of_mats(mats, mod.field, verify_independent=False)


# ---------------------------------------------------------------------------
# serialization


def module_to_json(mod: GModule) -> dict:
    return {
        "kind": "gmodule",
        "label": mod.label,
        "n": mod.n,
        "field": {"p": mod.field.p, "r": mod.field.r, "modulus": list(mod.field.modulus)},
        "dim": mod.dim,
        "generators": [
            {"coxeter_index": i, "matrix": m.tolist()}
            for i, m in enumerate(mod.gen_actions)
        ],
    }


def module_from_json(data: dict) -> GModule:
    fld = make_field(data["field"]["p"], data["field"]["r"])
    gens = [Mat(fld, g["matrix"]) for g in sorted(data["generators"],
                                                  key=lambda g: g["coxeter_index"])]
    return GModule(data["n"], fld, gens, label=data["label"], check="skip")


# ---------------------------------------------------------------------------
# the theorem sweeps


def _timed(fn):
    import time

    t0 = time.monotonic()
    value = fn()
    return value, int((time.monotonic() - t0) * 1000)


def _lam_id(lam) -> str:
    return "-".join(str(x) for x in lam)


def _cyclic_group(n: int, p: int) -> pm.GroupPresentation:
    cyc = pm.from_cycles("(" + " ".join(str(i + 1) for i in range(p)) + ")", n)
    return pm.GroupPresentation("perm", n, (cyc,), label=f"C_{p}")


def _mixed_subgroups(n: int, even_part: bool) -> list[pm.GroupPresentation]:
    """The Klein-block times transposition-block chain of 2-subgroups."""
    kind = "KmHtilde" if even_part else "KmH"
    base = "Htilde" if even_part else "H"
    subs = [pm.special_subgroups(n, base)]
    for m in range(1, n // 4 + 1):
        subs.append(pm.special_subgroups(n, kind, m=m))
    return subs


def _sweep_quadratic(n: int, lams: Iterable[tuple], even_part: bool):
    """(quadratic hits, all rows) over modules x subgroups, length <= 2 flagged."""
    hits = []
    rows = []
    for lam in lams:
        mod = irreducible_D(lam, 2)
        if mod.dim <= 1:
            continue
        for sub in _mixed_subgroups(n, even_part):
            series = loewy_length(mod, sub)
            rows.append((_lam_id(lam), sub.label, series.length, list(series.layer_dims)))
            if series.length <= 2:
                hits.append([_lam_id(lam), sub.label])
    return hits, rows


def verify_appendix(theorem: str, ns: Iterable[int], p: int) -> list[VerificationReport]:
    """Reports for one theorem family over the given degrees.

    Failures become fail-status reports, never exceptions, so a sweep always
    documents everything it looked at.
    """
    ns = sorted(set(int(n) for n in ns))
    out = []
    if theorem in ("charnot2", "charnot2_alt"):
        assert p % 2 == 1
        alt = theorem.endswith("_alt")
        for n in ns:
            if n < p:
                continue
            for lam in p_regular_partitions(n, p):
                mod = irreducible_D(lam, p)
                if mod.dim <= 1:
                    continue
                (series, ms) = _timed(lambda: loewy_length(mod, _cyclic_group(n, p)))
                out.append(make_report(
                    claim_id=f"appendix/odd-cyclic-depth{'-alt' if alt else ''}/p{p}/n{n}/{_lam_id(lam)}",
                    statement="restriction of a non-character mod-p irreducible to the "
                              "cyclic group on the first p points has Loewy length at least 3"
                              + (" (cycle taken inside the even subgroup)" if alt else ""),
                    inputs={"partition": list(lam), "p": p, "n": n, "dim": mod.dim,
                            "layers": list(series.layer_dims)},
                    expected=True,
                    computed=series.length >= 3,
                    runtime_ms=ms,
                ))
        return out

    if theorem in ("char2", "char2_alt"):
        assert p == 2
        alt = theorem.endswith("_alt")
        for n in ns:
            two_row_only = n > 10
            lams = (
                [lam for lam in p_regular_partitions(n, 2) if len(lam) <= 2]
                if two_row_only else p_regular_partitions(n, 2)
            )
            (res, ms) = _timed(lambda: _sweep_quadratic(n, lams, even_part=alt))
            hits, rows = res
            top = "H~_" + str(n) if alt else "H_" + str(n)
            expected_hits = [[f"{n - 1}-1", top]]
            if n == 8 and not alt:
                expected_hits.append(["5-3", "K^2xH_0"])
            expected_hits = sorted(expected_hits)
            status = None
            if two_row_only:
                status = "partial"
            elif alt and n == 8:
                status = "recorded"
            out.append(make_report(
                claim_id=f"appendix/quadratic-pairs{'-alt' if alt else ''}/n{n}",
                statement="Loewy length at most 2 over the Klein-by-transposition "
                          "subgroup chain happens only at the listed module/subgroup pairs"
                          + (" (two-row modules only)" if two_row_only else ""),
                inputs={"n": n, "modules_checked": len(set(r[0] for r in rows)),
                        "pairs_checked": len(rows),
                        "sweep": "two-row" if two_row_only else "all 2-regular"},
                expected="recorded-only" if status == "recorded" else expected_hits,
                computed=sorted(hits),
                status=status,
                runtime_ms=ms,
            ))
        return out

    if theorem == "H2kproj":
        assert p == 2
        from .oracles import validate_norm_rank

        (valid, ms) = _timed(lambda: validate_norm_rank(seed=0))
        out.append(make_report(
            claim_id="appendix/norm-rank-validation",
            statement="norm-operator rank equals the brute-force free summand count "
                      "on every random small test module",
            inputs={"seed": 0},
            expected=True,
            computed=valid["all_match"],
            runtime_ms=ms,
        ))
        for n in ns:
            for k in range(2, (n + 1) // 2):
                if n - k <= k:
                    continue
                mod = irreducible_D((n - k, k), 2)
                sub = pm.special_subgroups(n, "H", m=k)
                (count, ms) = _timed(lambda: free_summand_count(mod, sub))
                out.append(make_report(
                    claim_id=f"appendix/pair-partition-free-summand/n{n}/k{k}",
                    statement="the two-row mod-2 irreducible keeps a free summand over "
                              "the rank-k transposition subgroup",
                    inputs={"partition": [n - k, k], "subgroup": sub.label,
                            "dim": mod.dim, "free_count": count},
                    expected=True,
                    computed=count >= 1,
                    runtime_ms=ms,
                ))
        for k in (1, 2, 3, 4):
            (mod, ms) = _timed(lambda: basic_spin_restriction(k))
            out.append(make_report(
                claim_id=f"appendix/spin-restriction-dim/k{k}",
                statement="restricting the pair-partition irreducible one point down "
                          "gives dimension 2^k",
                inputs={"k": k, "partition": [k + 1, k]},
                expected=2**k,
                computed=mod.dim,
                runtime_ms=ms,
            ))

        def tensor_recursion():
            m4 = basic_spin_restriction(2)
            m2 = basic_spin_restriction(1)
            left = fingerprint(m4, pm.special_subgroups(4, "H"))
            a = m2.gen_actions[0]
            ident = Mat.identity(m2.field, m2.dim)
            right = fingerprint_of_mats([a.kron(ident), ident.kron(a)], m2.field)
            return left, right

        ((left, right), ms) = _timed(tensor_recursion)
        out.append(make_report(
            claim_id="appendix/spin-tensor-recursion",
            statement="the dim-4 restriction over its transposition subgroup matches "
                      "the tensor square of the dim-2 one over the product subgroup, "
                      "fingerprint for fingerprint",
            inputs={"left": repr(left), "right": repr(right)},
            expected=True,
            computed=left == right,
            runtime_ms=ms,
        ))
        return out

    if theorem == "length2":
        assert p == 2
        for n in ns:
            for lam in p_regular_partitions(n, 2):
                if len(lam) < 3:
                    continue
                mod = irreducible_D(lam, 2)
                if mod.dim <= 1:
                    continue
                for sub in (pm.special_subgroups(n, "K"), pm.special_subgroups(n, "H", m=2)):
                    (series, ms) = _timed(lambda: loewy_length(mod, sub))
                    free = free_summand_count(mod, sub)
                    out.append(make_report(
                        claim_id=f"appendix/three-part-depth/n{n}/{_lam_id(lam)}/{sub.label}",
                        statement="mod-2 irreducibles with at least three parts have "
                                  "Loewy length at least 3 on rank-2 four-point subgroups",
                        inputs={"partition": list(lam), "subgroup": sub.label,
                                "dim": mod.dim, "layers": list(series.layer_dims),
                                "free_count": free},
                        expected=True,
                        computed=series.length >= 3,
                        runtime_ms=ms,
                    ))
        return out

    raise ValueError(f"unknown theorem key {theorem!r}")
