"""Bilinear and quadratic forms on finite-field spaces.

A FormSpec pins down the form a group is supposed to preserve: symplectic
(alternating bilinear), symmetric bilinear, or a quadratic form in
characteristic 2 carried as (polar bilinear Gram, values on basis vectors).
Validation happens at construction so downstream code can trust the kind.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import Mat, mm_modp


@dataclass(frozen=True)
class FormSpec:
    kind: str  # "symplectic" | "symmetric" | "quadratic_char2"
    gram: Mat
    quad_diag: tuple | None = None

    def __post_init__(self):
        g = self.gram
        f = g.field
        if g.rows != g.cols:
            raise ValueError("Gram matrix must be square")
        if self.kind == "symplectic":
            if (-g.T) != g:
                raise ValueError("symplectic Gram must be antisymmetric")
            if any(int(x) for x in np.diag(g.a)):
                raise ValueError("symplectic Gram must have zero diagonal")
        elif self.kind == "symmetric":
            if g.T != g:
                raise ValueError("symmetric Gram must equal its transpose")
        elif self.kind == "quadratic_char2":
            if f.p != 2:
                raise ValueError("quadratic_char2 forms need characteristic 2")
            if self.quad_diag is None or len(self.quad_diag) != g.rows:
                raise ValueError("quadratic_char2 needs one basis value per coordinate")
            if g.T != g or any(int(x) for x in np.diag(g.a)):
                raise ValueError("polar form of a quadratic form must be alternating")
        else:
            raise ValueError(f"unknown form kind {self.kind!r}")
        if g.rank() != g.rows:
            raise ValueError("Gram matrix is singular")

    @property
    def dim(self) -> int:
        return self.gram.rows


def bilinear(form: FormSpec, u, v) -> int:
    f = form.gram.field
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    if f.r == 1:
        return int(mm_modp(mm_modp(u.reshape(1, -1), form.gram.a, f.p), v.reshape(-1, 1), f.p)[0, 0])
    acc = 0
    for i in range(form.dim):
        if u[i] == 0:
            continue
        for j in range(form.dim):
            acc = f.add(acc, f.mul(f.mul(int(u[i]), int(form.gram.a[i, j])), int(v[j])))
    return acc


def quad_value(form: FormSpec, v) -> int:
    """Q(v) for a quadratic_char2 form, from basis values plus polar form."""
    assert form.kind == "quadratic_char2"
    f = form.gram.field
    v = np.asarray(v, dtype=np.int64)
    acc = 0
    nz = [i for i in range(form.dim) if v[i] != 0]
    for i in nz:
        ci = int(v[i])
        acc = f.add(acc, f.mul(f.mul(ci, ci), form.quad_diag[i]))
    for a in range(len(nz)):
        for b in range(a + 1, len(nz)):
            i, j = nz[a], nz[b]
            acc = f.add(acc, f.mul(f.mul(int(v[i]), int(v[j])), int(form.gram.a[i, j])))
    return acc


def preserves_form(m: Mat, form: FormSpec) -> bool:
    if (m.T @ form.gram @ m) != form.gram:
        return False
    if form.kind == "quadratic_char2":
        for k in range(form.dim):
            if quad_value(form, m.a[:, k]) != form.quad_diag[k]:
                return False
    return True


def is_isotropic(form: FormSpec, rows) -> bool:
    """Do all pairwise form values (and Q, if quadratic) vanish on these rows?"""
    rows = np.asarray(rows, dtype=np.int64)
    for i in range(rows.shape[0]):
        for j in range(rows.shape[0]):
            if bilinear(form, rows[i], rows[j]) != 0:
                return False
        if form.kind == "quadratic_char2" and quad_value(form, rows[i]) != 0:
            return False
    return True


def unipotent_constraints(form: FormSpec, w_size: int) -> Mat:
    """Linear conditions on phi: C -> W for I + phi to preserve the form.

    The space splits as W (first w_size coordinates, required totally
    isotropic) plus C (the rest); phi extends by zero on W, so I + phi is the
    block matrix [[I, F], [0, I]].  Unknowns are the entries of F flattened
    row-major.  For symmetric or alternating forms the conditions
    B(phi u, v) + B(u, phi v) = 0 over unordered basis pairs of C are
    complete; a quadratic form in characteristic 2 adds B(c_a, phi c_a) = 0
    per basis vector.  Any solution gives a genuine group element: the
    W-sided conditions hold automatically by isotropy and det(I + phi) = 1.
    """
    f = form.gram.field
    n = form.dim
    for i in range(w_size):
        for j in range(w_size):
            if int(form.gram.a[i, j]) != 0:
                raise ValueError("leading block is not isotropic for the form")
        if form.kind == "quadratic_char2" and form.quad_diag[i] != 0:
            raise ValueError("leading block is not singular for the quadratic form")
    c_idx = list(range(w_size, n))
    nc = len(c_idx)
    nunk = w_size * nc
    rows = []
    for a in range(nc):
        for b in range(a, nc):
            row = [0] * nunk
            for wi in range(w_size):
                ia = wi * nc + a
                ib = wi * nc + b
                row[ia] = f.add(row[ia], int(form.gram.a[wi, c_idx[b]]))
                row[ib] = f.add(row[ib], int(form.gram.a[c_idx[a], wi]))
            rows.append(row)
    if form.kind == "quadratic_char2":
        for a in range(nc):
            row = [0] * nunk
            for wi in range(w_size):
                row[wi * nc + a] = int(form.gram.a[c_idx[a], wi])
            rows.append(row)
    return Mat(f, np.array(rows, dtype=np.int64).reshape(len(rows), nunk))


def unipotent_hom_dim(form: FormSpec, w_size: int) -> int:
    """Dimension over the base field of the solution space of unipotent_constraints."""
    m = unipotent_constraints(form, w_size)
    return m.cols - m.rank()
