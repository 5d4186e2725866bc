"""Exact linear algebra over GF(p^r).

Matrices are numpy int64 arrays of canonical element encodings.  Prime
fields get vectorized arithmetic (with a float64 BLAS shortcut for large
exact integer matmuls); GF(2) additionally gets a bit-packed elimination
path; extension fields fall back to scalar loops, which is fine because
every extension-field matrix in this package is tiny.

All reduced row echelon forms are canonical: leading coefficient 1, pivot
columns cleared, rows ordered by pivot.  Two subspaces are equal iff their
canonical bases are byte-identical, which is what makes report output
reproducible.
"""

from __future__ import annotations

import numpy as np

from .field import GF, make_field

# product of two entries times the inner dimension must stay exactly
# representable in float64 for the BLAS shortcut to be valid
_FLOAT_EXACT = 2**53


def _as_array(a, like=None) -> np.ndarray:
    arr = np.asarray(a, dtype=np.int64)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    assert arr.ndim == 2
    return arr


def mm_modp(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact matmul of canonical mod-p arrays."""
    n, k = a.shape
    k2, m = b.shape
    assert k == k2, f"shape mismatch {a.shape} @ {b.shape}"
    if k == 0:
        return np.zeros((n, m), dtype=np.int64)
    assert (p - 1) * (p - 1) * k < _FLOAT_EXACT
    if n * k * m >= 200_000:
        c = a.astype(np.float64) @ b.astype(np.float64)
        return np.rint(c).astype(np.int64) % p
    return (a @ b) % p


# ---------------------------------------------------------------------------
# GF(2) bit-packed rows


def pack_rows(a: np.ndarray) -> np.ndarray:
    rows, cols = a.shape
    words = max(1, -(-cols // 64))
    b = np.packbits(a.astype(np.uint8) & 1, axis=1, bitorder="little")
    pad = words * 8 - b.shape[1]
    if pad > 0:
        b = np.pad(b, ((0, 0), (0, pad)))
    return np.ascontiguousarray(b).view(np.uint64)


def unpack_rows(w: np.ndarray, cols: int) -> np.ndarray:
    if w.shape[0] == 0:
        return np.zeros((0, cols), dtype=np.int64)
    bits = np.unpackbits(w.view(np.uint8), axis=1, bitorder="little")
    return bits[:, :cols].astype(np.int64)


def _rref_packed(w: np.ndarray, cols: int):
    """In-place RREF on packed GF(2) rows; returns pivot column list."""
    rows = w.shape[0]
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        wi, bi = divmod(c, 64)
        col = (w[r:, wi] >> np.uint64(bi)) & np.uint64(1)
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            w[[r, pr]] = w[[pr, r]]
        sel = np.flatnonzero((w[:, wi] >> np.uint64(bi)) & np.uint64(1))
        sel = sel[sel != r]
        if sel.size:
            w[sel] ^= w[r]
        pivots.append(c)
        r += 1
    return pivots


# ---------------------------------------------------------------------------
# generic elimination


def _rref_modp(a: np.ndarray, p: int):
    """RREF of a mod-p array (copy); returns (array, pivot list)."""
    a = a.copy() % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        if inv != 1:
            a[r] = (a[r] * inv) % p
        sel = np.flatnonzero(a[:, c])
        sel = sel[sel != r]
        if sel.size:
            a[sel] = (a[sel] - np.outer(a[sel, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def _rref_ext(a: np.ndarray, f: GF):
    """Scalar-loop RREF for extension fields (tiny matrices only)."""
    m = [[int(x) for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else a.shape[1]
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = f.inv(m[r][c])
        if inv != 1:
            m[r] = [f.mul(inv, x) for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                coef = m[i][c]
                m[i] = [f.sub(x, f.mul(coef, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    out = np.array(m, dtype=np.int64) if rows else np.zeros((0, cols), dtype=np.int64)
    return out, pivots


def rref_array(a: np.ndarray, f: GF, force_generic: bool = False):
    """Canonical RREF of an encoded array; returns (array, pivot tuple)."""
    a = _as_array(a)
    if f.r > 1:
        out, piv = _rref_ext(a, f)
        return out, tuple(piv)
    if f.is_gf2 and not force_generic:
        w = pack_rows(a % 2)
        piv = _rref_packed(w, a.shape[1])
        return unpack_rows(w, a.shape[1]), tuple(piv)
    out, piv = _rref_modp(a, f.p)
    return out, tuple(piv)


# ---------------------------------------------------------------------------
# matrices


class Mat:
    """Immutable matrix over a fixed field, entries canonically encoded."""

    __slots__ = ("field", "a")

    def __init__(self, field: GF, a):
        self.field = field
        arr = np.asarray(a, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError(f"matrix must be 2-dimensional, got shape {arr.shape}")
        if field.r == 1:
            arr = arr % field.p
        elif arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"entries out of range for {field}")
        arr = np.ascontiguousarray(arr)
        arr.flags.writeable = False
        self.a = arr

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, field: GF, rows: int, cols: int) -> "Mat":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: GF, n: int) -> "Mat":
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def shape(self):
        return self.a.shape

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    def _check(self, other: "Mat"):
        if self.field != other.field:
            raise ValueError(f"mismatched fields: {self.field} vs {other.field}")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Mat") -> "Mat":
        self._check(other)
        f = self.field
        if f.r == 1:
            return Mat(f, (self.a + other.a) % f.p)
        if f.p == 2:
            return Mat(f, self.a ^ other.a)
        add = np.vectorize(f.add, otypes=[np.int64])
        return Mat(f, add(self.a, other.a) if self.a.size else self.a)

    def __neg__(self) -> "Mat":
        f = self.field
        if f.r == 1:
            return Mat(f, (-self.a) % f.p)
        if f.p == 2:
            return self
        neg = np.vectorize(f.neg, otypes=[np.int64])
        return Mat(f, neg(self.a) if self.a.size else self.a)

    def __sub__(self, other: "Mat") -> "Mat":
        return self + (-other)

    def __matmul__(self, other: "Mat") -> "Mat":
        self._check(other)
        f = self.field
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if f.r == 1:
            return Mat(f, mm_modp(self.a, other.a, f.p))
        n, k, m = self.rows, self.cols, other.cols
        out = np.zeros((n, m), dtype=np.int64)
        for i in range(n):
            for j in range(m):
                acc = 0
                for t in range(k):
                    acc = f.add(acc, f.mul(int(self.a[i, t]), int(other.a[t, j])))
                out[i, j] = acc
        return Mat(f, out)

    def scale(self, c: int) -> "Mat":
        f = self.field
        if f.r == 1:
            return Mat(f, (self.a * (c % f.p)) % f.p)
        mul = np.vectorize(lambda x: f.mul(c, int(x)), otypes=[np.int64])
        return Mat(f, mul(self.a) if self.a.size else self.a)

    @property
    def T(self) -> "Mat":
        return Mat(self.field, self.a.T)

    def kron(self, other: "Mat") -> "Mat":
        self._check(other)
        f = self.field
        if f.r == 1:
            return Mat(f, np.kron(self.a, other.a) % f.p)
        out = np.zeros((self.rows * other.rows, self.cols * other.cols), dtype=np.int64)
        for i in range(self.rows):
            for j in range(self.cols):
                x = int(self.a[i, j])
                for u in range(other.rows):
                    for v in range(other.cols):
                        out[i * other.rows + u, j * other.cols + v] = f.mul(
                            x, int(other.a[u, v])
                        )
        return Mat(f, out)

    def pow(self, e: int) -> "Mat":
        assert self.rows == self.cols
        if e < 0:
            return self.inverse().pow(-e)
        out = Mat.identity(self.field, self.rows)
        base = self
        while e:
            if e & 1:
                out = out @ base
            base = base @ base
            e >>= 1
        return out

    # -- elimination-based -------------------------------------------------

    def rref(self, force_generic: bool = False):
        out, piv = rref_array(self.a, self.field, force_generic=force_generic)
        return Mat(self.field, out), piv

    def rank(self) -> int:
        return len(self.rref()[1])

    def inverse(self) -> "Mat":
        if self.rows != self.cols:
            raise ValueError("only square matrices invert")
        n = self.rows
        aug = np.hstack([self.a, np.eye(n, dtype=np.int64)])
        out, piv = rref_array(aug, self.field)
        if tuple(piv) != tuple(range(n)):
            raise ValueError("matrix is singular")
        return Mat(self.field, out[:, n:])

    def det(self) -> int:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        f = self.field
        m = [[int(x) for x in row] for row in self.a]
        n = self.rows
        det = 1
        for c in range(n):
            pr = next((i for i in range(c, n) if m[i][c] != 0), None)
            if pr is None:
                return 0
            if pr != c:
                m[c], m[pr] = m[pr], m[c]
                det = f.neg(det)
            det = f.mul(det, m[c][c])
            inv = f.inv(m[c][c])
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    coef = f.mul(m[i][c], inv)
                    m[i] = [f.sub(x, f.mul(coef, y)) for x, y in zip(m[i], m[c])]
        return det

    # -- protocol ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __hash__(self):
        return hash((self.field, self.shape, self.a.tobytes()))

    def key(self) -> bytes:
        """Dedup key for closure sets."""
        return self.a.tobytes()

    def __repr__(self):
        return f"Mat({self.field}, {self.rows}x{self.cols})"

    def tolist(self):
        return [[int(x) for x in row] for row in self.a]


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """Row space in canonical RREF form; equality is byte equality."""

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field: GF, ambient: int, basis: np.ndarray, pivots):
        self.field = field
        self.ambient = ambient
        basis = np.ascontiguousarray(np.asarray(basis, dtype=np.int64))
        basis.flags.writeable = False
        self.basis = basis
        self.pivots = tuple(pivots)
        assert basis.shape == (len(self.pivots), ambient)

    @classmethod
    def from_rows(cls, field: GF, rows, ambient: int | None = None) -> "Subspace":
        arr = np.asarray(rows, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.size == 0 and ambient is not None:
            arr = arr.reshape(0, ambient)
        amb = arr.shape[1] if ambient is None else ambient
        assert arr.shape[1] == amb
        red, piv = rref_array(arr, field)
        return cls(field, amb, red[: len(piv)], piv)

    @classmethod
    def zero(cls, field: GF, ambient: int) -> "Subspace":
        return cls(field, ambient, np.zeros((0, ambient), dtype=np.int64), ())

    @classmethod
    def full(cls, field: GF, ambient: int) -> "Subspace":
        return cls(field, ambient, np.eye(ambient, dtype=np.int64), tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, v: np.ndarray) -> np.ndarray:
        """Residue of v after clearing its pivot coordinates (v mod this space)."""
        f = self.field
        v = np.asarray(v, dtype=np.int64)
        assert v.shape == (self.ambient,)
        if f.r == 1:
            v = v % f.p
            for i, c in enumerate(self.pivots):
                coef = int(v[c])
                if coef:
                    v = (v - coef * self.basis[i]) % f.p
            return v
        v = v.copy()
        for i, c in enumerate(self.pivots):
            coef = int(v[c])
            if coef:
                row = self.basis[i]
                for j in range(self.ambient):
                    v[j] = f.sub(int(v[j]), f.mul(coef, int(row[j])))
        return v

    def contains(self, v) -> bool:
        return not np.any(self.reduce(np.asarray(v, dtype=np.int64)))

    def contains_space(self, other: "Subspace") -> bool:
        assert other.ambient == self.ambient
        return all(self.contains(row) for row in other.basis)

    def coefficients(self, v) -> np.ndarray:
        """Coordinates of v in the canonical basis; raises if v is outside."""
        f = self.field
        v = np.asarray(v, dtype=np.int64)
        coefs = np.array([v[c] for c in self.pivots], dtype=np.int64)
        recon = mm_modp(coefs.reshape(1, -1), self.basis, f.p)[0] if f.r == 1 else None
        if recon is None:
            rem = v.copy()
            out = []
            for i, c in enumerate(self.pivots):
                coef = int(rem[c])
                out.append(coef)
                if coef:
                    for j in range(self.ambient):
                        rem[j] = f.sub(int(rem[j]), f.mul(coef, int(self.basis[i][j])))
            if np.any(rem):
                raise ValueError("vector not in subspace")
            return np.array(out, dtype=np.int64)
        if not np.array_equal(recon, v % f.p):
            raise ValueError("vector not in subspace")
        return coefs

    def complement_cols(self):
        """Non-pivot columns in increasing order: coordinates of the quotient."""
        pv = set(self.pivots)
        return tuple(c for c in range(self.ambient) if c not in pv)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.pivots == other.pivots
            and bool(np.array_equal(self.basis, other.basis))
        )

    def __hash__(self):
        return hash((self.field, self.ambient, self.pivots, self.basis.tobytes()))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.field}^{self.ambient})"


# ---------------------------------------------------------------------------
# the operations


def rref(m: Mat, force_generic: bool = False):
    """(canonical RREF, rank, pivot columns)."""
    red, piv = m.rref(force_generic=force_generic)
    return red, len(piv), piv


def kernel(m: Mat, force_generic: bool = False) -> Subspace:
    """Right null space {v : Mv = 0} as a canonical subspace."""
    red, piv = m.rref(force_generic=force_generic)
    f = m.field
    cols = m.cols
    pivset = set(piv)
    free = [c for c in range(cols) if c not in pivset]
    if not free:
        return Subspace.zero(f, cols)
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(piv):
            coef = int(red.a[i, fc])
            if coef:
                basis[k, pc] = f.neg(coef) if f.r > 1 else (-coef) % f.p
    return Subspace.from_rows(f, basis)


def solve(m: Mat, b) -> np.ndarray | None:
    """One solution of Mx = b with free coordinates zeroed, or None."""
    f = m.field
    bvec = np.asarray(b, dtype=np.int64).reshape(-1)
    if bvec.shape[0] != m.rows:
        raise ValueError("right-hand side length mismatch")
    aug = np.hstack([m.a, bvec.reshape(-1, 1)])
    red, piv = rref_array(aug, f)
    if piv and piv[-1] == m.cols:
        return None
    x = np.zeros(m.cols, dtype=np.int64)
    for i, pc in enumerate(piv):
        x[pc] = red[i, m.cols]
    return x


def joint_fixed_space(mats: list[Mat]) -> Subspace:
    """Common fixed space of a list of square matrices over one field."""
    if not mats:
        raise ValueError("need at least one matrix")
    f = mats[0].field
    n = mats[0].rows
    for g in mats:
        if g.field != f or g.shape != (n, n):
            raise ValueError("matrices must be square, same size, same field")
    stacked = np.vstack([(g - Mat.identity(f, n)).a for g in mats])
    return kernel(Mat(f, stacked))


def quotient_action(mats: list[Mat], s: Subspace) -> list[Mat]:
    """Induced action on V/S in the complement-coordinate basis.

    Every matrix must map S into itself (checked); the quotient basis is
    the set of non-pivot columns of S in increasing order.  Since the basis
    is in RREF, reduction mod S of a batch of columns X is the single
    expression X - Bᵀ·X[pivots], which keeps large modules fast.
    """
    if not mats:
        return []
    f = mats[0].field
    n = mats[0].rows
    assert s.field == f and s.ambient == n
    comp = list(s.complement_cols())
    out = []
    if f.r == 1 and s.dim > 0:
        bt = s.basis.T
        piv = list(s.pivots)
        for g in mats:
            imgs = mm_modp(g.a, bt, f.p)
            if ((imgs - mm_modp(bt, imgs[piv, :], f.p)) % f.p).any():
                raise ValueError("subspace is not invariant under the given action")
            xc = g.a[:, comp]
            res = (xc - mm_modp(bt, xc[piv, :], f.p)) % f.p
            out.append(Mat(f, res[comp, :]))
        return out
    for g in mats:
        for row in s.basis:
            img = mm_modp(g.a, row.reshape(-1, 1), f.p)[:, 0] if f.r == 1 else _mv_ext(g, row)
            if not s.contains(img):
                raise ValueError("subspace is not invariant under the given action")
        q = np.zeros((len(comp), len(comp)), dtype=np.int64)
        for j, c in enumerate(comp):
            img = g.a[:, c].copy()
            res = s.reduce(img)
            q[:, j] = [res[cc] for cc in comp]
        out.append(Mat(f, q))
    return out


def _mv_ext(g: Mat, v: np.ndarray) -> np.ndarray:
    f = g.field
    out = np.zeros(g.rows, dtype=np.int64)
    for i in range(g.rows):
        acc = 0
        for j in range(g.cols):
            acc = f.add(acc, f.mul(int(g.a[i, j]), int(v[j])))
        out[i] = acc
    return out


def radical_of_form(gram: Mat) -> Subspace:
    """Radical {v : B(v, w) = 0 for all w} of a bilinear form's Gram matrix."""
    if gram.rows != gram.cols:
        raise ValueError("Gram matrix must be square")
    return kernel(gram)


def random_matrix(field: GF, rows: int, cols: int, rng) -> Mat:
    return Mat(field, [[rng.randrange(field.q) for _ in range(cols)] for _ in range(rows)])


# convenience: GF(2) field singleton used throughout the package
GF2 = make_field(2)
