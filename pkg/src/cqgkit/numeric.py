"""Numeric primitives: exact roots of unity, sparse tensors, linear solves and
a Jacobi eigenvalue routine for small Hermitian matrices."""
from __future__ import annotations

import cmath
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np
import opt_einsum

from .errors import DimensionMismatch, NoSolution, NotHermitian

PRUNE_TOL = 1e-14
PIVOT_TOL = 1e-10
DEFAULT_TOL = 1e-9


# ---------------------------------------------------------------- roots of unity

@dataclass(frozen=True)
class RootOfUnity:
    """exp(2 pi i * numerator/denominator), kept exact until asked for a float."""

    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator == 0:
            raise ValueError("denominator must be nonzero")
        q = Fraction(self.numerator, self.denominator) % 1
        object.__setattr__(self, "numerator", q.numerator)
        object.__setattr__(self, "denominator", q.denominator)

    @classmethod
    def parse(cls, text: str) -> "RootOfUnity":
        """Parse 'k/m' (or a bare integer k, meaning k/1)."""
        text = text.strip()
        if "/" in text:
            k, m = text.split("/", 1)
            return cls(int(k), int(m))
        return cls(int(text), 1)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def order(self) -> int:
        return self.denominator

    @property
    def value(self) -> complex:
        # hit the exact values on the axes so that e.g. (-1) has no imaginary noise
        q = self.fraction
        exact = {Fraction(0): 1 + 0j, Fraction(1, 2): -1 + 0j,
                 Fraction(1, 4): 1j, Fraction(3, 4): -1j}
        if q in exact:
            return exact[q]
        return cmath.exp(2j * math.pi * float(q))

    def __complex__(self):
        return self.value

    def __mul__(self, other):
        if isinstance(other, RootOfUnity):
            return RootOfUnity(*_frac_pair(self.fraction + other.fraction))
        return self.value * other

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, RootOfUnity):
            return self * other.inverse()
        return self.value / other

    def __rtruediv__(self, other):
        return other * self.inverse().value

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(*_frac_pair(self.fraction * k))

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(-self.numerator, self.denominator)

    def conjugate(self) -> "RootOfUnity":
        return self.inverse()

    def __repr__(self):
        return f"RootOfUnity({self.numerator}/{self.denominator})"


def _frac_pair(q: Fraction) -> Tuple[int, int]:
    return q.numerator, q.denominator


def as_complex(x) -> complex:
    """Accept a number, a RootOfUnity, a [re, im] pair or {"root": [k, m]}."""
    if isinstance(x, RootOfUnity):
        return x.value
    if isinstance(x, dict) and "root" in x:
        k, m = x["root"]
        return RootOfUnity(int(k), int(m)).value
    if isinstance(x, (list, tuple)) and len(x) == 2:
        return complex(float(x[0]), float(x[1]))
    return complex(x)


# ---------------------------------------------------------------- sparse tensors

@dataclass
class SparseTensor:
    """Coordinate-format tensor.  Entries with modulus <= PRUNE_TOL are dropped."""

    dims: Tuple[int, ...]
    entries: Dict[Tuple[int, ...], complex] = field(default_factory=dict)

    def __post_init__(self):
        self.dims = tuple(int(d) for d in self.dims)
        for key in self.entries:
            if len(key) != len(self.dims):
                raise DimensionMismatch(f"index {key} has wrong arity for dims {self.dims}")
            for i, d in zip(key, self.dims):
                if not 0 <= i < d:
                    raise DimensionMismatch(f"index {key} out of range for dims {self.dims}")
        self.prune()

    @property
    def arity(self) -> int:
        return len(self.dims)

    def prune(self, tol: float = PRUNE_TOL) -> "SparseTensor":
        self.entries = {k: complex(v) for k, v in self.entries.items() if abs(v) > tol}
        return self

    def __getitem__(self, key) -> complex:
        return self.entries.get(tuple(key), 0j)

    def __add__(self, other: "SparseTensor") -> "SparseTensor":
        if self.dims != other.dims:
            raise DimensionMismatch(f"{self.dims} vs {other.dims}")
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0j) + v
        return SparseTensor(self.dims, out)

    def scale(self, c) -> "SparseTensor":
        c = as_complex(c)
        return SparseTensor(self.dims, {k: c * v for k, v in self.entries.items()})

    @classmethod
    def from_dense(cls, arr) -> "SparseTensor":
        arr = np.asarray(arr)
        nz = np.argwhere(np.abs(arr) > PRUNE_TOL)
        return cls(arr.shape, {tuple(int(i) for i in ix): complex(arr[tuple(ix)]) for ix in nz})

    def to_dense(self) -> np.ndarray:
        out = np.zeros(self.dims, dtype=complex)
        for k, v in self.entries.items():
            out[k] = v
        return out


def contract(t1: SparseTensor, t2: SparseTensor,
             pairs: Sequence[Tuple[int, int]]) -> SparseTensor:
    """Sum over the paired axes (axis of t1, axis of t2).

    Free axes of t1 come first in the result, then free axes of t2, each in
    their original order.
    """
    a1 = [p[0] for p in pairs]
    a2 = [p[1] for p in pairs]
    if len(set(a1)) != len(a1) or len(set(a2)) != len(a2):
        raise DimensionMismatch("an axis is paired twice")
    for i, j in pairs:
        if not (0 <= i < t1.arity and 0 <= j < t2.arity):
            raise DimensionMismatch(f"axis pair {(i, j)} out of range")
        if t1.dims[i] != t2.dims[j]:
            raise DimensionMismatch(
                f"axis {i} of size {t1.dims[i]} paired with axis {j} of size {t2.dims[j]}")
    free1 = [i for i in range(t1.arity) if i not in a1]
    free2 = [j for j in range(t2.arity) if j not in a2]
    dims = tuple(t1.dims[i] for i in free1) + tuple(t2.dims[j] for j in free2)

    # bucket t2 by its contracted indices
    bucket = defaultdict(list)
    for k, v in t2.entries.items():
        bucket[tuple(k[j] for j in a2)].append((tuple(k[j] for j in free2), v))
    out: Dict[Tuple[int, ...], complex] = defaultdict(complex)
    for k, v in t1.entries.items():
        key = tuple(k[i] for i in a1)
        if key not in bucket:
            continue
        left = tuple(k[i] for i in free1)
        for right, w in bucket[key]:
            out[left + right] += v * w
    return SparseTensor(dims, dict(out))


def einsum(spec: str, *operands) -> np.ndarray:
    """np.einsum-style contraction routed through opt_einsum path search."""
    return opt_einsum.contract(spec, *operands, optimize="greedy")


# ---------------------------------------------------------------- linear systems

@dataclass
class LinearSolution:
    particular: np.ndarray
    nullspace: np.ndarray  # columns span the kernel; shape (n, k)

    @property
    def unique(self) -> bool:
        return self.nullspace.shape[1] == 0


def solve_linear(A, b, pivot_tol: float = PIVOT_TOL) -> LinearSolution:
    """Gaussian elimination with partial pivoting.

    Pivots smaller than pivot_tol times the largest entry of [A | b] are
    treated as zero.  Returns a particular solution together with a basis of
    the null space.  A may be a dense array or a scipy.sparse matrix; large
    sparse systems are eliminated row-by-row without densifying.
    Raises NoSolution when the system is inconsistent.
    """
    b = np.asarray(b, dtype=complex)
    vector_rhs = b.ndim == 1
    B = b.reshape(b.shape[0], -1).copy()
    if hasattr(A, "tocsr"):
        m, n = A.shape
        if m * n <= 250_000:
            A = A.toarray()
        else:
            x, null = _solve_sparse(A.tocsr(), B, pivot_tol)
            return _finish(A, b, x, null, vector_rhs)
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != B.shape[0]:
        raise DimensionMismatch(f"A has shape {A.shape}, b has shape {b.shape}")
    x, null = _solve_dense(A.copy(), B, pivot_tol)
    return _finish(A, b, x, null, vector_rhs)


def _finish(A, b, x, null, vector_rhs):
    res = A @ x - b.reshape(b.shape[0], -1)
    scale = max(1.0, float(np.abs(b).max()) if b.size else 1.0)
    if res.size and np.abs(res).max() > DEFAULT_TOL * scale:
        raise NoSolution(f"residual {np.abs(res).max():.3g} after elimination")
    if vector_rhs:
        x = x[:, 0]
    return LinearSolution(x, null)


def _scale_of(A, B) -> float:
    s = 0.0
    if A.size:
        s = float(np.abs(A).max())
    if B.size:
        s = max(s, float(np.abs(B).max()))
    return s if s > 0 else 1.0


def _solve_dense(M: np.ndarray, B: np.ndarray, pivot_tol: float):
    m, n = M.shape
    thresh = pivot_tol * _scale_of(M, B)
    pivots: List[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        p = row + int(np.argmax(np.abs(M[row:, col])))
        if abs(M[p, col]) <= thresh:
            continue
        if p != row:
            M[[row, p]] = M[[p, row]]
            B[[row, p]] = B[[p, row]]
        piv = M[row, col]
        M[row] /= piv
        B[row] /= piv
        f = M[:, col].copy()
        f[row] = 0
        M -= np.outer(f, M[row])
        B -= np.outer(f, B[row])
        pivots.append(col)
        row += 1
    if row < m and B[row:].size and np.abs(B[row:]).max() > thresh:
        raise NoSolution("inconsistent system")
    x = np.zeros((n, B.shape[1]), dtype=complex)
    for r, col in enumerate(pivots):
        x[col] = B[r]
    free = [c for c in range(n) if c not in set(pivots)]
    null = np.zeros((n, len(free)), dtype=complex)
    for k, fc in enumerate(free):
        null[fc, k] = 1.0
        for r, col in enumerate(pivots):
            null[col, k] = -M[r, fc]
    return x, null


def _solve_sparse(A, B: np.ndarray, pivot_tol: float):
    m, n = A.shape
    thresh = pivot_tol * _scale_of(A.data, B)
    rows: List[Dict[int, complex]] = []
    col_rows: Dict[int, set] = defaultdict(set)
    for r in range(m):
        lo, hi = A.indptr[r], A.indptr[r + 1]
        d = {int(c): complex(v) for c, v in zip(A.indices[lo:hi], A.data[lo:hi]) if v != 0}
        rows.append(d)
        for c in d:
            col_rows[c].add(r)
    active = set(range(m))
    pivot_row: Dict[int, int] = {}
    order: List[int] = []
    for col in range(n):
        cand = [r for r in col_rows[col] if r in active]
        if not cand:
            continue
        p = max(cand, key=lambda r: abs(rows[r][col]))
        if abs(rows[p][col]) <= thresh:
            continue
        active.discard(p)
        pivot_row[col] = p
        order.append(col)
        prow = rows[p]
        pv = prow[col]
        for r in cand:
            if r == p:
                continue
            target = rows[r]
            f = target[col] / pv
            for c, v in prow.items():
                nv = target.get(c, 0j) - f * v
                if abs(nv) <= PRUNE_TOL or c == col:
                    if c in target:
                        del target[c]
                        col_rows[c].discard(r)
                else:
                    if c not in target:
                        col_rows[c].add(r)
                    target[c] = nv
            B[r] -= f * B[p]
    for r in active:
        if np.abs(B[r]).max() > thresh:
            raise NoSolution("inconsistent system")
    free = [c for c in range(n) if c not in pivot_row]

    def back(vals: np.ndarray) -> np.ndarray:
        for col in reversed(order):
            p = pivot_row[col]
            acc = B_use[p].copy()
            for c, v in rows[p].items():
                if c != col:
                    acc -= v * vals[c]
            vals[col] = acc / rows[p][col]
        return vals

    B_use = B
    x = back(np.zeros((n, B.shape[1]), dtype=complex))
    null = np.zeros((n, len(free)), dtype=complex)
    B_use = np.zeros_like(B[:, :1])
    for k, fc in enumerate(free):
        v = np.zeros((n, 1), dtype=complex)
        v[fc] = 1.0
        null[:, k] = back(v)[:, 0]
    return x, null


# ---------------------------------------------------------------- Hermitian spectra

def hermiticity_residual(M) -> float:
    M = np.asarray(M, dtype=complex)
    if M.size == 0:
        return 0.0
    return float(np.abs(M - M.conj().T).max())


def jacobi_eigh(M, tol: float = DEFAULT_TOL, max_sweeps: int = 100):
    """Cyclic Jacobi diagonalisation of a Hermitian matrix.

    Returns (eigenvalues ascending, unitary V with M V = V diag(eigenvalues)).
    """
    A = np.array(M, dtype=complex)
    n = A.shape[0]
    if A.shape != (n, n):
        raise DimensionMismatch(f"expected a square matrix, got {A.shape}")
    res = hermiticity_residual(A)
    if res > tol:
        raise NotHermitian(f"max |M - M^H| = {res:.3g} exceeds {tol:.3g}")
    A = (A + A.conj().T) / 2
    V = np.eye(n, dtype=complex)
    norm = np.linalg.norm(A)
    for _ in range(max_sweeps):
        off = np.linalg.norm(A - np.diag(np.diag(A)))
        if off <= tol * max(norm, 1e-300):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                mag = abs(apq)
                if mag < 1e-300:
                    continue
                phase = apq / mag
                app, aqq = A[p, p].real, A[q, q].real
                theta = (aqq - app) / (2 * mag)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1))
                if theta < 0:
                    t = -t
                c = 1 / math.sqrt(t * t + 1)
                s = t * c
                # unitary acting on coordinates (p, q): phase fix then real rotation
                G = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
                idx = [p, q]
                A[:, idx] = A[:, idx] @ G
                A[idx, :] = G.conj().T @ A[idx, :]
                A[p, q] = A[q, p] = 0
                V[:, idx] = V[:, idx] @ G
    w = np.diag(A).real
    order = np.argsort(w)
    return w[order], V[:, order]


def hermitian_min_eigenvalue(M, tol: float = DEFAULT_TOL) -> float:
    """Smallest eigenvalue of a Hermitian matrix (cyclic Jacobi).

    Raises NotHermitian when max |M - M^H| > tol.
    """
    M = np.asarray(M, dtype=complex)
    if M.size == 0:
        return math.inf
    w, _ = jacobi_eigh(M, tol)
    return float(w[0])
