"""Finite bialgebras and Hopf algebras given by structure constants.

Conventions (used everywhere in the package):

* ``mult[i, j, k]`` is the coefficient of e_k in e_i e_j.
* ``comult[k, i, j]`` is the coefficient of e_i (x) e_j in Delta(e_k).
* linear maps are matrices acting on column vectors, ``F[:, j] = F(e_j)``.
* linear functionals are 1 x n matrices (maps into the one-dimensional
  ground field), so convolution of functionals is the same code path.
* in tensor products the left factor index is major: (a, h) -> a*dim(H) + h.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import List, Optional

import numpy as np
import scipy.sparse as sp

from .errors import (DimensionMismatch, NoSolution, NotAHopfAlgebra,
                     NotConvolutionInvertible, NotCosemisimple, SingularGramForm)
from .numeric import DEFAULT_TOL, PIVOT_TOL, SparseTensor, einsum, solve_linear
from .report import VerificationReport


def _maxabs(a) -> float:
    a = np.asarray(a)
    return float(np.abs(a).max()) if a.size else 0.0


@dataclass
class StarStructure:
    """Conjugate-linear involution x* = C conj(x); column j of C is e_j*."""

    matrix: np.ndarray

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=complex)

    def apply(self, x):
        return self.matrix @ np.conj(np.asarray(x, dtype=complex))

    def conjugate_map(self, F):
        """Matrix of the linear map x -> F(x*)* ."""
        C = self.matrix
        return C @ np.conj(F) @ np.conj(C)

    def on_legs(self, T, axes):
        """Apply * to the listed axes of a tensor whose coefficients are conjugated."""
        T = np.conj(np.asarray(T, dtype=complex))
        for ax in axes:
            T = np.moveaxis(np.tensordot(self.matrix, T, axes=([1], [ax])), 0, ax)
        return T


@dataclass
class FiniteBialgebra:
    mult: np.ndarray
    unit: np.ndarray
    comult: np.ndarray
    counit: np.ndarray
    basis_labels: Optional[List[str]] = None
    name: str = ""

    def __post_init__(self):
        if isinstance(self.mult, SparseTensor):
            self.mult = self.mult.to_dense()
        if isinstance(self.comult, SparseTensor):
            self.comult = self.comult.to_dense()
        self.mult = np.asarray(self.mult, dtype=complex)
        self.comult = np.asarray(self.comult, dtype=complex)
        self.unit = np.asarray(self.unit, dtype=complex).reshape(-1)
        self.counit = np.asarray(self.counit, dtype=complex).reshape(-1)
        n = self.mult.shape[0]
        for arr, shape in ((self.mult, (n, n, n)), (self.comult, (n, n, n)),
                           (self.unit, (n,)), (self.counit, (n,))):
            if arr.shape != shape:
                raise DimensionMismatch(f"expected shape {shape}, got {arr.shape}")
        if self.basis_labels is None:
            self.basis_labels = [f"e{i}" for i in range(n)]
        if len(self.basis_labels) != n:
            raise DimensionMismatch("wrong number of basis labels")

    @property
    def dim(self) -> int:
        return self.mult.shape[0]

    @property
    def mult_sparse(self) -> SparseTensor:
        return SparseTensor.from_dense(self.mult)

    @property
    def comult_sparse(self) -> SparseTensor:
        return SparseTensor.from_dense(self.comult)

    def mul(self, x, y):
        return einsum("i,j,ijk->k", np.asarray(x, complex), np.asarray(y, complex), self.mult)

    def delta(self, x):
        return einsum("k,kij->ij", np.asarray(x, complex), self.comult)

    def eps(self, x) -> complex:
        return complex(self.counit @ np.asarray(x, complex))

    def basis(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=complex)
        v[i] = 1
        return v

    def left_mult(self, x) -> np.ndarray:
        """Matrix of y -> x y."""
        return einsum("i,ijk->kj", np.asarray(x, complex), self.mult)

    def identity(self) -> np.ndarray:
        return np.eye(self.dim, dtype=complex)

    def unit_counit(self) -> np.ndarray:
        """The convolution unit u o eps."""
        return np.outer(self.unit, self.counit)

    def index(self, label: str) -> int:
        return self.basis_labels.index(label)


@dataclass
class FiniteHopfAlgebra(FiniteBialgebra):
    antipode: Optional[np.ndarray] = None
    antipode_inverse: Optional[np.ndarray] = None
    star: Optional[StarStructure] = None

    def __post_init__(self):
        super().__post_init__()
        if self.antipode is None:
            raise DimensionMismatch("a Hopf algebra needs an antipode; use solve_antipode")
        self.antipode = np.asarray(self.antipode, dtype=complex)
        if self.antipode_inverse is None:
            self.antipode_inverse = np.linalg.inv(self.antipode)
        self.antipode_inverse = np.asarray(self.antipode_inverse, dtype=complex)
        if self.star is not None and not isinstance(self.star, StarStructure):
            self.star = StarStructure(self.star)

    @property
    def bialgebra(self) -> FiniteBialgebra:
        return FiniteBialgebra(self.mult, self.unit, self.comult, self.counit,
                               list(self.basis_labels), self.name)

    def S(self, x):
        return self.antipode @ np.asarray(x, complex)

    def apply_star(self, x):
        if self.star is None:
            raise ValueError("no star structure attached")
        return self.star.apply(x)

    def with_star(self, star) -> "FiniteHopfAlgebra":
        if star is not None and not isinstance(star, StarStructure):
            star = StarStructure(star)
        return replace(self, star=star)

    def without_star(self) -> "FiniteHopfAlgebra":
        return replace(self, star=None)


def hopf_from_bialgebra(B: FiniteBialgebra, antipode, star=None, name=None) -> FiniteHopfAlgebra:
    return FiniteHopfAlgebra(B.mult, B.unit, B.comult, B.counit, list(B.basis_labels),
                             B.name if name is None else name, antipode=antipode, star=star)


def ground_field() -> FiniteHopfAlgebra:
    one = np.ones((1, 1, 1))
    return FiniteHopfAlgebra(one, [1], one, [1], ["1"], "C", antipode=np.eye(1),
                             star=StarStructure(np.eye(1)))


# ---------------------------------------------------------------- axioms

def bialgebra_residuals(B: FiniteBialgebra) -> dict:
    m, D, u, e = B.mult, B.comult, B.unit, B.counit
    n = B.dim
    I = np.eye(n)
    res = {}
    res["assoc"] = _maxabs(einsum("ijp,pkq->ijkq", m, m) - einsum("jkp,ipq->ijkq", m, m))
    res["unit-left"] = _maxabs(einsum("i,ijk->jk", u, m) - I)
    res["unit-right"] = _maxabs(einsum("j,ijk->ik", u, m) - I)
    res["coassoc"] = _maxabs(einsum("kpc,pab->kabc", D, D) - einsum("kap,pbc->kabc", D, D))
    res["counit-left"] = _maxabs(einsum("a,kab->kb", e, D) - I)
    res["counit-right"] = _maxabs(einsum("b,kab->ka", e, D) - I)
    res["Δ-multiplicative"] = _maxabs(
        einsum("ijk,kab->ijab", m, D) - einsum("ipq,jrs,pra,qsb->ijab", D, D, m, m))
    res["Δ-unital"] = _maxabs(einsum("k,kab->ab", u, D) - np.outer(u, u))
    res["ε-multiplicative"] = _maxabs(einsum("ijk,k->ij", m, e) - np.outer(e, e))
    res["ε-unital"] = abs(e @ u - 1)
    return res


def verify_bialgebra(B: FiniteBialgebra, tol: float = DEFAULT_TOL) -> VerificationReport:
    rep = VerificationReport(artifact=B.name or None, tolerance=tol)
    for k, v in bialgebra_residuals(B).items():
        rep.add(k, v)
    return rep


def verify_hopf(H: FiniteHopfAlgebra, tol: float = DEFAULT_TOL) -> VerificationReport:
    rep = verify_bialgebra(H, tol)
    m, D, S, Si = H.mult, H.comult, H.antipode, H.antipode_inverse
    ue = H.unit_counit()
    I = H.identity()
    rep.add("antipode-left", _maxabs(convolution(S, I, H, H) - ue))
    rep.add("antipode-right", _maxabs(convolution(I, S, H, H) - ue))
    # S(xy) = S(y) S(x)
    rep.add("S-antimultiplicative", _maxabs(
        einsum("ijk,ok->ijo", m, S) - einsum("pj,qi,pqo->ijo", S, S, m)))
    # Delta(S x) = S(x_2) (x) S(x_1)
    rep.add("S-anticomultiplicative", _maxabs(
        einsum("pk,pab->kab", S, D) - einsum("kcd,ad,bc->kab", D, S, S)))
    rep.add("S-inverse", max(_maxabs(Si @ S - I), _maxabs(S @ Si - I)))
    return rep


# ---------------------------------------------------------------- convolution

def convolution(f, g, coalg: FiniteBialgebra, alg: FiniteBialgebra) -> np.ndarray:
    """f * g = m o (f (x) g) o Delta for maps coalg -> alg (matrices)."""
    f = np.asarray(f, dtype=complex)
    g = np.asarray(g, dtype=complex)
    shape = (alg.dim, coalg.dim)
    if f.shape != shape or g.shape != shape:
        raise DimensionMismatch(f"maps must have shape {shape}, got {f.shape} and {g.shape}")
    return einsum("kab,pa,qb,pqo->ok", coalg.comult, f, g, alg.mult)


def convolve_functionals(f, g, H: FiniteBialgebra) -> np.ndarray:
    """Convolution of covectors: (f*g)(x) = sum f(x_1) g(x_2)."""
    return einsum("kab,a,b->k", H.comult, np.asarray(f, complex), np.asarray(g, complex))


def convolution_inverse(f, coalg: FiniteBialgebra, alg: FiniteBialgebra,
                        tol: float = DEFAULT_TOL) -> np.ndarray:
    """Solve f * g = u o eps for g, then confirm g * f = u o eps."""
    f = np.asarray(f, dtype=complex)
    p, n = alg.dim, coalg.dim
    if f.shape != (p, n):
        raise DimensionMismatch(f"map must have shape {(p, n)}, got {f.shape}")
    # (f*g)[o, k] = sum_{q,b} T[(o,k),(q,b)] g[q, b]
    X = einsum("kab,pa->kbp", coalg.comult, f)
    T = einsum("kbp,pqo->okqb", X, alg.mult).reshape(p * n, p * n)
    target = np.outer(alg.unit, coalg.counit).reshape(-1)
    if p * n > 400:
        T = sp.csr_matrix(T)
    try:
        sol = solve_linear(T, target)
    except NoSolution as exc:
        raise NotConvolutionInvertible(str(exc)) from exc
    if not sol.unique:
        raise NotConvolutionInvertible(
            f"f * g = u eps has a {sol.nullspace.shape[1]}-dimensional family of solutions")
    g = sol.particular.reshape(p, n)
    res = _maxabs(convolution(g, f, coalg, alg) - np.outer(alg.unit, coalg.counit))
    if res > tol:
        raise NotConvolutionInvertible(f"right inverse is not a left inverse (residual {res:.3g})")
    return g


def solve_antipode(B: FiniteBialgebra, star=None, tol: float = DEFAULT_TOL) -> FiniteHopfAlgebra:
    """Antipode as the convolution inverse of the identity."""
    try:
        S = convolution_inverse(B.identity(), B, B, tol)
    except NotConvolutionInvertible as exc:
        raise NotAHopfAlgebra(f"identity is not convolution invertible: {exc}") from exc
    try:
        Si = np.linalg.inv(S)
    except np.linalg.LinAlgError as exc:
        raise NotAHopfAlgebra("antipode is singular") from exc
    if star is None:
        star = getattr(B, "star", None)
    H = hopf_from_bialgebra(B, S, star)
    H.antipode_inverse = Si
    return H


# ---------------------------------------------------------------- integrals

@dataclass
class IntegralData:
    phi: np.ndarray
    t: Optional[np.ndarray]
    nakayama: np.ndarray
    modular: np.ndarray
    integral_space_dim: int = 1
    notes: List[str] = field(default_factory=list)

    def gram(self, H: FiniteBialgebra) -> np.ndarray:
        """A[i, j] = phi(e_i e_j)."""
        return einsum("ijk,k->ij", H.mult, self.phi)


def _integral_system(H: FiniteBialgebra):
    D, u = H.comult, H.unit
    n = H.dim
    I = np.eye(n)
    # (id (x) phi) Delta(e_k) - phi(e_k) 1 = 0, indexed by (k, a)
    left = einsum("kab->kab", D) - einsum("kb,a->kab", I, u)
    right = einsum("kab->kba", D) - einsum("ka,b->kba", I, u)
    return np.concatenate([left.reshape(n * n, n), right.reshape(n * n, n)])


def integral_space_dimension(H: FiniteBialgebra) -> int:
    """Dimension of the space of two-sided integrals on H."""
    A = _integral_system(H)
    sol = solve_linear(A, np.zeros(A.shape[0]))
    return sol.nullspace.shape[1]


def compute_integral(H: FiniteHopfAlgebra) -> IntegralData:
    n = H.dim
    A = _integral_system(H)
    Anorm = np.vstack([A, H.unit[None, :]])
    rhs = np.zeros(Anorm.shape[0], dtype=complex)
    rhs[-1] = 1
    try:
        sol = solve_linear(Anorm, rhs)
    except NoSolution as exc:
        raise NotCosemisimple("no two-sided integral with phi(1) = 1") from exc
    space_dim = integral_space_dimension(H)
    if not sol.unique:
        raise NotCosemisimple(f"integral space has dimension {space_dim}, expected 1")
    phi = sol.particular

    # integral element: t x = x t = eps(x) t, eps(t) = 1
    m, e = H.mult, H.counit
    I = np.eye(n)
    tl = einsum("ijk->jki", m) - einsum("j,ki->jki", e, I)
    tr = einsum("jik->jki", m) - einsum("j,ki->jki", e, I)
    Tsys = np.vstack([tl.reshape(n * n, n), tr.reshape(n * n, n), e[None, :]])
    trhs = np.zeros(Tsys.shape[0], dtype=complex)
    trhs[-1] = 1
    notes = []
    try:
        t = solve_linear(Tsys, trhs).particular
    except NoSolution:
        t = None
        notes.append("no normalised integral element (H is not semisimple)")

    G = einsum("ijk,k->ij", m, phi)
    try:
        gs = solve_linear(G, G.T)
    except NoSolution as exc:
        raise SingularGramForm("phi(e_i e_j) is not invertible") from exc
    if not gs.unique:
        raise SingularGramForm("phi(e_i e_j) is not invertible")
    N = gs.particular
    alpha = e @ N
    return IntegralData(phi, t, N, alpha, space_dim, notes)


def check_integral(H: FiniteHopfAlgebra, I: IntegralData,
                   tol: float = DEFAULT_TOL) -> VerificationReport:
    """Defining identities of phi, t and the Nakayama automorphism."""
    rep = VerificationReport(artifact=H.name or None, tolerance=tol)
    D, m, u, e = H.comult, H.mult, H.unit, H.counit
    phi = I.phi
    rep.add("phi-left-invariant", _maxabs(einsum("kab,b->ka", D, phi) - np.outer(phi, u)))
    rep.add("phi-right-invariant", _maxabs(einsum("kab,a->kb", D, phi) - np.outer(phi, u)))
    rep.add("phi-normalised", abs(phi @ u - 1))
    rep.add_bool("integral-space-1dim", I.integral_space_dim == 1,
                 f"dimension {I.integral_space_dim}")
    if I.t is not None:
        t = I.t
        rep.add("t-normalised", abs(e @ t - 1))
        rep.add("t-left", _maxabs(einsum("i,ijk->jk", t, m) - np.outer(e, t)))
        rep.add("t-right", _maxabs(einsum("j,ijk->ik", t, m) - np.outer(e, t)))
    else:
        rep.skip("t-normalised", "no integral element")
    N = I.nakayama
    A = I.gram(H)
    # phi(x y) = phi(y N(x))
    rep.add("nakayama", _maxabs(A - einsum("jl,li->ij", A, N)))
    rep.add("nakayama-multiplicative", _maxabs(
        einsum("ijk,ok->ijo", m, N) - einsum("pi,qj,pqo->ijo", N, N, m)))
    rep.add("modular-from-nakayama", _maxabs(I.modular - e @ N))
    # N^{-1}(x) = sum S^{-2}(x_1) (alpha S)(x_2)
    Si2 = H.antipode_inverse @ H.antipode_inverse
    alphaS = I.modular @ H.antipode
    Ninv = einsum("kab,oa,b->ok", D, Si2, alphaS)
    rep.add("inverse-nakayama", _maxabs(Ninv @ N - np.eye(H.dim)))
    return rep


def check_semisimple_identities(H: FiniteHopfAlgebra, I: IntegralData,
                                tol: float = DEFAULT_TOL) -> VerificationReport:
    rep = VerificationReport(artifact=H.name or None, tolerance=tol)
    if I.t is None:
        rep.skip("semisimple", "no integral element")
        return rep
    n = H.dim
    S, D, phi, t = H.antipode, H.comult, I.phi, I.t
    A = I.gram(H)
    T2 = einsum("k,kab->ab", t, D)
    # S(x) = n sum phi(t_1 x) t_2
    rep.add("antipode-from-integral", _maxabs(n * einsum("ab,ax->bx", T2, A) - S))
    rep.add("S(t)=t", _maxabs(S @ t - t))
    rep.add("phi∘S=phi", _maxabs(phi @ S - phi))
    rep.add("Δt-symmetric", _maxabs(T2 - T2.T))
    rep.add("phi-tracial", _maxabs(A - A.T))
    rank = n - solve_linear(A.T, np.zeros(n)).nullspace.shape[1]
    rep.add_bool("x⇀phi-surjective", rank == n, f"rank {rank} of {n}", residual=n - rank)
    rep.add("S-involutive", _maxabs(S @ S - np.eye(n)))
    return rep


def tensor_product(B1: FiniteBialgebra, B2: FiniteBialgebra, with_antipode: bool = True):
    """B1 (x) B2 with componentwise structure; index (a, h) -> a*dim(B2) + h."""
    n1, n2 = B1.dim, B2.dim
    n = n1 * n2
    mult = einsum("abc,hkl->ahbkcl", B1.mult, B2.mult).reshape(n, n, n)
    comult = einsum("acb,hlk->ahclbk", B1.comult, B2.comult).reshape(n, n, n)
    unit = np.kron(B1.unit, B2.unit)
    counit = np.kron(B1.counit, B2.counit)
    labels = [f"{p}⊗{q}" for p in B1.basis_labels for q in B2.basis_labels]
    name = f"{B1.name}⊗{B2.name}"
    if with_antipode and isinstance(B1, FiniteHopfAlgebra) and isinstance(B2, FiniteHopfAlgebra):
        star = None
        if B1.star is not None and B2.star is not None:
            star = StarStructure(np.kron(B1.star.matrix, B2.star.matrix))
        return FiniteHopfAlgebra(mult, unit, comult, counit, labels, name,
                                 antipode=np.kron(B1.antipode, B2.antipode),
                                 antipode_inverse=np.kron(B1.antipode_inverse, B2.antipode_inverse),
                                 star=star)
    return FiniteBialgebra(mult, unit, comult, counit, labels, name)
