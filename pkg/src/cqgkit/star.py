"""Star structures, the *-Hopf axioms, the Gram form phi(y* x), the CQG
positivity test, and invariance of Hermitian forms on modules and comodules.

A Hermitian form on C^m is stored as B[i, j] = <e_i, e_j>, linear in the first
slot and conjugate-linear in the second.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import (DimensionMismatch, InputError, NotCosemisimple, NotHermitian,
                     SingularGramForm, UnitarizationFailed)
from .hopf import (FiniteHopfAlgebra, IntegralData, _maxabs, compute_integral)
from .numeric import DEFAULT_TOL, einsum, hermitian_min_eigenvalue, hermiticity_residual
from .report import VerificationReport


def _require_star(H: FiniteHopfAlgebra):
    if H.star is None:
        raise InputError(f"{H.name or 'Hopf algebra'} has no star structure")
    return H.star.matrix


def star_hopf_residuals(H: FiniteHopfAlgebra) -> dict:
    C = _require_star(H)
    m, D, u, e, S = H.mult, H.comult, H.unit, H.counit, H.antipode
    I = np.eye(H.dim)
    res = {}
    res["star-involution"] = _maxabs(C @ np.conj(C) - I)
    # (e_i e_j)* = e_j* e_i*
    res["star-antimultiplicative"] = _maxabs(
        einsum("ok,ijk->ijo", C, np.conj(m)) - einsum("pj,qi,pqo->ijo", C, C, m))
    # Delta(e_k*) = (* (x) *) Delta(e_k)
    res["star-comultiplicative"] = _maxabs(
        einsum("pk,pab->kab", C, D) - einsum("kcd,ac,bd->kab", np.conj(D), C, C))
    res["star-unit"] = _maxabs(C @ np.conj(u) - u)
    res["star-counit"] = _maxabs(e @ C - np.conj(e))
    # x -> S(x*) is conjugate-linear with matrix S C
    SC = S @ C
    res["(S∘*)²=id"] = _maxabs(SC @ np.conj(SC) - I)
    res["S∘*=*∘S"] = _maxabs(SC - C @ np.conj(S))
    return res


def verify_star_hopf(H: FiniteHopfAlgebra, tol: float = DEFAULT_TOL) -> VerificationReport:
    rep = VerificationReport(artifact=H.name or None, tolerance=tol)
    for k, v in star_hopf_residuals(H).items():
        rep.add(k, v)
    return rep


@dataclass
class GramForm:
    matrix: np.ndarray
    hermiticity_residual: float
    min_eigenvalue: float


def gram_matrix(H: FiniteHopfAlgebra, phi) -> np.ndarray:
    """G[i, j] = phi(e_j* e_i)."""
    C = _require_star(H)
    return einsum("pj,pik,k->ij", C, H.mult, np.asarray(phi, complex))


def gram_form(H: FiniteHopfAlgebra, I: IntegralData, tol: float = DEFAULT_TOL) -> GramForm:
    G = gram_matrix(H, I.phi)
    herm = hermiticity_residual(G)
    if herm > tol:
        raise NotHermitian(f"Gram form is not Hermitian (residual {herm:.3g})")
    return GramForm(G, herm, hermitian_min_eigenvalue(G, tol))


@dataclass
class CQGVerdict:
    cqg: bool
    min_eigenvalue: float
    report: VerificationReport = field(default_factory=VerificationReport)
    integral: Optional[IntegralData] = None

    def __bool__(self):
        return self.cqg


def is_cqg(H: FiniteHopfAlgebra, tol: float = DEFAULT_TOL) -> CQGVerdict:
    """Cosemisimple, *-Hopf, and phi(x* x) > 0 on the whole algebra."""
    rep = VerificationReport(artifact=H.name or None, tolerance=tol)
    if H.star is None:
        rep.add_bool("star-present", False, "no star structure")
        return CQGVerdict(False, float("nan"), rep)
    try:
        I = compute_integral(H)
    except (NotCosemisimple, SingularGramForm) as exc:
        rep.add_bool("normal-integral", False, f"{type(exc).__name__}: {exc}")
        return CQGVerdict(False, float("nan"), rep)
    rep.add_bool("normal-integral", True)
    rep.extend(verify_star_hopf(H, tol))
    try:
        gf = gram_form(H, I, tol)
    except NotHermitian as exc:
        rep.add_bool("gram-hermitian", False, str(exc))
        return CQGVerdict(False, float("nan"), rep, I)
    rep.add("gram-hermitian", gf.hermiticity_residual)
    lam = gf.min_eigenvalue
    rep.add_bool("gram-positive", lam > tol, f"min eigenvalue {lam:.17g}", residual=lam)
    return CQGVerdict(rep.overall, lam, rep, I)


def check_gram_identities(H: FiniteHopfAlgebra, I: IntegralData,
                          tol: float = DEFAULT_TOL) -> VerificationReport:
    """<zx,y> = <x,z*y>; when phi is tracial also <xz,y> = <x,yz*> and
    <x*,y*> = <y,x>; invariance of the Gram form for the regular comodules."""
    rep = VerificationReport(artifact=H.name or None, tolerance=tol)
    C = _require_star(H)
    m, D, S, Si = H.mult, H.comult, H.antipode, H.antipode_inverse
    G = gram_matrix(H, I.phi)
    # <e_z e_x, e_y> = sum_k m[z,x,k] G[k,y];  <e_x, e_z* e_y> = sum conj(coeffs) G[x, .]
    lhs = einsum("zxk,ky->zxy", m, G)
    zs_y = einsum("pz,pyk->zyk", C, m)          # e_z* e_y
    rhs = einsum("zyk,xk->zxy", np.conj(zs_y), G)
    rep.add("gram-left-adjoint", _maxabs(lhs - rhs))
    A = I.gram(H)
    if _maxabs(A - A.T) <= tol:
        lhs = einsum("xzk,ky->zxy", m, G)
        y_zs = einsum("pz,ypk->zyk", C, m)      # e_y e_z*
        rhs = einsum("zyk,xk->zxy", np.conj(y_zs), G)
        rep.add("gram-right-adjoint", _maxabs(lhs - rhs))
        # <x*, y*> = sum conj(C[p,x]) C[q,y] G[p,q]
        rep.add("gram-star-swap", _maxabs(einsum("px,qy,pq->xy", C, np.conj(C), G) - G.T))
    else:
        rep.skip("gram-right-adjoint", "phi not tracial")
    regular_right = ComoduleData(H.dim, "right", H.comult)
    regular_left = ComoduleData(H.dim, "left", H.comult)
    rep.add("regular-right-invariance", check_comodule_invariance(regular_right, H, G, tol))
    rep.add("regular-left-invariance", check_comodule_invariance(regular_left, H, G, tol))
    return rep


def duality_scaling_residual(H: FiniteHopfAlgebra, I: IntegralData, Hd: FiniteHopfAlgebra,
                             Id: IntegralData) -> float:
    """max |<x-phi, y-phi>_t - <x, y>_phi / n| with x-phi = phi(. x) in the dual."""
    n = H.dim
    A = I.gram(H)                 # column j = coordinates of e_j -> phi
    Gd = gram_matrix(Hd, Id.phi)
    G = gram_matrix(H, I.phi)
    return _maxabs(A.T @ Gd @ np.conj(A) - G / n)


# ---------------------------------------------------------------- comodules and modules

@dataclass
class ComoduleData:
    """right: coaction[v, w, h] = coefficient of e_w (x) e_h in rho(e_v);
    left: coaction[v, h, w] = coefficient of e_h (x) e_w."""

    dim: int
    side: str
    coaction: np.ndarray

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise InputError("side must be 'left' or 'right'")
        self.coaction = np.asarray(self.coaction, complex)
        if self.coaction.ndim != 3 or self.coaction.shape[0] != self.dim:
            raise DimensionMismatch("coaction tensor has the wrong shape")

    @property
    def hdim(self) -> int:
        return self.coaction.shape[2] if self.side == "right" else self.coaction.shape[1]


@dataclass
class ModuleData:
    """action[x] is the matrix of u -> x.u (left) or u -> u.x (right)."""

    dim: int
    side: str
    action: np.ndarray

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise InputError("side must be 'left' or 'right'")
        self.action = np.asarray(self.action, complex)
        if self.action.ndim != 3 or self.action.shape[1:] != (self.dim, self.dim):
            raise DimensionMismatch("action tensor has the wrong shape")


def trivial_comodule(H, dim: int = 1, side: str = "right") -> ComoduleData:
    I = np.eye(dim)
    if side == "right":
        return ComoduleData(dim, side, einsum("vw,h->vwh", I, H.unit))
    return ComoduleData(dim, side, einsum("vw,h->vhw", I, H.unit))


def regular_comodule(H, side: str = "right") -> ComoduleData:
    return ComoduleData(H.dim, side, H.comult)


def regular_module(H, side: str = "left") -> ModuleData:
    if side == "left":
        return ModuleData(H.dim, side, einsum("xuk->xku", H.mult))
    return ModuleData(H.dim, side, einsum("uxk->xku", H.mult))


def tensor_comodule(V: ComoduleData, W: ComoduleData, H) -> ComoduleData:
    """Diagonal right coaction v (x) w -> v_0 (x) w_0 (x) v_1 w_1."""
    if V.side != "right" or W.side != "right":
        raise InputError("diagonal coaction implemented for right comodules")
    T = einsum("avh,bwl,hlk->abvwk", V.coaction, W.coaction, H.mult)
    return ComoduleData(V.dim * W.dim, "right",
                        T.reshape(V.dim * W.dim, V.dim * W.dim, H.dim))


def verify_comodule(V: ComoduleData, H, tol: float = DEFAULT_TOL) -> VerificationReport:
    rep = VerificationReport(artifact=f"{V.side} comodule", tolerance=tol)
    r, D, e = V.coaction, H.comult, H.counit
    if V.hdim != H.dim:
        raise DimensionMismatch("comodule is over an algebra of another dimension")
    if V.side == "right":
        rep.add("coaction-coassoc", _maxabs(einsum("vwh,wuk->vukh", r, r)
                                            - einsum("vuh,hkl->vukl", r, D)))
        rep.add("coaction-counit", _maxabs(einsum("vuh,h->vu", r, e) - np.eye(V.dim)))
    else:
        rep.add("coaction-coassoc", _maxabs(einsum("vhw,wku->vhku", r, r)
                                            - einsum("vlu,lhk->vhku", r, D)))
        rep.add("coaction-counit", _maxabs(einsum("vhu,h->vu", r, e) - np.eye(V.dim)))
    return rep


def verify_module(M: ModuleData, H, tol: float = DEFAULT_TOL) -> VerificationReport:
    rep = VerificationReport(artifact=f"{M.side} module", tolerance=tol)
    a, m = M.action, H.mult
    if a.shape[0] != H.dim:
        raise DimensionMismatch("module is over an algebra of another dimension")
    prod = einsum("xyk,kab->xyab", m, a)
    if M.side == "left":
        comp = einsum("xac,ycb->xyab", a, a)
    else:
        comp = einsum("yac,xcb->xyab", a, a)
    rep.add("action-assoc", _maxabs(prod - comp))
    rep.add("action-unit", _maxabs(einsum("k,kab->ab", H.unit, a) - np.eye(M.dim)))
    return rep


def _check_form(form, dim, tol):
    B = np.asarray(form, complex)
    if B.shape != (dim, dim):
        raise DimensionMismatch(f"form must be {dim}x{dim}")
    if hermiticity_residual(B) > tol:
        raise NotHermitian("form is not Hermitian")
    return B


def check_comodule_invariance(V: ComoduleData, H: FiniteHopfAlgebra, form,
                              tol: float = DEFAULT_TOL) -> float:
    """right: sum <u_0,v> S(u_1) = sum <u,v_0> v_1*;
    left:  sum S^-1(u_-1) <u_0,v> = sum v_-1* <u,v_0>."""
    C = _require_star(H)
    B = _check_form(form, V.dim, tol)
    if V.hdim != H.dim:
        raise DimensionMismatch("comodule is over an algebra of another dimension")
    r = V.coaction
    if V.side == "right":
        lhs = einsum("iwh,wj,oh->ijo", r, B, H.antipode)
        rhs = einsum("jwh,iw,oh->ijo", np.conj(r), B, C)
    else:
        lhs = einsum("ihw,wj,oh->ijo", r, B, H.antipode_inverse)
        rhs = einsum("jhw,iw,oh->ijo", np.conj(r), B, C)
    return _maxabs(lhs - rhs)


def check_star_representation(M: ModuleData, H: FiniteHopfAlgebra, form,
                              tol: float = DEFAULT_TOL) -> float:
    """<x.u, v> = <u, x*.v> (left) or <u.x, v> = <u, v.x*> (right)."""
    C = _require_star(H)
    B = _check_form(form, M.dim, tol)
    a = M.action
    if a.shape[0] != H.dim:
        raise DimensionMismatch("module is over an algebra of another dimension")
    # matrix of x* acting, for basis x: sum_p C[p, x] a[p]
    astar = einsum("px,pab->xab", C, a)
    lhs = einsum("xki,kj->xij", a, B)
    rhs = einsum("ik,xkj->xij", B, np.conj(astar))
    return _maxabs(lhs - rhs)


def comodule_to_dual_module(V: ComoduleData, H: FiniteHopfAlgebra) -> ModuleData:
    """Left H-comodule -> left module over the dual: alpha.v = sum alpha(S^-1(v_-1)) v_0."""
    if V.side != "left":
        raise InputError("the conversion takes a left comodule")
    act = einsum("vhw,ah->awv", V.coaction, H.antipode_inverse)
    return ModuleData(V.dim, "left", act)


def dual_module_to_comodule(M: ModuleData, H: FiniteHopfAlgebra) -> ComoduleData:
    """Inverse of comodule_to_dual_module."""
    if M.side != "left":
        raise InputError("the conversion takes a left module")
    co = einsum("awv,ha->vhw", M.action, H.antipode)
    return ComoduleData(M.dim, "left", co)


def unitarize_comodule(V: ComoduleData, H: FiniteHopfAlgebra, I: IntegralData,
                       tol: float = DEFAULT_TOL) -> np.ndarray:
    """Average the standard form against the Haar functional and verify the result.

    right: B(u, v) = sum <u_0, v_0>_0 phi(v_1* u_1)
    left:  B(u, v) = sum <u_0, v_0>_0 phi(v_-1* u_-1)
    """
    G = gram_matrix(H, I.phi)      # G[h, k] = phi(e_k* e_h)
    r = V.coaction
    if V.side == "right":
        B = einsum("iwh,jwk,hk->ij", r, np.conj(r), G)
    else:
        B = einsum("ihw,jkw,hk->ij", r, np.conj(r), G)
    B = (B + B.conj().T) / 2
    res = check_comodule_invariance(V, H, B, tol)
    if res > tol:
        raise UnitarizationFailed(f"averaged form is not invariant (residual {res:.3g})")
    lam = hermitian_min_eigenvalue(B, tol)
    if lam <= tol:
        raise UnitarizationFailed(f"averaged form is not positive (min eigenvalue {lam:.3g})")
    return B


# ---------------------------------------------------------------- Yetter-Drinfeld data

@dataclass
class YDInvariance:
    action_residual: float
    coaction_residual: float
    double_residual: float


def double_module_from_yd(Hmod: ModuleData, V: ComoduleData, H: FiniteHopfAlgebra) -> ModuleData:
    """(alpha x).v = alpha.(x.v) on the double's basis f^a e_x (index a*n + x)."""
    dual_mod = comodule_to_dual_module(V, H)
    act = einsum("auw,xwv->axuv", dual_mod.action, Hmod.action)
    n = H.dim
    return ModuleData(V.dim, "left", act.reshape(n * n, V.dim, V.dim))


def check_yd_invariance(Hmod: ModuleData, V: ComoduleData, H: FiniteHopfAlgebra,
                        DH: FiniteHopfAlgebra, form, tol: float = DEFAULT_TOL) -> YDInvariance:
    """Residuals of H-action, H-coaction and D(H)-action invariance of one form."""
    return YDInvariance(
        check_star_representation(Hmod, H, form, tol),
        check_comodule_invariance(V, H, form, tol),
        check_star_representation(double_module_from_yd(Hmod, V, H), DH, form, tol),
    )
