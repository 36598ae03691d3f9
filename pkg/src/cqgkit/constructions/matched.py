"""Matched pairs of Hopf algebras and the bicrossproduct A ⋈ H.

left[x, a, o]  : coefficient of e_o in x ▷ e_a  (H (x) A -> A)
right[x, a, z] : coefficient of e_z in x ◁ e_a  (H (x) A -> H)
Basis of A ⋈ H: a x at index a*dim(H) + x.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DimensionMismatch, StarCompatFailed
from ..hopf import (FiniteBialgebra, FiniteHopfAlgebra, StarStructure, _maxabs,
                    compute_integral, solve_antipode)
from ..numeric import DEFAULT_TOL, einsum
from ..report import VerificationReport


@dataclass
class MatchedPairHopfData:
    A: FiniteHopfAlgebra
    H: FiniteHopfAlgebra
    left: np.ndarray
    right: np.ndarray

    def __post_init__(self):
        self.left = np.asarray(self.left, complex)
        self.right = np.asarray(self.right, complex)
        nA, nH = self.A.dim, self.H.dim
        if self.left.shape != (nH, nA, nA):
            raise DimensionMismatch(f"left action must have shape {(nH, nA, nA)}")
        if self.right.shape != (nH, nA, nH):
            raise DimensionMismatch(f"right action must have shape {(nH, nA, nH)}")

    @classmethod
    def trivial(cls, A, H) -> "MatchedPairHopfData":
        left = einsum("x,ao->xao", H.counit, np.eye(A.dim))
        right = einsum("xz,a->xaz", np.eye(H.dim), A.counit)
        return cls(A, H, left, right)


def verify_matched_pair(P: MatchedPairHopfData, tol: float = DEFAULT_TOL) -> VerificationReport:
    A, H, L, R = P.A, P.H, P.left, P.right
    mA, DA, uA, eA = A.mult, A.comult, A.unit, A.counit
    mH, DH, uH, eH = H.mult, H.comult, H.unit, H.counit
    nA, nH = A.dim, H.dim
    rep = VerificationReport(artifact="matched pair", tolerance=tol)
    # (A, ▷) left H-module coalgebra
    rep.add("left-module", max(
        _maxabs(einsum("xyk,kao->xyao", mH, L) - einsum("yap,xpo->xyao", L, L)),
        _maxabs(einsum("x,xao->ao", uH, L) - np.eye(nA))))
    rep.add("left-module-coalgebra", max(
        _maxabs(einsum("xao,ocd->xacd", L, DA)
                - einsum("xpq,ars,prc,qsd->xacd", DH, DA, L, L)),
        _maxabs(einsum("xao,o->xa", L, eA) - np.outer(eH, eA))))
    # (H, ◁) right A-module coalgebra
    rep.add("right-module", max(
        _maxabs(einsum("abk,xkz->xabz", mA, R) - einsum("xaw,wbz->xabz", R, R)),
        _maxabs(einsum("a,xaz->xz", uA, R) - np.eye(nH))))
    rep.add("right-module-coalgebra", max(
        _maxabs(einsum("xaz,zcd->xacd", R, DH)
                - einsum("xpq,ars,prc,qsd->xacd", DH, DA, R, R)),
        _maxabs(einsum("xaz,z->xa", R, eH) - np.outer(eH, eA))))
    # x ▷ ab = sum (x1 ▷ a1)((x2 ◁ a2) ▷ b);  x ▷ 1 = eps(x) 1
    lhs = einsum("abk,xko->xabo", mA, L)
    rhs = einsum("xpq,ars,prc,qsw,wbd,cdo->xabo", DH, DA, L, R, L, mA)
    rep.add("compat-lr-1", max(_maxabs(lhs - rhs),
                               _maxabs(einsum("a,xao->xo", uA, L) - np.outer(eH, uA))))
    # xy ◁ a = sum (x ◁ (y1 ▷ a1))(y2 ◁ a2);  1 ◁ a = eps(a) 1
    lhs = einsum("xyk,kaz->xyaz", mH, R)
    rhs = einsum("ypq,ars,prc,xcw,qsv,wvz->xyaz", DH, DA, L, R, R, mH)
    rep.add("compat-lr-2", max(_maxabs(lhs - rhs),
                               _maxabs(einsum("x,xaz->az", uH, R) - np.outer(eA, uH))))
    # sum (x1 ◁ a1) (x) (x2 ▷ a2) = sum (x2 ◁ a2) (x) (x1 ▷ a1)
    lhs = einsum("xpq,ars,prz,qso->xazo", DH, DA, R, L)
    rhs = einsum("xpq,ars,qsz,pro->xazo", DH, DA, R, L)
    rep.add("compat-lr-3", _maxabs(lhs - rhs))
    return rep


def bicross_tensors(P: MatchedPairHopfData):
    """Product, coproduct, unit, counit of A ⋈ H."""
    A, H, L, R = P.A, P.H, P.left, P.right
    nA, nH = A.dim, H.dim
    n = nA * nH
    # (a x)(b y) = a (x1 ▷ b1)(x2 ◁ b2) y
    mult = einsum("xpq,bcd,pcs,asr,qdw,wyz->axbyrz", H.comult, A.comult, L, A.mult,
                  R, H.mult).reshape(n, n, n)
    comult = einsum("acd,xpq->axcpdq", A.comult, H.comult).reshape(n, n, n)
    unit = np.kron(A.unit, H.unit)
    counit = np.kron(A.counit, H.counit)
    return mult, comult, unit, counit


def bicross_star_matrix(P: MatchedPairHopfData, mult: np.ndarray) -> np.ndarray:
    """(a x)* = x* a* as the product (1 x*)(a* 1)."""
    CA, CH = P.A.star.matrix, P.H.star.matrix
    nA, nH = P.A.dim, P.H.dim
    left = einsum("x,zy->xzy", P.A.unit, CH).reshape(nA * nH, nH)       # 1 x*
    right = einsum("ba,y->bya", CA, P.H.unit).reshape(nA * nH, nA)      # a* 1
    Cm = einsum("ix,ja,ijk->kax", left, right, mult)
    return Cm.reshape(nA * nH, nA * nH)


def bicross_closed_antipode(P: MatchedPairHopfData, mult: np.ndarray) -> np.ndarray:
    """S(a x) = S(x) S(a) computed in A ⋈ H."""
    nA, nH = P.A.dim, P.H.dim
    Sx = einsum("a,zx->azx", P.A.unit, P.H.antipode).reshape(nA * nH, nH)
    Sa = einsum("ba,y->bya", P.A.antipode, P.H.unit).reshape(nA * nH, nA)
    return einsum("ix,ja,ijk->kax", Sx, Sa, mult).reshape(nA * nH, nA * nH)


def check_bicross_star_compat(P: MatchedPairHopfData, tol: float = DEFAULT_TOL):
    """Residuals of a* eps(x*) = sum (x2 ◁ a2)* ▷ (x1 ▷ a1)* and
    eps(a*) x* = sum (x2 ◁ a2)* ◁ (x1 ▷ a1)*."""
    A, H, L, R = P.A, P.H, P.left, P.right
    CA, CH = A.star.matrix, H.star.matrix
    T = einsum("xpq,ars,prc,qsw->xacw", H.comult, A.comult, L, R)  # (x1▷a1) (x) (x2◁a2)
    Tc = np.conj(T)
    rhs1 = einsum("xacw,dc,vw,vdo->axo", Tc, CA, CH, L)
    lhs1 = einsum("oa,x->axo", CA, H.counit @ CH)
    rhs2 = einsum("xacw,dc,vw,vdz->axz", Tc, CA, CH, R)
    lhs2 = einsum("a,zx->axz", A.counit @ CA, CH)
    return _maxabs(lhs1 - rhs1), _maxabs(lhs2 - rhs2)


def bicrossproduct(P: MatchedPairHopfData, tol: float = DEFAULT_TOL, check: bool = True,
                   strict_star: bool = False) -> FiniteHopfAlgebra:
    """A ⋈ H; the star x* a* is attached only when both compatibility residuals vanish.

    A failed star check raises StarCompatFailed only when strict_star is set;
    otherwise the plain Hopf algebra is returned and the failure is recorded in
    ``hopf.notes``.
    """
    if check:
        rep = verify_matched_pair(P, tol)
        if not rep.overall:
            from ..groups import ConditionsFailed
            raise ConditionsFailed(f"not a matched pair: {', '.join(rep.failed_ids())}", rep)
    mult, comult, unit, counit = bicross_tensors(P)
    labels = [f"{a}·{x}" for a in P.A.basis_labels for x in P.H.basis_labels]
    B = FiniteBialgebra(mult, unit, comult, counit, labels, f"{P.A.name}⋈{P.H.name}")
    M = solve_antipode(B, tol=tol)
    closed = bicross_closed_antipode(P, mult)
    from ..groups import FormulaMismatch
    diff = _maxabs(M.antipode - closed)
    if diff > tol:
        raise FormulaMismatch(f"closed antipode differs from generic one by {diff:.3g}")
    notes = []
    if P.A.star is not None and P.H.star is not None:
        r1, r2 = check_bicross_star_compat(P, tol)
        if max(r1, r2) <= tol:
            M = M.with_star(StarStructure(bicross_star_matrix(P, mult)))
        else:
            msg = f"star compatibility fails (residuals {r1:.3g}, {r2:.3g})"
            if strict_star:
                raise StarCompatFailed(msg)
            notes.append(msg)
    M.notes = notes
    return M


def check_bicross_integral(P: MatchedPairHopfData, M: FiniteHopfAlgebra,
                           tol: float = DEFAULT_TOL) -> VerificationReport:
    """phi_A (x) phi_H is the normal integral; the two integral identities;
    and, with stars, <ax, by> = <a, b>_A <x, y>_H."""
    from ..star import gram_matrix

    rep = VerificationReport(artifact=M.name or None, tolerance=tol)
    IA, IH = compute_integral(P.A), compute_integral(P.H)
    IM = compute_integral(M)
    phi = np.kron(IA.phi, IH.phi)
    rep.add("integral-product", _maxabs(IM.phi - phi))
    A, H, L, R = P.A, P.H, P.left, P.right
    pA, pH = IA.phi, IH.phi
    # phi_A(a) phi_H(xy) = sum phi_A(x1 ▷ a1) phi_H((x2 ◁ a2) y)
    lhs = einsum("a,xyk,k->axy", pA, H.mult, pH)
    rhs = einsum("xpq,ars,pro,o,qsw,wyk,k->axy", H.comult, A.comult, L, pA, R, H.mult, pH)
    rep.add("integral-identity-1", _maxabs(lhs - rhs))
    # phi_A(ba) phi_H(x) = sum phi_A(b (x1 ▷ a1)) phi_H(x2 ◁ a2)
    lhs = einsum("bak,k,x->bax", A.mult, pA, pH)
    rhs = einsum("xpq,ars,pro,bok,k,qsw,w->bax", H.comult, A.comult, L, A.mult, pA, R, pH)
    rep.add("integral-identity-2", _maxabs(lhs - rhs))
    if M.star is not None and A.star is not None and H.star is not None:
        GM = gram_matrix(M, IM.phi)
        GA, GH = gram_matrix(A, pA), gram_matrix(H, pH)
        nA, nH = A.dim, H.dim
        fact = einsum("ab,xy->axby", GA, GH).reshape(nA * nH, nA * nH)
        rep.add("gram-factorisation", _maxabs(GM - fact))
    return rep
