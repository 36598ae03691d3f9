"""Product twists H_chi by a 2-cocycle chi: H (x) H -> C and the positivity
criterion through Phi = (kappa o S^-1) * id * kappa^-1.

chi is stored as a matrix chi[x, y] = chi(e_x, e_y).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from ..errors import DimensionMismatch, NotACocycle, StarCompatFailed
from ..hopf import (FiniteHopfAlgebra, IntegralData, _maxabs, compute_integral,
                    convolution_inverse, convolve_functionals, ground_field, tensor_product,
                    verify_hopf)
from ..numeric import DEFAULT_TOL, einsum, hermitian_min_eigenvalue
from ..report import VerificationReport


def _d2(H):
    return einsum("xpk,kqr->xpqr", H.comult, H.comult)


@dataclass
class TwistData:
    chi: np.ndarray
    chi_inv: np.ndarray
    kappa: np.ndarray
    kappa_inv: np.ndarray
    zeta: np.ndarray
    phi_map: np.ndarray
    report: VerificationReport = field(default_factory=VerificationReport)


def functional_inverse(f, H) -> np.ndarray:
    """Convolution inverse of a covector on H."""
    return convolution_inverse(np.asarray(f, complex)[None, :], H, ground_field())[0]


def cocycle_residual(H: FiniteHopfAlgebra, chi: np.ndarray) -> float:
    """sum chi(x1, y1) chi(x2 y2, z) = sum chi(y1, z1) chi(x, y2 z2)."""
    D, m = H.comult, H.mult
    lhs = einsum("xab,ycd,ac,bdk,kz->xyz", D, D, chi, m, chi)
    rhs = einsum("ycd,zef,ce,dfk,xk->xyz", D, D, chi, m, chi)
    return _maxabs(lhs - rhs)


def star_cocycle_residual(H: FiniteHopfAlgebra, chi: np.ndarray) -> float:
    """chi(x*, y*) = conj(chi(y, x))."""
    C = H.star.matrix
    return _maxabs(einsum("kx,ly,kl->xy", C, C, chi) - np.conj(chi.T))


def build_twist(H: FiniteHopfAlgebra, chi, tol: float = DEFAULT_TOL) -> TwistData:
    chi = np.asarray(chi, complex)
    n = H.dim
    if chi.shape != (n, n):
        raise DimensionMismatch(f"chi must have shape {(n, n)}")
    S, Si, D, m = H.antipode, H.antipode_inverse, H.comult, H.mult
    u, e = H.unit, H.counit
    rep = VerificationReport(artifact="twist", tolerance=tol)
    norm = max(_maxabs(chi @ u - e), _maxabs(u @ chi - e))
    rep.add("normalised", norm)
    if norm > tol:
        raise NotACocycle(f"chi(1, x) = chi(x, 1) = eps(x) fails (residual {norm:.3g})")
    HH = tensor_product(H, H, with_antipode=False)
    chi_inv = functional_inverse(chi.reshape(-1), HH).reshape(n, n)
    res = cocycle_residual(H, chi)
    rep.add("cocycle", res)
    if res > tol:
        raise NotACocycle(f"cocycle identity fails (residual {res:.3g})")
    # sum chi(x1, y1 z1) chi^-1(x2 y2, z2) = sum chi^-1(y1, z) chi(x, y2)
    lhs = einsum("xab,ycd,zef,cek,ak,bdg,gf->xyz",
                 D, D, D, m, chi, m, chi_inv)
    rhs = einsum("ycd,cz,xd->xyz", D, chi_inv, chi)
    rep.add("derived-identity", _maxabs(lhs - rhs))
    kappa = einsum("xab,cb,ac->x", D, S, chi)
    kappa_inv = einsum("xab,ca,cb->x", D, S, chi_inv)
    rep.add("kappa-inverse", _maxabs(convolve_functionals(kappa, kappa_inv, H) - e))
    kS = kappa @ Si
    zeta = convolve_functionals(kS, kappa_inv, H)
    phi_map = einsum("xazb,a,b->zx", _d2(H), kS, kappa_inv)
    # the five-fold form chi(S^-1 x2, x1) x3 chi^-1(S x4, x5)
    D4 = einsum("xpqk,krs->xpqrs", einsum("xpk,kqr->xpqr", D, D), D)
    D4 = einsum("xpqrk,kst->xpqrst", D4, D)
    direct = einsum("xabzcd,wb,wa,kc,kd->zx", D4, Si, chi, S, chi_inv)
    rep.add("phi-two-forms", _maxabs(phi_map - direct))
    T = TwistData(chi, chi_inv, kappa, kappa_inv, zeta, phi_map, rep)
    S_chi = twisted_antipode(H, T)
    # Phi * S_chi = zeta 1 (convolution with the original product)
    conv = einsum("xab,za,wb,zwk->kx", D, phi_map, S_chi, m)
    rep.add("phi-star-S", _maxabs(conv - np.outer(u, zeta)))
    # S^-1 o S_chi = zeta^-1 * Phi
    zeta_inv = functional_inverse(zeta, H)
    rhs = einsum("xab,a,zb->zx", D, zeta_inv, phi_map)
    rep.add("Sinv-S_chi", _maxabs(Si @ S_chi - rhs))
    return T


def twisted_product(H: FiniteHopfAlgebra, T: TwistData) -> np.ndarray:
    """m_chi(x, y) = sum chi(x1, y1) x2 y2 chi^-1(x3, y3)."""
    D2 = _d2(H)
    return einsum("xabc,ydef,ad,bek,cf->xyk", D2, D2, T.chi, H.mult, T.chi_inv)


def twisted_antipode(H: FiniteHopfAlgebra, T: TwistData) -> np.ndarray:
    """S_chi = kappa * S * kappa^-1."""
    return einsum("xabc,a,zb,c->zx", _d2(H), T.kappa, H.antipode, T.kappa_inv)


def twist_product(H: FiniteHopfAlgebra, T: TwistData, tol: float = DEFAULT_TOL,
                  strict_star: bool = False) -> FiniteHopfAlgebra:
    """H_chi with the same coproduct. The star of H is kept when it is a *-Hopf
    structure on H_chi, which always holds for a *-cocycle; otherwise it is
    dropped and noted, or StarCompatFailed is raised when strict_star is set."""
    from ..star import verify_star_hopf

    S_chi = twisted_antipode(H, T)
    out = FiniteHopfAlgebra(twisted_product(H, T), H.unit.copy(), H.comult.copy(),
                            H.counit.copy(), list(H.basis_labels),
                            f"{H.name}_chi" if H.name else "H_chi",
                            antipode=S_chi, antipode_inverse=np.linalg.inv(S_chi))
    rep = verify_hopf(out, tol)
    if not rep.overall:
        raise NotACocycle(f"twisted algebra fails {', '.join(rep.failed_ids())}")
    notes: List[str] = []
    if H.star is not None:
        r = star_cocycle_residual(H, T.chi)
        starred = out.with_star(H.star)
        if r <= tol:
            out = starred
        else:
            srep = verify_star_hopf(starred, tol)
            if srep.overall:
                out = starred
                notes.append(f"chi is not a *-cocycle (residual {r:.3g}) but the star "
                             "still satisfies the *-Hopf axioms on H_chi")
            else:
                msg = (f"chi is not a *-cocycle (residual {r:.3g}) and the star fails "
                       f"{', '.join(srep.failed_ids())} on H_chi; star dropped")
                if strict_star:
                    raise StarCompatFailed(msg)
                notes.append(msg)
    out.notes = notes
    return out


@dataclass
class TwistPositivity:
    selfadjoint_residual: float
    identity_residual: float
    min_eigenvalue: float
    cqg: bool
    direct_cqg: Optional[bool] = None
    star_cocycle_residual: float = 0.0

    @property
    def agree(self) -> bool:
        return self.direct_cqg is None or self.direct_cqg == self.cqg


def twist_positivity(H: FiniteHopfAlgebra, T: TwistData, I: IntegralData | None = None,
                     tol: float = DEFAULT_TOL, cross_check: bool = True) -> TwistPositivity:
    """Self-adjointness of Phi for <x, y> = phi(y* x), the identity
    [x, y] = <Phi x, y> with [x, y] = phi(y* ._chi x), and the least eigenvalue
    of Phi in a <,>-orthonormal basis. The verdict also requires the star of H
    to be a *-Hopf structure on H_chi, without which H_chi has no Gram form."""
    from ..star import gram_matrix, is_cqg

    if I is None:
        I = compute_integral(H)
    G = gram_matrix(H, I.phi)                   # G[x, y] = <e_x, e_y>
    Phi = T.phi_map
    left = einsum("kx,ky->xy", Phi, G)          # <Phi e_x, e_y>
    right = einsum("ky,xk->xy", np.conj(Phi), G)  # <e_x, Phi e_y>
    sa = _maxabs(left - right)
    Hc = twist_product(H, T, tol)
    ident = float("nan")
    if Hc.star is not None:
        ident = _maxabs(gram_matrix(Hc, I.phi) - left)
    K = G.T                                     # <u, v> = v^H K u
    w, V = np.linalg.eigh((K + K.conj().T) / 2)
    if w.min() <= tol:
        lam = float("nan")
    else:
        half = V @ np.diag(np.sqrt(w)) @ V.conj().T
        ihalf = V @ np.diag(1 / np.sqrt(w)) @ V.conj().T
        P = half @ Phi @ ihalf
        lam = hermitian_min_eigenvalue((P + P.conj().T) / 2, tol)
    sc = star_cocycle_residual(H, T.chi)
    out = TwistPositivity(sa, ident, lam, bool(lam > tol and Hc.star is not None),
                          star_cocycle_residual=sc)
    if cross_check:
        out.direct_cqg = bool(is_cqg(Hc, tol).cqg) if Hc.star is not None else False
    return out


# ---------------------------------------------------------------- cocycles from bicharacters

def bicharacter_cocycle(G, coords, form) -> np.ndarray:
    """Cocycle on C^G pulled back from an elementary abelian 2-subgroup K.

    coords maps group indices in K to their F_2 coordinate tuples; form is the
    r x r F_2 matrix B of omega(s, t) = (-1)^(s B t) on the character group.
    chi(e_g, e_h) = |K|^-2 sum_{s,t} (-1)^(s.g + t.h) omega(s, t) for g, h in K.
    """
    B = np.asarray(form, int) % 2
    r = B.shape[0]
    chars = list(itertools.product(range(2), repeat=r))
    nK = len(chars)
    chi = np.zeros((G.order, G.order), complex)
    for g, cg in coords.items():
        for h, ch in coords.items():
            tot = 0
            for s in chars:
                for t in chars:
                    sign = np.dot(s, cg) + np.dot(t, ch) + np.dot(s, B @ np.array(t))
                    tot += (-1) ** int(sign % 2)
            chi[g, h] = tot / nK ** 2
    return chi
