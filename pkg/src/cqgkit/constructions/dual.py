"""Dual Hopf algebra and the op / cop / bop variants."""
from __future__ import annotations

import numpy as np

from ..errors import InputError
from ..hopf import FiniteHopfAlgebra, StarStructure


def dual_star_matrix(H: FiniteHopfAlgebra) -> np.ndarray:
    """alpha*(x) = conj(alpha(S(x)*)) in the dual basis."""
    C = H.star.matrix
    return (np.conj(C) @ H.antipode).T.copy()


def dual(H: FiniteHopfAlgebra) -> FiniteHopfAlgebra:
    """Transposed structure tensors on the dual basis f^i."""
    mult = np.transpose(H.comult, (1, 2, 0)).copy()
    comult = np.transpose(H.mult, (2, 0, 1)).copy()
    star = None if H.star is None else StarStructure(dual_star_matrix(H))
    labels = [f"δ({s})" for s in H.basis_labels]
    return FiniteHopfAlgebra(mult, H.counit.copy(), comult, H.unit.copy(), labels,
                             f"({H.name})^∨" if H.name else "H^∨",
                             antipode=H.antipode.T.copy(),
                             antipode_inverse=H.antipode_inverse.T.copy(), star=star)


def opposite_variants(H: FiniteHopfAlgebra, which: str) -> FiniteHopfAlgebra:
    """op flips the product, cop the coproduct, bop both; the star is kept."""
    if which not in ("op", "cop", "bop"):
        raise InputError("which must be op, cop or bop")
    mult, comult = H.mult, H.comult
    if which in ("op", "bop"):
        mult = np.transpose(mult, (1, 0, 2)).copy()
    if which in ("cop", "bop"):
        comult = np.transpose(comult, (0, 2, 1)).copy()
    if which == "bop":
        S, Si = H.antipode, H.antipode_inverse
    else:
        S, Si = H.antipode_inverse, H.antipode
    return FiniteHopfAlgebra(mult, H.unit.copy(), comult, H.counit.copy(),
                             list(H.basis_labels), f"{H.name}^{which}",
                             antipode=S.copy(), antipode_inverse=Si.copy(), star=H.star)


def structural_distance(H1: FiniteHopfAlgebra, H2: FiniteHopfAlgebra) -> float:
    """Entrywise max difference of all structure maps (same basis assumed)."""
    if H1.dim != H2.dim:
        return float("inf")
    parts = [H1.mult - H2.mult, H1.comult - H2.comult, H1.unit - H2.unit,
             H1.counit - H2.counit, H1.antipode - H2.antipode]
    if (H1.star is None) != (H2.star is None):
        return float("inf")
    if H1.star is not None:
        parts.append(H1.star.matrix - H2.star.matrix)
    return max(float(np.abs(p).max()) for p in parts)
