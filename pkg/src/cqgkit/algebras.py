"""Standard small Hopf algebras: group algebras, function algebras, Sweedler's
four-dimensional algebra, and the two-element monoid bialgebra."""
from __future__ import annotations

import itertools

import numpy as np

from .groups import FiniteGroup
from .hopf import FiniteBialgebra, FiniteHopfAlgebra, StarStructure, solve_antipode


def group_algebra(G: FiniteGroup) -> FiniteHopfAlgebra:
    """CG with grouplike basis, S(g) = g^-1 and g* = g^-1."""
    n = G.order
    mult = np.zeros((n, n, n), complex)
    comult = np.zeros((n, n, n), complex)
    for g, h in itertools.product(range(n), repeat=2):
        mult[g, h, G.table[g, h]] = 1
    for g in range(n):
        comult[g, g, g] = 1
    unit = np.zeros(n, complex)
    unit[G.identity] = 1
    S = np.zeros((n, n), complex)
    S[G.inverse, np.arange(n)] = 1
    return FiniteHopfAlgebra(mult, unit, comult, np.ones(n, complex), list(G.labels),
                             f"C{G.name}" if G.name else "CG", antipode=S,
                             antipode_inverse=S.T.copy(), star=StarStructure(S.copy()))


def function_algebra(G: FiniteGroup) -> FiniteHopfAlgebra:
    """C^G with basis of point masses e_g, S(e_g) = e_{g^-1} and e_g* = e_g."""
    n = G.order
    mult = np.zeros((n, n, n), complex)
    comult = np.zeros((n, n, n), complex)
    for g in range(n):
        mult[g, g, g] = 1
    for g, h in itertools.product(range(n), repeat=2):
        comult[G.table[g, h], g, h] = 1
    counit = np.zeros(n, complex)
    counit[G.identity] = 1
    S = np.zeros((n, n), complex)
    S[G.inverse, np.arange(n)] = 1
    return FiniteHopfAlgebra(mult, np.ones(n, complex), comult, counit,
                             [f"e_{g}" for g in G.labels],
                             f"C^{G.name}" if G.name else "C^G", antipode=S,
                             antipode_inverse=S.T.copy(),
                             star=StarStructure(np.eye(n, dtype=complex)))


def sweedler_algebra() -> FiniteHopfAlgebra:
    """Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx, g grouplike,
    Delta(x) = x (x) 1 + g (x) x. Not semisimple, not cosemisimple."""
    # basis g^a x^b at index 2a + b
    def ix(a, b):
        return 2 * a + b

    mult = np.zeros((4, 4, 4), complex)
    for a, b, c, d in itertools.product(range(2), repeat=4):
        if b + d >= 2:
            continue
        mult[ix(a, b), ix(c, d), ix((a + c) % 2, b + d)] = (-1) ** (b * c)
    comult = np.zeros((4, 4, 4), complex)
    for a in range(2):
        g = ix(a, 0)
        comult[g, g, g] = 1
        # Delta(g^a x) = g^a x (x) g^a + g^(a+1) (x) g^a x
        gx = ix(a, 1)
        comult[gx, gx, g] += 1
        comult[gx, ix((a + 1) % 2, 0), gx] += 1
    unit = np.array([1, 0, 0, 0], complex)
    counit = np.array([1, 0, 1, 0], complex)
    B = FiniteBialgebra(mult, unit, comult, counit, ["1", "x", "g", "gx"], "Sweedler")
    return solve_antipode(B)


def monoid_bialgebra() -> FiniteBialgebra:
    """Monoid algebra of {1, p} with p^2 = p, p grouplike. A bialgebra, not Hopf."""
    mult = np.zeros((2, 2, 2), complex)
    mult[0, 0, 0] = mult[0, 1, 1] = mult[1, 0, 1] = mult[1, 1, 1] = 1
    comult = np.zeros((2, 2, 2), complex)
    comult[0, 0, 0] = comult[1, 1, 1] = 1
    return FiniteBialgebra(mult, [1, 0], comult, [1, 1], ["1", "p"], "monoid {1,p}")
