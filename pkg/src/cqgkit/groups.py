"""Finite groups, matched pairs of groups and the bismash Hopf algebras
C^G #_{sigma,tau} CF built from scalar cocycle tables."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from .errors import CQGError, InputError
from .numeric import DEFAULT_TOL, RootOfUnity, as_complex
from .report import VerificationReport


class ConditionsFailed(CQGError):
    """A builder's precondition checkers failed; ``report`` holds the details."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class FormulaMismatch(CQGError):
    """A closed formula disagrees with the generic computation."""


# ---------------------------------------------------------------- groups

@dataclass
class FiniteGroup:
    labels: List[str]
    table: np.ndarray
    name: str = ""
    identity: int = field(init=False)
    inverse: np.ndarray = field(init=False)

    def __post_init__(self):
        self.table = np.asarray(self.table, dtype=int)
        n = len(self.labels)
        if self.table.shape != (n, n):
            raise InputError(f"multiplication table must be {n}x{n}")
        if self.table.min() < 0 or self.table.max() >= n:
            raise InputError("multiplication table entry out of range")
        ids = [e for e in range(n) if np.array_equal(self.table[e], np.arange(n))
               and np.array_equal(self.table[:, e], np.arange(n))]
        if not ids:
            raise InputError("multiplication table has no identity")
        self.identity = ids[0]
        inv = np.full(n, -1)
        for g in range(n):
            hits = np.nonzero(self.table[g] == self.identity)[0]
            if len(hits) == 0:
                raise InputError(f"element {self.labels[g]} has no inverse")
            inv[g] = hits[0]
        self.inverse = inv

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, g: int, h: int) -> int:
        return int(self.table[g, h])

    def inv(self, g: int) -> int:
        return int(self.inverse[g])

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def verify(self) -> VerificationReport:
        rep = VerificationReport(artifact=self.name or None)
        T = self.table
        # (gh)k vs g(hk) over all triples
        lhs = T[T[:, :, None], np.arange(self.order)[None, None, :]]
        rhs = T[np.arange(self.order)[:, None, None], T[None, :, :]]
        bad = int(np.sum(lhs != rhs))
        rep.add_bool("group-assoc", bad == 0, f"{bad} failing triples", residual=bad)
        e = self.identity
        rep.add_bool("group-identity", bool(np.all(T[e] == np.arange(self.order))
                                            and np.all(T[:, e] == np.arange(self.order))))
        ok = all(T[g, self.inverse[g]] == e and T[self.inverse[g], g] == e
                 for g in range(self.order))
        rep.add_bool("group-inverse", ok)
        return rep


def _power_label(gen: str, k: int) -> str:
    if k == 0:
        return "1"
    return gen if k == 1 else f"{gen}^{k}"


def cyclic_group(n: int, gen: str = "a") -> FiniteGroup:
    labels = [_power_label(gen, k) for k in range(n)]
    table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return FiniteGroup(labels, table, f"C{n}")


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """G x H with (g, h) at index g*|H| + h (lexicographic)."""
    labels = []
    for g, h in itertools.product(G.labels, H.labels):
        parts = [p for p in (g, h) if p != "1"]
        labels.append("".join(parts) if parts else "1")
    m, n = G.order, H.order
    table = np.zeros((m * n, m * n), dtype=int)
    for g1, h1, g2, h2 in itertools.product(range(m), range(n), range(m), range(n)):
        table[g1 * n + h1, g2 * n + h2] = G.table[g1, g2] * n + H.table[h1, h2]
    return FiniteGroup(labels, table, f"{G.name}x{H.name}")


def cyclic_square(n: int) -> FiniteGroup:
    """C_n x C_n = {a^i b^j}, element (i, j) at index i*n + j."""
    G = direct_product(cyclic_group(n, "a"), cyclic_group(n, "b"))
    G.name = f"C{n}xC{n}"
    return G


def permutation_group(perms: Sequence[Sequence[int]], labels=None, name="") -> FiniteGroup:
    """Group of permutations (tuples of images); composition (p*q)(i) = p(q(i))."""
    perms = [tuple(p) for p in perms]
    index = {p: k for k, p in enumerate(perms)}
    n = len(perms)
    table = np.zeros((n, n), dtype=int)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            r = tuple(p[q[k]] for k in range(len(q)))
            if r not in index:
                raise InputError("permutations are not closed under composition")
            table[i, j] = index[r]
    if labels is None:
        labels = ["".join(str(v) for v in p) for p in perms]
    return FiniteGroup(list(labels), table, name)


def symmetric_group(k: int = 3) -> FiniteGroup:
    perms = sorted(itertools.permutations(range(k)))
    return permutation_group(perms, name=f"S{k}")


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the n-gon as permutations of its vertices."""
    rots = [tuple((i + r) % n for i in range(n)) for r in range(n)]
    refl = [tuple((r - i) % n for i in range(n)) for r in range(n)]
    labels = [_power_label("r", r) for r in range(n)] + \
        [("s" if r == 0 else f"{_power_label('r', r)}s") for r in range(n)]
    return permutation_group(rots + refl, labels, f"D{n}")


# ---------------------------------------------------------------- matched pairs

@dataclass
class MatchedPairGroups:
    """left[g, f] = g > f in F, right[g, f] = g < f in G."""

    F: FiniteGroup
    G: FiniteGroup
    left: np.ndarray
    right: np.ndarray

    def __post_init__(self):
        self.left = np.asarray(self.left, dtype=int)
        self.right = np.asarray(self.right, dtype=int)
        shape = (self.G.order, self.F.order)
        if self.left.shape != shape or self.right.shape != shape:
            raise InputError(f"action tables must have shape {shape}")
        if self.left.min() < 0 or self.left.max() >= self.F.order:
            raise InputError("left action entry out of range")
        if self.right.min() < 0 or self.right.max() >= self.G.order:
            raise InputError("right action entry out of range")

    @classmethod
    def trivial(cls, F: FiniteGroup, G: FiniteGroup) -> "MatchedPairGroups":
        left = np.tile(np.arange(F.order), (G.order, 1))
        right = np.tile(np.arange(G.order)[:, None], (1, F.order))
        return cls(F, G, left, right)


def verify_matched_pair_groups(P: MatchedPairGroups) -> VerificationReport:
    """Exact table checks; residual is the number of failing tuples."""
    F, G, L, R = P.F, P.G, P.left, P.right
    mF, mG = F.table, G.table
    nF, nG = F.order, G.order
    rep = VerificationReport(artifact="matched pair of groups", tolerance=0.0)

    def record(name, bad):
        bad = int(bad)
        rep.add_bool(name, bad == 0, f"{bad} failing tuples" if bad else "", residual=bad)

    g, f, f2 = np.meshgrid(np.arange(nG), np.arange(nF), np.arange(nF), indexing="ij")
    record("right-action", np.sum(R[:, F.identity] != np.arange(nG))
           + np.sum(R[R[g, f], f2] != R[g, mF[f, f2]]))
    g, g2, f = np.meshgrid(np.arange(nG), np.arange(nG), np.arange(nF), indexing="ij")
    record("left-action", np.sum(L[G.identity, :] != np.arange(nF))
           + np.sum(L[g, L[g2, f]] != L[mG[g, g2], f]))
    g, f, f2 = np.meshgrid(np.arange(nG), np.arange(nF), np.arange(nF), indexing="ij")
    # g > f f' = (g > f)((g < f) > f')
    record("compat-lr-1", np.sum(L[g, mF[f, f2]] != mF[L[g, f], L[R[g, f], f2]]))
    g, g2, f = np.meshgrid(np.arange(nG), np.arange(nG), np.arange(nF), indexing="ij")
    # g g' < f = (g < (g' > f))(g' < f)
    record("compat-lr-2", np.sum(R[mG[g, g2], f] != mG[R[g, L[g2, f]], R[g2, f]]))
    record("unit-fixed", np.sum(R[G.identity, :] != G.identity)
           + np.sum(L[:, F.identity] != F.identity))
    return rep


# ---------------------------------------------------------------- cocycle tables

def _table(x, shape, name):
    if x is None:
        return None
    arr = np.asarray(x, dtype=object)
    if arr.shape != shape:
        raise InputError(f"{name} table must have shape {shape}, got {arr.shape}")
    out = np.empty(shape, dtype=complex)
    for idx in np.ndindex(shape):
        out[idx] = as_complex(arr[idx])
    return out


@dataclass
class GroupCocycleData:
    """sigma[g, f, f'] = sigma(g; f, f'), tau[g, g', f] = tau(g, g'; f), alpha[f, g]."""

    sigma: np.ndarray
    tau: np.ndarray
    alpha: Optional[np.ndarray] = None

    def copy(self) -> "GroupCocycleData":
        return GroupCocycleData(self.sigma.copy(), self.tau.copy(),
                                None if self.alpha is None else self.alpha.copy())

    @classmethod
    def build(cls, P: MatchedPairGroups, sigma=None, tau=None, alpha=None) -> "GroupCocycleData":
        nF, nG = P.F.order, P.G.order
        s = np.ones((nG, nF, nF), complex) if sigma is None else _table(sigma, (nG, nF, nF), "sigma")
        t = np.ones((nG, nG, nF), complex) if tau is None else _table(tau, (nG, nG, nF), "tau")
        a = _table(alpha, (nF, nG), "alpha")
        if np.any(s == 0) or np.any(t == 0):
            raise InputError("sigma and tau must take nonzero values")
        return cls(s, t, a)


def verify_sigma_tau(P: MatchedPairGroups, C: GroupCocycleData,
                     tol: float = DEFAULT_TOL) -> VerificationReport:
    F, G, L, R = P.F, P.G, P.left, P.right
    mF, mG = F.table, G.table
    s, t = C.sigma, C.tau
    e, eG = F.identity, G.identity
    rep = VerificationReport(artifact="sigma/tau", tolerance=tol)
    nF, nG = F.order, G.order

    g, f, f1, f2 = np.meshgrid(np.arange(nG), np.arange(nF), np.arange(nF), np.arange(nF),
                               indexing="ij")
    lhs = s[R[g, f], f1, f2] * s[g, f, mF[f1, f2]]
    rhs = s[g, f, f1] * s[g, mF[f, f1], f2]
    rep.add("sigma-1", np.abs(lhs - rhs).max())
    rep.add("sigma-2", max(np.abs(s[eG] - 1).max(), np.abs(s[:, e, :] - 1).max(),
                           np.abs(s[:, :, e] - 1).max()))

    g, g1, g2, f = np.meshgrid(np.arange(nG), np.arange(nG), np.arange(nG), np.arange(nF),
                               indexing="ij")
    lhs = t[mG[g, g1], g2, f] * t[g, g1, L[g2, f]]
    rhs = t[g1, g2, f] * t[g, mG[g1, g2], f]
    rep.add("tau-1", np.abs(lhs - rhs).max())
    rep.add("tau-2", max(np.abs(t[eG] - 1).max(), np.abs(t[:, eG, :] - 1).max(),
                         np.abs(t[:, :, e] - 1).max()))

    g, g1, f, f1 = np.meshgrid(np.arange(nG), np.arange(nG), np.arange(nF), np.arange(nF),
                               indexing="ij")
    lhs = s[mG[g, g1], f, f1] * t[g, g1, mF[f, f1]]
    rhs = (s[g, L[g1, f], L[R[g1, f], f1]] * s[g1, f, f1] * t[g, g1, f]
           * t[R[g, L[g1, f]], R[g1, f], f1])
    rep.add("compat-sigma-tau", np.abs(lhs - rhs).max())
    return rep


STAR_CONDITIONS = ("cond-0", "cond-1", "cond-2", "cond-3")


def verify_alpha(P: MatchedPairGroups, C: GroupCocycleData,
                 tol: float = DEFAULT_TOL) -> VerificationReport:
    if C.alpha is None:
        raise InputError("alpha table required")
    F, G, L, R = P.F, P.G, P.left, P.right
    mF, mG, invF = F.table, G.table, F.inverse
    s, t, a = C.sigma, C.tau, C.alpha
    nF, nG = F.order, G.order
    rep = VerificationReport(artifact="alpha", tolerance=tol)
    rep.add("cond-0", max(np.abs(a[F.identity, :] - 1).max(), np.abs(a[:, G.identity] - 1).max()))

    f, g = np.meshgrid(np.arange(nF), np.arange(nG), indexing="ij")
    rep.add("cond-1", np.abs(a[f, g] * np.conj(a[invF[f], R[g, f]]) - 1).max())

    f1, f2, g = np.meshgrid(np.arange(nF), np.arange(nF), np.arange(nG), indexing="ij")
    f12 = mF[f1, f2]
    lhs = a[f1, g] * a[f2, R[g, f1]] * s[g, f1, f2]
    rhs = a[f12, g] * np.conj(s[R[g, f12], invF[f2], invF[f1]])
    rep.add("cond-2", np.abs(lhs - rhs).max())

    f, g1, g2 = np.meshgrid(np.arange(nF), np.arange(nG), np.arange(nG), indexing="ij")
    lhs = a[f, mG[g1, g2]] * t[g1, g2, f]
    rhs = a[L[g2, f], g1] * a[f, g2] * np.conj(t[R[g1, L[g2, f]], R[g2, f], invF[f]])
    rep.add("cond-3", np.abs(lhs - rhs).max())

    g, f = np.meshgrid(np.arange(nG), np.arange(nF), indexing="ij")
    val = a[invF[f], R[g, f]] * s[g, f, invF[f]]
    margin = float(val.real.min())
    rep.add_bool("positivity", margin > tol, f"min Re = {margin:.6g}", residual=margin)
    rep.add("positivity-imag", np.abs(val.imag).max())
    return rep


def star_verdict(rep: VerificationReport) -> bool:
    """cond-0..cond-3: the alpha star is a *-Hopf structure."""
    return all(rep.passed(c) for c in STAR_CONDITIONS)


def alpha_from_sigma(P: MatchedPairGroups, C: GroupCocycleData) -> np.ndarray:
    """alpha(f, g) = sigma(g; f, f^{-1})^{-1}."""
    f, g = np.meshgrid(np.arange(P.F.order), np.arange(P.G.order), indexing="ij")
    return 1.0 / C.sigma[g, f, P.F.inverse[f]]


def unimodular_conditions(P: MatchedPairGroups, C: GroupCocycleData,
                          tol: float = DEFAULT_TOL) -> VerificationReport:
    """|sigma| = |tau| = 1; equivalent to cond-0..cond-3 for alpha = alpha_from_sigma."""
    rep = VerificationReport(artifact="unimodular sigma/tau", tolerance=tol)
    rep.add("sigma-unimodular", np.abs(np.abs(C.sigma) - 1).max())
    rep.add("tau-unimodular", np.abs(np.abs(C.tau) - 1).max())
    return rep


def trivial_alpha_conditions(P: MatchedPairGroups, C: GroupCocycleData,
                             tol: float = DEFAULT_TOL) -> VerificationReport:
    """The three conditions equivalent to all of verify_alpha when alpha = 1:
    sigma(g < ff'; f'^-1, f^-1) = conj sigma(g; f, f'),
    tau(g < (g' > f), g' < f; f^-1) = conj tau(g, g'; f), sigma(g; f, f^-1) > 0."""
    F, G, L, R = P.F, P.G, P.left, P.right
    mF, invF = F.table, F.inverse
    s, t = C.sigma, C.tau
    nF, nG = F.order, G.order
    rep = VerificationReport(artifact="alpha = 1", tolerance=tol)
    g, f, f2 = np.meshgrid(np.arange(nG), np.arange(nF), np.arange(nF), indexing="ij")
    rep.add("sigma-conj", np.abs(s[R[g, mF[f, f2]], invF[f2], invF[f]] - np.conj(s)).max())
    g, g2, f = np.meshgrid(np.arange(nG), np.arange(nG), np.arange(nF), indexing="ij")
    rep.add("tau-conj", np.abs(t[R[g, L[g2, f]], R[g2, f], invF[f]] - np.conj(t)).max())
    g, f = np.meshgrid(np.arange(nG), np.arange(nF), indexing="ij")
    val = s[g, f, invF[f]]
    margin = float(val.real.min())
    rep.add_bool("sigma-positive", margin > tol and np.abs(val.imag).max() <= tol,
                 f"min Re = {margin:.6g}", residual=max(np.abs(val.imag).max(), -margin))
    return rep


def rescale_cocycles(P: MatchedPairGroups, C: GroupCocycleData, nu) -> GroupCocycleData:
    """sigma, tau of the same bialgebra in the rescaled basis nu(g, f) e_g # f.

    nu must be nonzero with nu(1, f) = nu(g, 1) = 1. The result is again a valid
    pair whenever (sigma, tau) is; alpha is copied unchanged, so the star it
    defines generally changes.
    """
    nu = np.asarray(nu, complex)
    F, G, L, R = P.F, P.G, P.left, P.right
    if nu.shape != (G.order, F.order):
        raise InputError(f"nu must have shape {(G.order, F.order)}")
    if np.any(nu == 0) or np.any(nu[G.identity] != 1) or np.any(nu[:, F.identity] != 1):
        raise InputError("nu must be nonzero and normalised")
    g, f, f2 = np.meshgrid(np.arange(G.order), np.arange(F.order), np.arange(F.order), indexing="ij")
    sigma = C.sigma * nu[g, f] * nu[R[g, f], f2] / nu[g, F.table[f, f2]]
    g1, g2, f = np.meshgrid(np.arange(G.order), np.arange(G.order), np.arange(F.order), indexing="ij")
    tau = C.tau * nu[G.table[g1, g2], f] / (nu[g1, L[g2, f]] * nu[g2, f])
    return GroupCocycleData(sigma, tau, None if C.alpha is None else C.alpha.copy())


# ---------------------------------------------------------------- the bismash

def bismash_labels(P: MatchedPairGroups) -> List[str]:
    return [f"e_{g}#{f}" for g in P.G.labels for f in P.F.labels]


def group_bismash_bialgebra(P: MatchedPairGroups, C: GroupCocycleData):
    """Structure tensors straight from the product/coproduct formulas, unchecked."""
    from .hopf import FiniteBialgebra

    F, G, L, R = P.F, P.G, P.left, P.right
    nF, nG = F.order, G.order
    n = nF * nG

    def ix(g, f):
        return g * nF + f

    mult = np.zeros((n, n, n), complex)
    comult = np.zeros((n, n, n), complex)
    for g, f, f2 in itertools.product(range(nG), range(nF), range(nF)):
        g2 = R[g, f]
        mult[ix(g, f), ix(g2, f2), ix(g, F.table[f, f2])] += C.sigma[g, f, f2]
    for g1, g2, f in itertools.product(range(nG), range(nG), range(nF)):
        g = G.table[g1, g2]
        comult[ix(g, f), ix(g1, L[g2, f]), ix(g2, f)] += C.tau[g1, g2, f]
    unit = np.zeros(n, complex)
    counit = np.zeros(n, complex)
    for g in range(nG):
        unit[ix(g, F.identity)] = 1
    for f in range(nF):
        counit[ix(G.identity, f)] = 1
    return FiniteBialgebra(mult, unit, comult, counit, bismash_labels(P), "group bismash")


def group_bismash_antipode(P: MatchedPairGroups, C: GroupCocycleData) -> np.ndarray:
    """Closed antipode formula on the basis e_g # f."""
    F, G, L, R = P.F, P.G, P.left, P.right
    nF, nG = F.order, G.order
    S = np.zeros((nF * nG, nF * nG), complex)
    for g, f in itertools.product(range(nG), range(nF)):
        gf = L[g, f]
        gi = G.inverse[g]
        coef = 1.0 / (C.sigma[gi, gf, F.inverse[gf]] * C.tau[gi, g, f])
        S[G.inverse[R[g, f]] * nF + F.inverse[gf], g * nF + f] += coef
    return S


def group_bismash_star(P: MatchedPairGroups, alpha: np.ndarray) -> np.ndarray:
    """(e_g # f)* = alpha(f^{-1}, g < f) e_{g<f} # f^{-1}."""
    F, R = P.F, P.right
    nF, nG = F.order, P.G.order
    Cm = np.zeros((nF * nG, nF * nG), complex)
    for g, f in itertools.product(range(nG), range(nF)):
        fi = F.inverse[f]
        Cm[R[g, f] * nF + fi, g * nF + f] = alpha[fi, R[g, f]]
    return Cm


def group_bismash_integral(P: MatchedPairGroups) -> np.ndarray:
    nF, nG = P.F.order, P.G.order
    phi = np.zeros(nF * nG, complex)
    for g in range(nG):
        phi[g * nF + P.F.identity] = 1.0 / nG
    return phi


def build_group_bismash(P: MatchedPairGroups, C: GroupCocycleData,
                        tol: float = DEFAULT_TOL, check: bool = True):
    """C^G #_{sigma,tau} CF as a Hopf algebra, with the alpha star when it is valid.

    The antipode is computed generically and compared with the closed formula;
    the normal integral is compared with delta_{f,1}/|G|.
    """
    from .hopf import compute_integral, solve_antipode

    if check:
        rep = verify_matched_pair_groups(P)
        rep.extend(verify_sigma_tau(P, C, tol))
        if not rep.overall:
            raise ConditionsFailed(f"failed checks: {', '.join(rep.failed_ids())}", rep)
    B = group_bismash_bialgebra(P, C)
    H = solve_antipode(B, tol=tol)
    closed = group_bismash_antipode(P, C)
    diff = float(np.abs(H.antipode - closed).max())
    if diff > tol:
        raise FormulaMismatch(f"closed antipode differs from generic one by {diff:.3g}")
    H.antipode = closed
    H.antipode_inverse = np.linalg.inv(closed)
    H.name = "group bismash"
    if C.alpha is not None:
        arep = verify_alpha(P, C, tol)
        if star_verdict(arep):
            H = H.with_star(group_bismash_star(P, C.alpha))
    I = compute_integral(H)
    diff = float(np.abs(I.phi - group_bismash_integral(P)).max())
    if diff > tol:
        raise FormulaMismatch(f"integral differs from delta_(f,1)/|G| by {diff:.3g}")
    return H


def encode_as_linked_pair(P: MatchedPairGroups, C: GroupCocycleData, star_alpha: bool = True):
    """The induced cocycle linked pair (C^G, CF, >, rho, chi, psi)."""
    from .algebras import function_algebra, group_algebra
    from .constructions.linked import CocycleLinkedPairData

    F, G, L, R = P.F, P.G, P.left, P.right
    nF, nG = F.order, G.order
    A = function_algebra(G)
    H = group_algebra(F)
    act = np.zeros((nF, nG, nG), complex)
    rho = np.zeros((nF, nF, nG), complex)
    for f, g in itertools.product(range(nF), range(nG)):
        act[f, g, R[g, F.inverse[f]]] = 1
        rho[f, L[g, f], g] += 1
    chi = np.transpose(C.sigma, (1, 2, 0)).copy()   # chi[f, f', g]
    psi = np.transpose(C.tau, (2, 0, 1)).copy()     # psi[f, g, g']
    return CocycleLinkedPairData(A, H, act, rho, chi, psi)


def gamma_from_alpha(P: MatchedPairGroups, alpha: np.ndarray) -> np.ndarray:
    """gamma(f) = sum_g alpha(f, g) e_g, as a |G| x |F| matrix."""
    return np.asarray(alpha, complex).T.copy()


# ---------------------------------------------------------------- the two examples

def _root(x) -> RootOfUnity:
    if isinstance(x, RootOfUnity):
        return x
    if isinstance(x, str):
        return RootOfUnity.parse(x)
    raise InputError("zeta and eta must be roots of unity (k/m)")


def generate_example(which: str, n: int, zeta, eta):
    """Parametric families on C_2 and C_n x C_n.

    "6.15": F = C_2 = {1, x}, G = C_n x C_n, a^i b^j < x = a^i b^-j, trivial >,
            sigma = 1, tau(a^i b^j, a^k b^l; x) = zeta^(jk) eta^(il), alpha = 1.
    "6.16": F = C_n x C_n, G = C_2, x > a^i b^j = a^i b^-j, trivial <, tau = 1,
            sigma(x; a^i b^j, a^k b^l) = zeta^(il) eta^(-jk), alpha(a^i b^j, x) = (zeta/eta)^(ij).
    """
    if n < 2:
        raise InputError("n must be at least 2")
    zeta, eta = _root(zeta), _root(eta)
    C2 = cyclic_group(2, "x")
    Cnn = cyclic_square(n)

    def ij(k):
        return divmod(k, n)

    def flip(k):
        i, j = ij(k)
        return i * n + (-j) % n

    which = str(which)
    if which == "6.15":
        F, G = C2, Cnn
        x = 1
        left = np.tile(np.arange(2), (n * n, 1))
        right = np.zeros((n * n, 2), dtype=int)
        for g in range(n * n):
            right[g, 0] = g
            right[g, x] = flip(g)
        P = MatchedPairGroups(F, G, left, right)
        tau = np.ones((n * n, n * n, 2), complex)
        for g1, g2 in itertools.product(range(n * n), repeat=2):
            i, j = ij(g1)
            k, l = ij(g2)
            tau[g1, g2, x] = (zeta ** (j * k) * eta ** (i * l)).value
        C = GroupCocycleData(np.ones((n * n, 2, 2), complex), tau, np.ones((2, n * n), complex))
        return P, C
    if which == "6.16":
        F, G = Cnn, C2
        x = 1
        left = np.zeros((2, n * n), dtype=int)
        left[0] = np.arange(n * n)
        left[x] = [flip(f) for f in range(n * n)]
        right = np.tile(np.arange(2)[:, None], (1, n * n))
        P = MatchedPairGroups(F, G, left, right)
        sigma = np.ones((2, n * n, n * n), complex)
        for f1, f2 in itertools.product(range(n * n), repeat=2):
            i, j = ij(f1)
            k, l = ij(f2)
            sigma[x, f1, f2] = (zeta ** (i * l) * eta ** (-j * k)).value
        alpha = np.ones((n * n, 2), complex)
        ratio = zeta / eta
        for f in range(n * n):
            i, j = ij(f)
            alpha[f, x] = (ratio ** (i * j)).value
        C = GroupCocycleData(sigma, np.ones((2, 2, n * n), complex), alpha)
        return P, C
    raise InputError(f"unknown example {which!r}; expected 6.15 or 6.16")
