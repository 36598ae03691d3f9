import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cqgkit.algebras import function_algebra, group_algebra
from cqgkit.constructions import (CocycleLinkedPairData, MatchedPairHopfData, StarLiftData,
                                  attach_star_lift, bicharacter_cocycle, bicrossproduct,
                                  build_twist, check_bismash_gram_factorisation,
                                  check_star_lift, cocycle_bismash, double_as_linked_pair,
                                  double_pair, drinfeld_double, dual, opposite_variants,
                                  structural_distance, twist_positivity, twist_product,
                                  verify_cocycle_linked_pair, verify_matched_pair,
                                  verify_singer_conditions)
from cqgkit.constructions.linked import (check_integral_centrality,
                                         check_trivial_gamma_condition,
                                         integral_centrality_report)
from cqgkit.constructions.matched import check_bicross_integral, check_bicross_star_compat
from cqgkit.constructions.twist import (cocycle_residual, functional_inverse,
                                        star_cocycle_residual, twisted_antipode,
                                        twisted_product)
from cqgkit.errors import InputError, NotACocycle, StarCompatFailed
from cqgkit.groups import (MatchedPairGroups, GroupCocycleData, build_group_bismash,
                           cyclic_group, cyclic_square, dihedral_group, encode_as_linked_pair,
                           gamma_from_alpha, generate_example, symmetric_group)
from cqgkit.hopf import compute_integral, tensor_product, verify_hopf
from cqgkit.numeric import RootOfUnity
from cqgkit.star import gram_matrix, is_cqg, verify_star_hopf

BATTERY = [group_algebra(cyclic_group(2)), group_algebra(symmetric_group(3)),
           function_algebra(cyclic_group(4)), function_algebra(symmetric_group(3))]
battery_st = st.sampled_from(BATTERY)

K4 = cyclic_square(2)
K4_COORDS = {0: (0, 0), 1: (1, 0), 2: (0, 1), 3: (1, 1)}
D4 = dihedral_group(4)
D4_COORDS = {0: (0, 0), 2: (1, 0), 4: (0, 1), 6: (1, 1)}   # {1, r^2, s, r^2 s}
FORMS = [[[0, 1], [0, 0]], [[1, 0], [0, 1]], [[0, 1], [1, 0]], [[1, 1], [0, 1]]]


def _example(w, n, k, l):
    return generate_example(w, n, RootOfUnity(k, n), RootOfUnity(l, n))


# ---------------------------------------------------------------- dual and variants

def test_dual_of_group_algebra_is_function_algebra():
    C2 = cyclic_group(2)
    assert structural_distance(dual(group_algebra(C2)), function_algebra(C2)) == 0


def test_dual_without_star(CC2):
    assert dual(CC2.without_star()).star is None


@given(battery_st)
def test_double_dual_and_cqg_preserved(H):
    Hd = dual(H)
    assert verify_hopf(Hd).overall and verify_star_hopf(Hd).overall
    assert structural_distance(dual(Hd), H) < 1e-12
    assert is_cqg(Hd).cqg == is_cqg(H).cqg


@given(battery_st, st.sampled_from(["op", "cop", "bop"]))
def test_opposite_variants_stay_cqg(H, which):
    V = opposite_variants(H, which)
    assert verify_hopf(V).overall
    assert is_cqg(V).cqg == is_cqg(H).cqg


def test_opposite_variant_identities(CS3):
    assert structural_distance(opposite_variants(CS3, "cop"), CS3) == 0
    twice = opposite_variants(opposite_variants(CS3, "bop"), "bop")
    assert structural_distance(twice, CS3) == 0
    with pytest.raises(InputError):
        opposite_variants(CS3, "xx")


# ---------------------------------------------------------------- matched pairs

def test_double_pair_is_matched(CC2):
    assert verify_matched_pair(double_pair(CC2)).overall


def test_trivial_pair_gives_tensor_product(CC2, FC4):
    P = MatchedPairHopfData.trivial(CC2, FC4)
    assert verify_matched_pair(P).overall
    M = bicrossproduct(P)
    T = tensor_product(CC2, FC4)
    assert np.allclose(M.mult, T.mult) and np.allclose(M.comult, T.comult)
    assert check_bicross_integral(P, M).overall


def test_perturbed_action_fails(CS3):
    P = double_pair(CS3)
    left = P.left.copy()
    left[1, 2, 3] += 0.5
    assert not verify_matched_pair(MatchedPairHopfData(P.A, P.H, left, P.right)).overall


@pytest.mark.parametrize("H", BATTERY[:3], ids=lambda H: H.name)
def test_bicross_integral_and_gram_factorisation(H):
    P = double_pair(H)
    M = bicrossproduct(P)
    assert M.star is not None
    assert check_bicross_integral(P, M).overall


def test_bicross_star_compat():
    P = double_pair(function_algebra(cyclic_group(2)))
    assert max(check_bicross_star_compat(P)) < 1e-10
    A, H = CC2_FC2 = (group_algebra(cyclic_group(2)), function_algebra(cyclic_group(3)))
    assert max(check_bicross_star_compat(MatchedPairHopfData.trivial(A, H))) == 0
    # a reversed-order star on the dual of C^S3 breaks compatibility
    P = double_pair(function_algebra(symmetric_group(3)))
    C = P.A.star.matrix[:, [0, 5, 4, 3, 2, 1]]
    bad = MatchedPairHopfData(P.A.with_star(C), P.H, P.left, P.right)
    assert max(check_bicross_star_compat(bad)) > 0.5
    with pytest.raises(StarCompatFailed):
        bicrossproduct(bad, strict_star=True)
    assert bicrossproduct(bad).star is None


def test_double_small_and_without_star(CC2, sweedler):
    D = drinfeld_double(CC2)
    assert D.dim == 4 and is_cqg(D).cqg
    D0 = drinfeld_double(CC2.without_star())
    assert D0.star is None and verify_hopf(D0).overall
    Ds = drinfeld_double(sweedler)
    assert Ds.dim == 16 and verify_hopf(Ds).overall


# ---------------------------------------------------------------- cocycle linked pairs

def test_trivial_singer_pair_from_groups():
    F, G = cyclic_group(2), cyclic_group(3)
    P = MatchedPairGroups.trivial(F, G)
    D = encode_as_linked_pair(P, GroupCocycleData.build(P))
    assert verify_cocycle_linked_pair(D).overall
    assert verify_singer_conditions(D).overall


def test_linked_pair_chi_mutation_hits_a5():
    P, C = _example("6.16", 2, 1, 0)
    D = encode_as_linked_pair(P, C)
    assert verify_cocycle_linked_pair(D).overall
    chi = np.array(D.chi)
    chi[1, 2, 1] *= np.exp(0.1j)
    assert not verify_cocycle_linked_pair(D.replace(chi=chi)).passed("a5")
    # on F = C2 every normalised chi(x, x) is again a 2-cocycle; only c8 sees it
    P, C = _example("6.15", 2, 1, 1)
    D = encode_as_linked_pair(P, C)
    chi = np.array(D.chi)
    chi[1, 1, 2] *= np.exp(0.1j)
    assert verify_cocycle_linked_pair(D.replace(chi=chi)).failed_ids() == ["c8"]


def test_trivial_cocycles_give_bismash_product():
    # (a#x)(b#y) = sum a (x1 > b) # x2 y with S3 acting on C^S3 by conjugation
    G = symmetric_group(3)
    n = G.order
    A, H = function_algebra(G), group_algebra(G)
    act = np.zeros((n, n, n))
    for x, a in itertools.product(range(n), repeat=2):
        act[x, a, G.table[G.table[x, a], G.inverse[x]]] = 1
    D = CocycleLinkedPairData.trivial(A, H, act=act)
    assert verify_cocycle_linked_pair(D).overall
    M = cocycle_bismash(D)
    expected = np.zeros((n * n,) * 3)
    for a, x, b, y in itertools.product(range(n), repeat=4):
        if G.table[G.table[x, b], G.inverse[x]] == a:
            expected[a * n + x, b * n + y, a * n + G.table[x, y]] = 1
    assert np.allclose(M.mult, expected)


@pytest.mark.parametrize("ex", [("6.15", 2, 1, 1), ("6.16", 2, 1, 0), ("6.16", 3, 1, 2)])
def test_linked_and_group_paths_agree(ex):
    P, C = _example(*ex)
    D = encode_as_linked_pair(P, C)
    M = cocycle_bismash(D, lift=StarLiftData.explicit(D, gamma_from_alpha(P, C.alpha)))
    G = build_group_bismash(P, C)
    assert M.dim == G.dim
    assert structural_distance(M, G) < 1e-10
    assert check_bismash_gram_factorisation(M, D).overall
    rep = check_integral_centrality(M, D)
    assert rep.overall


def test_star_lift_examples():
    D = double_as_linked_pair(group_algebra(symmetric_group(3)))
    assert check_star_lift(D, StarLiftData.chi_canonical(D)).overall
    P, C = _example("6.16", 3, 1, 2)
    D = encode_as_linked_pair(P, C)
    assert check_star_lift(D, StarLiftData.explicit(D, gamma_from_alpha(P, C.alpha))).overall
    bad = gamma_from_alpha(P, C.alpha) * 2
    with pytest.raises(InputError):
        StarLiftData.explicit(D, bad)


def test_double_via_linked_pair_matches(CS3):
    D = double_as_linked_pair(CS3)
    M = cocycle_bismash(D, lift=StarLiftData.chi_canonical(D))
    assert structural_distance(M, drinfeld_double(CS3)) < 1e-10
    with pytest.raises(InputError):
        double_as_linked_pair(function_algebra(symmetric_group(3)))


def test_attach_lift_on_first_family():
    n = 3
    P, C = _example("6.15", n, 1, 2)
    D = encode_as_linked_pair(P, C)
    M = cocycle_bismash(D)
    S = attach_star_lift(M, D, StarLiftData.explicit(D, gamma_from_alpha(P, C.alpha)))
    v = is_cqg(S)
    assert v.cqg
    assert np.allclose(gram_matrix(S, v.integral.phi), np.eye(S.dim) / n ** 2)
    alpha = C.alpha.copy()
    alpha[1, 4] = -1
    with pytest.raises(StarCompatFailed):
        attach_star_lift(M, D, StarLiftData.explicit(D, gamma_from_alpha(P, alpha)))


def _linked_battery():
    out = [double_as_linked_pair(group_algebra(G))
           for G in (cyclic_group(2), cyclic_group(3), symmetric_group(3))]
    for ex in [("6.15", 2, 1, 1), ("6.16", 3, 1, 2)]:
        out.append(encode_as_linked_pair(*_example(*ex)))
    return out


LINKED = _linked_battery()


@given(st.sampled_from(LINKED), st.integers(0, 1), st.integers(0, 10 ** 6))
def test_trivial_gamma_uno_matches_simplified_condition(D, kind, seed):
    # star mutations keep the linked pair valid, which the equivalence presupposes
    r = np.random.default_rng(seed)
    phase = np.exp(1j * r.choice([0.1, np.pi / 2, np.pi]))
    if kind == 0:
        Cm = D.A.star.matrix.copy()
        Cm[:, r.integers(1, D.A.dim)] *= phase
        D = D.replace(A=D.A.with_star(Cm))
    else:
        Cm = D.H.star.matrix.copy()
        Cm[:, r.integers(1, D.H.dim)] *= phase
        D = D.replace(H=D.H.with_star(Cm))
    uno = check_star_lift(D, StarLiftData.trivial(D)).passed("uno")
    assert uno == (check_trivial_gamma_condition(D) <= 1e-9)


def test_non_tracial_functional_detected():
    M = build_group_bismash(*_example("6.16", 2, 1, 0))
    phi = np.random.default_rng(3).normal(size=M.dim)
    assert integral_centrality_report(M, phi)["integral-central"].residual > 1e-3


def test_singer_conditions_first_family():
    P, C = _example("6.15", 3, 1, 2)
    rep = verify_singer_conditions(encode_as_linked_pair(P, C))
    assert rep.overall
    assert rep.passed("inv-action") and rep.passed("inv-coaction")


# ---------------------------------------------------------------- twists

def _cocycle_oracle(G, chi):
    """sum chi(x1,y1) chi(x2 y2, z) - sum chi(y1,z1) chi(x, y2 z2) on C^G, by loops."""
    n = G.order
    m = G.table
    res = 0.0
    for x, y, z in itertools.product(range(n), repeat=3):
        lhs = sum(chi[x1, y1] * chi[x2, z]
                  for x1, x2, y1, y2 in itertools.product(range(n), repeat=4)
                  if m[x1, x2] == x and m[y1, y2] == y and x2 == y2)
        rhs = sum(chi[y1, z1] * chi[x, y2]
                  for y1, y2, z1, z2 in itertools.product(range(n), repeat=4)
                  if m[y1, y2] == y and m[z1, z2] == z and y2 == z2)
        res = max(res, abs(lhs - rhs))
    return res


def test_trivial_twist():
    H = function_algebra(symmetric_group(3))
    chi = np.outer(H.counit, H.counit)
    T = build_twist(H, chi)
    assert np.allclose(T.kappa, H.counit) and np.allclose(T.zeta, H.counit)
    assert np.allclose(T.phi_map, np.eye(6))
    assert structural_distance(twist_product(H, T), H) < 1e-12
    pos = twist_positivity(H, T)
    assert pos.cqg and pos.min_eigenvalue == pytest.approx(1) and pos.agree


@pytest.mark.parametrize("form", FORMS)
def test_bicharacter_cocycle_on_klein_group(form):
    H = function_algebra(K4)
    chi = bicharacter_cocycle(K4, K4_COORDS, form)
    assert _cocycle_oracle(K4, chi) < 1e-12
    assert cocycle_residual(H, chi) < 1e-12
    T = build_twist(H, chi)
    assert T.report.overall
    # grouplike sandwich collapses on an abelian group
    assert np.allclose(twisted_product(H, T), H.mult)
    pos = twist_positivity(H, T)
    assert pos.selfadjoint_residual < 1e-9
    assert pos.agree


def test_unnormalised_cocycle_rejected():
    H = function_algebra(K4)
    with pytest.raises(NotACocycle):
        build_twist(H, np.ones((4, 4)))


@pytest.mark.parametrize("form", FORMS)
def test_nonabelian_twist(form):
    H = function_algebra(D4)
    chi = bicharacter_cocycle(D4, D4_COORDS, form)
    T = build_twist(H, chi)
    Hc = twist_product(H, T)
    assert verify_hopf(Hc).overall
    # Phi = S^-1 S_chi whenever kappa o S = kappa
    if np.abs(T.kappa @ H.antipode - T.kappa).max() < 1e-12:
        assert np.abs(T.phi_map - H.antipode_inverse @ twisted_antipode(H, T)).max() < 1e-12
    pos = twist_positivity(H, T)
    assert pos.selfadjoint_residual < 1e-9
    assert pos.agree
    # these bicharacters keep the star even when chi is not a *-cocycle
    assert Hc.star is not None
    assert bool(Hc.notes) == (star_cocycle_residual(H, chi) > 1e-9)
    assert pos.identity_residual < 1e-9


def test_coboundary_twist_can_break_the_star():
    H = function_algebra(D4)
    mu = H.counit.astype(complex)
    mu[1] += 0.3j
    mu[3] -= 0.3j
    mu_inv = functional_inverse(mu, H)
    D = H.comult
    chi = np.einsum("xab,ycd,a,c,bdk,k->xy", D, D, mu, mu, H.mult, mu_inv)
    assert cocycle_residual(H, chi) < 1e-12
    T = build_twist(H, chi)
    Hc = twist_product(H, T)
    assert Hc.star is None and Hc.notes
    with pytest.raises(StarCompatFailed):
        twist_product(H, T, strict_star=True)
    pos = twist_positivity(H, T)
    # Phi is still positive, but without a star H_chi is not a CQG
    assert pos.min_eigenvalue > 0.5 and not pos.cqg and pos.agree


def test_nonabelian_twist_changes_product():
    H = function_algebra(D4)
    T = build_twist(H, bicharacter_cocycle(D4, D4_COORDS, [[1, 0], [0, 1]]))
    assert np.abs(twisted_product(H, T) - H.mult).max() > 0.1
