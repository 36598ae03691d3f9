import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cqgkit.constructions.linked import verify_cocycle_linked_pair
from cqgkit.groups import (encode_as_linked_pair, rescale_cocycles, trivial_alpha_conditions,
                           verify_alpha)
from mutants import (EXAMPLES, FIELDS, bialgebra_verdicts, example, lift_verdicts,
                     phase_mutants, star_verdicts)

CASES = list(itertools.product(EXAMPLES, FIELDS))
IDS = [f"{ex[0]}-n{ex[1]}-{f}" for ex, f in CASES]


@pytest.mark.parametrize("ex,field", CASES, ids=IDS)
def test_bialgebra_verdict_matches_sigma_tau(ex, field):
    P, C = example(*ex)
    for idx, M in phase_mutants(P, C, field, 20, seed=11):
        direct, checker = bialgebra_verdicts(P, M)
        assert direct == checker, idx


@pytest.mark.parametrize("ex,field", CASES, ids=IDS)
def test_star_and_cqg_verdicts_match_alpha_conditions(ex, field):
    P, C = example(*ex)
    seen_fail = False
    for idx, M in phase_mutants(P, C, field, 20, seed=12):
        (ds, cs), (dc, cc) = star_verdicts(P, M)
        assert ds == cs and dc == cc, idx
        seen_fail |= not cs
    # every field has mutants that the checker rejects
    assert seen_fail


@pytest.mark.parametrize("ex,field", [c for c in CASES if c[1] != "alpha"],
                         ids=[i for i, c in zip(IDS, CASES) if c[1] != "alpha"])
def test_cocycle_mutants_leave_the_linked_pair_hypothesis(ex, field):
    # a phase on one entry of sigma or tau breaks the linked-pair axioms, so the two
    # star-lift criteria are compared outside their common hypothesis
    P, C = example(*ex)
    for idx, M in phase_mutants(P, C, field, 20, seed=13):
        assert not verify_cocycle_linked_pair(encode_as_linked_pair(P, M)).overall, idx


@pytest.mark.parametrize("ex", EXAMPLES, ids=[e[0] for e in EXAMPLES])
def test_alpha_mutants_keep_the_lift_verdicts_equal(ex):
    P, C = example(*ex)
    for idx, M in phase_mutants(P, C, "alpha", 20, seed=14):
        lift, andr = lift_verdicts(P, M)
        assert lift == andr, idx


# ---------------------------------------------------------------- rescaled cocycles

def _nu(P, kind, rng):
    nu = np.ones((P.G.order, P.F.order), complex)
    for g, f in itertools.product(range(P.G.order), range(P.F.order)):
        if g == P.G.identity or f == P.F.identity:
            continue
        if kind == "phase":
            nu[g, f] = np.exp(2j * np.pi * rng.integers(0, 4) / 4)
        elif kind == "modulus":
            nu[g, f] = rng.choice([1, 1, 2, 0.5])
        else:
            nu[g, f] = rng.choice([1, -1])
    return nu


@given(st.sampled_from(EXAMPLES), st.sampled_from(["phase", "modulus", "sign"]),
       st.integers(0, 10 ** 6))
def test_rescaled_data_verdicts_agree(ex, kind, seed):
    # rescaling keeps the data inside every hypothesis, so all three comparisons apply
    P, C = example(*ex)
    M = rescale_cocycles(P, C, _nu(P, kind, np.random.default_rng(seed)))
    d, c = bialgebra_verdicts(P, M)
    assert d and c
    (ds, cs), (dc, cc) = star_verdicts(P, M)
    assert ds == cs and dc == cc
    lift, andr = lift_verdicts(P, M)
    assert lift == andr


@pytest.mark.parametrize("ex", EXAMPLES, ids=[e[0] for e in EXAMPLES])
def test_rescaled_family_contains_rejections(ex):
    P, C = example(*ex)
    rng = np.random.default_rng(5)
    verdicts = set()
    for kind in ["phase", "modulus", "sign"] * 3:
        M = rescale_cocycles(P, C, _nu(P, kind, rng))
        verdicts.add(star_verdicts(P, M)[0][1])
        verdicts.add(lift_verdicts(P, M))
    assert False in {v for v in verdicts if isinstance(v, bool)}
    assert (False, False) in verdicts


# ---------------------------------------------------------------- trivial alpha

@pytest.mark.parametrize("ex,field", [c for c in CASES if c[1] != "alpha"],
                         ids=[i for i, c in zip(IDS, CASES) if c[1] != "alpha"])
def test_trivial_alpha_shortcut(ex, field):
    P, C = example(*ex)
    C = C.copy()
    C.alpha = np.ones_like(C.alpha)
    for idx, M in phase_mutants(P, C, field, 20, seed=15):
        assert verify_alpha(P, M).overall == trivial_alpha_conditions(P, M).overall, idx
