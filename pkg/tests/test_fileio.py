import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cqgkit import fileio
from cqgkit.algebras import group_algebra
from cqgkit.constructions.dual import structural_distance
from cqgkit.errors import InputError
from cqgkit.groups import build_group_bismash, cyclic_group, generate_example, symmetric_group
from cqgkit.numeric import RootOfUnity


def _bismash(which="6.15", n=2, k=1, l=1):
    P, C = generate_example(which, n, RootOfUnity(k, n), RootOfUnity(l, n))
    return P, C, build_group_bismash(P, C)


# ---------------------------------------------------------------- scalars

def test_parse_scalar_forms():
    assert fileio.parse_scalar(2) == 2
    assert fileio.parse_scalar([1.5, -2]) == complex(1.5, -2)
    assert abs(fileio.parse_scalar({"root": [1, 4]}) - 1j) < 1e-15
    for bad in [[1], [1, 2, 3], "1", True, {"root": [1, 0]}, {"root": [1.5, 2]},
                {"rot": [1, 2]}, float("nan"), float("inf")]:
        with pytest.raises(InputError):
            fileio.parse_scalar(bad)


@given(st.integers(-50, 50), st.integers(3, 60))
def test_roots_round_trip(k, m):
    z = RootOfUnity(k, m).value
    enc = fileio.encode_scalar(z)
    if z.imag == 0:
        assert isinstance(enc, list)
    else:
        assert isinstance(enc, dict)
        assert fileio.parse_scalar(enc) == z


def test_non_roots_written_as_pairs():
    assert fileio.encode_scalar(0.5) == [0.5, 0.0]
    assert fileio.encode_scalar(-0.0) == [0.0, 0.0]
    assert isinstance(fileio.encode_scalar(np.exp(1j)), list)
    with pytest.raises(InputError):
        fileio.encode_scalar(complex(np.nan, 0))


# ---------------------------------------------------------------- round trips

@pytest.mark.parametrize("make", [lambda: _bismash()[2], lambda: _bismash("6.16", 3, 1, 2)[2],
                                  lambda: group_algebra(symmetric_group(3))])
def test_hopf_round_trip_byte_stable(make):
    H = make()
    text = fileio.write_hopf(H)
    H2 = fileio.hopf_from_dict(fileio.loads(text))
    assert fileio.write_hopf(H2) == text
    assert structural_distance(H, H2) < 1e-15
    assert np.allclose(H2.star.matrix, H.star.matrix)


def test_hopf_file_on_disk(tmp_path):
    H = _bismash("6.16", 2, 1, 1)[2]
    path = tmp_path / "h.json"
    text = fileio.write_hopf(H, path)
    assert path.read_text() == text
    assert fileio.write_hopf(fileio.read_hopf(path)) == text


def test_roots_appear_in_bismash_file():
    H = _bismash("6.16", 3, 1, 2)[2]
    assert '{"root": [' in fileio.write_hopf(H)


def test_pair_round_trip(tmp_path):
    P, C, _ = _bismash("6.16", 3, 1, 2)
    path = tmp_path / "p.json"
    text = fileio.write_pair(P, C, path)
    P2, C2 = fileio.read_pair(path)
    assert np.array_equal(P2.left, P.left) and np.array_equal(P2.right, P.right)
    for a, b in [(C.sigma, C2.sigma), (C.tau, C2.tau), (C.alpha, C2.alpha)]:
        assert np.abs(a - b).max() < 1e-15
    assert fileio.write_pair(P2, C2) == text


def test_pair_without_cocycles_means_trivial():
    P, C, _ = _bismash()
    P2, C2 = fileio.pair_from_dict(fileio.pair_to_dict(P))
    assert np.all(C2.sigma == 1) and np.all(C2.tau == 1)


def test_group_round_trip_and_labels():
    G = symmetric_group(3)
    text = fileio.write_group(G)
    assert fileio.write_group(fileio.group_from_dict(fileio.loads(text))) == text
    d = {"labels": ["e", "a"], "mult": [["e", "a"], ["a", "e"]]}
    G2 = fileio.group_from_dict(d)
    assert G2.order == 2 and G2.table[1, 1] == 0


def test_cocycle_round_trip():
    chi = np.array([[1, 1], [1, -1]], complex)
    chi[1, 1] = 1j
    text = fileio.write_cocycle(chi)
    assert np.array_equal(fileio.cocycle_from_dict(fileio.loads(text)), chi)
    assert fileio.write_cocycle(fileio.cocycle_from_dict(fileio.loads(text))) == text


def test_missing_antipode_is_solved():
    H = group_algebra(cyclic_group(4))
    d = fileio.hopf_to_dict(H)
    del d["antipode"]
    H2 = fileio.hopf_from_dict(d)
    assert np.allclose(H2.antipode, H.antipode)


# ---------------------------------------------------------------- rejection

def _cc2_dict():
    return fileio.hopf_to_dict(group_algebra(cyclic_group(2)))


def test_malformed_json_rejected():
    for text in ["{", "[1, 2]", '{"dim": NaN}', '{"dim": Infinity}', '{"dim": -Infinity}']:
        with pytest.raises(InputError):
            fileio.hopf_from_dict(fileio.loads(text))


def test_missing_file_rejected(tmp_path):
    with pytest.raises(InputError):
        fileio.read_hopf(tmp_path / "nope.json")


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("mult"),
    lambda d: d.update(dim=0),
    lambda d: d.update(dim="2"),
    lambda d: d.update(unit=[[1, 0]]),
    lambda d: d.update(antipode=[[1, 0]] * 3),
    lambda d: d["mult"].append([0, 0, 2, 1.0, 0.0]),
    lambda d: d["mult"].append([0, 0, 0, 1.0, 0.0]),
    lambda d: d["mult"].append([0, 0, 1, "x"]),
    lambda d: d["mult"].append([0, 0]),
    lambda d: d.update(labels=["1"]),
    lambda d: d.update(name=3),
    lambda d: d.update(antipode=[[0, 0]] * 4),
    lambda d: d.update(star=[[1, 0]]),
], ids=["missing", "dim0", "dim-str", "unit-short", "antipode-short", "out-of-range",
        "duplicate", "bad-scalar", "short-entry", "labels", "name", "singular", "star-shape"])
def test_bad_hopf_dicts_rejected(mutate):
    d = _cc2_dict()
    mutate(d)
    with pytest.raises(InputError):
        fileio.hopf_from_dict(d)


def test_bad_groups_rejected():
    for d in [{"mult": [[0, 1], [1]]},
              {"mult": [[0, 1], [1, 2]]},
              {"mult": [[0, 1], [1, 1]]},
              {"labels": ["e", "a"], "mult": [["e", "a"], ["a", "b"]]},
              {"order": 2, "mult": [[0, 1, 2], [1, 0, 2]]},
              {"mult": [[0, 1], [1, 0]], "order": True}]:
        with pytest.raises(InputError):
            fileio.group_from_dict(d)


def test_bad_pairs_rejected():
    P, C, _ = _bismash()
    base = fileio.pair_to_dict(P, C)
    for key, value in [("left_action", [[0, 1]]), ("right_action", [[0, 9]] * 4),
                       ("sigma", [[[1, 1]]]), ("alpha", "x"), ("F", None)]:
        d = json.loads(json.dumps(base))
        d[key] = value
        with pytest.raises(InputError):
            fileio.pair_from_dict(d)


def test_bad_cocycles_rejected():
    good = fileio.cocycle_to_dict(np.eye(2))
    with pytest.raises(InputError):
        fileio.cocycle_from_dict(good, dim=3)
    for d in [{"dim": 2, "chi": [[0, 0, 1.0, 0.0], [0, 0, 1.0, 0.0]]},
              {"dim": 2, "chi": [[0, 2, 1.0, 0.0]]},
              {"dim": 2, "chi": [[0, 0]]},
              {"dim": 2, "chi": {"a": 1}},
              {"chi": []}]:
        with pytest.raises(InputError):
            fileio.cocycle_from_dict(d)
