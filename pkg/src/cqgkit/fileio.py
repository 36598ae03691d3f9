"""JSON formats for Hopf algebras, groups, matched pairs of groups with cocycle
tables, and twisting cocycles.

Scalars are written as [re, im] pairs, or as {"root": [k, m]} for exp(2 pi i k/m)
when the value is exactly such a root of unity. Parsing also accepts bare numbers.
All writers are deterministic: fixed key order and 17 significant digits.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from pathlib import Path
from typing import Optional, Tuple

import numpy as np

from .errors import InputError
from .groups import FiniteGroup, GroupCocycleData, MatchedPairGroups
from .hopf import FiniteBialgebra, FiniteHopfAlgebra, StarStructure, solve_antipode
from .numeric import PRUNE_TOL, RootOfUnity
from .report import _fmt_float

ROOT_MAX_DENOMINATOR = 720
ROOT_MATCH_TOL = 1e-15


# ---------------------------------------------------------------- scalars

def _finite(x, what) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise InputError(f"{what}: expected a number, got {x!r}")
    x = float(x)
    if not math.isfinite(x):
        raise InputError(f"{what}: non-finite number")
    return x


def parse_scalar(x, what: str = "scalar") -> complex:
    """A number, an [re, im] pair or {"root": [k, m]}."""
    if isinstance(x, dict):
        if set(x) != {"root"}:
            raise InputError(f"{what}: unknown scalar object {x!r}")
        r = x["root"]
        if (not isinstance(r, list) or len(r) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in r)):
            raise InputError(f"{what}: root must be [num, den] integers")
        if r[1] == 0:
            raise InputError(f"{what}: root denominator is zero")
        return RootOfUnity(r[0], r[1]).value
    if isinstance(x, list):
        if len(x) != 2:
            raise InputError(f"{what}: complex pair must have two entries")
        return complex(_finite(x[0], what), _finite(x[1], what))
    return complex(_finite(x, what), 0.0)


def as_root(z: complex) -> Optional[RootOfUnity]:
    """The root of unity equal to z (to rounding), for non-real z on the unit circle."""
    if z.imag == 0 or abs(abs(z) - 1) > ROOT_MATCH_TOL:
        return None
    q = Fraction(math.atan2(z.imag, z.real) / (2 * math.pi)).limit_denominator(ROOT_MAX_DENOMINATOR)
    r = RootOfUnity(q.numerator, q.denominator)
    return r if abs(r.value - z) <= ROOT_MATCH_TOL else None


def encode_scalar(z) -> object:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InputError("cannot write a non-finite scalar")
    r = as_root(z)
    if r is not None:
        return {"root": [r.numerator, r.denominator]}
    # normalise negative zero so output is byte-stable
    return [z.real + 0.0, z.imag + 0.0]


# ---------------------------------------------------------------- text

def _inline(obj) -> str:
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if obj is None:
        return "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_inline(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_inline(v) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj: dict) -> str:
    """Top-level keys one per line; lists of lists or objects one item per line."""
    lines = ["{"]
    items = list(obj.items())
    for n, (k, v) in enumerate(items):
        comma = "," if n < len(items) - 1 else ""
        if isinstance(v, list) and v and all(isinstance(e, (list, dict)) for e in v):
            lines.append(f"  {json.dumps(k)}: [")
            for m, e in enumerate(v):
                lines.append("    " + _inline(e) + ("," if m < len(v) - 1 else ""))
            lines.append("  ]" + comma)
        elif isinstance(v, dict):
            lines.append(f"  {json.dumps(k)}: {_inline(v)}{comma}")
        else:
            lines.append(f"  {json.dumps(k)}: {_inline(v)}{comma}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _reject_constant(name):
    raise InputError(f"non-finite number {name} in input")


def loads(text: str) -> dict:
    try:
        obj = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise InputError("top-level JSON value must be an object")
    return obj


def read_json(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return loads(text)


def write_text(text: str, path) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from None


# ---------------------------------------------------------------- helpers

def _require(obj: dict, key: str, what: str):
    if key not in obj:
        raise InputError(f"{what}: missing field {key!r}")
    return obj[key]


def _int(x, what, lo=None, hi=None) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{what}: expected an integer, got {x!r}")
    if (lo is not None and x < lo) or (hi is not None and x >= hi):
        raise InputError(f"{what}: index {x} out of range [{lo}, {hi})")
    return x


def _labels(obj, n, what):
    labels = obj.get("labels")
    if labels is None:
        return None
    if not isinstance(labels, list) or len(labels) != n or not all(isinstance(s, str) for s in labels):
        raise InputError(f"{what}: labels must be a list of {n} strings")
    return list(labels)


def _sparse3(entries, n, what) -> np.ndarray:
    if not isinstance(entries, list):
        raise InputError(f"{what}: expected a list of entries")
    out = np.zeros((n, n, n), complex)
    seen = set()
    for e in entries:
        if not isinstance(e, list) or len(e) not in (4, 5):
            raise InputError(f"{what}: entry {e!r} must be [i, j, k, re, im] or [i, j, k, scalar]")
        key = tuple(_int(v, what, 0, n) for v in e[:3])
        if key in seen:
            raise InputError(f"{what}: duplicate entry for {key}")
        seen.add(key)
        out[key] = parse_scalar(e[3:] if len(e) == 5 else e[3], what)
    return out


def _encode_sparse3(T) -> list:
    out = []
    for idx in zip(*np.nonzero(np.abs(T) > PRUNE_TOL)):
        s = encode_scalar(T[idx])
        key = [int(i) for i in idx]
        out.append(key + s if isinstance(s, list) else key + [s])
    return out


def _dense_vector(x, n, what) -> np.ndarray:
    if not isinstance(x, list) or len(x) != n:
        raise InputError(f"{what}: expected {n} scalars")
    return np.array([parse_scalar(v, what) for v in x], complex)


def _dense_matrix(x, n, what) -> np.ndarray:
    """Row-major: either a flat list of n*n scalars or a list of n rows."""
    if not isinstance(x, list):
        raise InputError(f"{what}: expected a list")
    flat = x
    if len(x) == n and (n > 1 or (isinstance(x[0], list) and len(x[0]) == 1)):
        if not all(isinstance(r, list) and len(r) == n for r in x):
            raise InputError(f"{what}: expected {n} rows of {n} scalars")
        flat = [v for r in x for v in r]
    if len(flat) != n * n:
        raise InputError(f"{what}: expected {n * n} scalars in row-major order")
    return np.array([parse_scalar(v, what) for v in flat], complex).reshape(n, n)


def _encode_dense(a) -> list:
    return [encode_scalar(v) for v in np.asarray(a).reshape(-1)]


# ---------------------------------------------------------------- Hopf algebras

def hopf_to_dict(H: FiniteHopfAlgebra) -> dict:
    d = {"dim": H.dim, "name": H.name or "", "labels": list(H.basis_labels),
         "mult": _encode_sparse3(H.mult), "comult": _encode_sparse3(H.comult),
         "unit": _encode_dense(H.unit), "counit": _encode_dense(H.counit),
         "antipode": _encode_dense(H.antipode)}
    if H.star is not None:
        d["star"] = _encode_dense(H.star.matrix)
    return d


def hopf_from_dict(d: dict) -> FiniteHopfAlgebra:
    what = "Hopf file"
    n = _int(_require(d, "dim", what), f"{what}: dim", 1)
    labels = _labels(d, n, what)
    mult = _sparse3(_require(d, "mult", what), n, f"{what}: mult")
    comult = _sparse3(_require(d, "comult", what), n, f"{what}: comult")
    unit = _dense_vector(_require(d, "unit", what), n, f"{what}: unit")
    counit = _dense_vector(_require(d, "counit", what), n, f"{what}: counit")
    name = d.get("name", "")
    if not isinstance(name, str):
        raise InputError(f"{what}: name must be a string")
    star = None
    if d.get("star") is not None:
        star = StarStructure(_dense_matrix(d["star"], n, f"{what}: star"))
    if d.get("antipode") is None:
        H = solve_antipode(FiniteBialgebra(mult, unit, comult, counit, labels, name))
        return H.with_star(star)
    S = _dense_matrix(d["antipode"], n, f"{what}: antipode")
    if np.linalg.matrix_rank(S) < n:
        raise InputError(f"{what}: antipode is singular")
    return FiniteHopfAlgebra(mult, unit, comult, counit, labels, name, antipode=S, star=star)


def write_hopf(H: FiniteHopfAlgebra, path=None) -> str:
    text = dumps(hopf_to_dict(H))
    if path is not None:
        write_text(text, path)
    return text


def read_hopf(path) -> FiniteHopfAlgebra:
    return hopf_from_dict(read_json(path))


# ---------------------------------------------------------------- groups

def group_to_dict(G: FiniteGroup) -> dict:
    return {"name": G.name, "order": G.order, "labels": list(G.labels),
            "mult": [[int(v) for v in row] for row in G.table]}


def _index_table(x, shape, hi, labels, what) -> np.ndarray:
    """Nested table of indices (or labels) with the given shape."""
    arr = np.zeros(shape, int)

    def walk(node, prefix):
        depth = len(prefix)
        if depth == len(shape):
            if isinstance(node, str):
                if labels is None or node not in labels:
                    raise InputError(f"{what}: unknown label {node!r}")
                arr[prefix] = labels.index(node)
            else:
                arr[prefix] = _int(node, what, 0, hi)
            return
        if not isinstance(node, list) or len(node) != shape[depth]:
            raise InputError(f"{what}: table is not total (expected shape {shape})")
        for i, sub in enumerate(node):
            walk(sub, prefix + (i,))

    walk(x, ())
    return arr


def group_from_dict(d: dict, what: str = "group") -> FiniteGroup:
    if not isinstance(d, dict):
        raise InputError(f"{what}: expected an object")
    table = _require(d, "mult", what)
    n = d.get("order", len(table) if isinstance(table, list) else None)
    n = _int(n, f"{what}: order", 1)
    labels = _labels(d, n, what) or [f"g{i}" for i in range(n)]
    T = _index_table(table, (n, n), n, labels, f"{what}: mult")
    name = d.get("name", "")
    if not isinstance(name, str):
        raise InputError(f"{what}: name must be a string")
    G = FiniteGroup(labels, T, name)
    rep = G.verify()
    if not rep.overall:
        raise InputError(f"{what}: not a group ({', '.join(rep.failed_ids())})")
    return G


def read_group(path) -> FiniteGroup:
    return group_from_dict(read_json(path))


def write_group(G: FiniteGroup, path=None) -> str:
    text = dumps(group_to_dict(G))
    if path is not None:
        write_text(text, path)
    return text


# ---------------------------------------------------------------- matched pairs of groups

def _scalar_table(x, shape, what) -> np.ndarray:
    out = np.zeros(shape, complex)

    def walk(node, prefix):
        depth = len(prefix)
        if depth == len(shape):
            out[prefix] = parse_scalar(node, what)
            return
        if not isinstance(node, list) or len(node) != shape[depth]:
            raise InputError(f"{what}: table is not total (expected shape {shape})")
        for i, sub in enumerate(node):
            walk(sub, prefix + (i,))

    walk(x, ())
    return out


def _encode_table(a) -> list:
    a = np.asarray(a)
    if a.ndim == 0:
        return encode_scalar(a[()])
    return [_encode_table(sub) for sub in a]


def pair_to_dict(P: MatchedPairGroups, C: Optional[GroupCocycleData] = None) -> dict:
    d = {"F": group_to_dict(P.F), "G": group_to_dict(P.G),
         "left_action": [[int(v) for v in row] for row in P.left],
         "right_action": [[int(v) for v in row] for row in P.right]}
    if C is not None:
        d["sigma"] = _encode_table(C.sigma)
        d["tau"] = _encode_table(C.tau)
        if C.alpha is not None:
            d["alpha"] = _encode_table(C.alpha)
    return d


def pair_from_dict(d: dict) -> Tuple[MatchedPairGroups, GroupCocycleData]:
    """left_action[g][f] = g > f in F, right_action[g][f] = g < f in G;
    sigma[g][f][f'], tau[g][g'][f], alpha[f][g]; absent sigma/tau mean 1."""
    what = "pair file"
    F = group_from_dict(_require(d, "F", what), f"{what}: F")
    G = group_from_dict(_require(d, "G", what), f"{what}: G")
    nF, nG = F.order, G.order
    L = _index_table(_require(d, "left_action", what), (nG, nF), nF, F.labels,
                     f"{what}: left_action")
    R = _index_table(_require(d, "right_action", what), (nG, nF), nG, G.labels,
                     f"{what}: right_action")
    P = MatchedPairGroups(F, G, L, R)
    sigma = tau = alpha = None
    if d.get("sigma") is not None:
        sigma = _scalar_table(d["sigma"], (nG, nF, nF), f"{what}: sigma")
    if d.get("tau") is not None:
        tau = _scalar_table(d["tau"], (nG, nG, nF), f"{what}: tau")
    if d.get("alpha") is not None:
        alpha = _scalar_table(d["alpha"], (nF, nG), f"{what}: alpha")
    return P, GroupCocycleData.build(P, sigma, tau, alpha)


def read_pair(path) -> Tuple[MatchedPairGroups, GroupCocycleData]:
    return pair_from_dict(read_json(path))


def write_pair(P: MatchedPairGroups, C: Optional[GroupCocycleData] = None, path=None) -> str:
    text = dumps(pair_to_dict(P, C))
    if path is not None:
        write_text(text, path)
    return text


# ---------------------------------------------------------------- twisting cocycles

def cocycle_to_dict(chi) -> dict:
    chi = np.asarray(chi, complex)
    entries = []
    for x, y in zip(*np.nonzero(np.abs(chi) > PRUNE_TOL)):
        s = encode_scalar(chi[x, y])
        entries.append([int(x), int(y)] + (s if isinstance(s, list) else [s]))
    return {"dim": chi.shape[0], "chi": entries}


def cocycle_from_dict(d: dict, dim: Optional[int] = None) -> np.ndarray:
    """{"dim": n, "chi": [[x, y, re, im] | [x, y, scalar], ...]}, chi[x, y] = chi(e_x, e_y)."""
    what = "cocycle file"
    n = _int(_require(d, "dim", what), f"{what}: dim", 1)
    if dim is not None and n != dim:
        raise InputError(f"{what}: dim {n} does not match the Hopf algebra (dim {dim})")
    entries = _require(d, "chi", what)
    if not isinstance(entries, list):
        raise InputError(f"{what}: chi must be a list of entries")
    chi = np.zeros((n, n), complex)
    seen = set()
    for e in entries:
        if not isinstance(e, list) or len(e) not in (3, 4):
            raise InputError(f"{what}: entry {e!r} must be [x, y, re, im] or [x, y, scalar]")
        key = (_int(e[0], what, 0, n), _int(e[1], what, 0, n))
        if key in seen:
            raise InputError(f"{what}: duplicate entry for {key}")
        seen.add(key)
        chi[key] = parse_scalar(e[2:] if len(e) == 4 else e[2], what)
    return chi


def read_cocycle(path, dim: Optional[int] = None) -> np.ndarray:
    return cocycle_from_dict(read_json(path), dim)


def write_cocycle(chi, path=None) -> str:
    text = dumps(cocycle_to_dict(chi))
    if path is not None:
        write_text(text, path)
    return text
