"""Scenario documents: JSON text describing groups, maps, actions and one structure.

Canonical form is sorted keys, two-space indent, one matrix row per line,
so that serialize(parse(text)) == text for canonical text.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from .groups import FiniteGroup, GroupError, group_from_table

FORMAT_VERSION = "1"
DEFAULT_MAX_ORDER = 4096
KINDS = ("simplicial", "xmod", "2xmod", "3xmod", "square", "cube")


class ScenarioError(GroupError):
    """Input error with a document path such as groups.C2.mul[1]."""

    def __init__(self, kind: str, path: str, message: str, line: Optional[int] = None):
        where = f"{path}" + (f" (line {line})" if line else "")
        super().__init__(kind, f"{where}: {message}")
        self.path = path
        self.line = line


def max_order_default() -> int:
    v = os.environ.get("HDGROUP_MAX_ORDER")
    return int(v) if v else DEFAULT_MAX_ORDER


@dataclass
class Scenario:
    id: str
    groups: Dict[str, FiniteGroup]
    maps: Dict[str, dict]          # name -> {"from", "to", "image": ndarray}
    actions: Dict[str, dict]       # name -> {"actor", "target", "table": ndarray}
    structure: Dict[str, Any]      # kind plus references and tables (ndarrays)
    format_version: str = FORMAT_VERSION

    @property
    def kind(self) -> str:
        return self.structure["kind"]

    def to_doc(self) -> dict:
        groups = {}
        for nm, G in self.groups.items():
            groups[nm] = {"order": G.order, "identity": G.identity, "labels": G.labels,
                          "mul": G.table.tolist()}
        maps = {nm: {"from": m["from"], "to": m["to"], "image": _plain(m["image"])}
                for nm, m in self.maps.items()}
        acts = {nm: {"actor": a["actor"], "target": a["target"], "table": _plain(a["table"])}
                for nm, a in self.actions.items()}
        return {"format_version": self.format_version, "id": self.id, "groups": groups,
                "maps": maps, "actions": acts, "structure": _plain(self.structure)}


def _plain(x):
    if isinstance(x, np.ndarray):
        return x.tolist()
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, np.integer):
        return int(x)
    return x


# ---------------------------------------------------------------- canonical text

def _enc(x, ind: int) -> str:
    pad = "  " * ind
    if isinstance(x, dict):
        if not x:
            return "{}"
        items = [f'{pad}  {json.dumps(k)}: {_enc(x[k], ind + 1)}' for k in sorted(x)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(x, list):
        if not x:
            return "[]"
        if all(not isinstance(v, (dict, list)) for v in x):
            return "[" + ", ".join(json.dumps(v, ensure_ascii=False) for v in x) + "]"
        items = [pad + "  " + _enc(v, ind + 1) for v in x]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(x, ensure_ascii=False)


def dumps(doc: dict) -> str:
    return _enc(_plain(doc), 0) + "\n"


def serialize(S: Scenario) -> str:
    return dumps(S.to_doc())


# ---------------------------------------------------------------- parsing

def _need(d, key, path, typ=None):
    if not isinstance(d, dict) or key not in d:
        raise ScenarioError("SyntaxError", path, f"missing key {key!r}")
    v = d[key]
    if typ is not None and not isinstance(v, typ):
        raise ScenarioError("SyntaxError", f"{path}.{key}", f"expected {typ.__name__}")
    return v


def _int_vector(v, n, bound, path):
    if not isinstance(v, list) or len(v) != n:
        got = len(v) if isinstance(v, list) else type(v).__name__
        raise ScenarioError("BadTableShape", path, f"expected {n} entries, got {got}")
    for i, x in enumerate(v):
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < bound:
            raise ScenarioError("BadTableShape", f"{path}[{i}]", f"entry {x!r} not in 0..{bound - 1}")
    return np.array(v, dtype=np.int64)


def _int_matrix(v, rows, cols, bound, path):
    if not isinstance(v, list) or len(v) != rows:
        got = len(v) if isinstance(v, list) else type(v).__name__
        raise ScenarioError("BadTableShape", path, f"expected {rows} rows, got {got}")
    out = np.empty((rows, cols), dtype=np.int64)
    for i, row in enumerate(v):
        out[i] = _int_vector(row, cols, bound, f"{path}[{i}]")
    return out


def _line_of(text: str, needle: str) -> Optional[int]:
    i = text.find(needle)
    return None if i < 0 else text.count("\n", 0, i) + 1


def parse_scenario(text: str, max_order: Optional[int] = None) -> Scenario:
    """Validated Scenario, or ScenarioError naming the first bad path."""
    cap = max_order_default() if max_order is None else max_order
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioError("SyntaxError", "$", e.msg, e.lineno) from None
    if not isinstance(doc, dict):
        raise ScenarioError("SyntaxError", "$", "top level must be an object")
    ver = _need(doc, "format_version", "$", str)
    if ver != FORMAT_VERSION:
        raise ScenarioError("SyntaxError", "format_version", f"unsupported version {ver!r}")
    sid = doc.get("id", "")
    groups = {}
    for nm, g in _need(doc, "groups", "$", dict).items():
        path = f"groups.{nm}"
        order = _need(g, "order", path, int)
        if order > cap:
            raise ScenarioError("OrderCapExceeded", f"{path}.order", f"{order} > max order {cap}")
        mul = _int_matrix(_need(g, "mul", path), order, order, order, f"{path}.mul")
        labels = g.get("labels")
        ident = _need(g, "identity", path, int)
        try:
            groups[nm] = group_from_table(labels, ident, mul, nm)
        except GroupError as e:
            kind = "BadTableShape" if e.kind == "BadTableShape" else "GroupAxiomFailure"
            raise ScenarioError(kind, path, str(e), _line_of(text, json.dumps(nm))) from None

    def gref(name, path):
        if not isinstance(name, str) or name not in groups:
            raise ScenarioError("UnresolvedReference", path, f"no group {name!r}")
        return groups[name]

    maps = {}
    for nm, m in doc.get("maps", {}).items():
        path = f"maps.{nm}"
        A = gref(_need(m, "from", path), f"{path}.from")
        B = gref(_need(m, "to", path), f"{path}.to")
        img = _int_vector(_need(m, "image", path), A.order, B.order, f"{path}.image")
        maps[nm] = {"from": m["from"], "to": m["to"], "image": img}
    acts = {}
    for nm, a in doc.get("actions", {}).items():
        path = f"actions.{nm}"
        A = gref(_need(a, "actor", path), f"{path}.actor")
        B = gref(_need(a, "target", path), f"{path}.target")
        tab = _int_matrix(_need(a, "table", path), A.order, B.order, B.order, f"{path}.table")
        acts[nm] = {"actor": a["actor"], "target": a["target"], "table": tab}
    st = _need(doc, "structure", "$", dict)
    kind = _need(st, "kind", "structure", str)
    if kind not in KINDS:
        raise ScenarioError("SyntaxError", "structure.kind", f"unknown kind {kind!r}")
    S = Scenario(sid, groups, maps, acts, {}, ver)
    S.structure = _parse_structure(S, st)
    return S


def _mref(S, name, src, dst, path):
    if not isinstance(name, str) or name not in S.maps:
        raise ScenarioError("UnresolvedReference", path, f"no map {name!r}")
    m = S.maps[name]
    if (src is not None and m["from"] != src) or (dst is not None and m["to"] != dst):
        raise ScenarioError("BadTableShape", path,
                            f"map {name} is {m['from']} -> {m['to']}, expected {src} -> {dst}")
    return name


def _aref(S, name, actor, target, path):
    if not isinstance(name, str) or name not in S.actions:
        raise ScenarioError("UnresolvedReference", path, f"no action {name!r}")
    a = S.actions[name]
    if a["actor"] != actor or a["target"] != target:
        raise ScenarioError("BadTableShape", path,
                            f"action {name} is {a['actor']} on {a['target']}, "
                            f"expected {actor} on {target}")
    return name


def _gname(S, st, key, path):
    v = _need(st, key, path, str)
    if v not in S.groups:
        raise ScenarioError("UnresolvedReference", f"{path}.{key}", f"no group {v!r}")
    return v


def _table(S, v, rg, cg, tg, path):
    G = S.groups
    return _int_matrix(v, G[rg].order, G[cg].order, G[tg].order, path)


def _parse_structure(S: Scenario, st: dict) -> dict:
    from .cubes import CORNERS, EDGES, H_SHAPES
    from .structures import ACTION_NAMES, LIFT_NAMES, LIFT_SHAPES
    kind, p = st["kind"], "structure"
    out: Dict[str, Any] = {"kind": kind}
    if kind == "xmod":
        M, P = _gname(S, st, "M", p), _gname(S, st, "P", p)
        out.update(M=M, P=P, d=_mref(S, _need(st, "d", p), M, P, f"{p}.d"),
                   act=_aref(S, _need(st, "act", p), P, M, f"{p}.act"))
    elif kind == "2xmod":
        L, M, N = (_gname(S, st, k, p) for k in "LMN")
        out.update(L=L, M=M, N=N, d2=_mref(S, _need(st, "d2", p), L, M, f"{p}.d2"),
                   d1=_mref(S, _need(st, "d1", p), M, N, f"{p}.d1"),
                   act_N_M=_aref(S, _need(st, "act_N_M", p), N, M, f"{p}.act_N_M"),
                   act_N_L=_aref(S, _need(st, "act_N_L", p), N, L, f"{p}.act_N_L"),
                   lift=_table(S, _need(st, "lift", p), M, M, L, f"{p}.lift"))
    elif kind == "3xmod":
        K, L, M, N = (_gname(S, st, k, p) for k in "KLMN")
        roles = {"K": K, "L": L, "M": M, "N": N}
        out.update(K=K, L=L, M=M, N=N, d3=_mref(S, _need(st, "d3", p), K, L, f"{p}.d3"),
                   d2=_mref(S, _need(st, "d2", p), L, M, f"{p}.d2"),
                   d1=_mref(S, _need(st, "d1", p), M, N, f"{p}.d1"))
        acts = st.get("actions", {})
        for nm in acts:
            if nm not in ACTION_NAMES:
                raise ScenarioError("SyntaxError", f"{p}.actions.{nm}", "unknown action name")
        out["actions"] = {nm: _aref(S, ref, roles[nm[0]], roles[nm[2]], f"{p}.actions.{nm}")
                          for nm, ref in acts.items()}
        lifts = st.get("lifts", {})
        out["lifts"] = {}
        for nm, tab in lifts.items():
            if nm not in LIFT_NAMES:
                raise ScenarioError("SyntaxError", f"{p}.lifts.{nm}", "unknown lifting name")
            a, b, t = LIFT_SHAPES[nm]
            out["lifts"][nm] = _table(S, tab, roles[a], roles[b], roles[t], f"{p}.lifts.{nm}")
    elif kind == "simplicial":
        levels = _need(st, "levels", p, list)
        for i, g in enumerate(levels):
            if g not in S.groups:
                raise ScenarioError("UnresolvedReference", f"{p}.levels[{i}]", f"no group {g!r}")
        k = len(levels) - 1
        faces = _need(st, "faces", p, list)
        degens = _need(st, "degens", p, list)
        if len(faces) != k or len(degens) != k:
            raise ScenarioError("BadTableShape", p, f"need {k} face and degeneracy lists")
        for n in range(1, k + 1):
            row = faces[n - 1]
            if not isinstance(row, list) or len(row) != n + 1:
                raise ScenarioError("BadTableShape", f"{p}.faces[{n - 1}]", f"need {n + 1} maps")
            for i, nm in enumerate(row):
                _mref(S, nm, levels[n], levels[n - 1], f"{p}.faces[{n - 1}][{i}]")
        for n in range(k):
            row = degens[n]
            if not isinstance(row, list) or len(row) != n + 1:
                raise ScenarioError("BadTableShape", f"{p}.degens[{n}]", f"need {n + 1} maps")
            for i, nm in enumerate(row):
                _mref(S, nm, levels[n], levels[n + 1], f"{p}.degens[{n}][{i}]")
        out.update(levels=list(levels), faces=[list(r) for r in faces],
                   degens=[list(r) for r in degens])
    elif kind == "square":
        L, M, N, P = (_gname(S, st, k, p) for k in "LMNP")
        out.update(L=L, M=M, N=N, P=P)
        for key, a, b in (("f", L, M), ("u", L, N), ("v", M, P), ("g", N, P)):
            out[key] = _mref(S, _need(st, key, p), a, b, f"{p}.{key}")
        for key, t in (("act_P_L", L), ("act_P_M", M), ("act_P_N", N)):
            out[key] = _aref(S, _need(st, key, p), P, t, f"{p}.{key}")
        out["h"] = _table(S, _need(st, "h", p), M, N, L, f"{p}.h")
    elif kind == "cube":
        corners = _need(st, "corners", p, dict)
        for c in CORNERS:
            if c not in corners or corners[c] not in S.groups:
                raise ScenarioError("UnresolvedReference", f"{p}.corners.{c}",
                                    f"no group {corners.get(c)!r}")
        out["corners"] = {c: corners[c] for c in CORNERS}
        edges = _need(st, "edges", p, dict)
        out["edges"] = {}
        for a, b in EDGES:
            key = f"{a}->{b}"
            out["edges"][key] = _mref(S, edges.get(key), corners[a], corners[b],
                                      f"{p}.edges.{key}")
        acts = _need(st, "actions", p, dict)
        out["actions"] = {c: _aref(S, acts.get(c), corners["S"], corners[c], f"{p}.actions.{c}")
                          for c in CORNERS}
        hs = _need(st, "h", p, dict)
        out["h"] = {}
        for nm, (a, b, t) in H_SHAPES.items():
            if nm not in hs:
                raise ScenarioError("SyntaxError", f"{p}.h", f"missing {nm}")
            out["h"][nm] = _table(S, hs[nm], corners[a], corners[b], corners[t], f"{p}.h.{nm}")
    return out


# ---------------------------------------------------------------- objects

def build(S: Scenario):
    """The structure object the scenario describes."""
    from .cubes import Crossed3Cube, CrossedSquare
    from .simplicial import TruncatedSimplicialGroup
    from .structures import CrossedModule, ThreeCrossedModule, TwoCrossedModule, from_components
    G, st = S.groups, S.structure
    img = lambda nm: S.maps[nm]["image"]
    tab = lambda nm: S.actions[nm]["table"]
    k = st["kind"]
    if k == "xmod":
        return CrossedModule(G[st["M"]], G[st["P"]], img(st["d"]), tab(st["act"]), S.id)
    if k == "2xmod":
        return TwoCrossedModule(G[st["L"]], G[st["M"]], G[st["N"]], img(st["d2"]), img(st["d1"]),
                                tab(st["act_N_M"]), tab(st["act_N_L"]), st["lift"], S.id)
    if k == "3xmod":
        return from_components(G[st["K"]], G[st["L"]], G[st["M"]], G[st["N"]],
                               img(st["d3"]), img(st["d2"]), img(st["d1"]),
                               {nm: tab(r) for nm, r in st["actions"].items()},
                               dict(st["lifts"]), name=S.id)
    if k == "simplicial":
        return TruncatedSimplicialGroup([G[g] for g in st["levels"]],
                                        [[img(m) for m in row] for row in st["faces"]],
                                        [[img(m) for m in row] for row in st["degens"]], S.id)
    if k == "square":
        return CrossedSquare(G[st["L"]], G[st["M"]], G[st["N"]], G[st["P"]],
                             img(st["f"]), img(st["u"]), img(st["v"]), img(st["g"]),
                             tab(st["act_P_L"]), tab(st["act_P_M"]), tab(st["act_P_N"]),
                             st["h"], S.id)
    if k == "cube":
        from .cubes import EDGES
        return Crossed3Cube({c: G[g] for c, g in st["corners"].items()},
                            {e: img(st["edges"][f"{e[0]}->{e[1]}"]) for e in EDGES},
                            {c: tab(r) for c, r in st["actions"].items()}, dict(st["h"]), S.id)
    raise ScenarioError("SyntaxError", "structure.kind", k)


class _Doc:
    """Incremental scenario builder that names groups, maps and actions."""

    def __init__(self, sid: str):
        self.S = Scenario(sid, {}, {}, {}, {})
        self._ids = {}

    def group(self, G: FiniteGroup, name: str) -> str:
        if id(G) in self._ids:
            return self._ids[id(G)]
        if not G.materialized:
            G = G.materialize()
        nm = name
        i = 1
        while nm in self.S.groups:
            nm = f"{name}_{i}"
            i += 1
        self.S.groups[nm] = G
        self._ids[id(G)] = nm
        return nm

    def map(self, name: str, src: str, dst: str, image) -> str:
        self.S.maps[name] = {"from": src, "to": dst, "image": np.asarray(image, dtype=np.int64)}
        return name

    def action(self, name: str, actor: str, target: str, table) -> str:
        self.S.actions[name] = {"actor": actor, "target": target,
                                "table": np.asarray(table, dtype=np.int64)}
        return name


def from_object(obj, sid: str = "") -> Scenario:
    """Scenario describing a structure object (inverse of build)."""
    from .cubes import CORNERS, EDGES, Crossed3Cube, CrossedSquare
    from .simplicial import TruncatedSimplicialGroup
    from .structures import CrossedModule, ThreeCrossedModule, TwoCrossedModule
    D = _Doc(sid or getattr(obj, "name", "") or "")
    if isinstance(obj, CrossedModule):
        M, P = D.group(obj.M, "M"), D.group(obj.P, "P")
        D.S.structure = {"kind": "xmod", "M": M, "P": P, "d": D.map("d", M, P, obj.d),
                         "act": D.action("act", P, M, obj.act)}
    elif isinstance(obj, TwoCrossedModule):
        L, M, N = D.group(obj.L, "L"), D.group(obj.M, "M"), D.group(obj.N, "N")
        D.S.structure = {"kind": "2xmod", "L": L, "M": M, "N": N,
                         "d2": D.map("d2", L, M, obj.d2), "d1": D.map("d1", M, N, obj.d1),
                         "act_N_M": D.action("act_N_M", N, M, obj.act_N_M),
                         "act_N_L": D.action("act_N_L", N, L, obj.act_N_L),
                         "lift": np.asarray(obj.lift)}
    elif isinstance(obj, ThreeCrossedModule):
        r = {c: D.group(getattr(obj, c), c) for c in "KLMN"}
        D.S.structure = {"kind": "3xmod", **r, "d3": D.map("d3", r["K"], r["L"], obj.d3),
                         "d2": D.map("d2", r["L"], r["M"], obj.d2),
                         "d1": D.map("d1", r["M"], r["N"], obj.d1),
                         "actions": {nm: D.action(nm, r[nm[0]], r[nm[2]], t)
                                     for nm, t in sorted(obj.actions.items())},
                         "lifts": {nm: np.asarray(t) for nm, t in sorted(obj.lifts.items())}}
    elif isinstance(obj, TruncatedSimplicialGroup):
        lv = [D.group(G, f"G{n}") for n, G in enumerate(obj.levels)]
        faces = [[D.map(f"d{i}_{n}", lv[n], lv[n - 1], obj.faces[n][i]) for i in range(n + 1)]
                 for n in range(1, obj.k + 1)]
        degens = [[D.map(f"s{i}_{n}", lv[n], lv[n + 1], obj.degens[n][i]) for i in range(n + 1)]
                  for n in range(obj.k)]
        D.S.structure = {"kind": "simplicial", "levels": lv, "faces": faces, "degens": degens}
    elif isinstance(obj, CrossedSquare):
        r = {c: D.group(getattr(obj, c), c) for c in "LMNP"}
        st = {"kind": "square", **r}
        for key, a, b in (("f", "L", "M"), ("u", "L", "N"), ("v", "M", "P"), ("g", "N", "P")):
            st[key] = D.map(key, r[a], r[b], getattr(obj, key))
        for key, t in (("act_P_L", "L"), ("act_P_M", "M"), ("act_P_N", "N")):
            st[key] = D.action(key, r["P"], r[t], getattr(obj, key))
        st["h"] = np.asarray(obj.h)
        D.S.structure = st
    elif isinstance(obj, Crossed3Cube):
        r = {c: D.group(obj.groups[c], c) for c in CORNERS}
        D.S.structure = {
            "kind": "cube", "corners": r,
            "edges": {f"{a}->{b}": D.map(f"{a}_{b}", r[a], r[b], obj.edges[(a, b)])
                      for a, b in EDGES},
            "actions": {c: D.action(f"S_{c}", r["S"], r[c], obj.actions[c]) for c in CORNERS},
            "h": {k: np.asarray(v) for k, v in sorted(obj.h.items())}}
    else:
        raise TypeError(f"cannot describe {type(obj).__name__}")
    return D.S


def load(path: str, max_order: Optional[int] = None) -> Scenario:
    if not os.path.exists(path) and os.path.exists(path + ".json"):
        path = path + ".json"
    with open(path, encoding="utf-8") as fh:
        return parse_scenario(fh.read(), max_order)
