"""JSON readers and writers for categories, schemoids, representations and inputs.

Every document written here carries ``"format": 1``. Readers accept documents
without the field; any other version is rejected. Format problems raise
:class:`ParseError`; mathematical problems (a failed axiom, a non-functor)
raise the errors of the module that checks them.
"""

from __future__ import annotations

import json

from .constructors import AssociationScheme, FiniteSpace, SimplicialComplex, small_groups
from .core import Schemoid, SchemoidMorphism, validate_morphism, validate_schemoid, blocks_to_block_of
from .fields import Field, parse_field
from .fincat import FinCat, check_category

FORMAT = 1


class ParseError(ValueError):
    pass


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    if isinstance(doc, dict) and doc.get("format", FORMAT) != FORMAT:
        raise ParseError(f"unsupported format {doc.get('format')!r}")
    return doc


def _need(doc, key, kind=None):
    if not isinstance(doc, dict):
        raise ParseError("expected a JSON object")
    if key not in doc:
        raise ParseError(f"missing key {key!r}")
    v = doc[key]
    if kind is not None and not isinstance(v, kind):
        raise ParseError(f"key {key!r} has the wrong type")
    return v


def _ints(xs, what):
    if not isinstance(xs, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in xs):
        raise ParseError(f"{what} must be a list of integers")
    return list(xs)


def _strs(xs, what):
    if xs is None:
        return None
    if not isinstance(xs, list) or not all(isinstance(x, str) for x in xs):
        raise ParseError(f"{what} must be a list of strings")
    return tuple(xs)


# ---------------------------------------------------------------- categories


def category_to_json(C: FinCat) -> dict:
    doc = {
        "format": FORMAT,
        "objects": C.n_objects,
        "morphisms": [{"src": C.src[f], "tgt": C.tgt[f]} for f in C.morphisms],
        "identity": list(C.identity),
        "compose": [list(t) for t in C.composable_pairs()],
    }
    if C.obj_labels:
        doc["object_labels"] = list(C.obj_labels)
    if C.mor_labels:
        for f, m in enumerate(doc["morphisms"]):
            m["label"] = C.mor_labels[f]
    return doc


def category_from_json(doc, check: bool = True) -> FinCat:
    n = _need(doc, "objects", int)
    mors = _need(doc, "morphisms", list)
    src, tgt, labels = [], [], []
    for m in mors:
        src.append(_need(m, "src", int))
        tgt.append(_need(m, "tgt", int))
        labels.append(m.get("label"))
    identity = _ints(_need(doc, "identity", list), "identity")
    comp = {}
    for t in _need(doc, "compose", list):
        t = _ints(t, "compose entry")
        if len(t) != 3:
            raise ParseError("compose entries are [g, f, gf]")
        if (t[0], t[1]) in comp:
            raise ParseError(f"pair ({t[0]}, {t[1]}) composed twice")
        comp[(t[0], t[1])] = t[2]
    mor_labels = tuple(labels) if all(isinstance(x, str) for x in labels) and labels else None
    C = FinCat(n, src, tgt, identity, comp, obj_labels=_strs(doc.get("object_labels"), "object_labels"),
               mor_labels=mor_labels)
    return check_category(C) if check else C


# ---------------------------------------------------------------- schemoids


def schemoid_to_json(S: Schemoid) -> dict:
    doc = category_to_json(S.cat)
    doc["blocks"] = [list(b) for b in S.blocks]
    if S.block_labels:
        doc["block_labels"] = list(S.block_labels)
    return doc


def schemoid_from_json(doc) -> Schemoid:
    C = category_from_json(doc)
    blocks = _need(doc, "blocks", list)
    blocks = [_ints(b, "block") for b in blocks]
    labels = _strs(doc.get("block_labels"), "block_labels")
    return validate_schemoid(C, blocks_to_block_of(C.n_morphisms, blocks), labels)


def morphism_to_json(u: SchemoidMorphism) -> dict:
    return {
        "format": FORMAT,
        "source": schemoid_to_json(u.source),
        "target": schemoid_to_json(u.target),
        "obj_map": list(u.obj_map),
        "mor_map": list(u.mor_map),
        "block_map": list(u.block_map),
    }


def morphism_from_json(doc) -> SchemoidMorphism:
    S = schemoid_from_json(_need(doc, "source", dict))
    T = schemoid_from_json(_need(doc, "target", dict))
    return validate_morphism(S, T, _ints(_need(doc, "obj_map", list), "obj_map"),
                             _ints(_need(doc, "mor_map", list), "mor_map"))


# ---------------------------------------------------------------- representations


def _scalar_from_json(F: Field, x):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(f"bad scalar {x!r}")
    try:
        return F(x)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad scalar {x!r}") from None


def rep_to_json(M) -> dict:
    F = M.F
    return {
        "format": FORMAT,
        "field": F.name,
        "dims": list(M.dims),
        "block_mats": {str(b): [[F.to_json(a) for a in row] for row in m]
                       for b, m in M.block_mats().items()},
    }


def rep_from_json(doc, S: Schemoid, field: Field | None = None):
    from .repcat.reps import FunctorRep

    name = doc.get("field") if isinstance(doc, dict) else None
    try:
        F = parse_field(name) if name else field
    except ValueError as e:
        raise ParseError(str(e)) from None
    if F is None:
        raise ParseError("representation has no field")
    if field is not None and F != field:
        raise ParseError(f"representation is over {F.name}, expected {field.name}")
    dims = _ints(_need(doc, "dims", list), "dims")
    if len(dims) != S.cat.n_objects:
        raise ParseError(f"{len(dims)} dims for {S.cat.n_objects} objects")
    raw = _need(doc, "block_mats", dict)
    mats = {}
    for key, m in raw.items():
        if key.isdigit():
            b = int(key)
        elif S.block_labels and key in S.block_labels:
            b = S.block_labels.index(key)
        else:
            raise ParseError(f"unknown block {key!r}")
        if not 0 <= b < S.n_blocks:
            raise ParseError(f"block {b} out of range")
        if not isinstance(m, list) or not all(isinstance(r, list) for r in m):
            raise ParseError(f"matrix for block {key} must be a list of rows")
        mats[b] = [[_scalar_from_json(F, x) for x in r] for r in m]
    return FunctorRep.from_blocks(S, F, dims, mats)


# ---------------------------------------------------------------- constructor inputs


def complex_from_json(doc) -> SimplicialComplex:
    n = _need(doc, "vertices", int)
    faces = [_ints(f, "face") for f in _need(doc, "faces", list)]
    return SimplicialComplex.generated(n, faces)


def complex_to_json(K: SimplicialComplex) -> dict:
    return {"format": FORMAT, "vertices": K.n_vertices,
            "faces": [sorted(s) for s in sorted(K.faces, key=lambda s: (len(s), sorted(s)))]}


def scheme_from_json(doc) -> AssociationScheme:
    n = _need(doc, "points", int)
    rel = [_ints(r, "relation row") for r in _need(doc, "relations", list)]
    if len(rel) != n or any(len(r) != n for r in rel):
        raise ParseError("relations must be an n x n matrix")
    return AssociationScheme(n, tuple(tuple(r) for r in rel), _strs(doc.get("labels"), "labels"))


def group_from_json(doc):
    """``{"table": [[...]]}`` or ``{"name": "S3"}``."""
    if isinstance(doc, dict) and "name" in doc:
        groups = small_groups()
        if doc["name"] not in groups:
            raise ParseError(f"unknown group {doc['name']!r}; known: {sorted(groups)}")
        return groups[doc["name"]]
    table = _need(doc, "table", list)
    return [_ints(r, "table row") for r in table]


def space_from_json(doc) -> FiniteSpace:
    n = _need(doc, "points", int)
    opens = [_ints(u, "open set") for u in _need(doc, "opens", list)]
    return FiniteSpace.make(n, opens)


def sets_from_json(doc) -> list[frozenset]:
    return [frozenset(_ints(s, "set")) for s in _need(doc, "sets", list)]
