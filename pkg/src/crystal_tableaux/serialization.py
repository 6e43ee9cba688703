"""JSON element documents, graph export and ASCII rendering."""
from __future__ import annotations

import json
from importlib import resources

from .binfty import representative_violation
from .cliff import CliffElement, factor_labels, validate_cliff
from .lie_types import FAMILIES, LOWERING, RAISING, TypeSpec, Weight, make_type_spec
from .tableau import CrystalGraph, Tableau, apply_plain, highest_weight_tableau, shape_for_weight

MODELS = ("hw", "binfty", "cliff")


class DocumentError(ValueError):
    """Malformed or invalid element document; the message names the location."""


def render_ascii(T: Tableau) -> str:
    return T.ascii()


def parse_letter(text, where: str) -> int:
    if not isinstance(text, str):
        raise DocumentError(f"{where}: letters are strings, got {text!r}")
    try:
        return int(text)
    except ValueError:
        raise DocumentError(f"{where}: {text!r} is not a letter") from None


def _rows_payload(T: Tableau) -> list[list[str]]:
    return [[str(x) for x in row] for row in T.rows]


def to_document(element, model: str, lam: Weight | None = None) -> dict:
    if model not in MODELS:
        raise DocumentError(f"unknown model {model!r}")
    spec = element.spec
    doc = {"family": spec.family, "rank": spec.n, "model": model}
    if model == "cliff":
        doc["k"] = {str(i): list(row) for i, row in enumerate(element.k, start=1)}
    else:
        doc["rows"] = _rows_payload(element)
    if model == "hw":
        if lam is None:
            raise DocumentError("an hw document needs its highest weight")
        doc["lambda"] = list(lam.coords)
    return doc


def serialize(element, model: str, lam: Weight | None = None) -> str:
    return json.dumps(to_document(element, model, lam))


def in_highest_weight_crystal(T: Tableau, lam: Weight) -> bool:
    """Whether ``T`` lies in the component of u_lam, found by raising to the top."""
    spec = T.spec
    if T.shape != shape_for_weight(spec, lam):
        return False
    top = T
    moved = True
    while moved:
        moved = False
        for i in spec.index_set:
            up = apply_plain(spec, i, top, RAISING)
            if up is not None:
                top, moved = up, True
                break
    return top == highest_weight_tableau(spec, lam)


def _spec_from(doc: dict) -> TypeSpec:
    family = doc.get("family")
    if family not in FAMILIES:
        raise DocumentError(f"family: unknown family {family!r}")
    rank = doc.get("rank")
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise DocumentError(f"rank: expected an integer, got {rank!r}")
    try:
        return make_type_spec(family, rank)
    except ValueError as exc:
        raise DocumentError(f"rank: {exc}") from None


def from_document(doc) -> tuple[object, str, Weight | None]:
    """Inverse of ``to_document``: returns (element, model, lambda or None)."""
    if not isinstance(doc, dict):
        raise DocumentError("document: expected a JSON object")
    spec = _spec_from(doc)
    model = doc.get("model")
    if model not in MODELS:
        raise DocumentError(f"model: expected one of {', '.join(MODELS)}, got {model!r}")

    if model == "cliff":
        payload = doc.get("k")
        if not isinstance(payload, dict):
            raise DocumentError("k: expected an object keyed by row index")
        rows = []
        for i in range(1, spec.n + 1):
            row = payload.get(str(i))
            want = len(factor_labels(spec, i))
            if not isinstance(row, list) or len(row) != want:
                raise DocumentError(f"k.{i}: expected a list of {want} integers")
            for p, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                    raise DocumentError(f"k.{i}[{p}]: expected a nonnegative integer, got {v!r}")
            rows.append(tuple(row))
        extra = set(payload) - {str(i) for i in range(1, spec.n + 1)}
        if extra:
            raise DocumentError(f"k: unexpected rows {sorted(extra)}")
        c = CliffElement(spec, tuple(rows))
        if not validate_cliff(spec, c):
            raise DocumentError("k: entries violate the constraint chains")
        return c, model, None

    payload = doc.get("rows")
    if not isinstance(payload, list) or not payload:
        raise DocumentError("rows: expected a nonempty list of rows")
    rows = []
    for r, row in enumerate(payload):
        if not isinstance(row, list):
            raise DocumentError(f"rows[{r}]: expected a list of letters")
        rows.append(tuple(parse_letter(x, f"rows[{r}][{c}]") for c, x in enumerate(row)))
    try:
        T = Tableau(spec, tuple(rows))
    except ValueError as exc:
        raise DocumentError(f"rows: {exc}") from None

    if model == "binfty":
        if "lambda" in doc:
            raise DocumentError("lambda: only hw documents carry a highest weight")
        problem = representative_violation(spec, T)
        if problem:
            raise DocumentError(f"rows: {problem}")
        return T, model, None

    coords = doc.get("lambda")
    if not isinstance(coords, list) or not all(isinstance(v, int) for v in coords):
        raise DocumentError("lambda: expected a list of integers")
    lam = Weight(tuple(coords))
    try:
        ok = in_highest_weight_crystal(T, lam)
    except ValueError as exc:
        raise DocumentError(f"lambda: {exc}") from None
    if not ok:
        raise DocumentError(f"rows: not an element of B({lam.coords})")
    return T, model, lam


def deserialize(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return from_document(doc)


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")


def to_dot(g: CrystalGraph, name: str = "crystal") -> str:
    lines = [f"digraph {name} {{", "  node [shape=box, fontname=monospace];"]
    for k, node in enumerate(g.nodes):
        label = node.element.ascii() if hasattr(node.element, "ascii") else node.key
        lines.append(f'  n{k} [label="{_dot_escape(label)}"];')
    for src, i, tgt in g.edges:
        lines.append(f'  n{src} -> n{tgt} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(g: CrystalGraph, model: str) -> str:
    spec = g.spec
    doc = {
        "family": spec.family,
        "rank": spec.n,
        "model": model,
        "nodes": [
            {
                "id": k,
                "depth": node.depth,
                "weight": list(node.weight.coords),
                "rows": _rows_payload(node.element),
            }
            for k, node in enumerate(g.nodes)
        ],
        "edges": [[src, i, tgt] for src, i, tgt in g.edges],
    }
    return json.dumps(doc, indent=1)


def parse_word(text: str) -> list[tuple[str, int]]:
    """'f1,e2' -> [(LOWERING, 1), (RAISING, 2)]."""
    steps = []
    for token in text.split(","):
        token = token.strip()
        if len(token) < 2 or token[0] not in "fe" or not token[1:].isdigit():
            raise DocumentError(f"word: bad operator {token!r}; expected fN or eN")
        steps.append((LOWERING if token[0] == "f" else RAISING, int(token[1:])))
    return steps


def load_golden() -> dict:
    return json.loads(resources.files("crystal_tableaux").joinpath("data/golden.json").read_text())
