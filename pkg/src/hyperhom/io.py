"""Hypergraph file formats.

Plain format: one hyperedge per line, whitespace-separated vertex labels,
optional `: <value>` suffix carrying an exact filtration value; `#` starts a
comment.  JSON format mirrors `HypergraphDocument` and additionally carries
named sub-hypergraphs.  Values are parsed as exact rationals (decimal
strings or `p/q`); floats never enter the engine.

Parsing a serialized document returns an equal document (round-trip
identity on canonical form).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError
from .hypergraph import Hypergraph, VertexSpace

LabelEdge = tuple[str, ...]


def parse_rational(text, line=None) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"cannot parse exact rational from {text!r}", line=line) from None


def format_rational(value: Fraction) -> str:
    return str(value)


@dataclass
class HypergraphDocument:
    hyperedges: list[LabelEdge]
    vertices: list[str] | None = None
    values: dict[LabelEdge, Fraction] = field(default_factory=dict)
    subs: dict[str, list[LabelEdge]] = field(default_factory=dict)

    def canonical(self) -> "HypergraphDocument":
        main = sorted({tuple(sorted(set(e))) for e in self.hyperedges}, key=lambda e: (len(e), e))
        vertices = sorted({v for e in main for v in e} | set(self.vertices or ()))
        subs = {
            name: sorted({tuple(sorted(set(e))) for e in edges}, key=lambda e: (len(e), e))
            for name, edges in sorted(self.subs.items())
        }
        values = {tuple(sorted(set(k))): v for k, v in self.values.items()}
        return HypergraphDocument(main, vertices, values, subs)

    # -- conversion to engine objects ---------------------------------------

    def space(self) -> VertexSpace:
        c = self.canonical()
        return VertexSpace(tuple(c.vertices))

    def hypergraph(self) -> Hypergraph:
        return Hypergraph.from_labels(self.hyperedges, self.space())

    def sub_hypergraph(self, name: str) -> Hypergraph:
        if name not in self.subs:
            raise ParseError(f"no sub-hypergraph named {name!r} in the document", field=name)
        return Hypergraph.from_labels(self.subs[name], self.space())

    def edge_values(self, h: Hypergraph):
        out = {}
        for edge_labels, v in self.canonical().values.items():
            ids = tuple(sorted(h.space.id_of(x) for x in edge_labels))
            out[ids] = v
        return out

    def validate(self) -> None:
        seen = set()
        for e in self.hyperedges:
            if not e:
                raise ParseError("empty hyperedge")
            key = tuple(sorted(set(e)))
            if key in seen:
                raise ParseError(f"duplicate hyperedge {list(e)}")
            seen.add(key)
        for name, edges in self.subs.items():
            for e in edges:
                if tuple(sorted(set(e))) not in seen:
                    raise ParseError(
                        f"sub-hypergraph edge {list(e)} is not a hyperedge of the main list",
                        field=name,
                    )


def parse_plain(text: str) -> HypergraphDocument:
    edges: list[LabelEdge] = []
    values: dict[LabelEdge, Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" in line:
            edge_part, value_part = line.split(":", 1)
            value = parse_rational(value_part.strip(), line=lineno)
        else:
            edge_part, value = line, None
        labels = tuple(edge_part.split())
        if not labels:
            raise ParseError("hyperedge line with no vertex labels", line=lineno)
        key = tuple(sorted(set(labels)))
        if key in {tuple(sorted(set(e))) for e in edges}:
            raise ParseError(f"duplicate hyperedge {list(labels)}", line=lineno)
        edges.append(key)
        if value is not None:
            values[key] = value
    doc = HypergraphDocument(edges, None, values, {})
    doc.validate()
    return doc.canonical()


def parse_json(text: str) -> HypergraphDocument:
    try:
        data = json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "hyperedges" not in data:
        raise ParseError("JSON document must be an object with a 'hyperedges' list")
    edges = [tuple(map(str, e)) for e in data["hyperedges"]]
    vertices = [str(v) for v in data["vertices"]] if data.get("vertices") else None
    values: dict[LabelEdge, Fraction] = {}
    raw_values = data.get("values")
    if raw_values is not None:
        if not isinstance(raw_values, list) or len(raw_values) != len(edges):
            raise ParseError("'values' must be a list parallel to 'hyperedges'", field="values")
        for e, v in zip(edges, raw_values):
            if v is not None:
                values[tuple(sorted(set(e)))] = parse_rational(v)
    subs = {}
    for name, sub_edges in (data.get("subs") or {}).items():
        subs[str(name)] = [tuple(map(str, e)) for e in sub_edges]
    doc = HypergraphDocument(edges, vertices, values, subs)
    doc.validate()
    return doc.canonical()


def parse_hypergraph(text: str, fmt: str = "auto") -> HypergraphDocument:
    if fmt == "auto":
        stripped = text.lstrip()
        fmt = "json" if stripped.startswith("{") else "plain"
    if fmt == "json":
        return parse_json(text)
    if fmt == "plain":
        return parse_plain(text)
    raise ParseError(f"unknown format {fmt!r}")


def serialize_document(doc: HypergraphDocument) -> str:
    c = doc.canonical()
    payload = {
        "vertices": list(c.vertices or []),
        "hyperedges": [list(e) for e in c.hyperedges],
    }
    if c.values:
        payload["values"] = [
            format_rational(c.values[e]) if e in c.values else None for e in c.hyperedges
        ]
    if c.subs:
        payload["subs"] = {name: [list(e) for e in edges] for name, edges in c.subs.items()}
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def load_document(path: str) -> HypergraphDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_hypergraph(fh.read())
