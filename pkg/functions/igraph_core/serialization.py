from __future__ import annotations

import json
import re
from typing import TYPE_CHECKING, Any, Dict, List, Optional

import graphviz
from pydantic import BaseModel, ValidationError

from .errors import GraphParseError, InvalidEdgeError
from .graph_core import Graph, from_edge_list
from .models import GraphDocument, IGraphDocument, SlideEdge

if TYPE_CHECKING:  # pragma: no cover
    from .reconfig import IGraph


def dumps(payload: Any) -> str:
    """Compact deterministic JSON text."""
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))


def graph_to_document(g: Graph) -> GraphDocument:
    return GraphDocument(
        n=g.order,
        edges=g.edges(),
        labels=list(g.labels) if g.labels is not None else None,
    )


def graph_doc_to_dict(g: Graph) -> Dict[str, Any]:
    """The graph document as plain JSON data; unlabelled graphs carry no "labels" key."""
    return graph_to_document(g).model_dump(mode="json", exclude_none=True)


def to_json(g: Graph) -> str:
    return dumps(graph_doc_to_dict(g))


def document_to_graph(doc: GraphDocument) -> Graph:
    for i, (u, v) in enumerate(doc.edges):
        if not (0 <= u < doc.n and 0 <= v < doc.n):
            raise GraphParseError(f"edge ({u},{v}) has an endpoint outside 0..{doc.n - 1}", position=f"edges[{i}]")
        if u == v:
            raise GraphParseError(f"self-loop at {u}", position=f"edges[{i}]")
    if doc.labels is not None and len(doc.labels) != doc.n:
        raise GraphParseError(f"got {len(doc.labels)} labels for {doc.n} vertices", position="labels")
    try:
        return from_edge_list(doc.n, doc.edges, doc.labels)
    except InvalidEdgeError as e:
        raise GraphParseError(str(e), position="edges") from e


def parse_graph_payload(payload: Any) -> Graph:
    if not isinstance(payload, dict):
        raise GraphParseError("graph document must be a JSON object", position="$")
    try:
        doc = GraphDocument.model_validate(payload)
    except ValidationError as e:
        first = e.errors()[0]
        loc = ".".join(str(p) for p in first.get("loc", ())) or "$"
        raise GraphParseError(first.get("msg", "invalid graph document"), position=loc) from e
    return document_to_graph(doc)


def from_json(text: str) -> Graph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphParseError(e.msg, position=f"line {e.lineno} column {e.colno}") from e
    return parse_graph_payload(payload)


def _dot_unquote(s: str) -> str:
    return re.sub(r"\\(.)", r"\1", s)


def to_dot(g: Graph, name: str = "G") -> str:
    dot = graphviz.Graph(name=name)
    for v in range(g.order):
        if g.labels is not None:
            dot.node(str(v), g.labels[v])
        else:
            dot.node(str(v))
    for u, v in g.edges():
        dot.edge(str(u), str(v))
    return dot.source


_DOT_HEADER = re.compile(r"^\s*graph\s+\w*\s*\{\s*$")
_DOT_NODE = re.compile(r'^\s*(\d+)\s*(?:\[\s*label\s*=\s*(?:"((?:[^"\\]|\\.)*)"|([\w.]+))\s*\])?\s*;?\s*$')
_DOT_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*;?\s*$")


def from_dot(text: str) -> Graph:
    """Read back the dialect written by `to_dot`."""
    lines = [ln for ln in text.splitlines()]
    body = [(i + 1, ln) for i, ln in enumerate(lines) if ln.strip()]
    if not body or not _DOT_HEADER.match(body[0][1]):
        raise GraphParseError("expected 'graph <name> {'", position="line 1")
    if body[-1][1].strip() != "}":
        raise GraphParseError("expected closing '}'", position=f"line {body[-1][0]}")

    nodes: Dict[int, Optional[str]] = {}
    edges: List[tuple[int, int]] = []
    for lineno, ln in body[1:-1]:
        m = _DOT_EDGE.match(ln)
        if m:
            edges.append((int(m.group(1)), int(m.group(2))))
            continue
        m = _DOT_NODE.match(ln)
        if m:
            v = int(m.group(1))
            if v in nodes:
                raise GraphParseError(f"node {v} declared twice", position=f"line {lineno}")
            if m.group(2) is not None:
                nodes[v] = _dot_unquote(m.group(2))
            else:
                nodes[v] = m.group(3)
            continue
        raise GraphParseError(f"unrecognized statement {ln.strip()!r}", position=f"line {lineno}")

    n = len(nodes)
    if sorted(nodes) != list(range(n)):
        raise GraphParseError("node ids must be 0..n-1", position="nodes")
    labelled = [nodes[v] for v in range(n)]
    if any(lab is not None for lab in labelled) and any(lab is None for lab in labelled):
        raise GraphParseError("either every node or no node carries a label", position="nodes")
    labels = labelled if n and labelled[0] is not None else None
    try:
        return from_edge_list(n, edges, labels)
    except InvalidEdgeError as e:
        raise GraphParseError(str(e), position="edges") from e


def igraph_to_document(ig: "IGraph") -> IGraphDocument:
    return IGraphDocument(
        seed=graph_to_document(ig.seed),
        isets=[list(s.members) for s in ig.isets],
        edges=[
            SlideEdge(a=a, b=b, leave=slide.leave, enter=slide.enter)
            for (a, b), slide in sorted(ig.slides.items())
        ],
        labels=[ig.graph.label(v) for v in range(ig.graph.order)],
    )


def igraph_to_json(ig: "IGraph") -> str:
    return dumps(igraph_to_document(ig).model_dump(mode="json", exclude_none=True))
