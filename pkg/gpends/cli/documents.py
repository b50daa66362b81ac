"""
JSON graph documents: parsing, emission, hashing and random corpora
"""

import hashlib
import itertools
import json
import logging
import random
import sys
from typing import Any, Dict, Iterator, List, Tuple

from ..exceptions import InputError
from ..graph import SimplicialGraph
from ..groups import GroupLabel, LabelKind, LabelledGraph
from ..validators import (
    ValidationError,
    validate_at_least,
    validate_edge,
    validate_edge_probability,
    validate_label_spec,
    validate_unique_ids,
    validate_vertex_id,
)

logger = logging.getLogger(__name__)


def label_from_spec(spec: Any, location: str = '') -> GroupLabel:
    """Build a GroupLabel from a validated document label spec"""
    spec = validate_label_spec(spec, location)
    if isinstance(spec, str):
        return GroupLabel(LabelKind(spec))
    (kind, order), = spec.items()
    if kind == 'cyclic':
        return GroupLabel.concrete_cyclic(order)
    return GroupLabel.finite(order)


def label_to_spec(label: GroupLabel) -> Any:
    if label.cyclic:
        return {'cyclic': label.order}
    if label.is_finite:
        return {'finite': label.order}
    return label.kind.value


def parse_graph_document(text: str) -> LabelledGraph:
    """
    Parse and validate a JSON graph document

    String ids are mapped to dense integers in declaration order; the names
    are kept on the labelled graph for output.

    Args:
        text: UTF-8 JSON text with "name", "vertices" and "edges"

    Returns:
        The validated labelled graph

    Raises:
        ValidationError: With the JSON location of the first problem
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"Invalid JSON: {e.msg} (line {e.lineno}, column {e.colno})") from e

    if not isinstance(document, dict):
        raise ValidationError("Document must be a JSON object")

    name = document.get('name', '')
    if not isinstance(name, str):
        raise ValidationError("Document name must be a string", 'name')

    vertices = document.get('vertices', [])
    if not isinstance(vertices, list):
        raise ValidationError("Expected a list of vertices", 'vertices')

    ids: List[str] = []
    labels: List[GroupLabel] = []
    for index, entry in enumerate(vertices):
        location = f"vertices[{index}]"
        if not isinstance(entry, dict) or 'id' not in entry or 'group' not in entry:
            raise ValidationError("Vertex entries need \"id\" and \"group\"", location)
        ids.append(validate_vertex_id(entry['id'], f"{location}.id"))
        labels.append(label_from_spec(entry['group'], f"{location}.group"))
    validate_unique_ids(ids)

    edges = document.get('edges', [])
    if not isinstance(edges, list):
        raise ValidationError("Expected a list of edges", 'edges')

    index_of = {vertex_id: i for i, vertex_id in enumerate(ids)}
    pairs = []
    for index, edge in enumerate(edges):
        u, w = validate_edge(edge, ids, f"edges[{index}]")
        pairs.append((index_of[u], index_of[w]))

    graph = SimplicialGraph(range(len(ids)), pairs)
    lg = LabelledGraph(graph, dict(enumerate(labels)), dict(enumerate(ids)), name)
    logger.debug(f"Parsed document {name!r}: {len(ids)} vertices, {len(graph.edges)} edges")
    return lg


def document_dict(lg: LabelledGraph) -> Dict[str, Any]:
    return {
        'name': lg.name,
        'vertices': [
            {'id': lg.vertex_name(v), 'group': label_to_spec(lg.label(v))}
            for v in lg.vertices
        ],
        'edges': [[lg.vertex_name(u), lg.vertex_name(w)] for u, w in lg.graph.sorted_edges()],
    }


def emit_graph_document(lg: LabelledGraph, indent: int = 2) -> str:
    """JSON document for lg; parse_graph_document inverts it"""
    return json.dumps(document_dict(lg), indent=indent, ensure_ascii=False)


def canonical_key(lg: LabelledGraph) -> Tuple:
    """
    Isomorphism-invariant key: minimum over all vertex permutations

    Labels move with their vertices. Exhaustive, meant for n <= 7.
    """
    vertices = lg.vertices
    best = None
    for order in itertools.permutations(vertices):
        labels = tuple(label_to_key(lg.label(v)) for v in order)
        position = {v: i for i, v in enumerate(order)}
        edges = tuple(sorted(
            tuple(sorted((position[u], position[w]))) for u, w in lg.graph.sorted_edges()
        ))
        key = (labels, edges)
        if best is None or key < best:
            best = key
    return best if best is not None else ((), ())


def label_to_key(label: GroupLabel) -> Tuple:
    return (label.kind.value, label.order or 0, label.cyclic)


def graph_hash(lg: LabelledGraph) -> str:
    """First 12 hex digits of the SHA-256 of the canonical key"""
    return hashlib.sha256(repr(canonical_key(lg)).encode('utf-8')).hexdigest()[:12]


CORPUS_LABELS = (
    [GroupLabel.concrete_cyclic(n) for n in range(2, 7)]
    + [GroupLabel.finite(n) for n in range(2, 7)]
    + [GroupLabel.two_ended(), GroupLabel.one_ended(), GroupLabel.infinite_ended()]
)


def random_labelled_graph(rng: random.Random, n: int, edge_prob: float, name: str = '') -> LabelledGraph:
    labels = [rng.choice(CORPUS_LABELS) for _ in range(n)]
    edges = [
        (u, w) for u, w in itertools.combinations(range(n), 2)
        if rng.random() < edge_prob
    ]
    return LabelledGraph.build(labels, edges, name=name)


def generate_corpus(count: int, n: int, edge_prob: float, seed: int) -> Iterator[LabelledGraph]:
    """
    Deterministic stream of random labelled graphs

    Raises:
        InputError: If count or n is negative or edge_prob is outside [0, 1]
    """
    validate_at_least(count, 0, 'count')
    validate_at_least(n, 0, 'n')
    validate_edge_probability(edge_prob)

    rng = random.Random(seed)
    for index in range(count):
        yield random_labelled_graph(rng, n, edge_prob, name=f"corpus-{seed}-{index}")


def read_document(path: str) -> LabelledGraph:
    """
    Read a document from a path, '-' meaning standard input

    Raises:
        InputError: If the file cannot be read
    """
    try:
        if path == '-':
            text = sys.stdin.read()
        else:
            with open(path, 'r', encoding='utf-8') as f:
                text = f.read()
    except OSError as e:
        raise InputError(f"Cannot read document {path}: {e}") from e
    return parse_graph_document(text)
