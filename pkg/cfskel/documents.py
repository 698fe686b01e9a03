import json

from typing import Any
from typing import Dict
from typing import List
from typing import Union
from typing import Mapping
from typing import Optional
from pathlib import Path

from .errors import SkeletaError
from .errors import DocumentError
from .errors import MalformedCoverError
from .errors import DisconnectedGraphError
from .toolkit import parse_rational
from .toolkit import format_rational
from .constants import BAD_RATIONAL
from .constants import DUPLICATE_ID
from .constants import INVALID_GRAPH
from .constants import MISSING_FIELD
from .constants import MALFORMED_JSON
from .constants import MALFORMED_COVER
from .constants import DISCONNECTED_GRAPH
from .constants import INCOMPLETE_FUNCTION
from .constants import NON_POSITIVE_LENGTH
from .constants import UNKNOWN_ID
from .different import PLFunction
from .metric_graph import Edge
from .metric_graph import Vertex
from .metric_graph import MetricGraph
from .harmonic_cover import CoverMap
from .builders.schema import Locus


TDocument = Dict[str, Any]


def dumps(document: Any, indent: int = 2) -> str:
    """Canonical text of a document: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(document, indent=indent, sort_keys=True, ensure_ascii=False) + "\n"


def loads(text: str) -> TDocument:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentError(MALFORMED_JSON, f"invalid json occurred: {err}")
    if not isinstance(document, dict):
        raise DocumentError(MALFORMED_JSON, "document should be a json object")
    return document


def read_text(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as err:
        raise DocumentError(MALFORMED_JSON, f"'{path}' is not utf-8: {err}")
    except OSError as err:
        raise DocumentError(MALFORMED_JSON, f"cannot read '{path}': {err}")


def _field(document: Mapping[str, Any], key: str, where: str) -> Any:
    if key not in document:
        raise DocumentError(MISSING_FIELD, f"{where} is missing '{key}'")
    return document[key]


def _int_field(document: Mapping[str, Any], key: str, where: str) -> int:
    value = _field(document, key, where)
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(INVALID_GRAPH, f"{where}.{key} should be an integer")
    return value


def _str_field(document: Mapping[str, Any], key: str, where: str) -> str:
    value = _field(document, key, where)
    if not isinstance(value, str):
        raise DocumentError(INVALID_GRAPH, f"{where}.{key} should be a string")
    return value


def _rational(value: Any, where: str) -> Any:
    if not isinstance(value, str):
        raise DocumentError(BAD_RATIONAL, f"{where} should be a rational string")
    try:
        return parse_rational(value)
    except SkeletaError:
        raise DocumentError(BAD_RATIONAL, f"{where} is not a rational: '{value}'")


# graphs


def graph_to_document(graph: MetricGraph) -> TDocument:
    return {
        "vertices": [
            {"id": v.id, "mult": v.mult, "genus": v.genus} for v in graph.vertices
        ],
        "edges": [
            {"id": e.id, "ends": [e.u, e.v], "length": format_rational(e.length)}
            for e in graph.edges
        ],
    }


def graph_from_document(document: Mapping[str, Any]) -> MetricGraph:
    raw_vertices = _field(document, "vertices", "graph")
    raw_edges = _field(document, "edges", "graph")
    if not isinstance(raw_vertices, list) or not isinstance(raw_edges, list):
        raise DocumentError(INVALID_GRAPH, "vertices and edges should be lists")
    vertices: List[Vertex] = []
    seen = set()
    for i, raw in enumerate(raw_vertices):
        where = f"vertices[{i}]"
        if not isinstance(raw, dict):
            raise DocumentError(INVALID_GRAPH, f"{where} should be an object")
        vid = _str_field(raw, "id", where)
        if vid in seen:
            raise DocumentError(DUPLICATE_ID, f"duplicate vertex id '{vid}'")
        seen.add(vid)
        mult = _int_field(raw, "mult", where)
        genus = _int_field(raw, "genus", where) if "genus" in raw else 0
        if mult < 1 or genus < 0:
            raise DocumentError(INVALID_GRAPH, f"{where} has invalid mult or genus")
        vertices.append(Vertex(vid, mult, genus))
    edges: List[Edge] = []
    seen_edges = set()
    for i, raw in enumerate(raw_edges):
        where = f"edges[{i}]"
        if not isinstance(raw, dict):
            raise DocumentError(INVALID_GRAPH, f"{where} should be an object")
        eid = _str_field(raw, "id", where)
        if eid in seen_edges:
            raise DocumentError(DUPLICATE_ID, f"duplicate edge id '{eid}'")
        seen_edges.add(eid)
        ends = _field(raw, "ends", where)
        if not isinstance(ends, list) or len(ends) != 2:
            raise DocumentError(INVALID_GRAPH, f"{where}.ends should list two ids")
        for end in ends:
            if not isinstance(end, str):
                raise DocumentError(INVALID_GRAPH, f"{where}.ends should hold ids")
            if end not in seen:
                raise DocumentError(UNKNOWN_ID, f"{where} ends at unknown '{end}'")
        length = _rational(_field(raw, "length", where), f"{where}.length")
        if length <= 0:
            raise DocumentError(
                NON_POSITIVE_LENGTH,
                f"{where} has non-positive length '{raw['length']}'",
            )
        edges.append(Edge(eid, ends[0], ends[1], length))
    if not vertices:
        raise DocumentError(INVALID_GRAPH, "graph has no vertex")
    try:
        return MetricGraph(tuple(vertices), tuple(edges))
    except DisconnectedGraphError as err:
        raise DocumentError(DISCONNECTED_GRAPH, str(err))
    except SkeletaError as err:
        raise DocumentError(INVALID_GRAPH, str(err))


def parse_graph(text: str) -> MetricGraph:
    return graph_from_document(loads(text))


def serialize_graph(graph: MetricGraph, indent: int = 2) -> str:
    return dumps(graph_to_document(graph), indent)


def load_graph(path: Union[str, Path]) -> MetricGraph:
    return parse_graph(read_text(path))


# covers


def cover_to_document(
    cover: CoverMap,
    *,
    base: Optional[str] = None,
    total: Optional[str] = None,
) -> TDocument:
    """Cover document; `base` / `total` are file references, inline graphs otherwise."""
    return {
        "base": base if base is not None else graph_to_document(cover.base),
        "total": total if total is not None else graph_to_document(cover.total),
        "degree": cover.degree,
        "vertex_map": dict(cover.vertex_map),
        "edge_map": dict(cover.edge_map),
    }


def _graph_source(source: Any, root: Optional[Path], where: str) -> MetricGraph:
    if isinstance(source, dict):
        return graph_from_document(source)
    if isinstance(source, str):
        path = Path(source)
        if root is not None and not path.is_absolute():
            path = root / path
        return load_graph(path)
    raise DocumentError(INVALID_GRAPH, f"{where} should be a graph or a file path")


def _id_map(document: Mapping[str, Any], key: str) -> Dict[str, str]:
    mapping = _field(document, key, "cover")
    if not isinstance(mapping, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in mapping.items()
    ):
        raise DocumentError(MALFORMED_COVER, f"cover.{key} should map ids to ids")
    return mapping


def cover_from_document(
    document: Mapping[str, Any],
    root: Optional[Path] = None,
) -> CoverMap:
    base = _graph_source(_field(document, "base", "cover"), root, "cover.base")
    total = _graph_source(_field(document, "total", "cover"), root, "cover.total")
    degree = _field(document, "degree", "cover")
    if isinstance(degree, bool) or not isinstance(degree, int):
        raise DocumentError(MALFORMED_COVER, "cover.degree should be an integer")
    vertex_map = _id_map(document, "vertex_map")
    edge_map = _id_map(document, "edge_map")
    for k, v in sorted(vertex_map.items()):
        if not total.has_vertex(k) or not base.has_vertex(v):
            message = f"cover maps unknown vertex '{k}' -> '{v}'"
            raise DocumentError(UNKNOWN_ID, message)
    for k, v in sorted(edge_map.items()):
        if not total.has_edge(k) or not base.has_edge(v):
            message = f"cover maps unknown edge '{k}' -> '{v}'"
            raise DocumentError(UNKNOWN_ID, message)
    try:
        return CoverMap(base, total, degree, vertex_map, edge_map)
    except MalformedCoverError as err:
        raise DocumentError(MALFORMED_COVER, str(err))


def parse_cover(text: str, root: Optional[Path] = None) -> CoverMap:
    return cover_from_document(loads(text), root)


def serialize_cover(cover: CoverMap, indent: int = 2, **refs: Optional[str]) -> str:
    return dumps(cover_to_document(cover, **refs), indent)


def load_cover(path: Union[str, Path]) -> CoverMap:
    path = Path(path)
    return parse_cover(read_text(path), path.parent)


# functions


def function_to_document(function: PLFunction) -> TDocument:
    return {"values": {k: format_rational(v) for k, v in function.values.items()}}


def function_from_document(
    document: Mapping[str, Any],
    graph: MetricGraph,
) -> PLFunction:
    raw = _field(document, "values", "function")
    if not isinstance(raw, dict):
        raise DocumentError(INCOMPLETE_FUNCTION, "function.values should be an object")
    for k in sorted(raw):
        if not graph.has_vertex(k):
            raise DocumentError(UNKNOWN_ID, f"function has a value at unknown '{k}'")
    missing = [v for v in graph.vertex_ids if v not in raw]
    if missing:
        raise DocumentError(INCOMPLETE_FUNCTION, f"function misses '{missing[0]}'")
    values = {k: _rational(v, f"values.{k}") for k, v in raw.items()}
    return PLFunction(graph, values)


def parse_function(text: str, graph: MetricGraph) -> PLFunction:
    return function_from_document(loads(text), graph)


def serialize_function(function: PLFunction, indent: int = 2) -> str:
    return dumps(function_to_document(function), indent)


def load_function(path: Union[str, Path], graph: MetricGraph) -> PLFunction:
    return parse_function(read_text(path), graph)


# fixtures


def serialize_markings(markings: Mapping[str, Locus], indent: int = 2) -> str:
    return dumps({"markings": {k: v.value for k, v in markings.items()}}, indent)


def fixture_files(
    cover: CoverMap,
    different: PLFunction,
    markings: Mapping[str, Locus],
    indent: int = 2,
) -> Dict[str, str]:
    """File name -> canonical text of a builder fixture."""
    return {
        "base.json": serialize_graph(cover.base, indent),
        "total.json": serialize_graph(cover.total, indent),
        "cover.json": serialize_cover(
            cover,
            indent,
            base="base.json",
            total="total.json",
        ),
        "different.json": serialize_function(different, indent),
        "markings.json": serialize_markings(markings, indent),
    }


def dump_fixture(
    folder: Union[str, Path],
    cover: CoverMap,
    different: PLFunction,
    markings: Mapping[str, Locus],
    indent: int = 2,
) -> List[Path]:
    folder = Path(folder)
    folder.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, text in fixture_files(cover, different, markings, indent).items():
        path = folder / name
        path.write_text(text, encoding="utf-8")
        paths.append(path)
    return paths


__all__ = [
    "dumps",
    "loads",
    "read_text",
    "graph_to_document",
    "graph_from_document",
    "parse_graph",
    "serialize_graph",
    "load_graph",
    "cover_to_document",
    "cover_from_document",
    "parse_cover",
    "serialize_cover",
    "load_cover",
    "function_to_document",
    "function_from_document",
    "parse_function",
    "serialize_function",
    "load_function",
    "serialize_markings",
    "fixture_files",
    "dump_fixture",
]
