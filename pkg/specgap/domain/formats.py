"""
graph6 and JSON serialization.

graph6 goes through networkx's encoder and decoder, which implement the
standard format (upper triangle packed into 6-bit chunks offset by 63).
"""

import json
from typing import Any, Dict, Union

import networkx as nx
from loguru import logger

from specgap.domain.graph import Graph, from_networkx, make_graph, to_networkx
from specgap.exceptions import Graph6FormatError, InvalidInputError

GRAPH6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """graph6 text of g, without header or trailing newline."""
    data = nx.to_graph6_bytes(to_networkx(g), nodes=list(range(g.n)), header=False)
    return data.decode("ascii").strip()


def from_graph6(text: str) -> Graph:
    """
    Decode one graph6 line.

    Raises:
        Graph6FormatError: On sparse6/digraph6 input, characters outside the
            printable graph6 range, or a body of the wrong length
    """
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER) :]
    if not line:
        raise Graph6FormatError("Empty graph6 string")
    if line[0] in ":&;":
        raise Graph6FormatError("sparse6 and digraph6 strings are not supported")
    try:
        graph = nx.from_graph6_bytes(line.encode("ascii"))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as e:
        logger.debug(f"graph6 decode failed for {line!r}: {e}")
        raise Graph6FormatError(f"Malformed graph6 string: {e}") from e
    return from_networkx(graph)


def to_json(g: Graph) -> Dict[str, Any]:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges]}


def from_json(data: Union[str, Dict[str, Any]]) -> Graph:
    """Parse the {"n": int, "edges": [[u, v], ...]} schema."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            raise InvalidInputError(f"Invalid graph JSON: {e}") from e
    if not isinstance(data, dict) or "n" not in data:
        raise InvalidInputError("Graph JSON must be an object with an 'n' field")
    return make_graph(int(data["n"]), data.get("edges", []))
