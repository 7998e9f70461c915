"""Plain-text instance formats.

Graph::

    p graph <n> <m>
    e <u> <v>          (m lines, 0-based ids)
    l <v> <name>       (optional labels)

Hypergraph::

    p hyper <|U|> <|F|>
    <universe names, space separated>
    <members of set 0>
    ...

Lines starting with ``c`` are comments (hypergraph files: before the header
only, since ``c`` may be an element name). Writers are byte-deterministic: edges
are sorted, set members follow universe order.
"""
from __future__ import annotations

from pathlib import Path

from .core import Graph, Hypergraph, InstanceError


class FormatError(InstanceError):
    pass


def write_graph(G: Graph) -> str:
    lines = [f"p graph {G.n} {G.m}"]
    lines += [f"e {u} {v}" for u, v in G.edges]
    if G.labels is not None:
        lines += [f"l {v} {name}" for v, name in enumerate(G.labels)]
    return "\n".join(lines) + "\n"


def write_hypergraph(H: Hypergraph) -> str:
    lines = [f"p hyper {len(H.universe)} {len(H.sets)}", " ".join(H.universe)]
    lines += [" ".join(H.members(j)) for j in range(len(H.sets))]
    return "\n".join(lines) + "\n"


def write_instance(instance: Graph | Hypergraph) -> str:
    return write_graph(instance) if isinstance(instance, Graph) else write_hypergraph(instance)


def parse_graph(text: str) -> Graph:
    lines = [line for line in text.splitlines() if line.strip() and not line.startswith("c")]
    if not lines:
        raise FormatError("empty graph file")
    head = lines[0].split()
    if len(head) != 4 or head[:2] != ["p", "graph"]:
        raise FormatError(f"expected 'p graph <n> <m>', got {lines[0]!r}")
    try:
        n, m = int(head[2]), int(head[3])
    except ValueError:
        raise FormatError(f"bad header {lines[0]!r}") from None
    edges = []
    labels: dict[int, str] = {}
    for line in lines[1:]:
        parts = line.split()
        try:
            if parts[0] == "e" and len(parts) == 3:
                edges.append((int(parts[1]), int(parts[2])))
            elif parts[0] == "l" and len(parts) == 3:
                labels[int(parts[1])] = parts[2]
            else:
                raise FormatError(f"unrecognized line {line!r}")
        except ValueError:
            raise FormatError(f"bad line {line!r}") from None
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    label_list = None
    if labels:
        if set(labels) != set(range(n)):
            raise FormatError("labels must be given for every vertex or for none")
        label_list = [labels[v] for v in range(n)]
    return Graph.from_edges(n, edges, label_list)


def parse_hypergraph(text: str) -> Hypergraph:
    lines = text.splitlines()
    while lines and (not lines[0].strip() or lines[0].startswith("c")):
        lines.pop(0)
    if not lines:
        raise FormatError("empty hypergraph file")
    head = lines[0].split()
    if len(head) != 4 or head[:2] != ["p", "hyper"]:
        raise FormatError(f"expected 'p hyper <|U|> <|F|>', got {lines[0]!r}")
    try:
        n_elements, n_sets = int(head[2]), int(head[3])
    except ValueError:
        raise FormatError(f"bad header {lines[0]!r}") from None
    universe = lines[1].split() if len(lines) > 1 else []
    if len(universe) != n_elements:
        raise FormatError(f"header announces {n_elements} elements, universe line has {len(universe)}")
    sets = [line.split() for line in lines[2:] if line.strip()]
    if len(sets) != n_sets:
        raise FormatError(f"header announces {n_sets} sets, found {len(sets)}")
    return Hypergraph.from_sets(sets, universe=universe)


def parse_instance(text: str) -> Graph | Hypergraph:
    for line in text.splitlines():
        if line.startswith("p "):
            kind = line.split()[1] if len(line.split()) > 1 else ""
            if kind == "graph":
                return parse_graph(text)
            if kind == "hyper":
                return parse_hypergraph(text)
            break
    raise FormatError("no 'p graph' or 'p hyper' header found")


def read_instance(path: str | Path) -> Graph | Hypergraph:
    return parse_instance(Path(path).read_text())
