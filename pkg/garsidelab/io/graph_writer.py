from typing import IO, Any, Dict

from ..const import ADD_TAIL, CUT_HEAD, CYCLING, INITIALIZING, SWITCHING
from ..invariant_sets import ConjugacyGraph
from .json_encoder import braid_to_json

EDGE_STYLES = {
    CYCLING: "solid",
    SWITCHING: "dashed",
    INITIALIZING: "bold",
    CUT_HEAD: "solid",
    ADD_TAIL: "dashed",
}


def graph_to_json(graph: ConjugacyGraph) -> Dict[str, Any]:
    """Nodes in key order as braid JSON with their key and family element if any."""
    nodes = []
    for key in sorted(graph.graph.nodes):
        data = graph.graph.nodes[key]
        node: Dict[str, Any] = dict(braid_to_json(data["braid"]), key=key)
        if "element" in data:
            node["element"] = data["element"]
        nodes.append(node)
    edges = [
        {
            "src": source.key(),
            "dst": target.key(),
            "conj": list(conj.word()),
            "kind": kind,
        }
        for source, conj, target, kind in graph.edges
    ]
    return {"n": graph.n, "nodes": nodes, "edges": edges}


def write_dot(graph: ConjugacyGraph, fo: IO, name: str = "rigid") -> None:
    """Write the graph in Graphviz DOT syntax; nodes are numbered in key order."""
    index = {key: i for i, key in enumerate(sorted(graph.graph.nodes))}
    fo.write(f"digraph {name} {{\n")
    for key, i in index.items():
        label = str(graph.graph.nodes[key]["braid"])
        fo.write(f'  n{i} [label="{label}"];\n')
    for source, conj, target, kind in graph.edges:
        style = EDGE_STYLES.get(kind, "dotted")
        fo.write(
            f'  n{index[source.key()]} -> n{index[target.key()]} '
            f'[label="{conj}", style={style}];\n'
        )
    fo.write("}\n")
