"""
Export

DOT rendering, the networkx bridge and the JSON result models printed by
the command line.
"""
from typing import Dict, Iterable, List, Optional

import networkx as nx
from pydantic import BaseModel

from .graph6 import serialize_graph6
from .types import DistancePartition, Graph, ResidualResult, TrialFailure, VerificationReport

HIGHLIGHT_STYLE = 'style=filled, fillcolor="#f4a582"'


def to_dot(G: Graph, highlight: Optional[Iterable[int]] = None, name: str = "G") -> str:
    """
    Undirected DOT text with vertices and edges in id order

    Args:
        G: Graph to render
        highlight: Vertices drawn filled (no style attributes when empty)
        name: Graph name in the DOT header
    """
    marked = set(highlight or ())
    lines = [f"graph {name} {{"]
    for v in range(G.n):
        attrs = []
        if G.labels is not None:
            attrs.append('label="{}"'.format(G.labels[v].replace('"', '\\"')))
        if v in marked:
            attrs.append(HIGHLIGHT_STYLE)
        lines.append(f"  {v} [{', '.join(attrs)}];" if attrs else f"  {v};")
    lines.extend(f"  {u} -- {v};" for u, v in G.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_networkx(G: Graph) -> nx.Graph:
    """networkx copy with nodes 0..n-1 and a "label" node attribute"""
    graph = nx.Graph()
    graph.add_nodes_from((v, {"label": G.label(v)}) for v in range(G.n))
    graph.add_edges_from(G.edges)
    return graph


def from_networkx(graph: nx.Graph) -> Graph:
    """Graph on the nodes of graph, numbered in sorted node order"""
    nodes = sorted(graph.nodes)
    index = {node: i for i, node in enumerate(nodes)}
    return Graph.from_edges(len(nodes), ((index[a], index[b]) for a, b in graph.edges))


# -----------------------------
# JSON result models
# -----------------------------
class PartitionReport(BaseModel):
    """Result of the partition and residual commands"""
    classes: List[List[int]]
    sequence: List[int]
    d_R: int
    residual_g6: str

    @classmethod
    def build(cls, partition: DistancePartition, result: ResidualResult) -> "PartitionReport":
        return cls(
            classes=[list(c) for c in partition.classes],
            sequence=partition.sequence().as_list(),
            d_R=result.d_R,
            residual_g6=serialize_graph6(result.residual),
        )


class VerifyReport(BaseModel):
    """verify command output; elapsed time is logged, never printed"""
    theorem: str
    trials: int
    seed: int
    max_n: int
    passed: bool
    case_counts: Dict[str, int]
    failures: List[TrialFailure]

    @classmethod
    def build(cls, report: VerificationReport) -> "VerifyReport":
        return cls(
            theorem=report.theorem.value,
            trials=report.trials,
            seed=report.seed,
            max_n=report.max_n,
            passed=report.passed,
            case_counts=dict(sorted(report.case_counts.items())),
            failures=list(report.failures),
        )
