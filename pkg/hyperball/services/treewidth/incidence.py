"""
HyperBall - Incidence Graph

Bipartite graph on the vectors (blues, then reds, in file order) and the
coordinates 1..d, with an edge between v and i whenever v[i] = 1. Vertex k < |V|
is vector k; vertex |V| + i − 1 is coordinate i.

Licensed under the MIT License.
"""

from dataclasses import dataclass
from typing import Optional

import networkx as nx

from hyperball.services.geometry import BitVector, Instance


@dataclass
class IncidenceGraph:
    inst: Instance
    graph: nx.Graph

    @property
    def num_vectors(self) -> int:
        return len(self.inst.blues) + len(self.inst.reds)

    @property
    def num_vertices(self) -> int:
        return self.num_vectors + self.inst.dim

    def is_vector(self, vertex: int) -> bool:
        return vertex < self.num_vectors

    def vector(self, vertex: int) -> BitVector:
        return self.inst.vectors[vertex]

    def is_blue(self, vertex: int) -> bool:
        return vertex < len(self.inst.blues)

    def coordinate(self, vertex: int) -> Optional[int]:
        """Coordinate number of a coordinate vertex, None for a vector vertex."""
        if self.is_vector(vertex):
            return None
        return vertex - self.num_vectors + 1

    def coordinate_vertex(self, coordinate: int) -> int:
        return self.num_vectors + coordinate - 1


def build_incidence_graph(inst: Instance) -> IncidenceGraph:
    vectors = inst.vectors
    offset = len(vectors)
    graph = nx.Graph()
    graph.add_nodes_from(range(offset + inst.dim))
    for index, vector in enumerate(vectors):
        graph.add_edges_from((index, offset + i - 1) for i in vector.support)
    return IncidenceGraph(inst, graph)
