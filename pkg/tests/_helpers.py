"""Shared test utilities."""
import networkx as nx
from networkx.algorithms.isomorphism import categorical_node_match


def to_nx(ball):
    g = nx.Graph()
    dist = ball.bfs_distances(ball.root)
    for v, nbrs in enumerate(ball.adjacency):
        g.add_node(v, dist=dist[v], root=(v == ball.root))
        for u in nbrs:
            g.add_edge(v, u)
    return g


def balls_isomorphic(a, b):
    return nx.is_isomorphic(
        to_nx(a), to_nx(b),
        node_match=categorical_node_match(["dist", "root"], [None, None]))
