"""Exact spanning-tree enumeration on Tower-of-Hanoi graphs H_n.

Counts of spanning trees and forests by decimation, spanning-tree entropy,
exact per-vertex degree distributions over all spanning trees, and
brute-force oracles (matrix-tree determinants, enumeration, Wilson
sampling) to check them.
"""

from hanoispan.counting import ClassVector, count_closed, count_recursive, entropy, verify_identities
from hanoispan.degree import (
    DistVector,
    connecting_counts,
    degree_distribution,
    full_distribution_table,
    outmost_counts,
    outmost_dist,
    transfer_matrix,
    vertex_dist,
)
from hanoispan.graph import HanoiGraph, build_graph, classify_vertex, compress_label, export_edges
from hanoispan.kernels import BACKEND

__all__ = [
    "BACKEND",
    "ClassVector",
    "DistVector",
    "HanoiGraph",
    "build_graph",
    "classify_vertex",
    "compress_label",
    "connecting_counts",
    "count_closed",
    "count_recursive",
    "degree_distribution",
    "entropy",
    "export_edges",
    "full_distribution_table",
    "outmost_counts",
    "outmost_dist",
    "transfer_matrix",
    "verify_identities",
    "vertex_dist",
]
