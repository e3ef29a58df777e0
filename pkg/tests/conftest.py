"""Shared fixtures and small independent oracles for the test suite.

The brute-force helpers here deliberately avoid the library's own search and
enumeration code so that tests compare two independent computations.
"""

from __future__ import annotations

from itertools import product

import numpy as np
import pytest

from chromaspec.graphs import Graph, from_edge_list


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """Center 0 joined to `leaves` leaf vertices."""
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def bowtie() -> Graph:
    """Two triangles sharing vertex 0."""
    return from_edge_list(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def brute_chromatic(g: Graph) -> int:
    """Smallest k admitting a proper coloring, by exhaustive assignment."""
    if g.num_edges == 0:
        return 1
    for k in range(2, g.n + 1):
        for assignment in product(range(k), repeat=g.n):
            if all(assignment[v] != assignment[w] for v, w in g.edges()):
                return k
    raise AssertionError("unreachable: g.n colors always suffice")


def brute_canonical_colorings(g: Graph, k: int) -> set[tuple[int, ...]]:
    """All proper k-colorings using every color, canonicalized and deduped.

    Canonical form: classes renumbered by first occurrence along the vertex
    order. Independent of the library's enumeration.
    """
    out: set[tuple[int, ...]] = set()
    for assignment in product(range(k), repeat=g.n):
        if len(set(assignment)) != k:
            continue
        if any(assignment[v] == assignment[w] for v, w in g.edges()):
            continue
        relabel: dict[int, int] = {}
        canon = []
        for c in assignment:
            relabel.setdefault(c, len(relabel))
            canon.append(relabel[c])
        out.add(tuple(canon))
    return out


def brute_spectrum(g: Graph) -> np.ndarray:
    """Sorted eigenvalues of I - D^{-1} A via the generic dense eigensolver.

    Independent cross-check: solves the *non-symmetric* form directly.
    """
    a = g.adjacency_matrix()
    d = np.asarray(g.degrees, dtype=float)
    lap = np.eye(g.n) - a / d[:, None]
    vals = np.linalg.eigvals(lap)
    assert np.max(np.abs(vals.imag)) < 1e-9
    return np.sort(vals.real)


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(0)
