"""Exhaustive scan over small connected graphs for sharp instances.

Graphs are enumerated as upper-triangular adjacency bitmasks, filtered for
connectivity (see _kernels), and deduplicated by a canonical form: iterated
degree refinement narrows the permutation group, with an exhaustive
permutation fallback inside refinement cells. Desk scale only (n <= 9).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

import numpy as np

from ._kernels import connected_masks, pair_bit_index
from .bounds import SHARPNESS_TOL
from .coloring import chromatic_number
from .graphs import Graph, GraphError, from_edge_list
from .spectral import largest_eigenvalue, spectrum

__all__ = ["SEARCH_CAP", "SearchHit", "graph_from_mask", "canonical_mask", "search_sharp"]

SEARCH_CAP = 9


@dataclass(frozen=True)
class SearchHit:
    n: int
    mask: int
    edges: tuple[tuple[int, int], ...]
    chi: int
    lambda_max: float
    multiplicity: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(e) for e in self.edges],
            "chi": self.chi,
            "lambda_max": self.lambda_max,
            "multiplicity": self.multiplicity,
        }


def graph_from_mask(n: int, mask: int) -> Graph:
    idx = pair_bit_index(n)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if (mask >> int(idx[i, j])) & 1
    ]
    return from_edge_list(n, edges)


def _mask_under_perm(n: int, mask: int, perm: tuple[int, ...], idx: np.ndarray) -> int:
    out = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (mask >> int(idx[i, j])) & 1:
                out |= 1 << int(idx[perm[i], perm[j]])
    return out


def _refinement_cells(g: Graph) -> list[list[int]]:
    """Vertex partition stable under iterated neighbor-label refinement."""
    labels = list(g.degrees)
    for _ in range(g.n):
        new = [
            (labels[v], tuple(sorted(labels[w] for w in g.neighbors[v])))
            for v in range(g.n)
        ]
        canon = {lab: i for i, lab in enumerate(sorted(set(new)))}
        refined = [canon[lab] for lab in new]
        if refined == labels:
            break
        labels = refined
    cells: dict[int, list[int]] = {}
    for v, lab in enumerate(labels):
        cells.setdefault(lab, []).append(v)
    return [cells[lab] for lab in sorted(cells)]


def canonical_mask(n: int, mask: int) -> int:
    """Minimum adjacency bitmask over all cell-respecting relabelings."""
    idx = pair_bit_index(n)
    g = graph_from_mask(n, mask)
    cells = _refinement_cells(g)
    best = None
    # positions: cell c occupies a contiguous block of new labels
    starts = []
    pos = 0
    for cell in cells:
        starts.append(pos)
        pos += len(cell)
    for combo in product(*(permutations(cell) for cell in cells)):
        perm = [0] * n
        for cell_perm, start in zip(combo, starts):
            for offset, old in enumerate(cell_perm):
                perm[old] = start + offset
        cand = _mask_under_perm(n, mask, tuple(perm), idx)
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


def search_sharp(
    max_n: int,
    mult: int | None = None,
    tol: float = SHARPNESS_TOL,
) -> list[SearchHit]:
    """All connected graphs with n <= max_n attaining lambda_N = chi/(chi-1).

    With ``mult`` set, only hits whose top-eigenvalue multiplicity equals it
    are kept. One hit per isomorphism class, sorted by (n, canonical mask).
    """
    if max_n > SEARCH_CAP:
        raise GraphError(f"search supports max_n <= {SEARCH_CAP}, got {max_n}")
    if max_n < 2:
        raise GraphError("search needs max_n >= 2")
    hits: list[SearchHit] = []
    for n in range(2, max_n + 1):
        seen: set[int] = set()
        for raw in connected_masks(n):
            mask = int(raw)
            cmask = canonical_mask(n, mask)
            if cmask in seen:
                continue
            seen.add(cmask)
            g = graph_from_mask(n, cmask)
            chi = chromatic_number(g)
            if chi < 2:
                continue
            lam, m = largest_eigenvalue(spectrum(g))
            if abs(lam - chi / (chi - 1)) > tol:
                continue
            if mult is not None and m != mult:
                continue
            hits.append(
                SearchHit(n, cmask, tuple(graph_from_mask(n, cmask).edges()), chi, lam, m)
            )
    hits.sort(key=lambda h: (h.n, h.mask))
    return hits
