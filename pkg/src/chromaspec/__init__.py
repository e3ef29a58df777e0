"""Normalized-Laplacian spectra of simple graphs and chromatic-bound tooling.

Library surface: graph construction and combinatorics (:mod:`.graphs`),
spectra and eigenpair verification (:mod:`.spectral`), exact coloring and
coloring-tied eigenfunctions (:mod:`.coloring`), family generators with exact
spectrum oracles (:mod:`.families`), composition operators (:mod:`.compose`),
eigenvalue bounds and reports (:mod:`.bounds`), and exhaustive small-graph
search (:mod:`.search`).
"""

from .bounds import BoundReport, full_report, hoffman_bound
from .coloring import Coloring, chromatic_number, enumerate_chi_colorings, is_equitable_DinvA
from .graphs import Graph, GraphError, from_edge_list, is_connected, read_edge_list, write_edge_list
from .spectral import (
    Spectrum,
    largest_eigenvalue,
    multiplicity_of,
    normalized_laplacian,
    rayleigh_quotient,
    spectrum,
    symmetrized_laplacian,
    verify_eigenpair,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "Coloring",
    "Graph",
    "GraphError",
    "Spectrum",
    "chromatic_number",
    "enumerate_chi_colorings",
    "from_edge_list",
    "full_report",
    "hoffman_bound",
    "is_connected",
    "is_equitable_DinvA",
    "largest_eigenvalue",
    "multiplicity_of",
    "normalized_laplacian",
    "rayleigh_quotient",
    "read_edge_list",
    "spectrum",
    "symmetrized_laplacian",
    "verify_eigenpair",
    "write_edge_list",
    "__version__",
]
