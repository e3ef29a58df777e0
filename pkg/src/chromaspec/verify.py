"""Named verification suites over family oracles and random corpora.

Each suite returns a list of (check name, passed, detail) rows; the CLI
renders them as a table and exits nonzero if anything failed. The random
corpora are reproducible from the seed.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import numpy as np

from . import bounds, compose, families, spectral
from .certificates import g_ktd_certificates
from .coloring import (
    Coloring,
    chromatic_number,
    enumerate_chi_colorings,
    is_equitable_DinvA,
)
from .graphs import Graph, from_edge_list, is_connected
from .spectral import largest_eigenvalue, multiplicity_of, spectrum, verify_eigenpair

__all__ = ["random_connected_graph", "SUITES", "run_suites"]

Row = tuple[str, bool, str]


def random_connected_graph(rng: np.random.Generator, n_max: int = 10) -> Graph:
    """Connected G(n, p) sample; resamples until connected."""
    while True:
        n = int(rng.integers(2, n_max + 1))
        p = float(rng.uniform(0.2, 0.9))
        edges = [
            (i, j) for i, j in combinations(range(n), 2) if rng.random() < p
        ]
        g = from_edge_list(n, edges)
        if is_connected(g):
            return g


def _family_grid() -> list[tuple[str, Graph, families.ExactSpectrum]]:
    items: list[tuple[str, Graph, families.ExactSpectrum]] = []
    for n in range(2, 15):
        items.append((f"K_{n}", families.complete(n), families.oracle_spectrum_complete(n)))
    for a in range(1, 12):
        for b in range(1, 13 - a):
            items.append(
                (
                    f"K_{{{a},{b}}}",
                    families.complete_bipartite(a, b),
                    families.oracle_spectrum_bipartite(a, b),
                )
            )
    for n in range(4, 13):
        for k in range(2, n + 1):
            if n % k == 0:
                items.append(
                    (f"T({n},{k})", families.turan(n, k), families.oracle_spectrum_turan(n, k))
                )
    for m in range(1, 7):
        items.append((f"petal({m})", families.petal(m), families.oracle_spectrum_petal(m)))
    for k in range(2, 6):
        for theta in range(2, 6):
            for d in range(0, k + 1):
                try:
                    oracle = families.oracle_spectrum_g_ktd(k, theta, d)
                except Exception:
                    continue
                items.append(
                    (f"Gktd({k},{theta},{d})", families.g_ktd(k, theta, d), oracle)
                )
    return items


def _spectra_match(g: Graph, oracle: families.ExactSpectrum, tol: float = 1e-8) -> bool:
    s = spectrum(g, tol)
    got = list(s.groups)
    want = oracle.sorted_groups()
    if len(got) != len(want):
        return False
    return all(
        abs(gv - float(wv)) <= tol and gm == wm
        for (gv, gm), (wv, wm) in zip(got, want)
    )


def suite_families(seed: int, caps: dict) -> list[Row]:
    rows: list[Row] = []
    grid = _family_grid()
    bad = [name for name, g, oracle in grid if not _spectra_match(g, oracle)]
    rows.append(
        (
            "family spectra match exact oracles",
            not bad,
            f"{len(grid)} instances" + (f"; failed: {bad[:3]}" if bad else ""),
        )
    )

    iso_ok = True
    for k in range(2, 5):
        for theta in range(2, k + 1):
            g1 = families.g_ktd(k, theta, k)
            g2 = families.g_ktd(theta, k, theta)
            # v_j^i -> v_i^j
            perm = {
                (i - 1) * k + (j - 1): (j - 1) * theta + (i - 1)
                for i in range(1, theta + 1)
                for j in range(1, k + 1)
            }
            mapped = {tuple(sorted((perm[a], perm[b]))) for a, b in g1.edges()}
            if mapped != set(g2.edges()):
                iso_ok = False
    rows.append(("g_ktd(k,t,k) isomorphic to g_ktd(t,k,t)", iso_ok, "index transpose map"))

    chi_ok = True
    unique_ok = True
    equit_ok = True
    for k in range(2, 5):
        for theta in range(2, 5):
            for d in range(0, k + 1):
                if d == k and k < theta:
                    continue
                g = families.g_ktd(k, theta, d)
                chi = chromatic_number(g)
                if chi != theta:
                    chi_ok = False
                canon = Coloring(tuple(v // k for v in range(g.n)), theta)
                if not is_equitable_DinvA(g, canon):
                    equit_ok = False
                if d < k and g.n <= 32:
                    if len(enumerate_chi_colorings(g, theta)) != 1:
                        unique_ok = False
    rows.append(("g_ktd chromatic number equals theta", chi_ok, "grid k,theta<=4"))
    rows.append(("g_ktd with d<k has a unique chi-coloring", unique_ok, ""))
    rows.append(("g_ktd canonical coloring is equitable", equit_ok, ""))

    cert_ok = True
    for k in range(2, 6):
        for theta in range(2, 6):
            for d in range(1, k):
                g = families.g_ktd(k, theta, d)
                for lam, f in g_ktd_certificates(k, theta, d):
                    if not verify_eigenpair(g, float(lam), f, 1e-9).valid:
                        cert_ok = False
    rows.append(("g_ktd eigenfunction certificates verify", cert_ok, "residual <= 1e-9"))

    case_ok = True
    for k in range(2, 6):
        for theta in range(2, 6):
            for d in range(1, k + 1):
                if k == theta == d == 2 or (d == k and k < theta):
                    continue
                lam, mult, _case = families.g_ktd_lambda_max_case(k, theta, d)
                got_lam, got_mult = largest_eigenvalue(spectrum(families.g_ktd(k, theta, d)))
                if abs(got_lam - float(lam)) > 1e-8 or got_mult != mult:
                    case_ok = False
    rows.append(("g_ktd largest-eigenvalue case table", case_ok, "six corollary cases"))

    split_ok = all(
        abs(
            largest_eigenvalue(spectrum(families.complete_split(t, chi)))[0]
            - float(families.oracle_lambda_max_complete_split(t, chi))
        )
        <= 1e-8
        for t in range(1, 9)
        for chi in range(2, 6)
    )
    rows.append(("complete split lambda_max = 1 + t/(N-1)", split_ok, "t<=8, chi<=5"))
    return rows


def _corpus(seed: int, count: int, n_max: int = 10) -> list[Graph]:
    rng = np.random.default_rng(seed)
    return [random_connected_graph(rng, n_max) for _ in range(count)]


def suite_sharp(seed: int, caps: dict) -> list[Row]:
    rows: list[Row] = []
    corpus = _corpus(seed, caps.get("random", 500))
    corpus += [g for _, g, _ in _family_grid() if g.n <= 25]

    lower_ok = True
    strict_ok = True
    equit_ok = True
    floor_ok = True
    unique_ok = True
    for g in corpus:
        chi = chromatic_number(g)
        if chi < 2:
            continue
        spec = spectrum(g)
        lam, _ = largest_eigenvalue(spec)
        bound = chi / (chi - 1)
        if lam < bound - 1e-8:
            lower_ok = False
        n = g.n
        complete = g.num_edges == n * (n - 1) // 2
        bipartite = chi == 2
        if not complete and not bipartite and lam < (n + 1) / (n - 1) - 1e-8:
            strict_ok = False
        if abs(lam - bound) <= 1e-8:
            mult = multiplicity_of(spec, bound)
            if mult < chi - 1:
                floor_ok = False
            colorings = enumerate_chi_colorings(g, chi)
            if not all(is_equitable_DinvA(g, c) for c in colorings):
                equit_ok = False
            if mult == chi - 1 and len(colorings) != 1:
                unique_ok = False
    rows.append(("lambda_N >= chi/(chi-1) on corpus", lower_ok, f"{len(corpus)} graphs"))
    rows.append(("non-complete non-bipartite lambda_N >= (N+1)/(N-1)", strict_ok, ""))
    rows.append(("sharp graphs: all chi-colorings equitable", equit_ok, ""))
    rows.append(("sharp graphs: multiplicity >= chi-1", floor_ok, ""))
    rows.append(("sharp + multiplicity chi-1 implies unique coloring", unique_ok, ""))
    return rows


def suite_onesum(seed: int, caps: dict) -> list[Row]:
    rows: list[Row] = []
    rng = np.random.default_rng(seed)
    pairs = caps.get("pairs", 200)

    interlace_ok = True
    chi_ok = True
    lower_ok = True
    for _ in range(pairs):
        g1 = random_connected_graph(rng)
        g2 = random_connected_graph(rng)
        x1 = int(rng.integers(g1.n))
        x2 = int(rng.integers(g2.n))
        lam, bound, ok = compose.one_sum_lambda_max_check(g1, x1, g2, x2)
        if not ok:
            interlace_ok = False
        glued = compose.one_sum(g1, x1, g2, x2).result
        if chromatic_number(glued) != max(chromatic_number(g1), chromatic_number(g2)):
            chi_ok = False
        s1, s2, s12 = spectrum(g1), spectrum(g2), spectrum(glued)
        for value, m1 in s1.groups:
            m2 = multiplicity_of(s2, value)
            if m2 and multiplicity_of(s12, value) < m1 + m2 - 1:
                lower_ok = False
    rows.append(("1-sum interlacing lambda_max(sum) <= max", interlace_ok, f"{pairs} pairs"))
    rows.append(("chi(1-sum) = max(chi_1, chi_2)", chi_ok, ""))
    rows.append(("m_sum(lambda) >= m_1 + m_2 - 1 for common groups", lower_ok, ""))

    sharp_pool = [
        families.complete(3),
        families.complete(4),
        families.turan(6, 3),
        families.turan(8, 4),
        families.petal(2),
        families.petal(3),
        compose.one_sum(families.complete(3), 0, families.complete(3), 0).result,
    ]
    sharp_ok = True
    for g1 in sharp_pool:
        for g2 in sharp_pool:
            chi1, chi2 = chromatic_number(g1), chromatic_number(g2)
            if chi1 != chi2:
                continue
            bnd = chi1 / (chi1 - 1)
            m1 = multiplicity_of(spectrum(g1), bnd)
            m2 = multiplicity_of(spectrum(g2), bnd)
            glued = compose.one_sum(g1, 0, g2, 0).result
            s = spectrum(glued)
            lam, mult = largest_eigenvalue(s)
            if abs(lam - bnd) > 1e-8 or mult != m1 + m2 - 1:
                sharp_ok = False
    rows.append(("sharp (+) sharp with equal chi stays sharp, m1+m2-1", sharp_ok, ""))

    petal_ok = True
    for n in (2, 3, 4):
        for m in range(1, 6):
            g = families.generalized_petal(m, n)
            lam, mult = largest_eigenvalue(spectrum(g))
            if abs(lam - n / (n - 1)) > 1e-8 or mult != g.n - m:
                petal_ok = False
    rows.append(("generalized petal law lambda = n/(n-1), mult = |V|-m", petal_ok, ""))

    frac_ok = True
    for _ in range(500):
        a, b, c, d = (int(rng.integers(1, 50)) for _ in range(4))
        mid = Fraction(a + b, c + d)
        lo, hi = sorted([Fraction(a, c), Fraction(b, d)])
        if not (lo <= mid <= hi):
            frac_ok = False
        if (mid == lo or mid == hi) != (Fraction(a, c) == Fraction(b, d)):
            frac_ok = False
    rows.append(("mediant lemma: min <= (a+b)/(c+d) <= max", frac_ok, "exact rationals"))

    edu_ok = True
    agree_ok = True
    for _ in range(caps.get("edu", 100)):
        n = int(rng.integers(4, 11))
        g1 = random_connected_graph(rng, n)
        # overlay a random edge-disjoint graph on the same labels
        free = [
            (i, j)
            for i, j in combinations(range(g1.n), 2)
            if not g1.has_edge(i, j)
        ]
        rng.shuffle(free)
        g2_edges = free[: max(1, len(free) // 2)]
        if not g2_edges:
            continue
        g2 = from_edge_list(g1.n, g2_edges)
        if 0 in g2.degrees or not is_connected(g2):
            continue
        glued = compose.edge_disjoint_union(g1, g2)
        lam, _ = largest_eigenvalue(spectrum(glued.result))
        l1, _ = largest_eigenvalue(spectrum(g1))
        l2, _ = largest_eigenvalue(spectrum(g2))
        if lam > max(l1, l2) + 1e-8:
            edu_ok = False
    # single shared vertex: edge-disjoint union coincides with the 1-sum
    for _ in range(20):
        g1 = random_connected_graph(rng, 6)
        g2 = random_connected_graph(rng, 6)
        shifted = from_edge_list(
            g1.n + g2.n - 1,
            [
                (g1.n - 1 if v == 0 else g1.n - 1 + v, g1.n - 1 if w == 0 else g1.n - 1 + w)
                for v, w in g2.edges()
            ],
        )
        via_edu = compose.edge_disjoint_union(g1, shifted).result
        via_sum = compose.one_sum(g1, g1.n - 1, g2, 0).result
        if {tuple(sorted(e)) for e in via_edu.edges()} != {
            tuple(sorted(_relabel_sum_edge(e, g1.n))) for e in via_sum.edges()
        }:
            agree_ok = False
    rows.append(("edge-disjoint union interlacing", edu_ok, ""))
    rows.append(("single shared vertex: union equals 1-sum", agree_ok, ""))
    return rows


def _relabel_sum_edge(edge: tuple[int, int], n1: int) -> tuple[int, int]:
    # 1-sum layout: glue=0, then g1's other vertices, then g2's.
    # map back to the shared-label layout used by the union check:
    # glue -> n1-1, g1 vertex i (1..n1-1) -> i-1, g2 vertex -> unchanged.
    def back(v: int) -> int:
        if v == 0:
            return n1 - 1
        return v - 1 if v <= n1 - 1 else v
    return back(edge[0]), back(edge[1])


def suite_bounds(seed: int, caps: dict) -> list[Row]:
    rows: list[Row] = []
    corpus = _corpus(seed, caps.get("random", 100))
    corpus += [g for _, g, _ in _family_grid() if g.n <= 25]

    upper_ok = True
    hoffman_ok = True
    for g in corpus:
        rep = bounds.full_report(g)
        for _name, value, applicable, satisfied in rep.upper_bounds:
            if applicable and not satisfied:
                upper_ok = False
        if rep.chi + 1e-8 < rep.hoffman:
            hoffman_ok = False
    rows.append(("all applicable upper bounds hold", upper_ok, f"{len(corpus)} graphs"))
    rows.append(("Hoffman bound is a valid chi lower bound", hoffman_ok, ""))

    turan_eq = all(
        abs(
            bounds.upper_bound_equal_classes(
                families.turan(n, k),
                Coloring(tuple(v // (n // k) for v in range(n)), k),
            )
            - largest_eigenvalue(spectrum(families.turan(n, k)))[0]
        )
        <= 1e-8
        for n in range(4, 13)
        for k in range(2, 5)
        if n % k == 0
    )
    rows.append(("N/delta bound tight on Turan graphs", turan_eq, ""))

    split_ok = all(
        abs(
            largest_eigenvalue(spectrum(families.complete_split(t, chi)))[0]
            - float(families.oracle_lambda_max_complete_split(t, chi))
        )
        <= 1e-8
        for t in range(1, 9)
        for chi in range(2, 6)
    )
    rows.append(("complete split lambda_max formula", split_ok, "t<=8, chi<=5"))
    return rows


SUITES = {
    "families": suite_families,
    "sharp": suite_sharp,
    "onesum": suite_onesum,
    "bounds": suite_bounds,
}


def run_suites(names: list[str], seed: int = 0, caps: dict | None = None) -> list[Row]:
    caps = caps or {}
    rows: list[Row] = []
    for name in names:
        for check, ok, detail in SUITES[name](seed, caps):
            rows.append((f"{name}: {check}", ok, detail))
    return rows
