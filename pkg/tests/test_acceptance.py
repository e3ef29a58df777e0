"""Acceptance suite: one test per acceptance criterion, numbered 1-11.

Each test is self-contained and states its tolerance explicitly. The random
corpora are seeded so every run checks the identical set of graphs.
"""

from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from chromaspec.bounds import (
    duplicate_classes,
    twin_classes,
    upper_bound_equal_classes,
    upper_bound_general,
    upper_bound_regular_equitable,
)
from chromaspec.certificates import g_ktd_certificates
from chromaspec.coloring import (
    Coloring,
    chromatic_number,
    class_indicator_pm,
    enumerate_chi_colorings,
    is_equitable_DinvA,
    pair_pm,
)
from chromaspec.compose import (
    edge_disjoint_union,
    glue_eigenbasis,
    one_sum,
    one_sum_lambda_max_check,
)
from chromaspec.families import (
    complete,
    complete_bipartite,
    complete_split,
    g_ktd,
    g_ktd_lambda_max_case,
    generalized_petal,
    oracle_lambda_max_complete_split,
    oracle_spectrum_bipartite,
    oracle_spectrum_complete,
    oracle_spectrum_g_ktd,
    oracle_spectrum_petal,
    oracle_spectrum_turan,
    petal,
    turan,
)
from chromaspec.graphs import Graph, from_edge_list, is_regular, write_edge_list
from chromaspec.search import graph_from_mask, search_sharp
from chromaspec.spectral import (
    eigensystem,
    largest_eigenvalue,
    multiplicity_of,
    spectrum,
    verify_eigenpair,
)
from chromaspec.verify import random_connected_graph

from conftest import bowtie

VALUE_TOL = 1e-8
RESIDUAL_TOL = 1e-9


def family_instances() -> list[tuple[str, Graph]]:
    """Every family instance named by the acceptance grid."""
    out: list[tuple[str, Graph]] = []
    out += [(f"K_{n}", complete(n)) for n in range(2, 13)]
    out += [
        (f"K_{{{a},{b}}}", complete_bipartite(a, b))
        for a in range(1, 12)
        for b in range(1, 12 - a + 1)
        if a + b <= 12 and a + b >= 2
    ]
    out += [
        (f"T({n},{k})", turan(n, k))
        for n in range(2, 13)
        for k in range(2, n + 1)
        if n % k == 0
    ]
    out += [(f"petal({m})", petal(m)) for m in range(1, 7)]
    return out


def assert_spectrum_matches(g: Graph, oracle, label: str) -> None:
    got = spectrum(g).groups
    expected = oracle.sorted_groups()
    assert len(got) == len(expected), label
    for (gv, gm), (ev, em) in zip(got, expected):
        assert abs(gv - float(ev)) <= VALUE_TOL, label
        assert gm == em, label


@pytest.fixture(scope="module")
def random_corpus():
    rng = np.random.default_rng(20260823)
    return [random_connected_graph(rng, n_max=10) for _ in range(500)]


def test_criterion_01_family_spectra():
    oracles = {
        "K": oracle_spectrum_complete,
        "Kab": oracle_spectrum_bipartite,
        "T": oracle_spectrum_turan,
        "petal": oracle_spectrum_petal,
    }
    for n in range(2, 13):
        assert_spectrum_matches(complete(n), oracles["K"](n), f"K_{n}")
    for a in range(1, 12):
        for b in range(a, 12 - a + 1):
            assert_spectrum_matches(
                complete_bipartite(a, b), oracles["Kab"](a, b), f"K_{{{a},{b}}}"
            )
    for n in range(4, 13):
        for k in range(2, n):
            if n % k == 0:
                assert_spectrum_matches(turan(n, k), oracles["T"](n, k), f"T({n},{k})")
    for m in range(1, 7):
        assert_spectrum_matches(petal(m), oracles["petal"](m), f"petal({m})")


def test_criterion_02_g_ktd_spectra():
    checked = 0
    for k in range(2, 6):
        for theta in range(2, 6):
            for d in range(1, k):
                assert_spectrum_matches(
                    g_ktd(k, theta, d),
                    oracle_spectrum_g_ktd(k, theta, d),
                    f"Gktd({k},{theta},{d})",
                )
                checked += 1
            if k >= theta and k * theta > 4:
                assert_spectrum_matches(
                    g_ktd(k, theta, k),
                    oracle_spectrum_g_ktd(k, theta, k),
                    f"Gktd({k},{theta},{k})",
                )
                checked += 1
    assert checked == 4 * (1 + 2 + 3 + 4) + 9  # d < k grid plus the d = k cases


def test_criterion_03_case_table():
    seen_cases = set()
    for k in range(2, 6):
        for theta in range(2, 6):
            for d in range(1, k + 1):
                if k == theta == d == 2 or (d == k and k < theta):
                    continue
                lam, mult, case = g_ktd_lambda_max_case(k, theta, d)
                measured, m = largest_eigenvalue(spectrum(g_ktd(k, theta, d)))
                label = f"Gktd({k},{theta},{d})"
                assert abs(measured - float(lam)) <= VALUE_TOL, label
                assert m == mult, label
                seen_cases.add(case)
    # the case-5 counterexample: lambda_max exceeds chi/(chi-1)
    lam, mult, case = g_ktd_lambda_max_case(2, 5, 1)
    assert (lam, mult, case) == (Fraction(3, 2), 1, 5)
    g = g_ktd(2, 5, 1)
    chi = chromatic_number(g)
    assert chi == 5 and lam > Fraction(chi, chi - 1) == Fraction(5, 4)
    measured, _ = largest_eigenvalue(spectrum(g))
    assert abs(measured - 1.5) <= VALUE_TOL
    assert seen_cases == {1, 2, 3, 4, 5, 6}


def test_criterion_04_lower_bound_universality(random_corpus):
    graphs = [g for _, g in family_instances()] + random_corpus
    assert len(random_corpus) == 500
    for g in graphs:
        chi = chromatic_number(g)
        if chi < 2:
            continue
        lam, _ = largest_eigenvalue(spectrum(g))
        assert lam >= chi / (chi - 1) - VALUE_TOL
        is_complete = g.num_edges == g.n * (g.n - 1) // 2
        if not is_complete and chi >= 3 and g.n >= 2:
            assert lam >= (g.n + 1) / (g.n - 1) - VALUE_TOL


def test_criterion_05_equitable_necessity(random_corpus):
    checked = 0
    for g in [g for _, g in family_instances()] + random_corpus:
        chi = chromatic_number(g)
        if chi < 2:
            continue
        lam, _ = largest_eigenvalue(spectrum(g))
        if abs(lam - chi / (chi - 1)) > VALUE_TOL:
            continue
        for c in enumerate_chi_colorings(g, chi):
            assert is_equitable_DinvA(g, c)
            checked += 1
    assert checked > 100  # the corpus must actually contain sharp graphs


def test_criterion_06_multiplicity_floor(random_corpus):
    for g in [g for _, g in family_instances()] + random_corpus:
        chi = chromatic_number(g)
        if chi < 2:
            continue
        s = spectrum(g)
        lam, mult = largest_eigenvalue(s)
        if abs(lam - chi / (chi - 1)) > VALUE_TOL:
            continue
        assert mult >= chi - 1
        if mult == chi - 1:
            assert len(enumerate_chi_colorings(g, chi)) == 1


def test_criterion_07_one_sum_calculus():
    # (a) interlacing and (b) chromatic number over 200 seeded random pairs
    rng = np.random.default_rng(7)
    for _ in range(200):
        g1 = random_connected_graph(rng, n_max=10)
        g2 = random_connected_graph(rng, n_max=10)
        x1 = int(rng.integers(g1.n))
        x2 = int(rng.integers(g2.n))
        lam, bound, ok = one_sum_lambda_max_check(g1, x1, g2, x2)
        assert ok and lam <= bound + VALUE_TOL
        glued = one_sum(g1, x1, g2, x2).result
        assert chromatic_number(glued) == max(
            chromatic_number(g1), chromatic_number(g2)
        )

    # (c) sharp + sharp with equal chi stays sharp with multiplicity m1+m2-1
    pools = {
        2: [complete(2), turan(4, 2), turan(6, 2)],
        3: [complete(3), turan(6, 3), turan(9, 3), petal(2), petal(3), bowtie()],
        4: [complete(4), turan(8, 4), turan(12, 4)],
    }
    for chi, pool in pools.items():
        target = chi / (chi - 1)
        for g1, g2 in combinations(pool, 2):
            m1 = multiplicity_of(spectrum(g1), target)
            m2 = multiplicity_of(spectrum(g2), target)
            glued = one_sum(g1, 0, g2, g2.n - 1).result
            s = spectrum(glued)
            lam, mult = largest_eigenvalue(s)
            assert abs(lam - target) <= VALUE_TOL
            assert mult == m1 + m2 - 1

    # (d) generalized petal law
    for n in (2, 3, 4):
        for m in range(1, 6):
            g = generalized_petal(m, n)
            lam, mult = largest_eigenvalue(spectrum(g))
            assert abs(lam - n / (n - 1)) <= VALUE_TOL
            assert mult == g.n - m  # m(n-1) - m + 1 with |V| = m(n-1) + 1

    # (e) 2-clique-sum fixtures
    c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    k4_minus_e = from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    lam_c4, _ = largest_eigenvalue(spectrum(c4))
    lam_k4e, _ = largest_eigenvalue(spectrum(k4_minus_e))
    assert abs(lam_c4 - 2.0) <= 1e-10
    assert abs(lam_k4e - 5 / 3) <= 1e-10


def test_criterion_08_edge_disjoint_union():
    rng = np.random.default_rng(8)
    done = 0
    while done < 100:
        n = int(rng.integers(4, 11))
        g1 = random_connected_graph(rng, n_max=n)
        if g1.n != n:
            g1 = from_edge_list(n, list(g1.edges()))  # pad to the shared space
        forbidden = set(g1.edges())
        candidates = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if (i, j) not in forbidden
        ]
        if len(candidates) < 2:
            continue
        take = rng.choice(len(candidates), size=min(4, len(candidates)), replace=False)
        g2 = from_edge_list(n, [candidates[i] for i in take])
        glued = edge_disjoint_union(g1, g2)
        if 0 in glued.result.degrees:
            continue
        lam, _ = largest_eigenvalue(spectrum(glued.result))
        lams = []
        for g in (g1, g2):
            live = [v for v in range(n) if g.degrees[v] > 0]
            sub = from_edge_list(len(live), [
                (live.index(v), live.index(w)) for v, w in g.edges()
            ])
            lams.append(largest_eigenvalue(spectrum(sub))[0])
        assert lam <= max(lams) + VALUE_TOL
        done += 1

    # single shared vertex: byte-for-byte agreement with one_sum
    for g1, x1, g2, x2 in [
        (complete(3), 0, complete(3), 0),
        (petal(2), 3, complete(4), 1),
        (turan(6, 3), 5, bowtie(), 2),
    ]:
        expected = one_sum(g1, x1, g2, x2)
        emb1, emb2 = expected.embeddings
        n = expected.result.n
        a = from_edge_list(n, [(emb1[v], emb1[w]) for v, w in g1.edges()])
        b = from_edge_list(n, [(emb2[v], emb2[w]) for v, w in g2.edges()])
        overlay = edge_disjoint_union(a, b)
        assert write_edge_list(overlay.result) == write_edge_list(expected.result)


def test_criterion_09_eigenfunction_certificates():
    # f_ij on equitable colorings at k/(k-1)
    equitable_cases = [
        (turan(9, 3), [[0, 1, 2], [3, 4, 5], [6, 7, 8]]),
        (turan(12, 4), [[3 * i, 3 * i + 1, 3 * i + 2] for i in range(4)]),
        (petal(3), [[0], [1, 2, 3], [4, 5, 6]]),
        (g_ktd(2, 5, 1), [[2 * i, 2 * i + 1] for i in range(5)]),
    ]
    for g, classes in equitable_cases:
        c = Coloring.from_classes(g.n, classes)
        assert is_equitable_DinvA(g, c)
        k = c.k
        for i in range(1, k):
            f = class_indicator_pm(g, c, 0, i)
            pair = verify_eigenpair(g, k / (k - 1), f, tol=RESIDUAL_TOL)
            assert pair.valid

    # f_{v,w} for twins at (d+1)/d and duplicates at 1
    for g in (complete(5), petal(4), bowtie()):
        for vs in twin_classes(g):
            v, w = vs[0], vs[1]
            d = g.degrees[v]
            assert verify_eigenpair(g, (d + 1) / d, pair_pm(g, v, w), tol=RESIDUAL_TOL).valid
    for g in (complete_bipartite(3, 2), turan(9, 3), complete_split(4, 3)):
        for vs in duplicate_classes(g):
            v, w = vs[0], vs[1]
            assert verify_eigenpair(g, 1.0, pair_pm(g, v, w), tol=RESIDUAL_TOL).valid

    # the six g_ktd certificate families
    for k in range(2, 6):
        for theta in range(2, 6):
            for d in range(1, k):
                g = g_ktd(k, theta, d)
                certs = g_ktd_certificates(k, theta, d)
                assert len(certs) == k * theta - 1
                for lam, f in certs:
                    assert verify_eigenpair(g, float(lam), f, tol=RESIDUAL_TOL).valid

    # glued eigenbases on 1-sums
    def top_basis(g, lam):
        s, funcs = eigensystem(g)
        cols = [j for j, v in enumerate(s.eigenvalues) if abs(v - lam) <= 1e-8]
        return funcs[:, cols].T

    for g1, g2, lam in [
        (complete(3), complete(3), 1.5),
        (petal(2), turan(6, 3), 1.5),
        (complete(4), complete(4), 4 / 3),
    ]:
        out = glue_eigenbasis(g1, 0, top_basis(g1, lam), g2, 0, top_basis(g2, lam), lam)
        glued = one_sum(g1, 0, g2, 0).result
        assert out
        for f in out:
            assert verify_eigenpair(glued, lam, f, tol=RESIDUAL_TOL).valid


def test_criterion_10_upper_bounds(random_corpus):
    # N/delta with equality on Turan graphs
    for n in range(4, 13):
        for k in range(2, n):
            if n % k != 0:
                continue
            g = turan(n, k)
            size = n // k
            c = Coloring.from_classes(
                n, [list(range(size * i, size * (i + 1))) for i in range(k)]
            )
            bound = upper_bound_equal_classes(g, c)
            lam, _ = largest_eigenvalue(spectrum(g))
            assert bound is not None and abs(lam - bound) <= VALUE_TOL

    # general bound on family instances and the random corpus
    regular_equitable_seen = 0
    for g in [g for _, g in family_instances()] + random_corpus:
        chi = chromatic_number(g)
        if chi < 2:
            continue
        colorings = enumerate_chi_colorings(g, chi)
        c = colorings[0]
        lam, _ = largest_eigenvalue(spectrum(g))
        assert lam <= upper_bound_general(g, c) + VALUE_TOL
        eq = upper_bound_equal_classes(g, c)
        if eq is not None:
            assert lam <= eq + VALUE_TOL
        if is_regular(g) is not None:
            for c2 in colorings:
                reg = upper_bound_regular_equitable(g, c2)
                if reg is not None:
                    assert lam <= reg + VALUE_TOL
                    regular_equitable_seen += 1
    assert regular_equitable_seen > 0

    # complete split formula
    for t in range(1, 9):
        for chi in range(2, 6):
            g = complete_split(t, chi)
            lam, _ = largest_eigenvalue(spectrum(g))
            expected = float(oracle_lambda_max_complete_split(t, chi))
            assert abs(lam - expected) <= VALUE_TOL
            assert abs(expected - (1 + t / (g.n - 1))) <= VALUE_TOL


def test_criterion_11_search_ground_truth():
    hits = search_sharp(5)
    five = [h for h in hits if h.n == 5]

    mult4 = [h for h in five if h.multiplicity == 4]
    assert len(mult4) == 1
    assert graph_from_mask(5, mult4[0].mask).rows == complete(5).rows

    mult3 = [h for h in five if h.multiplicity == 3]
    assert len(mult3) == 1
    hit = mult3[0]
    assert hit.chi == 3 and abs(hit.lambda_max - 1.5) <= VALUE_TOL
    got = graph_from_mask(5, hit.mask)
    # bowtie up to isomorphism: degree sequence and spectrum pin it at n = 5
    assert sorted(got.degrees) == [2, 2, 2, 2, 4]
    for (gv, gm), (bv, bm) in zip(spectrum(got).groups, spectrum(bowtie()).groups):
        assert abs(gv - bv) <= VALUE_TOL and gm == bm
