import os
import subprocess
import sys

import numpy as np
import pytest

from chromaspec._kernels import (
    _connected_masks_numpy,
    _connected_masks_python,
    connected_masks,
    pair_bit_index,
    using_numba,
)
from chromaspec.families import complete
from chromaspec.graphs import GraphError, is_connected
from chromaspec.search import (
    SEARCH_CAP,
    canonical_mask,
    graph_from_mask,
    search_sharp,
)

from conftest import bowtie

# labeled connected graphs on n vertices (OEIS A001187)
CONNECTED_LABELED = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728}
# connected graphs up to isomorphism (OEIS A001349)
CONNECTED_UNLABELED = {2: 1, 3: 2, 4: 6, 5: 21}


def mask_of(g):
    idx = pair_bit_index(g.n)
    mask = 0
    for v, w in g.edges():
        mask |= 1 << int(idx[v, w])
    return mask


class TestKernels:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_counts_match_known_values(self, n):
        assert len(connected_masks(n)) == CONNECTED_LABELED[n]

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_numpy_and_python_paths_agree(self, n):
        a = _connected_masks_numpy(n)
        b = _connected_masks_python(n, pair_bit_index(n))
        assert np.array_equal(np.sort(a), np.sort(b))

    def test_masks_are_connected(self):
        for raw in connected_masks(4):
            assert is_connected(graph_from_mask(4, int(raw)))

    def test_env_flag_forces_numpy_path(self):
        env = dict(os.environ, CHROMASPEC_NO_NUMBA="1")
        out = subprocess.run(
            [
                sys.executable,
                "-c",
                "from chromaspec._kernels import using_numba, connected_masks;"
                "print(using_numba(), len(connected_masks(4)))",
            ],
            env=env,
            capture_output=True,
            text=True,
            check=True,
        )
        assert out.stdout.split() == ["False", "38"]

    def test_using_numba_reports_bool(self):
        assert isinstance(using_numba(), bool)


class TestCanonicalMask:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_isomorphism_class_counts(self, n):
        classes = {canonical_mask(n, int(m)) for m in connected_masks(n)}
        assert len(classes) == CONNECTED_UNLABELED[n]

    def test_invariant_under_permutation(self):
        rng = np.random.default_rng(1)
        idx = pair_bit_index(5)
        for raw in rng.choice(connected_masks(5), size=20, replace=False):
            mask = int(raw)
            g = graph_from_mask(5, mask)
            perm = rng.permutation(5)
            permuted = 0
            for v, w in g.edges():
                permuted |= 1 << int(idx[perm[v], perm[w]])
            assert canonical_mask(5, permuted) == canonical_mask(5, mask)

    def test_mask_round_trip(self):
        g = bowtie()
        assert graph_from_mask(5, mask_of(g)).rows == g.rows


@pytest.fixture(scope="module")
def hits5():
    return search_sharp(5)


class TestSearchSharp:
    def test_k5_unique_with_multiplicity_4(self, hits5):
        mult4 = [h for h in hits5 if h.n == 5 and h.multiplicity == 4]
        assert len(mult4) == 1
        hit = mult4[0]
        assert hit.chi == 5 and len(hit.edges) == 10
        assert graph_from_mask(5, hit.mask).rows == complete(5).rows

    def test_bowtie_unique_with_multiplicity_3(self, hits5):
        mult3 = [h for h in hits5 if h.n == 5 and h.multiplicity == 3]
        assert len(mult3) == 1
        hit = mult3[0]
        assert hit.chi == 3 and hit.lambda_max == pytest.approx(1.5)
        assert canonical_mask(5, hit.mask) == canonical_mask(5, mask_of(bowtie()))

    def test_complete_graphs_are_the_mult_n_minus_1_hits(self, hits5):
        for n in range(2, 6):
            hits = [h for h in hits5 if h.n == n and h.multiplicity == n - 1]
            # K_2 is bipartite: its top multiplicity is 1 = n - 1 as well
            complete_hits = [
                h for h in hits if graph_from_mask(n, h.mask).rows == complete(n).rows
            ]
            assert len(complete_hits) == 1

    def test_mult_filter(self, hits5):
        filtered = search_sharp(5, mult=4)
        assert [h.mask for h in filtered] == [
            h.mask for h in hits5 if h.multiplicity == 4
        ]

    def test_hits_sorted_and_deduplicated(self, hits5):
        keys = [(h.n, h.mask) for h in hits5]
        assert keys == sorted(keys) and len(set(keys)) == len(keys)

    def test_all_hits_are_sharp(self, hits5):
        for h in hits5:
            assert h.lambda_max == pytest.approx(h.chi / (h.chi - 1))

    def test_cap_enforced(self):
        with pytest.raises(GraphError):
            search_sharp(SEARCH_CAP + 1)

    def test_min_size(self):
        with pytest.raises(GraphError):
            search_sharp(1)

    def test_to_dict(self, hits5):
        d = hits5[0].to_dict()
        assert set(d) == {"n", "edges", "chi", "lambda_max", "multiplicity"}
