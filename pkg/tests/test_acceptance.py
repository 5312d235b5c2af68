"""Acceptance suite: one test per acceptance criterion, one printed
pass/fail line each (run with -s to see the lines).

Criteria 1-4 and 9 replay the frozen benchmark tables; criteria 5-8 are
randomized property checks with fixed seeds and pinned tolerances and
case counts.
"""

import math
import time
from contextlib import contextmanager

import numpy as np
import pytest

from ncap import (
    CapabilityProfile,
    NcapCoordinate,
    WeightVector,
    autonomy_distance,
    classify,
    consensus_report,
    eta_map,
    eta_max,
    eta_sum,
    eta_zsc,
    rank_scores,
    rank_table,
    relative_distance,
    select_reference,
    weighted_product,
)
from ncap.cli import main
from ncap.ingest import Direction, FeatureMatrix, FeatureSpec

from conftest import DATA_DIR
from golden import (
    CAPABILITIES,
    LEVELS,
    PLATFORMS,
    UNIFORM_RELATIVE,
    UNIFORM_RANKS,
    UNIFORM_SCORES,
    USER_RANKS,
    USER_RELATIVE,
    USER_SCORES,
    assert_ranks_match,
)

SCORE_TABLES = {"uniform": UNIFORM_SCORES, "user": USER_SCORES}
RANK_TABLES = {"uniform": UNIFORM_RANKS, "user": USER_RANKS}
RELATIVE_TABLES = {"uniform": UNIFORM_RELATIVE, "user": USER_RELATIVE}


@contextmanager
def criterion(number, description):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number}: FAIL - {description}")
        raise
    print(f"ACCEPTANCE {number}: PASS - {description}")


def coords_for(weighting, method):
    return [
        NcapCoordinate(
            platform=p,
            x=float(LEVELS[p]),
            y=SCORE_TABLES[weighting][method][p],
            method=method,
        )
        for p in PLATFORMS
    ]


def test_criterion_1_autonomy_levels():
    with criterion(1, "benchmark capability profiles classify to levels 3,1,0,3,3,0,0"):
        start = time.perf_counter()
        got = {
            platform: classify(
                CapabilityProfile(platform, *CAPABILITIES[platform])
            ).value
            for platform in PLATFORMS
        }
        elapsed = time.perf_counter() - start
        assert got == LEVELS
        assert elapsed < 1.0


def test_criterion_2_rank_reproduction():
    with criterion(2, "all 10 published score columns rank as published (ties excepted)"):
        start = time.perf_counter()
        for weighting in ("uniform", "user"):
            for method in UNIFORM_SCORES:
                scores = SCORE_TABLES[weighting][method]
                assert_ranks_match(rank_scores(scores), RANK_TABLES[weighting][method], scores)
        elapsed = time.perf_counter() - start
        assert elapsed < 1.0


def test_criterion_3_distance_reproduction():
    with criterion(3, "reference is UAS E everywhere; all 70 relative distances within 0.02"):
        start = time.perf_counter()
        for weighting in ("uniform", "user"):
            for method in UNIFORM_SCORES:
                coords = coords_for(weighting, method)
                assert select_reference(coords) == "UAS E", (weighting, method)
                ref = next(c for c in coords if c.platform == "UAS E")
                for c in coords:
                    expected = RELATIVE_TABLES[weighting][method][c.platform]
                    got = relative_distance(c, ref)
                    assert got == pytest.approx(expected, abs=0.02), (weighting, method, c.platform)
        elapsed = time.perf_counter() - start
        assert elapsed < 1.0


def test_criterion_4_consensus_claim():
    with criterion(4, "UAS E unanimous at rank 1; no unanimity at ranks 2-7, both tables"):
        for weighting in ("uniform", "user"):
            stats = consensus_report(rank_table(SCORE_TABLES[weighting]))
            assert stats.unanimous.get(1) == ("UAS E",), weighting
            for rank in range(2, 8):
                # Known defect: under user-defined weights every method puts
                # UAS A at rank 7, so this clause cannot hold on that table.
                assert rank not in stats.unanimous, (
                    weighting,
                    rank,
                    stats.unanimous.get(rank),
                )


def _spread_column(rng, n, low=-100.0, high=100.0):
    while True:
        column = rng.uniform(low, high, size=n)
        if column.max() - column.min() > 0.01:
            return [float(v) for v in column]


def test_criterion_5_normalization_property_suite():
    with criterion(5, "eta postconditions + invariances hold on 1000 random columns each"):
        rng = np.random.default_rng(20210)
        for _ in range(1000):
            n = int(rng.integers(1, 16))
            positive = [float(v) for v in rng.uniform(0.001, 1000.0, size=n)]

            out = eta_max(positive).values
            assert all(0 < v <= 1 for v in out)
            assert max(out) == 1.0

            out = eta_sum(positive).values
            assert abs(math.fsum(out) - 1.0) <= 1e-9
            total = math.fsum(positive)
            for v, o in zip(positive, out):
                assert abs(o - v / total) <= 1e-9 * abs(o)

            # scale invariance of max and sum
            c = float(rng.uniform(0.001, 1000.0))
            scaled = [c * v for v in positive]
            for eta in (eta_max, eta_sum):
                base, again = eta(positive).values, eta(scaled).values
                for u, v in zip(base, again):
                    assert abs(u - v) <= 1e-9 * max(abs(u), abs(v), 1e-300)

            # order preservation on the positive column
            for eta in (eta_max, eta_sum):
                out = eta(positive).values
                order = np.argsort(positive, kind="stable")
                assert all(
                    out[order[k]] <= out[order[k + 1]] for k in range(n - 1)
                )

            if n < 2:
                continue
            column = _spread_column(rng, n)

            out = eta_map(column).values
            assert all(0.0 <= v <= 1.0 for v in out)
            assert min(out) == 0.0 and max(out) == 1.0

            out = eta_zsc(column).values
            assert abs(math.fsum(out) / n) <= 1e-9
            assert abs(math.fsum(v * v for v in out) / n - 1.0) <= 1e-9

            # affine invariance of map and zsc
            a = float(rng.uniform(0.1, 10.0))
            b = float(rng.uniform(-100.0, 100.0))
            mapped = [a * v + b for v in column]
            for eta in (eta_map, eta_zsc):
                base, again = eta(column).values, eta(mapped).values
                for u, v in zip(base, again):
                    assert abs(u - v) <= 1e-9 * max(abs(u), abs(v), 1.0)

            for eta in (eta_map, eta_zsc):
                out = eta(column).values
                order = np.argsort(column, kind="stable")
                assert all(
                    out[order[k]] <= out[order[k + 1]] for k in range(n - 1)
                )

        # degenerate-column policies
        assert eta_map([3.0, 3.0]).values == (0.5, 0.5)
        assert eta_zsc([3.0, 3.0, 3.0]).values == (0.0, 0.0, 0.0)


def _random_matrix(rng):
    n_platforms = int(rng.integers(2, 9))
    n_features = int(rng.integers(1, 11))
    values = rng.uniform(0.1, 100.0, size=(n_platforms, n_features))
    directions = [
        Direction.MORE_IS_BETTER if flip else Direction.LESS_IS_BETTER
        for flip in rng.integers(0, 2, size=n_features)
    ]
    matrix = FeatureMatrix(
        platforms=tuple(f"p{i}" for i in range(n_platforms)),
        features=tuple(
            FeatureSpec(name=f"f{j}", direction=d) for j, d in enumerate(directions)
        ),
        values=tuple(tuple(float(v) for v in row) for row in values),
    )
    weights = WeightVector.user_defined(rng.dirichlet(np.ones(n_features)).tolist())
    return matrix, weights


def test_criterion_6_product_rank_invariance():
    with criterion(6, "column rescaling never reorders weighted-product scores (1000 cases)"):
        rng = np.random.default_rng(20211)
        for _ in range(1000):
            matrix, weights = _random_matrix(rng)
            base = rank_scores(weighted_product(matrix, weights))
            j = int(rng.integers(0, len(matrix.features)))
            c = float(rng.uniform(1e-9, 100.0))
            rescaled = FeatureMatrix(
                platforms=matrix.platforms,
                features=matrix.features,
                values=tuple(
                    tuple(v * c if k == j else v for k, v in enumerate(row))
                    for row in matrix.values
                ),
            )
            assert rank_scores(weighted_product(rescaled, weights)) == base


def test_criterion_7_metric_axioms():
    with criterion(7, "relative distance satisfies the metric axioms (1000 triples)"):
        rng = np.random.default_rng(20212)
        for _ in range(1000):
            a, b, c = (
                NcapCoordinate(
                    platform=f"p{k}",
                    x=float(rng.integers(0, 4)),
                    y=float(rng.uniform(-10.0, 10.0)),
                    method="sum",
                )
                for k in range(3)
            )
            dab = relative_distance(a, b)
            assert dab >= 0.0
            assert abs(dab - relative_distance(b, a)) <= 1e-9
            assert relative_distance(a, a) == 0.0
            if (a.x, a.y) != (b.x, b.y):
                assert dab > 0.0
            assert relative_distance(a, c) <= dab + relative_distance(b, c) + 1e-9
            assert dab >= abs(autonomy_distance(a) - autonomy_distance(b)) - 1e-9


def test_criterion_8_kendall_tau_oracle():
    with criterion(8, "tau-b equals the exhaustive pair-counting oracle (500 cases)"):
        from test_ranking import tau_b_oracle

        rng = np.random.default_rng(20213)
        from ncap import kendall_tau

        for _ in range(500):
            n = int(rng.integers(2, 9))
            xs = [int(v) for v in rng.integers(0, n, size=n)]
            ys = [int(v) for v in rng.integers(0, n, size=n)]
            a = {f"p{i}": x for i, x in enumerate(xs)}
            b = {f"p{i}": y for i, y in enumerate(ys)}
            got = kendall_tau(a, b)
            expected = tau_b_oracle(xs, ys)
            if math.isnan(expected):
                assert math.isnan(got)
            else:
                assert got == expected


def test_criterion_9_cli_determinism(tmp_path):
    with criterion(9, "score and distance runs are byte-identical across invocations"):
        matrix = DATA_DIR / "uas_features.csv"
        config = DATA_DIR / "uas_config.yaml"
        snapshots = []
        for attempt in range(2):
            outputs = []
            for fmt in ("table", "csv"):
                score_out = tmp_path / f"score-{attempt}-{fmt}"
                assert main([
                    "score", "--matrix", str(matrix), "--config", str(config),
                    "--weights", "config", "--format", fmt, "--out", str(score_out),
                ]) == 0
                dist_out = tmp_path / f"dist-{attempt}-{fmt}"
                assert main([
                    "distance", "--matrix", str(matrix), "--config", str(config),
                    "--format", fmt, "--out", str(dist_out),
                ]) == 0
                outputs.append(score_out.read_bytes())
                outputs.append(dist_out.read_bytes())
            snapshots.append(outputs)
        assert snapshots[0] == snapshots[1]
