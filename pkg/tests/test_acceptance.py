"""Exit criteria for the package, one test per criterion.

Each test appends a PASS/FAIL line that is printed in the terminal
summary. Criteria 5-7 time graphs with 10^5 nodes; criteria 6 and 7 take
roughly half an hour together on one core (``-m "not slow"`` skips them).
"""

import json
import os
import re
import statistics
import subprocess
import sys
import time
from pathlib import Path

import numpy as np
import pytest
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from ctrlset.bench import run_benchmark, time_hopcroft_karp
from ctrlset.control import (
    all_input,
    all_input_with_matching,
    alternating_path,
    baseline_all_input,
    flip_path,
)
from ctrlset.formats import parse_edge_list
from ctrlset.generators import GenSpec, generate, gen_scale_free
from ctrlset.graph import to_bipartite
from ctrlset.matching import hopcroft_karp, verify_maximum, verify_valid
from ctrlset.oracle import enumerate_max_matchings

from .conftest import ACCEPTANCE_LINES
from .strategies import random_digraph

DATA_DIR = Path(os.environ.get("CTRLSET_DATA_DIR", Path(__file__).parent / "data"))


def record(criterion: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def _cli(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, "-m", "ctrlset", *args], capture_output=True)


def test_ac01_oracle_equivalence():
    t0 = time.perf_counter()
    proc = _cli("verify", "--n-max", "10", "--trials", "2000", "--seed", "42")
    elapsed = time.perf_counter() - t0
    out = proc.stdout.decode().strip()
    record(
        "AC1 oracle equivalence",
        proc.returncode == 0 and "failed=0" in out and elapsed < 60,
        f"exit={proc.returncode} {out} in {elapsed:.1f}s (limit 60s)",
    )


def test_ac02_differential_at_scale():
    combos = [(m, n, k) for m in ("er", "scale_free") for n in (1000, 10_000) for k in (2, 4, 8)]
    instances = [GenSpec(m, n, k, seed=1) for m, n, k in combos]
    instances += [GenSpec(m, n, k, seed=2) for m, n, k in combos[:8]]
    t0 = time.perf_counter()
    mismatched = [
        s for s in instances
        if all_input(g := generate(s)).possible_inputs != baseline_all_input(g).possible_inputs
    ]
    elapsed = time.perf_counter() - t0
    record(
        "AC2 differential equivalence at scale",
        not mismatched and len(instances) == 20 and elapsed < 120,
        f"{len(instances) - len(mismatched)}/{len(instances)} graphs agree in {elapsed:.1f}s (limit 120s)",
    )


def _max_matching_size(g, drop_right=None) -> int:
    # rows: in-copies, columns: out-copies
    mat = csr_matrix((np.ones(g.num_edges), (g.dst, g.src)), shape=(g.n, g.n))
    if drop_right is not None:
        keep = np.ones(g.n, dtype=bool)
        keep[drop_right] = False
        mat = mat[keep]
    if mat.shape[0] == 0:
        return 0
    return int((maximum_bipartite_matching(mat, perm_type="column") != -1).sum())


def test_ac03_per_node_certificate():
    rng = np.random.default_rng(2024)
    t0 = time.perf_counter()
    bad = 0
    for _ in range(200):
        n = int(rng.integers(1, 51))
        g = random_digraph(rng, n, float(rng.uniform(0.005, 0.12)))
        r = all_input(g)
        assert _max_matching_size(g) == r.matching_size
        possible = set(r.possible_inputs)
        for v in range(n):
            if (v in possible) != (_max_matching_size(g, v) == r.matching_size):
                bad += 1
    elapsed = time.perf_counter() - t0
    record(
        "AC3 per-node certificate",
        bad == 0 and elapsed < 60,
        f"{bad} mismatching nodes over 200 graphs in {elapsed:.1f}s (limit 60s)",
    )


def test_ac04_matching_correctness():
    rng = np.random.default_rng(7)
    invalid = not_max = size_mismatch = checked_oracle = 0
    for i in range(5000):
        n = int(rng.integers(1, 11)) if i < 4000 else int(rng.integers(11, 400))
        p = float(rng.choice([0.05, 0.1, 0.2, 0.35])) if n <= 10 else float(rng.uniform(0.002, 0.03))
        g = random_digraph(rng, n, p)
        b = to_bipartite(g)
        m = hopcroft_karp(b)
        if not verify_valid(b, m):
            invalid += 1
            continue
        if not verify_maximum(b, m):
            not_max += 1
        if n <= 10:
            checked_oracle += 1
            if enumerate_max_matchings(b)[0].size != m.size:
                size_mismatch += 1
    record(
        "AC4 matching correctness",
        invalid == not_max == size_mismatch == 0 and checked_oracle == 4000,
        f"5000 instances: invalid={invalid} non-maximum={not_max}; "
        f"oracle size mismatches={size_mismatch}/{checked_oracle}",
    )


@pytest.fixture(scope="module")
def sf_k8_seed7():
    return gen_scale_free(GenSpec("scale_free", 100_000, 8, seed=7))


def test_ac05_cost_parity(sf_k8_seed7):
    g = sf_k8_seed7
    from ctrlset.bench import median_time

    t_hk = time_hopcroft_karp(g, trials=5)
    t_all = median_time(lambda: all_input(g), trials=5)
    record(
        "AC5 cost parity",
        t_all <= 2 * t_hk,
        f"all_input {t_all:.3f}s vs hopcroft_karp {t_hk:.3f}s (ratio {t_all / t_hk:.2f}, limit 2.00)",
    )


@pytest.mark.slow
def test_ac06_speedup(sf_k8_seed7):
    r = run_benchmark(sf_k8_seed7, trials=3, source="sf n=1e5 k=8 seed=7")
    record(
        "AC6 speedup at n=1e5, k=8",
        r.speedup >= 10,
        f"t_new={r.t_new:.3f}s t_old={r.t_old:.1f}s speedup={r.speedup:.1f} (need >= 10)",
    )


@pytest.mark.slow
def test_ac07_speedup_grows_with_density():
    medians = {}
    for k in (4, 8, 12):
        runs = [
            run_benchmark(gen_scale_free(GenSpec("scale_free", 100_000, k, seed=s)), trials=1).speedup
            for s in (1, 2, 3)
        ]
        medians[k] = statistics.median(runs)
    values = [medians[k] for k in (4, 8, 12)]
    record(
        "AC7 speedup vs average degree",
        values[0] <= values[1] <= values[2],
        "median speedup " + ", ".join(f"k={k}: {v:.1f}" for k, v in medians.items()),
    )


@pytest.mark.parametrize(
    "name, filenames, expected",
    [("E. coli", ("ecoli.txt", "ecoli_trn.txt"), 0.730), ("WikiVote", ("wiki-Vote.txt", "wikivote.txt"), 0.666)],
)
def test_ac08_real_network_density(name, filenames, expected):
    path = next((DATA_DIR / f for f in filenames if (DATA_DIR / f).exists()), None)
    if path is None:
        ACCEPTANCE_LINES.append(f"[SKIP] AC8 {name} density: no edge list in {DATA_DIR}")
        pytest.skip(f"{name} edge list not supplied (looked for {', '.join(filenames)} in {DATA_DIR})")
    g, _ = parse_edge_list(path.read_bytes())
    n_pd = float(all_input(g).n_pd)
    record(f"AC8 {name} density", abs(n_pd - expected) <= 0.005, f"n_pd={n_pd:.4f} (expected {expected} +/- 0.005)")


def test_ac09_determinism(tmp_path):
    p = tmp_path / "sf.txt"
    assert _cli("generate", "--model", "sf", "--n", "3000", "--k", "6", "--seed", "5", "--out", str(p)).returncode == 0
    outs = [_cli("analyze", str(p)).stdout for _ in range(2)]
    elapsed = [json.loads(o)["elapsed_ms"] for o in outs]
    stripped = [re.sub(rb'"elapsed_ms": [0-9.]+', b'"elapsed_ms": X', o) for o in outs]
    record(
        "AC9 determinism",
        stripped[0] == stripped[1] and all(e > 0 for e in elapsed) and len(outs[0]) > 0,
        f"reports identical apart from elapsed_ms={elapsed}",
    )


def test_ac10_invariants():
    rng = np.random.default_rng(99)
    violations = 0
    flips = 0
    for _ in range(1000):
        n = int(rng.integers(1, 31))
        g = random_digraph(rng, n, float(rng.uniform(0.02, 0.25)))
        r, m = all_input_with_matching(g)
        b = to_bipartite(g)
        violations += len(r.mis) != n - r.matching_size
        violations += not set(r.mis) <= set(r.possible_inputs)
        for v in set(r.possible_inputs) - set(r.mis):
            flipped = flip_path(m, alternating_path(b, m, v))
            flips += 1
            ok = (
                verify_valid(b, flipped)
                and verify_maximum(b, flipped)
                and flipped.size == m.size
                and flipped.match_of_right[v] == -1
            )
            violations += not ok
    record(
        "AC10 invariant suite",
        violations == 0,
        f"{violations} violations over 1000 graphs ({flips} path flips checked)",
    )
