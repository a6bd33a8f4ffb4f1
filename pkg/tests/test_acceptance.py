"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line (also echoed in the terminal
summary).  Run with ``pytest tests/test_acceptance.py -s``.
"""
import functools
import itertools
import random
import time

import numpy as np
import pytest

from choreorient.ef1 import ef1_structural_condition, solve_ef1
from choreorient.efx import solve as solve_efx0, structural_efx_condition
from choreorient.hardness import (
    RandomParams,
    gen_planted,
    gen_random,
    gen_three_vertex,
    gen_two_vertex,
    has_equipartition,
)
from choreorient.instance import figure1_instance, negative_components
from choreorient.oracle import (
    Criterion,
    check_ef1,
    check_efx0,
    enumerate_orientations,
    orientation_at,
    orientation_verdicts,
)
from choreorient.twosat import Literal, TwoSatFormula, solve as solve_2sat

from conftest import ACCEPTANCE_LINES, brute_orientations, small_random

ORACLE_CORPUS = 5000
STRUCTURAL_CORPUS = 500
SAT_CORPUS = 10_000
PARTITION_CORPUS = 500
TOLERANCE = 5.0


def report(number: int, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


# -- shared runs, cached so the implication check can reuse them ----------


@functools.lru_cache(maxsize=None)
def oracle_run():
    """Solvers vs exhaustive search over the seeded random corpus."""
    out = {
        Criterion.EFX0: {"mismatch": [], "bad_output": [], "seconds": 0.0, "feasible": 0},
        Criterion.EF1: {"mismatch": [], "bad_output": [], "seconds": 0.0, "feasible": 0},
        "examined": 0,
        "violations": 0,
    }
    solvers = {Criterion.EFX0: (solve_efx0, check_efx0), Criterion.EF1: (solve_ef1, check_ef1)}
    for seed in range(ORACLE_CORPUS):
        inst = small_random(seed)
        verdicts = {}
        for crit, (solver, check) in solvers.items():
            stats = out[crit]
            t0 = time.perf_counter()
            got = solver(inst)
            expect = enumerate_orientations(inst, crit)
            stats["seconds"] += time.perf_counter() - t0
            if (got is None) != (expect is None):
                stats["mismatch"].append(seed)
            if got is not None:
                stats["feasible"] += 1
                if not check(inst, got):
                    stats["bad_output"].append(seed)
            verdicts[crit] = orientation_verdicts(inst, crit)
        out["examined"] += len(verdicts[Criterion.EF1])
        out["violations"] += int(np.count_nonzero(verdicts[Criterion.EFX0] & ~verdicts[Criterion.EF1]))
    return out


def structural_corpus(objective: bool):
    kept = []
    seed = 0
    while len(kept) < STRUCTURAL_CORPUS:
        inst = small_random(
            seed, max_vertices=5, max_edges=8, objective_fraction=1.0 if objective else 0.5
        )
        seed += 1
        if objective and not inst.is_objective():
            continue
        kept.append(inst)
    return kept


@functools.lru_cache(maxsize=None)
def structural_run(objective: bool):
    structural = structural_efx_condition if objective else ef1_structural_condition
    literal = check_efx0 if objective else check_ef1
    out = {"instances": 0, "orientations": 0, "discrepancies": 0, "violations": 0}
    for inst in structural_corpus(objective):
        out["instances"] += 1
        for o in brute_orientations(inst):
            out["orientations"] += 1
            s, lit = structural(inst, o), literal(inst, o)
            out["discrepancies"] += s != lit
            efx, ef1 = (lit, check_ef1(inst, o)) if objective else (check_efx0(inst, o), lit)
            out["violations"] += efx and not ef1
    return out


# -- criteria ---------------------------------------------------------------


def test_c1_efx0_solver_matches_oracle():
    stats = oracle_run()[Criterion.EFX0]
    ok = not stats["mismatch"] and not stats["bad_output"] and stats["seconds"] < 60
    report(
        1,
        ok,
        f"EFX0 solver vs oracle on {ORACLE_CORPUS} instances: {len(stats['mismatch'])} mismatches, "
        f"{len(stats['bad_output'])} invalid outputs, {stats['feasible']} orientable, "
        f"{stats['seconds']:.1f}s (limit 60s)",
    )
    assert ok, stats


def test_c2_ef1_solver_matches_oracle():
    stats = oracle_run()[Criterion.EF1]
    ok = not stats["mismatch"] and not stats["bad_output"] and stats["seconds"] < 30
    report(
        2,
        ok,
        f"EF1 solver vs oracle on {ORACLE_CORPUS} instances: {len(stats['mismatch'])} mismatches, "
        f"{len(stats['bad_output'])} invalid outputs, {stats['feasible']} orientable, "
        f"{stats['seconds']:.1f}s (limit 30s)",
    )
    assert ok, stats


def test_c3_efx0_structural_condition_is_exact():
    r = structural_run(True)
    ok = r["discrepancies"] == 0 and r["instances"] >= STRUCTURAL_CORPUS
    report(
        3,
        ok,
        f"EFX0 in-degree condition vs checker: {r['discrepancies']} discrepancies over "
        f"{r['orientations']} orientations of {r['instances']} objective instances",
    )
    assert ok, r


def test_c4_ef1_structural_condition_is_exact():
    r = structural_run(False)
    ok = r["discrepancies"] == 0 and r["instances"] >= STRUCTURAL_CORPUS
    report(
        4,
        ok,
        f"EF1 two-chore condition vs checker: {r['discrepancies']} discrepancies over "
        f"{r['orientations']} orientations of {r['instances']} instances",
    )
    assert ok, r


def random_formula(rnd: random.Random) -> TwoSatFormula:
    n = rnd.randint(1, 12)
    f = TwoSatFormula(n)
    for _ in range(rnd.randint(0, 30)):
        a = Literal(rnd.randrange(n), rnd.random() < 0.5)
        if rnd.random() < 0.1:
            f.add_clause(a)
        else:
            f.add_clause(a, Literal(rnd.randrange(n), rnd.random() < 0.5))
    return f


def brute_satisfiable(f: TwoSatFormula) -> bool:
    n = f.variable_count
    grid = ((np.arange(1 << n)[:, None] >> np.arange(n)) & 1).astype(bool)
    alive = np.ones(1 << n, dtype=bool)
    for a, b in f.clauses:
        va = grid[:, a.variable] ^ a.negated
        vb = grid[:, b.variable] ^ b.negated
        alive &= va | vb
    return bool(alive.any())


def test_c5_twosat_matches_brute_force():
    rnd = random.Random(2024)
    mismatches = bad_witness = sat = 0
    solve_seconds = 0.0
    t0 = time.perf_counter()
    for _ in range(SAT_CORPUS):
        f = random_formula(rnd)
        s0 = time.perf_counter()
        got = solve_2sat(f)
        solve_seconds += time.perf_counter() - s0
        if (got is not None) != brute_satisfiable(f):
            mismatches += 1
        if got is not None:
            sat += 1
            if not f.satisfied_by(got):
                bad_witness += 1
    total = time.perf_counter() - t0
    ok = mismatches == 0 and bad_witness == 0 and total < 30
    report(
        5,
        ok,
        f"2SAT vs brute force on {SAT_CORPUS} formulas ({sat} satisfiable): {mismatches} mismatches, "
        f"{bad_witness} bad witnesses, {total:.1f}s total incl. brute force, solver {solve_seconds:.1f}s "
        "(limit 30s)",
    )
    assert ok


def subset_sum(values) -> bool:
    total = sum(values)
    return any(
        2 * sum(c) == total for r in range(len(values) + 1) for c in itertools.combinations(values, r)
    )


def test_c6_partition_reductions():
    rnd = random.Random(77)
    errors = []
    witnesses = cedge_failures = yes = 0
    for trial in range(PARTITION_CORPUS):
        values = [rnd.randint(1, 6) for _ in range(rnd.randint(1, 8))]
        expect = has_equipartition(values)
        if expect != subset_sum(values):
            errors.append((trial, "has_equipartition", values))
        yes += expect
        for name, inst, crit in (
            ("two-vertex EF1", gen_two_vertex(values, Criterion.EF1), Criterion.EF1),
            ("two-vertex EFX0", gen_two_vertex(values, Criterion.EFX0), Criterion.EFX0),
            ("three-vertex EF1", gen_three_vertex(values), Criterion.EF1),
        ):
            if (enumerate_orientations(inst, crit) is not None) != expect:
                errors.append((trial, name, values))
        three = gen_three_vertex(values)
        ac = [k for k, e in enumerate(three.edges) if {e.u, e.v} == {0, 2}]
        bc = [k for k, e in enumerate(three.edges) if {e.u, e.v} == {1, 2}]
        for index in np.flatnonzero(orientation_verdicts(three, Criterion.EF1)).tolist():
            o = orientation_at(three, index)
            if not check_ef1(three, o):
                errors.append((trial, "witness", values))
            witnesses += 1
            cedge_failures += not (
                any(o.receiver[k] == 0 for k in ac) and any(o.receiver[k] == 1 for k in bc)
            )
    ok = not errors and cedge_failures == 0
    report(
        6,
        ok,
        f"partition reductions on {PARTITION_CORPUS} instances ({yes} with an equipartition): "
        f"{len(errors)} disagreements; c-edge property fails on {cedge_failures} of "
        f"{witnesses} three-vertex EF1 witnesses",
    )
    assert ok, errors[:5]


@pytest.mark.slow
def test_c7_scaling():
    timings = {}
    ef1_random = gen_random(RandomParams(100_000, 200_000), 1)
    t0 = time.perf_counter()
    solve_ef1(ef1_random)
    timings["EF1 random 1e5/2e5"] = (time.perf_counter() - t0, 1.0)

    ef1_planted = gen_planted(100_000, 200_000, 1)
    t0 = time.perf_counter()
    o = solve_ef1(ef1_planted)
    timings["EF1 planted 1e5/2e5"] = (time.perf_counter() - t0, 1.0)
    planted_ok = o is not None

    efx_random = gen_random(RandomParams(10_000, 20_000), 1)
    t0 = time.perf_counter()
    solve_efx0(efx_random)
    timings["EFX0 random 1e4/2e4"] = (time.perf_counter() - t0, 10.0)

    efx_planted = gen_planted(10_000, 20_000, 1)
    t0 = time.perf_counter()
    o = solve_efx0(efx_planted)
    timings["EFX0 planted 1e4/2e4"] = (time.perf_counter() - t0, 10.0)
    planted_ok = planted_ok and o is not None

    ok = planted_ok and all(t < TOLERANCE * limit for t, limit in timings.values())
    detail = ", ".join(f"{k} {t:.2f}s (limit {TOLERANCE * lim:.0f}s)" for k, (t, lim) in timings.items())
    report(7, ok, f"scaling: {detail}")
    assert ok, timings


def test_c8_figure1_components():
    report_ = negative_components(figure1_instance())
    sizes = sorted(len(c.vertices) for c in report_.components)
    ok = sizes == [4, 4]
    report(8, ok, f"figure fixture negative component sizes {sizes} (expected [4, 4])")
    assert ok


def test_c9_efx0_implies_ef1():
    runs = oracle_run()
    s3, s4 = structural_run(True), structural_run(False)
    examined = runs["examined"] + s3["orientations"] + s4["orientations"]
    violations = runs["violations"] + s3["violations"] + s4["violations"]
    ok = violations == 0 and examined > 0
    report(9, ok, f"EFX0 => EF1: {violations} violations over {examined} orientations from criteria 1-4")
    assert ok
