"""Acceptance gate: one test per criterion, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the lines bypass output
capture and reach the terminal) or directly with ``python tests/test_acceptance.py``.
Tolerances are exact equality throughout; the runtime bounds are wall-clock.
"""
from __future__ import annotations

import sys
import time
from functools import lru_cache

import pytest

from rsfock import relcheck
from rsfock.chars import affine_cartan_matrix, dimension_series, euler_product_series, weight
from rsfock.fock import FockConfig
from rsfock.laurent import Laurent2
from rsfock.partitions import partitions_up_to
from rsfock.relcheck import Status

RELATION_NS = (2, 3, 4, 5)
RELATION_N = 8


def _cfgs(d_convention="cellcount"):
    return [FockConfig(n, o, RELATION_N, d_convention=d_convention)
            for n in RELATION_NS for o in range(n)]


@lru_cache(maxsize=None)
def _relation_run(jobs: int, d_convention: str = "cellcount"):
    start = time.perf_counter()
    result = relcheck.run_all(_cfgs(d_convention), jobs=jobs)
    return result, time.perf_counter() - start


def _summary(reports, limit=4):
    tags = {}
    for r in reports:
        tags[r.relation.tag] = tags.get(r.relation.tag, 0) + 1
    return ", ".join(f"{t}x{k}" for t, k in sorted(tags.items())[:limit * 3])


def _line(number: int, ok: bool, detail: str) -> str:
    return f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"


# criterion 1: relation suite, CellCount, n in 2..5, every offset, N=8

def criterion_relations():
    result, seconds = _relation_run(1)
    failing = result.failing()
    ok = result.passed and seconds < 120
    detail = (f"{len(result.reports)} reports, {len(failing)} failing "
              f"[{_summary(failing)}], {seconds:.1f}s single-threaded")
    return ok, detail


# criterion 2: pairing extraction

def criterion_pairing():
    problems = []
    for n in RELATION_NS:
        cfg = FockConfig(n, 0, n + 4)
        diffs = relcheck.pairing_diffs(cfg)
        if not any((d.i, d.j) == (0, 1) for d in diffs):
            problems.append(f"n={n}: no <0,1> diff entry")
        try:
            table, _ = relcheck.infer_pairing(cfg)
        except relcheck.InconsistentRatio as exc:
            varying = sum(1 for v in exc.observations.values() if len(v) > 1)
            problems.append(f"n={n}: {varying} non-constant ratios")
            continue
        a = affine_cartan_matrix(n)
        for i in range(n):
            if table.monomial(i, i) != Laurent2.monomial(1, -1):
                problems.append(f"n={n}: <{i},{i}> = {table.monomial(i, i)}")
            for j in range(n):
                if table.specialized_exponent(i, j) != a[i][j]:
                    problems.append(f"n={n}: <{i},{j}> does not specialize to q^{a[i][j]}")
    return not problems, "; ".join(problems) or "constant ratios, diagonal r*s^-1, specializes, <0,1> diff present"


# criterion 3: specialization oracle

def criterion_specialization():
    reports = [r for n in (2, 3, 4) for o in range(n)
               for r in relcheck.check_specialization(FockConfig(n, o, 8))]
    bad = [r for r in reports if r.status is not Status.PASS]
    return not bad, f"{len(reports)} matrix comparisons, {len(bad)} mismatches"


# criterion 4: combinatorial identity suite, sizes <= 14

CLAIM_FORMS = ("removal-shift", "split-sums", "swap-differences", "adjacent-shifts")


def criterion_claims():
    start = time.perf_counter()
    reports = [r for r in relcheck.check_claims(14, RELATION_NS) if r.relation.form in CLAIM_FORMS]
    seconds = time.perf_counter() - start
    bad = [r for r in reports if r.status is Status.FAIL]
    names = sorted({r.relation.form for r in bad})
    failures = sum(r.failures for r in bad)
    detail = (f"{sum(r.basis_checked for r in reports)} instances, {failures} failing"
              f"{' in ' + ', '.join(names) if names else ''}, {seconds:.1f}s")
    return not bad and seconds < 60, detail


# criterion 5: negative control under the literal D action

def criterion_literal_control():
    result, _ = _relation_run(1, "literal")
    failing = result.failing()
    tags = {r.relation.tag for r in failing}
    expected = {"A2-D", "A3-D'"}
    witnessed = all(r.witness is not None for r in failing)
    outside = sorted(tags - expected)
    ok = bool(failing) and tags == expected and witnessed
    detail = f"failing tags {sorted(tags)}"
    if outside:
        detail += f"; unexpected failures outside the D checks: {', '.join(outside)}"
    return ok, detail


# criterion 6: character sanity

def criterion_characters():
    oracle = euler_product_series(20)
    series = dimension_series(FockConfig(2, 0, 20))
    lams = partitions_up_to(12)
    checked = 0
    for n in RELATION_NS:
        for o in range(n):
            cfg = FockConfig(n, o, 12)
            for lam in lams:
                weight(lam, cfg)  # raises on a broken invariant
                checked += 1
    ok = series == oracle and oracle[20] == 627
    return ok, f"p(0..20) matches Euler product (p(20)={series[20]}), weight invariant on {checked} cases"


# criterion 7: determinism across worker counts

def criterion_determinism():
    one, _ = _relation_run(1)
    eight, seconds = _relation_run(8)
    same = one.to_json() == eight.to_json()
    return same and seconds < 30, f"jobs=1 vs jobs=8 JSON identical={same}, 8 workers took {seconds:.1f}s"


CRITERIA = [
    (1, criterion_relations),
    (2, criterion_pairing),
    (3, criterion_specialization),
    (4, criterion_claims),
    (5, criterion_literal_control),
    (6, criterion_characters),
    (7, criterion_determinism),
]


@pytest.mark.parametrize("number,fn", CRITERIA, ids=[f"criterion_{k}" for k, _ in CRITERIA])
def test_acceptance(number, fn, capsys):
    ok, detail = fn()
    # one visible line per criterion, even under output capture
    with capsys.disabled():
        print("\n" + _line(number, ok, detail))
    assert ok, detail


def main() -> int:
    status = 0
    for number, fn in CRITERIA:
        ok, detail = fn()
        print(_line(number, ok, detail), flush=True)
        status |= not ok
    return status


if __name__ == "__main__":
    sys.exit(main())
