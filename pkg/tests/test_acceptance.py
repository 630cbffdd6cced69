"""Exit criteria for the package, one test per criterion."""

import subprocess
import sys
import time

import pytest

from oracles import brute_class_number
from survivorprimes import cli
from survivorprimes.arith import big_omega, primes_below
from survivorprimes.ono import ono_invariant
from survivorprimes.quadform import class_group, class_number, is_fundamental
from survivorprimes.survey import (
    EXPECTED_SURVIVORS,
    check_case_1mod8,
    check_case_3mod8,
    check_case_5mod8,
    check_case_7mod8,
    even_length_partition,
    search_range,
    witness_2y2,
    witness_8t2,
)

BOUND = 2_000_000


@pytest.fixture(scope="module")
def survivors():
    return search_range(2, BOUND, jobs=4)


def test_1_list_reproduction(tmp_path, verdict, capsys):
    target = tmp_path / "report.txt"
    start = time.perf_counter()
    code = cli.main(["report", "--bound", str(BOUND), "--jobs", "4", "--out", str(target)])
    elapsed = time.perf_counter() - start
    text = target.read_text()
    found = {}
    section = None
    for line in text.splitlines():
        if line.startswith("== p = "):
            section = int(line.split()[3])
        elif line.startswith("found:"):
            found[section] = tuple(int(t) for t in line.split()[1:])
    expected = {r: ps for r, ps in EXPECTED_SURVIVORS.items()}
    ok = code == 0 and found == expected and elapsed < 60
    verdict(1, f"report --bound {BOUND}: four lists exact, exit {code}, {elapsed:.1f}s < 60s", ok)


def test_2_small_class_number_counts(verdict):
    start = time.perf_counter()
    counts = {1: 0, 2: 0, 4: 0}
    for D in range(-3, -10**4 - 1, -1):
        if D % 4 in (0, 1) and is_fundamental(D):
            h = class_number(D)
            if h in counts:
                counts[h] += 1
    elapsed = time.perf_counter() - start
    ok = counts == {1: 9, 2: 18, 4: 54} and elapsed < 30
    verdict(2, f"fundamental |D| <= 10^4 with h=1,2,4: {counts[1]}, {counts[2]}, {counts[4]} ({elapsed:.1f}s < 30s)", ok)


def test_3_case_structure(survivors, verdict):
    checks = {5: check_case_5mod8, 1: check_case_1mod8, 3: check_case_3mod8, 7: check_case_7mod8}
    all_pass = all(checks[r.residue_class](r) for r in survivors)
    h2 = all(class_number(-4 * p) == 2 for p in (5, 13, 37))
    z4 = all(class_group(-4 * p).invariant_factors == (4,) for p in (17, 73, 97, 193))
    h1 = all(class_number(-p) == 1 for p in (3, 11, 19, 43, 67, 163))
    ono = all(ono_invariant(p).d == class_number(-p) for p in EXPECTED_SURVIVORS[7])
    ok = all_pass and h2 and z4 and h1 and ono and len(survivors) == 27
    verdict(3, "case checks pass for all 27 survivors (h=2, Z4, h=1, d=h)", ok)


def test_4_sasaki_inequality(verdict):
    start = time.perf_counter()
    primes = [p for p in primes_below(5 * 10**4) if p % 8 == 7]
    violations = [p for p in primes if not ono_invariant(p).d <= class_number(-p)]
    elapsed = time.perf_counter() - start
    ok = not violations and elapsed < 120
    verdict(4, f"d <= h for all {len(primes)} primes p = 7 mod 8 below 5*10^4 ({elapsed:.1f}s < 120s)", ok)


def test_5_witness_existence(verdict):
    primes = primes_below(10**4)
    missing_2y2 = [p for p in primes if p % 8 == 1 and witness_2y2(p) is None]
    missing_8t2 = [p for p in primes if p % 8 == 7 and witness_8t2(p) is None]
    ok = not missing_2y2 and not missing_8t2
    verdict(5, "p+x^2=2y^2 (p=1 mod 8) and p+x^2=8t^2 (p=7 mod 8) solvable below 10^4", ok)


def test_6_even_length_partition(verdict):
    bad = []
    for n in range(4, 10**5 + 1):
        a, b = even_length_partition(n)
        if not (0 < a <= b and a + b == n and big_omega(a * b) % 2 == 0):
            bad.append(n)
    verdict(6, "even-length partition found for every n in (3, 10^5]", not bad)


def test_7_class_number_oracle(verdict):
    mismatches = [
        D
        for D in range(-3, -2001, -1)
        if D % 4 in (0, 1) and is_fundamental(D) and class_number(D) != brute_class_number(D)
    ]
    verdict(7, "class_number equals brute triple enumeration for fundamental |D| <= 2000", not mismatches)


def test_8_determinism(tmp_path, verdict):
    outputs = []
    for jobs in ("1", "8"):
        target = tmp_path / f"search_{jobs}.csv"
        proc = subprocess.run(
            [sys.executable, "-m", "survivorprimes", "search", "--lo", "2", "--hi", str(BOUND),
             "--jobs", jobs, "--out", str(target)],
            check=False,
        )
        assert proc.returncode == 0
        outputs.append(target.read_bytes())
    rows = outputs[0].decode().count("\n") - 1
    verdict(8, f"search --jobs 1 and --jobs 8 byte-identical ({rows} rows)", outputs[0] == outputs[1] and rows == 27)
