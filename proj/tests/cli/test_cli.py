"""End-to-end checks of the uacg command-line tool.

The binary path arrives in UACG_CLI (set by ctest).
"""

import json
import os
import re
import subprocess

import pytest

CLI = os.environ.get("UACG_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="UACG_CLI not set")


def run(*args, env=None):
    merged = dict(os.environ)
    if env:
        merged.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=merged)


def json_lines(proc):
    return [json.loads(line) for line in proc.stdout.splitlines() if line.strip()]


def test_spectrum_both_sources():
    proc = run("spectrum", "--n", "6", "--family", "signless", "--source", "both")
    assert proc.returncode == 0
    records = json_lines(proc)
    closed = [r for r in records if r["source"] == "closed-form"]
    oracle = [r for r in records if r["source"] == "oracle"]
    comparison = [r for r in records if r["source"] == "comparison"]
    assert [(r["value"], r["multiplicity"]) for r in closed] == [
        (0, 1),
        (1, 2),
        (3, 2),
        (4, 1),
    ]
    assert sum(r["multiplicity"] for r in oracle) == 6
    assert len(comparison) == 1
    assert comparison[0]["value"] <= 1e-8


def test_spectrum_closed_form_missing_is_exit_3():
    proc = run("spectrum", "--n", "15", "--family", "signless", "--source", "closed-form")
    assert proc.returncode == 3


def test_spectrum_disconnected_complement_is_exit_4():
    proc = run("spectrum", "--n", "5", "--graph", "uacg", "--complement", "--family", "distance")
    assert proc.returncode == 4


def test_spectrum_unitary_adjacency_closed_form():
    proc = run("spectrum", "--n", "9", "--graph", "ucg", "--family", "adjacency",
               "--source", "closed-form")
    assert proc.returncode == 0
    values = {r["value"]: r["multiplicity"] for r in json_lines(proc)}
    assert values == {6: 1, 0: 6, -3: 2}


def test_energy_values():
    proc = run("energy", "--n", "6", "--family", "signless")
    assert proc.returncode == 0
    (record,) = json_lines(proc)
    assert record["closed_form"] == 8
    assert abs(record["oracle"] - 8) <= 1e-8
    assert record["caveat"] is False

    proc = run("energy", "--n", "9", "--family", "distance-laplacian")
    (record,) = json_lines(proc)
    assert abs(record["closed_form"] - 74 / 3) <= 1e-12

    proc = run("energy", "--n", "5", "--family", "distance")
    (record,) = json_lines(proc)
    assert record["caveat"] is True
    assert abs(record["closed_form"] - (4 + 4 * 2 ** 0.5)) <= 1e-12


def test_bad_flags_are_exit_2():
    assert run("spectrum", "--n", "6", "--family", "bogus").returncode == 2
    assert run("spectrum", "--family", "signless").returncode == 2
    assert run().returncode == 2
    assert run("spectrum", "--n", "1", "--family", "signless").returncode == 2


def test_scan_empty_range_is_exit_2():
    assert run("scan", "--n-from", "10", "--n-to", "9").returncode == 2


def test_verify_n9_clean():
    proc = run("verify", "--n", "9", "--families", "all")
    assert proc.returncode == 0
    records = json_lines(proc)
    assert all(r["status"] != "fail" for r in records)
    chain = [r for r in records if r["kind"] == "chain"]
    assert len(chain) == 1
    assert "violated" in chain[0]["details"]


def test_verify_single_family():
    proc = run("verify", "--n", "9", "--families", "distance")
    assert proc.returncode == 0
    records = json_lines(proc)
    assert {r["kind"] for r in records} == {"spectrum", "energy", "bounds"}
    assert all(r["status"] == "pass" for r in records)


def test_scan_small_range_clean():
    proc = run("scan", "--n-from", "3", "--n-to", "20", "--families", "all")
    assert proc.returncode == 0
    records = json_lines(proc)
    assert all(r["status"] != "fail" for r in records)
    caveats = [r for r in records if r["status"] == "caveat"]
    assert caveats, "odd primes should surface the distance-energy caveat"


def test_scan_flags_published_bound_violation():
    # the distance energy upper bound is provably exceeded at n=25; the scan
    # must say so and exit nonzero
    proc = run("scan", "--n-from", "25", "--n-to", "25", "--families", "distance")
    assert proc.returncode == 1
    failing = [r for r in json_lines(proc) if r["status"] == "fail"]
    assert len(failing) == 1
    assert failing[0]["kind"] == "energy"


def test_scan_deterministic_and_jobs_independent():
    args = ("scan", "--n-from", "3", "--n-to", "12", "--families", "all")
    first = run(*args)
    second = run(*args)
    serial = run(*args, env={"UACG_JOBS": "1"})
    assert first.stdout == second.stdout == serial.stdout


def test_csv_and_json_carry_identical_numbers():
    base = ("energy", "--n", "9", "--family", "distance-laplacian")
    json_proc = run(*base, "--format", "json")
    csv_proc = run(*base, "--format", "csv")
    match = re.search(r'"closed_form":([^,]+),"oracle":([^,]+),', json_proc.stdout)
    assert match
    header = csv_proc.stdout.splitlines()[0].split(",")
    row = csv_proc.stdout.splitlines()[1].split(",")
    cells = dict(zip(header, row))
    assert cells["closed_form"] == match.group(1)
    assert cells["oracle"] == match.group(2)


def test_tolerance_env_override():
    # an absurdly tight tolerance makes the oracle comparison fail
    proc = run("verify", "--n", "6", "--families", "signless", env={"UACG_TOL": "1e-18"})
    assert proc.returncode == 1
    proc = run("verify", "--n", "6", "--families", "signless", env={"UACG_TOL": "1e-8"})
    assert proc.returncode == 0
