"""End-to-end expectations on the built-in graphs"""

import json
import runpy
from pathlib import Path

from tgk import (
    a_sequence,
    af_block_check,
    build_report,
    enumerate_admissible_pairs,
    is_simple,
    prime_admissible_pairs,
)
from tgk.corpus import cycle_graph, load
from tgk.experimentation import CrossCheck
from tgk.graph import classify_vertices
from tgk.io import dumps
from tgk.lattice import make_pair, restricted_singular
from tgk.representations import a_sequence_closed_form


def test_sequence_start():
    assert [a_sequence(m) for m in range(4)] == [1, 2, 5, 16]


def test_every_cycle_up_to_six_is_generated_by_its_loop():
    for n in range(1, 7):
        verdict = is_simple(cycle_graph(n))
        assert verdict.witness['reason'] == "generated_by_loop"


def test_omega_graph_singular_sets(omega):
    assert restricted_singular(omega, {"w"}) == {"w"}
    assert restricted_singular(omega, {"v", "w"}) == {"v"}
    lattice = enumerate_admissible_pairs(omega)
    assert make_pair(["v", "w"], ["v"]) in lattice.pairs
    assert make_pair(["v", "w"], ["v", "w"]) in lattice.pairs


def test_breaking_graph_has_three_primes(breaking):
    lattice = enumerate_admissible_pairs(breaking)
    assert len(prime_admissible_pairs(breaking)) == len(lattice.pairs) - 1


def test_subset_census_for_three():
    report = af_block_check(3)
    assert report.ok
    sizes = sorted(b.size for b in report.blocks)
    assert sizes == [1, 2, 2, 2, 5, 5, 5, 16]
    assert report.total_dimension == 1 + 3 * 2 + 3 * 5 + 16


def test_reports_are_byte_identical():
    for name in ("edge", "omega", "loop_entrance", "breaking", "cycle:3", "subset:2"):
        first = dumps(build_report(load(name)).to_dict())
        second = dumps(build_report(load(name)).to_dict())
        assert first == second
        assert json.loads(first)['classification']['singular'] == sorted(classify_vertices(load(name)).singular)


def test_cross_checks_on_five_hundred_random_graphs():
    summary = CrossCheck(seed=2024, graphs=500).run()
    failures = {r.name: r.failures[:3] for r in summary.results if not r.passed}
    assert summary.ok, failures
    timings = {r.name: r.time_taken for r in summary.results}
    assert all(r.graphs == 500 for r in summary.results)
    assert timings['closures'] < 30
    assert timings['representations'] < 10


def test_sequence_recurrence_matches_closed_form_up_to_ten():
    assert all(a_sequence(m) == a_sequence_closed_form(m) for m in range(11))


def test_quickstart_reports_success(capsys):
    runpy.run_path(str(Path(__file__).resolve().parents[1] / "quickstart.py"), run_name="__main__")
    out = capsys.readouterr().out
    assert "❌" not in out
    assert "Everything is working correctly" in out
