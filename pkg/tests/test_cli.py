import json

import pytest

from tgk.cli import EXIT_BOUND, EXIT_FAILURE, EXIT_INPUT, EXIT_OK, main
from tgk.io import graph_to_json


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_analyze_corpus_graph(capsys):
    code, captured = run(capsys, "analyze", "--corpus", "cycle:3")
    assert code == EXIT_OK
    report = json.loads(captured.out)
    assert report['verdicts']['simple']['value'] is False
    assert report['verdicts']['simple']['witness']['reason'] == "generated_by_loop"
    assert report['lattice']['count'] == 2
    assert [d['variant'] for d in report['prime_ideals']] == ["circle_family"]


def test_analyze_is_deterministic(capsys):
    _, first = run(capsys, "analyze", "--corpus", "breaking")
    _, second = run(capsys, "analyze", "--corpus", "breaking")
    assert first.out == second.out


def test_analyze_summary(capsys):
    code, captured = run(capsys, "analyze", "--corpus", "loop_entrance", "--summary")
    assert code == EXIT_OK
    assert "Prime ideals: 2" in captured.out


def test_analyze_file_and_out(tmp_path, capsys, edge):
    source = tmp_path / "edge.json"
    source.write_text(graph_to_json(edge), encoding="utf-8")
    target = tmp_path / "report.json"
    code, captured = run(capsys, "--out", str(target), "analyze", str(source))
    assert code == EXIT_OK
    assert captured.out == ""
    report = json.loads(target.read_text(encoding="utf-8"))
    assert report['verdicts']['simple']['value'] is True


def test_input_errors(tmp_path, capsys):
    assert run(capsys, "analyze", "--corpus", "nope")[0] == EXIT_INPUT
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    code, captured = run(capsys, "analyze", str(broken))
    assert code == EXIT_INPUT
    assert "line" in captured.err


def test_bound_errors(capsys):
    code, captured = run(capsys, "--max-vertices", "2", "analyze", "--corpus", "cycle:3")
    assert code == EXIT_BOUND
    assert "--max-vertices" in captured.err
    assert run(capsys, "af", "7")[0] == EXIT_BOUND


def test_max_subset_n_reaches_corpus_graphs(capsys):
    code, captured = run(capsys, "rep", "--corpus", "subset:7", "--v0", "{}")
    assert code == EXIT_BOUND
    assert "--max-subset-n" in captured.err

    code, captured = run(capsys, "--max-subset-n", "7", "rep", "--corpus", "subset:7", "--v0", "{}")
    assert code == EXIT_OK
    assert json.loads(captured.out)['representation']['basis'] == ["{}"]


def test_lattice_command(capsys):
    code, captured = run(capsys, "lattice", "--corpus", "omega")
    assert code == EXIT_OK
    assert json.loads(captured.out)['count'] == 6

    code, captured = run(capsys, "lattice", "--corpus", "cycle:3", "--dot")
    assert captured.out.startswith("digraph")


def test_primes_command(capsys):
    code, captured = run(capsys, "--no-cross-check", "primes", "--corpus", "breaking")
    assert code == EXIT_OK
    data = json.loads(captured.out)
    assert [d['variant'] for d in data['primitive_ideals']] == [
        "breaking_vertex", "aperiodic_head", "circle_family",
    ]


def test_rep_command(capsys):
    code, captured = run(capsys, "rep", "--corpus", "edge", "--v0", "u")
    assert code == EXIT_OK
    data = json.loads(captured.out)
    assert data['relations']['cuntz_krieger_ok'] is True
    assert data['kernel_pair'] == {'X0': ["u", "w"], 'Z': ["u"]}
    assert data['commutant_dimension'] == 1


def test_rep_command_regular_vertex(capsys):
    code, captured = run(capsys, "rep", "--corpus", "edge", "--v0", "w")
    assert code == EXIT_OK
    data = json.loads(captured.out)
    assert data['kernel_pair'] is None
    assert data['relations']['cuntz_krieger_ok'] is False


def test_rep_command_rejects_cycles(capsys):
    code, captured = run(capsys, "rep", "--corpus", "cycle:3", "--v0", "0")
    assert code == EXIT_INPUT
    assert "cycle" in captured.err


def test_rep_command_ignores_omega_edges_outside_the_orbit(capsys):
    code, captured = run(capsys, "rep", "--corpus", "omega", "--v0", "v")
    assert code == EXIT_OK
    data = json.loads(captured.out)
    assert data['relations']['cuntz_krieger_ok'] is True
    assert data['kernel_pair'] == {'X0': ["v", "w"], 'Z': ["v"]}
    assert data['commutant_dimension'] == 1


def test_af_command(capsys):
    code, captured = run(capsys, "af", "2")
    assert code == EXIT_OK
    assert json.loads(captured.out)['ok'] is True


def test_selfcheck_command(capsys):
    code, captured = run(capsys, "selfcheck", "--graphs", "5", "--seed", "3")
    assert code == EXIT_OK
    assert "All checks passed" in captured.out


def test_missing_command():
    with pytest.raises(SystemExit):
        main([])


def test_failure_exit_code_is_distinct():
    assert len({EXIT_OK, EXIT_FAILURE, EXIT_INPUT, EXIT_BOUND}) == 4
