import json

from schubhorn.cli import (
    EXIT_DOMAIN,
    EXIT_INCONCLUSIVE,
    EXIT_NONZERO,
    EXIT_PARSE,
    EXIT_ZERO,
    main,
)


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr().out
    return code, out


def test_nonzero_exit_codes(capsys):
    code, _ = run(capsys, "nonzero", "1,4;2,3@4")
    assert code == EXIT_ZERO
    code, _ = run(capsys, "nonzero", "1,4;2,4@4")
    assert code == EXIT_NONZERO
    code, _ = run(capsys, "nonzero", "3,4@4", "--engine", "oracle")
    assert code == EXIT_NONZERO
    code, _ = run(capsys, "nonzero", "1,4;2,3@4", "--engine", "probe")
    assert code == EXIT_INCONCLUSIVE


def test_parse_error_exit(capsys):
    assert main(["nonzero", "nonsense"]) == EXIT_PARSE
    assert main(["nonzero", "1,4;2,3"]) == EXIT_PARSE
    assert main(["nonzero", "1,4;1,2,3@4"]) == EXIT_PARSE


def test_depth_error_exit(capsys):
    code = main(["nonzero", "1,2,3,4,5,6,7,8@9", "--engine", "horn"])
    assert code == EXIT_DOMAIN


def test_json_determinism(capsys):
    _, first = run(capsys, "--format", "json", "--seed", "5", "nonzero", "1,4;2,4@4")
    _, second = run(capsys, "--format", "json", "--seed", "5", "nonzero", "1,4;2,4@4")
    assert first == second
    payload = json.loads(first)
    assert payload["seed"] == 5
    assert payload["agree"] is True
    _, third = run(capsys, "--format", "json", "--seed", "6", "filtration", "1,4,5,6;2,3,5,6@6")
    _, fourth = run(capsys, "--format", "json", "--seed", "6", "filtration", "1,4,5,6;2,3,5,6@6")
    assert third == fourth


def test_examples_command(capsys):
    code, out = run(capsys, "examples")
    assert code == 0
    assert out.count("PASS") == 4
    code, out = run(capsys, "--format", "json", "examples")
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert len(lines) == 4
    assert all(not obj["mismatches"] for obj in lines)


def test_inequalities_command(capsys):
    code, out = run(capsys, "--format", "json", "inequalities", "-r", "2", "-n", "4", "-s", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 4
    code, out = run(capsys, "--format", "json", "--mode", "C",
                    "inequalities", "-r", "2", "-n", "4", "-s", "2")
    assert json.loads(out)["count"] <= payload["count"]


def test_saturation_command(capsys):
    code, out = run(capsys, "saturation", "1;1", "-r", "2", "-l", "2", "-N", "2")
    assert code == 0
    assert "True/True" in out
    code = main(["saturation", "3", "-r", "1", "-l", "2", "-N", "2"])
    assert code == EXIT_DOMAIN  # width overflow


def test_hn_command(capsys):
    code, out = run(capsys, "--format", "json", "hn", "1,4;2,3@4")
    assert code == EXIT_ZERO
    payload = json.loads(out)
    assert payload["violated"]["value"] == 1
    assert payload["point_check"] == 1
    code, _ = run(capsys, "hn", "1,4;2,4@4")
    assert code == EXIT_NONZERO


def test_filtration_command(capsys):
    code, out = run(capsys, "--format", "json", "filtration", "2,4@4")
    assert code == 0
    payload = json.loads(out)
    assert payload["dims"] == [2, 0]
    assert all(payload["verified"].values())


def test_count_command(capsys):
    code, out = run(capsys, "count", "2,4;2,4;2,4;2,4@4", "-q", "5", "--samples", "6")
    assert code == 0
    assert out.startswith("seed,count,degenerate")
    assert len(out.strip().splitlines()) == 8  # header + 6 rows + summary


def test_sweep_command(capsys):
    code, out = run(capsys, "--format", "json", "sweep", "-r", "2", "-n", "4", "-s", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["tuples"] == 36
    assert payload["disagreements"] == []
