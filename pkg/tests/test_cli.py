import json
import subprocess
import sys
from fractions import Fraction

import pytest

from hessenbergian import ComplexRational, FormatError
from hessenbergian.cli import main, parse_scalar_token
from hessenbergian.formats import parse_text, spec_from_json

CR = ComplexRational


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def matrix_file(tmp_path):
    path = tmp_path / "m.json"
    path.write_text('{"order":2,"rows":[[1,2],[3,4]]}')
    return str(path)


@pytest.fixture
def alpha_spec_file(tmp_path, capsys):
    path = tmp_path / "alpha.json"
    code = main(["gen", "--family", "constant", "--N", "1", "--params", "2",
                 "--horizon", "5", "--out", str(path)])
    capsys.readouterr()
    assert code == 0
    return str(path)


# det ------------------------------------------------------------------------

@pytest.mark.parametrize("method", ["recurrence", "closed", "leibniz"])
def test_det_methods_agree(capsys, matrix_file, method):
    code, out, err = run_cli(capsys, "det", matrix_file, "--method", method)
    assert code == 0 and err == ""
    assert json.loads(out) == {"backend": "exact", "value": [-2, 1, 0, 1]}


def test_det_backend_override(capsys, matrix_file):
    code, out, _ = run_cli(capsys, "det", matrix_file, "--backend", "float")
    assert code == 0
    assert json.loads(out) == {"backend": "float", "value": [-2.0, 0.0]}


def test_det_float_file(capsys, tmp_path):
    path = tmp_path / "f.json"
    path.write_text('{"order":2,"rows":[[[0.5,0.0],[1.0,0.0]],[[1.0,0.0],[1.0,0.0]]]}')
    code, out, _ = run_cli(capsys, "det", str(path))
    assert code == 0
    assert json.loads(out) == {"backend": "float", "value": [-0.5, 0.0]}


def test_det_out_file(capsys, tmp_path, matrix_file):
    target = tmp_path / "result.json"
    code, out, _ = run_cli(capsys, "det", matrix_file, "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == '{"backend":"exact","value":[-2,1,0,1]}\n'


def test_det_missing_file(capsys):
    code, out, err = run_cli(capsys, "det", "/nonexistent/m.json")
    assert code == 2
    assert err.startswith("error: ") and err.count("\n") == 1


def test_det_invalid_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{oops")
    code, _, err = run_cli(capsys, "det", str(path))
    assert code == 2 and err.startswith("error: ")


def test_det_wrong_shape(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"order":2,"rows":[[1,2,9],[3,4]]}')
    code, _, err = run_cli(capsys, "det", str(path))
    assert code == 2 and err.startswith("error: ")


def test_det_cap_violations(capsys, tmp_path, matrix_file):
    import random

    from hessenbergian.cli import random_float_matrix
    from hessenbergian.formats import dump_text, matrix_to_json
    big = tmp_path / "m30.json"
    big.write_text(dump_text(matrix_to_json(
        random_float_matrix(30, random.Random(1)))))
    code, _, err = run_cli(capsys, "det", str(big), "--method", "closed")
    assert code == 3 and "closed_form_cap" in err
    code, _, err = run_cli(capsys, "det", str(big), "--method", "leibniz")
    assert code == 3 and "oracle_cap" in err
    # a lowered cap must be honored too
    code, _, err = run_cli(capsys, "det", matrix_file, "--method", "closed",
                           "--closed-form-cap", "1")
    assert code == 3 and "closed_form_cap=1" in err


# expand / sep ----------------------------------------------------------------

def test_expand_golden(capsys):
    code, out, _ = run_cli(capsys, "expand", "--order", "3")
    assert code == 0
    assert out.splitlines() == [
        "+h(1,2)h(2,3)h(3,1)", "-h(1,2)h(2,1)h(3,3)",
        "-h(1,1)h(2,3)h(3,2)", "+h(1,1)h(2,2)h(3,3)"]


def test_expand_limit(capsys):
    code, out, _ = run_cli(capsys, "expand", "--order", "4", "--limit", "2")
    assert code == 0
    assert out.splitlines() == ["-h(1,2)h(2,3)h(3,4)h(4,1)",
                                "+h(1,2)h(2,3)h(3,1)h(4,4)"]


def test_expand_cap_and_bad_order(capsys):
    code, _, err = run_cli(capsys, "expand", "--order", "17")
    assert code == 3 and err.startswith("error: ")
    code, _, err = run_cli(capsys, "expand", "--order", "0")
    assert code == 2 and err.startswith("error: ")


def test_sep_golden(capsys):
    code, out, _ = run_cli(capsys, "sep", "--order", "8", "--index", "81")
    assert code == 0
    assert json.loads(out) == {"bits": [1, 0, 1, 0, 0, 0, 1, 1],
                               "columns": [1, 3, 2, 5, 6, 7, 4, 8],
                               "sign": 1}


def test_sep_index_out_of_range(capsys):
    code, _, err = run_cli(capsys, "sep", "--order", "3", "--index", "4")
    assert code == 2 and err.startswith("error: ")


# solve ------------------------------------------------------------------------

def test_solve_alpha_spec(capsys, alpha_spec_file):
    expected = {"backend": "exact",
                "values": [[2 ** (n + 1), 1, 0, 1] for n in range(6)]}
    for method in ("forward", "ratio-recurrence", "ratio-closed",
                   "reduced-recurrence", "reduced-closed"):
        code, out, _ = run_cli(capsys, "solve", alpha_spec_file,
                               "--init", "1", "--method", method)
        assert code == 0
        assert json.loads(out) == expected


def test_solve_fraction_init(capsys, alpha_spec_file):
    code, out, _ = run_cli(capsys, "solve", alpha_spec_file, "--init", "3/2")
    assert code == 0
    assert json.loads(out)["values"][0] == [3, 1, 0, 1]


def test_solve_float_backend(capsys, alpha_spec_file):
    code, out, _ = run_cli(capsys, "solve", alpha_spec_file,
                           "--init", "0.5", "--backend", "float")
    assert code == 0
    doc = json.loads(out)
    assert doc["backend"] == "float"
    assert doc["values"][0] == [1.0, 0.0]


def test_solve_wrong_init_length(capsys, alpha_spec_file):
    code, _, err = run_cli(capsys, "solve", alpha_spec_file, "--init", "1,2")
    assert code == 2 and err.startswith("error: ")
    code, _, err = run_cli(capsys, "solve", alpha_spec_file)
    assert code == 2 and err.startswith("error: ")


def test_solve_bad_init_literal(capsys, alpha_spec_file):
    code, _, err = run_cli(capsys, "solve", alpha_spec_file, "--init", "1+2")
    assert code == 2 and err.startswith("error: ")


def test_solve_unbounded_spec_no_init(capsys, tmp_path):
    path = tmp_path / "n0.json"
    path.write_text(json.dumps(
        {"N": 0, "horizon": 2,
         "coeffs": [[[2, 1, 0, 1]], [[1, 1, 0, 1], [2, 1, 0, 1]],
                    [[0, 1, 0, 1], [1, 1, 0, 1], [2, 1, 0, 1]]],
         "forcing": [[2, 1, 0, 1], [0, 1, 0, 1], [0, 1, 0, 1]]}))
    code, out, _ = run_cli(capsys, "solve", str(path))
    assert code == 0
    values = json.loads(out)["values"]
    # y0 = 2/2 = 1; 1*y0 + 2*y1 = 0; 1*y1 + 2*y2 = 0
    assert values == [[1, 1, 0, 1], [-1, 2, 0, 1], [1, 4, 0, 1]]


# gen --------------------------------------------------------------------------

def test_gen_constant_is_alpha_spec(capsys, alpha_spec_file):
    spec, backend = spec_from_json(parse_text(open(alpha_spec_file).read()))
    assert backend == "exact"
    assert spec.index_N == 1 and spec.horizon == 5
    for n in range(6):
        assert spec.coeffs[n][n] == CR(-2)
        assert spec.coeffs[n][n + 1] == CR(1)
        assert all(not v for v in spec.coeffs[n][:n])
        assert not spec.forcing[n]


def test_gen_deterministic_bytes(capsys):
    outputs = []
    for _ in range(2):
        code, out, _ = run_cli(capsys, "gen", "--family", "random", "--N", "2",
                               "--horizon", "6", "--seed", "123")
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]
    code, other, _ = run_cli(capsys, "gen", "--family", "random", "--N", "2",
                             "--horizon", "6", "--seed", "124")
    assert other != outputs[0]


def test_gen_random_is_valid_spec(capsys):
    code, out, _ = run_cli(capsys, "gen", "--family", "random", "--N", "3",
                           "--horizon", "5", "--seed", "9")
    assert code == 0
    spec, _ = spec_from_json(parse_text(out))
    assert spec.index_N == 3
    for n in range(6):
        assert spec.leading(n)


def test_gen_periodic_pattern(capsys):
    code, out, _ = run_cli(capsys, "gen", "--family", "periodic", "--N", "2",
                           "--horizon", "9", "--params", "3", "--seed", "7")
    assert code == 0
    spec, _ = spec_from_json(parse_text(out))
    p = 3
    for n in range(10 - p):
        assert spec.forcing[n + p] == spec.forcing[n]
        for off in range(3):
            assert spec.coeffs[n + p][n + p + off] == spec.coeffs[n][n + off]
        assert all(not v for v in spec.coeffs[n][:n])


def test_gen_invalid_params(capsys):
    code, _, err = run_cli(capsys, "gen", "--family", "constant", "--N", "2",
                           "--horizon", "3", "--params", "1")
    assert code == 2 and err.startswith("error: ")
    code, _, err = run_cli(capsys, "gen", "--family", "periodic", "--N", "1",
                           "--horizon", "3", "--params", "zero")
    assert code == 2 and err.startswith("error: ")
    code, _, err = run_cli(capsys, "gen", "--family", "periodic", "--N", "1",
                           "--horizon", "3", "--params", "0")
    assert code == 2 and err.startswith("error: ")
    code, _, err = run_cli(capsys, "gen", "--family", "random", "--N", "1",
                           "--horizon", "3", "--params", "x")
    assert code == 2 and err.startswith("error: ")


# bench ------------------------------------------------------------------------

def test_bench_csv_shape(capsys):
    code, out, _ = run_cli(capsys, "bench", "--orders", "4,6", "--reps", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "order,method,median_ns"
    assert len(lines) == 5
    assert [line.split(",")[:2] for line in lines[1:]] == [
        ["4", "recurrence"], ["4", "closed"],
        ["6", "recurrence"], ["6", "closed"]]
    for line in lines[1:]:
        assert int(line.split(",")[2]) > 0


def test_bench_method_subset(capsys):
    code, out, _ = run_cli(capsys, "bench", "--orders", "5", "--reps", "2",
                           "--methods", "recurrence")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2 and lines[1].startswith("5,recurrence,")


def test_bench_bad_flags(capsys):
    code, _, err = run_cli(capsys, "bench", "--orders", "0")
    assert code == 2 and err.startswith("error: ")
    code, _, err = run_cli(capsys, "bench", "--orders", "4",
                           "--methods", "quantum")
    assert code == 2 and err.startswith("error: ")


# plumbing ---------------------------------------------------------------------

def test_determinism_across_runs(capsys, matrix_file, alpha_spec_file):
    invocations = [
        ["det", matrix_file, "--method", "closed"],
        ["expand", "--order", "5"],
        ["sep", "--order", "6", "--index", "11"],
        ["solve", alpha_spec_file, "--init", "2/3"],
        ["gen", "--family", "periodic", "--N", "1", "--horizon", "4",
         "--params", "2", "--seed", "17"],
    ]
    for argv in invocations:
        first = run_cli(capsys, *argv)
        second = run_cli(capsys, *argv)
        assert first == second and first[0] == 0


def test_bad_usage(capsys):
    code, _, err = run_cli(capsys)
    assert code == 2 and err.startswith("error: ")
    code, _, err = run_cli(capsys, "frobnicate")
    assert code == 2 and err.startswith("error: ")
    code, _, err = run_cli(capsys, "det")
    assert code == 2 and err.startswith("error: ")
    code, _, err = run_cli(capsys, "det", "x.json", "--method", "laplace")
    assert code == 2 and err.startswith("error: ")
    code, _, err = run_cli(capsys, "det", "x.json", "--closed-form-cap", "-3")
    assert code == 2 and err.startswith("error: ")


def test_help_exits_zero(capsys):
    code, out, _ = run_cli(capsys, "--help")
    assert code == 0 and "det" in out


def test_module_entry_point(matrix_file):
    proc = subprocess.run(
        [sys.executable, "-m", "hessenbergian", "det", matrix_file],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"backend": "exact",
                                       "value": [-2, 1, 0, 1]}
    proc = subprocess.run(
        [sys.executable, "-m", "hessenbergian", "det", "missing.json"],
        capture_output=True, text=True, cwd="/")
    assert proc.returncode == 2
    assert proc.stderr.startswith("error: ")


# scalar literals ----------------------------------------------------------------

@pytest.mark.parametrize("text,expected", [
    ("3/2", CR(Fraction(3, 2))),
    ("-2", CR(-2)),
    ("1+i", CR(1, 1)),
    ("i", CR(0, 1)),
    ("-i", CR(0, -1)),
    ("2i", CR(0, 2)),
    ("3/2-1/3i", CR(Fraction(3, 2), Fraction(-1, 3))),
    ("1.5", CR(Fraction(3, 2))),
    ("1e-3", CR(Fraction(1, 1000))),
    (" 2/7+1/7i ", CR(Fraction(2, 7), Fraction(1, 7))),
])
def test_parse_scalar_token_exact(text, expected):
    assert parse_scalar_token(text, "exact") == expected


@pytest.mark.parametrize("text,expected", [
    ("0.5-0.25i", 0.5 - 0.25j),
    ("2", 2 + 0j),
    ("1.5e-2i", 0.015j),
])
def test_parse_scalar_token_float(text, expected):
    assert parse_scalar_token(text, "float") == expected


@pytest.mark.parametrize("text", ["", "1+2", "1//2", "/2", "abc", "1+2j"])
def test_parse_scalar_token_rejects(text):
    with pytest.raises(FormatError):
        parse_scalar_token(text, "exact")
