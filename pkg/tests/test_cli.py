import io

import jsonschema
import pytest

from mcf.cli import COMMANDS, load_schema, parse_vector, run
from mcf.emit import read_csv, read_json


def _run(*argv):
    out, err = io.BytesIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_sadic_brun_prefix():
    code, out, _ = _run("sadic", "--algo", "brun", "--vector", "1,e,pi", "--length", "40")
    assert code == 0
    assert out.decode().strip() == "1232323123233231232332312323123232312323"


def test_selmer_discrepancy_sweep():
    code, out, _ = _run("discrepancy", "--algo", "selmer", "--sum", "200")
    assert code == 0
    header, rows = read_csv(out)
    assert header[:5] == ["v1", "v2", "v3", "discrepancy", "status"]
    assert len(rows) == 19701
    row = next(r for r in rows if r[:3] == ["198", "1", "1"])
    assert row[4] == "LoopError"


def test_zero_orbits_is_usage_error():
    code, out, err = _run("lyapunov", "--algo", "brun", "--orbits", "0", "--iterations", "10")
    assert code == 1 and out == b"" and "orbits" in err


@pytest.mark.parametrize("argv", [
    ["nosuchcommand"],
    [],
    ["sadic", "--algo", "jacobi"],
    ["sadic", "--vector", "1,2"],
    ["sadic", "--vector", "0,0,0"],
    ["cylinders", "--n", "0"],
    ["discrepancy", "--sum", "2"],
    ["complexity", "--nmax", "-1"],
    ["sadic", "--integer", "--vector", "1,e,pi"],
    ["matrices", "--format", "svg"],
])
def test_usage_errors(argv):
    assert _run(*argv)[0] == 1


@pytest.mark.parametrize("argv,message", [
    (["eonestar", "--algo", "reverse", "--n", "2"],
     "The substitution (1->23, 2->1233, 3->1232) must be unimodular."),
    (["sadic", "--algo", "reverse", "--integer", "--vector", "197,2,1"],
     "non integer entries (0.5, 0.5, 1.5)"),
    (["sadic", "--algo", "selmer", "--integer", "--vector", "198,1,1"],
     "loops on (1.0, 1.0, 0.0)"),
])
def test_domain_errors(argv, message):
    code, out, err = _run(*argv)
    assert code == 2 and out == b""
    assert message in err


def test_parse_vector():
    assert parse_vector("3,1/2,4") == (3, parse_vector("1/2,1,1")[0], 4)
    assert parse_vector("1, 2, 3") == (1, 2, 3)
    assert all(isinstance(c, float) for c in parse_vector("1,e,pi"))
    assert parse_vector("0.5,1,1")[0] == 0.5


JSON_RUNS = {
    "matrices": ["--algo", "reverse"],
    "substitutions": ["--algo", "cassaigne"],
    "cylinders": ["--algo", "arp", "--n", "2"],
    "invariant-measure": ["--iterations", "2000", "--ndivs", "5"],
    "natural-extension": ["--iterations", "20"],
    "lyapunov": ["--orbits", "2", "--iterations", "2000"],
    "lyapunov-compare": ["--orbits", "1", "--iterations", "2000", "--algos", "brun,poincare"],
    "sadic": ["--length", "30"],
    "complexity": ["--length", "500", "--nmax", "5"],
    "discrepancy": ["--sum", "12", "--algo", "fullysubtractive"],
    "eonestar": ["--n", "4"],
}


def test_every_command_has_a_json_case():
    assert set(JSON_RUNS) == set(COMMANDS)


@pytest.mark.parametrize("command", sorted(JSON_RUNS))
def test_json_output_matches_schema(command):
    code, out, err = _run(command, *JSON_RUNS[command], "--format", "json")
    assert code == 0, err
    jsonschema.validate(read_json(out), load_schema(command))


@pytest.mark.parametrize("command", sorted(JSON_RUNS))
def test_default_format_reproducible(command):
    argv = [command, *JSON_RUNS[command], "--seed", "5"] if "--iterations" in JSON_RUNS[command] \
        else [command, *JSON_RUNS[command]]
    first = _run(*argv)
    assert first[0] == 0
    assert _run(*argv) == first


def test_seed_changes_output():
    base = ["invariant-measure", "--iterations", "500", "--ndivs", "4"]
    assert _run(*base, "--seed", "1")[1] != _run(*base, "--seed", "2")[1]


def test_output_file(tmp_path):
    target = tmp_path / "cyl.svg"
    code, out, _ = _run("cylinders", "--n", "1", "--output", str(target))
    assert code == 0 and out == b""
    assert target.read_bytes().count(b"<polygon") == 6


def test_lyapunov_text_header():
    code, out, _ = _run("lyapunov-compare", "--orbits", "1", "--iterations", "1000",
                        "--algos", "brun,arp")
    assert code == 0
    assert out.decode().splitlines()[0].startswith("Algorithm")


def test_natural_extension_csv():
    code, out, _ = _run("natural-extension", "--iterations", "7")
    header, rows = read_csv(out)
    assert code == 0 and len(rows) == 7 and header[:2] == ["step", "label"]
