import subprocess
import sys

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from siginertia.cli import cmd_analyze, cmd_contract, cmd_family, cmd_verify, main
from siginertia.core import SgParseError, format_sg, parse_sg
from siginertia.families import CycleSpec, make_cycle, make_path
from siginertia.verify.report import parse_record

BOWTIE = "5 6\n0 1 +\n0 2 +\n1 2 +\n0 3 +\n0 4 +\n3 4 +\n"


@pytest.fixture
def sg(tmp_path):
    def write(text, name="g.sg"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def test_analyze_balanced_c4(sg):
    out = cmd_analyze(sg(format_sg(make_cycle(CycleSpec(4, True)))), machine=True)
    rec = parse_record(out.payload)
    assert out.exit_code == 0
    assert rec["inertia"] == "1,1,2"
    assert rec["eq_i_plus"] == rec["eq_i_minus"] == rec["eq_nullity"] == "1"
    assert rec["extremal"] == "1"


def test_analyze_p5_human(sg):
    out = cmd_analyze(sg(format_sg(make_path(5))))
    assert out.exit_code == 0
    lines = dict(line.split(None, 1) for line in out.payload.splitlines()[7:] if " " in line)
    assert lines["inertia"].strip() == "2,2,1"
    assert lines["theta"].strip() == "0" and lines["p"].strip() == "2"
    assert lines["i_plus_strict"].strip() == "pass"


def test_analyze_self_loop_is_usage_error(sg, capsys):
    path = sg("3 1\n0 0 +\n")
    assert main(["analyze", path]) == 2
    err = capsys.readouterr().err
    assert ":2:3: parse error" in err


def test_analyze_missing_file(tmp_path):
    assert cmd_analyze(str(tmp_path / "nope.sg")).exit_code == 2


def test_analyze_single_vertex_is_usage_error(sg):
    assert cmd_analyze(sg("1 0\n")).exit_code == 2


def test_verify_exit_codes():
    out = cmd_verify(5)
    assert out.exit_code == 0 and "violations          0" in out.payload
    assert cmd_verify(9).exit_code == 2
    assert cmd_verify(8).exit_code == 2
    assert cmd_verify(1).exit_code == 2
    out = cmd_verify(2, machine=True)
    assert out.exit_code == 0
    assert parse_record(out.payload.splitlines()[0])["skeletons"] == "1"


def test_verify_cli_flags(tmp_path, capsys):
    report = tmp_path / "r.txt"
    code = main(["verify", "--max-n", "4", "--no-connected-only", "--sample-unions", "5", "--report", str(report), "--seed", "2"])
    assert code == 0
    head = parse_record(report.read_text().splitlines()[0])
    assert head["unions"] == "5" and head["violations"] == "0"
    assert main(["verify", "--max-n", "9"]) == 2
    assert main(["verify", "--max-n", "4", "--lemma-rate", "2"]) == 2


def test_family_cycle_unbalanced():
    out = cmd_family("cycle", 6, balanced=False)
    assert out.exit_code == 0
    assert "# formula inertia=(2,2,2)" in out.payload and "# computed inertia=(2,2,2)" in out.payload
    assert parse_sg(out.payload) == make_cycle(CycleSpec(6, False))


def test_family_path_and_errors(capsys):
    out = cmd_family("path", 1)
    assert out.exit_code == 0 and "(0,0,1)" in out.payload
    assert cmd_family("cycle", 2).exit_code == 2
    assert cmd_family("path", 0).exit_code == 2
    assert main(["family", "cycle", "2"]) == 2


def test_family_round_trips_through_analyze(sg):
    for kind, n, bal in [("cycle", 7, True), ("cycle", 10, False), ("path", 6, True)]:
        fam = cmd_family(kind, n, bal)
        computed = fam.payload.split("computed inertia=(")[1].split(")")[0]
        rec = parse_record(cmd_analyze(sg(fam.payload), machine=True).payload)
        assert rec["inertia"] == computed


def test_contract_examples(sg):
    out = cmd_contract(sg(format_sg(make_cycle(CycleSpec(5, True)))))
    assert out.exit_code == 0
    assert "1 nodes, 0 edges" in out.payload

    assert cmd_contract(sg(BOWTIE)).exit_code == 1

    out = cmd_contract(sg("4 4\n0 1 +\n1 2 +\n0 2 -\n2 3 +\n"))
    assert out.exit_code == 0
    assert out.payload.splitlines() == [
        "# contraction tree: 2 nodes, 1 edges",
        "node 0 C[0,1,2]-",
        "node 1 v3",
        "edge 0 1",
    ]
    assert cmd_contract(sg("4 2\n0 1 +\n2 3 +\n")).exit_code == 2
    assert cmd_contract(sg("garbage\n")).exit_code == 2


@settings(max_examples=300, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.text(alphabet="0123456789 +-#\nxa\t", max_size=40))
def test_parser_fuzz_exit_discipline(tmp_path, text):
    p = tmp_path / "fuzz.sg"
    p.write_text(text)
    try:
        g = parse_sg(text)
    except SgParseError:
        g = None
    code = cmd_analyze(str(p)).exit_code
    if g is None or g.order < 2:
        assert code == 2
    else:
        assert code == 0


def test_module_entry_point(sg):
    path = sg(format_sg(make_path(2)))
    run = lambda: subprocess.run([sys.executable, "-m", "siginertia", "analyze", path, "--machine"], capture_output=True)
    a, b = run(), run()
    assert a.returncode == 0 and a.stdout == b.stdout
    assert b"inertia=1,1,0" in a.stdout
