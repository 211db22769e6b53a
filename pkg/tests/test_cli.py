import json
from fractions import Fraction

import pytest

from fracdim.cli import main, parse_family_file, format_family_file
from fracdim.families import generate
from fracdim.graph import ParseError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dimf_spec_petersen(capsys):
    code, out, _ = run(capsys, "dimf", "--spec", "petersen")
    assert code == 0
    assert out.strip() == "5/3"


def test_dimf_spec_cycle4(capsys):
    code, out, _ = run(capsys, "dimf", "--spec", "cycle(4)")
    assert code == 0
    assert out.strip() == "2"


def test_dimf_bad_file_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("n 3\n0 0\n")
    code, _, err = run(capsys, "dimf", str(bad))
    assert code == 2
    assert "self-loop at line 2" in err


def test_dimf_file_input(tmp_path, capsys):
    path = tmp_path / "p4.txt"
    path.write_text("n 4\n0 1\n1 2\n2 3\n")
    code, out, _ = run(capsys, "dimf", str(path))
    assert code == 0 and out.strip() == "1"


def test_dimf_json_round_trip(capsys):
    code, out, _ = run(capsys, "dimf", "--spec", "cycle(5)", "--assignment", "--json")
    assert code == 0
    data = json.loads(out)
    assert Fraction(data["value"]) == Fraction(5, 4)
    assert [Fraction(v) for v in data["assignment"]] == [Fraction(1, 4)] * 5


def test_dimf_decimal_marked_approximate(capsys):
    code, out, _ = run(capsys, "dimf", "--spec", "petersen", "--decimal", "3")
    assert code == 0
    assert "1.667 (approximate)" in out


def test_sdimf_fig1a(capsys):
    code, out, _ = run(capsys, "sdimf", "--spec", "fig1a")
    assert code == 0 and out.strip() == "3/2"


def test_sdimf_with_complement(capsys):
    code, out, _ = run(capsys, "sdimf", "--spec", "path(4)", "--with-complement")
    assert code == 0 and out.strip() == "4/3"


def test_sdimf_bounds(capsys):
    code, out, _ = run(capsys, "sdimf", "--spec", "star_family(6)", "--bounds")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "3"
    assert "sdf 3" in lines and "sd 5" in lines and "max_dimf 5/2" in lines


def test_dim_and_sdim(capsys):
    code, out, _ = run(capsys, "dim", "--spec", "cycle(8)")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(capsys, "sdim", "--spec", "star_family(6)")
    assert code == 0 and out.strip() == "5"


def test_twins(capsys):
    code, out, _ = run(capsys, "twins", "--spec", "complete(4)")
    assert code == 0 and out.strip() == "0 1 2 3"


def test_profile(capsys):
    code, out, _ = run(capsys, "profile", "--spec", "star(6)", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["sigma"] == 5 and data["ex"] == 1 and data["ex1"] == 0


def test_profile_rejects_cycles(capsys):
    code, _, err = run(capsys, "profile", "--spec", "cycle(5)")
    assert code == 2 and "tree" in err


def test_gen_round_trips_through_sdimf(tmp_path, capsys):
    out_path = tmp_path / "fam.txt"
    code, _, _ = run(capsys, "gen", "--spec", "fig1a", "-o", str(out_path))
    assert code == 0
    code, out, _ = run(capsys, "sdimf", str(out_path))
    assert code == 0 and out.strip() == "3/2"


def test_gen_single_graph(capsys):
    code, out, _ = run(capsys, "gen", "--spec", "path(3)")
    assert code == 0
    assert out == "n 3\n0 1\n1 2\n"


def test_family_file_parsing():
    fam = parse_family_file("n 3\ngraph A\n0 1\n1 2\ngraph B\n0 2\n")
    assert len(fam.members) == 2 and fam.names == ("A", "B")
    with pytest.raises(ParseError, match="line 3"):
        parse_family_file("n 3\ngraph A\n0 0\n")
    with pytest.raises(ParseError, match="graph"):
        parse_family_file("n 3\n0 1\n")
    round_trip = parse_family_file(format_family_file(generate("fig3")))
    assert round_trip.members == generate("fig3").members


def test_spec_producing_family_rejected_by_dimf(capsys):
    code, _, err = run(capsys, "dimf", "--spec", "fig1a")
    assert code == 2 and "family" in err


def test_with_complement_rejects_family_specs(capsys):
    code, _, err = run(capsys, "sdimf", "--spec", "fig1a", "--with-complement")
    assert code == 2 and "single-graph" in err


def test_sdim_with_complement(capsys):
    code, out, _ = run(capsys, "sdim", "--spec", "path(4)", "--with-complement")
    assert code == 0 and out.strip() == "2"


def test_identical_invocations_identical_output(capsys):
    _, first, _ = run(capsys, "sdimf", "--spec", "fig2", "--assignment", "--certificate")
    _, second, _ = run(capsys, "sdimf", "--spec", "fig2", "--assignment", "--certificate")
    assert first == second


def test_verify_known_suite(capsys):
    code, out, _ = run(capsys, "verify", "example1_figures")
    assert code == 0
    assert "5/5 passed" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "example1_figures", "--json")
    assert code == 0
    data = json.loads(out)
    assert data[0]["suite"] == "example1_figures"
    assert len(data[0]["checks"]) == 5


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "nosuch")
    assert code == 2 and "unknown suite" in err


def test_verify_budget(capsys):
    code, out, _ = run(capsys, "verify", "prop15_cycles", "--budget", "n=6")
    assert code == 0
    assert "4/4 passed" in out


def test_verify_all_runs_every_suite_in_order(capsys):
    code, out, _ = run(
        capsys, "verify", "all",
        "--budget", "samples=2", "--budget", "trees=2",
        "--budget", "n=6", "--budget", "exhaustive_n=3",
    )
    assert code == 0
    from fracdim.harness import SUITE_ORDER

    seen = [line.split()[1] for line in out.splitlines() if line.startswith("suite ")]
    assert seen == list(SUITE_ORDER)
