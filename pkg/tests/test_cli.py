import io
from contextlib import redirect_stderr, redirect_stdout

from threepage.cli import main
from threepage.torus import HOPF


def run(argv, stdin_text=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin_text is not None:
        import sys
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def test_construct_tnn_2_verify(monkeypatch):
    code, out, _ = run(["construct", "tnn", "--n", "2", "--verify"])
    assert code == 0
    assert out.splitlines()[0] == HOPF.serialize()
    assert "verification: PASS" in out


def test_construct_tpq_tight_verify(monkeypatch):
    code, out, _ = run(["construct", "tpq", "--p", "2", "--q", "4",
                        "--tight", "--verify"])
    assert code == 0 and "verification: PASS" in out


def test_construct_normalises_parameters(monkeypatch):
    code, out, err = run(["construct", "tpq", "--p", "-3", "--q", "2", "--verify"])
    assert code == 0
    assert "normalised to (2,3)" in err
    assert "verification: PASS" in out


def test_bounds_table(monkeypatch):
    code, out, _ = run(["bounds", "--p", "2", "--q", "5"])
    assert code == 0
    assert "upper_tight    = 11" in out
    assert "arc_index      = 7" in out


def test_validate_ok_and_split_note(monkeypatch):
    code, out, _ = run(["validate", "-"],
                       stdin_text=HOPF.serialize() + "\n", monkeypatch=monkeypatch)
    assert code == 0 and "line 1: ok" in out
    code, out, _ = run(["validate", "-"],
                       stdin_text="n=4; P1:1-2; P2:1-2,3-4; P3:3-4\n",
                       monkeypatch=monkeypatch)
    assert code == 0 and "split pair" in out


def test_validate_invalid_is_domain_error(monkeypatch):
    code, out, _ = run(["validate", "-"],
                       stdin_text="n=4; P1:1-3,2-4; P2:1-2; P3:3-4\n",
                       monkeypatch=monkeypatch)
    assert code == 1 and "INVALID" in out


def test_malformed_input_is_usage_error(monkeypatch):
    code, _, err = run(["validate", "-"], stdin_text="n=3; P1:1-9; P2:2-3; P3:1-3\n",
                       monkeypatch=monkeypatch)
    assert code == 2
    assert "parse error" in err


def test_components_output(monkeypatch):
    code, out, _ = run(["components", "-"], stdin_text=HOPF.serialize(),
                       monkeypatch=monkeypatch)
    assert code == 0 and "components=2" in out


def test_invariants_roundtrip_from_construct(monkeypatch):
    code, out, _ = run(["construct", "tpq", "--p", "2", "--q", "3"])
    pres_line = out.splitlines()[0]
    code, out, _ = run(["invariants", "-"], stdin_text=pres_line,
                       monkeypatch=monkeypatch)
    assert code == 0
    assert "components = 1" in out
    assert "jones (A variable)" in out


def test_invariants_t_variable(monkeypatch):
    code, out, _ = run(["invariants", "-", "--t-variable"],
                       stdin_text="n=3; P1:1-2; P2:2-3; P3:1-3",
                       monkeypatch=monkeypatch)
    assert code == 0 and "jones (t variable)" in out


def test_diagram_export(monkeypatch):
    code, out, _ = run(["diagram", "-"], stdin_text=HOPF.serialize(),
                       monkeypatch=monkeypatch)
    assert code == 0
    assert out.startswith("components=2 crossings=2\n")
    assert out.count("\nX ") + out.startswith("X ") == 2


def test_search_finds_hopf_at_six(monkeypatch):
    code, out, _ = run(["search", "--n-max", "6", "--target-braid", "s1 s1",
                        "--strands", "2"])
    assert code == 0
    assert "index=6" in out


def test_search_usage_error(monkeypatch):
    code, _, err = run(["search", "--n-max", "5"])
    assert code == 2


def test_census_stdout(monkeypatch):
    code, out, _ = run(["census", "--n", "3"])
    assert code == 0
    assert len(out.strip().splitlines()) == 2


def test_render_ascii_stdout(monkeypatch):
    code, out, _ = run(["render", "-", "--format", "ascii"],
                       stdin_text=HOPF.serialize(), monkeypatch=monkeypatch)
    assert code == 0 and "axis" in out


def test_construct_validate_roundtrip_over_grid(monkeypatch):
    cases = ([["tnn", "--n", str(n)] for n in (2, 3, 4, 5)]
             + [["tpq", "--p", str(p), "--q", str(q)]
                for p, q in ((2, 3), (2, 5), (3, 4), (3, 5))]
             + [["tpq", "--p", str(p), "--q", str(q), "--tight"]
                for p, q in ((2, 4), (2, 5), (2, 6), (3, 6))])
    for extra in cases:
        code, out, _ = run(["construct"] + extra)
        assert code == 0
        line = out.splitlines()[0]
        code, out, _ = run(["validate", "-"], stdin_text=line,
                           monkeypatch=monkeypatch)
        assert code == 0 and "ok" in out, extra


def test_braid_command(monkeypatch):
    code, out, _ = run(["braid", "--strands", "3", "--word", "s1 s2 -s1",
                        "--invariants"])
    assert code == 0
    assert "closure components = " in out
    assert "closure profile" in out


def test_braid_bad_word_domain_error(monkeypatch):
    code, _, err = run(["braid", "--strands", "2", "--word", "s7"])
    assert code == 1
