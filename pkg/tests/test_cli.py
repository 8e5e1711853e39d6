import json
import subprocess
import sys


from hasseforms.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def invoke_json(capsys, *argv):
    code, out, err = invoke(capsys, *argv)
    return code, json.loads(out) if out else None, err


# -- curve ---------------------------------------------------------------


def test_curve_report_singular_cubic(capsys):
    code, data, _ = invoke_json(capsys, "curve", "--q", "5", "--a", "2", "--b", "3")
    assert code == 0
    assert data["total"] == 7
    assert data["smooth"] is False
    assert data["singular_points"] == [{"x": [4], "y": [0], "degree": 1}]
    assert "pic_order" not in data
    assert "warning" in data


def test_curve_report_smooth(capsys):
    code, data, _ = invoke_json(capsys, "curve", "--q", "5", "--a", "1", "--b", "1")
    assert code == 0
    assert data["pic_order"] == 9 and data["pic_parity"] == "odd"
    assert data["two_torsion"] is False


def test_curve_polyline(capsys):
    code, data, _ = invoke_json(capsys, "curve", "--q", "5", "--polyline")
    assert code == 0
    assert data["total"] == 6 and data["pic_order"] == 1


def test_curve_output_deterministic(capsys):
    _, out1, _ = invoke(capsys, "curve", "--q", "5", "--a", "2", "--b", "3")
    _, out2, _ = invoke(capsys, "curve", "--q", "5", "--a", "2", "--b", "3")
    assert out1 == out2


def test_text_format_mirrors_json(capsys):
    _, data, _ = invoke_json(capsys, "curve", "--q", "5", "--a", "1", "--b", "1")
    _, text, _ = invoke(capsys, "curve", "--q", "5", "--a", "1", "--b", "1", "--format", "text")
    for key, value in data.items():
        if isinstance(value, (int, bool, str)):
            assert f"{key}: {json.dumps(value)}" in text


# -- hasse ----------------------------------------------------------------


def test_hasse_polyline_rank4(capsys):
    code, data, _ = invoke_json(capsys, "hasse", "--polyline", "--q", "5", "--rank", "4")
    assert code == 0
    assert data["verdict"] == "Holds"
    assert data["reason"]["ufd"] is True


def test_hasse_rank2_fails_on_nontrivial_picard(capsys):
    code, data, _ = invoke_json(capsys, "hasse", "--q", "5", "--a", "1", "--b", "1", "--rank", "2")
    assert code == 0
    assert data["verdict"] == "Fails"
    assert data["reason"]["pic_order"] == 9


def test_hasse_singular_curve_is_input_error(capsys):
    code, out, err = invoke(capsys, "hasse", "--q", "5", "--a", "2", "--b", "3", "--rank", "3")
    assert code == 2
    assert "error" in err


# -- form -----------------------------------------------------------------


def form_payload(entry):
    return json.dumps(
        {
            "schema": 1,
            "curve": {"type": "weierstrass", "field": {"p": 5, "k": 1}, "a": [2], "b": [3]},
            "matrix": [[0, 2], [2, entry]],
        }
    )


def test_form_unimodular(capsys):
    code, data, _ = invoke_json(capsys, "form", "--json", form_payload("3*x^3+6*x+9"))
    assert code == 0
    assert data["unimodular"] is True
    assert data["symmetric"] is True and data["integral"] is True
    assert data["det"] == {"num": {"A": "1", "B": "0"}, "den": "1"}


def test_form_non_unimodular(capsys):
    payload = json.dumps(
        {
            "schema": 1,
            "curve": {"type": "polyline", "field": {"p": 5, "k": 1}},
            "matrix": [["x^4-2*x^2+1", 0], [0, 1]],
        }
    )
    code, data, _ = invoke_json(capsys, "form", "--json", payload)
    assert code == 0
    assert data["unimodular"] is False


def test_form_missing_input(capsys):
    code, _, err = invoke(capsys, "form")
    assert code == 2 and "error" in err


# -- genus-verify and isom-search on the bundled files ----------------------


def fixture_path(name):
    from importlib import resources

    return str(resources.files("hasseforms") / "fixtures" / f"{name}.json")


def test_genus_verify_certified(capsys):
    code, data, _ = invoke_json(capsys, "genus-verify", "--input", fixture_path("polyline_pair"))
    assert code == 0
    assert data["verdict"] == "Certified"
    assert data["identity_ok"] == [True, True]
    assert len(data["covered"]) == 55


def test_genus_verify_gap(capsys):
    code, data, _ = invoke_json(capsys, "genus-verify", "--input", fixture_path("singular_cubic_pair"))
    assert code == 1
    assert data["verdict"] == "GapFound"
    assert data["uncovered"] == [{"x": [4], "y": [0], "degree": 1}]


def test_genus_verify_inspection_degree_flag(capsys):
    code, data, _ = invoke_json(
        capsys, "genus-verify", "--input", fixture_path("polyline_pair"), "--inspection-degree", "1"
    )
    assert code == 0
    assert data["degree"] == 1
    assert len(data["covered"]) == 5


def test_isom_search_negative(capsys):
    code, data, _ = invoke_json(capsys, "isom-search", "--input", fixture_path("polyline_pair"))
    assert code == 1
    assert data["found"] is False
    assert data["witness"] is None
    assert "evidence" in data["note"]


def test_isom_search_positive_with_flag(capsys):
    payload = json.dumps(
        {
            "schema": 1,
            "curve": {"type": "polyline", "field": {"p": 5, "k": 1}},
            "F": [[1, 0], [0, 1]],
            "G": [[1, 0], [0, 1]],
        }
    )
    code, data, _ = invoke_json(capsys, "isom-search", "--json", payload, "--degree-bound", "1")
    assert code == 0
    assert data["found"] is True
    assert data["witness"] == [
        [{"num": {"A": "1", "B": "0"}, "den": "1"}, {"num": {"A": "0", "B": "0"}, "den": "1"}],
        [{"num": {"A": "0", "B": "0"}, "den": "1"}, {"num": {"A": "1", "B": "0"}, "den": "1"}],
    ]


def test_isom_search_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("HASSE_FORMS_BUDGET", "3")
    code, _, err = invoke(capsys, "isom-search", "--input", fixture_path("polyline_pair"))
    assert code == 2
    assert "exceeds budget 3" in err


# -- verify-paper ---------------------------------------------------------------


def test_verify_paper_all_rows_pass(capsys):
    code, data, _ = invoke_json(capsys, "verify-paper")
    assert code == 0
    assert data["pass"] is True
    assert len(data["rows"]) == 11
    assert all(r["pass"] for r in data["rows"])


def test_verify_paper_text_table(capsys):
    code, out, _ = invoke(capsys, "verify-paper", "--format", "text")
    assert code == 0
    assert out.count("PASS") == 11
    assert "all checks passed" in out


# -- input errors -----------------------------------------------------------------


def test_bad_q_rejected(capsys):
    code, _, err = invoke(capsys, "curve", "--q", "6", "--a", "1", "--b", "1")
    assert code == 2 and "error" in err


def test_bad_json_rejected(capsys):
    code, _, err = invoke(capsys, "form", "--json", "{not json")
    assert code == 2


def test_bad_schema_rejected(capsys):
    code, _, err = invoke(capsys, "form", "--json", '{"schema": 99}')
    assert code == 2 and "schema" in err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hasseforms.cli", "hasse", "--polyline", "--q", "7", "--rank", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "Holds"
