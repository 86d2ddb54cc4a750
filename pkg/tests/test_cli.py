"""End-to-end command-line behavior: output documents, exit codes, caching."""

import json

import pytest

from f2dyn import BinaryField
from f2dyn.cli import (EXIT_INVARIANT, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE,
                       JobConfig, UsageError, build_parser, emit_graph, main,
                       parse_element, run)

F32 = BinaryField(5)
G = F32.primitive_element()


def invoke(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_element_variants():
    assert parse_element(F32, "g") == G
    assert parse_element(F32, "g^12") == G ** 12
    assert parse_element(F32, "G^3") == G ** 3
    assert parse_element(F32, "g3") == G ** 3
    assert parse_element(F32, "0x1f") == F32.element(0x1F)
    assert parse_element(F32, "1f") == F32.element(0x1F)
    assert parse_element(F32, "g^0") == F32.one
    assert parse_element(F32, "g^-1") == G ** 30
    for bad in ("", "q^3", "g^x", "0xfff", "zz"):
        with pytest.raises(UsageError):
            parse_element(F32, bad)


def test_job_config_round_trip():
    parser = build_parser()
    for cfg in (
        JobConfig(command="orbits", degree=5, a="g", b="g^3", k=2),
        JobConfig(command="curve", degree=5, modulus=0x25, a="g", b="g^3",
                  k=2, format="json", cache_dir="/tmp/c", jobs=4),
        JobConfig(command="conjugate", degree=5, map_kind="psi", a="g",
                  b="g^2", k=2),
        JobConfig(command="bluher", degree=3, a="g^3", k=2),
        JobConfig(command="bluher", degree=4, k=1),
        JobConfig(command="selftest", quick=True),
    ):
        assert JobConfig.from_args(parser.parse_args(cfg.to_args())) == cfg


def test_orbits_text_reproduces_figure(capsys):
    code, out, err = invoke(
        ["orbits", "--degree", "5", "--map", "theta",
         "--a", "g", "--b", "g^3", "--k", "2"], capsys)
    assert code == EXIT_OK and err == ""
    assert "cycles: 1 of length 1, 1 of length 2, 3 of length 10" in out
    assert "(g^0 -> g^6 -> g^10 -> g^25 -> g^5 -> g^4 -> g^16 -> 0 -> g^3 -> g^7)" in out
    assert "(g^19 -> g^26)" in out
    assert "(inf)" in out


def test_orbits_dot_output_is_deterministic(capsys):
    argv = ["orbits", "--degree", "5", "--a", "g", "--b", "g^3",
            "--format", "dot"]
    code, first, _ = invoke(argv, capsys)
    assert code == EXIT_OK
    code, second, _ = invoke(argv, capsys)
    assert first == second
    assert first.startswith("digraph cycles {")
    assert first.count("->") == F32.order + 1
    assert '"inf" -> "inf";' in first


def test_orbits_json_document(capsys):
    code, out, _ = invoke(
        ["orbits", "--degree", "5", "--map", "psi", "--a", "g",
         "--b", "g^2", "--format", "json"], capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["summary"] == {"1": 3, "5": 6}
    assert doc["point_total"] == 33
    assert ["g^8", "inf", "0", "g^29", "g^22"] in doc["cycles"]


def test_emit_graph_rejects_text_format():
    cs = __import__("f2dyn").MapSpec("theta", G, G ** 3, 2).cycle_structure()
    with pytest.raises(UsageError):
        emit_graph(cs, "text")


def test_curve_report_contents(capsys):
    code, out, _ = invoke(
        ["curve", "--degree", "5", "--a", "g", "--b", "g^3",
         "--format", "json"], capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["curve"]["base"] == {"order": 41, "n1": 1, "n2": 41}
    assert doc["curve"]["extension"] == {"order": 1025, "n1": 1, "n2": 1025}
    assert doc["curve"]["a1"]["g_exp"] == 15 and doc["curve"]["a2"]["g_exp"] == 1
    assert doc["predicted_lengths"] == [1, 2, 10]
    assert set(doc["observed_lengths"]) <= set(doc["predicted_lengths"])
    rows = {(r["over"], r["d1"], r["d2"]): r for r in doc["catalog"]}
    assert rows[(5, 1, 1)]["length"] == 10
    assert rows[(5, 1, 1)]["cycle_count"] == 2
    assert rows[(10, 1, 205)]["length"] == 2
    assert rows[(10, 1, 25)]["length"] == 10
    assert any("catalog matches" in n for n in doc["notes"])


def test_curve_cache_cold_and_warm_agree(tmp_path, capsys):
    argv = ["curve", "--degree", "5", "--a", "g^3", "--b", "g^15",
            "--cache-dir", str(tmp_path), "--format", "json"]
    code, cold, err = invoke(argv, capsys)
    assert code == EXIT_OK and err == ""
    entries = list(tmp_path.glob("*.json"))
    assert entries  # the cold run populated the cache
    code, warm, err = invoke(argv, capsys)
    assert code == EXIT_OK and err == ""
    assert warm == cold


def test_curve_cache_corruption_is_recovered(tmp_path, capsys):
    argv = ["curve", "--degree", "5", "--a", "g", "--b", "g^3",
            "--cache-dir", str(tmp_path), "--format", "json"]
    code, baseline, _ = invoke(argv, capsys)
    assert code == EXIT_OK
    for entry in tmp_path.glob("*.json"):
        entry.write_text("{ not json")
    code, out, err = invoke(argv, capsys)
    assert code == EXIT_OK
    assert out == baseline
    assert "cache" in err.lower()


def test_curve_jobs_do_not_change_output(capsys):
    base = ["curve", "--degree", "5", "--a", "g", "--b", "g^3",
            "--format", "json"]
    _, one, _ = invoke(base + ["--jobs", "1"], capsys)
    _, four, _ = invoke(base + ["--jobs", "4"], capsys)
    one_doc, four_doc = json.loads(one), json.loads(four)
    del one_doc["config"], four_doc["config"]  # echoes differ in jobs only
    assert one_doc == four_doc


def test_conjugate_transcript(capsys):
    code, out, _ = invoke(
        ["conjugate", "--degree", "5", "--a", "g", "--b", "g^2",
         "--format", "json"], capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    conj = doc["conjugacy"]
    assert conj["relative_degree"] == 1
    assert conj["c"]["g_exp"] == 12
    assert (conj["c1"]["g_exp"], conj["c2"]["g_exp"], conj["c3"]["g_exp"]) \
        == (1, 3, 8)
    assert conj["system_holds"] is True
    assert conj["verified_points"] == 33
    assert conj["theorem_count"] == 3
    assert conj["fixed_point_count"] == 3
    assert sorted(conj["fixed_points"]) == ["g^14", "g^24", "g^28"]
    assert conj["normal_form_fixed_points"] == ["0", "g^27", "inf"]
    assert conj["tau_images"] == {"0": "g^24", "g^27": "g^14", "inf": "g^28"}


def test_bluher_sweep_and_single_value(capsys):
    code, out, _ = invoke(
        ["bluher", "--degree", "3", "--k", "2", "--format", "json"], capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    counts = doc["root_counts"]
    assert counts["polynomial"] == "x^5 + x + a"
    assert counts["values_swept"] == 7
    assert counts["histogram"] == {"0": 3, "1": 3, "3": 1}
    assert counts["counts"]["g^0"] == 3
    code, out, _ = invoke(
        ["bluher", "--degree", "3", "--k", "2", "--a", "g^3",
         "--format", "json"], capsys)
    doc = json.loads(out)
    assert doc["root_counts"]["values_swept"] == 1
    assert doc["root_counts"]["counts"] == {"g^3": 1}


def test_selftest_quick_passes(capsys):
    code, out, _ = invoke(["selftest", "--quick"], capsys)
    assert code == EXIT_OK
    assert out.count("ok ") == 4


def test_usage_errors_exit_two(capsys):
    bad_lines = [
        # zero coefficient a
        ["orbits", "--degree", "5", "--a", "0x0", "--b", "g"],
        # malformed element
        ["orbits", "--degree", "5", "--a", "g^x", "--b", "g"],
        # element out of range for the field
        ["orbits", "--degree", "3", "--a", "0xff", "--b", "g"],
        # conjugation of a theta map
        ["conjugate", "--degree", "5", "--map", "theta", "--a", "g",
         "--b", "g^2"],
        # curve analysis needs the quartic shape
        ["curve", "--degree", "5", "--a", "g", "--b", "g^3", "--k", "3"],
        # reducible modulus
        ["orbits", "--degree", "3", "--modulus", "0x9", "--a", "g",
         "--b", "g"],
        # psi needs k >= 1
        ["orbits", "--degree", "5", "--map", "psi", "--a", "g", "--b", "g",
         "--k", "0"],
        # bluher with a = 0
        ["bluher", "--degree", "3", "--a", "0x0"],
    ]
    for argv in bad_lines:
        code, out, err = invoke(argv, capsys)
        assert code == EXIT_USAGE, argv
        assert "error" in err


def test_unknown_flags_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["orbits", "--degree", "5", "--a", "g", "--b", "g",
              "--style", "fancy"])
    assert info.value.code == EXIT_USAGE
    capsys.readouterr()


def test_resource_exhaustion_exits_three(capsys):
    # this reciprocal map has no conjugation data within the search bound
    code, out, err = invoke(
        ["conjugate", "--degree", "3", "--a", "0x2", "--b", "0x2",
         "--k", "3"], capsys)
    assert code == EXIT_RESOURCE
    assert "resource" in err


def test_run_dispatches_by_command():
    cfg = JobConfig(command="orbits", degree=5, a="g", b="g^3", k=2)
    out = run(cfg)
    assert "cycles: 1 of length 1, 1 of length 2, 3 of length 10" in out
