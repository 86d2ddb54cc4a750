"""The built-in verification suite's harness behavior."""

from f2dyn import selftest


def test_quick_mode_runs_the_worked_examples():
    lines = []
    assert selftest.run(quick=True, out=lines.append) == 0
    ok_lines = [ln for ln in lines if ln.startswith("ok ")]
    assert len(ok_lines) == 4
    assert lines[-1] == "all 4 checks passed"


def test_check_table_shape():
    assert len(selftest.CHECKS) == 9
    for title, fn, budget in selftest.CHECKS:
        assert callable(fn) and budget > 0 and title


def test_failures_are_reported(monkeypatch):
    def boom():
        raise selftest.CheckFailure("synthetic failure")

    patched = (("synthetic", boom, 1.0),) + selftest.CHECKS[1:4]
    monkeypatch.setattr(selftest, "CHECKS", patched)
    lines = []
    assert selftest.run(quick=True, out=lines.append) == 1
    assert any(ln.startswith("FAIL") and "synthetic failure" in ln
               for ln in lines)
    assert lines[-1] == "1 of 4 checks failed"
