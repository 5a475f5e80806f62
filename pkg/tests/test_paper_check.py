from rbsperv.paper_check import CHECKS, off_by_one, run_paper_check, timed_paper_check

F = frozenset


def test_all_pass_within_budget():
    results, seconds = timed_paper_check()
    assert [r.name for r in results] == ["stratification", "cosets", "link-vanishing", "ext-table",
                                         "simplex-engine", "kostant", "duality", "triangle"]
    assert all(r.ok for r in results), [r for r in results if not r.ok]
    assert seconds < 10
    assert len(CHECKS) == 8


def test_deterministic():
    assert run_paper_check() == run_paper_check()


def test_off_by_one_is_named():
    for S in (F({1}), F({2})):
        failed = {r.name for r in run_paper_check(off_by_one(S)) if not r.ok}
        assert {"stratification", "link-vanishing", "ext-table"} <= failed
    bad = [r for r in run_paper_check(off_by_one(F({1}))) if r.name == "stratification"][0]
    assert "P_1: 0" in bad.actual and "P_1: -1" in bad.expected

