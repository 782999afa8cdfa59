import json
from importlib import resources

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eccspectra.errors import InvalidOrderError
from eccspectra.graphs import build_dnd, build_t3, canonical_code, path, relabel
from eccspectra.verifier import (
    APPENDIX_ROWS,
    STATISTICS,
    TheoremId,
    VerifyConfig,
    appendix_table_crosscheck,
    check,
    compute_profile,
    extremal_table,
    profiles,
    run_all,
)

from conftest import labeled_trees

SCHEMA = json.loads(resources.files("eccspectra").joinpath("report_schema.json").read_text())


@settings(max_examples=40, deadline=None)
@given(labeled_trees(min_n=5, max_n=11), st.randoms(use_true_random=False))
def test_statistics_are_isomorphism_invariant(t, rnd):
    if max(t.degrees()) == t.n - 1:
        return
    perm = list(range(t.n))
    rnd.shuffle(perm)
    p, q = compute_profile(t), compute_profile(relabel(t, perm))
    assert p.code == q.code
    for stat in STATISTICS.values():
        assert stat.from_profile(p) == pytest.approx(stat.from_profile(q), abs=1e-9)


def test_profiles_cover_non_star_trees():
    assert [len(profiles(n)) for n in (4, 5, 6, 7)] == [1, 2, 5, 10]
    assert profiles(7) is profiles(7)


@pytest.mark.parametrize("n", range(5, 10))
def test_extremal_table_ranks_and_attainers(n):
    rows = extremal_table("xi1-complement", n)
    assert [v for _, _, v in rows] == sorted((v for _, _, v in rows), reverse=True)
    assert rows[0][1] == canonical_code(build_t3(n, 0, n - 4))
    assert rows[-1][1] == canonical_code(path(n))


def test_extremal_table_energy_min_n6():
    rows = extremal_table("energy-complement", 6)
    assert rows[-1][1] == canonical_code(build_dnd(6, 4, 0, 1))


@pytest.mark.parametrize("tid", [t for t in TheoremId if t is not TheoremId.APPENDIX_TABLE])
def test_every_claim_holds_up_to_nine(tid):
    r = check(tid, 4, 9)
    assert r.verdict in ("holds", "informational"), r.counterexamples[:3]
    assert r.counterexamples == []
    jsonschema.validate({"summary": {"n_range": [4, 9], "holds": [], "fails": [], "informational": []},
                         "reports": [r.to_dict()]}, SCHEMA)


def test_energy_extremes_small_orders_informational():
    r = check(TheoremId.ENERGY_MIN, 5, 6)
    assert r.verdict == "informational"
    got = {o.n: [w.code for w in o.witnesses] for o in r.orders}
    assert got[5] == [canonical_code(path(5))]
    assert got[6] == [canonical_code(build_dnd(6, 4, 0, 1))]


def test_t4_n5_is_informational_data():
    r = check(TheoremId.LEMMA_T4, 5, 6)
    o5 = r.orders[0]
    assert o5.status == "informational"
    assert o5.data["spectrum_deviation"] < 1e-8


def test_xi2_max_reports_cubic_form():
    r = check(TheoremId.XI2_MAX, 6, 10)
    matched = {o.n: o.data["exceptional"]["matched_forms"] for o in r.orders if "exceptional" in o.data}
    assert set(matched) == {6, 8, 10}
    assert all(m == ["x^3+x^2-(s+1)x-s"] for m in matched.values())
    eq = {o.n: len(o.data["equality_codes"]) for o in r.orders}
    assert eq[7] == 3 and eq[9] == 3


def test_tabulated_energy_crosscheck():
    r = appendix_table_crosscheck()
    assert r.verdict == "informational"
    entries = r.orders[0].data["entries"]
    assert [e["label"] for e in entries] == [row[0] for row in APPENDIX_ROWS]
    by = {e["label"]: e for e in entries}
    assert all(by[k]["matches_solver"] for k in ("T2", "T5", "T6", "T7"))
    assert not any(by[k]["matches_solver"] for k in ("T1", "T3", "T4"))
    assert all(by[k]["matches_twice_adjacency"] for k in ("T1", "T3", "T4"))


def test_check_range_validation():
    with pytest.raises(InvalidOrderError):
        check(TheoremId.SPEC_SYM, 3, 5)
    with pytest.raises(InvalidOrderError):
        check(TheoremId.SPEC_SYM, 4, 13)
    with pytest.raises(ValueError):
        check("NOT_A_CLAIM", 4, 5)


def test_run_all_small():
    reports = run_all(VerifyConfig(n_lo=4, n_hi=6))
    assert len(reports) == len(TheoremId)
    assert not [r.id for r in reports if r.verdict == "fails"]


def test_to_dict_timings_flag():
    r = check(TheoremId.SPEC_SYM, 4, 5)
    assert "wall_time" not in r.to_dict()
    assert r.to_dict(timings=True)["wall_time"] >= 0
