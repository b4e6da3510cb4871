"""Fixture files, the table reproduction report and the CAS adapter.

The CAS is exercised through a scripted stand-in executable, so no external
computer algebra system is ever required here.
"""

from __future__ import annotations

import json
import random
import sys
from pathlib import Path

import pytest

from cubic93.cas import CasConfig, CasError, CasUnavailableError, cas_query
from cubic93.classifier import ClassGroupShape, classify, hk_from_hgamma
from cubic93.fixtures import (
    FixtureError,
    FixtureRow,
    append_verdicts,
    load_bundled_fixtures,
    load_fixtures,
    reproduce_table,
    save_fixtures,
)

# ------------------------------------------------------------------- fixtures


def test_bundled_table_shape():
    rows = load_bundled_fixtures()
    assert len(rows) == 28
    assert rows[0].p == 199
    assert rows[-1].p == 5347
    for row in rows:
        assert row.p_mod9 == 1
        assert row.p_squared == row.p * row.p
        assert row.h_gamma3 == 9 and row.h_k3 == 27 and row.u == 1
        assert row.c_gamma == ClassGroupShape.of(9)
        assert row.c_k == ClassGroupShape.of(9, 3)
        assert row.h_k3 == hk_from_hgamma(row.h_gamma3, row.u)


def test_bundled_rows_respect_genus_bound():
    # genus number 3^r divides the 3-part of the cubic class number
    from cubic93.genus import genus_number

    for row in load_bundled_fixtures():
        r, g = genus_number(row.p)
        assert r == 1
        assert row.h_gamma3 % g == 0


def test_load_rejects_bad_h_relation(tmp_path: Path):
    path = tmp_path / "rows.jsonl"
    path.write_text(
        json.dumps(
            {"p": 199, "h_gamma3": 9, "h_k3": 28, "u": 1, "c_gamma": [9], "c_k": [9, 3]}
        )
        + "\n"
    )
    with pytest.raises(FixtureError, match="line 1"):
        load_fixtures(path)


def test_load_rejects_malformed_lines_with_line_numbers(tmp_path: Path):
    good = json.dumps(
        {"p": 199, "h_gamma3": 9, "h_k3": 27, "u": 1, "c_gamma": [9], "c_k": [9, 3]}
    )
    path = tmp_path / "rows.jsonl"
    path.write_text(good + "\n" + "{not json}\n")
    with pytest.raises(FixtureError, match="line 2"):
        load_fixtures(path)
    path.write_text(good + "\n" + json.dumps({"p": 199}) + "\n")
    with pytest.raises(FixtureError, match="missing fields"):
        load_fixtures(path)
    path.write_text(json.dumps({"p": 198, "h_gamma3": 9, "h_k3": 27, "u": 1,
                                "c_gamma": [9], "c_k": [9, 3]}) + "\n")
    with pytest.raises(FixtureError, match="not prime"):
        load_fixtures(path)


def test_load_empty_file(tmp_path: Path):
    path = tmp_path / "empty.jsonl"
    path.write_text("")
    assert load_fixtures(path) == []


def test_load_missing_file(tmp_path: Path):
    with pytest.raises(FixtureError, match="does not exist"):
        load_fixtures(tmp_path / "nope.jsonl")


def test_save_load_round_trip_is_byte_identical(tmp_path: Path):
    rows = load_bundled_fixtures()
    first = tmp_path / "a.jsonl"
    second = tmp_path / "b.jsonl"
    save_fixtures(first, rows)
    reloaded = load_fixtures(first)
    assert reloaded == rows
    save_fixtures(second, reloaded)
    assert first.read_bytes() == second.read_bytes()


def test_bundled_file_is_in_canonical_save_format(tmp_path: Path):
    import cubic93

    bundled = Path(cubic93.__file__).parent / "data" / "type93_fixtures.jsonl"
    resaved = tmp_path / "resaved.jsonl"
    save_fixtures(resaved, load_bundled_fixtures())
    assert resaved.read_bytes() == bundled.read_bytes()


# ------------------------------------------------------------ table reproduction


def test_reproduce_table_from_fixtures():
    report = reproduce_table("fixtures")
    assert report.all_ok
    assert len(report.results) == 28
    assert report.summary == "28/28 rows certified as type (9, 3)"


def test_reproduce_table_is_order_independent(tmp_path: Path):
    rows = load_bundled_fixtures()
    shuffled = rows[:]
    random.Random(11).shuffle(shuffled)
    path = tmp_path / "shuffled.jsonl"
    save_fixtures(path, shuffled)
    report = reproduce_table("fixtures", fixtures_path=path)
    assert report.all_ok
    assert {r.p for r in report.results} == {r.p for r in rows}


def test_reproduce_table_flags_corrupted_row(tmp_path: Path):
    # u = 3 forces h_k3 = 81 for the row to load; classify then refuses it
    path = tmp_path / "corrupt.jsonl"
    path.write_text(
        json.dumps(
            {"p": 199, "h_gamma3": 9, "h_k3": 81, "u": 3, "c_gamma": [9], "c_k": [9, 3]}
        )
        + "\n"
    )
    report = reproduce_table("fixtures", fixtures_path=path)
    assert not report.all_ok
    (result,) = report.results
    assert not result.ok
    assert "expected certified" in result.message


def test_reproduce_table_rejects_unknown_source():
    with pytest.raises(ValueError):
        reproduce_table("folklore")


# ------------------------------------------------------------------- verdicts


def test_append_verdicts_round_trip(tmp_path: Path):
    path = tmp_path / "verdicts.jsonl"
    append_verdicts(path, [classify(199, 9, 1)])
    append_verdicts(path, [classify(61)])
    lines = path.read_text().splitlines()
    assert len(lines) == 2
    first, second = (json.loads(line) for line in lines)
    assert first["status"] == "certified_9_3"
    assert second["input_d"] == 61
    assert first["trace"]


# ------------------------------------------------------------------ CAS bridge


def make_stub(tmp_path: Path, body: str) -> CasConfig:
    script = tmp_path / "fake_gp.py"
    script.write_text(body)
    return CasConfig(command=(sys.executable, str(script)), timeout=30.0)


GOOD_STUB = """\
import sys
text = sys.stdin.read()
assert "bnfinit" in text and "polcompositum" in text
print("CUBIC [9]")
print("SEXTIC [9, 3]")
"""


def test_cas_query_parses_stub_transcript(tmp_path: Path):
    config = make_stub(tmp_path, GOOD_STUB)
    result = cas_query(199, config)
    assert result.h_gamma3 == 9
    assert result.c_gamma == ClassGroupShape.of(9)
    assert result.c_k == ClassGroupShape.of(9, 3)
    assert result.u_estimate == 1
    assert result.u_inferred


def test_cas_three_part_extraction(tmp_path: Path):
    # mixed invariants: 18 = 2 * 3^2 and 6 = 2 * 3 carry the 3-parts 9 and 3
    config = make_stub(
        tmp_path,
        'import sys; sys.stdin.read(); print("CUBIC [9]"); print("SEXTIC [18, 6]")',
    )
    result = cas_query(199, config)
    assert result.c_k == ClassGroupShape.of(9, 3)
    assert result.h_gamma3 == 9
    assert result.u_estimate == 1


def test_cas_u_inference_rejects_impossible_data(tmp_path: Path):
    config = make_stub(
        tmp_path,
        'import sys; sys.stdin.read(); print("CUBIC [9]"); print("SEXTIC [3]")',
    )
    with pytest.raises(CasError, match="no unit index"):
        cas_query(199, config)


def test_cas_missing_executable_is_unavailable():
    config = CasConfig(command=("/nonexistent/gp-binary",), timeout=5.0)
    with pytest.raises(CasUnavailableError):
        cas_query(199, config)


def test_cas_unparseable_output(tmp_path: Path):
    config = make_stub(tmp_path, 'import sys; sys.stdin.read(); print("garbage")')
    with pytest.raises(CasError, match="CUBIC"):
        cas_query(199, config)


def test_cas_nonzero_exit(tmp_path: Path):
    config = make_stub(tmp_path, "import sys; sys.exit(3)")
    with pytest.raises(CasError, match="exited with 3"):
        cas_query(199, config)


def test_reproduce_table_with_cas_stub(tmp_path: Path):
    rows = load_bundled_fixtures()[:3]
    path = tmp_path / "three.jsonl"
    save_fixtures(path, rows)
    report = reproduce_table(
        "cas", fixtures_path=path, cas_config=make_stub(tmp_path, GOOD_STUB)
    )
    assert report.all_ok
    assert len(report.results) == 3
    assert all("CAS" in r.message for r in report.results)


def test_reproduce_table_cas_unavailable_is_skipped(tmp_path: Path):
    report = reproduce_table(
        "cas",
        cas_config=CasConfig(command=("/nonexistent/gp-binary",)),
    )
    assert report.skipped_reason is not None
    assert not report.all_ok
    assert "skipped" in report.summary


def test_fixture_row_u_inference_pair():
    # (h_gamma3, h_k3) = (9, 27) pins u = 1 through the h relation
    assert hk_from_hgamma(9, 1) == 27
    row = FixtureRow(
        p=199, p_squared=199**2, p_mod9=1, h_gamma3=9, h_k3=27, u=1,
        c_gamma=ClassGroupShape.of(9), c_k=ClassGroupShape.of(9, 3),
    )
    assert row.h_k3 == hk_from_hgamma(row.h_gamma3, row.u)
