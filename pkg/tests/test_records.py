import json
from dataclasses import replace
from fractions import Fraction as F

import pytest

from taucongruent import records as rec
from taucongruent.tau_curve import point_from_x
from taucongruent.triangles import RightTriangle


def all_generated():
    yield from rec.tau_records(F(3, 2), count=25)
    yield from rec.tau_records(1, xs=[2, 3, F(1, 2), -1])
    yield from rec.ellipse_records(F(2, 3), count=25)
    yield from rec.circumcircle_records(F(5, 2), count=25)
    for kind in "abc":
        yield from rec.excircle_records(kind, count=25)
    yield rec.normalized_excircle_record(RightTriangle(5, 12, 13), "b")


def test_every_generated_record_verifies_and_round_trips():
    for r in all_generated():
        assert r.verified, r
        assert rec.check_record(r) == []
        line = r.to_json()
        back = rec.OutputRecord.from_json(line)
        assert back == r
        assert back.to_json() == line


def test_tau_record_shape():
    r = rec.tau_record(point_from_x(1, 2))
    assert json.loads(r.to_json()) == {
        "family": "tau",
        "parameters": {"tau": "1", "x": "2", "y": "3"},
        "sides": ["4", "3", "5"],
        "area": "6",
        "class": 6,
        "verified": True,
    }


def test_degenerate_tau_record():
    r = rec.tau_record(point_from_x(1, 0))
    assert r.degenerate and r.verified
    assert r.sides is None and r.cls is None
    assert json.loads(r.to_json())["degenerate"] is True


def test_tampered_side_fails_law_of_cosines():
    r = replace(rec.tau_record(point_from_x(1, 2)), sides=(F(4), F(3), F(6)))
    assert rec.LAW_OF_COSINES_FAILED in rec.check_record(r)


def test_wrong_class_detected():
    for r in [rec.tau_record(point_from_x(3, 4)), rec.ellipse_record(1, 5), rec.excircle_record("c", F(1, 3))]:
        bad = replace(r, cls=r.cls * 2)
        assert rec.CLASS_MISMATCH in rec.check_record(bad)


def test_tampered_ellipse_and_circumcircle():
    e = rec.ellipse_record(2, 1)
    assert "tangency identity failed" in rec.check_record(replace(e, sides=(F(6), F(2), F(6))))
    c = rec.circumcircle_record(F(5, 2), F(1, 2))
    assert "hypotenuse is not the diameter" in rec.check_record(replace(c, parameters={"radius": F(3), "t": F(1, 2)}))


def test_tampered_excircle_radius():
    r = rec.excircle_record("a", F(1, 2))
    bad = replace(r, sides=(F(3), F(4), F(5)), area=F(6), cls=6)
    assert "exradius is not 1" in rec.check_record(bad)


def test_false_verified_flag_is_flagged():
    r = replace(rec.tau_record(point_from_x(1, 2)), verified=False)
    assert rec.check_record(r) == ["verified flag disagrees with recomputation"]


@pytest.mark.parametrize(
    "line, message",
    [
        ("not json", "invalid JSON"),
        ("[1, 2]", "JSON object"),
        ('{"family": "tau"}', "missing field"),
        ('{"family": "cone", "parameters": {}, "sides": null, "area": null, "class": null, "verified": true}', "unknown family"),
        ('{"family": "tau", "parameters": {"tau": "1.5"}, "sides": null, "area": null, "class": null, "verified": true}', "malformed"),
        ('{"family": "tau", "parameters": {}, "sides": ["1"], "area": null, "class": null, "verified": true}', "three"),
        ('{"family": "tau", "parameters": {}, "sides": null, "area": null, "class": "6", "verified": true}', "integer"),
    ],
)
def test_malformed_records(line, message):
    with pytest.raises(ValueError, match=message):
        rec.OutputRecord.from_json(line)


def test_missing_parameter_is_a_check_failure():
    r = rec.OutputRecord("tau", {"tau": F(1)}, (F(4), F(3), F(5)), F(6), 6, True)
    failures = rec.check_record(r)
    assert any("missing parameter" in f for f in failures)


def test_golden_record_files():
    from pathlib import Path

    golden = Path(__file__).parent / "golden"
    assert "\n".join(r.to_json() for r in rec.tau_records(F(3, 2), count=12)) + "\n" == (golden / "tau_3_2.jsonl").read_text()
    assert "\n".join(r.to_json() for r in rec.ellipse_records(1, ts=[1, 3, 4, 5, 6])) + "\n" == (
        golden / "ellipse_table2.jsonl"
    ).read_text()
