import json
import os
from pathlib import Path

import pytest

import cogkit

FIXTURES = os.environ.get("COGKIT_FIXTURES", str(Path(__file__).resolve().parents[2] / "fixtures"))


def test_commands_listed():
    assert {"validate", "pi1", "abel", "immerse"} <= set(cogkit.commands())


def test_groups():
    s3 = cogkit.Group.symmetric(3)
    assert s3.order == 6
    assert not s3.is_abelian()
    assert s3.abelian_invariants() == [2]
    assert cogkit.Group.cyclic(12).abelian_invariants() == [12]
    t = s3.table()
    e = s3.identity
    assert all(t[e][x] == x for x in range(6))
    assert all(s3.mul(x, s3.inv(x)) == e for x in range(6))


def test_bad_table_raises_with_code():
    with pytest.raises(cogkit.CogkitError) as info:
        cogkit.Group.from_table([[1, 0], [0, 0]])
    assert info.value.code == "NoIdentity"


def test_workspace():
    ws = cogkit.Workspace()
    ws.load(FIXTURES)
    assert "seg23" in ws.ids("complex")
    assert ws.validate("seg23") == []
    assert ws.local_orders("seg23") == [2, 3, 1]
    assert ws.abelianization("seg23") == [6]
    assert ws.abelianization("circle-trivial") == [0]
    assert not ws.is_immersion("fold2")
    assert ws.f_vector("simplex2") == [7, 12, 6]


def test_run_matches_document():
    code, doc = cogkit.run_json("abel", FIXTURES, cog="seg23")
    assert code == 0
    assert doc["results"][0]["invariants"] == [6]


def test_run_exit_codes():
    assert cogkit.run("immerse", [FIXTURES])[0] == 1
    code, out, err = cogkit.run("pi1", [FIXTURES], cog="missing")
    assert code == 2 and out == "" and err


def test_corpus_round_trip(tmp_path):
    code, out, _ = cogkit.run("corpus", seed=4, count=3)
    assert code == 0
    p = tmp_path / "corpus.json"
    p.write_text(out)
    ws = cogkit.Workspace()
    ws.load(str(p))
    ids = ws.ids("complex")
    assert len(ids) == 3
    assert all(ws.validate(i) == [] for i in ids)
    assert json.loads(out)["schema"] == "cogkit/1"
