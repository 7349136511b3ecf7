import json
from fractions import Fraction

from petersson import arith, cache


def test_dump_and_load_roundtrip(tmp_path):
    arith.cohen_H(5, 7)
    path = tmp_path / "c.json"
    cache.dump(path)
    data = json.loads(path.read_text())
    assert data["version"] == cache.CACHE_VERSION
    assert data["cohenH"]["5,7"] == arith.rat_str(arith.cohen_H(5, 7))
    saved = dict(arith._COHEN_H)
    arith._COHEN_H.clear()
    try:
        assert cache.load(path) >= 1
        assert arith._COHEN_H[(5, 7)] == saved[(5, 7)]
    finally:
        arith._COHEN_H.update(saved)


def test_bad_files_are_ignored(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cache.load(bad) == 0
    old = tmp_path / "old.json"
    old.write_text(json.dumps({"version": 0, "bernoulli": {"2": "1/6"}}))
    assert cache.load(old) == 0
    assert cache.load(tmp_path / "missing.json") == 0


def test_env_override(monkeypatch, tmp_path):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path / "env.json"))
    assert cache.resolve_path("other.json") == tmp_path / "env.json"
    monkeypatch.delenv(cache.ENV_VAR)
    assert cache.resolve_path(None) is None
    assert arith.bernoulli(2) == Fraction(1, 6)
