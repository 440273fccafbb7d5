import json

from gtsingular.cache import Cache, CACHE_VERSION, default_cache_dir, key_digest


def test_roundtrip(tmp_path):
    cache = Cache(tmp_path)
    key = {"op": "phi", "n": 3, "gen": [1, 2]}
    assert cache.get("phi", key) is None
    cache.put("phi", key, [{"coeff": "1", "shift": {}}])
    assert cache.get("phi", key) == [{"coeff": "1", "shift": {}}]


def test_distinct_keys_distinct_files(tmp_path):
    cache = Cache(tmp_path)
    k1 = {"op": "phi", "n": 3, "gen": [1, 2]}
    k2 = {"op": "phi", "n": 3, "gen": [2, 1]}
    assert key_digest(k1) != key_digest(k2)
    cache.put("phi", k1, "a")
    cache.put("phi", k2, "b")
    assert cache.get("phi", k1) == "a" and cache.get("phi", k2) == "b"


def test_version_mismatch_is_miss(tmp_path):
    cache = Cache(tmp_path)
    key = {"op": "x"}
    cache.put("op", key, 1)
    path = tmp_path / "op" / f"{key_digest(key)}.json"
    entry = json.loads(path.read_text())
    entry["version"] = CACHE_VERSION + 1
    path.write_text(json.dumps(entry))
    assert cache.get("op", key) is None


def test_corrupt_file_is_miss(tmp_path):
    cache = Cache(tmp_path)
    key = {"op": "x"}
    cache.put("op", key, 1)
    path = tmp_path / "op" / f"{key_digest(key)}.json"
    path.write_text("{broken")
    assert cache.get("op", key) is None


def test_env_var_overrides_default(monkeypatch, tmp_path):
    monkeypatch.setenv("GTSINGULAR_CACHE", str(tmp_path / "envcache"))
    assert default_cache_dir() == tmp_path / "envcache"
    monkeypatch.delenv("GTSINGULAR_CACHE")
    assert default_cache_dir().name == "gtsingular"
