from src.cli.cache import ReportCache, cache_key


def test_key_is_deterministic():
    assert cache_key('z0 z0', 'p:7', 4) == cache_key('z0 z0', 'p:7', 4, {})
    assert cache_key('z0 z0', 'p:7', 4) != cache_key('z0 z0', 'p:7', 5)
    assert cache_key('z0 z0', 'p:7', 4) != cache_key('z0 z0', 'p:11', 4)
    assert cache_key('z0', 'q', 4, {'auto': True}) != cache_key('z0', 'q', 4)


def test_put_then_get(tmp_path):
    cache = ReportCache(tmp_path / 'reports')
    key = cache_key('z0', 'q', 3)
    assert cache.get(key) is None
    report = {'h': 'z0', 'dimensions': [1, 2, 3, 4]}
    cache.put(key, report)
    assert cache.get(key) == report
    assert [p.name for p in (tmp_path / 'reports').iterdir()] == [f"{key}.json"]


def test_corrupt_entry_is_ignored(tmp_path):
    cache = ReportCache(tmp_path)
    key = cache_key('z0', 'q', 3)
    cache.path_for(key).write_text('{no es json', encoding='utf-8')
    assert cache.get(key) is None


def test_mismatched_key_is_ignored(tmp_path):
    cache = ReportCache(tmp_path)
    key, other = cache_key('z0', 'q', 3), cache_key('z1', 'q', 3)
    cache.put(other, {'h': 'z1'})
    cache.path_for(other).rename(cache.path_for(key))
    assert cache.get(key) is None
