from canalg import checks
from canalg.forms import CanonicalType


def _assert_all_ok(results):
    bad = [r for r in results if not r.ok]
    assert not bad, "; ".join(f"{r.name}: {r.details}" for r in bad)


def test_run_all_small_type():
    results = checks.run_all(CanonicalType((2, 3, 4)), pmax=3, seed=11, samples=60)
    assert results
    _assert_all_ok(results)


def test_run_all_boundary_type():
    # large product: naive scans and zero-set enumeration auto-skip,
    # the oracle battery drops to its reduced form
    results = checks.run_all(CanonicalType((3,) * 6), pmax=3, seed=5, samples=40)
    _assert_all_ok(results)
    names = " ".join(r.name for r in results)
    assert "boundary-count" in names


def test_wild_margin_suite_entry():
    results = checks.zeroset_suite(CanonicalType((2, 3, 7)), pmax=2)
    _assert_all_ok(results)
    names = [r.name for r in results]
    assert any("wild-margin" in n for n in names)


def test_stats_shape():
    stats = checks.zeroset_stats(CanonicalType((2, 2, 2)), 2)
    assert len(stats) == 94
    for z, th, sd, pair, xx in stats:
        assert th == z.dprime.d0 - z.dprime.dinf
        assert xx >= 0 and pair >= 0
