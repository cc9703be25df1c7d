import pytest

from config import RANDOM_SEED
from partitions import enumerate_set_partitions, shape
from verify import (SUITES, _REGISTRY, _for_random_members, appell_partitions,
                    run_suite)

SLOW = {
    "F_P dimensions over clifford(3)",
    "distinct spaces for n = 3",
    "octonionic P_(2,1,2) chain",
    "P_(1,2,2) reproduction in clifford(6)",
    "Fueter chain of P_(1,2,2)",
}


def _cases(suite):
    return [
        pytest.param(fn, id=name, marks=[pytest.mark.slow] if name in SLOW else [])
        for name, fn in _REGISTRY[suite]
    ]


@pytest.mark.parametrize("check", _cases("reference"))
def test_reference_check(check):
    check()


@pytest.mark.slow
@pytest.mark.parametrize("check", _cases("properties"))
def test_property_check(check, monkeypatch):
    monkeypatch.setenv("FUETER_PROPERTY_CASES", "10")
    check()


def test_suite_names():
    assert SUITES == ("reference", "properties", "all")
    with pytest.raises(ValueError):
        run_suite("everything")


def test_run_suite_filters_and_times():
    results = run_suite("all", only="partition counts")
    assert [r.name for r in results] == ["partition counts"]
    assert results[0].passed and results[0].suite == "reference"
    assert results[0].elapsed_ms >= 0


def test_property_suite_layout():
    names = [name for name, _ in _REGISTRY["properties"]]
    for name in ("spherical derivatives and D_P on random F_P members",
                 "Dunkl Laplacian on random P-slice functions",
                 "CK round trip and Taylor expansion",
                 "Appell property and powers of x_A",
                 "distinct spaces for n = 4"):
        assert name in names


def test_random_members_cover_the_configured_case_count(monkeypatch):
    monkeypatch.setenv("FUETER_PROPERTY_CASES", "6")
    seen = []
    _for_random_members(lambda f, P: seen.append((f.n, P.n)), RANDOM_SEED)
    assert len(seen) == 6
    assert all(n == m for n, m in seen)
    assert {n for n, _ in seen} == {3, 7}


def test_appell_partitions_include_large_blocks():
    assert appell_partitions(3) == enumerate_set_partitions(3)
    shapes = [shape(P) for P in appell_partitions(7)]
    assert shapes == [(7,), (5, 1, 1), (1, 1, 1, 1, 1, 1, 1)]
