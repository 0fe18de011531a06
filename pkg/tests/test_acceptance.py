from pathlib import Path

import pytest

from src.algebra.field import Field
from src.algebra.unipoly import UniPoly
from src.cli.acceptance import CRITERIA, cofactor_charpoly, run_acceptance
from src.genmat.matrices import ConcreteMatrix
from src.utils.settings import Defaults


def test_every_criterion_is_registered():
    assert sorted(CRITERIA) == list(range(1, 11))


def test_cofactor_oracle():
    f7 = Field.prime(7)
    m = ConcreteMatrix(f7, [[1, 2], [3, 4]])
    assert cofactor_charpoly(m) == UniPoly([f7(-2), f7(-5), f7(1)])


@pytest.mark.parametrize('number', sorted(CRITERIA))
def test_quick_criterion_passes(number):
    _, check = CRITERIA[number]
    outcome = check(True, 0)
    assert outcome['passed'], outcome['details']


def test_run_acceptance_selection():
    results = run_acceptance(quick=True, seed=1, only=[4, 9])
    assert [r.number for r in results] == [4, 9]
    assert all(r.passed for r in results)
    assert results[0].to_dict()['title'] == 'Division-free characteristic polynomial'


def test_cache_directory(monkeypatch, tmp_path):
    assert Defaults.cache_directory(str(tmp_path)) == tmp_path
    monkeypatch.setenv(Defaults.CACHE_ENV, str(tmp_path / 'env'))
    assert Defaults.cache_directory() == tmp_path / 'env'
    monkeypatch.delenv(Defaults.CACHE_ENV)
    assert Defaults.cache_directory() == Defaults.CACHE_FALLBACK
    assert isinstance(Defaults.CACHE_FALLBACK, Path)
    assert Defaults.summary()['default_field'] == 'p:2147483647'
