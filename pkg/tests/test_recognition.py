import json

from src.algebra.freepoly import FreePoly
from src.algebra.unipoly import UniPoly
from src.centralizer.recognition import (INSUFFICIENT_DEGREE, NOT_STABILIZED, REDUCTION_FAILURE,
                                         centralizer_report, express_in_powers, normalize_generator,
                                         recognize_generator, stabilized_report)
from src.centralizer.solver import GradedBasis


def test_square_is_generated_by_its_root(fp, xy):
    x, _ = xy
    report = centralizer_report(x * x, 6)
    assert report.recognized
    assert report.commutative
    assert report.h == x
    assert report.boundary_degree == 6
    for m, (g, q) in enumerate(report.certificates):
        assert g == x ** m
        assert q == UniPoly([fp(0)] * m + [fp(1)])


def test_sum_of_generators(xy):
    x, y = xy
    report = centralizer_report(x + y, 4)
    assert report.recognized
    assert report.h == x + y
    assert report.to_dict()['h'] == 'z1 + z0'


def test_xyx(xy):
    x, y = xy
    report = centralizer_report(x * y * x, 6)
    assert report.recognized
    assert report.h == x * y * x
    assert report.boundary_degree == 6


def test_boundary_degree_rounds_down(xy):
    x, y = xy
    report = centralizer_report(x * y, 5)
    assert report.h == x * y
    assert report.boundary_degree == 4


def test_insufficient_degree(xy):
    x, y = xy
    report = centralizer_report(x * y * x, 2)
    assert not report.recognized
    assert report.h is None
    assert report.diagnostic == INSUFFICIENT_DEGREE


def test_counterexample_is_reported(fp, xy):
    x, y = xy
    basis = GradedBasis(x * x, 2, {0: [FreePoly.one(fp, 2)], 1: [x], 2: [y * y]})
    report = recognize_generator(basis)
    assert not report.recognized
    assert not report.commutative
    assert report.counterexample == y * y
    assert report.diagnostic == REDUCTION_FAILURE
    assert report.to_dict()['counterexample'] == 'z1 z1'


def test_generator_normalization(fp, xy):
    x, _ = xy
    assert normalize_generator(x.scale(3) + 5) == x
    h = x * x + x
    assert express_in_powers(h * h + h.scale(2) + 1, h, {}) == UniPoly([fp(1), fp(2), fp(1)])
    assert express_in_powers(x, h, {}) is None


def test_report_is_json(xy):
    x, y = xy
    data = centralizer_report(x * y, 4).to_dict()
    text = json.dumps(data)
    assert json.loads(text) == data
    assert data['claim'] == 'C ∩ (deg ≤ 4) = k[h] ∩ (deg ≤ 4)'
    assert data['dimensions'] == [1, 1, 2, 2, 3]


def test_stabilization(xy):
    x, y = xy
    report = stabilized_report(x * y, 1, 6)
    assert report.h == x * y
    assert report.bound == 3
    assert report.diagnostic is None
    unstable = stabilized_report(x * y * x, 1, 3)
    assert unstable.diagnostic == NOT_STABILIZED
