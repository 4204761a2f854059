import pytest
from django.core.exceptions import ImproperlyConfigured
from django.test import override_settings

from stewart.exceptions import PreconditionError
from stewart.serializers import CheckReportSerializer
from stewart.theorems.base import CheckReport, TheoremCheck
from stewart.theorems.defaults import square_order_allowed
from stewart.theorems.pool import TheoremCheckPool, theorem_checks_pool


class AlwaysFailingCheck(TheoremCheck):
    """
    Every sequence is a counterexample
    """
    identifier = 'failing'

    def check_sequence(self, t):
        return {'t': str(t)}


def test_registered_checks():
    assert theorem_checks_pool.get_identifiers() == [
        'stewart', 'palindromes', 'cubes', 'critexp', 'squares', 'complexity', 'xxyyxx',
        'common', 'automatic', 'ap', 'thm3', 'coverage-optimal']


def test_unknown_check():
    with pytest.raises(PreconditionError) as excinfo:
        theorem_checks_pool.get_check('faceq')
    assert 'cubes' in str(excinfo.value)


@override_settings(STEWART_THEOREM_CHECKS=['stewart.theorems.defaults.CubeCheck'] * 2)
def test_identifiers_must_be_unique():
    with pytest.raises(ImproperlyConfigured):
        TheoremCheckPool().get_all_checks()


@override_settings(STEWART_THEOREM_CHECKS=['stewart.models.StoredAutomaton'])
def test_checks_must_inherit_from_theorem_check():
    with pytest.raises(ImproperlyConfigured):
        TheoremCheckPool().get_all_checks()


def test_square_order_allowed():
    assert [n for n in range(1, 30) if square_order_allowed(n)] == [1, 2, 3, 6, 9, 18, 27]


def test_explicit_bounds():
    report = theorem_checks_pool.get_check('cubes').run(length=3)
    assert report.passed
    assert report.checked == 1 + 6 + 36 + 216
    assert report.bounds == {'len': 3}
    assert report.seed == 7
    assert str(report) == 'PASS cubes: Finite Stewart words contain no cubes (259 cases; len=3; seed 7)'


def test_default_bounds_add_samples():
    report = theorem_checks_pool.get_check('cubes').run(seed=3)
    assert report.passed
    assert report.checked == 1 + 6 + 36 + 216 + 1296 + 20
    assert report.bounds == {'len': 4, 'sampled': [5], 'samples': 20}
    assert report.seed == 3


def test_failing_report():
    report = AlwaysFailingCheck().run(length=2)
    assert not report.passed
    assert report.checked == 43
    assert len(report.witnesses) == CheckReport.MAX_WITNESSES
    lines = str(report).splitlines()
    assert lines[0].startswith('FAIL failing: Every sequence is a counterexample (43 cases;')
    assert lines[1] == "  witness: {'t': ''}"


def test_report_serializer():
    report = AlwaysFailingCheck().run(length=0)
    data = CheckReportSerializer(report).data
    assert data['identifier'] == 'failing'
    assert data['passed'] is False
    assert data['witnesses'] == [{'t': ''}]
    assert data['bounds'] == {'len': 0}


@pytest.mark.parametrize('identifier, length', [
    ('stewart', 4),
    ('palindromes', 4),
    ('critexp', 4),
    ('squares', 4),
    ('xxyyxx', 3),
    ('ap', 4),
    ('common', 2),
    ('automatic', 0),
    ('thm3', 4),
])
def test_default_checks_pass(identifier, length):
    report = theorem_checks_pool.get_check(identifier).run(length=length)
    assert report.passed, str(report)
    assert report.checked > 0


@pytest.mark.slow
@pytest.mark.parametrize('identifier, length', [
    ('complexity', 4),
    ('common', 3),
    ('cubes', 5),
])
def test_longer_sweeps(identifier, length):
    report = theorem_checks_pool.get_check(identifier).run(length=length)
    assert report.passed, str(report)


@pytest.mark.slow
def test_coverage_bound_is_optimal():
    report = theorem_checks_pool.get_check('coverage-optimal').run(length=5)
    assert report.checked == 1
    assert report.passed, str(report)
    assert report.details.startswith('length 3: ')
