import factory.fuzzy
import pytest
from pytest_factoryboy import register

from stewart.arith.builtins import builtin
from stewart.automata.walnut import write_walnut
from stewart.models import AutomatonKind, StoredAutomaton
from stewart.prover.session import Session


@pytest.fixture
def session():
    return Session.preloaded()


@pytest.fixture
def strict_session():
    return Session.preloaded(strict=True)


@pytest.fixture
def power3():
    return builtin('power3')[0]


@register
class StoredAutomatonFactory(factory.django.DjangoModelFactory):
    class Meta:
        model = StoredAutomaton

    name = factory.fuzzy.FuzzyText(prefix='predicate_', length=8)
    kind = AutomatonKind.RECOGNIZER
    variables = 'x'
    tags = 'lsd_3'
    states = factory.LazyFunction(lambda: builtin('power3')[0].num_states)
    walnut = factory.LazyFunction(lambda: write_walnut(builtin('power3')[0]))
