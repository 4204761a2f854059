import pytest

from stewart.arith.relations import rel_add
from stewart.automata.stewart import STEWART_AUTOMATON
from stewart.exceptions import UnresolvedName
from stewart.models import AutomatonKind, StoredAutomaton
from stewart.prover.session import Session


@pytest.mark.django_db
def test_store_recognizer():
    stored = StoredAutomaton.objects.store('plus', rel_add(3), ('x', 'y', 'z'))
    assert stored.kind == AutomatonKind.RECOGNIZER
    assert stored.tags == 'lsd_3 lsd_3 lsd_3'
    assert stored.variable_names == ('x', 'y', 'z')
    assert str(stored) == 'plus'
    assert StoredAutomaton.objects.load('plus').automaton.equivalent(rel_add(3))


@pytest.mark.django_db
def test_store_replaces_existing_entries(power3):
    StoredAutomaton.objects.store('plus', rel_add(3), ('x', 'y', 'z'))
    StoredAutomaton.objects.store('plus', power3, ('x',))
    assert StoredAutomaton.objects.count() == 1
    assert StoredAutomaton.objects.load('plus').states == power3.num_states


@pytest.mark.django_db
def test_store_word_automaton():
    stored = StoredAutomaton.objects.store('TP', STEWART_AUTOMATON)
    assert stored.kind == AutomatonKind.WORD
    assert stored.tags == 'lsd_7 lsd_3'
    assert stored.variable_names == ()
    assert stored.automaton.equivalent(STEWART_AUTOMATON)


@pytest.mark.django_db
def test_load_unknown():
    with pytest.raises(UnresolvedName):
        StoredAutomaton.objects.load('nothing')


@pytest.mark.django_db
def test_factory(stored_automaton_factory, power3):
    stored = stored_automaton_factory()
    assert stored.name.startswith('predicate_')
    assert stored.automaton.equivalent(power3)


@pytest.mark.django_db
def test_load_into_session(stored_automaton_factory):
    stored_automaton_factory(name='powers')
    StoredAutomaton.objects.store('Word', STEWART_AUTOMATON)
    session = StoredAutomaton.objects.load_into(Session())
    assert 'powers' in session
    assert session.lookup_predicate('powers').variables == ('x',)
    assert session.evaluate('$powers(27)')
    assert not session.evaluate('$powers(26)')
    assert session.evaluate('?lsd_3 Et Word[t][2]=@2')


@pytest.mark.django_db
def test_load_selected_names(stored_automaton_factory):
    stored_automaton_factory(name='first')
    stored_automaton_factory(name='second')
    session = StoredAutomaton.objects.load_into(Session(), names=['second'])
    assert 'second' in session
    assert 'first' not in session
