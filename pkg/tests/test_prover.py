import itertools
import logging

import pytest

from stewart.exceptions import (
    BaseInferenceError, DuplicateName, FreeVariableMismatch, QuerySyntaxError, StateCapExceeded,
    UnresolvedName)
from stewart.oracles import naive_eval, pattern_sequences
from stewart.prover.compiler import rename_bound
from stewart.prover.parser import parse
from stewart.prover.script import QUERIES_DIR, parse_script, run_script, shipped_script
from stewart.prover.session import Session
from stewart.words import PatternSeq


def test_closed_arithmetic(session):
    assert session.evaluate('?lsd_3 Ex x=2*3')
    assert session.evaluate('Ax Ey y=x+1')
    assert not session.evaluate('Ex x+1=0')
    assert session.evaluate('2+3=5')
    assert not session.evaluate('3-5=0')
    assert session.evaluate('~(3-5=0)')
    assert session.evaluate('Ax x/3<=x')


def test_free_variables(session):
    compiled = session.compile('Ey x=y+1')
    assert compiled.variables == ('x',)
    assert compiled.automaton.enumerate(2)[:3] == [(1,), (2,), (3,)]
    assert not compiled.accepts((0,))
    lt = session.compile('y<x')
    assert lt.variables == ('x', 'y')
    assert lt.accepts({'x': 4, 'y': 1})
    assert not lt.accepts({'x': 1, 'y': 4})


def test_subtraction_is_undefined_below_zero(session):
    compiled = session.compile('z=x-y')
    assert compiled.accepts({'x': 5, 'y': 3, 'z': 2})
    assert not compiled.accepts({'x': 3, 'y': 5, 'z': 0})
    assert not session.evaluate('Ex,y,z x<y & z=x-y')


def test_comparisons_with_constants(session):
    assert session.compile('x>3').accepts((4,))
    assert session.compile('3<x').accepts((4,))
    assert not session.compile('3<x').accepts((3,))
    assert session.compile('x!=y').accepts((1, 2))
    assert session.compile('2*x=y').accepts((4, 8))
    assert session.compile('x/3=y').accepts((8, 2))


def test_directive_sets_the_default_base(session):
    assert session.compile('?lsd_2 x<y').bases == (2, 2)
    assert session.compile('x<y').bases == (3, 3)


def test_word_indices_fix_bases(session):
    compiled = session.compile('TP[t][n]=@2')
    assert compiled.variables == ('n', 't')
    assert compiled.bases == (3, 7)
    a = PatternSeq.from_string('a').value
    assert compiled.accepts({'t': a, 'n': 2})
    assert not compiled.accepts({'t': a, 'n': 1})
    assert session.compile('$link(x,t)').bases == (7, 3)


def test_base_conflict(session):
    with pytest.raises(BaseInferenceError):
        session.compile('TP[t][n]=@1 & t=n')


def test_bound_variables_are_renamed(session):
    formula = rename_bound(parse('x=1 & Ex x=2').formula)
    assert formula.right.names[0] != 'x'
    compiled = session.compile('x=1 & Ex x=2')
    assert compiled.variables == ('x',)
    assert compiled.accepts((1,))
    assert not compiled.accepts((2,))


def test_unresolved_names(session):
    with pytest.raises(UnresolvedName):
        session.compile('$foo(x)')
    with pytest.raises(UnresolvedName):
        session.compile('Foo[x]=@1')


def test_arity_errors(session):
    with pytest.raises(QuerySyntaxError):
        session.compile('TP[t]=@1')
    with pytest.raises(QuerySyntaxError):
        session.compile('$power3(x,y)')


def test_evaluate_rejects_free_variables(session):
    with pytest.raises(QuerySyntaxError):
        session.evaluate('x=1')


def test_alias_resolution(session, caplog):
    with caplog.at_level(logging.WARNING, logger='stewart.prover'):
        compiled = session.compile('$link7(x,t)')
    assert compiled.accepts({'x': 9, 't': PatternSeq.from_string('af').value})
    assert '$link7' in caplog.text


def test_alias_rejected_in_strict_mode(strict_session):
    with pytest.raises(UnresolvedName):
        strict_session.compile('$link7(x,t)')


def test_define(session):
    predicate = session.define('succ', 'y=x+1')
    assert predicate.variables == ('x', 'y')
    assert session.evaluate('$succ(2,3)')
    assert not session.evaluate('$succ(3,2)')
    with pytest.raises(DuplicateName):
        session.define('succ', 'y=x+2')


def test_define_with_variable_order(session):
    predicate = session.define('pred', 'y=x+1', var_order=('y', 'x'))
    assert predicate.variables == ('y', 'x')
    assert session.evaluate('$pred(3,2)')
    with pytest.raises(FreeVariableMismatch):
        session.define('other', 'y=x+1', var_order=('x', 'z'))


def test_register_regex_replaces_builtins(session):
    predicate = session.register_regex('power3', ('lsd_3',), '0*10*')
    assert predicate.variables == ('x',)
    assert not predicate.builtin
    with pytest.raises(DuplicateName):
        session.register_regex('power3', ('lsd_3',), '0*1')
    ones = session.register_regex('ones', ('lsd_2',), '1*')
    assert ones.variables == ('x1',)
    assert session.evaluate('?lsd_2 $ones(7)')


def test_state_cap():
    session = Session.preloaded(state_cap=1)
    with pytest.raises(StateCapExceeded):
        session.compile('x<y & y<z')


SMALL_FORMULAS = [
    'TP[t][n]=@0',
    'TP[t][n]=TP[t][n+1]',
    'TP[t][n]<TP[t][2*n]',
    'TP[t][n-1]!=@2',
]


@pytest.mark.parametrize('text', SMALL_FORMULAS)
def test_compiler_agrees_with_brute_force(session, text):
    compiled = session.compile(text)
    sequences = [seq.value for length in range(3) for seq in pattern_sequences(length)]
    for t, n in itertools.product(sequences, range(30)):
        assignment = {'t': t, 'n': n}
        assert compiled.accepts(assignment) == naive_eval(text, session, assignment), (t, n)


@pytest.mark.parametrize('text', ['Ey x+y=z', 'x-y=2 | Ez z=x+y', '~(x<y) => 2*y=x'])
def test_arithmetic_agrees_with_brute_force(session, text):
    compiled = session.compile(text)
    for values in itertools.product(range(9), repeat=len(compiled.variables)):
        assignment = dict(zip(compiled.variables, values))
        # witnesses y, z stay below the bound of the brute-force domain
        assert compiled.accepts(assignment) == naive_eval(text, session, assignment), assignment


SCRIPT = """
# successor and a check on it
def succ "y=x+1":
reg ones lsd_2 "1*":   # all ones
eval one "$succ(0,1)";
eval multi "?lsd_3 Ex
   $succ(x,y)":
"""


def test_parse_script():
    statements = parse_script(SCRIPT)
    assert [(s.kind, s.name) for s in statements] == [
        ('def', 'succ'), ('reg', 'ones'), ('eval', 'one'), ('eval', 'multi')]
    assert statements[0].line == 3
    assert statements[1].tags == ('lsd_2',)
    assert statements[3].body == '?lsd_3 Ex $succ(x,y)'


def test_run_script(session):
    results = run_script(SCRIPT, session)
    assert str(results[0]).startswith('def succ(x,y): 2 tracks [3, 3]')
    assert results[2].value is True
    assert str(results[2]) == 'eval one: TRUE'
    assert results[3].value is None
    assert results[3].variables == ('y',)


@pytest.mark.parametrize('text', ['eval "x=1";', 'def f "x=1"', 'reg f "1*";', 'eval f x=1;'])
def test_malformed_scripts(text):
    with pytest.raises(QuerySyntaxError):
        parse_script(text)


def test_shipped_script():
    assert 'eval hascube' in shipped_script('hascube')
    with pytest.raises(UnresolvedName):
        shipped_script('nope')


def test_shipped_regexes_match_builtins(session):
    reference = Session.preloaded()
    run_script(shipped_script('reg'), session)
    for name in ('pref', 'link', 'bnd', 'power3'):
        assert session.lookup_predicate(name).variables == reference.lookup_predicate(name).variables
        assert session.lookup_predicate(name).automaton.equivalent(reference.lookup_predicate(name).automaton)


@pytest.mark.slow
def test_palindrome_lengths(session):
    run_script(shipped_script('pal'), session)
    assert session.lookup_predicate('pal').automaton.enumerate(3) == [(n,) for n in range(8)]


@pytest.mark.slow
@pytest.mark.parametrize('name, value', [
    ('hascube', False),
    ('xxyyxx', False),
    ('arithprog', False),
])
def test_shipped_verdicts(session, name, value):
    results = run_script(shipped_script(name), session)
    assert results[-1].value is value


@pytest.mark.slow
def test_square_orders(session):
    run_script(shipped_script('squareorder'), session)
    orders = session.lookup_predicate('squareorder').automaton.enumerate(4)
    assert orders == [(1,), (2,), (3,), (6,), (9,), (18,), (27,), (54,)]


@pytest.mark.parametrize('path', sorted(QUERIES_DIR.glob('*.txt')), ids=lambda path: path.stem)
def test_shipped_scripts_parse(path):
    statements = parse_script(path.read_text())
    assert statements
    for statement in statements:
        if statement.kind != 'reg':
            parse(statement.body)
