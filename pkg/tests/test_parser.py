import pytest

from stewart.exceptions import QuerySyntaxError
from stewart.prover import ast
from stewart.prover.parser import parse

x, y, z, p = ast.Var('x'), ast.Var('y'), ast.Var('z'), ast.Var('p')


def compare(op, left, right):
    return ast.Compare(op, left, right)


def test_base_directive():
    query = parse('?lsd_7 x=y')
    assert query.default_base == 7
    assert query.formula == compare('=', x, y)
    assert parse('x=y').default_base is None


def test_precedence_of_connectives():
    assert parse('x=1 | y=2 & z=3').formula == ast.Binary(
        '|', compare('=', x, ast.Const(1)),
        ast.Binary('&', compare('=', y, ast.Const(2)), compare('=', z, ast.Const(3))))
    assert parse('~x=1 & y=2').formula == ast.Binary(
        '&', ast.Not(compare('=', x, ast.Const(1))), compare('=', y, ast.Const(2)))


def test_implication_is_right_associative():
    assert parse('x=1 => y=1 => z=1').formula == ast.Binary(
        '=>', compare('=', x, ast.Const(1)),
        ast.Binary('=>', compare('=', y, ast.Const(1)), compare('=', z, ast.Const(1))))
    assert parse('x=1 <=> y=1').formula.op == '<=>'


def test_quantifier_extends_to_the_right():
    formula = parse('Ex x<y & y<z').formula
    assert isinstance(formula, ast.Quantified)
    assert formula.names == ('x',)
    assert formula.body == ast.Binary('&', compare('<', x, y), compare('<', y, z))
    assert formula.variables() == {'y', 'z'}


def test_quantifier_on_the_right_of_a_connective():
    formula = parse('y=1 & Ax x<y | x=y').formula
    assert formula.op == '&'
    assert isinstance(formula.right, ast.Quantified)
    assert formula.right.body.op == '|'


def test_parenthesized_quantifier():
    formula = parse('(Ex x<y) & y<z').formula
    assert formula.op == '&'
    assert isinstance(formula.left, ast.Quantified)


def test_terms():
    assert parse('2*p+1=x').formula.left == ast.Add(ast.Mul(2, p), ast.Const(1))
    assert parse('x/27=p').formula.left == ast.Div(x, 27)
    assert parse('x-y-1=z').formula.left == ast.Sub(ast.Sub(x, y), ast.Const(1))
    assert parse('(x+y)-(z+1)=p').formula.left == ast.Sub(ast.Add(x, y), ast.Add(z, ast.Const(1)))


def test_word_index_and_outputs():
    formula = parse('TP[t][i+j]=TP[t][(i+n)-(j+1)]').formula
    assert isinstance(formula, ast.WordCompare)
    assert formula.left.word == 'TP'
    assert formula.left.indices == (ast.Var('t'), ast.Add(ast.Var('i'), ast.Var('j')))
    assert parse('TP[t][n]=@2').formula.right == ast.Output(2)
    assert parse('TP[t][n]<TP[u][n]').formula.op == '<'


def test_predicate_calls():
    formula = parse('$link(243*x,t)').formula
    assert formula == ast.Call('link', (ast.Mul(243, x), ast.Var('t')))
    assert str(formula) == '$link(243*x,t)'


def test_published_query():
    query = parse('?lsd_3 Ei,p,t p>=1 & Aj (j<2*p) => TP[t][i+j]=TP[t][i+j+p]')
    formula = query.formula
    assert formula.kind == 'E' and formula.names == ('i', 'p', 't')
    inner = formula.body.right
    assert inner.kind == 'A' and inner.names == ('j',)
    assert inner.body.op == '=>'
    assert query.variables() == frozenset()


def test_str():
    assert str(parse('?lsd_3 Ex x=1')) == '?lsd_3 (Ex x=1)'


@pytest.mark.parametrize('text', ['x=', 'x==1', 'Ex', '$link(x', 'TP[t]=', 'x=1 &', '?lsd_x x=1'])
def test_syntax_errors(text):
    with pytest.raises(QuerySyntaxError):
        parse(text)


def test_error_position():
    with pytest.raises(QuerySyntaxError) as excinfo:
        parse('x=1 &\n y<#z')
    assert excinfo.value.line == 2


def test_semantic_syntax_errors():
    with pytest.raises(QuerySyntaxError):
        parse('Ex,x x=1')
    with pytest.raises(QuerySyntaxError):
        parse('x/0=1')
    with pytest.raises(QuerySyntaxError):
        parse('?lsd_1 x=1')
