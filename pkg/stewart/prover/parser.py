"""
Parser of the query language, built on a ``lark`` Earley grammar.

A quantifier extends as far to the right as possible. To express this without ambiguity, every
connective level exists in a *closed* variant, which never ends in a quantifier, and an *open*
variant, whose rightmost operand may be a quantified formula.
"""
from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from stewart.exceptions import QuerySyntaxError
from stewart.prover import ast

GRAMMAR = r"""
    start: LSD? formula

    ?formula: impl_c | impl_o

    ?impl_c: disj_c "=>" impl_c -> implies
           | disj_c "<=>" impl_c -> iff
           | disj_c
    ?impl_o: disj_c "=>" impl_o -> implies
           | disj_c "<=>" impl_o -> iff
           | disj_o

    ?disj_c: disj_c "|" conj_c -> disjunction
           | conj_c
    ?disj_o: disj_c "|" conj_o -> disjunction
           | conj_o

    ?conj_c: conj_c "&" unary_c -> conjunction
           | unary_c
    ?conj_o: conj_c "&" unary_o -> conjunction
           | unary_o

    ?unary_c: "~" unary_c -> negation
            | atom
            | "(" formula ")"
    ?unary_o: "~" unary_o -> negation
            | QUANT varlist formula -> quantified

    varlist: NAME ("," NAME)*

    ?atom: term COMPARE term -> compare
         | word_operand COMPARE word_operand -> word_compare
         | CALL "(" [term ("," term)*] ")" -> call

    ?word_operand: word_index | OUTPUT -> output
    word_index: WORD ("[" term "]")+

    ?term: term "+" product -> add
         | term "-" product -> sub
         | product
    ?product: NUMBER "*" product -> mul
            | product "/" NUMBER -> div
            | factor
    ?factor: NAME -> var
           | NUMBER -> const
           | "(" term ")"

    LSD: /\?lsd_[0-9]+/
    QUANT: /[AE]/
    WORD.2: /[A-Z][A-Za-z0-9_]*(?=\s*\[)/
    NAME: /[a-z][A-Za-z0-9_]*/
    CALL: /\$[A-Za-z_][A-Za-z0-9_]*/
    OUTPUT: /@[0-9]+/
    COMPARE: "<=" | ">=" | "!=" | "=" | "<" | ">"
    NUMBER: /[0-9]+/

    %import common.WS
    %ignore WS
"""

query_parser = Lark(GRAMMAR, parser='earley', propagate_positions=True)


def _position(meta):
    if getattr(meta, 'empty', True):
        return ast.Position()
    return ast.Position(meta.line, meta.column)


@v_args(meta=True)
class AstBuilder(Transformer):
    def start(self, meta, children):
        default_base = None
        if len(children) == 2:
            default_base = int(children[0][len('?lsd_'):])
            if default_base < 2:
                raise QuerySyntaxError("Base {} is out of range.".format(default_base),
                                       children[0].line, children[0].column)
        return ast.Query(children[-1], default_base)

    def implies(self, meta, children):
        return ast.Binary('=>', children[0], children[1], _position(meta))

    def iff(self, meta, children):
        return ast.Binary('<=>', children[0], children[1], _position(meta))

    def disjunction(self, meta, children):
        return ast.Binary('|', children[0], children[1], _position(meta))

    def conjunction(self, meta, children):
        return ast.Binary('&', children[0], children[1], _position(meta))

    def negation(self, meta, children):
        return ast.Not(children[0], _position(meta))

    def quantified(self, meta, children):
        kind, names, body = children
        if len(set(names)) != len(names):
            raise QuerySyntaxError("Variable bound twice by one quantifier.", kind.line, kind.column)
        return ast.Quantified(str(kind), names, body, _position(meta))

    def varlist(self, meta, children):
        return tuple(str(name) for name in children)

    def compare(self, meta, children):
        left, op, right = children
        return ast.Compare(str(op), left, right, _position(meta))

    def word_compare(self, meta, children):
        left, op, right = children
        return ast.WordCompare(str(op), left, right, _position(meta))

    def call(self, meta, children):
        name = str(children[0])[1:]
        args = tuple(arg for arg in children[1:] if arg is not None)
        return ast.Call(name, args, _position(meta))

    def output(self, meta, children):
        return ast.Output(int(children[0][1:]), _position(meta))

    def word_index(self, meta, children):
        return ast.WordIndex(str(children[0]), tuple(children[1:]), _position(meta))

    def add(self, meta, children):
        return ast.Add(children[0], children[1], _position(meta))

    def sub(self, meta, children):
        return ast.Sub(children[0], children[1], _position(meta))

    def mul(self, meta, children):
        return ast.Mul(int(children[0]), children[1], _position(meta))

    def div(self, meta, children):
        divisor = int(children[1])
        if divisor < 1:
            raise QuerySyntaxError("Division by zero.", children[1].line, children[1].column)
        return ast.Div(children[0], divisor, _position(meta))

    def var(self, meta, children):
        return ast.Var(str(children[0]), _position(meta))

    def const(self, meta, children):
        return ast.Const(int(children[0]), _position(meta))


def parse(text):
    """
    Parse a query, optionally prefixed by a ``?lsd_k`` directive, into a :class:`ast.Query`.
    """
    try:
        tree = query_parser.parse(text)
        return AstBuilder().transform(tree)
    except UnexpectedInput as exc:
        line, column = getattr(exc, 'line', None), getattr(exc, 'column', None)
        raise QuerySyntaxError("Syntax error in query.", line, column)
    except VisitError as exc:
        raise exc.orig_exc
