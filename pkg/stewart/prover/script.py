"""
Scripts of ``eval``, ``def`` and ``reg`` statements, as written for Walnut::

    def faceq "?lsd_3 Ak (k<n) => TP[t][i+k]=TP[t][j+k]":
    reg power3 lsd_3 "0*10*":
    eval hascube "?lsd_3 Ei,p,t p>=1 & Aj (j<2*p) => TP[t][i+j]=TP[t][i+j+p]";

Quoted bodies may span several lines. Everything after ``#`` up to the end of a line is ignored.
"""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput

from stewart.exceptions import QuerySyntaxError, StewartError, UnresolvedName

logger = logging.getLogger('stewart.prover')

QUERIES_DIR = Path(__file__).resolve().parent.parent / 'queries'

GRAMMAR = r"""
    start: statement*
    ?statement: "eval" NAME QUOTED END -> eval_statement
              | "def" NAME QUOTED END -> def_statement
              | "reg" NAME TAG+ QUOTED END -> reg_statement
    END: ":" | ";"
    TAG: /lsd_[0-9]+/
    NAME: /[A-Za-z_][A-Za-z0-9_]*/
    QUOTED: /"[^"]*"/
    COMMENT: /#[^\n]*/
    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

script_parser = Lark(GRAMMAR, parser='lalr')


@dataclass(frozen=True)
class Statement:
    kind: str
    name: str
    body: str
    tags: Tuple[str, ...] = ()
    line: int = 0


@dataclass(frozen=True)
class StatementResult:
    statement: Statement
    value: Optional[bool] = None
    variables: Tuple[str, ...] = ()
    summary: str = ''

    @property
    def kind(self):
        return self.statement.kind

    @property
    def name(self):
        return self.statement.name

    def __str__(self):
        if self.kind == 'eval' and self.value is not None:
            return '{} {}: {}'.format(self.kind, self.name, 'TRUE' if self.value else 'FALSE')
        return '{} {}({}): {}'.format(self.kind, self.name, ','.join(self.variables), self.summary)


@v_args(inline=True)
class StatementBuilder(Transformer):
    def start(self, *statements):
        return list(statements)

    def _statement(self, kind, name, body, tags=()):
        return Statement(kind, str(name), ' '.join(body[1:-1].split()), tuple(str(t) for t in tags), name.line)

    def eval_statement(self, name, body, end):
        return self._statement('eval', name, body)

    def def_statement(self, name, body, end):
        return self._statement('def', name, body)

    def reg_statement(self, name, *rest):
        *tags, body, end = rest
        return self._statement('reg', name, body, tags)


def parse_script(text):
    try:
        return StatementBuilder().transform(script_parser.parse(text))
    except UnexpectedInput as exc:
        raise QuerySyntaxError("Syntax error in script.", getattr(exc, 'line', None), getattr(exc, 'column', None))


def execute(statement, session):
    if statement.kind == 'eval':
        compiled = session.compile(statement.body)
        if not compiled.is_closed:
            logger.info("eval %s: %s", statement.name, compiled.summary())
            return StatementResult(statement, variables=compiled.variables, summary=compiled.automaton.summary())
        value = compiled.truth()
        logger.info("eval %s: %s", statement.name, 'TRUE' if value else 'FALSE')
        return StatementResult(statement, value=value)
    if statement.kind == 'def':
        predicate = session.define(statement.name, statement.body)
    else:
        predicate = session.register_regex(statement.name, statement.tags, statement.body)
    return StatementResult(statement, variables=predicate.variables, summary=predicate.automaton.summary())


def run_script(text, session):
    """
    Execute all statements of a script in order and return their results. The first failing
    statement aborts the script.
    """
    results = []
    for statement in parse_script(text):
        try:
            results.append(execute(statement, session))
        except StewartError:
            logger.error("%s %s (line %d) failed", statement.kind, statement.name, statement.line)
            raise
    return results


def shipped_script(name):
    """
    Return the text of one of the scripts shipped in ``stewart/queries``, such as ``hascube``.
    """
    path = QUERIES_DIR / '{}.txt'.format(name)
    if not path.is_file():
        choices = ', '.join(sorted(p.stem for p in QUERIES_DIR.glob('*.txt')))
        raise UnresolvedName("No shipped script '{}', choose one of: {}.".format(name, choices))
    return path.read_text()
