"""
Regular expressions over digit tuples, as accepted by the ``reg`` command. A literal is either
a bracketed tuple ``[d1,d2,...]`` with one digit per track or, for a single track, a bare
digit. Union ``|``, concatenation, ``*``, ``+``, ``?`` and parentheses are supported.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from stewart.automata.base import MultiTrackDfa
from stewart.conf import app_settings
from stewart.exceptions import QuerySyntaxError, StateCapExceeded

GRAMMAR = r"""
    ?start: union
    ?union: concat ("|" concat)*
    ?concat: repeat+
    ?repeat: atom
           | repeat "*" -> star
           | repeat "+" -> plus
           | repeat "?" -> optional
    ?atom: "(" union ")"
         | "[" NUMBER ("," NUMBER)* "]" -> column
         | DIGIT -> digit
    DIGIT: /[0-9]/
    NUMBER: /[0-9]+/
    %import common.WS
    %ignore WS
"""

regex_parser = Lark(GRAMMAR, parser='lalr')


@dataclass(frozen=True)
class RegexOverTuples:
    bases: Tuple[int, ...]
    tree: tuple

    def __str__(self):
        return _render(self.tree)


def _render(node):
    kind = node[0]
    if kind == 'literal':
        return '[{}]'.format(','.join(str(d) for d in node[1]))
    if kind in ('star', 'plus', 'optional'):
        return '({}){}'.format(_render(node[1]), {'star': '*', 'plus': '+', 'optional': '?'}[kind])
    separator = '|' if kind == 'union' else ''
    return '({})'.format(separator.join(_render(child) for child in node[1]))


@v_args(inline=True)
class TreeBuilder(Transformer):
    def __init__(self, bases):
        super().__init__()
        self.bases = bases

    def _literal(self, digits, token):
        if len(digits) != len(self.bases):
            msg = "Literal {} has {} digits, expected {}."
            raise QuerySyntaxError(msg.format(list(digits), len(digits), len(self.bases)), token.line, token.column)
        for digit, base in zip(digits, self.bases):
            if digit >= base:
                msg = "Digit {} is out of range for base {}."
                raise QuerySyntaxError(msg.format(digit, base), token.line, token.column)
        return ('literal', digits)

    def column(self, *numbers):
        return self._literal(tuple(int(n) for n in numbers), numbers[0])

    def digit(self, token):
        return self._literal((int(token),), token)

    def union(self, *children):
        return ('union', children)

    def concat(self, *children):
        return ('concat', children)

    def star(self, child):
        return ('star', child)

    def plus(self, child):
        return ('plus', child)

    def optional(self, child):
        return ('optional', child)


def parse_regex(text, bases):
    bases = tuple(bases)
    try:
        tree = regex_parser.parse(text)
        return RegexOverTuples(bases, TreeBuilder(bases).transform(tree))
    except UnexpectedInput as exc:
        raise QuerySyntaxError("Malformed regular expression.", getattr(exc, 'line', None), getattr(exc, 'column', None))
    except VisitError as exc:
        raise exc.orig_exc


class _ThompsonNfa:
    """
    Nondeterministic automaton with epsilon moves, built by Thompson's construction.
    """
    def __init__(self, bases):
        self.strides = tuple(int(np.prod(bases[i + 1:], dtype=np.int64)) for i in range(len(bases)))
        self.epsilon = []
        self.moves = []

    def state(self):
        self.epsilon.append(set())
        self.moves.append({})
        return len(self.epsilon) - 1

    def build(self, node):
        """
        Return the entry and exit state of the fragment for ``node``.
        """
        kind = node[0]
        if kind == 'literal':
            start, end = self.state(), self.state()
            symbol = sum(d * s for d, s in zip(node[1], self.strides))
            self.moves[start].setdefault(symbol, set()).add(end)
            return start, end
        if kind == 'concat':
            start, end = self.build(node[1][0])
            for child in node[1][1:]:
                entry, exit_ = self.build(child)
                self.epsilon[end].add(entry)
                end = exit_
            return start, end
        if kind == 'union':
            start, end = self.state(), self.state()
            for child in node[1]:
                entry, exit_ = self.build(child)
                self.epsilon[start].add(entry)
                self.epsilon[exit_].add(end)
            return start, end
        entry, exit_ = self.build(node[1])
        start, end = self.state(), self.state()
        self.epsilon[start].add(entry)
        self.epsilon[exit_].add(end)
        if kind in ('star', 'optional'):
            self.epsilon[start].add(end)
        if kind in ('star', 'plus'):
            self.epsilon[exit_].add(entry)
        return start, end

    def closure(self, states):
        stack = list(states)
        seen = set(states)
        while stack:
            for target in self.epsilon[stack.pop()]:
                if target not in seen:
                    seen.add(target)
                    stack.append(target)
        return frozenset(seen)


def compile_regex(regex, cap=None):
    """
    Compile a tuple regex into a minimal, padding-normalized recognizer.
    """
    cap = app_settings.STATE_CAP if cap is None else cap
    nfa = _ThompsonNfa(regex.bases)
    start, final = nfa.build(regex.tree)
    alphabet_size = int(np.prod(regex.bases, dtype=np.int64))
    dead = frozenset()
    initial = nfa.closure({start})
    subsets = [dead, initial]
    index = {dead: 0, initial: 1}
    rows = []
    position = 0
    while position < len(subsets):
        row = np.zeros(alphabet_size, dtype=np.int64)
        targets = {}
        for state in subsets[position]:
            for symbol, reached in nfa.moves[state].items():
                targets.setdefault(symbol, set()).update(reached)
        for symbol, reached in targets.items():
            subset = nfa.closure(reached)
            if subset not in index:
                index[subset] = len(subsets)
                subsets.append(subset)
                if len(subsets) > cap:
                    raise StateCapExceeded(cap, 'regex compilation')
            row[symbol] = index[subset]
        rows.append(row)
        position += 1
    # the initial subset has to be state 0
    order = [1, 0] + list(range(2, len(subsets)))
    renumber = np.argsort(order)
    transitions = renumber[np.array(rows, dtype=np.int64)[order]]
    accepting = np.array([final in subsets[i] for i in order], dtype=bool)
    return MultiTrackDfa(regex.bases, transitions, accepting).normalize(cap)
