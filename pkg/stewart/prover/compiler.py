"""
Compilation of parsed queries into recognizers over their free variables.

Every subformula compiles to a recognizer whose tracks are its free variables, sorted by name.
Compound terms are computed on auxiliary tracks, which are projected away as soon as the
atom containing them is complete.
"""
import dataclasses
import itertools
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from stewart.arith.relations import (
    RELATIONS, div_const, mul_const, rel_add, rel_const, rel_eq, rel_leq, rel_lt)
from stewart.automata.base import MultiTrackDfa
from stewart.exceptions import BaseInferenceError, QuerySyntaxError
from stewart.prover import ast

logger = logging.getLogger('stewart.prover')

FLIPPED = {'=': '=', '!=': '!=', '<': '>', '<=': '>=', '>': '<', '>=': '<='}


@dataclass(frozen=True)
class CompiledFormula:
    automaton: MultiTrackDfa
    variables: Tuple[str, ...]

    @property
    def bases(self):
        return self.automaton.bases

    @property
    def is_closed(self):
        return not self.variables

    def accepts(self, values):
        """
        ``values`` is either a tuple in track order or a mapping from variable names.
        """
        if isinstance(values, dict):
            values = tuple(values[name] for name in self.variables)
        return self.automaton.accepts(values)

    def truth(self):
        return not self.automaton.is_empty()

    def summary(self):
        return 'variables ({}): {}'.format(','.join(self.variables), self.automaton.summary())


def rename_bound(formula):
    """
    Give every quantified variable a name distinct from all free variables and from the
    variables of all other quantifiers.
    """
    used = set(formula.variables())
    counter = itertools.count(1)

    def fresh(name):
        candidate = name
        while candidate in used:
            candidate = '{}#{}'.format(name, next(counter))
        used.add(candidate)
        return candidate

    def visit(node, scope):
        if isinstance(node, ast.Var):
            return dataclasses.replace(node, name=scope.get(node.name, node.name))
        if isinstance(node, ast.Quantified):
            names = tuple(fresh(name) for name in node.names)
            inner = dict(scope, **dict(zip(node.names, names)))
            return dataclasses.replace(node, names=names, body=visit(node.body, inner))
        changes = {}
        for f in dataclasses.fields(node):
            value = getattr(node, f.name)
            if isinstance(value, ast.Node):
                changes[f.name] = visit(value, scope)
            elif isinstance(value, tuple) and value and isinstance(value[0], ast.Node):
                changes[f.name] = tuple(visit(item, scope) for item in value)
        return dataclasses.replace(node, **changes) if changes else node

    return visit(formula, {})


class BaseInference:
    """
    Union-find over variables: variables meeting in one term or comparison share a base, and
    indexing a word automaton or calling a predicate fixes the base of the argument's class.
    """
    def __init__(self):
        self.parent = {}
        self.fixed = {}

    def find(self, name):
        self.parent.setdefault(name, name)
        while self.parent[name] != name:
            self.parent[name] = self.parent[self.parent[name]]
            name = self.parent[name]
        return name

    def _set(self, root, base, reason):
        known = self.fixed.get(root)
        if known is not None and known[0] != base:
            msg = "Conflicting bases {} ({}) and {} ({}) for variable '{}'."
            raise BaseInferenceError(msg.format(known[0], known[1], base, reason, root.split('#')[0]))
        if known is None:
            self.fixed[root] = (base, reason)

    def union(self, names):
        names = list(names)
        for name in names:
            self.find(name)
        for a, b in zip(names, names[1:]):
            ra, rb = self.find(a), self.find(b)
            if ra != rb:
                self.parent[rb] = ra
                if rb in self.fixed:
                    base, reason = self.fixed.pop(rb)
                    self._set(ra, base, reason)

    def fix(self, names, base, reason):
        names = list(names)
        if not names:
            return
        self.union(names)
        self._set(self.find(names[0]), base, reason)

    def base(self, name, default):
        known = self.fixed.get(self.find(name))
        return default if known is None else known[0]


@dataclass(frozen=True)
class Operand:
    """
    The value of a term: a constant, or the digits on the track ``track``. A computed operand
    carries a recognizer over ``names``, its sorted variables followed by ``track``.
    """
    variables: frozenset = frozenset()
    track: Optional[str] = None
    constant: Optional[int] = None
    automaton: Optional[MultiTrackDfa] = None
    names: Tuple[str, ...] = ()


class Compiler:
    def __init__(self, session, default_base=None):
        self.session = session
        self.default_base = default_base or session.default_base
        self.cap = session.state_cap
        self.bases = {}
        self._aux_counter = itertools.count(1)

    def compile(self, query):
        if isinstance(query, ast.Query):
            if query.default_base:
                self.default_base = query.default_base
            formula = query.formula
        else:
            formula = query
        formula = rename_bound(formula)
        self.infer_bases(formula)
        automaton, names = self.formula(formula)
        logger.debug("compiled %s into %d states", ','.join(names) or 'closed formula', automaton.num_states)
        return CompiledFormula(automaton, names)

    # bases

    def infer_bases(self, formula):
        inference = BaseInference()
        self._collect(formula, inference)
        for name in inference.parent:
            self.bases[name] = inference.base(name, self.default_base)
        for name in self._bound_and_free(formula):
            self.bases.setdefault(name, inference.base(name, self.default_base))

    def _bound_and_free(self, node):
        names = set()
        if isinstance(node, ast.Var):
            names.add(node.name)
        if isinstance(node, ast.Quantified):
            names.update(node.names)
        for f in dataclasses.fields(node):
            value = getattr(node, f.name)
            if isinstance(value, ast.Node):
                names |= self._bound_and_free(value)
            elif isinstance(value, tuple):
                for item in value:
                    if isinstance(item, ast.Node):
                        names |= self._bound_and_free(item)
        return names

    def _collect(self, node, inference):
        if isinstance(node, ast.Compare):
            inference.union(node.variables())
        elif isinstance(node, ast.WordCompare):
            for side in (node.left, node.right):
                if isinstance(side, ast.WordIndex):
                    word = self._word(side)
                    for index, base in zip(side.indices, word.bases):
                        reason = 'index of {}'.format(side.word)
                        inference.fix(index.variables(), base, reason)
        elif isinstance(node, ast.Call):
            predicate = self._predicate(node)
            for arg, base in zip(node.args, predicate.bases):
                inference.fix(arg.variables(), base, 'argument of ${}'.format(node.name))
        elif isinstance(node, (ast.Not, ast.Quantified)):
            self._collect(node.body, inference)
        elif isinstance(node, ast.Binary):
            self._collect(node.left, inference)
            self._collect(node.right, inference)

    def _word(self, node):
        word = self.session.lookup_word(node.word)
        if len(node.indices) != word.num_tracks:
            msg = "{} takes {} indices, got {}."
            raise QuerySyntaxError(msg.format(node.word, word.num_tracks, len(node.indices)),
                                   node.position.line, node.position.column)
        return word

    def _predicate(self, node):
        predicate = self.session.lookup_predicate(node.name)
        if len(node.args) != len(predicate.variables):
            msg = "${} takes {} arguments, got {}."
            raise QuerySyntaxError(msg.format(node.name, len(predicate.variables), len(node.args)),
                                   node.position.line, node.position.column)
        return predicate

    def _class_base(self, variables):
        for name in sorted(variables):
            return self.bases[name]
        return self.default_base

    # wiring

    def _aux(self, base):
        name = '%{}'.format(next(self._aux_counter))
        self.bases[name] = base
        return name

    def _wire(self, automaton, names, frame):
        bases = tuple(self.bases[name] for name in frame)
        return automaton.rewire(bases, [frame.index(name) for name in names])

    def _atom(self, build, operands, outputs=()):
        """
        Build the recognizer ``build(frame)`` over a frame made of the variables of all
        operands, their auxiliary tracks and ``outputs``; then constrain the auxiliary tracks
        by the operands' recognizers and project them away.
        """
        variables = sorted(frozenset().union(*(o.variables for o in operands)))
        auxiliaries = list(dict.fromkeys(o.track for o in operands if o.automaton is not None))
        frame = tuple(variables) + tuple(auxiliaries) + tuple(outputs)
        automaton = build(frame)
        for operand in operands:
            if operand.automaton is not None:
                automaton = automaton.product(self._wire(operand.automaton, operand.names, frame), '&', self.cap)
        for aux in reversed(auxiliaries):
            automaton = automaton.exists(frame.index(aux), self.cap)
            frame = tuple(name for name in frame if name != aux)
        return automaton, frame

    def _materialize(self, operand, base):
        if operand.constant is None:
            return operand
        aux = self._aux(base)
        return Operand(track=aux, automaton=rel_const(operand.constant, base, '='), names=(aux,))

    # terms

    def term(self, node, base):
        if isinstance(node, ast.Var):
            return Operand(frozenset([node.name]), track=node.name)
        if isinstance(node, ast.Const):
            return Operand(constant=node.value)
        if isinstance(node, (ast.Add, ast.Sub)):
            left, right = self.term(node.left, base), self.term(node.right, base)
            if left.constant is not None and right.constant is not None:
                if isinstance(node, ast.Add):
                    return Operand(constant=left.constant + right.constant)
                if left.constant >= right.constant:
                    return Operand(constant=left.constant - right.constant)
            left, right = self._materialize(left, base), self._materialize(right, base)
            out = self._aux(base)
            if isinstance(node, ast.Add):
                tracks = (left.track, right.track, out)
            else:
                tracks = (out, right.track, left.track)
            return self._computed(rel_add(base), tracks, [left, right], out)
        if isinstance(node, ast.Mul):
            inner = self.term(node.term, base)
            if node.factor == 0:
                return Operand(constant=0)
            if inner.constant is not None:
                return Operand(constant=node.factor * inner.constant)
            if node.factor == 1:
                return inner
            out = self._aux(base)
            return self._computed(mul_const(node.factor, base), (inner.track, out), [inner], out)
        if isinstance(node, ast.Div):
            inner = self.term(node.term, base)
            if inner.constant is not None:
                return Operand(constant=inner.constant // node.divisor)
            if node.divisor == 1:
                return inner
            out = self._aux(base)
            return self._computed(div_const(node.divisor, base), (inner.track, out), [inner], out)
        raise QuerySyntaxError("'{}' is not a term.".format(node))

    def _computed(self, relation, tracks, operands, out):
        automaton, frame = self._atom(lambda frame: self._wire(relation, tracks, frame), operands, (out,))
        variables = frozenset().union(*(o.variables for o in operands))
        return Operand(variables, track=out, automaton=automaton, names=frame)

    # formulas

    def formula(self, node):
        if isinstance(node, ast.Compare):
            return self.compare(node)
        if isinstance(node, ast.WordCompare):
            return self.word_compare(node)
        if isinstance(node, ast.Call):
            return self.call(node)
        if isinstance(node, ast.Not):
            automaton, names = self.formula(node.body)
            return automaton.complement(), names
        if isinstance(node, ast.Binary):
            return self.binary(node)
        if isinstance(node, ast.Quantified):
            return self.quantified(node)
        raise QuerySyntaxError("'{}' is not a formula.".format(node))

    def _constant_truth(self, value):
        return (MultiTrackDfa.universal() if value else MultiTrackDfa.empty()), ()

    def compare(self, node):
        base = self._class_base(node.variables())
        left, right = self.term(node.left, base), self.term(node.right, base)
        op = node.op
        if left.constant is not None and right.constant is not None:
            return self._constant_truth(RELATIONS[op](left.constant, right.constant))
        if left.constant is not None:
            left, right, op = right, left, FLIPPED[op]
        if right.constant is not None:
            relation = rel_const(right.constant, base, op)
            return self._atom(lambda frame: self._wire(relation, (left.track,), frame), [left])
        if op in ('>', '>='):
            left, right, op = right, left, FLIPPED[op]
        relation = {'=': rel_eq, '!=': rel_eq, '<': rel_lt, '<=': rel_leq}[op](base)
        if op == '!=':
            relation = relation.complement()
        tracks = (left.track, right.track)
        return self._atom(lambda frame: self._wire(relation, tracks, frame), [left, right])

    def _word_side(self, node):
        if isinstance(node, ast.Output):
            return None, []
        word = self._word(node)
        operands = [self._materialize(self.term(index, base), base)
                    for index, base in zip(node.indices, word.bases)]
        return word, operands

    def word_compare(self, node):
        relation = RELATIONS[node.op]
        left_word, left_operands = self._word_side(node.left)
        right_word, right_operands = self._word_side(node.right)
        if left_word is None and right_word is None:
            return self._constant_truth(relation(node.left.value, node.right.value))
        if left_word is None:
            constant = node.left.value

            def build(frame):
                wired = self._wire(right_word, [o.track for o in right_operands], frame)
                return wired.select(lambda output: relation(constant, output))
        elif right_word is None:
            constant = node.right.value

            def build(frame):
                wired = self._wire(left_word, [o.track for o in left_operands], frame)
                return wired.select(lambda output: relation(output, constant))
        else:
            def build(frame):
                left = self._wire(left_word, [o.track for o in left_operands], frame)
                right = self._wire(right_word, [o.track for o in right_operands], frame)
                return left.compare(right, relation, self.cap)
        return self._atom(build, left_operands + right_operands)

    def call(self, node):
        predicate = self._predicate(node)
        operands = [self._materialize(self.term(arg, base), base)
                    for arg, base in zip(node.args, predicate.bases)]
        tracks = [o.track for o in operands]
        return self._atom(lambda frame: self._wire(predicate.automaton, tracks, frame), operands)

    def binary(self, node):
        left, left_names = self.formula(node.left)
        right, right_names = self.formula(node.right)
        frame = tuple(sorted(set(left_names) | set(right_names)))
        left = self._wire(left, left_names, frame)
        right = self._wire(right, right_names, frame)
        return left.product(right, node.op, self.cap), frame

    def quantified(self, node):
        automaton, names = self.formula(node.body)
        for name in reversed(node.names):
            if name not in names:
                continue
            track = names.index(name)
            if node.kind == 'E':
                automaton = automaton.exists(track, self.cap)
            else:
                automaton = automaton.complement().exists(track, self.cap).complement()
            names = names[:track] + names[track + 1:]
            logger.debug("eliminated %s%s: %d states", node.kind, name.split('#')[0], automaton.num_states)
        return automaton, names


def compile_formula(query, session):
    return Compiler(session).compile(query)


def eval_closed(query, session):
    compiled = compile_formula(query, session)
    if not compiled.is_closed:
        msg = "Formula has free variables {}."
        raise QuerySyntaxError(msg.format(', '.join(compiled.variables)))
    return compiled.truth()
