"""
A prover session binds predicate names onto recognizers and word names onto automata with output.
"""
import logging
from collections import namedtuple

from stewart.arith.builtins import PREDICATES, builtin, tag_bases
from stewart.arith.regex import compile_regex, parse_regex
from stewart.conf import app_settings
from stewart.exceptions import DuplicateName, FreeVariableMismatch, QuerySyntaxError, UnresolvedName
from stewart.prover.compiler import Compiler
from stewart.prover.parser import parse

logger = logging.getLogger('stewart.prover')


class Predicate(namedtuple('Predicate', ['name', 'automaton', 'variables', 'builtin'])):
    """
    A named recognizer. Its tracks are read in the order of ``variables``.
    """
    @property
    def bases(self):
        return self.automaton.bases


class Session:
    def __init__(self, words=None, state_cap=None, default_base=None, strict=None, aliases=None):
        self.words = dict(app_settings.WORD_AUTOMATA if words is None else words)
        self.state_cap = state_cap or app_settings.STATE_CAP
        self.default_base = default_base or app_settings.DEFAULT_BASE
        self.strict = app_settings.STRICT if strict is None else strict
        self.aliases = dict(app_settings.PREDICATE_ALIASES if aliases is None else aliases)
        self.predicates = {}

    @classmethod
    def preloaded(cls, **kwargs):
        """
        Return a session knowing the word automata from the settings and all regex builtins.
        """
        session = cls(**kwargs)
        for regex_predicate in PREDICATES:
            automaton, variables = builtin(regex_predicate.name)
            session.register(regex_predicate.name, automaton, variables, builtin=True)
        return session

    def __contains__(self, name):
        return name in self.predicates or name in self.words

    def lookup_word(self, name):
        try:
            return self.words[name]
        except KeyError:
            raise UnresolvedName("Unknown word automaton '{}'.".format(name))

    def lookup_predicate(self, name):
        if name in self.predicates:
            return self.predicates[name]
        target = self.aliases.get(name)
        if target is not None and target in self.predicates:
            if self.strict:
                msg = "${} is not defined; it is an alias of ${}, which strict mode rejects."
                raise UnresolvedName(msg.format(name, target))
            logger.warning("Resolving undefined predicate $%s as $%s", name, target)
            return self.predicates[target]
        raise UnresolvedName("Unknown predicate '${}'.".format(name))

    def _check_fresh(self, name):
        existing = self.predicates.get(name)
        if existing is not None and not existing.builtin:
            raise DuplicateName("Predicate '${}' is already defined.".format(name))

    def register(self, name, automaton, variables, builtin=False):
        variables = tuple(variables)
        if len(variables) != automaton.num_tracks:
            msg = "${} declares {} variables for an automaton with {} tracks."
            raise FreeVariableMismatch(msg.format(name, len(variables), automaton.num_tracks))
        self._check_fresh(name)
        predicate = Predicate(name, automaton, variables, builtin)
        self.predicates[name] = predicate
        return predicate

    def register_word(self, name, automaton):
        if name in self.words:
            raise DuplicateName("Word automaton '{}' is already defined.".format(name))
        self.words[name] = automaton

    def register_regex(self, name, tags, regex, variables=None):
        """
        Compile a tuple regex over the tracks tagged ``lsd_k`` and bind it to ``name``. A regex
        may replace a builtin, never a user definition.
        """
        self._check_fresh(name)
        bases = tag_bases(tags)
        automaton = compile_regex(parse_regex(regex, bases), self.state_cap)
        if variables is None:
            existing = self.predicates.get(name)
            if existing is not None and existing.bases == bases:
                variables = existing.variables
            else:
                variables = tuple('x{}'.format(i) for i in range(1, len(bases) + 1))
        logger.info("reg $%s: %d states", name, automaton.num_states)
        return self.register(name, automaton, variables)

    def compile(self, text):
        query = parse(text) if isinstance(text, str) else text
        return Compiler(self).compile(query)

    def define(self, name, text, var_order=None):
        """
        Compile ``text`` and bind it to ``name``. The tracks follow ``var_order``, or the sorted
        free variables if no order is declared.
        """
        self._check_fresh(name)
        compiled = self.compile(text)
        automaton, variables = compiled.automaton, compiled.variables
        if var_order is not None:
            var_order = tuple(var_order)
            if len(set(var_order)) != len(var_order) or set(var_order) != set(variables):
                msg = "${} declares variables ({}), but its free variables are ({})."
                raise FreeVariableMismatch(msg.format(name, ','.join(var_order), ','.join(variables)))
            bases = tuple(automaton.bases[variables.index(v)] for v in var_order)
            automaton = automaton.rewire(bases, [var_order.index(v) for v in variables])
            variables = var_order
        logger.info("def $%s(%s): %d states", name, ','.join(variables), automaton.num_states)
        return self.register(name, automaton, variables)

    def evaluate(self, text):
        """
        Decide a closed formula.
        """
        compiled = self.compile(text)
        if not compiled.is_closed:
            msg = "Formula has free variables {}."
            raise QuerySyntaxError(msg.format(', '.join(compiled.variables)))
        return compiled.truth()


def define(session, name, text, var_order=None):
    session.define(name, text, var_order)
    return session


def register_regex(session, name, tags, regex, variables=None):
    session.register_regex(name, tags, regex, variables)
    return session


def eval_closed(text, session):
    return session.evaluate(text)
