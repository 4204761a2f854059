"""
Brute-force verifiers working directly on finite Toeplitz words, without any automaton. They
serve as standalone checks of the theorems about Stewart words and as differential oracles for
the prover.

Unless stated otherwise, searches only consider boolean factors: the single ``?`` of a finite
word acts as a wall no factor may cross.
"""
import itertools
import logging
import operator
from fractions import Fraction

import numpy as np

from stewart.arith.relations import RELATIONS
from stewart.automata.base import MultiTrackDfao
from stewart.automata.stewart import STEWART_AUTOMATON, stewart_symbol
from stewart.conf import app_settings
from stewart.exceptions import NotAStewartWord, PreconditionError, StateCapExceeded, UnresolvedHole
from stewart.prover import ast
from stewart.prover.compiler import Compiler, rename_bound
from stewart.prover.parser import parse
from stewart.words import (
    HOLE, PartialWord, Pattern, PatternSeq, UltimatelyPeriodicSeq, factors, toeplitz_prefix)

logger = logging.getLogger('stewart.oracles')

HOLE_CODE = 2

SYMBOL_CODES = {'0': 0, '1': 1, HOLE: HOLE_CODE}


def pattern_sequences(length):
    """
    All ``6^length`` pattern sequences of the given length, in lexicographic order.
    """
    for letters in itertools.product(list(Pattern), repeat=length):
        yield PatternSeq(letters)


def sample_sequences(length, size, seed):
    rng = np.random.default_rng(seed)
    codes = rng.integers(1, 7, size=(size, length))
    return [PatternSeq(tuple(row)) for row in codes.tolist()]


def _symbols(word):
    if isinstance(word, PatternSeq):
        return toeplitz_prefix(word).symbols
    return word.symbols if isinstance(word, PartialWord) else str(word)


def _codes(word):
    return np.array([SYMBOL_CODES[ch] for ch in _symbols(word)], dtype=np.int8)


def repetition_table(word):
    """
    Return the integer matrix ``R`` with ``R[p, i]`` the largest ``k`` such that
    ``w[i+j] = w[i+j+p]`` holds for all ``j < k``, both symbols boolean. Row ``0`` is zero.

    A boolean factor of period ``p`` and length ``L`` starts at ``i`` iff ``R[p, i] >= L - p``.
    """
    codes = _codes(word)
    n = len(codes)
    index = np.arange(n)
    shifted = index[None, :] + index[:, None]
    other = codes[np.minimum(shifted, max(n - 1, 0))]
    equal = (shifted < n) & (codes[None, :] != HOLE_CODE) & (codes[None, :] == other)
    equal[0] = False
    first_mismatch = np.where(equal, n, index[None, :])
    next_mismatch = np.minimum.accumulate(first_mismatch[:, ::-1], axis=1)[:, ::-1]
    return next_mismatch - index[None, :]


def find_palindromes(t):
    """
    Return all palindromic factors of ``T(t)``, the empty word included.
    """
    symbols = _symbols(t)
    found = {''}
    n = len(symbols)
    for center in range(2 * n - 1):
        left, right = center // 2, (center + 1) // 2
        while left >= 0 and right < n and symbols[left] == symbols[right]:
            found.add(symbols[left:right + 1])
            left, right = left - 1, right + 1
    return {PartialWord(p) for p in found}


def find_cube(w):
    """
    Return ``(position, period)`` of the leftmost shortest-period cube ``xxx``, or ``None``.
    """
    table = repetition_table(w)
    for p in range(1, len(table) // 3 + 1):
        hits = np.flatnonzero(table[p] >= 2 * p)
        if len(hits):
            return int(hits[0]), p
    return None


def critexp_factor(t):
    """
    Return ``(position, period, length)`` of a boolean factor of ``T(t)`` with period
    ``3^(|t|-3)`` and length ``3^(|t|-2) - 1``, or ``None``.
    """
    t = PatternSeq.from_string(t) if isinstance(t, str) else t
    if len(t) < 4:
        raise PreconditionError("Pattern sequence must have length >= 4, got {}.".format(len(t)))
    period = 3 ** (len(t) - 3)
    length = 3 * period - 1
    hits = np.flatnonzero(repetition_table(t)[period] >= length - period)
    if not len(hits):
        return None
    return int(hits[0]), period, length


def verify_critexp(t):
    return critexp_factor(t) is not None


def critexp_value(length):
    return 3 - Fraction(1, 3 ** (length - 3))


def square_orders(w):
    table = repetition_table(w)
    return {p for p in range(1, len(table) // 2 + 1) if (table[p] >= p).any()}


def _check_factor_length(t, n):
    t = PatternSeq.from_string(t) if isinstance(t, str) else t
    bound = 3 ** (len(t) - 2) if len(t) >= 2 else 0
    if not 1 <= n <= bound:
        raise PreconditionError("Factor length {} is out of range 1..{}.".format(n, bound))
    return t


def _boolean_windows(codes, n):
    if n > len(codes):
        return np.empty((0, n), dtype=np.int8)
    windows = np.lib.stride_tricks.sliding_window_view(codes, n)
    windows = windows[(windows != HOLE_CODE).all(axis=1)]
    return np.unique(windows, axis=0)


def _as_string(row):
    return ''.join(str(int(d)) for d in row)


def boolean_factor_count(t, n):
    t = _check_factor_length(t, n)
    return len(_boolean_windows(_codes(t), n))


def right_special(t, n):
    """
    Return the boolean factors ``x`` of length ``n`` such that both ``x0`` and ``x1`` occur.
    """
    t = _check_factor_length(t, n)
    extended = _boolean_windows(_codes(t), n + 1)
    prefixes, counts = np.unique(extended[:, :n], axis=0, return_counts=True)
    return {_as_string(row) for row in prefixes[counts == 2]}


def find_xxyyxx(w):
    """
    Return ``(i, m, n)`` such that ``w[i:]`` starts with ``xxyyxx`` where ``|x| = m >= 1`` and
    ``|y| = n >= 0``, or ``None``.
    """
    table = repetition_table(w)
    length = len(table)
    for m in range(1, length // 4 + 1):
        starts = np.flatnonzero(table[m] >= m)
        starts = starts[starts + 4 * m <= length]
        if not len(starts):
            continue
        ns = np.arange((length - 4 * m) // 2 + 1)
        i, n = np.meshgrid(starts, ns, indexing='ij')
        fits = i + 4 * m + 2 * n <= length
        outer = table[np.minimum(2 * m + 2 * n, length - 1), i] >= 2 * m
        inner = (n == 0) | (table[n, np.minimum(i + 2 * m, length - 1)] >= n)
        hits = np.argwhere(fits & outer & inner)
        if len(hits):
            a, b = hits[0]
            return int(starts[a]), m, int(ns[b])
    return None


def longest_common_factor(w1, w2):
    """
    Length of the longest common boolean factor, by dynamic programming over both words.
    """
    a, b = _codes(w1), _codes(w2)
    best = 0
    previous = np.zeros(len(b) + 1, dtype=np.int64)
    for symbol in a.tolist():
        current = np.zeros_like(previous)
        if symbol != HOLE_CODE:
            matches = b == symbol
            current[1:] = np.where(matches, previous[:-1] + 1, 0)
            best = max(best, int(current.max()))
        previous = current
    return best


def find_ap_alternation(w):
    """
    Return ``(i, m)`` with ``m >= 1`` such that ``w[i], w[i+m], ..., w[i+4m]`` spells ``01010``
    or ``10101``, or ``None``.
    """
    codes = _codes(w)
    n = len(codes)
    for m in range(1, (n - 1) // 4 + 1):
        span = n - 4 * m
        terms = [codes[k * m:k * m + span] for k in range(5)]
        boolean = (terms[0] != HOLE_CODE) & (terms[1] != HOLE_CODE)
        alternating = (
            boolean
            & (terms[0] == terms[2]) & (terms[0] == terms[4])
            & (terms[1] == terms[3]) & (terms[0] != terms[1]))
        hits = np.flatnonzero(alternating)
        if len(hits):
            return int(hits[0]), m
    return None


def missing_factors(t, u, n):
    """
    Boolean factors of length ``n`` occurring in ``T(u)`` but not in ``T(t)``.
    """
    return factors(toeplitz_prefix(u), n, True) - factors(toeplitz_prefix(t), n, True)


def check_factor_coverage(t, u, n):
    t = PatternSeq.from_string(t) if isinstance(t, str) else t
    u = PatternSeq.from_string(u) if isinstance(u, str) else u
    if u[:len(t)] != t:
        raise PreconditionError("{} is not a prefix of {}.".format(t, u))
    if len(t) < 2 or not 1 <= n <= 3 ** (len(t) - 2):
        raise PreconditionError("Factor length {} exceeds the coverage bound of {}.".format(n, t))
    return not missing_factors(t, u, n)


def find_coverage_counterexample(length, extension):
    """
    Search for ``t`` of the given length and an extension ``u`` of ``t`` by ``extension`` more
    patterns, such that some boolean factor of length ``3^(length-2) + 1`` of ``T(u)`` is
    missing from ``T(t)``. Returns ``(t, u, factor)`` or ``None``.
    """
    n = 3 ** (length - 2) + 1
    for t in pattern_sequences(length):
        for tail in pattern_sequences(extension):
            u = t + tail
            missing = missing_factors(t, u, n)
            if missing:
                return t, u, min(missing)
    return None


def dfao_from_periodic(t, fill=None, cap=None):
    """
    Return the single-track base-3 automaton computing ``T(t)`` for the ultimately periodic
    pattern sequence ``t``. Its states pair a state of the Stewart automaton with the position
    reached in the lasso ``preperiod + period``, which amounts to intersecting the pattern track
    with the prefixes of ``t`` and projecting it away.
    """
    if isinstance(t, str):
        t = UltimatelyPeriodicSeq.from_string(t)
    cap = app_settings.STATE_CAP if cap is None else cap
    lasso = len(t.preperiod) + len(t.period)
    tp = STEWART_AUTOMATON

    def advance(k):
        return k + 1 if k + 1 < lasso else len(t.preperiod)

    def output(state, k):
        symbol = tp.outputs[state]
        if symbol != HOLE_CODE:
            return symbol
        resolved = t.resolve_hole(k)
        if resolved is None:
            if fill is None:
                raise UnresolvedHole(toeplitz_prefix(t.prefix(k)).holes[0])
            resolved = str(fill)
        return SYMBOL_CODES[resolved]

    index = {(0, 0): 0}
    keys = [(0, 0)]
    rows = []
    position = 0
    while position < len(keys):
        state, k = keys[position]
        code = t.letter(k).value
        row = []
        for digit in range(3):
            target = (int(tp.transitions[state, tp.symbol_index((code, digit))]), advance(k))
            if target not in index:
                index[target] = len(keys)
                keys.append(target)
                if len(keys) > cap:
                    raise StateCapExceeded(cap, 'automaton of {}'.format(t))
            row.append(index[target])
        rows.append(row)
        position += 1
    outputs = [output(state, k) for state, k in keys]
    logger.debug("lasso product for %s: %d states", t, len(keys))
    return MultiTrackDfao((3,), rows, outputs).minimize()


def _read_letter(m, state):
    after = m.transitions[m.transitions[state]]
    outputs = [[m.outputs[int(after[d0, d1])] for d1 in range(3)] for d0 in range(3)]
    if any(o is None for row in outputs for o in row):
        raise NotAStewartWord("Undefined output reached from state {}.".format(state))
    constant = {d0: row[0] for d0, row in enumerate(outputs) if len(set(row)) == 1}
    if len(constant) != 2 or set(constant.values()) != {0, 1}:
        raise NotAStewartWord("Outputs {} from state {} fit no Stewart pattern.".format(outputs, state))
    hole = next(d for d in range(3) if d not in constant)
    symbols = ''.join(HOLE if d == hole else str(constant[d]) for d in range(3))
    return next(p for p in Pattern if p.symbols == symbols), hole


def reconstruct_pattern_seq(m):
    """
    Recover the ultimately periodic pattern sequence of a single-track base-3 automaton
    computing a Stewart word: the outputs on two-digit inputs identify the current pattern, and
    its hole digit leads to the state computing the rest of the sequence.
    """
    if m.bases != (3,):
        raise PreconditionError("Expected a single-track base-3 automaton, got bases {}.".format(list(m.bases)))
    visited = {}
    letters = []
    state = 0
    while state not in visited:
        visited[state] = len(letters)
        letter, hole = _read_letter(m, state)
        letters.append(letter)
        state = int(m.transitions[state, hole])
    start = visited[state]
    result = UltimatelyPeriodicSeq(PatternSeq(tuple(letters[:start])), PatternSeq(tuple(letters[start:])))
    return result.canonical()


def morphism_prefix(images, length, start='0'):
    """
    Prefix of the fixed point of the uniform morphism ``images`` beginning with ``start``.
    """
    word = start
    while len(word) < length:
        grown = ''.join(images[ch] for ch in word)
        if grown == word:
            break
        word = grown
    return word[:length]


def choral_prefix(length):
    return morphism_prefix({'0': '001', '1': '011'}, length)


def sierpinski_prefix(length):
    return morphism_prefix({'0': '011', '1': '010'}, length)


class NaiveEvaluator:
    """
    Evaluates formulas by enumerating assignments over finite domains: base-7 variables range
    over the codes of pattern sequences of length at most ``max_length``, all other variables
    over ``range(bound)``. Words are read from ``toeplitz_prefix`` inside the prefix and from
    the Stewart automaton's own extension beyond it.
    """
    def __init__(self, session, bound=27, max_length=2):
        self.session = session
        self.bound = bound
        self.max_length = max_length
        self.bases = {}

    def domain(self, name):
        if self.bases.get(name) == 7:
            return [seq.value for length in range(self.max_length + 1) for seq in pattern_sequences(length)]
        return range(self.bound)

    def evaluate(self, text, assignment=None):
        query = parse(text) if isinstance(text, str) else text
        formula = rename_bound(query.formula)
        compiler = Compiler(self.session, query.default_base)
        compiler.infer_bases(formula)
        self.bases = compiler.bases
        return self.formula(formula, dict(assignment or {}))

    def term(self, node, env):
        if isinstance(node, ast.Var):
            return env[node.name]
        if isinstance(node, ast.Const):
            return node.value
        if isinstance(node, (ast.Add, ast.Sub)):
            left, right = self.term(node.left, env), self.term(node.right, env)
            if left is None or right is None:
                return None
            if isinstance(node, ast.Add):
                return left + right
            return left - right if left >= right else None
        if isinstance(node, ast.Mul):
            inner = self.term(node.term, env)
            return None if inner is None else node.factor * inner
        inner = self.term(node.term, env)
        return None if inner is None else inner // node.divisor

    def lookup(self, node, env):
        if isinstance(node, ast.Output):
            return node.value
        indices = [self.term(index, env) for index in node.indices]
        if any(i is None for i in indices):
            return None
        if node.word == 'TP' and self.session.lookup_word('TP') is STEWART_AUTOMATON:
            t, n = PatternSeq.from_value(indices[0]), indices[1]
            if n < 3 ** len(t):
                return SYMBOL_CODES[toeplitz_prefix(t)[n]]
            symbol = stewart_symbol(t, n)
            return None if symbol is None else SYMBOL_CODES[symbol]
        return self.session.lookup_word(node.word).eval(tuple(indices))

    def formula(self, node, env):
        if isinstance(node, ast.Compare):
            left, right = self.term(node.left, env), self.term(node.right, env)
            return left is not None and right is not None and RELATIONS[node.op](left, right)
        if isinstance(node, ast.WordCompare):
            left, right = self.lookup(node.left, env), self.lookup(node.right, env)
            return left is not None and right is not None and RELATIONS[node.op](left, right)
        if isinstance(node, ast.Call):
            values = [self.term(arg, env) for arg in node.args]
            if any(v is None for v in values):
                return False
            return self.session.lookup_predicate(node.name).automaton.accepts(tuple(values))
        if isinstance(node, ast.Not):
            return not self.formula(node.body, env)
        if isinstance(node, ast.Binary):
            left, right = self.formula(node.left, env), self.formula(node.right, env)
            return bool(CONNECTIVES[node.op](left, right))
        return self.quantified(node, env, list(node.names))

    def quantified(self, node, env, names):
        if not names:
            return self.formula(node.body, env)
        name, rest = names[0], names[1:]
        outcomes = (self.quantified(node, dict(env, **{name: value}), rest) for value in self.domain(name))
        return any(outcomes) if node.kind == 'E' else all(outcomes)


CONNECTIVES = {
    '&': operator.and_,
    '|': operator.or_,
    '=>': lambda a, b: (not a) or b,
    '<=>': operator.eq,
}


def naive_eval(text, session, assignment=None, bound=27, max_length=2):
    return NaiveEvaluator(session, bound, max_length).evaluate(text, assignment)
