"""
Deterministic automata reading several tracks of lsd-first digits in parallel, each track in its
own base. The input alphabet is the set of digit tuples, enumerated in the order produced by
:func:`itertools.product`, hence the all-zero tuple always has symbol index ``0``.

States are dense integers with ``0`` as the initial state. Transitions are stored as a
``numpy`` array of shape ``(states, symbols)``.

All recognizers created by this module are padding-normalized: appending or removing trailing
all-zero tuples never changes acceptance.
"""
import itertools
import logging
import math

import numpy as np

from stewart.conf import app_settings
from stewart.exceptions import BaseMismatch, PreconditionError, StateCapExceeded
from stewart.numeration import TrackVector, encode_values

logger = logging.getLogger('stewart.automata')

CONNECTIVES = {
    '&': np.logical_and,
    '|': np.logical_or,
    '=>': lambda a, b: np.logical_or(np.logical_not(a), b),
    '<=>': np.equal,
    '^': np.not_equal,
}


def symbol_table(bases):
    """
    Return all digit tuples over ``bases`` as an integer array of shape ``(symbols, tracks)``.
    """
    size = math.prod(bases)
    table = np.array(list(itertools.product(*(range(b) for b in bases))), dtype=np.int64)
    return table.reshape(size, len(bases))


def strides(bases):
    return tuple(math.prod(bases[i + 1:]) for i in range(len(bases)))


def _state_cap(cap):
    return app_settings.STATE_CAP if cap is None else cap


def _explore(start, successors, cap, operation):
    """
    Breadth-first construction of a deterministic automaton whose states are identified by
    integer keys. ``successors(key)`` returns the keys reached on each input symbol as an
    integer array. Returns the transition table and the list of keys, in state order.
    """
    index = {start: 0}
    keys = [start]
    rows = []
    position = 0
    while position < len(keys):
        codes = successors(keys[position])
        uniq, inverse = np.unique(codes, return_inverse=True)
        ids = np.empty(len(uniq), dtype=np.int64)
        for n, code in enumerate(uniq.tolist()):
            target = index.get(code)
            if target is None:
                target = index[code] = len(keys)
                keys.append(code)
                if len(keys) > cap:
                    raise StateCapExceeded(cap, operation)
            ids[n] = target
        rows.append(ids[inverse.reshape(-1)])
        position += 1
    return np.array(rows, dtype=np.int64).reshape(len(keys), -1), keys


def _refine(transitions, classes):
    """
    Coarsest partition refining ``classes`` which is stable under all transitions. This is the
    vectorised form of Moore's algorithm: blocks are split by the signature of their successors
    until the number of blocks no longer grows.
    """
    _, classes = np.unique(classes, return_inverse=True)
    classes = classes.reshape(-1)
    count = classes.max() + 1 if len(classes) else 0
    while True:
        signature = np.column_stack([classes, classes[transitions]])
        _, refined = np.unique(signature, axis=0, return_inverse=True)
        refined = refined.reshape(-1)
        refined_count = refined.max() + 1
        if refined_count == count:
            return refined
        classes, count = refined, refined_count


def _quotient(transitions, classes):
    """
    Collapse states by ``classes`` and renumber the blocks in breadth-first order from the
    block of state ``0``. Returns the new transition table and, for every new state, one
    representative old state.
    """
    representative = {}
    for state, block in enumerate(classes.tolist()):
        representative.setdefault(block, state)
    initial = int(classes[0])
    order = {initial: 0}
    queue = [initial]
    position = 0
    while position < len(queue):
        for block in classes[transitions[representative[queue[position]]]].tolist():
            if block not in order:
                order[block] = len(queue)
                queue.append(block)
        position += 1
    renumber = np.full(classes.max() + 1, -1, dtype=np.int64)
    for block, state in order.items():
        renumber[block] = state
    reps = np.array([representative[block] for block in queue], dtype=np.int64)
    return renumber[classes[transitions[reps]]], reps


class MultiTrackAutomaton:
    """
    Common base of recognizers and automata with output.
    """
    def __init__(self, bases, transitions):
        self.bases = tuple(bases)
        for base in self.bases:
            if not isinstance(base, int) or base < 2:
                raise BaseMismatch("Track base must be an integer >= 2, got {!r}.".format(base))
        transitions = np.asarray(transitions, dtype=np.int64)
        if transitions.ndim != 2 or transitions.shape[1] != self.alphabet_size or not len(transitions):
            msg = "Transition table of shape {} does not fit {} states over bases {}."
            raise PreconditionError(msg.format(transitions.shape, len(transitions), self.bases))
        if transitions.min() < 0 or transitions.max() >= len(transitions):
            raise PreconditionError("Transition table refers to undefined states.")
        self.transitions = transitions
        self.transitions.setflags(write=False)

    @property
    def num_tracks(self):
        return len(self.bases)

    @property
    def num_states(self):
        return self.transitions.shape[0]

    @property
    def alphabet_size(self):
        return math.prod(self.bases)

    def symbol_index(self, column):
        if len(column) != self.num_tracks:
            raise BaseMismatch("Expected {} digits per column, got {}.".format(self.num_tracks, len(column)))
        index = 0
        for digit, base in zip(column, self.bases):
            if not 0 <= digit < base:
                raise BaseMismatch("Digit {} does not fit base {}.".format(digit, base))
            index = index * base + digit
        return index

    def _as_vector(self, word):
        if isinstance(word, TrackVector):
            if word.bases != self.bases:
                msg = "Input has track bases {}, but the automaton reads {}."
                raise BaseMismatch(msg.format(word.bases, self.bases))
            return word.columns
        values = tuple(word)
        if not self.num_tracks:
            if values:
                raise BaseMismatch("A zero-track automaton reads no values.")
            return ()
        return encode_values(values, self.bases).columns

    def run(self, word):
        """
        Return the state reached from the initial state on a :class:`TrackVector` or on a tuple
        of naturals, one per track.
        """
        state = 0
        for column in self._as_vector(word):
            state = self.transitions[state, self.symbol_index(column)]
        return int(state)

    def _rewired_transitions(self, bases, mapping):
        bases = tuple(bases)
        mapping = tuple(mapping)
        if len(mapping) != self.num_tracks:
            raise PreconditionError("Need one target track for each of the {} tracks.".format(self.num_tracks))
        for old, new in enumerate(mapping):
            if not 0 <= new < len(bases):
                raise PreconditionError("Track {} is wired onto the missing track {}.".format(old, new))
            if bases[new] != self.bases[old]:
                msg = "Can not wire a base {} track onto a base {} track."
                raise BaseMismatch(msg.format(self.bases[old], bases[new]))
        table = symbol_table(bases)
        old_index = np.zeros(len(table), dtype=np.int64)
        for old, (new, stride) in enumerate(zip(mapping, strides(self.bases))):
            old_index += table[:, new] * stride
        return bases, self.transitions[:, old_index]

    def reachable_states(self):
        seen = np.zeros(self.num_states, dtype=bool)
        seen[0] = True
        frontier = np.array([0])
        while len(frontier):
            targets = np.unique(self.transitions[frontier])
            frontier = targets[~seen[targets]]
            seen[frontier] = True
        return seen


class MultiTrackDfa(MultiTrackAutomaton):
    """
    A recognizer of tuples of naturals, given as aligned lsd-first digit strings.
    """
    def __init__(self, bases, transitions, accepting):
        super().__init__(bases, transitions)
        accepting = np.asarray(accepting)
        if accepting.dtype != bool:
            flags = np.zeros(self.num_states, dtype=bool)
            flags[np.asarray(list(accepting), dtype=np.int64)] = True
            accepting = flags
        if accepting.shape != (self.num_states,):
            raise PreconditionError("Acceptance flags do not match the number of states.")
        self.accepting = accepting
        self.accepting.setflags(write=False)

    def __repr__(self):
        return '<MultiTrackDfa bases={} states={}>'.format(list(self.bases), self.num_states)

    @classmethod
    def universal(cls, bases=()):
        return cls(bases, np.zeros((1, math.prod(bases)), dtype=np.int64), [True])

    @classmethod
    def empty(cls, bases=()):
        return cls(bases, np.zeros((1, math.prod(bases)), dtype=np.int64), [False])

    def accepts(self, word):
        return bool(self.accepting[self.run(word)])

    def rewire(self, bases, mapping):
        """
        Read old track ``i`` from new track ``mapping[i]``. New tracks not in ``mapping`` are
        ignored; several old tracks wired onto the same new track must read equal digits.
        """
        bases, transitions = self._rewired_transitions(bases, mapping)
        return MultiTrackDfa(bases, transitions, self.accepting)

    def complement(self):
        return MultiTrackDfa(self.bases, self.transitions, ~self.accepting)

    def product(self, other, op, cap=None):
        """
        Return the recognizer accepting ``op(self accepts v, other accepts v)``. ``op`` is one
        of the keys of :data:`CONNECTIVES` or a binary function on boolean arrays.
        """
        if self.bases != other.bases:
            msg = "Can not combine automata over track bases {} and {}."
            raise BaseMismatch(msg.format(list(self.bases), list(other.bases)))
        combine = CONNECTIVES[op] if isinstance(op, str) else op
        nb = other.num_states
        left, right = self.transitions, other.transitions
        transitions, keys = _explore(
            0, lambda key: left[key // nb] * nb + right[key % nb], _state_cap(cap), 'product')
        keys = np.array(keys, dtype=np.int64)
        accepting = combine(self.accepting[keys // nb], other.accepting[keys % nb])
        logger.debug("product %s: %d x %d -> %d states", op, self.num_states, nb, len(keys))
        return MultiTrackDfa(self.bases, transitions, np.asarray(accepting, dtype=bool)).minimize()

    def minimize(self):
        reachable = self.reachable_states()
        dfa = self
        if not reachable.all():
            dfa = self._restrict(reachable)
        classes = _refine(dfa.transitions, dfa.accepting.astype(np.int64))
        transitions, reps = _quotient(dfa.transitions, classes)
        return MultiTrackDfa(dfa.bases, transitions, dfa.accepting[reps])

    def _restrict(self, keep):
        renumber = np.cumsum(keep) - 1
        return MultiTrackDfa(self.bases, renumber[self.transitions[keep]], self.accepting[keep])

    def normalize(self, cap=None):
        """
        Repair the padding closure: accept ``w`` iff the word obtained by removing the trailing
        zero tuples of ``w``, extended by some number of zero tuples, is accepted.
        """
        zero = self.transitions[:, 0]
        good = self.accepting.copy()
        while True:
            grown = good | good[zero]
            if (grown == good).all():
                break
            good = grown
        transitions = self.transitions

        def successors(key):
            state, flag = divmod(key, 2)
            targets = transitions[state]
            flags = good[targets].astype(np.int64)
            flags[0] = flag
            return targets * 2 + flags

        table, keys = _explore(int(good[0]), successors, _state_cap(cap), 'normalize')
        accepting = np.array([key % 2 == 1 for key in keys], dtype=bool)
        return MultiTrackDfa(self.bases, table, accepting).minimize()

    def exists(self, track, cap=None):
        """
        Existentially quantify the given track away. The result may have zero tracks, then it
        decides a closed statement.
        """
        if not 0 <= track < self.num_tracks:
            raise PreconditionError("There is no track {} to project.".format(track))
        bases = self.bases[:track] + self.bases[track + 1:]
        table = symbol_table(self.bases)
        new_code = np.zeros(len(table), dtype=np.int64)
        remaining = [i for i in range(self.num_tracks) if i != track]
        for i, stride in zip(remaining, strides(bases)):
            new_code += table[:, i] * stride
        order = np.lexsort((table[:, track], new_code))
        groups = order.reshape(math.prod(bases), self.bases[track])
        cap = _state_cap(cap)
        transitions = self.transitions
        subsets = [(0,)]
        index = {(0,): 0}
        rows = []
        position = 0
        while position < len(subsets):
            members = np.array(subsets[position], dtype=np.int64)
            targets = transitions[members][:, groups]
            targets = targets.transpose(1, 0, 2).reshape(len(groups), -1)
            targets.sort(axis=1)
            uniq, inverse = np.unique(targets, axis=0, return_inverse=True)
            ids = np.empty(len(uniq), dtype=np.int64)
            for n, row in enumerate(uniq.tolist()):
                subset = tuple(sorted(set(row)))
                target = index.get(subset)
                if target is None:
                    target = index[subset] = len(subsets)
                    subsets.append(subset)
                    if len(subsets) > cap:
                        raise StateCapExceeded(cap, 'projection')
                ids[n] = target
            rows.append(ids[inverse.reshape(-1)])
            position += 1
        accepting = np.array([self.accepting[list(s)].any() for s in subsets], dtype=bool)
        logger.debug("projection of track %d: %d -> %d subsets", track, self.num_states, len(subsets))
        dfa = MultiTrackDfa(bases, np.array(rows, dtype=np.int64).reshape(len(subsets), -1), accepting)
        return dfa.minimize().normalize(cap)

    def project(self, track, cap=None):
        """
        Remove ``track``; the result accepts ``v`` iff some digit string on the removed track,
        possibly longer than ``v``, makes this automaton accept.
        """
        if self.num_tracks < 2:
            raise PreconditionError("Projection requires an automaton with at least two tracks.")
        return self.exists(track, cap)

    def is_empty(self):
        return not self.accepting[self.reachable_states()].any()

    def equivalent(self, other, cap=None):
        if self.bases != other.bases:
            return False
        return self.product(other, '^', cap).is_empty()

    def is_universal(self):
        return self.complement().is_empty()

    def distances(self):
        """
        Number of symbols needed from each state to reach an accepting state; ``-1`` if none.
        """
        inf = self.num_states + 1
        dist = np.where(self.accepting, 0, inf)
        while True:
            shorter = np.minimum(dist, 1 + dist[self.transitions].min(axis=1))
            if (shorter == dist).all():
                break
            dist = shorter
        return np.where(dist >= inf, -1, dist)

    def enumerate(self, max_len):
        """
        Return the sorted list of value tuples accepted with at most ``max_len`` digits per track.
        """
        if max_len < 0:
            raise PreconditionError("Maximum length must not be negative.")
        dist = self.distances()
        table = symbol_table(self.bases).tolist()
        frontier = {0: {(0,) * self.num_tracks}} if 0 <= dist[0] <= max_len else {}
        for depth in range(max_len):
            remaining = max_len - depth - 1
            weights = [base ** depth for base in self.bases]
            successor = {}
            for state, tuples in frontier.items():
                row = self.transitions[state]
                for symbol, column in enumerate(table):
                    target = int(row[symbol])
                    if dist[target] < 0 or dist[target] > remaining:
                        continue
                    shift = tuple(d * w for d, w in zip(column, weights))
                    bucket = successor.setdefault(target, set())
                    bucket.update(tuple(v + s for v, s in zip(values, shift)) for values in tuples)
            frontier = successor
        result = set()
        for state, tuples in frontier.items():
            if self.accepting[state]:
                result.update(tuples)
        return sorted(result)

    def summary(self):
        return "{} tracks {}, {} states, {} accepting".format(
            self.num_tracks, list(self.bases), self.num_states, int(self.accepting.sum()))


class MultiTrackDfao(MultiTrackAutomaton):
    """
    A deterministic automaton with output. An output of ``None`` marks a state where the
    computed word is undefined; such a state never satisfies any comparison.
    """
    def __init__(self, bases, transitions, outputs):
        super().__init__(bases, transitions)
        outputs = tuple(outputs)
        if len(outputs) != self.num_states:
            raise PreconditionError("Outputs do not match the number of states.")
        self.outputs = outputs

    def __repr__(self):
        return '<MultiTrackDfao bases={} states={}>'.format(list(self.bases), self.num_states)

    def eval(self, word):
        return self.outputs[self.run(word)]

    def rewire(self, bases, mapping):
        bases, transitions = self._rewired_transitions(bases, mapping)
        return MultiTrackDfao(bases, transitions, self.outputs)

    def _output_codes(self):
        return np.array([-1 if o is None else o for o in self.outputs], dtype=np.int64)

    def minimize(self):
        reachable = self.reachable_states()
        dfao = self
        if not reachable.all():
            renumber = np.cumsum(reachable) - 1
            outputs = [o for o, keep in zip(self.outputs, reachable) if keep]
            dfao = MultiTrackDfao(self.bases, renumber[self.transitions[reachable]], outputs)
        classes = _refine(dfao.transitions, dfao._output_codes())
        transitions, reps = _quotient(dfao.transitions, classes)
        return MultiTrackDfao(dfao.bases, transitions, [dfao.outputs[r] for r in reps.tolist()])

    def select(self, predicate):
        """
        Return the recognizer of inputs whose output is defined and satisfies ``predicate``.
        """
        accepting = np.array([o is not None and bool(predicate(o)) for o in self.outputs], dtype=bool)
        return MultiTrackDfa(self.bases, self.transitions, accepting).minimize()

    def fiber(self, output):
        return self.select(lambda o: o == output)

    def compare(self, other, relation, cap=None):
        """
        Return the recognizer of inputs whose two outputs, both defined, satisfy ``relation``.
        """
        if self.bases != other.bases:
            msg = "Can not compare automata over track bases {} and {}."
            raise BaseMismatch(msg.format(list(self.bases), list(other.bases)))
        nb = other.num_states
        left, right = self.transitions, other.transitions
        transitions, keys = _explore(
            0, lambda key: left[key // nb] * nb + right[key % nb], _state_cap(cap), 'comparison')
        accepting = []
        for key in keys:
            a, b = self.outputs[key // nb], other.outputs[key % nb]
            accepting.append(a is not None and b is not None and bool(relation(a, b)))
        return MultiTrackDfa(self.bases, transitions, np.array(accepting, dtype=bool)).minimize()

    def equivalent(self, other, cap=None):
        """
        Two automata with output are equivalent if they produce the same output on every input.
        """
        if self.bases != other.bases:
            return False
        nb = other.num_states
        left, right = self.transitions, other.transitions
        _, keys = _explore(
            0, lambda key: left[key // nb] * nb + right[key % nb], _state_cap(cap), 'equivalence')
        return all(self.outputs[key // nb] == other.outputs[key % nb] for key in keys)

    def summary(self):
        values = sorted({o for o in self.outputs if o is not None})
        return "{} tracks {}, {} states, outputs {}".format(
            self.num_tracks, list(self.bases), self.num_states, values)


def eval_dfao(m, v):
    return m.eval(v)


def product(a, b, op, cap=None):
    return a.product(b, op, cap)


def complement(a):
    return a.complement()


def project(a, track, cap=None):
    return a.project(track, cap)


def minimize(a):
    return a.minimize()


def equivalent(a, b, cap=None):
    return a.equivalent(b, cap)


def is_empty(a):
    return a.is_empty()
