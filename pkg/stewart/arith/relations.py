"""
Recognizers of the arithmetic relations underlying the query language. Every relation reads
its arguments as aligned lsd-first digit strings in one common base.
"""
import operator
from functools import lru_cache

import numpy as np

from stewart.automata.base import MultiTrackDfa, symbol_table
from stewart.exceptions import PreconditionError
from stewart.numeration import encode

EQ, LT, GT = 0, 1, 2

RELATIONS = {
    '=': operator.eq,
    '!=': operator.ne,
    '<': operator.lt,
    '<=': operator.le,
    '>': operator.gt,
    '>=': operator.ge,
}


def _check_base(base):
    if not isinstance(base, int) or base < 2:
        raise PreconditionError("Base must be an integer >= 2, got {!r}.".format(base))


def _comparator(base, accept):
    """
    Two tracks ``(x, y)``; the state records how the values read so far compare, the most
    recently read digit being the most significant one.
    """
    table = symbol_table((base, base))
    transitions = np.empty((3, len(table)), dtype=np.int64)
    for state in (EQ, LT, GT):
        for symbol, (a, b) in enumerate(table.tolist()):
            transitions[state, symbol] = LT if a < b else GT if a > b else state
    return MultiTrackDfa((base, base), transitions, [s in accept for s in (EQ, LT, GT)]).minimize()


@lru_cache(maxsize=None)
def rel_eq(base):
    _check_base(base)
    return _comparator(base, {EQ})


@lru_cache(maxsize=None)
def rel_lt(base):
    _check_base(base)
    return _comparator(base, {LT})


@lru_cache(maxsize=None)
def rel_leq(base):
    _check_base(base)
    return _comparator(base, {EQ, LT})


@lru_cache(maxsize=None)
def rel_add(base):
    """
    Three tracks ``(x, y, z)`` with ``x + y = z``. States are the carries ``0`` and ``1``,
    plus a dead state.
    """
    _check_base(base)
    dead = 2
    table = symbol_table((base, base, base))
    transitions = np.full((3, len(table)), dead, dtype=np.int64)
    for carry in (0, 1):
        for symbol, (a, b, c) in enumerate(table.tolist()):
            total = a + b + carry
            if total % base == c:
                transitions[carry, symbol] = total // base
    return MultiTrackDfa((base, base, base), transitions, [True, False, False]).minimize()


@lru_cache(maxsize=None)
def rel_const(constant, base, relation='='):
    """
    Single track ``x`` with ``x <relation> constant``. States pair the number of digits of the
    constant consumed so far with the comparison of the values read.
    """
    _check_base(base)
    if constant < 0:
        raise PreconditionError("Constants must be natural numbers.")
    compare = RELATIONS[relation]
    digits = encode(constant, base).digits
    length = len(digits)
    transitions = np.empty(((length + 1) * 3, base), dtype=np.int64)
    accepting = np.zeros((length + 1) * 3, dtype=bool)
    signs = {EQ: 0, LT: -1, GT: 1}
    for position in range(length + 1):
        digit = digits[position] if position < length else 0
        following = min(position + 1, length)
        for cmp in (EQ, LT, GT):
            state = position * 3 + cmp
            for a in range(base):
                result = LT if a < digit else GT if a > digit else cmp
                transitions[state, a] = following * 3 + result
            # unread digits of the constant make it the larger number
            final = cmp if position == length else LT
            accepting[state] = compare(signs[final], 0)
    return MultiTrackDfa((base,), transitions, accepting).minimize()


@lru_cache(maxsize=None)
def mul_const(constant, base):
    """
    Two tracks ``(x, y)`` with ``constant * x = y``, composed from doublings and additions.
    """
    _check_base(base)
    if constant < 1:
        raise PreconditionError("Multiplier must be a positive integer, got {}.".format(constant))
    if constant == 1:
        return rel_eq(base)
    half = mul_const(constant // 2, base)
    add = rel_add(base)
    if constant % 2 == 0:
        # tracks x, y, w with w = (c/2)x and y = w + w
        bases = (base,) * 3
        dfa = half.rewire(bases, (0, 2)).product(add.rewire(bases, (2, 2, 1)), '&')
        return dfa.project(2)
    # tracks x, y, w, v with w = (c//2)x, v = w + w and y = v + x
    bases = (base,) * 4
    dfa = half.rewire(bases, (0, 2))
    dfa = dfa.product(add.rewire(bases, (2, 2, 3)), '&')
    dfa = dfa.product(add.rewire(bases, (3, 0, 1)), '&')
    return dfa.project(3).project(2)


@lru_cache(maxsize=None)
def div_const(constant, base):
    """
    Two tracks ``(x, y)`` with ``y = floor(x / constant)``, that is
    ``x = constant * y + r`` for some ``r < constant``.
    """
    _check_base(base)
    if constant < 1:
        raise PreconditionError("Divisor must be a positive integer, got {}.".format(constant))
    # tracks x, y, w, r with w = c*y and w + r = x and r < c
    bases = (base,) * 4
    dfa = mul_const(constant, base).rewire(bases, (1, 2))
    dfa = dfa.product(rel_add(base).rewire(bases, (2, 3, 0)), '&')
    dfa = dfa.product(rel_const(constant, base, '<').rewire(bases, (3,)), '&')
    return dfa.project(3).project(2)
