"""
Finite Toeplitz words, prefixes of Stewart words and a few primitives of combinatorics on words.

A Stewart pattern is one of the six words of length 3 which are permutations of ``0``, ``1`` and
``?``. A finite sequence ``t`` of patterns determines the partial word ``T(t)`` of length
``3^|t|``, obtained by repeatedly substituting the single ``?`` with the next pattern.
"""
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import FrozenSet, Tuple

from django.db import models

from stewart.exceptions import InternalConsistencyError, PreconditionError, UnresolvedHole

HOLE = '?'

BOOLEAN_SYMBOLS = '01'


class Pattern(models.IntegerChoices):
    """
    The six Stewart patterns. The value is the numeric letter code used on the pattern track
    of the Stewart automaton, the label spells out the pattern itself.
    """
    a = 1, '01?'
    b = 2, '10?'
    c = 3, '0?1'
    d = 4, '1?0'
    e = 5, '?01'
    f = 6, '?10'

    @property
    def symbols(self):
        return str(self.label)

    @property
    def code(self):
        return self.name

    @property
    def hole_index(self):
        return self.symbols.index(HOLE)

    @classmethod
    def from_letter(cls, letter):
        try:
            return cls[letter]
        except KeyError:
            raise PreconditionError("'{}' is not a Stewart pattern letter.".format(letter))


class PairClass(enum.Enum):
    """
    Classes of pattern pairs governing common factors of two Stewart words.
    """
    InX = 'X'
    InY = 'Y'


@dataclass(frozen=True)
class PatternSeq:
    letters: Tuple[Pattern, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'letters', tuple(Pattern(p) for p in self.letters))

    @classmethod
    def from_string(cls, text):
        return cls(tuple(Pattern.from_letter(ch) for ch in text))

    @classmethod
    def from_digits(cls, digits):
        """
        Build a pattern sequence from its lsd-first base-7 digits. Trailing zeros are padding,
        a zero followed by a letter code is rejected.
        """
        digits = list(digits)
        while digits and digits[-1] == 0:
            digits.pop()
        if any(d not in range(1, 7) for d in digits):
            raise PreconditionError("{} is not a valid pattern sequence encoding.".format(digits))
        return cls(tuple(Pattern(d) for d in digits))

    @classmethod
    def from_value(cls, value):
        digits = []
        while value:
            value, digit = divmod(value, 7)
            digits.append(digit)
        return cls.from_digits(digits)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return PatternSeq(self.letters[index])
        return self.letters[index]

    def __add__(self, other):
        return PatternSeq(self.letters + PatternSeq(tuple(other)).letters)

    def __str__(self):
        return ''.join(p.code for p in self.letters)

    @property
    def digits(self):
        return tuple(p.value for p in self.letters)

    @property
    def value(self):
        """
        The integer this sequence represents in base 7, least significant digit first.
        """
        return sum(d * 7 ** i for i, d in enumerate(self.digits))


@dataclass(frozen=True)
class UltimatelyPeriodicSeq:
    preperiod: PatternSeq
    period: PatternSeq

    def __post_init__(self):
        if not len(self.period):
            raise PreconditionError("The period of an ultimately periodic sequence must not be empty.")

    @classmethod
    def from_string(cls, text):
        """
        Parse the notation ``pre(period)``, for instance ``af(c)`` or ``(ad)``.
        """
        text = text.strip()
        if not text.endswith(')') or text.count('(') != 1:
            raise PreconditionError("'{}' is not of the form pre(period).".format(text))
        preperiod, period = text[:-1].split('(')
        return cls(PatternSeq.from_string(preperiod), PatternSeq.from_string(period))

    @classmethod
    def constant(cls, letter):
        return cls(PatternSeq(), PatternSeq.from_string(letter))

    def __str__(self):
        return '{}({})'.format(self.preperiod, self.period)

    def letter(self, index):
        if index < len(self.preperiod):
            return self.preperiod[index]
        return self.period[(index - len(self.preperiod)) % len(self.period)]

    def prefix(self, length):
        return PatternSeq(tuple(self.letter(k) for k in range(length)))

    def canonical(self):
        """
        Return the equivalent representation with shortest period and shortest preperiod.
        """
        period = self.period.letters
        for p in range(1, len(period) + 1):
            if len(period) % p == 0 and period == period[:p] * (len(period) // p):
                period = period[:p]
                break
        preperiod = self.preperiod.letters
        while preperiod and preperiod[-1] == period[-1]:
            preperiod = preperiod[:-1]
            period = period[-1:] + period[:-1]
        return UltimatelyPeriodicSeq(PatternSeq(preperiod), PatternSeq(period))

    def resolve_hole(self, start):
        """
        Return the symbol eventually filled into a hole which is first substituted by the
        pattern at index ``start``, or ``None`` if every later pattern keeps it open.
        """
        for k in range(start, start + len(self.preperiod) + len(self.period)):
            first = self.letter(k).symbols[0]
            if first != HOLE:
                return first
        return None


@dataclass(frozen=True)
class PartialWord:
    symbols: str = ''

    def __post_init__(self):
        if any(ch not in '01?' for ch in self.symbols):
            raise PreconditionError("'{}' is not a word over {{0,1,?}}.".format(self.symbols))

    @classmethod
    def from_numeric(cls, digits):
        return cls(''.join('01?'[d] for d in digits))

    def __len__(self):
        return len(self.symbols)

    def __getitem__(self, index):
        return self.symbols[index]

    def __iter__(self):
        return iter(self.symbols)

    def __str__(self):
        return self.symbols

    @property
    def numeric(self):
        """
        The symbols as numbers, where ``?`` is encoded as ``2``.
        """
        return tuple('01?'.index(ch) for ch in self.symbols)

    @property
    def holes(self):
        return tuple(i for i, ch in enumerate(self.symbols) if ch == HOLE)

    def is_boolean(self):
        return HOLE not in self.symbols


@dataclass(frozen=True)
class GenericPatternSet:
    """
    Any finite set of Toeplitz patterns of the same length, each containing at least one hole.
    """
    patterns: FrozenSet[str]
    alphabet: FrozenSet[str] = frozenset(BOOLEAN_SYMBOLS)

    def __post_init__(self):
        object.__setattr__(self, 'patterns', frozenset(self.patterns))
        object.__setattr__(self, 'alphabet', frozenset(self.alphabet))
        if not self.patterns:
            raise PreconditionError("A pattern set must not be empty.")
        if HOLE in self.alphabet:
            raise PreconditionError("The alphabet must not contain the hole symbol.")
        if len({len(p) for p in self.patterns}) != 1:
            raise PreconditionError("All patterns of a set must have the same length.")
        for pattern in self.patterns:
            if HOLE not in pattern:
                raise PreconditionError("Pattern '{}' contains no hole.".format(pattern))
            if any(ch != HOLE and ch not in self.alphabet for ch in pattern):
                raise PreconditionError("Pattern '{}' uses symbols outside the alphabet.".format(pattern))

    @classmethod
    def stewart(cls):
        return cls(frozenset(p.symbols for p in Pattern))

    @property
    def pattern_length(self):
        return len(next(iter(self.patterns)))


def _as_symbols(word):
    return word.symbols if isinstance(word, PartialWord) else str(word)


def expand(y, g):
    """
    Given ``y = T(t)`` with exactly one hole, return ``T(tg)``: the hole symbols in ``y^3`` are
    replaced, in order, by the three symbols of pattern ``g``.
    """
    symbols = _as_symbols(y)
    if symbols.count(HOLE) != 1:
        raise PreconditionError("'{}' must contain exactly one hole.".format(symbols))
    g = Pattern(g)
    replacements = iter(g.symbols)
    return PartialWord(''.join(
        next(replacements) if ch == HOLE else ch for ch in symbols * 3
    ))


@lru_cache(maxsize=4096)
def _toeplitz_prefix(letters):
    if not letters:
        return PartialWord(HOLE)
    return expand(_toeplitz_prefix(letters[:-1]), letters[-1])


def toeplitz_prefix(t):
    """
    Return ``T(t)``, the prefix of length ``3^|t|`` of the Stewart word specified by ``t``.
    """
    if isinstance(t, str):
        t = PatternSeq.from_string(t)
    return _toeplitz_prefix(PatternSeq(tuple(t)).letters)


def stewart_prefix(t, length, fill=None):
    """
    Return the prefix of length ``length`` of the infinite Stewart word ``T(t)`` as a string
    over ``{0,1}``.

    If the pattern sequence ends in ``{e,f}^ω`` and its hole stays inside the requested prefix,
    two Stewart words exist and ``fill`` (``'0'`` or ``'1'``) chooses among them.
    """
    if isinstance(t, str):
        t = UltimatelyPeriodicSeq.from_string(t)
    if length < 0:
        raise PreconditionError("Length must not be negative.")
    if fill is not None:
        fill = str(fill)
        if fill not in BOOLEAN_SYMBOLS:
            raise PreconditionError("Fill must be '0' or '1', got '{}'.".format(fill))
    stages = (math.ceil(math.log(length, 3)) if length > 1 else 0) + 2
    word = toeplitz_prefix(t.prefix(stages)).symbols
    hole = word.index(HOLE)
    if hole < length:
        symbol = t.resolve_hole(stages)
        if symbol is None:
            if fill is None:
                raise UnresolvedHole(hole)
            symbol = fill
        word = word[:hole] + symbol + word[hole + 1:]
    return word[:length]


def generic_toeplitz_prefix(pattern_set, choice, length):
    """
    Apply ``len(choice)`` substitution stages of the Toeplitz construction, top-down: at each
    stage the remaining holes, in order, are filled by the periodic repetition of the chosen
    pattern. Positions unresolved after the last stage remain ``?``.
    """
    if length < 1:
        raise PreconditionError("Length must be at least 1.")
    choice = list(choice)
    if not choice:
        raise PreconditionError("At least one substitution stage is required.")
    word = [HOLE] * length
    for pattern in choice:
        pattern = pattern.symbols if isinstance(pattern, Pattern) else str(pattern)
        if pattern not in pattern_set.patterns:
            raise PreconditionError("Pattern '{}' is not a member of the pattern set.".format(pattern))
        holes = [i for i, ch in enumerate(word) if ch == HOLE]
        for k, position in enumerate(holes):
            word[position] = pattern[k % len(pattern)]
    return PartialWord(''.join(word))


def hamming(g, h):
    """
    Number of positions on which the patterns ``g`` and ``h`` differ.
    """
    return sum(1 for x, y in zip(Pattern(g).symbols, Pattern(h).symbols) if x != y)


def classify_pair(g, h):
    distance = hamming(g, h)
    if distance in (0, 3):
        return PairClass.InX
    if distance == 2:
        return PairClass.InY
    raise InternalConsistencyError("Patterns {} and {} have Hamming distance {}.".format(g, h, distance))


def factors(word, n, boolean_only=False):
    """
    Return the set of distinct factors of length ``n``, optionally omitting those containing a hole.
    """
    symbols = _as_symbols(word)
    if not 0 <= n <= len(symbols):
        raise PreconditionError("Factor length {} is out of range for a word of length {}.".format(n, len(symbols)))
    result = {symbols[i:i + n] for i in range(len(symbols) - n + 1)}
    if boolean_only:
        result = {x for x in result if HOLE not in x}
    return frozenset(result)


def period_exponent(word):
    """
    Return the least period of ``word`` and its exponent ``|word| / per(word)`` as exact rational.
    """
    symbols = _as_symbols(word)
    if not symbols:
        raise PreconditionError("The empty word has no period.")
    for p in range(1, len(symbols) + 1):
        if symbols[p:] == symbols[:-p] or p == len(symbols):
            return p, Fraction(len(symbols), p)
