"""
Least-significant-digit-first representations of natural numbers, and their alignment onto
several tracks. This is the common substrate of all automata in this application: an input
word of an automaton with ``m`` tracks is a :class:`TrackVector`, read column by column.

Trailing zeros are padding and carry no meaning, hence ``0`` is represented by the empty
digit string.
"""
from dataclasses import dataclass
from typing import Tuple

from stewart.exceptions import NumerationError, PreconditionError


@dataclass(frozen=True)
class DigitString:
    base: int
    digits: Tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.base, int) or self.base < 2:
            raise NumerationError("Base must be an integer >= 2, got {!r}.".format(self.base))
        object.__setattr__(self, 'digits', tuple(self.digits))
        for digit in self.digits:
            if not 0 <= digit < self.base:
                msg = "Digit {} is out of range for base {}."
                raise NumerationError(msg.format(digit, self.base))

    def __len__(self):
        return len(self.digits)

    def __str__(self):
        return '[{}]'.format(', '.join(str(d) for d in self.digits))

    @property
    def value(self):
        return decode(self)

    def canonical(self):
        """
        Return this digit string without trailing zeros.
        """
        digits = self.digits
        while digits and digits[-1] == 0:
            digits = digits[:-1]
        return DigitString(self.base, digits)

    def padded(self, length):
        if length < len(self.digits):
            raise PreconditionError("Can not pad {} down to length {}.".format(self, length))
        return DigitString(self.base, self.digits + (0,) * (length - len(self.digits)))


@dataclass(frozen=True)
class TrackVector:
    tracks: Tuple[DigitString, ...]

    def __post_init__(self):
        object.__setattr__(self, 'tracks', tuple(self.tracks))
        if not self.tracks:
            raise PreconditionError("A track vector requires at least one track.")
        if len({len(t) for t in self.tracks}) > 1:
            raise PreconditionError("All tracks of a track vector must have the same length.")

    def __len__(self):
        return len(self.tracks[0])

    def __iter__(self):
        return iter(self.columns)

    def __str__(self):
        return ' '.join('[{}]'.format(','.join(str(d) for d in column)) for column in self.columns)

    @property
    def bases(self):
        return tuple(t.base for t in self.tracks)

    @property
    def columns(self):
        """
        The digit tuples in reading order, least significant first.
        """
        return tuple(zip(*(t.digits for t in self.tracks)))

    @property
    def values(self):
        return tuple(decode(t) for t in self.tracks)


def encode(n, base):
    """
    Return the canonical lsd-first representation of the natural number ``n`` in ``base``.
    """
    if not isinstance(n, int) or n < 0:
        raise NumerationError("Only natural numbers can be encoded, got {!r}.".format(n))
    if not isinstance(base, int) or base < 2:
        raise NumerationError("Base must be an integer >= 2, got {!r}.".format(base))
    digits = []
    while n:
        n, digit = divmod(n, base)
        digits.append(digit)
    return DigitString(base, tuple(digits))


def decode(digit_string):
    value = 0
    for digit in reversed(digit_string.digits):
        if not 0 <= digit < digit_string.base:
            raise NumerationError("Digit {} is out of range for base {}.".format(digit, digit_string.base))
        value = value * digit_string.base + digit
    return value


def align(tracks):
    """
    Pad all digit strings with trailing zeros to their common maximum length.
    """
    tracks = list(tracks)
    if not tracks:
        raise PreconditionError("Can not align an empty list of tracks.")
    length = max(len(t) for t in tracks)
    return TrackVector(tuple(t.padded(length) for t in tracks))


def encode_values(values, bases, length=None):
    """
    Encode a tuple of naturals, one per track, into an aligned track vector. If ``length``
    is given, the result is padded to at least that many columns.
    """
    if len(values) != len(bases):
        raise PreconditionError("Got {} values for {} tracks.".format(len(values), len(bases)))
    vector = align([encode(v, k) for v, k in zip(values, bases)])
    if length is not None and length > len(vector):
        vector = TrackVector(tuple(t.padded(length) for t in vector.tracks))
    return vector
