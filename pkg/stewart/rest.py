from fractions import Fraction

from rest_framework import renderers
from rest_framework.utils import encoders
from stewart.numeration import DigitString
from stewart.words import PartialWord, PatternSeq, UltimatelyPeriodicSeq


class JSONEncoder(encoders.JSONEncoder):
    """JSONEncoder subclass that knows how to encode words, pattern sequences and fractions."""

    def default(self, obj):
        if isinstance(obj, Fraction):
            return '{}/{}'.format(obj.numerator, obj.denominator)
        if isinstance(obj, (PartialWord, PatternSeq, UltimatelyPeriodicSeq)):
            return str(obj)
        if isinstance(obj, DigitString):
            return list(obj.digits)
        return super().default(obj)


class JSONRenderer(renderers.JSONRenderer):
    encoder_class = JSONEncoder
