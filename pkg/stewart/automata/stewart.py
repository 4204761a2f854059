"""
The Stewart automaton. It reads a pattern sequence ``t`` in base 7 (letter codes ``a=1`` to
``f=6``, trailing zeros as padding) in parallel with a position ``n`` in base 3, and outputs
``T(t)[n]`` with the hole encoded as ``2``.

The table is partial: positions beyond the prefix coded by ``t`` mostly run into the
undefined sink added by :func:`stewart.automata.walnut.read_walnut`.
"""
from stewart.automata.walnut import read_walnut
from stewart.numeration import TrackVector, encode
from stewart.words import PatternSeq

TP_TEXT = """\
lsd_7 lsd_3
0 2
0 0 -> 3
1 0 -> 1
1 1 -> 2
1 2 -> 0
2 0 -> 2
2 1 -> 1
2 2 -> 0
3 0 -> 1
3 1 -> 0
3 2 -> 2
4 0 -> 2
4 1 -> 0
4 2 -> 1
5 0 -> 0
5 1 -> 1
5 2 -> 2
6 0 -> 0
6 1 -> 2
6 2 -> 1

1 0
0 0 -> 4
0 1 -> 1
0 2 -> 1
1 0 -> 1
1 1 -> 1
1 2 -> 1
2 0 -> 1
2 1 -> 1
2 2 -> 1
3 0 -> 1
3 1 -> 1
3 2 -> 1
4 0 -> 1
4 1 -> 1
4 2 -> 1
5 0 -> 1
5 1 -> 1
5 2 -> 1
6 0 -> 1
6 1 -> 1
6 2 -> 1

2 1
0 0 -> 5
1 0 -> 2
1 1 -> 2
1 2 -> 2
2 0 -> 2
2 1 -> 2
2 2 -> 2
3 0 -> 2
3 1 -> 2
3 2 -> 2
4 0 -> 2
4 1 -> 2
4 2 -> 2
5 0 -> 2
5 1 -> 2
5 2 -> 2
6 0 -> 2
6 1 -> 2
6 2 -> 2

3 2
0 0 -> 3

4 0
0 0 -> 4

5 1
0 0 -> 5
"""

STEWART_AUTOMATON = read_walnut(TP_TEXT)

SYMBOLS = '01?'


def encode_input(t, n):
    """
    Return the aligned track vector ``(t, n)`` read by the Stewart automaton.
    """
    if isinstance(t, str):
        t = PatternSeq.from_string(t)
    digits = t.digits
    position = encode(n, 3)
    length = max(len(digits), len(position))
    return TrackVector((
        encode(t.value, 7).padded(length),
        position.padded(length),
    ))


def stewart_symbol(t, n):
    """
    Return the symbol the Stewart automaton assigns to position ``n`` of the word coded by
    ``t``, or ``None`` where its table leaves the value undefined.
    """
    output = STEWART_AUTOMATON.eval(encode_input(t, n))
    return None if output is None else SYMBOLS[output]
