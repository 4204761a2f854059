import itertools
from fractions import Fraction

import pytest

from stewart.exceptions import PreconditionError, UnresolvedHole
from stewart.words import (
    GenericPatternSet, PairClass, PartialWord, Pattern, PatternSeq, UltimatelyPeriodicSeq,
    classify_pair, expand, factors, generic_toeplitz_prefix, hamming, period_exponent,
    stewart_prefix, toeplitz_prefix)

AFE = '01?011010010011010011011010'


def test_pattern_codes():
    assert [p.symbols for p in Pattern] == ['01?', '10?', '0?1', '1?0', '?01', '?10']
    assert [p.value for p in Pattern] == [1, 2, 3, 4, 5, 6]
    assert Pattern.from_letter('e').hole_index == 0
    with pytest.raises(PreconditionError):
        Pattern.from_letter('g')


def test_empty_sequence():
    assert toeplitz_prefix('') == PartialWord('?')


def test_two_stages():
    assert str(toeplitz_prefix('af')) == '01?011010'


def test_three_stages():
    word = toeplitz_prefix('afe')
    assert len(word) == 27
    assert word.symbols == AFE
    assert word.holes == (2,)


def test_expand_requires_single_hole():
    assert expand('01?', Pattern.f).symbols == '01?011010'
    with pytest.raises(PreconditionError):
        expand('0?1?', Pattern.a)
    with pytest.raises(PreconditionError):
        expand('011', Pattern.a)


@pytest.mark.parametrize('t', ['a', 'ce', 'fdb', 'abcd'])
def test_prefix_property(t):
    # T(t) is a prefix of T(tg) for every pattern g
    for g in Pattern:
        longer = toeplitz_prefix(t + g.code)
        assert longer.symbols.startswith(toeplitz_prefix(t).symbols.replace('?', g.symbols[0]))
        assert longer.symbols.count('?') == 1


def test_choral_sequence():
    assert stewart_prefix('(c)', 9) == '001001011'


def test_sierpinski_gasket():
    assert stewart_prefix('(ab)', 9) == '011010010'


def test_unresolved_hole():
    with pytest.raises(UnresolvedHole) as excinfo:
        stewart_prefix('(e)', 5)
    assert excinfo.value.position == 0
    assert stewart_prefix('(e)', 9, fill='0') == '001001101'
    assert stewart_prefix('(e)', 9, fill=1) == '101001101'


def test_hole_beyond_requested_prefix():
    # the hole of a(e) stays at position 2, hence a prefix of length 2 needs no fill
    assert stewart_prefix('a(e)', 2) == '01'
    with pytest.raises(UnresolvedHole):
        stewart_prefix('a(e)', 3)


def test_invalid_fill():
    with pytest.raises(PreconditionError):
        stewart_prefix('(e)', 3, fill='?')


def test_pattern_seq_digits():
    t = PatternSeq.from_string('af')
    assert t.digits == (1, 6)
    assert t.value == 43
    assert PatternSeq.from_value(43) == t
    assert PatternSeq.from_digits([1, 6, 0, 0]) == t
    assert str(PatternSeq.from_value(0)) == ''
    with pytest.raises(PreconditionError):
        PatternSeq.from_digits([1, 0, 6])


def test_ultimately_periodic():
    t = UltimatelyPeriodicSeq.from_string('af(c)')
    assert str(t) == 'af(c)'
    assert str(t.prefix(5)) == 'afccc'
    assert str(UltimatelyPeriodicSeq.constant('d')) == '(d)'
    assert str(UltimatelyPeriodicSeq.from_string('a(aa)').canonical()) == '(a)'
    assert str(UltimatelyPeriodicSeq.from_string('ad(ad)').canonical()) == '(ad)'
    assert UltimatelyPeriodicSeq.from_string('a(e)').resolve_hole(0) == '0'
    assert UltimatelyPeriodicSeq.from_string('a(e)').resolve_hole(1) is None
    with pytest.raises(PreconditionError):
        UltimatelyPeriodicSeq.from_string('abc')


def test_partial_word():
    word = PartialWord('01?')
    assert word.numeric == (0, 1, 2)
    assert PartialWord.from_numeric((2, 1, 0)) == PartialWord('?10')
    assert not word.is_boolean()
    with pytest.raises(PreconditionError):
        PartialWord('012')


def test_generic_pattern_set():
    pattern_set = GenericPatternSet(frozenset(['0?1?']))
    word = generic_toeplitz_prefix(pattern_set, ['0?1?'] * 4, 32)
    assert word.symbols == '001001100011011?001001110011011?'


def test_generic_stewart_patterns():
    word = generic_toeplitz_prefix(GenericPatternSet.stewart(), [Pattern.a, Pattern.f], 9)
    assert word.symbols == '01?011010'


def test_generic_pattern_set_preconditions():
    with pytest.raises(PreconditionError):
        GenericPatternSet(frozenset(['011']))
    with pytest.raises(PreconditionError):
        GenericPatternSet(frozenset(['0?', '0?1']))
    with pytest.raises(PreconditionError):
        GenericPatternSet(frozenset(['0?2']))
    with pytest.raises(PreconditionError):
        generic_toeplitz_prefix(GenericPatternSet.stewart(), ['0?1?'], 9)


def test_hamming_and_pair_classes():
    assert hamming(Pattern.a, Pattern.a) == 0
    assert hamming(Pattern.a, Pattern.b) == 2
    assert hamming(Pattern.a, Pattern.d) == 3
    assert classify_pair(Pattern.a, Pattern.d) is PairClass.InX
    assert classify_pair(Pattern.a, Pattern.c) is PairClass.InY
    for g, h in itertools.product(Pattern, repeat=2):
        assert hamming(g, h) == hamming(h, g)
        assert hamming(g, h) in (0, 2, 3)
        assert (hamming(g, h) == 0) == (g == h)
        classify_pair(g, h)


def test_factors():
    assert factors('01?', 1) == {'0', '1', '?'}
    assert factors('01?011010', 2, boolean_only=True) == {'01', '11', '10'}
    assert factors('0110', 0) == {''}
    with pytest.raises(PreconditionError):
        factors('01', 3)


def test_period_exponent():
    assert period_exponent('0100') == (3, Fraction(4, 3))
    assert period_exponent('000') == (1, Fraction(3))
    assert period_exponent('01') == (2, Fraction(1))
    with pytest.raises(PreconditionError):
        period_exponent('')
