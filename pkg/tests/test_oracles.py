from fractions import Fraction

import numpy as np
import pytest

from stewart.exceptions import PreconditionError, UnresolvedHole
from stewart.oracles import (
    boolean_factor_count, check_factor_coverage, choral_prefix, critexp_factor, critexp_value,
    dfao_from_periodic, find_ap_alternation, find_cube, find_palindromes, find_xxyyxx,
    longest_common_factor, missing_factors, pattern_sequences, reconstruct_pattern_seq,
    repetition_table, right_special, sample_sequences, sierpinski_prefix, square_orders,
    verify_critexp)
from stewart.words import PartialWord, PatternSeq, UltimatelyPeriodicSeq, toeplitz_prefix


def test_pattern_sequences():
    sequences = list(pattern_sequences(2))
    assert len(sequences) == 36
    assert str(sequences[0]) == 'aa'
    assert str(sequences[-1]) == 'ff'
    assert list(pattern_sequences(0)) == [PatternSeq()]


def test_sample_sequences_are_reproducible():
    first = sample_sequences(5, 10, 7)
    assert first == sample_sequences(5, 10, 7)
    assert all(len(t) == 5 for t in first)


def test_repetition_table():
    table = repetition_table('0101')
    assert table.shape == (4, 4)
    assert table[0].tolist() == [0, 0, 0, 0]
    assert table[2, 0] == 2
    assert table[1, 0] == 0


def test_find_cube():
    assert find_cube('000') == (0, 1)
    assert find_cube('01') is None
    # the hole breaks every repetition
    assert find_cube('0?0?0?') is None


def test_stewart_words_are_cube_free():
    for t in pattern_sequences(3):
        assert find_cube(t) is None, t


def test_critexp():
    assert critexp_value(4) == Fraction(8, 3)
    assert critexp_value(5) == Fraction(26, 9)
    position, period, length = critexp_factor('abcd')
    assert (period, length) == (3, 8)
    word = toeplitz_prefix('abcd').symbols
    factor = word[position:position + length]
    assert '?' not in factor
    assert factor[:length - period] == factor[period:]
    with pytest.raises(PreconditionError):
        critexp_factor('abc')


def test_critexp_on_samples():
    for t in sample_sequences(4, 10, 1) + sample_sequences(5, 5, 1):
        assert verify_critexp(t), t


def test_square_orders():
    assert square_orders('01') == set()
    assert square_orders('0101') == {2}
    orders = square_orders(toeplitz_prefix('afe'))
    assert orders <= {1, 2, 3, 6, 9}
    assert 1 in orders


def test_palindromes_are_short():
    assert PartialWord('010') in find_palindromes(PatternSeq.from_string('af'))
    assert PartialWord('') in find_palindromes(PatternSeq.from_string('a'))
    for t in pattern_sequences(3):
        assert max(len(p) for p in find_palindromes(t)) <= 7


def test_find_xxyyxx():
    assert find_xxyyxx('001100') == (0, 1, 1)
    assert find_xxyyxx('0000') == (0, 1, 0)
    assert find_xxyyxx('01') is None
    for t in pattern_sequences(2):
        assert find_xxyyxx(t) is None, t


def test_find_ap_alternation():
    assert find_ap_alternation('01010') == (0, 1)
    assert find_ap_alternation('001000100') == (0, 2)
    assert find_ap_alternation('00000') is None
    assert find_ap_alternation(toeplitz_prefix('afe')) is None


def test_longest_common_factor():
    assert longest_common_factor('0110', '110') == 3
    assert longest_common_factor('0?1', '01') == 1
    assert longest_common_factor('', '01') == 0


def test_boolean_factor_count():
    assert boolean_factor_count('af', 1) == 2
    assert boolean_factor_count(PatternSeq.from_string('afe'), 3) == len(
        {w for w in (toeplitz_prefix('afe').symbols[i:i + 3] for i in range(25)) if '?' not in w})
    with pytest.raises(PreconditionError):
        boolean_factor_count('af', 2)
    with pytest.raises(PreconditionError):
        boolean_factor_count('a', 1)


def test_right_special():
    assert right_special('afe', 1) == {'0', '1'}
    for t in sample_sequences(4, 5, 3):
        for n in range(1, 10):
            assert len(right_special(t, n)) == 2, (t, n)


def test_missing_factors():
    assert missing_factors('a', 'aa', 2) == {'00', '10', '11'}
    assert not missing_factors('aa', 'aab', 2)


def test_check_factor_coverage():
    assert check_factor_coverage('af', 'afe', 1)
    with pytest.raises(PreconditionError):
        check_factor_coverage('ab', 'afe', 1)
    with pytest.raises(PreconditionError):
        check_factor_coverage('af', 'afe', 2)


@pytest.mark.parametrize('t, prefix', [('(c)', choral_prefix), ('(ab)', sierpinski_prefix)])
def test_dfao_from_periodic(t, prefix):
    automaton = dfao_from_periodic(t)
    expected = prefix(81)
    assert [automaton.eval((n,)) for n in range(81)] == [int(ch) for ch in expected]


def test_dfao_from_periodic_fills_holes():
    with pytest.raises(UnresolvedHole):
        dfao_from_periodic('(e)')
    automaton = dfao_from_periodic('(e)', fill=1)
    assert ''.join(str(automaton.eval((n,))) for n in range(9)) == '101001101'


def test_dfao_from_periodic_agrees_with_prefixes():
    t = UltimatelyPeriodicSeq.from_string('a(bd)')
    automaton = dfao_from_periodic(t)
    word = toeplitz_prefix(t.prefix(5))
    for n in np.flatnonzero(np.array(list(word.symbols)) != '?').tolist():
        assert automaton.eval((n,)) == int(word[n])


@pytest.mark.parametrize('text', ['(c)', '(ab)', 'a(bd)', 'fc(ad)'])
def test_reconstruct_pattern_seq(text):
    t = UltimatelyPeriodicSeq.from_string(text)
    assert reconstruct_pattern_seq(dfao_from_periodic(t)) == t.canonical()


def test_reconstruct_rejects_other_bases():
    with pytest.raises(PreconditionError):
        reconstruct_pattern_seq(dfao_from_periodic('(c)').rewire((3, 3), (0,)))
