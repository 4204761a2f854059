"""
The default theorem checks, one per statement about Stewart words.
"""
import itertools

import numpy as np

from stewart import oracles
from stewart.automata.stewart import STEWART_AUTOMATON
from stewart.conf import app_settings
from stewart.theorems.base import TheoremCheck
from stewart.words import (
    PairClass, PartialWord, Pattern, PatternSeq, UltimatelyPeriodicSeq, classify_pair, factors,
    period_exponent, stewart_prefix, toeplitz_prefix)

PALINDROMES = frozenset(PartialWord(p) for p in (
    '', '0', '1', '?', '00', '11', '010', '101', '0110', '1001',
    '00100', '11011', '010010', '101101', '0110110', '1001001',
))


def square_order_allowed(n):
    while n % 3 == 0:
        n //= 3
    return n in (1, 2)


class StewartAutomatonCheck(TheoremCheck):
    """
    The Stewart automaton computes T(t)[n] for every n < 3^|t|
    """
    identifier = 'stewart'

    def check_sequence(self, t):
        size = 3 ** len(t)
        positions = np.arange(size)
        states = np.zeros(size, dtype=np.int64)
        for k, letter in enumerate(t):
            digits = (positions // 3 ** k) % 3
            states = STEWART_AUTOMATON.transitions[states, letter.value * 3 + digits]
        computed = np.array([-1 if o is None else o for o in STEWART_AUTOMATON.outputs])[states]
        expected = np.array(toeplitz_prefix(t).numeric)
        mismatches = np.flatnonzero(computed != expected)
        if len(mismatches):
            return {'t': str(t), 'position': int(mismatches[0])}


class PalindromeCheck(TheoremCheck):
    """
    Palindromic factors are exactly the sixteen words up to length 7
    """
    identifier = 'palindromes'

    def check_sequence(self, t):
        found = oracles.find_palindromes(t)
        unexpected = found - PALINDROMES
        missing = PALINDROMES - found if len(t) >= 4 else set()
        if unexpected or missing:
            return {
                't': str(t),
                'unexpected': sorted(str(p) for p in unexpected),
                'missing': sorted(str(p) for p in missing),
            }


class CubeCheck(TheoremCheck):
    """
    Finite Stewart words contain no cubes
    """
    identifier = 'cubes'

    def check_sequence(self, t):
        cube = oracles.find_cube(t)
        if cube is not None:
            return {'t': str(t), 'position': cube[0], 'period': cube[1]}


class CriticalExponentCheck(TheoremCheck):
    """
    A factor of exponent 3 - 3^(3-|t|) occurs for |t| >= 4
    """
    identifier = 'critexp'
    minimum_length = 4

    def check_sequence(self, t):
        found = oracles.critexp_factor(t)
        if found is None:
            return {'t': str(t), 'factor': None}
        position, period, length = found
        factor = toeplitz_prefix(t).symbols[position:position + length]
        least, exponent = period_exponent(factor)
        if least != period or exponent != oracles.critexp_value(len(t)):
            return {'t': str(t), 'position': position, 'exponent': exponent}


class SquareOrderCheck(TheoremCheck):
    """
    Squares have orders 3^i or 2*3^i, and short ones occur everywhere
    """
    identifier = 'squares'

    def check_sequence(self, t):
        orders = oracles.square_orders(t)
        forbidden = sorted(n for n in orders if not square_order_allowed(n))
        missing = sorted(
            n for n in range(1, 3 ** len(t) // 36 + 1)
            if square_order_allowed(n) and n not in orders)
        if forbidden or missing:
            return {'t': str(t), 'forbidden': forbidden, 'missing': missing}


class ComplexityCheck(TheoremCheck):
    """
    There are 2n boolean factors of length n, two of them right-special
    """
    identifier = 'complexity'
    minimum_length = 4

    def check_sequence(self, t):
        for n in range(1, 3 ** (len(t) - 2) + 1):
            count = oracles.boolean_factor_count(t, n)
            special = oracles.right_special(t, n)
            if count != 2 * n or len(special) != 2:
                return {'t': str(t), 'n': n, 'factors': count, 'right_special': sorted(special)}


class PatternCheck(TheoremCheck):
    """
    Finite Stewart words avoid the pattern xxyyxx
    """
    identifier = 'xxyyxx'

    def check_sequence(self, t):
        found = oracles.find_xxyyxx(t)
        if found is not None:
            return {'t': str(t), 'i': found[0], 'm': found[1], 'n': found[2]}


class ProgressionCheck(TheoremCheck):
    """
    Neither 01010 nor 10101 occurs in arithmetic progression
    """
    identifier = 'ap'

    def check_sequence(self, t):
        found = oracles.find_ap_alternation(t)
        if found is not None:
            return {'t': str(t), 'i': found[0], 'm': found[1]}


class CommonFactorCheck(TheoremCheck):
    """
    Common factors of two Stewart words are governed by the pattern pair classes
    """
    identifier = 'common'
    minimum_length = 2
    exhaustive_length = 4

    def __init__(self):
        super().__init__()
        self._factors = {}

    def _factor_set(self, t, n):
        key = (t, n)
        if key not in self._factors:
            word = toeplitz_prefix(t)
            self._factors[key] = factors(word, n, True) if n <= len(word) else frozenset()
        return self._factors[key]

    def check_pair(self, t, u):
        classes = [classify_pair(g, h) for g, h in zip(t, u)]
        if all(c is PairClass.InX for c in classes):
            n = 3 ** (len(t) - 2)
            if self._factor_set(t, n).isdisjoint(self._factor_set(u, n)):
                return {'t': str(t), 'u': str(u), 'shorter_than': n}
        else:
            j = classes.index(PairClass.InY)
            n = 3 ** (j + 2) + 1
            common = self._factor_set(t, n) & self._factor_set(u, n)
            if common:
                return {'t': str(t), 'u': str(u), 'first_y': j, 'factor': min(common)}

    def pairs(self, length, seed, sampled):
        for ell in range(self.minimum_length, min(length, self.exhaustive_length) + 1):
            sequences = list(oracles.pattern_sequences(ell))
            yield from itertools.combinations_with_replacement(sequences, 2)
        lengths = list(range(self.exhaustive_length + 1, length + 1))
        if sampled:
            lengths += [ell for ell in app_settings.SAMPLE_LENGTHS if ell > length]
        for ell in lengths:
            size = app_settings.SAMPLE_SIZE
            yield from zip(oracles.sample_sequences(ell, size, seed), oracles.sample_sequences(ell, size, seed + 1))

    def perform(self, report, length, seed, sampled):
        for t, u in self.pairs(length, seed, sampled):
            report.checked += 1
            witness = self.check_pair(t, u)
            if witness is not None:
                report.add_witness(witness)
            if len(self._factors) > 100000:
                self._factors.clear()


class AutomaticityCheck(TheoremCheck):
    """
    Ultimately periodic pattern sequences give automata they can be read back from
    """
    identifier = 'automatic'
    samples = 20
    positions = 81

    def periodic_sequences(self, seed):
        yield UltimatelyPeriodicSeq.from_string('(ad)')
        yield UltimatelyPeriodicSeq.from_string('(c)')
        rng = np.random.default_rng(seed)
        produced = 0
        while produced < self.samples:
            preperiod = rng.integers(1, 7, size=int(rng.integers(0, 3))).tolist()
            period = rng.integers(1, 7, size=int(rng.integers(1, 4))).tolist()
            if all(Pattern(c) in (Pattern.e, Pattern.f) for c in period):
                continue
            produced += 1
            yield UltimatelyPeriodicSeq(PatternSeq(tuple(preperiod)), PatternSeq(tuple(period)))

    def perform(self, report, length, seed, sampled):
        report.bounds['samples'] = self.samples
        for t in self.periodic_sequences(seed):
            report.checked += 1
            automaton = oracles.dfao_from_periodic(t)
            word = ''.join(str(automaton.eval((n,))) for n in range(self.positions))
            if word != stewart_prefix(t, self.positions):
                report.add_witness({'t': str(t), 'word': word})
                continue
            reconstructed = oracles.reconstruct_pattern_seq(automaton)
            if reconstructed != t.canonical():
                report.add_witness({'t': str(t), 'reconstructed': str(reconstructed)})


class CoverageCheck(TheoremCheck):
    """
    Factors of length n <= 3^(|t|-2) of T(u) already occur in T(t)
    """
    identifier = 'thm3'
    minimum_length = 2
    extension = 2

    def perform(self, report, length, seed, sampled):
        report.bounds['extension'] = self.extension
        for ell in range(self.minimum_length, length - self.extension + 1):
            for t in oracles.pattern_sequences(ell):
                for tail in oracles.pattern_sequences(self.extension):
                    u = t + tail
                    report.checked += 1
                    for n in range(1, 3 ** (ell - 2) + 1):
                        if not oracles.check_factor_coverage(t, u, n):
                            missing = min(oracles.missing_factors(t, u, n))
                            report.add_witness({'t': str(t), 'u': str(u), 'n': n, 'factor': missing})
                            break


class CoverageOptimalityCheck(TheoremCheck):
    """
    The coverage bound 3^(|t|-2) can not be raised by one
    """
    identifier = 'coverage-optimal'
    minimum_length = 3
    extension = 2

    def perform(self, report, length, seed, sampled):
        report.bounds['extension'] = self.extension
        for ell in range(self.minimum_length, length - self.extension + 1):
            report.checked += 1
            found = oracles.find_coverage_counterexample(ell, self.extension)
            if found is None:
                report.add_witness({'length': ell, 'counterexample': None})
            else:
                t, u, factor = found
                report.details += 'length {}: {} misses {} of {}. '.format(ell, t, factor, u)
        report.details = report.details.strip()
