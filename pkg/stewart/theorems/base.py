import logging
from dataclasses import dataclass, field
from typing import Optional

from stewart.conf import app_settings
from stewart.oracles import pattern_sequences, sample_sequences

logger = logging.getLogger('stewart.theorems')


@dataclass
class CheckReport:
    identifier: str
    title: str
    passed: bool = True
    checked: int = 0
    witnesses: list = field(default_factory=list)
    bounds: dict = field(default_factory=dict)
    seed: Optional[int] = None
    details: str = ''

    MAX_WITNESSES = 10

    def add_witness(self, witness):
        self.passed = False
        if len(self.witnesses) < self.MAX_WITNESSES:
            self.witnesses.append(witness)

    def __str__(self):
        status = 'PASS' if self.passed else 'FAIL'
        bounds = ', '.join('{}={}'.format(k, v) for k, v in self.bounds.items())
        lines = ['{} {}: {} ({} cases; {}; seed {})'.format(
            status, self.identifier, self.title, self.checked, bounds or 'no bounds', self.seed)]
        if self.details:
            lines.append('  ' + self.details)
        lines.extend('  witness: {}'.format(w) for w in self.witnesses)
        return '\n'.join(lines)


class TheoremCheck:
    """
    Theorem checks verify a statement about Stewart words by brute force, on finite prefixes.

    Each check is registered with its full path in ``settings.STEWART_THEOREM_CHECKS`` and
    addressed by its unique ``identifier``. Most checks only need to implement
    :meth:`check_sequence`, which is called for every pattern sequence of the swept lengths:
    all sequences of length ``minimum_length`` up to the requested length, and, when running
    with default bounds, seeded samples of the lengths in ``STEWART_SAMPLE_LENGTHS``.
    """
    minimum_length = 0

    def __init__(self):
        assert hasattr(self, 'identifier'), "Each theorem check class requires a unique identifier"

    @property
    def title(self):
        return self.__doc__.strip().splitlines()[0] if self.__doc__ else self.identifier

    def sequences(self, length, seed, sampled):
        """
        Yield the pattern sequences to check, exhaustively up to ``length``, then sampled.
        """
        for ell in range(self.minimum_length, length + 1):
            yield from pattern_sequences(ell)
        if sampled:
            for ell in app_settings.SAMPLE_LENGTHS:
                if ell > length:
                    yield from sample_sequences(ell, app_settings.SAMPLE_SIZE, seed)

    def check_sequence(self, t):
        """
        Return a witness violating the statement for the pattern sequence ``t``, or ``None``.
        """
        raise NotImplementedError

    def run(self, length=None, seed=None):
        sampled = length is None
        length = app_settings.CHECK_LENGTH if length is None else length
        seed = app_settings.SEED if seed is None else seed
        report = CheckReport(self.identifier, self.title, seed=seed)
        report.bounds['len'] = length
        if sampled:
            report.bounds['sampled'] = [ell for ell in app_settings.SAMPLE_LENGTHS if ell > length]
            report.bounds['samples'] = app_settings.SAMPLE_SIZE
        self.perform(report, length, seed, sampled)
        logger.info("check %s: %s after %d cases", self.identifier,
                    'passed' if report.passed else 'failed', report.checked)
        return report

    def perform(self, report, length, seed, sampled):
        for t in self.sequences(length, seed, sampled):
            report.checked += 1
            witness = self.check_sequence(t)
            if witness is not None:
                report.add_witness(witness)
