"""
Reader and writer for the plain text automaton format of the Walnut prover.

A file starts with one numeration tag per track, for instance ``lsd_7 lsd_3``. It is followed by
state blocks, each headed by a line ``state output`` and followed by transition lines
``d1 d2 ... -> target``. The first block is the initial state. Automata without tracks are
written as ``true`` or ``false``.
"""
import re

import numpy as np

from stewart.automata.base import MultiTrackDfa, MultiTrackDfao, symbol_table
from stewart.exceptions import PreconditionError, WalnutFormatError

TAG_RE = re.compile(r'^lsd_(\d+)$')

TRANSITION_RE = re.compile(r'^(?P<digits>(\d+\s+)*\d+)?\s*->\s*(?P<target>-?\d+)$')


def _parse_header(line, lineno):
    bases = []
    for tag in line.split():
        match = TAG_RE.match(tag)
        if match is None:
            if tag.startswith('msd_'):
                raise WalnutFormatError("Most significant digit first numeration is not supported.", lineno)
            raise WalnutFormatError("Unknown numeration tag '{}'.".format(tag), lineno)
        base = int(match.group(1))
        if base < 2:
            raise WalnutFormatError("Base {} is out of range.".format(base), lineno)
        bases.append(base)
    return tuple(bases)


def _parse_blocks(lines, bases):
    blocks = []
    for lineno, line in lines:
        if '->' in line:
            if not blocks:
                raise WalnutFormatError("Transition outside of a state block.", lineno)
            match = TRANSITION_RE.match(line)
            if match is None:
                raise WalnutFormatError("Malformed transition '{}'.".format(line), lineno)
            digits = tuple(int(d) for d in (match.group('digits') or '').split())
            if len(digits) != len(bases):
                msg = "Expected {} digits, got {}."
                raise WalnutFormatError(msg.format(len(bases), len(digits)), lineno)
            for digit, base in zip(digits, bases):
                if digit >= base:
                    raise WalnutFormatError("Digit {} is out of range for base {}.".format(digit, base), lineno)
            transitions = blocks[-1][2]
            if digits in transitions:
                raise WalnutFormatError("Duplicate transition on {}.".format(list(digits)), lineno)
            transitions[digits] = (int(match.group('target')), lineno)
        else:
            fields = line.split()
            if len(fields) != 2 or not all(re.match(r'^-?\d+$', f) for f in fields):
                raise WalnutFormatError("Malformed state line '{}'.".format(line), lineno)
            state, output = int(fields[0]), int(fields[1])
            if any(block[0] == state for block in blocks):
                raise WalnutFormatError("State {} is declared twice.".format(state), lineno)
            blocks.append((state, output, {}))
    if not blocks:
        raise WalnutFormatError("The automaton declares no states.")
    return blocks


def read_walnut(text, complete=True, recognizer=False):
    """
    Parse an automaton from Walnut's text format.

    Missing transitions lead into an extra sink state whose output is undefined (or which
    rejects, for a recognizer), unless ``complete`` is ``False``, in which case they are an
    error. With ``recognizer`` set, a :class:`MultiTrackDfa` accepting at the states with
    output ``1`` is returned, otherwise a :class:`MultiTrackDfao`.
    """
    lines = [(n, line.strip()) for n, line in enumerate(text.splitlines(), 1)]
    lines = [(n, line) for n, line in lines if line and not line.startswith('#')]
    if not lines:
        raise WalnutFormatError("The text is empty.")
    lineno, header = lines[0]
    if header in ('true', 'false'):
        if len(lines) > 1:
            raise WalnutFormatError("Trailing content after a constant automaton.", lines[1][0])
        return (MultiTrackDfa.universal if header == 'true' else MultiTrackDfa.empty)()
    bases = _parse_header(header, lineno)
    blocks = _parse_blocks(lines[1:], bases)
    index = {block[0]: n for n, block in enumerate(blocks)}
    table = [tuple(column) for column in symbol_table(bases).tolist()]
    sink = len(blocks)
    rows = []
    missing = False
    for state, _, transitions in blocks:
        row = []
        for column in table:
            if column in transitions:
                target, lineno = transitions[column]
                if target not in index:
                    raise WalnutFormatError("Transition into undeclared state {}.".format(target), lineno)
                row.append(index[target])
            elif complete:
                row.append(sink)
                missing = True
            else:
                msg = "State {} has no transition on {}."
                raise WalnutFormatError(msg.format(state, list(column)))
        rows.append(row)
    outputs = [block[1] for block in blocks]
    if missing:
        rows.append([sink] * len(table))
    transitions = np.array(rows, dtype=np.int64).reshape(len(rows), len(table))
    if recognizer:
        accepting = [o == 1 for o in outputs] + ([False] if missing else [])
        return MultiTrackDfa(bases, transitions, np.array(accepting, dtype=bool))
    if missing:
        outputs.append(None)
    return MultiTrackDfao(bases, transitions, outputs)


def write_walnut(m):
    """
    Serialize a recognizer or an automaton with output into Walnut's text format. States with
    undefined output, and transitions into them, are omitted.
    """
    if not m.num_tracks:
        if not isinstance(m, MultiTrackDfa):
            raise PreconditionError("An automaton with output requires at least one track.")
        return 'true\n' if not m.is_empty() else 'false\n'
    if isinstance(m, MultiTrackDfa):
        outputs = [int(flag) for flag in m.accepting.tolist()]
    else:
        outputs = list(m.outputs)
    if outputs[0] is None:
        raise PreconditionError("The initial state must have a defined output.")
    columns = symbol_table(m.bases).tolist()
    header = '{}\n'.format(' '.join('lsd_{}'.format(b) for b in m.bases))
    blocks = []
    for state, output in enumerate(outputs):
        if output is None:
            continue
        lines = ['{} {}'.format(state, output)]
        for column, target in zip(columns, m.transitions[state].tolist()):
            if outputs[target] is not None:
                lines.append('{} -> {}'.format(' '.join(str(d) for d in column), target))
        blocks.append('\n'.join(lines) + '\n')
    return header + '\n'.join(blocks)
