"""
Graphviz rendering of automata. Dead states of recognizers, and states with undefined output
of automata with output, are left out.
"""
from collections import defaultdict

from stewart.automata.base import MultiTrackDfa, symbol_table


def _collapse(columns, bases):
    """
    Merge groups of edge labels which run through every digit of one track into a single
    label carrying a ``*`` on that track.
    """
    labels = {tuple(str(d) for d in column) for column in columns}
    for track, base in enumerate(bases):
        groups = defaultdict(set)
        for label in labels:
            groups[label[:track] + label[track + 1:]].add(label[track])
        merged = set()
        for rest, digits in groups.items():
            if len(digits) == base and '*' not in digits:
                merged.add(rest[:track] + ('*',) + rest[track:])
            else:
                merged.update(rest[:track] + (d,) + rest[track:] for d in digits)
        labels = merged
    return sorted('[{}]'.format(','.join(label)) for label in labels)


def export_dot(m, name='automaton', collapse=True):
    is_recognizer = isinstance(m, MultiTrackDfa)
    if is_recognizer:
        live = (m.distances() >= 0).tolist()
    else:
        live = [o is not None for o in m.outputs]
    lines = ['digraph {} {{'.format(name), '  rankdir=LR;', '  node [shape=circle];']
    if live[0]:
        lines.append('  init [shape=point];')
        lines.append('  init -> 0;')
    columns = symbol_table(m.bases).tolist()
    for state in range(m.num_states):
        if not live[state]:
            continue
        if is_recognizer:
            shape = 'doublecircle' if m.accepting[state] else 'circle'
            lines.append('  {} [label="{}", shape={}];'.format(state, state, shape))
        else:
            lines.append('  {} [label="{}/{}"];'.format(state, state, m.outputs[state]))
        edges = defaultdict(list)
        for column, target in zip(columns, m.transitions[state].tolist()):
            if live[target]:
                edges[target].append(column)
        for target, labels in sorted(edges.items()):
            if collapse:
                text = ', '.join(_collapse(labels, m.bases))
            else:
                text = ', '.join('[{}]'.format(','.join(str(d) for d in c)) for c in labels)
            lines.append('  {} -> {} [label="{}"];'.format(state, target, text))
    lines.append('}')
    return '\n'.join(lines) + '\n'
