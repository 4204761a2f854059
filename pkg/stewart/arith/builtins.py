"""
Predicates defined by tuple regexes, preloaded into every prover session.

``pref(t1, t2)``
    the pattern sequence ``t1`` is a prefix of ``t2``; trailing zeros are ignored.
``link(x, t)``
    ``x = 3^|t|``.
``bnd(x, y)``
    ``y = 3^ceil(log3 x)`` for ``x >= 1``.
``power3(x)``
    ``x`` is a power of 3.
``differ(t, u, x)``
    ``x = 3^j`` where ``j`` is the first index at which the pattern pair is not in class X.
"""
from collections import namedtuple
from functools import lru_cache

from stewart.arith.regex import compile_regex, parse_regex

RegexPredicate = namedtuple('RegexPredicate', ['name', 'tags', 'regex', 'variables'])

X_CLASS = ('[1,1,0]|[1,4,0]|[1,5,0]|[2,2,0]|[2,3,0]|[2,6,0]|'
           '[3,2,0]|[3,3,0]|[3,6,0]|[4,1,0]|[4,4,0]|[4,5,0]|'
           '[5,1,0]|[5,4,0]|[5,5,0]|[6,2,0]|[6,3,0]|[6,6,0]')

Y_CLASS = ('[1,2,1]|[1,3,1]|[1,6,1]|[2,1,1]|[2,4,1]|[2,5,1]|'
           '[3,1,1]|[3,4,1]|[3,5,1]|[4,2,1]|[4,3,1]|[4,6,1]|'
           '[5,2,1]|[5,3,1]|[5,6,1]|[6,1,1]|[6,4,1]|[6,5,1]')

ANY_PAIR = '|'.join('[{},{},0]'.format(a, b) for a in range(1, 7) for b in range(1, 7))

PREDICATES = (
    RegexPredicate(
        'pref', ('lsd_7', 'lsd_7'),
        '([1,1]|[2,2]|[3,3]|[4,4]|[5,5]|[6,6])*([0,1]|[0,2]|[0,3]|[0,4]|[0,5]|[0,6])*[0,0]*',
        ('t1', 't2'),
    ),
    RegexPredicate(
        'link', ('lsd_3', 'lsd_7'),
        '([0,1]|[0,2]|[0,3]|[0,4]|[0,5]|[0,6])*[1,0][0,0]*',
        ('x', 't'),
    ),
    RegexPredicate(
        'bnd', ('lsd_3', 'lsd_3'),
        '([0,0]|[1,0]|[2,0])*[2,0][0,1][0,0]*|'
        '([0,0]|[1,0]|[2,0])*([1,0]|[2,0])([0,0]|[1,0]|[2,0])*[1,0][0,1][0,0]*|'
        '[0,0]*[1,1][0,0]*',
        ('x', 'y'),
    ),
    RegexPredicate('power3', ('lsd_3',), '0*10*', ('x',)),
    RegexPredicate(
        'differ', ('lsd_7', 'lsd_7', 'lsd_3'),
        '({})*({})({})*[0,0,0]*'.format(X_CLASS, Y_CLASS, ANY_PAIR),
        ('t', 'u', 'x'),
    ),
)


def tag_bases(tags):
    return tuple(int(tag.split('_', 1)[1]) for tag in tags)


@lru_cache(maxsize=None)
def builtin(name):
    """
    Return the compiled recognizer of the named predicate, together with its variable names.
    """
    for predicate in PREDICATES:
        if predicate.name == name:
            regex = parse_regex(predicate.regex, tag_bases(predicate.tags))
            return compile_regex(regex), predicate.variables
    raise KeyError(name)


def builtin_pref():
    return builtin('pref')[0]


def builtin_link():
    return builtin('link')[0]


def builtin_bnd():
    return builtin('bnd')[0]


def builtin_power3():
    return builtin('power3')[0]


def builtin_differ():
    return builtin('differ')[0]
