"""
Syntax tree of the first-order query language.
"""
from dataclasses import dataclass, field
from typing import Optional, Tuple


@dataclass(frozen=True)
class Position:
    line: int = 0
    column: int = 0


class Node:
    def variables(self):
        """
        The free variables of this node.
        """
        raise NotImplementedError


# terms

@dataclass(frozen=True)
class Var(Node):
    name: str
    position: Position = field(default=Position(), compare=False, repr=False)

    def variables(self):
        return frozenset([self.name])

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Const(Node):
    value: int
    position: Position = field(default=Position(), compare=False, repr=False)

    def variables(self):
        return frozenset()

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Add(Node):
    left: Node
    right: Node
    position: Position = field(default=Position(), compare=False, repr=False)

    def variables(self):
        return self.left.variables() | self.right.variables()

    def __str__(self):
        return '({}+{})'.format(self.left, self.right)


@dataclass(frozen=True)
class Sub(Node):
    left: Node
    right: Node
    position: Position = field(default=Position(), compare=False, repr=False)

    def variables(self):
        return self.left.variables() | self.right.variables()

    def __str__(self):
        return '({}-{})'.format(self.left, self.right)


@dataclass(frozen=True)
class Mul(Node):
    factor: int
    term: Node
    position: Position = field(default=Position(), compare=False, repr=False)

    def variables(self):
        return self.term.variables()

    def __str__(self):
        return '{}*{}'.format(self.factor, self.term)


@dataclass(frozen=True)
class Div(Node):
    term: Node
    divisor: int
    position: Position = field(default=Position(), compare=False, repr=False)

    def variables(self):
        return self.term.variables()

    def __str__(self):
        return '{}/{}'.format(self.term, self.divisor)


# word operands

@dataclass(frozen=True)
class WordIndex(Node):
    word: str
    indices: Tuple[Node, ...]
    position: Position = field(default=Position(), compare=False, repr=False)

    def variables(self):
        return frozenset().union(*(index.variables() for index in self.indices))

    def __str__(self):
        return self.word + ''.join('[{}]'.format(index) for index in self.indices)


@dataclass(frozen=True)
class Output(Node):
    value: int
    position: Position = field(default=Position(), compare=False, repr=False)

    def variables(self):
        return frozenset()

    def __str__(self):
        return '@{}'.format(self.value)


# formulas

@dataclass(frozen=True)
class Compare(Node):
    op: str
    left: Node
    right: Node
    position: Position = field(default=Position(), compare=False, repr=False)

    def variables(self):
        return self.left.variables() | self.right.variables()

    def __str__(self):
        return '{}{}{}'.format(self.left, self.op, self.right)


@dataclass(frozen=True)
class WordCompare(Node):
    op: str
    left: Node
    right: Node
    position: Position = field(default=Position(), compare=False, repr=False)

    def variables(self):
        return self.left.variables() | self.right.variables()

    def __str__(self):
        return '{}{}{}'.format(self.left, self.op, self.right)


@dataclass(frozen=True)
class Call(Node):
    name: str
    args: Tuple[Node, ...]
    position: Position = field(default=Position(), compare=False, repr=False)

    def variables(self):
        return frozenset().union(*(arg.variables() for arg in self.args))

    def __str__(self):
        return '${}({})'.format(self.name, ','.join(str(a) for a in self.args))


@dataclass(frozen=True)
class Not(Node):
    body: Node
    position: Position = field(default=Position(), compare=False, repr=False)

    def variables(self):
        return self.body.variables()

    def __str__(self):
        return '~{}'.format(self.body)


@dataclass(frozen=True)
class Binary(Node):
    op: str
    left: Node
    right: Node
    position: Position = field(default=Position(), compare=False, repr=False)

    def variables(self):
        return self.left.variables() | self.right.variables()

    def __str__(self):
        return '({}{}{})'.format(self.left, self.op, self.right)


@dataclass(frozen=True)
class Quantified(Node):
    kind: str
    names: Tuple[str, ...]
    body: Node
    position: Position = field(default=Position(), compare=False, repr=False)

    def variables(self):
        return self.body.variables() - frozenset(self.names)

    def __str__(self):
        return '({}{} {})'.format(self.kind, ','.join(self.names), self.body)


@dataclass(frozen=True)
class Query:
    formula: Node
    default_base: Optional[int] = None

    def variables(self):
        return self.formula.variables()

    def __str__(self):
        prefix = '?lsd_{} '.format(self.default_base) if self.default_base else ''
        return prefix + str(self.formula)
