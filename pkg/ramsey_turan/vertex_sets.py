"""
Vertex sets on the command line are written as comma-separated indices and ranges, e.g. ``0,3,5-7``.
"""
from pyparsing import (
    Group,
    Opt,
    ParseException,
    StringEnd,
    Suppress,
    Word,
    ZeroOrMore,
    nums,
)

from ramsey_turan.base import (
    RamseyTuranException,
    members,
)


class VertexSetException(RamseyTuranException):
    def __init__(self, message, column=None):
        super().__init__(message)
        self.column = column


def _create_grammar():
    number = Word(nums).set_name('vertex').set_parse_action(lambda token: int(token[0]))
    item = Group(number + Opt(Suppress('-') + number))
    items = item + ZeroOrMore(Suppress(',') + item)
    return Opt(items) + StringEnd()


_grammar = _create_grammar()


def _create_weights_grammar():
    weight = Word(nums).set_name('weight').set_parse_action(lambda token: int(token[0]))
    return weight + ZeroOrMore(Suppress(',') + weight) + StringEnd()


_weights_grammar = _create_weights_grammar()


def parse_vertex_set(text):
    text = text.strip()
    try:
        parsed = _grammar.parse_string(text, parse_all=True)
    except ParseException as e:
        raise VertexSetException(f'invalid vertex set {text!r} at column {e.col}', column=e.col) from e

    result = 0
    for item in parsed:
        if len(item) == 1:
            result |= 1 << item[0]
        else:
            first, last = item
            if first > last:
                raise VertexSetException(f'invalid range {first}-{last} in vertex set {text!r}')
            for v in range(first, last + 1):
                result |= 1 << v
    return result


def parse_weights(text):
    """
    Blow-up weights, a nonempty comma-separated list of nonnegative integers.
    """
    text = text.strip()
    try:
        return list(_weights_grammar.parse_string(text, parse_all=True))
    except ParseException as e:
        raise VertexSetException(f'invalid weights {text!r} at column {e.col}', column=e.col) from e


def format_vertex_set(mask):
    return ','.join(str(v) for v in members(mask))
