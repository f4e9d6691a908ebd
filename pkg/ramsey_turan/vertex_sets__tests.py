import pytest

from ramsey_turan.base import mask_of
from ramsey_turan.vertex_sets import (
    VertexSetException,
    format_vertex_set,
    parse_vertex_set,
    parse_weights,
)


@pytest.mark.parametrize('text, expected', [
    ('0,3,5-7', [0, 3, 5, 6, 7]),
    ('', []),
    (' 1 ', [1]),
    ('2, 4', [2, 4]),
    ('3-3', [3]),
    ('1,1', [1]),
])
def test_parse_vertex_set(text, expected):
    assert parse_vertex_set(text) == mask_of(expected)


def test_parse_vertex_set_reports_column():
    with pytest.raises(VertexSetException) as e:
        parse_vertex_set('1,,2')
    assert str(e.value).startswith("invalid vertex set '1,,2' at column ")
    assert e.value.column is not None


def test_parse_vertex_set_rejects_letters():
    with pytest.raises(VertexSetException) as e:
        parse_vertex_set('a')
    assert str(e.value) == "invalid vertex set 'a' at column 1"


def test_parse_vertex_set_rejects_reversed_range():
    with pytest.raises(VertexSetException) as e:
        parse_vertex_set('5-3')
    assert str(e.value) == "invalid range 5-3 in vertex set '5-3'"


def test_format_vertex_set():
    assert format_vertex_set(mask_of([7, 0, 3])) == '0,3,7'
    assert format_vertex_set(0) == ''


def test_parse_weights():
    assert parse_weights('3,2,2,3,2') == [3, 2, 2, 3, 2]
    assert parse_weights('0') == [0]


def test_parse_weights_requires_a_weight():
    with pytest.raises(VertexSetException) as e:
        parse_weights('')
    assert str(e.value).startswith("invalid weights '' at column ")
