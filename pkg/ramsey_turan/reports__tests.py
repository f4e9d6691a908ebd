from fractions import Fraction

from tri_struct import Struct

from ramsey_turan.reports import (
    strip_stats,
    to_csv,
    to_json,
)


def test_to_json_sorts_keys_and_drops_stats():
    value = Struct(s=2, n=5, stats=Struct(nodes=17), rows=[Struct(g=Fraction(29), stats=None)])
    assert to_json(value) == '{\n  "n": 5,\n  "rows": [\n    {\n      "g": "29"\n    }\n  ],\n  "s": 2\n}\n'


def test_to_json_keeps_stats_on_request():
    assert '"stats"' in to_json(Struct(n=5, stats=Struct(nodes=17)), stats=True)


def test_to_json_fractions_and_bytes():
    assert to_json(dict(f=Fraction(9, 20), code=b'Dhc')) == '{\n  "code": "Dhc",\n  "f": "9/20"\n}\n'


def test_strip_stats_keeps_the_type():
    stripped = strip_stats(Struct(a=1, stats=2))
    assert isinstance(stripped, Struct)
    assert stripped == dict(a=1)


def test_to_csv():
    assert to_csv([Struct(x=1, y=None, z=True)]) == 'x,y,z\n1,,true\n'


def test_to_csv_cells():
    rows = [
        dict(a=0.5, b=False, c=[1, 2], d=Fraction(1, 5)),
        dict(a=2.0, b=True, c=dict(y=1, x=2), d=Fraction(3)),
    ]
    assert to_csv(rows) == 'a,b,c,d\n0.5,false,"[1, 2]",1/5\n2.0,true,"{""x"": 2, ""y"": 1}",3\n'


def test_to_csv_with_columns():
    assert to_csv([dict(a=1, b=2, stats=3)], columns=['b']) == 'b\n2\n'
    assert to_csv([]) == '\n'
