"""
Byte-stable rendering of report structures as JSON or CSV.
"""
import csv
import json
from fractions import Fraction
from io import StringIO

from ramsey_turan.base import format_fraction


def _plain(value):
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, bytes):
        return value.decode('ascii')
    return value


def strip_stats(value):
    """
    Drop the volatile `stats` entries (timings, node counts) anywhere in `value`.
    """
    if isinstance(value, dict):
        return type(value)({k: strip_stats(v) for k, v in value.items() if k != 'stats'})
    if isinstance(value, list):
        return [strip_stats(v) for v in value]
    return value


def to_json(value, stats=False):
    if not stats:
        value = strip_stats(value)
    return json.dumps(_plain(value), sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def _cell(value):
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        result = ('%f' % value).rstrip('0')
        if result[-1] == '.':
            result += '0'
        return result
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(_plain(value), sort_keys=True, ensure_ascii=False)
    return str(_plain(value))


def to_csv(rows, columns=None, stats=False):
    """
    One header line and one line per row. Columns default to the keys of the first row in order; nested values
    are written as compact JSON.
    """
    if not stats:
        rows = strip_stats(list(rows))
    if columns is None:
        columns = list(rows[0].keys()) if rows else []
    f = StringIO()
    writer = csv.writer(f, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    return f.getvalue()
