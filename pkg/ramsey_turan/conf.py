"""
Process-wide defaults. Every value can be overridden from the environment,
e.g. ``RAMSEY_TURAN_WORKERS=8``.
"""
import os

MAX_ORDER = 64
MAX_SEARCH_ORDER = 14
MAX_TEMPLATE_ORDER = 16
MAX_AUDITED_Z = 20

TRACE_ALL = 'all'
TRACE_PROGRESS = 'progress'
TRACE_OFF = None

TRACE_LEVELS = {
    TRACE_ALL,
    TRACE_PROGRESS,
    TRACE_OFF,
}


def _from_environment(name, default, parse=int):
    value = os.environ.get(f'RAMSEY_TURAN_{name}')
    if value is None or value == '':
        return default
    return parse(value)


def _parse_trace(value):
    if value == 'None':
        return None
    assert value in TRACE_LEVELS, f'RAMSEY_TURAN_TRACE must be one of: {TRACE_LEVELS}'
    return value


DEFAULT_WORKERS = _from_environment('WORKERS', 1)
DEFAULT_NODE_LIMIT = _from_environment('NODE_LIMIT', 10**9)
DEFAULT_SEED = _from_environment('SEED', 1962)
DEFAULT_TRACE = _from_environment('TRACE', None, parse=_parse_trace)
