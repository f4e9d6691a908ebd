import logging
import threading
from contextlib import contextmanager
from logging import addLevelName
from time import monotonic

from ramsey_turan import conf

try:
    from termcolor import colored
except ImportError:
    def colored(text, color=None, on_color=None, attrs=None):
        return text


log = logging.getLogger('ramsey_turan')
SEARCH = 11
addLevelName(SEARCH, 'SEARCH')

state = threading.local()

MISSING_TRACE = object()


def set_trace(new_state, validate=True):
    if new_state == 'None':
        new_state = None
    if validate:
        assert new_state in conf.TRACE_LEVELS, f'trace must be one of: {conf.TRACE_LEVELS}'
    setattr(state, 'trace', new_state)


def get_trace():
    result = getattr(state, 'trace', MISSING_TRACE)
    if result is not MISSING_TRACE:
        return result
    return conf.DEFAULT_TRACE


@contextmanager
def no_trace():
    """
    Context manager to temporarily suspend search tracing.

    Inner helpers (e.g. the exhaustive oracles in tests) use this to keep the log readable.
    """
    old_state = get_trace()
    set_trace(conf.TRACE_OFF)
    try:
        yield
    finally:
        set_trace(old_state)


def trace(msg, *, fg=None, detail=False, **extra):
    level = get_trace()
    if level is None:
        return
    if detail and level != conf.TRACE_ALL:
        return
    if fg:
        msg = colored(msg, color=fg)
    log.log(level=SEARCH, msg=msg, extra=extra)


@contextmanager
def timed(label, **extra):
    start = monotonic()
    result = {}
    try:
        yield result
    finally:
        result['duration'] = monotonic() - start
        trace(f'{label} [{result["duration"]:.3f}s]', **extra)
