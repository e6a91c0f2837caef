# -*- encoding: utf-8 -*-
from __future__ import print_function, unicode_literals, division
import functools
import logging
import time
from os import environ

import pytest

logger = logging.getLogger('ssakg.decorators')


def timing(rounds=1, limit=None):
    '''
    Wrapper for simple timing of tests.
    Runs the test `rounds` times and reports the average duration.
    Limit (in milliseconds) asserts on the average duration.
    '''
    def decorator(method):
        @functools.wraps(method)
        def f(*args, **kwargs):
            start = time.perf_counter()
            for _ in range(rounds):
                method(*args, **kwargs)
            duration = (time.perf_counter() - start) / rounds * 1e3

            logger.info('Test "%s.%s" took %.06f ms.', method.__module__, method.__name__, duration)
            if limit is not None:
                assert limit > duration, 'Timing failure: %.06f > %.06f' % (duration, limit)

        # Only time tests when SSAKG_WITH_TIMINGS=1, multi-round runs are slow.
        if environ.get('SSAKG_WITH_TIMINGS', None) == '1':
            return f
        return method
    return decorator


def slow(method):
    '''
    Marks a long statistical test. Skipped unless SSAKG_SLOW_TESTS=1.
    '''
    return pytest.mark.skipif(
        environ.get('SSAKG_SLOW_TESTS', None) != '1',
        reason='set SSAKG_SLOW_TESTS=1 to run long statistical checks',
    )(method)
