# -*- encoding: utf-8 -*-
from __future__ import print_function, unicode_literals, division, absolute_import
import logging

import pytest

from ssakg.consolelogger import init_logging


@pytest.fixture
def bare_logger():
    logger = logging.getLogger('ssakg')
    saved_handlers, saved_level = logger.handlers[:], logger.level
    logger.handlers = []
    yield logger
    for handler in logger.handlers:
        handler.close()
    logger.handlers = saved_handlers
    logger.setLevel(saved_level)


def test_init_logging_is_reentrant(bare_logger):
    assert init_logging(logging.INFO) is bare_logger
    assert len(bare_logger.handlers) == 1
    init_logging(logging.DEBUG)
    assert len(bare_logger.handlers) == 1
    assert bare_logger.level == logging.DEBUG
    assert bare_logger.handlers[0].level == logging.DEBUG


def test_init_logging_to_file(bare_logger, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    init_logging(logging.INFO, log_to_file=True)
    assert len(bare_logger.handlers) == 2
    logging.getLogger('ssakg.memory.graph').info('stored')
    for handler in bare_logger.handlers:
        handler.flush()
    assert 'ssakg.memory.graph - INFO - stored' in (tmp_path / 'ssakg.log').read_text()
