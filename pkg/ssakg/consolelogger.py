# -*- encoding: utf-8 -*-
from __future__ import print_function, unicode_literals, division, absolute_import
import logging
import logging.handlers

FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def init_logging(level=logging.DEBUG, log_to_file=False, logsize=1024, logcount=5):
    formatter = logging.Formatter(FORMAT)

    logger = logging.getLogger('ssakg')
    logger.setLevel(level)

    # Re-initialising (e.g. repeated CLI invocations in one process) only updates levels.
    if logger.handlers:
        for handler in logger.handlers:
            handler.setLevel(level)
        return logger

    stream_handler = logging.StreamHandler()
    stream_handler.setLevel(level)
    stream_handler.setFormatter(formatter)
    logger.addHandler(stream_handler)

    if log_to_file:
        file_handler = logging.handlers.RotatingFileHandler('ssakg.log', 'a', logsize*1000, logcount)
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)
    return logger
