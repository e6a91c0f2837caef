# -*- encoding: utf-8 -*-
from __future__ import print_function, unicode_literals, division, absolute_import

__version__ = "0.3.0"
