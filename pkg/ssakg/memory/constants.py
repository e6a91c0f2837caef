# -*- encoding: utf-8 -*-
from __future__ import print_function, unicode_literals, division, absolute_import
from enum import IntEnum

from ssakg.memory.exceptions import InvalidParams


# Sequence element ordering algorithms, in order of increasing refinement.
class ALGORITHM(IntEnum):
    SIMPLE = 0x00
    NODE = 0x01
    ENHANCED = 0x02
    WEIGHTED = 0x03

    @property
    def tag(self):
        return self.name.lower()

    @classmethod
    def from_tag(cls, tag):
        ''' Look up an algorithm by its lowercase tag ("weighted", ...). '''
        if isinstance(tag, cls):
            return tag
        try:
            return cls[str(tag).strip().upper()]
        except KeyError:
            raise InvalidParams('Unknown ordering algorithm "%s" (expected one of %s).'
                                % (tag, ', '.join(a.tag for a in cls)))


# Algorithms that branch and validate. SIMPLE is the non-filtering baseline.
BRANCHING = (ALGORITHM.NODE, ALGORITHM.ENHANCED, ALGORITHM.WEIGHTED)


# Scoring rule for correct_elements
class METRIC(IntEnum):
    SET = 0x00
    POSITION = 0x01

    @property
    def tag(self):
        return self.name.lower()

    @classmethod
    def from_tag(cls, tag):
        if isinstance(tag, cls):
            return tag
        try:
            return cls[str(tag).strip().upper()]
        except KeyError:
            raise InvalidParams('Unknown metric "%s" (expected set or position).' % tag)


DEFAULT_BRANCH_BUDGET = 10000
DEFAULT_CRITICAL_DENSITY = 0.5

# Named, versioned generator; recorded in every report.
RNG_NAME = 'numpy.PCG64'

SNAPSHOT_KEYS = ('n', 'stored_count', 'edges')
