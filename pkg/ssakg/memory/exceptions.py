# -*- encoding: utf-8 -*-
from __future__ import print_function, unicode_literals, division, absolute_import


class SsakgError(ValueError):
    ''' Base class for every domain error raised by ssakg. '''


class InvalidParams(SsakgError):
    pass


class InvalidNodeCount(InvalidParams):
    pass


class DuplicateElement(SsakgError):
    pass


class SymbolOutOfRange(SsakgError):
    pass


class InconsistentContext(SsakgError):
    pass


class NoValidOrdering(SsakgError):
    pass


class AmbiguityOverflow(SsakgError):
    ''' Raised when the ordering search explores more branches than allowed. '''

    def __init__(self, message, explored=0, branch_budget=0):
        super(AmbiguityOverflow, self).__init__(message)
        self.explored = explored
        self.branch_budget = branch_budget


class MalformedPath(SsakgError):
    pass


class CorpusTooSmall(SsakgError):
    pass


class SnapshotError(SsakgError):
    pass
