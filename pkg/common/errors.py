#!/usr/bin/env python3
"""
Toolkit Errors
Exception hierarchy shared by every package; the CLI maps classes to exit codes
"""


class ToolkitError(Exception):
    """Base class for all toolkit errors"""

    exit_code = 1


class InputError(ToolkitError, ValueError):
    """Malformed or out-of-range input"""

    exit_code = 3


class ComplexError(InputError):
    """Invalid simplicial complex or face argument"""


class BuildingSetError(InputError):
    """Invalid building set or building-set operation"""


class PolytopeError(InputError):
    """Input is not a usable polytope class"""


class MasseyError(InputError):
    """Invalid Massey product input"""


class FieldError(InputError):
    """Unknown or malformed coefficient field"""


class LimitExceededError(ToolkitError):
    """A configured resource limit would be exceeded"""

    exit_code = 2


class VerificationError(ToolkitError):
    """An identity or invariant failed to verify"""

    exit_code = 1
