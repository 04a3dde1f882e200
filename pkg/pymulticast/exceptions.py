#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2022 The pymulticast developers
#
# This file is part of pymulticast.
#
# pymulticast is free software: you can redistribute it and/or modify it under
# the terms of the GNU General Public License as published by the Free
# Software Foundation, either version 3 of the License, or (at your option)
# any later version.
#
# pymulticast is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS
# FOR A PARTICULAR PURPOSE. See the GNU General Public License for more
# details.
#
# You should have received a copy of the GNU General Public License along with
# pymulticast. If not, see <http://www.gnu.org/licenses/>.


from numpy.linalg import LinAlgError


class PymulticastError(Exception):

    """
    Base class of all errors raised by pymulticast.
    """


class DomainError(PymulticastError, ValueError):

    """
    Numerical argument outside of the domain of a function, e.g. a negative
    distance, an empty list or a zero vector.
    """


class ConfigError(DomainError):

    """
    Invalid configuration document or configuration field.
    """


class ContractError(PymulticastError):

    """
    Precondition broken by the caller, e.g. a scheduled group without
    beamformer.
    """


class SingularMatrixError(PymulticastError, LinAlgError):

    """
    Cholesky factorization failed.

    Parameters
    ----------
    pivot : int
        One-based index of the leading minor that is not positive definite.
    """

    def __init__(self, pivot):
        super(SingularMatrixError, self).__init__(
            "leading minor %d is not positive definite" % pivot)
        self.pivot = pivot


class DegenerateDirectionError(PymulticastError):

    """
    Vector with no component outside of a subspace, or group whose channels
    are all zero.

    Parameters
    ----------
    msg : str
        Error message.
    group : int, optional
        Index of the group concerned, if any.
    """

    def __init__(self, msg, group=None):
        if group is not None:
            msg = "group %d: %s" % (group, msg)
        super(DegenerateDirectionError, self).__init__(msg)
        self.group = group


class PipelineError(PymulticastError):

    """
    Failure inside one phase of the scheduling and beamforming pipeline.

    Parameters
    ----------
    phase : str
        Phase label: "directions", "scheduling" or "beamforming".
    cause : Exception
        Original exception.
    """

    def __init__(self, phase, cause):
        super(PipelineError, self).__init__("%s phase: %s" % (phase, cause))
        self.cause = cause
        self.phase = phase
