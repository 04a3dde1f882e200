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

import sys

from datetime import datetime
from numpy import abs as npabs
from numpy import log10, sqrt, vdot

verbosity = 2
"""
Console verbosity: 0 for errors only, 1 to add warnings, 2 to add information
messages.
"""


class AvgStdEstimator(object):

    """
    Online estimator for the average and standard deviation of a series of
    scalar values.
    """

    def __init__(self):
        self.reset()

    def reset(self):
        self.last_value = None
        self.n = 0
        self.x = 0.
        self.x2 = 0.
        self.x_max = None
        self.x_min = None

    def add(self, x):
        """
        Add a new value to the series.

        Parameters
        ----------
        x : scalar
            New value.
        """
        self.last_value = x
        self.n += 1
        self.x += x
        self.x2 += x ** 2
        if self.x_max is None or x > self.x_max:
            self.x_max = x
        if self.x_min is None or x < self.x_min:
            self.x_min = x

    @property
    def avg(self):
        """
        Average of the series, or ``None`` if it is empty.
        """
        if self.n < 1:
            return None
        return self.x / self.n

    @property
    def std(self):
        """
        Unbiased standard deviation of the series.
        """
        if self.n < 1:
            return None
        elif self.n == 1:
            return 0.
        unbiased = sqrt(self.n * 1. / (self.n - 1))
        return unbiased * sqrt(max(self.x2 / self.n - self.avg ** 2, 0.))

    def __str__(self):
        if self.n < 1:
            return "empty series"
        return "%f +/- %f (max: %f, min: %f) over %d items" % (
            self.avg, self.std, self.x_max, self.x_min, self.n)


def cosine_similarity(u, v):
    """
    Magnitude of the normalized inner product between two complex vectors.

    Parameters
    ----------
    u : array, shape=(n,)
        First vector.
    v : array, shape=(n,)
        Second vector.

    Returns
    -------
    c : scalar
        Value :math:`|u^H v| / (\\|u\\| \\|v\\|)` between zero and one.
    """
    return npabs(vdot(u, v)) / (norm(u) * norm(v))


def db_to_linear(x_db):
    """Convert a power ratio from decibels to linear scale."""
    return 10. ** (x_db / 10.)


def linear_to_db(x):
    """Convert a linear power ratio to decibels."""
    return 10. * log10(x)


def norm(v):
    """
    Euclidean norm of a real or complex vector.

    Parameters
    ----------
    v : array
        Any vector.

    Returns
    -------
    n : scalar
        Euclidean norm of `v`.

    Notes
    -----
    Same speed trick as a plain ``sqrt(dot(v, v))``, with ``vdot`` so that
    complex entries are conjugated.
    """
    return sqrt(vdot(v, v).real)


def normalize(v):
    """
    Normalize a vector.

    Parameters
    ----------
    v : array
        Any vector.

    Returns
    -------
    nv : array
        Unit vector directing `v`.

    Notes
    -----
    This function doesn't catch zero vectors on purpose.
    """
    return v / norm(v)


def set_verbosity(level):
    """
    Set console verbosity.

    Parameters
    ----------
    level : int
        0 for errors only, 1 to add warnings, 2 to add information messages.
    """
    global verbosity
    verbosity = int(level)


def _log(level, color, msg):
    now = datetime.now().strftime("%Y-%m-%d %H:%M:%S,%f")[:-3]
    sys.stderr.write("%c[0;%d;48m%s pymulticast [%s] %s%c[m\n" % (
        0x1B, color, now, level, msg, 0x1B))


def error(msg):
    """
    Log an error message (in red) to stderr.

    Parameters
    ----------
    msg : str
        Error message.
    """
    _log("ERROR", 31, msg)


def info(msg):
    """
    Log an information message (in green) to stderr.

    Parameters
    ----------
    msg : str
        Information message.
    """
    if verbosity >= 2:
        _log("INFO", 32, msg)


def warn(msg):
    """
    Log a warning message (in yellow) to stderr.

    Parameters
    ----------
    msg : str
        Warning message.
    """
    if verbosity >= 1:
        _log("WARN", 33, msg)
