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


import csv

from numpy import sqrt
from time import time

from .exceptions import ConfigError, DomainError
from .misc import norm


class PsaSettings(object):

    """
    Settings of the projected subgradient ascent.

    Parameters
    ----------
    max_iterations : int, optional
        Maximum number of ascent steps.
    initial_step : scalar, optional
        Initial step size :math:`\\gamma_0`. Step :math:`l` has size
        :math:`\\gamma_0 / \\sqrt{l}` relative to the norm of the iterate.
    tolerance : scalar, optional
        Relative improvement of the best objective below which the ascent
        stops.
    window : int, optional
        Number of iterations over which the improvement is measured.
    """

    FIELDS = ('max_iterations', 'initial_step', 'tolerance', 'window')

    def __init__(self, max_iterations=300, initial_step=1.0, tolerance=1e-6,
                 window=50):
        self.initial_step = float(initial_step)
        self.max_iterations = int(max_iterations)
        self.tolerance = float(tolerance)
        self.window = int(window)
        if self.max_iterations < 1:
            raise DomainError("max_iterations should be at least one")
        if self.initial_step <= 0.:
            raise DomainError("initial_step should be positive")
        if self.tolerance < 0. or self.window < 1:
            raise DomainError("invalid stopping criterion")

    def as_dict(self):
        """Dictionary of settings."""
        return {key: getattr(self, key) for key in self.FIELDS}

    @staticmethod
    def from_dict(d):
        """
        Create settings from a dictionary.

        Parameters
        ----------
        d : dict
            Dictionary whose keys are setting names.
        """
        unknown = set(d) - set(PsaSettings.FIELDS)
        if unknown:
            raise ConfigError("unknown PSA settings: %s" % (
                ", ".join(sorted(unknown))))
        try:
            return PsaSettings(**d)
        except (DomainError, TypeError, ValueError) as e:
            raise ConfigError(str(e))

    def __eq__(self, other):
        if not isinstance(other, PsaSettings):
            return NotImplemented
        return self.as_dict() == other.as_dict()


class ProjectedSubgradientAscent(object):

    """
    Maximize a nonsmooth objective over a set with a cheap projection.

    Parameters
    ----------
    settings : PsaSettings, optional
        Step schedule and stopping criterion.

    Notes
    -----
    Subgradient methods are not monotone, so the solver returns the best
    iterate it has encountered rather than the last one.
    """

    def __init__(self, settings=None):
        self.settings = settings if settings is not None else PsaSettings()
        self.best_value = None
        self.iter_count = 0
        self.solve_time = None
        self.trace = []
        self.values = []

    def solve(self, x0, oracle, project):
        """
        Run the ascent.

        Parameters
        ----------
        x0 : array
            Initial point, projected before the first step.
        oracle : function
            Maps a point `x` to the pair ``(value, direction)`` of the
            objective value and an ascent direction at `x`.
        project : function
            Projection onto the feasible set.

        Returns
        -------
        x : array
            Best feasible iterate.
        """
        t0 = time()
        settings = self.settings
        x = project(x0)
        value, direction = oracle(x)
        best_x, best_value = x, value
        self.values = [value]
        self.trace = [value]
        l = 0
        while l < settings.max_iterations:
            d_norm = norm(direction)
            if d_norm == 0.:  # stationary point
                break
            l += 1
            step = settings.initial_step / sqrt(l)
            x = project(x + step * norm(x) / d_norm * direction)
            value, direction = oracle(x)
            if value > best_value:
                best_x, best_value = x, value
            self.values.append(value)
            self.trace.append(best_value)
            if l >= settings.window:
                ref = self.trace[l - settings.window]
                if best_value - ref <= settings.tolerance * abs(ref):
                    break
        self.best_value = best_value
        self.iter_count = l
        self.solve_time = time() - t0
        return best_x

    def save_trace(self, path):
        """
        Save the objective trace of the last call to ``solve()`` as CSV.

        Parameters
        ----------
        path : string
            Path to the CSV file, with columns [iteration, value, best].
        """
        write_trace(path, self.trace, self.values)


def write_trace(path, trace, values=None):
    """
    Write an objective trace as CSV.

    Parameters
    ----------
    path : string
        Path to the CSV file.
    trace : list of scalars
        Best objective value after each iteration.
    values : list of scalars, optional
        Objective value of each iterate. Adds a 'value' column if provided.
    """
    with open(path, 'w') as fp:
        writer = csv.writer(fp)
        if values is None:
            writer.writerow(['iteration', 'best'])
            for l, best in enumerate(trace):
                writer.writerow([l, '%.9g' % best])
            return
        writer.writerow(['iteration', 'value', 'best'])
        for l, (value, best) in enumerate(zip(values, trace)):
            writer.writerow([l, '%.9g' % value, '%.9g' % best])
