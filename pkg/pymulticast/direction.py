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


"""
Group-channel directions: the spatial signature of each multicast group,
computed by treating the group as the only one served by the base station.
"""

from numpy import abs as npabs
from numpy import asarray, eye, sqrt, vdot

from .exceptions import DegenerateDirectionError, DomainError
from .exceptions import PymulticastError
from .numerics import HpdMatrix, harmonic_mean
from .psa import ProjectedSubgradientAscent, PsaSettings


class GroupDirection(object):

    """
    Group-channel direction :math:`\\hat{h}_i = H_i a_i`.

    Parameters
    ----------
    group : int
        Group index.
    weights : array, shape=(K_i,)
        Weight vector :math:`a_i` of the user channels.
    direction : array, shape=(N,)
        Weighted sum of the user channels.
    min_gain : scalar
        Smallest user gain :math:`|a_i^H H_i^H \\tilde{R}_i^{-1} h_{ik}|^2`.
    iterations : int, optional
        Number of ascent steps used to compute the weights.
    trace : list, optional
        Best objective value at each ascent step.
    """

    def __init__(self, group, weights, direction, min_gain, iterations=0,
                 trace=None):
        if not npabs(direction).any():
            raise DegenerateDirectionError("zero direction", group=group)
        self.direction = asarray(direction)
        self.group = group
        self.iterations = iterations
        self.min_gain = min_gain
        self.trace = trace if trace is not None else []
        self.weights = asarray(weights)

    def __repr__(self):
        return "GroupDirection(group=%d, min_gain=%.3g)" % (
            self.group, self.min_gain)


def approx_cov_single(channels, group, power, noise):
    """
    Closed-form approximation of the noise-plus-weighted-channel covariance
    of a group served alone.

    Parameters
    ----------
    channels : ChannelSet
        User channels.
    group : int
        Group index :math:`i`.
    power : scalar
        Transmit power budget :math:`P`.
    noise : scalar
        Noise variance :math:`\\sigma^2`.

    Returns
    -------
    R : HpdMatrix
        Matrix :math:`I + \\frac{P \\tilde{\\beta}_i}{\\sigma^2 K_i}
        \\sum_k g_{ik} g_{ik}^H` where :math:`\\tilde{\\beta}_i` is the
        harmonic mean of the channel variances of the group.
    """
    if power < 0. or noise <= 0.:
        raise DomainError("need non-negative power and positive noise")
    g = channels.normalized[group]
    N, K = g.shape
    scale = power * harmonic_mean(channels.variances[group]) / (noise * K)
    return HpdMatrix(eye(N) + scale * g.dot(g.conj().T))


def psa_single_group(channels, group, R, power, settings=None):
    """
    Compute the direction of a group by max-min weight optimization.

    Parameters
    ----------
    channels : ChannelSet
        User channels.
    group : int
        Group index :math:`i`.
    R : HpdMatrix
        Approximate covariance :math:`\\tilde{R}_i` of the group.
    power : scalar
        Transmit power budget :math:`P`.
    settings : PsaSettings, optional
        Ascent settings.

    Returns
    -------
    direction : GroupDirection
        Best weights found for the problem :math:`\\max_a \\min_k
        |a^H H_i^H \\tilde{R}_i^{-1} h_{ik}|^2` subject to
        :math:`\\|\\tilde{R}_i^{-1} H_i a\\|^2 \\leq P`.

    Notes
    -----
    The ascent starts from weights :math:`a_{ik} \\propto 1 / \\beta_{ik}`,
    and every iterate is scaled onto the power boundary since the objective
    grows with the scale of :math:`a`.
    """
    if settings is None:
        settings = PsaSettings()
    if not isinstance(settings, PsaSettings):
        raise DomainError("invalid PSA settings")
    if power <= 0.:
        raise DomainError("power budget should be positive")
    H = channels.matrices[group]
    M = R.solve(H)
    B = H.conj().T.dot(M)  # column k is b_k
    C = M.conj().T.dot(M)

    def project(a):
        return a * sqrt(power / vdot(a, C.dot(a)).real)

    def oracle(a):
        s = B.dot(a)  # s_k = b_k^H a
        gains = npabs(s) ** 2
        k = gains.argmin()
        return gains[k], B[:, k] * s[k]

    a0 = (1. / channels.variances[group]).astype(complex)
    solver = ProjectedSubgradientAscent(settings)
    a = solver.solve(a0, oracle, project)
    return GroupDirection(
        group, a, H.dot(a), solver.best_value, solver.iter_count,
        solver.trace)


def all_group_directions(channels, config, settings=None):
    """
    Compute the direction of every group, each one treated as the only group
    in the cell.

    Parameters
    ----------
    channels : ChannelSet
        User channels.
    config : SystemConfig
        System configuration providing power budget and noise variance.
    settings : PsaSettings, optional
        Ascent settings.

    Returns
    -------
    directions : list of GroupDirection
        One direction per group, ordered by group index.
    """
    P, noise = config.power_budget, config.noise_variance
    directions = []
    for i in range(channels.num_groups):
        try:
            R = approx_cov_single(channels, i, P, noise)
            directions.append(psa_single_group(channels, i, R, P, settings))
        except PymulticastError as e:
            if getattr(e, 'group', None) is None:
                e.group = i
                e.args = ("group %d: %s" % (i, e),)
            raise
    return directions
