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
Multicast beamforming: SINR evaluation, closed-form asymptotic beamformers
and per-slot max-min fair beamformers.
"""

from numpy import abs as npabs
from numpy import eye, hstack, log2, sqrt, vdot, zeros

from .exceptions import ContractError, DomainError
from .numerics import HpdMatrix
from .psa import ProjectedSubgradientAscent, PsaSettings


class SlotBeamformers(object):

    """
    Beamformers of the groups scheduled in one time slot, with the SINR and
    rate of every user.

    Parameters
    ----------
    slot : int
        Time-slot index.
    beamformers : dict
        Map from group index to beamforming vector of shape (N,).
    sinr : dict
        Map from group index to the array of SINRs of its users.
    iterations : int, optional
        Number of ascent steps used to compute the beamformers.
    trace : list, optional
        Best minimum SINR at each ascent step.
    """

    def __init__(self, slot, beamformers, sinr, iterations=0, trace=None):
        self.beamformers = beamformers
        self.iterations = iterations
        self.rates = {i: log2(1. + s) for (i, s) in sinr.items()}
        self.sinr = sinr
        self.slot = slot
        self.trace = trace if trace is not None else []

    @property
    def groups(self):
        """Sorted indices of the groups scheduled in the slot."""
        return sorted(self.sinr)

    @property
    def min_rate(self):
        """Smallest user rate in the slot, in [bits/s/Hz]."""
        return min(r.min() for r in self.rates.values())

    @property
    def min_sinr(self):
        """Smallest user SINR in the slot."""
        return min(s.min() for s in self.sinr.values())

    @property
    def total_power(self):
        """Total transmit power of the slot."""
        return sum(vdot(w, w).real for w in self.beamformers.values())


def evaluate_sinr(beamformers, channels, groups, noise):
    """
    SINR of every user of the scheduled groups.

    Parameters
    ----------
    beamformers : dict
        Map from group index to beamforming vector.
    channels : ChannelSet
        User channels.
    groups : list of ints
        Groups scheduled in the slot.
    noise : scalar
        Noise variance :math:`\\sigma^2`.

    Returns
    -------
    sinr : dict
        Map from group index to the array of SINRs of its users.
    """
    groups = list(groups)
    missing = [i for i in groups if i not in beamformers]
    if missing:
        raise ContractError("no beamformer for groups %s" % missing)
    sinr = {}
    for i in groups:
        H = channels.matrices[i]
        signal = npabs(beamformers[i].conj().dot(H)) ** 2
        interference = zeros(H.shape[1])
        for j in groups:
            if j != i:
                interference += npabs(beamformers[j].conj().dot(H)) ** 2
        sinr[i] = signal / (interference + noise)
    return sinr


def closed_form_covariance(channels, groups, power, noise):
    """
    Closed-form approximation :math:`\\bar{R}` of the noise-plus-weighted
    channel covariance for a set of groups.

    Parameters
    ----------
    channels : ChannelSet
        User channels.
    groups : list of ints
        Groups served together.
    power : scalar
        Transmit power budget :math:`P`.
    noise : scalar
        Noise variance :math:`\\sigma^2`.

    Returns
    -------
    R : HpdMatrix
        Matrix :math:`I + \\frac{P \\bar{\\beta}}{\\sigma^2 K}
        \\sum_{i,k} g_{ik} g_{ik}^H` with :math:`K` the total number of users
        and :math:`\\bar{\\beta}` the harmonic mean of all their variances.
    """
    groups = list(groups)
    if not groups:
        raise DomainError("empty group set")
    inv_betas = hstack([1. / channels.variances[j] for j in groups])
    K_tot = inv_betas.shape[0]
    beta_bar = K_tot / inv_betas.sum()
    G = hstack([channels.normalized[j] for j in groups])
    scale = power * beta_bar / (noise * K_tot)
    return HpdMatrix(eye(channels.num_antennas) + scale * G.dot(G.conj().T))


def asymptotic_beamformers(channels, groups, power, noise):
    """
    Closed-form beamformers :math:`w_j = c_j \\bar{R}^{-1} H_j q_j`, the
    large-antenna limit of the max-min fair solution.

    Parameters
    ----------
    channels : ChannelSet
        User channels.
    groups : list of ints
        Groups served together.
    power : scalar
        Transmit power budget :math:`P`.
    noise : scalar
        Noise variance :math:`\\sigma^2`.

    Returns
    -------
    beamformers : dict
        Map from group index to beamforming vector.

    Notes
    -----
    Weights are :math:`q_j = [1/\\beta_{j1}, \\ldots, 1/\\beta_{jK_j}]` and
    the scaling factors satisfy :math:`c_j^2 \\propto \\sum_k 1/\\beta_{jk}`
    with total power exactly :math:`P`.
    """
    groups = sorted(set(groups))
    R = closed_form_covariance(channels, groups, power, noise)
    directions, weights = {}, {}
    for j in groups:
        q = 1. / channels.variances[j]
        directions[j] = R.solve(channels.matrices[j].dot(q))
        weights[j] = q.sum()
    denom = sum(weights[j] * vdot(v, v).real for (j, v) in directions.items())
    return {j: sqrt(power * weights[j] / denom) * v
            for (j, v) in directions.items()}


def psa_mmf_slot(channels, groups, power, noise, settings=None, slot=0):
    """
    Max-min fair beamformers of the groups scheduled in one time slot.

    Parameters
    ----------
    channels : ChannelSet
        User channels.
    groups : list of ints
        Groups scheduled in the slot.
    power : scalar
        Transmit power budget :math:`P`.
    noise : scalar
        Noise variance :math:`\\sigma^2`.
    settings : PsaSettings, optional
        Ascent settings.
    slot : int, optional
        Time-slot index reported in the result.

    Returns
    -------
    beamformers : SlotBeamformers
        Beamformers :math:`w_i = \\bar{R}^{-1} H_i a_i` where the weights
        :math:`a_i` maximize the smallest user SINR, at total power :math:`P`.

    Notes
    -----
    The ascent starts from the closed-form asymptotic beamformers. Each step
    follows the Wirtinger gradient of the SINR of the weakest user (ties go
    to the lowest group then user index) with respect to all weights.
    """
    if settings is None:
        settings = PsaSettings()
    if not isinstance(settings, PsaSettings):
        raise DomainError("invalid PSA settings")
    groups = sorted(set(groups))
    if not groups:
        raise DomainError("empty group set")
    R = closed_form_covariance(channels, groups, power, noise)
    V = [R.solve(channels.matrices[j]) for j in groups]
    E = [[Vm.conj().T.dot(channels.matrices[j]) for j in groups] for Vm in V]
    W = [Vm.conj().T.dot(Vm) for Vm in V]
    offsets = [0]
    for j in groups:
        offsets.append(offsets[-1] + channels.variances[j].shape[0])
    n = len(groups)

    def split(a):
        return [a[offsets[m]:offsets[m + 1]] for m in range(n)]

    def project(a):
        total = sum(vdot(am, Wm.dot(am)).real
                    for (am, Wm) in zip(split(a), W))
        return a * sqrt(power / total)

    def oracle(a):
        parts = split(a)
        amps = [[E[m][j].conj().T.dot(parts[m]) for j in range(n)]
                for m in range(n)]
        best = None
        for j in range(n):
            signal = npabs(amps[j][j]) ** 2
            interference = zeros(signal.shape) + noise
            for m in range(n):
                if m != j:
                    interference += npabs(amps[m][j]) ** 2
            sinr = signal / interference
            k = sinr.argmin()
            if best is None or sinr[k] < best[0]:
                best = (sinr[k], j, k, signal[k], interference[k])
        value, j, k, S, I = best
        grad = zeros(a.shape, dtype=complex)
        for m in range(n):
            e = E[m][j][:, k]
            if m == j:
                g = e * amps[j][j][k] / I
            else:
                g = -S / I ** 2 * e * amps[m][j][k]
            grad[offsets[m]:offsets[m + 1]] = g
        return value, grad

    q = [1. / channels.variances[j] for j in groups]
    a0 = hstack([sqrt(qj.sum()) * qj for qj in q]).astype(complex)
    solver = ProjectedSubgradientAscent(settings)
    a = solver.solve(a0, oracle, project)
    beamformers = {
        j: Vm.dot(am) for (j, Vm, am) in zip(groups, V, split(a))}
    sinr = evaluate_sinr(beamformers, channels, groups, noise)
    return SlotBeamformers(
        slot, beamformers, sinr, solver.iter_count, solver.trace)


def min_throughput(slots, T=None):
    """
    Minimum user throughput over all time slots.

    Parameters
    ----------
    slots : list of SlotBeamformers
        Beamformers of every time slot.
    T : int, optional
        Number of time slots, defaults to the length of `slots`.

    Returns
    -------
    throughput : scalar
        Smallest user rate divided by the number of slots, in [bits/s/Hz].
    """
    if not slots:
        raise DomainError("no time slot")
    if T is None:
        T = len(slots)
    if T != len(slots):
        raise ContractError("%d slots given for T = %d" % (len(slots), T))
    return min(slot.min_rate for slot in slots) / T


def asymptotic_min_sinr(channels, groups, power, noise):
    """
    Smallest user SINR when the groups are served together by their
    closed-form asymptotic beamformers.

    Parameters
    ----------
    channels : ChannelSet
        User channels.
    groups : list of ints
        Groups served together.
    power : scalar
        Transmit power budget :math:`P`.
    noise : scalar
        Noise variance :math:`\\sigma^2`.

    Returns
    -------
    sinr : scalar
        Minimum SINR over all users of the groups.
    """
    beamformers = asymptotic_beamformers(channels, groups, power, noise)
    sinr = evaluate_sinr(beamformers, channels, groups, noise)
    return min(s.min() for s in sinr.values())
