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
Scheduling by group semi-orthogonality: each time slot greedily collects
groups whose directions are nearly orthogonal to those already selected.
"""

import csv

from numpy import abs as npabs
from numpy import vdot

from .beamforming import asymptotic_min_sinr
from .exceptions import ContractError, DegenerateDirectionError, DomainError
from .misc import norm, warn
from .numerics import OrthonormalBasis, gram_schmidt_append
from .schedule import Schedule


class GssState(object):

    """
    State of the group selection in one time slot.

    Parameters
    ----------
    candidates : list of ints
        Candidate groups :math:`\\Gamma^{(n)}`, semi-orthogonal to the
        selected ones.
    alpha : scalar
        Semi-orthogonality threshold in :math:`(0, 1]`.

    Attributes
    ----------
    basis : OrthonormalBasis
        Gram-Schmidt vectors of the directions of selected groups.
    selected : list of ints
        Selected groups :math:`\\mathcal{G}_t` in order of selection.
    """

    def __init__(self, candidates, alpha):
        self.alpha = alpha
        self.basis = OrthonormalBasis()
        self.candidates = sorted(candidates)
        self.selected = []

    def select(self, group, direction):
        """
        Move a candidate to the selected set and filter remaining candidates.

        Parameters
        ----------
        group : int
            Selected group.
        direction : function
            Map from group index to group-channel direction.

        Returns
        -------
        selected : bool
            False if the direction of the group lies in the span of the slot,
            in which case the basis is left unchanged and the slot is closed
            (no candidates remain).
        """
        assert group in self.candidates
        try:
            self.basis, f = gram_schmidt_append(self.basis, direction(group))
        except DegenerateDirectionError:
            warn("direction of group %d is in the span of the slot, "
                 "closing the slot" % group)
            self.candidates = []
            return False
        self.selected.append(group)
        self.candidates = [
            i for i in self.candidates
            if i != group and semiorth_metric(direction(i), f) < self.alpha]
        return True


class GssStep(object):

    """
    One selection in a time slot, for diagnostics.

    Parameters
    ----------
    slot : int
        Time-slot index.
    iteration : int
        Selection iteration :math:`n` in the slot, starting from one.
    num_candidates : int
        Number of candidates examined.
    group : int
        Selected group.
    min_sinr : scalar
        Minimum SINR of the slot after adding the group.
    """

    FIELDS = ('slot', 'iteration', 'num_candidates', 'group', 'min_sinr')

    def __init__(self, slot, iteration, num_candidates, group, min_sinr):
        self.group = group
        self.iteration = iteration
        self.min_sinr = min_sinr
        self.num_candidates = num_candidates
        self.slot = slot

    def as_row(self):
        return [self.slot, self.iteration, self.num_candidates, self.group,
                '%.9g' % self.min_sinr]


def save_gss_trace(path, steps):
    """
    Save selection steps as CSV.

    Parameters
    ----------
    path : string
        Path to the CSV file.
    steps : list of GssStep
        Selection steps, e.g. filled by :func:`mgms_gss`.
    """
    with open(path, 'w') as fp:
        writer = csv.writer(fp)
        writer.writerow(GssStep.FIELDS)
        for step in steps:
            writer.writerow(step.as_row())


def semiorth_metric(direction, f):
    """
    Semi-orthogonality metric of a group direction against a unit vector.

    Parameters
    ----------
    direction : array, shape=(N,)
        Group-channel direction :math:`\\hat{h}_i`.
    f : array, shape=(N,)
        Unit vector.

    Returns
    -------
    metric : scalar
        Value :math:`|\\hat{h}_i^H f| / \\|\\hat{h}_i\\|` in :math:`[0, 1]`.
    """
    h_norm = norm(direction)
    if h_norm == 0.:
        raise DomainError("zero direction")
    return npabs(vdot(direction, f)) / h_norm


def gss_select_slot(unscheduled, directions, channels, alpha, power, noise,
                    slot=0, trace=None):
    """
    Select the groups of one time slot by semi-orthogonal group selection.

    Parameters
    ----------
    unscheduled : list of ints
        Groups :math:`\\mathcal{U}_t` not scheduled yet.
    directions : list of GroupDirection
        Group-channel directions of all groups.
    channels : ChannelSet
        User channels.
    alpha : scalar
        Semi-orthogonality threshold in :math:`(0, 1]`.
    power : scalar
        Transmit power budget :math:`P`.
    noise : scalar
        Noise variance :math:`\\sigma^2`.
    slot : int, optional
        Time-slot index, only used in `trace`.
    trace : list, optional
        If provided, a :class:`GssStep` is appended for each selection.

    Returns
    -------
    groups : list of ints
        Selected groups in order of selection, never empty.

    Notes
    -----
    At each iteration the candidate maximizing the minimum SINR of the slot,
    evaluated with closed-form asymptotic beamformers, is selected (ties go
    to the lowest group index). Remaining candidates are kept only if their
    directions are semi-orthogonal to the new Gram-Schmidt vector.
    The slot is closed early if the direction of the selected group lies in
    the span of the slot.
    """
    if not unscheduled:
        raise ContractError("no group left to schedule")
    if not 0. < alpha <= 1.:
        raise DomainError("alpha should be in (0, 1]")
    by_group = {d.group: d.direction for d in directions}
    state = GssState(unscheduled, alpha)
    iteration = 0
    while state.candidates:
        iteration += 1
        best_group, best_sinr = None, None
        for i in state.candidates:
            sinr = asymptotic_min_sinr(
                channels, state.selected + [i], power, noise)
            if best_sinr is None or sinr > best_sinr:
                best_group, best_sinr = i, sinr
        num_candidates = len(state.candidates)
        if not state.select(best_group, by_group.__getitem__):
            break
        if trace is not None:
            trace.append(GssStep(
                slot, iteration, num_candidates, best_group, best_sinr))
    return state.selected


def mgms_gss(directions, channels, alpha, power, noise, trace=None):
    """
    Schedule all groups slot after slot by semi-orthogonal group selection.

    Parameters
    ----------
    directions : list of GroupDirection
        Group-channel directions of all groups.
    channels : ChannelSet
        User channels.
    alpha : scalar
        Semi-orthogonality threshold in :math:`(0, 1]`.
    power : scalar
        Transmit power budget :math:`P`.
    noise : scalar
        Noise variance :math:`\\sigma^2`.
    trace : list, optional
        If provided, filled with the :class:`GssStep` of all slots.

    Returns
    -------
    schedule : Schedule
        Time slots in the order they were formed.
    """
    unscheduled = list(range(channels.num_groups))
    slots = []
    while unscheduled:
        selected = gss_select_slot(
            unscheduled, directions, channels, alpha, power, noise,
            slot=len(slots), trace=trace)
        slots.append(selected)
        unscheduled = [i for i in unscheduled if i not in selected]
    return Schedule(slots, channels.num_groups)
