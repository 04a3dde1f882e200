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


from numpy import zeros

from .exceptions import ContractError


class Schedule(object):

    """
    Assignment of multicast groups to ordered time slots.

    Parameters
    ----------
    slots : list of lists of ints
        Group indices of each time slot, in the order they were selected.
    num_groups : int
        Total number of groups :math:`G`.

    Notes
    -----
    Every group is scheduled in exactly one time slot and no slot is empty.
    """

    def __init__(self, slots, num_groups):
        self.slots = [tuple(int(i) for i in slot) for slot in slots]
        self.num_groups = int(num_groups)
        seen = set()
        for t, slot in enumerate(self.slots):
            if not slot:
                raise ContractError("time slot %d is empty" % t)
            for i in slot:
                if i in seen:
                    raise ContractError("group %d scheduled twice" % i)
                seen.add(i)
        if seen != set(range(self.num_groups)):
            missing = sorted(set(range(self.num_groups)) - seen)
            raise ContractError(
                "groups %s are not a partition of %d groups, missing %s" % (
                    sorted(seen), self.num_groups, missing))

    @property
    def T(self):
        """Number of time slots."""
        return len(self.slots)

    @property
    def sizes(self):
        """Number of groups :math:`G_t` in each time slot."""
        return [len(slot) for slot in self.slots]

    def decision_matrix(self):
        """
        Binary scheduling decisions.

        Returns
        -------
        x : array, shape=(G, T)
            Matrix with :math:`x_{i,t} = 1` if and only if group :math:`i` is
            scheduled in time slot :math:`t`.
        """
        x = zeros((self.num_groups, self.T), dtype=int)
        for t, slot in enumerate(self.slots):
            x[list(slot), t] = 1
        return x

    def slot_of(self, group):
        """
        Time slot of a group.

        Parameters
        ----------
        group : int
            Group index.
        """
        for t, slot in enumerate(self.slots):
            if group in slot:
                return t
        raise ContractError("group %d is not scheduled" % group)

    def as_dict(self):
        return {'T': self.T, 'slots': [list(slot) for slot in self.slots]}

    @staticmethod
    def from_dict(d, num_groups):
        return Schedule(d['slots'], num_groups)

    def __eq__(self, other):
        if not isinstance(other, Schedule):
            return NotImplemented
        return (self.num_groups == other.num_groups and
                self.slots == other.slots)

    def __repr__(self):
        return "Schedule(T=%d, slots=%s)" % (self.T, self.slots)


def single_slot_schedule(num_groups):
    """
    Baseline scheduling all groups in a single time slot.

    Parameters
    ----------
    num_groups : int
        Number of groups :math:`G`.
    """
    return Schedule([list(range(num_groups))], num_groups)


def g_slots_schedule(num_groups):
    """
    Baseline scheduling one group per time slot.

    Parameters
    ----------
    num_groups : int
        Number of groups :math:`G`.
    """
    return Schedule([[i] for i in range(num_groups)], num_groups)
