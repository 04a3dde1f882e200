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
import pytest

from numpy import array, ones, sqrt

from pymulticast.exceptions import ContractError, DomainError
from pymulticast.gss import GssState, gss_select_slot, mgms_gss
from pymulticast.gss import save_gss_trace, semiorth_metric
from pymulticast.numerics import OrthonormalBasis, gram_schmidt_append

from conftest import fixed_directions, random_channels, random_instances
from conftest import single_user_channels


def test_semiorth_metric():
    e1, e2 = array([1., 0.]), array([0., 1.])
    assert semiorth_metric(e2, e1) == 0.
    assert semiorth_metric(3j * e1, e1) == 1.
    assert abs(semiorth_metric(e1 + e2, e1) - sqrt(2.) / 2) < 1e-12
    with pytest.raises(DomainError):
        semiorth_metric(0. * e1, e1)


def test_single_candidate(rng):
    channels = random_channels(rng, 4, [1, 2])
    directions = fixed_directions([[1., 0., 0., 0.], [0., 1., 0., 0.]])
    assert gss_select_slot([1], directions, channels, 0.1, 10., 1.) == [1]


def test_orthogonal_pair(orthogonal_vectors):
    vectors = orthogonal_vectors[:2]
    channels = single_user_channels(vectors)
    selected = gss_select_slot(
        [0, 1], fixed_directions(vectors), channels, 0.5, 10., 1.)
    assert sorted(selected) == [0, 1]


@pytest.mark.parametrize("alpha", [0.1, 0.5, 1.])
def test_parallel_pair(alpha):
    vectors = [array([1., 1j, 0.]), array([1., 1j, 0.])]
    channels = single_user_channels(vectors)
    selected = gss_select_slot(
        [0, 1], fixed_directions(vectors), channels, alpha, 10., 1.)
    assert selected == [0]


def test_invalid_arguments(rng):
    channels = random_channels(rng, 2, [1])
    directions = fixed_directions([[1., 0.]])
    with pytest.raises(ContractError):
        gss_select_slot([], directions, channels, 0.5, 10., 1.)
    with pytest.raises(DomainError):
        gss_select_slot([0], directions, channels, 0., 10., 1.)
    with pytest.raises(DomainError):
        gss_select_slot([0], directions, channels, 1.5, 10., 1.)


def test_state_closes_slot_on_direction_in_span():
    vectors = {
        0: array([1., 0., 0.]), 1: array([0., 1., 0.]),
        2: array([1., 1., 0.]), 3: array([0., 0., 1.])}
    state = GssState([0, 1, 2, 3], 1.)
    assert state.select(0, vectors.__getitem__)
    assert state.candidates == [1, 2, 3]
    assert state.select(1, vectors.__getitem__)
    assert state.candidates == [2, 3]
    assert not state.select(2, vectors.__getitem__)
    assert state.candidates == []
    assert state.selected == [0, 1]
    assert len(state.basis) == 2


def test_slot_ends_at_direction_in_span():
    directions = fixed_directions([
        array([1., 0., 0.]), array([0., 1., 0.]),
        array([1., 1., 0.]) / sqrt(2.), array([0.5, 0.5, sqrt(0.5)])])
    channels = single_user_channels([
        array([3., 0., 0.]), array([0., 2.5, 0.]), array([0., 0., 2.]),
        array([1., 0., 0.])])
    trace = []
    selected = gss_select_slot(
        [0, 1, 2, 3], directions, channels, 0.9, 10., 1., trace=trace)
    assert selected == [0, 1]
    assert [step.group for step in trace] == [0, 1]
    schedule = mgms_gss(directions, channels, 0.9, 10., 1.)
    assert [sorted(slot) for slot in schedule.slots] == [[0, 1], [2, 3]]


def test_identical_directions():
    vectors = [array([1., 2., 0.])] * 4
    schedule = mgms_gss(
        fixed_directions(vectors), single_user_channels(vectors), 0.5, 10.,
        1.)
    assert schedule.T == 4
    assert schedule.sizes == [1, 1, 1, 1]


def test_orthogonal_directions(orthogonal_vectors):
    schedule = mgms_gss(
        fixed_directions(orthogonal_vectors),
        single_user_channels(orthogonal_vectors), 0.5, 10., 1.)
    assert schedule.T == 1
    assert sorted(schedule.slots[0]) == [0, 1, 2, 3]


def test_selection_order_follows_sinr():
    vectors = [array([1., 0.]), array([0., 3.])]
    schedule = mgms_gss(
        fixed_directions(vectors), single_user_channels(vectors), 0.5, 10.,
        1.)
    assert schedule.slots == [(1, 0)]


def test_deterministic(rng):
    directions, channels = next(random_instances(rng, 1))
    first = mgms_gss(directions, channels, 0.3, 10., 1.)
    second = mgms_gss(directions, channels, 0.3, 10., 1.)
    assert first == second


def test_trace(tmp_path, orthogonal_vectors):
    trace = []
    mgms_gss(
        fixed_directions(orthogonal_vectors),
        single_user_channels(orthogonal_vectors), 0.5, 10., 1., trace=trace)
    assert [step.num_candidates for step in trace] == [4, 3, 2, 1]
    assert [step.iteration for step in trace] == [1, 2, 3, 4]
    assert all(step.slot == 0 for step in trace)
    path = str(tmp_path / 'gss.csv')
    save_gss_trace(path, trace)
    with open(path) as fp:
        rows = list(csv.reader(fp))
    assert rows[0] == [
        'slot', 'iteration', 'num_candidates', 'group', 'min_sinr']
    assert len(rows) == 5


def test_partition_and_certificate(rng):
    for directions, channels in random_instances(rng, 200):
        by_group = {d.group: d.direction for d in directions}
        for alpha in (0.2, 0.4):
            schedule = mgms_gss(directions, channels, alpha, 10., 1.)
            x = schedule.decision_matrix()
            assert (x.sum(axis=1) == ones(channels.num_groups)).all()
            for slot in schedule.slots:
                basis = OrthonormalBasis()
                for i in slot:
                    for f in basis:
                        assert semiorth_metric(by_group[i], f) < alpha
                    basis, _ = gram_schmidt_append(basis, by_group[i])
