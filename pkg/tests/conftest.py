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


import pytest

from numpy import array, eye, ones, sqrt
from numpy.random import default_rng

from pymulticast import misc
from pymulticast.direction import GroupDirection, all_group_directions
from pymulticast.psa import PsaSettings
from pymulticast.system import ChannelSet, SystemConfig, draw_channels


def random_channels(rng, N, users_per_group, beta_range=(0.5, 2.)):
    """Channel set with i.i.d. Rayleigh entries and random variances."""
    normalized, variances = [], []
    for K in users_per_group:
        g = (rng.standard_normal((N, K)) +
             1j * rng.standard_normal((N, K))) / sqrt(2.)
        normalized.append(g)
        variances.append(rng.uniform(*beta_range, size=K))
    return ChannelSet(normalized, variances)


def random_instances(rng, num, settings=None):
    """Yield (directions, channels) pairs of varied sizes."""
    if settings is None:
        settings = PsaSettings(max_iterations=30, window=10)
    for _ in range(num):
        N = int(rng.choice([4, 8, 16]))
        G = int(rng.choice([3, 6, 10]))
        K = [int(k) for k in rng.choice([1, 2, 3], size=G)]
        channels = random_channels(rng, N, K)
        config = SystemConfig(num_antennas=N, num_groups=G, users_per_group=K)
        yield all_group_directions(channels, config, settings), channels


def single_user_channels(vectors):
    """Channel set with one unit-variance user per group."""
    return ChannelSet(
        [array(v, dtype=complex).reshape(-1, 1) for v in vectors],
        [ones(1) for _ in vectors])


def fixed_directions(vectors):
    """Group directions given explicitly, one per group."""
    return [GroupDirection(i, ones(1), array(v, dtype=complex), 1.)
            for (i, v) in enumerate(vectors)]


@pytest.fixture
def rng():
    return default_rng(42)


@pytest.fixture
def small_config():
    return SystemConfig(
        num_antennas=4, num_groups=3, users_per_group=2, rng_seed=7)


@pytest.fixture
def small_channels(small_config):
    return draw_channels(small_config, 0, 0)


@pytest.fixture
def orthogonal_vectors():
    return [row for row in eye(4, dtype=complex)]


@pytest.fixture(autouse=True)
def restore_verbosity():
    yield
    misc.set_verbosity(2)
