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

from numpy import abs as npabs
from numpy import array, concatenate, log10, sqrt
from numpy.random import default_rng
from numpy.testing import assert_allclose, assert_array_equal

from pymulticast.exceptions import ConfigError, DomainError
from pymulticast.misc import norm
from pymulticast.system import CHANNEL_STREAM, DROP_STREAM, ChannelSet
from pymulticast.system import SystemConfig, UserDrop
from pymulticast.system import calibrate_pathloss_constant, draw_channels
from pymulticast.system import generate_channels, generate_drop
from pymulticast.system import pathloss_variance, random_stream


def test_pathloss_variance():
    xi = 10 ** -0.5
    assert_allclose(pathloss_variance(1.0, xi, 3.), 0.316227766, rtol=1e-8)
    assert_allclose(pathloss_variance(0.5, xi, 3.), 2.529822128, rtol=1e-8)
    assert pathloss_variance(1.0, 1., 0.) == 1.
    assert_allclose(
        pathloss_variance(array([0.5, 1.]), 1.), [8., 1.])


@pytest.mark.parametrize("d, xi", [(0., 1.), (-1., 1.), (1., 0.)])
def test_pathloss_domain(d, xi):
    with pytest.raises(DomainError):
        pathloss_variance(d, xi)


@pytest.mark.parametrize("radius, snr_db, expected", [
    (1., -5., 10 ** -0.5),
    (1., 0., 1.),
    (2., -5., 8 * 10 ** -0.5)])
def test_calibrate_pathloss_constant(radius, snr_db, expected):
    config = SystemConfig(
        num_antennas=4, cell_radius=radius, boundary_snr_db=snr_db,
        max_distance=radius)
    assert_allclose(calibrate_pathloss_constant(config), expected)


def test_boundary_snr():
    config = SystemConfig(num_antennas=4)
    xi = calibrate_pathloss_constant(config)
    beta = pathloss_variance(config.cell_radius, xi, config.pathloss_exponent)
    assert_allclose(10 * log10(beta / config.noise_variance), -5.)


def test_config_defaults():
    config = SystemConfig(num_antennas=16)
    assert config.num_groups == 25
    assert config.users_per_group == [5] * 25
    assert config.total_users == 125
    assert_allclose(config.power_budget / config.noise_variance, 10.)


@pytest.mark.parametrize("kwargs", [
    {'num_antennas': 0},
    {'num_antennas': 4, 'num_groups': 2, 'users_per_group': [1, 2, 3]},
    {'num_antennas': 4, 'users_per_group': 0},
    {'num_antennas': 4, 'power_budget': 0.},
    {'num_antennas': 4, 'min_distance': 0.},
    {'num_antennas': 4, 'max_distance': 2.},
    {'num_antennas': 4, 'rng_seed': -1}])
def test_config_validation(kwargs):
    with pytest.raises(ConfigError):
        SystemConfig(**kwargs)


def test_config_round_trip(tmp_path):
    config = SystemConfig(
        num_antennas=8, num_groups=2, users_per_group=[1, 3], rng_seed=3)
    path = str(tmp_path / 'system.json')
    config.save(path)
    assert SystemConfig.load(path).as_dict() == config.as_dict()
    with pytest.raises(ConfigError):
        SystemConfig.from_dict(dict(config.as_dict(), bogus=1))


def test_config_copy():
    config = SystemConfig(num_antennas=8, num_groups=3, users_per_group=2)
    other = config.copy(num_antennas=16, num_groups=5)
    assert other.num_antennas == 16
    assert other.users_per_group == [2] * 5
    assert config.num_antennas == 8


def test_streams_are_keyed():
    a = random_stream(1, DROP_STREAM, 0).standard_normal(4)
    b = random_stream(1, DROP_STREAM, 0).standard_normal(4)
    c = random_stream(1, DROP_STREAM, 1).standard_normal(4)
    d = random_stream(1, CHANNEL_STREAM, 0).standard_normal(4)
    e = random_stream(2, DROP_STREAM, 0).standard_normal(4)
    assert_array_equal(a, b)
    for other in (c, d, e):
        assert not (a == other).any()


def test_drop_is_reproducible():
    config = SystemConfig(num_antennas=4, num_groups=3, users_per_group=2)
    first = generate_drop(config, random_stream(5, DROP_STREAM, 0))
    second = generate_drop(config, random_stream(5, DROP_STREAM, 0))
    for d1, d2 in zip(first.distances, second.distances):
        assert_array_equal(d1, d2)


def test_drop_distance_statistics():
    config = SystemConfig(
        num_antennas=4, num_groups=1, users_per_group=10000)
    drop = generate_drop(config, random_stream(0, DROP_STREAM, 0))
    d = drop.distances[0]
    assert config.min_distance <= d.min() and d.max() <= config.max_distance
    width = config.max_distance - config.min_distance
    std_error = width / sqrt(12.) / sqrt(d.size)
    center = (config.min_distance + config.max_distance) / 2.
    assert abs(d.mean() - center) < 3 * std_error


def test_degenerate_distance_interval():
    config = SystemConfig(
        num_antennas=4, num_groups=2, users_per_group=3, min_distance=0.5,
        max_distance=0.5)
    drop = generate_drop(config, default_rng(0))
    assert all((d == 0.5).all() for d in drop.distances)


def test_channels_are_reproducible():
    config = SystemConfig(num_antennas=8, num_groups=3, users_per_group=2)
    assert draw_channels(config, 1, 2) == draw_channels(config, 1, 2)
    assert not draw_channels(config, 1, 2) == draw_channels(config, 1, 3)


def test_drops_are_shared_across_antennas():
    config = SystemConfig(num_antennas=4, num_groups=3, users_per_group=2)
    small = draw_channels(config, 0, 0)
    large = draw_channels(config.copy(num_antennas=16), 0, 0)
    for b1, b2 in zip(small.variances, large.variances):
        assert_array_equal(b1, b2)


def test_channel_second_moment():
    config = SystemConfig(
        num_antennas=100, num_groups=1, users_per_group=100)
    drop = generate_drop(config, default_rng(1))
    channels = generate_channels(drop, config, default_rng(2))
    g = channels.normalized[0]
    assert abs((npabs(g) ** 2).mean() - 1.) < 0.05


def test_channel_scaling():
    g = array([[1. + 1j], [2. - 1j]])
    channels = ChannelSet([g], [array([4.])])
    assert_allclose(norm(channels.matrices[0][:, 0]), 2 * norm(g[:, 0]))


def test_channel_set_shapes(rng):
    g = rng.standard_normal((4, 3)) + 0j
    channels = ChannelSet([g, g[:, :1]], [[1., 2., 3.], [1.]])
    assert channels.num_antennas == 4
    assert channels.num_groups == 2
    assert channels.users_per_group == [3, 1]
    with pytest.raises(ValueError):
        channels.matrices[0][0, 0] = 0.
    with pytest.raises(DomainError):
        ChannelSet([g], [[1., 2.]])
    with pytest.raises(DomainError):
        ChannelSet([g], [[1., -2., 3.]])
    g[:, 1] = 0.
    with pytest.raises(DomainError):
        ChannelSet([g], [[1., 2., 3.]])


def test_channel_set_from_channels(rng):
    H = rng.standard_normal((3, 2)) + 1j * rng.standard_normal((3, 2))
    channels = ChannelSet.from_channels([H], [[2., 0.5]])
    assert_allclose(channels.matrices[0], H)
    assert_allclose(channels.normalized[0][:, 0], H[:, 0] / sqrt(2.))


def test_channel_set_json(tmp_path):
    config = SystemConfig(num_antennas=4, num_groups=2, users_per_group=3)
    channels = draw_channels(config, 0, 0)
    path = str(tmp_path / 'channels.json')
    channels.save(path)
    assert ChannelSet.load(path) == channels


def test_user_drop_variances():
    drop = UserDrop([[0.5, 1.]], 2.)
    assert_allclose(concatenate(drop.variances(3.)), [16., 2.])
