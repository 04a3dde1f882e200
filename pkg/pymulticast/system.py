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
System model of downlink multi-group multicasting: configuration, user drops
and Rayleigh-fading channels with distance-based pathloss.
"""

import simplejson

from numpy import array, asarray, isfinite, sqrt
from numpy.random import Generator, Philox, SeedSequence

from .exceptions import ConfigError, DomainError
from .misc import db_to_linear

DROP_STREAM = 0
CHANNEL_STREAM = 1
SCHEDULE_STREAM = 2


def random_stream(seed, kind, *indices):
    """
    Independent random stream for a given purpose and run indices.

    Parameters
    ----------
    seed : int
        Master seed (64-bit unsigned integer).
    kind : int
        Stream purpose, e.g. ``DROP_STREAM`` or ``CHANNEL_STREAM``.
    indices : ints
        Run indices, e.g. number of antennas, drop and realization indices.

    Returns
    -------
    stream : numpy.random.Generator
        Counter-based generator whose state depends only on the arguments.
    """
    key = (kind,) + tuple(int(i) for i in indices)
    return Generator(Philox(SeedSequence(int(seed), spawn_key=key)))


class SystemConfig(object):

    """
    Parameters of the downlink multicast system.

    Parameters
    ----------
    num_antennas : int
        Number of base-station antennas :math:`N`.
    num_groups : int, optional
        Number of multicast groups :math:`G`.
    users_per_group : int or list of ints, optional
        Number of users :math:`K_i` in each group. An integer is replicated
        for all groups.
    power_budget : scalar, optional
        Transmit power budget :math:`P` in [W].
    noise_variance : scalar, optional
        Receiver noise variance :math:`\\sigma^2` in [W].
    cell_radius : scalar, optional
        Cell radius :math:`R` in [km].
    pathloss_exponent : scalar, optional
        Pathloss exponent.
    boundary_snr_db : scalar, optional
        Nominal single-antenna unit-power SNR at the cell boundary in [dB].
    min_distance : scalar, optional
        Smallest user distance in [km].
    max_distance : scalar, optional
        Largest user distance in [km].
    rng_seed : int, optional
        Master seed of all random streams.
    """

    FIELDS = (
        'num_antennas', 'num_groups', 'users_per_group', 'power_budget',
        'noise_variance', 'cell_radius', 'pathloss_exponent',
        'boundary_snr_db', 'min_distance', 'max_distance', 'rng_seed')

    def __init__(self, num_antennas, num_groups=25, users_per_group=5,
                 power_budget=10., noise_variance=1., cell_radius=1.,
                 pathloss_exponent=3., boundary_snr_db=-5., min_distance=0.02,
                 max_distance=1.0, rng_seed=0):
        if isinstance(users_per_group, int):
            users_per_group = [users_per_group] * int(num_groups)
        self.num_antennas = int(num_antennas)
        self.num_groups = int(num_groups)
        self.users_per_group = [int(k) for k in users_per_group]
        self.power_budget = float(power_budget)
        self.noise_variance = float(noise_variance)
        self.cell_radius = float(cell_radius)
        self.pathloss_exponent = float(pathloss_exponent)
        self.boundary_snr_db = float(boundary_snr_db)
        self.min_distance = float(min_distance)
        self.max_distance = float(max_distance)
        self.rng_seed = int(rng_seed)
        self.validate()

    def validate(self):
        """
        Check configuration invariants.

        Raises
        ------
        ConfigError
            If a field is out of its domain.
        """
        if self.num_antennas < 1:
            raise ConfigError("num_antennas should be at least one")
        if self.num_groups < 1:
            raise ConfigError("num_groups should be at least one")
        if len(self.users_per_group) != self.num_groups:
            raise ConfigError("users_per_group should have %d entries" % (
                self.num_groups))
        if min(self.users_per_group) < 1:
            raise ConfigError("every group needs at least one user")
        if self.power_budget <= 0. or self.noise_variance <= 0.:
            raise ConfigError("power budget and noise variance should be > 0")
        if not (0. < self.min_distance <= self.max_distance
                <= self.cell_radius):
            raise ConfigError(
                "distances should satisfy 0 < min_distance <= max_distance "
                "<= cell_radius")
        if not 0 <= self.rng_seed < 2 ** 64:
            raise ConfigError("rng_seed should be a 64-bit unsigned integer")

    @property
    def total_users(self):
        """Total number of users in all groups."""
        return sum(self.users_per_group)

    def copy(self, **kwargs):
        """
        Copy configuration, replacing some of its fields.

        Parameters
        ----------
        kwargs : keyword arguments
            Fields to replace, e.g. ``num_antennas=64``.
        """
        d = self.as_dict()
        d.update(kwargs)
        if 'num_groups' in kwargs and 'users_per_group' not in kwargs:
            d['users_per_group'] = self.users_per_group[0]
        return SystemConfig.from_dict(d)

    def as_dict(self):
        """Dictionary of configuration fields."""
        return {key: getattr(self, key) for key in self.FIELDS}

    @staticmethod
    def from_dict(d):
        """
        Create a configuration from a dictionary of fields.

        Parameters
        ----------
        d : dict
            Dictionary whose keys are configuration field names.
        """
        unknown = set(d) - set(SystemConfig.FIELDS)
        if unknown:
            raise ConfigError("unknown system fields: %s" % (
                ", ".join(sorted(unknown))))
        try:
            return SystemConfig(**d)
        except (TypeError, ValueError) as e:
            if isinstance(e, ConfigError):
                raise
            raise ConfigError(str(e))

    @staticmethod
    def load(path):
        """
        Load configuration from a JSON file.

        Parameters
        ----------
        path : string
            Path to the JSON file.
        """
        with open(path, 'r') as fp:
            return SystemConfig.from_dict(simplejson.load(fp))

    def save(self, path):
        """
        Save configuration into a JSON file.

        Parameters
        ----------
        path : string
            Path to the JSON file.
        """
        with open(path, 'w') as fp:
            simplejson.dump(self.as_dict(), fp, indent=4, sort_keys=True)


class UserDrop(object):

    """
    Random user distances, the only geometric quantity entering the model.

    Parameters
    ----------
    distances : list of arrays
        Distance :math:`d_{ik}` in [km] of each user, one array per group.
    pathloss_constant : scalar
        Pathloss constant :math:`\\xi_o`.
    """

    def __init__(self, distances, pathloss_constant):
        self.distances = [asarray(d, dtype=float) for d in distances]
        for d in self.distances:
            d.flags.writeable = False
        self.pathloss_constant = float(pathloss_constant)

    def variances(self, exponent):
        """
        Channel variances of all users.

        Parameters
        ----------
        exponent : scalar
            Pathloss exponent.

        Returns
        -------
        betas : list of arrays
            Channel variance :math:`\\beta_{ik}` of each user, per group.
        """
        return [pathloss_variance(d, self.pathloss_constant, exponent)
                for d in self.distances]


class ChannelSet(object):

    """
    User channels :math:`h_{ik} = \\sqrt{\\beta_{ik}} g_{ik}` grouped by
    multicast group.

    Parameters
    ----------
    normalized : list of arrays
        Normalized channel matrix :math:`[g_{i1}, \\ldots, g_{iK_i}]` of shape
        (N, K_i) for each group.
    variances : list of arrays
        Channel variances :math:`\\beta_{ik}` for each group.

    Notes
    -----
    All arrays are read-only once the channel set is built.
    """

    def __init__(self, normalized, variances):
        if len(normalized) != len(variances) or not normalized:
            raise DomainError("need one variance array per group")
        self.normalized = []
        self.variances = []
        self.matrices = []
        num_antennas = asarray(normalized[0]).shape[0]
        for i, (g, beta) in enumerate(zip(normalized, variances)):
            g = array(g, dtype=complex, ndmin=2)
            beta = array(beta, dtype=float, ndmin=1)
            if g.shape != (num_antennas, beta.shape[0]):
                raise DomainError("group %d: channel matrix of shape %s does "
                                  "not match %d users" % (
                                      i, g.shape, beta.shape[0]))
            if (beta <= 0.).any() or not isfinite(g).all():
                raise DomainError("group %d: invalid channel" % i)
            zero_users = (g == 0.).all(axis=0).nonzero()[0]
            if len(zero_users) > 0:
                raise DomainError("group %d: zero channel for user %d" % (
                    i, zero_users[0]))
            H = g * sqrt(beta)
            for x in (g, beta, H):
                x.flags.writeable = False
            self.normalized.append(g)
            self.variances.append(beta)
            self.matrices.append(H)

    @staticmethod
    def from_channels(matrices, variances):
        """
        Build a channel set from unnormalized channel matrices.

        Parameters
        ----------
        matrices : list of arrays
            Channel matrix :math:`H_i` of shape (N, K_i) for each group.
        variances : list of arrays
            Channel variances :math:`\\beta_{ik}` for each group.
        """
        normalized = [
            asarray(H, dtype=complex) / sqrt(asarray(beta, dtype=float))
            for H, beta in zip(matrices, variances)]
        return ChannelSet(normalized, variances)

    @property
    def num_antennas(self):
        """Number of transmit antennas :math:`N`."""
        return self.matrices[0].shape[0]

    @property
    def num_groups(self):
        """Number of multicast groups :math:`G`."""
        return len(self.matrices)

    @property
    def users_per_group(self):
        """Number of users :math:`K_i` in each group."""
        return [H.shape[1] for H in self.matrices]

    def __eq__(self, other):
        if not isinstance(other, ChannelSet):
            return NotImplemented
        return self.num_groups == other.num_groups and all(
            g1.shape == g2.shape and (g1 == g2).all() and (b1 == b2).all()
            for g1, g2, b1, b2 in zip(
                self.normalized, other.normalized,
                self.variances, other.variances))

    def as_dict(self):
        """
        JSON-friendly dictionary where complex entries are [re, im] pairs.
        """
        return {
            'variances': [beta.tolist() for beta in self.variances],
            'normalized': [
                [[[z.real, z.imag] for z in row] for row in g]
                for g in self.normalized]}

    @staticmethod
    def from_dict(d):
        """
        Build a channel set from its dictionary representation.

        Parameters
        ----------
        d : dict
            Dictionary with 'normalized' and 'variances' keys.
        """
        normalized = []
        for g in d['normalized']:
            pairs = array(g, dtype=float)
            normalized.append(pairs[..., 0] + 1j * pairs[..., 1])
        return ChannelSet(normalized, d['variances'])

    def save(self, path):
        """
        Save channel set into a JSON file.

        Parameters
        ----------
        path : string
            Path to the JSON file.
        """
        with open(path, 'w') as fp:
            simplejson.dump(self.as_dict(), fp)

    @staticmethod
    def load(path):
        """
        Load channel set from a JSON file.

        Parameters
        ----------
        path : string
            Path to the JSON file.
        """
        with open(path, 'r') as fp:
            return ChannelSet.from_dict(simplejson.load(fp))


def pathloss_variance(d, xi, exponent=3.):
    """
    Channel variance given by the pathloss model.

    Parameters
    ----------
    d : scalar or array
        Distance(s) in [km].
    xi : scalar
        Pathloss constant :math:`\\xi_o`.
    exponent : scalar, optional
        Pathloss exponent.

    Returns
    -------
    beta : scalar or array
        Variance :math:`\\xi_o d^{-\\mathrm{exponent}}`.
    """
    d = asarray(d, dtype=float)
    if (d <= 0.).any() or xi <= 0.:
        raise DomainError("pathloss needs positive distance and constant")
    beta = xi * d ** (-exponent)
    return float(beta) if beta.ndim == 0 else beta


def calibrate_pathloss_constant(config):
    """
    Pathloss constant giving the nominal SNR at the cell boundary.

    Parameters
    ----------
    config : SystemConfig
        System configuration.

    Returns
    -------
    xi : scalar
        Pathloss constant :math:`\\xi_o` such that :math:`\\xi_o
        R^{-\\mathrm{exponent}} / \\sigma^2` equals the boundary SNR.
    """
    config.validate()
    return (config.noise_variance * db_to_linear(config.boundary_snr_db) *
            config.cell_radius ** config.pathloss_exponent)


def generate_drop(config, stream):
    """
    Draw user distances uniformly in the configured range.

    Parameters
    ----------
    config : SystemConfig
        System configuration.
    stream : numpy.random.Generator
        Random stream, e.g. ``random_stream(seed, DROP_STREAM, drop)``.

    Returns
    -------
    drop : UserDrop
        User distances and pathloss constant.
    """
    distances = [
        stream.uniform(config.min_distance, config.max_distance, size=K)
        for K in config.users_per_group]
    return UserDrop(distances, calibrate_pathloss_constant(config))


def generate_channels(drop, config, stream):
    """
    Draw i.i.d. Rayleigh-fading channels for a user drop.

    Parameters
    ----------
    drop : UserDrop
        User distances.
    config : SystemConfig
        System configuration.
    stream : numpy.random.Generator
        Random stream, e.g. ``random_stream(seed, CHANNEL_STREAM, N, drop,
        realization)``.

    Returns
    -------
    channels : ChannelSet
        Channels :math:`h_{ik} \\sim \\mathcal{CN}(0, \\beta_{ik} I)`.
    """
    N = config.num_antennas
    normalized = []
    for K in config.users_per_group:
        re = stream.standard_normal((N, K))
        im = stream.standard_normal((N, K))
        normalized.append((re + 1j * im) / sqrt(2.))
    return ChannelSet(normalized, drop.variances(config.pathloss_exponent))


def draw_channels(config, drop_index, realization_index):
    """
    Draw the user drop and channels of one Monte-Carlo run.

    Parameters
    ----------
    config : SystemConfig
        System configuration, including the master seed.
    drop_index : int
        Index of the user drop.
    realization_index : int
        Index of the channel realization within the drop.

    Returns
    -------
    channels : ChannelSet
        Channel realization, identical for identical arguments.

    Notes
    -----
    User drops do not depend on the number of antennas, so that sweeps over
    :math:`N` share the same user distances.
    """
    drop_stream = random_stream(config.rng_seed, DROP_STREAM, drop_index)
    drop = generate_drop(config, drop_stream)
    channel_stream = random_stream(
        config.rng_seed, CHANNEL_STREAM, config.num_antennas, drop_index,
        realization_index)
    return generate_channels(drop, config, channel_stream)
