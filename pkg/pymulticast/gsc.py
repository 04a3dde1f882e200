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
Scheduling by group spatial correlation: mean-shift clustering of the
phase-aligned group directions, then one group per cluster in each time slot.
"""

import simplejson

from numpy import array, exp
from numpy.linalg import norm as vnorm

from .beamforming import asymptotic_min_sinr
from .exceptions import DomainError
from .misc import norm, warn
from .numerics import phase_align
from .schedule import Schedule

DEGENERATE_CENTROID = 1e-12
"""Norm of a weighted sum of points below which a centroid stops moving."""


class FeatureSpace(object):

    """
    Unit-norm, phase-aligned group directions.

    Parameters
    ----------
    points : array, shape=(G, N)
        One point :math:`y_i` per row.
    groups : list of ints
        Group index of each row.
    """

    def __init__(self, points, groups):
        self.groups = list(groups)
        self.points = array(points, dtype=complex, ndmin=2)
        self.points.flags.writeable = False
        assert self.points.shape[0] == len(self.groups)

    def __len__(self):
        return len(self.groups)


class Cluster(object):

    """
    Cluster of spatially correlated groups.

    Parameters
    ----------
    centroid : array, shape=(N,)
        Unit-norm centroid :math:`c_r`.
    members : list of ints
        Group indices :math:`\\mathcal{I}_r`.
    iterations : int
        Number of centroid updates.
    converged : bool
        Whether the centroid update met the tolerance.
    residuals : list of scalars
        Centroid change :math:`\\|c^{(l+1)} - c^{(l)}\\|` at each update.
    """

    def __init__(self, centroid, members, iterations, converged, residuals):
        self.centroid = centroid
        self.converged = converged
        self.iterations = iterations
        self.members = sorted(members)
        self.residuals = residuals

    def __len__(self):
        return len(self.members)


class Clustering(object):

    """
    Partition of the groups into clusters.

    Parameters
    ----------
    clusters : list of Cluster
        Clusters in the order they were formed.
    tau : scalar
        Similarity threshold.
    """

    def __init__(self, clusters, tau):
        self.clusters = clusters
        self.tau = tau

    @property
    def R(self):
        """Number of clusters."""
        return len(self.clusters)

    @property
    def sizes(self):
        """Number of groups in each cluster."""
        return [len(cluster) for cluster in self.clusters]

    def labels(self):
        """
        Cluster index of each group.

        Returns
        -------
        labels : dict
            Map from group index to cluster index.
        """
        return {i: r for (r, cluster) in enumerate(self.clusters)
                for i in cluster.members}

    def as_dict(self):
        return {
            'R': self.R,
            'tau': self.tau,
            'clusters': [{
                'centroid': [[z.real, z.imag] for z in cluster.centroid],
                'members': cluster.members,
                'iterations': cluster.iterations,
                'converged': cluster.converged,
                'residuals': cluster.residuals,
            } for cluster in self.clusters]}

    def save(self, path):
        """
        Save clustering into a JSON file.

        Parameters
        ----------
        path : string
            Path to the JSON file.
        """
        with open(path, 'w') as fp:
            simplejson.dump(self.as_dict(), fp, indent=4)


def build_feature_space(directions):
    """
    Normalize and phase-align group directions.

    Parameters
    ----------
    directions : list of GroupDirection
        Group-channel directions.

    Returns
    -------
    space : FeatureSpace
        Points :math:`y_i = (\\hat{h}_i / \\|\\hat{h}_i\\|) e^{-j \\angle
        \\hat{h}_{i,1}}`.
    """
    points = []
    for d in directions:
        try:
            points.append(phase_align(d.direction))
        except DomainError:
            raise DomainError("group %d has a zero direction" % d.group)
    return FeatureSpace(points, [d.group for d in directions])


def mean_shift_cluster(space, tau, tol=1e-3, max_iter=100):
    """
    Form clusters one at a time by mean shift with a truncated Gaussian
    kernel.

    Parameters
    ----------
    space : FeatureSpace
        Phase-aligned group directions.
    tau : scalar
        Similarity threshold: window radius of the kernel.
    tol : scalar, optional
        Convergence threshold on the centroid change.
    max_iter : int, optional
        Maximum number of centroid updates per cluster.

    Returns
    -------
    clustering : Clustering
        Partition of the groups, with the number of clusters determined by
        the procedure.

    Notes
    -----
    Each centroid starts from the unassigned point with the lowest index and
    its window ranges over all points. A cluster then takes the unassigned
    points within distance `tau` of the converged centroid, so that clusters
    form a partition.
    """
    if tau <= 0. or tol <= 0. or max_iter < 1:
        raise DomainError("need positive tau, tol and max_iter")
    Y = space.points
    unassigned = list(range(len(space)))
    clusters = []
    while unassigned:
        seed = unassigned[0]
        c = Y[seed]
        residuals = []
        converged = False
        while len(residuals) < max_iter:
            dist = vnorm(Y - c, axis=1)
            inside = dist < tau
            if not inside.any():
                converged = True
                break
            weights = exp(-dist[inside] ** 2 / (2. * tau ** 2))
            c_next = weights.dot(Y[inside]) / weights.sum()
            c_norm = norm(c_next)
            if c_norm < DEGENERATE_CENTROID:
                converged = True
                break
            c_next = c_next / c_norm
            residuals.append(norm(c_next - c))
            c = c_next
            if residuals[-1] <= tol:
                converged = True
                break
        if not converged:
            warn("cluster %d did not converge in %d iterations" % (
                len(clusters), max_iter))
        dist = vnorm(Y[unassigned] - c, axis=1)
        members = [m for (m, d) in zip(unassigned, dist) if d < tau]
        if not members:
            members, c = [seed], Y[seed]
        clusters.append(Cluster(
            c, [space.groups[m] for m in members], len(residuals), converged,
            residuals))
        unassigned = [m for m in unassigned if m not in members]
    return Clustering(clusters, tau)


def mgms_gsc(clustering, channels, power, noise, stream):
    """
    Schedule groups so that every time slot takes at most one group from
    each cluster.

    Parameters
    ----------
    clustering : Clustering
        Clusters covering all groups.
    channels : ChannelSet
        User channels.
    power : scalar
        Transmit power budget :math:`P`.
    noise : scalar
        Noise variance :math:`\\sigma^2`.
    stream : numpy.random.Generator
        Random stream for the picks in the largest cluster.

    Returns
    -------
    schedule : Schedule
        As many time slots as groups in the largest cluster.

    Notes
    -----
    Each slot starts with a random group of the largest cluster (the first
    one on size ties). Then each other nonempty cluster contributes the group
    maximizing the minimum SINR of the slot under closed-form asymptotic
    beamformers, ties going to the lowest group index.
    """
    remaining = [list(cluster.members) for cluster in clustering.clusters]
    sizes = [len(members) for members in remaining]
    r_max = sizes.index(max(sizes))
    slots = []
    for _ in range(sizes[r_max]):
        largest = remaining[r_max]
        slot = [largest.pop(int(stream.integers(len(largest))))]
        for r, members in enumerate(remaining):
            if r == r_max or not members:
                continue
            best_group, best_sinr = None, None
            for i in members:
                sinr = asymptotic_min_sinr(channels, slot + [i], power, noise)
                if best_sinr is None or sinr > best_sinr:
                    best_group, best_sinr = i, sinr
            members.remove(best_group)
            slot.append(best_group)
        slots.append(slot)
    return Schedule(slots, channels.num_groups)
