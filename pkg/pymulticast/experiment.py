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
Monte-Carlo experiments: single-instance pipeline, parameter sweeps,
statistics and result files.
"""

import csv
import os
import simplejson

from multiprocessing import Pool
from numpy import median, unique
from numpy.linalg import LinAlgError
from time import time

from .beamforming import min_throughput, psa_mmf_slot
from .direction import all_group_directions
from .exceptions import ConfigError, DomainError, PipelineError
from .exceptions import PymulticastError
from .gsc import build_feature_space, mean_shift_cluster, mgms_gsc
from .gss import mgms_gss
from .misc import AvgStdEstimator, info, warn
from .psa import PsaSettings
from .schedule import g_slots_schedule, single_slot_schedule
from .system import SCHEDULE_STREAM, SystemConfig, draw_channels
from .system import random_stream

SCHEDULERS = ('gss', 'gsc', 'single-slot', 'g-slots')
"""Available group schedulers."""

BASELINES = ('single-slot', 'g-slots')
"""Schedulers that need neither group directions nor a threshold."""


def _round(x):
    """Round to 9 significant digits, the precision of all result files."""
    return None if x is None else float('%.9g' % x)


def _fmt(x):
    return '' if x is None else '%.9g' % x


SUMMARY_FIELDS = [
    'scheduler', 'N', 'threshold', 'mean_T', 'mean_min_throughput',
    'mean_sched_time_s', 'runs_ok', 'runs_failed']


def summary_row(cell):
    """Row of ``summary.csv`` for one cell."""
    return [
        cell.scheduler, cell.N, _fmt(cell.threshold), _fmt(cell.mean_T),
        _fmt(cell.mean_min_throughput), _fmt(cell.mean_sched_time),
        cell.runs_ok, cell.runs_failed]


class ExperimentConfig(object):

    """
    Parameters of a Monte-Carlo sweep.

    Parameters
    ----------
    system : SystemConfig
        System configuration. Its number of antennas is replaced by each value
        of `antennas`.
    scheduler : string, optional
        One of 'gss', 'gsc', 'single-slot' or 'g-slots'.
    thresholds : list of scalars, optional
        Grid of semi-orthogonality thresholds :math:`\\alpha` (GSS) or
        similarity thresholds :math:`\\tau` (GSC). Ignored by baselines.
    antennas : list of ints, optional
        Grid of numbers of antennas :math:`N`. Defaults to the one of
        `system`.
    num_drops : int, optional
        Number of user drops.
    num_realizations : int, optional
        Number of channel realizations per user drop.
    psa : PsaSettings, optional
        Ascent settings of the direction phase, and of the beamforming phase
        unless `beamforming_psa` is set.
    beamforming_psa : PsaSettings, optional
        Ascent settings of the beamforming phase.
    gsc_tolerance : scalar, optional
        Convergence threshold of mean-shift centroids.
    gsc_max_iterations : int, optional
        Maximum number of centroid updates per cluster.
    output_dir : string, optional
        Directory where result files are written.
    """

    FIELDS = (
        'system', 'scheduler', 'thresholds', 'antennas', 'num_drops',
        'num_realizations', 'psa', 'beamforming_psa', 'gsc_tolerance',
        'gsc_max_iterations', 'output_dir')

    ALIASES = {'num_realizations_per_drop': 'num_realizations'}

    def __init__(self, system, scheduler='gss', thresholds=(0.2,),
                 antennas=None, num_drops=20, num_realizations=20, psa=None,
                 beamforming_psa=None, gsc_tolerance=1e-3,
                 gsc_max_iterations=100, output_dir='results'):
        self.antennas = [int(N) for N in (
            antennas if antennas is not None else [system.num_antennas])]
        self.beamforming_psa = beamforming_psa
        self.gsc_max_iterations = int(gsc_max_iterations)
        self.gsc_tolerance = float(gsc_tolerance)
        self.num_drops = int(num_drops)
        self.num_realizations = int(num_realizations)
        self.output_dir = output_dir
        self.psa = psa if psa is not None else PsaSettings()
        self.scheduler = scheduler
        self.system = system
        self.thresholds = [float(x) for x in thresholds]
        self.validate()

    def validate(self):
        """
        Check configuration invariants.

        Raises
        ------
        ConfigError
            If a field is out of its domain.
        """
        if self.scheduler not in SCHEDULERS:
            raise ConfigError("unknown scheduler '%s', choose from %s" % (
                self.scheduler, ", ".join(SCHEDULERS)))
        if not self.thresholds or not self.antennas:
            raise ConfigError("threshold and antenna grids can't be empty")
        if min(self.antennas) < 1:
            raise ConfigError("numbers of antennas should be positive")
        if self.num_drops < 1 or self.num_realizations < 1:
            raise ConfigError("need at least one drop and one realization")
        if self.scheduler == 'gss' and not all(
                0. < x <= 1. for x in self.thresholds):
            raise ConfigError("alpha thresholds should be in (0, 1]")
        if self.scheduler == 'gsc' and min(self.thresholds) <= 0.:
            raise ConfigError("tau thresholds should be positive")
        if self.gsc_tolerance <= 0. or self.gsc_max_iterations < 1:
            raise ConfigError("invalid mean-shift stopping criterion")

    @property
    def threshold_grid(self):
        """
        Pairs (index, threshold) of the threshold grid, a single
        ``(0, None)`` pair for baselines.
        """
        if self.scheduler in BASELINES:
            return [(0, None)]
        return list(enumerate(self.thresholds))

    @property
    def runs_per_cell(self):
        """Number of Monte-Carlo runs in each (N, threshold) cell."""
        return self.num_drops * self.num_realizations

    def as_dict(self):
        d = {key: getattr(self, key) for key in self.FIELDS}
        d['system'] = self.system.as_dict()
        d['psa'] = self.psa.as_dict()
        if self.beamforming_psa is not None:
            d['beamforming_psa'] = self.beamforming_psa.as_dict()
        return d

    @staticmethod
    def from_dict(d):
        """
        Create a configuration from a dictionary of fields.

        Parameters
        ----------
        d : dict
            Dictionary whose keys are configuration field names.
            ``num_realizations_per_drop`` is accepted for
            ``num_realizations``.
        """
        d = dict(d)
        for alias, key in ExperimentConfig.ALIASES.items():
            if alias in d:
                if key in d:
                    raise ConfigError("both '%s' and '%s' given" % (
                        alias, key))
                d[key] = d.pop(alias)
        unknown = set(d) - set(ExperimentConfig.FIELDS)
        if unknown:
            raise ConfigError("unknown experiment fields: %s" % (
                ", ".join(sorted(unknown))))
        if 'system' not in d:
            raise ConfigError("experiment configuration needs 'system'")
        d['system'] = SystemConfig.from_dict(d['system'])
        for key in ('psa', 'beamforming_psa'):
            if d.get(key) is not None:
                d[key] = PsaSettings.from_dict(d[key])
        try:
            return ExperimentConfig(**d)
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
            return ExperimentConfig.from_dict(simplejson.load(fp))

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


class PipelineResult(object):

    """
    Outcome of the three phases on one channel realization.

    Parameters
    ----------
    schedule : Schedule
        Time slots of the groups.
    slots : list of SlotBeamformers
        Beamformers of each time slot.
    min_throughput : scalar
        Minimum user throughput in [bits/s/Hz].
    scheduling_time : scalar
        Wall time of the scheduling phase in [s].
    directions : list of GroupDirection, optional
        Group-channel directions, if the scheduler needed them.
    clustering : Clustering, optional
        Clusters formed by the GSC scheduler.
    """

    def __init__(self, schedule, slots, min_throughput, scheduling_time,
                 directions=None, clustering=None):
        self.clustering = clustering
        self.directions = directions
        self.min_throughput = min_throughput
        self.schedule = schedule
        self.scheduling_time = scheduling_time
        self.slots = slots

    @property
    def T(self):
        """Number of time slots."""
        return self.schedule.T


def run_pipeline(channels, config, scheduler, threshold, stream, psa=None,
                 beamforming_psa=None, gsc_tolerance=1e-3,
                 gsc_max_iterations=100, directions=None, gss_trace=None):
    """
    Compute group directions, schedule groups and compute beamformers.

    Parameters
    ----------
    channels : ChannelSet
        User channels.
    config : SystemConfig
        System configuration providing power budget and noise variance.
    scheduler : string
        One of 'gss', 'gsc', 'single-slot' or 'g-slots'.
    threshold : scalar or None
        Threshold :math:`\\alpha` (GSS) or :math:`\\tau` (GSC).
    stream : numpy.random.Generator
        Random stream of the scheduler.
    psa : PsaSettings, optional
        Ascent settings of the direction phase.
    beamforming_psa : PsaSettings, optional
        Ascent settings of the beamforming phase, defaults to `psa`.
    gsc_tolerance : scalar, optional
        Convergence threshold of mean-shift centroids.
    gsc_max_iterations : int, optional
        Maximum number of centroid updates per cluster.
    directions : list of GroupDirection, optional
        Precomputed group directions, e.g. shared by a threshold sweep.
    gss_trace : list, optional
        Filled with the selection steps of the GSS scheduler.

    Returns
    -------
    result : PipelineResult
        Schedule, beamformers and minimum user throughput.

    Raises
    ------
    PipelineError
        With the label of the phase where the failure happened.
    """
    if scheduler not in SCHEDULERS:
        raise ConfigError("unknown scheduler '%s'" % scheduler)
    if beamforming_psa is None:
        beamforming_psa = psa
    P, noise = config.power_budget, config.noise_variance
    G = channels.num_groups
    clustering = None
    if scheduler not in BASELINES and directions is None:
        try:
            directions = all_group_directions(channels, config, psa)
        except (PymulticastError, LinAlgError) as e:
            raise PipelineError('directions', e)
    t0 = time()
    try:
        if scheduler == 'gss':
            schedule = mgms_gss(
                directions, channels, threshold, P, noise, trace=gss_trace)
        elif scheduler == 'gsc':
            space = build_feature_space(directions)
            clustering = mean_shift_cluster(
                space, threshold, gsc_tolerance, gsc_max_iterations)
            schedule = mgms_gsc(clustering, channels, P, noise, stream)
        elif scheduler == 'single-slot':
            schedule = single_slot_schedule(G)
        else:  # scheduler == 'g-slots'
            schedule = g_slots_schedule(G)
    except (PymulticastError, LinAlgError) as e:
        raise PipelineError('scheduling', e)
    scheduling_time = time() - t0
    try:
        slots = [
            psa_mmf_slot(channels, groups, P, noise, beamforming_psa, slot=t)
            for (t, groups) in enumerate(schedule.slots)]
        throughput = min_throughput(slots, schedule.T)
    except (PymulticastError, LinAlgError) as e:
        raise PipelineError('beamforming', e)
    return PipelineResult(
        schedule, slots, throughput, scheduling_time, directions, clustering)


class RunRecord(object):

    """
    Outcome of one Monte-Carlo run.

    Parameters
    ----------
    N : int
        Number of antennas.
    threshold : scalar or None
        Scheduler threshold.
    drop : int
        User-drop index.
    realization : int
        Channel-realization index.
    T : int, optional
        Number of time slots, ``None`` for failed runs.
    sizes : list of ints, optional
        Number of groups in each time slot.
    min_throughput : scalar, optional
        Minimum user throughput in [bits/s/Hz].
    scheduling_time : scalar, optional
        Wall time of the scheduling phase in [s].
    first_cluster_iterations : int, optional
        Centroid updates of the first GSC cluster.
    error : string, optional
        Error message of a failed run.
    """

    FIELDS = (
        'N', 'threshold', 'drop', 'realization', 'T', 'sizes',
        'min_throughput', 'scheduling_time', 'first_cluster_iterations',
        'error')

    def __init__(self, N, threshold, drop, realization, T=None, sizes=None,
                 min_throughput=None, scheduling_time=None,
                 first_cluster_iterations=None, error=None):
        self.N = N
        self.T = T
        self.drop = drop
        self.error = error
        self.first_cluster_iterations = first_cluster_iterations
        self.min_throughput = min_throughput
        self.realization = realization
        self.scheduling_time = scheduling_time
        self.sizes = sizes
        self.threshold = threshold

    @property
    def ok(self):
        return self.error is None

    def as_dict(self):
        d = {key: getattr(self, key) for key in self.FIELDS}
        for key in ('threshold', 'min_throughput', 'scheduling_time'):
            d[key] = _round(d[key])
        return d

    @staticmethod
    def from_dict(d):
        return RunRecord(**d)


class CellResult(object):

    """
    Statistics of all runs sharing the same number of antennas and threshold.

    Parameters
    ----------
    scheduler : string
        Scheduler name.
    N : int
        Number of antennas.
    threshold : scalar or None
        Scheduler threshold.
    mean_T : scalar
        Average number of time slots.
    mean_min_throughput : scalar
        Average minimum user throughput in [bits/s/Hz].
    std_min_throughput : scalar
        Standard deviation of the minimum user throughput.
    mean_sched_time : scalar
        Average wall time of the scheduling phase in [s].
    runs_ok : int
        Number of successful runs.
    runs_failed : int
        Number of failed runs.
    cdf : list of pairs
        Empirical CDF of the number of groups per time slot.
    median_first_cluster_iterations : scalar, optional
        Median number of centroid updates of the first GSC cluster.
    """

    FIELDS = (
        'scheduler', 'N', 'threshold', 'mean_T', 'mean_min_throughput',
        'std_min_throughput', 'mean_sched_time', 'runs_ok', 'runs_failed',
        'cdf', 'median_first_cluster_iterations')

    def __init__(self, scheduler, N, threshold, mean_T, mean_min_throughput,
                 std_min_throughput, mean_sched_time, runs_ok, runs_failed,
                 cdf, median_first_cluster_iterations=None):
        self.N = N
        self.cdf = [(int(v), p) for (v, p) in cdf]
        self.mean_T = mean_T
        self.mean_min_throughput = mean_min_throughput
        self.mean_sched_time = mean_sched_time
        self.median_first_cluster_iterations = median_first_cluster_iterations
        self.runs_failed = runs_failed
        self.runs_ok = runs_ok
        self.scheduler = scheduler
        self.std_min_throughput = std_min_throughput
        self.threshold = threshold

    @staticmethod
    def aggregate(scheduler, N, threshold, records):
        """
        Compute cell statistics from run records.

        Parameters
        ----------
        scheduler : string
            Scheduler name.
        N : int
            Number of antennas.
        threshold : scalar or None
            Scheduler threshold.
        records : list of RunRecord
            Records of all runs of the cell, failed ones included.
        """
        ok = [record for record in records if record.ok]
        T, throughput, sched_time = (
            AvgStdEstimator(), AvgStdEstimator(), AvgStdEstimator())
        sizes = []
        for record in ok:
            T.add(record.T)
            throughput.add(record.min_throughput)
            sched_time.add(record.scheduling_time)
            sizes.extend(record.sizes)
        iterations = [
            record.first_cluster_iterations for record in ok
            if record.first_cluster_iterations is not None]
        return CellResult(
            scheduler, N, threshold, T.avg, throughput.avg, throughput.std,
            sched_time.avg, len(ok), len(records) - len(ok),
            empirical_cdf(sizes) if sizes else [],
            float(median(iterations)) if iterations else None)

    def as_dict(self):
        d = {key: getattr(self, key) for key in self.FIELDS}
        for key in ('threshold', 'mean_T', 'mean_min_throughput',
                    'std_min_throughput', 'mean_sched_time',
                    'median_first_cluster_iterations'):
            d[key] = _round(d[key])
        d['cdf'] = [[v, _round(p)] for (v, p) in self.cdf]
        return d

    @staticmethod
    def from_dict(d):
        return CellResult(**d)


class ExperimentResult(object):

    """
    Aggregated statistics and per-run records of a sweep.

    Parameters
    ----------
    config : ExperimentConfig
        Configuration of the sweep.
    cells : list of CellResult
        Statistics of each (N, threshold) cell, in grid order.
    records : list of RunRecord
        Outcome of every run.
    """

    def __init__(self, config, cells, records):
        self.cells = cells
        self.config = config
        self.records = records

    def cell(self, N, threshold=None):
        """
        Statistics of one cell.

        Parameters
        ----------
        N : int
            Number of antennas.
        threshold : scalar, optional
            Scheduler threshold, ``None`` for baselines.
        """
        for cell in self.cells:
            if cell.N == N and cell.threshold == threshold:
                return cell
        raise KeyError("no cell for N=%d, threshold=%s" % (N, threshold))

    def best_threshold(self, N):
        """
        Threshold of highest average minimum throughput.

        Parameters
        ----------
        N : int
            Number of antennas.

        Returns
        -------
        cell : CellResult
            Statistics of the best cell for this number of antennas.
        """
        cells = [cell for cell in self.cells
                 if cell.N == N and cell.mean_min_throughput is not None]
        if not cells:
            raise KeyError("no successful cell for N=%d" % N)
        return max(cells, key=lambda cell: cell.mean_min_throughput)

    def mean_best_instance_throughput(self, N):
        """
        Average over channel realizations of the minimum throughput obtained
        with the best threshold of each realization.

        Parameters
        ----------
        N : int
            Number of antennas.

        Returns
        -------
        throughput : scalar
            Average best minimum throughput, in [bits/s/Hz].
        """
        best = {}
        for record in self.records:
            if record.N != N or not record.ok:
                continue
            key = (record.drop, record.realization)
            best[key] = max(best.get(key, 0.), record.min_throughput)
        if not best:
            raise KeyError("no successful run for N=%d" % N)
        return sum(best.values()) / len(best)

    def as_dict(self):
        return {
            'config': self.config.as_dict(),
            'cells': [cell.as_dict() for cell in self.cells],
            'records': [record.as_dict() for record in self.records]}

    @staticmethod
    def from_dict(d):
        return ExperimentResult(
            ExperimentConfig.from_dict(d['config']),
            [CellResult.from_dict(c) for c in d['cells']],
            [RunRecord.from_dict(r) for r in d['records']])

    @staticmethod
    def load(path):
        """
        Load a result from its JSON dump.

        Parameters
        ----------
        path : string
            Path to ``result.json``.
        """
        with open(path, 'r') as fp:
            return ExperimentResult.from_dict(simplejson.load(fp))

    def __eq__(self, other):
        if not isinstance(other, ExperimentResult):
            return NotImplemented
        return self.as_dict() == other.as_dict()


def empirical_cdf(samples):
    """
    Empirical cumulative distribution of integer samples.

    Parameters
    ----------
    samples : list of ints
        Nonempty list of samples, e.g. numbers of groups per time slot.

    Returns
    -------
    cdf : list of pairs
        Pairs ``(value, probability)`` of the right-continuous step CDF at
        each distinct value, in increasing order.
    """
    if len(samples) == 0:
        raise DomainError("CDF of an empty sample list")
    values, counts = unique(samples, return_counts=True)
    total = float(counts.sum())
    cdf, cumulated = [], 0
    for value, count in zip(values, counts):
        cumulated += count
        cdf.append((int(value), cumulated / total))
    return cdf


def run_instance(args):
    """
    Run all thresholds of a sweep on one channel realization.

    Parameters
    ----------
    args : tuple
        Tuple ``(config, N, drop, realization)`` with config an
        :class:`ExperimentConfig`.

    Returns
    -------
    records : list of RunRecord
        One record per threshold of the grid.

    Notes
    -----
    Channels are drawn from streams keyed by (seed, N, drop, realization),
    so that all thresholds are compared on the same realizations, while the
    random stream of the scheduler is also keyed by the threshold index.
    """
    config, N, drop, realization = args
    system = config.system.copy(num_antennas=N)
    channels = draw_channels(system, drop, realization)
    directions, failure = None, None
    if config.scheduler not in BASELINES:
        try:
            directions = all_group_directions(channels, system, config.psa)
        except (PymulticastError, LinAlgError) as e:
            failure = str(PipelineError('directions', e))
    records = []
    for index, threshold in config.threshold_grid:
        record = RunRecord(N, threshold, drop, realization)
        if failure is not None:
            record.error = failure
            records.append(record)
            continue
        stream = random_stream(
            system.rng_seed, SCHEDULE_STREAM, N, index, drop, realization)
        try:
            result = run_pipeline(
                channels, system, config.scheduler, threshold, stream,
                config.psa, config.beamforming_psa, config.gsc_tolerance,
                config.gsc_max_iterations, directions=directions)
            record.T = result.T
            record.sizes = result.schedule.sizes
            record.min_throughput = float(result.min_throughput)
            record.scheduling_time = result.scheduling_time
            if result.clustering is not None:
                record.first_cluster_iterations = \
                    result.clustering.clusters[0].iterations
        except PipelineError as e:
            record.error = str(e)
        records.append(record)
    return records


def _makedirs(directory):
    try:
        os.makedirs(directory, exist_ok=True)
    except OSError as e:
        raise OSError(e.errno, e.strerror, directory)


def _open_summary(directory):
    _makedirs(directory)
    path = os.path.join(directory, 'summary.csv')
    try:
        fp = open(path, 'w')
    except (IOError, OSError) as e:
        raise OSError(e.errno, e.strerror, path)
    writer = csv.writer(fp)
    writer.writerow(SUMMARY_FIELDS)
    fp.flush()
    return fp, writer


def sweep(config, jobs=1, directory=None):
    """
    Run a Monte-Carlo sweep over the antenna and threshold grids.

    Parameters
    ----------
    config : ExperimentConfig
        Sweep configuration.
    jobs : int, optional
        Number of worker processes.
    directory : string, optional
        If provided, each cell is appended to ``summary.csv`` in this
        directory as soon as its runs are complete.

    Returns
    -------
    result : ExperimentResult
        Cell statistics in grid order and all run records.

    Notes
    -----
    Failed runs are logged and excluded from the statistics. The result does
    not depend on the number of jobs, apart from timings.
    """
    config.validate()
    tasks = [
        (config, N, drop, realization) for N in config.antennas
        for drop in range(config.num_drops)
        for realization in range(config.num_realizations)]
    summary, writer = None, None
    if directory is not None:
        summary, writer = _open_summary(directory)
    pool = Pool(jobs) if jobs > 1 else None
    try:
        outputs = pool.imap(run_instance, tasks) if pool else map(
            run_instance, tasks)
        cells, records = [], []
        pending = []
        for (_, N, _, _), instance_records in zip(tasks, outputs):
            for record in instance_records:
                if not record.ok:
                    warn("run N=%d drop=%d realization=%d threshold=%s "
                         "failed: %s" % (
                             N, record.drop, record.realization,
                             record.threshold, record.error))
            pending.append(instance_records)
            if len(pending) < config.runs_per_cell:
                continue
            for k, (_, threshold) in enumerate(config.threshold_grid):
                cell_records = [rec[k] for rec in pending]
                cell = CellResult.aggregate(
                    config.scheduler, N, threshold, cell_records)
                info("%s N=%d threshold=%s: mean T = %s, mean min "
                     "throughput = %s (%d ok, %d failed)" % (
                         config.scheduler, N, threshold, cell.mean_T,
                         cell.mean_min_throughput, cell.runs_ok,
                         cell.runs_failed))
                if writer is not None:
                    writer.writerow(summary_row(cell))
                    summary.flush()
                cells.append(cell)
                records.extend(cell_records)
            pending = []
    finally:
        if pool is not None:
            pool.close()
            pool.join()
        if summary is not None:
            summary.close()
    return ExperimentResult(config, cells, records)


def emit(result, directory):
    """
    Write result files.

    Parameters
    ----------
    result : ExperimentResult
        Sweep result.
    directory : string
        Output directory, created if needed.

    Returns
    -------
    paths : list of strings
        Paths of the files written: ``summary.csv``, one
        ``cdf_<N>_<threshold>.csv`` per cell and ``result.json``.

    Notes
    -----
    A ``summary.csv`` written during the sweep is replaced by the same rows.
    """
    if not result.cells:
        raise DomainError("result has no cell to write")
    paths = []

    def write(name, writer_fn):
        path = os.path.join(directory, name)
        try:
            with open(path, 'w') as fp:
                writer_fn(fp)
        except (IOError, OSError) as e:
            raise OSError(e.errno, e.strerror, path)
        paths.append(path)

    def write_summary(fp):
        writer = csv.writer(fp)
        writer.writerow(SUMMARY_FIELDS)
        for cell in result.cells:
            writer.writerow(summary_row(cell))

    _makedirs(directory)
    write('summary.csv', write_summary)
    for cell in result.cells:
        def write_cdf(fp, cell=cell):
            writer = csv.writer(fp)
            writer.writerow(['g_t', 'cdf'])
            for value, p in cell.cdf:
                writer.writerow([value, _fmt(p)])
        threshold = 'none' if cell.threshold is None else '%g' % (
            cell.threshold)
        write('cdf_%d_%s.csv' % (cell.N, threshold), write_cdf)
    write('result.json', lambda fp: simplejson.dump(
        result.as_dict(), fp, indent=4))
    return paths
