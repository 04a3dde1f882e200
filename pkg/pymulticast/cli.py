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
Command-line interface: ``pymulticast schedule | sweep | calibrate``.
"""

import argparse
import os
import simplejson
import sys

from numpy.linalg import LinAlgError

from . import misc
from .exceptions import ConfigError, PymulticastError
from .experiment import SCHEDULERS, ExperimentConfig, emit, run_pipeline
from .experiment import sweep
from .gss import save_gss_trace
from .misc import error, info
from .psa import write_trace
from .system import SCHEDULE_STREAM, SystemConfig, calibrate_pathloss_constant
from .system import draw_channels, random_stream


class ArgumentParser(argparse.ArgumentParser):

    """Argument parser reporting usage errors as configuration errors."""

    def error(self, message):
        raise ConfigError(message)


def load_config(path):
    """
    Load an experiment configuration.

    Parameters
    ----------
    path : string
        Path to a JSON document, either an experiment configuration (with a
        ``system`` key) or a bare system configuration.

    Returns
    -------
    config : ExperimentConfig
        Experiment configuration.
    """
    try:
        with open(path, 'r') as fp:
            d = simplejson.load(fp)
    except (IOError, OSError) as e:
        raise ConfigError("cannot read %s: %s" % (path, e))
    except ValueError as e:
        raise ConfigError("%s is not valid JSON: %s" % (path, e))
    if not isinstance(d, dict):
        raise ConfigError("%s should contain a JSON object" % path)
    if 'system' in d:
        return ExperimentConfig.from_dict(d)
    return ExperimentConfig(SystemConfig.from_dict(d))


def apply_overrides(config, args):
    """
    Apply command-line flags to a configuration.

    Parameters
    ----------
    config : ExperimentConfig
        Configuration, modified in place.
    args : argparse.Namespace
        Parsed command line.
    """
    if getattr(args, 'seed', None) is not None:
        config.system = config.system.copy(rng_seed=args.seed)
    if getattr(args, 'scheduler', None) is not None:
        config.scheduler = args.scheduler
    threshold = None
    if getattr(args, 'alpha', None) is not None:
        if config.scheduler != 'gss':
            raise ConfigError("--alpha only applies to the gss scheduler")
        threshold = args.alpha
    if getattr(args, 'tau', None) is not None:
        if config.scheduler != 'gsc':
            raise ConfigError("--tau only applies to the gsc scheduler")
        threshold = args.tau
    if threshold is not None:
        config.thresholds = [threshold]
    if getattr(args, 'antennas', None) is not None:
        config.antennas = [args.antennas]
    if getattr(args, 'out', None) is not None:
        config.output_dir = args.out
    config.validate()
    return config


def run_schedule(args):
    config = apply_overrides(load_config(args.config), args)
    N = config.antennas[0]
    system = config.system.copy(num_antennas=N)
    threshold = config.threshold_grid[0][1]
    channels = draw_channels(system, args.drop, args.realization)
    stream = random_stream(
        system.rng_seed, SCHEDULE_STREAM, N, 0, args.drop, args.realization)
    gss_trace = [] if config.scheduler == 'gss' else None
    result = run_pipeline(
        channels, system, config.scheduler, threshold, stream, config.psa,
        config.beamforming_psa, config.gsc_tolerance,
        config.gsc_max_iterations, gss_trace=gss_trace)
    if args.trace_dir is not None:
        write_instance_traces(args.trace_dir, result, gss_trace)
    output = {
        'scheduler': config.scheduler,
        'N': N,
        'threshold': threshold,
        'drop': args.drop,
        'realization': args.realization,
        'T': result.T,
        'slots': [list(slot) for slot in result.schedule.slots],
        'slot_min_rates': [float('%.9g' % s.min_rate) for s in result.slots],
        'min_throughput': float('%.9g' % result.min_throughput),
        'scheduling_time': float('%.9g' % result.scheduling_time)}
    sys.stdout.write(simplejson.dumps(output, indent=4) + '\n')


def write_instance_traces(directory, result, gss_trace=None):
    """
    Write the diagnostics of a single pipeline run.

    Parameters
    ----------
    directory : string
        Output directory, created if needed.
    result : PipelineResult
        Outcome of :func:`pymulticast.experiment.run_pipeline`.
    gss_trace : list of GssStep, optional
        Selection steps of the GSS scheduler.
    """
    if not os.path.isdir(directory):
        os.makedirs(directory)
    for d in result.directions or []:
        write_trace(
            os.path.join(directory, 'direction_%d.csv' % d.group), d.trace)
    for slot in result.slots:
        write_trace(
            os.path.join(directory, 'beamforming_%d.csv' % slot.slot),
            slot.trace)
    if gss_trace is not None:
        save_gss_trace(os.path.join(directory, 'gss_trace.csv'), gss_trace)
    if result.clustering is not None:
        result.clustering.save(os.path.join(directory, 'clustering.json'))
    info("traces written to %s" % directory)


def run_sweep(args):
    config = apply_overrides(load_config(args.config), args)
    result = sweep(config, jobs=args.jobs, directory=config.output_dir)
    for path in emit(result, config.output_dir):
        info("wrote %s" % path)


def run_calibrate(args):
    config = load_config(args.config)
    if args.seed is not None:
        config.system = config.system.copy(rng_seed=args.seed)
    xi = calibrate_pathloss_constant(config.system)
    sys.stdout.write('%.9g\n' % xi)


def build_parser():
    parser = ArgumentParser(
        prog='pymulticast',
        description="Joint group scheduling and multi-group multicast "
        "beamforming simulator.")
    parser.add_argument(
        '--quiet', action='store_true', help="only log errors")
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    schedule = subparsers.add_parser(
        'schedule', help="schedule one channel realization")
    schedule.set_defaults(func=run_schedule)
    sweep_parser = subparsers.add_parser(
        'sweep', help="run a Monte-Carlo sweep")
    sweep_parser.set_defaults(func=run_sweep)
    calibrate = subparsers.add_parser(
        'calibrate', help="print the pathloss constant of a configuration")
    calibrate.set_defaults(func=run_calibrate)

    for sub in (schedule, sweep_parser, calibrate):
        sub.add_argument(
            '--config', required=True, help="JSON configuration file")
        sub.add_argument('--seed', type=int, help="master random seed")
        sub.add_argument(
            '--quiet', action='store_true', default=argparse.SUPPRESS,
            help="only log errors")
    for sub in (schedule, sweep_parser):
        sub.add_argument('--scheduler', choices=SCHEDULERS)
        sub.add_argument(
            '--alpha', type=float, help="semi-orthogonality threshold")
        sub.add_argument(
            '--tau', type=float, help="similarity threshold")
    schedule.add_argument('--antennas', type=int, help="number of antennas")
    schedule.add_argument('--drop', type=int, default=0)
    schedule.add_argument('--realization', type=int, default=0)
    schedule.add_argument(
        '--trace-dir', help="directory for solver and scheduler traces")
    sweep_parser.add_argument('--out', help="output directory")
    sweep_parser.add_argument(
        '--jobs', type=int, default=1, help="number of worker processes")
    return parser


def main(argv=None):
    """
    Run the command-line interface.

    Parameters
    ----------
    argv : list of strings, optional
        Command-line arguments, defaults to ``sys.argv[1:]``.

    Returns
    -------
    status : int
        Exit code: 0 on success, 1 on configuration errors, 2 on runtime
        errors.
    """
    try:
        args = build_parser().parse_args(argv)
        if args.quiet:
            misc.set_verbosity(0)
        if getattr(args, 'jobs', 1) < 1:
            raise ConfigError("--jobs should be at least one")
        args.func(args)
    except ConfigError as e:
        error("configuration error: %s" % e)
        return 1
    except (PymulticastError, LinAlgError, IOError, OSError) as e:
        error(str(e))
        return 2
    return 0
