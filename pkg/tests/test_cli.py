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


import os
import pytest
import simplejson

from numpy.testing import assert_allclose

from pymulticast.cli import load_config, main
from pymulticast.exceptions import ConfigError
from pymulticast.experiment import ExperimentConfig
from pymulticast.psa import PsaSettings
from pymulticast.system import SystemConfig


@pytest.fixture
def system_path(tmp_path):
    path = str(tmp_path / 'system.json')
    SystemConfig(
        num_antennas=4, num_groups=3, users_per_group=2).save(path)
    return path


@pytest.fixture
def experiment_path(tmp_path):
    path = str(tmp_path / 'experiment.json')
    system = SystemConfig(num_antennas=4, num_groups=3, users_per_group=2)
    ExperimentConfig(
        system, scheduler='gss', thresholds=[0.3], num_drops=1,
        num_realizations=2, psa=PsaSettings(max_iterations=30, window=10),
        output_dir=str(tmp_path / 'results')).save(path)
    return path


def test_load_config(system_path, experiment_path):
    assert load_config(system_path).system.num_groups == 3
    assert load_config(experiment_path).thresholds == [0.3]


def test_load_config_errors(tmp_path):
    path = str(tmp_path / 'broken.json')
    with open(path, 'w') as fp:
        fp.write('{"num_antennas": ')
    with pytest.raises(ConfigError):
        load_config(path)
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / 'missing.json'))


def test_calibrate(system_path, capsys):
    assert main(['calibrate', '--config', system_path]) == 0
    assert_allclose(float(capsys.readouterr().out), 10 ** -0.5, rtol=1e-8)


def test_schedule(experiment_path, capsys):
    status = main([
        'schedule', '--config', experiment_path, '--scheduler',
        'single-slot'])
    assert status == 0
    output = simplejson.loads(capsys.readouterr().out)
    assert output['T'] == 1
    assert output['slots'] == [[0, 1, 2]]
    assert output['min_throughput'] > 0.


def test_schedule_traces(experiment_path, tmp_path, capsys):
    trace_dir = str(tmp_path / 'traces')
    status = main([
        'schedule', '--config', experiment_path, '--alpha', '0.5',
        '--seed', '3', '--trace-dir', trace_dir])
    assert status == 0
    output = simplejson.loads(capsys.readouterr().out)
    assert output['threshold'] == 0.5
    names = os.listdir(trace_dir)
    assert 'gss_trace.csv' in names
    assert {'direction_0.csv', 'direction_1.csv', 'direction_2.csv'} <= \
        set(names)
    assert 'beamforming_0.csv' in names


def test_schedule_clustering_dump(experiment_path, tmp_path, capsys):
    trace_dir = str(tmp_path / 'traces')
    status = main([
        'schedule', '--config', experiment_path, '--scheduler', 'gsc',
        '--tau', '0.7', '--trace-dir', trace_dir])
    assert status == 0
    assert os.path.exists(os.path.join(trace_dir, 'clustering.json'))


def test_sweep(experiment_path, tmp_path, capsys):
    out = str(tmp_path / 'sweep')
    status = main([
        '--quiet', 'sweep', '--config', experiment_path, '--out', out,
        '--jobs', '1'])
    assert status == 0
    assert sorted(os.listdir(out)) == [
        'cdf_4_0.3.csv', 'result.json', 'summary.csv']
    assert 'INFO' not in capsys.readouterr().err


@pytest.mark.parametrize("args", [
    ['schedule'],
    ['frobnicate'],
    ['schedule', '{config}', '--scheduler', 'gsc', '--alpha', '0.3'],
    ['sweep', '{config}', '--jobs', '0'],
    ['sweep', '{config}', '--alpha', '1.5']])
def test_configuration_errors(experiment_path, args):
    argv = []
    for arg in args:
        argv.extend(
            ['--config', experiment_path] if arg == '{config}' else [arg])
    assert main(argv) == 1


def test_unknown_config_key(tmp_path):
    path = str(tmp_path / 'bad.json')
    with open(path, 'w') as fp:
        simplejson.dump({'num_antennas': 4, 'colour': 'blue'}, fp)
    assert main(['calibrate', '--config', path]) == 1


def test_runtime_error(experiment_path, tmp_path):
    blocker = tmp_path / 'file'
    blocker.write_text('')
    status = main([
        'sweep', '--config', experiment_path, '--out',
        str(blocker / 'out')])
    assert status == 2


def test_shipped_configs():
    directory = os.path.join(os.path.dirname(__file__), '..', 'configs')
    for name in sorted(os.listdir(directory)):
        config = load_config(os.path.join(directory, name))
        config.validate()
