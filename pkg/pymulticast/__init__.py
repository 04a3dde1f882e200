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


from .beamforming import SlotBeamformers
from .beamforming import asymptotic_beamformers
from .beamforming import min_throughput
from .beamforming import psa_mmf_slot
from .direction import GroupDirection
from .direction import all_group_directions
from .exceptions import ConfigError
from .exceptions import ContractError
from .exceptions import DegenerateDirectionError
from .exceptions import DomainError
from .exceptions import PipelineError
from .exceptions import PymulticastError
from .exceptions import SingularMatrixError
from .experiment import ExperimentConfig
from .experiment import ExperimentResult
from .experiment import emit
from .experiment import empirical_cdf
from .experiment import run_pipeline
from .experiment import sweep
from .gsc import build_feature_space
from .gsc import mean_shift_cluster
from .gsc import mgms_gsc
from .gss import mgms_gss
from .misc import error
from .misc import info
from .misc import set_verbosity
from .misc import warn
from .psa import ProjectedSubgradientAscent
from .psa import PsaSettings
from .schedule import Schedule
from .system import ChannelSet
from .system import SystemConfig
from .system import draw_channels

__all__ = [
    'ChannelSet',
    'ConfigError',
    'ContractError',
    'DegenerateDirectionError',
    'DomainError',
    'ExperimentConfig',
    'ExperimentResult',
    'GroupDirection',
    'PipelineError',
    'ProjectedSubgradientAscent',
    'PsaSettings',
    'PymulticastError',
    'Schedule',
    'SingularMatrixError',
    'SlotBeamformers',
    'SystemConfig',
    'all_group_directions',
    'asymptotic_beamformers',
    'build_feature_space',
    'draw_channels',
    'emit',
    'empirical_cdf',
    'error',
    'info',
    'mean_shift_cluster',
    'mgms_gsc',
    'mgms_gss',
    'min_throughput',
    'psa_mmf_slot',
    'run_pipeline',
    'set_verbosity',
    'sweep',
    'warn',
]

__version__ = '0.1.0'
