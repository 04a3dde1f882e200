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

from setuptools import setup

setup(
    name='pymulticast',
    version='0.1.0',
    description="Joint group scheduling and multi-group multicast "
    "beamforming for downlink multi-antenna systems",
    author="The pymulticast developers",
    license="GPL",
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Operating System :: POSIX :: Linux',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics'],
    packages=['pymulticast'],
    python_requires='>=3.8',
    install_requires=['numpy>=1.17', 'scipy', 'simplejson'],
    extras_require={'tests': ['pytest']},
    entry_points={
        'console_scripts': ['pymulticast = pymulticast.cli:main']},
)
