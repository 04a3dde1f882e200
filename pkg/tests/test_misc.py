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


from numpy import array, sqrt
from numpy.testing import assert_allclose

from pymulticast import misc
from pymulticast.misc import AvgStdEstimator, cosine_similarity
from pymulticast.misc import db_to_linear, linear_to_db, norm


def test_avg_std_estimator():
    estimator = AvgStdEstimator()
    assert estimator.avg is None
    assert estimator.std is None
    for x in [1., 2., 3., 4.]:
        estimator.add(x)
    assert estimator.n == 4
    assert_allclose(estimator.avg, 2.5)
    assert_allclose(estimator.std, sqrt(5. / 3.))
    assert estimator.x_min == 1. and estimator.x_max == 4.
    estimator.reset()
    assert estimator.n == 0


def test_single_value_has_zero_std():
    estimator = AvgStdEstimator()
    estimator.add(3.)
    assert estimator.std == 0.


def test_decibels():
    assert_allclose(db_to_linear(-5.), 10 ** -0.5)
    assert_allclose(linear_to_db(db_to_linear(7.)), 7.)


def test_complex_norm_and_cosine():
    v = array([1 + 1j, 1 - 1j])
    assert_allclose(norm(v), 2.)
    assert_allclose(cosine_similarity(v, 1j * v), 1.)
    assert_allclose(cosine_similarity(array([1., 0.]), array([0., 1.])), 0.)


def test_verbosity_filters_messages(capsys):
    try:
        misc.set_verbosity(0)
        misc.info("hidden")
        misc.warn("hidden")
        misc.error("shown")
    finally:
        misc.set_verbosity(2)
    err = capsys.readouterr().err
    assert "hidden" not in err
    assert "shown" in err and "[ERROR]" in err
