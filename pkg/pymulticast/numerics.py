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
Complex linear-algebra kernels shared by the direction, beamforming and
scheduling computations.
"""

from numpy import abs as npabs
from numpy import angle, array, asarray, exp, isfinite, sum as npsum, vdot
from scipy.linalg import cho_solve
from scipy.linalg.lapack import get_lapack_funcs

from .exceptions import DegenerateDirectionError, DomainError
from .exceptions import SingularMatrixError
from .misc import norm

HERMITIAN_TOL = 1e-10
"""Relative tolerance on :math:`\\|R - R^H\\| / \\|R\\|`."""

DEGENERATE_TOL = 1e-12
"""Relative residual norm below which a vector adds no new dimension."""


class HpdMatrix(object):

    """
    Hermitian positive-definite matrix with a cached Cholesky factor.

    Parameters
    ----------
    R : array, shape=(n, n)
        Complex Hermitian matrix.

    Notes
    -----
    All matrices handled here have the form :math:`I + \\sum_k \\lambda_k
    g_k g_k^H` with non-negative weights, so their smallest eigenvalue is at
    least one and no regularization is added.
    """

    def __init__(self, R):
        R = array(R, dtype=complex)
        if R.ndim != 2 or R.shape[0] != R.shape[1]:
            raise DomainError("matrix of shape %s is not square" % (R.shape,))
        scale = max(npabs(R).max(), 1e-300)
        if npabs(R - R.conj().T).max() > HERMITIAN_TOL * scale:
            raise DomainError("matrix is not Hermitian")
        potrf, = get_lapack_funcs(('potrf',), (R,))
        c, info = potrf(R, lower=False, clean=True)
        if info > 0:
            raise SingularMatrixError(pivot=info)
        assert info == 0, "illegal argument to potrf"
        R.flags.writeable = False
        self.__factor = (c, False)
        self.matrix = R

    @property
    def dim(self):
        """Dimension of the matrix."""
        return self.matrix.shape[0]

    def solve(self, B):
        """
        Solve :math:`R X = B` by triangular substitutions.

        Parameters
        ----------
        B : array, shape=(n,) or (n, k)
            Right-hand side.

        Returns
        -------
        X : array, shape=(n,) or (n, k)
            Solution of the linear system.
        """
        return cho_solve(self.__factor, asarray(B, dtype=complex))


class OrthonormalBasis(object):

    """
    Ordered list of orthonormal complex vectors.

    Parameters
    ----------
    vectors : list of arrays, optional
        Orthonormal vectors :math:`f_1, \\ldots, f_n`.
    """

    def __init__(self, vectors=None):
        self.vectors = tuple(vectors) if vectors is not None else ()

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, m):
        return self.vectors[m]


def hpd_solve(R, B):
    """
    Solve a linear system with a Hermitian positive-definite matrix.

    Parameters
    ----------
    R : HpdMatrix or array, shape=(n, n)
        System matrix. Arrays are factorized on the fly.
    B : array, shape=(n,) or (n, k)
        Right-hand side.

    Returns
    -------
    X : array, shape=(n,) or (n, k)
        Solution of :math:`R X = B`.

    Raises
    ------
    SingularMatrixError
        If the factorization of `R` fails.
    """
    if not isinstance(R, HpdMatrix):
        R = HpdMatrix(R)
    return R.solve(B)


def gram_schmidt_append(basis, v):
    """
    Orthonormalize a vector against a basis and append the result.

    Parameters
    ----------
    basis : OrthonormalBasis
        Current orthonormal vectors.
    v : array, shape=(n,)
        Vector to append.

    Returns
    -------
    new_basis : OrthonormalBasis
        Basis extended by the new vector.
    f : array, shape=(n,)
        New unit vector, orthogonal to all vectors of `basis`.

    Raises
    ------
    DegenerateDirectionError
        If `v` lies (numerically) in the span of `basis`.

    Notes
    -----
    Modified Gram-Schmidt followed by one re-orthogonalization pass.
    """
    v = asarray(v, dtype=complex)
    if not isfinite(v).all():
        raise DomainError("vector has non-finite entries")
    v_norm = norm(v)
    if v_norm == 0.:
        raise DegenerateDirectionError("cannot append a zero vector")
    w = v.copy()
    for _ in range(2):
        for f in basis:
            w -= vdot(f, w) * f
    w_norm = norm(w)
    if w_norm < DEGENERATE_TOL * v_norm:
        raise DegenerateDirectionError("vector lies in the span of the basis")
    f = w / w_norm
    return OrthonormalBasis(basis.vectors + (f,)), f


def phase_align(v):
    """
    Normalize a vector and rotate its phase so that its reference element is
    real non-negative.

    Parameters
    ----------
    v : array, shape=(n,)
        Nonzero complex vector.

    Returns
    -------
    y : array, shape=(n,)
        Unit-norm vector :math:`(v / \\|v\\|) e^{-j \\angle v_r}`.

    Notes
    -----
    The reference element is the first one with magnitude above
    ``DEGENERATE_TOL * ||v||``, which is the first element for generic
    vectors.
    """
    v = asarray(v, dtype=complex)
    v_norm = norm(v)
    if v_norm == 0.:
        raise DomainError("cannot phase-align a zero vector")
    ref = (npabs(v) > DEGENERATE_TOL * v_norm).argmax()
    y = v / v_norm * exp(-1j * angle(v[ref]))
    y[ref] = npabs(y[ref])
    return y


def harmonic_mean(values):
    """
    Harmonic mean of positive values.

    Parameters
    ----------
    values : list or array
        Positive real numbers.

    Returns
    -------
    mean : scalar
        Value :math:`K / \\sum_k 1 / v_k`.
    """
    values = asarray(values, dtype=float).ravel()
    if values.size == 0:
        raise DomainError("harmonic mean of an empty list")
    if (values <= 0.).any():
        raise DomainError("harmonic mean needs positive values")
    return values.size / npsum(1. / values)
