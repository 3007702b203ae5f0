"""
Purpose
----
Configuration and feedback templates of a cellular neural network used as
an associative memory: disc-shaped neighbourhoods, one-shot Hebbian weights
and symmetric sign-magnitude weight quantization.

Usage
----
from xcmosbench.cnn.templates import CnnConfig, hebbian_weights

cfg = CnnConfig(rows=16, cols=16, radius=3, weight_bits=4)
weights = hebbian_weights(patterns, cfg)

Author
----
xcmosbench developers

Dates
----
2026-10-16

References
----
Chua-Yang cell: dx/dt = -x + sum_kl A(ij,kl)*y_kl + z, with
y = (|x+1| - |x-1|)/2 and no feed-forward template.

License
----
MIT License

Copyright (c) 2026      xcmosbench developers

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""

import logging

import numpy as np

from xcmosbench.base.constants import (CNN_COLS,
                                       CNN_DIAGONAL_BOOST,
                                       CNN_DT,
                                       CNN_MAX_STEPS,
                                       CNN_NOISE_FRACTION,
                                       CNN_RADIUS,
                                       CNN_ROWS,
                                       CNN_STABLE_STEPS,
                                       CNN_TRIALS,
                                       CNN_WEIGHT_BITS)
from xcmosbench.base.errors import InvalidParameterError

lgr = logging.getLogger(__name__)


class CnnConfig(object):
    """
    Members:
    --------
    rows, cols : int
        grid shape
    radius : float
        neighbourhood radius, in cells (disc, centre excluded)
    weight_bits : int or None
        bits of the quantized weights; None keeps them unquantized
    noise_fraction : float
        fraction of pixels flipped in the probe
    settle_tolerance : float
        a cell counts as saturated when |x| >= 1 - settle_tolerance
    dt : float
        Euler step, in cell time constants
    max_steps : int
    stable_steps : int
        consecutive steps with unchanged outputs needed to settle
    diagonal : float
        self-feedback added to the Hebbian self term
    n_trials : int
        recall trials per simulation
    """

    def __init__(
            self,
            rows=CNN_ROWS,
            cols=CNN_COLS,
            radius=CNN_RADIUS,
            weight_bits=CNN_WEIGHT_BITS,
            noise_fraction=CNN_NOISE_FRACTION,
            settle_tolerance=0.0,
            dt=CNN_DT,
            max_steps=CNN_MAX_STEPS,
            stable_steps=CNN_STABLE_STEPS,
            diagonal=CNN_DIAGONAL_BOOST,
            n_trials=CNN_TRIALS
            ):
        self.rows = int(rows)
        self.cols = int(cols)
        self.radius = radius
        self.weight_bits = weight_bits
        self.noise_fraction = noise_fraction
        self.settle_tolerance = settle_tolerance
        self.dt = dt
        self.max_steps = int(max_steps)
        self.stable_steps = int(stable_steps)
        self.diagonal = diagonal
        self.n_trials = int(n_trials)
        self.validate()

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        else:
            return False

    def __repr__(self):
        return 'CnnConfig({r}x{c}, radius={rad}, weight_bits={b}, noise={n})'.format(
            r=self.rows, c=self.cols, rad=self.radius, b=self.weight_bits,
            n=self.noise_fraction)

    @property
    def n_cells(self):
        return self.rows * self.cols

    @property
    def n_neighbors(self):
        """ Neighbours of an interior cell """
        return len(neighborhood_offsets(self.radius))

    def replace(self, **changes):
        fields = dict(self.__dict__)
        for key in changes:
            if key not in fields:
                raise AttributeError('CnnConfig has no field {k}'.format(k=key))
        fields.update(changes)
        return CnnConfig(**fields)

    def validate(self):
        if self.rows * self.cols < 16:
            raise InvalidParameterError('The grid needs at least 16 cells',
                                        expStr='rows*cols >= 16',
                                        gotStr='{r}x{c}'.format(r=self.rows, c=self.cols))
        if self.weight_bits is not None and not 1 <= self.weight_bits <= 8:
            raise InvalidParameterError('Weight bits out of range', expStr='1 to 8',
                                        gotStr=self.weight_bits)
        if not 0 <= self.noise_fraction <= 0.5:
            raise InvalidParameterError('Noise fraction out of range', expStr='0 to 0.5',
                                        gotStr=self.noise_fraction)
        if not 0 < self.dt <= 1:
            raise InvalidParameterError('Euler step out of range', expStr='0 < dt <= 1',
                                        gotStr=self.dt)
        if not self.radius >= 1:
            raise InvalidParameterError('Neighbourhood radius must be at least 1 cell',
                                        expStr='>= 1', gotStr=self.radius)
        if self.max_steps < 1 or self.stable_steps < 1 or self.n_trials < 1:
            raise InvalidParameterError('Step and trial counts must be positive')
        if not 0 <= self.settle_tolerance < 1:
            raise InvalidParameterError('Settle tolerance out of range', expStr='0 to 1',
                                        gotStr=self.settle_tolerance)
        return self


def neighborhood_offsets(radius):
    """
    (drow, dcol) offsets of the cells within 'radius' of a cell, the cell
    itself excluded, in row-major order.  radius = 3 gives 28 neighbours.

    Returns
    -------
    offsets : np.ndarray of int, shape (n, 2)
    """
    r = int(np.floor(radius))
    offsets = [(dr, dc)
               for dr in range(-r, r + 1)
               for dc in range(-r, r + 1)
               if (dr, dc) != (0, 0) and dr ** 2 + dc ** 2 <= radius ** 2]
    return np.array(offsets, dtype=int).reshape(-1, 2)


def shifted(grids, offsets, pad):
    """
    Views of 'grids' (..., rows, cols) shifted by every offset: entry k
    holds grids[..., i + drow_k, j + dcol_k], zero outside the grid.

    Returns
    -------
    np.ndarray, shape (n_offsets, ..., rows, cols)
    """
    rows, cols = grids.shape[-2:]
    padding = [(0, 0)] * (grids.ndim - 2) + [(pad, pad), (pad, pad)]
    padded = np.pad(grids, padding)
    return np.stack([
        padded[..., pad + dr:pad + dr + rows, pad + dc:pad + dc + cols]
        for dr, dc in offsets
    ])


def quantize_weights(W, bits, w_max=None):
    """
    Symmetric sign-magnitude quantizer: a sign bit and (bits - 1) magnitude
    bits, so the levels are k*w_max/(2**(bits-1) - 1) for
    |k| <= 2**(bits-1) - 1.  A single bit keeps only the sign.

    Parameters
    ----------
    W : array_like
    bits : int
    w_max : float or None
        full-scale weight; defaults to max |W|

    Returns
    -------
    np.ndarray
    """
    W = np.asarray(W, dtype=float)
    if not 1 <= bits <= 8:
        raise InvalidParameterError('Weight bits out of range', expStr='1 to 8', gotStr=bits)
    if w_max is None:
        w_max = float(np.max(np.abs(W))) if W.size else 0.0
    if w_max == 0:
        return np.zeros_like(W)
    if bits == 1:
        return np.where(W < 0, -w_max, w_max)
    n_levels = 2 ** (bits - 1) - 1
    step = w_max / n_levels
    return np.clip(np.round(W / step), -n_levels, n_levels) * step


class TemplateWeights(object):
    """
    Space-variant feedback template of a CNN

    Members:
    --------
    A : np.ndarray, shape (rows, cols, n_offsets)
        weight from the neighbour at offsets[k] to cell (i, j); zero for
        neighbours outside the grid
    offsets : np.ndarray, shape (n_offsets, 2)
    self_weight : np.ndarray, shape (rows, cols)
    z : float
        bias
    weight_bits : int or None
    """

    def __init__(self, A, offsets, self_weight, z=0.0, weight_bits=None):
        self.A = np.asarray(A, dtype=float)
        self.offsets = np.asarray(offsets, dtype=int)
        self.self_weight = np.asarray(self_weight, dtype=float)
        self.z = z
        self.weight_bits = weight_bits

    @property
    def shape(self):
        return self.self_weight.shape

    @property
    def pad(self):
        return int(np.max(np.abs(self.offsets))) if self.offsets.size else 0

    def neighbor_counts(self):
        """
        Number of in-grid neighbours of every cell
        """
        inside = shifted(np.ones(self.shape), self.offsets, self.pad)
        return inside.sum(axis=0).astype(int)

    def feedback(self, y):
        """
        sum_kl A*y_kl + self_weight*y + z for the outputs y (rows, cols)
        """
        neighbors = shifted(y, self.offsets, self.pad)
        return (np.einsum('ijk,kij->ij', self.A, neighbors)
                + self.self_weight * y + self.z)


def check_patterns(patterns, cfg):
    """
    Returns the patterns as an int array of shape (P, rows, cols), checking
    their shape and their +1/-1 values
    """
    patterns = np.asarray(patterns)
    if patterns.ndim == 2:
        patterns = patterns[np.newaxis]
    if patterns.ndim != 3 or patterns.shape[0] < 1:
        raise InvalidParameterError('Expected a stack of 2D patterns',
                                    expStr='(P, rows, cols)', gotStr=patterns.shape)
    if patterns.shape[1:] != (cfg.rows, cfg.cols):
        raise InvalidParameterError('Pattern shape does not match the grid',
                                    expStr=(cfg.rows, cfg.cols), gotStr=patterns.shape[1:])
    if not np.all(np.isin(patterns, (-1, 1))):
        raise InvalidParameterError('Patterns must be bipolar', expStr='-1 or +1')
    return patterns.astype(int)


def hebbian_weights(patterns, cfg):
    """
    One-shot Hebbian template: A(ij,kl) = (1/P)*sum_p x_ij^p*x_kl^p over the
    neighbourhood, quantized to cfg.weight_bits on the [-1, 1] full scale.
    The self weight is the Hebbian self term (1) plus cfg.diagonal.

    Parameters
    ----------
    patterns : array_like, shape (P, rows, cols) or (rows, cols)
        stored +1/-1 patterns
    cfg : CnnConfig

    Returns
    -------
    TemplateWeights
    """
    patterns = check_patterns(patterns, cfg)
    offsets = neighborhood_offsets(cfg.radius)
    pad = int(np.floor(cfg.radius))
    neighbors = shifted(patterns, offsets, pad)          # (n_offsets, P, rows, cols)
    A = np.mean(neighbors * patterns[np.newaxis], axis=1)  # (n_offsets, rows, cols)
    A = np.moveaxis(A, 0, -1)
    if cfg.weight_bits is not None:
        A = quantize_weights(A, cfg.weight_bits, w_max=1.0)
    self_weight = np.full((cfg.rows, cfg.cols), 1.0 + cfg.diagonal)
    lgr.debug('Hebbian template: {p} patterns, {n} neighbours'.format(
        p=patterns.shape[0], n=len(offsets)))
    return TemplateWeights(A, offsets, self_weight, z=0.0, weight_bits=cfg.weight_bits)
