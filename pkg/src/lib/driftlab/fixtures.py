# encoding: utf-8
#
# Copyright (c) 2026 driftlab contributors
#
# MIT Licence. See http://opensource.org/licenses/MIT
#
# Created on 2026-10-17
#

"""Published reference data for the golden-table check.

100 trajectory values at ``t = 0.5`` for ``x0 = 3, mu = -1, sigma = 2``,
and the ``sigma**2`` and ``mu`` estimates computed from their first
``n = 5, 10, ..., 100`` values.

The values are transcribed verbatim, ``k = 1..100`` in order.
They are rounded to 4 decimals (``z_11`` has 5), while the
published estimates were computed from unrounded data, so
recomputed estimates agree to about 1e-6, not exactly.

The generator seed of the published run is unknown, so these values
can't be regenerated; `experiments.generate_table41` only reproduces
their distribution.
"""

from .models import TimePoint, WienerParams

# Parameters the values were generated with
PARAMS = WienerParams(x0=3.0, mu=-1.0, sigma=2.0)
T = TimePoint(0.5)

# Prefix sizes of the published estimates
SWEEP_NS = tuple(range(5, 101, 5))

TABLE41 = (
    4.0991, 1.6842, 2.9422, 4.5744, 2.0157,
    2.8821, 4.6284, 1.654, 0.9561, -0.5407,
    1.98941, 4.3462, 3.455, 3.2235, 2.1299,
    1.7554, 3.9263, 2.4328, 2.9972, 2.59,
    2.7068, 2.243, 3.5946, 4.6402, 2.2703,
    2.681, 2.9075, 3.3659, 4.5149, -1.3528,
    3.4294, 4.0825, 2.3837, 3.3037, 4.7552,
    2.1509, 4.3749, 2.6403, 1.4087, 4.178,
    4.3571, 3.2793, 3.2422, 2.7395, 0.682,
    3.4298, 2.6592, 3.2093, 0.1074, 1.5462,
    1.0896, 2.1108, 2.9175, 2.9352, 3.5531,
    2.2376, 1.6557, 2.0076, 0.8997, 0.1873,
    3.5272, 2.8292, 1.8519, -0.5223, 0.7602,
    4.3529, 1.1265, 1.3525, 3.7889, 3.2284,
    1.1392, 2.8833, 2.3093, 1.4444, -0.23,
    1.1718, 1.3588, 1.5024, 2.2622, 3.3423,
    7.0549, 2.5627, 1.5592, 3.8465, 0.8471,
    2.8475, 0.5144, 2.3558, 2.4793, 2.0639,
    1.166, 3.2738, 0.4878, 2.9504, 2.4767,
    3.6022, 1.6005, 3.5125, 2.2026, 3.3646,
)

# sigma**2 estimates for n in SWEEP_NS
EXPECTED_SIGMA2 = (
    3.182349256, 4.995431962, 4.029170383, 3.30673624,
    3.120603594, 3.924002323, 3.884200678, 3.781846824,
    3.715840465, 3.665346353, 3.463530492, 3.472692797,
    3.628477887, 3.621538801, 3.662829637, 3.554594699,
    3.96153126, 3.836441056, 3.774116249, 3.663112062,
)

# mu estimates for n in SWEEP_NS
EXPECTED_MU = (
    0.12624, -1.0209, -0.6614, -0.62588,
    -0.464312, -0.57916, -0.327594286, -0.299005,
    -0.296888889, -0.429124, -0.47716, -0.704466667,
    -0.851932308, -0.82396, -0.967797333, -1.0413725,
    -0.959635294, -1.011635556, -1.056187368, -1.01773,
)
