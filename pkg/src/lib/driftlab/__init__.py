# encoding: utf-8
#
# Copyright (c) 2026 driftlab contributors
#
# MIT Licence. See http://opensource.org/licenses/MIT
#
# Created on 2026-10-17
#

"""Simulation and estimation workbench for the Wiener process with drift."""

__version__ = '1.0.0'
