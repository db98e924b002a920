#!/usr/bin/env python3
# encoding: utf-8
#
# Copyright (c) 2026 driftlab contributors
#
# MIT Licence. See http://opensource.org/licenses/MIT
#
# Created on 2026-10-17
#

"""Command-line launcher for driftlab. See ``dl.py --help``."""

import os
import sys

# The driftlab package lives in ./lib
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)),
                                'lib'))

from driftlab.cli import main  # noqa: E402

if __name__ == '__main__':  # pragma: no cover
    main()
