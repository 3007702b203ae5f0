# Make every sub-distribution importable from a plain checkout, so that
# "pytest" can be run from the top of the repository without installing.

import sys
from glob import glob
from os.path import abspath, dirname, join as pjoin

for subpackage in sorted(glob(pjoin(dirname(abspath(__file__)), 'xcmosbench.*'))):
    if subpackage not in sys.path:
        sys.path.insert(0, subpackage)
