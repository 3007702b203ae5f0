import os.path as op
from os import scandir

__version__ ="26.10.16"
__author__ = "xcmosbench developers"
__author_email__ = ""
__url__ = ""
__packagename__ = 'xcmosbench'
__description__ = "Beyond-CMOS Technology Benchmarking"
__license__ = "MIT"
__longdesc__ = """Analytical energy/delay benchmarking of charge- and spin-based
 beyond-CMOS devices: device-level gate models, 32-bit ALU and throughput
 under a power-density cap, repeated interconnects and span of control,
 and cellular-neural-network associative memory."""

CLASSIFIERS = [
    'Environment :: Console',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: MIT License',
    'Programming Language :: Python :: 3.8',
    'Programming Language :: Python :: 3.9',
    'Programming Language :: Python :: 3.10',
    'Topic :: Scientific/Engineering'
]

PYTHON_REQUIRES = ">=3.8"


def find_subpackages():
    # NOTE: this file is exec-ed from setup.py, so __file__ is setup.py
    thispath = op.dirname(__file__) or '.'

    # find_packages() doesn't find the xcmosbench.* sub-packages
    # because they live in their own distribution directories.
    children_dirs = [
        op.relpath(f.path, thispath) for f in scandir(thispath)
        if f.is_dir()
    ]
    return sorted(d for d in children_dirs if d.startswith('xcmosbench.'))


REQUIRES = find_subpackages()

TESTS_REQUIRES = [
    'pytest',
    'hypothesis',
]

EXTRA_REQUIRES = {
    'tests': TESTS_REQUIRES,
}

# Flatten the lists
EXTRA_REQUIRES['all'] = sum(EXTRA_REQUIRES.values(), [])
