""" NOTE: When bumping up the version number, double-check if you
need to also bump up the version of the dependencies
"""

__version__ ="26.10.16"
__author__ = "xcmosbench developers"
__author_email__ = ""
__url__ = ""
__packagename__ = 'xcmosbench.circuits'
__description__ = "32-bit ALU benchmarks and power-constrained throughput"
__license__ = "MIT"
__longdesc__ = """Composes device gate metrics into 32-bit ALU delay, energy and area
under static, domino, NDR-clocked and spintronic circuit styles, and computes
throughput per unit area under a power density cap, with and without
ultra-deep pipelining."""

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

REQUIRES = [
    'xcmosbench.base >= 26.10.16',
    'xcmosbench.devices >= 26.10.16',
    'jsonschema >= 3.2',
]

TESTS_REQUIRES = [
    'pytest',
    'hypothesis',
]

EXTRA_REQUIRES = {
    'tests': TESTS_REQUIRES,
}

# Flatten the lists
EXTRA_REQUIRES['all'] = sum(EXTRA_REQUIRES.values(), [])
