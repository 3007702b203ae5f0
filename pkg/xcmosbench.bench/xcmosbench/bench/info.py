""" NOTE: When bumping up the version number, double-check if you
need to also bump up the version of the dependencies
"""

__version__ ="26.10.16"
__author__ = "xcmosbench developers"
__author_email__ = ""
__url__ = ""
__packagename__ = 'xcmosbench.bench'
__description__ = "Command-line benchmark runner: CSV tables and SVG scatter plots"
__license__ = "MIT"
__longdesc__ = """Runs the xcmosbench suites (ALU, throughput, interconnect, span of
control, CNN) over a device library, with optional parameter sweeps, and
writes the results as CSV tables and log-log SVG scatter plots."""

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
    'xcmosbench.interconnect >= 26.10.16',
    'xcmosbench.circuits >= 26.10.16',
    'xcmosbench.cnn >= 26.10.16',
    'numpy >= 1.17.1',
    'pandas >= 1.5',
    'matplotlib',
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
