""" NOTE: When bumping up the version number, double-check if you
need to also bump up the version of the dependencies
"""

__version__ ="26.10.16"
__author__ = "xcmosbench developers"
__author_email__ = ""
__url__ = ""
__packagename__ = 'xcmosbench.interconnect'
__description__ = "Repeated interconnects and span of control"
__license__ = "MIT"
__longdesc__ = """Closed-form delay and energy of optimally repeated wires, a brute-force
Elmore repeater optimizer used to check them, spin relay interconnects
and the span of control of a technology."""

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
    'numpy >= 1.17.1',
    'scipy >= 1.5',
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
