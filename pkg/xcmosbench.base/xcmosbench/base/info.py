__version__ ="26.10.16"
__author__ = "xcmosbench developers"
__author_email__ = ""
__url__ = ""
__packagename__ = 'xcmosbench.base'
__description__ = "Beyond-CMOS benchmarking base classes"
__license__ = "MIT"
__longdesc__ = """Device, magnet, spin-channel and interconnect parameter classes,
physical constants, errors and the device library loader."""

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
    'numpy >= 1.17.1',
    'scipy >= 1.5',
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
