"""
Bipolar patterns stored in the associative memory: plain-text grid files
('#' = +1, '.' = -1, one row per line) and random patterns.
"""

import logging
from pathlib import Path

import numpy as np

from xcmosbench.base.errors import (InvalidParameterError,
                                    LibraryParseError)

lgr = logging.getLogger(__name__)

PATTERN_DIR = Path(__file__).parent / 'data'
PIXELS = {'#': 1, '.': -1}


def read_pattern_file(path):
    """
    Reads one pattern file.  Blank lines are ignored.

    Returns
    -------
    np.ndarray of int, shape (rows, cols), values +1/-1
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError('{i} file not found'.format(i=path))

    rows = []
    with open(path) as f:
        for line_number, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            for column, char in enumerate(line, start=1):
                if char not in PIXELS:
                    raise LibraryParseError(
                        'unexpected character {c!r}'.format(c=char), path,
                        'line {l} column {c}'.format(l=line_number, c=column)
                    )
            if rows and len(line) != len(rows[0]):
                raise LibraryParseError(
                    'row of {n} pixels, expected {m}'.format(n=len(line), m=len(rows[0])),
                    path, 'line {l}'.format(l=line_number)
                )
            rows.append([PIXELS[char] for char in line])

    if not rows:
        raise LibraryParseError('empty pattern', path, 'line 1')
    return np.array(rows, dtype=int)


def write_pattern_file(path, pattern):
    pattern = np.asarray(pattern)
    if pattern.ndim != 2 or not np.all(np.isin(pattern, (-1, 1))):
        raise InvalidParameterError('Expected a 2D bipolar pattern')
    with open(path, 'w') as f:
        for row in pattern:
            f.write(''.join('#' if p > 0 else '.' for p in row) + '\n')


def load_patterns(paths):
    """
    Reads several pattern files of the same shape.

    Returns
    -------
    np.ndarray, shape (P, rows, cols)
    """
    patterns = [read_pattern_file(p) for p in paths]
    if not patterns:
        raise InvalidParameterError('No pattern files given')
    shapes = set(p.shape for p in patterns)
    if len(shapes) > 1:
        raise InvalidParameterError('Pattern files have different shapes',
                                    gotStr=sorted(shapes))
    lgr.info('Loaded {n} patterns of {r}x{c} pixels'.format(
        n=len(patterns), r=patterns[0].shape[0], c=patterns[0].shape[1]))
    return np.stack(patterns)


def default_patterns():
    """ The shipped 16x16 patterns """
    return load_patterns(sorted(PATTERN_DIR.glob('pattern_*.txt')))


def random_bipolar_patterns(rows, cols, n, seed=None):
    """
    'n' independent patterns with +1 and -1 equally likely

    Returns
    -------
    np.ndarray of int, shape (n, rows, cols)
    """
    rng = np.random.default_rng(seed)
    return rng.choice(np.array([-1, 1]), size=(n, rows, cols))
