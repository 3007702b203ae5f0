"""   Tests for the module "patterns.py"   """

from pathlib import Path

import numpy as np
import pytest

from xcmosbench.base.errors import (InvalidParameterError,
                                    LibraryParseError)
from xcmosbench.cnn.patterns import (default_patterns,
                                     load_patterns,
                                     random_bipolar_patterns,
                                     read_pattern_file,
                                     write_pattern_file)

###   Globals   ###

TESTS_DATA_PATH = Path(__file__).parent / 'data'
RING = np.array([[1, -1, -1, 1],
                 [-1, 1, 1, -1],
                 [-1, 1, 1, -1],
                 [1, -1, -1, 1]])


###   Tests   ###

def test_read_pattern_file():
    # blank lines are skipped
    np.testing.assert_array_equal(read_pattern_file(TESTS_DATA_PATH / 'ring.txt'), RING)


def test_read_pattern_file_errors(tmp_path):
    with pytest.raises(LibraryParseError) as e:
        read_pattern_file(TESTS_DATA_PATH / 'bad_char.txt')
    assert 'line 2 column 3' in str(e.value)

    with pytest.raises(LibraryParseError) as e:
        read_pattern_file(TESTS_DATA_PATH / 'ragged.txt')
    assert 'line 2' in str(e.value)

    empty = tmp_path / 'empty.txt'
    empty.write_text('\n\n')
    with pytest.raises(LibraryParseError):
        read_pattern_file(empty)

    with pytest.raises(FileNotFoundError):
        read_pattern_file(TESTS_DATA_PATH / 'missing.txt')


def test_write_pattern_file(tmp_path):
    path = tmp_path / 'ring.txt'
    write_pattern_file(path, RING)
    assert path.read_text() == '#..#\n.##.\n.##.\n#..#\n'

    with pytest.raises(InvalidParameterError):
        write_pattern_file(path, np.zeros((2, 2)))


def test_load_patterns(tmp_path):
    patterns = default_patterns()
    assert patterns.shape == (4, 16, 16)
    assert set(np.unique(patterns)) == {-1, 1}

    small = tmp_path / 'small.txt'
    write_pattern_file(small, RING[:2])
    with pytest.raises(InvalidParameterError):
        load_patterns([TESTS_DATA_PATH / 'ring.txt', small])
    with pytest.raises(InvalidParameterError):
        load_patterns([])


def test_random_bipolar_patterns():
    patterns = random_bipolar_patterns(16, 16, 4, seed=7)
    assert patterns.shape == (4, 16, 16)
    assert set(np.unique(patterns)) == {-1, 1}
    np.testing.assert_array_equal(patterns, random_bipolar_patterns(16, 16, 4, seed=7))
    # roughly balanced
    assert abs(patterns.mean()) < 0.15
