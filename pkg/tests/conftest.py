import pytest
from hypothesis import settings

from wireid.matrices import BinaryMatrix

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")

# Symmetric 6x6 worked example with row and column sums (2,6,3,4,5,6),
# realizing a 26-element pair of order 6.
MATRIX_26_TEXT = """\
.1...1
111111
.1..11
.1.111
.11111
111111
"""

LETTERS = "abcdefghijklmnopqrstuvwxyz"

# The groupings the worked matrix induces under row-major labeling with
# letters: rows chunk into A-sets, columns into B-sets.
A_SETS_26 = [
    {"a"}, {"b"},
    {"c", "d"}, {"e", "f"}, {"g", "h"},
    {"i", "j", "k"},
    {"l", "m", "n", "o"},
    {"p", "q", "r", "s", "t"},
    {"u", "v", "w", "x", "y", "z"},
]
B_SETS_26 = [
    {"c"}, {"u"},
    {"a", "d"}, {"i", "l"}, {"p", "v"},
    {"e", "q", "w"},
    {"f", "m", "r", "x"},
    {"g", "j", "n", "s", "y"},
    {"b", "h", "k", "o", "t", "z"},
]


def gapfree_sequences(m):
    """All nonincreasing sequences of length m with values in [0, m] whose
    consecutive entries drop by at most 1."""
    out = []

    def extend(seq):
        if len(seq) == m:
            out.append(tuple(seq))
            return
        last = seq[-1]
        for v in ((last, last - 1) if last >= 1 else (0,)):
            extend(seq + [v])

    for start in range(m + 1):
        extend([start])
    return out


@pytest.fixture
def matrix26():
    return BinaryMatrix.from_text(MATRIX_26_TEXT)
