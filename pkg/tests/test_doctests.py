import doctest

import pytest

import scullen.abctriple
import scullen.arithmetic
import scullen.bounds
import scullen.cullen
import scullen.repunit


@pytest.mark.parametrize(
    "module",
    [scullen.arithmetic, scullen.repunit, scullen.cullen, scullen.bounds, scullen.abctriple],
    ids=lambda m: m.__name__,
)
def test_docstring_examples(module):
    result = doctest.testmod(module)
    assert result.attempted > 0
    assert result.failed == 0
