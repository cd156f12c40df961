import os
from pathlib import Path

from pytest import fixture

os.environ.setdefault("PERMFIX_ISOLATED", "True")


@fixture(scope="session")
def repo_dir() -> Path:
    return Path(__file__).parent.parent.resolve()


@fixture(scope="session")
def default_xs() -> list:
    from fractions import Fraction

    return [Fraction(v) for v in ("-2", "-1", "0", "1/2", "1", "2", "7/3")]
