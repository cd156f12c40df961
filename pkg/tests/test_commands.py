import re

from pytest import CaptureFixture

import permfix
import permfix.commands
from permfix.suites import SUITES


def test_identities_cmd(capsys: CaptureFixture) -> None:
    permfix.commands.identities_cmd()
    output = capsys.readouterr()
    assert output.out.startswith("identities:\n")
    for name in SUITES:
        assert re.search(rf"\b{name}: ", output.out)


def test_version_cmd(capsys: CaptureFixture) -> None:
    permfix.commands.version_cmd()
    output = capsys.readouterr()
    expected = "permfix version: {}\n".format(permfix.__version__)
    assert output.out == expected


def test_config_cmd(capsys: CaptureFixture) -> None:
    permfix.commands.config_cmd()
    output = capsys.readouterr()
    expected = "(c|f): available only as CLI argument/in the config file"
    assert output.out.startswith(expected)


def test_print_listing_aligns_and_wraps(capsys: CaptureFixture) -> None:
    permfix.commands._print_listing(
        [("a", "short"), ("long_name", "word " * 12)], text_width=40
    )
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "a:         short"
    assert lines[1].startswith("long_name: word")
    assert len(lines) > 2
    assert all(line.startswith(" " * 11) for line in lines[2:])
