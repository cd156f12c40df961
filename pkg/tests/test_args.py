import re

import pytest
from pytest import CaptureFixture

import permfix.args
import permfix.bench
import permfix.commands
import permfix.listing
import permfix.table
import permfix.verify


def test_no_args(capsys: CaptureFixture) -> None:
    permfix.args.parse_args([])()
    output = capsys.readouterr()
    expected = re.compile(
        r"permfix verifies identities.*" r"Run `permfix -h` for usage\n$",
        flags=re.DOTALL,
    )
    assert expected.fullmatch(output.out)


def test_help(capsys: CaptureFixture) -> None:
    with pytest.raises(SystemExit):
        permfix.args.parse_args(["-h"])
    output = capsys.readouterr()
    expected = re.compile(
        r"^usage:.*\npermfix verifies identities.*\n"
        r".*verify.*Run identity verification sweeps\n"
        r".*--help.*show this help message and exit.*$",
        flags=re.DOTALL,
    )
    assert expected.fullmatch(output.out)


def test_invalid_argument(capsys: CaptureFixture) -> None:
    with pytest.raises(SystemExit):
        permfix.args.parse_args(["-dummyinvalidarg"])
    output = capsys.readouterr()
    expected = re.compile(
        r"^usage: .*error: unrecognized arguments:.*\n$", flags=re.DOTALL
    )
    assert expected.fullmatch(output.err)


def test_invalid_subcmd(capsys: CaptureFixture) -> None:
    with pytest.raises(SystemExit):
        permfix.args.parse_args(["dummyinvalidcmd"])
    output = capsys.readouterr()
    expected = re.compile(r"^usage: .*error:.*invalid choice:.*\n$", flags=re.DOTALL)
    assert expected.fullmatch(output.err)


def test_verify_subcmd() -> None:
    func = permfix.args.parse_args(["verify"])
    assert func is permfix.verify.cmd


def test_table_subcmd() -> None:
    func = permfix.args.parse_args(["table"])
    assert func is permfix.table.cmd


def test_permutations_subcmd() -> None:
    try:
        func = permfix.args.parse_args(["permutations", "--n-max", "3"])
        assert func is permfix.listing.cmd
        assert permfix.conf.core.n_max == 3
    finally:
        del permfix.conf.core.n_max


def test_bench_subcmd() -> None:
    func = permfix.args.parse_args(["bench"])
    assert func is permfix.bench.cmd


def test_identities_subcmd() -> None:
    func = permfix.args.parse_args(["identities"])
    assert func is permfix.commands.identities_cmd


def test_version_subcmd() -> None:
    func = permfix.args.parse_args(["version"])
    assert func is permfix.commands.version_cmd


def test_config_subcmd() -> None:
    func = permfix.args.parse_args(["config"])
    assert func is permfix.commands.config_cmd


def test_options_update_conf() -> None:
    try:
        permfix.args.parse_args(["verify", "-n", "4", "--identity", "det,thm2"])
        assert permfix.conf.core.n_max == 4
        assert tuple(permfix.conf.verify.identity) == ("det", "thm2")
    finally:
        del permfix.conf.core.n_max
        del permfix.conf.verify.identity
