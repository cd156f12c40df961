"""Define configuration variables for permfix.

See :mod:`permfix.args` for additional definitions related to the command line
interface.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from loam import tools
from loam.base import ConfigBase, Section, entry
from loam.collections import MaybeEntry, TupleEntry
from loam.tools import command_flag

HOME_DIR = Path.home()
CONFIG_DIR = HOME_DIR / ".config" / "permfix"
CONFIG_FILE = CONFIG_DIR / "config.toml"
CONFIG_LOCAL = Path(".permfix.toml")


@dataclass
class Common(Section):
    """General options."""

    config: bool = command_flag("print config options")


@dataclass
class Core(Section):
    """Core control."""

    n_max: int = entry(val=8, cli_short="n", doc="largest n of the sweep")
    k_max: int = entry(val=5, cli_short="k", doc="largest k of the sweep")
    cap: int = entry(val=10, doc="largest n enumerated permutation by permutation")
    x: Sequence[str] = TupleEntry(str).entry(
        default="-2,-1,0,1/2,1,2,7/3", doc="rational sample points ([-]p[/q])"
    )
    format: str = entry(
        val="text", cli_short="f", doc="output format (text, json, csv)"
    )
    out: str = entry(val="", in_file=False, doc="output file (stdout if empty)")


@dataclass
class Verify(Section):
    """Verify command."""

    identity: Sequence[str] = TupleEntry(str).entry(
        default="all", cli_short="i", doc="identities to check (see permfix identities)"
    )
    jobs: int = entry(
        val=1, doc="worker threads for suites and permutation enumeration"
    )


@dataclass
class Table(Section):
    """Table command."""

    fixtures: Optional[str] = MaybeEntry(str).entry(
        doc="directory holding b000166.txt and b008290.txt", in_file=False
    )


@dataclass
class Bench(Section):
    """Bench command."""

    methods: Sequence[str] = TupleEntry(str).entry(
        default="leibniz,cycle,closed,elimination", doc="determinant paths to time"
    )
    repeat: int = entry(val=3, doc="number of timed runs per method")


@dataclass
class Config(ConfigBase):
    """permfix configuration."""

    common: Common
    core: Core
    verify: Verify
    table: Table
    bench: Bench
    config: tools.ConfigSection
