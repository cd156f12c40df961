"""Definition of non-processing subcommands."""

from __future__ import annotations

import typing
from dataclasses import fields
from shutil import get_terminal_size
from textwrap import TextWrapper

import loam.tools

from . import __version__, conf
from .config import CONFIG_FILE
from .suites import SUITES

if typing.TYPE_CHECKING:
    from typing import Iterable, Optional, Sequence, Tuple

    from loam.base import Section


def _print_listing(
    pairs: Sequence[Tuple[str, str]],
    sep: str = ": ",
    text_width: Optional[int] = None,
) -> None:
    """Print names and descriptions with descriptions aligned in one column.

    Args:
        pairs: the names and their descriptions.
        sep: separator appended to each name.
        text_width: total width, the terminal width if None.
    """
    if text_width is None:
        text_width = min(get_terminal_size().columns, 100)
    keyw = max((len(key) + len(sep) for key, _ in pairs), default=0)
    # long names would leave no room for text
    keyw = min(keyw, text_width // 2)
    wrapper = TextWrapper(width=max(text_width - keyw, 20))
    for key, val in pairs:
        head = f"{key}{sep}"
        body = wrapper.wrap(val) or [""]
        if len(head) > keyw:
            print(head.rstrip())
            body_lines = body
        else:
            print(head.ljust(keyw) + body[0])
            body_lines = body[1:]
        for line in body_lines:
            print(" " * keyw + line)


def identities_cmd() -> None:
    """Print the list of available identity ids.

    See :mod:`permfix.suites` where the identity suites are defined.
    """
    print("identities:")
    _print_listing([(name, suite.description) for name, suite in SUITES.items()])


def version_cmd() -> None:
    """Print permfix version.

    Use :data:`permfix.__version__` to obtain the version in a script.
    """
    print(f"permfix version: {__version__}")


def config_pp(subs: Iterable[str]) -> None:
    """Print the options of each conf section with their help text.

    Options only available on the command line are marked (c), those only
    read from the config file (f).
    """
    print("(c|f): available only as CLI argument/in the config file", end="\n\n")
    for sub in subs:
        section: Section = getattr(conf, sub)
        options = []
        for fld in fields(section):
            entry = section.meta_(fld.name).entry
            mark = ""
            if entry.in_cli != entry.in_file:
                mark = " (c)" if entry.in_cli else " (f)"
            options.append((fld.name + mark, entry.doc))
        if options:
            print(f"{sub}:")
            _print_listing(options, sep=" -- ")
            print()


def config_cmd() -> None:
    """Configuration handling.

    Other Parameters:
        conf.config
    """
    if not (
        conf.common.config
        or conf.config.create
        or conf.config.update
        or conf.config.edit
    ):
        config_pp(sec.name for sec in fields(conf))
    loam.tools.config_cmd_handler(conf, conf.config, CONFIG_FILE)
