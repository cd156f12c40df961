"""Parse command line arguments and update :attr:`permfix.conf`."""

from __future__ import annotations

import typing
from inspect import isfunction
from types import MappingProxyType

from loam.cli import CLIManager, Subcmd

from . import ISOLATED
from . import __doc__ as doc_module
from . import bench, commands, conf, listing, table, verify
from ._helpers import baredoc
from .config import CONFIG_DIR

if typing.TYPE_CHECKING:
    from typing import Any, Callable, List, Optional


def _sub(cmd: Any, *sections: str) -> Subcmd:
    """Build Subcmd instance."""
    cmd_func = cmd if isfunction(cmd) else cmd.cmd
    return Subcmd(baredoc(cmd), *sections, func=cmd_func)


def _bare_cmd() -> None:
    """Print help message when no arguments are given."""
    print(doc_module)
    print("Run `permfix -h` for usage")


SUB_CMDS = MappingProxyType(
    {
        "common_": Subcmd(doc_module, "common", func=_bare_cmd),
        "verify": _sub(verify, "core", "verify"),
        "table": _sub(table, "core", "table"),
        "bench": _sub(bench, "core", "bench"),
        "permutations": _sub(listing, "core"),
        "identities": _sub(commands.identities_cmd),
        "version": _sub(commands.version_cmd),
        "config": _sub(commands.config_cmd),
    }
)


def parse_args(arglist: Optional[List[str]] = None) -> Callable[[], None]:
    """Parse cmd line arguments.

    Update :attr:`permfix.conf` accordingly.

    Args:
        arglist: the list of cmd line arguments. If set to None, the arguments
            are taken from :attr:`sys.argv`.

    Returns:
        the function implementing the sub command to be executed.
    """
    climan = CLIManager(conf, **SUB_CMDS)

    if not ISOLATED:
        bash_script = CONFIG_DIR / "bash" / "permfix.sh"
        bash_script.parent.mkdir(parents=True, exist_ok=True)
        climan.bash_complete(bash_script, "permfix")
        zsh_script = CONFIG_DIR / "zsh" / "_permfix.sh"
        zsh_script.parent.mkdir(parents=True, exist_ok=True)
        climan.zsh_complete(zsh_script, "permfix", sourceable=True)

    cmd_args = climan.parse_args(arglist)
    sub_cmd = cmd_args.loam_sub_name

    if sub_cmd is not None and conf.common.config:
        commands.config_pp(climan.sections_list(sub_cmd))

    return cmd_args.func
