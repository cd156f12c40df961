# Sphinx configuration for the permfix documentation.

import sys
import os
from dataclasses import fields
from pathlib import Path
from textwrap import dedent
from pkg_resources import get_distribution

sys.path.insert(0, os.path.abspath('..'))

# no config file is read or written while building the docs
os.environ['PERMFIX_ISOLATED'] = 'True'

import permfix

project = 'permfix'
copyright = '2024, permfix developers'
author = 'permfix developers'
release = get_distribution('permfix').version
version = '.'.join(release.split('.')[:2])

needs_sphinx = '4.0'
extensions = [
    'sphinx.ext.mathjax',
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
]
root_doc = 'index'
exclude_patterns = ['_build']
autodoc_member_order = 'bysource'
autoclass_content = 'class'

html_theme = 'sphinx_rtd_theme'
man_pages = [
    (root_doc, 'permfix', 'signed fixed-point identities on permutations',
     [author], 1),
]


def _opt_table_rows(section):
    """Yield name, help and availability of each option of a section."""
    for fld in fields(section):
        entry = section.meta_(fld.name).entry
        if entry.in_cli and entry.in_file:
            where = 'both'
        else:
            where = 'CLI' if entry.in_cli else 'config file'
        yield fld.name, entry.doc, where


with (Path('.') / 'sources' / 'config_opts.rst').open('w') as fid:
    fid.write(dedent(
        """\
        ..
           Generated by conf.py, edits are overwritten.

        Configuration options
        =====================

        Options are set on the command line or in the ``config.toml`` and
        ``.permfix.toml`` files. ``permfix config`` prints the same list.
        """))
    for sec_fld in fields(permfix.conf):
        fid.write(dedent(
            f"""
            .. list-table:: {sec_fld.name}
               :header-rows: 1

               * - Name
                 - Description
                 - CLI, config file?
            """))
        section = getattr(permfix.conf, sec_fld.name)
        for name, doc, where in _opt_table_rows(section):
            fid.write(f'   * - {name}\n     - {doc}\n     - {where}\n')
