"""Finite complexes of groups: validation, developments, presentations."""

import json

from ._core import CogkitError, Group, Workspace, commands, run

__all__ = ["CogkitError", "Group", "Workspace", "commands", "run", "run_json"]


def run_json(command, *paths, **options):
    """Runs a subcommand and decodes its JSON output.

    Returns (exit_code, document). Raises CogkitError on malformed input.
    """
    code, out, err = run(command, list(paths), **options)
    if code == 2:
        raise CogkitError(err)
    return code, json.loads(out)
