#!/usr/bin/env python
# -*- coding: utf-8 -*-

import datetime as dt
import importlib.metadata
import platform
import sys


# =============================================================================
# FUNCTIONS
# =============================================================================


def utcnow():
    return dt.datetime.now(dt.timezone.utc)


def dependency_versions(names=("attrs", "sympy", "typer", "rich")):
    """Installed versions of ``names``; missing packages map to None."""
    versions = {}
    for name in names:
        try:
            versions[name] = importlib.metadata.version(name)
        except importlib.metadata.PackageNotFoundError:
            versions[name] = None
    return versions


def info_dict():
    """Return a dictionary that represents the status of the environment.

    Printed by ``eqres version`` and useful in bug reports.

    """
    return {
        "PY_VERSION": sys.version.split()[0],
        "PY_PKGS": dependency_versions(),
        "PLATFORM": platform.platform(),
        "SYSTEM_ENCODING": sys.getfilesystemencoding(),
        "UTC_NOW": utcnow().isoformat(),
    }
