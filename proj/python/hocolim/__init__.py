"""Colimits and homotopy colimits of finite diagrams of chain complexes and simplicial sets."""

from ._hocolim import (
    IoError,
    PreconditionError,
    Report,
    Workspace,
    colim,
    families,
    generate,
    hocolim,
    homology,
    load,
    nerve_homology,
    ocolim,
    parse,
    suite,
    verify_thomason,
)

__all__ = [
    "IoError",
    "PreconditionError",
    "Report",
    "Workspace",
    "colim",
    "families",
    "generate",
    "hocolim",
    "homology",
    "load",
    "nerve_homology",
    "ocolim",
    "parse",
    "suite",
    "verify_thomason",
]
