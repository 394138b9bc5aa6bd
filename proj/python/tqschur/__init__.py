"""Exact computations in the twisted queer q-Schur superalgebra.

Thin convenience layer over the compiled core ``_tqschur``.  Structured
results cross the boundary as JSON strings; the wrappers here decode them
so callers work with plain dicts and lists.
"""

import json

try:  # installed layout: the extension sits inside the package
    from . import _tqschur as _core
except ImportError:  # build-tree layout: the extension is top-level
    import _tqschur as _core

basis_count = _core.basis_count
oracle_check = _core.oracle_check

__all__ = [
    "basis_count",
    "basis",
    "act",
    "check_relations",
    "verify_structure",
    "decompose",
    "oracle_check",
]


def basis(n, r):
    """All basis labels (A0|A1) of the (n, r) algebra as dicts."""
    return json.loads(_core.basis(n, r))


def act(word, even, odd):
    """Apply a generator word (rightmost first) to the basis element (even|odd).

    Generators are named "K2", "Kinv1", "Kbar2", "E1", "Ebar1", "F1", "Fbar1".
    Returns the resulting linear combination as a dict.
    """
    return json.loads(_core.act(word, even, odd))


def check_relations(n, r):
    """Run the defining-relation suite on every basis vector."""
    return json.loads(_core.check_relations(n, r))


def verify_structure(n, r, seed=2024):
    """Run the structural property checks (recursions, reorderings, eigen-split)."""
    return json.loads(_core.verify_structure(n, r, seed))


def decompose(mu, r, seed=2024):
    """Decomposition certificate for the block of column weight mu."""
    return json.loads(_core.decompose(mu, r, seed))
