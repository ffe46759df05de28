"""Desk-scale size guard shared by graph builders and the isomorphism code."""

import os

DEFAULT_SIZE_BOUND = 4096


def effective_size_bound(override=None):
    """Resolve the vertex-count bound: explicit override, else the
    OTISLAY_SIZE_BOUND environment variable, else the default."""
    if override is not None:
        bound = int(override)
    else:
        env = os.environ.get("OTISLAY_SIZE_BOUND")
        bound = int(env) if env else DEFAULT_SIZE_BOUND
    if bound < 1:
        raise ValueError(f"size bound must be positive, got {bound}")
    return bound


def check_size(vertex_count, override=None, what="graph"):
    """Raise ValueError when vertex_count exceeds the effective bound."""
    bound = effective_size_bound(override)
    if vertex_count > bound:
        raise ValueError(
            f"{what} would have {vertex_count} vertices, above the size "
            f"bound {bound} (raise it via --size-bound or OTISLAY_SIZE_BOUND)"
        )
    return vertex_count
