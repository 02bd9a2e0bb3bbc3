"""Effort caps for Gröbner-basis and Betti computations."""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_MAX_PAIRS = 200_000
DEFAULT_MAX_DEGREE = 400
DEFAULT_MAX_BETTI_GENS = 12


@dataclass(frozen=True)
class EffortCaps:
    max_pairs: int = DEFAULT_MAX_PAIRS
    max_degree: int = DEFAULT_MAX_DEGREE

    @classmethod
    def from_env(cls) -> "EffortCaps":
        """Read ``MONOCURVE_MAX_PAIRS`` / ``MONOCURVE_MAX_DEGREE``, falling back to defaults."""
        return cls(
            max_pairs=int(os.environ.get("MONOCURVE_MAX_PAIRS", DEFAULT_MAX_PAIRS)),
            max_degree=int(os.environ.get("MONOCURVE_MAX_DEGREE", DEFAULT_MAX_DEGREE)),
        )


def resolve_caps(caps: EffortCaps | None) -> EffortCaps:
    return caps if caps is not None else EffortCaps.from_env()
