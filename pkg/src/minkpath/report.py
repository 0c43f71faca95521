from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

DEFAULT_SEED = 0xC0FFEE


@dataclass
class SolveReport:
    """Outcome of one solver invocation; ``weight is None`` means no solution."""

    weight: Optional[float] = None
    vertices: Optional[List[int]] = None
    embedding: Optional[Dict[int, int]] = None
    repetitions_used: int = 0
    seed: int = DEFAULT_SEED
    elapsed: float = 0.0
    mode: str = "exact"
    k: int = 0
    # approximation loop: one (L, U) pair per state, initial state first
    trace: List[Tuple[float, float]] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.weight is not None

    @property
    def iterations(self) -> int:
        return max(len(self.trace) - 1, 0)
