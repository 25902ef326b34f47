"""Result record shared by the brute-force, QAOA and verification paths."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np


class Decision(str, Enum):
    NON_SINGULAR = "NonSingular"
    STABLE = "Stable"
    NOT_CERTIFIED = "NotCertified"
    SINGULAR_INSIDE = "SingularInside"

    @property
    def certified(self):
        return self in (Decision.NON_SINGULAR, Decision.STABLE)


@dataclass
class RadiusReport:
    r: float
    d: float
    best_bit_string: str
    z_star: np.ndarray
    y_star: np.ndarray
    method: str
    histogram: Optional[dict] = None
    shots: Optional[int] = None
    beta: Optional[np.ndarray] = None
    gamma: Optional[np.ndarray] = None
    qaoa_r: Optional[float] = None
    epsilon: Optional[float] = None
    decision: Optional[Decision] = None
    witness: Optional[np.ndarray] = None
    caveat: str = ""
    extra: dict = field(default_factory=dict)
