"""PPT and realignment (CCNR) entanglement detectors.

Both criteria are necessary conditions for separability, so a verdict is
either ``ENTANGLED`` or ``INCONCLUSIVE``; nothing here ever certifies a state
as separable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .maps import partial_transpose, realign_norm
from .states import DEFAULT_TOL, DensityMatrix

DETECTION_MARGIN = 1e-9


class Status(str, enum.Enum):
    ENTANGLED = "Entangled"
    INCONCLUSIVE = "Inconclusive"


class Criterion(str, enum.Enum):
    PPT = "PPT"
    CCNR = "CCNR"


@dataclass(frozen=True)
class Verdict:
    status: Status
    criterion: Criterion
    witness: float

    @property
    def entangled(self) -> bool:
        return self.status is Status.ENTANGLED

    def to_dict(self) -> dict:
        return {"criterion": self.criterion.value, "status": self.status.value, "witness": self.witness}


def ppt_test(rho: DensityMatrix, psd_tol: float = DEFAULT_TOL.psd) -> Verdict:
    """Witness is the smallest eigenvalue of the partial transpose."""
    wmin = float(np.linalg.eigvalsh(partial_transpose(rho))[0])
    status = Status.ENTANGLED if wmin < -psd_tol else Status.INCONCLUSIVE
    return Verdict(status, Criterion.PPT, wmin)


def ccnr_test(rho: DensityMatrix, margin: float = DETECTION_MARGIN) -> Verdict:
    """Witness is ``||R(rho)||_1 - 1``."""
    w = realign_norm(rho) - 1.0
    status = Status.ENTANGLED if w > margin else Status.INCONCLUSIVE
    return Verdict(status, Criterion.CCNR, w)


def detect(rho: DensityMatrix) -> list[Verdict]:
    return [ppt_test(rho), ccnr_test(rho)]


def is_entangled(verdicts: list[Verdict]) -> bool:
    return any(v.entangled for v in verdicts)
