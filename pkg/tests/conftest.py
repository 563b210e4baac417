import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qcbounds.states import BipartiteDims, PureState, maximally_entangled


@pytest.fixture
def bell():
    return maximally_entangled(2)


@pytest.fixture
def bell_rho(bell):
    return bell.projector()


@pytest.fixture
def dims22():
    return BipartiteDims(2, 2)


@pytest.fixture
def partially_entangled():
    return PureState(BipartiteDims(2, 2), [np.sqrt(0.75), 0, 0, np.sqrt(0.25)])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
