import numpy as np
import pytest

from quditqecc.codewords import build_codebook
from quditqecc.qudit_math import CodeParams

# qubit codewords written out term by term: (ket, sign), each amplitude sign/sqrt(8)
N2_WORD_0 = [
    ("00000", 1), ("01100", 1), ("10101", 1), ("11001", 1),
    ("11010", 1), ("10110", -1), ("01111", 1), ("00011", -1),
]
N2_WORD_1 = [
    ("10000", 1), ("11100", -1), ("00101", -1), ("01001", 1),
    ("01010", -1), ("00110", -1), ("11111", 1), ("10011", 1),
]


def amplitudes_from_terms(terms):
    amps = np.zeros(32, dtype=complex)
    for ket, sign in terms:
        amps[int(ket, 2)] = sign / np.sqrt(8)
    return amps


@pytest.fixture(params=[2, 3, 4, 5], ids=lambda n: f"n{n}")
def n(request):
    return request.param


@pytest.fixture
def params(n):
    return CodeParams(n)


@pytest.fixture
def codebook(n):
    return build_codebook(n)


# acceptance criteria register their outcome here for the end-of-run summary
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {detail}")
