from __future__ import annotations

import pytest

from starseq.mother import MotherSequence


@pytest.fixture(scope="session")
def shared_mother() -> MotherSequence:
    """One mother sequence per session so sieve work is paid once."""
    return MotherSequence()
