from pathlib import Path

import pytest

from hitchin_fg.traintrack import parse_track

FIXTURE = Path(__file__).resolve().parent.parent / "fixtures" / "genus2.tt"


@pytest.fixture(scope="session")
def genus2():
    return parse_track(FIXTURE.read_text())


@pytest.fixture(scope="session")
def genus2_path():
    return str(FIXTURE)
