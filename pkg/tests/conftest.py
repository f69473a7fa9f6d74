import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from nltest.lexicon import default_lexicon

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "tests" / "fixtures"
GOLDEN = FIXTURES / "golden"
CORPUS_DIR = ROOT / "corpus"
CORPUS = CORPUS_DIR / "corpus.xml"

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile(
    "ci", deadline=None, max_examples=2000, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()


@pytest.fixture(autouse=True)
def _no_lexicon_env(monkeypatch):
    monkeypatch.delenv("NLTEST_LEXICON_DIR", raising=False)
