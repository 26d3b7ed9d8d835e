import os
import sys
from pathlib import Path

import hypothesis
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

hypothesis.settings.register_profile("dev", max_examples=25, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=100, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "dev"))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: timing benchmarks and long oracle sweeps")


@pytest.fixture
def output_dir(tmp_path, monkeypatch):
    """Point the CLI's default output directory at a temp dir"""
    monkeypatch.setenv("BOARDLESS_OUTPUT_DIR", str(tmp_path))
    return tmp_path
