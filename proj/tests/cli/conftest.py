import json
import os
import subprocess
from pathlib import Path

import pytest

CLI = os.environ.get("INVFIELD_CLI", str(Path(__file__).resolve().parents[2] / "build" / "invfield"))
SCHEMAS = Path(os.environ.get("INVFIELD_SCHEMAS", Path(__file__).resolve().parents[2] / "schemas"))


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("LOG_LEVEL", None)
    if env:
        full_env.update(env)
    return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, env=full_env)


@pytest.fixture
def cli():
    return run


@pytest.fixture
def schema():
    def load(name):
        return json.loads((SCHEMAS / name).read_text())
    return load
