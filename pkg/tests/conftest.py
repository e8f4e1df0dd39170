import os
import subprocess
import sys

import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DATA = os.path.join(ROOT, "data")
GOLDEN = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")


def data_path(name: str) -> str:
    return os.path.join(DATA, name)


def run_cli(args, cwd, env_extra=None):
    env = os.environ.copy()
    env.update(env_extra or {})
    return subprocess.run(
        [sys.executable, "-m", "rdfsummarize", *args],
        capture_output=True, cwd=str(cwd), env=env)


@pytest.fixture(scope="session")
def demo_graph():
    import rdfsummarize as rs
    return rs.parse_ntriples_file(data_path("demo.nt"))


@pytest.fixture(scope="session")
def lubm_graph():
    import rdfsummarize as rs
    return rs.parse_ntriples_file(data_path("lubm_like.nt"))


@pytest.fixture(scope="session")
def semdb_graph():
    import rdfsummarize as rs
    return rs.parse_ntriples_file(data_path("semdb_like.nt"))
