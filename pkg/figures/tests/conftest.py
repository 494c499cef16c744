"""Fixture CSVs produced by the hookwalk CLI, consumed as an external tool.

These tests exercise the schema-level interface only, so the producer is
always invoked as a subprocess; the hookwalk library is never imported.
"""

import subprocess
import sys

import pytest


def _simulate(outdir, n: int) -> None:
    proc = subprocess.run(
        [sys.executable, "-m", "hookwalk.cli", "simulate",
         "--n", str(n), "--outdir", str(outdir)],
        capture_output=True,
        text=True,
    )
    if proc.returncode != 0:
        raise RuntimeError(
            f"hookwalk simulate --n {n} failed ({proc.returncode}): {proc.stderr}"
        )


@pytest.fixture(scope="session")
def sim2(tmp_path_factory):
    """Seeded n=2 run: word (0,1,0,1), four steps, five snapshots."""
    outdir = tmp_path_factory.mktemp("sim2")
    _simulate(outdir, 2)
    return outdir


@pytest.fixture(scope="session")
def sim300(tmp_path_factory):
    """Seeded n=300 run: the figure-scale fixture."""
    outdir = tmp_path_factory.mktemp("sim300")
    _simulate(outdir, 300)
    return outdir
