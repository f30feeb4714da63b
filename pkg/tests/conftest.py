import os
import time

import pytest

from gincomplex import _kernels, corpus
from gincomplex.gin import gin as run_gin
from gincomplex.poly import ORDERS

EXTENDED = os.environ.get("GINCOMPLEX_EXTENDED", "").strip() not in ("", "0")

extended_only = pytest.mark.skipif(
    not EXTENDED, reason="set GINCOMPLEX_EXTENDED=1 to run the heavy target")


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    _kernels.warmup()


class CorpusStore:
    """Session-wide cache of built ideals and stabilized gins.

    Gins are computed once, with the wall time of the first computation kept
    for the runtime-budget checks.
    """

    def __init__(self):
        self.ideals = {}
        self.gins = {}
        self.timings = {}

    def ideal(self, name):
        if name not in self.ideals:
            self.ideals[name] = corpus.build(name)
        return self.ideals[name]

    def gin(self, name, order_name="glex"):
        key = (name, order_name)
        if key not in self.gins:
            started = time.monotonic()
            result = run_gin(self.ideal(name), ORDERS[order_name])
            self.timings[key] = time.monotonic() - started
            self.gins[key] = result
        return self.gins[key]


@pytest.fixture(scope="session")
def store():
    return CorpusStore()
