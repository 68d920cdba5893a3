import time

import pytest

from bismash import bulk


class SweepCache:
    """Computes full-degree verification sweeps once per session and
    remembers how long the fresh computation took."""

    def __init__(self):
        self._results = {}
        self._seconds = {}

    def get(self, n):
        if n not in self._results:
            start = time.perf_counter()
            self._results[n] = bulk.sweep(n)
            self._seconds[n] = time.perf_counter() - start
        return self._results[n]

    def seconds(self, n):
        self.get(n)
        return self._seconds[n]


@pytest.fixture(scope="session")
def sweeps():
    return SweepCache()
