import os
import tempfile

import pytest

# route the chamber disk cache away from the user's home for the whole run
_cache_root = tempfile.mkdtemp(prefix="steinmann-test-cache-")
os.environ.setdefault("STEINMANN_CACHE_DIR", _cache_root)


@pytest.fixture(scope="session")
def cache_dir():
    return os.environ["STEINMANN_CACHE_DIR"]
