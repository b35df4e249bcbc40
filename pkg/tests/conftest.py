import pytest

from subspace_products.fields import ExtensionField


@pytest.fixture(scope="session")
def field_cache():
    """Session-wide field constructor cache; building GF(2^12) etc. once."""
    cache = {}

    def get(p, n):
        if (p, n) not in cache:
            cache[(p, n)] = ExtensionField(p, n)
        return cache[(p, n)]

    return get
