import pytest

from ldata import build_zeta, bundled_zeta_zeros, make_bump


@pytest.fixture(scope="session")
def zeta_zeros():
    try:
        return bundled_zeta_zeros()
    except FileNotFoundError as exc:
        pytest.skip(f"bundled zeta zero table unavailable: {exc}")


@pytest.fixture(scope="session")
def zeta_datum(zeta_zeros):
    return build_zeta(zeros=zeta_zeros)


@pytest.fixture()
def canonical_bump():
    return make_bump(1.0, 0.5, 0.5)
