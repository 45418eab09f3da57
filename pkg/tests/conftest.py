import pytest

from coxhull import TypeTag, build_group

PLANAR_CODES = ["a2t", "c2t", "g2t"]
ALL_CODES = PLANAR_CODES + ["i2inf"]


@pytest.fixture(scope="session")
def a2():
    return build_group(TypeTag.A2Tilde)


@pytest.fixture(scope="session")
def c2():
    return build_group(TypeTag.C2Tilde)


@pytest.fixture(scope="session")
def g2():
    return build_group(TypeTag.G2Tilde)


@pytest.fixture(scope="session")
def i2():
    return build_group(TypeTag.I2Infinity)


@pytest.fixture(params=ALL_CODES, scope="session")
def ctx(request):
    return build_group(TypeTag.from_code(request.param))


@pytest.fixture(params=PLANAR_CODES, scope="session")
def planar_ctx(request):
    return build_group(TypeTag.from_code(request.param))
