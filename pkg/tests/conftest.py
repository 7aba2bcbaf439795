import pytest

from invar.specfile import fixture_path, load_spec_file


def _group(name):
    return load_spec_file(fixture_path(name)).group


@pytest.fixture(scope="session")
def d8():
    return _group("d8")


@pytest.fixture(scope="session")
def c2_swap():
    return _group("c2_swap")


@pytest.fixture(scope="session")
def c2_swap_gf2():
    return _group("c2_swap_gf2")


@pytest.fixture(scope="session")
def s3():
    return _group("s3_natural")


@pytest.fixture(scope="session")
def cn3():
    return _group("cn_scalar_3")


@pytest.fixture(scope="session")
def cn4():
    return _group("cn_scalar_4")


@pytest.fixture(scope="session")
def cn5():
    return _group("cn_scalar_5")


@pytest.fixture(scope="session")
def trivial2():
    return _group("trivial_2")


@pytest.fixture(scope="session")
def minus_identity():
    return _group("minus_identity")


@pytest.fixture(scope="session")
def gm():
    return _group("gm_weights")


@pytest.fixture(scope="session")
def sl2():
    return _group("sl2_binary_quadratics")


@pytest.fixture(scope="session")
def trivial_algebraic():
    return _group("trivial_algebraic_2")


@pytest.fixture(scope="session")
def c2_variety():
    return _group("c2_swap_variety")
