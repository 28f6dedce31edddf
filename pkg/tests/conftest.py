import pytest
from hypothesis import HealthCheck, settings

from bianchi_hecke.bredon import hecke_operator
from bianchi_hecke.cwmodel import congruence_model, gamma1_model
from bianchi_hecke.gaussian import classify_prime

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def gamma():
    return gamma1_model()


@pytest.fixture(scope="session")
def p1i():
    return classify_prime("1+i")


@pytest.fixture(scope="session")
def k_model(p1i):
    return congruence_model(p1i)


@pytest.fixture(scope="session")
def hecke_1pi(p1i):
    return hecke_operator(p1i)
