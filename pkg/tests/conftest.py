import pytest

from qlatin.claims import run_all_claims


@pytest.fixture(scope="session")
def claims_results():
    """One full claims run shared by the acceptance gate and the claims tests."""
    return run_all_claims()


@pytest.fixture(scope="session")
def claims_by_id(claims_results):
    return {r.claim_id: r for r in claims_results}
