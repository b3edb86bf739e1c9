import json
from pathlib import Path

import pytest

from foliation_cert.certificate import build_loci, full_verify
from foliation_cert.exact import XY, from_literal
from foliation_cert.foliation import build_foliation, one_form
from foliation_cert.instances import load_instance

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_path(name):
    return FIXTURES / name


def monic_set(literals):
    """Frozen basis literals as a set of monic polynomials."""
    return {from_literal(g).monic() for g in literals}


@pytest.fixture(scope="session")
def frozen():
    return json.loads((FIXTURES / "frozen.json").read_text())


@pytest.fixture(scope="session")
def main_inst():
    return load_instance(FIXTURES / "main_instance.json")


@pytest.fixture(scope="session")
def family_inst():
    return load_instance(FIXTURES / "family_instance.json")


@pytest.fixture(scope="session")
def main_fd(main_inst):
    return build_foliation(main_inst)


@pytest.fixture(scope="session")
def main_form(main_fd):
    return one_form(main_fd)


@pytest.fixture(scope="session")
def main_loci(main_inst):
    return build_loci(main_inst)


@pytest.fixture(scope="session")
def main_report(main_inst):
    return full_verify(main_inst)


@pytest.fixture(scope="session")
def family_report(family_inst):
    return full_verify(family_inst)


@pytest.fixture(scope="session")
def gens():
    return XY.gens()


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
