from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tetrahopf.algebra import AlgebraContext  # noqa: E402
from tetrahopf.realization import (  # noqa: E402
    cyclic,
    cyclic_character,
    extend_realization,
    mk_affine_realization,
)

# outcome lines of the acceptance criteria, filled by test_acceptance
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def extended_realization():
    return extend_realization(mk_affine_realization(1, 0), cyclic(4), cyclic_character(4, 1))


@pytest.fixture(scope="session")
def affine():
    return mk_affine_realization(1, 0)


@pytest.fixture(scope="session")
def extended():
    return extended_realization()


@pytest.fixture(scope="session")
def ctx_aff(affine):
    return AlgebraContext(affine, 1)


@pytest.fixture(scope="session")
def ctx(extended):
    return AlgebraContext(extended, 1)


@pytest.fixture(scope="session")
def g_out(ctx):
    """A fixed element outside ker chi_z: (0,1)*(g^1)."""
    g = ctx.group.element("(0,1)*(g^1)")
    assert not ctx.in_kernel(g)
    return g


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        name, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {n:>2}: {name}")
