"""Shared fixtures: fields, algebras, frozen expected values, and the
acceptance-criteria summary printed at the end of the run."""

from __future__ import annotations

import json
import os

import numpy as np
import pytest

from skwlab import envmod as em
from skwlab import field as fd
from skwlab import meataxe as mx
from skwlab import pchar as pc
from skwlab import superalg as sa
from skwlab import verma as vm

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures", "derived_values.json")

_CRITERIA_LINES: list[str] = []


def record_criterion(name: str, ok: bool, detail: str) -> None:
    line = f"[{name}] {'PASS' if ok else 'FAIL'} - {detail}"
    _CRITERIA_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def criteria():
    return record_criterion


@pytest.fixture(scope="session")
def derived():
    with open(FIXTURES) as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def f3():
    return fd.get_field(3, 1)


@pytest.fixture(scope="session")
def f9():
    return fd.get_field(3, 2)


@pytest.fixture(scope="session")
def f27():
    return fd.get_field(3, 3)


@pytest.fixture(scope="session")
def f25():
    return fd.get_field(5, 2)


@pytest.fixture(scope="session")
def ptilde2(f27):
    return sa.build_algebra("ptilde", 2, f27)


@pytest.fixture(scope="session")
def q2(f27):
    return sa.build_algebra("q", 2, f27)


@pytest.fixture(scope="session")
def regss_kac(ptilde2):
    """A regular-semisimple periplectic (chi, lambda, module, rep) quadruple."""
    g = ptilde2
    tup = pc.find_regular_weights(g)
    chi, lam = pc.gen_regular_semisimple(g, tup)
    Z = vm.ptilde_baby_verma(g, chi, lam)
    return chi, lam, Z, mx.rep_of_module(Z)


def slow_field_of(field):
    """The independent slow field with the same modulus."""
    from oracles import SlowGF

    return SlowGF(field.p, field.k, list(field.descriptor.modulus))


def slow_matrix(field, gf, M):
    """Convert a code matrix to nested SlowGF coefficient tuples."""
    return [[gf.from_code(int(x)) for x in row] for row in np.asarray(M)]
