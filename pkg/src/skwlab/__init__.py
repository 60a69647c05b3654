"""Exact-arithmetic laboratory for the strange modular Lie superalgebras.

The package constructs the periplectic families p~(n) and p(n) and the queer
families q(n) and q~(n) over finite fields F_{p^k} of odd characteristic,
builds their reduced-enveloping induced modules by PBW straightening, and
decides irreducibility / graded simplicity with a certified MeatAxe.  The
:mod:`skwlab.experiments` module packages the verification suites; the
``skwlab`` console script exposes everything on the command line.

Layers, bottom up:

``field``        code-table arithmetic for F_{p^k}
``linalg``       exact dense linear algebra over those fields
``superalg``     the four algebra families with structure constants and p-map
``pchar``        even linear functionals, Gram forms, weight enumeration
``envmod``       induced modules with explicit action matrices, cache files
``verma``        the concrete baby Verma / induced-module constructors
``meataxe``      simplicity certificates with deterministic replay
``reports``      validated JSON report envelopes
``experiments``  the acceptance-grade suites (AC1..AC11)
``cli``          argparse front end
"""

from .field import Field, FieldDescriptor, get_field
from .superalg import FAMILIES, LieSuperalgebra, build_algebra, verify_algebra
from .pchar import (
    PChar,
    WeightVector,
    b_values,
    gen_regular_nilpotent,
    gen_regular_semisimple,
    lambda_set,
)
from .envmod import InducedModule, induce, load_action_cache, save_action_cache
from .verma import (
    kac_module_p2,
    omega,
    phi,
    ptilde_baby_verma,
    queer_baby_verma,
    xy_scalar,
)
from .meataxe import GradedRep, SimplicityCertificate, is_graded_simple, is_irreducible, replay, rep_of_module, spin
from .experiments import RunContext, SUITES, SUITE_ORDER, SuiteRequest, run_request

__version__ = "0.1.0"

__all__ = [
    "Field",
    "FieldDescriptor",
    "get_field",
    "FAMILIES",
    "LieSuperalgebra",
    "build_algebra",
    "verify_algebra",
    "PChar",
    "WeightVector",
    "b_values",
    "gen_regular_nilpotent",
    "gen_regular_semisimple",
    "lambda_set",
    "InducedModule",
    "induce",
    "load_action_cache",
    "save_action_cache",
    "kac_module_p2",
    "omega",
    "phi",
    "ptilde_baby_verma",
    "queer_baby_verma",
    "xy_scalar",
    "GradedRep",
    "SimplicityCertificate",
    "is_graded_simple",
    "is_irreducible",
    "replay",
    "rep_of_module",
    "spin",
    "RunContext",
    "SUITES",
    "SUITE_ORDER",
    "SuiteRequest",
    "run_request",
    "__version__",
]
