"""Exact-arithmetic verification toolkit for elliptic K3 fibrations.

Thin wrapper over the _k3fib extension: the *_json entry points are
re-exposed as functions returning plain dicts.
"""

import json as _json

try:
    from . import _k3fib as _core
except ImportError:  # running against a build tree
    import _k3fib as _core

__version__ = _core.__version__

minimalize = _core.minimalize
discriminant = _core.discriminant
twist_equivalent = _core.twist_equivalent
base_invert = _core.base_invert
enumerate_stable_pairs = _core.enumerate_stable_pairs
orbit_count_solutions = _core.orbit_count_solutions
candidate_ns_lattice = _core.candidate_ns_lattice
corollary_rank_check = _core.corollary_rank_check
cyclotomic_poly = _core.cyclotomic_poly
phi_euler = _core.phi_euler
mobius = _core.mobius
ramanujan_sum = _core.ramanujan_sum
trace_power = _core.trace_power
fixed_discriminant_dimension = _core.fixed_discriminant_dimension
fixed_kernel = _core.fixed_kernel
solve_automorphisms = _core.solve_automorphisms
chi_fixed_trace = _core.chi_fixed_trace
catalog_ids = _core.catalog_ids
run_cli = _core.run_cli
K3FibError = _core.K3FibError


def analyze(a, b):
    """Fiber classification report for y^2 = x^3 + a(t)x + b(t)."""
    return _json.loads(_core.analyze_json(a, b))


def lattice_info(spec):
    return _json.loads(_core.lattice_json(spec))


def autocheck(a, b, order, alpha, beta, gamma):
    return _json.loads(_core.autocheck_json(a, b, order, alpha, beta, gamma))


def weighted_check(weights, equation, exponents, order):
    return _json.loads(_core.weighted_check_json(weights, equation, exponents, order))


def mordell_weil(report, rho, det_s=None):
    """Shioda-Tate and height data; `report` is an analyze() result."""
    if isinstance(report, dict):
        report = _json.dumps(report)
    return _json.loads(_core.mw_json(report, rho, det_s))


def catalog_verify(ids=None, parallel=False):
    return _json.loads(_core.catalog_verify_json(ids, parallel))
