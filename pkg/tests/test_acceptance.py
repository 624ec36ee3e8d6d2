"""Acceptance suite: one criterion per test, one printed pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; tolerances are fixed here and match the package's verification suite.
"""

import math
import time

import numpy as np

from xxteleport.entanglement import concurrence, thermal_concurrence, \
    zero_entanglement_temperature
from xxteleport.model import ModelParams, gibbs_state, gibbs_state_oracle
from xxteleport.phase import (ARCSINH_1, TABLE1_REFERENCE, better_than_classical,
                              critical_temperature, reproduce_table1)
from xxteleport.teleport import (apply_channel, average_fidelity, bell_projectors,
                                 channel_fidelity, mc_average_fidelity,
                                 output_fidelity, protocol_oracle,
                                 quadrature_average_fidelity)
from xxteleport.verify import random_density, random_params, random_pure_qubit


def report(num, label, ok, detail):
    print(f"criterion {num} [{label}]: {'PASS' if ok else 'FAIL'}  ({detail})")
    assert ok, f"criterion {num} [{label}] failed: {detail}"


def test_criterion_1_table1_reproduction():
    start = time.perf_counter()
    points = reproduce_table1()
    elapsed = time.perf_counter() - start
    dev_t = max(abs(p.t_critical_over_j - t_ref) / t_ref
                for p, (_, t_ref, _) in zip(points, TABLE1_REFERENCE))
    dev_cr = max(abs(p.residual_concurrence - cr_ref)
                 for p, (_, _, cr_ref) in zip(points, TABLE1_REFERENCE))
    ok = len(points) == 9 and dev_t < 1e-5 and dev_cr < 1e-5 and elapsed < 1.0
    report(1, "table1-reproduction", ok,
           f"rel dev T={dev_t:.2e}, abs dev C_r={dev_cr:.2e}, {elapsed:.3f}s")


def test_criterion_2_zero_entanglement_temperature():
    dev = max(abs(zero_entanglement_temperature(j) - 1.13459 * j) / (1.13459 * j)
              for j in (0.5, 1.0, 2.0, 7.3))
    vanished = all(
        thermal_concurrence(ModelParams(j=1.0, b_m=b, t=zero_entanglement_temperature(1.0)
                                        * (1 + 1e-6))) == 0.0
        for b in (0.0, 0.5, 1.0, 2.0))
    ok = dev < 1e-5 and vanished
    report(2, "zero-entanglement-temperature", ok,
           f"rel dev={dev:.2e}, field-independent vanishing={vanished}")


def test_criterion_3_oracle_equivalences():
    rng = np.random.default_rng(2024)
    n = 1000
    params = [random_params(rng) for _ in range(n)]

    dev_a = max(np.abs(gibbs_state(p).rho - gibbs_state_oracle(p).rho).max()
                for p in params)
    dev_b = max(abs(thermal_concurrence(p) - concurrence(gibbs_state(p).rho).value)
                for p in params)
    dev_c = 0.0
    for _ in range(n):
        rho = random_density(rng)
        psi = random_pure_qubit(rng)
        dev_c = max(dev_c, float(np.abs(protocol_oracle(rho, psi)
                                        - apply_channel(rho, psi)).max()))
    dev_d = 0.0
    for p in params:
        psi = random_pure_qubit(rng)
        dev_d = max(dev_d, abs(output_fidelity(p, psi.theta)
                               - channel_fidelity(gibbs_state(p).rho, psi)))

    ok = dev_a < 1e-10 and dev_b < 1e-10 and dev_c < 1e-10 and dev_d < 1e-12
    report(3, "oracle-equivalences", ok,
           f"gibbs={dev_a:.2e}, concurrence={dev_b:.2e}, "
           f"protocol={dev_c:.2e}, pointwise={dev_d:.2e} on {n}-point grids")


def test_criterion_4_average_fidelity_triple_agreement():
    rng = np.random.default_rng(77)
    start = time.perf_counter()
    dev_quad = 0.0
    mc_ok = True
    worst_pull = 0.0
    for _ in range(20):
        p = random_params(rng)
        rho = gibbs_state(p).rho
        closed = average_fidelity(p).average
        dev_quad = max(dev_quad, abs(closed - quadrature_average_fidelity(rho).average))
        mc = mc_average_fidelity(rho, 1_000_000, seed=int(rng.integers(2**31)))
        gap = abs(closed - mc.average)
        if mc.stderr > 0.0:
            worst_pull = max(worst_pull, gap / mc.stderr)
            mc_ok = mc_ok and gap <= 3 * mc.stderr
        else:
            mc_ok = mc_ok and gap == 0.0
    elapsed = time.perf_counter() - start
    ok = dev_quad < 1e-10 and mc_ok and elapsed < 10.0
    report(4, "average-fidelity-triple-agreement", ok,
           f"quadrature dev={dev_quad:.2e}, worst MC pull={worst_pull:.2f} sigma, "
           f"{elapsed:.2f}s for 20 points")


def test_criterion_5_threshold_equivalence():
    rng = np.random.default_rng(99)
    mismatches = 0
    checked = 0
    for _ in range(2000):
        p = random_params(rng)
        beta = p.beta
        if abs(math.sinh(beta * p.j) - math.cosh(beta * p.b_m)) < 1e-9:
            continue
        checked += 1
        if better_than_classical(p) != (average_fidelity(p).average > 2.0 / 3.0):
            mismatches += 1
    dev_boundary = max(abs(average_fidelity(
        ModelParams(j=1.0, b_m=eta, t=critical_temperature(eta).t_critical_over_j)
    ).average - 2.0 / 3.0) for eta, _, _ in TABLE1_REFERENCE)
    ok = mismatches == 0 and dev_boundary < 1e-10
    report(5, "threshold-equivalence", ok,
           f"{mismatches}/{checked} mismatches, boundary fidelity dev={dev_boundary:.2e}")


def test_criterion_6_symmetry_and_limits():
    exact = True
    for j in (0.3, 1.0, 2.5):
        for b in (0.0, 0.7, 1.9):
            for t in (0.1, 1.0, 4.0):
                c = thermal_concurrence(ModelParams(j, b, t))
                exact = exact and thermal_concurrence(ModelParams(-j, b, t)) == c
                exact = exact and thermal_concurrence(ModelParams(j, -b, t)) == c
    t_inf = 1e9
    dev_f = max(abs(average_fidelity(ModelParams(j, b, t_inf * j)).average - 0.5)
                for j in (0.5, 1.0, 2.0) for b in (0.0, 1.0))
    dev_c = max(thermal_concurrence(ModelParams(j, b, t_inf * j))
                for j in (0.5, 1.0, 2.0) for b in (0.0, 1.0))
    ok = exact and dev_f < 1e-9 and dev_c < 1e-9
    report(6, "symmetry-and-limits", ok,
           f"sign-flip exact={exact}, |F-1/2|={dev_f:.2e}, C={dev_c:.2e} at T=1e9*J")


def test_criterion_7_randomized_properties():
    rng = np.random.default_rng(31415)
    n = 10_000

    # Bell projector completeness applied to random 4-dim states
    projectors = bell_projectors().as_tuple
    dev_complete = 0.0
    for _ in range(n):
        v = rng.normal(size=4) + 1j * rng.normal(size=4)
        v /= np.linalg.norm(v)
        total = sum(float(np.real(v.conj() @ e @ v)) for e in projectors)
        dev_complete = max(dev_complete, abs(total - 1.0))

    # channel trace preservation
    dev_trace = 0.0
    for _ in range(n):
        out = apply_channel(random_density(rng), random_pure_qubit(rng))
        dev_trace = max(dev_trace, abs(float(np.trace(out).real) - 1.0))

    # concurrence range on random mixed states
    range_ok = True
    for _ in range(n):
        val = concurrence(random_density(rng)).value
        range_ok = range_ok and 0.0 <= val <= 1.0

    # bisection bracket validity over eta in (0, 1)
    bracket_ok = True
    for eta in rng.uniform(1e-9, 1.0 - 1e-12, n):
        bracket_ok = bracket_ok and (
            math.sinh(ARCSINH_1) - math.cosh(eta * ARCSINH_1) <= 0.0
            and np.sinh(50.0) - np.cosh(eta * 50.0) > 0.0)

    ok = dev_complete < 1e-12 and dev_trace < 1e-12 and range_ok and bracket_ok
    report(7, "randomized-properties", ok,
           f"completeness dev={dev_complete:.2e}, trace dev={dev_trace:.2e}, "
           f"range ok={range_ok}, bracket ok={bracket_ok} on {n} cases each")
