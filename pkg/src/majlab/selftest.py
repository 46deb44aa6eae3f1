"""Executable invariant suite binding all modules into one pass/fail check.

Every check runs at a fixed seed and returns True/False; the CLI `selftest`
subcommand prints one timed line per invariant and exits nonzero on any
failure.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

import numpy as np

from . import algebra, bdg, braiding, hybrid

SEED = 20130417


def check_clifford_relations() -> bool:
    n_modes = 4
    ok = True
    for k in range(1, 2 * n_modes + 1):
        for l in range(1, 2 * n_modes + 1):
            gk = algebra.generator_monomial(n_modes, k)
            gl = algebra.generator_monomial(n_modes, l)
            anti = algebra.poly_add(
                algebra.poly_from_monomial(algebra.mono_multiply(gk, gl)),
                algebra.poly_from_monomial(algebra.mono_multiply(gl, gk)),
            )
            expect = {(): 2.0 + 0.0j} if k == l else {}
            ok &= anti == expect
    gams = [g.matrix for g in algebra.fock_representation(n_modes)]
    eye = np.eye(2 ** n_modes)
    for i, gi in enumerate(gams):
        for j, gj in enumerate(gams):
            resid = np.max(np.abs(gi @ gj + gj @ gi - 2.0 * (i == j) * eye))
            ok &= resid < 1e-13
    return bool(ok)


def check_gamma_pair_square() -> bool:
    m = algebra.mono_product(
        [algebra.generator_monomial(2, 1), algebra.generator_monomial(2, 2)] * 2, 2
    )
    ok = m == algebra.MajoranaMonomial(2, 2, ())  # i^2 = -1
    g12 = algebra.monomial_matrix(
        algebra.MajoranaMonomial(2, 0, (1, 2))
    )
    ok &= np.max(np.abs(g12 @ g12 + np.eye(4))) < 1e-13
    return bool(ok)


def check_parity_conjugation() -> bool:
    rng = np.random.default_rng(SEED)
    n_modes = 3
    p = algebra.total_parity_matrix(n_modes)
    ok = True
    for _ in range(50):
        size = 2 * int(rng.integers(0, 3 + 1))
        support = tuple(sorted(rng.choice(2 * n_modes, size=size, replace=False) + 1))
        a = algebra.monomial_matrix(algebra.MajoranaMonomial(n_modes, 0, support))
        ok &= np.max(np.abs(p @ a @ p - a)) < 1e-13
    return bool(ok)


def check_basis_roundtrip() -> bool:
    ok = True
    for n_modes in (1, 2, 3):
        for k in range(1, n_modes + 1):
            go, ge = algebra.basis_convert(n_modes, k, "majorana_to_dirac")
            ok &= go == {(2 * k - 1,): 1.0}
            ok &= ge == {(2 * k,): 1.0}
            nk = algebra.number_operator(n_modes, k)
            expect = {(): 0.5 + 0j, (2 * k - 1, 2 * k): 0.5j}
            ok &= nk == expect
    return bool(ok)


def check_u1_rotation() -> bool:
    rng = np.random.default_rng(SEED)
    ok = True
    for phi in rng.uniform(-10, 10, size=100):
        r = algebra.u1_rotate_modes(phi, 1, 1) @ algebra.u1_rotate_modes(-phi, 1, 1)
        ok &= np.max(np.abs(r - np.eye(2))) < 1e-13
    return bool(ok)


def _random_phs_matrix(rng, n_orbitals: int) -> bdg.BdGMatrix:
    dim = 2 * n_orbitals
    h0 = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    h0 = (h0 + h0.conj().T) / 2
    n = n_orbitals
    swapped = np.block(
        [[np.conj(h0)[n:, n:], np.conj(h0)[n:, :n]],
         [np.conj(h0)[:n, n:], np.conj(h0)[:n, :n]]]
    )
    return bdg.BdGMatrix((h0 - swapped) / 2, n_orbitals, "(c, c^dag)")


def check_phs_spectrum_symmetry() -> bool:
    rng = np.random.default_rng(SEED)
    ok = True
    for _ in range(50):
        h = _random_phs_matrix(rng, 10)
        ok &= h.phs_residual() < 1e-12
        ok &= bdg.diagonalize(h).pairing_residual < 1e-10
    models = [
        bdg.build_kitaev_bdg(bdg.KitaevChainParams(20, 1.0, 0.7, 0.4)),
        bdg.build_kitaev_bdg(
            bdg.KitaevChainParams(20, 1.0, -0.3, 0.2, boundary="periodic")
        ),
        bdg.build_nanowire_bdg(
            bdg.NanowireParams(16, mass=0.05, mu=0.4, alpha_so=0.7,
                               e_zeeman=2.0, delta=1.0)
        ),
    ]
    for h in models:
        ok &= h.phs_residual() < 1e-12
        ok &= bdg.diagonalize(h).pairing_residual < 1e-10
    return bool(ok)


def check_zero_mode_splitting_scaling() -> bool:
    sizes = np.arange(20, 81, 10)
    energies = []
    for n in sizes:
        h = bdg.build_kitaev_bdg(bdg.KitaevChainParams(int(n), 1.0, 0.0, 0.2))
        energies.append(np.min(np.abs(np.linalg.eigvalsh(h.matrix))))
    y = np.log(energies)
    slope, intercept = np.polyfit(sizes, y, 1)
    fit = slope * sizes + intercept
    r2 = 1.0 - np.sum((y - fit) ** 2) / np.sum((y - y.mean()) ** 2)
    return slope < 0 and r2 > 0.99


def check_decay_length() -> bool:
    params = bdg.KitaevChainParams(120, 1.0, 0.0, 0.1)
    s = bdg.diagonalize(bdg.build_kitaev_bdg(params))
    report = bdg.find_zero_modes(s, threshold=1e-3)
    xi_ref = bdg.kitaev_coherence_length(params)
    return (
        report.count == 2
        and abs(report.decay_length_fit - xi_ref) / xi_ref < 0.10
    )


def check_charge_grid() -> bool:
    ok = True
    for ez in np.linspace(0.1, 3.0, 20):
        for mu in np.linspace(-2.0, 2.0, 20):
            p = bdg.NanowireParams(4, mass=0.05, mu=float(mu), alpha_so=0.7,
                                   e_zeeman=float(ez), delta=1.0)
            mu_c = np.sqrt(max(ez ** 2 - 1.0, 0.0))
            if abs(abs(mu) - mu_c) < 0.05 or abs(ez - 1.0) < 0.05:
                continue  # grid-resolution band around the critical set
            ok &= bdg.topological_charge(p, "analytic") == \
                bdg.topological_charge(p, "numeric")
    return bool(ok)


def check_many_body_equivalence() -> bool:
    rng = np.random.default_rng(SEED)
    ok = True
    for n in (2, 3, 4):
        for _ in range(5):
            p = bdg.KitaevChainParams(
                n, t=float(rng.uniform(0.5, 2.0)), mu=float(rng.uniform(-2, 2)),
                delta=float(rng.uniform(0.05, 1.5)),
            )
            exact, recon = bdg.many_body_oracle(p)
            ok &= np.max(np.abs(exact - recon)) < 1e-9
    return bool(ok)


def _random_word(rng, n_strands: int, max_len: int) -> braiding.BraidWord:
    length = int(rng.integers(0, max_len + 1))
    letters = tuple(
        (int(rng.integers(1, n_strands)), int(rng.choice([1, -1])))
        for _ in range(length)
    )
    return braiding.BraidWord(n_strands, letters)


def check_representation_consistency() -> bool:
    rng = np.random.default_rng(SEED)
    ok = True
    for _ in range(200):
        n_strands = int(rng.integers(2, 7))
        w = _random_word(rng, n_strands, 12)
        n_modes = (n_strands + 1) // 2
        ok &= braiding.word_action(w) == braiding.conjugation_action(w, n_modes)
    return bool(ok)


def check_parity_conservation() -> bool:
    rng = np.random.default_rng(SEED)
    ok = True
    for _ in range(50):
        n_strands = int(rng.integers(2, 7))
        w = _random_word(rng, n_strands, 8)
        n_modes = (n_strands + 1) // 2
        u = braiding.word_unitary(w, n_modes).matrix
        p = algebra.total_parity_matrix(n_modes)
        ok &= np.max(np.abs(u @ p - p @ u)) < 1e-12
    return bool(ok)


def check_word_inverse() -> bool:
    rng = np.random.default_rng(SEED)
    ok = True
    for _ in range(100):
        n_strands = int(rng.integers(2, 7))
        w = _random_word(rng, n_strands, 8)
        ww = braiding.BraidWord(n_strands, w.letters + w.inverse().letters)
        ok &= braiding.word_action(ww) == \
            braiding.SignedPermutation.identity(n_strands)
        n_modes = (n_strands + 1) // 2
        u = braiding.word_unitary(ww, n_modes).matrix
        ok &= braiding.equal_mod_phase(u, np.eye(u.shape[0], dtype=complex), 1e-11)
    return bool(ok)


def check_braid_relations() -> bool:
    ok = True
    for n in range(2, 7):
        ok &= braiding.verify_braid_relations(n, "signed_perm").all_passed
        ok &= braiding.verify_braid_relations(n, "fock").all_passed
    return bool(ok)


def check_clifford_only() -> bool:
    gates = []
    alphabet = [(k, e) for k in (1, 2, 3) for e in (1, -1)]
    for length in range(4):
        for letters in itertools.product(alphabet, repeat=length):
            gates.append(braiding.logical_gate_from_word(
                braiding.BraidWord(4, letters)))
    elements, closed = braiding.clifford_closure(gates, max_elements=100)
    return closed and len(elements) == 24


def check_splitting_slope() -> bool:
    ratios = np.linspace(0.5, 30.0, 20)
    deltas = np.array([hybrid.charge_splitting(r, 1.0) for r in ratios])
    x = np.sqrt(ratios)
    slope, intercept = np.polyfit(x, np.log(deltas), 1)
    fit = slope * x + intercept
    resid = np.max(np.abs(np.log(deltas) - fit))
    monotone = bool(np.all(np.diff(deltas) < 0))
    return monotone and abs(slope + np.sqrt(8.0)) < 1e-12 and resid < 1e-12


def check_phase_gate_random() -> bool:
    rng = np.random.default_rng(SEED)
    ok = True
    for _ in range(100):
        phi = float(rng.uniform(-2 * np.pi, 2 * np.pi))
        delta = float(rng.uniform(1e-3, 10.0))
        gate = hybrid.simulate_phase_gate(hybrid.phase_gate_plan(phi, delta))
        target = np.diag([np.exp(1j * phi), np.exp(-1j * phi)])
        ok &= gate.equals(target, tol=1e-12)
    return bool(ok)


def check_dispersive_convergence() -> bool:
    errors = []
    for ratio in (5.0, 10.0, 20.0, 40.0):
        g = 0.01
        r = hybrid.ReadoutParams(omega0=1.0, g_jc=g,
                                 depsilon=1.0 - ratio * g, delta=0.0)
        shift_formula = hybrid.dispersive_shift(r) - r.omega0
        shift_oracle = hybrid.jc_oracle(r).cavity_freq_upper - r.omega0
        errors.append(abs(shift_formula - shift_oracle) / abs(shift_oracle))
    return bool(np.all(np.diff(errors) < 0))


def check_contrast_odd() -> bool:
    base = dict(omega0=1.0, g_jc=0.02, depsilon=0.8)
    ok = True
    for delta in (1e-4, 3e-3, 0.05):
        up = hybrid.dispersive_shift(
            hybrid.ReadoutParams(**base, delta=delta, sigma_z=1))
        down = hybrid.dispersive_shift(
            hybrid.ReadoutParams(**base, delta=-delta, sigma_z=-1))
        ok &= up - base["omega0"] == down - base["omega0"]
    return bool(ok)


def check_harness_determinism() -> bool:
    from . import cli

    config = {
        "model": "kitaev",
        "parameters": {"n_sites": 24, "t": 1.0, "delta": 0.4},
        "sweep": [{"parameter": "mu", "start": -3.0, "stop": 3.0, "points": 9}],
    }
    outs = []
    for threads in (1, 4):
        table = cli.run_sweep(cli.RunConfig.from_dict(
            dict(config, threads=threads)), observable="phase-diagram")
        outs.append(cli.emit_table(table, "csv"))
    ok = outs[0] == outs[1]
    h1 = cli.config_hash(config)
    h2 = cli.config_hash(dict(config, threads=8))
    changed = dict(config, parameters=dict(config["parameters"], t=2.0))
    ok &= h1 == h2 and cli.config_hash(changed) != h1
    return bool(ok)


CHECKS = [
    ("clifford-relations", check_clifford_relations),
    ("gamma-pair-square", check_gamma_pair_square),
    ("parity-conjugation", check_parity_conjugation),
    ("basis-roundtrip", check_basis_roundtrip),
    ("u1-rotation-inverse", check_u1_rotation),
    ("phs-spectrum-symmetry", check_phs_spectrum_symmetry),
    ("zero-mode-splitting-scaling", check_zero_mode_splitting_scaling),
    ("decay-length-vs-coherence", check_decay_length),
    ("charge-analytic-vs-pfaffian", check_charge_grid),
    ("many-body-oracle", check_many_body_equivalence),
    ("braid-representation-consistency", check_representation_consistency),
    ("braid-parity-conservation", check_parity_conservation),
    ("braid-word-inverse", check_word_inverse),
    ("braid-relations", check_braid_relations),
    ("braid-clifford-only", check_clifford_only),
    ("charge-splitting-slope", check_splitting_slope),
    ("phase-gate-random", check_phase_gate_random),
    ("dispersive-convergence", check_dispersive_convergence),
    ("readout-contrast-odd", check_contrast_odd),
    ("harness-determinism", check_harness_determinism),
]


@dataclass
class SelfTestResult:
    name: str
    passed: bool
    seconds: float


def run_selftest(verbose: bool = True) -> list[SelfTestResult]:
    results = []
    for name, fn in CHECKS:
        start = time.perf_counter()
        try:
            passed = bool(fn())
        except Exception as exc:  # a crash is a failure, not an abort
            passed = False
            if verbose:
                print(f"  error in {name}: {exc}")
        elapsed = time.perf_counter() - start
        results.append(SelfTestResult(name, passed, elapsed))
        if verbose:
            status = "PASS" if passed else "FAIL"
            print(f"[{status}] {name:36s} {elapsed:8.3f} s")
    return results
