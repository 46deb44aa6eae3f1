"""Acceptance suite: one test per shipped guarantee, each printing a single
pass/fail line with its runtime.  Run with `pytest -v tests/test_acceptance.py`
(add -s to see the lines as they complete)."""

import time

import numpy as np
import pytest

from majlab import algebra, bdg, braiding, cli, hybrid


class Criterion:
    def __init__(self, name, budget_seconds):
        self.name = name
        self.budget = budget_seconds
        self.start = time.perf_counter()

    def finish(self, passed):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if passed and elapsed < self.budget else "FAIL"
        print(f"[{status}] {self.name} ({elapsed:.2f} s / budget {self.budget} s)")
        assert passed
        assert elapsed < self.budget, f"{self.name} exceeded {self.budget} s"


def test_clifford_algebra_exact_and_dense():
    crit = Criterion("clifford-algebra", 1.0)
    ok = True
    n_modes = 4
    for k in range(1, 2 * n_modes + 1):
        for l in range(1, 2 * n_modes + 1):
            gk = algebra.generator_monomial(n_modes, k)
            gl = algebra.generator_monomial(n_modes, l)
            anti = algebra.poly_add(
                algebra.poly_from_monomial(algebra.mono_multiply(gk, gl)),
                algebra.poly_from_monomial(algebra.mono_multiply(gl, gk)),
            )
            ok &= anti == ({(): 2.0} if k == l else {})
    for n in (1, 2, 3, 4):
        gammas = [g.matrix for g in algebra.fock_representation(n)]
        eye = np.eye(2 ** n)
        for i, gi in enumerate(gammas):
            for j, gj in enumerate(gammas):
                resid = np.max(np.abs(gi @ gj + gj @ gi - 2.0 * (i == j) * eye))
                ok &= resid < 1e-13
    crit.finish(bool(ok))


def test_phs_spectrum_symmetry():
    crit = Criterion("phs-spectrum-symmetry", 5.0)
    rng = np.random.default_rng(11)
    ok = True
    for _ in range(50):
        n = 12
        h0 = rng.normal(size=(2 * n, 2 * n)) + 1j * rng.normal(size=(2 * n, 2 * n))
        h0 = (h0 + h0.conj().T) / 2
        hc = np.conj(h0)
        swapped = np.block([[hc[n:, n:], hc[n:, :n]], [hc[:n, n:], hc[:n, :n]]])
        h = bdg.BdGMatrix((h0 - swapped) / 2, n, "(c, c^dag)")
        ok &= bdg.diagonalize(h).pairing_residual < 1e-10
    models = [
        bdg.build_kitaev_bdg(bdg.KitaevChainParams(30, 1.0, 0.7, 0.4)),
        bdg.build_kitaev_bdg(
            bdg.KitaevChainParams(30, 1.0, -0.3, 0.2, boundary="periodic")),
        bdg.build_nanowire_bdg(
            bdg.NanowireParams(20, mass=0.05, mu=0.4, alpha_so=0.7,
                               e_zeeman=2.0, delta=1.0)),
        bdg.build_nanowire_bdg(
            bdg.NanowireParams(20, mass=0.05, mu=1.0, alpha_so=0.7,
                               e_zeeman=0.5, delta=1.0, boundary="periodic")),
    ]
    for h in models:
        ok &= bdg.diagonalize(h).pairing_residual < 1e-10
    crit.finish(bool(ok))


def test_many_body_oracle_equivalence():
    crit = Criterion("many-body-oracle", 10.0)
    rng = np.random.default_rng(23)
    ok = True
    for trial in range(10):
        n = int(rng.integers(2, 5))
        params = bdg.KitaevChainParams(
            n, t=float(rng.uniform(0.5, 2.0)), mu=float(rng.uniform(-2.0, 2.0)),
            delta=float(rng.uniform(0.05, 1.5)),
        )
        exact, recon = bdg.many_body_oracle(params)
        ok &= np.max(np.abs(exact - recon)) < 1e-9
    crit.finish(bool(ok))


def test_zero_modes_and_splitting():
    crit = Criterion("zero-modes", 20.0)
    ok = True
    params = bdg.KitaevChainParams(60, t=1.0, mu=0.0, delta=0.5)
    report = bdg.find_zero_modes(
        bdg.diagonalize(bdg.build_kitaev_bdg(params)), threshold=1e-8)
    ok &= report.count == 2
    ok &= bool(np.max(report.energies) < 1e-8 * params.t)
    ok &= bool(np.max(report.majorana_residuals) < 1e-6)
    weights = np.sort(report.edge_weights)
    ok &= bool(weights[0] < 0.05 and weights[1] > 0.95)

    sizes = np.arange(20, 81, 10)
    split = []
    for n in sizes:
        h = bdg.build_kitaev_bdg(bdg.KitaevChainParams(int(n), 1.0, 0.0, 0.2))
        split.append(np.min(np.abs(np.linalg.eigvalsh(h.matrix))))
    y = np.log(split)
    slope, intercept = np.polyfit(sizes, y, 1)
    fit = slope * sizes + intercept
    r2 = 1.0 - np.sum((y - fit) ** 2) / np.sum((y - np.mean(y)) ** 2)
    ok &= slope < 0 and r2 > 0.99

    deep = bdg.KitaevChainParams(120, t=1.0, mu=0.0, delta=0.1)
    rep = bdg.find_zero_modes(
        bdg.diagonalize(bdg.build_kitaev_bdg(deep)), threshold=1e-3)
    xi_ref = bdg.kitaev_coherence_length(deep)
    ok &= bool(abs(rep.decay_length_fit - xi_ref) / xi_ref < 0.10)
    crit.finish(bool(ok))


def test_phase_boundary_and_onset():
    crit = Criterion("phase-boundary", 60.0)
    ok = True
    delta = 1.0
    for ez in np.linspace(0.1, 3.0, 20):
        for mu in np.linspace(-2.0, 2.0, 20):
            p = bdg.NanowireParams(4, mass=0.05, mu=float(mu), alpha_so=0.7,
                                   e_zeeman=float(ez), delta=delta)
            mu_c = np.sqrt(max(ez ** 2 - delta ** 2, 0.0))
            if abs(abs(mu) - mu_c) < 0.05 or abs(ez - delta) < 0.05:
                continue  # skip the grid band straddling the critical set
            ok &= bdg.topological_charge(p, "analytic") == \
                bdg.topological_charge(p, "numeric")

    for ez in np.linspace(1.2 * delta, 3.0 * delta, 5):
        mu_c = np.sqrt(ez ** 2 - delta ** 2)

        def make(n, mu, ez=float(ez)):
            return bdg.NanowireParams(n, mass=0.05, mu=mu, alpha_so=3.0,
                                      e_zeeman=ez, delta=delta)

        est = bdg.zero_mode_onset(make, max(mu_c - 0.3, 0.02), mu_c + 0.3)
        ok &= bool(abs(est - mu_c) / mu_c < 0.05)
    crit.finish(bool(ok))


def test_zone_center_gap_closing():
    crit = Criterion("gap-closing", 5.0)
    rng = np.random.default_rng(31)
    ok = True
    for _ in range(100):
        params = bdg.NanowireParams(
            4, mass=float(rng.uniform(0.02, 0.5)),
            mu=float(rng.uniform(-2.0, 2.0)),
            alpha_so=float(rng.uniform(0.0, 2.0)),
            e_zeeman=float(rng.uniform(0.0, 3.0)),
            delta=float(rng.uniform(0.1, 2.0)),
        )
        e = np.sort(np.abs(np.linalg.eigvalsh(bdg.nanowire_bloch(params, 0.0))))
        root = np.sqrt(params.mu ** 2 + params.delta ** 2)
        expect = np.sort(np.abs([root - params.e_zeeman, root - params.e_zeeman,
                                 root + params.e_zeeman, root + params.e_zeeman]))
        ok &= bool(np.max(np.abs(e - expect)) < 1e-10)
        ok &= bool(abs(e[0] - abs(root - params.e_zeeman)) < 1e-10)
    crit.finish(bool(ok))


def test_braid_relations():
    crit = Criterion("braid-relations", 10.0)
    ok = True
    for n in range(3, 7):
        ok &= braiding.verify_braid_relations(n, "signed_perm").all_passed
        rep = braiding.verify_braid_relations(n, "fock", tol=1e-12)
        ok &= rep.all_passed and rep.max_residual < 1e-12
    crit.finish(bool(ok))


def test_logical_gates_and_closure():
    crit = Criterion("logical-gates", 5.0)
    ok = True
    sz, sx = braiding.logical_operators()
    for text, pauli in (("B1", sz), ("B2", sx)):
        gate = braiding.logical_gate_from_word(
            braiding.parse_braid_word(text, 4))
        target = np.cos(np.pi / 4) * np.eye(2) + 1j * np.sin(np.pi / 4) * pauli
        a = braiding.canonical_phase(gate.matrix)
        b = braiding.canonical_phase(target)
        fidelity = abs(np.trace(a.conj().T @ b)) / 2.0
        ok &= bool(fidelity > 1.0 - 1e-12)
    gens = [
        braiding.logical_gate_from_word(braiding.parse_braid_word(t, 4))
        for t in ("B1", "B2", "B1'", "B2'")
    ]
    elements, closed = braiding.clifford_closure(gens, max_elements=100)
    ok &= closed and len(elements) == 24
    crit.finish(bool(ok))


def test_superselection():
    crit = Criterion("superselection", 2.0)
    rng = np.random.default_rng(41)
    n = 3
    dim = 2 ** n
    parity = algebra.total_parity_matrix(n)
    even_proj = algebra.parity_projector(n, "even").projector.matrix
    odd_proj = algebra.parity_projector(n, "odd").projector.matrix
    ok = True
    for _ in range(100):
        raw = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        raw = (raw + raw.conj().T) / 2
        a = (raw + parity @ raw @ parity) / 2  # parity-even part
        psi_plus = even_proj @ (rng.normal(size=dim) + 1j * rng.normal(size=dim))
        psi_minus = odd_proj @ (rng.normal(size=dim) + 1j * rng.normal(size=dim))
        psi_plus /= np.linalg.norm(psi_plus)
        psi_minus /= np.linalg.norm(psi_minus)
        res = algebra.superselection_expectation(a, psi_plus, psi_minus, n)
        ok &= res.observable_is_even
        ok &= bool(abs(res.value) < 1e-12)
    crit.finish(bool(ok))


def test_hybrid_gates_and_readout():
    crit = Criterion("hybrid-gates", 5.0)
    ok = True
    ratios = np.linspace(0.5, 30.0, 20)
    x = np.sqrt(ratios)
    y = np.log([hybrid.charge_splitting(r, 1.0) for r in ratios])
    slope = np.polyfit(x, y, 1)[0]
    ok &= bool(abs(slope + np.sqrt(8.0)) < 1e-12)

    gate = hybrid.simulate_phase_gate(hybrid.phase_gate_plan(np.pi / 8, 0.3))
    target = np.diag([np.exp(1j * np.pi / 8), np.exp(-1j * np.pi / 8)])
    diff = braiding.canonical_phase(gate.matrix) - braiding.canonical_phase(target)
    ok &= bool(np.max(np.abs(diff)) < 1e-12)

    errors = []
    for ratio in (5.0, 10.0, 20.0, 40.0):
        g = 0.01
        r = hybrid.ReadoutParams(omega0=1.0, g_jc=g,
                                 depsilon=1.0 - ratio * g, delta=0.0)
        formula = hybrid.dispersive_shift(r) - r.omega0
        oracle = hybrid.jc_oracle(r).cavity_freq_upper - r.omega0
        errors.append(abs(formula - oracle) / abs(oracle))
    ok &= bool(errors[2] < 0.01)
    ok &= all(a > b for a, b in zip(errors, errors[1:]))
    crit.finish(bool(ok))


def test_harness_selftest_and_determinism():
    crit = Criterion("harness", 120.0)
    ok = cli.main(["selftest"]) == cli.EXIT_OK
    config = {
        "model": "kitaev",
        "parameters": {"n_sites": 24, "t": 1.0, "delta": 0.4},
        "sweep": [{"parameter": "mu", "start": -3.0, "stop": 3.0, "points": 9}],
    }
    outputs = []
    for threads in (1, 2, 4):
        table = cli.run_sweep(
            cli.RunConfig.from_dict({**config, "threads": threads}),
            "phase-diagram")
        outputs.append(cli.emit_table(table, "csv"))
    ok &= outputs[0] == outputs[1] == outputs[2]
    crit.finish(bool(ok))
