"""Bogoliubov-de Gennes solvers for the p-wave chain and the Rashba nanowire.

All matrices use the Nambu layout (c_1 .. c_n, c_1^dag .. c_n^dag), in which a
quadratic Hamiltonian H = sum A_ij c_i^dag c_j + (1/2) sum B_ij c_i^dag c_j^dag
+ h.c. reads H = (1/2) Psi^dag h Psi + (1/2) tr A with

    h = [[A, B], [-conj(B), -A^T]],   A = A^dag,  B = -B^T.

The particle-hole operator is C = tau^x K: (C v)_i = conj(v) with the particle
and hole blocks swapped, and {h, C} = 0 holds by construction.  Units: hbar = 1
and lattice spacing a = 1 unless a parameter says otherwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import algebra

HERMITICITY_TOL = 1e-13
PHS_TOL = 1e-12
PAIRING_TOL = 1e-10
MANY_BODY_SITE_CAP = 6


class BoundaryError(ValueError):
    """Operation requires the other boundary condition."""


class CriticalPointError(ValueError):
    """Parameters sit on a phase boundary; no topological charge assigned."""


class ContractViolationError(ValueError):
    """Input matrix violates a declared structural invariant."""


@dataclass(frozen=True)
class KitaevChainParams:
    """Spinless p-wave chain.  mu is the lattice chemical potential (onsite
    energy -mu); the band runs over [-2t - mu, 2t - mu], so the chain is
    topological for |mu| < 2t at delta != 0."""

    n_sites: int
    t: float = 1.0
    mu: float = 0.0
    delta: float = 0.0
    boundary: str = "open"

    def __post_init__(self):
        if self.n_sites < 2:
            raise ValueError("n_sites must be >= 2")
        if self.t <= 0:
            raise ValueError("t must be > 0")
        if self.boundary not in ("open", "periodic"):
            raise ValueError(f"boundary must be 'open' or 'periodic', got {self.boundary!r}")


@dataclass(frozen=True)
class NanowireParams:
    """Rashba nanowire proximitized by an s-wave superconductor.

    mass enters through the hopping t_w = 1 / (2 m a^2); e_zeeman is
    E_Z = g mu_B B / 2.  mu is measured from the band bottom (onsite energy
    2 t_w - mu per spin)."""

    n_sites: int
    lattice_spacing: float = 1.0
    mass: float = 0.5
    mu: float = 0.0
    alpha_so: float = 0.0
    e_zeeman: float = 0.0
    delta: float = 0.0
    boundary: str = "open"

    def __post_init__(self):
        if self.n_sites < 2:
            raise ValueError("n_sites must be >= 2")
        if self.mass <= 0 or self.lattice_spacing <= 0:
            raise ValueError("mass and lattice_spacing must be > 0")
        if self.delta < 0 or self.e_zeeman < 0:
            raise ValueError("delta and e_zeeman must be >= 0")
        if self.boundary not in ("open", "periodic"):
            raise ValueError(f"boundary must be 'open' or 'periodic', got {self.boundary!r}")

    @property
    def hopping(self) -> float:
        return 1.0 / (2.0 * self.mass * self.lattice_spacing ** 2)


# InSb parameters from the nanowire experiments, in units of the induced gap
# (delta = 1) with hbar = 1.  The wire length and chemical potential are not
# pinned down experimentally; sweeps choose their own ranges.
INSB_PRESET = dict(mass=0.015, alpha_so=0.2, delta=1.0)


@dataclass
class BdGMatrix:
    matrix: np.ndarray
    n_orbitals: int  # orbitals per Nambu block (n sites x spin channels)
    nambu_layout: str
    boundary: str = "open"

    def __post_init__(self):
        h = np.asarray(self.matrix, dtype=complex)
        self.matrix = h
        if h.shape != (2 * self.n_orbitals, 2 * self.n_orbitals):
            raise ContractViolationError("matrix shape does not match 2 * n_orbitals")
        if np.max(np.abs(h - h.conj().T)) > HERMITICITY_TOL * max(1.0, np.max(np.abs(h))):
            raise ContractViolationError("BdG matrix is not Hermitian")
        if self.phs_residual() > PHS_TOL * max(1.0, np.max(np.abs(h))):
            raise ContractViolationError("BdG matrix does not anticommute with C = tau^x K")

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def apply_phs(self, v: np.ndarray) -> np.ndarray:
        """C v with C = tau^x K in the (particle block, hole block) layout."""
        n = self.n_orbitals
        out = np.empty_like(v, dtype=complex)
        out[:n] = np.conj(v[n:])
        out[n:] = np.conj(v[:n])
        return out

    def phs_residual(self) -> float:
        """|| h C + C h || as max-abs of the matrix C h* C + h."""
        n = self.n_orbitals
        hc = np.conj(self.matrix)
        swapped = np.block(
            [[hc[n:, n:], hc[n:, :n]], [hc[:n, n:], hc[:n, :n]]]
        )
        return float(np.max(np.abs(swapped + self.matrix)))


@dataclass
class Spectrum:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # columns, matching eigenvalues
    bdg: BdGMatrix

    @property
    def pairing_residual(self) -> float:
        e = self.eigenvalues
        return float(np.max(np.abs(e + e[::-1])))


@dataclass
class ZeroModeReport:
    count: int
    energies: np.ndarray
    modes: np.ndarray  # columns, Majorana-gauge vectors
    majorana_residuals: np.ndarray
    decay_length_fit: float
    edge_weights: np.ndarray  # fraction of weight in the left half, per mode
    unresolved_degeneracy: bool = False


def _assemble(a: np.ndarray, b: np.ndarray, n_orbitals: int, layout: str,
              boundary: str) -> BdGMatrix:
    a = (a + a.conj().T) / 2
    b = (b - b.T) / 2
    h = np.block([[a, b], [-np.conj(b), -a.T]])
    return BdGMatrix(h, n_orbitals, layout, boundary)


def build_kitaev_bdg(params: KitaevChainParams) -> BdGMatrix:
    """Lattice BdG matrix: onsite -mu, hopping -t, nearest-neighbour pairing
    with the antisymmetric structure B_{j,j+1} = -delta, B_{j+1,j} = +delta."""
    n = params.n_sites
    a = np.zeros((n, n), dtype=complex)
    b = np.zeros((n, n), dtype=complex)
    np.fill_diagonal(a, -params.mu)
    bonds = [(j, j + 1) for j in range(n - 1)]
    if params.boundary == "periodic":
        bonds.append((n - 1, 0))
    for i, j in bonds:
        a[i, j] += -params.t
        a[j, i] += -params.t
        b[i, j] += -params.delta
        b[j, i] += +params.delta
    return _assemble(a, b, n, "(c_1..c_n, c^dag_1..c^dag_n)", params.boundary)


def kitaev_bloch(params: KitaevChainParams, k: float) -> np.ndarray:
    """Momentum-space 2x2 BdG block in the basis (c_k, c^dag_{-k})."""
    xi = -params.mu - 2.0 * params.t * np.cos(k)
    pair = -2.0j * params.delta * np.sin(k)
    return np.array([[xi, pair], [np.conj(pair), -xi]])


def build_nanowire_bdg(params: NanowireParams) -> BdGMatrix:
    """Spinful BdG matrix, orbital order (site, spin) with spin up first.

    Kinetic: onsite 2 t_w - mu, hopping -t_w.  Rashba: antisymmetric
    nearest-neighbour hopping -i alpha/(2a) sigma^y.  Zeeman: -E_Z sigma^z.
    s-wave pairing: onsite B = -i delta sigma^y."""
    n = params.n_sites
    tw = params.hopping
    asp = params.lattice_spacing
    sy = np.array([[0.0, -1.0j], [1.0j, 0.0]])
    sz = np.diag([1.0, -1.0])
    a = np.zeros((2 * n, 2 * n), dtype=complex)
    b = np.zeros((2 * n, 2 * n), dtype=complex)
    onsite = (2.0 * tw - params.mu) * np.eye(2) - params.e_zeeman * sz
    pair = params.delta * np.array([[0.0, -1.0], [1.0, 0.0]])
    for j in range(n):
        s = slice(2 * j, 2 * j + 2)
        a[s, s] = onsite
        b[s, s] = pair
    bonds = [(j, j + 1) for j in range(n - 1)]
    if params.boundary == "periodic":
        bonds.append((n - 1, 0))
    hop = -tw * np.eye(2) - 1.0j * params.alpha_so / (2.0 * asp) * sy
    for i, j in bonds:
        si, sj = slice(2 * i, 2 * i + 2), slice(2 * j, 2 * j + 2)
        a[si, sj] += hop
        a[sj, si] += hop.conj().T
    return _assemble(
        a, b, 2 * n, "(c_{1u}, c_{1d}, .., c_{nu}, c_{nd}; then daggers)",
        params.boundary,
    )


def nanowire_bloch(params: NanowireParams, k: float) -> np.ndarray:
    """Momentum-space 4x4 BdG block, basis (c_{k u}, c_{k d}, c^dag_{-k u},
    c^dag_{-k d}); k is in units of 1/a."""
    tw = params.hopping
    asp = params.lattice_spacing
    sy = np.array([[0.0, -1.0j], [1.0j, 0.0]])
    sz = np.diag([1.0, -1.0])
    ka = k * asp
    xi = 2.0 * tw * (1.0 - np.cos(ka)) - params.mu
    a_k = xi * np.eye(2) + (params.alpha_so / asp) * np.sin(ka) * sy \
        - params.e_zeeman * sz
    a_mk = xi * np.eye(2) - (params.alpha_so / asp) * np.sin(ka) * sy \
        - params.e_zeeman * sz
    b = params.delta * np.array([[0.0, -1.0], [1.0, 0.0]])
    return np.block([[a_k, b], [-np.conj(b), -a_mk.T]])


def bloch_matrix(params, k: float) -> np.ndarray:
    if isinstance(params, KitaevChainParams):
        return kitaev_bloch(params, k)
    if isinstance(params, NanowireParams):
        return nanowire_bloch(params, k)
    raise TypeError(f"unsupported parameter type {type(params).__name__}")


def build_bdg(params) -> BdGMatrix:
    if isinstance(params, KitaevChainParams):
        return build_kitaev_bdg(params)
    if isinstance(params, NanowireParams):
        return build_nanowire_bdg(params)
    raise TypeError(f"unsupported parameter type {type(params).__name__}")


def diagonalize(h: BdGMatrix) -> Spectrum:
    """Dense Hermitian eigendecomposition, eigenvalues ascending."""
    evals, evecs = np.linalg.eigh(h.matrix)
    return Spectrum(evals, evecs, h)


def continuum_dispersion(p, mu: float, delta: float, mass: float):
    """Quasiparticle energy sqrt(xi(p)^2 + delta^2 (p/p_F)^2) of the continuum
    p-wave wire, with xi = p^2/2m - mu and p_F = sqrt(2 m mu) for mu > 0.

    For mu < 0 the pairing term is regularized as delta * p * lambda_F with
    lambda_F = 1 / sqrt(2 m |mu|); mu = 0 with delta != 0 is critical."""
    if mass <= 0:
        raise ValueError("mass must be > 0")
    p = np.asarray(p, dtype=float)
    xi = p ** 2 / (2.0 * mass) - mu
    if delta == 0:
        return np.abs(xi)
    if mu == 0:
        raise CriticalPointError("mu = 0 with delta != 0: p_F undefined (critical)")
    pair = delta * p / np.sqrt(2.0 * mass * abs(mu))
    return np.sqrt(xi ** 2 + pair ** 2)


def bulk_gap(params, k_grid_size: int = 256) -> float:
    """Minimum |E| of the Bloch BdG matrix over a uniform momentum grid."""
    if params.boundary != "periodic":
        raise BoundaryError("bulk_gap requires periodic boundary conditions")
    if k_grid_size < 64:
        raise ValueError("k_grid_size must be >= 64")
    gap = np.inf
    for k in np.linspace(-np.pi, np.pi, k_grid_size, endpoint=False):
        e = np.linalg.eigvalsh(bloch_matrix(params, k))
        gap = min(gap, float(np.min(np.abs(e))))
    return gap


# ---------------------------------------------------------------------------
# Zero modes


def _site_probability(v: np.ndarray, n_orbitals: int, n_sites: int) -> np.ndarray:
    """Probability per site, summed over Nambu (and spin) components."""
    per_orbital = np.abs(v[:n_orbitals]) ** 2 + np.abs(v[n_orbitals:]) ** 2
    return per_orbital.reshape(n_sites, -1).sum(axis=1)


def _fit_decay_length(prob: np.ndarray) -> float:
    """Decay length of an edge mode from a log-linear fit of the site
    probability envelope (local maxima only, to skip the sin(k_F z) nodes)."""
    n = len(prob)
    half = prob[: max(4, n // 2)]
    floor = np.max(half) * 1e-12
    idx = [j for j in range(1, len(half) - 1)
           if half[j] >= half[j - 1] and half[j] >= half[j + 1] and half[j] > floor]
    if len(idx) < 3:
        idx = [j for j in range(len(half)) if half[j] > floor]
    if len(idx) < 2:
        return np.inf
    x = np.array(idx, dtype=float)
    y = np.log(half[idx])
    slope = np.polyfit(x, y, 1)[0]
    if slope >= 0:
        return np.inf
    return -2.0 / slope  # probability decays as exp(-2 z / xi)


def kitaev_coherence_length(params: KitaevChainParams) -> float:
    """Continuum-matched coherence length hbar v_F / Delta of the lattice
    chain: with v_F = 2 t a sin(k_F a) and a Fermi-level pairing amplitude
    2 delta sin(k_F a), the ratio is t a / delta independent of mu."""
    if params.delta == 0:
        return np.inf
    return params.t / params.delta


def find_zero_modes(s: Spectrum, threshold: float) -> ZeroModeReport:
    """Identify |E| < threshold eigenpairs of an open chain and rotate them to
    the Majorana gauge C v = v, one mode per edge where possible."""
    if s.bdg.boundary != "open":
        raise BoundaryError("zero-mode analysis requires an open chain")
    evals, evecs = s.eigenvalues, s.eigenvectors
    below = np.where(np.abs(evals) < threshold)[0]
    n_orb = s.bdg.n_orbitals
    layout_spinful = "u" in s.bdg.nambu_layout
    n_sites = n_orb // 2 if layout_spinful else n_orb
    if len(below) == 0:
        return ZeroModeReport(0, np.array([]), np.zeros((s.bdg.dim, 0)),
                              np.array([]), np.inf, np.array([]))
    if len(below) % 2 == 1:
        return ZeroModeReport(len(below), evals[below],
                              evecs[:, below], np.full(len(below), np.nan),
                              np.inf, np.full(len(below), np.nan),
                              unresolved_degeneracy=True)

    positive = [i for i in below if evals[i] >= 0]
    positive.sort(key=lambda i: evals[i])
    positive = positive[: len(below) // 2]
    modes, energies, residuals, edge_w = [], [], [], []
    position = np.arange(n_sites, dtype=float)
    for i in positive:
        v = evecs[:, i]
        cv = s.bdg.apply_phs(v)
        m1 = v + cv
        m2 = (v - cv) / 1j
        m1 /= np.linalg.norm(m1)
        m2 /= np.linalg.norm(m2)
        # rotate within the real span to localize each mode at one edge
        pos_op = np.repeat(position, n_orb // n_sites)
        pos_full = np.concatenate([pos_op, pos_op])
        mat = np.zeros((2, 2))
        for a, ma in enumerate((m1, m2)):
            for bb, mb in enumerate((m1, m2)):
                mat[a, bb] = np.real(np.vdot(ma, pos_full * mb))
        _, rot = np.linalg.eigh((mat + mat.T) / 2)
        left = rot[0, 0] * m1 + rot[1, 0] * m2
        right = rot[0, 1] * m1 + rot[1, 1] * m2
        for m in (left, right):
            m /= np.linalg.norm(m)
            w = s.bdg.apply_phs(m)
            ph = np.vdot(m, w)
            if abs(ph) > 0:
                w = w * (np.conj(ph) / abs(ph))
            residuals.append(float(np.linalg.norm(w - m)))
            prob = _site_probability(m, n_orb, n_sites)
            edge_w.append(float(prob[: n_sites // 2].sum()))
            modes.append(m)
            energies.append(abs(evals[i]))

    # decay length from the left-edge mode (largest left-half weight)
    i_left = int(np.argmax(edge_w))
    prob_left = _site_probability(modes[i_left], n_orb, n_sites)
    xi_fit = _fit_decay_length(prob_left)
    return ZeroModeReport(
        count=len(modes),
        energies=np.array(energies),
        modes=np.column_stack(modes),
        majorana_residuals=np.array(residuals),
        decay_length_fit=xi_fit,
        edge_weights=np.array(edge_w),
    )


def zero_mode_onset(make_params, mu_lo: float, mu_hi: float,
                    sizes: tuple[int, int] = (80, 200),
                    n_points: int = 21) -> float:
    """Chemical potential where open-chain zero modes first appear, from a
    finite-size crossing of the scaled gap L * E_min(L, mu).

    make_params(n_sites, mu) must return chain parameters with open boundary.
    In the phase with edge modes the scaled gap shrinks with L; in the gapped
    phase it grows proportionally to L, and the two sizes cross at the
    transition.  A running median irons out the oscillation nodes of the
    hybridization splitting, and the crossing is located by linear
    interpolation on the mu grid."""
    if mu_hi <= mu_lo:
        raise ValueError("need mu_lo < mu_hi")
    n1, n2 = sizes
    if not 2 <= n1 < n2:
        raise ValueError("sizes must satisfy 2 <= n1 < n2")
    mus = np.linspace(mu_lo, mu_hi, n_points)

    def scaled_gap(n, mu):
        h = build_bdg(make_params(n, float(mu)))
        return n * float(np.min(np.abs(np.linalg.eigvalsh(h.matrix))))

    ratio = np.array([scaled_gap(n2, m) / scaled_gap(n1, m) for m in mus])
    med = np.array([np.median(ratio[max(0, i - 2): i + 3])
                    for i in range(n_points)])
    for i in range(n_points - 1, 0, -1):
        if med[i - 1] < 1.0 <= med[i]:
            frac = (1.0 - med[i - 1]) / (med[i] - med[i - 1])
            return float(mus[i - 1] + frac * (mus[i] - mus[i - 1]))
    raise CriticalPointError("no finite-size crossing inside [mu_lo, mu_hi]")


def analytic_zero_mode_envelope(z, xi: float, k_f: float):
    """Bound-state amplitude sqrt(2/xi) sin(k_F z) exp(-z/xi) at the
    superconductor-vacuum interface."""
    if xi <= 0:
        raise ValueError("xi must be > 0")
    z = np.asarray(z, dtype=float)
    return np.sqrt(2.0 / xi) * np.sin(k_f * z) * np.exp(-z / xi)


# ---------------------------------------------------------------------------
# Topological charge


def _pfaffian(a: np.ndarray) -> float:
    """Combinatorial Pfaffian of a small real antisymmetric matrix."""
    n = a.shape[0]
    if n % 2 == 1:
        return 0.0
    if n == 0:
        return 1.0
    if n == 2:
        return float(a[0, 1])
    total = 0.0
    rest = list(range(1, n))
    for pos, j in enumerate(rest):
        sub = [r for r in rest if r != j]
        minor = a[np.ix_(sub, sub)]
        total += (-1.0) ** pos * a[0, j] * _pfaffian(minor)
    return total


def majorana_basis_antisymmetric(h: np.ndarray) -> np.ndarray:
    """Real antisymmetric A with H = (i/2) Gamma^T (A/2) Gamma ... more
    precisely h_M = U^dag h U for the Majorana change of basis; returns
    A = -i h_M, validated to be real and antisymmetric."""
    n = h.shape[0] // 2
    u = np.zeros((2 * n, 2 * n), dtype=complex)
    for i in range(n):
        u[i, 2 * i] = 0.5
        u[i, 2 * i + 1] = 0.5j
        u[n + i, 2 * i] = 0.5
        u[n + i, 2 * i + 1] = -0.5j
    hm = u.conj().T @ h @ u
    a = -1j * hm
    scale = max(1.0, float(np.max(np.abs(a))))
    if np.max(np.abs(a.imag)) > 1e-9 * scale or np.max(np.abs(a + a.T)) > 1e-9 * scale:
        raise ContractViolationError(
            "Bloch matrix is not real-antisymmetric in the Majorana basis "
            "(expected only at the PHS-invariant momenta k = 0, pi)"
        )
    return np.real((a - a.T) / 2)


def _charge_numeric(params) -> int:
    pf0 = _pfaffian(majorana_basis_antisymmetric(bloch_matrix(params, 0.0)))
    pfpi = _pfaffian(majorana_basis_antisymmetric(bloch_matrix(params, np.pi)))
    scale = abs(pf0) + abs(pfpi)
    if scale == 0 or min(abs(pf0), abs(pfpi)) < 1e-12 * scale:
        raise CriticalPointError("Pfaffian vanishes: parameters are critical")
    return 1 if pf0 * pfpi < 0 else 0


def _charge_analytic(params) -> int:
    if isinstance(params, KitaevChainParams):
        if params.delta == 0 or abs(params.mu) == 2.0 * params.t:
            raise CriticalPointError("Kitaev chain parameters are critical")
        return 1 if abs(params.mu) < 2.0 * params.t else 0
    if isinstance(params, NanowireParams):
        ez, d = params.e_zeeman, params.delta
        if ez == d:
            raise CriticalPointError("E_Z = Delta: nanowire phase boundary")
        if ez < d:
            return 0  # gapped s-wave regime, trivial for every mu
        mu_c = np.sqrt(ez ** 2 - d ** 2)
        if abs(params.mu) == mu_c:
            raise CriticalPointError("|mu| = mu_c: nanowire phase boundary")
        return 1 if abs(params.mu) < mu_c else 0
    raise TypeError(f"unsupported parameter type {type(params).__name__}")


def topological_charge(params, method: str = "analytic") -> int:
    """Z2 charge: 'analytic' evaluates the phase-boundary criteria (Kitaev:
    |mu| < 2t; nanowire: |mu| < sqrt(E_Z^2 - Delta^2) for E_Z > Delta),
    'numeric' the sign of Pf A(0) Pf A(pi) in the Majorana basis."""
    if method == "analytic":
        return _charge_analytic(params)
    if method == "numeric":
        return _charge_numeric(params)
    raise ValueError(f"method must be 'analytic' or 'numeric', got {method!r}")


@dataclass(frozen=True)
class EffectiveParams:
    mu_eff: float
    delta_eff: float  # p-wave amplitude density, energy * length


def effective_params(p: NanowireParams, hbar: float = 1.0) -> EffectiveParams:
    """Perturbative spinless-wire parameters mu_eff = mu + E_Z and
    delta_eff = delta alpha_so / (2 hbar E_Z), valid for
    E_Z >> delta, m alpha_so^2 / hbar^2."""
    if p.e_zeeman == 0:
        raise ValueError("e_zeeman must be > 0 (perturbative regime)")
    return EffectiveParams(
        mu_eff=p.mu + p.e_zeeman,
        delta_eff=p.delta * p.alpha_so / (2.0 * hbar * p.e_zeeman),
    )


# ---------------------------------------------------------------------------
# Many-body oracle


def many_body_oracle(params: KitaevChainParams) -> tuple[np.ndarray, np.ndarray]:
    """Exact Fock-space spectrum of the chain versus its BdG reconstruction.

    Returns (exact_levels, reconstructed_levels), both sorted ascending.  The
    reconstruction is tr(A)/2 + sum over occupation patterns of the positive
    BdG energies, with the -1/2 offsets folded into the constant."""
    n = params.n_sites
    if n > MANY_BODY_SITE_CAP:
        raise ValueError(f"n_sites must be <= {MANY_BODY_SITE_CAP} for the oracle")
    h = build_kitaev_bdg(params)
    a = h.matrix[:n, :n]
    b = h.matrix[:n, n:]

    cs = [algebra.dirac_matrix(n, k) for k in range(1, n + 1)]
    dim = 2 ** n
    ham = np.zeros((dim, dim), dtype=complex)
    for i in range(n):
        for j in range(n):
            if a[i, j] != 0:
                ham += a[i, j] * cs[i].conj().T @ cs[j]
            if b[i, j] != 0:
                ham += 0.5 * b[i, j] * cs[i].conj().T @ cs[j].conj().T
                ham += 0.5 * np.conj(b[i, j]) * cs[j] @ cs[i]
    exact = np.sort(np.linalg.eigvalsh(ham))

    evals = np.linalg.eigh(h.matrix)[0]
    positive = np.sort(evals)[n:]  # upper half of the symmetric spectrum
    const = 0.5 * np.real(np.trace(a)) - 0.5 * positive.sum()
    levels = []
    for occ in itertools.product((0, 1), repeat=n):
        levels.append(const + float(np.dot(occ, positive)))
    return exact, np.sort(np.array(levels))
