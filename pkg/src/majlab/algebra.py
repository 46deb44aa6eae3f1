"""Exact Clifford algebra of Majorana operators and a dense Fock-space representation.

2N Hermitian generators gamma_1 .. gamma_2N over N fermionic modes obey
{gamma_k, gamma_l} = 2 delta_kl.  A product of generators reduces to a unique
normal form: an overall phase i^k (k mod 4) times a strictly ascending index
string, which makes equality testing exact.  The dense representation is a
Jordan-Wigner chain of Pauli strings; it is capped at N <= 12 fermionic modes
(Fock dimension 4096).
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache, reduce

import numpy as np

FOCK_MODE_CAP = 12
ALGEBRA_TOL = 1e-13

_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
_I2 = np.eye(2, dtype=complex)


class ModeRangeError(ValueError):
    """Generator index outside [1, 2N] or mode index outside [1, N]."""


class FockSizeError(ValueError):
    """Requested dense representation exceeds the N <= FOCK_MODE_CAP cap."""


class ParityEigenstateError(ValueError):
    """A state passed as a parity eigenstate is not one."""


def _check_mode(n_modes: int, k: int) -> None:
    if not 1 <= k <= n_modes:
        raise ModeRangeError(f"mode index {k} outside [1, {n_modes}]")


def _check_generator(n_modes: int, k: int) -> None:
    if not 1 <= k <= 2 * n_modes:
        raise ModeRangeError(f"generator index {k} outside [1, {2 * n_modes}]")


@dataclass(frozen=True)
class MajoranaMonomial:
    """i^phase_exp * gamma_{s_1} ... gamma_{s_m} with strictly ascending support.

    gamma_k^2 = 1 is always reduced away, so the support is duplicate-free.
    """

    n_modes: int
    phase_exp: int
    support: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)
        object.__setattr__(self, "support", tuple(self.support))
        last = 0
        for s in self.support:
            _check_generator(self.n_modes, s)
            if s <= last:
                raise ValueError("support must be strictly ascending")
            last = s

    @property
    def is_even(self) -> bool:
        return len(self.support) % 2 == 0

    @property
    def coefficient(self) -> complex:
        return 1j ** self.phase_exp


def identity_monomial(n_modes: int) -> MajoranaMonomial:
    return MajoranaMonomial(n_modes, 0, ())


def generator_monomial(n_modes: int, k: int) -> MajoranaMonomial:
    _check_generator(n_modes, k)
    return MajoranaMonomial(n_modes, 0, (k,))


def mono_multiply(a: MajoranaMonomial, b: MajoranaMonomial) -> MajoranaMonomial:
    """Product in normal form; each transposition of distinct generators
    contributes a factor -1 (phase_exp += 2)."""
    if a.n_modes != b.n_modes:
        raise ValueError("monomials defined over different index ranges")
    support = list(a.support)
    swaps = 0
    for x in b.support:
        pos = bisect_left(support, x)
        if pos < len(support) and support[pos] == x:
            # commute x leftward past everything above its twin, then cancel
            swaps += len(support) - pos - 1
            support.pop(pos)
        else:
            swaps += len(support) - pos
            support.insert(pos, x)
    phase = (a.phase_exp + b.phase_exp + 2 * swaps) % 4
    return MajoranaMonomial(a.n_modes, phase, tuple(support))


def mono_product(monomials, n_modes: int) -> MajoranaMonomial:
    return reduce(mono_multiply, monomials, identity_monomial(n_modes))


def parity_monomial(n_modes: int, k: int) -> MajoranaMonomial:
    """Single-mode parity P_k = -i gamma_{2k-1} gamma_{2k}."""
    _check_mode(n_modes, k)
    return MajoranaMonomial(n_modes, 3, (2 * k - 1, 2 * k))


def total_parity_monomial(n_modes: int) -> MajoranaMonomial:
    """Ordered product P_1 P_2 ... P_N."""
    return mono_product(
        (parity_monomial(n_modes, k) for k in range(1, n_modes + 1)), n_modes
    )


# ---------------------------------------------------------------------------
# Linear combinations of monomials, keyed by support with the i^k phase folded
# into the complex coefficient.

Polynomial = dict


def poly_from_monomial(m: MajoranaMonomial, coeff: complex = 1.0) -> Polynomial:
    return {m.support: coeff * m.coefficient}


def poly_add(*terms: Polynomial) -> Polynomial:
    out: Polynomial = {}
    for t in terms:
        for k, v in t.items():
            out[k] = out.get(k, 0.0) + v
    return {k: v for k, v in out.items() if v != 0}


def poly_scale(p: Polynomial, c: complex) -> Polynomial:
    return {k: c * v for k, v in p.items()} if c != 0 else {}


def poly_mul(a: Polynomial, b: Polynomial, n_modes: int) -> Polynomial:
    out: Polynomial = {}
    for sa, ca in a.items():
        ma = MajoranaMonomial(n_modes, 0, sa)
        for sb, cb in b.items():
            m = mono_multiply(ma, MajoranaMonomial(n_modes, 0, sb))
            out[m.support] = out.get(m.support, 0.0) + ca * cb * m.coefficient
    return {k: v for k, v in out.items() if v != 0}


def dirac_lowering(n_modes: int, k: int) -> Polynomial:
    """c_k = (gamma_{2k-1} + i gamma_{2k}) / 2."""
    _check_mode(n_modes, k)
    return {(2 * k - 1,): 0.5, (2 * k,): 0.5j}


def dirac_raising(n_modes: int, k: int) -> Polynomial:
    """c_k^dag = (gamma_{2k-1} - i gamma_{2k}) / 2."""
    _check_mode(n_modes, k)
    return {(2 * k - 1,): 0.5, (2 * k,): -0.5j}


def basis_convert(n_modes: int, k: int, direction: str) -> tuple[Polynomial, Polynomial]:
    """Convert mode k between the Dirac and Majorana single-mode bases.

    "dirac_to_majorana" returns (c_k, c_k^dag) expanded over Majorana
    generators.  "majorana_to_dirac" returns (gamma_{2k-1}, gamma_{2k})
    reassembled from the Dirac pair, gamma_{2k-1} = c_k + c_k^dag and
    gamma_{2k} = i (c_k^dag - c_k); the reassembly reduces back to the bare
    generators, so the round trip is exact.
    """
    _check_mode(n_modes, k)
    c = dirac_lowering(n_modes, k)
    cdag = dirac_raising(n_modes, k)
    if direction == "dirac_to_majorana":
        return c, cdag
    if direction == "majorana_to_dirac":
        gamma_odd = poly_add(c, cdag)
        gamma_even = poly_add(poly_scale(cdag, 1j), poly_scale(c, -1j))
        return gamma_odd, gamma_even
    raise ValueError(f"unknown direction {direction!r}")


def number_operator(n_modes: int, k: int) -> Polynomial:
    """n_k = c_k^dag c_k = (1 + i gamma_{2k-1} gamma_{2k}) / 2."""
    return poly_mul(dirac_raising(n_modes, k), dirac_lowering(n_modes, k), n_modes)


def u1_rotate_modes(phi: float, n_modes: int, k: int) -> np.ndarray:
    """SO(2) action of the gauge rotation exp(i phi N) on (gamma_{2k-1}, gamma_{2k}).

    Row i of the returned matrix gives the image of the i-th generator:
    gamma_{2k-1} -> cos(phi) gamma_{2k-1} - sin(phi) gamma_{2k}.
    """
    _check_mode(n_modes, k)
    c, s = np.cos(phi), np.sin(phi)
    return np.array([[c, -s], [s, c]])


# ---------------------------------------------------------------------------
# Dense Fock-space representation (Jordan-Wigner chain).


@dataclass
class FockOperator:
    """Dense operator on the 2^N-dimensional Fock space."""

    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def is_hermitian(self, tol: float = ALGEBRA_TOL) -> bool:
        return bool(np.max(np.abs(self.matrix - self.matrix.conj().T)) < tol)


def _kron_chain(ops) -> np.ndarray:
    return reduce(np.kron, ops)


@lru_cache(maxsize=None)
def _fock_generators(n_modes: int) -> tuple[np.ndarray, ...]:
    gammas = []
    for k in range(1, n_modes + 1):
        left = [_Z] * (k - 1)
        right = [_I2] * (n_modes - k)
        gammas.append(_kron_chain(left + [_X] + right))
        gammas.append(_kron_chain(left + [_Y] + right))
    for g in gammas:
        g.setflags(write=False)
    return tuple(gammas)


def fock_representation(n_modes: int) -> list[FockOperator]:
    """The 2N generator matrices gamma_1 .. gamma_2N on the 2^N Fock space.

    Convention: c_k = (gamma_{2k-1} + i gamma_{2k}) / 2 annihilates the k-th
    mode of the occupation basis |n_1 ... n_N>, index sum_k n_k 2^(N-k).
    """
    if not 1 <= n_modes <= FOCK_MODE_CAP:
        raise FockSizeError(
            f"n_modes={n_modes} outside [1, {FOCK_MODE_CAP}] (dense dimension cap)"
        )
    return [FockOperator(g) for g in _fock_generators(n_modes)]


def monomial_matrix(m: MajoranaMonomial) -> np.ndarray:
    gammas = _fock_generators(m.n_modes)
    out = np.eye(2 ** m.n_modes, dtype=complex) * m.coefficient
    for s in m.support:
        out = out @ gammas[s - 1]
    return out


def polynomial_matrix(p: Polynomial, n_modes: int) -> np.ndarray:
    out = np.zeros((2 ** n_modes, 2 ** n_modes), dtype=complex)
    for support, coeff in p.items():
        out += coeff * monomial_matrix(MajoranaMonomial(n_modes, 0, support))
    return out


def dirac_matrix(n_modes: int, k: int) -> np.ndarray:
    """Annihilation operator c_k in the Fock representation."""
    return polynomial_matrix(dirac_lowering(n_modes, k), n_modes)


def total_parity_matrix(n_modes: int) -> np.ndarray:
    return monomial_matrix(total_parity_monomial(n_modes))


@dataclass
class ParitySectorProjector:
    sector: str
    projector: FockOperator


def parity_projector(n_modes: int, sector: str) -> ParitySectorProjector:
    """Projector (1 +/- P)/2 onto the even/odd total-parity sector."""
    if sector not in ("even", "odd"):
        raise ValueError(f"sector must be 'even' or 'odd', got {sector!r}")
    sign = 1.0 if sector == "even" else -1.0
    p = total_parity_matrix(n_modes)
    proj = (np.eye(p.shape[0], dtype=complex) + sign * p) / 2
    return ParitySectorProjector(sector, FockOperator(proj))


@dataclass
class SuperselectionResult:
    value: complex
    observable_is_even: bool


def superselection_expectation(
    a: np.ndarray,
    psi_plus: np.ndarray,
    psi_minus: np.ndarray,
    n_modes: int,
    tol: float = 1e-10,
) -> SuperselectionResult:
    """Cross-parity matrix element <psi_- | A | psi_+>.

    Both states must be total-parity eigenstates with eigenvalues +1 and -1.
    If A commutes with the parity (even operator) the element vanishes; an
    odd A is flagged as parity-violating and the (possibly nonzero) element
    is returned as-is.
    """
    p = total_parity_matrix(n_modes)
    for psi, sign in ((psi_plus, 1.0), (psi_minus, -1.0)):
        nrm = np.linalg.norm(psi)
        if nrm == 0 or np.linalg.norm(p @ psi - sign * psi) > tol * nrm:
            raise ParityEigenstateError(
                f"state is not a parity eigenstate with eigenvalue {sign:+.0f}"
            )
    even = bool(np.max(np.abs(p @ a @ p - a)) < max(tol, ALGEBRA_TOL * a.shape[0]))
    value = complex(psi_minus.conj() @ a @ psi_plus)
    return SuperselectionResult(value, even)
