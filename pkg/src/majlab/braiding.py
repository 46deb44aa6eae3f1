"""Braid words on Majorana strands: parsing, signed-permutation action,
Fock-space unitaries, and compilation to logical gates on the 4-Majorana qubit.

The generator B_k exchanges strands k and k+1 counterclockwise and acts on the
Majorana labels as gamma_k -> gamma_{k+1}, gamma_{k+1} -> -gamma_k (the inverse
reverses both signs).  On the Fock space it is represented by
U_k = exp(pi gamma_k gamma_{k+1} / 4) = (1 + gamma_k gamma_{k+1}) / sqrt(2).
Letters of a word act left-to-right in time order, so the total unitary is the
left-to-right matrix product of the letter unitaries.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from . import algebra

UNITARY_TOL = 1e-12


class BraidParseError(ValueError):
    """Malformed braid-word text; the message reports the position."""


class StrandRangeError(ValueError):
    """Generator index outside [1, n_strands - 1]."""


class SectorLeakageError(RuntimeError):
    """A compiled unitary leaked out of the even-parity logical sector."""


@dataclass(frozen=True)
class BraidWord:
    n_strands: int
    letters: tuple[tuple[int, int], ...]  # (generator index, exponent +-1)

    def __post_init__(self):
        if self.n_strands < 2:
            raise ValueError("n_strands must be >= 2")
        object.__setattr__(self, "letters", tuple(self.letters))
        for k, e in self.letters:
            if not 1 <= k <= self.n_strands - 1:
                raise StrandRangeError(
                    f"generator B{k} outside [1, {self.n_strands - 1}]"
                )
            if e not in (1, -1):
                raise ValueError(f"exponent must be +-1, got {e}")

    def inverse(self) -> "BraidWord":
        return BraidWord(
            self.n_strands, tuple((k, -e) for k, e in reversed(self.letters))
        )


_TOKEN = re.compile(r"B(\d+)('|\^-1)?$")


def parse_braid_word(text: str, n_strands: int) -> BraidWord:
    """Grammar: whitespace-separated tokens B<digits>, B<digits>' or
    B<digits>^-1 (primed and caret forms both mean the inverse)."""
    letters = []
    pos = 0
    for token in text.split():
        pos = text.index(token, pos)
        m = _TOKEN.match(token)
        if m is None:
            raise BraidParseError(f"malformed token {token!r} at position {pos}")
        k = int(m.group(1))
        if not 1 <= k <= n_strands - 1:
            raise StrandRangeError(
                f"generator B{k} at position {pos} outside [1, {n_strands - 1}]"
            )
        letters.append((k, -1 if m.group(2) else 1))
        pos += len(token)
    return BraidWord(n_strands, tuple(letters))


@dataclass(frozen=True)
class SignedPermutation:
    """gamma_j -> sign_j * gamma_{target_j}; images[j-1] = (target_j, sign_j)."""

    images: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        targets = sorted(t for t, _ in self.images)
        if targets != list(range(1, len(self.images) + 1)):
            raise ValueError("targets do not form a permutation")

    @property
    def n(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(n: int) -> "SignedPermutation":
        return SignedPermutation(tuple((j, 1) for j in range(1, n + 1)))

    def then(self, other: "SignedPermutation") -> "SignedPermutation":
        """Apply self first, then other."""
        out = []
        for t, s in self.images:
            t2, s2 = other.images[t - 1]
            out.append((t2, s * s2))
        return SignedPermutation(tuple(out))

    def matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n))
        for j, (t, s) in enumerate(self.images, start=1):
            m[t - 1, j - 1] = s
        return m


def generator_action(n: int, k: int, exponent: int = 1) -> SignedPermutation:
    images = [(j, 1) for j in range(1, n + 1)]
    if exponent == 1:
        images[k - 1] = (k + 1, 1)
        images[k] = (k, -1)
    else:
        images[k - 1] = (k + 1, -1)
        images[k] = (k, 1)
    return SignedPermutation(tuple(images))


def word_action(w: BraidWord) -> SignedPermutation:
    perm = SignedPermutation.identity(w.n_strands)
    for k, e in w.letters:
        perm = perm.then(generator_action(w.n_strands, k, e))
    return perm


def generator_unitary(gammas: list[np.ndarray], k: int,
                      exponent: int = 1) -> np.ndarray:
    """(1 + e * gamma_k gamma_{k+1}) / sqrt(2) on the Fock space (1-based k)."""
    dim = gammas[0].shape[0]
    return (np.eye(dim) + exponent * gammas[k - 1] @ gammas[k]) / np.sqrt(2.0)


def word_unitary(w: BraidWord, n_modes: int) -> algebra.FockOperator:
    """Time-ordered product of the generator unitaries on 2^n_modes states."""
    if 2 * n_modes < w.n_strands:
        raise ValueError("need 2 * n_modes >= n_strands")
    gammas = [g.matrix for g in algebra.fock_representation(n_modes)]
    u = np.eye(2 ** n_modes, dtype=complex)
    for k, e in w.letters:
        u = u @ generator_unitary(gammas, k, e)
    return algebra.FockOperator(u)


def conjugation_action(w: BraidWord, n_modes: int) -> SignedPermutation:
    """Signed permutation read off from U^dag gamma_j U in the Fock
    representation; independent check against word_action."""
    gammas = [g.matrix for g in algebra.fock_representation(n_modes)]
    u = word_unitary(w, n_modes).matrix
    images = []
    for j in range(1, w.n_strands + 1):
        g_out = u.conj().T @ gammas[j - 1] @ u
        for t in range(1, 2 * n_modes + 1):
            s = np.trace(gammas[t - 1] @ g_out).real / gammas[0].shape[0]
            if abs(s) > 0.5:
                images.append((t, 1 if s > 0 else -1))
                break
        else:
            raise RuntimeError(f"conjugated gamma_{j} is not a signed generator")
    # strands beyond n_strands are untouched; restrict to the strand labels
    return SignedPermutation(tuple(images))


def canonical_phase(m: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Fix the global phase: first entry (row-major) of significant magnitude
    is made real positive."""
    flat = m.ravel()
    scale = np.max(np.abs(flat))
    if scale == 0:
        return m.copy()
    for x in flat:
        if abs(x) > tol * scale:
            return m * (np.conj(x) / abs(x))
    return m.copy()


def equal_mod_phase(a: np.ndarray, b: np.ndarray, tol: float = UNITARY_TOL) -> bool:
    return bool(np.max(np.abs(canonical_phase(a) - canonical_phase(b))) < tol)


@dataclass
class RelationReport:
    n_strands: int
    representation: str
    checked: int
    failures: list = field(default_factory=list)
    max_residual: float = 0.0

    @property
    def all_passed(self) -> bool:
        return not self.failures


def verify_braid_relations(n_strands: int, representation: str = "signed_perm",
                           tol: float = UNITARY_TOL) -> RelationReport:
    """Far-commutation B_k B_l = B_l B_k (|k-l| >= 2) and Yang-Baxter
    B_k B_{k+1} B_k = B_{k+1} B_k B_{k+1}; exact for signed permutations,
    modulo global phase for the Fock representation."""
    report = RelationReport(n_strands, representation, 0)
    pairs = [(k, l) for k in range(1, n_strands) for l in range(k + 2, n_strands)]
    triples = [(k, k + 1) for k in range(1, n_strands - 1)]

    def word(*ks):
        return BraidWord(n_strands, tuple((k, 1) for k in ks))

    relations = [((k, l), word(k, l), word(l, k)) for k, l in pairs]
    relations += [
        ((k, kk), word(k, kk, k), word(kk, k, kk)) for k, kk in triples
    ]
    for label, lhs, rhs in relations:
        report.checked += 1
        if representation == "signed_perm":
            if word_action(lhs) != word_action(rhs):
                report.failures.append(label)
        elif representation == "fock":
            n_modes = (n_strands + 1) // 2
            ua = canonical_phase(word_unitary(lhs, n_modes).matrix)
            ub = canonical_phase(word_unitary(rhs, n_modes).matrix)
            resid = float(np.max(np.abs(ua - ub)))
            report.max_residual = max(report.max_residual, resid)
            if resid >= tol:
                report.failures.append(label)
        else:
            raise ValueError(f"unknown representation {representation!r}")
    return report


# ---------------------------------------------------------------------------
# Logical qubit


@dataclass(frozen=True)
class QubitEncoding:
    """Four Majoranas, even parity sector, |0bar> = |00>, |1bar> = |11>;
    sigma_z = -i gamma_1 gamma_2, sigma_x = -i gamma_2 gamma_3."""

    n_modes: int = 2
    basis_states: tuple[int, int] = (0, 3)  # Fock indices of |00>, |11>


@dataclass
class LogicalGate:
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        self.matrix = m
        if np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))) > UNITARY_TOL:
            raise ValueError("gate matrix is not unitary")

    def equals(self, other: np.ndarray, tol: float = UNITARY_TOL) -> bool:
        return equal_mod_phase(self.matrix, np.asarray(other, dtype=complex), tol)


def logical_operators(enc: QubitEncoding = QubitEncoding()):
    """(sigma_z_bar, sigma_x_bar) restricted to the logical basis."""
    n = enc.n_modes
    gam = [g.matrix for g in algebra.fock_representation(n)]
    idx = list(enc.basis_states)
    sz = (-1j * gam[0] @ gam[1])[np.ix_(idx, idx)]
    sx = (-1j * gam[1] @ gam[2])[np.ix_(idx, idx)]
    return sz, sx


def logical_gate_from_word(w: BraidWord,
                           enc: QubitEncoding = QubitEncoding()) -> LogicalGate:
    """Restrict the word unitary to the even-sector logical basis."""
    if w.n_strands > 4:
        raise ValueError("the single-qubit encoding uses at most 4 strands")
    u = word_unitary(BraidWord(4, w.letters), enc.n_modes).matrix
    idx = list(enc.basis_states)
    block = u[np.ix_(idx, idx)]
    leakage = float(np.linalg.norm(np.delete(u[:, idx], idx, axis=0)))
    if leakage > UNITARY_TOL:
        raise SectorLeakageError(f"even-sector leakage {leakage:.3e}")
    return LogicalGate(block)


def clifford_closure(generators, max_elements: int = 1000):
    """Breadth-first closure of 2x2 unitaries under multiplication, modulo
    global phase.  Returns (elements, closed_flag)."""
    if max_elements < 24:
        raise ValueError("max_elements must be >= 24")

    def key(m):
        r = np.round(canonical_phase(m), 9) + 0.0  # +0.0 folds -0.0 into 0.0
        return r.tobytes()

    gens = [np.asarray(g.matrix if isinstance(g, LogicalGate) else g, dtype=complex)
            for g in generators]
    seen = {}
    frontier = [np.eye(gens[0].shape[0], dtype=complex)] + [g.copy() for g in gens]
    for m in frontier:
        seen.setdefault(key(m), canonical_phase(m))
    queue = list(seen.values())
    while queue:
        cur = queue.pop(0)
        for g in gens:
            nxt = canonical_phase(cur @ g)
            k = key(nxt)
            if k not in seen:
                if len(seen) >= max_elements:
                    return list(seen.values()), False
                seen[k] = nxt
                queue.append(nxt)
    return list(seen.values()), True
