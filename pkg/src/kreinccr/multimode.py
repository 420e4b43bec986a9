"""Multimode CCR algebras [a_i, a_j*] = delta_ij eta_i and their
holomorphic Krein representation.

The representation lives on polynomials in the mode variables truncated
at a total-degree cap, with monomial Gram

    <z^n, z^n> = prod_i n_i! (-1)^{n_i (1 - eta_i)/2},

creation operators pi(a_i*) = eta_i z_i (the sign makes the Krein
adjointness and the commutation relation [pi(a_i), pi(a_i*)] = eta_i hold
simultaneously), and gauge generator with eigenvalue = total degree, so
the spectral condition is manifest.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import AlgebraElement, multimode_set, substitute
from .exceptions import AliasingRisk, Degenerate, NotHermitian, ZeroInput


@dataclass(frozen=True)
class EtaSignature:
    """Per-mode signs eta_i = +-1, modes indexed from 1."""

    values: tuple

    def __post_init__(self):
        if any(v not in (1, -1) for v in self.values):
            raise ValueError("eta entries must be +-1")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        # mode index (1-based); unlisted modes default to +1, which is how
        # the unbounded-mode case is represented
        if 1 <= i <= len(self.values):
            return self.values[i - 1]
        return 1

    def generator_set(self):
        return multimode_set(list(self.values))


class MultiIndexState:
    """Finitely supported map multi-index -> coefficient, total degree <= cap.

    Multi-indices are tuples (n_1, ..., n_M) with n_i >= 0; trailing zeros
    are stripped so the mode set can grow on demand.
    """

    __slots__ = ("terms", "cap")

    def __init__(self, terms=None, cap=10):
        self.cap = cap
        self.terms = {}
        for idx, c in (terms or {}).items():
            idx = _strip(idx)
            if any(n < 0 for n in idx):
                raise ValueError("multi-index entries must be nonnegative")
            if sum(idx) > cap:
                raise ValueError(f"total degree {sum(idx)} exceeds cap {cap}")
            if c != 0:
                self.terms[idx] = self.terms.get(idx, 0) + c

    @classmethod
    def vacuum(cls, cap=10):
        return cls({(): 1.0}, cap)

    @classmethod
    def monomial(cls, idx, cap=10):
        return cls({tuple(idx): 1.0}, cap)

    def __add__(self, other):
        out = dict(self.terms)
        for idx, c in other.terms.items():
            out[idx] = out.get(idx, 0) + c
        return MultiIndexState({k: v for k, v in out.items() if v != 0},
                               min(self.cap, other.cap))

    def __rmul__(self, k):
        return MultiIndexState({i: k * c for i, c in self.terms.items()}, self.cap)

    def __sub__(self, other):
        return self + (-1) * other

    def is_zero(self, tol=0.0):
        return all(abs(c) <= tol for c in self.terms.values())

    def total_degrees(self):
        return sorted({sum(i) for i in self.terms})

    def degree_component(self, k):
        return MultiIndexState({i: c for i, c in self.terms.items() if sum(i) == k},
                               self.cap)

    def norm(self):
        return math.sqrt(sum(abs(c) ** 2 for c in self.terms.values()))

    def to_json(self):
        keys = sorted(self.terms)
        return json.dumps({
            "cap": self.cap,
            "terms": [[list(k), [complex(self.terms[k]).real,
                                 complex(self.terms[k]).imag]] for k in keys],
        })

    @classmethod
    def from_json(cls, text):
        obj = json.loads(text)
        return cls({tuple(k): complex(re, im) for k, (re, im) in
                    ((tuple(idx), val) for idx, val in obj["terms"])},
                   obj["cap"])

    def __repr__(self):
        return f"MultiIndexState({self.terms!r}, cap={self.cap})"


def _strip(idx):
    idx = tuple(idx)
    while idx and idx[-1] == 0:
        idx = idx[:-1]
    return idx


def _padded(idx, m):
    return idx + (0,) * (m - len(idx))


# ---------------------------------------------------------------------
# eta diagonalization (Sylvester reduction of a hermitian commutator matrix)
# ---------------------------------------------------------------------

def diagonalize_eta(h, tol=1e-10):
    """L with L H L^H = diag(eta), eta_i = +-1, for hermitian nondegenerate H."""
    h = np.asarray(h, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(h))))
    if np.max(np.abs(h - h.conj().T)) > tol * scale:
        raise NotHermitian("commutator matrix must be hermitian")
    w, vecs = np.linalg.eigh(h)
    if np.min(np.abs(w)) <= tol * scale:
        raise Degenerate("commutator matrix has (near-)zero eigenvalues")
    order = np.argsort(-w)  # positive eta first, stable
    w = w[order]
    vecs = vecs[:, order]
    l = np.diag(1 / np.sqrt(np.abs(w))) @ vecs.conj().T
    eta = EtaSignature(tuple(int(np.sign(x)) for x in w))
    return l, eta


# ---------------------------------------------------------------------
# the rho isomorphism onto the standard multimode Heisenberg algebra
# ---------------------------------------------------------------------

def rho_iso(eta: EtaSignature, x: AlgebraElement) -> AlgebraElement:
    """rho(a_i) = (1+eta_i)/2 a_i + (1-eta_i)/2 a_i*, extended *-compatibly.

    Maps elements over the eta-signed set into the all-plus set, where the
    standard relations [rho(a_i), rho(a_j*)] = delta_ij hold.
    """
    target = multimode_set([1] * len(eta))
    images = {}
    for sym in {s for w in x.terms for s in w}:
        mode = int(sym.split("_", 1)[1].rstrip("*"))
        e = eta[mode]
        lower = AlgebraElement.generator(target, f"a_{mode}")
        raise_ = AlgebraElement.generator(target, f"a_{mode}*")
        if sym.endswith("*"):
            img = (1 + e) * raise_ + (1 - e) * lower
        else:
            img = (1 + e) * lower + (1 - e) * raise_
        images[sym] = Fraction(1, 2) * img
    return substitute(x, images, target)


# ---------------------------------------------------------------------
# the Bargmann-form representation with the signed monomial Gram
# ---------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class MultiModeRep:
    eta: EtaSignature
    cap: int
    basis: list            # list of stripped multi-indices
    index: dict = field(repr=False)
    a_mats: list = field(repr=False)
    adag_mats: list = field(repr=False)
    gram_diag: np.ndarray = field(repr=False)
    gauge_diag: np.ndarray = field(repr=False)

    @property
    def modes(self):
        return len(self.eta)

    @property
    def size(self):
        return len(self.basis)

    def vector(self, state: MultiIndexState):
        v = np.zeros(self.size, dtype=complex)
        for idx, c in state.terms.items():
            v[self.index[_strip(idx)]] += c
        return v

    def state(self, v, tol=0.0):
        return MultiIndexState(
            {self.basis[i]: v[i] for i in range(self.size) if abs(v[i]) > tol},
            self.cap)

    def inner(self, f, g):
        """Krein inner product of two MultiIndexStates (or vectors)."""
        if isinstance(f, MultiIndexState):
            f = self.vector(f)
        if isinstance(g, MultiIndexState):
            g = self.vector(g)
        return complex(np.sum(np.conj(f) * self.gram_diag * g))


def _monomials(m, cap):
    """All multi-indices over m modes with total degree <= cap, graded order."""
    out = [()]
    def rec(prefix, remaining, budget):
        if remaining == 0:
            if any(prefix):
                out.append(_strip(tuple(prefix)))
            return
        for n in range(budget + 1):
            rec(prefix + [n], remaining - 1, budget - n)
    # generate by total degree for a stable graded order
    res = []
    for d in range(cap + 1):
        level = []
        def rec2(prefix, remaining, left):
            if remaining == 0:
                if left == 0:
                    level.append(_strip(tuple(prefix)))
                return
            for n in range(left + 1):
                rec2(prefix + [n], remaining - 1, left - n)
        rec2([], m, d)
        res.extend(sorted(level))
    return res


def build_multimode_rep(eta: EtaSignature, cap: int) -> MultiModeRep:
    """Monomial-basis representation with pi(a_i) = d/dz_i and
    pi(a_i*) = eta_i z_i, Gram prod n_i! (-1)^{n_i(1-eta_i)/2}."""
    if len(eta) < 1 or cap < 1:
        raise ValueError("need at least one mode and degree >= 1")
    m = len(eta)
    basis = _monomials(m, cap)
    index = {b: i for i, b in enumerate(basis)}
    size = len(basis)
    gram = np.empty(size)
    gauge = np.empty(size)
    for i, b in enumerate(basis):
        g = 1.0
        for mode0, n in enumerate(b):
            g *= math.factorial(n)
            if eta[mode0 + 1] == -1 and n % 2 == 1:
                g = -g
        gram[i] = g
        gauge[i] = sum(b)
    a_mats = []
    adag_mats = []
    for mode0 in range(m):
        a = np.zeros((size, size), dtype=complex)
        ad = np.zeros((size, size), dtype=complex)
        for i, b in enumerate(basis):
            bb = _padded(b, m)
            n = bb[mode0]
            if n > 0:
                lower = _strip(bb[:mode0] + (n - 1,) + bb[mode0 + 1:])
                a[index[lower], i] = n
            if sum(bb) < cap:
                upper = _strip(bb[:mode0] + (n + 1,) + bb[mode0 + 1:])
                ad[index[upper], i] = eta[mode0 + 1]
        a_mats.append(a)
        adag_mats.append(ad)
    return MultiModeRep(eta, cap, basis, index, a_mats, adag_mats,
                        gram, gauge)


def krein_adjoint_mm(a: np.ndarray, rep: MultiModeRep) -> np.ndarray:
    g = rep.gram_diag
    return (a.conj().T * g[None, :]) / g[:, None]


def gauge_unitary_mm(rep: MultiModeRep, s: float) -> np.ndarray:
    return np.diag(np.exp(1j * s * rep.gauge_diag))


def spectral_condition_check(rep: MultiModeRep, f: MultiIndexState,
                             g: MultiIndexState, nodes=None, tol=1e-9):
    """Fourier support of s -> <g, U(s) f> over equispaced nodes.

    For this representation the support is contained in {0, ..., cap}:
    the desk-scale form of the spectral condition.
    """
    if nodes is None:
        nodes = 4 * (rep.cap + 1)
    if nodes <= rep.cap:
        raise AliasingRisk(f"{nodes} nodes <= degree cap {rep.cap}")
    fv = rep.vector(f)
    gv = rep.vector(g)
    corr = []
    for j in range(nodes):
        s = 2 * np.pi * j / nodes
        corr.append(rep.inner(gv, gauge_unitary_mm(rep, s) @ fv))
    corr = np.asarray(corr)
    support = set()
    scale = max(1.0, float(np.max(np.abs(corr))))
    half = nodes // 2
    for k in range(-half, nodes - half):
        c = np.mean(corr * np.exp(-1j * k * 2 * np.pi * np.arange(nodes) / nodes))
        if abs(c) > tol * scale:
            support.add(k)
    return support


def vacuum_descent(rep: MultiModeRep, f: MultiIndexState,
                   tol=1e-12) -> MultiIndexState:
    """Extract a vector annihilated by every pi(a_i) from a nonzero state.

    Projects onto the lowest nonzero total-degree (Fourier) component and
    walks it down with annihilators; in this representation the result is
    always on the constant-monomial ray.
    """
    if f.is_zero(tol):
        raise ZeroInput("vacuum descent needs a nonzero state")
    v = rep.vector(f)
    degrees = sorted({sum(b) for i, b in enumerate(rep.basis) if abs(v[i]) > tol})
    k = degrees[0]
    mask = np.array([sum(b) == k for b in rep.basis])
    cur = np.where(mask, v, 0)
    steps = 0
    while steps <= k:
        progressed = False
        for mode0 in range(rep.modes):
            cand = rep.a_mats[mode0] @ cur
            if np.max(np.abs(cand)) > tol:
                cur = cand
                progressed = True
                steps += 1
                break
        if not progressed:
            break
    return rep.state(cur, tol=tol)
