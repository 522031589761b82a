"""
Seeded random matrix ensembles for soundness sweeps.

Every (seed, trial, stream) triple owns an independent counter-based Philox
stream, so a trial's matrices never depend on how many other trials ran
before it or in which process.
"""

import logging
from dataclasses import dataclass

import numpy as np

from config.catalog import ENSEMBLE_KINDS
from core.errors import ContractError
from modules.matrix.matrix import ComplexMatrix

logger = logging.getLogger(__name__)

STREAM_A = 0
STREAM_B = 1
MAX_SEED = 2 ** 64 - 1


@dataclass(frozen=True)
class EnsembleSpec:
    kind: str
    n: int
    trials: int
    seed: int

    def __post_init__(self):
        if self.kind not in ENSEMBLE_KINDS:
            raise ContractError(f"Unknown ensemble '{self.kind}'. Known: {', '.join(ENSEMBLE_KINDS)}")
        if self.n < 2:
            raise ContractError(f"Ensemble requires n >= 2, got {self.n}")
        if self.trials < 1:
            raise ContractError(f"Ensemble requires trials >= 1, got {self.trials}")
        if not (0 <= self.seed <= MAX_SEED):
            raise ContractError(f"Seed must be a 64-bit unsigned integer, got {self.seed}")

    def to_dict(self) -> dict:
        return {"kind": self.kind, "n": self.n, "trials": self.trials, "seed": self.seed}


def stream(seed: int, trial: int, stream_id: int) -> np.random.Generator:
    """Independent generator for one (seed, trial, stream)."""
    return np.random.Generator(np.random.Philox(key=seed, counter=[0, 0, trial, stream_id]))


def complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    """Standard complex Gaussian: E|z|^2 = 1."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def haar_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-distributed unitary: QR of a complex Gaussian with R's diagonal made positive."""
    q, r = np.linalg.qr(complex_gaussian(rng, (n, n)))
    d = np.diagonal(r)
    q *= d / np.abs(d)
    return q


def sample(kind: str, n: int, rng: np.random.Generator) -> ComplexMatrix:
    if kind == "hermitian_gaussian":
        g = complex_gaussian(rng, (n, n))
        return ComplexMatrix((g + g.conj().T) / 2)
    if kind == "normal_unitary_conjugated":
        u = haar_unitary(rng, n)
        z = complex_gaussian(rng, n)
        return ComplexMatrix((u * z) @ u.conj().T)
    if kind == "psd":
        g = complex_gaussian(rng, (n, n))
        return ComplexMatrix(g.conj().T @ g)
    if kind == "circulant":
        row = complex_gaussian(rng, n)
        idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
        return ComplexMatrix(row[idx])
    raise ContractError(f"Unknown ensemble kind: {kind}")


def generate_trial(spec: EnsembleSpec, trial: int) -> tuple[ComplexMatrix, ComplexMatrix]:
    """(A, B) for one trial index."""
    A = sample(spec.kind, spec.n, stream(spec.seed, trial, STREAM_A))
    B = sample(spec.kind, spec.n, stream(spec.seed, trial, STREAM_B))
    return A, B


def generate_ensemble(spec: EnsembleSpec) -> list[tuple[ComplexMatrix, ComplexMatrix]]:
    """All trials of the ensemble, in trial order."""
    logger.info(f"Generating {spec.trials} {spec.kind} pairs (n={spec.n}, seed={spec.seed})")
    return [generate_trial(spec, t) for t in range(spec.trials)]
