"""
Dense complex matrix type and the structural decompositions used by the bounds:
Hermitian part, skew (imaginary) Hermitian part, diagonal/off-diagonal split,
plus tolerance-certified classification.
"""

import hashlib
import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

from config.settings import TOL_CLASS
from core.errors import ContractError, DimensionError

logger = logging.getLogger(__name__)


class ComplexMatrix:
    """Immutable dense n x n complex matrix.

    Entries are copied on construction and frozen. Derived oracle quantities
    (spectra, norms) are memoized per instance through ``cached``.
    """

    def __init__(self, entries):
        arr = np.array(entries, dtype=np.complex128)
        if arr.ndim != 2:
            raise DimensionError(f"Matrix must be 2-dimensional, got shape {arr.shape}")
        rows, cols = arr.shape
        if rows != cols:
            raise DimensionError(f"Matrix must be square, got {rows}x{cols}")
        if rows < 1:
            raise DimensionError("Matrix must have n >= 1")
        if not np.all(np.isfinite(arr)):
            raise ContractError("Matrix entries must be finite (no NaN/Inf)")
        arr.setflags(write=False)
        self._entries = arr
        self._cache = {}

    # --- Constructors ---

    @classmethod
    def identity(cls, n: int) -> "ComplexMatrix":
        return cls(np.eye(n))

    @classmethod
    def scalar(cls, n: int, c: complex) -> "ComplexMatrix":
        return cls(c * np.eye(n))

    @classmethod
    def diag(cls, values) -> "ComplexMatrix":
        return cls(np.diag(np.asarray(values, dtype=np.complex128)))

    # --- Accessors ---

    @property
    def n(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """Read-only view of the entries."""
        return self._entries

    def __getitem__(self, index):
        return self._entries[index]

    @property
    def H(self) -> "ComplexMatrix":
        """Conjugate transpose A*."""
        return ComplexMatrix(self._entries.conj().T)

    def trace(self) -> complex:
        return complex(np.trace(self._entries))

    def frobenius_norm(self) -> float:
        return self.cached("frobenius", lambda: float(np.linalg.norm(self._entries, "fro")))

    def scale(self) -> float:
        """max(1, ||A||_F), the reference magnitude for relative tolerances."""
        return max(1.0, self.frobenius_norm())

    def digest(self) -> str:
        """Short content hash, stable across platforms."""
        def _compute():
            h = hashlib.sha256()
            h.update(f"{self.n}".encode("ascii"))
            h.update(np.ascontiguousarray(self._entries, dtype="<c16").tobytes())
            return h.hexdigest()[:16]
        return self.cached("digest", _compute)

    def cached(self, key: str, factory: Callable):
        """Memoize a derived quantity. Entries are frozen, so results never go stale."""
        if key not in self._cache:
            self._cache[key] = factory()
        return self._cache[key]

    # --- Arithmetic ---

    def _check_same_n(self, other: "ComplexMatrix"):
        if other.n != self.n:
            raise DimensionError(f"Dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if isinstance(other, ComplexMatrix):
            self._check_same_n(other)
            return ComplexMatrix(self._entries + other._entries)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, ComplexMatrix):
            self._check_same_n(other)
            return ComplexMatrix(self._entries - other._entries)
        return NotImplemented

    def __matmul__(self, other):
        if isinstance(other, ComplexMatrix):
            self._check_same_n(other)
            return ComplexMatrix(self._entries @ other._entries)
        return NotImplemented

    def __mul__(self, scalar):
        if isinstance(scalar, (int, float, complex, np.number)):
            return ComplexMatrix(complex(scalar) * self._entries)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return ComplexMatrix(-self._entries)

    def square(self) -> "ComplexMatrix":
        """A @ A, memoized so its spectrum is computed once."""
        return self.cached("square", lambda: self @ self)

    def shift(self, c: complex) -> "ComplexMatrix":
        """A - c*I."""
        return ComplexMatrix(self._entries - c * np.eye(self.n))

    def allclose(self, other: "ComplexMatrix", atol: float = 1e-12) -> bool:
        return other.n == self.n and bool(np.allclose(self._entries, other._entries, rtol=0.0, atol=atol))

    def __repr__(self):
        return f"<ComplexMatrix(n={self.n}, digest='{self.digest()}')>"


@dataclass(frozen=True)
class MatrixClass:
    """Tolerance-certified structural flags for a matrix."""

    is_hermitian: bool
    is_normal: bool
    is_psd: bool
    is_pd: bool
    hermiticity_defect: float
    normality_defect: float

    def to_dict(self) -> dict:
        return {
            "is_hermitian": self.is_hermitian,
            "is_normal": self.is_normal,
            "is_psd": self.is_psd,
            "is_pd": self.is_pd,
            "hermiticity_defect": self.hermiticity_defect,
            "normality_defect": self.normality_defect,
        }


@dataclass(frozen=True)
class SpectralInterval:
    """Interval [m, M] assumed to contain a Hermitian spectrum."""

    m: float
    M: float

    def __post_init__(self):
        if not (np.isfinite(self.m) and np.isfinite(self.M)):
            raise ContractError("Spectral interval endpoints must be finite")
        if self.m > self.M:
            raise ContractError(f"Spectral interval requires m <= M, got [{self.m}, {self.M}]")

    @property
    def width(self) -> float:
        return self.M - self.m

    def contains(self, values, tol: float = 0.0) -> bool:
        values = np.asarray(values, dtype=float)
        return bool(np.all(values >= self.m - tol) and np.all(values <= self.M + tol))


def classify(A: ComplexMatrix, tol_class: float = None) -> MatrixClass:
    """Compute hermiticity/normality defects and the derived class flags.

    psd / pd are decided from the Hermitian eigen oracle.
    """
    tol_class = TOL_CLASS if tol_class is None else tol_class

    def _compute():
        a = A.entries
        ah = a.conj().T
        herm_defect = float(np.linalg.norm(a - ah, "fro"))
        norm_defect = float(np.linalg.norm(a @ ah - ah @ a, "fro"))
        threshold = tol_class * A.scale()

        is_hermitian = herm_defect <= threshold
        is_normal = is_hermitian or norm_defect <= threshold
        is_psd = False
        is_pd = False
        if is_hermitian:
            from modules.oracle.jacobi import eig_hermitian
            # Looser tol_class than the oracle accepts: classify by the Hermitian part
            target = A if herm_defect <= TOL_CLASS * A.scale() else hermitian_part(A)
            lam_min = min(v.real for v in eig_hermitian(target).values)
            is_psd = lam_min >= -tol_class * A.frobenius_norm()
            is_pd = lam_min > tol_class * A.frobenius_norm()

        return MatrixClass(
            is_hermitian=is_hermitian,
            is_normal=is_normal,
            is_psd=is_psd,
            is_pd=is_pd,
            hermiticity_defect=herm_defect,
            normality_defect=norm_defect,
        )

    return A.cached(f"classify:{tol_class!r}", _compute)


def hermitian_part(A: ComplexMatrix) -> ComplexMatrix:
    """(A + A*) / 2."""
    a = A.entries
    return A.cached("hermitian_part", lambda: ComplexMatrix((a + a.conj().T) / 2))


def skew_real_part(A: ComplexMatrix) -> ComplexMatrix:
    """(A - A*) / (2i), the Hermitian matrix with A = hermitian_part(A) + i * skew_real_part(A)."""
    a = A.entries
    return A.cached("skew_real_part", lambda: ComplexMatrix((a - a.conj().T) / 2j))


def diagonal_part(A: ComplexMatrix) -> ComplexMatrix:
    """D with D_ii = a_ii and zero off-diagonal."""
    return A.cached("diagonal_part", lambda: ComplexMatrix(np.diag(np.diag(A.entries))))


def offdiagonal_part(A: ComplexMatrix) -> ComplexMatrix:
    """N = A - D."""
    a = A.entries
    return A.cached("offdiagonal_part", lambda: ComplexMatrix(a - np.diag(np.diag(a))))


def split_diagonal(A: ComplexMatrix) -> tuple[ComplexMatrix, ComplexMatrix]:
    """A = D + N."""
    return diagonal_part(A), offdiagonal_part(A)
