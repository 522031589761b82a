"""
Value types produced by the eigen oracle.
"""

from dataclasses import dataclass, field

import numpy as np

ASCENDING = "ascending-real"
RE_DESC_IM_DESC = "re-desc-im-desc"


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset with its residual certificate.

    values: eigenvalues in ``ordering_key`` order.
    max_residual: max ||A v - lambda v|| (Jacobi) or ||AQ - QT||_F (QR).
    vectors: eigenvectors as columns, aligned with ``values`` (Jacobi path only).
    """

    values: tuple
    max_residual: float
    ordering_key: str
    vectors: np.ndarray | None = field(default=None, repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def is_real(self) -> bool:
        return all(complex(v).imag == 0.0 for v in self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.complex128)

    def real_values(self) -> np.ndarray:
        return np.asarray([complex(v).real for v in self.values], dtype=float)

    def to_dict(self) -> dict:
        return {
            "values": [[complex(v).real, complex(v).imag] for v in self.values],
            "max_residual": self.max_residual,
            "ordering_key": self.ordering_key,
        }


@dataclass(frozen=True)
class NumericalRangeBoundary:
    """Support points of W(A), one per sweep angle."""

    points: tuple
    support_angles: tuple

    def as_array(self) -> np.ndarray:
        return np.asarray(self.points, dtype=np.complex128)
