"""
Positive unital linear functionals phi: M(n) -> C.

Every descriptor evaluates in closed form and also materializes a weight
matrix W (psd, trace 1) with phi(A) = tr(W A). Indices are 1-based.

JSON tag format (n supplied by context when absent):
    {"kind": "diag", "i": 1}
    {"kind": "vector_state", "x": [[re, im], ...]}
    {"kind": "index_avg", "indices": [1, 3]}
    {"kind": "mean_all"}
    {"kind": "offdiag_complement"}
    {"kind": "theta_pair", "i": 1, "j": 2, "theta": 0.7853981633974483}
    {"kind": "pair_diag", "i": 1, "j": 2}
    {"kind": "custom", "W": [[[re, im], ...], ...]}
"""

import cmath
import logging
import math
from dataclasses import dataclass

import numpy as np

from core.errors import ContractError, DimensionError
from modules.matrix.matrix import ComplexMatrix

logger = logging.getLogger(__name__)

FUNCTIONAL_KINDS = (
    "diag",
    "vector_state",
    "index_avg",
    "mean_all",
    "offdiag_complement",
    "theta_pair",
    "pair_diag",
    "custom",
)

UNIT_TOL = 1e-12
WEIGHT_PSD_TOL = 1e-10


@dataclass(frozen=True)
class PulFunctional:
    """Descriptor of a positive unital linear functional on M(n)."""

    kind: str
    n: int
    i: int | None = None
    j: int | None = None
    theta: float | None = None
    indices: tuple | None = None
    vector: tuple | None = None
    weight: tuple | None = None

    def __post_init__(self):
        if self.kind not in FUNCTIONAL_KINDS:
            raise ContractError(f"Unknown functional kind: {self.kind}")
        if self.n < 1:
            raise DimensionError(f"Functional dimension must be >= 1, got {self.n}")

        if self.kind in ("diag", "theta_pair", "pair_diag"):
            _check_index(self.i, self.n)
        if self.kind in ("theta_pair", "pair_diag"):
            _check_index(self.j, self.n)
            if self.i == self.j:
                raise ContractError(f"{self.kind} requires i != j, got i = j = {self.i}")
        if self.kind == "theta_pair" and (self.theta is None or not math.isfinite(self.theta)):
            raise ContractError("theta_pair requires a finite theta")
        if self.kind == "index_avg":
            if not self.indices:
                raise ContractError("index_avg requires a nonempty index set")
            if len(set(self.indices)) != len(self.indices):
                raise ContractError(f"index_avg indices must be distinct: {self.indices}")
            for idx in self.indices:
                _check_index(idx, self.n)
        if self.kind == "offdiag_complement" and self.n < 2:
            raise DimensionError("offdiag_complement requires n >= 2")
        if self.kind == "vector_state":
            if self.vector is None or len(self.vector) != self.n:
                raise DimensionError(f"vector_state requires a vector of length {self.n}")
            norm = float(np.linalg.norm(np.asarray(self.vector, dtype=np.complex128)))
            if abs(norm - 1.0) > UNIT_TOL:
                raise ContractError(f"vector_state requires a unit vector, got norm {norm}")
        if self.kind == "custom":
            _check_weight(self.weight, self.n)

    # --- Constructors ---

    @classmethod
    def diag(cls, i: int, n: int) -> "PulFunctional":
        return cls("diag", n, i=i)

    @classmethod
    def vector_state(cls, x, normalize: bool = False) -> "PulFunctional":
        v = np.asarray(x, dtype=np.complex128).ravel()
        if normalize:
            v = v / np.linalg.norm(v)
        return cls("vector_state", len(v), vector=tuple(complex(z) for z in v))

    @classmethod
    def index_avg(cls, indices, n: int) -> "PulFunctional":
        return cls("index_avg", n, indices=tuple(sorted(int(k) for k in indices)))

    @classmethod
    def mean_all(cls, n: int) -> "PulFunctional":
        return cls("mean_all", n)

    @classmethod
    def offdiag_complement(cls, n: int) -> "PulFunctional":
        return cls("offdiag_complement", n)

    @classmethod
    def theta_pair(cls, i: int, j: int, theta: float, n: int) -> "PulFunctional":
        return cls("theta_pair", n, i=i, j=j, theta=float(theta))

    @classmethod
    def pair_diag(cls, i: int, j: int, n: int) -> "PulFunctional":
        return cls("pair_diag", n, i=i, j=j)

    @classmethod
    def custom(cls, W) -> "PulFunctional":
        w = W.entries if isinstance(W, ComplexMatrix) else np.asarray(W, dtype=np.complex128)
        return cls("custom", w.shape[0], weight=tuple(tuple(complex(z) for z in row) for row in w))

    def label(self) -> str:
        if self.kind == "diag":
            return f"diag({self.i})"
        if self.kind in ("pair_diag",):
            return f"pair_diag({self.i},{self.j})"
        if self.kind == "theta_pair":
            return f"theta_pair({self.i},{self.j},{self.theta:.6g})"
        if self.kind == "index_avg":
            return f"index_avg({','.join(str(k) for k in self.indices)})"
        return self.kind


def _check_index(idx, n: int):
    if idx is None or not (1 <= idx <= n):
        raise DimensionError(f"Index {idx} out of range 1..{n}")


def _check_weight(weight, n: int):
    if weight is None:
        raise ContractError("custom functional requires a weight matrix")
    w = np.asarray(weight, dtype=np.complex128)
    if w.shape != (n, n):
        raise DimensionError(f"custom weight must be {n}x{n}, got {w.shape}")
    if abs(np.trace(w) - 1.0) > UNIT_TOL * max(1.0, n):
        raise ContractError(f"custom weight must have trace 1, got {np.trace(w)}")
    from modules.oracle.jacobi import eig_hermitian

    W = ComplexMatrix(w)
    lam_min = eig_hermitian(W).real_values()[0]
    if lam_min < -WEIGHT_PSD_TOL:
        raise ContractError(f"custom weight must be psd, min eigenvalue {lam_min:.3e}")


def _as_array(A) -> np.ndarray:
    return A.entries if isinstance(A, ComplexMatrix) else np.asarray(A, dtype=np.complex128)


def apply_functional(phi: PulFunctional, A) -> complex:
    """Evaluate phi(A) in closed form.

    Raises:
        DimensionError: A is not phi.n x phi.n
    """
    a = _as_array(A)
    if a.shape != (phi.n, phi.n):
        raise DimensionError(f"Functional acts on {phi.n}x{phi.n}, got {a.shape}")
    n = phi.n

    if phi.kind == "diag":
        return complex(a[phi.i - 1, phi.i - 1])
    if phi.kind == "vector_state":
        x = np.asarray(phi.vector, dtype=np.complex128)
        return complex(np.vdot(x, a @ x))
    if phi.kind == "index_avg":
        idx = [k - 1 for k in phi.indices]
        return complex(np.sum(a[np.ix_(idx, idx)]) / len(idx))
    if phi.kind == "mean_all":
        return complex(np.sum(a) / n)
    if phi.kind == "offdiag_complement":
        tr = np.trace(a)
        off = np.sum(a) - tr
        return complex((tr - off / (n - 1)) / n)
    if phi.kind == "theta_pair":
        i, j = phi.i - 1, phi.j - 1
        rot = cmath.exp(1j * phi.theta)
        return complex(0.5 * (a[i, i] + a[j, j] + a[i, j] * rot + a[j, i] / rot))
    if phi.kind == "pair_diag":
        return complex(0.5 * (a[phi.i - 1, phi.i - 1] + a[phi.j - 1, phi.j - 1]))
    if phi.kind == "custom":
        w = np.asarray(phi.weight, dtype=np.complex128)
        return complex(np.sum(w * a.T))
    raise ContractError(f"Unknown functional kind: {phi.kind}")


def canonical_weight(phi: PulFunctional) -> ComplexMatrix:
    """W psd with trace 1 and phi(A) = tr(W A)."""
    n = phi.n
    if phi.kind == "diag":
        w = np.zeros((n, n), dtype=np.complex128)
        w[phi.i - 1, phi.i - 1] = 1.0
    elif phi.kind == "vector_state":
        x = np.asarray(phi.vector, dtype=np.complex128)
        w = np.outer(x, x.conj())
    elif phi.kind == "index_avg":
        u = np.zeros(n, dtype=np.complex128)
        u[[k - 1 for k in phi.indices]] = 1.0 / math.sqrt(len(phi.indices))
        w = np.outer(u, u.conj())
    elif phi.kind == "mean_all":
        w = np.full((n, n), 1.0 / n, dtype=np.complex128)
    elif phi.kind == "offdiag_complement":
        v = np.full(n, 1.0 / math.sqrt(n), dtype=np.complex128)
        w = (np.eye(n) - np.outer(v, v.conj())) / (n - 1)
    elif phi.kind == "theta_pair":
        # tr(x x^* A) = x^* A x picks up a_ij e^{i theta} with this phase on e_j
        x = np.zeros(n, dtype=np.complex128)
        x[phi.i - 1] = 1.0 / math.sqrt(2.0)
        x[phi.j - 1] = cmath.exp(1j * phi.theta) / math.sqrt(2.0)
        w = np.outer(x, x.conj())
    elif phi.kind == "pair_diag":
        w = np.zeros((n, n), dtype=np.complex128)
        w[phi.i - 1, phi.i - 1] = 0.5
        w[phi.j - 1, phi.j - 1] = 0.5
    elif phi.kind == "custom":
        w = np.asarray(phi.weight, dtype=np.complex128)
    else:
        raise ContractError(f"Unknown functional kind: {phi.kind}")
    return ComplexMatrix(w)


def catalog_functionals(n: int, thetas=(0.0, math.pi / 2, math.pi, 3 * math.pi / 2)) -> list[PulFunctional]:
    """Representative catalog instances on M(n): all diag(i), mean_all,
    offdiag_complement, and pair_diag / theta_pair on every pair i < j."""
    catalog = [PulFunctional.diag(i, n) for i in range(1, n + 1)]
    catalog.append(PulFunctional.mean_all(n))
    if n >= 2:
        catalog.append(PulFunctional.offdiag_complement(n))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            catalog.append(PulFunctional.pair_diag(i, j, n))
            catalog.extend(PulFunctional.theta_pair(i, j, t, n) for t in thetas)
    return catalog


# --- JSON tag format ---

def _complex_to_json(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _complex_from_json(value) -> complex:
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ContractError(f"Complex value must be [re, im], got {value}")
        return complex(float(value[0]), float(value[1]))
    return complex(float(value))


def functional_to_json(phi: PulFunctional) -> dict:
    data = {"kind": phi.kind, "n": phi.n}
    if phi.kind in ("diag", "theta_pair", "pair_diag"):
        data["i"] = phi.i
    if phi.kind in ("theta_pair", "pair_diag"):
        data["j"] = phi.j
    if phi.kind == "theta_pair":
        data["theta"] = phi.theta
    if phi.kind == "index_avg":
        data["indices"] = list(phi.indices)
    if phi.kind == "vector_state":
        data["x"] = [_complex_to_json(z) for z in phi.vector]
    if phi.kind == "custom":
        data["W"] = [[_complex_to_json(z) for z in row] for row in phi.weight]
    return data


def functional_from_json(data: dict, n: int | None = None) -> PulFunctional:
    """Build a functional from its JSON tag. ``n`` fills in a missing dimension.

    Raises:
        ContractError: unknown kind or missing fields
    """
    kind = data.get("kind")
    if kind not in FUNCTIONAL_KINDS:
        raise ContractError(f"Unknown functional kind: {kind}")
    dim = data.get("n", n)

    try:
        if kind == "vector_state":
            return PulFunctional.vector_state([_complex_from_json(z) for z in data["x"]])
        if kind == "custom":
            return PulFunctional.custom(
                [[_complex_from_json(z) for z in row] for row in data["W"]]
            )
        if dim is None:
            raise ContractError(f"Functional '{kind}' needs a dimension n")
        dim = int(dim)
        if kind == "diag":
            return PulFunctional.diag(int(data["i"]), dim)
        if kind == "index_avg":
            return PulFunctional.index_avg(data["indices"], dim)
        if kind == "mean_all":
            return PulFunctional.mean_all(dim)
        if kind == "offdiag_complement":
            return PulFunctional.offdiag_complement(dim)
        if kind == "theta_pair":
            return PulFunctional.theta_pair(int(data["i"]), int(data["j"]), float(data["theta"]), dim)
        return PulFunctional.pair_diag(int(data["i"]), int(data["j"]), dim)
    except KeyError as e:
        raise ContractError(f"Functional '{kind}' is missing field {e}")
