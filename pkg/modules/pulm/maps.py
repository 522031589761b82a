"""
Positive unital linear maps Phi: M(n) -> M(k) and their composition with functionals.
"""

import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

from core.errors import ContractError, DimensionError
from modules.matrix.matrix import ComplexMatrix
from modules.pulm.functionals import (
    PulFunctional,
    apply_functional,
    functional_from_json,
    functional_to_json,
)

logger = logging.getLogger(__name__)

MAP_KINDS = (
    "identity",
    "trace_complement",
    "compression_2x2",
    "flip_compression_2x2",
    "diagonal_restriction",
    "functional_lift",
)


@dataclass(frozen=True)
class PulMap:
    """Descriptor of a positive unital linear map on M(n_in)."""

    kind: str
    n_in: int
    i: int | None = None
    j: int | None = None
    functional: PulFunctional | None = None
    k: int = 1

    def __post_init__(self):
        if self.kind not in MAP_KINDS:
            raise ContractError(f"Unknown map kind: {self.kind}")
        if self.n_in < 1:
            raise DimensionError(f"Map dimension must be >= 1, got {self.n_in}")
        if self.kind == "trace_complement" and self.n_in < 2:
            raise DimensionError("trace_complement requires n >= 2")
        if self.kind in ("compression_2x2", "flip_compression_2x2"):
            for idx in (self.i, self.j):
                if idx is None or not (1 <= idx <= self.n_in):
                    raise DimensionError(f"Index {idx} out of range 1..{self.n_in}")
            if self.i == self.j:
                raise ContractError(f"{self.kind} requires i != j")
        if self.kind == "functional_lift":
            if self.functional is None:
                raise ContractError("functional_lift requires a functional")
            if self.functional.n != self.n_in:
                raise DimensionError(
                    f"Lifted functional acts on n={self.functional.n}, map on n={self.n_in}"
                )
            if self.k < 1:
                raise DimensionError(f"functional_lift output size must be >= 1, got {self.k}")

    @property
    def n_out(self) -> int:
        if self.kind in ("compression_2x2", "flip_compression_2x2"):
            return 2
        if self.kind == "functional_lift":
            return self.k
        return self.n_in

    # --- Constructors ---

    @classmethod
    def identity(cls, n: int) -> "PulMap":
        return cls("identity", n)

    @classmethod
    def trace_complement(cls, n: int) -> "PulMap":
        return cls("trace_complement", n)

    @classmethod
    def compression_2x2(cls, i: int, j: int, n: int) -> "PulMap":
        return cls("compression_2x2", n, i=i, j=j)

    @classmethod
    def flip_compression_2x2(cls, i: int, j: int, n: int) -> "PulMap":
        return cls("flip_compression_2x2", n, i=i, j=j)

    @classmethod
    def diagonal_restriction(cls, n: int) -> "PulMap":
        return cls("diagonal_restriction", n)

    @classmethod
    def functional_lift(cls, phi: PulFunctional, k: int = 1) -> "PulMap":
        return cls("functional_lift", phi.n, functional=phi, k=k)

    def label(self) -> str:
        if self.kind in ("compression_2x2", "flip_compression_2x2"):
            return f"{self.kind}({self.i},{self.j})"
        if self.kind == "functional_lift":
            return f"functional_lift({self.functional.label()},{self.k})"
        return self.kind


def apply_map(Phi: PulMap, A: ComplexMatrix) -> ComplexMatrix:
    """Evaluate Phi(A).

    Raises:
        DimensionError: A is not n_in x n_in
    """
    if A.n != Phi.n_in:
        raise DimensionError(f"Map acts on n={Phi.n_in}, got n={A.n}")
    if Phi.kind == "identity":
        return A
    return A.cached(f"map:{Phi.label()}", lambda: _apply_map(Phi, A))


def _apply_map(Phi: PulMap, A: ComplexMatrix) -> ComplexMatrix:
    a = A.entries
    n = A.n

    if Phi.kind == "trace_complement":
        return ComplexMatrix((np.trace(a) * np.eye(n) - a) / (n - 1))
    if Phi.kind == "compression_2x2":
        i, j = Phi.i - 1, Phi.j - 1
        return ComplexMatrix([[a[i, i], a[i, j]], [a[j, i], a[j, j]]])
    if Phi.kind == "flip_compression_2x2":
        i, j = Phi.i - 1, Phi.j - 1
        return ComplexMatrix([[a[j, j], -a[i, j]], [-a[j, i], a[i, i]]])
    if Phi.kind == "diagonal_restriction":
        return ComplexMatrix(np.diag(np.diag(a)))
    if Phi.kind == "functional_lift":
        return ComplexMatrix.scalar(Phi.k, apply_functional(Phi.functional, A))
    raise ContractError(f"Unknown map kind: {Phi.kind}")


def compose(phi: PulFunctional, Phi) -> PulFunctional:
    """The functional A -> phi(Phi(A)), materialized through its weight matrix.

    W is read off the action on matrix units: W[l, k] = phi(Phi(E_kl)).

    Raises:
        DimensionError: phi does not act on Phi's output size
        ContractError: the composition is not positive unital (W not psd / trace 1)
    """
    if phi.n != Phi.n_out:
        raise DimensionError(f"Functional acts on n={phi.n}, map outputs n={Phi.n_out}")
    n = Phi.n_in
    w = np.zeros((n, n), dtype=np.complex128)
    for k in range(n):
        for l in range(n):
            unit = np.zeros((n, n), dtype=np.complex128)
            unit[k, l] = 1.0
            w[l, k] = apply_functional(phi, _evaluate(Phi, ComplexMatrix(unit)))
    return PulFunctional.custom(w)


class CallableMap:
    """Arbitrary linear map given by a function, for validation and negative controls."""

    def __init__(self, fn: Callable, n_in: int, n_out: int, name: str = "callable"):
        self.fn = fn
        self.n_in = n_in
        self.n_out = n_out
        self.name = name

    def __call__(self, A: ComplexMatrix) -> ComplexMatrix:
        out = self.fn(A)
        if isinstance(out, ComplexMatrix):
            return out
        arr = np.asarray(out, dtype=np.complex128)
        if arr.ndim == 0:
            arr = arr.reshape(1, 1)
        return ComplexMatrix(arr)

    def label(self) -> str:
        return self.name


def _evaluate(Phi, A: ComplexMatrix) -> ComplexMatrix:
    if isinstance(Phi, PulMap):
        return apply_map(Phi, A)
    return Phi(A)


# --- JSON tag format ---

def map_to_json(Phi: PulMap) -> dict:
    data = {"kind": Phi.kind, "n": Phi.n_in}
    if Phi.kind in ("compression_2x2", "flip_compression_2x2"):
        data["i"] = Phi.i
        data["j"] = Phi.j
    if Phi.kind == "functional_lift":
        data["functional"] = functional_to_json(Phi.functional)
        data["k"] = Phi.k
    return data


def map_from_json(data: dict, n: int | None = None) -> PulMap:
    """Build a map from its JSON tag. ``n`` fills in a missing dimension."""
    kind = data.get("kind")
    if kind not in MAP_KINDS:
        raise ContractError(f"Unknown map kind: {kind}")
    dim = data.get("n", n)
    try:
        if kind == "functional_lift":
            phi = functional_from_json(data["functional"], dim)
            return PulMap.functional_lift(phi, int(data.get("k", 1)))
        if dim is None:
            raise ContractError(f"Map '{kind}' needs a dimension n")
        dim = int(dim)
        if kind in ("compression_2x2", "flip_compression_2x2"):
            return PulMap(kind, dim, i=int(data["i"]), j=int(data["j"]))
        return PulMap(kind, dim)
    except KeyError as e:
        raise ContractError(f"Map '{kind}' is missing field {e}")


def descriptor_from_json(data: dict, n: int | None = None):
    """Functional or map, dispatched on the "kind" tag."""
    if data.get("kind") in MAP_KINDS:
        return map_from_json(data, n)
    return functional_from_json(data, n)
