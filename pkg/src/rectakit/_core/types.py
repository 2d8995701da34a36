"""Core type definitions and protocols."""

from abc import abstractmethod
from typing import Protocol, Sequence, TypeVar

import numpy as np
import numpy.typing as npt

from .base_models import BaseKitModel

T = TypeVar("T")
ModelT = TypeVar("ModelT", bound="BaseKitModel")

IntArray = npt.NDArray[np.int64]
WordArray = npt.NDArray[np.uint64]
BoolArray = npt.NDArray[np.bool_]

# Sentinel distance for vertices not reachable from the BFS source.
UNREACHABLE = -1


class PermutationLike(Protocol):
    """Anything exposing a degree and a 0-indexed image array."""

    @property
    def degree(self) -> int: ...

    @property
    def images(self) -> IntArray: ...


class VertexMap(Protocol):
    """A vectorized map on vertex ids, such as a group element acting on a graph."""

    @abstractmethod
    def apply(self, points: IntArray) -> IntArray:
        """Map an array of vertex ids to their images."""
        ...


def as_int_array(values: Sequence[int] | IntArray) -> IntArray:
    """Convert ``values`` to a contiguous int64 array."""
    return np.ascontiguousarray(np.asarray(values, dtype=np.int64))
