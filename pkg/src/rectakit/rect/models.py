"""Coverings and the serializable reports produced from them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from pydantic import Field

from .._core import BaseKitModel, IntArray
from ..gf2code import LinearCode, code_from_rows
from ..gf2code.bitvector import BitVector
from ..graph.base import Graph


@dataclass(frozen=True)
class CoveringMap:
    """A covering Q_n -> target given by the image of every cube vertex.

    ``image_of[x]`` is the target vertex of the packed cube vertex x, so
    ``image_of[0] == base`` and ``image_of[1 << i] == neighbor_order[i]``.
    """

    n: int
    target: Graph
    image_of: IntArray
    base: int
    neighbor_order: tuple[int, ...]

    def fibre(self, vertex: Optional[int] = None) -> IntArray:
        """Cube vertices over ``vertex`` (the base by default), ascending."""
        return np.flatnonzero(self.image_of == (self.base if vertex is None else vertex)).astype(np.int64)

    def fibre_sizes(self) -> IntArray:
        return np.bincount(self.image_of, minlength=self.target.order)


class CodeSummary(BaseKitModel):
    """A code by its reduced basis, in the string notation of code files."""

    n: int
    dimension: int
    rows: List[str] = Field(default_factory=list)

    @classmethod
    def of(cls, code: LinearCode) -> CodeSummary:
        return cls(n=code.n, dimension=code.r, rows=code.to_strings())

    def to_code(self) -> LinearCode:
        return code_from_rows(self.n, [BitVector.from_string(row) for row in self.rows])


class TwistEntry(BaseKitModel):
    """For fibre element y: ``sigma[i] = j`` (1-indexed) when y + e_j lies over the image of e_i."""

    fibre_element: str
    sigma: List[int]


class KernelReport(BaseKitModel):
    """The fibre over the base vertex and what it says about the covering."""

    n: int
    fibre_size: int
    linear: bool
    code: Optional[CodeSummary] = None
    rank: int = Field(..., description="Dimension of the span of the fibre")
    isomorphism_verified: Optional[bool] = Field(default=None, description="Γ(code) ≅ target, checked edge by edge")
    fibre: List[int] = Field(default_factory=list, description="Packed cube vertices over the base")
    twist_data: List[TwistEntry] = Field(default_factory=list)

    def to_code(self) -> Optional[LinearCode]:
        return self.code.to_code() if self.code is not None else None


class LocalOrbitRecord(BaseKitModel):
    """The stabilizer of one vertex-orbit representative and its action on Γ(u)."""

    representative: int
    stabilizer_order: int
    local_order: int
    local_orbit_sizes: List[int]
    transitive: bool
    rank: Optional[int] = None
    faithful: bool
    suborbits_match: Optional[bool] = Field(default=None, description="Suborbits are {v}, Γ(u)∩Γ(v), Γ(u)∩Γ2(v)")
    two_arc_orbit_sizes: List[int] = Field(default_factory=list)


class LocalRank3Certificate(BaseKitModel):
    """Outcome of the locally rank 3 test; ``reason`` names the first failure."""

    n: int = Field(..., description="Valency")
    accepted: bool
    reason: Optional[str] = None
    vertex_orbits: int
    edge_transitive: Optional[bool] = None
    girth: Optional[int] = None
    orbits: List[LocalOrbitRecord] = Field(default_factory=list)

    def __bool__(self) -> bool:
        return self.accepted
