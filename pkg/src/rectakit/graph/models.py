"""Serializable results of graph analyses."""

from __future__ import annotations

from typing import List, Literal, Optional, Tuple

from pydantic import Field

from .._core import BaseKitModel


class DistanceProfile(BaseKitModel):
    """Distance partition around ``source`` with the observed c_i, a_i and b_i values.

    ``c_values[i]`` is the sorted set of values of c_i(source, v) over v in shell i,
    and likewise for a and b.
    """

    source: int = Field(..., description="Base vertex")
    shell_sizes: List[int] = Field(..., description="k_i = |Γ_i(source)|")
    c_values: List[List[int]] = Field(default_factory=list)
    a_values: List[List[int]] = Field(default_factory=list)
    b_values: List[List[int]] = Field(default_factory=list)

    @property
    def depth(self) -> int:
        """Largest shell index recorded."""
        return len(self.shell_sizes) - 1

    @property
    def reached(self) -> int:
        return sum(self.shell_sizes)

    def single(self, kind: Literal["c", "a", "b"], i: int) -> Optional[int]:
        """The value of c_i, a_i or b_i when it is the same on the whole shell."""
        values = {"c": self.c_values, "a": self.a_values, "b": self.b_values}[kind]
        if i >= len(values) or len(values[i]) != 1:
            return None
        return values[i][0]

    def intersection_array(self) -> Optional[Tuple[List[int], List[int]]]:
        """({b_0, ..., b_{d-1}}, {c_1, ..., c_d}) when every value is constant on its shell."""
        d = self.depth
        bs = [self.single("b", i) for i in range(d)]
        cs = [self.single("c", i) for i in range(1, d + 1)]
        if any(v is None for v in bs + cs):
            return None
        return [int(v) for v in bs if v is not None], [int(v) for v in cs if v is not None]


class RectagraphResult(BaseKitModel):
    """Outcome of the rectagraph test with a witness on failure.

    ``reason`` is ``"disconnected"``, ``"triangle"`` (witness u, v, w) or
    ``"c2"`` (witness u, w with ``c2`` common neighbours).
    """

    holds: bool
    reason: Optional[str] = None
    witness: List[int] = Field(default_factory=list)
    c2: Optional[int] = None

    def __bool__(self) -> bool:
        return self.holds


class TriangularLabeling(BaseKitModel):
    """A verified isomorphism onto T_n: vertex v gets the 1-indexed pair ``labels[v]``."""

    n: int
    labels: List[Tuple[int, int]]
