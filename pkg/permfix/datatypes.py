"""Types describing permutations, profiles and identity checks."""

from __future__ import annotations

import typing
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import Polynomial, poly_from_counts

if typing.TYPE_CHECKING:
    from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

    Side = Union[Fraction, Polynomial, Tuple[Fraction, ...]]


@dataclass(frozen=True)
class SignedPermutation:
    """Permutation in 0-indexed one-line notation.

    Attributes:
        images: images[i] is the image of i.
        sign: signature, +1 or -1.
        fix_count: number of fixed points.
    """

    images: Tuple[int, ...]
    sign: int
    fix_count: int

    @property
    def n(self) -> int:
        """Number of permuted points."""
        return len(self.images)

    def cycles(self) -> List[Tuple[int, ...]]:
        """Cycle decomposition, each cycle starting at its smallest point."""
        seen = [False] * self.n
        cycles = []
        for start in range(self.n):
            if seen[start]:
                continue
            cycle = []
            point = start
            while not seen[point]:
                seen[point] = True
                cycle.append(point)
                point = self.images[point]
            cycles.append(tuple(cycle))
        return cycles

    def cycle_sign(self) -> int:
        """Signature recomputed as (-1)**(n - number of cycles)."""
        return -1 if (self.n - len(self.cycles())) % 2 else 1

    def cycle_notation(self) -> str:
        """1-indexed cycle notation, fixed points included."""
        return "".join(
            "(" + " ".join(str(i + 1) for i in cyc) + ")" for cyc in self.cycles()
        )


@dataclass(frozen=True)
class CycleClass:
    """Conjugacy class of the symmetric group.

    Attributes:
        partition: cycle lengths in decreasing order.
        class_size: number of permutations in the class.
        sign: common signature of the members.
        fix_count: common number of fixed points (parts equal to 1).
    """

    partition: Tuple[int, ...]
    class_size: int
    sign: int
    fix_count: int


@dataclass(frozen=True)
class FixProfile:
    """Signed and unsigned fixed-point distributions over S_n.

    Attributes:
        n: the group order parameter.
        signed_counts: signed_counts[f] is the sum of signatures of the
            permutations with f fixed points.
        unsigned_counts: unsigned_counts[f] is the number of permutations with
            f fixed points (a row of the rencontres triangle).
    """

    n: int
    signed_counts: Tuple[int, ...]
    unsigned_counts: Tuple[int, ...]

    def polynomial(self) -> Polynomial:
        """Signed generating polynomial, the determinant of M_x."""
        return poly_from_counts(self.signed_counts)


@dataclass(frozen=True)
class EigenCheck:
    """Exact check of M_x v = lambda v for one vector.

    Attributes:
        label: name of the vector, ``ones`` or ``e1-ej``.
        j: index of the second basis vector (1-indexed), None for ``ones``.
        eigenvalue: the expected eigenvalue.
        image: M_x v.
        expected: eigenvalue * v.
    """

    label: str
    j: Optional[int]
    eigenvalue: Fraction
    image: Tuple[Fraction, ...]
    expected: Tuple[Fraction, ...]

    @property
    def passed(self) -> bool:
        """Whether the vector is an eigenvector for the eigenvalue."""
        return self.image == self.expected


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of one identity check.

    Attributes:
        identity_id: name of the identity, a key of
            :data:`~permfix.suites.SUITES`.
        params: values of n, k, x (and j for eigenvector checks).
        lhs: brute-force side.
        rhs: closed-form side.
        others: additional independent evaluations that must equal rhs.
    """

    identity_id: str
    params: Mapping[str, Any]
    lhs: Side
    rhs: Side
    others: Tuple[Side, ...] = ()

    @property
    def passed(self) -> bool:
        """Whether every side agrees exactly."""
        return self.lhs == self.rhs and all(o == self.rhs for o in self.others)

    def sort_key(self) -> Tuple[Any, ...]:
        """Deterministic ordering: identity, n, k, x, j."""
        prm = self.params

        def _key(name: str) -> Tuple[int, Any]:
            val = prm.get(name)
            return (0, 0) if val is None else (1, val)

        return (self.identity_id, _key("n"), _key("k"), _key("x"), _key("j"))


@dataclass(frozen=True)
class VerificationReport:
    """Machine-readable outcome of a verification sweep.

    Attributes:
        tool_version: permfix version.
        config: options the sweep was run with.
        checks: the checks, sorted by identity id, n, k, x and j.
        elapsed_ms: wall time per identity id in milliseconds.
    """

    tool_version: str
    config: Mapping[str, Any]
    checks: Tuple[IdentityCheck, ...]
    elapsed_ms: Mapping[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> int:
        """Number of passed checks."""
        return sum(chk.passed for chk in self.checks)

    @property
    def failed(self) -> int:
        """Number of failed checks."""
        return len(self.checks) - self.passed

    @property
    def totals(self) -> Dict[str, int]:
        """Counts of passed and failed checks."""
        return {"passed": self.passed, "failed": self.failed}
