"""Enumeration of the symmetric group and fixed-point statistics.

Two independent paths are provided: permutation-by-permutation enumeration
(:func:`enumerate_permutations`, exact but O(n!)) and enumeration of
conjugacy classes (:func:`enumerate_cycle_classes`, O(p(n))).
"""

from __future__ import annotations

import typing
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache

from .datatypes import CycleClass, FixProfile, SignedPermutation
from .error import DomainError, EnumerationCapError
from .exact import binomial, factorial

if typing.TYPE_CHECKING:
    from typing import Iterator, List, Tuple

DEFAULT_CAP = 10
CYCLECLASS_MAX = 64
METHODS = ("bruteforce", "cycleclass")


def _check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise DomainError("enumerate_permutations", f"n={n} should be >= 1")
    if n > cap:
        raise EnumerationCapError(n, cap)


def _adjacent_walk(
    images: List[int], start: int, sign: int
) -> Iterator[SignedPermutation]:
    """Walk all arrangements of images[start:] by adjacent transpositions.

    This is the Steinhaus-Johnson-Trotter order applied to the tail of
    images. Each step swaps two neighbours so the signature flips, and the
    fixed-point count is updated from the two touched positions only.
    """
    size = len(images) - start
    labels = list(range(size))
    slot = list(range(size))
    heading = [-1] * size
    fix = sum(1 for i, img in enumerate(images) if i == img)
    yield SignedPermutation(tuple(images), sign, fix)
    while True:
        mobile = -1
        for lab in range(size - 1, 0, -1):
            nxt = slot[lab] + heading[lab]
            if 0 <= nxt < size and labels[nxt] < lab:
                mobile = lab
                break
        if mobile < 0:
            return
        here = slot[mobile]
        there = here + heading[mobile]
        i, j = start + here, start + there
        fix -= (images[i] == i) + (images[j] == j)
        images[i], images[j] = images[j], images[i]
        fix += (images[i] == i) + (images[j] == j)
        other = labels[there]
        labels[here], labels[there] = other, mobile
        slot[other], slot[mobile] = here, there
        sign = -sign
        for lab in range(mobile + 1, size):
            heading[lab] = -heading[lab]
        yield SignedPermutation(tuple(images), sign, fix)


def enumerate_permutations(
    n: int, cap: int = DEFAULT_CAP
) -> Iterator[SignedPermutation]:
    """Yield the n! permutations of S_n with signature and fixed points.

    The order is deterministic (Steinhaus-Johnson-Trotter).

    Args:
        n: number of permuted points.
        cap: largest n accepted.

    Raises:
        EnumerationCapError: if n exceeds cap.
    """
    _check_cap(n, cap)
    return _adjacent_walk(list(range(n)), 0, 1)


def enumerate_with_first_image(
    n: int, first: int, cap: int = DEFAULT_CAP
) -> Iterator[SignedPermutation]:
    """Yield the (n-1)! permutations of S_n mapping 0 to first.

    The blocks for first = 0..n-1 partition S_n.
    """
    _check_cap(n, cap)
    if not 0 <= first < n:
        raise DomainError("enumerate_with_first_image", f"first={first} not in [0, n)")
    rest = [img for img in range(n) if img != first]
    # [first, 0, 1, ...] has exactly `first` inversions
    sign = -1 if first % 2 else 1
    return _adjacent_walk([first] + rest, 1, sign)


def _partitions(total: int, largest: int) -> Iterator[Tuple[int, ...]]:
    """Partitions of total in parts <= largest, decreasing parts, lex order."""
    if total == 0:
        yield ()
        return
    for first in range(1, min(total, largest) + 1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def enumerate_cycle_classes(n: int) -> Iterator[CycleClass]:
    """Yield one conjugacy class of S_n per integer partition of n.

    Partitions are written with decreasing parts and listed in increasing
    lexicographic order, from (1, ..., 1) to (n,). n = 0 yields the single
    empty class.
    """
    if n < 0:
        raise DomainError("enumerate_cycle_classes", f"n={n} should be >= 0")
    nfact = factorial(n)
    for parts in _partitions(n, n):
        mult = Counter(parts)
        centralizer = 1
        for length, count in mult.items():
            centralizer *= length**count * factorial(count)
        yield CycleClass(
            partition=parts,
            class_size=nfact // centralizer,
            sign=-1 if (n - len(parts)) % 2 else 1,
            fix_count=mult[1],
        )


def _tally(perms: Iterator[SignedPermutation], n: int) -> Tuple[List[int], List[int]]:
    signed = [0] * (n + 1)
    unsigned = [0] * (n + 1)
    for perm in perms:
        signed[perm.fix_count] += perm.sign
        unsigned[perm.fix_count] += 1
    return signed, unsigned


def _bruteforce_profile(n: int, cap: int, jobs: int) -> FixProfile:
    _check_cap(n, cap)
    if jobs <= 1:
        signed, unsigned = _tally(enumerate_permutations(n, cap), n)
    else:
        # exact integer sums, so the reduction order does not matter
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(
                lambda first: _tally(enumerate_with_first_image(n, first, cap), n),
                range(n),
            )
            signed = [0] * (n + 1)
            unsigned = [0] * (n + 1)
            for part_signed, part_unsigned in parts:
                for fix in range(n + 1):
                    signed[fix] += part_signed[fix]
                    unsigned[fix] += part_unsigned[fix]
    return FixProfile(n, tuple(signed), tuple(unsigned))


def _cycleclass_profile(n: int) -> FixProfile:
    signed = [0] * (n + 1)
    unsigned = [0] * (n + 1)
    for cls in enumerate_cycle_classes(n):
        signed[cls.fix_count] += cls.sign * cls.class_size
        unsigned[cls.fix_count] += cls.class_size
    return FixProfile(n, tuple(signed), tuple(unsigned))


@lru_cache(maxsize=None)
def fix_profile(
    n: int, method: str = "cycleclass", cap: int = DEFAULT_CAP, jobs: int = 1
) -> FixProfile:
    """Signed and unsigned fixed-point distribution of S_n.

    Args:
        n: the group order parameter.
        method: ``bruteforce`` (permutation enumeration, n <= cap) or
            ``cycleclass`` (conjugacy classes).
        cap: enumeration cap for the brute-force path.
        jobs: number of threads the brute-force enumeration is split over.

    Returns:
        the fixed-point profile; both methods give identical results.
    """
    if method == "bruteforce":
        return _bruteforce_profile(n, cap, jobs)
    if method == "cycleclass":
        if n < 0:
            raise DomainError("fix_profile", f"n={n} should be >= 0")
        return _cycleclass_profile(n)
    raise DomainError("fix_profile", f"unknown method {method!r}")


def derangement_count(n: int) -> int:
    """Number of fixed-point-free permutations of n points.

    Computed with D_n = (n-1)(D_{n-1} + D_{n-2}), D_0 = 1, D_1 = 0.
    """
    if n < 0:
        raise DomainError("derangement_count", f"n={n} should be >= 0")
    prev, cur = 1, 0
    if n == 0:
        return prev
    for m in range(2, n + 1):
        prev, cur = cur, (m - 1) * (cur + prev)
    return cur


def rencontres(n: int, fix: int) -> int:
    """Number of permutations of n points with exactly fix fixed points."""
    if not 0 <= fix <= n:
        return 0
    return binomial(n, fix) * derangement_count(n - fix)
