"""Brute-force enumeration of the non-crossing posets and order-theoretic
oracles (Hasse diagram, Moebius function, multichain counts, maximal chains).

Everything here is exact and desk-scale by design: the interval below the
boundary permutation is produced either by filtering all of B_n (small n)
or by a breadth-first closure under the n^2 reflections (larger n), and the
order matrix is materialized on first use.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .partition import BPartition, ClassicalPartition, adjusted_orbits
from .signed_perm import (
    AnnulusShape,
    SignedPermutation,
    _compose,
    _inverse,
    _noninvariant_orbits,
    boundary_permutation,
)

DESK_BOUND_TWO_CIRCLES = 8  # max p+q (also max n for one circle)
DESK_BOUND_MANY_CIRCLES = 6  # max sum of sizes for three or more circles
_FILTER_MAX_N = 6  # scan all of B_n up to here, BFS beyond


class FinitePoset:
    """Explicit finite poset with a rank function.

    The order matrix is built lazily: size queries and rank vectors never
    touch it, while Hasse/Moebius/chain oracles materialize it once.
    """

    def __init__(
        self,
        elements: Sequence,
        ranks: Sequence[int],
        le: Callable | None = None,
        masks: Sequence[int] | None = None,
    ):
        if len(elements) != len(ranks):
            raise ValueError("one rank per element required")
        if le is None and masks is None:
            raise ValueError("an order test (le or masks) is required")
        self.elements = tuple(elements)
        self.ranks = tuple(ranks)
        self._le = le
        self._masks = tuple(masks) if masks is not None else None
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate elements")
        self._down: list[int] | None = None
        self._covers: list[tuple[int, int]] | None = None

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def index(self, x) -> int:
        return self._index[x]

    def _down_rows(self) -> list[int]:
        """Row i is the bitmask of indices j with elements[j] <= elements[i]."""
        if self._down is None:
            n = len(self.elements)
            if self._masks is not None:
                masks = self._masks
                down = []
                for i in range(n):
                    mi = masks[i]
                    row = 0
                    for j in range(n):
                        if masks[j] & ~mi == 0:
                            row |= 1 << j
                    down.append(row)
            else:
                le = self._le
                els = self.elements
                down = []
                for i in range(n):
                    row = 0
                    for j in range(n):
                        if le(els[j], els[i]):
                            row |= 1 << j
                    down.append(row)
            self._down = down
        return self._down

    def le(self, x, y) -> bool:
        i, j = self._index[x], self._index[y]
        return (self._down_rows()[j] >> i) & 1 == 1

    def bottom(self):
        low = min(self.ranks)
        idx = [i for i, r in enumerate(self.ranks) if r == low]
        if len(idx) != 1:
            raise ValueError("no unique minimal-rank element")
        return self.elements[idx[0]]

    def top(self):
        high = max(self.ranks)
        idx = [i for i, r in enumerate(self.ranks) if r == high]
        if len(idx) != 1:
            raise ValueError("no unique maximal-rank element")
        return self.elements[idx[0]]

    def rank_vector(self) -> tuple[int, ...]:
        """Element counts per rank, from rank 0 upward."""
        high = max(self.ranks)
        counts = [0] * (high + 1)
        for r in self.ranks:
            counts[r] += 1
        return tuple(counts)

    def _cover_pairs(self) -> list[tuple[int, int]]:
        if self._covers is None:
            down = self._down_rows()
            n = len(self.elements)
            up = [0] * n
            for i in range(n):
                row = down[i]
                while row:
                    low = row & -row
                    up[low.bit_length() - 1] |= 1 << i
                    row ^= low
            covers = []
            for j in range(n):
                strict_down = down[j] & ~(1 << j)
                row = strict_down
                while row:
                    low = row & -row
                    i = low.bit_length() - 1
                    row ^= low
                    between = up[i] & strict_down & ~(1 << i)
                    if between == 0:
                        covers.append((i, j))
            self._covers = covers
        return self._covers

    def hasse_edges(self) -> list[tuple]:
        """Cover relations as (lower, upper) element pairs."""
        return [
            (self.elements[i], self.elements[j]) for i, j in self._cover_pairs()
        ]

    def mobius(self, x, y) -> int:
        """Moebius function by the interval recursion."""
        down = self._down_rows()
        ix, iy = self._index[x], self._index[y]
        if (down[iy] >> ix) & 1 == 0:
            raise ValueError("mobius needs x <= y")
        up_x = 1 << ix
        n = len(self.elements)
        for j in range(n):
            if (down[j] >> ix) & 1:
                up_x |= 1 << j
        interval = [j for j in range(n) if (down[iy] >> j) & 1 and (up_x >> j) & 1]
        # downset size is a linear extension even if ranks were not
        interval.sort(key=lambda j: down[j].bit_count())
        mu = {ix: 1}
        for j in interval:
            if j == ix:
                continue
            below = down[j]
            total = 0
            for w in interval:
                if w != j and (below >> w) & 1 and w in mu:
                    total += mu[w]
            mu[j] = -total
        return mu[iy]

    def zeta(self, m: int) -> int:
        """Number of weakly increasing (m-1)-tuples; zeta(2) == len(self)."""
        if m < 2:
            raise ValueError("multichain counts start at m = 2")
        down = self._down_rows()
        n = len(self.elements)
        down_lists = []
        for i in range(n):
            row = down[i]
            lst = []
            while row:
                low = row & -row
                lst.append(low.bit_length() - 1)
                row ^= low
            down_lists.append(lst)
        counts = [1] * n
        for _ in range(m - 2):
            counts = [sum(counts[j] for j in down_lists[i]) for i in range(n)]
        return sum(counts)

    def zeta_interpolated(self, m: int) -> int:
        """Evaluate the multichain-count polynomial at any integer m.

        The polynomial has degree max rank, so max rank + 1 sample points
        pin it down; Lagrange evaluation stays in exact rationals.
        """
        degree = max(self.ranks)
        points = [(k, self.zeta(k)) for k in range(2, degree + 3)]
        total = Fraction(0)
        for i, (xi, yi) in enumerate(points):
            term = Fraction(yi)
            for j, (xj, _) in enumerate(points):
                if i != j:
                    term *= Fraction(m - xj, xi - xj)
            total += term
        if total.denominator != 1:
            raise ArithmeticError("interpolation did not land on an integer")
        return int(total)

    def maximal_chains(self) -> int:
        """Number of maximal chains from the unique bottom to the unique top."""
        bottom = self._index[self.bottom()]
        top = self._index[self.top()]
        down = self._down_rows()
        ways = [0] * len(self.elements)
        ways[bottom] = 1
        order = sorted(range(len(self.elements)), key=lambda i: down[i].bit_count())
        covers_from: dict[int, list[int]] = {}
        for i, j in self._cover_pairs():
            covers_from.setdefault(i, []).append(j)
        for i in order:
            if ways[i]:
                for j in covers_from.get(i, ()):
                    ways[j] += ways[i]
        return ways[top]

    def to_dot(self, name: str = "poset") -> str:
        """Graphviz source: one node per element, one edge per cover,
        elements of equal rank clustered on one level."""
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
        for i, e in enumerate(self.elements):
            label = str(e).replace('"', '\\"')
            lines.append(f'  n{i} [label="{label}"];')
        high = max(self.ranks)
        for r in range(high + 1):
            same = [f"n{i}" for i, rk in enumerate(self.ranks) if rk == r]
            if same:
                lines.append("  { rank=same; " + "; ".join(same) + "; }")
        for i, j in self._cover_pairs():
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines)


def _gamma_image(shape: AnnulusShape) -> tuple[int, ...]:
    return boundary_permutation(shape).image


@lru_cache(maxsize=None)
def _all_b_images(n: int) -> tuple[tuple[int, ...], ...]:
    """Every element of B_n as an image tuple (2^n n! of them)."""
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            out.append(tuple(p * s for p, s in zip(perm, signs)))
    return tuple(out)


def _reflection_images(n: int) -> list[tuple[int, ...]]:
    """The n^2 reflections of B_n as image tuples."""
    ident = tuple(range(1, n + 1))
    out = []
    for i in range(1, n + 1):
        img = list(ident)
        img[i - 1] = -i
        out.append(tuple(img))
    for i, j in itertools.combinations(range(1, n + 1), 2):
        img = list(ident)
        img[i - 1], img[j - 1] = j, i
        out.append(tuple(img))
        img = list(ident)
        img[i - 1], img[j - 1] = -j, -i
        out.append(tuple(img))
    return out


def _le_to(image: tuple[int, ...], target: tuple[int, ...], target_nonii: int) -> bool:
    n = len(image)
    rest = _compose(_inverse(image), target)
    return (
        _noninvariant_orbits(image) + _noninvariant_orbits(rest) - target_nonii
        == 2 * n
    )


@lru_cache(maxsize=None)
def _interval_images(gamma: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """All image tuples t with t <= gamma in absolute order."""
    n = len(gamma)
    gamma_nonii = _noninvariant_orbits(gamma)
    if n <= _FILTER_MAX_N:
        found = [
            img for img in _all_b_images(n) if _le_to(img, gamma, gamma_nonii)
        ]
    else:
        reflections = _reflection_images(n)
        ident = tuple(range(1, n + 1))
        seen = {ident}
        frontier = [ident]
        while frontier:
            new: list[tuple[int, ...]] = []
            for img in frontier:
                for r in reflections:
                    cand = _compose(img, r)
                    if cand not in seen and _le_to(cand, gamma, gamma_nonii):
                        seen.add(cand)
                        new.append(cand)
            frontier = new
        found = list(seen)
    found.sort()
    return tuple(found)


def interval_perms(bound: SignedPermutation) -> list[SignedPermutation]:
    """All permutations below bound in absolute order, sorted by image."""
    return [SignedPermutation(img) for img in _interval_images(bound.image)]


def _check_desk_bound(shape: AnnulusShape) -> None:
    limit = DESK_BOUND_TWO_CIRCLES if shape.k <= 2 else DESK_BOUND_MANY_CIRCLES
    if shape.n > limit:
        raise ValueError(
            f"desk bound exceeded: total size {shape.n} > {limit} for {shape}"
        )


@lru_cache(maxsize=None)
def _poset_for_sizes(sizes: tuple[int, ...]) -> FinitePoset:
    shape = AnnulusShape(sizes)
    _check_desk_bound(shape)
    partitions = []
    seen = set()
    for img in _interval_images(_gamma_image(shape)):
        pi = adjusted_orbits(SignedPermutation(img))
        if pi not in seen:
            seen.add(pi)
            partitions.append(pi)
    partitions.sort(key=lambda pi: pi.blocks)
    return FinitePoset(
        partitions,
        [pi.rank() for pi in partitions],
        masks=[pi.pair_mask for pi in partitions],
    )


def nc_b_multi(sizes: Iterable[int]) -> FinitePoset:
    """The poset of adjusted orbit partitions below the boundary permutation."""
    return _poset_for_sizes(AnnulusShape(sizes).sizes)


def nc_b_annulus(p: int, q: int) -> FinitePoset:
    """Two-circle poset on 2(p+q) points."""
    return nc_b_multi((p, q))


def nc_b_disc(n: int) -> FinitePoset:
    """One-circle poset on 2n points."""
    return nc_b_multi((n,))


def _set_partitions(n: int):
    """All set partitions of {1..n} as lists of lists."""
    if n == 0:
        yield []
        return
    for smaller in _set_partitions(n - 1):
        for i in range(len(smaller)):
            yield smaller[:i] + [smaller[i] + [n]] + smaller[i + 1 :]
        yield smaller + [[n]]


@lru_cache(maxsize=None)
def nc_a(n: int) -> FinitePoset:
    """Non-crossing partitions of {1..n} under refinement."""
    if not 1 <= n <= DESK_BOUND_TWO_CIRCLES:
        raise ValueError(f"desk bound exceeded for one-circle size {n}")
    partitions = [
        cp
        for blocks in _set_partitions(n)
        if (cp := ClassicalPartition(n, blocks)).is_noncrossing()
    ]
    partitions.sort(key=lambda cp: cp.blocks)
    return FinitePoset(
        partitions,
        [cp.rank() for cp in partitions],
        masks=[cp.pair_mask for cp in partitions],
    )


@lru_cache(maxsize=None)
def _inverse_table(sizes: tuple[int, ...]) -> dict:
    shape = AnnulusShape(sizes)
    _check_desk_bound(shape)
    table = {}
    for img in _interval_images(_gamma_image(shape)):
        t = SignedPermutation(img)
        table[adjusted_orbits(t)] = t
    return table


def adjusted_orbits_inverse(
    partition: BPartition, shape: AnnulusShape
) -> SignedPermutation:
    """The unique permutation below the boundary with the given adjusted orbits."""
    try:
        return _inverse_table(shape.sizes)[partition]
    except KeyError:
        raise ValueError(
            f"{partition} is not in the poset of shape {shape}"
        ) from None
