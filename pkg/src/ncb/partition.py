"""Partitions of {-n..-1, 1..n} closed under negation, and their statistics.

A partition here always satisfies: the negative of every block is a block,
and at most one block is its own negative (the zero-block).  The order is
reverse refinement: pi <= rho when every block of pi sits inside a block
of rho.
"""

from __future__ import annotations

import json
from functools import cached_property
from typing import Iterable, NamedTuple

from .signed_perm import AnnulusShape, SignedPermutation, boundary_permutation


def _element_key(x: int) -> tuple[int, bool]:
    return (abs(x), x < 0)


class BPartition:
    """Negation-closed partition of {-n..-1, 1..n} in canonical form.

    Blocks are stored sorted: elements by (absolute value, sign with the
    positive one first), blocks by their element keys.
    """

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        canon = []
        seen: set[int] = set()
        for block in blocks:
            block = tuple(sorted(set(block), key=_element_key))
            if not block:
                raise ValueError("empty block")
            for x in block:
                if x == 0 or abs(x) > n or x in seen:
                    raise ValueError(f"bad or repeated element {x} for n={n}")
                seen.add(x)
            canon.append(block)
        if len(seen) != 2 * n:
            raise ValueError(f"blocks do not cover -{n}..-1, 1..{n}")
        canon.sort(key=lambda b: tuple(_element_key(x) for x in b))
        block_of = {}
        for i, block in enumerate(canon):
            for x in block:
                block_of[x] = i
        invariant = 0
        for block in canon:
            mirror = tuple(sorted((-x for x in block), key=_element_key))
            if mirror == block:
                invariant += 1
            elif block_of.get(mirror[0]) is None or canon[block_of[mirror[0]]] != mirror:
                raise ValueError(f"negation of block {block} is not a block")
        if invariant > 1:
            raise ValueError("more than one inversion-invariant block")
        self.n = n
        self.blocks = tuple(canon)
        self._block_of = block_of

    @classmethod
    def singletons(cls, n: int) -> "BPartition":
        return cls(n, ([x] for x in range(-n, n + 1) if x != 0))

    @classmethod
    def from_dict(cls, data: dict) -> "BPartition":
        return cls(data["n"], data["blocks"])

    @classmethod
    def from_json(cls, text: str) -> "BPartition":
        return cls.from_dict(json.loads(text))

    def to_dict(self) -> dict:
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def block_containing(self, x: int) -> tuple[int, ...]:
        return self.blocks[self._block_of[x]]

    def zero_block(self) -> tuple[int, ...] | None:
        """The unique block equal to its own negative, if present."""
        for block in self.blocks:
            if -block[0] in block:
                return block
        return None

    def rank(self) -> int:
        """n minus half the number of non-invariant blocks."""
        noninv = len(self.blocks) - (1 if self.zero_block() is not None else 0)
        return self.n - noninv // 2

    @cached_property
    def pair_mask(self) -> int:
        """Bitmask of the same-block relation, for fast refinement tests."""
        n = self.n
        mask = 0
        for block in self.blocks:
            bits = 0
            ids = [x - 1 if x > 0 else n - x - 1 for x in block]
            for i in ids:
                bits |= 1 << i
            for i in ids:
                mask |= bits << (i * 2 * n)
        return mask

    def le(self, other: "BPartition") -> bool:
        """Reverse refinement: every block of self lies inside a block of other."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return self.pair_mask & ~other.pair_mask == 0

    def block_string(self) -> str:
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)

    def __eq__(self, other):
        return (
            isinstance(other, BPartition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __str__(self):
        return self.block_string()

    def __repr__(self):
        return f"BPartition({self.n}, {[list(b) for b in self.blocks]})"


class ClassicalPartition:
    """Partition of {1..n} in canonical form (used for the one-circle story)."""

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        canon = []
        seen: set[int] = set()
        for block in blocks:
            block = tuple(sorted(set(block)))
            if not block:
                raise ValueError("empty block")
            for x in block:
                if not 1 <= x <= n or x in seen:
                    raise ValueError(f"bad or repeated element {x} for n={n}")
                seen.add(x)
            canon.append(block)
        if len(seen) != n:
            raise ValueError(f"blocks do not cover 1..{n}")
        canon.sort()
        self.n = n
        self.blocks = tuple(canon)

    def rank(self) -> int:
        return self.n - len(self.blocks)

    @cached_property
    def pair_mask(self) -> int:
        mask = 0
        for block in self.blocks:
            bits = 0
            for x in block:
                bits |= 1 << (x - 1)
            for x in block:
                mask |= bits << ((x - 1) * self.n)
        return mask

    def le(self, other: "ClassicalPartition") -> bool:
        if self.n != other.n:
            raise ValueError("size mismatch")
        return self.pair_mask & ~other.pair_mask == 0

    def is_noncrossing(self) -> bool:
        """No a < b < c < d with {a, c} and {b, d} in different blocks."""
        block_of = {}
        for i, block in enumerate(self.blocks):
            for x in block:
                block_of[x] = i
        open_blocks: list[int] = []
        for x in range(1, self.n + 1):
            b = block_of[x]
            while open_blocks and open_blocks[-1] == b:
                open_blocks.pop()
            if b in open_blocks:
                return False
            if x != max(self.blocks[b]):
                open_blocks.append(b)
        return True

    def block_string(self) -> str:
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)

    def __eq__(self, other):
        return (
            isinstance(other, ClassicalPartition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __str__(self):
        return self.block_string()

    def __repr__(self):
        return f"ClassicalPartition({self.n}, {[list(b) for b in self.blocks]})"


class PairStats(NamedTuple):
    """Counts of block pairs {A, -A} by how they meet the two circles."""

    connecting: int
    exterior: int
    interior: int


def adjusted_orbits(perm: SignedPermutation) -> BPartition:
    """Orbit partition of perm with all inversion-invariant orbits merged."""
    invariant: list[int] = []
    blocks: list[list[int]] = []
    for orbit in perm.orbits():
        if -orbit[0] in orbit:
            invariant.extend(orbit)
        else:
            blocks.append(orbit)
    if invariant:
        blocks.append(invariant)
    return BPartition(perm.n, blocks)


def pair_stats(partition: BPartition, shape: AnnulusShape) -> PairStats:
    """Classify non-invariant block pairs of a two-circle partition."""
    if shape.k != 2:
        raise ValueError("pair statistics need a two-circle shape")
    if shape.n != partition.n:
        raise ValueError("shape size does not match the partition")
    p = shape.p
    connecting = exterior = interior = 0
    for block in partition.blocks:
        if -block[0] in block:
            continue  # the zero-block is not counted
        outer = any(abs(x) <= p for x in block)
        inner = any(abs(x) > p for x in block)
        if outer and inner:
            connecting += 1
        elif outer:
            exterior += 1
        else:
            interior += 1
    assert connecting % 2 == 0 and exterior % 2 == 0 and interior % 2 == 0
    return PairStats(connecting // 2, exterior // 2, interior // 2)


def connectivity(partition: BPartition, shape: AnnulusShape) -> int:
    """Number of block pairs {A, -A} meeting both circles."""
    return pair_stats(partition, shape).connecting


def abs_map(partition: BPartition) -> ClassicalPartition:
    """Forget signs: blocks A and -A collapse to the block |A| of {1..n}."""
    blocks = {tuple(sorted({abs(x) for x in block})) for block in partition.blocks}
    return ClassicalPartition(partition.n, blocks)


def kreweras(partition: BPartition, shape: AnnulusShape) -> BPartition:
    """Complement within the shape's poset, via the permutation preimage."""
    from .enumeration import adjusted_orbits_inverse

    t = adjusted_orbits_inverse(partition, shape)
    return adjusted_orbits(t.inverse() * boundary_permutation(shape))


def meet_q1(a: BPartition, b: BPartition, shape: AnnulusShape) -> BPartition:
    """Lattice meet by blockwise intersection; valid when the inner circle
    carries a single positive label."""
    if shape.k != 2 or shape.q != 1:
        raise ValueError("intersection meet needs shape (p, 1)")
    if a.n != shape.n or b.n != shape.n:
        raise ValueError("shape size does not match the partitions")
    blocks = []
    for x in a.blocks:
        sx = set(x)
        for y in b.blocks:
            common = sx.intersection(y)
            if common:
                blocks.append(common)
    return BPartition(a.n, blocks)
