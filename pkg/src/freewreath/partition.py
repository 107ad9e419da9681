"""Partitions of two-row point sets and their category operations.

Conventions, fixed once and used everywhere:

* A partition ``p`` with ``k`` upper and ``l`` lower points lives on the
  ground set {1, ..., k+l}: points 1..k are the upper row read left to right,
  points k+1..k+l are the lower row read left to right.

* Crossings are judged on the boundary circle: the traversal visits the upper
  row left to right, then the lower row right to left (so the wrap gap between
  the last visited point and the first is the *left* edge of the picture, and
  the gap after point k is the right edge).  ``p`` is noncrossing when no two
  blocks interleave in this cyclic order.  Cutting the circle at the left edge
  turns this into the usual linear noncrossing condition, which is what the
  stack test below checks.

* Blocks are stored sorted ascending, and the tuple of blocks is ordered by
  smallest element ("the block containing the smallest uncovered point comes
  first"), so equal partitions compare and hash equal.

Operations: ``tensor`` is horizontal concatenation, ``compose`` is vertical
concatenation (lower row of the top factor glued to the upper row of the
bottom factor) together with the count of closed blocks it produces,
``involute`` turns the picture upside down.  ``join`` is the common coarsening
in the full partition lattice of the ground set, ``refines`` the comparison,
and ``kernel`` the level-set partition of an index tuple.

Partition literals render as ``{1,2|3} (k=0,l=3)`` and the parser accepts the
same grammar with arbitrary whitespace.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache
from itertools import combinations
from typing import Iterable, Iterator, Literal

from .config import check_enum_cap

Block = tuple[int, ...]


def _canonical_blocks(blocks: Iterable[Iterable[int]]) -> tuple[Block, ...]:
    out = []
    for b in blocks:
        t = tuple(sorted(b))
        if not t:
            raise ValueError("empty block")
        out.append(t)
    return tuple(sorted(out, key=lambda b: b[0]))


@dataclass(frozen=True)
class Partition:
    upper: int
    lower: int
    blocks: tuple[Block, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", _canonical_blocks(self.blocks))
        if self.upper < 0 or self.lower < 0:
            raise ValueError("arities must be nonnegative")
        n = self.upper + self.lower
        seen: list[int] = []
        for b in self.blocks:
            seen.extend(b)
        if sorted(seen) != list(range(1, n + 1)):
            raise ValueError(
                f"blocks {self.blocks} do not partition 1..{n} "
                f"(upper={self.upper}, lower={self.lower})"
            )

    @property
    def points(self) -> int:
        return self.upper + self.lower

    def block_count(self) -> int:
        return len(self.blocks)

    def block_of(self, point: int) -> Block:
        for b in self.blocks:
            if point in b:
                return b
        raise ValueError(f"point {point} out of range")

    # -- circular order ----------------------------------------------------

    def traversal(self) -> tuple[int, ...]:
        """Ground points in boundary-circle order (top L-to-R, bottom R-to-L)."""
        ups = tuple(range(1, self.upper + 1))
        lows = tuple(range(self.points, self.upper, -1))
        return ups + lows

    def is_noncrossing(self) -> bool:
        block_id = {}
        for i, b in enumerate(self.blocks):
            for pt in b:
                block_id[pt] = i
        remaining = [len(b) for b in self.blocks]
        stack: list[int] = []
        for pt in self.traversal():
            i = block_id[pt]
            if remaining[i] == len(self.blocks[i]):
                stack.append(i)
            elif not stack or stack[-1] != i:
                return False
            remaining[i] -= 1
            if remaining[i] == 0:
                stack.pop()
        return True

    # -- category operations ----------------------------------------------

    def tensor(self, other: "Partition") -> "Partition":
        """Horizontal concatenation: self on the left, other on the right."""
        k1, l1, k2, l2 = self.upper, self.lower, other.upper, other.lower

        def shift_self(pt: int) -> int:
            return pt if pt <= k1 else pt + k2

        def shift_other(pt: int) -> int:
            return pt + k1 if pt <= k2 else pt + k1 + l1

        blocks = [tuple(shift_self(p) for p in b) for b in self.blocks]
        blocks += [tuple(shift_other(p) for p in b) for b in other.blocks]
        return Partition(k1 + k2, l1 + l2, blocks)

    def compose(self, top: "Partition") -> "ComposeResult":
        """Vertical concatenation with ``top`` above ``self``.

        Requires lower(top) == upper(self); the middle rows are identified
        point by point.  Returns the induced partition on upper(top) and
        lower(self) plus the number of closed blocks (components living
        entirely in the middle), each of which contributes one factor of N on
        the linear-map side.
        """
        if top.lower != self.upper:
            raise ValueError(
                f"cannot compose: top has {top.lower} lower points, "
                f"bottom has {self.upper} upper points"
            )
        m = self.upper
        k, l = top.upper, self.lower
        # union-find over top's points (0-based ids 0..) and self's points
        n_top = top.points
        parent = list(range(n_top + self.points))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> None:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        for b in top.blocks:
            for pt in b[1:]:
                union(b[0] - 1, pt - 1)
        for b in self.blocks:
            for pt in b[1:]:
                union(n_top + b[0] - 1, n_top + pt - 1)
        for j in range(1, m + 1):
            union(top.upper + j - 1, n_top + j - 1)  # top's lower j ~ self's upper j

        # result ground set: top's uppers become 1..k, self's lowers k+1..k+l
        groups: dict[int, list[int]] = {}
        for i in range(k):
            groups.setdefault(find(i), []).append(i + 1)
        for j in range(l):
            groups.setdefault(find(n_top + m + j), []).append(k + j + 1)
        boundary_roots = set(groups)
        middle_roots = set()
        for j in range(m):
            r = find(top.upper + j)
            if r not in boundary_roots:
                middle_roots.add(r)
        result = Partition(k, l, tuple(tuple(b) for b in groups.values()))
        return ComposeResult(result, len(middle_roots))

    def involute(self) -> "Partition":
        """Upside-down reflection: upper and lower rows trade places."""
        k, l = self.upper, self.lower

        def flip(pt: int) -> int:
            return pt + l if pt <= k else pt - k

        return Partition(l, k, [tuple(flip(p) for p in b) for b in self.blocks])

    # -- lattice operations ------------------------------------------------

    def join(self, other: "Partition") -> "Partition":
        """Common coarsening in the partition lattice of the ground set."""
        if (self.upper, self.lower) != (other.upper, other.lower):
            raise ValueError("join requires identical point sets")
        parent = list(range(self.points))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in (self, other):
            for b in p.blocks:
                for pt in b[1:]:
                    ra, rb = find(b[0] - 1), find(pt - 1)
                    if ra != rb:
                        parent[ra] = rb
        groups: dict[int, list[int]] = {}
        for pt in range(self.points):
            groups.setdefault(find(pt), []).append(pt + 1)
        return Partition(self.upper, self.lower, tuple(tuple(b) for b in groups.values()))

    def refines(self, other: "Partition") -> bool:
        """True when every block of self lies inside a block of other."""
        if (self.upper, self.lower) != (other.upper, other.lower):
            raise ValueError("refinement requires identical point sets")
        owner = {}
        for i, b in enumerate(other.blocks):
            for pt in b:
                owner[pt] = i
        return all(len({owner[pt] for pt in b}) == 1 for b in self.blocks)

    # -- rendering ---------------------------------------------------------

    def render(self) -> str:
        inner = "|".join(",".join(str(p) for p in b) for b in self.blocks)
        return f"{{{inner}}} (k={self.upper},l={self.lower})"

    __str__ = render

    def __repr__(self):
        return f"Partition({self.render()})"


@dataclass(frozen=True)
class ComposeResult:
    partition: Partition
    closed_blocks: int


_LITERAL = re.compile(r"^\{(?P<blocks>[^{}]*)\}\(k=(?P<k>\d+),l=(?P<l>\d+)\)$")


def parse_partition(text: str) -> Partition:
    compact = re.sub(r"\s+", "", text)
    m = _LITERAL.match(compact)
    if not m:
        raise ValueError(f"cannot parse {text!r} as a partition literal")
    k, l = int(m.group("k")), int(m.group("l"))
    body = m.group("blocks")
    if body:
        blocks = [tuple(int(x) for x in part.split(",")) for part in body.split("|")]
    else:
        blocks = []
    return Partition(k, l, blocks)


# ---------------------------------------------------------------------------
# constructions


def identity_partition(k: int) -> Partition:
    """The through-strings partition pairing upper i with lower i."""
    return Partition(k, k, [(i, k + i) for i in range(1, k + 1)])


def full_block(k: int, l: int) -> Partition:
    if k + l == 0:
        return Partition(0, 0, [])
    return Partition(k, l, [tuple(range(1, k + l + 1))])


def discrete_partition(k: int, l: int) -> Partition:
    return Partition(k, l, [(i,) for i in range(1, k + l + 1)])


def nested_pairing(k: int) -> Partition:
    """The pairing {i, 2k+1-i} of 2k lower points (fully nested arcs).

    This is the duality partition: its map solves the conjugate equations for
    the identity object tensored k times.
    """
    return Partition(0, 2 * k, [(i, 2 * k + 1 - i) for i in range(1, k + 1)])


def kernel(values: tuple) -> Partition:
    """Level-set partition of an index tuple, as a partition of (0, r)."""
    groups: dict = {}
    for pos, v in enumerate(values, start=1):
        groups.setdefault(v, []).append(pos)
    return Partition(0, len(values), [tuple(g) for g in groups.values()])


# ---------------------------------------------------------------------------
# enumeration


@cache
def _nc_shapes(n: int) -> tuple[tuple[Block, ...], ...]:
    """All noncrossing partitions of the linearly ordered points 0..n-1."""
    if n == 0:
        return ((),)
    out: list[tuple[Block, ...]] = []
    rest = range(1, n)
    for t in range(0, n):
        for chosen in combinations(rest, t):
            first_block = (0,) + chosen
            bounds = list(first_block) + [n]
            gaps = [(bounds[i] + 1, bounds[i + 1]) for i in range(len(first_block))]
            partial: list[tuple[Block, ...]] = [(first_block,)]
            for lo, hi in gaps:
                sub = _nc_shapes(hi - lo)
                partial = [
                    acc + tuple(tuple(x + lo for x in blk) for blk in shape)
                    for acc in partial
                    for shape in sub
                ]
            out.extend(partial)
    return tuple(out)


def _all_shapes(n: int) -> Iterator[tuple[Block, ...]]:
    """All set partitions of 0..n-1 (restricted-growth order)."""
    if n == 0:
        yield ()
        return
    blocks: list[list[int]] = []

    def rec(i: int) -> Iterator[tuple[Block, ...]]:
        if i == n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(0)


def _position_to_point(k: int, l: int):
    def conv(t: int) -> int:
        return t + 1 if t < k else 2 * k + l - t

    return conv


Mode = Literal["noncrossing", "all"]


def enumerate_partitions(
    k: int, l: int, mode: Mode = "noncrossing", cap: int | None = None
) -> tuple[Partition, ...]:
    """All partitions with k upper and l lower points, canonically ordered.

    ``mode="noncrossing"`` generates the noncrossing ones directly in the
    boundary-circle order (no filtering); ``mode="all"`` generates every set
    partition.  The result is sorted by the canonical block-tuple key.  The
    ground-point cap (default 14) guards against runaway enumeration.
    """
    n = k + l
    check_enum_cap(n, cap)
    conv = _position_to_point(k, l)
    if mode == "noncrossing":
        shapes: Iterable[tuple[Block, ...]] = _nc_shapes(n)
    elif mode == "all":
        shapes = _all_shapes(n)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    parts = [
        Partition(k, l, [tuple(conv(t) for t in blk) for blk in shape])
        for shape in shapes
    ]
    parts.sort(key=lambda p: p.blocks)
    return tuple(parts)
