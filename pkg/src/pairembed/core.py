"""Universe / partition data model, validation, and instance generators.

A pair of partitions of one universe is the central object of the whole
package. Elements are string tokens; each element belongs to exactly one
block of partition 0 and one block of partition 1, so the pair can also
be read as a 2-regular hypergraph whose hyperedges are the blocks.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import PairValidationError

_TOKEN = re.compile(r"^\S+$")


def _check_token(kind: str, value: str) -> None:
    if not isinstance(value, str) or not _TOKEN.match(value):
        raise ValueError(f"{kind} {value!r} must be a non-empty token without whitespace")


@dataclass(frozen=True, order=True)
class BlockId:
    """Identifier of one block: which partition it belongs to plus a name."""

    partition: int
    name: str

    def __post_init__(self):
        if self.partition not in (0, 1):
            raise ValueError("partition index must be 0 or 1")
        _check_token("block name", self.name)

    def __str__(self) -> str:
        return f"P{self.partition}:{self.name}"


@dataclass(frozen=True)
class Violation:
    """One invariant violation found while validating a candidate pair."""

    kind: str  # missing-assignment | double-assignment | empty-block | unknown-element
    element: str | None = None
    partition: int | None = None
    blocks: tuple[str, ...] = ()

    def __str__(self) -> str:
        parts = [self.kind]
        if self.element is not None:
            parts.append(f"element={self.element}")
        if self.partition is not None:
            parts.append(f"partition={self.partition}")
        if self.blocks:
            parts.append("blocks=" + ",".join(self.blocks))
        return "(" + " ".join(parts) + ")"


@dataclass(frozen=True)
class Partition:
    """Disjoint non-empty blocks covering the universe."""

    index: int
    blocks: Mapping[str, frozenset[str]]  # block name -> elements
    _block_of: Mapping[str, str] = field(repr=False, default=None)

    @property
    def block_names(self) -> list[str]:
        return sorted(self.blocks)

    def block_of(self, element: str) -> BlockId:
        return BlockId(self.index, self._block_of[element])

    def block_ids(self) -> list[BlockId]:
        return [BlockId(self.index, name) for name in self.block_names]

    def elements(self, name: str) -> frozenset[str]:
        return self.blocks[name]


@dataclass(frozen=True)
class PartitionPair:
    """Two partitions of a common universe (a 2-regular hypergraph)."""

    universe: frozenset[str]
    p0: Partition
    p1: Partition

    def partition(self, index: int) -> Partition:
        return self.p0 if index == 0 else self.p1

    def blocks_of(self, element: str) -> tuple[BlockId, BlockId]:
        return (self.p0.block_of(element), self.p1.block_of(element))

    def all_block_ids(self) -> list[BlockId]:
        return self.p0.block_ids() + self.p1.block_ids()

    def block_elements(self, block: BlockId) -> frozenset[str]:
        return self.partition(block.partition).elements(block.name)

    @property
    def n_blocks(self) -> int:
        return len(self.p0.blocks) + len(self.p1.blocks)

    def sorted_elements(self) -> list[str]:
        return sorted(self.universe)


def validate_pair(
    blocks0: Mapping[str, Iterable[str]],
    blocks1: Mapping[str, Iterable[str]],
    universe: Iterable[str] | None = None,
) -> PartitionPair:
    """Check a candidate pair description and build the verified value.

    Every violated invariant is collected (with the offending ids) before
    raising, so a bad input file produces one complete diagnostic.
    """
    raw = {0: {n: list(els) for n, els in blocks0.items()},
           1: {n: list(els) for n, els in blocks1.items()}}
    for side in (0, 1):
        for name, els in raw[side].items():
            _check_token("block name", name)
            for e in els:
                _check_token("element id", e)

    mentioned: set[str] = set()
    for side in (0, 1):
        for els in raw[side].values():
            mentioned.update(els)
    uni = set(universe) if universe is not None else set(mentioned)

    violations: list[Violation] = []
    assignment: dict[int, dict[str, list[str]]] = {0: {}, 1: {}}
    for side in (0, 1):
        seen: dict[str, list[str]] = {}
        for name in sorted(raw[side]):
            els = raw[side][name]
            if not els:
                violations.append(Violation("empty-block", partition=side, blocks=(name,)))
            for e in els:
                seen.setdefault(e, []).append(name)
        for e in sorted(mentioned | uni):
            owners = seen.get(e, [])
            if e not in uni:
                if side == 0:  # report unknown elements once
                    violations.append(Violation("unknown-element", element=e, blocks=tuple(owners)))
                continue
            if not owners:
                violations.append(Violation("missing-assignment", element=e, partition=side))
            elif len(owners) > 1:
                violations.append(
                    Violation("double-assignment", element=e, partition=side, blocks=tuple(owners))
                )
        assignment[side] = seen

    if violations:
        raise PairValidationError(violations)

    def build(side: int) -> Partition:
        blocks = {n: frozenset(els) for n, els in raw[side].items()}
        block_of = {e: owners[0] for e, owners in assignment[side].items()}
        return Partition(side, blocks, block_of)

    return PartitionPair(frozenset(uni), build(0), build(1))


def pair_from_assignments(assignments: Mapping[str, tuple[str, str]]) -> PartitionPair:
    """Build a pair from element -> (block0 name, block1 name)."""
    blocks0: dict[str, list[str]] = {}
    blocks1: dict[str, list[str]] = {}
    for e in sorted(assignments):
        b0, b1 = assignments[e]
        blocks0.setdefault(b0, []).append(e)
        blocks1.setdefault(b1, []).append(e)
    return validate_pair(blocks0, blocks1)


# Generators -----------------------------------------------------------------


def gen_all_pairs_instance(a: int, b: int) -> PartitionPair:
    """Universe {e_i_j}; block A_i collects row i, block B_j column j.

    Every (A_i, B_j) pair shares exactly one element, so the block
    intersection graph is complete bipartite K_{a,b} and the bipartite
    map is K_{a,b} with every edge subdivided once.
    """
    if a < 1 or b < 1:
        raise ValueError("need a >= 1 and b >= 1")
    assignments = {}
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            assignments[f"e_{i}_{j}"] = (f"A{i}", f"B{j}")
    return pair_from_assignments(assignments)


def gen_k5_subdivision_instance() -> PartitionPair:
    """The weakly-but-not-strongly embeddable pair.

    Five 4-element blocks C_1..C_5 in partition 0 and one 2-element block
    D_ij per unordered pair {i, j} in partition 1; the block intersection
    graph is K_5 with each edge subdivided once.
    """
    assignments = {}
    for i in range(1, 6):
        for j in range(i + 1, 6):
            assignments[f"x_{i}{j}_{i}"] = (f"C{i}", f"D{i}{j}")
            assignments[f"x_{i}{j}_{j}"] = (f"C{j}", f"D{i}{j}")
    return pair_from_assignments(assignments)


def gen_random_pair(seed: int, n_elements: int, max_block: int) -> PartitionPair:
    """Reproducible random pair: two independent seeded shuffle-and-chunk passes."""
    if n_elements < 1 or max_block < 1:
        raise ValueError("need n_elements >= 1 and max_block >= 1")
    rng = random.Random(seed)
    elements = [f"u{i}" for i in range(1, n_elements + 1)]

    def chunk(prefix: str) -> dict[str, list[str]]:
        order = elements[:]
        rng.shuffle(order)
        blocks: dict[str, list[str]] = {}
        idx = 0
        while order:
            size = rng.randint(1, max_block)
            blocks[f"{prefix}{idx}"] = order[:size]
            order = order[size:]
            idx += 1
        return blocks

    return validate_pair(chunk("A"), chunk("B"))


# Pair file format -----------------------------------------------------------
#
# One line per element: `element <eid> <block0-name> <block1-name>`.
# Blank lines and `#` comments are ignored; blocks are implied by mention.


def parse_pair_text(text: str) -> PartitionPair:
    assignments: dict[str, tuple[str, str]] = {}
    for lineno, rawline in enumerate(text.splitlines(), start=1):
        line = rawline.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] != "element" or len(parts) != 4:
            raise ValueError(f"line {lineno}: expected 'element <eid> <block0> <block1>'")
        _, eid, b0, b1 = parts
        if eid in assignments:
            raise ValueError(f"line {lineno}: duplicate element {eid!r}")
        assignments[eid] = (b0, b1)
    return pair_from_assignments(assignments)


def write_pair_text(pair: PartitionPair) -> str:
    lines = []
    for e in pair.sorted_elements():
        b0, b1 = pair.blocks_of(e)
        lines.append(f"element {e} {b0.name} {b1.name}")
    return "\n".join(lines) + "\n"
