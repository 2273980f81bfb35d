"""Exhaustive generators for the semigroups attached to a set partition.

Every generator yields transformations in lexicographic order of their
image tables, whatever the strategy, so different strategies can be
compared element by element.  Two strategies exist throughout:

* ``brute``: run through all n**n image tables and keep the members.
* ``constructive``: assemble members blockwise (each preserving map is a
  free choice, per block, of a codomain block and a map into it), never
  touching a non-member.

A work guard protects against accidentally enormous enumerations; it
bounds the number of candidate maps a call may visit (all n**n tables for
``brute``, the exact member count for ``constructive``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import factorial
from typing import Iterator

from .core import (
    DEFAULT_GUARD,
    CharacterMap,
    SetPartition,
    Transformation,
    check_guard,
    profile_of,
)
from .counting import (
    count_sigma_grouped,
    count_sigma_idempotents,
    count_t,
    count_units,
)
from .membership import in_sigma, in_units, is_idempotent

STRATEGIES = ("brute", "constructive")


@dataclass
class Enumeration:
    """A materialized enumeration, possibly cut off at a requested limit."""

    maps: list[Transformation] = field(default_factory=list)
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.maps)

    def __iter__(self) -> Iterator[Transformation]:
        return iter(self.maps)

    def __getitem__(self, i: int) -> Transformation:
        return self.maps[i]


@dataclass(frozen=True)
class ChiClass:
    """One congruence class of Sigma under equal character maps."""

    character: CharacterMap
    size: int
    representative: Transformation


def _check_strategy(strategy: str) -> None:
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}, expected one of {STRATEGIES}")


def _brute_preserving(p: SetPartition) -> Iterator[Transformation]:
    n = p.n
    blocks = p.blocks
    idx = p.block_index
    for images in itertools.product(range(n), repeat=n):
        ok = True
        for block in blocks:
            j = idx[images[block[0]]]
            for x in block:
                if idx[images[x]] != j:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield Transformation(images)


def _assemble_preserving(p: SetPartition, distinct_codomains: bool) -> Iterator[Transformation]:
    """Depth-first blockwise assembly, in lexicographic image-table order.

    The first point of each block picks any image, fixing the codomain
    block; later points of the block stay inside that codomain.  With
    ``distinct_codomains`` the codomain choice must be injective across
    blocks, which assembles exactly the maps whose block-index map is a
    bijection.
    """
    n = p.n
    blocks = p.blocks
    idx = p.block_index
    is_first = [False] * n
    for block in blocks:
        is_first[block[0]] = True
    images = [0] * n
    chosen = [-1] * p.m
    taken = [False] * p.m

    def rec(x: int) -> Iterator[Transformation]:
        if x == n:
            yield Transformation(tuple(images))
            return
        b = idx[x]
        if is_first[x]:
            for v in range(n):
                j = idx[v]
                if distinct_codomains and taken[j]:
                    continue
                chosen[b] = j
                taken[j] = True
                images[x] = v
                yield from rec(x + 1)
                taken[j] = False
        else:
            for v in blocks[chosen[b]]:
                images[x] = v
                yield from rec(x + 1)

    return rec(0)


def iter_t(
    p: SetPartition, strategy: str = "constructive", guard: int = DEFAULT_GUARD
) -> Iterator[Transformation]:
    """All maps sending every block into a block, lexicographically."""
    _check_strategy(strategy)
    if strategy == "brute":
        check_guard(p.n**p.n, guard, "brute-force candidate maps")
        return _brute_preserving(p)
    check_guard(count_t(profile_of(p)), guard, "preserving maps")
    return _assemble_preserving(p, distinct_codomains=False)


def iter_sigma(
    p: SetPartition, strategy: str = "constructive", guard: int = DEFAULT_GUARD
) -> Iterator[Transformation]:
    """All preserving maps whose image meets every block, lexicographically."""
    _check_strategy(strategy)
    if strategy == "brute":
        check_guard(p.n**p.n, guard, "brute-force candidate maps")
        return (f for f in _brute_preserving(p) if in_sigma(f, p))
    check_guard(count_sigma_grouped(profile_of(p), guard), guard, "Sigma members")
    return _assemble_preserving(p, distinct_codomains=True)


def iter_units(
    p: SetPartition, strategy: str = "constructive", guard: int = DEFAULT_GUARD
) -> Iterator[Transformation]:
    """All units among the preserving maps, lexicographically."""
    _check_strategy(strategy)
    if strategy == "brute":
        check_guard(p.n**p.n, guard, "brute-force candidate maps")
        return (f for f in _brute_preserving(p) if in_units(f, p))
    check_guard(count_units(profile_of(p)), guard, "units")
    return iter(_assemble_units(p))


def _assemble_units(p: SetPartition) -> list[Transformation]:
    """Size-respecting block permutation, then a bijection per block."""
    blocks = p.blocks
    by_size: dict[int, list[int]] = {}
    for i, block in enumerate(blocks):
        by_size.setdefault(len(block), []).append(i)
    classes = list(by_size.values())
    out: list[Transformation] = []
    for targets in itertools.product(*(itertools.permutations(c) for c in classes)):
        phi = {}
        for cls, tgt in zip(classes, targets):
            for i, j in zip(cls, tgt):
                phi[i] = j
        pools = [list(itertools.permutations(blocks[phi[i]])) for i in range(p.m)]
        for assignment in itertools.product(*pools):
            images = [0] * p.n
            for block, values in zip(blocks, assignment):
                for x, y in zip(block, values):
                    images[x] = y
            out.append(Transformation(tuple(images)))
    out.sort()
    return out


def iter_idempotents(
    p: SetPartition,
    ambient: str = "sigma",
    strategy: str = "constructive",
    guard: int = DEFAULT_GUARD,
) -> Iterator[Transformation]:
    """Idempotents of the chosen ambient semigroup, lexicographically.

    ``ambient="t"`` filters the full enumeration of preserving maps, since
    no blockwise assembly is available there.  ``ambient="sigma"`` has a
    constructive route: an independent idempotent selfmap per block.
    """
    _check_strategy(strategy)
    if ambient == "t":
        return (f for f in iter_t(p, strategy=strategy, guard=guard) if is_idempotent(f))
    if ambient != "sigma":
        raise ValueError(f"unknown ambient {ambient!r}, expected 't' or 'sigma'")
    if strategy == "brute":
        return (f for f in iter_sigma(p, strategy="brute", guard=guard) if is_idempotent(f))
    profile = profile_of(p)
    work = sum(size**size for size, _ in profile.entries) + count_sigma_idempotents(profile)
    check_guard(work, guard, "idempotent assembly")
    return iter(_assemble_sigma_idempotents(p))


def _idempotent_selfmaps(size: int) -> list[tuple[int, ...]]:
    """All idempotent selfmaps on {0..size-1}, by literal filtering."""
    return [
        t
        for t in itertools.product(range(size), repeat=size)
        if all(t[t[x]] == t[x] for x in range(size))
    ]


def _assemble_sigma_idempotents(p: SetPartition) -> list[Transformation]:
    pools_by_size = {s: _idempotent_selfmaps(s) for s in set(p.sizes)}
    pools = [
        [tuple(block[v] for v in t) for t in pools_by_size[len(block)]]
        for block in p.blocks
    ]
    out: list[Transformation] = []
    for assignment in itertools.product(*pools):
        images = [0] * p.n
        for block, values in zip(p.blocks, assignment):
            for x, y in zip(block, values):
                images[x] = y
        out.append(Transformation(tuple(images)))
    out.sort()
    return out


def _collect(stream: Iterator[Transformation], limit: int | None) -> Enumeration:
    if limit is None:
        return Enumeration(list(stream), False)
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    maps = list(itertools.islice(stream, limit + 1))
    if len(maps) > limit:
        return Enumeration(maps[:limit], True)
    return Enumeration(maps, False)


def enumerate_t(
    p: SetPartition,
    strategy: str = "constructive",
    limit: int | None = None,
    guard: int = DEFAULT_GUARD,
) -> Enumeration:
    return _collect(iter_t(p, strategy, guard), limit)


def enumerate_sigma(
    p: SetPartition,
    strategy: str = "constructive",
    limit: int | None = None,
    guard: int = DEFAULT_GUARD,
) -> Enumeration:
    return _collect(iter_sigma(p, strategy, guard), limit)


def enumerate_units(
    p: SetPartition,
    strategy: str = "constructive",
    limit: int | None = None,
    guard: int = DEFAULT_GUARD,
) -> Enumeration:
    return _collect(iter_units(p, strategy, guard), limit)


def enumerate_idempotents(
    p: SetPartition,
    ambient: str = "sigma",
    strategy: str = "constructive",
    limit: int | None = None,
    guard: int = DEFAULT_GUARD,
) -> Enumeration:
    return _collect(iter_idempotents(p, ambient, strategy, guard), limit)


def chi_classes(p: SetPartition, guard: int = DEFAULT_GUARD) -> list[ChiClass]:
    """The classes of Sigma under equal character maps.

    On a finite set the character of a Sigma member is a bijection, so
    there is exactly one class per permutation of the block indices, of
    size ``prod(|X_phi(i)| ** |X_i|)``.  Classes come in lexicographic
    order of their characters; the representative is the least member,
    sending each block constantly to the minimum of its codomain block.
    """
    m = p.m
    check_guard(factorial(m), guard, "character classes")
    sizes = p.sizes
    out: list[ChiClass] = []
    for phi in itertools.permutations(range(m)):
        size = 1
        for i, j in enumerate(phi):
            size *= sizes[j] ** sizes[i]
        images = [0] * p.n
        for i, j in enumerate(phi):
            target = p.blocks[j][0]
            for x in p.blocks[i]:
                images[x] = target
        out.append(ChiClass(CharacterMap(phi), size, Transformation(tuple(images))))
    return out
