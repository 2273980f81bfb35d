"""Membership predicates for transformations relative to a set partition.

Three nested families of maps are recognized here.  A map *preserves* the
partition when every block lands inside a single block.  Among those, the
maps whose image meets every block form a subsemigroup, and the invertible
elements of the preserving maps form its group of units.  Several of the
predicates below decide the same set through deliberately independent
routes (definition, induced block-index map, topology, pair relation) so
they can be cross-checked against each other.

Predicates whose very statement requires a preserving map (the character
based ones) raise :class:`NotPreservingError` instead of returning False,
so that equivalence checks compare them only on their common domain.
"""

from __future__ import annotations

from .core import (
    BlockMap,
    BlockMapFamily,
    CharacterMap,
    SetPartition,
    Transformation,
    compose,
)


class NotPreservingError(ValueError):
    """The map does not send every block into a single block."""


class NotInSigmaError(ValueError):
    """The map is outside the image-meets-every-block subsemigroup."""


def _require_same_n(f: Transformation, p: SetPartition) -> None:
    if f.n != p.n:
        raise ValueError(f"ground sets differ: map on {f.n} points, partition of {p.n}")


def preserves(f: Transformation, p: SetPartition) -> bool:
    """True when the image of every block is contained in a single block."""
    _require_same_n(f, p)
    idx = p.block_index
    img = f.images
    for block in p.blocks:
        j = idx[img[block[0]]]
        for x in block:
            if idx[img[x]] != j:
                return False
    return True


def character(f: Transformation, p: SetPartition) -> CharacterMap:
    """The induced map on block indices: i -> j when block i lands in block j."""
    _require_same_n(f, p)
    idx = p.block_index
    img = f.images
    out = []
    for i, block in enumerate(p.blocks):
        j = idx[img[block[0]]]
        for x in block:
            jx = idx[img[x]]
            if jx != j:
                raise NotPreservingError(
                    f"block {i} ({','.join(map(str, block))}) splits across "
                    f"blocks {min(j, jx)} and {max(j, jx)}"
                )
        out.append(j)
    return CharacterMap(tuple(out))


def block_map_family(f: Transformation, p: SetPartition) -> BlockMapFamily:
    """The family of restrictions of f to the blocks, one per block."""
    chi = character(f, p)
    maps = []
    for i, block in enumerate(p.blocks):
        j = chi(i)
        maps.append(
            BlockMap(
                domain_index=i,
                codomain_index=j,
                domain=block,
                codomain=p.blocks[j],
                images=tuple(f.images[x] for x in block),
            )
        )
    return BlockMapFamily(p, tuple(maps))


def in_sigma(f: Transformation, p: SetPartition) -> bool:
    """True when f preserves p and the image of f meets every block."""
    if not preserves(f, p):
        return False
    idx = p.block_index
    hit = {idx[y] for y in f.images}
    return len(hit) == p.m


def sigma_via_character(f: Transformation, p: SetPartition) -> bool:
    """Sigma membership via surjectivity of the induced block-index map."""
    return character(f, p).is_surjective()


def sigma_via_topology(f: Transformation, p: SetPartition) -> bool:
    """Sigma membership via the topology with the blocks as a basis.

    Checks that the preimage of every block is a nonempty union of blocks.
    Open sets are exactly the unions of blocks and preimages commute with
    unions, so checking the basis decides all open sets at once.
    """
    _require_same_n(f, p)
    idx = p.block_index
    img = f.images
    for block in p.blocks:
        members = set(block)
        pre = {x for x in range(f.n) if img[x] in members}
        if not pre:
            return False
        for x in pre:
            for y in p.blocks[idx[x]]:
                if y not in pre:
                    return False
    return True


def is_e_star_preserving(f: Transformation, p: SetPartition) -> bool:
    """True when x, y share a block exactly if their images share a block.

    Implemented as the literal check over all point pairs, independent of
    the character map.
    """
    _require_same_n(f, p)
    idx = p.block_index
    img = f.images
    n = f.n
    for x in range(n):
        for y in range(x + 1, n):
            if (idx[x] == idx[y]) != (idx[img[x]] == idx[img[y]]):
                return False
    return True


def character_injective(f: Transformation, p: SetPartition) -> bool:
    """True when the induced block-index map has no repeated values."""
    return character(f, p).is_injective()


def in_units(f: Transformation, p: SetPartition) -> bool:
    """True when f is invertible within the preserving maps.

    Equivalent criteria: every block restriction is a bijection onto its
    codomain block and the induced block-index map is a bijection, or
    directly, f is a permutation and both f and its inverse preserve p.
    """
    _require_same_n(f, p)
    try:
        family = block_map_family(f, p)
    except NotPreservingError:
        return False
    if not all(bm.is_bijection() for bm in family):
        return False
    return family.character().is_bijective()


def is_idempotent(f: Transformation) -> bool:
    """True when f composed with itself equals f."""
    return compose(f, f) == f


def sigma_idempotent_via_blocks(f: Transformation, p: SetPartition) -> bool:
    """Idempotence of a Sigma member, decided blockwise.

    True exactly when every block restriction is an idempotent selfmap of
    its own block.  Raises :class:`NotInSigmaError` when f is not in Sigma.
    """
    if not in_sigma(f, p):
        raise NotInSigmaError(
            "map is not in Sigma(X, P): it must preserve the partition and "
            "its image must meet every block"
        )
    return all(bm.is_idempotent() for bm in block_map_family(f, p))
