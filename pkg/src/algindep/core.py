"""Finite first-order structures over a shared signature.

Universes are always 0..size-1.  Operation tables are flat tuples, row-major
over argument tuples in lexicographic order, so ``table[flat_index(n, args)]``
is the value of the operation on ``args``.  Relations are frozensets of
argument tuples.  External element names live in an optional label table that
no algorithm ever reads.

Every type here is immutable after construction: values can be shared between
threads, memoized, and used as dict keys.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional


class InputError(ValueError):
    """An argument violates an operation's precondition."""


class SizeLimitExceeded(RuntimeError):
    """An exhaustive computation would exceed its configured size bound."""


def flat_index(size: int, args: Iterable[int]) -> int:
    """Row-major index of an argument tuple in a flat operation table."""
    idx = 0
    for a in args:
        idx = idx * size + a
    return idx


@dataclass(frozen=True)
class Signature:
    """Operation and relation symbols with arities; the shared similarity type."""

    op_symbols: tuple[tuple[str, int], ...] = ()
    rel_symbols: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        names = [n for n, _ in self.op_symbols] + [n for n, _ in self.rel_symbols]
        if len(names) != len(set(names)):
            raise InputError("duplicate symbol name in signature")
        for name, ar in self.op_symbols:
            if ar < 0:
                raise InputError(f"operation symbol {name!r} has negative arity")
        for name, ar in self.rel_symbols:
            if ar < 1:
                raise InputError(f"relation symbol {name!r} must have arity >= 1")

    def op_names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.op_symbols)

    def rel_names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.rel_symbols)


@dataclass(frozen=True)
class FiniteStructure:
    """A finite structure: total operation tables plus relation tuple sets.

    ``op_tables[i]`` and ``rel_tables[i]`` are aligned with the signature's
    symbol lists.  Labels are display-only and excluded from equality.
    """

    sig: Signature
    size: int
    op_tables: tuple[tuple[int, ...], ...] = ()
    rel_tables: tuple[frozenset, ...] = ()
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def universe(self) -> range:
        return range(self.size)

    def op_index(self, name: str) -> int:
        for i, (n, _) in enumerate(self.sig.op_symbols):
            if n == name:
                return i
        raise InputError(f"unknown operation symbol {name!r}")

    def rel_index(self, name: str) -> int:
        for i, (n, _) in enumerate(self.sig.rel_symbols):
            if n == name:
                return i
        raise InputError(f"unknown relation symbol {name!r}")

    def op_table(self, name: str) -> tuple[int, ...]:
        return self.op_tables[self.op_index(name)]

    def rel_table(self, name: str) -> frozenset:
        return self.rel_tables[self.rel_index(name)]

    def op(self, name: str, *args: int) -> int:
        """Apply one operation; convenience accessor, not for hot loops."""
        return self.op_table(name)[flat_index(self.size, args)]

    def constants(self) -> list[int]:
        """Values of all arity-0 operation symbols."""
        return [
            self.op_tables[i][0]
            for i, (_, ar) in enumerate(self.sig.op_symbols)
            if ar == 0
        ]

    def op_views(self) -> list[tuple[str, int, tuple[int, ...]]]:
        """(name, arity, table) triples, in signature order."""
        return [
            (name, ar, self.op_tables[i])
            for i, (name, ar) in enumerate(self.sig.op_symbols)
        ]

    def rel_views(self) -> list[tuple[str, int, frozenset]]:
        return [
            (name, ar, self.rel_tables[i])
            for i, (name, ar) in enumerate(self.sig.rel_symbols)
        ]


def validate(structure: FiniteStructure) -> list[str]:
    """Check all structure invariants; an empty list means the structure is ok.

    Diagnostics are ordered, so the first entry names the first violated
    invariant together with the offending indices.
    """
    diags: list[str] = []
    n = structure.size
    if n < 1:
        diags.append(f"size must be positive, got {n}")
        return diags
    if len(structure.op_tables) != len(structure.sig.op_symbols):
        diags.append(
            f"expected {len(structure.sig.op_symbols)} operation tables, "
            f"got {len(structure.op_tables)}"
        )
        return diags
    if len(structure.rel_tables) != len(structure.sig.rel_symbols):
        diags.append(
            f"expected {len(structure.sig.rel_symbols)} relation tables, "
            f"got {len(structure.rel_tables)}"
        )
        return diags
    for i, (name, ar) in enumerate(structure.sig.op_symbols):
        table = structure.op_tables[i]
        want = n**ar
        if len(table) != want:
            diags.append(
                f"operation {name!r}: non-total table "
                f"(expected {want} entries, got {len(table)})"
            )
            continue
        for j, v in enumerate(table):
            if not (0 <= v < n):
                diags.append(
                    f"operation {name!r}: out-of-range entry {v} at row {j}"
                )
                break
    for i, (name, ar) in enumerate(structure.sig.rel_symbols):
        for t in sorted(structure.rel_tables[i]):
            if len(t) != ar:
                diags.append(
                    f"relation {name!r}: tuple {t} has length {len(t)}, arity is {ar}"
                )
                break
            if any(not (0 <= v < n) for v in t):
                diags.append(f"relation {name!r}: out-of-range entry in tuple {t}")
                break
    if structure.labels is not None and len(structure.labels) != n:
        diags.append(
            f"labels: expected {n} entries, got {len(structure.labels)}"
        )
    return diags


def _check_elements(structure: FiniteStructure, elements: Iterable[int]) -> list[int]:
    out = []
    for e in elements:
        if not (0 <= e < structure.size):
            raise InputError(
                f"element {e} out of range for universe 0..{structure.size - 1}"
            )
        out.append(e)
    return out


def is_subuniverse(structure: FiniteStructure, subset: Iterable[int]) -> bool:
    """True iff the subset contains all constants and is closed under every op."""
    members = set(_check_elements(structure, subset))
    for name, ar, table in structure.op_views():
        if ar == 0:
            if table[0] not in members:
                return False
            continue
        for args in itertools.product(members, repeat=ar):
            if table[flat_index(structure.size, args)] not in members:
                return False
    return True


@dataclass(frozen=True)
class SubUniverse:
    """A subset of a parent structure's universe closed under all operations."""

    parent: FiniteStructure
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        members = tuple(sorted(set(self.members)))
        object.__setattr__(self, "members", members)
        if not is_subuniverse(self.parent, members):
            raise InputError(
                f"subset {list(members)} is not closed under the parent's operations"
            )

    def __len__(self) -> int:
        return len(self.members)

    def member_set(self) -> frozenset:
        return frozenset(self.members)


def induced_substructure(
    structure: FiniteStructure, sub: SubUniverse
) -> tuple[FiniteStructure, tuple[int, ...]]:
    """Restrict a structure to a subuniverse, re-indexed to 0..|sub|-1.

    Returns the restricted structure together with the re-index map
    ``embed`` where ``embed[i]`` is the parent element of new element ``i``.
    Relation tuples survive exactly when all their entries lie in the
    subuniverse (the spanned reading of substructures).
    """
    if sub.parent != structure:
        raise InputError("subuniverse does not belong to this structure")
    if not sub.members:
        raise InputError("cannot induce a structure on the empty subuniverse")
    embed = sub.members
    pos = {e: i for i, e in enumerate(embed)}
    m = len(embed)
    op_tables = []
    for name, ar, table in structure.op_views():
        if ar == 0:
            op_tables.append((pos[table[0]],))
            continue
        flat = []
        for args in itertools.product(embed, repeat=ar):
            flat.append(pos[table[flat_index(structure.size, args)]])
        op_tables.append(tuple(flat))
    rel_tables = []
    for name, ar, tuples in structure.rel_views():
        kept = frozenset(
            tuple(pos[v] for v in t) for t in tuples if all(v in pos for v in t)
        )
        rel_tables.append(kept)
    labels = None
    if structure.labels is not None:
        labels = tuple(structure.labels[e] for e in embed)
    restricted = FiniteStructure(
        structure.sig, m, tuple(op_tables), tuple(rel_tables), labels
    )
    return restricted, embed


def direct_product(x: FiniteStructure, y: FiniteStructure) -> FiniteStructure:
    """Componentwise product; pair (i, j) becomes element i*|y| + j.

    A relation holds on a tuple of pairs iff it holds componentwise in both
    factors.
    """
    if x.sig != y.sig:
        raise InputError("direct product requires structures of the same signature")
    nx, ny = x.size, y.size
    n = nx * ny
    op_tables = []
    for i, (name, ar) in enumerate(x.sig.op_symbols):
        tx, ty = x.op_tables[i], y.op_tables[i]
        if ar == 0:
            op_tables.append((tx[0] * ny + ty[0],))
            continue
        flat = []
        for args in itertools.product(range(n), repeat=ar):
            xa = [a // ny for a in args]
            ya = [a % ny for a in args]
            flat.append(tx[flat_index(nx, xa)] * ny + ty[flat_index(ny, ya)])
        op_tables.append(tuple(flat))
    rel_tables = []
    for i, (name, ar) in enumerate(x.sig.rel_symbols):
        pairs = set()
        for tx in x.rel_tables[i]:
            for ty in y.rel_tables[i]:
                pairs.add(tuple(tx[k] * ny + ty[k] for k in range(ar)))
        rel_tables.append(frozenset(pairs))
    return FiniteStructure(x.sig, n, tuple(op_tables), tuple(rel_tables))


@dataclass(frozen=True)
class Congruence:
    """A partition stored as a canonical block assignment.

    ``block_of[e]`` is the block index of element e; blocks are numbered by
    first occurrence, so equal partitions always compare equal.
    """

    block_of: tuple[int, ...]

    def __post_init__(self) -> None:
        seen = -1
        for b in self.block_of:
            if b > seen + 1 or b < 0:
                raise InputError("block assignment is not in canonical form")
            seen = max(seen, b)

    @staticmethod
    def from_assignment(values: Iterable[int]) -> "Congruence":
        """Canonicalize an arbitrary labelling into first-occurrence numbering."""
        relabel: dict[int, int] = {}
        out = []
        for v in values:
            if v not in relabel:
                relabel[v] = len(relabel)
            out.append(relabel[v])
        return Congruence(tuple(out))

    @staticmethod
    def from_blocks(size: int, blocks: Iterable[Iterable[int]]) -> "Congruence":
        assign = [-1] * size
        for i, block in enumerate(blocks):
            for e in block:
                if not (0 <= e < size) or assign[e] != -1:
                    raise InputError("blocks must partition 0..size-1")
                assign[e] = i
        if -1 in assign:
            raise InputError("blocks must cover the whole universe")
        return Congruence.from_assignment(assign)

    @staticmethod
    def identity(size: int) -> "Congruence":
        return Congruence(tuple(range(size)))

    @staticmethod
    def full(size: int) -> "Congruence":
        return Congruence((0,) * size)

    @property
    def size(self) -> int:
        return len(self.block_of)

    @property
    def num_blocks(self) -> int:
        return max(self.block_of) + 1 if self.block_of else 0

    def related(self, a: int, b: int) -> bool:
        return self.block_of[a] == self.block_of[b]

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for e, b in enumerate(self.block_of):
            out[b].append(e)
        return tuple(tuple(block) for block in out)

    def generating_pairs(self) -> list[tuple[int, int]]:
        """Consecutive pairs inside each block; they generate the partition."""
        pairs = []
        for block in self.blocks():
            for a, b in zip(block, block[1:]):
                pairs.append((a, b))
        return pairs

    def is_identity(self) -> bool:
        return self.num_blocks == self.size

    def is_full(self) -> bool:
        return self.num_blocks <= 1


def is_congruence(structure: FiniteStructure, theta: Congruence) -> bool:
    """True iff the partition is compatible with every operation table."""
    if theta.size != structure.size:
        return False
    block = theta.block_of
    n = structure.size
    for name, ar, table in structure.op_views():
        if ar == 0:
            continue
        seen: dict[tuple[int, ...], int] = {}
        for j, args in enumerate(itertools.product(range(n), repeat=ar)):
            key = tuple(block[a] for a in args)
            v = block[table[j]]
            if seen.setdefault(key, v) != v:
                return False
    return True


def quotient(
    structure: FiniteStructure, theta: Congruence
) -> tuple[FiniteStructure, tuple[int, ...]]:
    """Quotient by a congruence; returns the block structure and the block map.

    Operations act on representatives (well-defined by compatibility, which is
    re-checked here); a relation holds on blocks iff it holds on some
    representative tuple.
    """
    if theta.size != structure.size:
        raise InputError("congruence size does not match the structure")
    block = theta.block_of
    n = structure.size
    m = theta.num_blocks
    op_tables = []
    for name, ar, table in structure.op_views():
        if ar == 0:
            op_tables.append((block[table[0]],))
            continue
        flat: dict[int, int] = {}
        for j, args in enumerate(itertools.product(range(n), repeat=ar)):
            key = flat_index(m, (block[a] for a in args))
            v = block[table[j]]
            if flat.setdefault(key, v) != v:
                raise InputError(
                    f"not a congruence: operation {name!r} is ill-defined on blocks"
                )
        op_tables.append(tuple(flat[j] for j in range(m**ar)))
    rel_tables = []
    for name, ar, tuples in structure.rel_views():
        rel_tables.append(frozenset(tuple(block[v] for v in t) for t in tuples))
    blocks = theta.blocks()
    labels = tuple("{" + ",".join(map(str, b)) + "}" for b in blocks)
    q = FiniteStructure(structure.sig, m, tuple(op_tables), tuple(rel_tables), labels)
    return q, theta.block_of
