"""Builders for the concrete categories: sets, graphs, groups, abelian groups,
Boolean algebras, and vector spaces over prime fields, plus their finite
coproducts and the canonical surjection onto a join.

Every builder law-checks its output (associativity, inverses, distributivity,
and so on), so downstream code can rely on the advertised axioms.  Vector
spaces are encoded as algebras: binary addition, unary negation, one unary
scalar symbol per field element, and the zero constant, which keeps the
signature finite and the generic machinery applicable.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .core import (
    FiniteStructure,
    InputError,
    Signature,
    SizeLimitExceeded,
    SubUniverse,
    direct_product,
    validate,
)
from .generation import close, join
from .morphisms import (
    Homomorphism,
    Mode,
    _PartialMap,
    _propagate,
    _seed_constants,
    enumerate_homs,
    is_homomorphism,
)

SET_SIG = Signature()
GRAPH_SIG = Signature(rel_symbols=(("edge", 2),))
GROUP_SIG = Signature(op_symbols=(("e", 0), ("inv", 1), ("mul", 2)))
BOOLEAN_SIG = Signature(
    op_symbols=(("compl", 1), ("join", 2), ("meet", 2), ("one", 0), ("zero", 0))
)

CATEGORY_KINDS = (
    "set",
    "graph",
    "abelian_group",
    "group",
    "boolean_algebra",
    "vector_space",
)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class CategoryTag:
    """Which concrete category a structure was built for."""

    kind: str
    field_prime: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in CATEGORY_KINDS:
            raise InputError(f"unknown category {self.kind!r}")
        if self.kind == "vector_space":
            if self.field_prime is None or not _is_prime(self.field_prime):
                raise InputError("vector_space needs a prime field size >= 2")
        elif self.field_prime is not None:
            raise InputError(f"category {self.kind!r} takes no field prime")


def vector_space_sig(p: int) -> Signature:
    ops = [("add", 2), ("neg", 1)]
    ops += [(f"smul{c:02d}", 1) for c in range(p)]
    ops.append(("zero", 0))
    return Signature(op_symbols=tuple(ops))


# ---------------------------------------------------------------------------
# law checks
# ---------------------------------------------------------------------------

def _table_array(structure, name):
    _, ar = structure.sig.op_symbols[structure.op_index(name)]
    t = np.array(structure.op_table(name), dtype=np.int64)
    return t.reshape((structure.size,) * ar) if ar else t


def is_group(structure: FiniteStructure) -> bool:
    """Signature shape is e/inv/mul and the group laws hold."""
    if structure.sig != GROUP_SIG or validate(structure):
        return False
    n = structure.size
    mul = _table_array(structure, "mul")
    inv = _table_array(structure, "inv")
    e = structure.op_table("e")[0]
    ar = np.arange(n)
    if not (np.array_equal(mul[e, :], ar) and np.array_equal(mul[:, e], ar)):
        return False
    if not (np.all(mul[ar, inv] == e) and np.all(mul[inv, ar] == e)):
        return False
    return bool(np.array_equal(mul[mul, :], mul[:, mul]))


def is_abelian_group(structure: FiniteStructure) -> bool:
    if not is_group(structure):
        return False
    mul = _table_array(structure, "mul")
    return bool(np.array_equal(mul, mul.T))


def is_boolean_algebra(structure: FiniteStructure) -> bool:
    """Huntington's axioms: commutativity, distributivity both ways,
    identity laws, and complements."""
    if structure.sig != BOOLEAN_SIG or validate(structure):
        return False
    n = structure.size
    meet = _table_array(structure, "meet")
    vee = _table_array(structure, "join")
    compl = _table_array(structure, "compl")
    zero = structure.op_table("zero")[0]
    one = structure.op_table("one")[0]
    ar = np.arange(n)
    if not (np.array_equal(meet, meet.T) and np.array_equal(vee, vee.T)):
        return False
    if not (np.array_equal(vee[:, zero], ar) and np.array_equal(meet[:, one], ar)):
        return False
    if not (np.all(meet[ar, compl] == zero) and np.all(vee[ar, compl] == one)):
        return False
    x = ar[:, None, None]
    if not np.array_equal(meet[x, vee[None, :, :]], vee[meet[:, :, None], meet[:, None, :]]):
        return False
    if not np.array_equal(vee[x, meet[None, :, :]], meet[vee[:, :, None], vee[:, None, :]]):
        return False
    return True


def is_vector_space(structure: FiniteStructure, p: int) -> bool:
    """Additive abelian group plus the scalar action laws for F_p."""
    if not _is_prime(p) or structure.sig != vector_space_sig(p) or validate(structure):
        return False
    n = structure.size
    add = _table_array(structure, "add")
    neg = _table_array(structure, "neg")
    zero = structure.op_table("zero")[0]
    ar = np.arange(n)
    if not np.array_equal(add, add.T):
        return False
    if not np.array_equal(add[:, zero], ar):
        return False
    if not np.all(add[ar, neg] == zero):
        return False
    if not np.array_equal(add[add, :], add[:, add]):
        return False
    smul = [_table_array(structure, f"smul{c:02d}") for c in range(p)]
    if not np.array_equal(smul[1 % p], ar if p > 1 else smul[0]):
        return False
    if not np.all(smul[0] == zero):
        return False
    for c in range(p):
        if not np.array_equal(smul[c][add], add[smul[c][:, None], smul[c][None, :]]):
            return False
        for d in range(p):
            if not np.array_equal(add[smul[c], smul[d]], smul[(c + d) % p]):
                return False
            if not np.array_equal(smul[c][smul[d]], smul[(c * d) % p]):
                return False
    return True


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def empty_sig_set(n: int) -> FiniteStructure:
    if n < 1:
        raise InputError("a set structure needs at least one element")
    return FiniteStructure(SET_SIG, n, (), (), tuple(str(i) for i in range(n)))


def graph(n: int, edges: Iterable[tuple[int, int]]) -> FiniteStructure:
    if n < 1:
        raise InputError("a graph needs at least one vertex")
    table = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u},{v}) out of range for {n} vertices")
        table.add((u, v))
    return FiniteStructure(GRAPH_SIG, n, (), (frozenset(table),))


def _group_from_tables(n, mul_flat, inv_flat, labels):
    s = FiniteStructure(
        GROUP_SIG, n, ((0,), tuple(inv_flat), tuple(mul_flat)), (), labels
    )
    if not is_group(s):
        raise InputError("built tables do not satisfy the group laws")
    return s


def cyclic_group(n: int) -> FiniteStructure:
    if n < 1:
        raise InputError("cyclic group order must be positive")
    mul = [(i + j) % n for i in range(n) for j in range(n)]
    inv = [(-i) % n for i in range(n)]
    return _group_from_tables(n, mul, inv, tuple(str(i) for i in range(n)))


def permutations_of(n: int) -> list[tuple[int, ...]]:
    """Canonical element order of the symmetric group: lexicographic one-line
    notation, identity first."""
    return sorted(itertools.permutations(range(n)))


def permutation_index(n: int, perm: Iterable[int]) -> int:
    """Index of a one-line permutation in the canonical order."""
    target = tuple(perm)
    perms = permutations_of(n)
    try:
        return perms.index(target)
    except ValueError:
        raise InputError(f"{target} is not a permutation of 0..{n - 1}") from None


def _cycle_label(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        parts.append("(" + " ".join(str(v + 1) for v in cycle) + ")")
    return "".join(parts) if parts else "e"


def symmetric_group(n: int) -> FiniteStructure:
    if not (1 <= n <= 5):
        raise InputError("symmetric groups are built for 1 <= n <= 5")
    perms = permutations_of(n)
    index = {p: i for i, p in enumerate(perms)}
    size = len(perms)
    mul = []
    for p in perms:
        for q in perms:
            mul.append(index[tuple(p[q[k]] for k in range(n))])
    inv = []
    for p in perms:
        ip = [0] * n
        for i, v in enumerate(p):
            ip[v] = i
        inv.append(index[tuple(ip)])
    labels = tuple(_cycle_label(p) for p in perms)
    return _group_from_tables(size, mul, inv, labels)


def dihedral_group(n: int) -> FiniteStructure:
    """Order 2n: indices 0..n-1 are rotations r^k, n..2n-1 are reflections s.r^k."""
    if n < 1:
        raise InputError("dihedral parameter must be positive")
    size = 2 * n

    def unpack(i):
        return (i >= n, i % n)

    def pack(flip, rot):
        return (n if flip else 0) + rot % n

    mul = []
    for i in range(size):
        f1, a = unpack(i)
        for j in range(size):
            f2, b = unpack(j)
            rot = (-a if f2 else a) + b
            mul.append(pack(f1 ^ f2, rot))
    inv = []
    for i in range(size):
        f, a = unpack(i)
        inv.append(pack(f, a if f else -a))
    labels = tuple(
        (f"sr{k % n}" if k >= n else f"r{k}") for k in range(size)
    )
    return _group_from_tables(size, mul, inv, labels)


_QUATERNION_AXIS = {
    (1, 2): (0, 3), (2, 1): (1, 3),
    (2, 3): (0, 1), (3, 2): (1, 1),
    (3, 1): (0, 2), (1, 3): (1, 2),
}


def quaternion_group() -> FiniteStructure:
    """Q8 with elements 1, i, j, k, -1, -i, -j, -k in that order."""

    def mult(x, y):
        sx, ax = divmod(x, 4)
        sy, ay = divmod(y, 4)
        sign = sx ^ sy
        if ax == 0:
            axis = ay
        elif ay == 0:
            axis = ax
        elif ax == ay:
            sign ^= 1
            axis = 0
        else:
            s, axis = _QUATERNION_AXIS[(ax, ay)]
            sign ^= s
        return sign * 4 + axis

    mul = [mult(x, y) for x in range(8) for y in range(8)]
    inv = [mul_row.index(0) for mul_row in (mul[i * 8:(i + 1) * 8] for i in range(8))]
    labels = ("1", "i", "j", "k", "-1", "-i", "-j", "-k")
    return _group_from_tables(8, mul, inv, labels)


def _powerset_boolean(atoms: int) -> FiniteStructure:
    n = 1 << atoms
    full = n - 1
    meet = [x & y for x in range(n) for y in range(n)]
    vee = [x | y for x in range(n) for y in range(n)]
    compl = [x ^ full for x in range(n)]

    def label(x):
        members = [str(i + 1) for i in range(atoms) if x >> i & 1]
        return "{" + ",".join(members) + "}"

    return FiniteStructure(
        BOOLEAN_SIG,
        n,
        (tuple(compl), tuple(vee), tuple(meet), (full,), (0,)),
        (),
        tuple(label(x) for x in range(n)),
    )


def powerset_boolean_algebra(atoms: int) -> FiniteStructure:
    """Subsets of a k-element atom set, encoded as bitmasks."""
    if not (1 <= atoms <= 5):
        raise InputError("powerset Boolean algebras are built for 1 <= atoms <= 5")
    s = _powerset_boolean(atoms)
    if not is_boolean_algebra(s):
        raise InputError("built tables do not satisfy the Boolean algebra laws")
    return s


def vector_space(p: int, dim: int) -> FiniteStructure:
    """F_p^dim with elements encoded base p, most significant coordinate first."""
    if not _is_prime(p):
        raise InputError(f"{p} is not prime")
    if dim < 1 or p**dim > 64:
        raise InputError("vector spaces are built for dim >= 1 with p^dim <= 64")
    n = p**dim

    def coords(x):
        out = []
        for _ in range(dim):
            out.append(x % p)
            x //= p
        return out[::-1]

    def pack(cs):
        x = 0
        for c in cs:
            x = x * p + c % p
        return x

    add = [
        pack([cx + cy for cx, cy in zip(coords(x), coords(y))])
        for x in range(n)
        for y in range(n)
    ]
    neg = [pack([-c for c in coords(x)]) for x in range(n)]
    tables = [("add", tuple(add)), ("neg", tuple(neg))]
    for c in range(p):
        tables.append(
            (f"smul{c:02d}", tuple(pack([c * v for v in coords(x)]) for x in range(n)))
        )
    tables.append(("zero", (0,)))
    sig = vector_space_sig(p)
    labels = tuple("(" + ",".join(map(str, coords(x))) + ")" for x in range(n))
    s = FiniteStructure(sig, n, tuple(t for _, t in tables), (), labels)
    if not is_vector_space(s, p):
        raise InputError("built tables do not satisfy the vector space laws")
    return s


def _parse_int(value, what):
    try:
        return int(value)
    except (TypeError, ValueError):
        raise InputError(f"{what} must be an integer, got {value!r}") from None


def _parse_edges(edges) -> list[tuple[int, int]]:
    if isinstance(edges, str):
        if not edges.strip():
            return []
        out = []
        for part in edges.split(","):
            u, _, v = part.partition("-")
            out.append((_parse_int(u, "edge endpoint"), _parse_int(v, "edge endpoint")))
        return out
    return [(int(u), int(v)) for u, v in edges]


def build(family: str, *params) -> tuple[FiniteStructure, CategoryTag]:
    """Construct a named structure family; tables are law-checked."""
    if family == "empty_sig_set":
        (n,) = params
        return empty_sig_set(_parse_int(n, "size")), CategoryTag("set")
    if family == "cyclic_group":
        (n,) = params
        return cyclic_group(_parse_int(n, "order")), CategoryTag("abelian_group")
    if family == "symmetric_group":
        (n,) = params
        return symmetric_group(_parse_int(n, "degree")), CategoryTag("group")
    if family == "dihedral_group":
        (n,) = params
        return dihedral_group(_parse_int(n, "parameter")), CategoryTag("group")
    if family == "quaternion_group":
        if params:
            raise InputError("quaternion_group takes no parameters")
        return quaternion_group(), CategoryTag("group")
    if family == "powerset_boolean_algebra":
        (k,) = params
        return (
            powerset_boolean_algebra(_parse_int(k, "atom count")),
            CategoryTag("boolean_algebra"),
        )
    if family == "vector_space":
        p, d = params
        p = _parse_int(p, "field size")
        return vector_space(p, _parse_int(d, "dimension")), CategoryTag(
            "vector_space", p
        )
    if family == "graph":
        n, edges = params
        return graph(_parse_int(n, "vertex count"), _parse_edges(edges)), CategoryTag(
            "graph"
        )
    raise InputError(f"unknown structure family {family!r}")


# ---------------------------------------------------------------------------
# coproducts
# ---------------------------------------------------------------------------

def _atoms(structure: FiniteStructure) -> list[int]:
    """Minimal nonzero elements of a Boolean algebra."""
    meet = structure.op_table("meet")
    zero = structure.op_table("zero")[0]
    n = structure.size
    atoms = []
    for z in range(n):
        if z == zero:
            continue
        if all(meet[w * n + z] in (zero, z) for w in range(n)):
            atoms.append(z)
    return atoms


def coproduct(
    tag: CategoryTag,
    x: FiniteStructure,
    y: FiniteStructure,
    max_size: int = 4096,
) -> tuple[FiniteStructure, Homomorphism, Homomorphism]:
    """The categorical coproduct with its two embeddings.

    Sets and graphs take disjoint unions; abelian groups and vector spaces
    take the direct product with coordinate embeddings (equal to the direct
    sum in the finite case); Boolean algebras take the atom-pair construction,
    where an element embeds as the union of all atom pairs below it.  The
    group tag is refused: free products of nontrivial groups are infinite.
    """
    if x.sig != y.sig:
        raise InputError("coproduct requires structures of the same signature")
    if tag.kind == "group":
        raise InputError(
            "group coproducts are free products, generally infinite; "
            "only the abelian_group tag is supported"
        )
    if tag.kind in ("set", "graph"):
        want = SET_SIG if tag.kind == "set" else GRAPH_SIG
        if x.sig != want:
            raise InputError(f"structures do not have the {tag.kind} signature")
        n = x.size + y.size
        rels = []
        for i in range(len(x.sig.rel_symbols)):
            shifted = {tuple(v + x.size for v in t) for t in y.rel_tables[i]}
            rels.append(frozenset(x.rel_tables[i] | shifted))
        cop = FiniteStructure(x.sig, n, (), tuple(rels))
        e_a = Homomorphism(x, cop, tuple(range(x.size)), "strong")
        e_b = Homomorphism(y, cop, tuple(range(x.size, n)), "strong")
        return cop, e_a, e_b
    if tag.kind in ("abelian_group", "vector_space"):
        if tag.kind == "abelian_group":
            if not (is_abelian_group(x) and is_abelian_group(y)):
                raise InputError("abelian_group coproduct needs commutative groups")
            zx = x.op_table("e")[0]
            zy = y.op_table("e")[0]
        else:
            p = tag.field_prime
            if not (is_vector_space(x, p) and is_vector_space(y, p)):
                raise InputError(f"vector_space coproduct needs F_{p} spaces")
            zx = x.op_table("zero")[0]
            zy = y.op_table("zero")[0]
        cop = direct_product(x, y)
        e_a = Homomorphism(x, cop, tuple(i * y.size + zy for i in range(x.size)), "strong")
        e_b = Homomorphism(y, cop, tuple(zx * y.size + j for j in range(y.size)), "strong")
        return cop, e_a, e_b
    if tag.kind == "boolean_algebra":
        for s in (x, y):
            if not is_boolean_algebra(s):
                raise InputError("boolean_algebra coproduct needs Boolean algebras")
        ax, ay = _atoms(x), _atoms(y)
        for s, atoms in ((x, ax), (y, ay)):
            vee = s.op_table("join")
            n = s.size
            for z in range(n):
                below = [a for a in atoms if s.op_table("meet")[a * n + z] == a]
                total = s.op_table("zero")[0]
                for a in below:
                    total = vee[total * n + a]
                if total != z:
                    raise InputError("boolean_algebra coproduct needs atomic inputs")
        bits = len(ax) * len(ay)
        if 1 << bits > max_size:
            raise SizeLimitExceeded(
                f"Boolean coproduct would have 2^{bits} elements, over the "
                f"bound {max_size}"
            )
        cop = _powerset_boolean(bits) if bits else _trivial_boolean()
        meet_x, nx = x.op_table("meet"), x.size
        meet_y, ny = y.op_table("meet"), y.size

        def embed_first(a):
            mask = 0
            for i, p in enumerate(ax):
                if meet_x[p * nx + a] == p:
                    for j in range(len(ay)):
                        mask |= 1 << (i * len(ay) + j)
            return mask

        def embed_second(b):
            mask = 0
            for j, q in enumerate(ay):
                if meet_y[q * ny + b] == q:
                    for i in range(len(ax)):
                        mask |= 1 << (i * len(ay) + j)
            return mask

        e_a = Homomorphism(x, cop, tuple(embed_first(a) for a in range(x.size)), "strong")
        e_b = Homomorphism(y, cop, tuple(embed_second(b) for b in range(y.size)), "strong")
        return cop, e_a, e_b
    raise InputError(f"unsupported category {tag.kind!r}")


def _trivial_boolean():
    # one-element algebra, the coproduct of two trivial Boolean algebras
    return FiniteStructure(
        BOOLEAN_SIG, 1, ((0,), (0,), (0,), (0,), (0,)), (), ("0=1",)
    )


def _extend_from_generators(dom, cod, seeds, mode: Mode):
    """The unique homomorphism pinned by images on a generating set, if any.

    Returns the Homomorphism, or None when the forced images collide or break
    a relation constraint.  Callers must ensure the seeded elements generate
    the domain.
    """
    state = _PartialMap(dom.size)
    if _seed_constants(dom, cod, state) is not None:
        return None
    if _propagate(dom, cod, state, seeds) is not None:
        return None
    if None in state.images:
        raise InputError("seeded elements do not generate the domain")
    mapping = tuple(state.images)
    if not is_homomorphism(dom, cod, mapping, mode):
        return None
    return Homomorphism(dom, cod, mapping, mode)


def canonical_quotient(
    parent: FiniteStructure,
    a: SubUniverse,
    b: SubUniverse,
    tag: CategoryTag,
) -> Homomorphism:
    """The canonical surjection q from the coproduct of A and B onto their join.

    q composed with either embedding is the corresponding inclusion, and q is
    onto the join.
    """
    from .core import induced_substructure

    a_struct, a_embed = induced_substructure(parent, a)
    b_struct, b_embed = induced_substructure(parent, b)
    cop, e_a, e_b = coproduct(tag, a_struct, b_struct)
    join_sub, _ = join(parent, a, b)
    jstruct, jembed = induced_substructure(parent, join_sub)
    pos = {e: i for i, e in enumerate(jembed)}
    seeds = [(e_a.mapping[i], pos[a_embed[i]]) for i in range(a_struct.size)]
    seeds += [(e_b.mapping[j], pos[b_embed[j]]) for j in range(b_struct.size)]
    q = _extend_from_generators(cop, jstruct, seeds, "weak")
    if q is None:
        raise InputError("canonical quotient does not exist; inputs are inconsistent")
    if set(q.mapping) != set(range(jstruct.size)):
        raise InputError("canonical quotient failed to be surjective")
    return q


def verify_coproduct_property(
    tag: CategoryTag,
    x: FiniteStructure,
    y: FiniteStructure,
    cop: FiniteStructure,
    e_a: Homomorphism,
    e_b: Homomorphism,
    targets: list[FiniteStructure],
    mode: Mode = "weak",
) -> bool:
    """Check the universal property against a list of target structures.

    For every target D and every pair (f_A, f_B) of homomorphisms into D
    there must be exactly one mediating g with f_i = g o e_i.  When the
    embedded images generate the coproduct the mediating map is pinned on
    them, so it is constructed directly and uniqueness is automatic; otherwise
    all homomorphisms into the target are enumerated and counted.
    """
    embedded = sorted(set(e_a.mapping) | set(e_b.mapping))
    generating = len(close(cop, embedded)[0].members) == cop.size
    for target in targets:
        if target.sig != cop.sig:
            raise InputError("targets must share the coproduct's signature")
        homs_b = list(enumerate_homs(y, target, mode))
        for f_a in enumerate_homs(x, target, mode):
            for f_b in homs_b:
                seeds = [(e_a.mapping[i], f_a.mapping[i]) for i in range(x.size)]
                seeds += [(e_b.mapping[j], f_b.mapping[j]) for j in range(y.size)]
                if generating:
                    count = 0 if _extend_from_generators(cop, target, seeds, mode) is None else 1
                else:
                    count = 0
                    for g in enumerate_homs(cop, target, mode):
                        if all(g.mapping[u] == v for u, v in seeds):
                            count += 1
                            if count > 1:
                                break
                if count != 1:
                    return False
    return True


# ---------------------------------------------------------------------------
# rigid graphs
# ---------------------------------------------------------------------------

def endomorphism_count(g: FiniteStructure, limit: int = 2) -> int:
    """Number of weak endomorphisms, counted up to the given limit."""
    count = 0
    for _ in enumerate_homs(g, g, "weak"):
        count += 1
        if count >= limit:
            break
    return count


def is_rigid(g: FiniteStructure) -> bool:
    """A graph is rigid when the identity is its only weak endomorphism."""
    return endomorphism_count(g, limit=2) == 1


def random_rigid_graph(
    rng: random.Random,
    min_vertices: int = 7,
    max_vertices: int = 10,
    max_attempts: int = 2000,
) -> FiniteStructure:
    """Randomized search for a rigid digraph; deterministic given the rng."""
    for _ in range(max_attempts):
        n = rng.randint(min_vertices, max_vertices)
        density = rng.uniform(0.25, 0.45)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(n)
            if u != v and rng.random() < density
        ]
        candidate = graph(n, edges)
        if is_rigid(candidate):
            return candidate
    raise SizeLimitExceeded(f"no rigid graph found in {max_attempts} attempts")


def rigid_overlapping_pair(
    seed: int = 0,
) -> tuple[FiniteStructure, tuple[int, ...], tuple[int, ...]]:
    """Two rigid graphs sharing exactly one vertex, inside their union.

    The second graph is shifted so its vertex 0 is the last vertex of the
    first; rigid graphs are loop-free (a loop would admit a constant
    endomorphism), so neither graph has edges inside the overlap and both are
    induced subgraphs of the union.
    """
    rng = random.Random(seed)
    g1 = random_rigid_graph(rng)
    g2 = random_rigid_graph(rng)
    shift = g1.size - 1
    union_edges = set(g1.rel_tables[0])
    union_edges |= {(u + shift, v + shift) for u, v in g2.rel_tables[0]}
    parent = graph(g1.size + g2.size - 1, sorted(union_edges))
    members_a = tuple(range(g1.size))
    members_b = tuple(range(shift, parent.size))
    return parent, members_a, members_b
