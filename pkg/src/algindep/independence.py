"""Top-level deciders for subalgebra and congruence independence.

Two subalgebras are subalgebra-independent when every pair of endomorphisms
(one of each) has a joint extension to an endomorphism of their join; they are
congruence-independent when every pair of congruences extends to a congruence
of the join restricting exactly to each.  Both deciders report the first
counterexample in a deterministic iteration order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .core import (
    FiniteStructure,
    InputError,
    SizeLimitExceeded,
    SubUniverse,
    induced_substructure,
)
from .generation import all_congruences, cg, join
from .morphisms import (
    ExtensionRefusal,
    HOM_CLASS_ALL,
    Homomorphism,
    Mode,
    _JointContext,
    enumerate_endos,
)


@dataclass(frozen=True)
class SubalgebraWitness:
    """A failing endomorphism pair, with its refusal evidence.

    alpha and beta are given as graphs in parent coordinates.
    """

    alpha: tuple[tuple[int, int], ...]
    beta: tuple[tuple[int, int], ...]
    refusal: ExtensionRefusal


@dataclass(frozen=True)
class CongruenceWitness:
    """A congruence pair whose minimal extension restricts wrongly.

    Blocks are in parent coordinates; ``pair`` is the offending element pair
    on ``side`` ("a" or "b"), related one way by the requested congruence and
    the other way by the restriction of the extension.
    """

    theta_a_blocks: tuple[tuple[int, ...], ...]
    theta_b_blocks: tuple[tuple[int, ...], ...]
    side: str
    pair: tuple[int, int]
    wanted_related: bool


Witness = Union[SubalgebraWitness, CongruenceWitness]


@dataclass(frozen=True)
class Verdict:
    independent: bool
    witness: Optional[Witness]
    pairs_examined: int

    def __post_init__(self) -> None:
        if self.independent != (self.witness is None):
            raise ValueError("a verdict is independent exactly when no witness exists")


class _CachedStream:
    """Replayable view of a deterministic generator."""

    def __init__(self, it: Iterator):
        self._it = it
        self._cache: list = []

    def __iter__(self):
        i = 0
        while True:
            if i < len(self._cache):
                yield self._cache[i]
            else:
                try:
                    item = next(self._it)
                except StopIteration:
                    return
                self._cache.append(item)
                yield item
            i += 1


def _graph_in_parent(hom: Homomorphism, embed) -> tuple[tuple[int, int], ...]:
    return tuple((embed[i], embed[y]) for i, y in enumerate(hom.mapping))


def decide_subalgebra_independence(
    parent: FiniteStructure,
    a: SubUniverse,
    b: SubUniverse,
    hom_class: str = HOM_CLASS_ALL,
    mode: Mode = "weak",
) -> Verdict:
    """Test every (alpha, beta) pair for a joint extension to the join.

    Pairs are visited alpha-major, each stream in the deterministic
    enumeration order of the morphism module, and the first failing pair is
    returned as the witness.
    """
    if a.parent != parent or b.parent != parent:
        raise InputError("subuniverses must belong to the given parent structure")
    ctx = _JointContext(parent, a, b, mode)
    betas = _CachedStream(enumerate_endos(ctx.b_struct, mode, hom_class))
    pairs = 0
    for alpha in enumerate_endos(ctx.a_struct, mode, hom_class):
        for beta in betas:
            pairs += 1
            result = ctx.extend(alpha, beta)
            if isinstance(result, ExtensionRefusal):
                witness = SubalgebraWitness(
                    _graph_in_parent(alpha, ctx.a_embed),
                    _graph_in_parent(beta, ctx.b_embed),
                    result,
                )
                return Verdict(False, witness, pairs)
    return Verdict(True, None, pairs)


def decide_congruence_independence(
    parent: FiniteStructure,
    a: SubUniverse,
    b: SubUniverse,
    max_size: int = 12,
) -> Verdict:
    """Test every congruence pair for an exact extension to the join.

    For each (theta_A, theta_B) only the minimal candidate needs checking:
    any congruence of the join restricting exactly to theta_A and theta_B
    contains their union, hence contains Cg(theta_A u theta_B), and
    restriction is monotone, so an exact extension exists iff the minimal one
    is exact.  (This shortcut is a derived lemma, guarded by a brute-force
    equivalence test in the suite.)

    Pairs with |A n B| >= 2 are refused before any lattice computation:
    identity on one side and the full relation on the other cannot both
    restrict exactly across a shared pair.
    """
    if a.parent != parent or b.parent != parent:
        raise InputError("subuniverses must belong to the given parent structure")
    inter = sorted(a.member_set() & b.member_set())
    if len(inter) >= 2:
        x, y = inter[0], inter[1]
        witness = CongruenceWitness(
            theta_a_blocks=tuple((e,) for e in a.members),
            theta_b_blocks=(tuple(b.members),),
            side="a",
            pair=(x, y),
            wanted_related=False,
        )
        return Verdict(False, witness, 0)
    join_sub, _ = join(parent, a, b)
    if len(join_sub.members) > max_size:
        raise SizeLimitExceeded(
            f"join has {len(join_sub.members)} elements, over the congruence "
            f"lattice bound {max_size}"
        )
    jstruct, jembed = induced_substructure(parent, join_sub)
    pos = {e: i for i, e in enumerate(jembed)}
    a_struct, a_embed = induced_substructure(parent, a)
    b_struct, b_embed = induced_substructure(parent, b)
    cons_a = all_congruences(a_struct, max_size=max_size)
    cons_b = all_congruences(b_struct, max_size=max_size)

    def to_parent_blocks(theta, embed):
        return tuple(tuple(embed[v] for v in block) for block in theta.blocks())

    def lift_pairs(theta, embed):
        return [(pos[embed[u]], pos[embed[v]]) for u, v in theta.generating_pairs()]

    pairs = 0
    for theta_a in cons_a:
        seeds_a = lift_pairs(theta_a, a_embed)
        for theta_b in cons_b:
            pairs += 1
            theta = cg(jstruct, seeds_a + lift_pairs(theta_b, b_embed))
            for theta_side, embed, side in (
                (theta_a, a_embed, "a"),
                (theta_b, b_embed, "b"),
            ):
                m = len(embed)
                bad = None
                for i in range(m):
                    for j in range(i + 1, m):
                        want = theta_side.related(i, j)
                        got = theta.related(pos[embed[i]], pos[embed[j]])
                        if want != got:
                            bad = (embed[i], embed[j], want)
                            break
                    if bad:
                        break
                if bad:
                    witness = CongruenceWitness(
                        to_parent_blocks(theta_a, a_embed),
                        to_parent_blocks(theta_b, b_embed),
                        side,
                        (bad[0], bad[1]),
                        bad[2],
                    )
                    return Verdict(False, witness, pairs)
    return Verdict(True, None, pairs)


# ---------------------------------------------------------------------------
# category-specific shortcut predicates
# ---------------------------------------------------------------------------

def boole_independent(
    parent: FiniteStructure, a: SubUniverse, b: SubUniverse
) -> bool:
    """True iff no nonzero elements of A and B meet to zero."""
    from .zoo import is_boolean_algebra  # deferred: zoo builds on this module's types

    if not is_boolean_algebra(parent):
        raise InputError("parent is not a Boolean algebra")
    if a.parent != parent or b.parent != parent:
        raise InputError("subuniverses must belong to the given parent structure")
    meet = parent.op_table("meet")
    zero = parent.op_table("zero")[0]
    n = parent.size
    for x in a.members:
        if x == zero:
            continue
        for y in b.members:
            if y == zero:
                continue
            if meet[x * n + y] == zero:
                return False
    return True


@dataclass(frozen=True)
class GroupDiagnostics:
    """Normality facts about a subgroup pair, and the implied prediction."""

    intersection_trivial: bool
    a_normal_in_join: bool
    b_normal_in_join: bool
    prediction: str  # "independent" | "not_independent" | "no_prediction"


def group_diagnostics(
    parent: FiniteStructure, a: SubUniverse, b: SubUniverse
) -> GroupDiagnostics:
    """Report triviality of A n B and normality of A and B in the join.

    Both normal with trivial intersection forces independence; exactly one
    normal (in the join) forbids it; anything else earns no prediction.
    """
    from .zoo import is_group  # deferred import, see boole_independent

    if not is_group(parent):
        raise InputError("parent is not a group")
    if a.parent != parent or b.parent != parent:
        raise InputError("subuniverses must belong to the given parent structure")
    mul = parent.op_table("mul")
    inv = parent.op_table("inv")
    e = parent.op_table("e")[0]
    n = parent.size
    join_sub, _ = join(parent, a, b)

    def normal_in_join(sub: SubUniverse) -> bool:
        members = sub.member_set()
        for g in join_sub.members:
            gi = inv[g]
            for h in sub.members:
                if mul[mul[g * n + h] * n + gi] not in members:
                    return False
        return True

    trivial = (a.member_set() & b.member_set()) == {e}
    a_normal = normal_in_join(a)
    b_normal = normal_in_join(b)
    if a_normal and b_normal and trivial:
        prediction = "independent"
    elif a_normal != b_normal:
        prediction = "not_independent"
    else:
        prediction = "no_prediction"
    return GroupDiagnostics(trivial, a_normal, b_normal, prediction)


def check_word_condition(
    parent: FiniteStructure,
    a: SubUniverse,
    b: SubUniverse,
    alpha: Homomorphism,
    beta: Homomorphism,
) -> bool:
    """Does every product identity prod a_i b_i = e survive (alpha, beta)?

    Equivalent to the existence of the joint extension: the pair set generated
    by graph(alpha) u graph(beta) inside the join's square is exactly
    {(prod a_i b_i, prod alpha(a_i) beta(b_i))}, so the quantified word
    condition holds iff that set is functional.  Implemented as the
    functionality test.
    """
    from .morphisms import joint_extension
    from .zoo import is_group

    if not is_group(parent):
        raise InputError("parent is not a group")
    return isinstance(joint_extension(parent, a, b, alpha, beta), Homomorphism)
