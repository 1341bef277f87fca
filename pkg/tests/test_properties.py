"""Law-style properties over randomized structures."""

import itertools

from hypothesis import given, settings, strategies as st

from algindep.core import (
    Congruence,
    FiniteStructure,
    Signature,
    direct_product,
    induced_substructure,
    is_congruence,
    is_subuniverse,
    quotient,
)
from algindep.generation import (
    all_congruences,
    all_subuniverses,
    cg,
    close,
    generated_subuniverse_of_square,
    join,
)
from algindep.morphisms import (
    Homomorphism,
    enumerate_homs,
    is_homomorphism,
    joint_extension,
    kernel,
)
from algindep.zoo import graph

from oracles import brute_congruences, brute_homs


@st.composite
def algebras(draw, max_size=6):
    n = draw(st.integers(1, max_size))
    shape = draw(
        st.sampled_from(
            [((2,)), ((2, 1)), ((2, 0)), ((1,)), ((2, 2)), ()]
        )
    )
    ops, tables = [], []
    for i, arity in enumerate(shape):
        ops.append((f"f{i}", arity))
        cells = n**arity
        tables.append(
            tuple(draw(st.lists(st.integers(0, n - 1), min_size=cells, max_size=cells)))
        )
    return FiniteStructure(Signature(tuple(ops)), n, tuple(tables), ())


@st.composite
def algebras_with_seed(draw, max_size=6):
    structure = draw(algebras(max_size=max_size))
    seed = draw(
        st.sets(st.integers(0, structure.size - 1), max_size=structure.size)
    )
    return structure, sorted(seed)


@st.composite
def digraphs(draw, max_size=5):
    n = draw(st.integers(1, max_size))
    edges = draw(
        st.sets(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=n * n
        )
    )
    return graph(n, sorted(edges))


@given(algebras_with_seed(max_size=8))
@settings(max_examples=60, deadline=None)
def test_close_is_extensive_monotone_idempotent(data):
    structure, seed = data
    closed, _ = close(structure, seed)
    members = set(closed.members)
    assert set(seed) <= members
    assert is_subuniverse(structure, closed.members)
    again, _ = close(structure, closed.members)
    assert again.members == closed.members
    if seed:
        smaller, _ = close(structure, seed[:-1])
        assert set(smaller.members) <= members


@given(algebras_with_seed(max_size=6))
@settings(max_examples=40, deadline=None)
def test_square_of_diagonal_is_diagonal_of_closure(data):
    structure, seed = data
    square = generated_subuniverse_of_square(structure, [(e, e) for e in seed])
    closed, _ = close(structure, seed)
    assert square == frozenset((e, e) for e in closed.members)


@given(algebras_with_seed(max_size=6))
@settings(max_examples=40, deadline=None)
def test_witness_dag_identity_evaluation(data):
    structure, seed = data
    closed, dag = close(structure, seed)
    values = dag.evaluate(structure, {e: e for e in seed})
    assert set(values) == set(closed.members)
    assert all(values[e] == e for e in values)


@given(algebras(max_size=5), st.data())
@settings(max_examples=40, deadline=None)
def test_cg_contains_pairs_and_is_compatible(structure, data):
    n = structure.size
    pairs = data.draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=4
        )
    )
    theta = cg(structure, pairs)
    assert all(theta.related(a, b) for a, b in pairs)
    assert is_congruence(structure, theta)


@given(algebras(max_size=5))
@settings(max_examples=30, deadline=None)
def test_all_congruences_matches_partition_filter(structure):
    assert all_congruences(structure) == brute_congruences(structure)


@given(algebras(max_size=4))
@settings(max_examples=25, deadline=None)
def test_hom_enumeration_matches_map_filter(structure):
    if structure.size**structure.size > 10**4:
        return
    mine = sorted(h.mapping for h in enumerate_homs(structure, structure))
    assert mine == brute_homs(structure, structure)


@given(digraphs(max_size=4), digraphs(max_size=3))
@settings(max_examples=25, deadline=None)
def test_graph_hom_enumeration_matches_map_filter(g, h):
    for mode in ("weak", "strong"):
        mine = sorted(x.mapping for x in enumerate_homs(g, h, mode))
        assert mine == brute_homs(g, h, mode)


@given(algebras(max_size=5))
@settings(max_examples=30, deadline=None)
def test_kernels_are_congruences_and_first_isomorphism(structure):
    count = 0
    for h in enumerate_homs(structure, structure):
        theta = kernel(h)
        assert is_congruence(structure, theta)
        q, block_map = quotient(structure, theta)
        # the induced embedding of the quotient reproduces the image pointwise
        reps = {}
        for x in range(structure.size):
            reps.setdefault(block_map[x], h.mapping[x])
        embedding = tuple(reps[i] for i in range(q.size))
        assert len(set(embedding)) == q.size
        assert is_homomorphism(q, structure, embedding)
        assert all(
            embedding[block_map[x]] == h.mapping[x] for x in range(structure.size)
        )
        count += 1
        if count >= 6:
            break


@st.composite
def same_signature_pairs(draw, max_size=4):
    shape = draw(st.sampled_from([(2,), (2, 1), (2, 0), (1,)]))
    sig = Signature(tuple((f"f{i}", ar) for i, ar in enumerate(shape)))

    def one(n):
        tables = []
        for _, ar in sig.op_symbols:
            cells = n**ar
            tables.append(
                tuple(
                    draw(st.lists(st.integers(0, n - 1), min_size=cells, max_size=cells))
                )
            )
        return FiniteStructure(sig, n, tuple(tables), ())

    return one(draw(st.integers(1, max_size))), one(draw(st.integers(1, max_size)))


@given(same_signature_pairs())
@settings(max_examples=25, deadline=None)
def test_product_projections_are_homomorphisms(pair):
    x, y = pair
    product = direct_product(x, y)
    proj_x = tuple(i // y.size for i in range(product.size))
    proj_y = tuple(i % y.size for i in range(product.size))
    # no relations here, so the projections are strong
    assert is_homomorphism(product, x, proj_x, "strong")
    assert is_homomorphism(product, y, proj_y, "strong")


def test_product_projections_on_graphs_weak_but_not_strong():
    chain = graph(2, [(0, 1), (1, 0)])
    product = direct_product(chain, chain)
    proj = tuple(i // 2 for i in range(4))
    assert is_homomorphism(product, chain, proj, "weak")
    assert not is_homomorphism(product, chain, proj, "strong")


@given(algebras(max_size=5), st.data())
@settings(max_examples=30, deadline=None)
def test_joint_extension_agrees_with_exhaustive_search(structure, data):
    subs = all_subuniverses(structure)
    if not subs:
        return
    a = data.draw(st.sampled_from(subs))
    b = data.draw(st.sampled_from(subs))
    a_struct, a_embed = induced_substructure(structure, a)
    b_struct, b_embed = induced_substructure(structure, b)
    alphas = list(itertools.islice(enumerate_homs(a_struct, a_struct), 3))
    betas = list(itertools.islice(enumerate_homs(b_struct, b_struct), 3))
    join_sub, _ = join(structure, a, b)
    jstruct, jembed = induced_substructure(structure, join_sub)
    pos = {e: i for i, e in enumerate(jembed)}
    for alpha in alphas:
        for beta in betas:
            fixed = {}
            ok = True
            for embed, hom in ((a_embed, alpha), (b_embed, beta)):
                for i, img in enumerate(hom.mapping):
                    u, v = pos[embed[i]], pos[embed[img]]
                    if fixed.setdefault(u, v) != v:
                        ok = False
            free = [u for u in range(jstruct.size) if u not in fixed]
            if jstruct.size ** len(free) > 3000:
                continue
            extensions = []
            if ok:
                for values in itertools.product(range(jstruct.size), repeat=len(free)):
                    mapping = [0] * jstruct.size
                    for u, v in fixed.items():
                        mapping[u] = v
                    for u, v in zip(free, values):
                        mapping[u] = v
                    mapping = tuple(mapping)
                    if is_homomorphism(jstruct, jstruct, mapping):
                        extensions.append(mapping)
            gamma = joint_extension(structure, a, b, alpha, beta)
            if isinstance(gamma, Homomorphism):
                assert extensions == [gamma.mapping]
            else:
                assert extensions == []


@given(digraphs(max_size=4))
@settings(max_examples=25, deadline=None)
def test_automorphism_class_matches_permutation_filter(g):
    from algindep.morphisms import HOM_CLASS_AUTO, enumerate_endos

    mine = sorted(h.mapping for h in enumerate_endos(g, "weak", HOM_CLASS_AUTO))
    brute = []
    for perm in itertools.permutations(range(g.size)):
        inv = [0] * g.size
        for i, v in enumerate(perm):
            inv[v] = i
        if is_homomorphism(g, g, perm, "weak") and is_homomorphism(
            g, g, tuple(inv), "weak"
        ):
            brute.append(perm)
    assert mine == sorted(brute)


@given(st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_congruence_canonicalization_roundtrip(seed):
    import random

    rng = random.Random(seed)
    n = rng.randint(1, 8)
    labels = [rng.randint(0, 3) for _ in range(n)]
    theta = Congruence.from_assignment(labels)
    assert theta.size == n
    rebuilt = Congruence.from_blocks(n, theta.blocks())
    assert rebuilt == theta
