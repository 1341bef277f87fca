import pytest

from algindep.core import (
    Congruence,
    FiniteStructure,
    InputError,
    Signature,
    SubUniverse,
    direct_product,
    induced_substructure,
    is_congruence,
    is_subuniverse,
    quotient,
    validate,
)
from algindep.generation import cg
from algindep.morphisms import find_isomorphism
from algindep.zoo import cyclic_group, empty_sig_set, graph

from oracles import brute_isomorphisms


def test_signature_rejects_duplicates_and_bad_arities():
    with pytest.raises(InputError):
        Signature(op_symbols=(("f", 2), ("f", 1)))
    with pytest.raises(InputError):
        Signature(op_symbols=(("f", -1),))
    with pytest.raises(InputError):
        Signature(rel_symbols=(("r", 0),))


def test_validate_singleton_algebra_ok():
    sig = Signature(op_symbols=(("f", 2),))
    s = FiniteStructure(sig, 1, ((0,),), ())
    assert validate(s) == []


def test_validate_out_of_range_entry():
    sig = Signature(op_symbols=(("f", 2),))
    table = tuple(5 if i == 4 else 0 for i in range(9))
    s = FiniteStructure(sig, 3, (table,), ())
    diags = validate(s)
    assert diags and "out-of-range" in diags[0]


def test_validate_non_total_table():
    sig = Signature(op_symbols=(("f", 2),))
    s = FiniteStructure(sig, 3, ((0,) * 8,), ())
    diags = validate(s)
    assert diags and "non-total" in diags[0]


def test_is_subuniverse_z6():
    z6 = cyclic_group(6)
    assert is_subuniverse(z6, {0, 2, 4})
    assert not is_subuniverse(z6, {0, 2})  # 2+2=4 escapes
    assert is_subuniverse(z6, range(6))
    with pytest.raises(InputError):
        is_subuniverse(z6, {0, 9})


def test_subuniverse_type_enforces_closure():
    z6 = cyclic_group(6)
    with pytest.raises(InputError):
        SubUniverse(z6, (0, 2))
    sub = SubUniverse(z6, (4, 0, 2))
    assert sub.members == (0, 2, 4)


def test_induced_substructure_z6_mod2():
    z6 = cyclic_group(6)
    sub, embed = induced_substructure(z6, SubUniverse(z6, (0, 3)))
    assert embed == (0, 3)
    # 3+3=0 makes this a two-element cyclic group
    assert sub.op("mul", 1, 1) == 0
    assert find_isomorphism(sub, cyclic_group(2)) is not None


def test_induced_substructure_full_is_identity():
    z6 = cyclic_group(6)
    sub, embed = induced_substructure(z6, SubUniverse(z6, tuple(range(6))))
    assert embed == tuple(range(6))
    assert sub == z6


def test_induced_substructure_filters_relation_tuples():
    g = graph(3, [(0, 1), (1, 2)])
    sub, embed = induced_substructure(g, SubUniverse(g, (0, 2)))
    assert embed == (0, 2)
    assert sub.rel_tables[0] == frozenset()


def test_direct_product_z2_z3_is_z6():
    product = direct_product(cyclic_group(2), cyclic_group(3))
    assert product.size == 6
    # oracle: exhaustive permutation search
    assert brute_isomorphisms(product, cyclic_group(6))
    assert find_isomorphism(product, cyclic_group(6)) is not None


def test_direct_product_with_singleton_copies_structure():
    z4 = cyclic_group(4)
    product = direct_product(z4, cyclic_group(1))
    assert find_isomorphism(product, z4) is not None


def test_direct_product_of_graphs_pairs_edges():
    chain = graph(2, [(0, 1), (1, 0)])
    product = direct_product(chain, chain)
    # pairing (i, j) -> 2i + j; one product edge per pair of factor edges
    assert product.rel_tables[0] == frozenset({(0, 3), (3, 0), (1, 2), (2, 1)})


def test_direct_product_requires_matching_signature():
    with pytest.raises(InputError):
        direct_product(cyclic_group(2), empty_sig_set(2))


def test_quotient_z6_by_cg03():
    z6 = cyclic_group(6)
    theta = cg(z6, [(0, 3)])
    assert theta.blocks() == ((0, 3), (1, 4), (2, 5))
    q, block_map = quotient(z6, theta)
    assert q.size == 3
    assert block_map == (0, 1, 2, 0, 1, 2)
    assert find_isomorphism(q, cyclic_group(3)) is not None


def test_quotient_by_identity_and_full():
    z6 = cyclic_group(6)
    q_id, m = quotient(z6, Congruence.identity(6))
    assert q_id == z6 and m == tuple(range(6))
    q_full, _ = quotient(z6, Congruence.full(6))
    assert q_full.size == 1


def test_quotient_rejects_incompatible_partition():
    z6 = cyclic_group(6)
    bad = Congruence.from_blocks(6, [(0, 1), (2,), (3,), (4,), (5,)])
    assert not is_congruence(z6, bad)
    with pytest.raises(InputError):
        quotient(z6, bad)


def test_congruence_canonical_form():
    theta = Congruence.from_assignment((7, 7, 3, 7, 3))
    assert theta.block_of == (0, 0, 1, 0, 1)
    assert theta.blocks() == ((0, 1, 3), (2, 4))
    assert theta.generating_pairs() == [(0, 1), (1, 3), (2, 4)]
    with pytest.raises(InputError):
        Congruence((1, 0))


def test_quotient_relations_hold_on_any_representative():
    g = graph(4, [(0, 2)])
    theta = Congruence.from_blocks(4, [(0, 1), (2, 3)])
    q, block_map = quotient(g, theta)
    assert q.size == 2
    # (0,2) has a representative, so the block pair is an edge
    assert q.rel_tables[0] == frozenset({(0, 1)})


def test_validate_labels_length():
    s = FiniteStructure(Signature(), 3, (), (), ("a", "b"))
    diags = validate(s)
    assert diags and "labels" in diags[0]


def test_labels_do_not_affect_equality():
    a = empty_sig_set(3)
    b = FiniteStructure(a.sig, 3, (), (), ("x", "y", "z"))
    assert a == b
