import pytest

from algindep.core import InputError, SizeLimitExceeded, SubUniverse, is_subuniverse
from algindep.generation import (
    all_congruences,
    all_subuniverses,
    cg,
    close,
    generated_subuniverse_of_square,
    join,
)
from algindep.zoo import (
    cyclic_group,
    empty_sig_set,
    permutation_index,
    symmetric_group,
)

from oracles import brute_cg, brute_close, brute_congruences, brute_pair_closure


def test_close_z6_generated_by_2():
    z6 = cyclic_group(6)
    sub, dag = close(z6, [2])
    assert sub.members == (0, 2, 4)
    assert brute_close(z6, [2]) == frozenset({0, 2, 4})
    assert set(dag.elements()) == {0, 2, 4}


def test_close_full_seed_is_identity():
    z6 = cyclic_group(6)
    sub, _ = close(z6, range(6))
    assert sub.members == tuple(range(6))


def test_close_pure_set_is_the_seed():
    s = empty_sig_set(5)
    sub, dag = close(s, [1, 3])
    assert sub.members == (1, 3)
    assert all(node.op is None for node in dag.nodes)


def test_close_rejects_out_of_range_seed():
    with pytest.raises(InputError):
        close(empty_sig_set(3), [7])


def test_witness_dag_reproduces_closure_and_is_topological():
    z6 = cyclic_group(6)
    sub, dag = close(z6, [2])
    seen = set()
    for node in dag.nodes:
        assert all(a in seen for a in node.args)
        seen.add(node.element)
    values = dag.evaluate(z6, {2: 2})
    assert set(values) == set(sub.members)
    assert all(values[e] == e for e in sub.members)


def test_join_z2_z3_is_z6():
    z6 = cyclic_group(6)
    sub, dag = join(z6, SubUniverse(z6, (0, 3)), SubUniverse(z6, (0, 2, 4)))
    assert sub.members == tuple(range(6))
    sides = {n.element: n.side for n in dag.nodes if n.op is None}
    assert sides == {0: "both", 2: "b", 3: "a", 4: "b"}


def test_join_idempotent():
    z6 = cyclic_group(6)
    sub = SubUniverse(z6, (0, 2, 4))
    joined, _ = join(z6, sub, sub)
    assert joined.members == sub.members


def test_join_s4_example_has_eight_elements():
    s4 = symmetric_group(4)
    a = SubUniverse(s4, (0, permutation_index(4, (1, 0, 2, 3))))
    b = SubUniverse(s4, (0, permutation_index(4, (2, 3, 0, 1))))
    sub, _ = join(s4, a, b)
    assert len(sub.members) == 8


def test_join_rejects_foreign_subuniverse():
    z6 = cyclic_group(6)
    z4 = cyclic_group(4)
    with pytest.raises(InputError):
        join(z6, SubUniverse(z4, (0, 2)), SubUniverse(z6, (0, 3)))


def test_square_of_identity_pairs_is_diagonal_of_join():
    z6 = cyclic_group(6)
    square = generated_subuniverse_of_square(z6, [(3, 3), (2, 2)])
    closure, _ = close(z6, [2, 3])
    assert square == frozenset((e, e) for e in closure.members)


def test_square_z6_functional_example():
    z6 = cyclic_group(6)
    pairs = [(3, 0), (2, 2)]
    expected = frozenset({(0, 0), (2, 2), (4, 4), (3, 0), (5, 2), (1, 4)})
    assert brute_pair_closure(z6, pairs) == expected
    assert generated_subuniverse_of_square(z6, pairs) == expected


def test_square_pure_set_keeps_pairs():
    s = empty_sig_set(3)
    pairs = frozenset({(0, 1), (0, 2)})
    assert generated_subuniverse_of_square(s, pairs) == pairs


def test_cg_empty_is_identity():
    z6 = cyclic_group(6)
    assert cg(z6, []).is_identity()


def test_cg_z6_principal_congruences():
    z6 = cyclic_group(6)
    theta = cg(z6, [(0, 3)])
    assert theta.blocks() == ((0, 3), (1, 4), (2, 5))
    assert theta == brute_cg(z6, [(0, 3)])
    assert cg(z6, [(0, 1)]).is_full()


def test_all_congruences_z6_matches_divisor_lattice():
    z6 = cyclic_group(6)
    lattice = all_congruences(z6)
    assert len(lattice) == 4
    assert lattice == brute_congruences(z6)


def test_all_congruences_two_element_set():
    s = empty_sig_set(2)
    assert len(all_congruences(s)) == 2


def test_all_congruences_prime_cyclic_group_is_simple():
    z5 = cyclic_group(5)
    assert len(all_congruences(z5)) == 2


def test_all_congruences_size_bound():
    with pytest.raises(SizeLimitExceeded):
        all_congruences(empty_sig_set(13))
    assert all_congruences(empty_sig_set(3), max_size=3)


def test_close_result_is_subuniverse():
    z6 = cyclic_group(6)
    for seed in ([1], [2], [3], [4, 2]):
        sub, _ = close(z6, seed)
        assert is_subuniverse(z6, sub.members)


def test_all_subuniverses_z6_are_the_divisor_subgroups():
    z6 = cyclic_group(6)
    subs = [s.members for s in all_subuniverses(z6)]
    assert subs == [(0,), (0, 3), (0, 2, 4), (0, 1, 2, 3, 4, 5)]


def test_all_subuniverses_pure_set_are_all_nonempty_subsets():
    s = empty_sig_set(4)
    assert len(all_subuniverses(s)) == 15
