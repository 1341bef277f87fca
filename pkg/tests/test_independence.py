import pytest

from algindep.core import InputError, SubUniverse, induced_substructure
from algindep.generation import all_subuniverses, close
from algindep.independence import (
    CongruenceWitness,
    SubalgebraWitness,
    Verdict,
    boole_independent,
    check_word_condition,
    decide_congruence_independence,
    decide_subalgebra_independence,
    group_diagnostics,
)
from algindep.morphisms import HOM_CLASS_AUTO, Homomorphism
from algindep.zoo import (
    cyclic_group,
    empty_sig_set,
    powerset_boolean_algebra,
    symmetric_group,
    permutation_index,
)

from oracles import brute_congruences


def test_verdict_invariant():
    with pytest.raises(ValueError):
        Verdict(True, CongruenceWitness((), (), "a", (0, 1), False), 0)
    with pytest.raises(ValueError):
        Verdict(False, None, 3)


def test_z6_subgroups_are_independent():
    z6 = cyclic_group(6)
    a = SubUniverse(z6, (0, 3))
    b = SubUniverse(z6, (0, 2, 4))
    verdict = decide_subalgebra_independence(z6, a, b)
    assert verdict.independent
    # 2 endomorphisms of Z2 times 3 endomorphisms of Z3
    assert verdict.pairs_examined == 6


def test_s3_witness_is_identity_against_trivial():
    s3 = symmetric_group(3)
    a, _ = close(s3, [permutation_index(3, (1, 2, 0))])
    b, _ = close(s3, [permutation_index(3, (1, 0, 2))])
    verdict = decide_subalgebra_independence(s3, a, b)
    assert not verdict.independent
    w = verdict.witness
    assert isinstance(w, SubalgebraWitness)
    assert w.alpha == tuple((e, e) for e in a.members)  # alpha is the identity
    assert all(y == 0 for _, y in w.beta)  # beta is the trivial map
    assert w.refusal.reason == "not-functional"


def test_s4_transposition_pair_is_independent():
    s4 = symmetric_group(4)
    a = SubUniverse(s4, (0, permutation_index(4, (1, 0, 2, 3))))
    b = SubUniverse(s4, (0, permutation_index(4, (2, 3, 0, 1))))
    verdict = decide_subalgebra_independence(s4, a, b)
    assert verdict.independent and verdict.pairs_examined == 4


def test_automorphisms_only_flag():
    s = empty_sig_set(3)
    a = SubUniverse(s, (0, 1))
    b = SubUniverse(s, (1, 2))
    all_v = decide_subalgebra_independence(s, a, b)
    auto_v = decide_subalgebra_independence(s, a, b, hom_class=HOM_CLASS_AUTO)
    assert not all_v.independent and not auto_v.independent
    # the automorphism stream is shorter: 2x2 permutation pairs at most
    assert auto_v.pairs_examined <= 4
    singleton = SubUniverse(s, (0,))
    pair = SubUniverse(s, (0, 1))
    assert not decide_subalgebra_independence(
        s, singleton, pair, hom_class=HOM_CLASS_AUTO
    ).independent


def test_strong_mode_decides_on_graphs():
    from algindep.zoo import graph

    g = graph(3, [(0, 1), (1, 0)])
    a = SubUniverse(g, (0, 1))
    b = SubUniverse(g, (1, 2))
    for mode in ("weak", "strong"):
        verdict = decide_subalgebra_independence(g, a, b, mode=mode)
        assert not verdict.independent  # maps can disagree on the shared vertex
    isolated = SubUniverse(g, (2,))
    assert decide_subalgebra_independence(g, a, isolated, mode="strong").independent


def test_congruence_independence_singleton_inside_pair():
    s = empty_sig_set(3)
    a = SubUniverse(s, (0,))
    b = SubUniverse(s, (0, 1))
    verdict = decide_congruence_independence(s, a, b)
    assert verdict.independent
    assert verdict.pairs_examined == 2  # one congruence of A, two of B


def test_congruence_independence_equal_pair_fails_fast():
    s = empty_sig_set(4)
    a = SubUniverse(s, (0, 1))
    verdict = decide_congruence_independence(s, a, a)
    assert not verdict.independent
    assert verdict.pairs_examined == 0  # refused before lattice work
    assert isinstance(verdict.witness, CongruenceWitness)
    assert verdict.witness.pair == (0, 1)


def test_congruence_independence_disjoint_pairs():
    s = empty_sig_set(4)
    a = SubUniverse(s, (0, 1))
    b = SubUniverse(s, (2, 3))
    verdict = decide_congruence_independence(s, a, b)
    assert verdict.independent
    # oracle: all congruence pairs of A and B extend over the 4-element join
    assert verdict.pairs_examined == len(brute_congruences(
        induced_substructure(s, a)[0]
    )) * len(brute_congruences(induced_substructure(s, b)[0]))


def test_congruence_size_bound_applies_to_the_join():
    from algindep.core import SizeLimitExceeded

    z13 = cyclic_group(13)
    a = SubUniverse(z13, (0,))
    b = SubUniverse(z13, tuple(range(13)))
    with pytest.raises(SizeLimitExceeded):
        decide_congruence_independence(z13, a, b)
    assert decide_congruence_independence(z13, a, b, max_size=13).independent


def test_boole_independent_examples():
    ba = powerset_boolean_algebra(4)
    # atoms 1..4 are bits 0..3
    a = SubUniverse(ba, (0, 0b0011, 0b1100, 15))
    b = SubUniverse(ba, (0, 0b0101, 0b1010, 15))
    assert boole_independent(ba, a, b)
    c = SubUniverse(ba, (0, 0b0001, 0b1110, 15))
    assert not boole_independent(ba, c, c)
    minimal = SubUniverse(ba, (0, 15))
    assert boole_independent(ba, minimal, minimal)


def test_boole_independent_rejects_non_boolean_parent():
    z6 = cyclic_group(6)
    with pytest.raises(InputError):
        boole_independent(z6, SubUniverse(z6, (0,)), SubUniverse(z6, (0,)))


def test_group_diagnostics_z6():
    z6 = cyclic_group(6)
    diag = group_diagnostics(z6, SubUniverse(z6, (0, 3)), SubUniverse(z6, (0, 2, 4)))
    assert diag.intersection_trivial
    assert diag.a_normal_in_join and diag.b_normal_in_join
    assert diag.prediction == "independent"


def test_group_diagnostics_s3():
    s3 = symmetric_group(3)
    a, _ = close(s3, [permutation_index(3, (1, 2, 0))])
    b, _ = close(s3, [permutation_index(3, (1, 0, 2))])
    diag = group_diagnostics(s3, a, b)
    assert diag.a_normal_in_join and not diag.b_normal_in_join
    assert diag.prediction == "not_independent"


def test_group_diagnostics_s4_pair_has_no_prediction():
    s4 = symmetric_group(4)
    a = SubUniverse(s4, (0, permutation_index(4, (1, 0, 2, 3))))
    b = SubUniverse(s4, (0, permutation_index(4, (2, 3, 0, 1))))
    diag = group_diagnostics(s4, a, b)
    assert not diag.a_normal_in_join and not diag.b_normal_in_join
    assert diag.prediction == "no_prediction"


def test_group_diagnostics_rejects_non_group():
    s = empty_sig_set(3)
    with pytest.raises(InputError):
        group_diagnostics(s, SubUniverse(s, (0,)), SubUniverse(s, (1,)))


def test_check_word_condition():
    z6 = cyclic_group(6)
    a = SubUniverse(z6, (0, 3))
    b = SubUniverse(z6, (0, 2, 4))
    a_struct, _ = induced_substructure(z6, a)
    b_struct, _ = induced_substructure(z6, b)
    for am in ((0, 0), (0, 1)):
        for bm in ((0, 0, 0), (0, 1, 2), (0, 2, 1)):
            alpha = Homomorphism(a_struct, a_struct, am, "weak")
            beta = Homomorphism(b_struct, b_struct, bm, "weak")
            assert check_word_condition(z6, a, b, alpha, beta)

    s3 = symmetric_group(3)
    sa, _ = close(s3, [permutation_index(3, (1, 2, 0))])
    sb, _ = close(s3, [permutation_index(3, (1, 0, 2))])
    sa_struct, _ = induced_substructure(s3, sa)
    sb_struct, _ = induced_substructure(s3, sb)
    ident = Homomorphism(sa_struct, sa_struct, (0, 1, 2), "weak")
    triv = Homomorphism(sb_struct, sb_struct, (0, 0), "weak")
    assert not check_word_condition(s3, sa, sb, ident, triv)
    ident_b = Homomorphism(sb_struct, sb_struct, (0, 1), "weak")
    assert check_word_condition(s3, sa, sb, ident, ident_b)


def test_independence_agrees_with_subgroup_lattice_sample():
    z12 = cyclic_group(12)
    subs = all_subuniverses(z12)
    for a in subs:
        for b in subs:
            verdict = decide_subalgebra_independence(z12, a, b)
            trivial = a.member_set() & b.member_set() == {0}
            assert verdict.independent == trivial
