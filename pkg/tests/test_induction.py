import pytest

from spaceforms import groups
from spaceforms._reference_tables import REFERENCE_INDUCTIONS
from spaceforms.characters import (character_table, inner_product_int,
                                   regular_character, trivial_character)
from spaceforms.exactnum import ONE
from spaceforms.groups import find_index2_subgroup, adopt_presentation_triple
from spaceforms.induction import (MonomialRep, column_sum_is_regular,
                                  frobenius_multiplicity, induce_character,
                                  induce_in_stages, induce_twist,
                                  induced_matrices, induction_table,
                                  independent_rows, nested_handle,
                                  reflection_identities)


def test_reference_tables_reproduced(all_groups):
    for G in all_groups:
        for gen, rows in REFERENCE_INDUCTIONS[G.name].items():
            table = induction_table(G, gen)
            for r, expected in enumerate(rows):
                assert table[r].as_dict() == expected, (G.name, gen, r)


def test_column_sums_are_regular(all_groups):
    for G in all_groups:
        for gen in ("R", "S", "T", "RST"):
            assert column_sum_is_regular(G, gen)


def test_induction_from_whole_group_is_identity(g2t):
    whole = g2t.subgroup(range(len(g2t)), name="whole")
    chi = character_table(g2t)["3"].char
    sub = whole.group
    transported = type(chi)(sub, (chi.value_on_element(sub.to_parent[rep])
                                  for rep in sub.class_reps))
    assert induce_character(whole, transported) == chi


def test_induction_from_trivial_subgroup_is_regular(all_groups):
    for G in all_groups:
        triv = G.subgroup([G.identity_index], name="triv")
        got = induce_character(triv, trivial_character(triv.group))
        assert got == regular_character(G)


def test_frobenius_reciprocity_examples(g2t, g2i):
    assert frobenius_multiplicity("3", g2t.cyclic_subgroup("T"), 2) == 1
    assert frobenius_multiplicity("6s", g2i.cyclic_subgroup("T"), 5) == 2
    for G in (g2t, g2i):
        for gen in ("R", "S", "T", "RST"):
            assert frobenius_multiplicity("1", G.cyclic_subgroup(gen), 0) == 1


def test_frobenius_reciprocity_exhaustive(all_groups):
    # both sides of the reciprocity identity for every irrep, subgroup
    # and twist (the helper raises on any mismatch)
    for G in all_groups:
        table = character_table(G)
        for gen in ("R", "S", "T", "RST"):
            H = G.cyclic_subgroup(gen)
            for r in range(H.order):
                for ir in table:
                    frobenius_multiplicity(ir.name, H, r)


def test_dimension_bookkeeping(all_groups):
    for G in all_groups:
        for gen in ("R", "S", "T", "RST"):
            H = G.cyclic_subgroup(gen)
            for row in induction_table(G, gen):
                assert row.induced_dimension == len(G) // H.order


def test_reflection_identities(all_groups):
    for G in all_groups:
        for gen in ("R", "S", "T", "RST"):
            refl = reflection_identities(G, gen)
            if G.name == "2T" and gen in ("S", "T"):
                # cross-linked: the reflection pairs the S and T columns
                # instead of folding each column onto itself
                assert not all(ok for _, _, ok in refl)
            else:
                assert all(ok for _, _, ok in refl)


def test_tetrahedral_s_column_is_reflected_t_column(g2t):
    ts = induction_table(g2t, "S")
    tt = induction_table(g2t, "T")
    for r in range(6):
        assert ts[r].as_dict() == tt[(6 - r) % 6].as_dict()


def test_independent_rows_match_ceasing_convention(g2o):
    rows = induction_table(g2o, "T")
    assert independent_rows(rows) == [0, 1, 2, 3, 4]
    rows = induction_table(g2o, "S")
    assert independent_rows(rows) == [0, 1, 2, 3]
    rows = induction_table(g2o, "R")
    assert independent_rows(rows) == [0, 1, 2]


def test_induce_in_stages_through_index2(g2o):
    K = find_index2_subgroup(g2o)
    adopt_presentation_triple(K.group, 2, 3, 3)
    H = g2o.cyclic_subgroup("S")
    assert set(H.member_indices) <= set(K.member_indices)
    res = induce_in_stages(g2o, K, H, 4)
    assert res["equal"]
    ktab = character_table(K.group)
    middle = {ir.name: inner_product_int(ir.char, res["middle"]) for ir in ktab}
    assert {k: v for k, v in middle.items() if v} == {"1''": 1, "3": 1}
    gtab = character_table(g2o)
    final = {ir.name: inner_product_int(ir.char, res["staged"]) for ir in gtab}
    assert {k: v for k, v in final.items() if v} == {"2": 1, "3": 1, "3'": 1}


def test_induce_in_stages_trivial_chain(all_groups):
    for G in all_groups:
        triv = G.subgroup([G.identity_index], name="triv")
        K = G.cyclic_subgroup("T")
        res = induce_in_stages(G, K, triv, 0)
        assert res["equal"]
        assert res["direct"] == regular_character(G)


def test_induce_in_stages_center_inside_cyclic(all_groups):
    for G in all_groups:
        H = G.cyclic_subgroup("RST")
        for K_gen in ("R", "S", "T"):
            K = G.cyclic_subgroup(K_gen)
            for r in (0, 1):
                res = induce_in_stages(G, K, H, r)
                assert res["equal"], (G.name, K_gen, r)


def test_nested_handle_rejects_non_subsets(g2o):
    K = g2o.cyclic_subgroup("R")
    H = g2o.cyclic_subgroup("S")
    with pytest.raises(ValueError):
        nested_handle(K, H)


def test_monomial_rep_structure(g2t):
    rep = induced_matrices(g2t, "R", 1)
    assert rep.degree == 6 and rep.block_dim == 1
    mat = rep.matrix(g2t.generators["S"])
    for row in range(6):
        assert sum(1 for c in range(6) if not mat[row][c].is_zero()) == 1
    for col in range(6):
        nz = [mat[r][col] for r in range(6) if not mat[r][col].is_zero()]
        assert len(nz) == 1
        assert (nz[0] * nz[0].conjugate()) == ONE   # a root of unity


def test_monomial_rep_homomorphism_exhaustive(g2t):
    for gen in ("R", "S", "T", "RST"):
        H = g2t.cyclic_subgroup(gen)
        for r in range(H.order):
            rep = induced_matrices(g2t, gen, r)
            assert all(rep.is_homomorphic_at(a, b)
                       for a in range(24) for b in range(24))
            assert rep.character() == induce_character(H, r)


def test_monomial_rep_regular_from_trivial(g2t):
    triv = g2t.subgroup([g2t.identity_index], name="triv")
    rep = induced_matrices(g2t, triv, 0)
    assert rep.degree == 24
    assert rep.character() == regular_character(g2t)
    assert rep.character().value_on_element(g2t.identity_index).as_integer() == 24


def test_block_monomial_rep_with_2dim_inducing_rep(g2t):
    # generic block construction: induce an exact two-dimensional rep of
    # the central subgroup (diag of two odd twists)
    from spaceforms.exactnum import ZERO
    H = g2t.cyclic_subgroup("RST")
    sub = H.group
    e_idx, neg_idx = sub.to_parent[0], sub.to_parent[1]
    blocks = {e_idx: ((ONE, ZERO), (ZERO, ONE)),
              neg_idx: ((-ONE, ZERO), (ZERO, -ONE))}
    rep = induced_matrices(g2t, H, blocks)
    assert rep.degree == 24 and rep.block_dim == 2
    assert all(rep.is_homomorphic_at(a, b)
               for a in range(24) for b in range(24))
    doubled = induce_character(H, 1) * 2
    assert rep.character() == doubled


def test_monomial_rep_rejects_non_homomorphism(g2t):
    H = g2t.cyclic_subgroup("RST")
    sub = H.group
    bad = {sub.to_parent[0]: ((ONE,),),
           sub.to_parent[1]: ((ONE + ONE,),)}   # 2 is not a root of unity
    with pytest.raises(ValueError):
        MonomialRep(g2t, H, bad, 1)


def test_regular_rep_splits_over_the_center(all_groups):
    # Ind from {E} = Ind from {E,-E} of the two central characters
    for G in all_groups:
        H = G.cyclic_subgroup("RST")
        split = induce_character(H, 0) + induce_character(H, 1)
        assert split == regular_character(G)


def test_induced_span_is_full_rank(all_groups):
    from spaceforms.theorems import _induced_span_rank
    for G in all_groups:
        assert _induced_span_rank(G, ("R", "S", "T")) == G.num_classes


def test_dropping_t_loses_rank_on_2i(g2i):
    from spaceforms.theorems import _induced_span_rank
    assert _induced_span_rank(g2i, ("R", "S")) < g2i.num_classes
