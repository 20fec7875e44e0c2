import math

import pytest

from spaceforms import groups
from spaceforms.characters import character_table
from spaceforms.spectra import (DegeneracySeries, SpectralWeight, TwistError,
                                TwistSpec, degeneracy, degeneracy_series,
                                lens_torsion, oracle_projector_degeneracy,
                                spectral_sum)


def lens_count(q, r, n):
    """Independent counting oracle for the homogeneous lens space."""
    return (n + 1) * sum(1 for m in range(-n, n + 1, 2) if (m - r) % q == 0)


def test_lens_series_against_counting_oracle():
    for q in (1, 2, 3, 4, 5, 6, 8, 10, 12):
        Z = groups.cyclic_group(q)
        for r in range(q):
            for n in range(21):
                assert degeneracy(Z, r, n) == lens_count(q, r, n)


def test_round_sphere_and_z2():
    Z1 = groups.cyclic_group(1)
    assert [degeneracy(Z1, 0, n) for n in range(8)] == [(n + 1) ** 2
                                                        for n in range(8)]
    Z2 = groups.cyclic_group(2)
    for n in range(12):
        want = (n + 1) ** 2 if n % 2 == 0 else 0
        assert degeneracy(Z2, 0, n) == want


def test_parity_vanishing(all_groups):
    for G in all_groups:
        table = character_table(G)
        for ir in table:
            s = degeneracy_series(G, ir.name, 13)
            for n in range(14):
                if ir.label.spinor and n % 2 == 0:
                    assert s[n] == 0
                if not ir.label.spinor and n % 2 == 1:
                    assert s[n] == 0


def test_additivity(g2o):
    s1 = degeneracy_series(g2o, "2s", 25)
    s2 = degeneracy_series(g2o, "3", 25)
    both = degeneracy_series(g2o, {"2s": 1, "3": 1}, 25)
    assert all(both[n] == s1[n] + s2[n] for n in range(26))


def test_reflection_symmetry_of_lens_twists():
    for q in (4, 6, 8, 10):
        Z = groups.cyclic_group(q)
        for r in range(q):
            a = degeneracy_series(Z, r, 24)
            b = degeneracy_series(Z, (q - r) % q, 24)
            assert a.entries == b.entries


def test_poincare_like_trivial_series(g2i):
    s = degeneracy_series(g2i, "1", 14)
    assert s.entries[:13] == (1,) + (0,) * 11 + (13,)


def test_lens_matches_twisted_quotient(g2t):
    # the order-6 lens of <S> with twist 1 carries the same series as
    # the tetrahedral quotient twisted by the induced 2s'' + 2s
    H = g2t.cyclic_subgroup("S")
    lhs = degeneracy_series(H, 1, 60)
    rhs = degeneracy_series(g2t, {"2s": 1, "2s'": 1}, 60)
    assert lhs.entries == rhs.entries


def test_twist_validation(g2t):
    with pytest.raises(TwistError):
        degeneracy(g2t, {"3": -1, "1": 5}, 4)
    with pytest.raises(TwistError):
        TwistSpec.cyclic(g2t, 1)
    with pytest.raises(KeyError):
        degeneracy(g2t, "4s", 2)   # 2T has no 4s; valid names listed


def test_series_exports(g2t):
    s = degeneracy_series(g2t, "1", 6)
    doc = s.to_json()
    assert doc["schema"] == "spaceforms/1"
    assert doc["entries"][0] == {"level": 0, "eigenvalue": 0, "degeneracy": 1}
    csv = s.to_csv()
    assert csv.splitlines()[0] == "level,eigenvalue,degeneracy"
    assert csv.splitlines()[1] == "0,0,1"


def test_spectral_sum_raw_and_counting():
    Z2 = groups.cyclic_group(2)
    s = degeneracy_series(Z2, 0, 6)
    raw = spectral_sum(s, SpectralWeight.raw())
    assert raw.value == sum(s.entries)
    cnt = spectral_sum(s, SpectralWeight.counting(10.0))
    assert cnt.value == 1 + 9    # levels 0 and 2 (eigenvalues 0 and 8)


def test_heat_trace_limit_and_bound():
    Z1 = groups.cyclic_group(1)
    s = degeneracy_series(Z1, 0, 40)
    big_t = spectral_sum(s, SpectralWeight.heat(50.0))
    assert abs(big_t.value - 1.0) < 1e-12     # ground state only
    small = spectral_sum(s, SpectralWeight.heat(0.5))
    longer = degeneracy_series(Z1, 0, 80)
    true_tail = (spectral_sum(longer, SpectralWeight.heat(0.5)).value
                 - small.value)
    assert small.truncation_bound is not None
    assert true_tail <= small.truncation_bound


def test_zeta_threshold():
    Z1 = groups.cyclic_group(1)
    s = degeneracy_series(Z1, 0, 10)
    val = spectral_sum(s, SpectralWeight.zeta(3.0))
    want = sum((n + 1) ** 2 * (n * (n + 2)) ** -3.0 for n in range(1, 11))
    assert abs(val.value - want) < 1e-15
    with pytest.raises(ValueError):
        spectral_sum(s, SpectralWeight.zeta(1.2))
    with pytest.raises(ValueError):
        SpectralWeight.heat(0.0)


def test_torsion_anchor_values():
    assert lens_torsion(4, 1).exact.as_integer() == 2
    assert lens_torsion(6, 1).exact.as_integer() == 1
    assert lens_torsion(6, 3).exact.as_integer() == 4
    lhs = lens_torsion(4, 1).log_value
    rhs = lens_torsion(6, 1).log_value + lens_torsion(6, 3).log_value / 2
    assert abs(lhs - rhs) < 1e-12


def test_torsion_rejects_untwisted():
    with pytest.raises(ValueError):
        lens_torsion(6, 0)
    with pytest.raises(ValueError):
        lens_torsion(6, 12)
    with pytest.raises(ValueError):
        lens_torsion(1, 1)


def test_torsion_general_values():
    for q in (3, 5, 8, 12):
        for r in range(1, q):
            lt = lens_torsion(q, r)
            assert abs(lt.value - 4 * math.sin(math.pi * r / q) ** 2) < 1e-12
            assert lt.value > 0


def test_oracle_examples():
    Z2 = groups.cyclic_group(2)
    assert oracle_projector_degeneracy(Z2, 0, 2) == 9
    Z4 = groups.cyclic_group(4)
    assert oracle_projector_degeneracy(Z4, 0, 0) == 1


def test_oracle_matches_formula_spotwise(g2t):
    for name in ("1", "2s", "3"):
        for n in range(9):
            assert oracle_projector_degeneracy(g2t, name, n) == \
                degeneracy(g2t, name, n)


def test_oracle_level_cap(g2t):
    with pytest.raises(ValueError):
        oracle_projector_degeneracy(g2t, "1", 9)


def test_oracle_rejects_reducible(g2t):
    with pytest.raises(TwistError):
        oracle_projector_degeneracy(g2t, {"1": 2}, 2)


def test_degeneracy_series_equality_semantics(g2t):
    a = degeneracy_series(g2t, "1", 10)
    b = degeneracy_series(g2t, {"1": 1}, 10)
    assert a == b
    assert isinstance(a, DegeneracySeries)
