"""Evaluator results on the builtin diagrams, checked against independent
closed forms, plus summed invariants and multiplicativity."""

from math import gcd

import pytest

import oracles
from hopfg import (
    ColoredDiagram,
    EvaluationError,
    builtin_diagram,
    color,
    colorings,
    cyclic_group,
    evaluate,
    evaluate_summed,
    connected_sum_check,
    solve_integrals,
)
from hopfg.cyclo import Cyclo
from hopfg.groups import GroupHom, enumerate_homs
from hopfg.diagrams import fundamental_presentation


def _gauss_sum(l: int, d: int) -> Cyclo:
    total = Cyclo.zero(l)
    for j in range(l):
        total = total + Cyclo.zeta(l, (d * j * j) % l)
    return total * Cyclo.rational(1, l, conductor=l)


def _clasp_value(l: int, d: int) -> Cyclo:
    g = gcd(l, d) if d else l
    return Cyclo.rational(g * (3 + (-1) ** (l // g)), 2 * l)


def test_cp2_matches_gauss_sums(bank):
    for (k, l, d) in [(1, 2, 1), (1, 3, 1), (2, 3, 2), (1, 4, 1), (1, 5, 2), (2, 6, 3)]:
        H, ints = bank(oracles.spec_of(k, l, d))
        cd = colorings(builtin_diagram("cp2"), H.group)[0]
        assert evaluate(H, ints, cd) == _gauss_sum(l, d).lift(H.conductor)


def test_cp2_pinned_values(bank):
    H, ints = bank("cyclic:k=1,l=2,d=1")
    cd = colorings(builtin_diagram("cp2"), H.group)[0]
    assert evaluate(H, ints, cd) == Cyclo.zero(1)
    H, ints = bank("cyclic:k=1,l=3,d=1")
    cd = colorings(builtin_diagram("cp2"), H.group)[0]
    third = Cyclo.rational(1, 3, conductor=3)
    expected = (Cyclo.one(3) + Cyclo.zeta(3) + Cyclo.zeta(3)) * third
    assert evaluate(H, ints, cd) == expected


def test_cp2bar_is_the_conjugate(bank):
    for (k, l, d) in [(1, 3, 1), (1, 4, 3), (2, 5, 2)]:
        H, ints = bank(oracles.spec_of(k, l, d))
        plus = colorings(builtin_diagram("cp2"), H.group)[0]
        minus = colorings(builtin_diagram("cp2bar"), H.group)[0]
        vp = evaluate(H, ints, plus).value
        vm = evaluate(H, ints, minus).value
        assert vm == vp.conjugate()


def test_s2xs2_closed_form(bank):
    for (k, l, d) in [(1, 1, 0), (1, 2, 1), (1, 3, 1), (1, 4, 2), (2, 6, 4), (1, 5, 0)]:
        H, ints = bank(oracles.spec_of(k, l, d))
        cd = colorings(builtin_diagram("s2xs2"), H.group)[0]
        assert evaluate(H, ints, cd) == _clasp_value(l, d).lift(H.conductor)


def test_s1xs3_every_connection_gives_the_dimension(bank):
    for (k, l, d) in [(1, 2, 1), (2, 3, 1), (3, 4, 3)]:
        H, ints = bank(oracles.spec_of(k, l, d))
        summed = evaluate_summed(H, ints, builtin_diagram("s1xs3"))
        assert summed.hom_count == k
        for iv in summed.values:
            assert iv.value == Cyclo.rational(l)
        assert summed.total == Cyclo.rational(k * l)


def test_s1xs1xs2_constant_over_connections(bank):
    for (k, l, d) in [(2, 4, 2), (3, 6, 4), (2, 5, 0), (2, 3, 1)]:
        H, ints = bank(oracles.spec_of(k, l, d))
        summed = evaluate_summed(H, ints, builtin_diagram("s1xs1xs2"))
        assert summed.hom_count == k * k
        expected = (_clasp_value(l, d) * Cyclo.rational(l * l)).lift(H.conductor)
        for iv in summed.values:
            assert iv.value == expected
        assert summed.total == expected * Cyclo.rational(k * k)


def test_s4_is_one(bank, kp):
    specs = ["cyclic:k=1,l=1,d=0", "cyclic:k=2,l=3,d=1", "cyclic:k=1,l=4,d=3"]
    for spec in specs:
        H, ints = bank(spec)
        cd = colorings(builtin_diagram("s4"), H.group)[0]
        assert evaluate(H, ints, cd) == Cyclo.one(1)
    H, ints = kp
    cd = colorings(builtin_diagram("s4"), H.group)[0]
    assert evaluate(H, ints, cd) == Cyclo.one(1)


def test_kac_paljutkin_pinned_values(kp):
    H, ints = kp
    half = Cyclo.rational(1, 2)

    def val(name):
        cd = colorings(builtin_diagram(name), H.group)[0]
        return evaluate(H, ints, cd).value

    assert val("cp2") == half
    assert val("cp2bar") == half
    assert val("s2xs2") == Cyclo.rational(1, 4)
    assert val("s4") == Cyclo.one(1)
    s13 = evaluate_summed(H, ints, builtin_diagram("s1xs3"))
    assert s13.hom_count == 2
    assert [iv.value for iv in s13.values] == [Cyclo.rational(8), Cyclo.rational(8)]
    assert s13.total == Cyclo.rational(16)
    s112 = evaluate_summed(H, ints, builtin_diagram("s1xs1xs2"))
    assert s112.hom_count == 4
    assert s112.total == Cyclo.rational(64)
    assert all(iv.value == Cyclo.rational(16) for iv in s112.values)


def test_summed_total_matches_componentwise_sum(bank):
    H, ints = bank("cyclic:k=3,l=2,d=1")
    d = builtin_diagram("s1xs1xs2")
    summed = evaluate_summed(H, ints, d)
    assert summed.hom_count == len(colorings(d, H.group)) == 9
    total = Cyclo.zero(1)
    for cd in colorings(d, H.group):
        total = total + evaluate(H, ints, cd).value
    assert summed.total == total


def test_summed_over_a_foreign_group(bank):
    # the coloring group may differ from the algebra's grading group
    H, ints = bank("cyclic:k=1,l=3,d=1")
    summed = evaluate_summed(H, ints, builtin_diagram("s1xs3"), G=cyclic_group(1))
    assert summed.hom_count == 1
    assert summed.total == Cyclo.rational(3)


def test_reorientation_invariance_sample(bank):
    from hopfg import reorient, rotate_component

    for spec in ["cyclic:k=2,l=3,d=1", "kac-paljutkin"]:
        H, ints = bank(spec)
        for name in ("cp2", "s2xs2", "s1xs1xs2"):
            d = builtin_diagram(name)
            base = [evaluate(H, ints, cd).value for cd in colorings(d, H.group)]
            for u in d.undotted:
                rd = reorient(d, u.id)
                assert [evaluate(H, ints, cd).value
                        for cd in colorings(rd, H.group)] == base
                n = len(u.events)
                for r in range(1, n):
                    rr = rotate_component(d, u.id, r)
                    assert [evaluate(H, ints, cd).value
                            for cd in colorings(rr, H.group)] == base


def test_connected_sum_multiplicative_sample(bank):
    H, ints = bank("cyclic:k=2,l=3,d=1")
    pairs = [("cp2", "cp2"), ("s1xs3", "s1xs3"), ("s2xs2", "s1xs1xs2"),
             ("s1xs1xs2", "s4"), ("cp2bar", "s1xs3")]
    for na, nb in pairs:
        da, db = builtin_diagram(na), builtin_diagram(nb)
        for hom_a in enumerate_homs(fundamental_presentation(da), H.group):
            for hom_b in enumerate_homs(fundamental_presentation(db), H.group):
                equal, vsum, vprod = connected_sum_check(H, ints, da, db, hom_a, hom_b)
                assert equal and vsum == vprod


def test_connected_sum_of_s1xs3_pair_value(bank):
    # l^2 on every connection
    for (k, l, d) in [(2, 3, 1), (1, 4, 2)]:
        H, ints = bank(oracles.spec_of(k, l, d))
        summed = evaluate_summed(
            H, ints, builtin_diagram("connected-sum:s1xs3,s1xs3"))
        assert summed.hom_count == k * k
        for iv in summed.values:
            assert iv.value == Cyclo.rational(l * l)


def test_foreign_integral_data_rejected(bank):
    H1, ints1 = bank("cyclic:k=1,l=3,d=1")
    H2, _ = bank("cyclic:k=1,l=3,d=2")
    cd = colorings(builtin_diagram("cp2"), H1.group)[0]
    with pytest.raises(EvaluationError, match="different algebra"):
        evaluate(H2, ints1, cd)


def test_inconsistent_coloring_rejected(bank):
    H, ints = bank("cyclic:k=3,l=2,d=1")
    d = oracles.two_dots_chain()
    g = H.group.element(1)
    bad = ColoredDiagram(d, {0: g, 1: g})  # g*g != 1 in Z_3
    with pytest.raises(EvaluationError, match="do not telescope"):
        evaluate(H, ints, bad)


def test_empty_component_contributes_the_dimension(bank):
    H, ints = bank("cyclic:k=1,l=4,d=1")
    d = oracles.kink_with_split_unknot()
    cd = colorings(d, H.group)[0]
    iv = evaluate(H, ints, cd)
    plain = evaluate(H, ints, colorings(builtin_diagram("cp2"), H.group)[0])
    # the bare unknot multiplies the bracket by dim H_1 and divides the
    # normalization by the same factor
    assert iv.value == plain.value
    assert iv.exponent == plain.exponent - 1
    assert iv.bracket == plain.bracket * Cyclo.rational(4)
