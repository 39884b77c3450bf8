from fractions import Fraction

import pytest

from lescop.corpus import corpus
from lescop.floer import (
    CLOSED_FORM,
    EXT_AMBIGUOUS,
    TRIANGLE,
    UNIQUE,
    BundleSpec,
    InadmissibleBundleError,
    NonIntegralChiError,
    bundle_ambiguity,
    chi_closed_form,
    chi_to_lescop,
    chi_via_triangle,
    lescop_to_chi,
    reduced_knot_chi,
    taubes_chi,
)
from lescop.invariants import SurgeryChain, WrongComponentCountError, lescop
from lescop.presentation import (
    FIGURE_EIGHT,
    TREFOIL,
    Component,
    RibbonPairSpec,
    SurgeryPresentation,
    build_ribbon_pair,
    build_triple,
)

from conftest import random_presentation, random_ribbon_spec, random_seifert, seeded


def knot_surgery(v, h=1):
    return SurgeryPresentation(h, (Component("l1", v, {}),))


def with_extra_unknots(p, count):
    """Append 0-framed unknotted components that link nothing."""
    comps = list(p.components)
    extra = [f"x{i}" for i in range(count)]
    comps = [
        Component(
            c.name,
            c.seifert,
            {**c.linking, **{e: (Fraction(0),) * c.size for e in extra}},
        )
        for c in comps
    ]
    all_names = [c.name for c in comps] + extra
    for e in extra:
        comps.append(Component(e, (), {o: () for o in all_names if o != e}))
    return SurgeryPresentation(p.base_order, tuple(comps))


class TestBundles:
    def test_admissibility(self):
        assert BundleSpec((1, 0)).is_admissible()
        assert not BundleSpec((0, 0)).is_admissible()
        assert not BundleSpec((2,)).is_admissible()

    def test_zero_bundle_rejected(self):
        p = build_ribbon_pair(RibbonPairSpec(s=1))
        with pytest.raises(InadmissibleBundleError):
            chi_closed_form(p, BundleSpec((0, 0)))

    def test_wrong_length_rejected(self):
        p = build_ribbon_pair(RibbonPairSpec(s=1))
        with pytest.raises(InadmissibleBundleError):
            chi_via_triangle(p, BundleSpec((1,)))

    def test_ambiguity(self):
        assert bundle_ambiguity(1) == UNIQUE
        assert bundle_ambiguity(5) == UNIQUE
        assert bundle_ambiguity(4) == EXT_AMBIGUOUS
        with pytest.raises(ValueError):
            bundle_ambiguity(0)

    def test_report_carries_ambiguity(self):
        p = build_ribbon_pair(RibbonPairSpec(s=1, base_order=4))
        assert chi_closed_form(p).ambiguity == EXT_AMBIGUOUS
        p = build_ribbon_pair(RibbonPairSpec(s=1, base_order=3))
        assert chi_via_triangle(p).ambiguity == UNIQUE

    def test_chi_ignores_which_admissible_bundle(self):
        for name, doc in corpus().items():
            p = doc.presentation
            n = len(p.components)
            if n > 3:
                continue
            chis = {
                chi_closed_form(
                    p, BundleSpec(tuple((mask >> i) & 1 for i in range(n)))
                ).chi
                for mask in range(1, 2**n)
            }
            assert len(chis) == 1, name


class TestClosedForm:
    def test_trefoil(self):
        r = chi_closed_form(knot_surgery(TREFOIL), BundleSpec((1,)))
        assert r.chi == -2
        assert r.route == CLOSED_FORM
        assert isinstance(r.chi, int)

    def test_ribbon_pair(self):
        assert chi_closed_form(build_ribbon_pair(RibbonPairSpec(s=1)), BundleSpec((1, 1))).chi == -2

    def test_triple(self):
        assert chi_closed_form(build_triple(1, RibbonPairSpec(s=0)), BundleSpec((1, 1, 1))).chi == -2

    def test_four_components_vanish(self):
        rng = seeded(41)
        p = with_extra_unknots(build_triple(2, RibbonPairSpec(s=1)), 1)
        assert chi_closed_form(p).chi == 0

    def test_no_components(self):
        with pytest.raises(WrongComponentCountError):
            chi_closed_form(SurgeryPresentation(1, ()))

    def test_non_integral_chi_is_an_error(self):
        v = ((Fraction(1, 3), Fraction(1)), (Fraction(0), Fraction(1, 3)))
        p = knot_surgery(v, h=3)
        with pytest.raises(NonIntegralChiError):
            chi_closed_form(p)


class TestTriangle:
    def test_one_component_matches_closed_form(self):
        rng = seeded(42)
        for _ in range(10):
            p = knot_surgery(random_seifert(rng, rng.randint(0, 3)))
            assert chi_via_triangle(p).chi == chi_closed_form(p).chi

    def test_ribbon_pair_difference(self):
        # -Delta''_after + Delta''_before = -2 - 0
        assert chi_via_triangle(build_ribbon_pair(RibbonPairSpec(s=1))).chi == -2

    def test_four_components_vanish(self):
        p = with_extra_unknots(build_triple(1, RibbonPairSpec(s=0)), 1)
        assert chi_via_triangle(p).chi == 0

    def test_route_agreement_random(self):
        rng = seeded(43)
        for _ in range(40):
            n = rng.randint(1, 4)
            p = random_presentation(rng, n, h=rng.choice((1, 1, 2, 3)), gmax=1)
            assert chi_via_triangle(p).chi == chi_closed_form(p).chi

    def test_route_agreement_with_torsion(self):
        p = build_ribbon_pair(RibbonPairSpec(s=1, base_order=3))
        assert chi_closed_form(p).chi == chi_via_triangle(p).chi == -6


class TestTaubes:
    def test_empty_chain(self):
        assert taubes_chi(SurgeryChain(())) == 0

    def test_trefoil(self):
        assert taubes_chi(SurgeryChain(((TREFOIL, -1),))) == -2

    def test_figure_eight(self):
        assert taubes_chi(SurgeryChain(((FIGURE_EIGHT, 1),))) == -2


class TestConversions:
    def test_s1_x_s2(self):
        assert lescop_to_chi(Fraction(-1, 12), 1, 1) == 0

    def test_b1_two(self):
        assert lescop_to_chi(Fraction(-1), 2, 1) == -2

    def test_b1_three_with_torsion(self):
        assert lescop_to_chi(Fraction(3), 3, 3) == -2

    def test_inverse_examples(self):
        assert chi_to_lescop(0, 1, 1) == Fraction(-1, 12)
        assert chi_to_lescop(-2, 2, 1) == -1
        assert chi_to_lescop(0, 5, 7) == 0

    def test_round_trip(self):
        rng = seeded(44)
        for _ in range(100):
            b1 = rng.randint(1, 6)
            h = rng.randint(1, 10)
            chi = rng.randint(-40, 40)
            lam = chi_to_lescop(chi, b1, h)
            assert lescop_to_chi(lam, b1, h) == chi
            assert chi_to_lescop(lescop_to_chi(lam, b1, h), b1, h) == lam

    def test_non_integral_rejected(self):
        with pytest.raises(NonIntegralChiError):
            lescop_to_chi(Fraction(1, 3), 2, 2)
        with pytest.raises(NonIntegralChiError):
            lescop_to_chi(Fraction(0), 1, 1)  # -h/6 is not integral for h = 1

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            lescop_to_chi(Fraction(0), 0, 1)
        with pytest.raises(ValueError):
            chi_to_lescop(0, 1, 0)

    def test_consistency_with_closed_form_on_builders(self):
        rng = seeded(45)
        cases = [knot_surgery(random_seifert(rng, 2))]
        cases += [build_ribbon_pair(random_ribbon_spec(rng, gmax=1)) for _ in range(5)]
        cases += [build_triple(m, RibbonPairSpec(s=1)) for m in range(3)]
        cases += [with_extra_unknots(build_triple(1, RibbonPairSpec(s=0)), k) for k in (1, 2)]
        for p in cases:
            n = len(p.components)
            assert lescop_to_chi(lescop(p), n, 1) == chi_closed_form(p).chi


class TestReducedKnotChi:
    def test_half(self):
        assert reduced_knot_chi(-2) == -1

    def test_odd_total_rejected(self):
        with pytest.raises(NonIntegralChiError):
            reduced_knot_chi(-3)
