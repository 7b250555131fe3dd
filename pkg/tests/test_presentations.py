import pytest

from ncsuper.algebra import PresentationError
from ncsuper.coefficients import h
from ncsuper.presentations import (
    CALCULUS_FAMILIES,
    CENTER_RELATIONS,
    DERIVED_GROUP_RELATIONS,
    GROUP_RELATIONS,
    X_NAMES,
    XI_NAMES,
    build_presentation,
    check_covariance,
    coact,
    combined,
    counit,
    get_algebra,
    group,
    macro,
    overridden,
    relation_element,
    superspace,
    verify_presentation_theorems,
)


def test_relation_counts():
    assert len(GROUP_RELATIONS) == 17
    assert len(DERIVED_GROUP_RELATIONS) == 23
    assert sum(len(f) for f in CALCULUS_FAMILIES.values()) == 41


def test_theorem_suite_passes():
    report = verify_presentation_theorems()
    assert report.checks and report.ok, [c.check_id for c in report.failures()]


@pytest.mark.parametrize("rel", CENTER_RELATIONS + DERIVED_GROUP_RELATIONS)
def test_group_theorems_one_at_a_time(rel):
    assert relation_element(rel, group()).is_zero()


def test_ebg_parities():
    assert macro("e").parity() == 0
    assert macro("beta").parity() == 1
    assert macro("gamma").parity() == 1


def test_gamma_square():
    gamma = macro("gamma")
    c = group().gen("c")
    assert gamma * gamma == -(h / 2) * (c * c)


def test_phi_is_coinvariant():
    phi = macro("phi", superspace())
    assert coact(phi) == combined().one() * phi.over(combined())


@pytest.mark.parametrize("name", ["rho", "Lambda"])
def test_form_invariants_are_coinvariant(name):
    value = macro(name)
    image = coact(value)
    assert image == value.over(image.algebra)


def test_counit_undoes_coaction():
    for n in X_NAMES + XI_NAMES:
        e = superspace().gen(n) if n in X_NAMES else get_algebra("forms").gen(n)
        target = get_algebra("combined" if n in X_NAMES else "combined-forms")
        assert counit(coact(e), target) == e.over(target)


def test_covariance_suite_passes():
    report = check_covariance()
    assert report.ok, [c.check_id for c in report.failures()]
    assert any(c.check_id.startswith("covariance.derivative-sector") for c in report.checks)


def test_unknown_algebra():
    with pytest.raises(KeyError):
        get_algebra("octonions")


def test_build_presentation_rejects_broken_rules():
    broken = superspace().with_rules(replace={("theta2", "theta2"): {(): 1}})
    with overridden("superspace", broken):
        assert get_algebra("superspace") is broken
        with pytest.raises(PresentationError):
            build_presentation("superspace")
    assert get_algebra("superspace") is not broken
    assert build_presentation("superspace").presentation is superspace()


def test_override_rebuilds_tensor_products():
    original = combined()
    broken = group().with_rules(replace={("b", "a"): {}})
    with overridden("group", broken):
        assert combined() is not original
        assert ("b", "a") in combined().rules and not combined().rules[("b", "a")].rhs
    assert combined() is original
