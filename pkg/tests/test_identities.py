import pytest

from qident.identities import (
    RELATION_KINDS,
    IdentityBuildError,
    IdentityCase,
    VerificationReport,
    find_case,
    negative_control,
    registry,
    registry_ids,
    report_record,
    verify,
    verify_all,
    verify_relation,
)
from qident.partitions import (
    FAMILY_SPECS,
    _distinct_even_sum,
    count_oracle,
    gf_de3,
    gf_regular4,
)
from qident.series import QMonomial, TruncatedSeries, poch_infinite

NAMED_IDS = {
    "ped-eq-4regular",
    "asv-spec-1",
    "asv-spec-2",
    "help-1",
    "help-2",
    "help-3",
    "main-1",
    "main-2",
    "main-3",
}


def test_registry_shape():
    cases = registry()
    ids = [c.id for c in cases]
    assert len(cases) >= 10
    assert len(set(ids)) == len(ids)
    assert NAMED_IDS <= set(ids)
    assert sum(i.startswith("qbinomial-") for i in ids) == 18
    assert sum(i.startswith("asv-") for i in ids) >= 2


def test_builders_are_deterministic():
    for case in registry()[:4] + [find_case("main-3"), find_case("asv-spec-1")]:
        assert case.lhs(25) == case.lhs(25)
        assert case.rhs(25) == case.rhs(25)


def test_every_registry_case_passes_at_200():
    for case in registry():
        report = verify(case, 200)
        assert report.passed, (case.id, report.mismatch)


def test_main2_constant_terms_vanish():
    case = find_case("main-2")
    assert case.lhs(10).coeff(0) == 0
    assert case.rhs(10).coeff(0) == 0


def test_help1_agrees_to_100():
    case = find_case("help-1")
    assert case.lhs(100).first_mismatch(case.rhs(100)) is None


def test_forged_case_fails_at_exponent_two():
    forged = IdentityCase(
        id="forged",
        description="deliberate mismatch",
        lhs=lambda order: TruncatedSeries([1, 1], order),
        rhs=lambda order: TruncatedSeries([1, 1, 1], order),
        statement="1 + q = 1 + q + q^2 (false)",
    )
    report = verify(forged, 2)
    assert report.status == "fail"
    assert report.mismatch == (2, 0, 1)


@pytest.mark.parametrize("exponent", [7, 50])
def test_negative_control_fails_exactly_at_perturbation(exponent):
    case = negative_control(exponent)
    report = verify(case, max(60, exponent + 5))
    assert report.status == "fail"
    assert report.mismatch[0] == exponent
    # below the perturbed exponent the two sides genuinely agree
    assert verify(case, exponent - 1).passed


def test_negative_control_not_registered():
    assert "negative-control" not in registry_ids()


@pytest.mark.parametrize("case_id", ["main-1", "asv-spec-2", "qbinomial-amq2-zq2"])
@pytest.mark.parametrize("exponent", [13, 31])
def test_any_perturbed_case_fails_at_perturbation(case_id, exponent):
    base = find_case(case_id)
    perturbed = IdentityCase(
        id=f"{case_id}-perturbed",
        description="perturbed for testing",
        lhs=base.lhs,
        rhs=lambda order: base.rhs(order)
        + TruncatedSeries.monomial(1, exponent, order),
        statement="n/a",
    )
    report = verify(perturbed, 60)
    assert report.status == "fail"
    assert report.mismatch[0] == exponent


def test_verify_propagates_builder_failures_with_id():
    def broken(order):
        return poch_infinite(QMonomial(1, 0), 1, order)  # divergent parameter

    case = IdentityCase("broken-case", "divergent builder", broken, broken, "n/a")
    with pytest.raises(IdentityBuildError) as info:
        verify(case, 10)
    assert info.value.case_id == "broken-case"
    assert "broken-case" in str(info.value)


def test_report_field_coupling():
    with pytest.raises(ValueError):
        VerificationReport("x", 5, "pass", (1, 0, 1), 0.0)
    with pytest.raises(ValueError):
        VerificationReport("x", 5, "fail", None, 0.0)
    with pytest.raises(ValueError):
        VerificationReport("x", 5, "error", None, 0.0)  # error text required
    with pytest.raises(ValueError):
        VerificationReport("x", 5, "bogus", None, 0.0)


@pytest.mark.parametrize("kind", RELATION_KINDS)
def test_relations_hold_via_series_to_200(kind):
    report = verify_relation(kind, 200)
    assert report.passed, report.mismatch


@pytest.mark.parametrize("kind", RELATION_KINDS)
def test_relations_hold_via_oracle_to_40(kind):
    report = verify_relation(kind, 40, use_oracle=True)
    assert report.passed, report.mismatch


def test_relation_examples():
    # cor1 at n=8: 9 + 7 = 16; cor2 at n=10: 5 + 2 = 7; cor3 at n=8: 11 + 5 = 16
    c = lambda n, fam: count_oracle(n, FAMILY_SPECS[fam])
    assert c(8, "DE1") + c(7, "DE1") == 16 == c(8, "regular4")
    assert c(10, "DE2") + c(7, "DE2") == 7 == c(10, "regular4min2")
    assert c(10, "DE3") + c(7, "DE3") == 16 == c(8, "regular4")


def test_relation_validation():
    with pytest.raises(ValueError):
        verify_relation("cor9", 10)
    with pytest.raises(ValueError):
        verify_relation("cor1", -1)


def test_verify_all_at_200():
    reports = verify_all(200)
    assert len(reports) == len(registry()) + 4
    assert all(r.passed for r in reports)
    assert [r.id for r in reports] == sorted(r.id for r in reports)


def test_verify_all_at_order_zero():
    reports = verify_all(0)
    assert all(r.passed for r in reports)
    assert len(reports) == len(registry()) + 4


def test_verify_all_is_deterministic():
    first = [(r.id, r.order, r.status, r.mismatch) for r in verify_all(40)]
    second = [(r.id, r.order, r.status, r.mismatch) for r in verify_all(40)]
    assert first == second


def test_report_record_format():
    passing = VerificationReport("some-id", 100, "pass", None, 0.01234)
    assert report_record(passing) == "some-id,100,pass,,12"
    failing = VerificationReport("other-id", 60, "fail", (50, 1, 2), 0.002)
    assert report_record(failing) == "other-id,60,fail,50,2"


def test_scaled_and_unscaled_de3_forms_agree():
    # The summation with numerator q^(2n+1) is q times the one with q^(2n);
    # both closed forms must therefore match after one shift.
    order = 120
    low_sum = _distinct_even_sum(order, lambda n: 2 * n, 0)
    one_plus_q3 = TruncatedSeries.one(order) + TruncatedSeries.monomial(1, 3, order)
    low_lhs = one_plus_q3 * low_sum
    low_rhs = (
        gf_regular4(order).shift(1)
        + 1
        - TruncatedSeries.monomial(1, 1, order)
    )
    assert low_lhs.first_mismatch(low_rhs) is None

    scaled_lhs = one_plus_q3 * gf_de3(order)
    assert scaled_lhs.truncate(order - 1) == low_lhs.shift(1).truncate(order - 1)
