"""Registry of verifiable q-series statements plus the verification engine.

Each :class:`IdentityCase` owns two independent builders that expand the left
and right side of one equation to a requested truncation order; verification
is coefficient-by-coefficient integer comparison, so a pass is a mechanical
proof of agreement up to that order.  The counting relations (``cor1`` ..
``cor4``), which follow from the main identities, are checked the same way
but over count sequences, with an optional brute-force enumeration backend
replacing the series coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from time import perf_counter
from typing import Callable, List, Optional, Tuple

from .partitions import (
    FAMILY_SERIES,
    FAMILY_SPECS,
    count_oracle,
    gf_de1,
    gf_de2,
    gf_de3,
    gf_ped,
    gf_regular4,
    gf_regular4_min2,
)
from .series import QMonomial, TruncatedSeries, poch_infinite

Builder = Callable[[int], TruncatedSeries]

RELATION_KINDS = ("cor1", "cor2", "cor3", "cor4")

RELATION_STATEMENTS = {
    "cor1": "DE1(n) + DE1(n-1) = #(4-regular partitions of n), n >= 1",
    "cor2": "DE2(n) + DE2(n-3) = #(4-regular partitions of n, parts > 1), n >= 1",
    "cor3": "DE3(n+2) + DE3(n-1) = #(4-regular partitions of n), n >= 2",
    "cor4": "DE3(n+2) + DE3(n-1) = DE1(n) + DE1(n-1), n >= 2",
}


@dataclass(frozen=True)
class IdentityCase:
    """A named LHS/RHS pair of series builders for one equation."""

    id: str
    description: str
    lhs: Builder
    rhs: Builder
    statement: str


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of comparing both sides of a case up to a truncation order.

    ``mismatch`` is (exponent, lhs coefficient, rhs coefficient) for the
    smallest disagreeing exponent; it is present exactly when status is
    "fail".  Status "error" means a builder raised before any comparison.
    """

    id: str
    order: int
    status: str
    mismatch: Optional[Tuple[int, int, int]]
    elapsed: float
    error: Optional[str] = None

    def __post_init__(self):
        if self.status not in ("pass", "fail", "error"):
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == "fail") != (self.mismatch is not None):
            raise ValueError("mismatch must be present exactly on failure")
        if (self.status == "error") != (self.error is not None):
            raise ValueError("error text must be present exactly on error")

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class IdentityBuildError(RuntimeError):
    """A case's series builder failed; carries the offending case id."""

    def __init__(self, case_id: str, message: str):
        super().__init__(f"{case_id}: {message}")
        self.case_id = case_id


# -- small constructors -----------------------------------------------------


def _one_minus_q(e: int, order: int) -> TruncatedSeries:
    return TruncatedSeries.one(order) - TruncatedSeries.monomial(1, e, order)


def _one_plus_q(e: int, order: int) -> TruncatedSeries:
    return TruncatedSeries.one(order) + TruncatedSeries.monomial(1, e, order)


def gf_euler_inf(order: int) -> TruncatedSeries:
    """(q;q)_inf, the Euler product."""
    return poch_infinite(QMonomial(1, 1), 1, order)


def gf_q4_inf(order: int) -> TruncatedSeries:
    """(q^4;q^4)_inf."""
    return poch_infinite(QMonomial(1, 4), 4, order)


# -- left-hand-side sum builders ---------------------------------------------


def _help_sum(order: int, min_exp, finite_len) -> TruncatedSeries:
    """sum over n of q^min_exp(n) * (q^(4n+4);q^4)_inf * (q;q)_finite_len(n).

    The running finite product gains factors as finite_len grows; the
    infinite tail is rebuilt per term (cheap: each factor is two-term).
    Term n contributes nothing below exponent min_exp(n), which is strictly
    increasing, so the sum stops once min_exp(n) passes the order.
    """
    total = TruncatedSeries.zero(order)
    fin = TruncatedSeries.one(order)
    m = 0
    n = 0
    while min_exp(n) <= order:
        while m < finite_len(n):
            m += 1
            fin = fin * _one_minus_q(m, order)
        tail = poch_infinite(QMonomial(1, 4 * n + 4), 4, order)
        total = total + (fin * tail).shift(min_exp(n))
        n += 1
    return total


def _qbinomial_lhs(a: Optional[QMonomial], z_exp: int, order: int) -> TruncatedSeries:
    """sum over n of (a;q)_n * q^(n*z_exp) / (q;q)_n, with a = None meaning 0."""
    total = TruncatedSeries.zero(order)
    core = TruncatedSeries.one(order)
    n = 0
    while n * z_exp <= order:
        total = total + core.shift(n * z_exp)
        n += 1
        if a is not None:
            core = core * (
                TruncatedSeries.one(order)
                - TruncatedSeries.monomial(a.sign, a.exp + n - 1, order)
            )
        core = core * _one_minus_q(n, order).invert()
    return total


def _qbinomial_rhs(a: Optional[QMonomial], z_exp: int, order: int) -> TruncatedSeries:
    den_inv = poch_infinite(QMonomial(1, z_exp), 1, order).invert()
    if a is None:
        return den_inv
    return poch_infinite(QMonomial(a.sign, a.exp + z_exp), 1, order) * den_inv


def _asv_lhs(step: int, a: QMonomial, b: QMonomial, order: int) -> TruncatedSeries:
    """sum over n of (a;Q)_n * Q^n / (b;Q)_n with Q = q^step."""
    total = TruncatedSeries.zero(order)
    core = TruncatedSeries.one(order)
    n = 0
    while step * n <= order:
        total = total + core.shift(step * n)
        n += 1
        e = step * (n - 1)
        core = core * (
            TruncatedSeries.one(order)
            - TruncatedSeries.monomial(a.sign, a.exp + e, order)
        )
        core = core * (
            TruncatedSeries.one(order)
            - TruncatedSeries.monomial(b.sign, b.exp + e, order)
        ).invert()
    return total


def _asv_rhs(step: int, a: QMonomial, b: QMonomial, order: int) -> TruncatedSeries:
    """Q(a;Q)_inf / (b (b;Q)_inf (1 - aQ/b)) + (1 - Q/b)/(1 - aQ/b), Q = q^step.

    With a = sa*q^alpha and b = sb*q^beta every piece is a power series when
    1 <= beta <= step and alpha >= 1; then aQ/b = sa*sb*q^(alpha+step-beta)
    has positive exponent, so the closed form's pole 1 - aQ/b is a unit.
    """
    if not 1 <= b.exp <= step:
        raise ValueError(f"need 1 <= b.exp <= step for a series-valued form, got {b}")
    if a.exp < 1:
        raise ValueError(f"need a.exp >= 1, got {a}")
    pole_exp = a.exp + step - b.exp
    pole_inv = (
        TruncatedSeries.one(order)
        - TruncatedSeries.monomial(a.sign * b.sign, pole_exp, order)
    ).invert()
    piece1 = (
        poch_infinite(a, step, order)
        * poch_infinite(b, step, order).invert()
        * pole_inv
    ).shift(step - b.exp).scale(b.sign)
    piece2 = (
        TruncatedSeries.one(order)
        - TruncatedSeries.monomial(b.sign, step - b.exp, order)
    ) * pole_inv
    return piece1 + piece2


# -- the registry -------------------------------------------------------------

_MONOMIAL_TOKENS = {
    None: ("a0", "0"),
    QMonomial(1, 1): ("aq", "q"),
    QMonomial(-1, 1): ("amq", "-q"),
    QMonomial(1, 2): ("aq2", "q^2"),
    QMonomial(-1, 2): ("amq2", "-q^2"),
    QMonomial(1, 3): ("aq3", "q^3"),
}

_ASV_GRID = (
    (1, QMonomial(1, 1), QMonomial(-1, 1)),
    (1, QMonomial(-1, 2), QMonomial(1, 1)),
    (1, QMonomial(1, 3), QMonomial(1, 1)),
    (2, QMonomial(1, 2), QMonomial(-1, 1)),
    (2, QMonomial(-1, 3), QMonomial(1, 2)),
    (3, QMonomial(1, 1), QMonomial(-1, 2)),
)


def _qbinomial_cases() -> List[IdentityCase]:
    cases = []
    for a, (atok, astr) in _MONOMIAL_TOKENS.items():
        for z_exp in (1, 2, 3):
            zstr = "q" if z_exp == 1 else f"q^{z_exp}"
            cases.append(
                IdentityCase(
                    id=f"qbinomial-{atok}-zq{z_exp if z_exp > 1 else ''}",
                    description=f"q-binomial theorem at a = {astr}, z = {zstr}",
                    lhs=lambda order, a=a, t=z_exp: _qbinomial_lhs(a, t, order),
                    rhs=lambda order, a=a, t=z_exp: _qbinomial_rhs(a, t, order),
                    statement=(
                        "sum_{n>=0} (a;q)_n z^n/(q;q)_n = (az;q)_inf/(z;q)_inf"
                        f" at a = {astr}, z = {zstr}"
                    ),
                )
            )
    return cases


def _asv_case(case_id: str, description: str, step: int, a: QMonomial, b: QMonomial) -> IdentityCase:
    qs = "q" if step == 1 else f"q^{step}"
    return IdentityCase(
        id=case_id,
        description=description,
        lhs=lambda order: _asv_lhs(step, a, b, order),
        rhs=lambda order: _asv_rhs(step, a, b, order),
        statement=(
            "sum_{n>=0} (a;Q)_n Q^n/(b;Q)_n"
            " = Q(a;Q)_inf/(b (b;Q)_inf (1-aQ/b)) + (1-Q/b)/(1-aQ/b)"
            f" at Q = {qs}, a = {a}, b = {b}"
        ),
    )


def registry() -> List[IdentityCase]:
    """Every registered statement, as independently buildable LHS/RHS pairs."""
    cases = [
        IdentityCase(
            id="ped-eq-4regular",
            description="distinct-even-part count equals the 4-regular count",
            lhs=gf_ped,
            rhs=gf_regular4,
            statement="(-q^2;q^2)_inf/(q;q^2)_inf = (q^4;q^4)_inf/(q;q)_inf",
        )
    ]
    cases += _qbinomial_cases()
    cases.append(
        _asv_case(
            "asv-spec-1",
            "two-parameter closed form at Q = q^2, a = q, b = -q^2",
            2,
            QMonomial(1, 1),
            QMonomial(-1, 2),
        )
    )
    cases.append(
        _asv_case(
            "asv-spec-2",
            "two-parameter closed form at Q = q^2, a = q^3, b = -q^2",
            2,
            QMonomial(1, 3),
            QMonomial(-1, 2),
        )
    )
    for i, (step, a, b) in enumerate(_ASV_GRID, start=1):
        cases.append(
            _asv_case(
                f"asv-grid-{i}",
                f"two-parameter closed form sampled at Q = q^{step}, a = {a}, b = {b}",
                step,
                a,
                b,
            )
        )
    cases += [
        IdentityCase(
            id="help-1",
            description="product-sum evaluation behind the DE1 identity",
            lhs=lambda order: _help_sum(order, lambda n: 2 * n, lambda n: 2 * n),
            rhs=lambda order: (
                gf_q4_inf(order).scale(2) - gf_euler_inf(order)
            )
            * _one_plus_q(1, order).invert(),
            statement=(
                "sum_{n>=0} q^(2n) (q^(4n+4);q^4)_inf (q;q)_(2n)"
                " = 2(q^4;q^4)_inf/(1+q) - (q;q)_inf/(1+q)"
            ),
        ),
        IdentityCase(
            id="main-1",
            description="DE1 generating function against the 4-regular product",
            lhs=lambda order: _one_plus_q(1, order) * gf_de1(order),
            rhs=lambda order: gf_regular4(order) - 1,
            statement=(
                "(1+q) sum_{n>=0} (-q^2;q^2)_n q^(2n+1)/(q;q^2)_(n+1)"
                " = (q^4;q^4)_inf/(q;q)_inf - 1"
            ),
        ),
        IdentityCase(
            id="help-2",
            description="product-sum evaluation behind the DE2 identity",
            lhs=lambda order: _help_sum(order, lambda n: 2 * n, lambda n: 2 * n + 1),
            rhs=lambda order: (
                _one_minus_q(1, order) * gf_q4_inf(order).scale(2)
                - gf_euler_inf(order)
            )
            * _one_plus_q(3, order).invert(),
            statement=(
                "sum_{n>=0} q^(2n) (q^(4n+4);q^4)_inf (q;q)_(2n+1)"
                " = 2(1-q)(q^4;q^4)_inf/(1+q^3) - (q;q)_inf/(1+q^3)"
            ),
        ),
        IdentityCase(
            id="main-2",
            description="DE2 generating function against the min-part-2 product",
            lhs=lambda order: _one_plus_q(3, order) * gf_de2(order),
            rhs=lambda order: gf_regular4_min2(order) - 1,
            statement=(
                "(1+q^3) sum_{n>=0} (-q^2;q^2)_n q^(4n+2)/(q;q^2)_(n+1)"
                " = (q^4;q^4)_inf/(q^2;q)_inf - 1"
            ),
        ),
        IdentityCase(
            id="help-3",
            description="product-sum evaluation behind the DE3 identity",
            lhs=lambda order: _help_sum(order, lambda n: 4 * n + 1, lambda n: 2 * n),
            rhs=lambda order: (
                gf_q4_inf(order).scale(2).shift(2)
                + _one_minus_q(1, order).shift(1) * gf_euler_inf(order)
            )
            * _one_plus_q(3, order).invert(),
            statement=(
                "sum_{n>=0} q^(4n+1) (q^(4n+4);q^4)_inf (q;q)_(2n)"
                " = 2q^2(q^4;q^4)_inf/(1+q^3) + q(1-q)(q;q)_inf/(1+q^3)"
            ),
        ),
        IdentityCase(
            id="main-3",
            description="DE3 generating function against the shifted 4-regular product",
            lhs=lambda order: _one_plus_q(3, order) * gf_de3(order),
            rhs=lambda order: gf_regular4(order).shift(2)
            - TruncatedSeries.monomial(1, 2, order)
            + TruncatedSeries.monomial(1, 1, order),
            statement=(
                "(1+q^3) sum_{n>=0} (-q^2;q^2)_n q^(2n+1)/(q;q^2)_n"
                " = q^2(q^4;q^4)_inf/(q;q)_inf - q^2 + q"
            ),
        ),
    ]
    return cases


def registry_ids() -> List[str]:
    return [case.id for case in registry()]


def find_case(case_id: str) -> Optional[IdentityCase]:
    for case in registry():
        if case.id == case_id:
            return case
    return None


def negative_control(exponent: int = 50) -> IdentityCase:
    """A deliberately broken copy of ped-eq-4regular: q^exponent added on the right.

    Verifying it at any order >= exponent must fail with the mismatch at
    exactly that exponent; it is excluded from :func:`registry`.
    """
    base = find_case("ped-eq-4regular")
    return IdentityCase(
        id="negative-control",
        description=f"perturbed {base.id}: right side plus q^{exponent}, must fail",
        lhs=base.lhs,
        rhs=lambda order: base.rhs(order)
        + TruncatedSeries.monomial(1, exponent, order),
        statement=f"{base.statement}  [right side perturbed by +q^{exponent}]",
    )


# -- verification -------------------------------------------------------------


def verify(case: IdentityCase, order: int) -> VerificationReport:
    """Expand both sides to the order and report the first coefficient clash."""
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    start = perf_counter()
    try:
        lhs = case.lhs(order)
        rhs = case.rhs(order)
    except Exception as exc:
        raise IdentityBuildError(case.id, str(exc)) from exc
    mismatch = lhs.first_mismatch(rhs)
    elapsed = perf_counter() - start
    status = "pass" if mismatch is None else "fail"
    return VerificationReport(case.id, order, status, mismatch, elapsed)


def _family_counts(family: str, up_to: int, use_oracle: bool) -> List[int]:
    if use_oracle:
        spec = FAMILY_SPECS[family]
        return [count_oracle(n, spec) for n in range(up_to + 1)]
    return list(FAMILY_SERIES[family](up_to).coeffs)


def verify_relation(kind: str, order: int, use_oracle: bool = False) -> VerificationReport:
    """Check one counting relation for every n in its validity range up to order.

    The fast path reads counts off the generating functions; with
    ``use_oracle`` every count comes from brute-force enumeration instead
    (only sensible for order <= ~45).  A mismatch reports (n, left, right).
    """
    if kind not in RELATION_KINDS:
        raise ValueError(f"unknown relation {kind!r}; expected one of {RELATION_KINDS}")
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    start = perf_counter()
    if kind == "cor1":
        de1 = _family_counts("DE1", order, use_oracle)
        b4 = _family_counts("regular4", order, use_oracle)
        triples = ((n, de1[n] + de1[n - 1], b4[n]) for n in range(1, order + 1))
    elif kind == "cor2":
        de2 = _family_counts("DE2", order, use_oracle)
        c4 = _family_counts("regular4min2", order, use_oracle)
        triples = (
            (n, de2[n] + (de2[n - 3] if n >= 3 else 0), c4[n])
            for n in range(1, order + 1)
        )
    elif kind == "cor3":
        de3 = _family_counts("DE3", order + 2, use_oracle)
        b4 = _family_counts("regular4", order, use_oracle)
        triples = ((n, de3[n + 2] + de3[n - 1], b4[n]) for n in range(2, order + 1))
    else:  # cor4
        de3 = _family_counts("DE3", order + 2, use_oracle)
        de1 = _family_counts("DE1", order, use_oracle)
        triples = (
            (n, de3[n + 2] + de3[n - 1], de1[n] + de1[n - 1])
            for n in range(2, order + 1)
        )
    mismatch = next((t for t in triples if t[1] != t[2]), None)
    elapsed = perf_counter() - start
    status = "pass" if mismatch is None else "fail"
    return VerificationReport(kind, order, status, mismatch, elapsed)


def verify_all(order: int) -> List[VerificationReport]:
    """Verify every registry case plus the four relations; reports sorted by id.

    Per-case builder errors are captured as status-"error" reports rather
    than aborting the batch.
    """
    reports = []
    for case in registry():
        start = perf_counter()
        try:
            reports.append(verify(case, order))
        except IdentityBuildError as exc:
            reports.append(
                VerificationReport(
                    exc.case_id, order, "error", None, perf_counter() - start, str(exc)
                )
            )
    for kind in RELATION_KINDS:
        reports.append(verify_relation(kind, order))
    reports.sort(key=lambda r: r.id)
    return reports


def report_record(report: VerificationReport) -> str:
    """One line per report: id,order,status,mismatch_exponent,elapsed_ms."""
    mm = "" if report.mismatch is None else str(report.mismatch[0])
    return f"{report.id},{report.order},{report.status},{mm},{int(round(report.elapsed * 1000))}"
