"""Classical invariants computed from surgery-presentation data.

The Alexander polynomial of a null-homologous knot in a rational homology
sphere of order h is

    h * det(t^(1/2) V - t^(-1/2) V^T)

for a Seifert matrix V; it is symmetric under t -> t^(-1) and evaluates to
h at t = 1.  Everything else here is built from it: the second derivative
at 1 drives the Casson surgery ledger, and blow-down differences of it
give the Sato-Levine and Milnor-type invariants and the Lescop invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .presentation import (
    InvalidSpecError,
    blow_down,
    drop_component,
    fraction_matrix,
    skew_form_violation,
    validate,
)
from .ring import HalfLaurent, RingMatrix, determinant


class InvariantError(Exception):
    pass


class InvalidPresentationError(InvariantError):
    """The presentation fails validation; .violations lists the reasons."""

    def __init__(self, violations):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class WrongComponentCountError(InvariantError):
    pass


DERIVED = "derived"
PAPER_LITERAL = "paper-literal"
NORMALIZATION_MODES = (DERIVED, PAPER_LITERAL)

REPORT_NAMES = ("alexander", "delta2", "casson", "sato_levine", "mu_squared", "lescop")


@dataclass(frozen=True)
class InvariantReport:
    """A named exact invariant value plus the route that produced it."""

    name: str
    value: object  # Fraction for numeric invariants, HalfLaurent for alexander
    route: str

    def __post_init__(self):
        if self.name not in REPORT_NAMES:
            raise ValueError(f"unknown invariant name {self.name!r}")
        if self.name == "alexander":
            if not isinstance(self.value, HalfLaurent):
                raise TypeError("alexander reports carry a HalfLaurent value")
        elif not isinstance(self.value, (int, Fraction)):
            raise TypeError(f"{self.name} reports carry a rational value")


@dataclass(frozen=True)
class SurgeryChain:
    """A sequence of +-1 surgeries on knots, starting from S^3.

    Each step records the Seifert matrix of the surgery curve as a knot in
    the manifold reached so far; when the knots interact, the caller is
    responsible for supplying post-surgery matrices (compose with
    blow_down).
    """

    steps: tuple  # of (seifert matrix, sign)

    def __post_init__(self):
        steps = []
        for entry in self.steps:
            v, sign = entry
            steps.append((fraction_matrix(v), sign))
        object.__setattr__(self, "steps", tuple(steps))


def _check_mode(mode):
    if mode not in NORMALIZATION_MODES:
        raise ValueError(f"unknown normalization mode {mode!r}")


def _require_valid(p):
    violations = validate(p)
    if violations:
        raise InvalidPresentationError(violations)


def knot_alexander(seifert, base_order=1):
    """h * det(t^(1/2) V - t^(-1/2) V^T) for a bare Seifert matrix."""
    seifert = fraction_matrix(seifert)
    n = len(seifert)
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(HalfLaurent({1: seifert[i][j], -1: -seifert[j][i]}))
        entries.append(row)
    return determinant(RingMatrix(entries)) * base_order


def alexander(p, comp):
    """Alexander polynomial of the named component inside the base manifold.

    Only the component's own Seifert matrix and the homology order enter;
    the other components are 0-framed and do not affect it.
    """
    _require_valid(p)
    c = p.component(comp)
    return knot_alexander(c.seifert, p.base_order)


def delta2(p, comp):
    """Second derivative of the Alexander polynomial at t = 1.

    Half of this value is the knot's surgery weight in the Casson ledger
    (the framing-change term of the Lescop surgery formula).
    """
    return alexander(p, comp).second_derivative_at_one()


def casson(chain):
    """Casson invariant of the integral homology sphere a chain presents.

    lambda(S^3) = 0, and surgery with sign sigma on a knot with Seifert
    matrix V adds sigma * Delta''(1) / 2, so (-1)-surgery subtracts half
    the second derivative.

    Matrices are taken at face value; no attempt is made to re-derive them
    after earlier steps.  When a later surgery curve links an earlier one,
    compute its post-surgery matrix first, e.g. for a curve k with linking
    vector E against an earlier (-1)-framed component, feed this chain the
    updated matrix from blow_down (V_k + E E^T) rather than V_k:

    >>> from lescop.presentation import TREFOIL
    >>> casson(SurgeryChain(((TREFOIL, -1), (TREFOIL, -1))))
    Fraction(-2, 1)
    """
    if not isinstance(chain, SurgeryChain):
        chain = SurgeryChain(tuple(chain))
    total = Fraction(0)
    for i, (v, sign) in enumerate(chain.steps):
        if sign not in (-1, 1):
            raise InvalidSpecError(f"step {i}: surgery sign must be +1 or -1, got {sign}")
        msg = skew_form_violation(v)
        if msg is not None:
            raise InvalidSpecError(f"step {i}: {msg}")
        total += sign * knot_alexander(v).second_derivative_at_one() / 2
    return total


def _delta2_pair(p):
    """(Delta''(1) before, Delta''(1) after) blow-down of the second component."""
    c1, c2 = p.components
    h = p.base_order
    before = knot_alexander(c1.seifert, h).second_derivative_at_one()
    q = blow_down(p, c2.name, -1)
    after = knot_alexander(q.components[0].seifert, h).second_derivative_at_one()
    return before, after


def sato_levine(p, mode=DERIVED):
    """Sato-Levine invariant of a two-component presentation.

    Computed from the jump of Delta''(1) of the first component under
    (-1)-surgery on the second: the jump equals 2 s Delta(1).  In the
    default 'derived' mode the jump is divided by 2 Delta(1) = 2h; in
    'paper-literal' mode by 2, which reads the case formulas with the
    Alexander normalization dropped.  The modes coincide when h = 1; use
    modes_disagree() to detect the other case.
    """
    _check_mode(mode)
    _require_valid(p)
    if len(p.components) != 2:
        raise WrongComponentCountError(
            f"sato_levine needs exactly 2 components, got {len(p.components)}"
        )
    before, after = _delta2_pair(p)
    d = p.base_order if mode == DERIVED else 1
    return (after - before) / (2 * d)


def modes_disagree(p):
    """True when the two sato_levine normalization modes differ on p."""
    return sato_levine(p, DERIVED) != sato_levine(p, PAPER_LITERAL)


def milnor_mu_squared(p, mode=DERIVED):
    """Square of the triple linking number of a three-component presentation.

    Equal to the jump of the Sato-Levine invariant of the first two
    components under (-1)-surgery on the third.  Only the square is
    recoverable from this data; the sign of mu is not.  For geometric data
    the result is a perfect square, which is reported, not enforced.
    """
    _check_mode(mode)
    _require_valid(p)
    if len(p.components) != 3:
        raise WrongComponentCountError(
            f"milnor_mu_squared needs exactly 3 components, got {len(p.components)}"
        )
    last = p.components[2].name
    return sato_levine(blow_down(p, last, -1), mode) - sato_levine(
        drop_component(p, last), mode
    )


def lescop(p):
    """Lescop invariant of the presented manifold, by first Betti number.

    b1 = 1: Delta''(1)/2 - h/12;  b1 = 2: -h * s;  b1 = 3: h * mu^2;
    b1 >= 4: 0.  Here h = base_order is the torsion order of the presented
    manifold.  b1 = 0 (no components) is out of scope; use casson() for
    integral homology spheres.
    """
    _require_valid(p)
    n = len(p.components)
    h = p.base_order
    if n == 0:
        raise WrongComponentCountError(
            "lescop needs at least one component; for integral homology "
            "spheres use casson()"
        )
    if n == 1:
        return delta2(p, p.components[0].name) / 2 - Fraction(h, 12)
    if n == 2:
        return -h * sato_levine(p, DERIVED)
    if n == 3:
        return h * milnor_mu_squared(p, DERIVED)
    return Fraction(0)
