"""Surgery presentations of 3-manifolds as Seifert-matrix data.

A presented manifold is a rational homology sphere of known first-homology
order together with an ordered list of 0-framed, null-homologous link
components.  Pairwise linking numbers of components are fixed at zero by
the data model itself (algebraically split links); presentations with
nonzero pairwise linking are unrepresentable rather than validated away,
since every formula downstream assumes the splitting.

All types are immutable values and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class PresentationError(Exception):
    pass


class UnknownComponentError(PresentationError, KeyError):
    """A named component does not exist in the presentation."""


class InvalidSpecError(PresentationError, ValueError):
    """A builder specification violates its invariants."""


def fraction_vector(values):
    return tuple(Fraction(v) for v in values)


def fraction_matrix(rows):
    rows = tuple(fraction_vector(r) for r in rows)
    if rows and any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix must be square")
    return rows


def _det_fraction(rows):
    """Exact determinant of a square Fraction matrix (Gaussian elimination)."""
    n = len(rows)
    a = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        inv = Fraction(1) / a[k][k]
        for i in range(k + 1, n):
            factor = a[i][k] * inv
            if factor:
                a[i] = [x - factor * y for x, y in zip(a[i], a[k])]
    return det


def skew_form_violation(seifert):
    """Check the Seifert-form invariant; returns a message or None.

    The matrix must be square of even size, V - V^T must be integer valued,
    and det(V - V^T) must equal 1 (it is the intersection form of the
    surface in a symplectic basis).
    """
    n = len(seifert)
    if any(len(r) != n for r in seifert):
        return "seifert matrix is not square"
    if n % 2 != 0:
        return f"seifert matrix has odd size {n}"
    skew = [[seifert[i][j] - seifert[j][i] for j in range(n)] for i in range(n)]
    if any(x.denominator != 1 for r in skew for x in r):
        return "V - V^T has non-integer entries"
    d = _det_fraction(skew)
    if d != 1:
        return f"det(V - V^T) = {d}, expected 1"
    return None


@dataclass(frozen=True)
class Component:
    """One 0-framed link component: its Seifert matrix and how the basis
    curves of its Seifert surface link the other components."""

    name: str
    seifert: tuple  # 2g x 2g matrix of Fraction
    linking: dict  # other component name -> length-2g vector of Fraction

    def __post_init__(self):
        object.__setattr__(self, "seifert", fraction_matrix(self.seifert))
        object.__setattr__(
            self,
            "linking",
            {str(k): fraction_vector(v) for k, v in dict(self.linking).items()},
        )

    @property
    def size(self):
        return len(self.seifert)


@dataclass(frozen=True)
class SurgeryPresentation:
    """A rational homology sphere of order base_order plus an ordered,
    algebraically split, 0-framed link.  b1 of the presented manifold
    equals the number of components."""

    base_order: int
    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    def component(self, name):
        for c in self.components:
            if c.name == name:
                return c
        raise UnknownComponentError(name)

    def names(self):
        return [c.name for c in self.components]


@dataclass(frozen=True)
class RibbonPairSpec:
    """Parameters of a two-component link whose Seifert surfaces meet in a
    single ribbon intersection circle.

    s is the self-linking of the intersection circle (the Sato-Levine
    number the built pair realizes), w is the Seifert matrix of the first
    component's own surface, a lists how the intersection circle links the
    basis curves of that surface, and epsilon is the sign of the linking
    of the surface's meridional curve with the second component.
    """

    s: int
    a: tuple = ()
    w: tuple = ()
    epsilon: int = 1
    base_order: int = 1

    def __post_init__(self):
        object.__setattr__(self, "a", fraction_vector(self.a))
        object.__setattr__(self, "w", fraction_matrix(self.w))

    def check(self):
        if self.epsilon not in (1, -1):
            raise InvalidSpecError(f"epsilon must be +1 or -1, got {self.epsilon}")
        if type(self.s) is not int:
            raise InvalidSpecError("s must be an integer")
        if type(self.base_order) is not int or self.base_order < 1:
            raise InvalidSpecError("base_order must be a positive integer")
        if len(self.a) != len(self.w):
            raise InvalidSpecError(
                f"a has length {len(self.a)}, expected {len(self.w)}"
            )
        if self.w:
            msg = skew_form_violation(self.w)
            if msg is not None:
                raise InvalidSpecError(f"w: {msg}")


def validate(p):
    """All invariant violations of a presentation, as human-readable strings.

    An empty list means the presentation is valid.  Violations are data,
    not exceptions, so callers can report all of them at once.
    """
    out = []
    if type(p.base_order) is not int or p.base_order < 1:
        out.append(f"base_order must be a positive integer, got {p.base_order!r}")
    names = p.names()
    seen = set()
    for n in names:
        if n in seen:
            out.append(f"duplicate component name {n!r}")
        seen.add(n)
    for c in p.components:
        msg = skew_form_violation(c.seifert)
        if msg is not None:
            out.append(f"component {c.name!r}: {msg}")
        expected = set(names) - {c.name}
        missing = expected - set(c.linking)
        unknown = set(c.linking) - expected
        for other in sorted(missing):
            out.append(f"component {c.name!r}: missing linking vector against {other!r}")
        for other in sorted(unknown):
            out.append(f"component {c.name!r}: linking vector against unknown component {other!r}")
        for other, vec in c.linking.items():
            if other in expected and len(vec) != c.size:
                out.append(
                    f"component {c.name!r}: linking vector against {other!r} "
                    f"has length {len(vec)}, expected {c.size}"
                )
        if p.base_order == 1:
            entries = [x for r in c.seifert for x in r]
            entries += [x for v in c.linking.values() for x in v]
            if any(x.denominator != 1 for x in entries):
                out.append(
                    f"component {c.name!r}: non-integer entries require base_order > 1"
                )
    return out


def blow_down(p, target, sign=-1):
    """Remove a component by (sign)-framed surgery on it.

    Every remaining Seifert matrix changes by the rank-one update
    V -> V - sign * E E^T, where E is that component's linking vector
    against the target; so (-1)-surgery adds E E^T.  Linking vectors
    between the remaining components pick up the correction
    lk(e_m, target) * lk(other, target), which vanishes here because the
    components are algebraically split.  The homology order is unchanged
    by +-1 surgery on a null-homologous knot.
    """
    if sign not in (-1, 1):
        raise InvalidSpecError(f"surgery sign must be +1 or -1, got {sign}")
    p.component(target)  # raises UnknownComponentError
    new = []
    for c in p.components:
        if c.name == target:
            continue
        e = c.linking.get(target, ())
        v = [list(row) for row in c.seifert]
        for i in range(len(e)):
            if e[i]:
                for j in range(len(e)):
                    v[i][j] -= sign * e[i] * e[j]
        new.append(
            Component(
                name=c.name,
                seifert=tuple(tuple(r) for r in v),
                linking={k: vec for k, vec in c.linking.items() if k != target},
            )
        )
    return SurgeryPresentation(base_order=p.base_order, components=tuple(new))


def drop_component(p, target):
    """Forget a 0-framed component without performing surgery on it."""
    p.component(target)
    new = [
        Component(
            name=c.name,
            seifert=c.seifert,
            linking={k: v for k, v in c.linking.items() if k != target},
        )
        for c in p.components
        if c.name != target
    ]
    return SurgeryPresentation(base_order=p.base_order, components=tuple(new))


def build_ribbon_pair(spec):
    """Two-component presentation realizing Sato-Levine number spec.s.

    Component 1 carries the (2g+2)-sized block Seifert matrix of the
    stabilized surface: first row zero, second row (epsilon, s, a_1..a_2g),
    then rows (0, a_m, W...).  Basis slot 1 is the meridional curve of the
    second component, slot 2 is the intersection circle.  Component 2 is
    an unknotted component with trivial (0x0) Seifert data; its surface
    basis is never needed.
    """
    spec.check()
    g2 = len(spec.w)
    n = g2 + 2
    rows = [[Fraction(0)] * n]
    rows.append([Fraction(spec.epsilon), Fraction(spec.s), *spec.a])
    for m in range(g2):
        rows.append([Fraction(0), spec.a[m], *spec.w[m]])
    e = [Fraction(0)] * n
    e[0] = Fraction(spec.epsilon)
    comp1 = Component(name="l1", seifert=tuple(tuple(r) for r in rows), linking={"l2": tuple(e)})
    comp2 = Component(name="l2", seifert=(), linking={"l1": ()})
    return SurgeryPresentation(base_order=spec.base_order, components=(comp1, comp2))


def build_triple(mu, spec):
    """Three-component presentation with triple linking number mu.

    Components 1 and 2 are the ribbon pair; component 3 is an unknotted
    component whose only interaction is that the intersection circle of
    the first two surfaces links it mu times (the c-slot, basis position
    2 of the stabilized surface, carries mu).
    """
    if type(mu) is not int:
        raise InvalidSpecError("mu must be an integer")
    pair = build_ribbon_pair(spec)
    comp1, comp2 = pair.components
    e3 = [Fraction(0)] * comp1.size
    e3[1] = Fraction(mu)
    comp1 = Component(
        name=comp1.name,
        seifert=comp1.seifert,
        linking={**comp1.linking, "l3": tuple(e3)},
    )
    comp2 = Component(
        name=comp2.name,
        seifert=comp2.seifert,
        linking={**comp2.linking, "l3": ()},
    )
    comp3 = Component(name="l3", seifert=(), linking={"l1": (), "l2": ()})
    return SurgeryPresentation(base_order=pair.base_order, components=(comp1, comp2, comp3))


def connected_sum_knot(p, comp, v):
    """Connected-sum a knot with the named component.

    The component's Seifert matrix becomes the block sum v (+) old, and its
    linking vectors are padded with zeros on the new rows: the summand's
    surface is disjoint from everything else.  All other data is unchanged.
    """
    v = fraction_matrix(v)
    if v:
        msg = skew_form_violation(v)
        if msg is not None:
            raise InvalidSpecError(f"summand matrix: {msg}")
    c = p.component(comp)
    k = len(v)
    n = c.size
    rows = []
    for i in range(k):
        rows.append(tuple(v[i]) + (Fraction(0),) * n)
    for i in range(n):
        rows.append((Fraction(0),) * k + tuple(c.seifert[i]))
    new_comp = Component(
        name=c.name,
        seifert=tuple(rows),
        linking={other: (Fraction(0),) * k + vec for other, vec in c.linking.items()},
    )
    return SurgeryPresentation(
        base_order=p.base_order,
        components=tuple(new_comp if x.name == comp else x for x in p.components),
    )


# Seifert matrices of the standard small knots, for builders and tests.
TREFOIL = fraction_matrix([[-1, 1], [0, -1]])
FIGURE_EIGHT = fraction_matrix([[1, 1], [0, -1]])
UNKNOT = fraction_matrix([])
