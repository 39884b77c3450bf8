"""SU(2)-representation counting for cyclic groups and connected sums.

A representation of Z/p into SU(2) is conjugate to a diagonal one sending
the generator to exp(2 pi i n / p).  Central representations (image in
{+-1}) contribute a point to the character variety; the others have
stabilizer U(1) and contribute a 2-sphere, hence +-chi(S^2) = +-2 to the
Euler characteristic.  The signed total per irreducible factor works out
to p for every p, which is the source of the torsion factor in the
connected-sum formulas below.  The signs of the individual sphere
contributions are not computed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class InvalidPError(ValueError):
    """p must be a positive integer."""


@dataclass(frozen=True)
class LensBreakdown:
    p: int
    central_classes: int
    sphere_classes: int
    euler_factor: int


def rep_classes(p):
    """Conjugacy classes of representations Z/p -> SU(2), by type.

    Enumerates the roots of unity exp(2 pi i n / p) for 0 <= n <= p-1 and
    deduplicates by trace, i.e. by the identification n ~ p - n.  A class
    is central exactly when its image is +-1, i.e. when 2n = 0 mod p.

    >>> rep_classes(5)
    LensBreakdown(p=5, central_classes=1, sphere_classes=2, euler_factor=5)
    >>> rep_classes(4)
    LensBreakdown(p=4, central_classes=2, sphere_classes=1, euler_factor=4)
    """
    if type(p) is not int or p < 1:
        raise InvalidPError(f"p must be a positive integer, got {p!r}")
    central = 0
    spheres = 0
    for n in range(p):
        partner = (p - n) % p
        if n == partner:
            central += 1
        elif n < partner:
            spheres += 1
    return LensBreakdown(
        p=p,
        central_classes=central,
        sphere_classes=spheres,
        euler_factor=central + 2 * spheres,
    )


def connect_sum_chi(chi_y, p):
    """chi of a connected sum with a lens space of order p.

    Each irreducible class of the other summand is multiplied by the
    representation count of Z/p, so chi picks up the factor p.  Computed
    through the class breakdown so the counting argument is what actually
    runs; connect_sum_chi(c, p) == p * c.
    """
    return rep_classes(p).euler_factor * chi_y


def lescop_connect_sum(lambda_y, p):
    """Lescop invariant of the same connected sum: p times the summand's.

    Stated for summands with torsion-free first homology of rank at least
    one; that hypothesis is the caller's responsibility.
    """
    if type(p) is not int or p < 1:
        raise InvalidPError(f"p must be a positive integer, got {p!r}")
    return p * Fraction(lambda_y)
