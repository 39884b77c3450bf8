"""Shared generators for randomized tests.

All randomness is seeded (`random.Random(seed)`), so failures reproduce.
Random Seifert matrices are built with V - V^T equal to the standard
symplectic form, which makes them valid by construction while leaving the
symmetric part free.
"""

from fractions import Fraction
import random

import pytest

from lescop.corpus import corpus
from lescop.documents import serialize
from lescop.presentation import Component, RibbonPairSpec, SurgeryPresentation


def random_seifert(rng, g, bound=3):
    """Random integer 2g x 2g matrix with det(V - V^T) = 1, |entries| <= bound."""
    n = 2 * g
    j = [[0] * n for _ in range(n)]
    for m in range(g):
        j[2 * m][2 * m + 1] = 1
        j[2 * m + 1][2 * m] = -1
    v = [[0] * n for _ in range(n)]
    for i in range(n):
        v[i][i] = rng.randint(-bound, bound)
        for k in range(i + 1, n):
            skew = j[i][k]
            x = rng.randint(-bound + max(skew, 0), bound + min(skew, 0))
            v[i][k] = x
            v[k][i] = x - skew
    return tuple(tuple(Fraction(x) for x in row) for row in v)


def random_presentation(rng, n_components, h=1, gmax=3, bound=3):
    names = [f"l{i + 1}" for i in range(n_components)]
    comps = []
    for name in names:
        g = rng.randint(0, gmax)
        seifert = random_seifert(rng, g, bound)
        linking = {
            other: tuple(Fraction(rng.randint(-bound, bound)) for _ in range(2 * g))
            for other in names
            if other != name
        }
        comps.append(Component(name=name, seifert=seifert, linking=linking))
    return SurgeryPresentation(base_order=h, components=tuple(comps))


def random_ribbon_spec(rng, s=None, gmax=3, bound=3, h=1):
    g = rng.randint(0, gmax)
    if s is None:
        s = rng.randint(-5, 5)
    return RibbonPairSpec(
        s=s,
        a=tuple(Fraction(rng.randint(-bound, bound)) for _ in range(2 * g)),
        w=random_seifert(rng, g, bound),
        epsilon=rng.choice((1, -1)),
        base_order=h,
    )


def seeded(seed=20240815):
    return random.Random(seed)


@pytest.fixture(scope="session")
def corpus_dir(tmp_path_factory):
    """All built-in examples written out as files."""
    d = tmp_path_factory.mktemp("corpus")
    for name, doc in corpus().items():
        (d / f"{name}.json").write_text(serialize(doc), encoding="utf-8")
    return d
