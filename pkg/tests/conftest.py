import random

import pytest

from weylkit import GroupElement, load_builtin, simple_reflection
from weylkit.fixtures import build_geb_system
from weylkit.lattice import RootVec, enumerate_finite_roots, null_root
from weylkit.weylgroup import diagram_automorphism


def generators(data, with_auts=True):
    gens = [simple_reflection(i, data) for i in range(data.size)]
    if with_auts:
        gens += [diagram_automorphism(p, data, n) for n, p in data.automorphisms]
    return gens


def random_element(rng: random.Random, data, max_len=10, with_auts=True) -> GroupElement:
    gens = generators(data, with_auts)
    g = GroupElement.identity(data)
    for _ in range(rng.randint(0, max_len)):
        g = g * rng.choice(gens)
    return g


def random_real_root(rng: random.Random, data, kmax=3) -> RootVec:
    finite = sorted(enumerate_finite_roots(data), key=lambda r: tuple(r))
    r = rng.choice(finite)
    if data.affine:
        r = r + null_root(data) * rng.randint(-kmax, kmax)
    return r


@pytest.fixture(scope="session")
def d5():
    return load_builtin("D5~")


@pytest.fixture(scope="session")
def geb():
    return build_geb_system()
