"""Randomized identities checked with hypothesis, 1000 examples each."""
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_element, random_real_root
from weylkit import CoweightVec, RootVec, as_translation, load_builtin, reflection_through, translation_element
from weylkit.lattice import bilinear, enumerate_finite_roots, null_root, pair
from weylkit.weylgroup import act_on_coweight, simple_reflection

SETTINGS = settings(max_examples=1000, deadline=None, derandomize=True)
TYPES = ["D5~", "A3~", "D4~", "A1~"]
DATA = {t: load_builtin(t) for t in TYPES}

seeds = st.integers(min_value=0, max_value=2**32 - 1)
types = st.sampled_from(TYPES)


def coweight(rng, data, level=0):
    return CoweightVec([rng.randint(-3, 3) for _ in range(data.size - 1)] + [level])


@SETTINGS
@given(types, seeds)
def test_reflection_conjugation(t, seed):
    data, rng = DATA[t], random.Random(seed)
    w = random_element(rng, data)
    a = random_real_root(rng, data)
    assert w * reflection_through(a, data) * w.inverse() == reflection_through(w.act(a), data)


@SETTINGS
@given(types, seeds)
def test_translation_conjugation(t, seed):
    data, rng = DATA[t], random.Random(seed)
    w = random_element(rng, data)
    mu = coweight(rng, data)
    assert w * translation_element(mu, data) * w.inverse() == translation_element(act_on_coweight(w, mu), data)


@SETTINGS
@given(types, seeds)
def test_pairing_invariance(t, seed):
    data, rng = DATA[t], random.Random(seed)
    w = random_element(rng, data)
    v = RootVec([rng.randint(-5, 5) for _ in range(data.size)])
    f = CoweightVec([rng.randint(-5, 5) for _ in range(data.size)])
    assert pair(w.act(v), act_on_coweight(w, f), data) == pair(v, f, data)
    assert bilinear(w.act(v), w.act(v), data) == bilinear(v, v, data)


@SETTINGS
@given(types, seeds)
def test_translation_additivity_and_round_trip(t, seed):
    data, rng = DATA[t], random.Random(seed)
    mu, nu = coweight(rng, data), coweight(rng, data)
    tm, tn = translation_element(mu, data), translation_element(nu, data)
    assert tm * tn == translation_element(mu + nu, data) == tn * tm
    assert as_translation(tm).mu == mu
    assert as_translation(tm.inverse()).mu == -mu


@SETTINGS
@given(types, seeds)
def test_group_fixes_delta(t, seed):
    data, rng = DATA[t], random.Random(seed)
    w = random_element(rng, data, max_len=16)
    assert w.act(null_root(data)) == null_root(data)
    assert w.determinant() in (1, -1)


@SETTINGS
@given(types, seeds)
def test_root_orbit_closure(t, seed):
    data, rng = DATA[t], random.Random(seed)
    roots = enumerate_finite_roots(data)
    r = random_real_root(rng, data, kmax=0)
    i = rng.randrange(1, data.size)
    assert simple_reflection(i, data).act(r) in roots
    assert -r in roots
