import itertools
import random

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def random_unimodular(n: int, rng: random.Random, steps: int = 6):
    """Product of random elementary integer row operations and sign flips."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        if n == 1:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-1, 1))
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    for i in range(n):
        if rng.random() < 0.5:
            m[i] = [-x for x in m[i]]
    return m


def zero_one_points(n: int, rng: random.Random):
    """Random subset of {0,1}^n that spans R^n affinely (retries until it does)."""
    from odakit.geometry import affine_dimension

    cube = list(itertools.product((0, 1), repeat=n))
    while True:
        pts = [p for p in cube if rng.random() < 0.6]
        if len(pts) > n and affine_dimension(pts) == n:
            return pts

