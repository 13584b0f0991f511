import math
import itertools

import pytest

from reflexive.polytope import hull

QUINTIC = [(4, -1, -1, -1), (-1, 4, -1, -1), (-1, -1, 4, -1), (-1, -1, -1, 4), (-1, -1, -1, -1)]
QUINTIC_DUAL = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (-1, -1, -1, -1)]


def cube(n, r=1):
    return hull(list(itertools.product((-r, r), repeat=n)))


def cross_polytope(n):
    pts = []
    for i in range(n):
        for s in (1, -1):
            v = [0] * n
            v[i] = s
            pts.append(tuple(v))
    return hull(pts)


@pytest.fixture(scope="session")
def quintic():
    return hull(QUINTIC)


@pytest.fixture(scope="session")
def quintic_dual():
    return hull(QUINTIC_DUAL)


@pytest.fixture(scope="session")
def cube4():
    return cube(4)


@pytest.fixture(scope="session")
def cross4():
    return cross_polytope(4)


_CACHE = {}


def polygon_catalog():
    """Representatives of the 16 reflexive polygon classes."""
    if "polygons" not in _CACHE:
        from reflexive.classify import enumerate_reflexive

        _CACHE["polygons"] = list(enumerate_reflexive(2).representatives)
    return _CACHE["polygons"]


def threefold_catalog():
    """A fixed sample of reflexive 3-polytopes: weighted simplices, their duals,
    prisms over the reflexive polygons, the cube and the octahedron."""
    if "threefolds" not in _CACHE:
        from reflexive.pairs import enumerate_degree_tuples, weighted_simplex

        out = [cube(3), cross_polytope(3)]
        for d in enumerate_degree_tuples(3):
            s = weighted_simplex(d).local
            out += [s, s.polar_dual]
        for p in polygon_catalog():
            out.append(hull([v + (s,) for v in p.vertices for s in (-1, 1)]))
        _CACHE["threefolds"] = out
    return _CACHE["threefolds"]


def random_unimodular(rng, n, steps=8, bound=2):
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        k = rng.randint(-bound, bound)
        m[i] = [a + k * b for a, b in zip(m[i], m[j])]
        if rng.random() < 0.3:
            m[i], m[j] = m[j], m[i]
    return m


def transform(points, m):
    n = len(m)
    return [tuple(sum(p[i] * m[i][j] for i in range(n)) for j in range(n)) for p in points]


def oracle_degree_tuples(n):
    """Exhaustive search for sorted (d_0..d_n), d_i >= 2, with sum 1/d_i = 1.

    Entries are bounded by s_n - 1 with s = 2, 3, 7, 43, 1807, ... (Sylvester's
    sequence); integer arithmetic over a common multiple keeps it fast.
    """
    s = 2
    for _ in range(n):
        s = s * (s - 1) + 1
    bound = s - 1
    if bound > 1000:
        raise ValueError("box too large for exhaustive search")
    big = math.lcm(*range(2, bound + 1))
    inv = {d: big // d for d in range(2, bound + 1)}
    return [t for t in itertools.combinations_with_replacement(range(2, bound + 1), n + 1)
            if sum(inv[d] for d in t) == big]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
