"""Shared brute-force oracles built directly on permutations.

Everything here is deliberately independent of the package's combinatorial
machinery: signs come from inversion counts, class data from explicit
conjugation orbits, and character values (where used) from fixed-point
counts.  Feasible for n <= 5 wherever whole groups are enumerated.
"""

from itertools import permutations

import pytest


def sn_elements(n):
    return list(permutations(range(n)))


def compose(a, b):
    # apply b first, then a
    return tuple(a[b[i]] for i in range(len(a)))


def inverse(p):
    q = [0] * len(p)
    for i, v in enumerate(p):
        q[v] = i
    return tuple(q)


def perm_cycle_type(p):
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def perm_sign(p):
    inv = sum(
        1
        for i in range(len(p))
        for j in range(i + 1, len(p))
        if p[i] > p[j]
    )
    return -1 if inv % 2 else 1


def fixed_points(p):
    return sum(1 for i, v in enumerate(p) if i == v)


def an_elements(n):
    return [p for p in sn_elements(n) if perm_sign(p) == 1]


def conjugacy_classes(elements, conjugators):
    """Orbits of `elements` under conjugation by `conjugators`."""
    remaining = set(elements)
    classes = []
    while remaining:
        g = min(remaining)
        orbit = {compose(compose(h, g), inverse(h)) for h in conjugators}
        classes.append(orbit)
        remaining -= orbit
    return classes


@pytest.fixture(scope="session")
def s4_classes():
    elems = sn_elements(4)
    return conjugacy_classes(elems, elems)


@pytest.fixture(scope="session")
def s5_classes():
    elems = sn_elements(5)
    return conjugacy_classes(elems, elems)
