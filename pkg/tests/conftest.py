"""Shared fixtures and brute-force oracles.

The oracles here deliberately avoid the stabilizer chain and the lattice
join machinery: closure is plain breadth-first multiplication, subgroup
enumeration is add-one-element closure, nilpotency is the normal-Sylow
criterion.  Expected values asserted in the tests were computed with these
oracles and then frozen.
"""

from __future__ import annotations

import pytest

import permgroups as pg
from permgroups.perms import Permutation


def closure_elements(degree: int, gens) -> frozenset[Permutation]:
    """<gens> by breadth-first multiplication; independent of the chain."""
    identity = Permutation.identity(degree)
    known = {identity}
    frontier = [identity]
    gens = list(gens)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in known:
                    known.add(y)
                    new.append(y)
        frontier = new
    return frozenset(known)


def brute_subgroups(G: pg.PermGroup) -> set[frozenset[Permutation]]:
    """All subgroups by add-one-element closure, seeded at the trivial group.

    Every subgroup arises by adjoining generators one element at a time, so
    iterating "extend each known subgroup by each outside element" reaches
    everything.  Exponential-ish, fine for tiny groups.
    """
    elems = G.elements()
    trivial = frozenset(closure_elements(G.degree, []))
    known = {trivial}
    frontier = [trivial]
    while frontier:
        new = []
        for H in frontier:
            for x in elems:
                if x in H:
                    continue
                J = frozenset(closure_elements(G.degree, list(H) + [x]))
                if J not in known:
                    known.add(J)
                    new.append(J)
        frontier = new
    return known


def nilpotent_oracle(G: pg.PermGroup) -> bool:
    """Normal-Sylow criterion: the p-elements form a subgroup for every p."""
    elems = G.elements()
    primes = set()
    for e in elems:
        o = e.order()
        d = 2
        while d * d <= o:
            if o % d == 0:
                primes.add(d)
                while o % d == 0:
                    o //= d
            d += 1
        if o > 1:
            primes.add(o)
    for p in primes:
        p_elems = [e for e in elems if _is_power_of(e.order(), p)]
        pset = set(p_elems)
        for a in p_elems:
            for b in p_elems:
                if a * b not in pset:
                    return False
    return True


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def element_orders(G: pg.PermGroup) -> tuple[int, ...]:
    return tuple(sorted(e.order() for e in G.elements()))


@pytest.fixture(scope="session")
def smoke():
    return pg.smoke_corpus()


@pytest.fixture(scope="session")
def standard():
    # session-scoped so chief series / lattice caches stay warm across tests
    return pg.standard_corpus()
