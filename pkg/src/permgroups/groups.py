"""Finite permutation groups: construction, membership, standard subgroups,
quotients, and products.

Everything here is exact.  Groups are immutable once constructed (the
stabilizer chain is built eagerly), so any value can be shared freely.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from .chain import StabilizerChain
from .errors import InputError, PreconditionError, ResourceLimitError
from .limits import Limits, resolve
from .perms import Permutation


class PermGroup:
    """A finite group given by permutation generators on a fixed point set."""

    def __init__(
        self,
        degree: int,
        generators: Iterable[Permutation] = (),
        name: str | None = None,
    ):
        if degree < 1:
            raise InputError("group degree must be at least 1")
        gens: list[Permutation] = []
        seen: set[Permutation] = set()
        for g in generators:
            if not isinstance(g, Permutation):
                raise InputError(f"generator {g!r} is not a Permutation")
            if g.degree != degree:
                raise InputError(
                    f"generator degree {g.degree} does not match group degree {degree}"
                )
            if g.is_identity() or g in seen:
                continue
            seen.add(g)
            gens.append(g)
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self.name = name
        self.chain = StabilizerChain(degree, self.generators)
        self._cache: dict = {}

    # -- basic queries ---------------------------------------------------

    @property
    def order(self) -> int:
        val = self._cache.get("order")
        if val is None:
            val = self._cache["order"] = self.chain.order()
        return val

    def contains(self, p: Permutation) -> bool:
        if not isinstance(p, Permutation) or p.degree != self.degree:
            raise InputError("membership test requires a permutation of equal degree")
        return self.chain.contains(p)

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_abelian(self) -> bool:
        val = self._cache.get("abelian")
        if val is None:
            gens = self.generators
            val = all(a * b == b * a for a in gens for b in gens)
            self._cache["abelian"] = val
        return val

    def elements(self, limit: int | None = None) -> tuple[Permutation, ...]:
        """All elements, sorted by image tuple.  Guarded by the enumeration bound."""
        elems = self._cache.get("elements")
        if elems is None:
            bound = resolve(None).enumeration if limit is None else limit
            if self.order > bound:
                raise ResourceLimitError(
                    f"group order {self.order} exceeds enumeration bound {bound}"
                )
            elems = self._cache["elements"] = tuple(sorted(self.chain.elements()))
        return elems

    def element_set(self, limit: int | None = None) -> frozenset[Permutation]:
        val = self._cache.get("element_set")
        if val is None:
            val = self._cache["element_set"] = frozenset(self.elements(limit))
        return val

    def conjugacy_classes(self, limit: int | None = None) -> tuple[tuple[Permutation, ...], ...]:
        """Conjugacy classes as sorted tuples, ordered by least member."""
        val = self._cache.get("classes")
        if val is None:
            elems = self.elements(limit)
            gens = self.generators
            seen: set[Permutation] = set()
            classes = []
            for x in elems:
                if x in seen:
                    continue
                orbit = {x}
                queue = [x]
                while queue:
                    y = queue.pop()
                    for g in gens:
                        z = y.conjugated_by(g)
                        if z not in orbit:
                            orbit.add(z)
                            queue.append(z)
                seen |= orbit
                classes.append(tuple(sorted(orbit)))
            val = self._cache["classes"] = tuple(classes)
        return val

    def self_subgroup(self) -> "Subgroup":
        val = self._cache.get("self_subgroup")
        if val is None:
            val = self._cache["self_subgroup"] = Subgroup(self, self.generators, name=self.name)
        return val

    def trivial_subgroup(self) -> "Subgroup":
        val = self._cache.get("trivial_subgroup")
        if val is None:
            val = self._cache["trivial_subgroup"] = Subgroup(self, ())
        return val

    def subgroup(self, generators: Iterable[Permutation], name: str | None = None) -> "Subgroup":
        return Subgroup(self, generators, name=name)

    # Equality is mutual generator membership, never generator-list identity.
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        if self is other:
            return True
        if self.degree != other.degree or self.order != other.order:
            return False
        return all(other.contains(g) for g in self.generators) and all(
            self.contains(g) for g in other.generators
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.order))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<PermGroup{label} degree={self.degree} order={self.order}>"


class Subgroup(PermGroup):
    """A subgroup of an ambient group; carries its own stabilizer chain."""

    def __init__(
        self,
        ambient: PermGroup,
        generators: Iterable[Permutation] = (),
        name: str | None = None,
    ):
        generators = tuple(generators)
        for g in generators:
            if not ambient.contains(g):
                raise InputError(f"generator {g!r} is not a member of the ambient group")
        super().__init__(ambient.degree, generators, name=name)
        self.ambient = ambient

    def is_normal(self) -> bool:
        val = self._cache.get("normal")
        if val is None:
            val = all(
                self.contains(g.conjugated_by(s))
                for g in self.generators
                for s in self.ambient.generators
            )
            self._cache["normal"] = val
        return val


# -- subgroup helpers ------------------------------------------------------


def group_from_generators(
    degree: int, gens: Iterable[Permutation], name: str | None = None
) -> PermGroup:
    """Construct a group from explicit generators (empty set gives the trivial group)."""
    return PermGroup(degree, gens, name=name)


def subgroup_from_elements(
    G: PermGroup, elements: Iterable[Permutation], name: str | None = None
) -> Subgroup:
    """Subgroup generated by the given elements, with a reduced generating set.

    Elements already generated by previously kept ones are skipped, so the
    resulting generator list stays logarithmic in the subgroup order.
    """
    gens: list[Permutation] = []
    chain = StabilizerChain(G.degree, ())
    for e in sorted(set(elements)):
        if e.is_identity() or chain.contains(e):
            continue
        gens.append(e)
        chain = StabilizerChain(G.degree, gens)
    return Subgroup(G, gens, name=name)


def join_subgroups(G: PermGroup, *subs: PermGroup, name: str | None = None) -> Subgroup:
    gens: list[Permutation] = []
    for s in subs:
        gens.extend(s.generators)
    return Subgroup(G, gens, name=name)


def centralizer(G: PermGroup, S: PermGroup, limits: Limits | None = None) -> Subgroup:
    """{g in G : gs = sg for every s in S}, by enumeration of G.

    S must be a subgroup of G (generator membership is checked).  It suffices
    to commute with S's generators.
    """
    lim = resolve(limits)
    if S.degree != G.degree:
        raise InputError("centralizer requires matching degrees")
    for s in S.generators:
        if not G.contains(s):
            raise InputError("S is not a subgroup of G")
    sgens = S.generators
    passing = [g for g in G.elements(lim.enumeration) if all(g * s == s * g for s in sgens)]
    return subgroup_from_elements(G, passing)


def center(G: PermGroup, limits: Limits | None = None) -> Subgroup:
    return centralizer(G, G, limits)


def normal_closure(G: PermGroup, S: PermGroup) -> Subgroup:
    """Smallest normal subgroup of G containing S (conjugation-closure fixpoint)."""
    for s in S.generators:
        if not G.contains(s):
            raise InputError("S is not a subgroup of G")
    gens = list(S.generators)
    chain = StabilizerChain(G.degree, gens)
    changed = True
    while changed:
        changed = False
        for t in list(gens):
            for g in G.generators:
                c = t.conjugated_by(g)
                if not chain.contains(c):
                    gens.append(c)
                    chain = StabilizerChain(G.degree, gens)
                    changed = True
    return Subgroup(G, gens)


def commutator_subgroup(G: PermGroup, A: PermGroup, B: PermGroup) -> Subgroup:
    """[A, B]: normal closure in <A, B> of the generator commutators."""
    J = join_subgroups(G, A, B)
    comms = [a.commutator_with(b) for a in A.generators for b in B.generators]
    closed = normal_closure(J, subgroup_from_elements(J, comms))
    return Subgroup(G, closed.generators)


# -- quotients -------------------------------------------------------------


class Quotient:
    """Right-coset action of G on the cosets of a normal subgroup N.

    ``group`` is the quotient as a permutation group, ``project`` the natural
    homomorphism (kernel N).  When N is trivial the quotient is realized as G
    itself with the identity projection.
    """

    def __init__(self, ambient: PermGroup, kernel: Subgroup, limits: Limits | None = None):
        lim = resolve(limits)
        self.ambient = ambient
        self.kernel = kernel
        if kernel.is_trivial():
            self.group = ambient
            self.reps: tuple[Permutation, ...] = ()
            self._coset_of: dict[tuple, int] | None = None
            return
        ambient.elements(lim.enumeration)  # enforce the bound before coset work
        kernel_elems = kernel.elements(lim.enumeration)
        coset_of: dict[tuple, int] = {}
        reps: list[Permutation] = []

        def register(rep: Permutation) -> int:
            idx = len(reps)
            reps.append(rep)
            for n in kernel_elems:
                coset_of[(n * rep).images] = idx
            return idx

        register(Permutation.identity(ambient.degree))
        queue = [reps[0]]
        while queue:
            rep = queue.pop(0)
            for g in ambient.generators:
                t = rep * g
                if t.images not in coset_of:
                    register(t)
                    queue.append(t)
        self.reps = tuple(reps)
        self._coset_of = coset_of
        count = len(reps)
        gens = []
        for g in ambient.generators:
            images = tuple(coset_of[(rep * g).images] for rep in reps)
            gens.append(Permutation._unchecked(images))
        self.group = PermGroup(count, gens)

    def coset_index(self, g: Permutation) -> int:
        if self._coset_of is None:
            raise InputError("coset indices are not materialized for a trivial kernel")
        idx = self._coset_of.get(g.images)
        if idx is None:
            raise InputError("element does not belong to the ambient group")
        return idx

    def project(self, g: Permutation) -> Permutation:
        if self._coset_of is None:
            return g
        coset_of = self._coset_of
        return Permutation._unchecked(tuple(coset_of[(rep * g).images] for rep in self.reps))

    def lift(self, q: Permutation) -> Permutation:
        """A coset representative mapping to q (regular action on cosets)."""
        if self._coset_of is None:
            return q
        return self.reps[q.images[0]]

    def lift_subgroup(self, qsub: PermGroup, name: str | None = None) -> Subgroup:
        """Full preimage in the ambient group of a subgroup of the quotient."""
        gens = list(self.kernel.generators)
        gens.extend(self.lift(q) for q in qsub.generators)
        return Subgroup(self.ambient, gens, name=name)


def quotient_group(G: PermGroup, N: Subgroup, limits: Limits | None = None) -> Quotient:
    """Quotient of G by a normal subgroup N, with the projection map.

    Raises PreconditionError when N is not normal in G.
    """
    if N.degree != G.degree:
        raise InputError("quotient requires matching degrees")
    for n in N.generators:
        if not G.contains(n):
            raise InputError("N is not a subgroup of G")
        for g in G.generators:
            if not N.contains(n.conjugated_by(g)):
                raise PreconditionError(
                    f"subgroup is not normal: conjugate of {n!r} by {g!r} falls outside"
                )
    return Quotient(G, N, limits)


# -- products ----------------------------------------------------------------


def _embed_left(p: Permutation, extra: int) -> Permutation:
    return Permutation._unchecked(p.images + tuple(range(p.degree, p.degree + extra)))


def _embed_right(p: Permutation, offset: int) -> Permutation:
    return Permutation._unchecked(
        tuple(range(offset)) + tuple(offset + v for v in p.images)
    )


def direct_product(A: PermGroup, B: PermGroup, name: str | None = None) -> PermGroup:
    """External direct product on the disjoint union of the point sets."""
    gens = [_embed_left(a, B.degree) for a in A.generators]
    gens += [_embed_right(b, A.degree) for b in B.generators]
    if name is None and A.name and B.name:
        name = f"{A.name}x{B.name}"
    return PermGroup(A.degree + B.degree, gens, name=name)


def automorphism_permutation(
    N: PermGroup, func: Callable[[Permutation], Permutation], limits: Limits | None = None
) -> Permutation:
    """Encode an automorphism of N as a permutation of N's sorted element list."""
    lim = resolve(limits)
    elems = N.elements(lim.enumeration)
    index = {e: i for i, e in enumerate(elems)}
    images = []
    for e in elems:
        img = func(e)
        if img not in index:
            raise InputError("function does not map the group onto itself")
        images.append(index[img])
    return Permutation(images)


def trivial_action(N: PermGroup, H: PermGroup, limits: Limits | None = None) -> dict:
    lim = resolve(limits)
    ident = Permutation.identity(len(N.elements(lim.enumeration)))
    return {h: ident for h in H.generators}


def semidirect_product(
    N: PermGroup,
    H: PermGroup,
    action: Mapping[Permutation, Permutation],
    limits: Limits | None = None,
    name: str | None = None,
) -> PermGroup:
    """External semidirect product N x| H.

    ``action`` maps each generator of H to an automorphism of N encoded as a
    permutation of N's sorted element list (see automorphism_permutation).
    The generator images must extend to a homomorphism H -> Aut(N); that is
    the caller's contract and is not machine-checked beyond the generator-pair
    tests below.

    The result is realized on N's element set together with H's own points,
    so it is faithful for the full product even when the action has a kernel;
    a trivial action therefore reproduces the direct product N x H.
    """
    lim = resolve(limits)
    if N.order > lim.semidirect_degree:
        raise ResourceLimitError(
            f"semidirect realization needs {N.order} points, "
            f"exceeding the degree bound {lim.semidirect_degree}"
        )
    elems = N.elements(max(lim.enumeration, N.order))
    index = {e: i for i, e in enumerate(elems)}
    npts = len(elems)
    id_idx = index[Permutation.identity(N.degree)]

    gens: list[Permutation] = []
    for ngen in N.generators:
        translation = tuple(index[e * ngen] for e in elems)
        gens.append(Permutation._unchecked(translation + tuple(npts + k for k in range(H.degree))))

    for hgen in H.generators:
        phi = action.get(hgen)
        if phi is None:
            raise InputError(f"action is missing an image for generator {hgen!r}")
        if not isinstance(phi, Permutation) or phi.degree != npts:
            raise InputError("action images must be permutations of N's element list")
        if phi.images[id_idx] != id_idx:
            raise PreconditionError("action image does not fix the identity element")
        for a in N.generators:
            for b in N.generators:
                lhs = phi.images[index[a * b]]
                rhs = index[elems[phi.images[index[a]]] * elems[phi.images[index[b]]]]
                if lhs != rhs:
                    raise PreconditionError(
                        "action image is not an automorphism on a generator pair"
                    )
        gens.append(
            Permutation._unchecked(phi.images + tuple(npts + v for v in hgen.images))
        )

    return PermGroup(npts + H.degree, gens, name=name)


# -- series -------------------------------------------------------------------


def upper_central_series(G: PermGroup, limits: Limits | None = None) -> list[Subgroup]:
    """Ascending central series 1 <= Z1 <= Z2 <= ..., ending at the hypercenter."""
    terms = [G.trivial_subgroup()]
    while True:
        Z = terms[-1]
        Q = quotient_group(G, Z, limits)
        zbar = center(Q.group, limits)
        if zbar.is_trivial():
            return terms
        nxt = Q.lift_subgroup(zbar)
        if nxt.order == Z.order:
            return terms
        terms.append(nxt)
