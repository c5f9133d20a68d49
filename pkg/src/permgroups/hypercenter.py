"""X-hypercenter computation (greedy climb plus definitional oracle),
intersections of X-maximal subgroups, and the verification suites.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Callable, Sequence

from .chiefs import (
    ChiefFactor,
    inner_induction_subgroup,
    minimal_normal_subgroups,
    normal_subgroups,
)
from .classes import GroupClass, NILPOTENT, QUASINILPOTENT, NCA, is_class_central, quasi_class
from .errors import ResourceLimitError, VerificationError
from .groups import PermGroup, Subgroup, quotient_group, upper_central_series
from .lattice import all_subgroups
from .limits import Limits, resolve
from .perms import format_permutation


@dataclass
class HypercenterResult:
    group: PermGroup
    class_name: str
    subgroup: Subgroup
    climb_trace: tuple[tuple[Subgroup, int, bool], ...]


@dataclass
class VerificationReport:
    group_id: str
    order: int
    class_name: str
    z_order: int | None
    int_order: int | None
    equal: bool
    witness: tuple[str, ...]
    z_generators: tuple[str, ...]
    int_generators: tuple[str, ...]
    millis: float | None
    error: str | None = None

    def to_record(self, include_timing: bool = True) -> dict:
        record = {
            "group_id": self.group_id,
            "order": self.order,
            "class": self.class_name,
            "z_order": self.z_order,
            "int_order": self.int_order,
            "equal": self.equal,
            "witness": list(self.witness),
            "z_generators": list(self.z_generators),
            "int_generators": list(self.int_generators),
        }
        if include_timing:
            record["millis"] = self.millis
        if self.error is not None:
            record["error"] = self.error
        return record

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_record(include_timing), sort_keys=True)


def _climb(
    G: PermGroup,
    step_ok: Callable[[ChiefFactor], bool],
    limits: Limits | None,
) -> tuple[Subgroup, tuple[tuple[Subgroup, int, bool], ...]]:
    """Greedy ascent: lift one admissible minimal normal subgroup per step.

    Candidates are scanned in their deterministic encoding order; the climb
    stops when no minimal normal subgroup of G/Z passes the step predicate.
    """
    lim = resolve(limits)
    Z = G.trivial_subgroup()
    trace: list[tuple[Subgroup, int, bool]] = []
    while Z.order < G.order:
        Q = quotient_group(G, Z, lim)
        lifted = None
        for mn in minimal_normal_subgroups(Q.group, lim):
            H = Q.lift_subgroup(mn)
            cf = ChiefFactor(G, Z, H, lim)
            if step_ok(cf):
                lifted = (H, cf)
                break
        if lifted is None:
            break
        H, cf = lifted
        trace.append((H, cf.factor.order, True))
        Z = H
    return Z, tuple(trace)


def hypercenter(G: PermGroup, X: GroupClass, limits: Limits | None = None) -> HypercenterResult:
    """Z_X(G) via the greedy climb over X-central minimal normal subgroups."""
    key = ("hypercenter", X.name)
    cached = G._cache.get(key)
    if cached is None:
        Z, trace = _climb(G, lambda cf: is_class_central(cf, X, limits), limits)
        cached = G._cache[key] = HypercenterResult(G, X.name, Z, trace)
    return cached


def hypercenter_oracle(G: PermGroup, X: GroupClass, limits: Limits | None = None) -> Subgroup:
    """Direct definition: the product of all X-hypercentral normal subgroups.

    A normal subgroup is X-hypercentral when one (hence, by Jordan-Hoelder,
    any) chief series of G below it has only X-central factors.  No greedy
    shortcut: every normal subgroup is enumerated and walked.
    """
    lim = resolve(limits)
    hypercentral: list[Subgroup] = []
    for N in normal_subgroups(G, lim):
        if _is_hypercentral_below(G, N, X, lim):
            hypercentral.append(N)
    gens = []
    for N in hypercentral:
        gens.extend(N.generators)
    return Subgroup(G, gens)


def _is_hypercentral_below(
    G: PermGroup, N: Subgroup, X: GroupClass, lim: Limits
) -> bool:
    K = G.trivial_subgroup()
    while K.order < N.order:
        Q = quotient_group(G, K, lim)
        Nbar = Q.group.subgroup([Q.project(g) for g in N.generators])
        step = None
        for mn in minimal_normal_subgroups(Q.group, lim):
            if all(Nbar.contains(g) for g in mn.generators):
                step = mn
                break
        if step is None:  # cannot happen for a normal N; defensive
            return False
        H = Q.lift_subgroup(step)
        cf = ChiefFactor(G, K, H, lim)
        if not is_class_central(cf, X, lim):
            return False
        K = H
    return True


def intersection_of_class_maximal(
    G: PermGroup, X: GroupClass, limits: Limits | None = None
) -> Subgroup:
    """Int_X(G): elementwise intersection of all X-maximal subgroups of G."""
    lattice = all_subgroups(G, limits)
    masks = lattice.class_maximal_masks(X)
    mask = (1 << G.order) - 1 if G.order else 0
    for m in masks:
        mask &= m
    return lattice.subgroup_from_mask(mask)


def inner_induction_hypercenter(G: PermGroup, limits: Limits | None = None) -> Subgroup:
    """Greatest normal subgroup below which every element of G induces inner
    automorphisms on every chief factor (greedy climb form)."""

    def step_ok(cf: ChiefFactor) -> bool:
        iis = inner_induction_subgroup(cf)
        return all(iis.contains(g) for g in G.generators)

    Z, _ = _climb(G, step_ok, limits)
    return Z


# -- verification suites -------------------------------------------------------


def _gen_strings(sub: PermGroup) -> tuple[str, ...]:
    return tuple(format_permutation(g) for g in sub.generators)


def _symmetric_difference(A: Subgroup, B: Subgroup) -> tuple[str, ...]:
    diff = A.element_set() ^ B.element_set()
    return tuple(format_permutation(p) for p in sorted(diff))


def _group_id(G: PermGroup, index: int) -> str:
    return G.name if G.name else f"G{index}"


def _contains_subgroup(big: PermGroup, small: PermGroup) -> bool:
    return all(big.contains(g) for g in small.generators)


def verify_theorem1(
    corpus: Sequence[PermGroup],
    F: GroupClass,
    limits: Limits | None = None,
    collect_timing: bool = True,
) -> list[VerificationReport]:
    """Per corpus group: Z_{F*}(G) and Int_{F*}(G), with the equality verdict.

    The containment Z <= Int is asserted unconditionally; its failure would
    contradict a proved inclusion and raises VerificationError.  Per-group
    resource errors are recorded in the report rather than aborting the run.
    """
    Fstar = quasi_class(F)
    reports = []
    for i, G in enumerate(corpus):
        gid = _group_id(G, i)
        started = time.perf_counter()
        try:
            Z = hypercenter(G, Fstar, limits).subgroup
            Int = intersection_of_class_maximal(G, Fstar, limits)
        except ResourceLimitError as exc:
            reports.append(
                VerificationReport(
                    group_id=gid, order=G.order, class_name=Fstar.name,
                    z_order=None, int_order=None, equal=False, witness=(),
                    z_generators=(), int_generators=(), millis=None, error=str(exc),
                )
            )
            continue
        if not _contains_subgroup(Int, Z):
            raise VerificationError(
                f"Z_{{{Fstar.name}}} not contained in Int_{{{Fstar.name}}} for {gid}; "
                f"witness generators {_gen_strings(Z)}"
            )
        equal = Z == Int
        millis = (time.perf_counter() - started) * 1000.0 if collect_timing else None
        reports.append(
            VerificationReport(
                group_id=gid, order=G.order, class_name=Fstar.name,
                z_order=Z.order, int_order=Int.order, equal=equal,
                witness=() if equal else _symmetric_difference(Z, Int),
                z_generators=_gen_strings(Z), int_generators=_gen_strings(Int),
                millis=millis,
            )
        )
    return reports


def verify_baer(
    corpus: Sequence[PermGroup],
    limits: Limits | None = None,
    collect_timing: bool = True,
) -> list[VerificationReport]:
    """Int_N(G) = Z_N(G) = top of the upper central series, per corpus group."""
    reports = []
    for i, G in enumerate(corpus):
        gid = _group_id(G, i)
        started = time.perf_counter()
        try:
            Z = hypercenter(G, NILPOTENT, limits).subgroup
            Int = intersection_of_class_maximal(G, NILPOTENT, limits)
            ucs_top = upper_central_series(G, limits)[-1]
        except ResourceLimitError as exc:
            reports.append(
                VerificationReport(
                    group_id=gid, order=G.order, class_name=NILPOTENT.name,
                    z_order=None, int_order=None, equal=False, witness=(),
                    z_generators=(), int_generators=(), millis=None, error=str(exc),
                )
            )
            continue
        equal = Z == Int and Z == ucs_top
        millis = (time.perf_counter() - started) * 1000.0 if collect_timing else None
        reports.append(
            VerificationReport(
                group_id=gid, order=G.order, class_name=NILPOTENT.name,
                z_order=Z.order, int_order=Int.order, equal=equal,
                witness=() if equal else _symmetric_difference(Z, Int),
                z_generators=_gen_strings(Z), int_generators=_gen_strings(Int),
                millis=millis,
            )
        )
    return reports


def verify_remark4(
    corpus: Sequence[PermGroup],
    limits: Limits | None = None,
    collect_timing: bool = True,
) -> list[VerificationReport]:
    """inner_induction_hypercenter(G) = Z_{N*}(G), per corpus group.

    The int_* report fields carry the inner-induction side of the comparison.
    """
    reports = []
    for i, G in enumerate(corpus):
        gid = _group_id(G, i)
        started = time.perf_counter()
        try:
            Z = hypercenter(G, QUASINILPOTENT, limits).subgroup
            inner = inner_induction_hypercenter(G, limits)
        except ResourceLimitError as exc:
            reports.append(
                VerificationReport(
                    group_id=gid, order=G.order, class_name=QUASINILPOTENT.name,
                    z_order=None, int_order=None, equal=False, witness=(),
                    z_generators=(), int_generators=(), millis=None, error=str(exc),
                )
            )
            continue
        equal = Z == inner
        millis = (time.perf_counter() - started) * 1000.0 if collect_timing else None
        reports.append(
            VerificationReport(
                group_id=gid, order=G.order, class_name=QUASINILPOTENT.name,
                z_order=Z.order, int_order=inner.order, equal=equal,
                witness=() if equal else _symmetric_difference(Z, inner),
                z_generators=_gen_strings(Z), int_generators=_gen_strings(inner),
                millis=millis,
            )
        )
    return reports


def compare_nca(
    corpus: Sequence[PermGroup],
    limits: Limits | None = None,
    collect_timing: bool = True,
) -> list[VerificationReport]:
    """Observe Z_{Nca}(G) against Int_{Nca}(G); nothing is asserted.

    The two sides can differ (the known separating group is far beyond desk
    scale), so the report records whatever the corpus shows.
    """
    reports = []
    for i, G in enumerate(corpus):
        gid = _group_id(G, i)
        started = time.perf_counter()
        try:
            Z = hypercenter(G, NCA, limits).subgroup
            Int = intersection_of_class_maximal(G, NCA, limits)
        except ResourceLimitError as exc:
            reports.append(
                VerificationReport(
                    group_id=gid, order=G.order, class_name=NCA.name,
                    z_order=None, int_order=None, equal=False, witness=(),
                    z_generators=(), int_generators=(), millis=None, error=str(exc),
                )
            )
            continue
        equal = Z == Int
        millis = (time.perf_counter() - started) * 1000.0 if collect_timing else None
        reports.append(
            VerificationReport(
                group_id=gid, order=G.order, class_name=NCA.name,
                z_order=Z.order, int_order=Int.order, equal=equal,
                witness=() if equal else _symmetric_difference(Z, Int),
                z_generators=_gen_strings(Z), int_generators=_gen_strings(Int),
                millis=millis,
            )
        )
    return reports
