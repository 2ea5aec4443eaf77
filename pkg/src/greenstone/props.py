"""Predicates on finite semigroups and biacts.

Every predicate returns a PredicateResult carrying a replayable witness on
failure; a semigroup argument is always analysed through the biact of the
semigroup acting on itself, so "stable" for a semigroup means exactly that
its regular biact is stable.

The stability, minimal-condition and periodicity predicates are trivially
true on finite inputs (finite posets satisfy the minimal condition, finite
biacts are stable), but they are still computed constructively, never
returned as constants: a false answer from any of them on a finite
structure is an engine bug, and the verification suite leans on that.
The relative predicates (K-preservation, regularity, retracts) genuinely
vary.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Iterable, Optional, Union

from .biact import FiniteBiact, regular_biact
from .core import FiniteSemigroup, subsemigroup
from .errors import NotASubsemigroup
from .green import GreenStructure, green_structure

Structure = Union[FiniteSemigroup, FiniteBiact]


@dataclass
class PredicateResult:
    value: Optional[bool]            # None means inconclusive
    method: str
    witness: Any = None

    @property
    def status(self) -> str:
        if self.value is None:
            return "inconclusive"
        return "true" if self.value else "false"

    def __bool__(self) -> bool:
        return self.value is True

    def to_json(self) -> dict:
        return {"value": self.value, "method": self.method, "witness": self.witness}


def _as_biact(x: Structure) -> FiniteBiact:
    return regular_biact(x) if isinstance(x, FiniteSemigroup) else x


def minimal_condition(x: Structure, k: str) -> PredicateResult:
    """Minimal condition on the poset of K-classes.

    On finite structures this reduces to the class condensation being
    acyclic, which is established constructively (Kahn's algorithm over
    the covering edges must consume every class).
    """
    if k not in ("L", "R", "J"):
        raise ValueError(f"minimal conditions exist for L, R, J; got {k!r}")
    a = _as_biact(x)
    gs = green_structure(a)
    n = gs.num_classes(k)
    indeg = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    for upper, lower in gs.covers(k):
        out[upper].append(lower)
        indeg[lower] += 1
    queue = [c for c in range(n) if indeg[c] == 0]
    seen = 0
    while queue:
        c = queue.pop()
        seen += 1
        for d in out[c]:
            indeg[d] -= 1
            if indeg[d] == 0:
                queue.append(d)
    ok = seen == n
    return PredicateResult(ok, method=f"acyclic {k}-class condensation",
                           witness=None if ok else {"classes_unconsumed": n - seen})


def left_stable(x: Structure) -> PredicateResult:
    """sa J a implies sa L a, for all s in S and carrier elements a."""
    a = _as_biact(x)
    gs = green_structure(a)
    for s in range(a.left.order):
        for e in range(a.size):
            sa = a.left_action[s][e]
            if gs.same(sa, e, "J") and not gs.same(sa, e, "L"):
                return PredicateResult(False, method="definition",
                                       witness={"s": s, "a": e, "sa": sa})
    return PredicateResult(True, method="definition")


def right_stable(x: Structure) -> PredicateResult:
    a = _as_biact(x)
    gs = green_structure(a)
    for e in range(a.size):
        for t in range(a.right.order):
            at = a.right_action[e][t]
            if gs.same(at, e, "J") and not gs.same(at, e, "R"):
                return PredicateResult(False, method="definition",
                                       witness={"a": e, "t": t, "at": at})
    return PredicateResult(True, method="definition")


def stable(x: Structure) -> PredicateResult:
    lres = left_stable(x)
    if not lres:
        return PredicateResult(False, method="definition",
                               witness={"side": "left", **(lres.witness or {})})
    rres = right_stable(x)
    if not rres:
        return PredicateResult(False, method="definition",
                               witness={"side": "right", **(rres.witness or {})})
    return PredicateResult(True, method="definition")


def _relation_pairs(gs: GreenStructure, n: int):
    le_l = {(a, b) for a in range(n) for b in range(n) if gs.le(a, b, "L")}
    same_j = {(a, b) for a in range(n) for b in range(n) if gs.same(a, b, "J")}
    same_l = {(a, b) for a in range(n) for b in range(n) if gs.same(a, b, "L")}
    ge_j = {(a, b) for a in range(n) for b in range(n) if gs.le(b, a, "J")}
    return le_l, same_j, same_l, ge_j


def left_stable_forms(x: Structure) -> tuple[bool, bool, bool, bool, bool, bool, bool, bool]:
    """Eight equivalent renderings of left stability, evaluated independently.

    1. the definition (sa J a implies sa L a);
    2. <=_L meet J equals L, as relations;
    3. <=_L meet J is contained in L;
    4. <=_L meet >=_J equals L;
    5. <=_L meet >=_J is contained in L;
    6. within each J-class, every L-class of the restricted poset is minimal;
    7. within each J-class, the restricted L-class poset has the minimal
       condition (finite rendering: its strict order is acyclic);
    8. within each J-class, the restricted poset has a minimal element.
    """
    a = _as_biact(x)
    gs = green_structure(a)
    n = a.size
    f1 = bool(left_stable(a))

    le_l, same_j, same_l, ge_j = _relation_pairs(gs, n)
    cap_j = le_l & same_j
    cap_gej = le_l & ge_j
    f2 = cap_j == same_l
    f3 = cap_j <= same_l
    f4 = cap_gej == same_l
    f5 = cap_gej <= same_l

    # L-classes grouped by the J-class containing them
    by_j: dict[int, list[int]] = {}
    for lcls, members in enumerate(gs.classes["L"]):
        by_j.setdefault(gs.class_of["J"][members[0]], []).append(lcls)

    def strictly_below(c: int, d: int) -> bool:
        return gs.class_le(c, d, "L") and not gs.class_le(d, c, "L")

    f6 = f7 = f8 = True
    for lclasses in by_j.values():
        below = {(c, d) for c in lclasses for d in lclasses if strictly_below(c, d)}
        if below:
            f6 = False
        # acyclicity of the restricted strict order
        for c, d in below:
            if (d, c) in below:
                f7 = False
        minimal = [c for c in lclasses
                   if not any((d, c) in below for d in lclasses)]
        if not minimal:
            f8 = False
    return (f1, f2, f3, f4, f5, f6, f7, f8)


def stable_char(x: Structure) -> PredicateResult:
    """D = J together with (<=_L meet R) = H = (L meet <=_R), as relations."""
    a = _as_biact(x)
    gs = green_structure(a)
    n = a.size
    if tuple(gs.class_of["D"]) != tuple(gs.class_of["J"]):
        return PredicateResult(False, method="D=J and trace conditions",
                               witness={"reason": "D != J"})
    for e in range(n):
        for f in range(n):
            lhs = gs.le(e, f, "L") and gs.same(e, f, "R")
            if lhs != gs.same(e, f, "H"):
                return PredicateResult(False, method="D=J and trace conditions",
                                       witness={"pair": (e, f), "reason": "<=_L meet R != H"})
            rhs = gs.same(e, f, "L") and gs.le(e, f, "R")
            if rhs != gs.same(e, f, "H"):
                return PredicateResult(False, method="D=J and trace conditions",
                                       witness={"pair": (e, f), "reason": "L meet <=_R != H"})
    return PredicateResult(True, method="D=J and trace conditions")


def l_periodic(x: Structure) -> PredicateResult:
    """For each s and a there is n <= size+1 with s^n a L s^(n+1) a.

    The bound suffices by pigeonhole on the orbit of a under s.
    """
    a = _as_biact(x)
    gs = green_structure(a)
    for s in range(a.left.order):
        for e in range(a.size):
            orbit = [e]
            for _ in range(a.size + 1):
                orbit.append(a.left_action[s][orbit[-1]])
            if not any(gs.same(orbit[i], orbit[i + 1], "L")
                       for i in range(1, a.size + 1)):
                return PredicateResult(False, method="orbit scan",
                                       witness={"s": s, "a": e})
    return PredicateResult(True, method="orbit scan")


def r_periodic(x: Structure) -> PredicateResult:
    a = _as_biact(x)
    gs = green_structure(a)
    for t in range(a.right.order):
        for e in range(a.size):
            orbit = [e]
            for _ in range(a.size + 1):
                orbit.append(a.right_action[orbit[-1]][t])
            if not any(gs.same(orbit[i], orbit[i + 1], "R")
                       for i in range(1, a.size + 1)):
                return PredicateResult(False, method="orbit scan",
                                       witness={"t": t, "a": e})
    return PredicateResult(True, method="orbit scan")


def group_bound(s: FiniteSemigroup) -> PredicateResult:
    """Every element has a power inside a subgroup, decided by finding a
    power H-related to an idempotent power."""
    gs = green_structure(s)
    for x in range(s.order):
        powers = [x]
        seen = {x}
        while True:
            nxt = s.table[powers[-1]][x]
            if nxt in seen:
                break
            seen.add(nxt)
            powers.append(nxt)
        idem = next((p for p in powers if s.table[p][p] == p), None)
        if idem is None or not any(gs.same(p, idem, "H") for p in powers):
            return PredicateResult(False, method="idempotent power search",
                                   witness={"element": x})
    return PredicateResult(True, method="idempotent power search")


def k_preserving(s: FiniteSemigroup, sub_members: Iterable[int], k: str) -> PredicateResult:
    """The K-preorder of the subsemigroup coincides with the ambient
    K-preorder restricted to it."""
    members = sorted(set(sub_members))
    sub, carrier = subsemigroup(s, members)
    sub_gs = green_structure(sub)
    amb_gs = green_structure(s)
    for i in range(sub.order):
        for j in range(sub.order):
            inner = sub_gs.le(i, j, k)
            outer = amb_gs.le(carrier[i], carrier[j], k)
            if inner != outer:
                return PredicateResult(False, method="preorder comparison",
                                       witness={"pair": (carrier[i], carrier[j]),
                                                "in_sub": inner, "in_host": outer})
    return PredicateResult(True, method="preorder comparison")


def regular_subsemigroup(s: FiniteSemigroup, sub_members: Iterable[int]) -> PredicateResult:
    """a in aTa for every a in T."""
    members = sorted(set(sub_members))
    try:
        subsemigroup(s, members)
    except NotASubsemigroup:
        raise
    for a in members:
        if not any(s.table[s.table[a][t]][a] == a for t in members):
            return PredicateResult(False, method="definition", witness={"a": a})
    return PredicateResult(True, method="definition")


def retract(s: FiniteSemigroup, sub_members: Iterable[int],
            cap: int = 1_000_000) -> PredicateResult:
    """Exhaustive search for a homomorphism S -> T fixing T pointwise.

    Beyond ``cap`` candidate maps the search is abandoned and the result
    is inconclusive, never coerced to false.
    """
    members = sorted(set(sub_members))
    subsemigroup(s, members)  # validates
    inside = set(members)
    outside = [x for x in range(s.order) if x not in inside]
    if not outside:
        return PredicateResult(True, method="identity retraction",
                               witness={x: x for x in members})
    total = len(members) ** len(outside)
    if total > cap:
        return PredicateResult(None, method=f"search cap {cap} exceeded ({total} candidates)")
    for assignment in itertools.product(members, repeat=len(outside)):
        theta = {x: x for x in members}
        theta.update(zip(outside, assignment))
        if all(theta[s.table[a][b]] == s.table[theta[a]][theta[b]]
               for a in range(s.order) for b in range(s.order)):
            return PredicateResult(True, method="exhaustive map search",
                                   witness={str(k): v for k, v in sorted(theta.items())})
    return PredicateResult(False, method="exhaustive map search")


def replay_stability_witness(x: Structure, witness: dict) -> bool:
    """Re-verify a stability violation through the public le oracle."""
    a = _as_biact(x)
    gs = green_structure(a)
    if witness.get("side", "left") == "left" or "s" in witness:
        moved, base = witness["sa"], witness["a"]
        klass = "L"
    else:
        moved, base = witness["at"], witness["a"]
        klass = "R"
    j_related = gs.le(moved, base, "J") and gs.le(base, moved, "J")
    k_related = gs.le(moved, base, klass) and gs.le(base, moved, klass)
    return j_related and not k_related
