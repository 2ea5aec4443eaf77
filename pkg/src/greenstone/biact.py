"""Finite biacts: a carrier with compatible left and right semigroup actions.

A biact over semigroups S and T is a set A with maps (s, a) -> sa and
(a, t) -> at such that

    s(s'a) = (ss')a,    (at)t' = a(tt'),    (sa)t = s(at).

Action tables are dense: ``left_action[s][a]`` and ``right_action[a][t]``.
Carrier ids are their own namespace, disjoint from the semigroup ids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .core import FiniteSemigroup, classify_subset, is_homomorphism, subsemigroup
from .errors import (
    ActionAxiomViolation,
    BadEntry,
    NotAHomomorphism,
    NotAnIdeal,
    NotASubact,
    RoleViolation,
)


@dataclass(frozen=True)
class FiniteBiact:
    left: FiniteSemigroup
    right: FiniteSemigroup
    size: int
    left_action: tuple[tuple[int, ...], ...]   # |S| x size
    right_action: tuple[tuple[int, ...], ...]  # size x |T|
    labels: tuple[str, ...]
    provenance: Mapping = field(default_factory=dict, compare=False, repr=False)

    def act_left(self, s: int, a: int) -> int:
        return self.left_action[s][a]

    def act_right(self, a: int, t: int) -> int:
        return self.right_action[a][t]

    def carrier(self) -> range:
        return range(self.size)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return (f"FiniteBiact(size={self.size}, left={self.left.order}, "
                f"right={self.right.order})")


@dataclass(frozen=True)
class Subact:
    host: FiniteBiact
    members: frozenset[int]


def action_axiom_violation(s: FiniteSemigroup, t: FiniteSemigroup,
                           left: Sequence[Sequence[int]],
                           right: Sequence[Sequence[int]]) -> Optional[tuple[str, tuple]]:
    """First violated axiom as (name, witness triple), or None."""
    for s1 in range(s.order):
        for s2 in range(s.order):
            for a in range(len(right)):
                if left[s1][left[s2][a]] != left[s.table[s1][s2]][a]:
                    return ("left", (s1, s2, a))
    for a in range(len(right)):
        for t1 in range(t.order):
            for t2 in range(t.order):
                if right[right[a][t1]][t2] != right[a][t.table[t1][t2]]:
                    return ("right", (a, t1, t2))
    for s1 in range(s.order):
        for a in range(len(right)):
            for t1 in range(t.order):
                if right[left[s1][a]][t1] != left[s1][right[a][t1]]:
                    return ("mixed", (s1, a, t1))
    return None


def validate_biact(s: FiniteSemigroup, t: FiniteSemigroup,
                   left_action: Sequence[Sequence[int]],
                   right_action: Sequence[Sequence[int]],
                   labels: Optional[Sequence[str]] = None,
                   provenance: Optional[Mapping] = None) -> FiniteBiact:
    size = len(right_action)
    if size <= 0:
        raise BadEntry("biact carrier must be nonempty")
    if len(left_action) != s.order or any(len(row) != size for row in left_action):
        raise BadEntry(f"left action must be {s.order}x{size}")
    if any(len(row) != t.order for row in right_action):
        raise BadEntry(f"right action must be {size}x{t.order}")
    for row in left_action:
        for a in row:
            if not (0 <= a < size):
                raise BadEntry(f"left action entry {a} outside carrier")
    for row in right_action:
        for a in row:
            if not (0 <= a < size):
                raise BadEntry(f"right action entry {a} outside carrier")
    bad = action_axiom_violation(s, t, left_action, right_action)
    if bad is not None:
        raise ActionAxiomViolation(*bad)
    if labels is None:
        labels = tuple(f"a{i}" for i in range(size))
    elif len(labels) != size:
        raise BadEntry("labels must match the carrier size")
    return FiniteBiact(
        left=s, right=t, size=size,
        left_action=tuple(tuple(row) for row in left_action),
        right_action=tuple(tuple(row) for row in right_action),
        labels=tuple(labels),
        provenance=dict(provenance or {"kind": "biact"}),
    )


def regular_biact(s: FiniteSemigroup) -> FiniteBiact:
    """The semigroup acting on itself by multiplication on both sides."""
    left = s.table
    right = s.table
    return validate_biact(s, s, left, right, labels=s.labels,
                          provenance={"kind": "regular"})


def ideal_biact(s: FiniteSemigroup, ideal: Iterable[int]) -> FiniteBiact:
    """An ideal of S as an S-biact under multiplication."""
    mem = sorted(set(ideal))
    if not mem:
        raise NotAnIdeal("an ideal biact needs a nonempty ideal")
    try:
        classify_subset(s, mem, "ideal")
    except RoleViolation as exc:
        raise NotAnIdeal(f"not an ideal: witness {exc.witness}") from exc
    idx = {a: i for i, a in enumerate(mem)}
    left = [[idx[s.table[x][a]] for a in mem] for x in range(s.order)]
    right = [[idx[s.table[a][x]] for x in range(s.order)] for a in mem]
    labels = tuple(s.labels[a] for a in mem)
    return validate_biact(s, s, left, right, labels=labels,
                          provenance={"kind": "ideal", "ideal": tuple(mem)})


def relative_biact(s: FiniteSemigroup, sub_members: Iterable[int]) -> FiniteBiact:
    """S as a biact over a subsemigroup T, acting by multiplication in S."""
    sub, carrier = subsemigroup(s, sub_members)
    left = [[s.table[carrier[i]][a] for a in range(s.order)] for i in range(sub.order)]
    right = [[s.table[a][carrier[j]] for j in range(sub.order)] for a in range(s.order)]
    return validate_biact(sub, sub, left, right, labels=s.labels,
                          provenance={"kind": "relative", "sub_ids": tuple(carrier)})


def is_subact(a: FiniteBiact, members: Iterable[int]) -> Optional[tuple]:
    """A witness that members is not closed under both actions, or None."""
    mem = set(members)
    for x in mem:
        if not (0 <= x < a.size):
            raise BadEntry(f"member {x} outside carrier")
    for s in range(a.left.order):
        for x in mem:
            if a.left_action[s][x] not in mem:
                return ("left", s, x, a.left_action[s][x])
    for x in mem:
        for t in range(a.right.order):
            if a.right_action[x][t] not in mem:
                return ("right", x, t, a.right_action[x][t])
    return None


def subact_closure(a: FiniteBiact, seed: Iterable[int]) -> Subact:
    """Smallest subact containing ``seed`` (possibly empty)."""
    members = set(seed)
    frontier = list(members)
    while frontier:
        fresh = []
        for x in frontier:
            for s in range(a.left.order):
                y = a.left_action[s][x]
                if y not in members:
                    members.add(y)
                    fresh.append(y)
            for t in range(a.right.order):
                y = a.right_action[x][t]
                if y not in members:
                    members.add(y)
                    fresh.append(y)
        frontier = fresh
    return Subact(host=a, members=frozenset(members))


def biact_rees_quotient(a: FiniteBiact, sub: Iterable[int]) -> FiniteBiact:
    """Collapse a subact to a single absorbing zero (the new last element).

    The empty subact is permitted: the quotient is then A with a fresh
    absorbing zero; claim suites quarantine that case.
    """
    mem = frozenset(sub)
    if mem:
        witness = is_subact(a, mem)
        if witness is not None:
            raise NotASubact(f"not a subact: witness {witness}")
    keep = [x for x in range(a.size) if x not in mem]
    idx = {x: i for i, x in enumerate(keep)}
    zero = len(keep)
    size = zero + 1
    left = []
    for s in range(a.left.order):
        row = [zero] * size
        for x in keep:
            y = a.left_action[s][x]
            row[idx[x]] = idx[y] if y in idx else zero
        left.append(row)
    right = []
    for x in keep:
        row = [zero] * a.right.order
        for t in range(a.right.order):
            y = a.right_action[x][t]
            row[t] = idx[y] if y in idx else zero
        right.append(row)
    right.append([zero] * a.right.order)
    labels = tuple(a.labels[x] for x in keep) + ("0",)
    return validate_biact(a.left, a.right, left, right, labels=labels,
                          provenance={"kind": "rees-quotient",
                                      "collapsed": tuple(sorted(mem))})


def relative_rees(s: FiniteSemigroup, sub_members: Iterable[int]) -> FiniteBiact:
    """Rees quotient of the relative biact of S over T by the copy of T."""
    rel = relative_biact(s, sub_members)
    return biact_rees_quotient(rel, set(rel.provenance["sub_ids"]))


def product_biact(s: FiniteSemigroup, t: FiniteSemigroup) -> FiniteBiact:
    """Carrier S x T with s(a,b) = (sa,b) and (a,b)t = (a,bt).

    Pair (a, b) is interned as a * |T| + b.
    """
    nt = t.order
    size = s.order * nt

    def pid(a: int, b: int) -> int:
        return a * nt + b

    left = [[pid(s.table[x][a], b) for a in range(s.order) for b in range(nt)]
            for x in range(s.order)]
    right = [[pid(a, t.table[b][y]) for y in range(nt)]
             for a in range(s.order) for b in range(nt)]
    labels = tuple(f"({s.labels[a]},{t.labels[b]})"
                   for a in range(s.order) for b in range(nt))
    return validate_biact(s, t, left, right, labels=labels,
                          provenance={"kind": "product"})


def pullback_biact(a: FiniteBiact,
                   h_left: tuple[FiniteSemigroup, Sequence[int]],
                   h_right: tuple[FiniteSemigroup, Sequence[int]]) -> FiniteBiact:
    """Restrict the actions along homomorphisms into the acting semigroups.

    ``h_left = (S', f)`` with f : S' -> S; dually for the right side.  The
    carrier is unchanged and the axioms are re-validated.
    """
    s2, f = h_left
    t2, g = h_right
    bad = is_homomorphism(f, s2, a.left)
    if bad is not None:
        raise NotAHomomorphism(bad)
    bad = is_homomorphism(g, t2, a.right)
    if bad is not None:
        raise NotAHomomorphism(bad)
    left = [a.left_action[f[s]] for s in range(s2.order)]
    right = [tuple(a.right_action[x][g[t]] for t in range(t2.order))
             for x in range(a.size)]
    return validate_biact(s2, t2, left, right, labels=a.labels,
                          provenance={"kind": "pullback"})
