"""Finite semigroups: validated tables, transformation closures, quotients.

Conventions, fixed once for the whole toolkit:

- Elements are dense integer ids ``0..order-1``; labels are display-only.
- ``table[a][b]`` is the product ``a * b``.
- The product of two transformations ``f * g`` means "apply f, then g"
  (maps act on the right).  This choice is visible in every relative
  Green computation downstream, so it is part of the file-format contract.
- Adjoining an identity or a zero always adds a fresh element, even when
  the semigroup already has one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    BadEntry,
    DegreeMismatch,
    EmptyGeneratorSet,
    IncompatiblePartition,
    NonAssociative,
    NotAnIdeal,
    NotASubsemigroup,
    RoleViolation,
    SearchCapExceeded,
    SizeLimitExceeded,
)

DEFAULT_CLOSURE_CAP = 100_000

# Above this order the constructor switches from the full triple scan to
# the generator-based test; both remain callable for cross-checks.
TRIPLE_SCAN_LIMIT = 64


@dataclass(frozen=True)
class FiniteSemigroup:
    order: int
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    provenance: Mapping = field(default_factory=dict, compare=False, repr=False)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def elements(self) -> range:
        return range(self.order)

    def idempotents(self) -> list[int]:
        return [e for e in range(self.order) if self.table[e][e] == e]

    def identity(self) -> Optional[int]:
        for e in range(self.order):
            if all(self.table[e][x] == x == self.table[x][e] for x in range(self.order)):
                return e
        return None

    def has_identity(self) -> bool:
        return self.identity() is not None

    def generator_ids(self) -> Optional[tuple[int, ...]]:
        gens = self.provenance.get("generator_ids")
        return tuple(gens) if gens is not None else None

    def label(self, a: int) -> str:
        return self.labels[a]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        kind = self.provenance.get("kind", "table")
        return f"FiniteSemigroup(order={self.order}, kind={kind!r})"


def _default_labels(order: int, prefix: str = "e") -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(order))


def scan_triples(order: int, table: Sequence[Sequence[int]]) -> Optional[tuple[int, int, int]]:
    """Full O(n^3) associativity scan; returns a violating triple or None."""
    for a in range(order):
        row_a = table[a]
        for b in range(order):
            ab = row_a[b]
            row_ab = table[ab]
            row_b = table[b]
            for c in range(order):
                if row_ab[c] != row_a[row_b[c]]:
                    return (a, b, c)
    return None


def light_test(order: int, table: Sequence[Sequence[int]],
               generators: Sequence[int]) -> Optional[tuple[int, int, int]]:
    """Light's associativity test over a generating set.

    If ``(a*g)*b == a*(g*b)`` for all a, b and every generator g, the
    operation is associative (induction on the length of the middle
    element as a word in the generators).
    """
    for g in generators:
        col_g = [table[a][g] for a in range(order)]
        row_g = table[g]
        for a in range(order):
            ag = col_g[a]
            row_ag = table[ag]
            row_a = table[a]
            for b in range(order):
                if row_ag[b] != row_a[row_g[b]]:
                    return (a, g, b)
    return None


def subset_closure(table: Sequence[Sequence[int]], seed: Iterable[int]) -> frozenset[int]:
    """Smallest subsemigroup of the table containing ``seed``."""
    members = set(seed)
    frontier = list(members)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(members):
                for p in (table[a][b], table[b][a]):
                    if p not in members:
                        members.add(p)
                        nxt.append(p)
        frontier = nxt
    return frozenset(members)


def greedy_generators(order: int, table: Sequence[Sequence[int]]) -> list[int]:
    """A small (not necessarily minimal) generating set, found greedily."""
    gens: list[int] = []
    generated: frozenset[int] = frozenset()
    for x in range(order):
        if x not in generated:
            gens.append(x)
            generated = subset_closure(table, gens)
    return gens


def validate_table(order: int, table: Sequence[Sequence[int]],
                   labels: Optional[Sequence[str]] = None,
                   provenance: Optional[Mapping] = None,
                   method: str = "auto") -> FiniteSemigroup:
    """Build a semigroup from a multiplication table, or refuse.

    ``method`` is one of ``auto`` (triple scan up to order 64, Light's
    test above), ``triples`` or ``light``.
    """
    if order <= 0:
        raise BadEntry(f"order must be positive, got {order}")
    if len(table) != order or any(len(row) != order for row in table):
        raise BadEntry(f"table must be {order}x{order}")
    rows = []
    for row in table:
        for x in row:
            if not isinstance(x, int) or not (0 <= x < order):
                raise BadEntry(f"table entry {x!r} outside [0, {order})")
        rows.append(tuple(row))
    tbl = tuple(rows)

    if method == "auto":
        method = "triples" if order <= TRIPLE_SCAN_LIMIT else "light"
    if method == "triples":
        bad = scan_triples(order, tbl)
    elif method == "light":
        bad = light_test(order, tbl, greedy_generators(order, tbl))
    else:
        raise ValueError(f"unknown associativity method {method!r}")
    if bad is not None:
        raise NonAssociative(*bad)

    if labels is None:
        labels = _default_labels(order)
    elif len(labels) != order:
        raise BadEntry("labels must match the order")
    return FiniteSemigroup(order=order, table=tbl, labels=tuple(labels),
                           provenance=dict(provenance or {"kind": "table"}))


def compose(f: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    """Apply f, then g."""
    return tuple(g[x] for x in f)


def generate_from_transformations(degree: int, generators: Sequence[Sequence[int]],
                                  cap: int = DEFAULT_CLOSURE_CAP,
                                  labels: Optional[Sequence[str]] = None) -> FiniteSemigroup:
    """Close a set of total maps on {0..degree-1} under composition.

    Elements are interned in BFS discovery order (generators first), which
    makes the resulting table reproducible.  Exceeding ``cap`` is an error,
    never a truncation.
    """
    if not generators:
        raise EmptyGeneratorSet()
    gens: list[tuple[int, ...]] = []
    for g in generators:
        t = tuple(g)
        if len(t) != degree:
            raise DegreeMismatch(f"generator {t} does not have degree {degree}")
        if any(not (0 <= x < degree) for x in t):
            raise DegreeMismatch(f"generator {t} has images outside range")
        gens.append(t)

    index: dict[tuple[int, ...], int] = {}
    maps: list[tuple[int, ...]] = []
    for t in gens:
        if t not in index:
            index[t] = len(maps)
            maps.append(t)
    frontier = list(range(len(maps)))
    gen_maps = [maps[i] for i in sorted({index[t] for t in gens})]
    while frontier:
        fresh = []
        for i in frontier:
            for g in gen_maps:
                prod = compose(maps[i], g)
                if prod not in index:
                    if len(maps) >= cap:
                        raise SizeLimitExceeded(cap)
                    index[prod] = len(maps)
                    maps.append(prod)
                    fresh.append(index[prod])
        frontier = fresh

    order = len(maps)
    table = tuple(tuple(index[compose(maps[a], maps[b])] for b in range(order))
                  for a in range(order))
    if labels is None:
        labels = tuple("t" + "".join(map(str, m)) if degree <= 10 else f"t{i}"
                       for i, m in enumerate(maps))
    provenance = {
        "kind": "transformations",
        "degree": degree,
        "generators": [list(g) for g in gens],
        "generator_ids": sorted({index[t] for t in gens}),
        "maps": tuple(maps),
    }
    return validate_table(order, table, labels=labels, provenance=provenance)


@dataclass(frozen=True)
class Monoidization:
    """Record of a fresh identity/zero adjunction."""
    adjoined: str          # "identity" | "zero"
    special_id: int
    base_order: int


def adjoin(s: FiniteSemigroup, kind: str) -> FiniteSemigroup:
    """Adjoin a fresh identity or zero as a new last element."""
    if kind not in ("identity", "zero"):
        raise ValueError("kind must be 'identity' or 'zero'")
    n = s.order
    new = n
    table = [list(row) + [0] for row in s.table] + [[0] * (n + 1)]
    for x in range(n + 1):
        if kind == "identity":
            table[x][new] = x
            table[new][x] = x
        else:
            table[x][new] = new
            table[new][x] = new
    labels = s.labels + (("1" if kind == "identity" else "0"),)
    prov = {"kind": "adjoined",
            "monoidization": Monoidization(kind, new, n),
            "base": s.provenance.get("kind", "table")}
    return validate_table(n + 1, table, labels=labels, provenance=prov)


@dataclass(frozen=True)
class SubsetRole:
    host: FiniteSemigroup
    members: frozenset[int]
    role: str


_ROLES = ("subsemigroup", "left-ideal", "right-ideal", "ideal", "bi-ideal")


def classify_subset(s: FiniteSemigroup, members: Iterable[int], role: str) -> SubsetRole:
    """Check the closure condition of ``role`` and return the record.

    Raises RoleViolation with the offending product as witness.
    """
    if role not in _ROLES:
        raise ValueError(f"unknown role {role!r}; expected one of {_ROLES}")
    mem = frozenset(members)
    for a in mem:
        if not (0 <= a < s.order):
            raise BadEntry(f"member {a} outside the semigroup")
    t = s.table
    if role == "subsemigroup":
        for a in mem:
            for b in mem:
                if t[a][b] not in mem:
                    raise RoleViolation(role, (a, b, t[a][b]))
    if role in ("left-ideal", "ideal"):
        for x in range(s.order):
            for a in mem:
                if t[x][a] not in mem:
                    raise RoleViolation(role, (x, a, t[x][a]))
    if role in ("right-ideal", "ideal"):
        for a in mem:
            for x in range(s.order):
                if t[a][x] not in mem:
                    raise RoleViolation(role, (a, x, t[a][x]))
    if role == "bi-ideal":
        # B S^1 B subset of B; the u = 1 case is plain closure under products.
        for a in mem:
            for b in mem:
                if t[a][b] not in mem:
                    raise RoleViolation(role, (a, b, t[a][b]))
                for u in range(s.order):
                    p = t[t[a][u]][b]
                    if p not in mem:
                        raise RoleViolation(role, (a, u, b, p))
    return SubsetRole(host=s, members=mem, role=role)


def is_role(s: FiniteSemigroup, members: Iterable[int], role: str) -> bool:
    try:
        classify_subset(s, members, role)
        return True
    except RoleViolation:
        return False


@dataclass(frozen=True)
class Congruence:
    """Equivalence compatible with all translations, as block ids per element.

    Block ids are dense and numbered by least member, so the partition
    representation is canonical.  ``over`` keeps a reference to the host
    structure the congruence was built on.
    """
    blocks: tuple[int, ...]
    size: int
    over: object = field(default=None, compare=False, repr=False)

    @property
    def num_blocks(self) -> int:
        return max(self.blocks) + 1 if self.blocks else 0

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for x, b in enumerate(self.blocks):
            out[b].append(x)
        return out


def _normalize_blocks(block_of: Sequence[int]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    out = []
    for b in block_of:
        if b not in seen:
            seen[b] = len(seen)
        out.append(seen[b])
    return tuple(out)


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True

    def blocks(self) -> tuple[int, ...]:
        return _normalize_blocks([self.find(x) for x in range(len(self.parent))])


def _translations(x) -> list:
    """One-sided translation maps of a semigroup or biact."""
    from .biact import FiniteBiact  # local import to avoid a cycle
    if isinstance(x, FiniteSemigroup):
        t = x.table
        fns = []
        for s in range(x.order):
            fns.append(lambda a, s=s: t[s][a])
            fns.append(lambda a, s=s: t[a][s])
        return fns
    if isinstance(x, FiniteBiact):
        fns = []
        for s in range(x.left.order):
            fns.append(lambda a, s=s: x.left_action[s][a])
        for t_ in range(x.right.order):
            fns.append(lambda a, t_=t_: x.right_action[a][t_])
        return fns
    raise TypeError(f"expected a semigroup or biact, got {type(x).__name__}")


def _carrier_size(x) -> int:
    from .biact import FiniteBiact
    if isinstance(x, FiniteSemigroup):
        return x.order
    if isinstance(x, FiniteBiact):
        return x.size
    raise TypeError(f"expected a semigroup or biact, got {type(x).__name__}")


def congruence_closure(x, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Smallest congruence containing ``pairs``: union-find saturation
    under all one-sided translations until fixpoint."""
    n = _carrier_size(x)
    fns = _translations(x)
    dsu = _DSU(n)
    work: list[tuple[int, int]] = []
    for a, b in pairs:
        if dsu.union(a, b):
            work.append((a, b))
    while work:
        a, b = work.pop()
        for f in fns:
            fa, fb = f(a), f(b)
            if dsu.union(fa, fb):
                work.append((fa, fb))
    return Congruence(blocks=dsu.blocks(), size=n, over=x)


def congruence_from_blocks(x, block_of: Sequence[int]) -> Congruence:
    """Wrap an explicit partition, verifying compatibility."""
    n = _carrier_size(x)
    if len(block_of) != n:
        raise IncompatiblePartition(("size", len(block_of), n))
    blocks = _normalize_blocks(block_of)
    witness = congruence_violation(x, blocks)
    if witness is not None:
        raise IncompatiblePartition(witness)
    return Congruence(blocks=blocks, size=n, over=x)


def congruence_violation(x, blocks: Sequence[int]) -> Optional[tuple]:
    """A witness that ``blocks`` is not compatible with translations, or None."""
    n = _carrier_size(x)
    classes: dict[int, list[int]] = {}
    for e, b in enumerate(blocks):
        classes.setdefault(b, []).append(e)
    fns = _translations(x)
    for members in classes.values():
        rep = members[0]
        for other in members[1:]:
            for f in fns:
                if blocks[f(rep)] != blocks[f(other)]:
                    return (rep, other, f(rep), f(other))
    return None


def quotient(x, rho: Congruence):
    """Quotient by a congruence; returns (structure, projection).

    For semigroups the result is a FiniteSemigroup; for biacts a
    FiniteBiact over the same acting semigroups.  The projection maps
    element ids to block ids and is a homomorphism.
    """
    from .biact import FiniteBiact, validate_biact
    n = _carrier_size(x)
    if rho.size != n:
        raise IncompatiblePartition(("size", rho.size, n))
    witness = congruence_violation(x, rho.blocks)
    if witness is not None:
        raise IncompatiblePartition(witness)
    blocks = rho.blocks
    k = rho.num_blocks
    reps = [0] * k
    for e in range(n - 1, -1, -1):
        reps[blocks[e]] = e
    if isinstance(x, FiniteSemigroup):
        table = [[blocks[x.table[reps[a]][reps[b]]] for b in range(k)] for a in range(k)]
        labels = tuple("{" + x.labels[reps[i]] + "}" for i in range(k))
        prov = {"kind": "quotient", "base": x.provenance.get("kind", "table")}
        return validate_table(k, table, labels=labels, provenance=prov), blocks
    if isinstance(x, FiniteBiact):
        left = [[blocks[x.left_action[s][reps[a]]] for a in range(k)]
                for s in range(x.left.order)]
        right = [[blocks[x.right_action[reps[a]][t]] for t in range(x.right.order)]
                 for a in range(k)]
        labels = tuple("{" + x.labels[reps[i]] + "}" for i in range(k))
        b = validate_biact(x.left, x.right, left, right, labels=labels,
                           provenance={"kind": "quotient"})
        return b, blocks
    raise TypeError(f"expected a semigroup or biact, got {type(x).__name__}")


def rees_quotient(s: FiniteSemigroup, ideal: Iterable[int]) -> FiniteSemigroup:
    """Collapse an ideal to a single absorbing zero (the new last element).

    An empty ideal is permitted and yields the semigroup with a fresh
    zero adjoined; claim suites quarantine that edge case.
    """
    mem = frozenset(ideal)
    if mem:
        try:
            classify_subset(s, mem, "ideal")
        except RoleViolation as exc:
            raise NotAnIdeal(f"not an ideal: witness {exc.witness}") from exc
    keep = [a for a in range(s.order) if a not in mem]
    idx = {a: i for i, a in enumerate(keep)}
    zero = len(keep)
    n = zero + 1
    table = [[zero] * n for _ in range(n)]
    for a in keep:
        for b in keep:
            p = s.table[a][b]
            table[idx[a]][idx[b]] = idx[p] if p in idx else zero
    labels = tuple(s.labels[a] for a in keep) + ("0",)
    prov = {"kind": "rees-quotient", "collapsed": sorted(mem)}
    return validate_table(n, table, labels=labels, provenance=prov)


def zero_direct_union(s: FiniteSemigroup, t: FiniteSemigroup) -> FiniteSemigroup:
    """Disjoint union of two semigroups with all cross products equal to a
    fresh zero (the new last element)."""
    ns, nt = s.order, t.order
    zero = ns + nt
    n = zero + 1
    table = [[zero] * n for _ in range(n)]
    for a in range(ns):
        for b in range(ns):
            table[a][b] = s.table[a][b]
    for a in range(nt):
        for b in range(nt):
            table[ns + a][ns + b] = ns + t.table[a][b]
    labels = tuple(f"s:{x}" for x in s.labels) + tuple(f"t:{x}" for x in t.labels) + ("0",)
    return validate_table(n, table, labels=labels,
                          provenance={"kind": "zero-direct-union"})


def subsemigroup(s: FiniteSemigroup, members: Iterable[int]) -> tuple[FiniteSemigroup, tuple[int, ...]]:
    """Reindex a closed subset as its own semigroup.

    Returns (semigroup, carrier) where carrier[i] is the parent id of the
    i-th element.
    """
    mem = sorted(set(members))
    if not mem:
        raise NotASubsemigroup("a subsemigroup must be nonempty")
    try:
        classify_subset(s, mem, "subsemigroup")
    except RoleViolation as exc:
        raise NotASubsemigroup(f"not closed under products: witness {exc.witness}") from exc
    idx = {a: i for i, a in enumerate(mem)}
    k = len(mem)
    table = [[idx[s.table[a][b]] for b in mem] for a in mem]
    labels = tuple(s.labels[a] for a in mem)
    prov = {"kind": "subsemigroup", "parent_ids": tuple(mem)}
    return validate_table(k, table, labels=labels, provenance=prov), tuple(mem)


def opposite(s: FiniteSemigroup) -> FiniteSemigroup:
    table = [[s.table[b][a] for b in range(s.order)] for a in range(s.order)]
    return validate_table(s.order, table, labels=s.labels,
                          provenance={"kind": "opposite"})


def is_homomorphism(f: Sequence[int], src: FiniteSemigroup, dst: FiniteSemigroup) -> Optional[tuple[int, int]]:
    """Return a violating pair, or None when f is a homomorphism."""
    if len(f) != src.order:
        raise BadEntry("map length must equal the source order")
    for x in f:
        if not (0 <= x < dst.order):
            raise BadEntry(f"image {x} outside the target semigroup")
    for a in range(src.order):
        for b in range(src.order):
            if f[src.table[a][b]] != dst.table[f[a]][f[b]]:
                return (a, b)
    return None


def find_isomorphism(s: FiniteSemigroup, t: FiniteSemigroup,
                     max_order: int = 8) -> Optional[tuple[int, ...]]:
    """Search for an isomorphism s -> t by permutation backtracking.

    Intended for small cross-checks only (order <= max_order).
    """
    if s.order != t.order:
        return None
    n = s.order
    if n > max_order:
        raise SearchCapExceeded(f"isomorphism search limited to order {max_order}, got {n}")

    def profile(sem: FiniteSemigroup, a: int) -> tuple:
        row = sem.table[a]
        col = tuple(sem.table[x][a] for x in range(n))
        return (row[a] == a, len(set(row)), len(set(col)))

    sp = [profile(s, a) for a in range(n)]
    tp = [profile(t, a) for a in range(n)]
    candidates = [[b for b in range(n) if tp[b] == sp[a]] for a in range(n)]

    img: list[int] = [-1] * n
    used = [False] * n

    def extend(a: int) -> bool:
        if a == n:
            # partial checks skip pairs whose product had no image yet
            return all(t.table[img[x]][img[y]] == img[s.table[x][y]]
                       for x in range(n) for y in range(n))
        for b in candidates[a]:
            if used[b]:
                continue
            img[a] = b
            used[b] = True
            ok = True
            for x in range(a + 1):
                p = s.table[x][a]
                q = s.table[a][x]
                if p <= a and t.table[img[x]][b] != img[p]:
                    ok = False
                if ok and q <= a and t.table[b][img[x]] != img[q]:
                    ok = False
                if not ok:
                    break
            if ok and extend(a + 1):
                return True
            used[b] = False
            img[a] = -1
        return False

    return tuple(img) if extend(0) else None
