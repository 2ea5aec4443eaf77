"""Green's preorders, equivalences and egg-box structure.

For a biact A over (S, T):

    a <=_L b  iff  a in S^1 b      (reachability in the left step digraph)
    a <=_R b  iff  a in b T^1
    a <=_J b  iff  a in S^1 b T^1  (reachability over both step kinds)

The one-step digraph suffices because actions compose: any chain of left
steps collapses to a single left multiplication.  Classes are the strongly
connected components, class posets are the condensations, H = L meet R,
and D is the join of L and R, verified to equal both compositions L o R
and R o L via the egg-box property (every (R, L) cell inside a D-class is
nonempty; an empty cell is a hard engine error).

Class ids are dense and numbered by least member, so all outputs are
reproducible bit-exactly.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .biact import FiniteBiact, relative_biact, relative_rees
from .core import FiniteSemigroup, _DSU
from .errors import InvariantViolation, UnknownClass

PREORDERS = ("L", "R", "J")
RELATIONS = ("L", "R", "J", "H", "D")


def _sccs(n: int, succ: Sequence[Sequence[int]]) -> list[list[int]]:
    """Iterative Tarjan; components are emitted successors-first."""
    index: list[Optional[int]] = [None] * n
    low = [0] * n
    onstack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] is not None:
            continue
        work: list[list[int]] = [[root, 0]]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                onstack[v] = True
            descended = False
            sv = succ[v]
            for i in range(pi, len(sv)):
                w = sv[i]
                if index[w] is None:
                    work[-1][1] = i + 1
                    work.append([w, 0])
                    descended = True
                    break
                if onstack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    onstack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
    return comps


@dataclass(frozen=True)
class _PreorderData:
    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    reach: tuple[int, ...]                    # class -> bitmask of classes <= it
    covers: tuple[tuple[int, int], ...]       # (upper, lower) covering pairs


def _preorder_data(n: int, succ: Sequence[Sequence[int]]) -> _PreorderData:
    comps = _sccs(n, succ)
    # renumber components by least member for reproducible output
    order = sorted(range(len(comps)), key=lambda i: min(comps[i]))
    rank_of_comp = {old: new for new, old in enumerate(order)}
    class_of = [0] * n
    for old, comp in enumerate(comps):
        for x in comp:
            class_of[x] = rank_of_comp[old]
    classes = tuple(tuple(sorted(comps[old])) for old in order)

    k = len(comps)
    succ_cls: list[set[int]] = [set() for _ in range(k)]
    for a in range(n):
        ca = class_of[a]
        for b in succ[a]:
            cb = class_of[b]
            if cb != ca:
                succ_cls[ca].add(cb)

    # Tarjan emits successors before predecessors; replay that order on the
    # renumbered ids to accumulate reachability masks.
    reach = [0] * k
    emit_order = [rank_of_comp[i] for i in range(len(comps))]
    for c in emit_order:
        mask = 1 << c
        for d in succ_cls[c]:
            mask |= reach[d]
        reach[c] = mask

    covers: list[tuple[int, int]] = []
    for c in range(k):
        strict = reach[c] & ~(1 << c)
        rest = strict
        while rest:
            dbit = rest & -rest
            rest ^= dbit
            d = dbit.bit_length() - 1
            others = strict & ~dbit
            is_cover = True
            probe = others
            while probe:
                ebit = probe & -probe
                probe ^= ebit
                e = ebit.bit_length() - 1
                if reach[e] & dbit and e != d:
                    is_cover = False
                    break
            if is_cover:
                covers.append((c, d))
    covers.sort()
    return _PreorderData(tuple(class_of), classes, tuple(reach), tuple(covers))


@dataclass(frozen=True)
class GreenStructure:
    size: int
    data: dict            # K in {L,R,J} -> _PreorderData
    class_of: dict        # K in {L,R,J,H,D} -> tuple elem -> class id
    classes: dict         # K in {L,R,J,H,D} -> tuple of sorted member tuples

    def le(self, a: int, b: int, k: str) -> bool:
        """Decide a <=_K b for K in {L, R, J}."""
        d = self.data[k]
        return bool(d.reach[d.class_of[b]] >> d.class_of[a] & 1)

    def same(self, a: int, b: int, k: str) -> bool:
        return self.class_of[k][a] == self.class_of[k][b]

    def num_classes(self, k: str) -> int:
        return len(self.classes[k])

    def class_members(self, k: str, cls: int) -> tuple[int, ...]:
        try:
            return self.classes[k][cls]
        except IndexError:
            raise UnknownClass(f"{k}-class {cls} does not exist") from None

    def covers(self, k: str) -> tuple[tuple[int, int], ...]:
        return self.data[k].covers

    def class_le(self, c: int, d: int, k: str) -> bool:
        """Decide C <= D in the K-class poset."""
        return bool(self.data[k].reach[d] >> c & 1)

    def eggbox(self, d_class: int) -> list[list[tuple[int, ...]]]:
        """The D-class as a grid of H-classes: rows are R-classes, columns
        are L-classes (each sorted by class id)."""
        if not (0 <= d_class < self.num_classes("D")):
            raise UnknownClass(f"D-class {d_class} does not exist")
        members = self.classes["D"][d_class]
        rows = sorted({self.class_of["R"][x] for x in members})
        cols = sorted({self.class_of["L"][x] for x in members})
        cell: dict[tuple[int, int], list[int]] = {}
        for x in members:
            cell.setdefault((self.class_of["R"][x], self.class_of["L"][x]), []).append(x)
        grid = []
        for r in rows:
            line = []
            for c in cols:
                xs = tuple(sorted(cell.get((r, c), ())))
                if not xs:
                    raise InvariantViolation(
                        f"empty egg-box cell (R{r}, L{c}) inside D-class {d_class}")
                line.append(xs)
            grid.append(line)
        return grid

    def to_json(self) -> dict:
        out: dict = {"size": self.size}
        for k in RELATIONS:
            entry: dict = {
                "class_of": list(self.class_of[k]),
                "classes": [list(c) for c in self.classes[k]],
            }
            if k in PREORDERS:
                entry["covers"] = [list(e) for e in self.data[k].covers]
            out[k] = entry
        return out


def _build(size: int, left_succ: list[list[int]], right_succ: list[list[int]]) -> GreenStructure:
    both = [sorted(set(left_succ[a]) | set(right_succ[a])) for a in range(size)]
    ldat = _preorder_data(size, left_succ)
    rdat = _preorder_data(size, right_succ)
    jdat = _preorder_data(size, both)

    # H = L meet R
    pair_ids: dict[tuple[int, int], int] = {}
    h_raw = []
    for a in range(size):
        key = (ldat.class_of[a], rdat.class_of[a])
        pair_ids.setdefault(key, len(pair_ids))
        h_raw.append(pair_ids[key])
    h_class_of = _renumber_by_min(size, h_raw)

    # D = join of L and R; the egg-box check below certifies that the join
    # coincides with both compositions L o R and R o L.
    dsu = _DSU(size)
    for cls in ldat.classes:
        for x in cls[1:]:
            dsu.union(cls[0], x)
    for cls in rdat.classes:
        for x in cls[1:]:
            dsu.union(cls[0], x)
    d_class_of = _renumber_by_min(size, [dsu.find(x) for x in range(size)])

    class_of = {
        "L": ldat.class_of, "R": rdat.class_of, "J": jdat.class_of,
        "H": h_class_of, "D": d_class_of,
    }
    classes = {k: _members(size, class_of[k]) for k in RELATIONS}
    gs = GreenStructure(size=size,
                        data={"L": ldat, "R": rdat, "J": jdat},
                        class_of=class_of, classes=classes)
    for dcls in range(gs.num_classes("D")):
        gs.eggbox(dcls)  # raises InvariantViolation on an empty cell
    return gs


def _renumber_by_min(size: int, raw: Sequence[int]) -> tuple[int, ...]:
    first: dict[int, int] = {}
    for x in range(size):
        first.setdefault(raw[x], x)
    order = sorted(first, key=lambda c: first[c])
    rank = {c: i for i, c in enumerate(order)}
    return tuple(rank[raw[x]] for x in range(size))


def _members(size: int, class_of: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    k = max(class_of) + 1 if size else 0
    out: list[list[int]] = [[] for _ in range(k)]
    for x in range(size):
        out[class_of[x]].append(x)
    return tuple(tuple(c) for c in out)


def _biact_edges(a: FiniteBiact) -> tuple[list[list[int]], list[list[int]]]:
    left = [sorted({a.left_action[s][x] for s in range(a.left.order)})
            for x in range(a.size)]
    right = [sorted({a.right_action[x][t] for t in range(a.right.order)})
             for x in range(a.size)]
    return left, right


def _semigroup_edges(s: FiniteSemigroup,
                     generators: Optional[Sequence[int]] = None) -> tuple[list[list[int]], list[list[int]]]:
    gens = range(s.order) if generators is None else generators
    left = [sorted({s.table[g][x] for g in gens}) for x in range(s.order)]
    right = [sorted({s.table[x][g] for g in gens}) for x in range(s.order)]
    return left, right


@functools.lru_cache(maxsize=4096)
def _green_structure_cached(x: Union[FiniteSemigroup, FiniteBiact]) -> GreenStructure:
    if isinstance(x, FiniteSemigroup):
        left, right = _semigroup_edges(x)
        return _build(x.order, left, right)
    left, right = _biact_edges(x)
    return _build(x.size, left, right)


def green_structure(x: Union[FiniteSemigroup, FiniteBiact],
                    use_generators: bool = False) -> GreenStructure:
    """Green data of a finite semigroup or biact.

    With ``use_generators=True`` a generated semigroup is analysed over its
    Cayley graph on generators instead of all-element edges; the results
    must coincide and the cheaper mode is never picked silently.
    """
    if use_generators:
        if not isinstance(x, FiniteSemigroup):
            raise TypeError("generator mode applies to semigroups")
        gens = x.generator_ids()
        if gens is None:
            raise ValueError("semigroup carries no generator record")
        left, right = _semigroup_edges(x, gens)
        return _build(x.order, left, right)
    return _green_structure_cached(x)


def le(x, a: int, b: int, k: str) -> bool:
    """Decide the K-preorder between two elements, K in {L, R, J}."""
    return green_structure(x).le(a, b, k)


def eggbox(x, d_class: int) -> list[list[tuple[int, ...]]]:
    return green_structure(x).eggbox(d_class)


def class_counts(x) -> dict[str, int]:
    gs = green_structure(x)
    return {k: gs.num_classes(k) for k in RELATIONS}


def soundness_violations(x) -> list[str]:
    """Structural sanity of the computed Green data; empty when sound.

    Checks H = L meet R, the containments L, R, D inside J, antisymmetry
    of the class posets, and that reflexivity/transitivity of the le
    oracle agree with the class data.
    """
    gs = green_structure(x)
    n = gs.size
    issues = []
    for a in range(n):
        for b in range(n):
            if (gs.same(a, b, "H")
                    != (gs.same(a, b, "L") and gs.same(a, b, "R"))):
                issues.append(f"H != L meet R at ({a},{b})")
            for k in ("L", "R", "D"):
                if gs.same(a, b, k) and not gs.same(a, b, "J"):
                    issues.append(f"{k} not inside J at ({a},{b})")
            for k in PREORDERS:
                if gs.same(a, b, k) != (gs.le(a, b, k) and gs.le(b, a, k)):
                    issues.append(f"{k}-class disagrees with mutual le at ({a},{b})")
    # D = L o R = R o L, elementwise
    for a in range(n):
        for b in range(n):
            lr = any(gs.same(a, c, "L") and gs.same(c, b, "R") for c in range(n))
            rl = any(gs.same(a, c, "R") and gs.same(c, b, "L") for c in range(n))
            if lr != rl:
                issues.append(f"L o R != R o L at ({a},{b})")
            if lr != gs.same(a, b, "D"):
                issues.append(f"D != L o R at ({a},{b})")
    for k in PREORDERS:
        d = gs.data[k]
        for c in range(gs.num_classes(k)):
            for e in range(gs.num_classes(k)):
                if c != e and d.reach[c] >> e & 1 and d.reach[e] >> c & 1:
                    issues.append(f"{k}-class poset has a 2-cycle ({c},{e})")
    return issues


@dataclass(frozen=True)
class GreenIndexResult:
    """Relative H-class census for a subsemigroup T of S."""
    index: int                       # classes outside T, plus one
    outside_h_classes: int
    inside_h_classes: int
    classes_in_sub: tuple[tuple[int, ...], ...]
    classes_outside: tuple[tuple[int, ...], ...]
    quotient_l_classes: int
    quotient_r_classes: int

    @property
    def finite(self) -> bool:
        return True


def green_index(s: FiniteSemigroup, sub_members: Iterable[int]) -> GreenIndexResult:
    """One more than the number of relative H-classes lying outside T.

    Every relative class lies wholly inside or wholly outside T; a
    violation would be an engine bug and raises.
    """
    members = frozenset(sub_members)
    rel = relative_biact(s, members)
    gs = green_structure(rel)
    inside, outside = [], []
    for cls in gs.classes["H"]:
        flags = {x in members for x in cls}
        if len(flags) != 1:
            raise InvariantViolation(f"relative H-class {cls} straddles the subsemigroup")
        (inside if flags.pop() else outside).append(cls)
    quot = relative_rees(s, members)
    qs = green_structure(quot)
    return GreenIndexResult(
        index=len(outside) + 1,
        outside_h_classes=len(outside),
        inside_h_classes=len(inside),
        classes_in_sub=tuple(inside),
        classes_outside=tuple(outside),
        quotient_l_classes=qs.num_classes("L"),
        quotient_r_classes=qs.num_classes("R"),
    )


def poset_dot(x, k: str) -> str:
    """Deterministic DOT rendering of a class poset (covers only)."""
    gs = green_structure(x)
    lines = [f"digraph {k}_classes {{", "  rankdir=BT;"]
    for c in range(gs.num_classes(k)):
        members = ",".join(str(m) for m in gs.classes[k][c])
        lines.append(f'  {k}{c} [label="{k}{c} {{{members}}}"];')
    for upper, lower in gs.covers(k):
        lines.append(f"  {k}{lower} -> {k}{upper};")
    lines.append("}")
    return "\n".join(lines)


def eggbox_dot(x, d_class: int) -> str:
    """Deterministic DOT rendering of one D-class as an egg-box grid."""
    gs = green_structure(x)
    grid = gs.eggbox(d_class)
    lines = [f"digraph D{d_class}_eggbox {{", "  node [shape=plaintext];",
             f'  box [label=<<TABLE BORDER="1" CELLBORDER="1" CELLSPACING="0">']
    for row in grid:
        cells = "".join("<TD>" + " ".join(str(m) for m in cell) + "</TD>" for cell in row)
        lines.append(f"    <TR>{cells}</TR>")
    lines.append("  </TABLE>>];")
    lines.append("}")
    return "\n".join(lines)
