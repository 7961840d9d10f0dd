"""Graph families for the verification harness.

Three sources: exhaustive small graphs up to isomorphism, very
well-covered graphs generated certificate-first from a fixed perfect
matching, and named families (paths, cycles, complete graphs, coronas).

Certificate-first means the perfect matching {x_i, y_i} is fixed up
front and only cross edges vary; the matching conditions

  (i)  no matching edge lies in a triangle,
  (ii) the ends of any length-3 path whose central edge is a matching
       edge are adjacent,

prune the search, and the independent recognizer re-checks every emitted
graph.  The constructor is never trusted.
"""

from __future__ import annotations

import itertools
import json
import random
import re
from dataclasses import dataclass

from .graphs import (
    Graph,
    GraphError,
    canonical_key,
    is_very_well_covered,
    matching_certificate_ok,
    odd_girth,
)


class GenerationError(RuntimeError):
    """A random generator exhausted its attempt budget."""


# ---------------------------------------------------------------------------
# Named families.
# ---------------------------------------------------------------------------


def path_graph(n):
    if n < 1:
        raise GraphError("a path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise GraphError("a cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    if n < 1:
        raise GraphError("a complete graph needs at least one vertex")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite_graph(a, b):
    if a < 1 or b < 1:
        raise GraphError("both sides of a complete bipartite graph need vertices")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def corona(G):
    """Attach one new pendant vertex to every vertex of G.

    The pendant edges form a perfect matching that always satisfies the
    very-well-covered certificate conditions; this is asserted, not
    assumed.
    """
    edges = list(G.edges) + [(v, G.n + v) for v in range(G.n)]
    H = Graph.from_edges(2 * G.n, edges)
    pendants = tuple((v, G.n + v) for v in range(G.n))
    if not matching_certificate_ok(H, pendants):
        raise AssertionError("corona pendant matching failed certification")
    return H


_NAMED_RE = re.compile(r"^(P|C|K)(\d+)(?:,(\d+))?$")


def named_graph(name):
    """Parse 'P4', 'C5', 'K6', 'K3,3', or 'corona(C7)'."""
    name = name.strip()
    m = re.match(r"^corona\((.*)\)$", name)
    if m:
        return corona(named_graph(m.group(1)))
    m = _NAMED_RE.match(name)
    if not m:
        raise GraphError(f"unknown graph name {name!r}")
    kind, a, b = m.group(1), int(m.group(2)), m.group(3)
    if b is not None:
        if kind != "K":
            raise GraphError(f"unknown graph name {name!r}")
        return complete_bipartite_graph(a, int(b))
    if kind == "P":
        return path_graph(a)
    if kind == "C":
        return cycle_graph(a)
    return complete_graph(a)


def random_graph(n, density, seed):
    """Erdos-Renyi draw, deterministic per seed."""
    rng = random.Random(seed)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < density
    ]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Exhaustive small graphs up to isomorphism.
# ---------------------------------------------------------------------------


def enumerate_all_graphs(n, allow_isolated=False):
    """One representative per isomorphism class of graphs on n vertices,
    by default without isolated vertices; built by vertex augmentation
    (every n-vertex graph minus its last vertex is an (n-1)-vertex graph).
    Deterministic order: by edge count, then edge list."""
    if not 1 <= n <= 8:
        raise GraphError(f"exhaustive enumeration supports 1 <= n <= 8, got {n}")
    reps = {canonical_key(Graph(1, frozenset())): frozenset()}
    for level in range(2, n + 1):
        new = {}
        v = level - 1
        for edges in reps.values():
            for mask in range(1 << v):
                ext = set(edges)
                rem = mask
                while rem:
                    bit = rem & -rem
                    ext.add((bit.bit_length() - 1, v))
                    rem ^= bit
                fext = frozenset(ext)
                key = canonical_key(Graph(level, fext))
                if key not in new:
                    new[key] = fext
        reps = new
    graphs = [Graph(n, e) for e in reps.values()]
    if not allow_isolated:
        covered = lambda G: all(G.adj[v] for v in range(G.n))
        graphs = [G for G in graphs if covered(G)]
    graphs.sort(key=lambda G: (len(G.edges), G.sorted_edges))
    return graphs


# ---------------------------------------------------------------------------
# Very well-covered graphs, certificate-first.
# ---------------------------------------------------------------------------

# Cross-edge slots between matched pairs (x_i, y_i) and (x_j, y_j):
# (x_i-x_j, x_i-y_j, y_i-x_j, y_i-y_j).  Condition (i) forbids any two
# slots sharing a vertex, leaving these seven patterns per pair of blocks.
_BLOCK_PATTERNS = (
    (),
    ((0, 0),),
    ((0, 1),),
    ((1, 0),),
    ((1, 1),),
    ((0, 0), (1, 1)),
    ((0, 1), (1, 0)),
)


def _certificate_ok_masks(adj, m):
    """Conditions (i) and (ii) on the matching (2i, 2i+1), via bitmasks."""
    for i in range(m):
        x, y = 2 * i, 2 * i + 1
        if adj[x] & adj[y]:
            return False
        zmask = adj[x] & ~(1 << y)
        wmask = adj[y] & ~(1 << x)
        rem = zmask
        while rem:
            bit = rem & -rem
            z = bit.bit_length() - 1
            rem ^= bit
            if wmask & ~(1 << z) & ~adj[z]:
                return False
    return True


def _vwc_search(m):
    """All cross-edge assignments whose fixed matching certifies; yields
    frozensets of edges on 2m labeled vertices."""
    base = [0] * (2 * m)
    for i in range(m):
        base[2 * i] |= 1 << (2 * i + 1)
        base[2 * i + 1] |= 1 << (2 * i)
    out = []

    def place(t, adj, edges):
        if t == m:
            out.append(frozenset(edges))
            return
        # Assign patterns for all pairs (i, t), i < t, then certify the
        # prefix on blocks 0..t: its induced subgraph is final, so a
        # violated condition there can never be repaired later.
        def assign(i, adj2, edges2):
            if i == t:
                if _certificate_ok_masks(adj2, t + 1):
                    place(t + 1, adj2, edges2)
                return
            for pattern in _BLOCK_PATTERNS:
                adj3 = adj2
                edges3 = edges2
                ok = True
                for a, b in pattern:
                    u, v = 2 * i + a, 2 * t + b
                    if adj3 is adj2:
                        adj3 = list(adj2)
                        edges3 = list(edges2)
                    adj3[u] |= 1 << v
                    adj3[v] |= 1 << u
                    edges3.append((u, v))
                if pattern:
                    # Early triangle check on the two touched blocks.
                    for blk in (i, t):
                        if adj3[2 * blk] & adj3[2 * blk + 1]:
                            ok = False
                            break
                if ok:
                    assign(i + 1, adj3, edges3)

        assign(0, adj, edges)

    place(1, base, [(2 * i, 2 * i + 1) for i in range(m)])
    return out


def enumerate_vwc_graphs(m, odd_girth_min=None):
    """Very well-covered graphs on 2m vertices, one per isomorphism
    class, optionally filtered to odd-girth >= odd_girth_min.  Every
    emitted graph is re-checked by the independent recognizer."""
    if not 1 <= m <= 5:
        raise GraphError(f"vwc enumeration supports 1 <= m <= 5, got {m}")
    seen = {}
    for edges in _vwc_search(m):
        key = canonical_key(Graph(2 * m, edges))
        if key not in seen:
            seen[key] = Graph(2 * m, edges)
    graphs = sorted(seen.values(), key=lambda G: (len(G.edges), G.sorted_edges))
    out = []
    for G in graphs:
        if not is_very_well_covered(G):
            raise AssertionError(
                f"certificate-first construction emitted a non-vwc graph: "
                f"{G.sorted_edges}"
            )
        if odd_girth_min is not None and odd_girth(G) < odd_girth_min:
            continue
        out.append(G)
    return out


def random_vwc_graph(m, density, seed):
    """A random very well-covered graph on 2m vertices: propose cross
    edges at the given density, close condition (ii) to a fixed point,
    resample whenever condition (i) breaks.  Deterministic per seed."""
    if m < 1:
        raise GraphError("need at least one matched pair")
    if not 0 <= density <= 1:
        raise GraphError("density must lie in [0, 1]")
    rng = random.Random(seed)
    slots = [
        (2 * i + a, 2 * j + b)
        for i in range(m)
        for j in range(i + 1, m)
        for a in (0, 1)
        for b in (0, 1)
    ]
    for _attempt in range(500):
        adj = [0] * (2 * m)
        for i in range(m):
            adj[2 * i] |= 1 << (2 * i + 1)
            adj[2 * i + 1] |= 1 << (2 * i)
        for u, v in slots:
            if rng.random() < density:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        # Close condition (ii): a violating length-3 path demands its end
        # edge; new edges can create new paths, so iterate to a fixed
        # point (bounded: the edge set only grows).
        changed = True
        while changed:
            changed = False
            for i in range(m):
                x, y = 2 * i, 2 * i + 1
                zmask = adj[x] & ~(1 << y)
                wmask = adj[y] & ~(1 << x)
                rem = zmask
                while rem:
                    bit = rem & -rem
                    z = bit.bit_length() - 1
                    rem ^= bit
                    need = wmask & ~(1 << z) & ~adj[z]
                    while need:
                        nb = need & -need
                        w = nb.bit_length() - 1
                        need ^= nb
                        adj[z] |= 1 << w
                        adj[w] |= 1 << z
                        changed = True
        if not _certificate_ok_masks(adj, m):
            continue  # condition (i) broke: resample
        edges = [
            (u, v)
            for u in range(2 * m)
            for v in range(u + 1, 2 * m)
            if adj[u] & (1 << v)
        ]
        G = Graph.from_edges(2 * m, edges)
        if not is_very_well_covered(G):
            raise AssertionError("repair produced a non-vwc graph")
        return G
    raise GenerationError(
        f"no very well-covered graph found for m={m}, density={density}, "
        f"seed={seed} within the attempt budget"
    )


# ---------------------------------------------------------------------------
# Family specifications (CLI / JSON plumbing).
# ---------------------------------------------------------------------------

FAMILY_KINDS = ("exhaustive-all", "exhaustive-vwc", "random-vwc", "named")


@dataclass(frozen=True)
class FamilySpec:
    """A declarative description of a graph stream."""

    kind: str
    n: int | None = None
    m: int | None = None
    density: float = 0.3
    seed: int = 0
    odd_girth_min: int | None = None
    cap: int | None = None
    names: tuple = ()

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.cap is not None and self.cap <= 0:
            raise ValueError("instance cap must be positive")
        if self.kind == "exhaustive-all" and self.n is None:
            raise ValueError("exhaustive-all needs n")
        if self.kind in ("exhaustive-vwc", "random-vwc") and self.m is None:
            raise ValueError(f"{self.kind} needs the pair count m")
        if self.kind == "named" and not self.names:
            raise ValueError("named family needs at least one name")

    @staticmethod
    def from_json_obj(obj):
        return FamilySpec(
            kind=obj["kind"],
            n=obj.get("n"),
            m=obj.get("m"),
            density=obj.get("density", 0.3),
            seed=obj.get("seed", 0),
            odd_girth_min=obj.get("odd_girth_min"),
            cap=obj.get("cap"),
            names=tuple(obj.get("names", ())),
        )

    @staticmethod
    def from_json(text):
        return FamilySpec.from_json_obj(json.loads(text))

    def to_json_obj(self):
        obj = {"kind": self.kind}
        if self.n is not None:
            obj["n"] = self.n
        if self.m is not None:
            obj["m"] = self.m
        if self.kind == "random-vwc":
            obj["density"] = self.density
            obj["seed"] = self.seed
        if self.odd_girth_min is not None:
            obj["odd_girth_min"] = self.odd_girth_min
        if self.cap is not None:
            obj["cap"] = self.cap
        if self.names:
            obj["names"] = list(self.names)
        return obj

    def instances(self):
        """The graph stream this spec describes, deterministically."""
        if self.kind == "exhaustive-all":
            stream = enumerate_all_graphs(self.n)
            if self.odd_girth_min is not None:
                stream = [G for G in stream if odd_girth(G) >= self.odd_girth_min]
        elif self.kind == "exhaustive-vwc":
            stream = enumerate_vwc_graphs(self.m, self.odd_girth_min)
        elif self.kind == "random-vwc":
            count = self.cap if self.cap is not None else 20
            stream = []
            for k in range(count * 20):
                G = random_vwc_graph(self.m, self.density, self.seed + k)
                if self.odd_girth_min is not None:
                    if odd_girth(G) < self.odd_girth_min:
                        continue
                stream.append(G)
                if len(stream) == count:
                    break
        else:
            stream = [named_graph(name) for name in self.names]
            if self.odd_girth_min is not None:
                stream = [G for G in stream if odd_girth(G) >= self.odd_girth_min]
        if self.cap is not None:
            stream = stream[: self.cap]
        return stream
