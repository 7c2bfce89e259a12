"""Satake diagrams of the classical symmetric pairs and their sub-diagrams.

The diagrams are the standard ones from the literature tables, with nodes
numbered in Bourbaki order.  Every encoded diagram is checked against the
closed-form symmetric rank (#white - #arrows) before it is handed out.

Sub-diagrams (all black nodes plus an arrow-closed set of white nodes) index
the standard p-Levis.  For AIII and CII there is also an explicit Cartan
subspace with rational coordinates, which lets a sub-diagram be turned into a
semisimple element of p whose p-Levi can be computed and compared.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .errors import ArgumentError, ClassificationError, InternalError, UnsupportedFamilyError
from .linalg import Matrix
from .pairs import Family, SymmetricPair

WHITE, BLACK = "white", "black"


@dataclass(frozen=True)
class SatakeDiagram:
    """Nodes ``1..r`` with colours, Dynkin edges ``(i, j, mult)`` (i < j) and arrows.

    ``short`` lists the short simple roots; it only matters next to a double edge.
    """

    family: Optional[Family]
    dynkin: str
    colors: tuple  # colors[i - 1] is the colour of node i
    edges: tuple
    arrows: tuple
    short: frozenset = frozenset()

    def __post_init__(self):
        seen = set()
        for a, b in self.arrows:
            if a >= b:
                raise ArgumentError(f"arrow {(a, b)} must be stored smaller id first")
            if self.color(a) != WHITE or self.color(b) != WHITE:
                raise ArgumentError(f"arrow {(a, b)} touches a black node")
            if a in seen or b in seen:
                raise ArgumentError(f"node in two arrows: {(a, b)}")
            seen.update((a, b))

    @property
    def nodes(self) -> tuple:
        return tuple(range(1, len(self.colors) + 1))

    def color(self, i: int) -> str:
        return self.colors[i - 1]

    @property
    def white(self) -> tuple:
        return tuple(i for i in self.nodes if self.color(i) == WHITE)

    @property
    def black(self) -> tuple:
        return tuple(i for i in self.nodes if self.color(i) == BLACK)

    def partner(self, i: int) -> Optional[int]:
        for a, b in self.arrows:
            if i == a:
                return b
            if i == b:
                return a
        return None

    def units(self) -> list[tuple]:
        """White arrow-orbits: arrowed pairs and unpaired white nodes, by smallest id."""
        out, done = [], set()
        for i in self.white:
            if i in done:
                continue
            j = self.partner(i)
            u = (i,) if j is None else tuple(sorted((i, j)))
            done.update(u)
            out.append(u)
        return out

    @property
    def rank(self) -> int:
        return len(self.white) - len(self.arrows)

    def full(self) -> "SubDiagram":
        return SubDiagram(frozenset(self.nodes))

    def minimal(self) -> "SubDiagram":
        return SubDiagram(frozenset(self.black))

    def check(self, s: "SubDiagram"):
        nodes = set(s.nodes)
        if not nodes <= set(self.nodes):
            raise ArgumentError(f"sub-diagram has unknown nodes {sorted(nodes - set(self.nodes))}")
        missing = set(self.black) - nodes
        if missing:
            raise ArgumentError(f"sub-diagram misses black nodes {sorted(missing)}")
        for a, b in self.arrows:
            if (a in nodes) != (b in nodes):
                raise ArgumentError(f"sub-diagram is not closed under the arrow {(a, b)}")

    def graph(self, nodes=None) -> nx.Graph:
        """Dynkin edges and arrows on ``nodes``; the edge attribute ``kind`` names both."""
        nodes = set(self.nodes if nodes is None else nodes)
        G = nx.Graph()
        for i in sorted(nodes):
            G.add_node(i, color=self.color(i), short=i in self.short)
        kinds: dict = {}
        for a, b, m in self.edges:
            if a in nodes and b in nodes:
                kinds.setdefault((a, b), []).append(f"dynkin{m}")
        for a, b in self.arrows:
            if a in nodes and b in nodes:
                kinds.setdefault((a, b), []).append("arrow")
        for (a, b), ks in kinds.items():
            # an arrow may sit on a Dynkin edge (adjacent middle pair in type A)
            G.add_edge(a, b, kind="+".join(sorted(ks)))
        return G

    def to_dict(self) -> dict:
        return {
            "family": self.family.label if self.family else None,
            "dynkin": self.dynkin,
            "nodes": [{"id": i, "color": self.color(i)} for i in self.nodes],
            "edges": [list(e) for e in self.edges],
            "arrows": [list(a) for a in self.arrows],
            "rank": self.rank,
        }


@dataclass(frozen=True)
class SubDiagram:
    nodes: frozenset

    @classmethod
    def of(cls, nodes) -> "SubDiagram":
        return cls(frozenset(nodes))

    def sorted(self) -> tuple:
        return tuple(sorted(self.nodes))

    def __repr__(self):
        return f"SubDiagram({list(self.sorted())})"


# --------------------------------------------------------------------------
# Dynkin skeletons


def _chain(r: int) -> list[tuple]:
    return [(i, i + 1, 1) for i in range(1, r)]


def _dynkin(kind: str, r: int) -> tuple[list, frozenset]:
    if kind == "A":
        return _chain(r), frozenset()
    if kind == "B":
        e = _chain(r - 1) + ([(r - 1, r, 2)] if r >= 2 else [])
        return e, frozenset({r})
    if kind == "C":
        e = _chain(r - 1) + ([(r - 1, r, 2)] if r >= 2 else [])
        return e, frozenset(range(1, r))
    if kind == "D":
        e = _chain(r - 1) + ([(r - 2, r, 1)] if r >= 3 else [])
        return e, frozenset()
    raise ValueError(kind)


def _make(fam, kind, r, white, arrows, edges=None, name=None) -> SatakeDiagram:
    e, sh = _dynkin(kind, r) if edges is None else (edges, frozenset())
    colors = tuple(WHITE if i in white else BLACK for i in range(1, r + 1))
    return SatakeDiagram(fam, name or f"{kind}{r}", colors, tuple(e),
                         tuple(sorted(tuple(sorted(a)) for a in arrows)), frozenset(sh))


def _encode(fam: Family) -> SatakeDiagram:
    t, ps = fam.tag, fam.params
    if t == "AI":
        (n,) = ps
        return _make(fam, "A", n - 1, set(range(1, n)), [])
    if t == "AII":
        (n,) = ps
        r = 2 * n - 1
        return _make(fam, "A", r, {i for i in range(1, r + 1) if i % 2 == 0}, [])
    if t == "AIII":
        p, q = ps
        m, r = min(p, q), p + q - 1
        white = set(range(1, m + 1)) | set(range(r - m + 1, r + 1))
        arrows = [(i, r + 1 - i) for i in range(1, m + 1) if i != r + 1 - i]
        return _make(fam, "A", r, white, arrows)
    if t == "BDI":
        p, q = ps
        m = min(p, q)
        if (p + q) % 2:
            l = (p + q - 1) // 2
            return _make(fam, "B", l, set(range(1, m + 1)), [])
        l = (p + q) // 2
        if l < 2:
            raise UnsupportedFamilyError(f"{fam.label}: so_2 has no Satake diagram")
        if m == l - 1:
            return _make(fam, "D", l, set(range(1, l + 1)), [(l - 1, l)])
        return _make(fam, "D", l, set(range(1, m + 1)), [])
    if t == "CI":
        (n,) = ps
        return _make(fam, "C", n, set(range(1, n + 1)), [])
    if t == "CII":
        p, q = ps
        m = min(p, q)
        return _make(fam, "C", p + q, set(range(2, 2 * m + 1, 2)), [])
    if t == "DIII":
        (n,) = ps
        if n % 2 == 0:
            return _make(fam, "D", n, set(range(2, n + 1, 2)), [])
        white = set(range(2, n - 2, 2)) | {n - 1, n}
        return _make(fam, "D", n, white, [(n - 1, n)])
    if t == "A0":
        (n,) = ps
        r = n - 1
        e = _chain(r) + [(a + r, b + r, m) for a, b, m in _chain(r)]
        return _make(fam, "A", 2 * r, set(range(1, 2 * r + 1)),
                     [(i, i + r) for i in range(1, r + 1)], edges=e, name=f"A{r}+A{r}")
    raise UnsupportedFamilyError(f"no Satake diagram for {fam.label}")


@lru_cache(maxsize=None)
def satake_diagram(family, *params) -> SatakeDiagram:
    fam = family if isinstance(family, Family) else Family.of(family, *params)
    d = _encode(fam)
    if d.rank != fam.closed_form_rank():
        raise InternalError(f"{fam.label}: #white - #arrows = {d.rank}, expected {fam.closed_form_rank()}")
    return d


# --------------------------------------------------------------------------
# sub-diagrams


def enumerate_subdiagrams(d: SatakeDiagram) -> list[SubDiagram]:
    """All sub-diagrams, smallest first; white nodes move in arrow-orbits."""
    units = d.units()
    out = []
    for k in range(len(units) + 1):
        for chosen in combinations(units, k):
            nodes = set(d.black)
            for u in chosen:
                nodes.update(u)
            out.append(SubDiagram(frozenset(nodes)))
    return out


def _count(d: SatakeDiagram, nodes) -> int:
    nodes = set(nodes)
    white = sum(1 for i in nodes if d.color(i) == WHITE)
    arrows = sum(1 for a, b in d.arrows if a in nodes and b in nodes)
    return white - arrows


def levi_rank(d: SatakeDiagram, s: SubDiagram) -> int:
    d.check(s)
    return _count(d, s.nodes)


def dim_c_a(d: SatakeDiagram, s: SubDiagram) -> int:
    d.check(s)
    return _count(d, set(d.nodes) - set(s.nodes))


def is_maximal_proper(d: SatakeDiagram, s: SubDiagram) -> bool:
    """Exactly one arrow-orbit of white nodes is missing."""
    d.check(s)
    missing = [u for u in d.units() if not set(u) <= s.nodes]
    return len(missing) == 1


# --------------------------------------------------------------------------
# components


@dataclass(frozen=True)
class ComponentMatch:
    nodes: tuple
    family: Optional[Family]  # None for a compact factor
    aliases: tuple = ()

    @property
    def compact(self) -> bool:
        return self.family is None

    def to_dict(self) -> dict:
        return {
            "nodes": list(self.nodes),
            "type": "compact" if self.compact else self.family.label,
            "aliases": [a.label for a in self.aliases],
        }


_CANDIDATE_ORDER = ("AI", "AII", "AIII", "A0", "BDI", "CI", "CII", "DIII")


def _candidates(size: int) -> list[Family]:
    """Families whose diagram has ``size`` nodes, in preference order."""
    out = []
    for t in _CANDIDATE_ORDER:
        if t == "AI":
            out.append(Family.of(t, size + 1))
        elif t == "AII" and size % 2 == 1 and size >= 3:
            out.append(Family.of(t, (size + 1) // 2))
        elif t == "AIII":
            out += [Family.of(t, p, size + 1 - p) for p in range(1, (size + 1) // 2 + 1)]
        elif t == "A0" and size % 2 == 0:
            out.append(Family.of(t, size // 2 + 1))
        elif t == "BDI":
            for tot in (2 * size, 2 * size + 1):
                out += [Family.of(t, p, tot - p) for p in range(1, tot // 2 + 1) if tot >= 3]
        elif t == "CI":
            out.append(Family.of(t, size))
        elif t == "CII":
            out += [Family.of(t, p, size - p) for p in range(1, size // 2 + 1)]
        elif t == "DIII" and size >= 2:
            out.append(Family.of(t, size))
    return out


def _normalized(G: nx.Graph) -> nx.Graph:
    # root lengths only mean something across a double edge
    if not any("dynkin2" in k for _, _, k in G.edges(data="kind")):
        G = G.copy()
        for v in G.nodes:
            G.nodes[v]["short"] = False
    return G


def _same(G: nx.Graph, H: nx.Graph) -> bool:
    if G.number_of_nodes() != H.number_of_nodes() or G.number_of_edges() != H.number_of_edges():
        return False
    gm = GraphMatcher(_normalized(G), _normalized(H),
                      node_match=lambda a, b: a["color"] == b["color"] and a["short"] == b["short"],
                      edge_match=lambda a, b: a["kind"] == b["kind"])
    return gm.is_isomorphic()


def classify_subdiagram(d: SatakeDiagram, s: SubDiagram) -> list[ComponentMatch]:
    """Simple factors of the sub-diagram, matched against the encoded families."""
    d.check(s)
    G = d.graph(s.nodes)
    out = []
    for comp in sorted(nx.connected_components(G), key=min):
        nodes = tuple(sorted(comp))
        if all(d.color(i) == BLACK for i in nodes):
            out.append(ComponentMatch(nodes, None))
            continue
        H = G.subgraph(nodes)
        hits = []
        for fam in _candidates(len(nodes)):
            try:
                cand = satake_diagram(fam)
            except UnsupportedFamilyError:
                continue
            if _same(H, cand.graph()):
                hits.append(fam)
        if not hits:
            shape = {
                "nodes": [(i, d.color(i)) for i in nodes],
                "edges": [(a, b, k) for a, b, k in H.edges(data="kind")],
            }
            raise ClassificationError(f"unrecognized component {shape}")
        out.append(ComponentMatch(nodes, hits[0], tuple(hits[1:])))
    return out


# --------------------------------------------------------------------------
# explicit Cartan coordinates (AIII, CII)


def _unit(N: int, i: int, j: int, v=1) -> Matrix:
    return Matrix.unit(N, i - 1, j - 1, v)


def cartan_coordinates(pair: SymmetricPair) -> list[Matrix]:
    """Commuting semisimple ``H_1..H_m`` in p with eigenvalues in {0, +-1}.

    In these coordinates the simple restricted roots are ``t_i - t_{i+1}`` and
    ``t_m`` (or ``2 t_m``), and the i-th one sits on the i-th white unit of the
    Satake diagram.
    """
    fam = pair.family
    if fam is None or fam.tag not in ("AIII", "CII"):
        raise UnsupportedFamilyError("explicit Cartan coordinates exist for AIII and CII only")
    N = pair.n
    p, q = fam.params
    m = min(p, q)
    hs = []
    if fam.tag == "AIII":
        for i in range(1, m + 1):
            hs.append(_unit(N, i, p + i) + _unit(N, p + i, i))
    else:
        from .structure import normal_sl2_triple

        for i in range(1, m + 1):
            a = _unit(N, 2 * i - 1, 2 * i)
            b = _unit(N, N - 2 * i + 1, N - 2 * i + 2)
            e = next((a + b * sgn for sgn in (1, -1) if pair.in_p(a + b * sgn)), None)
            if e is None:
                raise InternalError(f"no rank-two nilpotent at slot {i}")
            t = normal_sl2_triple(pair, e)
            hs.append(t.e + t.f)
    for i, x in enumerate(hs):
        if not pair.in_p(x):
            raise InternalError("Cartan coordinate outside p")
        for y in hs[:i]:
            if not (x @ y - y @ x).is_zero():
                raise InternalError("Cartan coordinates do not commute")
    return hs


def subdiagram_element(pair: SymmetricPair, d: SatakeDiagram, s: SubDiagram, seed: int = 0) -> Matrix:
    """Generic element of the sub-torus of a killed by the simple roots of ``s``."""
    d.check(s)
    hs = cartan_coordinates(pair)
    units = d.units()
    m = len(units)
    if m != len(hs):
        raise InternalError("diagram and Cartan coordinates disagree on the rank")
    kept = [set(u) <= s.nodes for u in units]
    rng = random.Random(seed)
    # distinct positive values per block; a killed last root forces t_m = 0
    values = rng.sample(range(1, 8 * m + 8), m)
    t = [0] * m
    for i in range(m - 1, -1, -1):
        if i == m - 1:
            t[i] = 0 if kept[i] else values[i]
        else:
            t[i] = t[i + 1] if kept[i] else values[i]
    out = pair.zero()
    for c, h in zip(t, hs):
        if c:
            out = out + h * c
    return out


__all__ = [
    "SatakeDiagram", "SubDiagram", "ComponentMatch", "satake_diagram", "enumerate_subdiagrams",
    "levi_rank", "dim_c_a", "is_maximal_proper", "classify_subdiagram", "cartan_coordinates",
    "subdiagram_element", "WHITE", "BLACK",
]
