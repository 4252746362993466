"""Prime graph of a group spectrum, its components, and order components.

Vertices are the primes dividing the group order; two primes are adjacent
exactly when their product divides some element order.  Each connected
component picks up the full prime-power part of the order for its primes,
giving the order components whose product is the group order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import factorize, prime_divisors
from .sympl import group_order, spectrum

__all__ = ["PrimeGraph", "build_graph", "component_count", "separation_check", "graph_json"]


@dataclass(frozen=True)
class PrimeGraph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]
    order_components: tuple[int, ...]

    def component_of(self, p: int) -> tuple[int, ...]:
        for comp in self.components:
            if p in comp:
                return comp
        raise KeyError(f"{p} is not a vertex")


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def build_graph(spec_orders: set[int] | frozenset[int], order: int) -> PrimeGraph:
    """Prime graph from a spectrum and the group order.

    The component containing 2 (when present) is listed first; the rest are
    ordered by smallest prime.  Order components are assembled by routing each
    prime power of the order's factorization to its prime's component.
    """
    if 1 not in spec_orders:
        raise ValueError("spectrum must contain 1")
    for s in spec_orders:
        if s < 1 or order % s:
            raise ValueError(f"spectrum member {s} does not divide the order {order}")
    vertices = tuple(prime_divisors(order))
    uf = _UnionFind(vertices)
    edges: set[tuple[int, int]] = set()
    for member in spec_orders:
        ps = prime_divisors(member)
        for a_idx in range(len(ps)):
            for b_idx in range(a_idx + 1, len(ps)):
                a, b = ps[a_idx], ps[b_idx]
                edges.add((a, b))
                uf.union(a, b)
    groups: dict[int, list[int]] = {}
    for v in vertices:
        groups.setdefault(uf.find(v), []).append(v)
    comps = sorted((tuple(sorted(g)) for g in groups.values()), key=lambda c: c[0])
    comps.sort(key=lambda c: (2 not in c, c[0]))
    oc = []
    fac = factorize(order)
    for comp in comps:
        part = 1
        for p, e in fac:
            if p in comp:
                part *= p**e
        oc.append(part)
    return PrimeGraph(vertices, tuple(sorted(edges)), tuple(comps), tuple(oc))


def component_count(graph: PrimeGraph) -> int:
    return len(graph.components)


def separation_check(q: int) -> bool:
    """True iff pi(q^2+1) and pi(2(q^2-1)) fall in distinct components for PSp4(q)."""
    graph = build_graph(set(spectrum(q)), group_order(q))
    odd_side = {graph.component_of(p) for p in prime_divisors(q * q + 1)}
    even_side = {graph.component_of(p) for p in prime_divisors(2 * (q * q - 1))}
    return not (odd_side & even_side)


def graph_json(graph: PrimeGraph) -> dict:
    """JSON-ready form with all integers as decimal strings."""
    return {
        "vertices": [str(v) for v in graph.vertices],
        "edges": [[str(a), str(b)] for a, b in graph.edges],
        "components": [[str(v) for v in comp] for comp in graph.components],
        "order_components": [str(n) for n in graph.order_components],
    }
