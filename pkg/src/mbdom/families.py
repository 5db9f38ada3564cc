"""Constructors and recognisers for the critical-graph families.

* ``H_m``: K_2 joined with m-2 independent vertices (K_2 for m=2, null for m=0).
* ``B``: K_{2,n} (n >= 3), or bipartite with parts of sizes m, n >= 3 where
  each part has exactly two vertices adjacent to the whole other part and
  every remaining vertex has degree 2.
* ``F_{m1,t,m2}``: independent pair {v1, v2} with t common neighbours, v1
  attached to all of H_{m1} and v2 to all of H_{m2}.
* ``F'_{s,q,m}``: apex v1 over K_{2,s} (part {a, b}) plus q-2 extra vertices,
  and a vertex x joined to a, b, the extras and all of H_m.

Recognition is structural: candidate role assignments are derived from the
graph and the defining adjacency is rebuilt and compared.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .canon import is_isomorphic
from .graph import (Graph, components, cycle, from_edges, induced_subgraph,
                    is_bipartite, iter_bits, universal_vertices)

KINDS = ("H", "B", "F", "Fprime", "C5")


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        check_params(self.kind, self.params)

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}:{','.join(map(str, self.params))}"


_ARITY = {"H": 1, "B": 2, "F": 3, "Fprime": 3, "C5": 0}


def check_params(kind: str, params: tuple[int, ...]) -> None:
    if kind not in _ARITY:
        raise FamilyError(f"unknown family {kind!r}; expected one of {', '.join(KINDS)}")
    if len(params) != _ARITY[kind]:
        raise FamilyError(f"{kind} takes {_ARITY[kind]} parameter(s), got {len(params)}")
    if kind == "H":
        (m,) = params
        if not (m == 0 or m >= 2):
            raise FamilyError("H:m requires m=0 or m>=2")
    elif kind == "B":
        m, n = params
        if m == 2:
            if n < 3:
                raise FamilyError("B:2,n requires n>=3")
        elif m < 3 or n < 3:
            raise FamilyError("B:m,n requires m=2 and n>=3, or m>=3 and n>=3")
    elif kind == "F":
        m1, t, m2 = params
        if t < 1:
            raise FamilyError("F requires t>=1")
        if m1 == 1 or m2 == 1 or m1 < 0:
            raise FamilyError("F requires m1, m2 in {0,2,3,...}")
        if m1 > m2:
            raise FamilyError("F requires m1<=m2")
        if m2 < 2:
            raise FamilyError("F requires m2>=2")
        if m1 == 0 and t < 2:
            raise FamilyError("m1=0 requires t>=2")
    elif kind == "Fprime":
        if any(p < 2 for p in params):
            raise FamilyError("Fprime requires s>=2, q>=2, m>=2")


def parse_spec(text: str) -> FamilySpec:
    """Parse ``"H:m"``, ``"B:m,n"``, ``"F:m1,t,m2"``, ``"Fprime:s,q,m"`` or ``"C5"``."""
    match = re.fullmatch(r"\s*([A-Za-z0-9']+)\s*(?::\s*([0-9,\s]*))?", text)
    if not match:
        raise FamilyError(f"cannot parse family spec {text!r}")
    kind = match.group(1).replace("'", "prime")
    if kind == "Fprime" or kind.lower() == "fprime":
        kind = "Fprime"
    raw = match.group(2)
    try:
        params = tuple(int(p) for p in raw.split(",")) if raw and raw.strip() else ()
    except ValueError:
        raise FamilyError(f"non-integer parameter in {text!r}") from None
    return FamilySpec(kind, params)


# ---------------------------------------------------------------- builders

def _h_edges(first: int, m: int) -> list[tuple[int, int]]:
    if m == 0:
        return []
    u1, u2 = first, first + 1
    edges = [(u1, u2)]
    for w in range(first + 2, first + m):
        edges += [(u1, w), (u2, w)]
    return edges


def build_H(m: int) -> Graph:
    check_params("H", (m,))
    return from_edges(m, _h_edges(0, m))


def B_roles(m: int, n: int) -> dict[str, list[int]]:
    check_params("B", (m, n))
    full2 = [m, m + 1] if m > 2 else list(range(m, m + n))
    return {"V1": list(range(m)), "V2": list(range(m, m + n)), "full1": [0, 1], "full2": full2}


def build_B(m: int, n: int) -> Graph:
    check_params("B", (m, n))
    V1 = list(range(m))
    V2 = list(range(m, m + n))
    if m == 2:
        return from_edges(m + n, [(a, b) for a in V1 for b in V2])
    edges = set()
    for a in V1[:2]:
        for b in V2:
            edges.add((a, b))
    for b in V2[:2]:
        for a in V1:
            edges.add((a, b))
    return from_edges(m + n, sorted(edges))


def F_roles(m1: int, t: int, m2: int) -> dict[str, list[int]]:
    check_params("F", (m1, t, m2))
    h1 = 2 + t
    h2 = h1 + m1
    return {"v1": [0], "v2": [1], "B": list(range(2, 2 + t)),
            "H1": list(range(h1, h1 + m1)), "H2": list(range(h2, h2 + m2)),
            "U1": list(range(h1, h1 + min(m1, 2))) if m1 != 3 else list(range(h1, h1 + 3)),
            "U2": list(range(h2, h2 + 2)) if m2 != 3 else list(range(h2, h2 + 3))}


def build_F(m1: int, t: int, m2: int) -> Graph:
    roles = F_roles(m1, t, m2)
    v1, v2 = 0, 1
    edges = []
    for b in roles["B"]:
        edges += [(v1, b), (v2, b)]
    for h in roles["H1"]:
        edges.append((v1, h))
    for h in roles["H2"]:
        edges.append((v2, h))
    if m1:
        edges += _h_edges(roles["H1"][0], m1)
    edges += _h_edges(roles["H2"][0], m2)
    return from_edges(2 + t + m1 + m2, edges)


def Fprime_roles(s: int, q: int, m: int) -> dict[str, list[int]]:
    check_params("Fprime", (s, q, m))
    y = 4
    extra = y + s
    h = extra + q - 2
    return {"v1": [0], "x": [1], "a": [2], "b": [3], "Y": list(range(y, y + s)),
            "extra": list(range(extra, extra + q - 2)), "H": list(range(h, h + m)),
            "h1": [h], "h2": [h + 1]}


def build_Fprime(s: int, q: int, m: int) -> Graph:
    roles = Fprime_roles(s, q, m)
    v1, x, a, b = 0, 1, 2, 3
    edges = []
    P = [a, b] + roles["Y"] + roles["extra"]
    for w in P:
        edges.append((v1, w))
    for y in roles["Y"]:
        edges += [(a, y), (b, y)]
    for w in [a, b] + roles["extra"] + roles["H"]:
        edges.append((x, w))
    edges += _h_edges(roles["H"][0], m)
    return from_edges(s + q + m + 2, edges)


def build(spec: FamilySpec) -> Graph:
    if spec.kind == "H":
        return build_H(*spec.params)
    if spec.kind == "B":
        return build_B(*spec.params)
    if spec.kind == "F":
        return build_F(*spec.params)
    if spec.kind == "Fprime":
        return build_Fprime(*spec.params)
    return cycle(5)


def roles(spec: FamilySpec) -> dict[str, list[int]]:
    if spec.kind == "H":
        (m,) = spec.params
        return {"U": list(range(min(m, 2))) if m != 3 else [0, 1, 2], "rest": list(range(2, m))}
    if spec.kind == "B":
        return B_roles(*spec.params)
    if spec.kind == "F":
        return F_roles(*spec.params)
    if spec.kind == "Fprime":
        return Fprime_roles(*spec.params)
    return {"cycle": list(range(5))}


# ------------------------------------------------------------- recognisers

def h_order(G: Graph) -> int | None:
    """m if G is isomorphic to H_m (m = 0 or m >= 2), else None."""
    if G.n == 0:
        return 0
    if G.n == 1:
        return None
    U = universal_vertices(G)
    if U.bit_count() < 2:
        return None
    u1, u2 = list(iter_bits(U))[:2]
    rest = G.vertices & ~(1 << u1 | 1 << u2)
    if any(G.adj[w] & rest for w in iter_bits(rest)):
        return None
    return G.n


def _is_h(G: Graph, S: int) -> int | None:
    sub, _ = induced_subgraph(G, S)
    return h_order(sub)


def b_params(G: Graph) -> tuple[int, int] | None:
    if G.n < 5 or len(components(G)) != 1:
        return None
    parts = is_bipartite(G)
    if parts is None:
        return None
    V1, V2 = sorted(parts, key=lambda p: (p.bit_count(), p))
    m, n = V1.bit_count(), V2.bit_count()
    deg = G.degrees()
    if m == 2:
        if n >= 3 and all(deg[v] == n for v in iter_bits(V1)):
            return (2, n)
        return None
    if m < 3:
        return None
    for part, other_size in ((V1, n), (V2, m)):
        full = [v for v in iter_bits(part) if deg[v] == other_size]
        if len(full) != 2:
            return None
        if any(deg[v] != 2 for v in iter_bits(part) if v not in full):
            return None
    return (m, n)


def f_params(G: Graph) -> tuple[int, int, int] | None:
    """Parameters (m1, t, m2) of an F-graph isomorphic to G, else None."""
    for v1 in range(G.n):
        for v2 in range(v1 + 1, G.n):
            if G.has_edge(v1, v2):
                continue
            common = G.adj[v1] & G.adj[v2]
            t = common.bit_count()
            if t == 0:
                continue
            R1 = G.adj[v1] & ~common
            R2 = G.adj[v2] & ~common
            if (1 << v1 | 1 << v2 | common | R1 | R2) != G.vertices:
                continue
            if R1 & R2:
                continue
            m_a, m_b = R1.bit_count(), R2.bit_count()
            if (m_a, m_b) == (0, 0):
                continue
            lo, hi = sorted((m_a, m_b))
            try:
                check_params("F", (lo, t, hi))
            except FamilyError:
                continue
            if G.n != 2 + t + lo + hi:
                continue
            # B independent and attached only to v1, v2
            pair = 1 << v1 | 1 << v2
            if any(G.adj[b] != pair for b in iter_bits(common)):
                continue
            ok = True
            for R, apex in ((R1, v1), (R2, v2)):
                if any(G.adj[w] & ~(R | 1 << apex) for w in iter_bits(R)):
                    ok = False
                    break
                if R and _is_h(G, R) != R.bit_count():
                    ok = False
                    break
            if ok:
                return (lo, t, hi)
    return None


def fprime_params(G: Graph) -> tuple[int, int, int] | None:
    """Parameters (s, q, m) of an F'-graph isomorphic to G, else None."""
    for x in range(G.n):
        for v1 in range(G.n):
            if v1 == x or G.has_edge(x, v1):
                continue
            Bset = G.adj[x] & G.adj[v1]
            q = Bset.bit_count()
            Y = G.adj[v1] & ~Bset
            H = G.adj[x] & ~Bset
            s, m = Y.bit_count(), H.bit_count()
            if q < 2 or s < 2 or m < 2 or G.n != s + q + m + 2:
                continue
            if (1 << x | 1 << v1 | Bset | Y | H) != G.vertices:
                continue
            ab = [w for w in iter_bits(Bset) if G.adj[w] & Y]
            if len(ab) != 2:
                continue
            a, b = ab
            extra = Bset & ~(1 << a | 1 << b)
            want_ab = Y | 1 << x | 1 << v1
            if G.adj[a] != want_ab or G.adj[b] != want_ab:
                continue
            if any(G.adj[w] != (1 << x | 1 << v1) for w in iter_bits(extra)):
                continue
            if any(G.adj[y] != (1 << a | 1 << b | 1 << v1) for y in iter_bits(Y)):
                continue
            if any(G.adj[h] & ~(H | 1 << x) for h in iter_bits(H)):
                continue
            if _is_h(G, H) != m:
                continue
            return (s, q, m)
    return None


_C5 = cycle(5)


def family_membership(G: Graph) -> dict[str, bool]:
    h = h_order(G)
    return {
        "B": b_params(G) is not None,
        "F": f_params(G) is not None,
        "Fprime": fprime_params(G) is not None,
        "C5": G.n == 5 and is_isomorphic(G, _C5),
        "H": h is not None,
    }


def h2_plus_hm(G: Graph) -> int | None:
    """m if G is the disjoint union of H_2 and H_m (m >= 2), else None."""
    comps = components(G)
    if len(comps) != 2:
        return None
    orders = [_is_h(G, c) for c in comps]
    if None in orders or min(orders) != 2:
        return None
    return max(orders)


__all__ = [
    "FamilyError", "FamilySpec", "parse_spec", "check_params", "build", "roles",
    "build_H", "build_B", "build_F", "build_Fprime", "F_roles", "Fprime_roles", "B_roles",
    "h_order", "b_params", "f_params", "fprime_params", "family_membership", "h2_plus_hm",
]
