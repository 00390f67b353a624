"""Natural unit interval orders, incomparability graphs, orientations,
P-tableaux, and the restricted permutation classes used by the power-sum
expansions.
"""

from fractions import Fraction
from itertools import permutations as _perms

from .combinat import inv_g

__all__ = [
    "Graph", "Poset", "Nuio", "nuio_from_mseq", "p_n_r", "chain_poset",
    "antichain", "relabel_graph", "enumerate_nuios", "nuio_check",
    "acyclic_orientations", "p_tableaux", "n_p_mu", "n_p_mu_tilde",
    "chromatic_polynomial", "parse_poset_string",
]


class Graph:
    """Simple graph on vertex set [n]; edges stored as (i, j) with i < j."""

    __slots__ = ("n", "edges", "edge_set")

    def __init__(self, n, edges):
        self.n = n
        norm = set()
        for a, b in edges:
            if a == b:
                raise ValueError("loops not allowed")
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError("vertex out of range")
            norm.add((min(a, b), max(a, b)))
        self.edges = frozenset(norm)
        self.edge_set = self.edges

    def neighbors(self, v):
        return [b if a == v else a for a, b in self.edges if v in (a, b)]

    def __eq__(self, other):
        return isinstance(other, Graph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph({self.n}, {sorted(self.edges)})"


class Poset:
    """Strict partial order on [n]; ``less`` holds the pairs (i, j) with i <_P j."""

    __slots__ = ("n", "less")

    def __init__(self, n, less):
        less = frozenset((int(a), int(b)) for a, b in less)
        for a, b in less:
            if a == b:
                raise ValueError("relation is not irreflexive")
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError("element out of range")
        for a, b in less:
            for c, d in less:
                if b == c and (a, d) not in less:
                    raise ValueError("relation is not transitive")
        self.n = n
        self.less = less

    def comparable(self, a, b):
        return (a, b) in self.less or (b, a) in self.less

    def inc_graph(self):
        n = self.n
        return Graph(n, [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)
                         if not self.comparable(i, j)])

    def restrict(self, elements):
        """Induced subposet, relabeled order-preservingly onto [k]."""
        elems = sorted(elements)
        index = {v: i + 1 for i, v in enumerate(elems)}
        return Poset(len(elems), [(index[a], index[b]) for a, b in self.less
                                  if a in index and b in index])

    def dual(self):
        return Poset(self.n, [(b, a) for a, b in self.less])

    def __eq__(self, other):
        return isinstance(other, Poset) and (self.n, self.less) == (other.n, other.less)

    def __hash__(self):
        return hash((self.n, self.less))

    def __repr__(self):
        return f"Poset({self.n}, {sorted(self.less)})"


class Nuio:
    """Natural unit interval order encoded by its m-sequence."""

    __slots__ = ("n", "mseq")

    def __init__(self, mseq, n=None):
        mseq = tuple(int(m) for m in mseq)
        if n is None:
            n = len(mseq) + 1
        if len(mseq) != n - 1:
            raise ValueError("m-sequence must have length n-1")
        for i, m in enumerate(mseq, start=1):
            if m < i:
                raise ValueError(f"m_{i} = {m} < {i}")
            if m > n:
                raise ValueError(f"m_{i} = {m} > n")
            if i >= 2 and m < mseq[i - 2]:
                raise ValueError("m-sequence must be weakly increasing")
        self.n = n
        self.mseq = mseq

    def poset(self):
        n = self.n
        less = [(i, j) for i in range(1, n)
                for j in range(self.mseq[i - 1] + 1, n + 1)]
        return Poset(n, less)

    def inc_graph(self):
        # i < j incomparable iff j <= m_i
        n = self.n
        return Graph(n, [(i, j) for i in range(1, n)
                         for j in range(i + 1, min(self.mseq[i - 1], n) + 1)])

    def canonical_string(self):
        return "m=" + ",".join(str(m) for m in self.mseq)

    def __eq__(self, other):
        return isinstance(other, Nuio) and (self.n, self.mseq) == (other.n, other.mseq)

    def __hash__(self):
        return hash((self.n, self.mseq))

    def __repr__(self):
        return f"Nuio({self.mseq}, n={self.n})"


def nuio_from_mseq(mseq, n=None):
    return Nuio(mseq, n)


def p_n_r(n, r):
    """The poset on [n] with i < j exactly when j - i >= r."""
    if not 1 <= r <= n:
        raise ValueError("need 1 <= r <= n")
    return Nuio(tuple(min(r + i, n) for i in range(n - 1)), n)


def chain_poset(n):
    return Poset(n, [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)])


def antichain(n):
    return Nuio((n,) * (n - 1), n)


def relabel_graph(vertices, edges):
    """Order-preserving relabeling of a graph on V subset of P onto [n]."""
    order = {v: i + 1 for i, v in enumerate(sorted(vertices))}
    return Graph(len(vertices), [(order[a], order[b]) for a, b in edges])


def enumerate_nuios(n):
    """All C_n natural unit interval orders on [n], lexicographic by m-sequence."""
    if n < 1:
        raise ValueError("n must be positive")

    def rec(i, lo):
        if i == n:
            yield ()
            return
        for m in range(max(i, lo), n + 1):
            for rest in rec(i + 1, m):
                yield (m,) + rest

    for mseq in rec(1, 1):
        yield Nuio(mseq, n)


def _perturb(ys):
    """Remove exact unit gaps, preserving every strict inequality.

    Follows the inductive construction: subtract a small 1/2^k from the
    tail whenever some y_j - y_i equals 1 exactly.
    """
    ys = list(ys)
    n = len(ys)
    while True:
        bad = [(i, j) for i in range(n) for j in range(i + 1, n)
               if ys[j] - ys[i] == 1]
        if not bad:
            return ys
        j = min(b for _, b in bad)
        slack = [ys[v] - ys[u] for u in range(n) for v in range(u + 1, n)]
        slack += [d - 1 for d in slack if d > 1]
        gap = min(s for s in slack if s > 0)
        eps = Fraction(1)
        while eps >= gap:
            eps /= 2
        eps /= 2
        for k in range(j, n):
            ys[k] -= eps


def _realize(mseq):
    """Exact rationals y_1 < ... < y_n with y_i + 1 < y_j iff i <_P(m) j."""
    n = len(mseq) + 1
    if n == 1:
        return [Fraction(0)]
    if mseq[0] == n:
        return [Fraction(i, n) for i in range(1, n + 1)]
    sub = tuple(min(n - 1, m) for m in mseq[:-1])
    ys = _perturb(_realize(sub))
    if mseq[-1] == n - 1:
        return ys + [ys[-1] + 2]
    i = next(k for k in range(1, n) if mseq[k - 1] == n)
    lo = max(ys[i - 2] + 1, ys[-1])
    hi = ys[i - 1] + 1
    if not lo < hi:
        raise AssertionError("realization window collapsed")
    return ys + [(lo + hi) / 2]


def nuio_check(P):
    """Decide whether a poset on [n] is a natural unit interval order.

    On success returns the m-sequence and an exact unit-interval
    realization y_1 < ... < y_n with y_i + 1 < y_j iff i <_P j.
    """
    n = P.n
    for a, b in P.less:
        if a >= b:
            return {"is_nuio": False, "mseq": None, "realization": None,
                    "reason": f"{a} <_P {b} violates the natural order"}
    for a, b in P.less:
        for y in range(1, n + 1):
            if y in (a, b) or P.comparable(y, a) or P.comparable(y, b):
                continue
            if not a < y < b:
                return {"is_nuio": False, "mseq": None, "realization": None,
                        "reason": f"element {y} not between comparable pair {a} <_P {b}"}
    mseq = tuple(max(j for j in range(1, n + 1) if (i, j) not in P.less)
                 for i in range(1, n))
    nuio = Nuio(mseq, n)
    if nuio.poset() != P:
        raise AssertionError("m-sequence reconstruction failed")
    ys = _realize(mseq)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j and (ys[i - 1] + 1 < ys[j - 1]) != ((i, j) in P.less):
                raise AssertionError("realization disagrees with the order")
    return {"is_nuio": True, "mseq": mseq, "realization": ys, "reason": None}


def _is_acyclic(n, directed):
    outs = {v: [] for v in range(1, n + 1)}
    indeg = {v: 0 for v in range(1, n + 1)}
    for a, b in directed:
        outs[a].append(b)
        indeg[b] += 1
    queue = [v for v in indeg if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in outs[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == n


def acyclic_orientations(G):
    """Yield (directed edge tuple, sink count, ascent count) for every
    acyclic orientation of G, in the order induced by edge bitmasks."""
    edges = sorted(G.edges)
    m = len(edges)
    for mask in range(1 << m):
        directed = tuple((a, b) if mask >> k & 1 else (b, a)
                         for k, (a, b) in enumerate(edges))
        if not _is_acyclic(G.n, directed):
            continue
        heads = {a for a, _ in directed}
        sinks = G.n - len(heads)
        asc = sum(1 for a, b in directed if a < b)
        yield directed, sinks, asc


def p_tableaux(P, lam, graph=None):
    """All P-tableaux of shape lam, with their G-inversion numbers.

    Row-major backtracking with candidates tried in natural order; rows
    strictly <_P-increase left-to-right, and no cell is <_P the cell
    directly above it.  inv counts edges {i, j}, i < j, with i in a
    strictly lower row than j.
    """
    lam = tuple(lam)
    if sum(lam) != P.n or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("shape must be a partition of |P|")
    if graph is None:
        graph = P.inc_graph()
    less = P.less
    edges = graph.edge_set
    cells = [c for r, width in enumerate(lam) for c in
             ((r, col) for col in range(width))]
    rows = [[None] * width for width in lam]
    used = [False] * (P.n + 1)
    row_of = {}

    def rec(k):
        if k == len(cells):
            inv = 0
            for a, b in edges:
                if row_of[a] > row_of[b]:
                    inv += 1
            yield tuple(tuple(row) for row in rows), inv
            return
        r, c = cells[k]
        for x in range(1, P.n + 1):
            if used[x]:
                continue
            if c > 0 and (rows[r][c - 1], x) not in less:
                continue
            if r > 0 and (x, rows[r - 1][c]) in less:
                continue
            rows[r][c] = x
            used[x] = True
            row_of[x] = r
            yield from rec(k + 1)
            used[x] = False
            del row_of[x]
        rows[r][c] = None

    yield from rec(0)


def _segments(sigma, mu):
    out, pos = [], 0
    for part in mu:
        out.append(sigma[pos:pos + part])
        pos += part
    return out


def _segment_ok_n(seg, less):
    """No P-descent and no nontrivial left-to-right P-maximum."""
    for i in range(len(seg) - 1):
        if (seg[i + 1], seg[i]) in less:
            return False
    for r in range(1, len(seg)):
        if all((seg[s], seg[r]) in less for s in range(r)):
            return False
    return True


def _segment_ok_ntilde(seg, less):
    """No P-ascent, and the segment starts with its smallest letter."""
    if seg[0] != min(seg):
        return False
    return all((seg[i], seg[i + 1]) not in less for i in range(len(seg) - 1))


def n_p_mu(P, mu, graph=None):
    """The class N_{P,mu}: yields (permutation, inv_G)."""
    if sum(mu) != P.n:
        raise ValueError("mu must be a partition of n")
    if graph is None:
        graph = P.inc_graph()
    less = P.less
    for sigma in _perms(range(1, P.n + 1)):
        if all(_segment_ok_n(seg, less) for seg in _segments(sigma, mu)):
            yield sigma, inv_g(sigma, graph)


def n_p_mu_tilde(P, mu, graph=None):
    """The class N~_{P,mu}: yields (permutation, inv_G)."""
    if sum(mu) != P.n:
        raise ValueError("mu must be a partition of n")
    if graph is None:
        graph = P.inc_graph()
    less = P.less
    for sigma in _perms(range(1, P.n + 1)):
        if all(_segment_ok_ntilde(seg, less) for seg in _segments(sigma, mu)):
            yield sigma, inv_g(sigma, graph)


def chromatic_polynomial(G, m):
    """chi_G(m) by deletion-contraction; exact."""
    return _chi(G.n, G.edges, m)


def _chi(n, edges, m):
    if not edges:
        return m ** n
    a, b = min(edges)
    deleted = edges - {(a, b)}
    # contract b into a
    merged = set()
    for u, v in deleted:
        u = a if u == b else (u - 1 if u > b else u)
        v = a if v == b else (v - 1 if v > b else v)
        if u != v:
            merged.add((min(u, v), max(u, v)))
    return _chi(n, deleted, m) - _chi(n - 1, frozenset(merged), m)


def parse_poset_string(text):
    """Parse the CLI grammar "m=<ints>" or "nr=<n>,<r>" into a Nuio."""
    text = text.strip()
    if text.startswith("m="):
        parts = [int(x) for x in text[2:].split(",")] if text[2:] else []
        return Nuio(parts)
    if text.startswith("nr="):
        n, r = (int(x) for x in text[3:].split(","))
        return p_n_r(n, r)
    raise ValueError(f"unrecognized poset string: {text!r}")
