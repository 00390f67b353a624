"""Partitions, compositions, permutations, and the permutation/word statistics.

Permutations are 1-indexed one-line tuples.  Words are tuples of distinct
positive integers over a poset's ground set.  S_n is always enumerated in
lexicographic order of one-line notation.
"""

from itertools import permutations as _permutations

__all__ = [
    "partitions", "partitions_with_parts", "compositions",
    "composition_from_subset", "subset_from_composition",
    "partition_multiplicities", "z_partition",
    "permutations", "perm_stats", "inv", "des_set", "inv_g", "des_p",
    "maj_p", "word_stats",
]


def partitions(n, max_part=None):
    """All partitions of n as weakly decreasing tuples, lex-descending order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partitions_with_parts(n, j):
    """Partitions of n with exactly j parts."""
    return [lam for lam in partitions(n) if len(lam) == j]


def compositions(n):
    """All 2^(n-1) compositions of n, by the partial-sums subset bijection."""
    if n == 0:
        yield ()
        return
    for mask in range(1 << (n - 1)):
        subset = [i for i in range(1, n) if mask >> (i - 1) & 1]
        yield composition_from_subset(subset, n)


def composition_from_subset(subset, n):
    """Composition of n with partial sums equal to the subset of [n-1]."""
    cuts = [0] + sorted(subset) + [n]
    if any(cuts[i] >= cuts[i + 1] for i in range(len(cuts) - 1)) and n > 0:
        raise ValueError("subset must lie in [n-1]")
    return tuple(cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1))


def subset_from_composition(alpha):
    total, out = 0, []
    for part in alpha[:-1]:
        total += part
        out.append(total)
    return frozenset(out)


def partition_multiplicities(lam):
    mult = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    return mult


def z_partition(lam):
    """z_lambda = prod_i m_i! * i^(m_i)."""
    out = 1
    for part, m in partition_multiplicities(lam).items():
        fact = 1
        for k in range(2, m + 1):
            fact *= k
        out *= fact * part ** m
    return out


def permutations(n):
    """S_n in lexicographic order of one-line notation."""
    return _permutations(range(1, n + 1))


def des_set(sigma):
    return frozenset(i for i in range(1, len(sigma)) if sigma[i - 1] > sigma[i])


def inv(sigma):
    n = len(sigma)
    return sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j])


def perm_stats(sigma):
    """exc, des, maj, inv, fix of a permutation in one-line notation."""
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError("not a permutation of 1..n")
    ds = des_set(sigma)
    return {
        "exc": sum(1 for i in range(1, n) if sigma[i - 1] > i),
        "des": len(ds),
        "maj": sum(ds),
        "inv": inv(sigma),
        "fix": sum(1 for i in range(1, n + 1) if sigma[i - 1] == i),
    }


def inv_g(word, graph):
    """Number of edges {w_i, w_j} with i < j and w_i > w_j."""
    edges = graph.edge_set
    n = len(word)
    count = 0
    for i in range(n):
        for j in range(i + 1, n):
            a, b = word[i], word[j]
            if a > b and (b, a) in edges:
                count += 1
    return count


def des_p(sigma, poset):
    """P-descent positions { i : sigma(i) >_P sigma(i+1) }."""
    less = poset.less
    return frozenset(i for i in range(1, len(sigma))
                     if (sigma[i], sigma[i - 1]) in less)


def maj_p(sigma, poset):
    return sum(des_p(sigma, poset))


def word_stats(word, poset, graph=None):
    """P-descents, P-ascents, left-to-right P-maxima and inv_G of a word.

    Letters must be distinct elements of the poset's ground set; positions
    are 1-based; the maximum at position 1 is the trivial one.
    """
    if len(set(word)) != len(word):
        raise ValueError("word has repeated letters")
    if not set(word) <= set(range(1, poset.n + 1)):
        raise ValueError("letters outside the poset ground set")
    less = poset.less
    m = len(word)
    descents = frozenset(i for i in range(1, m)
                         if (word[i], word[i - 1]) in less)
    ascents = frozenset(i for i in range(1, m)
                        if (word[i - 1], word[i]) in less)
    maxima = frozenset(
        r for r in range(1, m + 1)
        if all((word[s - 1], word[r - 1]) in less for s in range(1, r)))
    out = {"p_descents": descents, "p_ascents": ascents,
           "left_to_right_p_maxima": maxima}
    if graph is not None:
        out["inv_g"] = inv_g(word, graph)
    return out
