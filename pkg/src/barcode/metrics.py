"""Ranked-retrieval and agreement metrics.

All pure functions. The Mann-Whitney test is exact (full enumeration of
the permutation distribution, ties included) whenever n_a*n_b <= 400 and
falls back to the tie-corrected normal approximation above that.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Hashable, Sequence


def precision_at_k(ranked: Sequence[bool], k: int) -> float:
    """Fraction of the first k slots that are relevant (missing slots count as miss)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return sum(bool(r) for r in ranked[:k]) / k


def ndcg_at_k(ranked: Sequence[bool], k: int, n_relevant: int | None = None) -> float:
    """Binary-relevance NDCG with 1/log2(rank+1) gains.

    The ideal DCG assumes `n_relevant` relevant items exist in the judged
    set (defaults to the count within `ranked`); 0.0 when nothing is
    relevant.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    total_relevant = sum(bool(r) for r in ranked) if n_relevant is None else n_relevant
    if total_relevant == 0:
        return 0.0
    dcg = sum(1.0 / math.log2(i + 2) for i, r in enumerate(ranked[:k]) if r)
    idcg = sum(1.0 / math.log2(i + 2) for i in range(min(k, total_relevant)))
    return dcg / idcg


def rbo(
    list_a: Sequence[Hashable],
    list_b: Sequence[Hashable],
    p: float = 0.9,
    depth: int = 15,
) -> float:
    """Extrapolated rank-biased overlap evaluated to `depth`.

    Top-weighted list similarity in [0, 1]; `p` is the persistence
    (probability of looking one rank deeper). Lists must be
    duplicate-free; unequal lengths evaluate to the shorter prefix.
    """
    if not 0 < p < 1:
        raise ValueError(f"p must be in (0,1), got {p}")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if len(set(list_a)) != len(list_a) or len(set(list_b)) != len(list_b):
        raise ValueError("rbo lists must be duplicate-free")
    d = min(depth, len(list_a), len(list_b))
    if d == 0:
        return 1.0 if not list_a and not list_b else 0.0
    seen_a: set = set()
    seen_b: set = set()
    overlap = 0
    series = 0.0
    for i in range(1, d + 1):
        item_a, item_b = list_a[i - 1], list_b[i - 1]
        if item_a == item_b:
            overlap += 1
        else:
            overlap += (item_a in seen_b) + (item_b in seen_a)
        seen_a.add(item_a)
        seen_b.add(item_b)
        series += overlap / i * p**i
    return (overlap / d) * p**d + (1 - p) / p * series


def shared_items(list_a: Sequence[Hashable], list_b: Sequence[Hashable]) -> int:
    """Size of the intersection, order-blind (robustness reporting)."""
    return len(set(list_a) & set(list_b))


def _u_statistic(sample_a: Sequence[float], sample_b: Sequence[float]) -> float:
    u = 0.0
    for a in sample_a:
        for b in sample_b:
            if a > b:
                u += 1.0
            elif a == b:
                u += 0.5
    return u


def _exact_u_distribution(pooled: Sequence[float], n_a: int) -> dict[int, int]:
    """Distribution of 2*U over all splits of the pooled multiset.

    Dynamic program over tied value groups: assigning k items of a group
    to sample A contributes k * (items strictly below assigned to B) to U
    plus half-credit for within-group ties. Counts are exact integers.
    """
    groups = sorted(Counter(pooled).items())
    dist: dict[tuple[int, int], int] = {(0, 0): 1}
    below = 0
    for _value, m_t in groups:
        new_dist: dict[tuple[int, int], int] = {}
        for (a_used, u2), weight in dist.items():
            for k in range(0, min(m_t, n_a - a_used) + 1):
                key = (
                    a_used + k,
                    u2 + 2 * k * (below - a_used) + k * (m_t - k),
                )
                new_dist[key] = new_dist.get(key, 0) + weight * math.comb(m_t, k)
        dist = new_dist
        below += m_t
    return {u2: w for (a_used, u2), w in dist.items() if a_used == n_a}


def mann_whitney_u(
    sample_a: Sequence[float], sample_b: Sequence[float]
) -> tuple[float, float]:
    """Two-sided Mann-Whitney U test.

    Returns (U for sample_a, p-value). Exact enumeration when
    n_a*n_b <= 400; otherwise normal approximation with tie correction
    and continuity correction.
    """
    n_a, n_b = len(sample_a), len(sample_b)
    if n_a == 0 or n_b == 0:
        raise ValueError("samples must be non-empty")
    u = _u_statistic(sample_a, sample_b)
    mu2 = n_a * n_b  # 2 * mean of U

    if n_a * n_b <= 400:
        dist = _exact_u_distribution(list(sample_a) + list(sample_b), n_a)
        total = sum(dist.values())
        observed_dev = abs(round(2 * u) - mu2)
        extreme = sum(w for u2, w in dist.items() if abs(u2 - mu2) >= observed_dev)
        return u, extreme / total

    n = n_a + n_b
    ties = Counter(list(sample_a) + list(sample_b))
    tie_term = sum(t**3 - t for t in ties.values()) / (n * (n - 1))
    sigma2 = n_a * n_b / 12.0 * ((n + 1) - tie_term)
    if sigma2 <= 0:
        return u, 1.0
    deviation = abs(u - mu2 / 2.0) - 0.5
    if deviation < 0:
        return u, 1.0
    z = deviation / math.sqrt(sigma2)
    return u, min(1.0, math.erfc(z / math.sqrt(2.0)))


def fleiss_kappa(matrix: Sequence[Sequence[Hashable]]) -> float:
    """Fleiss' kappa over an items x raters grid of categorical labels."""
    if not matrix:
        raise ValueError("empty annotation matrix")
    n_raters = len(matrix[0])
    if n_raters < 2:
        raise ValueError("need at least 2 raters")
    if any(len(row) != n_raters for row in matrix):
        raise ValueError("every item needs a label from every rater")

    categories = sorted({label for row in matrix for label in row}, key=repr)
    n_items = len(matrix)
    agreement_sum = 0.0
    category_mass: Counter = Counter()
    for row in matrix:
        counts = Counter(row)
        category_mass.update(counts)
        agreement_sum += (sum(c * c for c in counts.values()) - n_raters) / (
            n_raters * (n_raters - 1)
        )
    p_bar = agreement_sum / n_items
    p_e = sum(
        (category_mass[cat] / (n_items * n_raters)) ** 2 for cat in categories
    )
    if p_e >= 1.0:
        return 1.0  # single category used throughout: perfect agreement
    return (p_bar - p_e) / (1 - p_e)
