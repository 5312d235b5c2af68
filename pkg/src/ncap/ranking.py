"""Rank tables and cross-method rank-agreement diagnostics.

Different normalization techniques can rank the same platforms
differently; this module turns score columns into competition-style
rank columns and quantifies how much any two methods agree via the
tie-corrected Kendall tau-b.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from scipy.stats import kendalltau

from .errors import DimensionError, DomainError, InsufficientMethodsError


@dataclass(frozen=True)
class RankTable:
    """Per-method platform ranks (1 = best), with tie groups made explicit.

    Competition ranking: tied platforms share the smallest rank of their
    group and the following rank numbers are skipped.
    """

    platforms: tuple[str, ...]
    columns: Mapping[str, Mapping[str, int]]
    tie_groups: Mapping[str, tuple[tuple[str, ...], ...]]


@dataclass(frozen=True)
class AgreementStats:
    """Pairwise tau-b values and unanimity flags across method columns."""

    methods: tuple[str, ...]
    tau: Mapping[tuple[str, str], float]
    unanimous: Mapping[int, tuple[str, ...]]


def rank_scores(scores: Mapping[str, float]) -> dict[str, int]:
    """Rank platforms by score, descending; exact score ties share a rank."""
    for platform, score in scores.items():
        if not math.isfinite(score):
            raise DomainError(f"non-finite score {score!r} for platform {platform!r}")
    values = list(scores.values())
    return {
        platform: 1 + sum(1 for other in values if other > score)
        for platform, score in scores.items()
    }


def rank_table(columns: Mapping[str, Mapping[str, float]]) -> RankTable:
    """Build a RankTable from score columns keyed by method."""
    methods = tuple(columns)
    if not methods:
        raise DimensionError("rank_table: no score columns")
    platforms = tuple(next(iter(columns.values())))
    ranked: dict[str, dict[str, int]] = {}
    ties: dict[str, tuple[tuple[str, ...], ...]] = {}
    for method, scores in columns.items():
        if tuple(scores) != platforms:
            raise DimensionError(f"score column {method!r} has a different platform set")
        ranks = rank_scores(scores)
        ranked[method] = ranks
        groups: dict[int, list[str]] = {}
        for platform, rank in ranks.items():
            groups.setdefault(rank, []).append(platform)
        ties[method] = tuple(
            tuple(group) for _, group in sorted(groups.items()) if len(group) > 1
        )
    return RankTable(platforms=platforms, columns=ranked, tie_groups=ties)


def kendall_tau(a: Mapping[str, int], b: Mapping[str, int]) -> float:
    """Tie-corrected Kendall tau-b between two rank columns, in [-1, 1].

    Returns nan when either column is one big tie (tau-b is undefined
    there: no pair is ever concordant or discordant).
    """
    if set(a) != set(b):
        raise DimensionError("kendall_tau: platform sets differ")
    platforms = list(a)
    x = [a[p] for p in platforms]
    y = [b[p] for p in platforms]
    return float(kendalltau(x, y).statistic)


def consensus_report(ranks: RankTable) -> AgreementStats:
    """Pairwise tau-b matrix plus per-rank unanimity across methods.

    A platform is unanimous at rank r when every method column assigns it
    exactly r. The interesting consensus question is usually rank 1: do
    all combination methods crown the same platform?
    """
    methods = tuple(ranks.columns)
    if len(methods) < 2:
        raise InsufficientMethodsError("consensus needs at least two method columns")
    # fill the upper triangle and mirror: keeps the matrix exactly symmetric
    tau: dict[tuple[str, str], float] = {}
    for i, m1 in enumerate(methods):
        tau[(m1, m1)] = 1.0
        for m2 in methods[i + 1 :]:
            value = kendall_tau(ranks.columns[m1], ranks.columns[m2])
            tau[(m1, m2)] = value
            tau[(m2, m1)] = value
    unanimous: dict[int, tuple[str, ...]] = {}
    for rank in range(1, len(ranks.platforms) + 1):
        agreed = tuple(
            p
            for p in ranks.platforms
            if all(ranks.columns[m][p] == rank for m in methods)
        )
        if agreed:
            unanimous[rank] = agreed
    return AgreementStats(methods=methods, tau=tau, unanimous=unanimous)
