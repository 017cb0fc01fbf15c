"""
Irreducible characters of the symmetric group.

Characters chi_lam(mu) are computed by the Murnaghan-Nakayama rule, phrased
on beta-numbers (first-column hook lengths): removing a border strip of
length t is sliding one beta number down by t, with sign (-1)^(number of
occupied positions jumped over).  Values are exact integers and memoized
process-wide; the cache behaves as a pure function.
"""

from functools import cache
from math import comb, factorial

from .combinatorics import check_partition, weight


@cache
def character(lam, mu) -> int:
    """chi_lam(mu): character of the class of cycle type mu in the irrep lam.

    Both arguments are partitions of the same n.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    if weight(lam) != weight(mu):
        raise ValueError(f"weight mismatch: |{lam}| != |{mu}|")
    return _mn(lam, mu)


@cache
def _mn(lam, mu) -> int:
    if not mu:
        return 1
    t, rest = mu[0], mu[1:]
    beta = [lam[i] + (len(lam) - 1 - i) for i in range(len(lam))]
    occupied = set(beta)
    total = 0
    for i, b in enumerate(beta):
        target = b - t
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for c in beta if target < c < b)
        new_beta = sorted(beta[:i] + [target] + beta[i + 1 :], reverse=True)
        new_lam = tuple(
            c - (len(new_beta) - 1 - j) for j, c in enumerate(new_beta)
        )
        new_lam = tuple(c for c in new_lam if c > 0)
        total += (-1) ** jumped * _mn(new_lam, rest)
    return total


@cache
def dimension(lam) -> int:
    """d_lam: dimension of the irrep lam, by the hook-length formula.

    Cross-checked against chi_lam(1^n) on every fresh computation.
    """
    lam = check_partition(lam)
    n = weight(lam)
    conj_cols = [0] * (lam[0] if lam else 0)
    for part in lam:
        for j in range(part):
            conj_cols[j] += 1
    hooks = 1
    for i, part in enumerate(lam):
        for j in range(part):
            hooks *= (part - j) + (conj_cols[j] - i) - 1
    d = factorial(n) // hooks
    assert d == character(lam, (1,) * n), f"hook/MN mismatch for {lam}"
    return d


def hook_character(n: int, k: int) -> tuple[int, int]:
    """(chi, d) for the hook shape (n-k, 1^k) on the full cycle (n):
    chi = (-1)^k and d = binomial(n-1, k).

    Hooks are the only shapes with nonzero character on a full cycle.
    """
    if not 0 <= k <= n - 1:
        raise ValueError("need 0 <= k <= n-1")
    return (-1) ** k, comb(n - 1, k)


def character_table(n: int) -> dict[tuple, dict[tuple, int]]:
    """Full table {lam: {mu: chi_lam(mu)}} over partitions of n."""
    from .combinatorics import partitions_of

    parts = partitions_of(n)
    return {lam: {mu: character(lam, mu) for mu in parts} for lam in parts}
