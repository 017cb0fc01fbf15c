"""
Littlewood-Richardson coefficients and large-N Brauer characters.

b_lam(mu), for mu a partition of n and lam a partition of n-2h, is the
coefficient of the degree-|lam| orthogonal character in the expansion of
the power sum p_mu; at top degree (h = 0) it reduces to the symmetric group
character chi_lam(mu).  Values here are the saturated (N > n) coefficients;
no finite-N variant is implemented.
"""

from fractions import Fraction
from functools import cache
from math import factorial

from .characters import character, dimension
from .combinatorics import check_partition, partitions_of, weight


def _contains(outer, inner) -> bool:
    return len(inner) <= len(outer) and all(
        inner[i] <= outer[i] for i in range(len(inner))
    )


@cache
def lr_coefficient(nu, lam, rho) -> int:
    """Littlewood-Richardson coefficient c^nu_{lam, rho}.

    Counts skew semistandard tableaux of shape nu/lam and content rho whose
    reverse reading word is a lattice word.  Zero unless lam is contained
    in nu and |nu| = |lam| + |rho|.
    """
    nu, lam, rho = check_partition(nu), check_partition(lam), check_partition(rho)
    if weight(nu) != weight(lam) + weight(rho):
        return 0
    if not _contains(nu, lam):
        return 0
    if not rho:
        return 1  # nu == lam forced by the weight check
    # cells of nu/lam in reverse reading order: rows top to bottom, each
    # row right to left
    lam_padded = list(lam) + [0] * (len(nu) - len(lam))
    cells = [
        (r, c)
        for r in range(len(nu))
        for c in range(nu[r] - 1, lam_padded[r] - 1, -1)
    ]
    nvals = len(rho)
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (nvals + 1)

    def place(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        total = 0
        for v in range(1, nvals + 1):
            if counts[v] >= rho[v - 1]:
                continue
            # lattice condition on the reverse reading word
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            # weakly increasing along rows (right neighbour already placed)
            right = filling.get((r, c + 1))
            if right is not None and v > right:
                continue
            # strictly increasing down columns (cell above, if in the skew)
            above = filling.get((r - 1, c))
            if above is not None and v <= above:
                continue
            # cell above inside lam imposes nothing; cell above outside nu
            # cannot happen in reading order
            filling[(r, c)] = v
            counts[v] += 1
            total += place(idx + 1)
            counts[v] -= 1
            del filling[(r, c)]
        return total

    return place(0)


def is_horizontal_strip(outer, inner) -> bool:
    """True if outer/inner is a horizontal strip (no two cells share a column)."""
    if not _contains(outer, inner):
        return False
    inner_padded = list(inner) + [0] * (len(outer) - len(inner))
    for r in range(1, len(outer)):
        if inner_padded[r - 1] < outer[r]:
            return False
    return True


def doubled(beta) -> tuple[int, ...]:
    """The partition 2*beta (each part doubled)."""
    return tuple(2 * b for b in beta)


@cache
def brauer_character(lam, mu) -> int:
    """Saturated Brauer character b_lam(mu), lam a partition of |mu| - 2h:

        b_lam(mu) = sum_{nu of n} chi_nu(mu) sum_{beta of h} c^nu_{lam, 2beta}.

    At h = 0 this is chi_lam(mu).
    """
    lam, mu = check_partition(lam), check_partition(mu)
    n = weight(mu)
    diff = n - weight(lam)
    if diff < 0 or diff % 2 != 0:
        raise ValueError(f"|mu| - |lam| = {diff} must be an even non-negative integer")
    h = diff // 2
    if h == 0:
        return character(lam, mu)
    total = 0
    for nu in partitions_of(n):
        strips = sum(lr_coefficient(nu, lam, doubled(beta)) for beta in partitions_of(h))
        if strips:
            total += character(nu, mu) * strips
    return total


def brauer_dimension(lam, n: int) -> int:
    """b_lam(1^n) = n!/((n-2h)! 2^h h!) * d_lam, the Brauer analogue of d_lam."""
    lam = check_partition(lam)
    diff = n - weight(lam)
    if diff < 0 or diff % 2 != 0:
        raise ValueError("need |lam| = n - 2h")
    h = diff // 2
    d = dimension(lam) if lam else 1
    return factorial(n) // (factorial(n - 2 * h) * 2**h * factorial(h)) * d


def p_to_o_expansion(mu) -> dict[tuple, int]:
    """Expansion coefficients of the power sum p_mu over orthogonal characters:
    map lam -> b_lam(mu) over all lam of size |mu| - 2h, h = 0..floor(|mu|/2).

    Valid in the saturated regime N > |mu|.
    """
    mu = check_partition(mu)
    n = weight(mu)
    out: dict[tuple, int] = {}
    for h in range(n // 2 + 1):
        for lam in partitions_of(n - 2 * h):
            out[lam] = brauer_character(lam, mu)
    return out


@cache
def o_char_in_power_sums(lam) -> dict[tuple, Fraction]:
    """Express the orthogonal character o_lam as a polynomial in power sums:
    map mu (partitions of |lam|, |lam|-2, ...) -> rational coefficient.

    Obtained by inverting p_mu = sum b_nu(mu) o_nu degree by degree with the
    symmetric-group character orthogonality; valid for N > |lam|.  Used to
    evaluate o_lam on sampled eigenvalues.
    """
    lam = check_partition(lam)
    m = weight(lam)
    # chi inversion: o_lam = (1/m!) sum_mu |C_mu| chi_lam(mu) (p_mu - lower),
    # where lower = sum_{h>0, nu of m-2h} b_nu(mu) o_nu, recursively expanded.
    from .combinatorics import class_size

    coeffs: dict[tuple, Fraction] = {}
    for mu in partitions_of(m):
        w = Fraction(class_size(mu) * character(lam, mu), factorial(m))
        if not w:
            continue
        coeffs[mu] = coeffs.get(mu, Fraction(0)) + w
        for h in range(1, m // 2 + 1):
            for nu in partitions_of(m - 2 * h):
                b = brauer_character(nu, mu)
                if not b:
                    continue
                for mu2, c2 in o_char_in_power_sums(nu).items():
                    coeffs[mu2] = coeffs.get(mu2, Fraction(0)) - w * b * c2
    return {mu: c for mu, c in coeffs.items() if c}
