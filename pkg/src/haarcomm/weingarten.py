"""
Exact Weingarten functions for U(N) and O(N), plus raw Haar moments.

Two independent routes are provided for U(N):

- the character sum  Wg_N(mu) = (1/n!) sum_{lam, l(lam)<=N} d_lam chi_lam(mu) / [N]_lam,
- inversion of the Gram matrix G(sigma, tau) = N^{#cycles(sigma tau^-1)} over S_n.

For O(N) only the Gram route is used: G(sigma, tau) = N^{l(joint coset type)}
over perfect matchings, inverted for N >= n.  One fraction-free solve of
G x = e_identity yields the whole table; entries are grouped by cycle or
coset type and checked for consistency.
"""

from fractions import Fraction
from functools import cache
from math import factorial

from .characters import character, dimension
from .combinatorics import (
    all_permutations,
    compose,
    cycle_count,
    cycle_type,
    identity_perm,
    inverse,
    partitions_of,
)
from .matchings import all_matchings, coset_type, joint_coset_type, trivial_matching


class SingularGramError(ValueError):
    """Raised when a Weingarten Gram matrix is not invertible (N too small)."""


def solve_integer_system(matrix, rhs) -> list[Fraction]:
    """Solve A x = b exactly for integer A (square) and integer b.

    Fraction-free (Bareiss) forward elimination keeps all intermediates as
    integers; back substitution returns Fractions.  Raises SingularGramError
    if A is singular.
    """
    m = len(matrix)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    prev = 1
    for k in range(m):
        pivot_row = next((r for r in range(k, m) if aug[r][k] != 0), None)
        if pivot_row is None:
            raise SingularGramError("singular matrix in exact solve")
        if pivot_row != k:
            aug[k], aug[pivot_row] = aug[pivot_row], aug[k]
        akk = aug[k][k]
        for i in range(k + 1, m):
            aik = aug[i][k]
            row_i, row_k = aug[i], aug[k]
            for j in range(k + 1, m + 1):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    x = [Fraction(0)] * m
    for i in range(m - 1, -1, -1):
        s = Fraction(aug[i][m])
        for j in range(i + 1, m):
            s -= aug[i][j] * x[j]
        x[i] = s / aug[i][i]
    return x


# --- unitary group ---


def dim_poly_u(lam, N: int) -> int:
    """[N]_lam = prod over cells (i,j) of (N + j - i); vanishes iff l(lam) > N."""
    out = 1
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            out *= N + j - i
    return out


@cache
def wg_u_table_char(n: int, N: int) -> dict[tuple, Fraction]:
    """Weingarten table for U(N) from the character sum, all cycle types of n.

    Valid for every N >= 1 (the sum restricts to l(lam) <= N).
    """
    table = {}
    lams = [lam for lam in partitions_of(n) if len(lam) <= N]
    for mu in partitions_of(n):
        total = Fraction(0)
        for lam in lams:
            total += Fraction(
                dimension(lam) * character(lam, mu), dim_poly_u(lam, N)
            )
        table[mu] = total / factorial(n)
    return table


def wg_u_char(mu, N: int) -> Fraction:
    """Wg^U_N at a permutation of cycle type mu, by the character formula."""
    return wg_u_table_char(sum(mu), N)[tuple(mu)]


@cache
def wg_u_table_gram(n: int, N: int) -> dict[tuple, Fraction]:
    """Weingarten table for U(N) by exact inversion of the S_n Gram matrix.

    Requires N >= n for invertibility; one solve gives the whole table and
    the entries are checked to depend only on the cycle type.
    """
    perms = list(all_permutations(n))
    gram = [
        [N ** cycle_count(compose(p, inverse(q))) for q in perms] for p in perms
    ]
    e_id = [1 if p == identity_perm(n) else 0 for p in perms]
    try:
        col = solve_integer_system(gram, e_id)
    except SingularGramError:
        raise SingularGramError(
            f"U(N) Gram matrix over S_{n} is singular at N={N} (need N >= n)"
        ) from None
    table: dict[tuple, Fraction] = {}
    for p, val in zip(perms, col):
        t = cycle_type(p)
        if t in table:
            assert table[t] == val, "Gram inverse not a class function"
        else:
            table[t] = val
    return table


def wg_u_gram(mu, N: int) -> Fraction:
    """Wg^U_N at cycle type mu via Gram inversion (cross-validation path)."""
    return wg_u_table_gram(sum(mu), N)[tuple(mu)]


def haar_moment_u(i, j, q, p, N: int) -> Fraction:
    """< prod_t u_{i_t j_t} u*_{q_t p_t} > over Haar U(N).

    The double sum over sigma, tau in S_n of
    delta_tau(q, i) delta_sigma(p, j) Wg^U_N(sigma^-1 tau),
    with delta_sigma(a, b) = prod_k [a_k == b_{sigma(k)}].
    """
    n = len(i)
    if not (len(j) == len(q) == len(p) == n):
        raise ValueError("index lists must share one length")
    wg = wg_u_table_char(n, N)
    total = Fraction(0)
    perms = list(all_permutations(n))
    taus = [t for t in perms if all(q[k] == i[t[k]] for k in range(n))]
    sigmas = [s for s in perms if all(p[k] == j[s[k]] for k in range(n))]
    for tau in taus:
        for sigma in sigmas:
            total += wg[cycle_type(compose(inverse(sigma), tau))]
    return total


# --- orthogonal group ---


@cache
def wg_o_table_gram(n: int, N: int) -> dict[tuple, Fraction]:
    """Weingarten table for O(N): exact inverse of the matching Gram matrix.

    Gram entry for (sigma, tau) is N^(number of components of the joined
    diagram) = N^(l(joint coset type)).  Requires N >= n.
    """
    ms = list(all_matchings(n))
    gram = [[N ** len(joint_coset_type(a, b)) for b in ms] for a in ms]
    e_triv = [1 if m == trivial_matching(n) else 0 for m in ms]
    try:
        col = solve_integer_system(gram, e_triv)
    except SingularGramError:
        raise SingularGramError(
            f"O(N) Gram matrix over matchings of 2*{n} points is singular "
            f"at N={N} (need N >= n)"
        ) from None
    table: dict[tuple, Fraction] = {}
    for m, val in zip(ms, col):
        t = coset_type(m)
        if t in table:
            assert table[t] == val, "Gram inverse not a class function"
        else:
            table[t] = val
    return table


def wg_o_gram(coset, N: int) -> Fraction:
    """Wg^O_N at a given coset type via Gram inversion (N >= n)."""
    return wg_o_table_gram(sum(coset), N)[tuple(coset)]


def haar_moment_o(i, j, N: int) -> Fraction:
    """< prod_{t=1}^{2n} u_{i_t j_t} > over Haar O(N).

    Sum over matching pairs of Delta_tau(i) Delta_sigma(j) weighted by the
    Weingarten value of their joint coset type.
    """
    if len(i) != len(j) or len(i) % 2 != 0:
        raise ValueError("index lists must share one even length")
    n = len(i) // 2
    wg = wg_o_table_gram(n, N)
    ms = all_matchings(n)
    taus = [t for t in ms if _delta_holds(t, i)]
    sigmas = [s for s in ms if _delta_holds(s, j)]
    total = Fraction(0)
    for tau in taus:
        for sigma in sigmas:
            total += wg[joint_coset_type(sigma, tau)]
    return total


def _delta_holds(m, values) -> bool:
    return all(values[a - 1] == values[b - 1] for a, b in m)
