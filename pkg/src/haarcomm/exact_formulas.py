"""
Closed-form evaluators for commutator statistics on CU(N) and CO(N).

CU(N) and CO(N) are the spaces of commutators u v u^-1 v^-1 with u, v Haar
on U(N) and O(N).  Everything here is an exact rational in N except the
eigenphase density approximations, which are floats.

Large-N expansions are Laurent series in 1/N with exact rational
coefficients, computed from the factored dimension polynomials; the
independent combinatorial expansion (Stirling numbers) is provided
alongside for cross-validation.
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cache

from scipy.special import beta as _beta_function

from .characters import character, dimension
from .combinatorics import (
    all_permutations,
    a_coeff,
    check_partition,
    class_size,
    conjugate,
    cycle_type,
    double_factorial_odd,
    durfee,
    partition_count,
    partitions_of,
    stirling2,
    weight,
)
from .weingarten import dim_poly_u, wg_o_table_gram


class Group(str, Enum):
    """Commutator ensemble selector: CU = unitary, CO = orthogonal."""

    CU = "cu"
    CO = "co"


def _as_group(kind) -> Group:
    return Group(kind.lower() if isinstance(kind, str) else kind)


class BrauerCoefficientGap(ValueError):
    """CO exact formulas need N > n: the finite-N Brauer expansion
    coefficients b_{N,lam}(mu) for N <= n have no known general algorithm,
    only the saturated large-N values are implemented."""


# --- dimension polynomials ---


def dim_poly_u_offsets(lam) -> list[int]:
    """[N]_lam as a factor list: [N]_lam = prod (N + c) over returned c."""
    return [j - i for i, part in enumerate(lam, start=1) for j in range(1, part + 1)]


def dim_poly_o_offsets(lam) -> list[int]:
    """{N}_lam as a factor list (|lam| linear factors N + c)."""
    lam = check_partition(lam)
    conj = conjugate(lam)
    offs = []
    for i in range(1, len(lam) + 1):
        for j in range(1, min(i, lam[i - 1]) + 1):
            offs.append(lam[i - 1] + lam[j - 1] - i - j)
    for i in range(1, durfee(lam) + 1):
        for j in range(i + 1, lam[i - 1] + 1):
            offs.append(-conj[i - 1] - conj[j - 1] + i + j - 2)
    assert len(offs) == weight(lam)
    return offs


def dim_poly_o(lam, N: int) -> int:
    """{N}_lam, the O(N) dimension polynomial: o_lam(1_N) = d_lam {N}_lam / n!."""
    out = 1
    for c in dim_poly_o_offsets(lam):
        out *= N + c
    return out


def schur_dim(lam, N: int) -> Fraction:
    """s_lam(1_N) = d_lam [N]_lam / n! (0 when l(lam) > N)."""
    lam = check_partition(lam)
    return Fraction(dimension(lam) * dim_poly_u(lam, N), math.factorial(weight(lam)))


def ochar_dim(lam, N: int) -> Fraction:
    """o_lam(1_N) = d_lam {N}_lam / n!."""
    lam = check_partition(lam)
    return Fraction(dimension(lam) * dim_poly_o(lam, N), math.factorial(weight(lam)))


# --- averages of irreducible characters and power sums ---


def avg_irrep_char(kind, lam, N: int) -> Fraction:
    """<s_lam(C)> = 1/s_lam(1_N) for CU, <o_lam(C)> = 1/o_lam(1_N) for CO.

    Zero for CU when l(lam) > N (the Schur polynomial vanishes identically).
    """
    group = _as_group(kind)
    lam = check_partition(lam)
    if len(lam) > N:
        return Fraction(0)
    if group is Group.CU:
        return 1 / schur_dim(lam, N)
    return 1 / ochar_dim(lam, N)


def power_sum_avg(kind, mu, N: int) -> Fraction:
    """<p_mu(C)>: the average of prod_i Tr(C^mu_i).

    CU: n! sum over lam of n with l(lam) <= N of chi_lam(mu)/(d_lam [N]_lam).
    CO: sum over h, lam of n-2h of b_lam(mu) (n-2h)!/(d_lam {N}_lam),
        with saturated Brauer characters; requires N > n.
    """
    group = _as_group(kind)
    mu = check_partition(mu)
    n = weight(mu)
    if group is Group.CU:
        total = Fraction(0)
        for lam in partitions_of(n):
            if len(lam) > N:
                continue
            total += Fraction(character(lam, mu), dimension(lam) * dim_poly_u(lam, N))
        return total * math.factorial(n)
    if N <= n:
        raise BrauerCoefficientGap(
            f"CO power sums need N > n = {n} (got N = {N}): finite-N Brauer "
            "coefficients b_{N,lam}(mu) are not implemented"
        )
    from .brauer import brauer_character

    total = Fraction(0)
    for h in range(n // 2 + 1):
        m = n - 2 * h
        for lam in partitions_of(m):
            b = brauer_character(lam, mu)
            if not b:
                continue
            d = dimension(lam) if lam else 1
            total += Fraction(
                b * math.factorial(m), d * dim_poly_o(lam, N)
            )
    return total


def trace_moment(kind, n: int, N: int) -> Fraction:
    """<(Tr C)^n>: the n-th moment of the trace."""
    return power_sum_avg(kind, (1,) * n, N)


def trace_power(kind, n: int, N: int) -> Fraction:
    """<Tr(C^n)>: the average trace of the n-th power."""
    return power_sum_avg(kind, (n,), N)


def trace_moment_asymptotic(kind, n: int) -> tuple[int, int]:
    """Leading large-N term of <(Tr C)^n> as (coefficient, power of N).

    CU: n! p(n) / N^n.  CO: (n-1)!! at N^0 for even n, n!! / N for odd n.
    """
    group = _as_group(kind)
    if group is Group.CU:
        return math.factorial(n) * partition_count(n, n), -n
    if n % 2 == 0:
        return double_factorial_odd(n // 2), 0
    return double_factorial_odd((n + 1) // 2), -1


# --- Fourier coefficients and eigenphase densities ---


def fourier_coeff(kind, n: int, N: int) -> Fraction:
    """Exact Fourier coefficient of the eigenphase density, in units of 1/pi:
    the density is 1/(2 pi) + sum_n c_{N,n} cos(n theta) and this returns
    q with c_{N,n} = q / pi.

    CU: q = <Tr C^n>/N.  CO: q = <Tr C^n>/N for even N and
    (<Tr C^n> - 1)/N for odd N (the unit eigenvalue is subtracted).
    CO requires N > n for exactness.
    """
    group = _as_group(kind)
    t = trace_power(group, n, N)
    if group is Group.CO and N % 2 == 1:
        t -= 1
    return t / N


def _dirichlet_cos_terms(N: int) -> list[int]:
    """Cosine frequencies of sin((N-1)x)/sin(x): the frequency-0 entry
    carries weight 1, every other frequency weight 2.

    sin(2kx)/sin(x)     = 2(cos x + cos 3x + ... + cos((2k-1)x))
    sin((2k+1)x)/sin(x) = 1 + 2(cos 2x + ... + cos(2kx))
    """
    if (N - 1) % 2 == 0:
        return list(range(1, N - 1, 2))
    return [0] + list(range(2, N - 1, 2))


def density_asymptotic(kind, N: int, theta: float) -> float:
    """Two-term large-N eigenphase density at angle theta.

    CU: 1/(2 pi) - ((-1)^N / (N pi)) cos(N theta).
    CO: 1/(2 pi) - (1 + (-1)^N)/(4 pi N)
        + ((-1)^N / (2 N pi)) sin((N-1) theta)/sin(theta),
    the ratio evaluated through its cosine expansion (removable
    singularities at theta = 0, pi).  For odd N this describes the N-1
    non-unit eigenphases.
    """
    group = _as_group(kind)
    sign = (-1) ** N
    if group is Group.CU:
        return 1 / (2 * math.pi) - sign / (N * math.pi) * math.cos(N * theta)
    kernel = 0.0
    for k in _dirichlet_cos_terms(N):
        kernel += (1.0 if k == 0 else 2.0) * math.cos(k * theta)
    return (
        1 / (2 * math.pi)
        - (1 + sign) / (4 * math.pi * N)
        + sign / (2 * N * math.pi) * kernel
    )


def density_bin_integral(kind, N: int, lo: float, hi: float) -> float:
    """Integral of density_asymptotic over [lo, hi] (closed form)."""
    group = _as_group(kind)
    sign = (-1) ** N
    width = hi - lo
    if group is Group.CU:
        return width / (2 * math.pi) - sign / (N * math.pi) * (
            (math.sin(N * hi) - math.sin(N * lo)) / N
        )
    total = width / (2 * math.pi) - (1 + sign) / (4 * math.pi * N) * width
    for k in _dirichlet_cos_terms(N):
        if k == 0:
            total += sign / (2 * N * math.pi) * width
        else:
            total += sign / (N * math.pi) * (math.sin(k * hi) - math.sin(k * lo)) / k
    return total


@dataclass(frozen=True)
class DensityApprox:
    """Structured two-term density: constant part 1/(2 pi), named correction,
    and the order of the neglected error."""

    kind: Group
    N: int
    error_order: str = "O(N^-2)"

    @property
    def constant(self) -> float:
        return 1 / (2 * math.pi)

    def correction(self, theta: float) -> float:
        return density_asymptotic(self.kind, self.N, theta) - self.constant

    def __call__(self, theta: float) -> float:
        return density_asymptotic(self.kind, self.N, theta)


# --- tail trace moments and large-N expansions (CU) ---


def tail_moment_cu(N: int, m: int) -> Fraction:
    """<Tr C^(N+m)> for CU(N), m >= 0, as the exact finite hook sum:
    n sum_{k=0}^{N-1} (-1)^k k! (N+m-k-1)! (N-k-1)! / (2N+m-k-1)!, n = N+m."""
    if m < 0:
        raise ValueError("m must be non-negative")
    n = N + m
    total = Fraction(0)
    for k in range(N):
        total += Fraction(
            (-1) ** k
            * math.factorial(k)
            * math.factorial(N + m - k - 1)
            * math.factorial(N - k - 1),
            math.factorial(2 * N + m - k - 1),
        )
    return n * total


def tail_moment_cu_leading(N: int, m: int) -> Fraction:
    """Leading asymptotic of tail_moment_cu: (-1)^(N-1) m! / N^m."""
    return Fraction((-1) ** (N - 1) * math.factorial(m), N**m)


def trace_power_expansion_cu(n: int, depth: int) -> list[tuple[int, Fraction]]:
    """Large-N expansion of <Tr C^n> for CU (regime N > n), from the
    combinatorial double sum with Stirling numbers of the second kind:

        <Tr C^n> = n sum_{d>=0} (-1)^d S(d+n-1, n-1)
                     sum_{m>=0} binom(d+n+m-1, m) A_{n,m} N^-(n+d+m).

    Returns [(exponent, coefficient)] for exponents -n .. -(n+depth-1).
    Cross-validate against power_sum_series, which expands the exact
    rational; leading terms are (2n) n!/(n+1) (n odd, at N^-n) and
    -n^3 n!/(n+2) (n even, at N^-(n+1)).
    """
    out = []
    for t in range(depth):
        coeff = 0
        for d in range(t + 1):
            m = t - d
            coeff += (
                (-1) ** d
                * stirling2(d + n - 1, n - 1)
                * math.comb(d + n + m - 1, m)
                * a_coeff(n, m)
            )
        out.append((-(n + t), Fraction(n * coeff)))
    return out


# --- exact Laurent series of the closed forms ---


def inv_factors_series(offsets, depth: int) -> list[Fraction]:
    """Series of prod_j 1/(1 + c_j x) to x^(depth-1), x = 1/N."""
    coeffs = [Fraction(1)] + [Fraction(0)] * (depth - 1)
    for c in offsets:
        if c == 0:
            continue
        new = [Fraction(0)] * depth
        power = Fraction(1)
        for mth in range(depth):
            for t in range(mth, depth):
                new[t] += coeffs[t - mth] * power
            power *= -c
        coeffs = new
    return coeffs


def power_sum_series(kind, mu, depth: int) -> dict[int, Fraction]:
    """Exact Laurent coefficients of <p_mu(C)> in 1/N: map exponent ->
    coefficient for exponents 0 .. -(depth-1) (exponent e means N^e).

    Expands the factored closed forms; this is the rational-function route,
    independent of trace_power_expansion_cu.
    """
    group = _as_group(kind)
    mu = check_partition(mu)
    n = weight(mu)
    acc: dict[int, Fraction] = {}

    def add_term(scalar: Fraction, offsets):
        lead = len(offsets)
        inv = inv_factors_series(offsets, depth)
        for t, c in enumerate(inv):
            e = -(lead + t)
            if -e < depth:
                acc[e] = acc.get(e, Fraction(0)) + scalar * c

    if group is Group.CU:
        for lam in partitions_of(n):
            add_term(
                Fraction(math.factorial(n) * character(lam, mu), dimension(lam)),
                dim_poly_u_offsets(lam),
            )
    else:
        from .brauer import brauer_character

        for h in range(n // 2 + 1):
            m = n - 2 * h
            for lam in partitions_of(m):
                b = brauer_character(lam, mu)
                if not b:
                    continue
                d = dimension(lam) if lam else 1
                add_term(Fraction(b * math.factorial(m), d), dim_poly_o_offsets(lam))
    return dict(sorted(acc.items(), reverse=True))


# --- element correlators ---


@cache
def f_U(pi_type, N: int) -> Fraction:
    """F^U_N(pi) = n! sum over lam of n (l(lam) <= N) of
    chi_lam(pi)/(d_lam [N]_lam^2); depends on pi through its cycle type."""
    pi_type = check_partition(pi_type)
    n = weight(pi_type)
    total = Fraction(0)
    for lam in partitions_of(n):
        if len(lam) > N:
            continue
        total += Fraction(
            character(lam, pi_type), dimension(lam) * dim_poly_u(lam, N) ** 2
        )
    return total * math.factorial(n)


def element_corr_cu(i, j, N: int) -> Fraction:
    """<prod_t C_{i_t, j_t}> for CU(N): sum of F^U_N(pi) over the
    permutations pi with i_k == j_{pi(k)} for all k."""
    n = len(i)
    if len(j) != n:
        raise ValueError("index lists must share one length")
    total = Fraction(0)
    for pi in all_permutations(n):
        if all(i[k] == j[pi[k]] for k in range(n)):
            total += f_U(cycle_type(pi), N)
    return total


@cache
def f_lambda_o(lam, N: int, mode: str = "proved") -> Fraction:
    """f_lam(N), the O(N) analogue of d_lam/[N]_lam.

    mode="proved": sum over mu of n of |C_mu| chi_lam(mu) Wg^O_N(mu)
    (Weingarten values from exact Gram inversion, needs N >= n).
    mode="conjectured": the closed form d_lam/{N}_lam.  Modes are never
    mixed silently.
    """
    lam = check_partition(lam)
    n = weight(lam)
    if mode == "conjectured":
        return Fraction(dimension(lam), dim_poly_o(lam, N))
    if mode != "proved":
        raise ValueError(f"unknown mode {mode!r}")
    wg = wg_o_table_gram(n, N)
    total = Fraction(0)
    for mu in partitions_of(n):
        total += class_size(mu) * character(lam, mu) * wg[mu]
    return total


def F_O(pi_type, N: int, mode: str = "proved") -> Fraction:
    """F^O_N(pi) = n! sum over lam of n of chi_lam(pi) f_lam(N)^2 / d_lam^3."""
    pi_type = check_partition(pi_type)
    n = weight(pi_type)
    total = Fraction(0)
    for lam in partitions_of(n):
        total += (
            Fraction(character(lam, pi_type), dimension(lam) ** 3)
            * f_lambda_o(lam, N, mode) ** 2
        )
    return total * math.factorial(n)


def element_corr_co(i, j, N: int, mode: str = "proved") -> Fraction:
    """<prod_t C_{i_t, j_t}> for CO(N), valid only when the index lists have
    no repeated entries (they are then related by a single permutation).

    Repeated indices have no closed form; use the word engine for those.
    """
    n = len(i)
    if len(j) != n:
        raise ValueError("index lists must share one length")
    if len(set(i)) != n or len(set(j)) != n:
        raise ValueError(
            "closed form requires index lists without repeated entries"
        )
    if sorted(i) != sorted(j):
        return Fraction(0)
    pos = {v: k for k, v in enumerate(j)}
    pi = tuple(pos[v] for v in i)  # i_k == j_{pi(k)}
    return F_O(cycle_type(pi), N, mode)


# --- reference element densities ---


def element_distribution_reference(kind, N: int, z: float) -> float:
    """Reference density for matrix-element histograms.

    CU: density (N-1)(1-z)^(N-2) of z = |element|^2 on [0, 1].
    CO: density of a single element on [-1, 1], (1-z^2)^((N-3)/2) normalized
    by the Beta function B(1/2, (N-1)/2).
    """
    group = _as_group(kind)
    if group is Group.CU:
        if not 0 <= z <= 1:
            return 0.0
        return (N - 1) * (1 - z) ** (N - 2)
    if not -1 <= z <= 1:
        return 0.0
    norm = float(_beta_function(0.5, (N - 1) / 2.0))
    return (1 - z * z) ** ((N - 3) / 2.0) / norm
