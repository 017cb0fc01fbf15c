"""
Integer partitions, permutations and elementary counting functions.

Conventions used throughout the package:

- A partition is a tuple of weakly decreasing positive integers, e.g. (3, 1).
  The empty partition is ().
- A permutation of n points is a tuple in word form, [x(0), ..., x(n-1)],
  acting on {0, ..., n-1}.
- Exact scalars are `fractions.Fraction` values (kept reduced with positive
  denominator by the class itself); `ExactScalar` is an alias.
"""

from fractions import Fraction
from functools import cache
from itertools import permutations as _perm_words
from math import factorial

ExactScalar = Fraction

Partition = tuple
Permutation = tuple


def is_partition(lam) -> bool:
    """True if lam is a weakly decreasing tuple of positive integers."""
    return all(a >= 1 for a in lam) and all(
        lam[i] >= lam[i + 1] for i in range(len(lam) - 1)
    )


def check_partition(lam):
    """Validate a partition, returning it as a tuple."""
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam!r}")
    return lam


def weight(lam) -> int:
    """Sum of the parts (the number being partitioned)."""
    return sum(lam)


@cache
def partitions_of(n: int, max_parts: int | None = None) -> tuple[tuple[int, ...], ...]:
    """
    All partitions of n with at most max_parts parts (unbounded if None),
    in reverse lexicographic order: (n) first, (1,...,1) last.

    >>> partitions_of(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    >>> partitions_of(4, 2)
    ((4,), (3, 1), (2, 2))
    >>> partitions_of(0)
    ((),)
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    limit = n if max_parts is None else min(max_parts, n)

    def gen(remaining, largest, room):
        if remaining == 0:
            yield ()
            return
        if room == 0:
            return
        for part in range(min(largest, remaining), 0, -1):
            for rest in gen(remaining - part, part, room - 1):
                yield (part,) + rest

    return tuple(gen(n, n, limit))


@cache
def partition_count(n: int, max_parts: int) -> int:
    """Number of partitions of n with at most max_parts parts, p(n, N)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if max_parts < 1:
        raise ValueError("max_parts must be positive")
    if n == 0:
        return 1
    # count[m] = partitions of m using parts of size <= current bound,
    # with at most max_parts parts, built by conjugation: at most N parts
    # equals largest part at most N.
    count = [0] * (n + 1)
    count[0] = 1
    for part in range(1, min(max_parts, n) + 1):
        for m in range(part, n + 1):
            count[m] += count[m - part]
    return count[n]


def conjugate(lam) -> tuple[int, ...]:
    """Transpose of the Young diagram: conjugate((3, 1)) == (2, 1, 1)."""
    if not lam:
        return ()
    cols = [0] * lam[0]
    for part in lam:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def durfee(lam) -> int:
    """Size of the Durfee square: the largest i with lam[i-1] >= i."""
    d = 0
    for i, part in enumerate(lam, start=1):
        if part >= i:
            d = i
        else:
            break
    return d


def multiplicities(lam) -> dict[int, int]:
    """Map part size -> multiplicity."""
    mult: dict[int, int] = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    return mult


def zee(lam) -> int:
    """Order of the centralizer of a permutation of cycle type lam:
    z_lam = prod_i i^{m_i} m_i!."""
    z = 1
    for part, m in multiplicities(lam).items():
        z *= part**m * factorial(m)
    return z


def class_size(lam) -> int:
    """Size of the conjugacy class of cycle type lam in S_n, n!/z_lam."""
    return factorial(weight(lam)) // zee(lam)


# --- permutations (word form on {0..n-1}) ---


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def compose(p, q) -> tuple[int, ...]:
    """Composition p after q: (p o q)(i) = p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, pi in enumerate(p):
        inv[pi] = i
    return tuple(inv)


def all_permutations(n: int):
    """All permutations of {0..n-1} in word form (lexicographic order)."""
    return _perm_words(range(n))


def cycles(p) -> list[tuple[int, ...]]:
    """Disjoint cycles of p, each starting at its smallest element."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        out.append(tuple(cyc))
    return out


def cycle_type(p) -> tuple[int, ...]:
    """Cycle type of a permutation as a partition of n.

    >>> cycle_type((1, 2, 0))
    (3,)
    >>> cycle_type((1, 0, 2))
    (2, 1)
    """
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def cycle_count(p) -> int:
    """Number of cycles of p, fixed points included."""
    return len(cycles(p))


# --- special sequences ---


@cache
def stirling2(a: int, b: int) -> int:
    """Stirling number of the second kind S(a, b)."""
    if a < 0 or b < 0:
        raise ValueError("arguments must be non-negative")
    if a == b:
        return 1
    if b == 0 or b > a:
        return 0
    return b * stirling2(a - 1, b) + stirling2(a - 1, b - 1)


def a_coeff(n: int, m: int) -> int:
    """The integer A_{n,m} = sum_{k=0}^{n-1} (-1)^k k! (n-k-1)! k^m,
    with the 0^0 = 1 convention required by the m = 0 term."""
    total = 0
    for k in range(n):
        km = 1 if m == 0 else k**m
        total += (-1) ** k * factorial(k) * factorial(n - k - 1) * km
    return total


def double_factorial_odd(n: int) -> int:
    """(2n-1)!! = 1*3*5*...*(2n-1), the number of perfect matchings of 2n points."""
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


def set_partitions(items):
    """All set partitions of a sequence, as tuples of blocks (tuples).

    Blocks are ordered by first occurrence; sizes up to Bell(len(items)).
    """
    items = list(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for sub in set_partitions(rest):
        yield ((first,),) + sub
        for i, block in enumerate(sub):
            yield sub[:i] + ((first,) + block,) + sub[i + 1 :]
