"""
Perfect matchings of {1..2n} and the Brauer monoid product.

A matching is stored canonically as a tuple of n pairs: each pair sorted,
pairs sorted by first element, points labelled 1..2n.  Odd points 2i-1 play
the role of the i-th "first list" slot and even points 2i the i-th "second
list" slot, matching the interleave convention (i1, m1, i2, m2, ...) used
when two-index families are contracted.

The product joins diagrams: the even (second-list) points of the left
factor are identified with the odd (first-list) points of the right factor;
closed loops formed among identified points are counted and discarded.
"""

from functools import cache

from .combinatorics import cycles, double_factorial_odd


def trivial_matching(n: int) -> tuple[tuple[int, int], ...]:
    """{{1,2},{3,4},...,{2n-1,2n}}."""
    return tuple((2 * i + 1, 2 * i + 2) for i in range(n))


def canonical(blocks) -> tuple[tuple[int, int], ...]:
    """Canonical form: pairs sorted internally, then by first element."""
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def check_matching(m) -> tuple[tuple[int, int], ...]:
    """Validate that m is a perfect matching of {1..2n}; return canonical form."""
    m = canonical(m)
    points = [p for b in m for p in b]
    if sorted(points) != list(range(1, 2 * len(m) + 1)):
        raise ValueError(f"not a perfect matching of 1..2n: {m!r}")
    return m


@cache
def all_matchings(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """All (2n-1)!! matchings of {1..2n}, deterministic order.

    Order: recursively pair the smallest free point with each larger free
    point in increasing order.
    """

    def gen(points):
        if not points:
            yield ()
            return
        first = points[0]
        for i in range(1, len(points)):
            pair = (first, points[i])
            rest = points[1:i] + points[i + 1 :]
            for sub in gen(rest):
                yield (pair,) + sub

    out = tuple(gen(tuple(range(1, 2 * n + 1))))
    assert len(out) == double_factorial_odd(n)
    return out


def _partner_map(m) -> dict[int, int]:
    partner = {}
    for a, b in m:
        partner[a] = b
        partner[b] = a
    return partner


def joint_coset_type(a, b) -> tuple[int, ...]:
    """Coset type of the pair (a, b): half the sizes of the connected
    components of the union of the two matchings on the same 2n points,
    sorted decreasingly.  Symmetric in a and b."""
    pa, pb = _partner_map(a), _partner_map(b)
    seen = set()
    sizes = []
    for start in pa:
        if start in seen:
            continue
        size = 0
        p = start
        while p not in seen:
            seen.add(p)
            size += 1
            p = pa[p]
            if p in seen:
                break
            seen.add(p)
            size += 1
            p = pb[p]
        sizes.append(size // 2)
    return tuple(sorted(sizes, reverse=True))


def coset_type(m) -> tuple[int, ...]:
    """Coset type of a matching: its joint type with the trivial matching."""
    return joint_coset_type(m, trivial_matching(len(m)))


def is_permutational(m) -> bool:
    """True if every block pairs an odd point with an even point."""
    return all((a + b) % 2 == 1 for a, b in m)


def perm_from_matching(m) -> tuple[int, ...]:
    """The permutation word of a permutational matching:
    block {2i-1, 2j} maps i to j (returned 0-indexed)."""
    if not is_permutational(m):
        raise ValueError(f"matching is not permutational: {m!r}")
    word = [0] * len(m)
    for a, b in m:
        odd, even = (a, b) if a % 2 == 1 else (b, a)
        word[(odd - 1) // 2] = even // 2 - 1
    return tuple(word)


def matching_from_perm(p) -> tuple[tuple[int, int], ...]:
    """Inverse of perm_from_matching: i -> j becomes the block {2i-1, 2j}."""
    return canonical((2 * i + 1, 2 * (j + 1)) for i, j in enumerate(p))


def brauer_product(a, b) -> tuple[tuple[tuple[int, int], ...], int]:
    """Brauer monoid product (a o b, loops).

    The even points of a are identified with the odd points of b; paths
    ending at the outer points (odd of a / even of b) form the product
    matching, closed cycles among identified points are counted as loops
    and discarded.

    For permutational a, b the loop count is zero and the product carries
    the a-then-b composite: word(a o b) == compose(word(b), word(a)).  This
    is the convention under which the two-family contraction identity holds:
    sum over the middle list m of Delta_a(i <> m) Delta_b(m <> l) equals
    N^loops * Delta_{a o b}(i <> l).
    """
    n = len(a)
    if len(b) != n:
        raise ValueError("size mismatch")
    # vertices: ('i', t) outer rows of a, ('m', t) middle, ('l', t) outer
    # cols of b, with t = 1..n
    adj: dict[tuple[str, int], list[tuple[str, int]]] = {}

    def add_edge(u, v):
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)

    def vertex_a(p):
        return ("i", (p + 1) // 2) if p % 2 == 1 else ("m", p // 2)

    def vertex_b(p):
        return ("m", (p + 1) // 2) if p % 2 == 1 else ("l", p // 2)

    for x, y in a:
        add_edge(vertex_a(x), vertex_a(y))
    for x, y in b:
        add_edge(vertex_b(x), vertex_b(y))

    seen = set()
    blocks = []
    loops = 0
    for start in adj:
        if start in seen:
            continue
        # walk the component; middle vertices have degree 2, outer degree 1
        component = []
        stack = [start]
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            component.append(u)
            stack.extend(v for v in adj[u] if v not in seen)
        ends = [v for v in component if v[0] != "m"]
        if not ends:
            loops += 1
            continue
        assert len(ends) == 2, "open path must have exactly two outer ends"
        blocks.append(tuple(_outer_point(v) for v in ends))
    return canonical(blocks), loops


def _outer_point(v) -> int:
    kind, t = v
    return 2 * t - 1 if kind == "i" else 2 * t


def delta_eval(m, indices) -> int:
    """1 if the 2n index values are pairwise equal per the matching, else 0.

    indices[p-1] is the value carried by point p.
    """
    if len(indices) != 2 * len(m):
        raise ValueError("index list must have length 2n")
    for a, b in m:
        if indices[a - 1] != indices[b - 1]:
            return 0
    return 1


def matching_inverse(m) -> tuple[tuple[int, int], ...]:
    """Swap the roles of odd and even points (2i-1 <-> 2i).

    For permutational matchings this is the inverse permutation.
    """
    flip = lambda p: p + 1 if p % 2 == 1 else p - 1
    return canonical((flip(a), flip(b)) for a, b in m)


def cycle_type_of_perm_matching(m) -> tuple[int, ...]:
    """Cycle type of the permutation carried by a permutational matching."""
    word = perm_from_matching(m)
    return tuple(sorted((len(c) for c in cycles(word)), reverse=True))
