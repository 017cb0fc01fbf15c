"""
Brute-force exact oracle for commutator matrix-element averages.

Each factor C_{ij} (or its conjugate) is expanded into its four matrix
factors, the u- and v-averages are replaced by their Weingarten double
sums, and the resulting network of index-equality constraints is contracted
by union-find: every free internal component contributes a factor N, and a
component containing two distinct fixed external values kills the term.

The pair sums over permutations (U) or matchings (O) are enumerated once
per canonical index pattern and stored as integer tables keyed by the two
Weingarten types; evaluation at any N is then a cheap weighted sum.  This
makes the cost independent of N and lets exact values at many N be
interpolated into the underlying rational function of N.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .combinatorics import (
    all_permutations,
    compose,
    cycle_type,
    inverse,
    set_partitions,
)
from .exact_formulas import Group, _as_group, inv_factors_series
from .matchings import all_matchings, joint_coset_type
from .weingarten import wg_o_table_gram, wg_u_table_char

MAX_DEGREE = 4


@dataclass(frozen=True)
class MomentRequest:
    """A product of commutator matrix elements to average.

    rows[t], cols[t] are the indices of the t-th factor C_{rows[t], cols[t]}
    (1-based values, only their coincidence pattern matters); conj[t] marks
    the factor as conjugated (CU only).
    """

    group: Group
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    conj: tuple[bool, ...]
    N: int

    def __post_init__(self):
        object.__setattr__(self, "group", _as_group(self.group))
        if not (len(self.rows) == len(self.cols) == len(self.conj)):
            raise ValueError("rows, cols, conj must share one length")
        if len(self.rows) > MAX_DEGREE:
            raise ValueError(
                f"degree {len(self.rows)} exceeds the oracle cap {MAX_DEGREE}"
            )
        if self.group is Group.CO and any(self.conj):
            raise ValueError("conjugate factors are meaningless for CO (real entries)")


def commutator_moment(req: MomentRequest) -> Fraction:
    """< prod_t C_{rows[t], cols[t]} (conj where flagged) > as an exact rational."""
    rows, cols, conj = _canonical_pattern(req.rows, req.cols, req.conj)
    table = _pattern_table(req.group, (rows, cols), conj)
    return _evaluate(req.group, table, len(req.rows), req.N)


def element_moment(group, rows, cols, N: int, conj=None) -> Fraction:
    """Convenience wrapper around commutator_moment."""
    rows, cols = tuple(rows), tuple(cols)
    conj = tuple(bool(c) for c in conj) if conj is not None else (False,) * len(rows)
    return commutator_moment(MomentRequest(group, rows, cols, conj, N))


def _relabel(rows, cols):
    labels: dict[int, int] = {}
    flat = []
    for v in rows + cols:
        if v not in labels:
            labels[v] = len(labels)
        flat.append(labels[v])
    k = len(rows)
    return tuple(flat[:k]), tuple(flat[k:])


@cache
def _canonical_pattern(rows, cols, conj):
    """Canonical representative of an index pattern.

    Moments are invariant under relabelling index values (conjugation by a
    permutation matrix), reordering factors (commutativity) and flipping
    every conjugation flag (the ensemble is closed under entrywise
    conjugation), so one contraction table serves the whole orbit.
    """
    from itertools import permutations as factor_orders

    k = len(rows)
    best = None
    for order in factor_orders(range(k)):
        for flip in (False, True):
            r = tuple(rows[t] for t in order)
            c = tuple(cols[t] for t in order)
            f = tuple(conj[t] ^ flip for t in order)
            cand = _relabel(r, c) + (f,)
            if best is None or cand < best:
                best = cand
    return best


def _evaluate(group: Group, table, k: int, N: int) -> Fraction:
    if group is Group.CU:
        wg = wg_u_table_char(k, N)
    else:
        wg = wg_o_table_gram(k, N)
    total = Fraction(0)
    for (t_u, t_v), powers in table.items():
        weight = wg[t_u] * wg[t_v]
        poly = sum(count * N**c for c, count in powers.items())
        total += weight * poly
    return total


@cache
def _pattern_table(group: Group, pattern, conj):
    """Contraction table for one canonical index pattern.

    Maps (type of the u-average Weingarten argument, type of the v-average
    one) to {free-component count: multiplicity}, summed over all label
    pairs of both averages.
    """
    rows, cols = pattern
    k = len(rows)
    n_ext = 1 + max(max(rows), max(cols))
    # internal slots per factor t: k_t, l_t, m_t
    k_slot = [n_ext + 3 * t for t in range(k)]
    l_slot = [n_ext + 3 * t + 1 for t in range(k)]
    m_slot = [n_ext + 3 * t + 2 for t in range(k)]
    n_slots = n_ext + 3 * k

    # factor slot lists; C: u_{ik} v_{kl} u*_{ml} v*_{jm},
    #                C*: u*_{ik} v*_{kl} u_{ml} v_{jm}
    u_rows, u_cols, us_rows, us_cols = [], [], [], []
    v_rows, v_cols, vs_rows, vs_cols = [], [], [], []
    for t in range(k):
        plain_u = (rows[t], k_slot[t])
        star_u = (m_slot[t], l_slot[t])
        plain_v = (k_slot[t], l_slot[t])
        star_v = (cols[t], m_slot[t])
        if conj[t]:
            plain_u, star_u = star_u, plain_u
            plain_v, star_v = star_v, plain_v
        u_rows.append(plain_u[0]), u_cols.append(plain_u[1])
        us_rows.append(star_u[0]), us_cols.append(star_u[1])
        v_rows.append(plain_v[0]), v_cols.append(plain_v[1])
        vs_rows.append(star_v[0]), vs_cols.append(star_v[1])

    if group is Group.CU:
        u_choices = _perm_pair_choices(k, u_rows, u_cols, us_rows, us_cols)
        v_choices = _perm_pair_choices(k, v_rows, v_cols, vs_rows, vs_cols)
    else:
        # O(N): the u-average covers the 2k factors u_{ik}, u_{ml} in the
        # interleaved order; matchings pair slots within one family
        u_all_rows = _interleave(u_rows, us_rows)
        u_all_cols = _interleave(u_cols, us_cols)
        v_all_rows = _interleave(v_rows, vs_rows)
        v_all_cols = _interleave(v_cols, vs_cols)
        u_choices = _matching_pair_choices(k, u_all_rows, u_all_cols)
        v_choices = _matching_pair_choices(k, v_all_rows, v_all_cols)

    table: dict[tuple, dict[int, int]] = {}
    rng_ext = range(n_ext)
    rng_int = range(n_ext, n_slots)
    for t_u, pairs_u in u_choices:
        for t_v, pairs_v in v_choices:
            parent = list(range(n_slots))
            for a, b in pairs_u:
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                while parent[b] != b:
                    parent[b] = parent[parent[b]]
                    b = parent[b]
                if a != b:
                    parent[a] = b
            for a, b in pairs_v:
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                while parent[b] != b:
                    parent[b] = parent[parent[b]]
                    b = parent[b]
                if a != b:
                    parent[a] = b
            ext_roots = []
            ok = True
            for s in rng_ext:
                r = s
                while parent[r] != r:
                    r = parent[r]
                if r in ext_roots:
                    ok = False
                    break
                ext_roots.append(r)
            if not ok:
                continue
            free = 0
            counted = []
            for s in rng_int:
                r = s
                while parent[r] != r:
                    r = parent[r]
                if r not in counted:
                    counted.append(r)
                    if r not in ext_roots:
                        free += 1
            key = (t_u, t_v)
            powers = table.setdefault(key, {})
            powers[free] = powers.get(free, 0) + 1
    return table


def _perm_pair_choices(k, rows, cols, srows, scols):
    """All (sigma, tau) of the U(N) double sum as (Weingarten cycle type,
    merge pairs): tau pairs star-rows with rows, sigma star-cols with cols."""
    perms = list(all_permutations(k))
    out = []
    for tau in perms:
        row_pairs = tuple((srows[s], rows[tau[s]]) for s in range(k))
        for sigma in perms:
            col_pairs = tuple((scols[s], cols[sigma[s]]) for s in range(k))
            t = cycle_type(compose(inverse(sigma), tau))
            out.append((t, row_pairs + col_pairs))
    return out


def _matching_pair_choices(k, rows, cols):
    """All (sigma, tau) of the O(N) double sum as (joint coset type, merge
    pairs): tau pairs row slots per its blocks, sigma pairs col slots."""
    ms = list(all_matchings(k))
    out = []
    for tau in ms:
        row_pairs = tuple((rows[a - 1], rows[b - 1]) for a, b in tau)
        for sigma in ms:
            col_pairs = tuple((cols[a - 1], cols[b - 1]) for a, b in sigma)
            out.append((joint_coset_type(sigma, tau), row_pairs + col_pairs))
    return out


def _interleave(xs, ys):
    out = []
    for x, y in zip(xs, ys):
        out.extend((x, y))
    return out


# --- traced moments ---


def trace_product_moment(group, parts, N: int) -> Fraction:
    """< prod over parts (m, conj) of Tr(C^m) or its conjugate >.

    Each traced power Tr(C^m) is a cyclic word of m commutator factors over
    m summed indices; the full index sum is organized by coincidence
    pattern: sum over set partitions of the index slots, weighted by the
    number N(N-1)...(N-blocks+1) of value assignments realizing each
    pattern exactly.
    """
    group = _as_group(group)
    parts = tuple((int(m), bool(c)) for m, c in parts)
    total_deg = sum(m for m, _ in parts)
    if total_deg > MAX_DEGREE:
        raise ValueError(f"total degree {total_deg} exceeds cap {MAX_DEGREE}")
    rows_slots, cols_slots, conj = [], [], []
    base = 0
    for m, c in parts:
        for a in range(m):
            rows_slots.append(base + a)
            cols_slots.append(base + (a + 1) % m)
            conj.append(c)
        base += m
    total = Fraction(0)
    for blocks in set_partitions(range(base)):
        label = {}
        for bi, block in enumerate(blocks):
            for s in block:
                label[s] = bi + 1
        rows = tuple(label[s] for s in rows_slots)
        cols = tuple(label[s] for s in cols_slots)
        mult = 1
        for j in range(len(blocks)):
            mult *= N - j
        if mult == 0:
            continue
        total += mult * element_moment(group, rows, cols, N, conj)
    return total


def trace_mixed_moment(group, a: int, b: int, N: int) -> Fraction:
    """< (Tr C)^a (conj Tr C)^b > via the element oracle (a + b <= 4)."""
    return trace_product_moment(group, ((1, False),) * a + ((1, True),) * b, N)


# --- exact large-N expansion of oracle values ---


def _newton_coeffs(xs, ys):
    """Power-basis coefficients of the interpolating polynomial (exact)."""
    divided = list(ys)
    m = len(xs)
    for level in range(1, m):
        for i in range(m - 1, level - 1, -1):
            divided[i] = Fraction(divided[i] - divided[i - 1], xs[i] - xs[i - level])
    coeffs = [Fraction(0)] * m
    # Horner expansion of the Newton form
    for i in range(m - 1, -1, -1):
        new = [Fraction(0)] * m
        for d in range(m - 1):
            new[d + 1] += coeffs[d]
        for d in range(m):
            new[d] -= coeffs[d] * xs[i]
        new[0] += divided[i]
        coeffs = new
    return coeffs


def trace_mixed_series_u(a: int, b: int, depth: int) -> dict[int, Fraction]:
    """Exact Laurent coefficients in 1/N of <(Tr C)^a (conj Tr C)^b> on CU.

    The value is a rational function with denominator dividing
    D(N)^2, D(N) = N^2 prod_{j<K} (N^2 - j^2), K = a + b; it is recovered by
    exact interpolation from oracle evaluations at enough integer N (with
    surplus points double-checking the degree bound), then expanded.
    """
    K = a + b
    den_offsets = []
    for _ in range(2):
        den_offsets.extend([0, 0])
        for j in range(1, K):
            den_offsets.extend([j, -j])
    deg = len(den_offsets)  # value is bounded, so numerator degree = deg
    xs = list(range(K + 1, K + 1 + deg + 1 + 6))
    ys = []
    for N in xs:
        d2 = 1
        for c in den_offsets:
            d2 *= N + c
        ys.append(trace_mixed_moment(Group.CU, a, b, N) * d2)
    coeffs = _newton_coeffs(xs[: deg + 1], ys[: deg + 1])
    for x_extra, y_extra in zip(xs[deg + 1 :], ys[deg + 1 :]):
        val = sum(c * x_extra**d for d, c in enumerate(coeffs))
        if val != y_extra:
            raise AssertionError("degree bound for the oracle rational failed")
    inv = inv_factors_series(den_offsets, depth + deg + 1)
    series: dict[int, Fraction] = {}
    for d, c in enumerate(coeffs):
        if not c:
            continue
        for t, ic in enumerate(inv):
            e = d - len(den_offsets) - t
            if -depth < e <= 0:
                series[e] = series.get(e, Fraction(0)) + c * ic
    return dict(sorted(series.items(), reverse=True))
