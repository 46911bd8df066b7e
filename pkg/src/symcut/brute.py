"""Exhaustive ground truth for small instances.

Everything the fast path relies on can be recomputed here by direct
enumeration: minimum bipartitions, pairwise separation values, and the
monotonicity / consistency axioms the minimizer assumes. All evaluations
go through the oracle uncapped (tau = INF), so thresholding can never mask
a discrepancy. Failed checks carry a witness.
"""

from dataclasses import dataclass

from .values import INF, set_of

MAX_ENUM = 24


@dataclass(frozen=True)
class BruteResult:
    """Best bipartition found by enumeration; the side containing element 0."""

    mask: int
    value: object

    def elements(self):
        return frozenset(set_of(self.mask))


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: tuple = None

    def __bool__(self):
        return self.ok


def _full_eval(oracle, s_mask, t_mask, cache=None):
    if cache is None:
        return oracle.eval(frozenset(set_of(s_mask)), frozenset(set_of(t_mask)), INF)
    key = (s_mask, t_mask)
    if key not in cache:
        cache[key] = oracle.eval(
            frozenset(set_of(s_mask)), frozenset(set_of(t_mask)), INF)
    return cache[key]


def brute_min_bipartition(oracle, n):
    """Minimum of d(S, V\\S) over all nontrivial S by enumeration.

    Element 0 is pinned to the S side (the complement gives the same value
    by symmetry), so 2^(n-1) - 1 evaluations suffice. Ties break toward the
    smallest bitmask.
    """
    if not 2 <= n <= MAX_ENUM:
        raise ValueError(f"enumeration supports 2 <= n <= {MAX_ENUM}")
    full = (1 << n) - 1
    best_mask = None
    best = None
    for m in range(1, full, 2):
        val = _full_eval(oracle, m, full ^ m)
        if best is None or val < best:
            best = val
            best_mask = m
    return BruteResult(best_mask, best)


def brute_lambda(oracle, n, s, t):
    """Minimum of d(S, V\\S) over all S containing s but not t."""
    if s == t:
        raise ValueError("need two distinct elements")
    if not 2 <= n <= MAX_ENUM:
        raise ValueError(f"enumeration supports 2 <= n <= {MAX_ENUM}")
    if not (0 <= s < n and 0 <= t < n):
        raise ValueError("element out of range")
    full = (1 << n) - 1
    others = [v for v in range(n) if v != s and v != t]
    best = None
    for bits in range(1 << len(others)):
        mask = 1 << s
        for i, v in enumerate(others):
            if bits >> i & 1:
                mask |= 1 << v
        val = _full_eval(oracle, mask, full ^ mask)
        if best is None or val < best:
            best = val
    return best


def check_monotone(oracle, n, tol=0.0):
    """Exhaustively check d(S, T') <= d(S, T) for all disjoint S, T and T' in T.

    Costs about 4^n cached pair evaluations; meant for n <= 6.
    """
    full = (1 << n) - 1
    cache = {}
    for s in range(1 << n):
        comp = full ^ s
        t = comp
        while True:
            d_st = _full_eval(oracle, s, t, cache)
            tp = t
            while True:
                if tp != t and _full_eval(oracle, s, tp, cache) > d_st + tol:
                    return CheckResult(False, (s, t, tp))
                if tp == 0:
                    break
                tp = (tp - 1) & t
            if t == 0:
                break
            t = (t - 1) & comp
    return CheckResult(True)


def check_consistent(oracle, n, tol=0.0):
    """Exhaustively check consistency on all pairwise disjoint triples.

    For disjoint R, S, T: d(S,R) >= d(T,R) must imply
    d(S, R|T) >= d(S|R, T). Costs about 4^n cached comparisons; n <= 6.
    """
    full = (1 << n) - 1
    cache = {}
    for r in range(1 << n):
        rest = full ^ r
        s = rest
        while True:
            rest2 = rest ^ s
            t = rest2
            while True:
                if _full_eval(oracle, s, r, cache) >= _full_eval(oracle, t, r, cache) - tol:
                    lhs = _full_eval(oracle, s, r | t, cache)
                    rhs = _full_eval(oracle, s | r, t, cache)
                    if lhs < rhs - tol:
                        return CheckResult(False, (r, s, t))
                if t == 0:
                    break
                t = (t - 1) & rest2
            if s == 0:
                break
            s = (s - 1) & rest
    return CheckResult(True)


def check_symmetric_submodular(table):
    """(symmetric, submodular) verdict for an explicit set function.

    Symmetric: f(A) = f(V\\A) for every A. Submodular:
    f(S) + f(T) >= f(S|T) + f(S&T) for every pair. Exhaustive, so keep n
    small (the pair loop is 4^n).
    """
    n = table.n
    full = (1 << n) - 1
    f = table.table_values
    symmetric = all(f[a] == f[full ^ a] for a in range(1 << n))
    submodular = True
    for s in range(1 << n):
        for t in range(s, 1 << n):
            if f[s] + f[t] < f[s | t] + f[s & t]:
                submodular = False
                break
        if not submodular:
            break
    return symmetric, submodular


def verify_lax_back_order(oracle, blocks, order, tau=None, tol=0.0):
    """Re-check the defining back-order inequality from scratch.

    `blocks` maps class labels to member sets. For every prefix position i
    and every later class j, min(tau, d(class_i, prefix before i)) must be
    at least min(tau, d(class_j, same prefix)). Evaluations are uncapped.
    """
    seq = order.order
    if tau is None:
        tau = order.threshold
    k = len(seq)
    prefix = frozenset(blocks[seq[0]])
    for i in range(1, k):
        own = min(tau, oracle.eval(frozenset(blocks[seq[i]]), prefix, INF))
        for j in range(i + 1, k):
            later = min(tau, oracle.eval(frozenset(blocks[seq[j]]), prefix, INF))
            if own < later - tol:
                return CheckResult(False, (i, j))
        prefix = prefix | blocks[seq[i]]
    return CheckResult(True)
