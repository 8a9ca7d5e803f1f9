"""Independent reference implementations used to pin expected values.

Nothing in here imports the package under test.  Each oracle is written
directly from first principles so that agreement with the library is
meaningful:

* numerical semigroups via dynamic programming over residues,
* exact truncated power series over Fraction, with binomial-series and
  fixed-point solvers good enough to parametrize the pool curves,
* determinants by permutation expansion,
* staircase (standard monomial) counting by breadth-first search.
"""

from fractions import Fraction
from itertools import permutations


# ---------------------------------------------------------------- semigroups

def semi_member(n, gens):
    """Is n a nonnegative integer combination of gens?  Plain DP."""
    if n < 0:
        return False
    reachable = [False] * (n + 1)
    reachable[0] = True
    for k in range(1, n + 1):
        for g in gens:
            if g <= k and reachable[k - g]:
                reachable[k] = True
                break
    return reachable[n]


def semi_gaps(gens):
    """All positive integers missing from the semigroup (gcd must be 1)."""
    import math
    g = 0
    for w in gens:
        g = math.gcd(g, w)
    assert g == 1, "gaps are only finite for gcd 1"
    bound = max(gens) ** 2 + 1  # crude but safe upper bound for the conductor
    reachable = [False] * (bound + 1)
    reachable[0] = True
    for k in range(1, bound + 1):
        for w in gens:
            if w <= k and reachable[k - w]:
                reachable[k] = True
                break
    return [k for k in range(1, bound + 1) if not reachable[k]]


def semi_conductor(gens):
    gaps = semi_gaps(gens)
    return 0 if not gaps else max(gaps) + 1


# ------------------------------------------------- truncated power series

# A series is a list of Fractions of fixed length N; index = t-exponent.

def s_zero(n):
    return [Fraction(0)] * n


def s_from_terms(terms, n):
    """terms: iterable of (exponent, coefficient)."""
    out = s_zero(n)
    for e, c in terms:
        if 0 <= e < n:
            out[e] += Fraction(c)
    return out


def s_add(a, b):
    return [x + y for x, y in zip(a, b)]


def s_sub(a, b):
    return [x - y for x, y in zip(a, b)]


def s_scale(c, a):
    c = Fraction(c)
    return [c * x for x in a]


def s_mul(a, b):
    n = len(a)
    out = s_zero(n)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y and i + j < n:
                    out[i + j] += x * y
    return out


def s_pow(a, k):
    n = len(a)
    out = s_from_terms([(0, 1)], n)
    for _ in range(k):
        out = s_mul(out, a)
    return out


def s_ord(a):
    for i, x in enumerate(a):
        if x:
            return i
    return None  # all shown coefficients vanish


def binom_frac(alpha, j):
    """Generalized binomial coefficient alpha over j, alpha rational."""
    alpha = Fraction(alpha)
    out = Fraction(1)
    for i in range(j):
        out *= (alpha - i) / (i + 1)
    return out


def s_unit_pow(a, alpha):
    """(1 + w)^alpha for a = 1 + w with ord(w) >= 1, alpha rational."""
    n = len(a)
    assert a[0] == 1
    w = list(a)
    w[0] = Fraction(0)
    out = s_zero(n)
    term = s_from_terms([(0, 1)], n)
    for j in range(n):
        out = s_add(out, s_scale(binom_frac(alpha, j), term))
        term = s_mul(term, w)
        if s_ord(term) is None:
            break
    return out


def poly_eval_series(poly, components):
    """Evaluate a sparse polynomial at a tuple of series.

    poly: dict mapping exponent tuples to coefficients.
    components: list of series, one per variable.
    """
    n = len(components[0]) if components else 1
    out = s_zero(n)
    for expo, coeff in poly.items():
        term = s_from_terms([(0, coeff)], n)
        for var, e in enumerate(expo):
            for _ in range(e):
                term = s_mul(term, components[var])
        out = s_add(out, term)
    return out


def branch_order(poly, components):
    """t-order of poly evaluated along one parametrized branch."""
    return s_ord(poly_eval_series(poly, components))


def intersection_via_branches(poly, branches):
    """Sum of t-orders over all branches; None when some branch kills poly."""
    total = 0
    for components in branches:
        o = branch_order(poly, components)
        if o is None:
            return None
        total += o
    return total


def fixed_point_series(update, start, n, max_iter=None):
    """Solve s = update(s) by iteration; update must raise the order of the
    correction each round.  start is a series of length n."""
    s = list(start)
    for _ in range(max_iter or (n + 2)):
        s2 = update(s)
        if s2 == s:
            return s
        s = s2
    return s


# ----------------------------------------------------------- determinants

def det_perm(rows, add, mul, neg, zero):
    """Determinant by permutation expansion with caller-supplied ring ops."""
    n = len(rows)
    total = zero
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        prod = None
        for i in range(n):
            prod = rows[i][perm[i]] if prod is None else mul(prod, rows[i][perm[i]])
        total = add(total, prod if sign > 0 else neg(prod))
    return total


# ------------------------------------------------------------- staircases

def staircase_count(generators, nvars):
    """Number of monomials outside the monomial ideal, None when infinite.

    generators: exponent tuples of the monomial ideal.  The count is finite
    exactly when each variable has a pure power among the generators.
    """
    gens = [g for g in generators if any(g)]
    if any(not any(g) for g in generators):
        return 0  # the ideal contains 1
    for i in range(nvars):
        if not any(all(e == 0 for j, e in enumerate(g) if j != i) and g[i] > 0
                   for g in gens):
            return None
    def divisible(m, g):
        return all(x >= y for x, y in zip(m, g))
    seen = set()
    stack = [(0,) * nvars]
    while stack:
        m = stack.pop()
        if m in seen or any(divisible(m, g) for g in gens):
            continue
        seen.add(m)
        for i in range(nvars):
            m2 = list(m)
            m2[i] += 1
            stack.append(tuple(m2))
    return len(seen)
