"""Integer kernels of exponent matrices."""

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix


def integer_kernel(rows):
    """Z-basis of ``{x in Z^n : A x = 0}`` for the integer matrix ``A`` given by rows.

    Works on the stacked matrix ``[A^T | I]`` with unimodular row operations
    (extended-gcd pivoting), so no fractions appear and the returned lattice is
    saturated: it is the full integer kernel, not a finite-index sublattice.
    """
    r = len(rows)
    if r == 0:
        return []
    n = len(rows[0])
    work = [[rows[i][j] for i in range(r)] + [int(k == j) for k in range(n)] for j in range(n)]
    piv = 0
    for col in range(r):
        # gcd-combine every row below the pivot into the pivot row
        for k in range(piv + 1, n):
            if work[k][col] == 0:
                continue
            if work[piv][col] == 0:
                work[piv], work[k] = work[k], work[piv]
                continue
            a, b = work[piv][col], work[k][col]
            g, s, t = _xgcd(a, b)
            ua, ub = a // g, b // g
            top = [s * x + t * y for x, y in zip(work[piv], work[k])]
            bot = [-ub * x + ua * y for x, y in zip(work[piv], work[k])]
            work[piv], work[k] = top, bot
        if work[piv][col] != 0:
            piv += 1
            if piv == n:
                break
    kernel = []
    for row in work[piv:]:
        if any(row[:r]):
            raise ArithmeticError("echelon form left a nonzero entry below the pivots")
        kernel.append(row[r:])
    return kernel


def _xgcd(a, b):
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def lll_reduce(basis):
    """Exact LLL reduction (delta 3/4) of a list of independent integer vectors."""
    if not basis:
        return []
    k, n = len(basis), len(basis[0])
    dm = DomainMatrix([[ZZ(x) for x in v] for v in basis], (k, n), ZZ)
    reduced = dm.lll().to_list()
    return [[int(x) for x in v] for v in reduced]


def _canonical_sign(v):
    for x in v:
        if x:
            return v if x > 0 else [-y for y in v]
    return v


def lattice_kernel(matrix, reduce=True):
    """Saturated kernel lattice basis of an exponent matrix.

    ``matrix`` is anything with an ``entries`` attribute (rows of nonnegative
    integers) or a plain list of rows.  With ``reduce`` the basis is LLL-reduced
    and sorted by (1-norm, vector) with the first nonzero entry made positive,
    which keeps the downstream binomials short and the output deterministic.
    """
    rows = [list(r) for r in getattr(matrix, "entries", matrix)]
    basis = integer_kernel(rows)
    if reduce and basis:
        basis = lll_reduce(basis)
    basis = [_canonical_sign(v) for v in basis]
    basis.sort(key=lambda v: (sum(abs(x) for x in v), [-x for x in v]))
    return basis
