# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the pure-Python kernels.

Same contract as ``vnumic._kernels.pure``: npmember / witness_scan /
socle_corners.  The scan kernels run on C integers after validating that
exponents and box volumes fit; out-of-range inputs raise KernelOverflow
and the caller falls back to the pure twin.  npmember keeps exact
arbitrary-precision arithmetic (integer-scaled simplex rows holding
Python ints), so it accepts anything the pure kernel does.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

from math import gcd as _gcd

from vnumic._kernels.errors import KernelOverflow

BACKEND = "compiled"

cdef long long MAX_BOX = 40_000_000
cdef long long MAX_EXP = 1_000_000_000


# ---------------------------------------------------------------------------
# Exact phase-1 simplex on integer-scaled rows (Python ints, C indexing).
# ---------------------------------------------------------------------------


cdef object _row_gcd(list row, object den):
    g = den
    for v in row:
        if v:
            g = _gcd(g, v)
            if g == 1:
                return 1
    return g


cdef object _normalize(list row, object den):
    """Divide row and den by their gcd in place; return the new den (> 0)."""
    g = _row_gcd(row, den)
    if g > 1:
        for j in range(len(row)):
            row[j] //= g
        den //= g
    return den


def npmember(rows, point):
    """Feasibility of: lambda >= 0, sum lambda = 1, sum lambda_j rows[j] <= point."""
    cdef Py_ssize_t r = len(rows), m = len(point)
    cdef Py_ssize_t i, j, enter, leave, nrows, ncols, zcol
    if r == 0:
        return False
    for g in rows:
        ok = True
        for i in range(m):
            if g[i] > point[i]:
                ok = False
                break
        if ok:
            return True

    ncols = r + m + 1
    zcol = r + m
    nrows = m + 1

    # Row i holds ncols+1 Python ints (last slot is the rhs) over a shared
    # positive denominator dens[i]; the objective row's rhs slot carries the
    # negated objective value, so feasibility is obj[ncols] == 0.
    cdef list nums = []
    cdef list dens = []
    row0 = [0] * (ncols + 1)
    for j in range(r):
        row0[j] = 1
    row0[zcol] = 1
    row0[ncols] = 1
    nums.append(row0)
    dens.append(1)
    for i in range(m):
        row = [0] * (ncols + 1)
        for j in range(r):
            row[j] = rows[j][i]
        row[r + i] = 1
        row[ncols] = point[i]
        nums.append(row)
        dens.append(1)

    cdef list basis = [zcol] + [r + i for i in range(m)]
    cdef list obj = [0] * (ncols + 1)
    for j in range(r):
        obj[j] = -1
    obj[ncols] = -1
    obj_den = 1

    cdef list prow, irow
    while True:
        enter = -1
        for j in range(ncols):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            return obj[ncols] == 0
        leave = -1
        for i in range(nrows):
            irow = <list>nums[i]
            if irow[enter] > 0:
                if leave < 0:
                    leave = i
                else:
                    prow = <list>nums[leave]
                    lhs = irow[ncols] * prow[enter]
                    rhs = prow[ncols] * irow[enter]
                    if lhs < rhs or (lhs == rhs and basis[i] < basis[leave]):
                        leave = i
        if leave < 0:
            raise ArithmeticError("phase-1 simplex unbounded; inconsistent tableau")

        prow = <list>nums[leave]
        dens[leave] = _normalize(prow, prow[enter])
        pn = dens[leave]
        for i in range(nrows):
            if i == leave:
                continue
            irow = <list>nums[i]
            f = irow[enter]
            if f:
                for j in range(ncols + 1):
                    irow[j] = irow[j] * pn - f * prow[j]
                dens[i] = _normalize(irow, dens[i] * pn)
        f = obj[enter]
        if f:
            for j in range(ncols + 1):
                obj[j] = obj[j] * pn - f * prow[j]
            obj_den = _normalize(obj, obj_den * pn)
        basis[leave] = enter
        if obj[ncols] == 0:
            return True


# ---------------------------------------------------------------------------
# C helpers for the box kernels.
# ---------------------------------------------------------------------------


cdef long long* _ll_alloc(Py_ssize_t n) except NULL:
    cdef long long* p = <long long*> PyMem_Malloc(n * sizeof(long long))
    if p == NULL:
        raise MemoryError()
    return p


cdef int _validate_ints(gens, bounds) except -1:
    for b in bounds:
        if b < 0 or b > MAX_EXP:
            raise KernelOverflow()
    for g in gens:
        for e in g:
            if e < 0 or e > MAX_EXP:
                raise KernelOverflow()
    return 0


cdef long long _box_size(long long* dims, Py_ssize_t m) except -1:
    cdef long long size = 1
    cdef Py_ssize_t i
    for i in range(m):
        size *= dims[i]
        if size > MAX_BOX:
            raise KernelOverflow()
    return size


cdef void _fill_strides(long long* dims, long long* strides, Py_ssize_t m):
    cdef long long acc = 1
    cdef Py_ssize_t i
    for i in range(m - 1, -1, -1):
        strides[i] = acc
        acc *= dims[i]


cdef int _fill_upset(
    unsigned char* bitmap,
    long long size,
    long long* dims,
    long long* strides,
    long long* point,
    gens,
    Py_ssize_t m,
) except -1:
    """bitmap[flat(c)] = 1 iff some row of gens divides x^c; DP up-closure."""
    cdef long long flat, f
    cdef Py_ssize_t i
    cdef bint inside
    for g in gens:
        inside = True
        f = 0
        for i in range(m):
            if g[i] >= dims[i]:
                inside = False
                break
            f += (<long long> g[i]) * strides[i]
        if inside:
            bitmap[f] = 2
    for i in range(m):
        point[i] = 0
    for flat in range(size):
        if bitmap[flat] == 2:
            bitmap[flat] = 1
        elif bitmap[flat] == 0:
            for i in range(m):
                if point[i] > 0 and bitmap[flat - strides[i]]:
                    bitmap[flat] = 1
                    break
        i = m - 1
        while i >= 0:
            point[i] += 1
            if point[i] < dims[i]:
                break
            point[i] = 0
            i -= 1
    return 0


# ---------------------------------------------------------------------------
# Witness scan.
# ---------------------------------------------------------------------------


cdef long long _scan_rec(
    Py_ssize_t pos,
    long long remaining,
    long long flat,
    long long pflat,
    Py_ssize_t m,
    long long* bnds,
    long long* suffix_cap,
    long long* ext_strides,
    long long* pstrides,
    long long* prime_strides,
    Py_ssize_t nprime,
    unsigned char* member,
    unsigned char* bad,
    long long* exps,
):
    """Descending-lex walk of the degree slice; returns 1 on hit, 0 otherwise."""
    cdef long long e, lo, hi
    cdef Py_ssize_t k
    cdef bint ok
    if pos == m - 1:
        e = remaining
        exps[pos] = e
        flat += e * ext_strides[pos]
        pflat += e * pstrides[pos]
        if bad[pflat]:
            return 0
        ok = True
        for k in range(nprime):
            if not member[flat + prime_strides[k]]:
                ok = False
                break
        return 1 if ok else 0
    hi = bnds[pos] if bnds[pos] < remaining else remaining
    lo = remaining - suffix_cap[pos + 1]
    if lo < 0:
        lo = 0
    e = hi
    while e >= lo:
        exps[pos] = e
        if _scan_rec(
            pos + 1,
            remaining - e,
            flat + e * ext_strides[pos],
            pflat + e * pstrides[pos],
            m,
            bnds,
            suffix_cap,
            ext_strides,
            pstrides,
            prime_strides,
            nprime,
            member,
            bad,
            exps,
        ):
            return 1
        e -= 1
    return 0


def witness_scan(gens, bounds, prime):
    """First (degree, exps) in the box whose colon against gens is exactly the
    prime on the given variable indices, or None.  Mirrors pure.witness_scan."""
    cdef Py_ssize_t m = len(bounds), nprime = len(prime)
    cdef Py_ssize_t i, k, pos
    cdef long long ext_size, proj_size, degree, total_cap
    _validate_ints(gens, bounds)
    if m == 0 or nprime == 0:
        raise KernelOverflow()

    cdef long long* mem = _ll_alloc(7 * m + 2 + nprime)
    cdef long long* bnds = mem
    cdef long long* ext_dims = mem + m
    cdef long long* ext_strides = mem + 2 * m
    cdef long long* pstrides = mem + 3 * m
    cdef long long* exps = mem + 4 * m
    cdef long long* point = mem + 5 * m
    cdef long long* suffix_cap = mem + 6 * m  # m+1 slots
    cdef long long* prime_strides = mem + 7 * m + 1

    cdef long long* proj_dims = NULL
    cdef long long* proj_strides = NULL
    cdef bytearray member_buf, bad_buf
    cdef unsigned char* member
    cdef unsigned char* bad

    try:
        for i in range(m):
            bnds[i] = bounds[i]
            ext_dims[i] = bnds[i] + 2
        ext_size = _box_size(ext_dims, m)
        _fill_strides(ext_dims, ext_strides, m)

        proj_dims = _ll_alloc(nprime)
        proj_strides = _ll_alloc(nprime)
        for k in range(nprime):
            proj_dims[k] = bnds[<Py_ssize_t> prime[k]] + 1
        proj_size = _box_size(proj_dims, nprime)
        _fill_strides(proj_dims, proj_strides, nprime)
        for i in range(m):
            pstrides[i] = 0
        for k in range(nprime):
            pstrides[<Py_ssize_t> prime[k]] = proj_strides[k]
            prime_strides[k] = ext_strides[<Py_ssize_t> prime[k]]

        member_buf = bytearray(ext_size)
        member = <unsigned char*> member_buf
        _fill_upset(member, ext_size, ext_dims, ext_strides, point, gens, m)

        proj_gens = [tuple(g[j] for j in prime) for g in gens]
        bad_buf = bytearray(proj_size)
        bad = <unsigned char*> bad_buf
        _fill_upset(bad, proj_size, proj_dims, proj_strides, point, proj_gens, nprime)

        suffix_cap[m] = 0
        for i in range(m - 1, -1, -1):
            suffix_cap[i] = suffix_cap[i + 1] + bnds[i]
        total_cap = suffix_cap[0]

        for degree in range(total_cap + 1):
            if _scan_rec(
                0, degree, 0, 0, m, bnds, suffix_cap, ext_strides, pstrides,
                prime_strides, nprime, member, bad, exps,
            ):
                return degree, tuple(exps[i] for i in range(m))
        return None
    finally:
        PyMem_Free(mem)
        if proj_dims != NULL:
            PyMem_Free(proj_dims)
        if proj_strides != NULL:
            PyMem_Free(proj_strides)


# ---------------------------------------------------------------------------
# Socle corners.
# ---------------------------------------------------------------------------


def socle_corners(gens, bounds):
    """Staircase corners of <gens> in the box prod [0, bounds[i]]; mirrors
    pure.socle_corners."""
    cdef Py_ssize_t m = len(bounds)
    cdef Py_ssize_t i
    cdef long long size, flat
    cdef bint is_corner
    _validate_ints(gens, bounds)
    if m == 0:
        raise KernelOverflow()

    cdef long long* mem = _ll_alloc(4 * m)
    cdef long long* bnds = mem
    cdef long long* dims = mem + m
    cdef long long* strides = mem + 2 * m
    cdef long long* point = mem + 3 * m
    cdef bytearray member_buf
    cdef unsigned char* member
    corners = []
    try:
        for i in range(m):
            bnds[i] = bounds[i]
            dims[i] = bnds[i] + 1
        size = _box_size(dims, m)
        _fill_strides(dims, strides, m)
        member_buf = bytearray(size)
        member = <unsigned char*> member_buf
        _fill_upset(member, size, dims, strides, point, gens, m)

        for i in range(m):
            point[i] = 0
        for flat in range(size):
            if not member[flat]:
                is_corner = True
                for i in range(m):
                    if point[i] < bnds[i] and not member[flat + strides[i]]:
                        is_corner = False
                        break
                if is_corner:
                    corners.append(tuple(point[i] for i in range(m)))
            i = m - 1
            while i >= 0:
                point[i] += 1
                if point[i] < dims[i]:
                    break
                point[i] = 0
                i -= 1
        return corners
    finally:
        PyMem_Free(mem)
