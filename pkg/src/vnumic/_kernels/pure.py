"""Pure-Python kernels for the hot inner loops.

Three entry points, shared contract with the compiled twin in ``_ccore``:

``npmember(rows, point)``
    Exact feasibility of  exists lambda >= 0, sum lambda = 1,
    sum_j lambda_j * rows[j] <= point  (componentwise), i.e. membership of
    ``point`` in the Newton polyhedron spanned by ``rows``.  Decided by a
    phase-1 simplex over exact rationals with Bland's anti-cycling rule.

``witness_scan(gens, bounds, prime)``
    Smallest-degree exponent vector f in the box prod [0, bounds[i]] whose
    colon (gens : f) equals the monomial prime on the given variable
    indices; candidates are enumerated by total degree, largest exponent
    vector first within a degree.  Returns (degree, exps) or None.

``socle_corners(gens, bounds)``
    Corners of the staircase of <gens>: lattice points c in the box with
    x^c not in the ideal but x^c * x_i in the ideal (or c_i at the box cap)
    for every coordinate.  These are the seeds of the irredundant
    irreducible decomposition.

All three work on plain int tuples; callers translate Monomial objects.
"""

from __future__ import annotations

from fractions import Fraction

BACKEND = "pure"


# ---------------------------------------------------------------------------
# Newton-polyhedron membership: exact phase-1 simplex.
# ---------------------------------------------------------------------------


def npmember(rows: list[tuple[int, ...]], point: tuple[int, ...]) -> bool:
    r = len(rows)
    if r == 0:
        return False
    m = len(point)
    # Fast accept: the point dominates a generator (a vertex certificate).
    for g in rows:
        ok = True
        for i in range(m):
            if g[i] > point[i]:
                ok = False
                break
        if ok:
            return True

    # Phase-1 LP.  Columns: lambda_0..lambda_{r-1}, slack_0..slack_{m-1},
    # artificial z.  Rows: the convexity equality first, then one row per
    # coordinate constraint.  Initial basis {z, slacks} is feasible because
    # point >= 0.  Feasible iff min z == 0.
    ncols = r + m + 1
    zcol = r + m
    tableau: list[list[Fraction]] = []
    rhs: list[Fraction] = []

    row0 = [Fraction(0)] * ncols
    for j in range(r):
        row0[j] = Fraction(1)
    row0[zcol] = Fraction(1)
    tableau.append(row0)
    rhs.append(Fraction(1))

    for i in range(m):
        row = [Fraction(0)] * ncols
        for j in range(r):
            row[j] = Fraction(rows[j][i])
        row[r + i] = Fraction(1)
        tableau.append(row)
        rhs.append(Fraction(point[i]))

    basis = [zcol] + [r + i for i in range(m)]
    # Reduced costs for min z with z basic in row 0: obj := e_z - row0.
    obj = [-row0[j] for j in range(ncols)]
    obj[zcol] = Fraction(0)
    obj_val = Fraction(1)  # current value of z

    nrows = m + 1
    while True:
        enter = -1
        for j in range(ncols):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            return obj_val == 0
        # Ratio test with Bland tie-break on the leaving basis variable.
        leave = -1
        best = None
        for i in range(nrows):
            a = tableau[i][enter]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            raise ArithmeticError("phase-1 simplex unbounded; inconsistent tableau")
        piv_row = tableau[leave]
        piv = piv_row[enter]
        if piv != 1:
            inv = 1 / piv
            for j in range(ncols):
                if piv_row[j]:
                    piv_row[j] *= inv
            rhs[leave] *= inv
        for i in range(nrows):
            if i == leave:
                continue
            f = tableau[i][enter]
            if f:
                row = tableau[i]
                for j in range(ncols):
                    if piv_row[j]:
                        row[j] -= f * piv_row[j]
                rhs[i] -= f * rhs[leave]
        f = obj[enter]
        if f:
            for j in range(ncols):
                if piv_row[j]:
                    obj[j] -= f * piv_row[j]
            obj_val += f * rhs[leave]
        basis[leave] = enter
        if obj_val == 0:
            return True


# ---------------------------------------------------------------------------
# Box bitmaps: up-closure of a generator set inside a bounded box.
# ---------------------------------------------------------------------------


def _strides(dims: list[int]) -> list[int]:
    s = [0] * len(dims)
    acc = 1
    for i in range(len(dims) - 1, -1, -1):
        s[i] = acc
        acc *= dims[i]
    return s


def divisibility_bitmap(gens: list[tuple[int, ...]], dims: list[int]) -> bytearray:
    """bitmap[flat(c)] = 1 iff some generator divides x^c, over the box ``dims``.

    Filled by the up-closure recursion: c is divisible iff c is itself a
    generator or some c - e_j is divisible.  One pass in lexicographic flat
    order is enough because predecessors have smaller flat index.
    """
    m = len(dims)
    strides = _strides(dims)
    size = 1
    for d in dims:
        size *= d
    bitmap = bytearray(size)
    genset = set()
    for g in gens:
        inside = True
        for i in range(m):
            if g[i] >= dims[i]:
                inside = False
                break
        if inside:
            flat = 0
            for i in range(m):
                flat += g[i] * strides[i]
            genset.add(flat)
    point = [0] * m
    for flat in range(size):
        if flat in genset:
            bitmap[flat] = 1
        else:
            for i in range(m):
                if point[i] > 0 and bitmap[flat - strides[i]]:
                    bitmap[flat] = 1
                    break
        # odometer increment
        for i in range(m - 1, -1, -1):
            point[i] += 1
            if point[i] < dims[i]:
                break
            point[i] = 0
    return bitmap


def _bounded_compositions(total: int, bounds: tuple[int, ...]):
    """Exponent vectors with the given coordinate caps summing to ``total``,
    in descending lexicographic order (largest vector first)."""
    m = len(bounds)
    suffix_cap = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix_cap[i] = suffix_cap[i + 1] + bounds[i]
    vec = [0] * m

    def rec(pos: int, remaining: int):
        if pos == m - 1:
            vec[pos] = remaining
            yield tuple(vec)
            return
        lo = max(0, remaining - suffix_cap[pos + 1])
        hi = min(bounds[pos], remaining)
        for e in range(hi, lo - 1, -1):
            vec[pos] = e
            yield from rec(pos + 1, remaining - e)
        vec[pos] = 0

    if 0 <= total <= suffix_cap[0]:
        yield from rec(0, total)


def witness_scan(
    gens: list[tuple[int, ...]],
    bounds: tuple[int, ...],
    prime: tuple[int, ...],
) -> tuple[int, tuple[int, ...]] | None:
    """First (degree, exps) in the box whose colon against ``gens`` is exactly
    the prime on the given variable indices, or None.

    The colon test per candidate f is two bitmap lookups:
      (a) no generator's restriction to the prime coordinates divides the
          restriction of f  (this forces (gens : f) inside the prime, and in
          particular f itself outside the ideal), and
      (b) f * x_j lies in the ideal for every prime coordinate j.
    """
    m = len(bounds)
    ext_dims = [b + 2 for b in bounds]
    ext_strides = _strides(ext_dims)
    member = divisibility_bitmap(gens, ext_dims)

    proj_dims = [bounds[i] + 1 for i in prime]
    proj_strides = _strides(proj_dims)
    proj_gens = [tuple(g[i] for i in prime) for g in gens]
    bad = divisibility_bitmap(proj_gens, proj_dims)

    total_cap = sum(bounds)
    for degree in range(total_cap + 1):
        for f in _bounded_compositions(degree, bounds):
            flat_p = 0
            for k, i in enumerate(prime):
                flat_p += f[i] * proj_strides[k]
            if bad[flat_p]:
                continue
            flat = 0
            for i in range(m):
                flat += f[i] * ext_strides[i]
            ok = True
            for j in prime:
                if not member[flat + ext_strides[j]]:
                    ok = False
                    break
            if ok:
                return degree, f
    return None


def socle_corners(
    gens: list[tuple[int, ...]], bounds: tuple[int, ...]
) -> list[tuple[int, ...]]:
    """Staircase corners of <gens> in the box prod [0, bounds[i]].

    A corner is a lattice point not in the ideal all of whose coordinate
    successors are in the ideal, coordinates at the box cap counting as
    successors in the ideal.  Only coordinates with bounds > 0 matter; the
    caller passes bounds = componentwise max of the generators.
    """
    m = len(bounds)
    dims = [b + 1 for b in bounds]
    strides = _strides(dims)
    member = divisibility_bitmap(gens, dims)
    size = 1
    for d in dims:
        size *= d
    corners = []
    point = [0] * m
    for flat in range(size):
        if not member[flat]:
            is_corner = True
            for i in range(m):
                if point[i] < bounds[i] and not member[flat + strides[i]]:
                    is_corner = False
                    break
            if is_corner:
                corners.append(tuple(point))
        for i in range(m - 1, -1, -1):
            point[i] += 1
            if point[i] < dims[i]:
                break
            point[i] = 0
    return corners
