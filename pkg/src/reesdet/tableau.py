"""Tableaux over indexed column tuples.

A row is an (n+1)-tuple: n strictly increasing column indices followed by a
component label.  A tableau is a tuple of rows; it is *semistandard* when its
rows are ascending as integer tuples (top row largest in the column order,
where smaller tuple = larger), and *standard* when consecutive rows are also
componentwise non-decreasing.  `standardize` sorts every coordinate column
independently, the straightening move whose closure properties drive all the
generator families.  `vibrations` enumerates, for a non-standard pair, the
standard pairs that can absorb the straightening correction terms: the pairs
(e, g) that redistribute the same 2n column entries with e componentwise below
both g and the standardized minimum, other than the standardized pair itself.
"""

from __future__ import annotations

import itertools


def validate_row(row):
    row = tuple(int(v) for v in row)
    if len(row) < 2:
        raise ValueError(f"row needs at least one column and a component: {row}")
    cols, comp = row[:-1], row[-1]
    if any(c <= 0 for c in row):
        raise ValueError(f"row entries must be positive: {row}")
    if any(cols[i] >= cols[i + 1] for i in range(len(cols) - 1)):
        raise ValueError(f"row columns must increase strictly: {row}")
    return row


def validate_tableau(A):
    rows = tuple(validate_row(r) for r in A)
    if not rows:
        raise ValueError("empty tableau")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("rows of unequal width")
    return rows


def is_semistandard(A):
    """Rows ascending as integer tuples (i.e. descending in the column
    order)."""
    rows = validate_tableau(A)
    return all(rows[i] <= rows[i + 1] for i in range(len(rows) - 1))


def support(A):
    """Per-coordinate multisets of entries, as sorted tuples: position j of
    the result collects the j-th coordinate of every row."""
    rows = validate_tableau(A)
    return tuple(tuple(sorted(col)) for col in zip(*rows))


def standardize(A):
    """Sort every coordinate column increasingly (top-to-bottom).

    For rows drawn from strictly increasing column tuples this always yields
    valid rows again; the result is the unique standard tableau with the same
    per-coordinate support.
    """
    rows = validate_tableau(A)
    cols = [sorted(col) for col in zip(*rows)]
    out = tuple(tuple(col[i] for col in cols) for i in range(len(rows)))
    for r in out:
        validate_row(r)
    return out


def is_standard_pair(a, b):
    """Whether the semistandard pair [a, b] is standard (a componentwise <= b
    over all coordinates including the component)."""
    a, b = validate_row(a), validate_row(b)
    if len(a) != len(b):
        raise ValueError("rows of unequal width")
    if a > b:
        raise ValueError(f"pair [{a}, {b}] is not semistandard (need a <= b as tuples)")
    return all(x <= y for x, y in zip(a, b))


def is_standard(A):
    """Whether the semistandard tableau A has componentwise non-decreasing
    consecutive rows."""
    rows = validate_tableau(A)
    if not is_semistandard(rows):
        raise ValueError("tableau is not semistandard (rows must ascend as tuples)")
    return all(
        all(x <= y for x, y in zip(rows[i], rows[i + 1]))
        for i in range(len(rows) - 1)
    )


def vibrations(a, b):
    """Standard pairs absorbing the straightening of the non-standard pair
    [a, b].

    With (c, d) = standardize([a, b]) and j1, j2 the standardized component
    labels, these are the pairs ((e, j1), (g, j2)) with e, g strictly
    increasing column tuples such that, per column position i,
    e_i <= min(g_i, c_i), the 2n entries of (e, g) are exactly those of
    (a, b) as a multiset, and (e, g) differs from (c, d) on both rows.
    Raises ValueError when [a, b] is already standard (nothing to absorb).
    """
    a, b = validate_row(a), validate_row(b)
    if is_standard_pair(a, b):
        raise ValueError(f"pair [{a}, {b}] is standard; it has no vibrations")
    c, d = standardize((a, b))
    j1, j2 = c[-1], d[-1]
    ccols, dcols = c[:-1], d[:-1]
    n = len(ccols)
    entries = sorted(a[:-1] + b[:-1])
    out = set()
    for picked in itertools.combinations(range(2 * n), n):
        rest = [i for i in range(2 * n) if i not in picked]
        e = tuple(entries[i] for i in picked)
        g = tuple(entries[i] for i in rest)
        if any(e[i] >= e[i + 1] for i in range(n - 1)):
            continue
        if any(g[i] >= g[i + 1] for i in range(n - 1)):
            continue
        if any(e[i] > g[i] or e[i] > ccols[i] for i in range(n)):
            continue
        if e == ccols or g == dcols:
            continue
        out.add((e + (j1,), g + (j2,)))
    return sorted(out)
