"""Determinantal instances: generic, ladder and unit-interval column data.

An `Instance` bundles a matrix shape, an ideal family description (generic
maximal minors, maximal minors of a two-sided ladder, or a union of
column-window maximal-minor ideals), a component count r, and one polynomial
ring holding the x, t and T variable blocks.  It caches minors (computed by
cofactor expansion with memoized sub-determinants), diagonal initial
monomials (computed independently of the expansion), and the substitution
maps sending T[c;k] to minor(c)*t[k] (full map) or to the diagonal monomial
times t[k] (initial map).
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass

from .poly import (
    DomainError,
    Polynomial,
    PolyRing,
    QQ,
    Tvar,
    delta_grevlex,
    product_order,
    sigma_grevlex,
    sigma_prime,
    tau_lex,
    tau_prime,
    tvar,
    weight_order,
    xvar,
)


class SpecError(ValueError):
    """An ideal-family description violates its structural invariants."""


# ---------------------------------------------------------------------------
# shape and family descriptions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MatrixShape:
    n: int
    m: int

    def __post_init__(self):
        if not (1 <= self.n <= self.m):
            raise SpecError(f"need 1 <= n <= m, got n={self.n}, m={self.m}")


@dataclass(frozen=True)
class GenericSpec:
    """All maximal minors of a generic n x m matrix."""

    shape: MatrixShape

    kind = "generic"

    def canonical_dict(self):
        return {"kind": "generic", "n": self.shape.n, "m": self.shape.m}

    def describe(self):
        return f"generic {self.shape.n}x{self.shape.m}"


@dataclass(frozen=True)
class LadderSpec:
    """Maximal minors of a two-sided ladder: row i lives in columns
    [l_i, k_i], with 1 = l_1 <= ... <= l_n < m, 1 < k_1 <= ... <= k_n = m and
    l_i < k_i for every i."""

    shape: MatrixShape
    rows: tuple  # tuple of (l_i, k_i)

    kind = "ladder"

    def __post_init__(self):
        n, m = self.shape.n, self.shape.m
        rows = tuple((int(a), int(b)) for a, b in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != n:
            raise SpecError(f"need one column interval per row: got {len(rows)} for n={n}")
        ls = [a for a, _ in rows]
        ks = [b for _, b in rows]
        if ls[0] != 1:
            raise SpecError(f"first row interval must start at column 1, got {ls[0]}")
        if ks[-1] != m:
            raise SpecError(f"last row interval must end at column m={m}, got {ks[-1]}")
        if any(ls[i] > ls[i + 1] for i in range(n - 1)):
            raise SpecError(f"interval starts must be nondecreasing, got {ls}")
        if any(ks[i] > ks[i + 1] for i in range(n - 1)):
            raise SpecError(f"interval ends must be nondecreasing, got {ks}")
        if ls[-1] >= m:
            raise SpecError(f"interval starts must stay below m={m}, got {ls}")
        if ks[0] <= 1:
            raise SpecError(f"interval ends must exceed 1, got {ks}")
        if any(a >= b for a, b in rows):
            bad = next((a, b) for a, b in rows if a >= b)
            raise SpecError(f"each row interval needs l < k, got {bad}")

    @classmethod
    def full(cls, shape):
        return cls(shape, tuple((1, shape.m) for _ in range(shape.n)))

    @property
    def is_full(self):
        return all(a == 1 and b == self.shape.m for a, b in self.rows)

    def contains_entry(self, i, j):
        a, b = self.rows[i - 1]
        return a <= j <= b

    def canonical_dict(self):
        return {
            "kind": "ladder",
            "n": self.shape.n,
            "m": self.shape.m,
            "rows": [list(ab) for ab in self.rows],
        }

    def describe(self):
        rows = ",".join(f"[{a},{b}]" for a, b in self.rows)
        return f"ladder {self.shape.n}x{self.shape.m} {rows}"


@dataclass(frozen=True)
class UnitIntervalSpec:
    """Sum of the maximal-minor ideals of the column windows [u_i, v_i], with
    1 = u_1 < ... < u_s < m, 1 < v_1 < ... < v_s = m, the windows covering
    [1, m], and no window contained in another."""

    shape: MatrixShape
    intervals: tuple  # tuple of (u_i, v_i)

    kind = "unit"

    def __post_init__(self):
        n, m = self.shape.n, self.shape.m
        iv = tuple((int(a), int(b)) for a, b in self.intervals)
        object.__setattr__(self, "intervals", iv)
        if not iv:
            raise SpecError("need at least one column window")
        us = [a for a, _ in iv]
        vs = [b for _, b in iv]
        if us[0] != 1:
            raise SpecError(f"first window must start at column 1, got {us[0]}")
        if vs[-1] != m:
            raise SpecError(f"last window must end at column m={m}, got {vs[-1]}")
        if any(us[i] >= us[i + 1] for i in range(len(iv) - 1)):
            raise SpecError(f"window starts must increase strictly, got {us}")
        if any(vs[i] >= vs[i + 1] for i in range(len(iv) - 1)):
            raise SpecError(f"window ends must increase strictly, got {vs}")
        if us[-1] >= m:
            raise SpecError(f"window starts must stay below m={m}, got {us}")
        if vs[0] <= 1:
            raise SpecError(f"window ends must exceed column 1, got {vs}")
        for i in range(len(iv) - 1):
            if us[i + 1] > vs[i] + 1:
                raise SpecError(
                    f"windows must cover [1,{m}] without gaps: "
                    f"[{us[i]},{vs[i]}] then [{us[i+1]},{vs[i+1]}]"
                )
        for a, b in iv:
            for c, d in iv:
                if (a, b) != (c, d) and c <= a and b <= d:
                    raise SpecError(
                        f"window [{a},{b}] is contained in [{c},{d}]; "
                        "representation must be irredundant"
                    )
        if any(b - a + 1 < n for a, b in iv):
            bad = next((a, b) for a, b in iv if b - a + 1 < n)
            raise SpecError(
                f"window [{bad[0]},{bad[1]}] is narrower than n={n} columns"
            )

    def canonical_dict(self):
        return {
            "kind": "unit",
            "n": self.shape.n,
            "m": self.shape.m,
            "intervals": [list(ab) for ab in self.intervals],
        }

    def describe(self):
        iv = ",".join(f"[{a},{b}]" for a, b in self.intervals)
        return f"unit {self.shape.n}x{self.shape.m} {iv}"


# ---------------------------------------------------------------------------
# column tuple enumeration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CustomSpec:
    """An explicit collection of column tuples of a generic matrix.

    Used to run the fiber machinery on raw index sets (e.g. to exhibit
    closure failures of the straightening move on sets that are neither
    ladder nor window index sets)."""

    shape: MatrixShape
    tuples: tuple

    kind = "custom"

    def __post_init__(self):
        n, m = self.shape.n, self.shape.m
        ts = []
        for c in self.tuples:
            c = tuple(int(v) for v in c)
            if len(c) != n:
                raise SpecError(f"tuple {c} has length {len(c)}, need {n}")
            if any(c[i] >= c[i + 1] for i in range(n - 1)):
                raise SpecError(f"tuple {c} is not strictly increasing")
            if c[0] < 1 or c[-1] > m:
                raise SpecError(f"tuple {c} leaves the column range [1,{m}]")
            ts.append(c)
        if not ts:
            raise SpecError("empty tuple collection")
        object.__setattr__(self, "tuples", tuple(sorted(set(ts))))

    def canonical_dict(self):
        return {
            "kind": "custom",
            "n": self.shape.n,
            "m": self.shape.m,
            "tuples": [list(c) for c in self.tuples],
        }

    def describe(self):
        return f"custom {self.shape.n}x{self.shape.m} ({len(self.tuples)} tuples)"


def enumerate_D(shape):
    """All strictly increasing n-tuples with entries in [1, m], in canonical
    order (ascending tuples; the first listed is the largest in the column
    order, where a tuple beats another iff it is lexicographically smaller)."""
    return tuple(itertools.combinations(range(1, shape.m + 1), shape.n))


def ladder_index_set(spec):
    """Tuples whose i-th entry lies in the i-th row interval: exactly the
    tuples whose ladder minor is nonzero."""
    if not isinstance(spec, LadderSpec):
        raise TypeError("ladder_index_set needs a LadderSpec")
    out = []
    for c in enumerate_D(spec.shape):
        if all(spec.rows[i][0] <= c[i] <= spec.rows[i][1] for i in range(spec.shape.n)):
            out.append(c)
    return tuple(out)


def unit_index_set(spec, shape=None):
    """Tuples whose first and last entries lie in one common column window
    (then the whole tuple does)."""
    if not isinstance(spec, UnitIntervalSpec):
        raise TypeError("unit_index_set needs a UnitIntervalSpec")
    shape = shape or spec.shape
    out = []
    for c in enumerate_D(shape):
        if any(u <= c[0] and c[-1] <= v for u, v in spec.intervals):
            out.append(c)
    return tuple(out)


def index_set(spec):
    if isinstance(spec, GenericSpec):
        return enumerate_D(spec.shape)
    if isinstance(spec, LadderSpec):
        return ladder_index_set(spec)
    if isinstance(spec, UnitIntervalSpec):
        return unit_index_set(spec)
    if isinstance(spec, CustomSpec):
        return spec.tuples
    raise TypeError(f"unknown ideal description {spec!r}")


# ---------------------------------------------------------------------------
# instances
# ---------------------------------------------------------------------------


class Instance:
    """One problem instance: a family description, r components, a field, and
    the ring K[x, t, T] with T variables indexed by (column tuple, component).
    """

    def __init__(self, spec, r=1, field=QQ):
        if r < 1:
            raise SpecError(f"need r >= 1 components, got {r}")
        self.spec = spec
        self.kind = spec.kind
        self.shape = spec.shape
        self.r = r
        self.field = field
        self.tuples = index_set(spec)
        if not self.tuples:
            raise SpecError("empty column index set")
        self.all_tuples = enumerate_D(self.shape)

        n, m = self.shape.n, self.shape.m
        xs = []
        for i in range(1, n + 1):
            for j in range(1, m + 1):
                if self.kind != "ladder" or spec.contains_entry(i, j):
                    xs.append(xvar(i, j))
        ts = [tvar(k) for k in range(1, r + 1)]
        Ts = [Tvar(c, k) for c in self.tuples for k in range(1, r + 1)]
        self.ring = PolyRing(xs + ts + Ts, field=field, name=spec.describe())

        self._det_memo = {}
        self._minor_cache = {}
        self._image_full = {}  # T position -> minor(c) * t_k
        self._image_init = {}  # T position -> monomial exponent tuple
        self._orders = {}

    # -- basic data ----------------------------------------------------------

    def entry(self, i, j):
        """Matrix entry (i, j): a variable, or 0 outside a ladder."""
        if self.kind == "ladder" and not self.spec.contains_entry(i, j):
            return self.ring.zero()
        return self.ring.x(i, j)

    def has_entry(self, i, j):
        return self.kind != "ladder" or self.spec.contains_entry(i, j)

    def _det(self, rows, cols):
        """Determinant of the submatrix on `rows` x `cols` (1-based indices),
        by cofactor expansion along the first row with memoized minors."""
        key = (rows, cols)
        got = self._det_memo.get(key)
        if got is not None:
            return got
        if not rows:
            out = self.ring.one()
        else:
            i = rows[0]
            rest = rows[1:]
            out = self.ring.zero()
            for pos, j in enumerate(cols):
                if not self.has_entry(i, j):
                    continue
                sub = self._det(rest, cols[:pos] + cols[pos + 1 :])
                if sub.is_zero():
                    continue
                term = self.ring.x(i, j) * sub
                out = out + term if pos % 2 == 0 else out - term
        self._det_memo[key] = out
        return out

    def minor(self, c):
        """Maximal minor on columns c (zero when a ladder kills it)."""
        c = tuple(c)
        got = self._minor_cache.get(c)
        if got is None:
            n = self.shape.n
            if len(c) != n or any(c[i] >= c[i + 1] for i in range(n - 1)):
                raise ValueError(f"not a strictly increasing column tuple: {c}")
            if c[-1] > self.shape.m:
                raise ValueError(f"column out of range in {c}")
            got = self._det(tuple(range(1, n + 1)), c)
            self._minor_cache[c] = got
        return got

    def initial_minor_mono(self, c):
        """Exponent tuple of the diagonal monomial x[1,c_1]...x[n,c_n];
        computed directly, never via the minor expansion."""
        c = tuple(c)
        pairs = []
        for i, col in enumerate(c, start=1):
            if not self.has_entry(i, col):
                raise DomainError(
                    f"diagonal entry x[{i},{col}] vanishes on this ladder; "
                    f"tuple {c} is outside the index set"
                )
            pairs.append((xvar(i, col), 1))
        return self.ring.mono_from_pairs(pairs)

    def initial_minor(self, c):
        return self.ring.monomial(self.initial_minor_mono(c))

    def in_index_set(self, c):
        return tuple(c) in self._tuple_set

    @property
    def _tuple_set(self):
        got = getattr(self, "_tuple_set_cache", None)
        if got is None:
            got = frozenset(self.tuples)
            self._tuple_set_cache = got
        return got

    # -- generators ----------------------------------------------------------

    def generators_full(self):
        """[(column tuple, maximal minor)] over the index set."""
        return [(c, self.minor(c)) for c in self.tuples]

    def generators_initial(self):
        """[(column tuple, diagonal monomial)] over the index set."""
        return [(c, self.initial_minor(c)) for c in self.tuples]

    def generators(self, map_kind):
        if map_kind == "full":
            return self.generators_full()
        if map_kind == "initial":
            return self.generators_initial()
        raise ValueError(f"map_kind must be 'full' or 'initial', got {map_kind!r}")

    # -- substitution maps ----------------------------------------------------

    def _full_images(self):
        if not self._image_full:
            for c in self.tuples:
                mc = self.minor(c)
                for k in range(1, self.r + 1):
                    p = self.ring.position[Tvar(c, k)]
                    self._image_full[p] = mc * self.ring.t(k)
        return self._image_full

    def _init_images(self):
        if not self._image_init:
            for c in self.tuples:
                dm = self.initial_minor_mono(c)
                for k in range(1, self.r + 1):
                    p = self.ring.position[Tvar(c, k)]
                    tp = self.ring.position[tvar(k)]
                    self._image_init[p] = PolyRing.mono_mul(
                        dm, self.ring.unit_mono(tp)
                    )
        return self._image_init

    def image_full(self, f):
        """Substitute T[c;k] -> minor(c) * t[k] (x and t fixed)."""
        images = self._full_images()
        ring = self.ring
        Tpos = ring.T_positions
        out = ring.zero()
        for mono, coeff in f.terms.items():
            base = list(mono)
            factors = []
            for p in Tpos:
                e = mono[p]
                if e:
                    base[p] = 0
                    factors.append((images[p], e))
            term = ring.monomial(tuple(base), coeff)
            for img, e in factors:
                term = term * img**e
            out = out + term
        return out

    def image_initial(self, f):
        """Substitute T[c;k] -> diagonal(c) * t[k]: a monomial map, so each
        term maps to a single term (fast path for enumeration oracles)."""
        images = self._init_images()
        ring = self.ring
        Tpos = ring.T_positions
        out = {}
        field = ring.field
        for mono, coeff in f.terms.items():
            base = list(mono)
            shift = ring.one_mono
            for p in Tpos:
                e = mono[p]
                if e:
                    base[p] = 0
                    img = images[p]
                    for _ in range(e):
                        shift = PolyRing.mono_mul(shift, img)
            nm = PolyRing.mono_mul(tuple(base), shift)
            prev = out.get(nm)
            c = field.add(prev, coeff) if prev is not None else coeff
            if field.is_zero(c):
                out.pop(nm, None)
            else:
                out[nm] = c
        return Polynomial(ring, out, normalized=True)

    def image(self, f, map_kind):
        if map_kind == "full":
            return self.image_full(f)
        if map_kind == "initial":
            return self.image_initial(f)
        raise ValueError(f"map_kind must be 'full' or 'initial', got {map_kind!r}")

    # -- orders ----------------------------------------------------------------

    def _order(self, name, builder):
        got = self._orders.get(name)
        if got is None:
            got = builder(self.ring)
            self._orders[name] = got
        return got

    @property
    def tau(self):
        return self._order("tau", tau_lex)

    @property
    def delta(self):
        return self._order("delta", delta_grevlex)

    @property
    def sigma(self):
        return self._order("sigma", sigma_grevlex)

    @property
    def tau_prime(self):
        return self._order("tau'", tau_prime)

    @property
    def sigma_prime(self):
        return self._order("sigma'", sigma_prime)

    @property
    def product(self):
        return self._order("product", product_order)

    @property
    def lift(self):
        """Weight order on K[x, T]: each variable weighs as its image's
        diagonal monomial in a faithful positional encoding of the x-lex
        order (base 2048), ties broken by the x-then-T block order.  Under
        this order the lifted families lead with the terms the initial
        families predict.  A guard raises DomainError for (unreachably large)
        degrees where the encoding would stop being faithful."""

        def build(ring):
            B = 2048
            nx = len(ring.x_positions)
            xw = {p: B ** (nx - 1 - rank) for rank, p in enumerate(ring.x_positions)}
            weights = dict(xw)
            for c in self.tuples:
                dm = self.initial_minor_mono(c)
                w = sum(xw[p] * e for p, e in enumerate(dm) if e)
                for k in range(1, self.r + 1):
                    weights[ring.position[Tvar(c, k)]] = w
            guard_coeffs = [0] * ring.nvars
            for p in ring.x_positions:
                guard_coeffs[p] = 1
            for p in ring.T_positions:
                guard_coeffs[p] = self.shape.n
            return weight_order(
                ring,
                weights,
                sigma_prime(ring),
                name="lift",
                guard=(tuple(guard_coeffs), B - 1),
            )

        return self._order("lift", build)

    # -- identity ----------------------------------------------------------------

    def canonical_dict(self):
        d = self.spec.canonical_dict()
        d["r"] = self.r
        d["field"] = self.field.name
        return d

    def instance_hash(self):
        blob = json.dumps(self.canonical_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def describe(self):
        return f"{self.spec.describe()} r={self.r} over {self.field.name}"

    def __repr__(self):
        return f"Instance({self.describe()})"


_INSTANCE_CACHE = {}


def instance(spec, r=1, field=QQ):
    """Shared, cached Instance per (family description, r, field)."""
    key = (spec, r, field)
    got = _INSTANCE_CACHE.get(key)
    if got is None:
        got = Instance(spec, r=r, field=field)
        _INSTANCE_CACHE[key] = got
    return got


def minor(spec, c, r=1, field=QQ):
    """Maximal minor on columns c for the given family description."""
    return instance(spec, r=r, field=field).minor(c)


def initial_minor(spec, c, r=1, field=QQ):
    """Diagonal monomial of the minor on columns c, as a polynomial."""
    return instance(spec, r=r, field=field).initial_minor(c)
