"""Generator families for the presentation ideals of multi-Rees algebras and
special fiber rings of determinantal modules.

Families emitted here:

  * ``plucker_initial`` -- straightening binomials T_a T_b - T_c T_d of the
    toric fiber of the diagonal initial ideals; requires the index set to be
    closed under the columnwise-sort move (hard error with witness if not).
  * ``en_initial``      -- adjacent-column exchange binomials
    x[i,c_i] T[c\\c_i;k] - x[i,c_{i+1}] T[c\\c_{i+1};k] presenting the Rees
    algebra of the initial ideals, paired with plucker_initial.
  * ``exchange_H``      -- the same exchange binomials derived intrinsically
    from equigenerated monomial generators (smallest-variable witness scan).
  * ``en_full``         -- alternating sums sum_j (-1)^(i+j) x[i,c_j] T[c\\c_j;k]
    presenting the Rees algebra of the actual minors, with terms dropped when
    the ladder kills the entry or the tuple.
  * ``plucker_lifted``  -- lifted straightening relations
    T_a T_b - T_c T_d - sum(lambda * T_e T_g) whose coefficients are obtained
    by exact peeling of |a||b| - |c||d| against products of standard-pair
    minors of the generic matrix; every relation is re-checked to map to zero
    under T[c;k] -> minor(c) * t[k] before it is emitted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .determinantal import (
    CustomSpec,
    GenericSpec,
    Instance,
    LadderSpec,
    MatrixShape,
    SpecError,
    UnitIntervalSpec,
    instance,
)
from .poly import QQ, PolyRing, Polynomial, Tvar, tvar, xvar
from .poly import sigma_prime as sigma_prime_order
from .tableau import is_standard_pair, standardize, vibrations


class ClosureError(RuntimeError):
    """An index set failed a closure property a family construction relies on.

    Carries a witness: the offending pair and the escaping tuple."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class RelationFamily:
    """An immutable, canonically normalized family of relations.

    kind     -- family name ('en_initial', 'plucker_lifted', unions, ...)
    ambient  -- 'fiber' (polynomials in T only) or 'rees' (x and T)
    map_kind -- which substitution the family annihilates:
                'initial' (T -> diagonal * t) or 'full' (T -> minor * t)
    inst     -- the Instance whose ring the polynomials live in
    polys    -- monic (lead coefficient 1 under `order`), deduplicated,
                deterministically sorted
    order    -- the order used for normalization and printing
    """

    kind: str
    ambient: str
    map_kind: str
    inst: Instance
    polys: tuple
    order: object

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def lines(self):
        return [p.to_str(self.order) for p in self.polys]

    def union(self, other, kind=None, ambient=None, map_kind=None, order=None):
        if self.inst is not other.inst:
            raise ValueError("cannot union families over different instances")
        if map_kind is None:
            if self.map_kind != other.map_kind:
                raise ValueError("union needs an explicit map_kind when they differ")
            map_kind = self.map_kind
        return make_family(
            kind or f"{self.kind}+{other.kind}",
            ambient or ("rees" if "rees" in (self.ambient, other.ambient) else "fiber"),
            map_kind,
            self.inst,
            list(self.polys) + list(other.polys),
            order or self.order,
        )

    def image_witness(self):
        """First member with a nonzero image under the family's substitution
        map, or None when every member maps to zero."""
        for p in self.polys:
            if not self.inst.image(p, self.map_kind).is_zero():
                return p
        return None

    def describe(self):
        return (
            f"{self.kind}: {len(self.polys)} relations, ambient={self.ambient}, "
            f"map={self.map_kind}, order={self.order.name}, "
            f"instance={self.inst.describe()}"
        )


def make_family(kind, ambient, map_kind, inst, polys, order):
    """Normalize: drop zeros, make monic under `order`, dedupe, sort by
    (leading monomial key, printed form)."""
    seen = {}
    for p in polys:
        if p.is_zero():
            continue
        p = p.monic(order)
        seen[frozenset(p.terms.items())] = p
    ordered = sorted(
        seen.values(),
        key=lambda p: (order.key(p.leading_monomial(order)), p.to_str(order)),
    )
    return RelationFamily(kind, ambient, map_kind, inst, tuple(ordered), order)


# ---------------------------------------------------------------------------
# index rows and helper enumeration
# ---------------------------------------------------------------------------


def _rows(inst):
    """All (column tuple + component) rows, ascending (descending in the
    column order)."""
    return [c + (k,) for c in inst.tuples for k in range(1, inst.r + 1)]


def _T(inst, row):
    """T variable polynomial for a full row (cols + component)."""
    return inst.ring.T(row[:-1], row[-1])


def _resolve_instance(spec_or_inst, r, field):
    if isinstance(spec_or_inst, Instance):
        return spec_or_inst
    return instance(spec_or_inst, r=r, field=field)


def _nonstandard_pairs(inst):
    """Semistandard, non-standard pairs of rows, each with its standardized
    pair; raises ClosureError when a standardized tuple escapes the index
    set."""
    rows = _rows(inst)
    tset = inst._tuple_set
    out = []
    for a, b in itertools.combinations(rows, 2):
        # rows are enumerated ascending, so (a, b) is semistandard
        if is_standard_pair(a, b):
            continue
        c, d = standardize((a, b))
        for esc in (c, d):
            if esc[:-1] not in tset:
                raise ClosureError(
                    f"standardizing [{a}, {b}] produced {esc}, whose column "
                    f"tuple leaves the index set",
                    witness={"pair": (a, b), "escaped": esc},
                )
        out.append((a, b, c, d))
    return out


# ---------------------------------------------------------------------------
# fiber family: straightening binomials
# ---------------------------------------------------------------------------


def plucker_initial(index_source, r=1, field=QQ, shape=None):
    """Straightening binomials T_a T_b - T_c T_d over an index set.

    `index_source` may be a family description (generic / ladder / unit /
    custom) or a raw collection of column tuples (then the shape is inferred
    unless given).  The standardized pair must stay inside the index set;
    otherwise a ClosureError with the offending pair is raised.
    """
    if isinstance(index_source, Instance) or hasattr(index_source, "kind"):
        inst = _resolve_instance(index_source, r, field)
    else:
        tuples = [tuple(c) for c in index_source]
        if not tuples:
            raise SpecError("empty index set")
        if shape is None:
            n = len(tuples[0])
            m = max(c[-1] for c in tuples)
            shape = MatrixShape(n, m)
        inst = instance(CustomSpec(shape, tuple(tuples)), r=r, field=field)
    polys = []
    for a, b, c, d in _nonstandard_pairs(inst):
        polys.append(_T(inst, a) * _T(inst, b) - _T(inst, c) * _T(inst, d))
    return make_family("plucker_initial", "fiber", "initial", inst, polys, inst.sigma)


# ---------------------------------------------------------------------------
# Rees families for the initial ideals
# ---------------------------------------------------------------------------


def _check_rees_spec(inst, what):
    if inst.kind == "unit":
        raise SpecError(
            f"{what} presents Rees algebras of generic or ladder families; "
            "window families only carry the fiber machinery here"
        )


def en_initial(spec, r=1, field=QQ):
    """Adjacent-column exchange binomials
    x[i,c_i] T[c\\c_i;k] - x[i,c_{i+1}] T[c\\c_{i+1};k] over (n+1)-subsets c
    of the columns, for the rows i in [n] and components k in [r]; a binomial
    is included exactly when both deleted tuples lie in the index set."""
    inst = _resolve_instance(spec, r, field)
    _check_rees_spec(inst, "en_initial")
    n, m = inst.shape.n, inst.shape.m
    tset = inst._tuple_set
    polys = []
    for csub in itertools.combinations(range(1, m + 1), n + 1):
        for i in range(1, n + 1):
            drop_i = csub[: i - 1] + csub[i:]
            drop_next = csub[:i] + csub[i + 1 :]
            if drop_i not in tset or drop_next not in tset:
                continue
            for k in range(1, inst.r + 1):
                polys.append(
                    inst.ring.x(i, csub[i - 1]) * inst.ring.T(drop_i, k)
                    - inst.ring.x(i, csub[i]) * inst.ring.T(drop_next, k)
                )
    return make_family("en_initial", "rees", "initial", inst, polys, inst.sigma_prime)


def exchange_H(component_gens, shape=None, field=QQ, inst=None):
    """Exchange binomials x1*T[c;k] - x2*T[c';k] from equigenerated monomial
    generators, one list per component.

    For every component k, generator monomial g and variable x1, consider
    x1 * g and scan the variables dividing it from the smallest upward (in
    the row-major order where x[i,j] beats x[l,k] iff i < l or i = l, j < k);
    let x2 be the first divisor whose quotient is again a generator.  When
    x2 is strictly smaller than x1, emit x1*T[g;k] - x2*T[quotient;k].

    Generators may be given as column tuples or as diagonal monomials
    (one entry per matrix row); each component must be equigenerated.
    """
    comps = [_normalize_component(gens) for gens in component_gens]
    if not comps:
        raise SpecError("need at least one component")
    n = len(comps[0][0])
    for gens in comps:
        if any(len(c) != n for c in gens):
            raise SpecError("generators of unequal degree (not equigenerated)")
    if inst is None:
        maxcol = max(c[-1] for gens in comps for c in gens)
        shape = shape or MatrixShape(n, maxcol)
        ring = _ring_for_components(shape, comps, field)
    else:
        ring = inst.ring
        if len(comps) > inst.r:
            raise SpecError("more component generator lists than components")
    # tau-descending x variables, as positions
    xpos = ring.x_positions
    xvars = [ring.variables[p] for p in xpos]
    polys = []
    for k, gens in enumerate(comps, start=1):
        genset = set(gens)
        for c in sorted(gens):
            gmono = {(i, col) for i, col in enumerate(c, start=1)}
            for x1 in xvars:
                i1, j1 = x1.index
                # multiset x1 * g as a sorted tuple of (row, col) with mult
                prod = sorted(list(gmono) + [(i1, j1)])
                best = None
                for x2 in reversed(xvars):  # smallest variable first
                    i2, j2 = x2.index
                    if (i2, j2) not in prod:
                        continue
                    rest = list(prod)
                    rest.remove((i2, j2))
                    quot = _as_tuple(rest)
                    if quot is not None and quot in genset:
                        best = ((i2, j2), quot)
                        break
                if best is None:
                    continue
                (i2, j2), quot = best
                if (i2, j2) == (i1, j1):
                    continue
                if (i2, j2) < (i1, j1):
                    # witness is not smaller than x1 in the row-major order
                    continue
                polys.append(
                    ring.x(i1, j1) * ring.T(c, k) - ring.x(i2, j2) * ring.T(quot, k)
                )
    order = inst.sigma_prime if inst is not None else sigma_prime_order(ring)
    fam_inst = inst
    if fam_inst is None:
        fam_inst = _StandaloneContext(ring, shape, comps, field)
    return make_family("exchange_H", "rees", "initial", fam_inst, polys, order)


def _normalize_component(gens):
    """Generators -> sorted tuple of column tuples (diagonal data)."""
    out = []
    for g in gens:
        if isinstance(g, Polynomial):
            if len(g.terms) != 1:
                raise SpecError(f"generator {g!r} is not a monomial")
            ((mono, _),) = g.terms.items()
            pairs = []
            for p, e in enumerate(mono):
                if not e:
                    continue
                v = g.ring.variables[p]
                if v.family != "x" or e != 1:
                    raise SpecError(
                        f"generator {g!r} is not a squarefree x-monomial"
                    )
                pairs.append(v.index)
            c = _as_tuple(sorted(pairs))
            if c is None:
                raise SpecError(
                    f"generator {g!r} is not a diagonal monomial "
                    "(one entry per matrix row, columns increasing)"
                )
            out.append(c)
        else:
            out.append(tuple(int(v) for v in g))
    if not out:
        raise SpecError("empty generator list for a component")
    return sorted(set(out))


def _as_tuple(pairs):
    """(row, col) pairs -> column tuple when they form a diagonal (rows are
    exactly 1..n and columns strictly increase); None otherwise."""
    rows = [i for i, _ in pairs]
    if rows != list(range(1, len(pairs) + 1)):
        return None
    cols = tuple(j for _, j in pairs)
    if any(cols[i] >= cols[i + 1] for i in range(len(cols) - 1)):
        return None
    return cols


def _ring_for_components(shape, comps, field):
    xs = [xvar(i, j) for i in range(1, shape.n + 1) for j in range(1, shape.m + 1)]
    ts = [tvar(k) for k in range(1, len(comps) + 1)]
    Ts = [Tvar(c, k) for k, gens in enumerate(comps, start=1) for c in gens]
    return PolyRing(xs + ts + Ts, field=field, name=f"components {shape.n}x{shape.m}")


class _StandaloneContext:
    """Minimal stand-in for an Instance when exchange_H runs on raw
    component data: supplies the ring, the substitution images and a hash."""

    def __init__(self, ring, shape, comps, field):
        self.ring = ring
        self.shape = shape
        self.comps = comps
        self.field = field
        self.kind = "components"
        self.r = len(comps)

    def image(self, f, map_kind):
        if map_kind != "initial":
            raise ValueError("component data only carries the monomial map")
        ring = self.ring
        out = ring.zero()
        for mono, coeff in f.terms.items():
            base = list(mono)
            shift = ring.one_mono
            for p in ring.T_positions:
                e = mono[p]
                if e:
                    base[p] = 0
                    v = ring.variables[p]
                    img = ring.mono_from_pairs(
                        [(xvar(i, c), 1) for i, c in enumerate(v.cols, start=1)]
                        + [(ring.variables[ring.t_positions[v.component - 1]], 1)]
                    )
                    for _ in range(e):
                        shift = PolyRing.mono_mul(shift, img)
            out = out + ring.monomial(PolyRing.mono_mul(tuple(base), shift), coeff)
        return out

    def describe(self):
        sizes = ",".join(str(len(g)) for g in self.comps)
        return f"components {self.shape.n}x{self.shape.m} sizes [{sizes}]"

    def instance_hash(self):
        import hashlib
        import json

        blob = json.dumps(
            {
                "kind": "components",
                "n": self.shape.n,
                "m": self.shape.m,
                "comps": [[list(c) for c in g] for g in self.comps],
                "field": self.field.name,
            },
            sort_keys=True,
        )
        return hashlib.sha256(blob.encode()).hexdigest()


# ---------------------------------------------------------------------------
# Rees families for the actual minors
# ---------------------------------------------------------------------------


def en_full(spec, r=1, field=QQ):
    """Alternating relations sum_{j in [n+1]} (-1)^(i+j) x[i,c_j] T[c\\c_j;k]
    over (n+1)-subsets c of the columns, rows i in [n], components k in [r].
    Terms vanish (and are dropped) when the ladder kills either the matrix
    entry x[i,c_j] or the column tuple c\\c_j; relations with no surviving
    terms are discarded."""
    inst = _resolve_instance(spec, r, field)
    _check_rees_spec(inst, "en_full")
    n, m = inst.shape.n, inst.shape.m
    tset = inst._tuple_set
    polys = []
    for csub in itertools.combinations(range(1, m + 1), n + 1):
        for i in range(1, n + 1):
            terms = []
            for j in range(1, n + 2):
                cj = csub[j - 1]
                tup = csub[: j - 1] + csub[j:]
                if tup not in tset or not inst.has_entry(i, cj):
                    continue
                term = inst.ring.x(i, cj)
                terms.append((j, cj, tup, term))
            if not terms:
                continue
            for k in range(1, inst.r + 1):
                p = inst.ring.zero()
                for j, cj, tup, xv in terms:
                    t = xv * inst.ring.T(tup, k)
                    p = p + t if (i + j) % 2 == 0 else p - t
                if not p.is_zero():
                    polys.append(p)
    return make_family("en_full", "rees", "full", inst, polys, inst.lift)


# -- peeling ------------------------------------------------------------------


def _generic_peer(inst):
    """Generic instance of the same shape over QQ (the peeling arena)."""
    return instance(GenericSpec(inst.shape), r=1, field=QQ)


def _pair_product(gen, e, g):
    """|e| * |g| over the generic matrix, cached on the generic instance."""
    cache = getattr(gen, "_pair_product_cache", None)
    if cache is None:
        cache = {}
        gen._pair_product_cache = cache
    key = (e, g) if e <= g else (g, e)
    got = cache.get(key)
    if got is None:
        got = gen.minor(key[0]) * gen.minor(key[1])
        cache[key] = got
    return got


def _decompose_two_row(gen, mono):
    """Split a monomial that is a product of two diagonal monomials into its
    per-row (min, max) column tuples; None when the shape is wrong."""
    n = gen.shape.n
    rows = [[] for _ in range(n)]
    for p, exp in enumerate(mono):
        if not exp:
            continue
        v = gen.ring.variables[p]
        if v.family != "x":
            return None
        i, j = v.index
        rows[i - 1].extend([j] * exp)
    e, g = [], []
    for cols in rows:
        if len(cols) != 2:
            return None
        lo, hi = min(cols), max(cols)
        e.append(lo)
        g.append(hi)
    e, g = tuple(e), tuple(g)
    if any(e[i] >= e[i + 1] for i in range(n - 1)):
        return None
    if any(g[i] >= g[i + 1] for i in range(n - 1)):
        return None
    return e, g


def peel_straightening(gen, acols, bcols, ccols, dcols, allowed):
    """Exact coefficients of |a||b| - |c||d| in the standard-pair basis.

    Repeatedly removes the leading term (diagonal order on the generic
    matrix): it must be the diagonal product of a standard pair (e, g) from
    `allowed` (the vibration pairs); subtract its coefficient times |e||g|.
    Returns {(e, g): coefficient}.  Any decomposition failure or escape from
    `allowed` is a hard error carrying the offending monomial — it would
    falsify the straightening claim itself.
    """
    R = _pair_product(gen, acols, bcols) - _pair_product(gen, ccols, dcols)
    coeffs = {}
    tau = gen.tau
    while not R.is_zero():
        mono, lam = R.leading_term(tau)
        dec = _decompose_two_row(gen, mono)
        if dec is None:
            raise ClosureError(
                "leading term of the straightening residue is not a product "
                f"of two diagonal monomials: {gen.ring.mono_str(mono)}",
                witness={"pair": (acols, bcols), "monomial": gen.ring.mono_str(mono)},
            )
        e, g = dec
        if (e, g) not in allowed:
            raise ClosureError(
                f"straightening residue peeled a non-vibration pair {(e, g)} "
                f"for [{acols}, {bcols}]",
                witness={"pair": (acols, bcols), "peeled": (e, g)},
            )
        if (e, g) in coeffs:
            raise ClosureError(
                f"pair {(e, g)} peeled twice for [{acols}, {bcols}]",
                witness={"pair": (acols, bcols), "peeled": (e, g)},
            )
        coeffs[(e, g)] = lam
        R = R - _pair_product(gen, e, g).scale(lam)
    return coeffs


def plucker_lifted(spec, r=1, field=QQ):
    """Lifted straightening relations
    T_a T_b - T_c T_d - sum(lambda_{e,g} T_e T_g) for every non-standard pair
    of index rows, with coefficients peeled exactly over the generic matrix.

    For ladder families, correction terms whose tuples leave the index set
    are dropped (their minors vanish); for window families every vibration
    must stay inside the index set (hard error otherwise).  Every emitted
    relation is verified to map to zero under T[c;k] -> minor(c)*t[k].
    """
    inst = _resolve_instance(spec, r, field)
    gen = _generic_peer(inst)
    tset = inst._tuple_set
    drop_allowed = inst.kind in ("ladder", "generic")
    polys = []
    for a, b, c, d in _nonstandard_pairs(inst):
        vibs = vibrations(a, b)
        allowed = {(e[:-1], g[:-1]) for e, g in vibs}
        comp_of = {(e[:-1], g[:-1]): (e[-1], g[-1]) for e, g in vibs}
        coeffs = peel_straightening(gen, a[:-1], b[:-1], c[:-1], d[:-1], allowed)
        p = _T(inst, a) * _T(inst, b) - _T(inst, c) * _T(inst, d)
        for (e, g), lam in coeffs.items():
            if e not in tset or g not in tset:
                if not drop_allowed:
                    raise ClosureError(
                        f"vibration pair {(e, g)} of [{a}, {b}] leaves the "
                        "index set, but this family admits no vanishing minors",
                        witness={"pair": (a, b), "vibration": (e, g)},
                    )
                continue
            j1, j2 = comp_of[(e, g)]
            p = p - (inst.ring.T(e, j1) * inst.ring.T(g, j2)).scale(lam)
        img = inst.image_full(p)
        if not img.is_zero():
            raise ClosureError(
                f"lifted relation for [{a}, {b}] does not map to zero "
                "under T -> minor * t",
                witness={"pair": (a, b), "image": img.to_str()},
            )
        polys.append(p)
    return make_family("plucker_lifted", "rees", "full", inst, polys, inst.lift)


# ---------------------------------------------------------------------------
# combined families
# ---------------------------------------------------------------------------


def rees_initial_family(spec, r=1, field=QQ):
    """en_initial united with plucker_initial: the claimed basis of the
    presentation ideal of the Rees algebra of the initial ideals."""
    inst = _resolve_instance(spec, r, field)
    a = en_initial(inst, r, field)
    b = plucker_initial(inst, r, field)
    return a.union(
        b, kind="rees_initial", ambient="rees", map_kind="initial", order=inst.sigma_prime
    )


def rees_full_family(spec, r=1, field=QQ):
    """en_full united with plucker_lifted: the claimed basis of the
    presentation ideal of the Rees algebra of the actual minors."""
    inst = _resolve_instance(spec, r, field)
    a = en_full(inst, r, field)
    b = plucker_lifted(inst, r, field)
    return a.union(
        b, kind="rees_full", ambient="rees", map_kind="full", order=inst.lift
    )
