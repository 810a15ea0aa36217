"""Certification against independent oracles.

Oracles (deliberately brute-force, independent of the tableau machinery):

  * ``fiber_kernel_oracle``: kernel of T[c;k] -> image(c) * t[k] into K[x,t],
    either by block elimination (exact) or, for monomial images, by
    enumerating all T-monomials up to a degree bound and grouping them by
    image (exact up to the bound).
  * ``rees_kernel_oracle``: kernel of the map fixing x and sending
    T[c;k] -> image(c) * t[k], by eliminating the t block.

Certificates (all exact, with explicit witnesses on failure):

  * ``certify_groebner``: membership + S-pair closure + completeness against
    an oracle basis.
  * ``subduct`` / ``certify_sagbi``: subalgebra lifting of toric relations
    plus graded comparison of the initial algebra with the monoid generated
    by the generators' initial terms.
  * ``check_l_exchange``: exhaustive bounded check of the variable-exchange
    property for products of equigenerated monomial generators.
  * ``certify_minors_groebner``: S-pair closure of the nonzero maximal minors
    under the diagonal order and under seeded random lex probes.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import random
import time
from dataclasses import dataclass, field as dataclass_field

from .determinantal import MatrixShape, instance
from .poly import (
    PolyRing,
    Polynomial,
    QQ,
    Tvar,
    buchberger,
    eliminate,
    normal_form,
    permuted_lex,
    s_polynomial,
)
from .relations import RelationFamily, _normalize_component


class InconclusiveError(RuntimeError):
    """A bounded computation ran out of its budget before deciding."""

    def __init__(self, message, info=None):
        super().__init__(message)
        self.info = info or {}


VERIFIED, FALSIFIED, INCONCLUSIVE = "verified", "falsified", "inconclusive"


@dataclass
class Certificate:
    """Machine-checkable verdict for one claim on one instance."""

    claim: str
    verdict: str
    instance_hash: str
    order: str = ""
    bounds: dict = dataclass_field(default_factory=dict)
    witness: dict = dataclass_field(default_factory=dict)
    details: dict = dataclass_field(default_factory=dict)
    elapsed_ms: int = 0

    def to_dict(self):
        return {
            "claim": self.claim,
            "verdict": self.verdict,
            "instance_hash": self.instance_hash,
            "order": self.order,
            "bounds": self.bounds,
            "witness": self.witness,
            "details": self.details,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self, indent=None):
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @property
    def ok(self):
        return self.verdict == VERIFIED


class KernelBasis(list):
    """A list of kernel generators plus provenance metadata.

    complete -- True iff the method guarantees these generate the whole
                kernel ideal (elimination that finished); enumeration up to a
                degree bound sets this False and records the bound.
    """

    def __init__(self, elems, complete, method, bounds=None, order_name=""):
        super().__init__(elems)
        self.complete = complete
        self.method = method
        self.bounds = bounds or {}
        self.order_name = order_name


# ---------------------------------------------------------------------------
# kernel oracles
# ---------------------------------------------------------------------------


def _tuple_of_generator(g, order, allow_t=False):
    """Column tuple of a generator: the row-ordered columns of the x-part of
    its diagonal leading monomial."""
    mono = g.leading_monomial(order)
    pairs = []
    for p, e in enumerate(mono):
        if not e:
            continue
        v = g.ring.variables[p]
        if allow_t and v.family == "t":
            continue
        if v.family != "x" or e != 1:
            raise ValueError(
                f"generator {g!r} has a non-squarefree or non-x leading term"
            )
        pairs.append(v.index)
    pairs.sort()
    rows = [i for i, _ in pairs]
    if rows != list(range(1, len(rows) + 1)):
        raise ValueError(f"leading term of {g!r} is not a diagonal monomial")
    cols = tuple(j for _, j in pairs)
    if any(cols[i] >= cols[i + 1] for i in range(len(cols) - 1)):
        raise ValueError(f"leading term of {g!r} is not a diagonal monomial")
    return cols


def _resolve_oracle_input(gens, r, inst, map_kind):
    """Normalize oracle input to (instance, [(tuple, polynomial)])."""
    if inst is None:
        raise ValueError(
            "the kernel oracles need an Instance so the T variables exist; "
            "pass inst=..."
        )
    if r is not None and r != inst.r:
        raise ValueError(f"r={r} disagrees with the instance ({inst.r})")
    if gens is None:
        pairs = inst.generators(map_kind)
    else:
        tau = inst.tau
        pairs = [(_tuple_of_generator(g, tau), g) for g in gens]
        known = set(inst._tuple_set)
        for c, _ in pairs:
            if c not in known:
                raise ValueError(f"generator tuple {c} has no T variable")
    return pairs


def fiber_kernel_oracle(
    gens=None,
    r=None,
    degree_bound=None,
    method="fiber_enumeration",
    *,
    inst=None,
    map_kind="initial",
):
    """Kernel of K[T] -> K[x,t], T[c;k] |-> image(c) * t[k].

    method 'elimination': exact; Groebner basis of the kernel under the
    T-block grevlex order (restriction of the elimination order).
    method 'fiber_enumeration': requires monomial images; enumerates all
    T-monomials of degree <= degree_bound, groups them by image and emits
    member-minus-smallest binomials, trimmed by reduction; exact up to the
    bound and independent of any Groebner machinery on the claimed side.
    """
    pairs = _resolve_oracle_input(gens, r, inst, map_kind)
    ring = inst.ring
    if method == "elimination":
        mega = [
            ring.T(c, k) - g * ring.t(k)
            for c, g in pairs
            for k in range(1, inst.r + 1)
        ]
        kill = list(ring.x_positions) + list(ring.t_positions)
        eb = eliminate(mega, kill, order_tiebreak=inst.sigma, degree_bound=degree_bound)
        return KernelBasis(
            list(eb),
            complete=eb.complete,
            method="elimination",
            bounds={"degree_bound": degree_bound},
            order_name=inst.sigma.name,
        )
    if method != "fiber_enumeration":
        raise ValueError(f"unknown oracle method {method!r}")
    if degree_bound is None:
        degree_bound = 4
    images = {}
    for c, g in pairs:
        if len(g.terms) != 1:
            raise ValueError(
                "fiber_enumeration needs monomial generators; "
                f"{g!r} has {len(g.terms)} terms"
            )
        for k in range(1, inst.r + 1):
            Tp = ring.position[Tvar(c, k)]
            img = inst.image_initial(ring.T(c, k))
            ((mono, _),) = img.terms.items()
            images[Tp] = mono
    sigma = inst.sigma
    Tpositions = sorted(images)
    kept = []
    gb = None
    for d in range(2, degree_bound + 1):
        classes = {}
        for combo in itertools.combinations_with_replacement(Tpositions, d):
            mono = ring.one_mono
            img = ring.one_mono
            for p in combo:
                mono = PolyRing.mono_mul(mono, ring.unit_mono(p))
                img = PolyRing.mono_mul(img, images[p])
            classes.setdefault(img, []).append(mono)
        candidates = []
        for img in sorted(classes):
            members = classes[img]
            if len(members) < 2:
                continue
            members.sort(key=sigma.key)
            base = members[0]
            for other in members[1:]:
                candidates.append(
                    Polynomial(ring, {other: ring.field.one, base: ring.field.convert(-1)})
                )
        candidates.sort(key=lambda p: sigma.key(p.leading_monomial(sigma)))
        fresh = []
        for cand in candidates:
            if gb is not None and normal_form(cand, gb, sigma).is_zero():
                continue
            fresh.append(cand)
        if fresh:
            kept.extend(fresh)
            gb = buchberger(kept, sigma)
    return KernelBasis(
        kept,
        complete=False,
        method="fiber_enumeration",
        bounds={"degree_bound": degree_bound},
        order_name=sigma.name,
    )


def rees_kernel_oracle(
    spec=None,
    r=1,
    degree_bound=None,
    *,
    inst=None,
    map_kind="full",
    field=QQ,
    cap=30,
):
    """Kernel of R[T] -> R[t], fixing x and sending T[c;k] -> image(c)*t[k],
    by eliminating the t block; the result is a Groebner basis of the kernel
    under the x-then-T block order.  Refuses instances with more than `cap`
    T variables (raise InconclusiveError) -- elimination beyond desk scale is
    not a trustworthy oracle run."""
    if inst is None:
        inst = instance(spec, r=r, field=field)
    size = len(inst.tuples) * inst.r
    if cap is not None and size > cap:
        raise InconclusiveError(
            f"rees_kernel_oracle: instance has {size} T variables "
            f"(cap {cap}); refusing the elimination",
            info={"size": size, "cap": cap},
        )
    ring = inst.ring
    mega = [
        ring.T(c, k) - g * ring.t(k)
        for c, g in inst.generators(map_kind)
        for k in range(1, inst.r + 1)
    ]
    eb = eliminate(
        mega, list(ring.t_positions), order_tiebreak=inst.sigma_prime,
        degree_bound=degree_bound,
    )
    return KernelBasis(
        list(eb),
        complete=eb.complete,
        method="elimination",
        bounds={"degree_bound": degree_bound, "cap": cap},
        order_name=inst.sigma_prime.name,
    )


# ---------------------------------------------------------------------------
# Groebner certification
# ---------------------------------------------------------------------------


def certify_groebner(claimed, order=None, kernel_oracle=None):
    """Three-part certificate that `claimed` (a RelationFamily) is a Groebner
    basis of the kernel its map describes.

      part 1: every member maps to zero (membership);
      part 2: every S-pair of members reduces to zero against the family
              (no S-pair is skipped -- the trail is the certificate);
      part 3: when an oracle basis is supplied, every oracle generator
              reduces to zero against the family (completeness).

    Verdict: falsified with a witness on any failure; verified when all
    supplied parts pass and the oracle (if any) was complete; inconclusive
    when the oracle was truncated.
    """
    start = time.monotonic()
    order = order or claimed.order
    inst = claimed.inst
    claim = f"groebner:{claimed.kind}:{claimed.ambient}:{order.name}"
    bounds = {"relations": len(claimed.polys)}
    details = {"instance": inst.describe()}

    def finish(verdict, witness=None, **extra):
        details.update(extra)
        return Certificate(
            claim=claim,
            verdict=verdict,
            instance_hash=inst.instance_hash(),
            order=order.name,
            bounds=bounds,
            witness=witness or {},
            details=details,
            elapsed_ms=int((time.monotonic() - start) * 1000),
        )

    # an empty family is a legitimate claim (the zero ideal has the empty
    # Groebner basis); parts 1 and 2 hold vacuously and part 3 settles it
    polys = list(claimed.polys)
    for p in polys:
        img = inst.image(p, claimed.map_kind)
        if not img.is_zero():
            return finish(
                FALSIFIED,
                {
                    "part": 1,
                    "relation": p.to_str(order),
                    "image": img.to_str(),
                },
            )
    details["membership"] = f"{len(polys)} relations map to zero"

    spairs = 0
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            s = s_polynomial(polys[i], polys[j], order)
            if s.is_zero():
                continue
            spairs += 1
            rem = normal_form(s, polys, order)
            if not rem.is_zero():
                return finish(
                    FALSIFIED,
                    {
                        "part": 2,
                        "pair": [polys[i].to_str(order), polys[j].to_str(order)],
                        "remainder": rem.to_str(order),
                    },
                )
    bounds["spairs"] = spairs
    details["closure"] = f"{spairs} S-pairs reduce to zero"

    if kernel_oracle is None:
        details["completeness"] = "not checked (no oracle supplied)"
        return finish(VERIFIED)

    for g in kernel_oracle:
        rem = normal_form(g, polys, order)
        if not rem.is_zero():
            return finish(
                FALSIFIED,
                {
                    "part": 3,
                    "oracle_generator": g.to_str(order),
                    "remainder": rem.to_str(order),
                },
            )
    bounds["oracle"] = {
        "method": kernel_oracle.method,
        "size": len(kernel_oracle),
        "complete": kernel_oracle.complete,
        **kernel_oracle.bounds,
    }
    if not kernel_oracle.complete:
        details["completeness"] = (
            "oracle generators reduce to zero, but the oracle was truncated"
        )
        return finish(INCONCLUSIVE)
    details["completeness"] = (
        f"{len(kernel_oracle)} oracle generators reduce to zero"
    )
    return finish(VERIFIED)


# ---------------------------------------------------------------------------
# subduction and SAGBI certification
# ---------------------------------------------------------------------------


def _factor_over_monoid(mono, lead_monos, start=0):
    """Exponents a with mono == prod(lead_monos[i]^a[i]), combinations with
    non-decreasing index; None if impossible."""
    if all(e == 0 for e in mono):
        return []
    for idx in range(start, len(lead_monos)):
        q = PolyRing.mono_div(mono, lead_monos[idx])
        if q is None:
            continue
        rest = _factor_over_monoid(q, lead_monos, idx)
        if rest is not None:
            return [idx] + rest
    return None


def subduct(f, gens, ambient_order, max_steps=100000):
    """Subduction of f against `gens`: repeatedly factor the leading term
    over the generators' leading terms and subtract the matching product.
    Returns the residue (zero iff f subducts into the subalgebra along this
    trail).  Generators need pairwise distinct leading monomials."""
    ring = f.ring
    field = ring.field
    entries = []
    seen = set()
    for g in gens:
        if g.is_zero():
            raise ValueError("zero generator")
        lm, lc = g.leading_term(ambient_order)
        if lm in seen:
            raise ValueError("generators with equal leading terms")
        seen.add(lm)
        entries.append((lm, lc, g))
    lead_monos = [lm for lm, _, _ in entries]
    steps = 0
    while not f.is_zero():
        steps += 1
        if steps > max_steps:
            raise InconclusiveError(
                f"subduction exceeded {max_steps} steps", info={"steps": steps}
            )
        mono, coeff = f.leading_term(ambient_order)
        expo = _factor_over_monoid(mono, lead_monos)
        if expo is None:
            return f
        prod = ring.one()
        cprod = field.one
        for idx in expo:
            prod = prod * entries[idx][2]
            cprod = field.mul(cprod, entries[idx][1])
        f = f - prod.scale(field.div(coeff, cprod))
    return f


def _piece_dimension_check(inst, gen_products, umonos, piece_tag, order):
    """Compare the monoid monomials (leads of the generating products) with
    the leading monomials of the actual span; returns (ok, witness)."""
    field = inst.ring.field
    pivots = {}
    monoid = set()
    for prod_poly, prod_lead in gen_products:
        for u in umonos:
            monoid.add(PolyRing.mono_mul(u, prod_lead))
            row = {PolyRing.mono_mul(u, m): c for m, c in prod_poly.terms.items()}
            while row:
                lead = max(row, key=order.key)
                piv = pivots.get(lead)
                if piv is None:
                    inv = field.inv(row[lead])
                    pivots[lead] = {m: field.mul(c, inv) for m, c in row.items()}
                    break
                coef = row[lead]
                for m, c in piv.items():
                    nc = field.sub(row.get(m, field.zero), field.mul(coef, c))
                    if field.is_zero(nc):
                        row.pop(m, None)
                    else:
                        row[m] = nc
    extra = set(pivots) - monoid
    if extra:
        w = sorted(extra, key=order.key)[0]
        return False, {
            "piece": piece_tag,
            "initial_monomial_outside_monoid": inst.ring.mono_str(w),
            "span_dimension": len(pivots),
            "monoid_count": len(monoid),
        }
    # monoid is always a subset of the span's leads, so equality holds here
    return True, None


def certify_sagbi(gens_with_tags, toric_relations, ambient_order, degree_bound=4, *, inst=None, max_piece_rows=200000):
    """Two-part subalgebra-basis certificate.

      part 1 (lifting): every relation in `toric_relations` evaluates, under
      T[c;k] -> the generator tagged (c,k), to an element that subducts to
      zero against the generators.
      part 2 (graded initial-algebra equality): for every graded piece with
      p >= 1 tagged factors and e extra coordinate-generator degree,
      p + e <= degree_bound, the leading monomials of the span of products
      coincide with the monoid generated by the generators' leading terms.

    gens_with_tags: list of (Polynomial, k or None); tagged generators are
    the component-k images (their column tuple is recovered from the leading
    diagonal), untagged ones are plain coordinates.
    """
    start = time.monotonic()
    if inst is None and isinstance(toric_relations, RelationFamily):
        inst = toric_relations.inst
    ring = inst.ring
    field = ring.field
    claim = f"sagbi:{inst.kind}:{ambient_order.name}"
    bounds = {"degree_bound": degree_bound}
    details = {"instance": inst.describe()}

    def finish(verdict, witness=None, **extra):
        details.update(extra)
        return Certificate(
            claim=claim,
            verdict=verdict,
            instance_hash=inst.instance_hash(),
            order=ambient_order.name,
            bounds=bounds,
            witness=witness or {},
            details=details,
            elapsed_ms=int((time.monotonic() - start) * 1000),
        )

    tagged = {}
    plain = []
    allgens = []
    for g, tag in gens_with_tags:
        allgens.append(g)
        if tag is None:
            plain.append(g)
            continue
        cols = _tuple_of_generator(g, ambient_order, allow_t=True)
        if (cols, tag) in tagged:
            return finish(FALSIFIED, {"reason": f"duplicate tag {(cols, tag)}"})
        tagged[(cols, tag)] = g

    # part 1: evaluate each toric relation on the actual generators
    for rel in toric_relations:
        val = _evaluate_on_generators(rel, tagged, inst)
        residue = subduct(val, allgens, ambient_order)
        if not residue.is_zero():
            return finish(
                FALSIFIED,
                {
                    "part": 1,
                    "relation": rel.to_str(),
                    "residue": residue.to_str(),
                },
            )
    details["lifting"] = f"{len(list(toric_relations))} relations lift"

    # part 2: piecewise initial-algebra equality
    tuples = sorted({c for c, _ in tagged})
    by_tuple = {}
    for (c, k), g in tagged.items():
        by_tuple.setdefault(c, g)
    xdeg_plain = 1 if plain else None
    pieces = []
    for p in range(1, degree_bound + 1):
        emax = degree_bound - p if plain else 0
        for e in range(0, emax + 1):
            pieces.append((p, e))
    for p, e in pieces:
        prods = []
        for combo in itertools.combinations_with_replacement(tuples, p):
            poly = ring.one()
            lead = ring.one_mono
            for c in combo:
                g = by_tuple[c]
                poly = poly * g
                lead = PolyRing.mono_mul(lead, g.leading_monomial(ambient_order))
            prods.append((poly, lead))
        if e:
            umonos = [
                u.leading_monomial(ambient_order)
                for u in _monomials_of_degree(plain, e, ring)
            ]
        else:
            umonos = [ring.one_mono]
        if len(prods) * len(umonos) > max_piece_rows:
            return finish(
                INCONCLUSIVE,
                {
                    "piece": [p, e],
                    "rows": len(prods) * len(umonos),
                    "cap": max_piece_rows,
                },
            )
        ok, witness = _piece_dimension_check(
            inst, prods, umonos, [p, e], ambient_order
        )
        if not ok:
            witness["part"] = 2
            return finish(FALSIFIED, witness)
    details["pieces"] = f"{len(pieces)} graded pieces match"
    return finish(VERIFIED)


def _monomials_of_degree(plain_gens, e, ring):
    """All degree-e products of the plain (coordinate) generators."""
    out = []
    for combo in itertools.combinations_with_replacement(range(len(plain_gens)), e):
        poly = ring.one()
        for idx in combo:
            poly = poly * plain_gens[idx]
        out.append(poly)
    return out


def _evaluate_on_generators(rel, tagged, inst):
    """Substitute T[c;k] -> tagged generator into a relation; x and t pass
    through."""
    ring = inst.ring
    out = ring.zero()
    for mono, coeff in rel.terms.items():
        base = list(mono)
        factor = ring.one()
        for p in ring.T_positions:
            ex = mono[p]
            if ex:
                base[p] = 0
                v = ring.variables[p]
                g = tagged.get((v.cols, v.component))
                if g is None:
                    raise ValueError(
                        f"no generator tagged for {v.name} in the relation"
                    )
                factor = factor * g**ex
        out = out + factor.mono_scale(tuple(base), coeff)
    return out


# ---------------------------------------------------------------------------
# strong exchange checking
# ---------------------------------------------------------------------------


def check_l_exchange(component_gens, gamma_bound=2, *, shape=None):
    """Exhaustively check, for all component multidegrees gamma with
    1 <= |gamma| <= gamma_bound, the variable-exchange property: whenever two
    products u, v of generators (gamma_i factors from component i) first
    differ (scanning variables from the largest downward) at a variable where
    v has strictly larger degree, some factor of u admits an exchange that
    moves a strictly smaller variable of the factor up to that variable,
    landing again in the component's generator set.

    Falsification produces an explicit witness: the factorization of u, the
    monomial v, and the position (l0, k0) where no factor exchanges.
    """
    start = time.monotonic()
    comps = [_normalize_component(g) for g in component_gens]
    n = len(comps[0][0])
    for gens in comps:
        for c in gens:
            if len(c) != n or any(a >= b for a, b in zip(c, c[1:])) or c[0] < 1:
                raise ValueError(
                    f"generator tuple {c} is not a width-{n} strictly "
                    "increasing column tuple"
                )
    maxcol = max(c[-1] for gens in comps for c in gens)
    if shape is None:
        shape = MatrixShape(n, maxcol)
    N = shape.n * shape.m
    posof = {}
    varat = []
    for i in range(1, shape.n + 1):
        for j in range(1, shape.m + 1):
            posof[(i, j)] = len(varat)
            varat.append((i, j))

    def vec_of(c):
        v = [0] * N
        for i, col in enumerate(c, start=1):
            v[posof[(i, col)]] += 1
        return tuple(v)

    comp_vecs = [[vec_of(c) for c in gens] for gens in comps]
    claim = f"l_exchange:{shape.n}x{shape.m}:r={len(comps)}"
    blob = json.dumps([[list(c) for c in g] for g in comps], sort_keys=True)
    ih = hashlib.sha256(blob.encode()).hexdigest()

    # per generator: positions (l0,k0) where an exchange exists
    ok_positions = []
    for k, gens in enumerate(comps):
        genset = set(comp_vecs[k])
        per = []
        for gi, c in enumerate(gens):
            gv = comp_vecs[k][gi]
            okset = set()
            support = [p for p, e in enumerate(gv) if e]
            for p0 in range(N):
                hit = False
                for p1 in support:
                    if p1 <= p0:
                        continue  # need a strictly smaller variable removed
                    w = list(gv)
                    w[p1] -= 1
                    w[p0] += 1
                    if tuple(w) in genset:
                        hit = True
                        break
                if hit:
                    okset.add(p0)
            per.append(okset)
        ok_positions.append(per)

    gammas = []
    r = len(comps)
    for total in range(1, gamma_bound + 1):
        for combo in itertools.combinations_with_replacement(range(r), total):
            gamma = [0] * r
            for i in combo:
                gamma[i] += 1
            gammas.append(tuple(gamma))

    pairs_checked = 0
    for gamma in gammas:
        factor_lists = []
        for k, cnt in enumerate(gamma):
            if cnt == 0:
                continue
            factor_lists.append(
                [
                    list(combo)
                    for combo in itertools.combinations_with_replacement(
                        range(len(comps[k])), cnt
                    )
                ]
            )
        comps_used = [k for k, cnt in enumerate(gamma) if cnt]
        us = []
        for pick in itertools.product(*factor_lists):
            vec = (0,) * N
            oks = []
            tags = []
            for k, idxs in zip(comps_used, pick):
                for gi in idxs:
                    vec = PolyRing.mono_mul(vec, comp_vecs[k][gi])
                    oks.append(ok_positions[k][gi])
                    tags.append((k + 1, comps[k][gi]))
            us.append((vec, oks, tags))
        # prefix index over product monomials
        index = {}
        vset = set()
        for vec, _, _ in us:
            if vec in vset:
                continue
            vset.add(vec)
            b = bytes(vec)
            for p in range(N):
                key = (p, b[:p])
                got = index.get(key)
                if got is None or vec[p] > got[0]:
                    index[key] = (vec[p], vec)
        for vec, oks, tags in us:
            union = set().union(*oks) if oks else set()
            b = bytes(vec)
            for p in range(N):
                if p in union:
                    continue
                got = index.get((p, b[:p]))
                pairs_checked += 1
                if got is not None and got[0] > vec[p]:
                    l0, k0 = varat[p]
                    vvec = got[1]
                    vmono = " * ".join(
                        f"x[{varat[q][0]},{varat[q][1]}]" + ("" if e == 1 else f"^{e}")
                        for q, e in enumerate(vvec)
                        if e
                    )
                    return Certificate(
                        claim=claim,
                        verdict=FALSIFIED,
                        instance_hash=ih,
                        order="tau",
                        bounds={"gamma_bound": gamma_bound},
                        witness={
                            "gamma": list(gamma),
                            "u_factors": [
                                {"component": k, "tuple": list(c)} for k, c in tags
                            ],
                            "v": vmono,
                            "position": [l0, k0],
                            "reason": (
                                f"no factor of u admits an exchange into x[{l0},{k0}]"
                            ),
                        },
                        details={"pairs_checked": pairs_checked},
                        elapsed_ms=int((time.monotonic() - start) * 1000),
                    )
    return Certificate(
        claim=claim,
        verdict=VERIFIED,
        instance_hash=ih,
        order="tau",
        bounds={"gamma_bound": gamma_bound},
        details={
            "gammas": len(gammas),
            "pairs_checked": pairs_checked,
        },
        elapsed_ms=int((time.monotonic() - start) * 1000),
    )


# ---------------------------------------------------------------------------
# universal-style Groebner probing for the minors themselves
# ---------------------------------------------------------------------------


def certify_minors_groebner(spec, order=None, probes=5, seed=None, field=QQ):
    """Check that the nonzero maximal minors are a Groebner basis under the
    row-lex diagonal order and under `probes` random variable-permutation lex
    orders (seeded deterministically from the instance)."""
    start = time.monotonic()
    inst = instance(spec, r=1, field=field)
    gens = [inst.minor(c) for c in inst.tuples]
    claim = f"minors_groebner:{inst.kind}"
    if seed is None:
        seed = int(inst.instance_hash()[:8], 16)
    rng = random.Random(seed)
    orders = [inst.tau if order is None else order]
    xpos = list(inst.ring.x_positions)
    for _ in range(probes):
        perm = xpos[:]
        rng.shuffle(perm)
        orders.append(permuted_lex(inst.ring, perm))
    spairs = 0
    for od in orders:
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                s = s_polynomial(gens[i], gens[j], od)
                if s.is_zero():
                    continue
                spairs += 1
                rem = normal_form(s, gens, od)
                if not rem.is_zero():
                    return Certificate(
                        claim=claim,
                        verdict=FALSIFIED,
                        instance_hash=inst.instance_hash(),
                        order=od.name,
                        bounds={"probes": probes, "seed": seed},
                        witness={
                            "order": od.name,
                            "pair": [gens[i].to_str(od), gens[j].to_str(od)],
                            "remainder": rem.to_str(od),
                        },
                        details={"spairs": spairs},
                        elapsed_ms=int((time.monotonic() - start) * 1000),
                    )
    return Certificate(
        claim=claim,
        verdict=VERIFIED,
        instance_hash=inst.instance_hash(),
        order="tau+random-lex",
        bounds={"probes": probes, "seed": seed},
        details={"orders": len(orders), "spairs": spairs, "gens": len(gens)},
        elapsed_ms=int((time.monotonic() - start) * 1000),
    )
