"""Command-line interface.

Subcommands
-----------
generate     build generator families for an instance and print them
verify       run a certificate and report verified / falsified / inconclusive
standardize  straighten a tableau; for a two-row tableau also list the
             exchange candidates used by the lifting construction
oracle       run a kernel oracle directly and print its basis

Exit codes: 0 verified (or plain success), 1 falsified, 2 inconclusive,
3 and up for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .determinantal import (
    CustomSpec,
    GenericSpec,
    LadderSpec,
    MatrixShape,
    SpecError,
    UnitIntervalSpec,
    instance,
)
from .poly import DomainError, PrimeField, QQ
from .relations import (
    ClosureError,
    en_full,
    en_initial,
    exchange_H,
    plucker_initial,
    plucker_lifted,
    rees_full_family,
    rees_initial_family,
)
from .tableau import is_standard, is_semistandard, standardize, vibrations
from .verify import (
    FALSIFIED,
    INCONCLUSIVE,
    VERIFIED,
    Certificate,
    InconclusiveError,
    certify_groebner,
    certify_minors_groebner,
    certify_sagbi,
    check_l_exchange,
    fiber_kernel_oracle,
    rees_kernel_oracle,
)

EXIT_VERIFIED = 0
EXIT_FALSIFIED = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3

_VERDICT_EXIT = {VERIFIED: EXIT_VERIFIED, FALSIFIED: EXIT_FALSIFIED,
                 INCONCLUSIVE: EXIT_INCONCLUSIVE}

DEFAULT_DEGREE_BOUND = 4
DEFAULT_GAMMA = 2
DEFAULT_PRIME = 32003
DEFAULT_CAP = 30


class CliError(Exception):
    """Input or usage problem; maps to exit code 3."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse exits 2 on usage errors; 2 means inconclusive here
        self.print_usage(sys.stderr)
        raise CliError(message)


# ---------------------------------------------------------------------------
# problem specification files
# ---------------------------------------------------------------------------


_KNOWN_KEYS = {
    "schema", "kind", "rows", "cols", "ladder_rows", "intervals", "tuples",
    "r", "field", "degree_bound", "gamma", "cap",
}


def _require_positive_int(key, value):
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise CliError(f"'{key}' must be a positive integer")


def parse_spec(data):
    """Validate a problem-specification dict; returns (spec, options)."""
    if not isinstance(data, dict):
        raise CliError("specification must be a JSON object")
    unknown = set(data) - _KNOWN_KEYS
    if unknown:
        raise CliError(f"unknown specification keys: {sorted(unknown)}")
    if data.get("schema", 1) != 1:
        raise CliError(f"unsupported schema version {data.get('schema')!r}")
    for key in ("rows", "cols"):
        if key not in data:
            raise CliError(f"specification needs '{key}'")
        if not isinstance(data[key], int) or data[key] < 1:
            raise CliError(f"'{key}' must be a positive integer")
    try:
        shape = MatrixShape(data["rows"], data["cols"])
    except SpecError as e:
        raise CliError(str(e))
    kind = data.get("kind", "generic")
    try:
        if kind == "generic":
            spec = GenericSpec(shape)
        elif kind == "ladder":
            rows = data.get("ladder_rows")
            if rows is None:
                raise CliError("ladder specification needs 'ladder_rows'")
            spec = LadderSpec(shape, rows=[tuple(x) for x in rows])
        elif kind == "unit_interval":
            ivs = data.get("intervals")
            if ivs is None:
                raise CliError("unit_interval specification needs 'intervals'")
            spec = UnitIntervalSpec(shape, intervals=[tuple(x) for x in ivs])
        elif kind == "custom":
            tuples = data.get("tuples")
            if tuples is None:
                raise CliError("custom specification needs 'tuples'")
            spec = CustomSpec(shape, [tuple(x) for x in tuples])
        else:
            raise CliError(f"unknown kind {kind!r}")
    except SpecError as e:
        raise CliError(f"invalid {kind} specification: {e}")

    fdesc = data.get("field", "QQ")
    if fdesc in ("QQ", "Q", "rational"):
        field = QQ
    elif isinstance(fdesc, int):
        try:
            field = PrimeField(fdesc)
        except ValueError as e:
            raise CliError(f"invalid field: {e}")
    elif fdesc in ("Fp", "prime"):
        field = PrimeField(DEFAULT_PRIME)
    else:
        raise CliError(f"unknown field {fdesc!r} (use 'QQ' or a prime)")
    options = {
        "r": data.get("r", 1),
        "field": field,
        "degree_bound": data.get("degree_bound", DEFAULT_DEGREE_BOUND),
        "gamma": data.get("gamma", DEFAULT_GAMMA),
        "cap": data.get("cap", DEFAULT_CAP),
    }
    for key in ("r", "degree_bound", "gamma", "cap"):
        _require_positive_int(key, options[key])
    return spec, options


def load_spec(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as e:
        raise CliError(f"cannot read specification file: {e}")
    except json.JSONDecodeError as e:
        raise CliError(f"specification file is not valid JSON: {e}")
    return parse_spec(data)


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------


def _emit(text, out):
    if out:
        try:
            with open(out, "w") as fh:
                fh.write(text if text.endswith("\n") else text + "\n")
        except OSError as e:
            raise CliError(f"cannot write output file: {e}")
    else:
        print(text)


def _family_payload(fam):
    return {
        "kind": fam.kind,
        "ambient": fam.ambient,
        "map": fam.map_kind,
        "order": fam.order.name,
        "instance": fam.inst.describe(),
        "instance_hash": fam.inst.instance_hash(),
        "count": len(fam.polys),
        "relations": fam.lines(),
    }


def _print_families(families, fmt, out):
    if fmt == "json":
        _emit(json.dumps([_family_payload(f) for f in families], indent=2), out)
        return
    chunks = []
    for fam in families:
        head = (f"# {fam.kind} [{fam.ambient}/{fam.map_kind}] "
                f"{fam.inst.describe()} order={fam.order.name} "
                f"({len(fam.polys)} relations)")
        chunks.append("\n".join([head] + [f"  {s}" for s in fam.lines()]))
    _emit("\n".join(chunks), out)


def _print_certs(certs, fmt, out):
    if fmt == "json":
        payload = [c.to_dict() for c in certs]
        _emit(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2), out)
    else:
        lines = []
        for c in certs:
            order_part = f"order={c.order} " if c.order else ""
            lines.append(f"{c.claim}: {c.verdict.upper()}  "
                         f"[{order_part}elapsed={c.elapsed_ms}ms]")
            if c.witness:
                lines.append(f"  witness: {json.dumps(c.witness, sort_keys=True)}")
            for k, v in sorted(c.details.items()):
                lines.append(f"  {k}: {v}")
        _emit("\n".join(lines), out)
    worst = EXIT_VERIFIED
    for c in certs:
        worst = max(worst, _VERDICT_EXIT[c.verdict])
    return worst


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _gens_family_payload(inst, map_kind):
    gens = inst.generators(map_kind)
    return {
        "instance": inst.describe(),
        "instance_hash": inst.instance_hash(),
        "map": map_kind,
        "count": len(gens) * inst.r,
        "generators": [
            {"tuple": list(c), "component": k,
             "image": (g * inst.ring.t(k)).to_str()}
            for c, g in gens
            for k in range(1, inst.r + 1)
        ],
    }


def cmd_generate(args):
    spec, opts = load_spec(args.spec)
    inst = instance(spec, r=opts["r"], field=opts["field"])
    which = args.which
    skip_inapplicable = which == "all"

    def build(name):
        r, field = opts["r"], opts["field"]
        if name == "en":
            return (en_initial(spec, r=r, field=field) if args.map == "initial"
                    else en_full(spec, r=r, field=field))
        if name == "plucker-initial":
            return plucker_initial(spec, r=r, field=field)
        if name == "plucker-lifted":
            return plucker_lifted(spec, r=r, field=field)
        comps = [list(inst.tuples) for _ in range(inst.r)]
        return exchange_H(comps, inst=inst)

    wanted = (["en", "plucker-initial", "plucker-lifted", "exchange-h"]
              if which == "all" else [] if which == "gens" else [which])
    fams, skipped = [], []
    try:
        for name in wanted:
            try:
                fams.append(build(name))
            except SpecError as e:
                if not skip_inapplicable:
                    raise
                skipped.append((name, str(e)))
    except SpecError as e:
        raise CliError(str(e))
    except ClosureError as e:
        print(f"construction failed: {e}", file=sys.stderr)
        return EXIT_FALSIFIED

    if args.format == "json":
        payload = {}
        if which in ("gens", "all"):
            payload["generators"] = _gens_family_payload(inst, args.map)
        if fams:
            payload["families"] = [_family_payload(f) for f in fams]
        if skipped:
            payload["skipped"] = [{"family": n, "reason": r} for n, r in skipped]
        _emit(json.dumps(payload, indent=2), args.out)
        return EXIT_VERIFIED

    text = []
    if which in ("gens", "all"):
        pl = _gens_family_payload(inst, args.map)
        text.append(f"# generators [{args.map}] {inst.describe()}")
        text += [f"  T[{' '.join(str(x) for x in g['tuple'])};{g['component']}]"
                 f" -> {g['image']}" for g in pl["generators"]]
    for fam in fams:
        text.append(f"# {fam.kind} [{fam.ambient}/{fam.map_kind}] "
                    f"{fam.inst.describe()} order={fam.order.name} "
                    f"({len(fam.polys)} relations)")
        text += [f"  {s}" for s in fam.lines()]
    for name, reason in skipped:
        text.append(f"# {name}: skipped ({reason})")
    _emit("\n".join(text), args.out)
    return EXIT_VERIFIED


def _sagbi_inputs(inst, ambient):
    """Generators with tags plus the toric relations used for lifting."""
    ring = inst.ring
    gens = []
    if ambient == "rees":
        gens += [(ring.x(*v.index), None)
                 for v in ring.variables if v.family == "x"]
    gens += [(g * ring.t(k), k)
             for c, g in inst.generators("full")
             for k in range(1, inst.r + 1)]
    if ambient == "rees":
        toric = rees_initial_family(inst.spec, r=inst.r, field=inst.field)
    else:
        toric = plucker_initial(inst.spec, r=inst.r, field=inst.field)
    return gens, toric


def cmd_verify(args):
    spec, opts = load_spec(args.spec)
    if args.degree_bound is not None:
        _require_positive_int("degree-bound", args.degree_bound)
        opts["degree_bound"] = args.degree_bound
    if args.gamma is not None:
        _require_positive_int("gamma", args.gamma)
        opts["gamma"] = args.gamma
    inst = instance(spec, r=opts["r"], field=opts["field"])
    # `all` runs the claims that are expected to hold for the instance kind;
    # anything can still be requested (and honestly falsified) by name
    if args.claim != "all":
        claims = [args.claim]
    elif spec.kind == "unit":
        claims = ["fiber-gb", "minors-gb", "sagbi"]
    else:
        claims = ["fiber-gb", "minors-gb", "l-exchange", "rees-gb", "sagbi"]
    certs = []
    for claim in claims:
        try:
            certs.append(_run_claim(claim, spec, opts, inst, args))
        except InconclusiveError as e:
            certs.append(Certificate(
                claim=claim, verdict=INCONCLUSIVE,
                instance_hash=inst.instance_hash(),
                details={"reason": str(e), **e.info},
            ))
        except (SpecError, ClosureError) as e:
            raise CliError(f"claim {claim!r} on this instance: {e}")
    return _print_certs(certs, args.format, args.out)


def _run_claim(claim, spec, opts, inst, args):
    degree_bound = opts["degree_bound"]
    if claim == "fiber-gb":
        fam = plucker_initial(spec, r=opts["r"], field=opts["field"])
        method = args.method or "elimination"
        oracle = fiber_kernel_oracle(
            inst=inst, method=method,
            degree_bound=degree_bound if method == "fiber_enumeration" else None,
        )
        return certify_groebner(fam, kernel_oracle=oracle)
    if claim == "rees-gb":
        if spec.kind == "unit":
            raise SpecError(
                "rees-gb applies to generic or ladder instances; "
                "window families only carry the fiber machinery here"
            )
        # oracle first: the desk-scale cap refusal should not wait for the
        # (potentially large) family construction
        oracle = rees_kernel_oracle(
            inst=inst, map_kind=args.map, cap=opts["cap"],
        )
        if args.map == "initial":
            fam = rees_initial_family(spec, r=opts["r"], field=opts["field"])
        else:
            fam = rees_full_family(spec, r=opts["r"], field=opts["field"])
        return certify_groebner(fam, kernel_oracle=oracle)
    if claim == "sagbi":
        ambient = args.ambient
        if ambient is None:
            ambient = "fiber" if spec.kind == "unit" else "rees"
        gens, toric = _sagbi_inputs(inst, ambient)
        return certify_sagbi(gens, toric, inst.tau_prime,
                             degree_bound=degree_bound, inst=inst)
    if claim == "minors-gb":
        probes = args.probes
        if probes is not None and probes < 0:
            raise CliError("'probes' must be a non-negative integer")
        if probes is None:
            # window minors fail under order changes (documented witness), so
            # their default check is the diagonal order only; generic and
            # ladder minors are expected to survive the random probes
            probes = 0 if spec.kind == "unit" else 5
        return certify_minors_groebner(
            spec, probes=probes, seed=args.seed, field=opts["field"])
    if claim == "l-exchange":
        comps = [list(inst.tuples) for _ in range(inst.r)]
        return check_l_exchange(comps, gamma_bound=opts["gamma"],
                                shape=spec.shape)
    raise CliError(f"unknown claim {claim!r}")


def _parse_tableau(text):
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as e:
        raise CliError(f"tableau must be JSON like [[1,4,1],[2,3,1]]: {e}")
    if (not isinstance(rows, list) or not rows
            or not all(isinstance(r, list) for r in rows)):
        raise CliError("tableau must be a non-empty list of rows")
    try:
        return tuple(tuple(int(v) for v in r) for r in rows)
    except (TypeError, ValueError):
        raise CliError("tableau entries must be integers")


def cmd_standardize(args):
    A = _parse_tableau(args.tableau)
    try:
        std = standardize(A)
        semis = is_semistandard(A)
        payload = {
            "input": [list(r) for r in A],
            "semistandard": semis,
            "standard": bool(semis and is_standard(A)),
            "standardized": [list(r) for r in std],
        }
        if len(A) == 2 and not payload["standard"] and semis:
            payload["exchange_candidates"] = [
                [list(e), list(g)] for e, g in vibrations(A[0], A[1])
            ]
    except (ValueError, DomainError) as e:
        raise CliError(f"invalid tableau: {e}")
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        lines = [f"input:        {payload['input']}",
                 f"semistandard: {payload['semistandard']}",
                 f"standard:     {payload['standard']}",
                 f"standardized: {payload['standardized']}"]
        for pair in payload.get("exchange_candidates", []):
            lines.append(f"  candidate: {pair[0]} | {pair[1]}")
        _emit("\n".join(lines), args.out)
    return EXIT_VERIFIED


def cmd_oracle(args):
    spec, opts = load_spec(args.spec)
    if args.degree_bound is not None:
        _require_positive_int("degree-bound", args.degree_bound)
        opts["degree_bound"] = args.degree_bound
    inst = instance(spec, r=opts["r"], field=opts["field"])
    try:
        if args.which == "fiber":
            method = args.method or "elimination"
            kb = fiber_kernel_oracle(
                inst=inst, method=method,
                degree_bound=(opts["degree_bound"]
                              if method == "fiber_enumeration" else None),
            )
        else:
            kb = rees_kernel_oracle(inst=inst, map_kind=args.map,
                                    cap=opts["cap"])
    except InconclusiveError as e:
        print(f"inconclusive: {e}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    order = inst.sigma if args.which == "fiber" else inst.sigma_prime
    payload = {
        "instance": inst.describe(),
        "instance_hash": inst.instance_hash(),
        "method": kb.method,
        "complete": kb.complete,
        "bounds": kb.bounds,
        "order": kb.order_name,
        "count": len(kb),
        "basis": [g.to_str(order) for g in kb],
    }
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        head = (f"# {args.which} kernel oracle [{kb.method}] "
                f"{inst.describe()} complete={kb.complete}")
        _emit("\n".join([head] + [f"  {s}" for s in payload["basis"]]), args.out)
    return EXIT_VERIFIED if kb.complete else EXIT_INCONCLUSIVE


# ---------------------------------------------------------------------------


def build_parser():
    p = _Parser(prog="reesdet",
                description="determinantal Rees/fiber presentations with "
                            "machine-checked certificates")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--spec", required=True,
                        help="path to a JSON problem specification")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--out", help="write output to this file")

    g = sub.add_parser("generate", help="construct generator families")
    common(g)
    g.add_argument("--which", default="all",
                   choices=("gens", "en", "plucker-initial", "plucker-lifted",
                            "exchange-h", "all"))
    g.add_argument("--map", choices=("initial", "full"), default="full")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="run certificates")
    common(v)
    v.add_argument("--claim", default="all",
                   choices=("fiber-gb", "rees-gb", "sagbi", "minors-gb",
                            "l-exchange", "all"))
    v.add_argument("--map", choices=("initial", "full"), default="full",
                   help="which presentation the rees-gb claim certifies")
    v.add_argument("--ambient", choices=("rees", "fiber"), default=None,
                   help="subalgebra for the sagbi claim (default: fiber for "
                        "unit-interval instances, rees otherwise)")
    v.add_argument("--method", choices=("elimination", "fiber_enumeration"),
                   default=None, help="oracle method for fiber-gb")
    v.add_argument("--degree-bound", type=int, default=None)
    v.add_argument("--gamma", type=int, default=None)
    v.add_argument("--probes", type=int, default=None,
                   help="random order probes for minors-gb (default 5; 0 "
                        "for unit-interval instances)")
    v.add_argument("--seed", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("standardize", help="straighten a tableau")
    s.add_argument("tableau", help='JSON rows, e.g. "[[1,4,1],[2,3,1]]"')
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--out")
    s.set_defaults(func=cmd_standardize)

    o = sub.add_parser("oracle", help="run a kernel oracle directly")
    common(o)
    o.add_argument("--which", choices=("fiber", "rees"), required=True)
    o.add_argument("--method", choices=("elimination", "fiber_enumeration"),
                   default=None)
    o.add_argument("--map", choices=("initial", "full"), default="full")
    o.add_argument("--degree-bound", type=int, default=None)
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        code = args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (SpecError, DomainError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())
