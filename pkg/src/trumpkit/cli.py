"""Command line interface.

Vectors are inline comma lists ("0.4,0.4,0.1,0.1", entries as decimals or
p/q) or paths to JSON vector documents.  Exit codes: 0 the relation holds or
the object was constructed, 1 it fails or was not found, 2 bad usage, bad
input, or a violated precondition.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import majorizes, pad_zeros, tensor
from .errors import TrumpkitError
from .explorer import sample_region, write_region_csv
from .jsonio import (
    certificate_to_dict,
    frac_str,
    parse_vector_arg,
    report_to_dict,
    vector_to_json,
)
from .solver import SearchConfig, SearchStatus, find_catalyst, ray_probe
from .trumping import (
    boundary_witness,
    classify,
    geometric_catalyst,
    nonuniform_demo,
    separating_example,
    trumps_with,
)

__all__ = ["run", "main"]


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _vectors(args, names):
    return [parse_vector_arg(getattr(args, n), args.normalize) for n in names]


def _padded(x, y, pad: bool):
    if x.dim == y.dim:
        return x, y
    if not pad:
        raise TrumpkitError(
            f"dimensions differ ({x.dim} vs {y.dim}); pass --pad to compare anyway"
        )
    dim = max(x.dim, y.dim)
    return pad_zeros(x, dim), pad_zeros(y, dim)


def _cmd_majorize(args) -> int:
    x, y = _vectors(args, ("x", "y"))
    x, y = _padded(x, y, args.pad)
    report = majorizes(x, y)
    _emit(report_to_dict(report))
    return 0 if report.verdict else 1


def _cmd_trump(args) -> int:
    x, y = _padded(*_vectors(args, ("x", "y")), args.pad)
    z = parse_vector_arg(args.z, args.normalize)
    lifted = majorizes(tensor(x, z), tensor(y, z))
    out = report_to_dict(lifted)
    cert = trumps_with(x, y, z)
    if cert is not None:
        out["certificate"] = certificate_to_dict(cert)
    _emit(out)
    return 0 if lifted.verdict else 1


def _cmd_classify(args) -> int:
    (y,) = _vectors(args, ("y",))
    c = classify(y)
    _emit({"useful": c.useful, "d1": c.d1, "d2": c.d2, "l": c.l, "m": c.m})
    return 0 if c.useful else 1


def _cmd_witness(args) -> int:
    (y,) = _vectors(args, ("y",))
    x = boundary_witness(y)
    _emit({"witness": vector_to_json(x), "report": report_to_dict(majorizes(x, y))})
    return 0


def _cmd_geo_catalyst(args) -> int:
    x, y = _vectors(args, ("x", "y"))
    geo = geometric_catalyst(x, y)
    cert = trumps_with(x, y, geo.z)
    _emit({
        "alpha": frac_str(geo.alpha),
        "k": geo.k,
        "z": vector_to_json(geo.z),
        "certificate": certificate_to_dict(cert) if cert else None,
    })
    return 0


def _witness_dict(w) -> dict:
    return {
        "x_prime": vector_to_json(w.x_prime),
        "y": vector_to_json(w.y),
        "certificate": certificate_to_dict(w.certificate),
        "not_majorized": report_to_dict(w.not_majorized_proof),
    }


def _cmd_separate(args) -> int:
    (y,) = _vectors(args, ("y",))
    _emit(_witness_dict(separating_example(y)))
    return 0


def _cmd_demo_nonuniform(args) -> int:
    (z,) = _vectors(args, ("z",))
    _emit(_witness_dict(nonuniform_demo(z)))
    return 0


def _config_from(args) -> SearchConfig:
    kwargs = {}
    for field in ("restarts", "seed", "max_iters", "max_denominator"):
        value = getattr(args, field, None)
        if value is not None:
            kwargs[field] = value
    if getattr(args, "tolerance", None) is not None:
        kwargs["float_tolerance"] = args.tolerance
    return SearchConfig(**kwargs)


def _cmd_find_catalyst(args) -> int:
    x, y = _vectors(args, ("x", "y"))
    result = find_catalyst(x, y, args.kmax, _config_from(args))
    out = {
        "status": result.status.value,
        "f_value": result.f_value,
        "z_float": list(result.z_float),
        "impossible_by_extremes": result.impossible_by_extremes,
    }
    if result.certificate is not None:
        out["certificate"] = certificate_to_dict(result.certificate)
    _emit(out)
    return 0 if result.status is SearchStatus.CERTIFIED_FOUND else 1


def _cmd_ray_probe(args) -> int:
    (y,) = _vectors(args, ("y",))
    result = ray_probe(y, args.k, _config_from(args))
    _emit({
        "k": result.k,
        "t": frac_str(result.t),
        "t_float": float(result.t),
        "ladder": [{"k": kk, "t": frac_str(t), "t_float": float(t)} for kk, t in result.ladder],
        "ray_endpoint": vector_to_json(result.x),
        "certificate": certificate_to_dict(result.certificate),
        "levels": result.levels,
    })
    return 0


def _cmd_sample_region(args) -> int:
    (y,) = _vectors(args, ("y",))
    records = sample_region(y, args.kmax, args.n, args.seed, _config_from(args))
    sidecars = write_region_csv(records, args.out, args.kmax)
    _emit({
        "out": args.out,
        "records": len(records),
        "certified": sum(1 for r in records if r.certificate is not None),
        "certificate_files": len(sidecars),
    })
    return 0


def _add_vector_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--normalize", action="store_true",
                   help="scale inputs to sum 1 instead of requiring it")


def _add_search_flags(p: argparse.ArgumentParser, with_seed: bool = True) -> None:
    p.add_argument("--restarts", type=int, default=None, help="random restarts per dimension")
    if with_seed:
        p.add_argument("--seed", type=int, default=None, help="search seed")
    p.add_argument("--max-iters", dest="max_iters", type=int, default=None,
                   help="descent sweep limit per restart")
    p.add_argument("--tolerance", type=float, default=None,
                   help="numeric feasibility threshold")
    p.add_argument("--max-denominator", dest="max_denominator", type=int, default=None,
                   help="denominator bound for certification")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trumpkit",
        description="Exact majorization and catalytic majorization toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("majorize", help="does y majorize x?")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--pad", action="store_true", help="zero-pad the shorter vector")
    _add_vector_flags(p)
    p.set_defaults(handler=_cmd_majorize)

    p = sub.add_parser("trump", help="does y majorize x after tensoring with catalyst z?")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("z")
    p.add_argument("--pad", action="store_true", help="zero-pad the shorter of x, y")
    _add_vector_flags(p)
    p.set_defaults(handler=_cmd_trump)

    p = sub.add_parser("classify", help="can any catalyst help for this target?")
    p.add_argument("y")
    _add_vector_flags(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("witness", help="averaged boundary point for a useful target")
    p.add_argument("y")
    _add_vector_flags(p)
    p.set_defaults(handler=_cmd_witness)

    p = sub.add_parser("geo-catalyst", help="geometric catalyst putting x strictly inside")
    p.add_argument("x")
    p.add_argument("y")
    _add_vector_flags(p)
    p.set_defaults(handler=_cmd_geo_catalyst)

    p = sub.add_parser("separate", help="point catalyzed by y but not majorized by it")
    p.add_argument("y")
    _add_vector_flags(p)
    p.set_defaults(handler=_cmd_separate)

    p = sub.add_parser("demo-nonuniform", help="show a given non-uniform catalyst helping")
    p.add_argument("z")
    _add_vector_flags(p)
    p.set_defaults(handler=_cmd_demo_nonuniform)

    p = sub.add_parser("find-catalyst", help="search and certify a catalyst for (x, y)")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--kmax", type=int, default=3, help="largest catalyst dimension to try")
    _add_search_flags(p)
    _add_vector_flags(p)
    p.set_defaults(handler=_cmd_find_catalyst)

    p = sub.add_parser("ray-probe", help="certified reach along the standard probe ray")
    p.add_argument("y")
    p.add_argument("--k", type=int, default=3, help="largest catalyst dimension")
    _add_search_flags(p)
    _add_vector_flags(p)
    p.set_defaults(handler=_cmd_ray_probe)

    p = sub.add_parser("sample-region", help="sample and label points around a target")
    p.add_argument("y")
    p.add_argument("--n", type=int, default=64, help="number of samples")
    p.add_argument("--kmax", type=int, default=2, help="largest catalyst dimension")
    p.add_argument("--seed", type=int, default=0, help="sampling and search seed")
    p.add_argument("--out", default="region.csv", help="CSV output path")
    _add_search_flags(p, with_seed=False)
    _add_vector_flags(p)
    p.set_defaults(handler=_cmd_sample_region)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except TrumpkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
