"""Command-line interface: sweep, gap, check, export-model, diff."""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ConfigError, InputError
from .gaps import gap_record
from .models import (
    HaldaneParams,
    build_haldane_heterostructure,
    export_model,
)
from .sweep import (
    _coords_for_model,
    _engine_for_config,
    check_suite,
    diff_maps,
    format_check_report,
    load_config,
    read_sweep_csv,
    run_sweep,
    write_sweep_csv,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nhgaps",
        description="Pseudospectral gap sweeps for tuples of Hermitian and "
        "non-Hermitian matrices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="evaluate a probe grid and write a CSV")
    p_sweep.add_argument("config", help="JSON sweep configuration")
    p_sweep.add_argument("--output", help="override the output path from the config")

    p_gap = sub.add_parser("gap", help="evaluate one probe site, print JSON")
    p_gap.add_argument("config", help="JSON configuration (the grid section is ignored)")
    p_gap.add_argument("--x", type=float, default=0.0)
    p_gap.add_argument("--y", type=float, default=0.0)
    p_gap.add_argument("--reE", type=float, default=0.0)
    p_gap.add_argument("--imE", type=float, default=0.0)

    p_check = sub.add_parser("check", help="run the seeded inequality fuzz suite")
    p_check.add_argument("--seed", type=int, default=1)
    p_check.add_argument("--instances", type=int, default=100)

    p_export = sub.add_parser("export-model", help="write H/X/Y matrix files and a site table")
    p_export.add_argument("config", help="JSON configuration with a lattice model")
    p_export.add_argument("--outdir", required=True)

    p_diff = sub.add_parser("diff", help="absolute difference of two sweep columns")
    p_diff.add_argument("csv_a")
    p_diff.add_argument("csv_b")
    p_diff.add_argument("--col-a", required=True)
    p_diff.add_argument("--col-b", required=True)
    p_diff.add_argument("--output", required=True)
    return parser


def _cmd_sweep(args) -> int:
    cfg = load_config(args.config)
    output = args.output or cfg.output
    if output is None:
        raise ConfigError("$.output", "no output path given (config or --output)")
    result = run_sweep(cfg)
    write_sweep_csv(result, output)
    print(f"wrote {len(result.rows)} rows to {output}")
    return 0


def _cmd_gap(args) -> int:
    cfg = load_config(args.config)
    engine = _engine_for_config(cfg)
    coords = _coords_for_model(cfg.model)
    values = {name: getattr(args, name) for name in coords}
    site = engine.site_for(values)
    record = gap_record(engine.tup, site, engine.rep if engine.need_localizer else None)
    payload = dict(values)
    payload.update(
        gap_linear=record.gap_linear,
        gap_radial=record.gap_radial,
        gap_rq=record.gap_rq,
        gap_lq=record.gap_lq,
        gap_q=record.gap_q,
    )
    print(json.dumps(payload))
    return 0


def _cmd_check(args) -> int:
    reports = check_suite(args.seed, args.instances)
    sys.stdout.write(format_check_report(reports))
    return 1 if any(not r.satisfied for r in reports) else 0


def _cmd_export(args) -> int:
    cfg = load_config(args.config)
    if cfg.model["kind"] != "haldane":
        raise ConfigError("$.model.kind", "export-model requires a lattice model")
    params = HaldaneParams(
        topological=cfg.model["regions"]["topological"],
        trivial=cfg.model["regions"]["trivial"],
        lossy=cfg.model["regions"]["lossy"],
        r_topo=cfg.model["r_topo"],
        r_trivial=cfg.model["r_trivial"],
        r_lossy=cfg.model["r_lossy"],
        kappa=cfg.kappa,
    )
    paths = export_model(build_haldane_heterostructure(params), args.outdir)
    for name, path in paths.items():
        print(f"{name}: {path}")
    return 0


def _cmd_diff(args) -> int:
    a = read_sweep_csv(args.csv_a)
    b = read_sweep_csv(args.csv_b)
    result = diff_maps(a, b, args.col_a, args.col_b)
    write_sweep_csv(result, args.output)
    print(f"wrote {len(result.rows)} rows to {args.output}")
    return 0


_COMMANDS = {
    "sweep": _cmd_sweep,
    "gap": _cmd_gap,
    "check": _cmd_check,
    "export-model": _cmd_export,
    "diff": _cmd_diff,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ConfigError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
