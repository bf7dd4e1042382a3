"""Command-line front end.

Exit status: 0 when every expected verdict matched, 1 on any mismatch,
2 on usage, parse or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .jacobian import CurveError
from .language import ParseError
from .rings import RingKind
from .scenarios import SCENARIOS, Report, jacobian_check, run_scenario, verify_file

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _render_text(rep: Report) -> str:
    lines = []
    head = rep.scenario or rep.kind
    lines.append(f"== {head}" + (f" ({rep.ring})" if rep.ring else ""))
    for v in rep.verdicts:
        mark = "ok " if v["matched"] else "BAD"
        where = f"line {v['line']}: " if "line" in v else ""
        extra = f" [torsion order {v['torsion_order']}]" if v["verdict"] == "holds_up_to_torsion" else ""
        lines.append(f"  {mark} {where}{v['identity']}  => {v['verdict']}{extra}")
    for s in rep.scalars:
        mark = "ok " if s["matched"] else "BAD"
        shown = "none" if s["scalar"] is None else s["scalar"]
        lines.append(f"  {mark} scalar [{s['element']}] = {shown} (norm {s['norm']})")
    if rep.product_scalar:
        lines.append(f"      product polarization scalars: {tuple(rep.product_scalar)}")
    for r in rep.preperiodicity:
        mark = "ok " if r["matched"] else "BAD"
        lines.append(f"  {mark} diagonal preperiodic under ({r['phi1']}, {r['phi2']}): {r['preperiodic']}")
    for r in rep.refutations:
        mark = "ok " if r["matched"] else "BAD"
        sols = ", ".join(map(str, r["solutions"])) or "no integer solution"
        lines.append(f"  {mark} [{r['alpha']}] with [{r['beta']}]: {r['equation']} -> {sols}")
    if rep.jacobian:
        j = rep.jacobian
        o = j["orders"]
        lines.append(f"  jacobian of y^2 = {j['curve']} over F_{j['prime']} ({j['cm']})")
        lines.append(f"    order: enumerated {o['enumerated']}, via counts {o['via_counts']}")
        for k in j["kernel_counts"]:
            lines.append(f"    kernel [{k['element']}]: {k['count']} (degree {k['degree']})")
        for c in j["spot_checks"]:
            lines.append(f"    {'ok ' if c['passed'] else 'BAD'} {c['name']} ({c['checked']} checked)")
        ob = j["orbit"]
        lines.append(f"    orbit of (P, P) under ({ob['phi1']}, {ob['phi2']}): tail {ob['tail']}, period {ob['period']}")
    if rep.kind == "file":
        counts = ", ".join(f"{k}: {v}" for k, v in rep.summary().items())
        lines.append(f"  {len(rep.verdicts)} identities ({counts})")
    seed = f" (seed {rep.seed})" if rep.seed is not None else ""
    lines.append(f"  {'PASS' if rep.ok else 'FAIL'} in {rep.elapsed_ms:.1f} ms{seed}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cmworkbench",
        description="Verify pullback identities on CM abelian surfaces and check genus-2 Jacobians.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a built-in scenario or an identity file")
    src = v.add_mutually_exclusive_group(required=True)
    src.add_argument("--scenario", choices=sorted(SCENARIOS))
    src.add_argument("--file", help="identity file, one identity per line")
    v.add_argument("--ring", choices=[k.value for k in RingKind], help="ring for files without a 'ring:' line")
    v.add_argument("--prime", type=int, help="prime for the Jacobian corroboration")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--output", help="also write the JSON report to this path")

    j = sub.add_parser("jacobian", help="point-level checks on y^2 = f(x) over F_p")
    j.add_argument("--curve", required=True, help="monic quintic in x, e.g. x^5-x")
    j.add_argument("--prime", type=int, required=True)
    j.add_argument("--seed", type=int, default=0)
    j.add_argument("--format", choices=["text", "json"], default="text")
    j.add_argument("--output", help="also write the JSON report to this path")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            if args.scenario:
                if args.ring:
                    raise ValueError("--ring only applies to --file")
                rep = run_scenario(args.scenario, prime=args.prime, seed=args.seed)
            else:
                if args.prime is not None:
                    raise ValueError("--prime only applies to --scenario")
                rep = verify_file(args.file, args.ring)
        else:
            rep = jacobian_check(args.curve, args.prime, seed=args.seed)
    except ParseError as exc:
        where = f"{args.file}:" if getattr(args, "file", None) else ""
        print(f"error: {where}{exc.line}:{exc.column}: {exc.message}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError, KeyError, CurveError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    doc = rep.to_dict()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(_render_text(rep))
    return rep.exit_status


if __name__ == "__main__":
    sys.exit(main())
