"""Command-line front end: builds, counts, bounds, and verification reports.

Exit codes: 0 all requested checks pass, 1 a check failed, 2 bad
configuration, 3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import math
import sys

from . import fisher, grigorchuk, height, lattices, sawengine, tiling
from .graphball import GraphError, ResourceCapError

PHI = (1.0 + math.sqrt(5.0)) / 2.0


class ConfigError(ValueError):
    pass


def fmt(x):
    """Fixed 15-significant-digit formatting for reals; integers verbatim."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        return format(x, ".15g")
    return str(x)


def write_csv(path, header, rows):
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(fmt(x) for x in row))
    text = "\n".join(lines) + "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def load_config(path, known):
    """Plain `key = value` lines; [section] headers allowed; unknown keys
    rejected."""
    values = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line or (line.startswith("[") and line.endswith("]")):
                continue
            if "=" not in line:
                raise ConfigError(f"bad config line: {raw.rstrip()}")
            key, val = (part.strip() for part in line.split("=", 1))
            if key not in known:
                raise ConfigError(f"unknown config key: {key}")
            values[key] = val
    return values


def _apply_config(args, known_ints=(), known_strs=()):
    if not getattr(args, "config", None):
        return
    known = set(known_ints) | set(known_strs)
    for key, val in load_config(args.config, known).items():
        if getattr(args, key, None) in (None, False):
            setattr(args, key, int(val) if key in known_ints else val)


FAMILIES = ("ladder", "twisted_ladder", "tree", "hexagonal",
            "arch_4_8_8", "arch_4_6_12", "free_3_3", "free_3_4")


def build_family(name, radius):
    if name == "ladder":
        return lattices.build_ladder(2 * radius + 4, doubly_infinite=True)
    if name == "twisted_ladder":
        return lattices.build_twisted_ladder(2 * radius + 5)
    if name == "tree":
        return lattices.build_tree(3, radius)
    if name in ("hexagonal", "arch_4_8_8", "arch_4_6_12"):
        return lattices.build_periodic(name, radius)[0]
    if name == "free_3_3":
        return lattices.build_free_product(3, 3, radius)
    if name == "free_3_4":
        return lattices.build_free_product(3, 4, radius)
    raise ConfigError(f"unknown family {name!r}; choose from {FAMILIES}")


def cmd_build(args):
    _apply_config(args, known_ints=("radius",), known_strs=("family", "out"))
    ball = build_family(args.family, args.radius)
    text = ball.to_text()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_count(args):
    _apply_config(args, known_ints=("radius", "steps", "threads"),
                  known_strs=("family", "csv"))
    radius = args.radius or args.steps + 2
    ball = build_family(args.family, radius)
    counts = sawengine.count_saws(ball, args.steps, threads=args.threads)
    rows = []
    for n in range(len(counts)):
        ratio = counts[n] / counts[n - 1] if n >= 1 else ""
        nth = counts[n] ** (1.0 / n) if n >= 1 else ""
        rows.append((n, counts[n], ratio, nth))
    write_csv(args.csv, ("n", "sigma_n", "ratio", "nth_root"), rows)
    return 0


def cmd_estimate_mu(args):
    _apply_config(args, known_ints=("radius", "steps", "threads"),
                  known_strs=("family", "csv"))
    radius = args.radius or args.steps + 2
    ball = build_family(args.family, radius)
    counts = sawengine.count_saws(ball, args.steps, threads=args.threads)
    est = sawengine.estimate_mu(counts)
    write_csv(args.csv, ("family", "steps", "ratio", "nth_root"),
              [(args.family, args.steps, est.ratio, est.root)])
    return 0


# equation batch: stable claim names alongside the short solver names
BOUND_ALIASES = {
    "g3_lower": "x1", "g3_upper": "x2", "g4_lower": "y1", "g4_upper": "y2",
}


def cmd_bounds(args):
    _apply_config(args, known_strs=("eq", "csv"))
    if args.list:
        for name in sorted(fisher.NAMED):
            print(name)
        return 0
    names = [args.eq] if args.eq else ["x1", "x2", "y1", "y2",
                                       "twisted_ladder", "hex_lift_sqrt"]
    alias = {v: k for k, v in BOUND_ALIASES.items()}
    rows = []
    ok = True
    for name in names:
        eq_name = BOUND_ALIASES.get(name, name)
        res = fisher.solve(fisher.named_equation(eq_name))
        ok = ok and abs(res.residual) <= fisher.RESIDUAL_TOL
        rows.append((alias.get(eq_name, eq_name), res.bound_value,
                     res.residual, res.bracket_width))
    write_csv(args.csv, ("name", "value", "residual", "bracket_width"), rows)
    return 0 if ok else 1


INJECTION_FAMILIES = {
    # family -> (periodic name, harmonic growth vector)
    "hexagonal": ("hexagonal", (2, 0)),
    "arch_4_6_12": ("arch_4_6_12", (2, 1)),
}


def run_injection(family, radius, steps):
    pname, growth = INJECTION_FAMILIES[family]
    ball, pg = lattices.build_periodic(pname, radius)
    ph = height.solve_periodic_harmonic(pg, growth)
    h = ph.on_ball(ball)
    cond = height.check_conditions(ball, h)
    walks = height.build_injection(ball, h, steps)
    rep = height.verify_injection(walks)
    expected = sawengine.eastward_count(steps)
    return cond, rep, expected


def cmd_verify_injection(args):
    _apply_config(args, known_ints=("radius", "steps"),
                  known_strs=("family", "csv"))
    if args.family not in INJECTION_FAMILIES:
        raise ConfigError(
            f"injection families: {sorted(INJECTION_FAMILIES)}")
    radius = args.radius or args.steps + 4
    cond, rep, expected = run_injection(args.family, radius, args.steps)
    checks = {"eq1": cond.eq1, "eq2": cond.eq2, "qm": cond.qm, "ag": cond.ag}
    cond_ok = all(c.holds for c in checks.values()) and cond.band_ok
    rows = [("conditions", cond_ok, "", ""),
            ("walks", rep.walks, expected, rep.walks == expected),
            ("all_saw", rep.all_saw, "", ""),
            ("injective", rep.injective, "", "")]
    for name, chk in checks.items():
        rows.append((name, chk.holds, chk.checked, chk.skipped))
    write_csv(args.csv, ("check", "value", "expected", "ok"), rows)
    passed = cond_ok and rep.all_saw and rep.injective \
        and rep.walks == expected
    print("PASS" if passed else "FAIL")
    return 0 if passed else 1


def _parse_tv(text):
    parts = text.split(",")
    if len(parts) != 3:
        raise ConfigError("type vector needs three sizes, e.g. 4,6,12")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ConfigError(f"bad type vector {text!r}") from exc


def cmd_tiling(args):
    _apply_config(args, known_ints=("radius", "steps"),
                  known_strs=("type", "inject", "csv"))
    tv = _parse_tv(args.type)
    t = tiling.generate_tiling(tv, args.radius)
    print(f"type {tv}: {len(t.ball.adjacency)} vertices, "
          f"geometry {tiling.classify(tv)}, "
          f"family {tiling.admissible_family(tv)}")
    status = 0
    if args.check_l95:
        from .graphball import enumerate_cycles_up_to
        cycles = [c for c in enumerate_cycles_up_to(t.ball, 14)
                  if max(t.dist[v] for v in c) <= max(1, args.radius - 5)]
        reports, min_rho, ok = tiling.check_l95_l96(t, cycles)
        print(f"turn-balance identity on {len(reports)} cycles: "
              f"{'ok' if ok else 'FAIL'}, min rho {min_rho}")
        status = status or (0 if ok else 1)
    if args.inject:
        n = args.steps or 10
        expected = sawengine.eastward_count(n)
        if args.inject == "caseC":
            walks, lifts, _ = tiling.caseC_verify_lifts(t, min(n, 8))
            print(f"caseC: {lifts} lifts over {walks} stems, all SAW")
        else:
            fn = {"caseA": tiling.caseA_injection,
                  "caseB": tiling.caseB_injection,
                  "caseD": tiling.caseD_injection}[args.inject]
            rep = height.verify_injection(fn(t, n))
            good = rep.all_saw and rep.injective and rep.walks == expected
            print(f"{args.inject} n={n}: {rep.walks} walks "
                  f"(expected {expected}), all_saw={rep.all_saw}, "
                  f"injective={rep.injective}")
            status = status or (0 if good else 1)
    return status


def cmd_grigorchuk(args):
    if args.ball is not None:
        ball = grigorchuk.cayley_ball(args.ball)
        sys.stdout.write(ball.to_text())
        return 0
    if args.schreier is not None:
        sg = grigorchuk.SchreierGraph(args.schreier)
        for v, point in enumerate(sg.points):
            row = sg.darts[v]
            print(f"{v}\t{point or '-'}\t" +
                  " ".join(f"{s}:{row[s]}" for s in "abcd"))
        return 0
    if args.verify_lifts is not None:
        sg = grigorchuk.SchreierGraph(2 * args.verify_lifts + 8)
        words = grigorchuk.generate_words(sg, args.verify_lifts)
        flat = [w for k in sorted(words) for w in words[k]]
        rep = grigorchuk.lift_and_verify(flat)
        print(f"{rep.words} words, {rep.steps} steps, "
              f"all_saw={rep.all_saw}")
        return 0 if rep.all_saw else 1
    if args.z_check:
        z1 = grigorchuk.weight_Z1(1.0 / PHI)
        z2 = grigorchuk.weight_Z2(1.0 / PHI)
        print(f"Z1(1/phi) = {fmt(z1)}")
        print(f"Z2(1/phi) = {fmt(z2)}")
        return 0 if z1 > 1.0 and abs(z2 - 1.0) <= 1e-12 else 1
    raise ConfigError("choose one of --ball/--schreier/--verify-lifts/--z-check")


def cmd_report(args):
    """Per-family growth-bound evidence in one text table."""
    rows = []
    for fam, steps, target in (("tree", 12, 2.0), ("ladder", 16, PHI),
                               ("twisted_ladder", 16, math.sqrt(1 + math.sqrt(3)))):
        ball = build_family(fam, steps + 2)
        counts = sawengine.count_saws(ball, steps)
        est = sawengine.estimate_mu(counts)
        rows.append((fam, fmt(est.ratio), fmt(target)))
    for name in ("x1", "x2", "y1", "y2"):
        res = fisher.solve(fisher.named_equation(name))
        rows.append((f"bound {name}", fmt(res.bound_value), ""))
    rows.append(("Z2(1/phi)", fmt(grigorchuk.weight_Z2(1.0 / PHI)), "1"))
    width = max(len(r[0]) for r in rows)
    print(f"{'family':<{width}}  {'estimate':>18}  target")
    for name, val, target in rows:
        print(f"{name:<{width}}  {val:>18}  {target}")
    return 0


def make_parser():
    p = argparse.ArgumentParser(
        prog="saw-lab",
        description="graph balls, exact SAW counts, growth bounds, and "
                    "machine-checked walk injections")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, radius=True, steps=False, threads=False, csv=True):
        if radius:
            sp.add_argument("--radius", type=int, default=None)
        if steps:
            sp.add_argument("--steps", type=int, default=None)
        if threads:
            sp.add_argument("--threads", type=int, default=1)
        if csv:
            sp.add_argument("--csv", default=None)
        sp.add_argument("--config", default=None)

    sp = sub.add_parser("build", help="write a graph ball in text form")
    sp.add_argument("--family", required=True)
    sp.add_argument("--out", default=None)
    common(sp, csv=False)
    sp.set_defaults(fn=cmd_build)

    sp = sub.add_parser("count", help="exact SAW counts as CSV")
    sp.add_argument("--family", required=True)
    common(sp, steps=True, threads=True)
    sp.set_defaults(fn=cmd_count)

    sp = sub.add_parser("estimate-mu", help="growth estimates from counts")
    sp.add_argument("--family", required=True)
    common(sp, steps=True, threads=True)
    sp.set_defaults(fn=cmd_estimate_mu)

    sp = sub.add_parser("bounds", help="certified bound-equation roots")
    sp.add_argument("--list", action="store_true")
    sp.add_argument("--eq", default=None)
    common(sp, radius=False)
    sp.set_defaults(fn=cmd_bounds)

    sp = sub.add_parser("verify-injection",
                        help="height-steered word-to-walk verification")
    sp.add_argument("--family", required=True)
    common(sp, steps=True)
    sp.set_defaults(fn=cmd_verify_injection)

    sp = sub.add_parser("tiling", help="type-vector tilings and injections")
    sp.add_argument("--type", required=True)
    sp.add_argument("--check-l95", action="store_true", dest="check_l95")
    sp.add_argument("--inject",
                    choices=("caseA", "caseB", "caseC", "caseD"))
    common(sp, steps=True)
    sp.set_defaults(fn=cmd_tiling)

    sp = sub.add_parser("grigorchuk", help="self-similar group checks")
    sp.add_argument("--ball", type=int, default=None)
    sp.add_argument("--schreier", type=int, default=None)
    sp.add_argument("--verify-lifts", type=int, default=None,
                    dest="verify_lifts")
    sp.add_argument("--z-check", action="store_true", dest="z_check")
    sp.set_defaults(fn=cmd_grigorchuk)

    sp = sub.add_parser("report", help="summary table of growth evidence")
    sp.set_defaults(fn=cmd_report)
    return p


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in ("count", "estimate-mu", "verify-injection") \
                and args.steps is None and not getattr(args, "config", None):
            raise ConfigError("--steps is required")
        return args.fn(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 3
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
