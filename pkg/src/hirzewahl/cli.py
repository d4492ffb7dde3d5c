"""Command-line entry point: ``hirzewahl <command> [options]``.

Exit codes: 0 success, 1 hypothesis not met under ``--strict``, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from . import gaussian, positivity, wahl_report
from .picard import (DivisorClass, HirzebruchSurface, blowup, genus, intersect, surface)
from .riemann_roch import dim_table, h_line

TSV_HEADER = ("n", "a", "b", "delta", "g", "g_tilde", "thmA", "corank",
              "reider_A", "reider_B", "notes")


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ parsing

def parse_range(text: str) -> tuple[int, int]:
    """``lo..hi`` inclusive, or a single integer."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; expected lo..hi") from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"range {text!r} must satisfy 0 <= lo <= hi")
    return lo, hi


def parse_class(text: str) -> DivisorClass:
    """``a,b`` or ``a,b:m1,m2,...`` for a C0 + b F - sum m_j E_j."""
    try:
        head, _, tail = text.partition(":")
        a, b = (int(x) for x in head.split(","))
        m = tuple(int(x) for x in tail.split(",")) if tail else ()
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad class {text!r}; expected a,b[:m1,...]") from None
    return DivisorClass(a, b, m)


@dataclass(frozen=True)
class ScanConfig:
    n: tuple[int, int]
    a: tuple[int, int]
    b: tuple[int, int]
    delta: tuple[int, int]
    seed: int
    fmt: str
    output: Optional[str]

    def __post_init__(self):
        for lo, hi in (self.n, self.a, self.b, self.delta):
            if lo < 0 or hi < lo:
                raise ValueError("scan ranges need 0 <= lo <= hi")

    def tuples(self):
        return product(*(range(lo, hi + 1) for lo, hi in (self.n, self.a, self.b, self.delta)))


# ------------------------------------------------------------------ commands
#
# Each command returns (payload dict, hypothesis_ok, text rendering).

def _b(x) -> str:
    return "true" if x else "false"


def cmd_intersect(args):
    d1, d2 = args.d1, args.d2
    delta = args.delta if args.delta is not None else len(d1.m)
    pad = lambda d: d if d.m else DivisorClass(d.a, d.b, (0,) * delta)
    d1, d2 = pad(d1), pad(d2)
    S = surface(args.n, delta)
    value = intersect(d1, d2, S)
    return {"n": args.n, "delta": delta, "d1": str(d1), "d2": str(d2),
            "intersection": value}, True, str(value)


def cmd_cohomology(args):
    if args.delta is None:
        t = h_line(HirzebruchSurface(args.n), DivisorClass(args.a, args.b))
        payload = {"n": args.n, "a": args.a, "b": args.b,
                   "h0": t.h0, "h1": t.h1, "h2": t.h2, "chi": t.chi}
        return payload, True, f"h0={t.h0} h1={t.h1} h2={t.h2} chi={t.chi}"
    tab = dim_table(args.n, args.a, args.b, args.delta)
    rows = tab.rows()
    payload = {"n": args.n, "a": args.a, "b": args.b, "delta": args.delta,
               "hypothesis": tab.hypothesis, "notes": list(tab.notes),
               **{k: list(v) for k, v in rows.items()}}
    text = "\n".join([f"hypothesis={_b(tab.hypothesis)}"]
                     + [f"{k}: h0={v[0]} h1={v[1]} h2={v[2]}" for k, v in rows.items()]
                     + list(tab.notes))
    return payload, tab.hypothesis, text


def cmd_genus(args):
    g = genus(args.n, args.a, args.b, args.delta)
    return {"n": args.n, "a": args.a, "b": args.b, "delta": args.delta,
            "g": g.g, "g_tilde": g.g_tilde}, True, f"g={g.g} g~={g.g_tilde}"


def cmd_check_ample(args):
    m = tuple(args.m or ())
    if not m:
        S = HirzebruchSurface(args.n)
        D = DivisorClass(args.a, args.b)
        bpf, va = positivity.is_bpf(S, D), positivity.is_very_ample(S, D)
        return ({"n": args.n, "a": args.a, "b": args.b, "bpf": bpf, "very_ample": va},
                va, f"bpf={_b(bpf)} very_ample={_b(va)}")
    X = blowup(args.n, len(m))
    ample = positivity.nakai_moishezon_delta1(X, DivisorClass(args.a, args.b, m))
    return ({"n": args.n, "a": args.a, "b": args.b, "m": list(m), "ample": ample},
            ample, f"ample={_b(ample)}")


def _reider_payload(rep) -> dict:
    return {"N": str(rep.n_class), "N_squared": rep.n_squared, "verdict": rep.verdict,
            "inconclusive": rep.inconclusive,
            "blockers": [{"curve": str(x.curve), "label": x.label, "N.G": x.n_dot,
                          "G^2": x.self_int, "case": x.case} for x in rep.blockers],
            "notes": list(rep.notes)}


def cmd_check_reider(args):
    if args.delta < 1:
        raise UsageError("check-reider needs --delta >= 1")
    X = blowup(args.n, args.delta)
    if args.cls is not None:
        D = args.cls
        if len(D.m) != args.delta:
            raise UsageError("--class needs one multiplicity per point")
        rep = positivity.reider_very_ample(X, D, generic=True)
        payload = {"class": str(D), **_reider_payload(rep)}
        return payload, rep.verdict, _reider_text(str(D), rep)
    pipe = positivity.thm_pipeline_bignef(args.n, args.a, args.b, args.delta)
    subs = {name: _reider_payload(rep) for name, rep in pipe.sub_reports}
    payload = {"n": args.n, "a": args.a, "b": args.b, "delta": args.delta,
               "hypotheses": {k: v for k, v in pipe.hypotheses},
               "sub_reports": subs, "failed": list(pipe.failed), "verdict": pipe.verdict}
    lines = [f"{k}: {_b(v)}" for k, v in pipe.hypotheses]
    lines += [_reider_text(name, rep) for name, rep in pipe.sub_reports]
    lines.append(f"verdict={_b(pipe.verdict)}")
    return payload, pipe.verdict, "\n".join(lines)


def _reider_text(name, rep) -> str:
    s = f"{name}: N^2={rep.n_squared} verdict={_b(rep.verdict)}"
    if rep.inconclusive:
        s += " (inconclusive)"
    for x in rep.blockers:
        s += f"\n  blocker {x.label} {x.curve}: N.G={x.n_dot} G^2={x.self_int} case {x.case}"
    return s


def cmd_check_jet(args):
    c = positivity.jet_ample_F(args.n, args.a, args.b, args.delta)
    payload = {"n": args.n, "a": args.a, "b": args.b, "delta": args.delta,
               "holds": c.holds, "order": c.order, "L": str(c.L), "twist": list(c.twist),
               "twist_section_ok": c.twist_section_ok, "twist_fiber_ok": c.twist_fiber_ok}
    return payload, c.holds, f"jet_ample={_b(c.holds)} order={c.order} L={c.L}"


def cmd_corank(args):
    if args.one_node:
        rep = wahl_report.check_thm_1nodal(args.n, args.a, args.b)
    else:
        rep = wahl_report.check_thm_A(args.n, args.a, args.b, args.delta)
    lines = [f"{h.text}: {_b(h.satisfied)}" for h in rep.hypotheses]
    lines.append(f"corank={rep.corank if rep.corank is not None else 'n/a'}")
    lines += list(rep.notes)
    return rep.as_dict(), rep.fires, "\n".join(lines)


def cmd_conjecture(args):
    c = wahl_report.conjecture_check(args.n, args.delta, args.seed)
    payload = {"n": args.n, "delta": args.delta, "seed": c.seed,
               "lhs": c.lhs, "rhs": c.rhs, "holds": c.holds}
    return payload, c.holds, f"lhs={c.lhs} rhs={c.rhs} holds={_b(c.holds)}"


def cmd_gaussian_rank(args):
    try:
        rep = gaussian.check_surjectivity_PhiX(args.n, args.a, args.b, args.delta,
                                               args.seed, max_wedge=args.max_wedge)
    except gaussian.WedgeBudgetExceeded as exc:
        raise UsageError(f"{exc}; raise --max-wedge to run it") from None
    d = rep.as_dict(with_timing=args.with_timing)
    text = (f"domain_dim={rep.domain_dim} wedge_dim={rep.wedge_dim} "
            f"target_dim={rep.target_dim} rank={rep.rank} "
            f"surjective={'n/a' if rep.surjective is None else _b(rep.surjective)}")
    if args.with_timing:
        text += f" timing={rep.timing:.3f}s"
    return d, bool(rep.surjective), text


# ---------------------------------------------------------------------- scan

def scan_row(t: tuple[int, int, int, int]) -> dict:
    n, a, b, delta = t
    g = genus(n, a, b, delta)
    rep = wahl_report.check_thm_A(n, a, b, delta)
    dec = positivity.abm_decomposition(a, b, delta)
    notes = [x for x in rep.notes if not x.startswith("binding")]
    if delta == 0:
        S = HirzebruchSurface(n)
        ra = _b(positivity.is_very_ample(S, dec.A))
        rb = _b(positivity.is_very_ample(S, dec.B))
    else:
        X = blowup(n, delta)
        ones = (1,) * delta
        ra = _verdict(positivity.reider_very_ample(X, DivisorClass(dec.A.a, dec.A.b, ones), generic=True))
        rb = _verdict(positivity.reider_very_ample(X, DivisorClass(dec.B.a, dec.B.b, ones), generic=True))
    above_a = positivity.a_piece_bound(n, a, b, delta)
    above_b = positivity.b_piece_bound(n, a, b, delta)
    if above_a and not above_b:
        notes.append("between (a+3)n and (a+7)n frontiers")
    if wahl_report.h0rho_surjective_regime(n, a, b, delta):
        notes.append("H0(rho) surjective regime")
    return {"n": n, "a": a, "b": b, "delta": delta, "g": g.g, "g_tilde": g.g_tilde,
            "thmA": rep.fires, "corank": rep.corank, "reider_A": ra, "reider_B": rb,
            "notes": "; ".join(notes)}


def _verdict(rep) -> str:
    return "inconclusive" if rep.inconclusive else _b(rep.verdict)


def _tsv_cell(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, bool):
        return _b(x)
    return str(x)


def run_scan(cfg: ScanConfig, jobs: int) -> list[dict]:
    tuples = sorted(cfg.tuples())
    if jobs > 1 and len(tuples) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(scan_row, tuples, chunksize=max(1, len(tuples) // (4 * jobs))))
    else:
        rows = [scan_row(t) for t in tuples]
    return rows


def cmd_scan(args):
    cfg = ScanConfig(args.n, args.a, args.b, args.delta, args.seed, args.format, args.output)
    rows = run_scan(cfg, args.jobs)
    if args.format == "json":
        return {"rows": rows}, True, None
    lines = ["\t".join(TSV_HEADER)]
    lines += ["\t".join(_tsv_cell(r[k]) for k in TSV_HEADER) for r in rows]
    return {"rows": rows}, True, "\n".join(lines)


# -------------------------------------------------------------------- parser

def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("HIRZEWAHL_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument("--strict", action="store_true",
                        help="exit 1 when the hypothesis or verdict is not met")
    common.add_argument("--seed", type=int, default=42)

    p = argparse.ArgumentParser(prog="hirzewahl", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, **kw):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    def nab(sp, delta_default: Optional[int] = 0, need_ab: bool = True):
        sp.add_argument("--n", type=int, required=True)
        if need_ab:
            sp.add_argument("--a", type=int, required=True)
            sp.add_argument("--b", type=int, required=True)
        sp.add_argument("--delta", type=int, default=delta_default)

    sp = add("intersect", cmd_intersect, "intersection number of two classes")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--delta", type=int, default=None)
    sp.add_argument("--d1", type=parse_class, required=True, help="a,b[:m1,...]")
    sp.add_argument("--d2", type=parse_class, required=True, help="a,b[:m1,...]")

    nab(add("cohomology", cmd_cohomology,
            "h^i of aC0+bF on F_n, or the twist table with --delta"), delta_default=None)
    nab(add("genus", cmd_genus, "arithmetic and geometric genus"))
    sp = add("check-ample", cmd_check_ample, "bpf / very ample on F_n, ample with --m")
    nab(sp, delta_default=None)
    sp.add_argument("--m", type=int, nargs="+", help="exceptional multiplicity (one point)")
    sp = add("check-reider", cmd_check_reider, "Reider checks for the A/B pieces")
    nab(sp, delta_default=1, need_ab=False)
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("--class", dest="cls", type=parse_class, help="a,b:m1,... on the blow-up")
    nab(add("check-jet", cmd_check_jet, "jet-ampleness sufficient condition"))
    sp = add("corank", cmd_corank, "corank report for the Gaussian map of the normalisation")
    nab(sp)
    sp.add_argument("--one-node", action="store_true", help="use the one-node bounds")
    nab(add("conjecture", cmd_conjecture, "h^0(-K) on F_n vs on the blow-up"), need_ab=False)
    sp = add("gaussian-rank", cmd_gaussian_rank, "exact rank of the Gaussian map of K_X + C~")
    nab(sp)
    sp.add_argument("--max-wedge", type=int, default=2000)
    sp.add_argument("--with-timing", action="store_true")
    sp = add("scan", cmd_scan, "grid scan over (n, a, b, delta)")
    for name in ("n", "a", "b", "delta"):
        sp.add_argument(f"--{name}", type=parse_range, required=True, help="lo..hi")
    sp.add_argument("--jobs", type=int, default=_default_jobs())
    return p


def render(payload: dict, text: Optional[str], fmt: str) -> str:
    if fmt == "json" or text is None:
        return json.dumps(payload, indent=2, sort_keys=True)
    if fmt == "tsv" and "rows" not in payload:
        flat = {k: v for k, v in payload.items() if not isinstance(v, (dict, list))}
        return "\t".join(flat) + "\n" + "\t".join(_tsv_cell(v) for v in flat.values())
    return text


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)   # exits 2 on usage errors
    if args.command == "check-reider" and args.cls is None and (args.a is None or args.b is None):
        parser.error("check-reider needs --a and --b, or --class")
    try:
        payload, ok, text = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"hirzewahl {args.command}: error: {exc}", file=sys.stderr)
        return 2
    out = render(payload, text, args.format) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 1 if args.strict and not ok else 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
