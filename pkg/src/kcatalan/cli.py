"""Command line front end.

Exit codes: 0 success, 1 failed check, 2 hypothesis violation,
3 positivity finding, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time

from .algebra import SymFun, TPoly, partition, specialize_t
from .catalan import catalan_function
from .cores import StrongTableau, core_of_partition, strong_tableaux
from .expansions import (
    HypothesisViolated,
    hl_to_kschur,
    ksplit,
    ksplit_polynomial,
    ksplit_to_kschur,
    schur_times_kschur,
    schur_times_kschur_vertex,
)
from .kschur import NotInLambdaK, catalan_kostka, kschur, load_cache, save_cache, to_kschur_basis
from .quantum import format_class, gw_invariant, gw_tableau, parse_perm, quantum_product
from .rootideal import NotAnIdeal, RootIdeal, delta_k, empty_ideal, full_ideal, make_root_ideal, uplus
from .vertexops import hall_littlewood

EXIT_OK, EXIT_FAIL, EXIT_HYP, EXIT_FINDING, EXIT_USAGE = 0, 1, 2, 3, 64


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def parse_int_list(text: str) -> tuple:
    """Parse "[2,2,1,1]" or "[2^2,1^2]"; bare digit strings like "2211" also work."""
    s = text.strip()
    if re.fullmatch(r"\d+", s):
        return tuple(int(ch) for ch in s)
    m = re.fullmatch(r"\[(.*)\]", s)
    if not m:
        raise UsageError(f"cannot parse list {text!r}")
    body = m.group(1).strip()
    if not body:
        return ()
    out = []
    for tok in body.split(","):
        tok = tok.strip()
        mm = re.fullmatch(r"(-?\d+)(?:\^(\d+))?", tok)
        if not mm:
            raise UsageError(f"cannot parse entry {tok!r} in {text!r}")
        out += [int(mm.group(1))] * (int(mm.group(2)) if mm.group(2) else 1)
    return tuple(out)


def parse_partition(text: str) -> tuple:
    try:
        return partition(parse_int_list(text))
    except ValueError as e:
        raise UsageError(str(e))


def parse_ideal(text: str, ell: int | None = None) -> RootIdeal:
    """Ideal syntax: nr=[..], pairs=[[i,j],..], deltak(k,[mu]), full(l), empty(l), joined by '+'."""
    parts = [p.strip() for p in re.split(r"\+(?![^\[]*\])", text) if p.strip()]
    if len(parts) > 1:
        out = RootIdeal(())
        for p in parts:
            out = uplus(out, parse_ideal(p))
        return out
    s = text.strip()
    if s.startswith("nr="):
        return RootIdeal(parse_int_list(s[3:]))
    if s.startswith("pairs="):
        if ell is None:
            raise UsageError("pairs= needs a length; give --gamma or --mu")
        try:
            pairs = json.loads(s[6:])
        except json.JSONDecodeError as e:
            raise UsageError(f"bad pairs list: {e}")
        return make_root_ideal(ell, [tuple(p) for p in pairs])
    m = re.fullmatch(r"deltak\(\s*(\d+)\s*,\s*(\[.*\])\s*(?:,\s*(\d+)\s*)?\)", s)
    if m:
        mu = parse_int_list(m.group(2))
        return delta_k(mu, int(m.group(1)), int(m.group(3)) if m.group(3) else len(mu))
    m = re.fullmatch(r"(full|empty)\(\s*(\d+)\s*\)", s)
    if m:
        n = int(m.group(2))
        return full_ideal(n) if m.group(1) == "full" else empty_ideal(n)
    raise UsageError(f"cannot parse ideal {text!r}")


def symfun_json(f: SymFun) -> dict:
    basis = f.basis if isinstance(f.basis, str) else f"kschur{f.basis[1]}"
    return {
        "basis": basis,
        "pretty": f.pretty(),
        "terms": [{"lambda": list(lam), "coeff": list(c.coeffs), "pretty": str(c)} for lam, c in f.items()],
    }


def emit(args, payload: dict, text: str):
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def emit_symfun(args, f: SymFun, extra: dict | None = None):
    payload = symfun_json(f)
    if extra:
        payload.update(extra)
    emit(args, payload, f.pretty())


def cmd_catalan(args):
    gamma = parse_int_list(args.gamma)
    psi = parse_ideal(args.ideal, len(gamma))
    f = catalan_function(psi, gamma)
    if args.t1:
        f = specialize_t(f, 1)
    emit_symfun(args, f)
    return EXIT_OK


def cmd_kschur(args):
    f = kschur(parse_partition(args.mu), args.k)
    emit_symfun(args, f)
    return EXIT_OK


def cmd_hl(args):
    f = hall_littlewood(parse_partition(args.mu))
    if args.k is not None:
        f = to_kschur_basis(f, args.k)
    emit_symfun(args, f)
    return EXIT_OK


def cmd_hl2kschur(args):
    f = hl_to_kschur(parse_partition(args.mu), args.k, args.ell)
    emit_symfun(args, f)
    return EXIT_OK


def cmd_schur_x_kschur(args):
    mu, nu = parse_int_list(args.mu), parse_partition(args.nu)
    if args.method == "vertex":
        f = schur_times_kschur_vertex(mu, nu, args.k)
    else:
        f = schur_times_kschur(mu, nu, args.k)
        if args.method == "both":
            g = schur_times_kschur_vertex(mu, nu, args.k)
            if g != f:
                print(f"routes disagree: vertex route gives {g.pretty()}", file=sys.stderr)
                emit_symfun(args, f)
                return EXIT_FAIL
    emit_symfun(args, f, {"positive": f.is_nonneg()})
    return EXIT_OK


def cmd_ksplit(args):
    lam = parse_partition(args.lam)
    sp = ksplit(lam, args.k)
    payload = {"pieces": [list(p) for p in sp.pieces], "text": str(sp)}
    text = str(sp)
    if args.expand:
        g = ksplit_polynomial(lam, args.k)
        kk = ksplit_to_kschur(lam, args.k)
        payload["schur"] = symfun_json(g)
        payload["kschur"] = symfun_json(kk)
        text += f"\nG = {g.pretty()}\n  = {kk.pretty()}"
    emit(args, payload, text)
    return EXIT_OK


def render_ascii(T: StrongTableau) -> str:
    """Outer core with each cell labelled by the step that added it; marked cells in parentheses."""
    outer = T.chain[-1]
    label = {}
    marked = set()
    for step, cv in enumerate(T.covers, start=1):
        for comp in cv.components:
            for cell in comp:
                label[cell] = step
            if comp[0][0] == cv.mark:
                # marked cell: the north-east end of the component whose top row is the mark
                top = [c for c in comp if c[0] == cv.mark]
                marked.add(max(top, key=lambda rc: rc[1]))
    lines = []
    for r, length in enumerate(outer, start=1):
        row = []
        for c in range(1, length + 1):
            if (r, c) in label:
                s = str(label[(r, c)])
                row.append(f"({s})" if (r, c) in marked else f" {s} ")
            else:
                row.append(" . ")
        lines.append("".join(row))
    return "\n".join(lines)


def cmd_smt(args):
    word = parse_int_list(args.word)
    outside = parse_partition(args.outside)
    tabs = strong_tableaux(word, outside, args.k)
    payload = {
        "tableaux": [{"inside": list(T.inside), "spin": T.spin, "chain": [list(c) for c in T.chain]} for T in tabs],
        "count": len(tabs),
    }
    lines = [f"{len(tabs)} strong tableaux"]
    for T in tabs:
        lines.append(f"inside={list(T.inside)} spin={T.spin}")
        if args.render == "ascii":
            lines.append(render_ascii(T))
    emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_kostka(args):
    mu = parse_int_list(args.mu)
    psi = parse_ideal(args.ideal, len(mu))
    table = catalan_kostka(psi, mu, args.k)
    f = table.as_symfun()
    emit_symfun(args, f, {"positive": table.positive})
    if args.check_positive and not table.positive:
        return EXIT_FINDING
    return EXIT_OK


def cmd_qprod(args):
    u, v = parse_perm(args.u), parse_perm(args.v)
    if len(u) != args.k + 1 or len(v) != args.k + 1:
        raise UsageError(f"permutations must have length {args.k + 1}")
    cls = quantum_product(u, v, args.k)
    lines = format_class(cls)
    payload = {"terms": [{"w": list(w), "d": list(d), "coeff": c} for (w, d), c in sorted(cls.items())]}
    emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_gw(args):
    u, v, w = (parse_perm(x) for x in (args.u, args.v, args.w))
    d = parse_int_list(args.d)
    out = {}
    if args.method in ("kostka", "both"):
        out["kostka"] = gw_invariant(u, v, w, d, args.k)
    if args.method in ("tableau", "both"):
        out["tableau"] = gw_tableau(u, v, w, d, args.k)
    emit(args, out, "\n".join(f"{key}: {val}" for key, val in sorted(out.items())))
    if len(set(out.values())) > 1:
        return EXIT_FAIL
    return EXIT_OK


def cmd_check(args):
    from .checks import SUITES

    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    failures = 0
    report = {}
    for name in names:
        start = time.time()
        n = bad = 0
        for label, ok in SUITES[name](args.max_k, args.max_size):
            n += 1
            if not ok:
                bad += 1
                print(f"FAIL {name}: {label}", file=sys.stderr)
        failures += bad
        report[name] = {"items": n, "failures": bad, "seconds": round(time.time() - start, 2)}
    lines = [f"{name}: {r['items']} items, {r['failures']} failures" for name, r in report.items()]
    emit(args, report, "\n".join(lines))
    return EXIT_FAIL if failures else EXIT_OK


def cmd_conjecture_scan(args):
    from .checks import scan_items, scan_one

    start_at = 0
    if args.cursor and os.path.exists(args.cursor):
        with open(args.cursor) as fh:
            start_at = int(fh.read().strip() or 0)
    findings = []
    n = 0
    for idx, (k, psi, mu) in enumerate(scan_items(args.max_ell, args.max_k)):
        if idx < start_at:
            continue
        neg = scan_one(k, psi, mu)
        n += 1
        if neg:
            findings.append({"k": k, "nr": list(psi.nr), "mu": list(mu),
                             "negative": [[list(lam), list(c.coeffs)] for lam, c in neg]})
        if args.cursor:
            with open(args.cursor, "w") as fh:
                fh.write(str(idx + 1))
    payload = {"checked": n, "findings": findings}
    text = f"checked {n} indexed root ideals; {len(findings)} with negative coefficients"
    for f in findings:
        text += f"\nk={f['k']} nr={f['nr']} mu={f['mu']} negative={f['negative']}"
    emit(args, payload, text)
    return EXIT_FINDING if findings else EXIT_OK


def build_parser() -> Parser:
    p = Parser(prog="kcatalan", description="Catalan functions and k-Schur expansions")
    sub = p.add_subparsers(dest="cmd", parser_class=Parser)
    sub.required = True

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("catalan", cmd_catalan, "Schur expansion of a Catalan function")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--gamma", required=True)
    sp.add_argument("--t1", action="store_true", help="specialize t = 1")

    sp = add("kschur", cmd_kschur, "Schur expansion of a k-Schur function")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--mu", required=True)

    sp = add("hl", cmd_hl, "modified Hall-Littlewood function")
    sp.add_argument("--mu", required=True)
    sp.add_argument("--k", type=int)

    sp = add("hl2kschur", cmd_hl2kschur, "Hall-Littlewood to k-Schur by strong tableaux")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--ell", type=int)

    sp = add("schur-x-kschur", cmd_schur_x_kschur, "Schur times k-Schur")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--nu", required=True)
    sp.add_argument("--method", choices=["tableau", "vertex", "both"], default="tableau")

    sp = add("ksplit", cmd_ksplit, "k-split of a partition")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--expand", action="store_true")

    sp = add("smt", cmd_smt, "strong marked tableaux")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--word", required=True)
    sp.add_argument("--outside", required=True)
    sp.add_argument("--render", choices=["none", "ascii"], default="none")

    sp = add("kostka", cmd_kostka, "k-Schur expansion of a Catalan function")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--check-positive", action="store_true")

    sp = add("qprod", cmd_qprod, "quantum product of Schubert classes")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--u", required=True)
    sp.add_argument("--v", required=True)

    sp = add("gw", cmd_gw, "a single Gromov-Witten invariant")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--u", required=True)
    sp.add_argument("--v", required=True)
    sp.add_argument("--w", required=True)
    sp.add_argument("--d", required=True)
    sp.add_argument("--method", choices=["kostka", "tableau", "both"], default="kostka")

    sp = add("check", cmd_check, "run invariant suites")
    sp.add_argument("--suite", default="all",
                    choices=["all", "catalan", "cores", "kschur", "vertexops", "expansions", "quantum"])
    sp.add_argument("--max-k", type=int, default=3)
    sp.add_argument("--max-size", type=int, default=6)

    sp = add("conjecture-scan", cmd_conjecture_scan, "search for negative k-Catalan-Kostka coefficients")
    sp.add_argument("--max-ell", type=int, default=4)
    sp.add_argument("--max-k", type=int, default=4)
    sp.add_argument("--cursor", help="file recording progress so that scans resume")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    k = getattr(args, "k", None)
    if isinstance(k, int) and k < 1:
        print("error: --k must be positive", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(k, int):
        load_cache(k)
    try:
        code = args.fn(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (HypothesisViolated, NotInLambdaK, NotAnIdeal, ValueError) as e:
        print(f"hypothesis violated: {e}", file=sys.stderr)
        return EXIT_HYP
    if isinstance(k, int):
        save_cache(k)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
