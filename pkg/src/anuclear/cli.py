"""Command-line front end: table files, commands and the analysis report."""

from __future__ import annotations

import argparse
import io
import json
import sys
from typing import Sequence, TextIO

from .autotopy import DEFAULT_SEARCH_BOUND, autotopy_group, order_bound
from .centers import (
    MEDIAL,
    PARAMEDIAL,
    a_centers,
    identity_check,
    is_a_central,
    is_a_nuclear,
    is_abelian_group_isotope,
    is_group_isotope,
    loop_center,
)
from .congruence import MODES, congruence_check, normality_report
from .errors import ParseError, QuasigroupError, SizeMismatch
from .inverse import FAMILIES, InverseWitness, autostrophy_bridge, check_witness, detect_special
from .isotopy import Isotopy, apply_isotopy
from .nuclei import (
    COMPONENT_POSITIONS,
    SIDES,
    a_nuclei,
    action_profile,
    component_group,
    component_name,
    garrison_nucleus,
    orbits,
)
from .partition import Partition
from .perm import Perm, group_fingerprint
from .quasigroup import FiniteQuasigroup, Parastrophy, local_maps, parastrophe, validate_table

INCONSISTENT = "INTERNAL_INCONSISTENCY"
DETECTABLE = ("lip", "rip", "ip", "ts", "ci", "wip")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# table files

def parse_table_file(source) -> FiniteQuasigroup:
    """Read a table from a path or a text stream.

    ``#`` starts a comment line. The first data line is n, followed by n rows of
    n whitespace-separated labels.
    """
    if isinstance(source, (str, bytes)) or hasattr(source, "__fspath__"):
        with open(source, encoding="utf-8") as fh:
            return parse_table_text(fh.read())
    return parse_table_text(source.read())


def parse_table_text(text: str) -> FiniteQuasigroup:
    data = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            data.append((lineno, line))
    if not data:
        raise ParseError(0, "empty input")
    lineno, first = data[0]
    try:
        n = int(first)
    except ValueError:
        raise ParseError(lineno, f"expected the order, got {first!r}") from None
    if n < 1:
        raise ParseError(lineno, "order must be positive")
    rows = data[1:]
    if len(rows) != n:
        last = rows[-1][0] if rows else lineno
        raise ParseError(last, f"expected {n} rows, found {len(rows)}")
    grid = []
    for lineno, line in rows:
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(lineno, "non-integer entry") from None
        if len(row) != n:
            raise ParseError(lineno, f"expected {n} entries, found {len(row)}")
        if any(v < 0 or v >= n for v in row):
            raise ParseError(lineno, f"entry outside 0..{n - 1}")
        grid.append(row)
    return validate_table(n, grid)


def format_table(q: FiniteQuasigroup) -> str:
    width = len(str(q.n - 1))
    lines = [str(q.n)] + [" ".join(str(v).rjust(width) for v in row) for row in q.table]
    return "\n".join(lines) + "\n"


# analysis report

def _perm_str(p: Perm) -> str:
    return ",".join(map(str, p.images))


def _isotopy_strs(t: Isotopy) -> list:
    return [_perm_str(p) for p in t]


def _blocks(part: Partition) -> list:
    return [list(b) for b in part.blocks]


def _consistency(pairs: dict) -> dict:
    out = {}
    for name, (lhs, rhs, kind) in pairs.items():
        ok = lhs == rhs if kind == "iff" else (not lhs or rhs)
        out[name] = "ok" if ok else INCONSISTENT
    return out


def analysis_report(q: FiniteQuasigroup, max_n: int = DEFAULT_SEARCH_BOUND) -> dict:
    """Everything the analyze command reports, as plain JSON-ready data."""
    n = q.n
    lm = local_maps(q)
    rep = {
        "order": n,
        "flags": {
            "left_loop": lm.left_loop,
            "right_loop": lm.right_loop,
            "loop": q.is_loop(),
            "identity": q.identity,
            "unipotent": lm.unipotent,
            "idempotent": lm.idempotent,
            "commutative": q.is_commutative(),
            "associative": q.is_associative(),
        },
        "translations": {
            kind: [_perm_str(T) for T in q.translations(kind)] for kind in ("left", "right", "middle")
        },
        "garrison_nuclei": {s: sorted(garrison_nucleus(q, s).elements) for s in SIDES},
        "loop_center": sorted(loop_center(q)) if q.is_loop() else None,
    }
    group_iso = is_group_isotope(q)
    abelian_iso = is_abelian_group_isotope(q)
    medial = identity_check(q, MEDIAL)
    paramedial = identity_check(q, PARAMEDIAL)
    verdicts = {
        "group_isotope": group_iso,
        "abelian_group_isotope": abelian_iso,
        "medial": medial,
        "paramedial": paramedial,
        "a_nuclear": None,
        "a_central": None,
    }
    pairs = {
        "medial implies abelian_group_isotope": (medial, abelian_iso, "implies"),
        "paramedial implies abelian_group_isotope": (paramedial, abelian_iso, "implies"),
        "abelian_group_isotope implies group_isotope": (abelian_iso, group_iso, "implies"),
    }
    inverse = {}
    for fam in DETECTABLE:
        if fam in ("ci", "wip") and not q.is_loop():
            inverse[fam] = None
            continue
        w = detect_special(q, fam)
        inverse[fam] = None if w is None else [_perm_str(p) for p in w.perms]
    rep["inverse"] = inverse

    if n > max_n:
        rep["skipped"] = f"autotopy-dependent sections need n <= {max_n}"
        rep.update(autotopy=None, a_nuclei=None, a_centers=None, congruence=None)
    else:
        avt = autotopy_group(q, max_n=max_n)
        fp = group_fingerprint(avt.as_perm_group())
        rep["skipped"] = None
        rep["autotopy"] = {
            "order": avt.order,
            "abelian": fp.abelian,
            "element_orders": [list(x) for x in fp.element_orders],
            "automorphisms": len(avt.automorphisms()),
            "bound": order_bound(n),
        }
        pairs["|Avt| divides n!*n"] = (True, order_bound(n) % avt.order == 0, "iff")
        nuc = a_nuclei(q, avt)
        nrep = {}
        for side in SIDES:
            comps = {}
            for pos in COMPONENT_POSITIONS[side]:
                g = component_group(nuc[side], pos).group
                prof = action_profile(g)
                comps[component_name(pos, side)] = {
                    "order": g.order,
                    "elements": sorted(_perm_str(p) for p in g.elements),
                    "orbits": _blocks(orbits(g)),
                    "free": prof.free,
                    "transitive": prof.transitive,
                }
            nrep[side] = {"order": nuc[side].order, "components": comps}
        rep["a_nuclei"] = nrep
        centers = a_centers(q, avt)
        rep["a_centers"] = {s: centers[s].order for s in SIDES}
        verdicts["a_nuclear"] = is_a_nuclear(q, avt)
        verdicts["a_central"] = is_a_central(q, avt)
        pairs["a_nuclear iff group_isotope"] = (verdicts["a_nuclear"], group_iso, "iff")
        pairs["a_central iff abelian_group_isotope"] = (verdicts["a_central"], abelian_iso, "iff")
        norm = normality_report(q, avt)
        rep["congruence"] = {
            "equivalences": {
                component_name(*key): {"blocks": _blocks(part), "modes": norm.modes[key]}
                for key, part in norm.partitions.items()
            },
            "garrison_cosets": {
                side: {
                    "nucleus": entry["nucleus"],
                    "normal": not entry["mismatches"],
                    "mismatches": [[a, left, right] for a, left, right in entry["mismatches"]],
                }
                for side, entry in norm.coset_checks.items()
            },
            "implications": norm.implications,
        }
    rep["verdicts"] = verdicts
    rep["consistency"] = _consistency(pairs)
    rep["inconsistent"] = any(v == INCONSISTENT for v in rep["consistency"].values())
    return rep


def _fmt_set(xs) -> str:
    return "{" + ", ".join(map(str, xs)) + "}"


def _fmt_blocks(blocks) -> str:
    return " | ".join(" ".join(map(str, b)) for b in blocks)


def render_report(rep: dict) -> str:
    out = io.StringIO()
    w = out.write
    w(f"order: {rep['order']}\n")
    flags = ", ".join(k for k, v in rep["flags"].items() if v is True)
    w(f"flags: {flags or 'none'}\n")
    if rep["flags"]["identity"] is not None:
        w(f"identity: {rep['flags']['identity']}\n")
    for side, els in rep["garrison_nuclei"].items():
        w(f"N_{side[0]} = {_fmt_set(els)}\n")
    if rep["loop_center"] is not None:
        w(f"loop center = {_fmt_set(rep['loop_center'])}\n")
    if rep["skipped"]:
        w(f"skipped: {rep['skipped']}\n")
    else:
        a = rep["autotopy"]
        w(f"|Avt| = {a['order']} (bound {a['bound']}), abelian: {a['abelian']}, |Aut| = {a['automorphisms']}\n")
        for side, entry in rep["a_nuclei"].items():
            w(f"A-nucleus {side}: order {entry['order']}\n")
            for name, c in entry["components"].items():
                w(f"  {name}: order {c['order']}, orbits {_fmt_blocks(c['orbits'])}\n")
        w("A-centers: " + ", ".join(f"{s} {o}" for s, o in rep["a_centers"].items()) + "\n")
        for side, entry in rep["congruence"]["garrison_cosets"].items():
            status = "normal" if entry["normal"] else "not normal"
            w(f"N_{side[0]} cosets: {status}")
            for a, left, right in entry["mismatches"]:
                w(f"; {a}*N = {_fmt_set(left)} vs N*{a} = {_fmt_set(right)}")
            w("\n")
    w("verdicts: " + ", ".join(f"{k}={v}" for k, v in rep["verdicts"].items()) + "\n")
    found = [k for k, v in rep["inverse"].items() if v is not None]
    w(f"inverse properties: {', '.join(found) or 'none'}\n")
    for name, status in rep["consistency"].items():
        if status != "ok":
            w(f"{INCONSISTENT}: {name}\n")
    return out.getvalue()


# commands

def _perm_arg(text: str | None, n: int) -> Perm:
    if text is None:
        return Perm.identity(n)
    return Perm.parse(text, n)


def _cmd_validate(q, args, out):
    out.write(f"valid quasigroup of order {q.n}\n")
    lm = local_maps(q)
    kind = "loop" if q.is_loop() else "left loop" if lm.left_loop else "right loop" if lm.right_loop else "quasigroup"
    out.write(f"kind: {kind}\n")
    return 0


def _cmd_analyze(q, args, out):
    rep = analysis_report(q, max_n=args.max_n)
    if args.json:
        out.write(json.dumps(rep, sort_keys=True, indent=2) + "\n")
    else:
        out.write(render_report(rep))
    return 0


def _cmd_parastrophe(q, args, out):
    out.write(format_table(parastrophe(q, Parastrophy.parse(args.sigma))))
    return 0


def _cmd_isotope(q, args, out):
    t = Isotopy(*(_perm_arg(p, q.n) for p in (args.alpha, args.beta, args.gamma)))
    out.write(format_table(apply_isotopy(q, t)))
    return 0


def _cmd_autotopy(q, args, out):
    avt = autotopy_group(q, max_n=args.max_n)
    fp = group_fingerprint(avt.as_perm_group())
    out.write(f"order: {avt.order}\n")
    out.write(f"abelian: {fp.abelian}\n")
    out.write("element orders: " + ", ".join(f"{o}^{c}" for o, c in fp.element_orders) + "\n")
    if args.list:
        for t in avt:
            out.write(" ; ".join(_isotopy_strs(t)) + "\n")
    return 0


def _cmd_nuclei(q, args, out):
    avt = autotopy_group(q, max_n=args.max_n)
    nuc = a_nuclei(q, avt)
    for side in SIDES:
        out.write(f"A-nucleus {side}: order {nuc[side].order}\n")
        for pos in COMPONENT_POSITIONS[side]:
            g = component_group(nuc[side], pos).group
            out.write(f"  {component_name(pos, side)}: order {g.order}, orbits {_fmt_blocks(_blocks(orbits(g)))}\n")
        out.write(f"  N_{side[0]} = {_fmt_set(sorted(garrison_nucleus(q, side).elements))}\n")
    return 0


def _cmd_centers(q, args, out):
    avt = autotopy_group(q, max_n=args.max_n)
    for side, c in a_centers(q, avt).items():
        out.write(f"A-center {side}: order {c.order}\n")
    if q.is_loop():
        out.write(f"loop center = {_fmt_set(sorted(loop_center(q)))}\n")
    out.write(f"a_central: {is_a_central(q, avt)}\n")
    out.write(f"abelian_group_isotope: {is_abelian_group_isotope(q)}\n")
    return 0


def _cmd_congruence(q, args, out):
    part = Partition.parse(args.partition, q.n)
    if part.n != q.n:
        raise SizeMismatch(f"partition on {part.n} points, quasigroup of order {q.n}")
    modes = MODES if args.mode == "all" else (args.mode,)
    for m in modes:
        out.write(f"{m}: {congruence_check(q, part, m)}\n")
    return 0


def _cmd_inverse(q, args, out):
    n = q.n
    fam = args.family
    if args.perms:
        perms = tuple(Perm.parse(p, n) for p in args.perms.split(";"))
    elif args.J:
        perms = (Perm.parse(args.J, n),)
    else:
        perms = None
    exps = ()
    if fam == "rst":
        exps = (args.r, args.s, args.t)
    elif fam == "m_inverse":
        exps = (args.m,)
    if perms is None and fam != "ts":
        if fam not in DETECTABLE:
            raise UsageError(f"family {fam} needs an explicit witness")
        w = detect_special(q, fam)
        if w is None:
            out.write(f"{fam}: absent\n")
            return 0
        out.write(f"{fam}: detected " + " ; ".join(_perm_str(p) for p in w.perms) + "\n")
    else:
        w = InverseWitness(fam, perms or (), exps)
    out.write(f"check_witness: {check_witness(q, w)}\n")
    out.write(f"autostrophy_bridge: {autostrophy_bridge(q, w)}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="anuclear", description="Autotopy-nuclear structure of finite quasigroups.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, handler, help_text, bounded=False):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("file", help="table file, or - for stdin")
        if bounded:
            sp.add_argument("--max-n", type=int, default=DEFAULT_SEARCH_BOUND)
        sp.set_defaults(handler=handler)
        return sp

    add("validate", _cmd_validate, "check that a table is a Latin square")
    sp = add("analyze", _cmd_analyze, "full structural report", bounded=True)
    sp.add_argument("--json", action="store_true")
    sp = add("parastrophe", _cmd_parastrophe, "print a parastrophe")
    sp.add_argument("--sigma", required=True, choices=["e", "12", "13", "23", "123", "132"])
    sp = add("isotope", _cmd_isotope, "print the isotope gamma^-1(alpha x . beta y)")
    for name in ("--alpha", "--beta", "--gamma"):
        sp.add_argument(name, default=None)
    sp = add("autotopy", _cmd_autotopy, "autotopy group order and fingerprint", bounded=True)
    sp.add_argument("--list", action="store_true")
    add("nuclei", _cmd_nuclei, "A-nuclei, component orbits, Garrison nuclei", bounded=True)
    add("centers", _cmd_centers, "A-centers and loop center", bounded=True)
    sp = add("congruence", _cmd_congruence, "check an equivalence against a mode")
    sp.add_argument("--partition", required=True, help='blocks such as "0 1 | 2 3"')
    sp.add_argument("--mode", default="normal", choices=list(MODES) + ["all"])
    sp = add("inverse", _cmd_inverse, "check or detect an inverse property")
    sp.add_argument("--family", required=True, choices=FAMILIES)
    sp.add_argument("--J", default=None, help="single witness permutation")
    sp.add_argument("--perms", default=None, help="';'-separated witness permutations")
    for name in ("--r", "--s", "--t", "--m"):
        sp.add_argument(name, type=int, default=0)
    return p


def run_command(argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    """Dispatch one command; 0 success, 1 domain error, 2 usage error."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except UsageError as exc:
        err.write(parser.format_usage())
        err.write(f"usage error: {exc}\n")
        return 2
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else 2
    try:
        q = parse_table_file(sys.stdin) if args.file == "-" else parse_table_file(args.file)
        return args.handler(q, args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except (QuasigroupError, ValueError, OSError) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1


def main(argv: Sequence[str] | None = None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
