"""Command-line interface for the sl(3,O) toolkit.

Verbs:
    table     emit the 78x78 structure-constant table (JSON or CSV)
    verify    run identity suites (dependencies, jacobi, det, all)
    killing   print the Killing-form signature
    subalg    report a subalgebra fixed by involutions, or an assembled one
    roots     emit root/weight diagram data for a named algebra
    stab-l    report the stabilizer of the octonionic unit l
    apply     apply a finite one-parameter transformation to a Jordan element
    gellmann  check the su(3) correspondence of the A/G generators

All randomness is keyed by --seed (default 0); identical invocations produce
byte-identical JSON (sorted keys, rationals as "p/q" strings).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction

from . import algebra, group, jordan, rootweight, subalgebra
from .octonion import IMAGINARY_UNITS


def _frac_str(v: Fraction) -> str:
    return str(Fraction(v))


def _dump_json(obj, out) -> None:
    text = json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
    out.write(text)


def _open_out(path):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


# ---------------------------------------------------------------------------
# table

def _table_json() -> dict:
    table = algebra.structure_table()
    labels = [group.format_label(lab) for lab in table.basis]
    constants = []
    for (i, j), row in table.constants.items():
        for k, v in row.items():
            constants.append({"i": i, "j": j, "k": k, "v": _frac_str(v)})
    constants.sort(key=lambda e: (e["i"], e["j"], e["k"]))
    return {"basis": labels, "constants": constants}


def cmd_table(args) -> int:
    data = _table_json()
    out, close = _open_out(args.out)
    try:
        if args.format == "csv":
            writer = csv.writer(out)
            writer.writerow(["i", "j", "k", "v"])
            for e in data["constants"]:
                writer.writerow([e["i"], e["j"], e["k"], e["v"]])
        else:
            _dump_json(data, out)
    finally:
        if close:
            out.close()
    return 0


# ---------------------------------------------------------------------------
# verify

def _tangent_combo(parts):
    return algebra.element_sum([(Fraction(c), algebra.tangent(group.parse_label(lab)))
                                for c, lab in parts])


def _verify_dependencies(out) -> int:
    """The 15 vanishing sums, 14 type-2 expressions, and A/G independence."""
    checks = []
    for q in IMAGINARY_UNITS:
        d = q
        checks.append((f"S:{d} + S:{d}:2 + S:{d}:3 = 0",
                       [(1, f"S:{d}"), (1, f"S:{d}:2"), (1, f"S:{d}:3")]))
    for q in IMAGINARY_UNITS:
        d = q
        checks.append((f"R:x,{d} + R:x,{d}:2 + R:x,{d}:3 = 0",
                       [(1, f"R:x,{d}"), (1, f"R:x,{d}:2"), (1, f"R:x,{d}:3")]))
    checks.append(("B:t,z + B:t,z:2 + B:t,z:3 = 0",
                   [(1, "B:t,z"), (1, "B:t,z:2"), (1, "B:t,z:3")]))
    for q in IMAGINARY_UNITS:
        d = q
        checks.append((f"R:x,{d}:2 = -1/2 R:x,{d} - 1/2 S:{d}",
                       [(1, f"R:x,{d}:2"), (Fraction(1, 2), f"R:x,{d}"),
                        (Fraction(1, 2), f"S:{d}")]))
    for q in IMAGINARY_UNITS:
        d = q
        checks.append((f"S:{d}:2 = 3/2 R:x,{d} - 1/2 S:{d}",
                       [(1, f"S:{d}:2"), (Fraction(-3, 2), f"R:x,{d}"),
                        (Fraction(1, 2), f"S:{d}")]))
    for cat in ("A", "G"):
        parts = []
        for q in IMAGINARY_UNITS:
            d = q
            parts += [(1, f"{cat}:{d}"), (-1, f"{cat}:{d}:2")]
            parts += [(1, f"{cat}:{q}"), (-1, f"{cat}:{q}:3")]
        checks.append((f"{cat}:q = {cat}:q:2 = {cat}:q:3 for all q", parts))
    for name, parts in checks:
        if not _tangent_combo(parts).is_zero():
            out.write(f"FAILED: {name}\n")
            return 1
        out.write(f"confirmed: {name}\n")
    out.write(f"{len(checks)} identities confirmed\n")
    return 0


def _verify_jacobi(out, seed: int) -> int:
    """Antisymmetry and a seeded sample of Jacobi triples (exact arithmetic)."""
    table = algebra.structure_table()
    n = len(table.basis)
    rng = random.Random(seed)
    triples = [tuple(sorted(rng.sample(range(n), 3))) for _ in range(500)]
    for (a, b, c) in triples:
        ua, ub, uc = ({a: Fraction(1)}, {b: Fraction(1)}, {c: Fraction(1)})
        total: dict = {}
        for x, y, z in ((ua, ub, uc), (ub, uc, ua), (uc, ua, ub)):
            inner = table.bracket_vectors(y, z)
            for k, v in table.bracket_vectors(x, inner).items():
                total[k] = total.get(k, Fraction(0)) + v
        if any(v != 0 for v in total.values()):
            la, lb, lc = (group.format_label(table.basis[i]) for i in (a, b, c))
            out.write(f"FAILED: jacobi({la}, {lb}, {lc}) != 0\n")
            return 1
    out.write(f"jacobi holds on {len(triples)} seeded triples\n")
    return 0


def _verify_det(out, seed: int, tol: float) -> int:
    """det preservation for every label over seeded rational chi samples."""
    rng = random.Random(seed)
    chis = []
    for _ in range(3):
        coords = [rng.randint(-4, 4) / 2.0 for _ in range(27)]
        chis.append((coords, float(jordan.det(jordan.from_coords(coords)))))
    for label in group.all_labels():
        for alpha in (0.3, -0.7):
            mat = group.action_matrix(label, alpha)
            for coords, det_before in chis:
                moved = [sum(mat[i][j] * coords[j] for j in range(27))
                         for i in range(27)]
                det_after = float(jordan.det(jordan.from_coords(moved)))
                if abs(det_after - det_before) > tol:
                    out.write(f"FAILED: det drift {abs(det_after - det_before):.3e}"
                              f" for {group.format_label(label)} at alpha={alpha}\n")
                    return 1
    out.write(f"det preserved for all {len(group.all_labels())} labels (tol {tol:g})\n")
    return 0


def cmd_verify(args) -> int:
    out, close = _open_out(args.out)
    try:
        suites = ["dependencies", "jacobi", "det"] if args.suite == "all" else [args.suite]
        for suite in suites:
            if suite == "dependencies":
                rc = _verify_dependencies(out)
            elif suite == "jacobi":
                rc = _verify_jacobi(out, args.seed)
            else:
                rc = _verify_det(out, args.seed, args.tol)
            if rc != 0:
                return rc
        return 0
    finally:
        if close:
            out.close()


# ---------------------------------------------------------------------------
# killing / stab-l / gellmann

def cmd_killing(args) -> int:
    km = algebra.killing_matrix()
    neg, pos, zero = algebra.signature(km)
    if args.out not in (None, "-"):
        data = {"signature": [neg, pos, zero],
                "matrix": [[_frac_str(v) for v in row] for row in km]}
        out, close = _open_out(args.out)
        try:
            _dump_json(data, out)
        finally:
            if close:
                out.close()
    else:
        print(f"({neg},{pos})")
    return 0


def cmd_stab_l(args) -> int:
    report = algebra.stabilizer_of_l()
    data = {
        "dim": report["dim"],
        "documented_basis_in_kernel": report["documented_basis_in_kernel"],
        "so81_dim": report["so81_dim"],
        "so81_closed": report["so81_closed"],
        "b_dims": list(report["b_dims"]),
        "b_abelian": report["b_abelian"],
        "b_is_ideal_under_so81": report["b_is_ideal_under_so81"],
        "b2_killing_null": report["b2_killing_null"],
    }
    out, close = _open_out(args.out)
    try:
        _dump_json(data, out)
    finally:
        if close:
            out.close()
    ok = (report["dim"] == 52 and report["documented_basis_in_kernel"]
          and report["so81_closed"] and report["b_abelian"]
          and report["b_is_ideal_under_so81"] and report["b2_killing_null"])
    if not ok:
        print("FAILED: stabilizer structure does not match the documented form",
              file=sys.stderr)
        return 1
    return 0


def cmd_gellmann(args) -> int:
    result = algebra.gellmann_check()
    out, close = _open_out(args.out)
    try:
        _dump_json(result, out)
    finally:
        if close:
            out.close()
    return 0 if result["match"] else 1


# ---------------------------------------------------------------------------
# subalg

_AUTO_TOKENS = {"t": "t", "23": "two_three", "two_three": "two_three",
                "hperp": "h_perp", "h_perp": "h_perp"}


def cmd_subalg(args) -> int:
    if bool(args.auto) == bool(args.assemble):
        print("subalg: exactly one of --auto or --assemble is required",
              file=sys.stderr)
        return 2
    if args.auto:
        try:
            which = [_AUTO_TOKENS[tok.strip()] for tok in args.auto.split(",")]
        except KeyError as exc:
            print(f"subalg: unknown involution token {exc}", file=sys.stderr)
            return 2
        phi = subalgebra.make_involution(which)
        if args.part == "compact":
            report = subalgebra.compact_preimage(phi)
        else:
            report = subalgebra.fixed_subalgebra(phi)
    else:
        names = [tok.strip() for tok in args.assemble.split(",")]
        bad = [n for n in names if n not in subalgebra.CELL_NAMES]
        if bad:
            print(f"subalg: unknown cell names {bad}", file=sys.stderr)
            return 2
        try:
            report = subalgebra.assemble(names)
        except subalgebra.NotClosed as exc:
            print(f"FAILED: assembly not closed: {exc}", file=sys.stderr)
            return 1
    out, close = _open_out(args.out)
    try:
        _dump_json(report.to_json_dict(), out)
    finally:
        if close:
            out.close()
    return 0


# ---------------------------------------------------------------------------
# roots

def cmd_roots(args) -> int:
    try:
        d = rootweight.diagram(args.algebra)
    except ValueError as exc:
        print(f"roots: {exc}", file=sys.stderr)
        return 2
    data: dict = {
        "rank": d.rank,
        "simple_roots": [[round(x, 12) for x in r]
                         for r in rootweight.simple_roots(d)],
    }
    if args.highest:
        try:
            marks = [int(x) for x in args.highest.split(",")]
        except ValueError:
            print("roots: --highest must be a comma list of integers",
                  file=sys.stderr)
            return 2
        if len(marks) != d.rank:
            print(f"roots: --highest needs {d.rank} marks", file=sys.stderr)
            return 2
        wd = rootweight.weights_from_highest(d, marks)
        index = {w.mark: n for n, w in enumerate(wd.weights)}
        data["weights"] = [{"mark": list(w.mark),
                            "coords": [round(x, 12) for x in w.coords]}
                           for w in wd.weights]
        data["edges"] = [{"from": index[a], "to": index[b], "root": j}
                         for a, b, j in wd.edges]
        vertices = [w.coords for w in wd.weights]
    else:
        roots = rootweight.root_system(d)
        data["roots"] = [[round(x, 12) for x in r] for r in roots]
        vertices = roots
    out, close = _open_out(args.out)
    try:
        if args.format == "csv":
            writer = csv.writer(out)
            writer.writerow([f"x{i+1}" for i in range(len(vertices[0]))])
            for v in vertices:
                writer.writerow([round(x, 12) for x in v])
        else:
            _dump_json(data, out)
    finally:
        if close:
            out.close()
    return 0


# ---------------------------------------------------------------------------
# apply

def cmd_apply(args) -> int:
    try:
        label = group.parse_label(args.label)
    except group.IllegalLabel as exc:
        print(f"apply: {exc}", file=sys.stderr)
        return 2
    if args.chi == "-":
        raw = sys.stdin.read()
    else:
        with open(args.chi, "r", encoding="utf-8") as fh:
            raw = fh.read()
    try:
        payload = json.loads(raw)
        coords = payload["coords"] if isinstance(payload, dict) else payload
        coords = [float(x) for x in coords]
        if len(coords) != 27:
            raise ValueError("need 27 coordinates")
    except (ValueError, KeyError, TypeError) as exc:
        print(f"apply: bad chi JSON: {exc}", file=sys.stderr)
        return 2
    chi = jordan.from_coords(coords)
    moved = group.apply(label, args.alpha, chi)
    data = {"coords": [round(float(x), 15) for x in jordan.to_coords(moved)],
            "det": round(float(jordan.det(moved)), 12)}
    out, close = _open_out(args.out)
    try:
        _dump_json(data, out)
    finally:
        if close:
            out.close()
    return 0


# ---------------------------------------------------------------------------
# driver

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="e6kit", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--jobs", type=int, default=1,
                       help="worker bound for table generation (output is "
                            "schedule-independent)")
        p.add_argument("--tol", type=float, default=1e-9)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        return p

    common(sub.add_parser("table", help="structure-constant table"))
    p = common(sub.add_parser("verify", help="identity suites"))
    p.add_argument("--suite", choices=("dependencies", "jacobi", "det", "all"),
                   default="all")
    common(sub.add_parser("killing", help="Killing-form signature"))
    p = common(sub.add_parser("subalg", help="subalgebra reports"))
    p.add_argument("--auto", default=None,
                   help="comma list of involutions: t, 23, hperp")
    p.add_argument("--assemble", default=None,
                   help="comma list of cells: " + ",".join(subalgebra.CELL_NAMES))
    p.add_argument("--part", choices=("fixed", "compact"), default="fixed")
    p = common(sub.add_parser("roots", help="root/weight diagram data"))
    p.add_argument("--algebra", required=True, help="e.g. A2, B3, C4, D4, G2, F4, E6")
    p.add_argument("--highest", default=None, help="comma list of Dynkin marks")
    common(sub.add_parser("stab-l", help="stabilizer of the unit l"))
    p = common(sub.add_parser("apply", help="apply a finite transformation"))
    p.add_argument("--label", required=True, help='e.g. "R:z,kl:2", "A:i", "B:t,x:3"')
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--chi", required=True,
                   help='JSON path or "-" for stdin; {"coords":[27 numbers]}')
    common(sub.add_parser("gellmann", help="su(3) correspondence check"))
    return parser


_COMMANDS = {"table": cmd_table, "verify": cmd_verify, "killing": cmd_killing,
             "subalg": cmd_subalg, "roots": cmd_roots, "stab-l": cmd_stab_l,
             "apply": cmd_apply, "gellmann": cmd_gellmann}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.jobs < 1:
        print("--jobs must be at least 1", file=sys.stderr)
        return 2
    return _COMMANDS[args.verb](args)


def main() -> None:
    try:
        sys.exit(run())
    except BrokenPipeError:
        sys.exit(0)


if __name__ == "__main__":
    main()
