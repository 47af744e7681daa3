"""Command-line interface.

Exit codes: 0 all checks pass, 1 some check fails, 2 bad input, 3 guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import gf, verify
from .algebra import SemigroupAlgebra, ideal_lattice
from .correspondence import build_phi_context, check_all, congruence_label, ideal_labels, kernel_classes
from .errors import GuardExceeded, InputError
from .gf import PrimeField
from .relations import DEFAULT_CONGRUENCE_GUARD, as_relation, cover_relation, enumerate_congruences, is_permutable
from .render import hasse_ascii, hasse_dot
from .semigroup import MAX_ORDER, CayleyTable, build, load_table, parse_family

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3
FORMATS = ("ascii", "dot", "json")


@dataclass
class RunConfig:
    subcommand: str
    family: str | None = None
    table: str | None = None
    primes: tuple[int, ...] = (2,)
    format: str = "ascii"
    max_order: int = MAX_ORDER
    congruence_guard: int = DEFAULT_CONGRUENCE_GUARD
    subspace_guard: int | None = None
    out: str | None = None
    golden: str | None = None
    rows: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.format not in FORMATS:
            raise InputError(f"format must be one of {FORMATS}")
        for p in self.primes:
            PrimeField(p)

    def semigroup(self) -> CayleyTable:
        if self.table and self.family:
            raise InputError("give either --family or --table, not both")
        if self.table:
            return load_table(self.table, self.max_order)
        if self.family:
            return build(parse_family(self.family), self.max_order)
        raise InputError("a semigroup is required: --family SPEC or --table FILE")


def _parse_primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise InputError(f"bad prime list {text!r}") from None


def format_cayley(s: CayleyTable) -> str:
    width = max(len(x) for x in s.names)
    head = " " * width + " | " + " ".join(f"{x:>{width}}" for x in s.names)
    lines = [head, "-" * len(head)]
    for i, row in enumerate(s.table):
        lines.append(f"{s.names[i]:>{width}} | " + " ".join(f"{s.names[x]:>{width}}" for x in row))
    return "\n".join(lines)


def cmd_semigroup(config: RunConfig) -> tuple[str, int]:
    s = config.semigroup()
    congs = enumerate_congruences(s, config.congruence_guard)
    report = is_permutable(s, config.congruence_guard)
    labels = [congruence_label(s, c) for c in congs]
    labels = [f"α{k}" if lab == c.format(s.names) else lab for k, (lab, c) in enumerate(zip(labels, congs))]
    ranks = [s.n - c.num_classes for c in congs]
    edges = cover_relation(congs, lambda a, b: a <= b)
    status = EXIT_OK if report.verdict else EXIT_FAIL
    if config.format == "json":
        payload = {
            "semigroup": s.label,
            "names": list(s.names),
            "table": [list(r) for r in s.table],
            "congruences": [{"label": lab, "classes": c.format(s.names), "relation": as_relation(c).to_matrix()}
                            for lab, c in zip(labels, congs)],
            "lattice_edges": [list(e) for e in edges],
            "permutable": report.to_dict(),
        }
        return json.dumps(payload, ensure_ascii=False, indent=2) + "\n", status
    if config.format == "dot":
        return hasse_dot(labels, ranks, edges, f"Con({s.label})"), status
    out = [f"semigroup {s.label} (order {s.n})", format_cayley(s), "",
           f"{len(congs)} congruences:"]
    out += [f"  {lab:<6} {c.format(s.names)}" for lab, c in zip(labels, congs)]
    out += ["", hasse_ascii(labels, ranks, edges, rank_name="rank").rstrip(), ""]
    out.append(f"permutable: {str(report.verdict).lower()}")
    for w in report.witnesses:
        out.append(f"  witness: α={w['alpha']} β={w['beta']} pair=({w['pair'][0]},{w['pair'][1]}) "
                   f"in α∘β={w['in_alpha_beta']} in β∘α={w['in_beta_alpha']}")
    return "\n".join(out) + "\n", status


def _algebra_block(s: CayleyTable, p: int, config: RunConfig):
    algebra = SemigroupAlgebra(s, PrimeField(p))
    ctx = build_phi_context(algebra, config.subspace_guard, config.congruence_guard)
    labels = ideal_labels(ctx)
    edges = ideal_lattice(ctx.ideals)
    reports = check_all(ctx)
    return algebra, ctx, labels, edges, reports


def cmd_algebra(config: RunConfig) -> tuple[str, int]:
    s = config.semigroup()
    chunks, payloads, status = [], [], EXIT_OK
    for p in config.primes:
        algebra, ctx, labels, edges, reports = _algebra_block(s, p, config)
        if not all(r.verdict for r in reports):
            status = EXIT_FAIL
        classes = kernel_classes(ctx)
        if config.format == "json":
            payloads.append({
                "algebra": algebra.label,
                "prime": p,
                "ideals": [dict(ideal.to_dict(), label=lab, rho=ctx.describe_partition(ctx.rho_of(k)))
                           for k, (ideal, lab) in enumerate(zip(ctx.ideals, labels))],
                "lattice_edges": [list(e) for e in edges],
                "kernel_classes": classes,
                "checks": [r.to_dict() for r in reports],
            })
        elif config.format == "dot":
            chunks.append(hasse_dot(labels, [i.dim for i in ctx.ideals], edges, algebra.label))
        else:
            lines = [f"{algebra.label}: {len(ctx.ideals)} ideals, dims {[i.dim for i in ctx.ideals]}",
                     hasse_ascii(labels, [i.dim for i in ctx.ideals], edges).rstrip(),
                     "ker φ classes: " + ", ".join("{" + ", ".join(labels[k] for k in c) + "}" for c in classes)]
            for r in reports:
                lines.append(f"{r.check_name}: {'PASS' if r.verdict else 'FAIL'}")
                for w in r.witnesses[:4]:
                    lines.append("  witness: I=Span(" + ", ".join(w["I"]["span"]) + ") J=Span("
                                 + ", ".join(w["J"]["span"]) + ") "
                                 + " ".join(f"{k}={v}" for k, v in w.items() if k not in ("I", "J")))
                if len(r.witnesses) > 4:
                    lines.append(f"  ... {len(r.witnesses) - 4} more")
            chunks.append("\n".join(lines) + "\n")
    if config.format == "json":
        return json.dumps(payloads if len(payloads) > 1 else payloads[0], ensure_ascii=False, indent=2) + "\n", status
    return "\n".join(chunks), status


def cmd_verify_paper(config: RunConfig) -> tuple[str, int]:
    golden = None
    if config.golden:
        try:
            golden = verify.merge_golden(json.loads(Path(config.golden).read_text(encoding="utf-8")))
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot load golden overrides: {exc}") from None
    extra = config.semigroup() if (config.table or config.family) else None
    results = verify.run_rows(config.primes, golden, config.rows, extra)
    ok = all(r.passed for r in results)
    if config.format == "json":
        payload = [{"row": r.number, "title": r.title, "passed": r.passed, "failures": r.failures,
                    "skipped": r.skipped, "seconds": round(r.seconds, 3)} for r in results]
        return json.dumps(payload, ensure_ascii=False, indent=2) + "\n", EXIT_OK if ok else EXIT_FAIL
    lines = [r.line() for r in results]
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} rows pass")
    return "\n".join(lines) + "\n", EXIT_OK if ok else EXIT_FAIL


COMMANDS = {"semigroup": cmd_semigroup, "algebra": cmd_algebra, "verify-paper": cmd_verify_paper}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="congkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, default_primes):
        p.add_argument("--family", help="e.g. cyclic:4, rect-band:2,2, chain-semilattice:3, left-zero:2, semilattice2")
        p.add_argument("--table", help="Cayley-table text file")
        p.add_argument("--format", default="ascii", choices=FORMATS)
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--max-order", type=int, default=MAX_ORDER, help="largest semigroup order accepted")
        p.add_argument("--congruence-guard", type=int, default=DEFAULT_CONGRUENCE_GUARD,
                       help="largest order for partition enumeration")
        p.add_argument("--subspace-guard", type=int, default=None,
                       help="largest subspace count for filter enumeration of ideals; above it ideals come "
                            f"from principal-ideal closure (default ${gf.GUARD_ENV} or {gf.DEFAULT_SUBSPACE_GUARD})")
        if default_primes is not None:
            p.add_argument("--prime", "--primes", dest="primes", default=default_primes,
                           help="prime or comma-separated primes")

    common(sub.add_parser("semigroup", help="Cayley table, congruences, permutability"), None)
    common(sub.add_parser("algebra", help="ideal lattice of F_p[S] and the correspondence checks"), "2")
    vp = sub.add_parser("verify-paper", help="run every reproduction row")
    common(vp, "2,3,5")
    vp.add_argument("--golden", help="JSON file overriding golden constants")
    vp.add_argument("--rows", help="comma-separated row numbers to run")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(
            subcommand=args.subcommand,
            family=args.family,
            table=args.table,
            primes=_parse_primes(getattr(args, "primes", "2")),
            format=args.format,
            max_order=args.max_order,
            congruence_guard=args.congruence_guard,
            subspace_guard=args.subspace_guard,
            out=args.out,
            golden=getattr(args, "golden", None),
            rows=_parse_primes(args.rows) if getattr(args, "rows", None) else None,
        )
        if config.subspace_guard is not None and config.subspace_guard < 1:
            raise InputError("--subspace-guard must be positive")
        text, status = COMMANDS[config.subcommand](config)
    except GuardExceeded as exc:
        print(f"congkit: guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InputError as exc:
        print(f"congkit: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if config.out:
        Path(config.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
