"""Command-line driver: ``verify``, ``table``, ``selftest`` and ``bench``.

Exit codes: 0 when every requested check matches exactly, 1 on a mismatch,
2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import statistics
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence, TextIO

from . import acceptance
from .fock import check_trace_lemma, commutation_checks
from .identities import (
    THEOREMS,
    Caps,
    Report,
    corollary_check,
    corollary_lhs,
    corollary_rhs,
    corollary_table,
    lemma_inf_finite_check,
    product_side,
    serialize_coeff,
    sum_side,
    theorem_check,
    three_way_check,
)
from .laurent import LaurentSeries
from .partitions import partitions_up_to, tuples_up_to
from .vertex import mirror_sides, rotation_sides, widened

IDENTITIES = (
    "main",
    "main2",
    "cor_main",
    "cor_main2",
    "no_classic",
    "conj_no",
    "lemma_inf_finite",
    "fock_lemmas",
    "vertex_symmetries",
)

# caps each identity needs; anything else is ignored with no default filled in
REQUIRED = {
    "main": ("N", "D", "M"),
    "main2": ("N", "D", "M"),
    "cor_main": ("N", "s_deg"),
    "cor_main2": ("N", "s_deg"),
    "no_classic": ("s_deg",),
    "conj_no": ("s_deg",),
    "lemma_inf_finite": ("D", "M"),
    "fock_lemmas": ("N", "D", "M"),
    "vertex_symmetries": ("D", "M"),
}
TABLES = ("main", "main2", "cor_main", "cor_main2", "no_classic", "conj_no")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    identity: str | None
    N: int | None
    D: int | None
    M: int | None
    s_deg: int | None
    output: str
    seed: int
    three_way: bool = False
    timing: bool = True
    repeat: int = 3

    def caps(self) -> Caps:
        return Caps(self.N or 1, self.D or 0, self.M or 0, self.s_deg or 0)

    def validate(self) -> None:
        if self.command in ("verify", "table", "bench"):
            if self.identity is None:
                raise UsageError(f"{self.command} needs --identity")
            for name in REQUIRED[self.identity]:
                value = getattr(self, name)
                flag = "--" + name.replace("_", "-")
                if value is None:
                    raise UsageError(f"--identity {self.identity} needs {flag}")
                if name == "N" and value < 1:
                    raise UsageError(f"{flag} must be at least 1")
                if value < 0:
                    raise UsageError(f"{flag} must be non-negative")
        if self.command == "table" and self.identity not in TABLES:
            raise UsageError(f"no table for {self.identity}; choose from {', '.join(TABLES)}")
        if self.three_way and self.identity not in THEOREMS:
            raise UsageError("--three-way applies to main and main2 only")
        if self.repeat < 1:
            raise UsageError("--repeat must be positive")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="novertex",
        description="Exact verification of Nekrasov-Okounkov type identities from the topological vertex.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, identity_required: bool) -> None:
        p.add_argument("--identity", choices=IDENTITIES, required=identity_required)
        p.add_argument("--N", type=int, help="number of partitions in a tuple (L for fock_lemmas)")
        p.add_argument("--D", type=int, help="total degree cap in the Q (or z, x, y) variables")
        p.add_argument("--M", type=int, help="τ-window to certify, τ = q^(-1/2)")
        p.add_argument("--s-deg", dest="s_deg", type=int, help="total degree cap in the s variables")
        p.add_argument("--output", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized samples")
        p.add_argument("--no-timing", dest="timing", action="store_false", help="report wall_ms as null")

    verify = sub.add_parser("verify", help="check one identity at the given caps")
    common(verify, True)
    verify.add_argument("--three-way", action="store_true", help="compare definition, sum and product sides")
    table = sub.add_parser("table", help="print coefficients of both sides")
    common(table, True)
    selftest = sub.add_parser("selftest", help="run every acceptance criterion")
    common(selftest, False)
    bench = sub.add_parser("bench", help="time one identity check")
    common(bench, True)
    bench.add_argument("--repeat", type=int, default=3)
    return parser


def parse_config(argv: Sequence[str]) -> RunConfig:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        command=args.command,
        identity=args.identity,
        N=args.N,
        D=args.D,
        M=args.M,
        s_deg=args.s_deg,
        output=args.output,
        seed=args.seed,
        three_way=getattr(args, "three_way", False),
        timing=args.timing,
        repeat=getattr(args, "repeat", 3),
    )
    config.validate()
    return config


# verification ----------------------------------------------------------------


def combine(identity: str, caps: Caps, reports: list[Report], wall_ms: float) -> Report:
    """One report for a sweep: the first mismatch wins, windows take the minimum."""
    bad = [r for r in reports if not r.ok]
    windows = [r.certified_tau_window for r in reports if r.certified_tau_window is not None]
    out = Report(identity, caps, "mismatch" if bad else "exact-match")
    out.certified_tau_window = min(windows) if windows else None
    out.wall_ms = wall_ms
    out.notes.append(f"{len(reports) - len(bad)}/{len(reports)} checks exact")
    if bad:
        out.witness = bad[0].witness
        out.notes.append(f"first mismatch in {bad[0].identity}")
    return out


def _from_flags(identity: str, caps: Caps, checks: list[tuple[str, bool, int, object]], wall_ms: float) -> Report:
    reports = []
    for name, ok, window, witness in checks:
        r = Report(name, caps, "exact-match" if ok else "mismatch", certified_tau_window=window)
        if not ok:
            r.witness = {"monomial": str(witness), "lhs": None, "rhs": None}
        reports.append(r)
    return combine(identity, caps, reports, wall_ms)


def verify(config: RunConfig) -> Report:
    caps = config.caps()
    ident = config.identity
    start = time.perf_counter()
    if ident in THEOREMS:
        return three_way_check(ident, caps) if config.three_way else theorem_check(ident, caps)
    if ident in ("cor_main", "cor_main2", "no_classic", "conj_no"):
        if ident in ("no_classic", "conj_no"):
            caps = Caps(1, 0, 0, caps.s_deg)
        return corollary_check(ident, caps)
    if ident == "lemma_inf_finite":
        shapes = list(partitions_up_to(caps.D))
        reports = [lemma_inf_finite_check(m, n, caps.D, caps.M) for m in shapes for n in shapes]
        return combine(ident, caps, reports, (time.perf_counter() - start) * 1000)
    if ident == "fock_lemmas":
        L = caps.N
        checks = []
        for pairing in ("identity", "conjugate"):
            for signs in product((1, -1), repeat=2 * L):
                r = check_trace_lemma(L, signs[:L], signs[L:], caps.D, caps.M, pairing)
                checks.append((f"trace[{pairing},{signs}]", r.ok, r.window, r.witness))
        for c in commutation_checks(list(partitions_up_to(caps.D)), caps.D, caps.M):
            checks.append((f"{c.relation} on {c.ket}", c.ok, c.window, c.witness))
        return _from_flags(ident, caps, checks, (time.perf_counter() - start) * 1000)
    if ident == "vertex_symmetries":
        checks = []
        for triple in tuples_up_to(3, caps.D):
            values, w = widened(lambda m: rotation_sides(*triple, m), caps.M)
            upto = min(w, caps.M)
            ok = all(values[0].eq_to_order(v, upto)[0] for v in values[1:])
            checks.append((f"rotation {triple}", ok and w >= caps.M, upto, triple))
            (lhs, rhs), w = widened(lambda m: mirror_sides(*triple, m), caps.M)
            upto = min(w, caps.M)
            checks.append((f"mirror {triple}", lhs.eq_to_order(rhs, upto)[0] and w >= caps.M, upto, triple))
        return _from_flags(ident, caps, checks, (time.perf_counter() - start) * 1000)
    raise UsageError(f"unknown identity {ident}")


def _render_report(report: Report, config: RunConfig, out: TextIO) -> None:
    data = report.to_dict(timing=config.timing)
    if config.output == "json":
        out.write(json.dumps(data, sort_keys=False) + "\n")
        return
    caps = ", ".join(f"{k}={v}" for k, v in data["caps"].items())
    out.write(f"{data['identity']}: {data['status']} [{caps}]\n")
    if data["certified_tau_window"] is not None:
        out.write(f"  certified through τ^{data['certified_tau_window']}\n")
    if "witness" in data:
        out.write(f"  first divergent monomial: {data['witness'].get('monomial')}\n")
        out.write(f"  lhs: {data['witness'].get('lhs')}\n  rhs: {data['witness'].get('rhs')}\n")
    for note in data.get("notes", []):
        out.write(f"  note: {note}\n")
    if data["wall_ms"] is not None:
        out.write(f"  wall: {data['wall_ms']} ms\n")


# tables ----------------------------------------------------------------------


def table_rows(config: RunConfig) -> list[dict]:
    ident = config.identity
    if ident in ("no_classic", "conj_no"):
        return corollary_table(ident, config.s_deg)
    if ident in ("cor_main", "cor_main2"):
        lhs = corollary_lhs(ident, config.N, config.s_deg)
        rhs = corollary_rhs(ident, config.N, config.s_deg)
        keys = sorted(set(lhs.terms) | set(rhs.terms), key=lambda e: (sum(e), tuple(-x for x in e)))
        return [
            {
                "s_monomial": lhs.vars.format(e),
                "lhs_tpoly": lhs.coefficient(e).to_pairs(),
                "rhs_tpoly": rhs.coefficient(e).to_pairs(),
            }
            for e in keys
        ]
    lhs = sum_side(ident, config.N, config.D, config.M, False)
    rhs = product_side(ident, config.N, config.D, config.M, False)
    window = min(lhs.certified_window(), rhs.certified_window(), config.M)
    keys = sorted(set(lhs.terms) | set(rhs.terms), key=lambda e: (sum(e), tuple(-x for x in e)))
    return [
        {
            "monomial": lhs.vars.format(e),
            "lhs": serialize_coeff(lhs.coefficient(e), window),
            "rhs": serialize_coeff(rhs.coefficient(e), window),
        }
        for e in keys
    ]


def _tpoly_text(pairs: list) -> str:
    if not pairs:
        return "0"
    parts = []
    for exps, c in pairs:
        mono = "*".join(f"t{i + 1}^{k}" if k > 1 else f"t{i + 1}" for i, k in enumerate(exps) if k)
        parts.append(f"({c}){'*' + mono if mono else ''}")
    return " + ".join(parts)


def _render_table(rows: list[dict], config: RunConfig, out: TextIO) -> None:
    if config.output == "json":
        out.write(json.dumps(rows) + "\n")
        return
    for row in rows:
        if "s_power" in row:
            out.write(f"s^{row['s_power']}: lhs = {_tpoly_text(row['lhs_tpoly'])} ; rhs = {_tpoly_text(row['rhs_tpoly'])}\n")
        elif "s_monomial" in row:
            out.write(f"{row['s_monomial']}: lhs = {_tpoly_text(row['lhs_tpoly'])} ; rhs = {_tpoly_text(row['rhs_tpoly'])}\n")
        else:
            out.write(f"{row['monomial']}:\n  lhs = {row['lhs']}\n  rhs = {row['rhs']}\n")


# selftest and bench ------------------------------------------------------------


def seeded_ring_sample(seed: int, count: int = 20) -> bool:
    """Ring axioms on random Laurent series drawn from ``seed``."""
    rng = random.Random(seed)

    def draw() -> LaurentSeries:
        lo = rng.randint(-6, 6)
        coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(rng.randint(1, 8))]
        return LaurentSeries(lo, coeffs, 24, rng.choice([None, 25]))

    for _ in range(count):
        a, b, c = draw(), draw(), draw()
        checks = [((a * b) * c, a * (b * c)), (a * (b + c), a * b + a * c), (a * b, b * a)]
        for x, y in checks:
            upto = min(x.window, y.window)
            if upto >= min(v.lo for v in (a, b, c)) and not x.eq_to_order(y, upto)[0]:
                return False
    return True


def selftest(config: RunConfig, out: TextIO) -> int:
    results = acceptance.run_all(None if config.output == "json" else lambda line: out.write(line + "\n"))
    sample_ok = seeded_ring_sample(config.seed)
    if config.output == "json":
        rows = [
            {"criterion": r.number, "title": r.title, "status": "pass" if r.ok else "fail", "detail": r.detail}
            for r in results
        ]
        rows.append({"criterion": None, "title": f"seeded ring sample (seed {config.seed})", "status": "pass" if sample_ok else "fail", "detail": ""})
        out.write(json.dumps(rows) + "\n")
    else:
        out.write(f"[{'PASS' if sample_ok else 'FAIL'}] seeded ring-axiom sample (seed {config.seed})\n")
    return 0 if sample_ok and all(r.ok for r in results) else 1


def bench(config: RunConfig, out: TextIO) -> int:
    times, status = [], "exact-match"
    for _ in range(config.repeat):
        start = time.perf_counter()
        report = verify(config)
        times.append((time.perf_counter() - start) * 1000)
        status = report.status
    data = {
        "identity": config.identity,
        "caps": config.caps().to_dict(),
        "status": status,
        "repeat": config.repeat,
        "min_ms": round(min(times), 3) if config.timing else None,
        "median_ms": round(statistics.median(times), 3) if config.timing else None,
    }
    if config.output == "json":
        out.write(json.dumps(data) + "\n")
    else:
        out.write(f"{config.identity}: {status}, min {data['min_ms']} ms, median {data['median_ms']} ms over {config.repeat}\n")
    return 0 if status == "exact-match" else 1


def run(config: RunConfig, out: TextIO = sys.stdout) -> int:
    if config.command == "selftest":
        return selftest(config, out)
    if config.command == "bench":
        return bench(config, out)
    if config.command == "table":
        _render_table(table_rows(config), config, out)
        return 0
    report = verify(config)
    _render_report(report, config, out)
    return 0 if report.ok else 1


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        config = parse_config(argv)
    except SystemExit as exc:  # argparse already printed usage
        return 2 if exc.code else 0
    except UsageError as exc:
        build_parser().print_usage(sys.stderr)
        sys.stderr.write(f"novertex: error: {exc}\n")
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
