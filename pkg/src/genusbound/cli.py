"""Batch front end.

Exit codes: 0 ran and produced verdicts, 2 input error, 3 internal
invariant violation (a bug in this package, never caused by input).
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any, Sequence

from . import adjunction as adj
from .casefile import CaseError, CaseFile, SpinCEntry, case_to_dict, parse_case
from ._exact import gcd_all
from .errors import CorruptTraceError, HypothesisError, InputError, InvariantViolation, PreconditionError
from .oracle import exhaustive_l, random_symplectic_basis
from .reduction import (
    EmbeddingMap,
    complete_primitive,
    l_invariant,
    l_lower_bound_constructive,
    referee_bound,
    replay,
)
from .swtopology import (
    PD_SIGMA,
    BlowUpSpec,
    ManifoldData,
    SpinCData,
    SurfaceData,
    blow_up,
    d_invariant,
    sw_blowup_transfer,
)
from .symplattice import verify_basis

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3


def _cases(case: CaseFile):
    for entry in case.spinc:
        yield entry, adj.AdjunctionCase.build(case.manifold, case.surface, entry.spinc, entry.d_s, entry.insertion)


def run_query(case: CaseFile) -> dict:
    """Evaluate one parsed case and return its JSON-ready report."""
    report: dict[str, Any] = {"query": case.query, "input": case_to_dict(case)}
    q = case.query
    if q == "genus_bound":
        results = []
        for entry, c in _cases(case):
            r = adj.best_bound(c)
            bounds = [v.genus_lower_bound for v in r.verdicts if v.applicable]
            if r.best_bound != (max(bounds) if bounds else None):
                raise InvariantViolation("best_bound is not the maximum of applicable bounds")
            results.append({"spinc": entry.spinc.name, "d_s": c.d_s, "insertion_degree": c.d_b, **r.as_dict()})
        report["results"] = results
    elif q == "max_insertion_degree":
        results = []
        for entry, c in _cases(case):
            c.validate()
            results.append({"spinc": entry.spinc.name, **adj.max_insertion_degree(c).as_dict()})
        report["results"] = results
    elif q == "blowup":
        results = []
        for entry, c in _cases(case):
            c.validate()
            m2, s2, sp2, d2 = blow_up(c.manifold, c.surface, c.spinc, c.d_s, case.blowup)
            if c.spinc.sw_nonvanishing:
                sp2 = sw_blowup_transfer(c.spinc, case.blowup)
            # r = 0 is the identity transform and echoes the entry verbatim
            same = case.blowup.r == 0
            transformed = SpinCEntry(sp2, entry.d_s if same else d2, entry.insertion if same else None)
            out = CaseFile("blowup", m2, s2, (transformed,))
            results.append({"spinc": entry.spinc.name, "d_s": d2, "transformed": case_to_dict(out)})
        report["results"] = results
    elif q == "l_invariant":
        e = case.surface.embedding
        l_val = l_invariant(e)
        lc = l_lower_bound_constructive(e)
        if lc.value > l_val:
            raise InvariantViolation(f"constructive l = {lc.value} exceeds l = {l_val}")
        if not verify_basis(lc.basis):
            raise InvariantViolation("witness basis is not symplectic")
        report["results"] = {
            "l_invariant": l_val,
            "l_constructive": lc.value,
            "referee_bound": referee_bound(e.genus, e.ambient_b1),
            "witness_basis": [list(v) for v in lc.basis.vectors],
        }
    elif q == "complete_primitive":
        trace = complete_primitive(case.vector)
        if not verify_basis(trace.final_basis):
            raise InvariantViolation("completed basis is not symplectic")
        replay(trace)
        report["results"] = {**trace.summary(), "final_basis": [list(v) for v in trace.final_basis.vectors]}
    return report


def format_table(report: dict) -> str:
    q = report["query"]
    lines = [f"query: {q}"]
    res = report["results"]
    if q == "genus_bound":
        for r in res:
            lines.append(f"  spinc {r['spinc']}: d_s={r['d_s']} d(b)={r['insertion_degree']} l={r['l_sigma']} ({r['l_source']})")
            lines.append(f"    {'theorem':<16} {'applicable':<10} {'bound':>5}  failed")
            for v in r["verdicts"]:
                bound = "" if v["genus_lower_bound"] is None else v["genus_lower_bound"]
                lines.append(
                    f"    {v['theorem_id']:<16} {str(v['applicable']):<10} {bound!s:>5}  {', '.join(v['failed_hypotheses'])}"
                )
            lines.append(f"    best bound: {r['best_bound']}")
    elif q == "max_insertion_degree":
        for r in res:
            lines.append(
                f"  spinc {r['spinc']}: applicable={r['applicable']} cap={r['degree_cap']} "
                f"genus>={r['genus_lower_bound']} {', '.join(r['failed_hypotheses'])}"
            )
    elif q == "blowup":
        for r in res:
            lines.append(f"  spinc {r['spinc']}: d_s -> {r['d_s']}  {json.dumps(r['transformed'])}")
    elif q == "l_invariant":
        lines.append(f"  l = {res['l_invariant']}  constructive = {res['l_constructive']}  g - b1 = {res['referee_bound']}")
    else:
        lines.append(f"  slot {res['slot']}, {res['step_count']} steps")
        for s in res["steps"]:
            lines.append(f"    {s['kind']} {tuple(s['args'])}")
    return "\n".join(lines)


def self_check(seed: int, out=None) -> bool:
    """Quick randomized run of the core invariants."""
    out = out or sys.stdout
    rng = random.Random(seed)
    ok = True

    def report(name: str, passed: bool) -> None:
        nonlocal ok
        ok = ok and passed
        print(f"[{'PASS' if passed else 'FAIL'}] {name}", file=out)

    report("random bases are symplectic", all(
        verify_basis(random_symplectic_basis(rng.randint(1, 5), 20, rng.randrange(10**9))) for _ in range(200)
    ))
    good = True
    for _ in range(200):
        g = rng.randint(1, 6)
        v = [rng.randint(-50, 50) for _ in range(g)]
        d = gcd_all(v)
        if d == 0:
            continue
        v = [x // d for x in v]
        t = complete_primitive(v)
        good = good and replay(t, check=False) == t.final_basis
    report("descent traces replay", good)
    agree = True
    for _ in range(20):
        g = rng.randint(1, 2)
        b1 = rng.randint(0, 3)
        e = EmbeddingMap(g, b1, tuple(tuple(rng.choice((0, 0, 1, -1)) for _ in range(2 * g)) for _ in range(b1)))
        l_val = l_invariant(e)
        ex = exhaustive_l(e, 6 if g == 1 else 4)
        agree = agree and l_val == l_lower_bound_constructive(e).value == ex.value and ex.stabilized
    report("l agrees three ways (g <= 2)", agree)
    blown = True
    for _ in range(200):
        m = ManifoldData(rng.randint(0, 4), rng.randint(1, 4), rng.randint(-20, 20), rng.randint(-20, 20))
        c1 = 2 * m.chi + 3 * m.tau + 4 * rng.randint(-5, 5)
        e = rng.randint(-10, 10)
        s = SurfaceData(rng.randint(1, 6), rng.randint(0, 6) * 2 + (e % 2))
        spc = SpinCData("s", e, True, PD_SIGMA, c1)
        d = d_invariant(c1, m.chi, m.tau)
        r1, r2 = rng.randint(0, 4), rng.randint(0, 4)
        once = blow_up(m, s, spc, d, BlowUpSpec(r1 + r2))
        twice = blow_up(*blow_up(m, s, spc, d, BlowUpSpec(r1)), BlowUpSpec(r2))
        m2, _, sp2, d2 = once
        blown = blown and once == twice and d_invariant(sp2.c1_square, m2.chi, m2.tau) == d2 == d - 2 * (r1 + r2)
    report("blow-up composition and d consistency", blown)
    return ok


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="genusbound", description="Minimal-genus bounds from adjunction inequalities.")
    p.add_argument("--input", "-i", help="case file (JSON object or list); default standard input")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--lenient", action="store_true", help="ignore unknown fields instead of rejecting them")
    p.add_argument("--seed", type=int, default=0, help="seed for --self-check")
    p.add_argument("--self-check", action="store_true", help="run randomized invariant checks and exit")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.self_check:
        try:
            return EXIT_OK if self_check(args.seed) else EXIT_INTERNAL
        except InvariantViolation as exc:
            print(f"internal invariant violated: {exc}", file=sys.stderr)
            return EXIT_INTERNAL
    try:
        if args.input:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
    except OSError as exc:
        print(json.dumps({"errors": [{"path": "", "rule": "io", "message": str(exc)}]}), file=sys.stderr)
        return EXIT_INPUT
    try:
        parsed = parse_case(text, lenient=args.lenient)
        batch = isinstance(parsed, list)
        reports = [run_query(c) for c in (parsed if batch else [parsed])]
    except CaseError as exc:
        print(json.dumps({"errors": exc.errors}, indent=2), file=sys.stderr)
        return EXIT_INPUT
    except (InvariantViolation, AssertionError, CorruptTraceError) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (InputError, PreconditionError, HypothesisError) as exc:
        rule = getattr(exc, "rule", {PreconditionError: "precondition", HypothesisError: "hypothesis"}.get(type(exc), "input"))
        print(json.dumps({"errors": [{"path": getattr(exc, "path", ""), "rule": rule, "message": str(exc)}]}), file=sys.stderr)
        return EXIT_INPUT
    if args.format == "json":
        print(json.dumps(reports if batch else reports[0], indent=2))
    else:
        print("\n\n".join(format_table(r) for r in reports))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
