"""Command line front end.

    ydnichols <command> --input FILE --cutoff D [--pivot i] [--max-vertices k]
              [--jobs n] [--cache-dir DIR] [--emit json|text]

Commands: dims, pairing-check, bosonization-check, omega-check, reflect,
verify-ntn, weyl.  Pivots are 1-based.  The result document is written to
stdout; it contains no timing so that repeated runs are byte-identical.
Timings go to stderr with --timing.

Exit codes: 0 pass, 1 verification failure, 2 input error, 3 cutoff too small.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from .bosonization import Bosonization, CoinvariantAlgebra, verify_hopf
from .cache import TruncationCache, default_cache_dir
from .errors import CutoffExceeded, InputError, NotDefinedAtCutoff, YDNicholsError
from .inputs import load_input
from .nichols import NicholsTruncation
from .omega import CoinvariantModule, coinvariant_omega_suite
from .pairing import canonical_pairing, inverse_pairing, verify_pairing
from .reflection import (
    reflect,
    verify_component_filtrations,
    verify_groupoid,
    verify_reflection_theorems,
    weyl_groupoid,
)

COMMANDS = ("dims", "pairing-check", "bosonization-check", "omega-check", "reflect", "verify-ntn", "weyl")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CUTOFF = 0, 1, 2, 3


class Context:
    """Input, cutoff and the (possibly cached) truncation of B(M_1 + ... + M_t)."""

    def __init__(self, spec, cutoff, pivot, cache=None, jobs=1, max_vertices=64):
        self.spec = spec
        self.modules = spec.modules
        self.cutoff = cutoff
        self.pivot = pivot
        self.cache = cache
        self.jobs = jobs
        self.max_vertices = max_vertices
        self.input_hash = spec.content_hash()
        self._R = None

    def nichols(self):
        if self._R is None:
            total, tags = self.modules.direct_sum()
            if self.cache is not None:
                self._R = self.cache.nichols(self.input_hash, total, self.cutoff, tags)
            else:
                self._R = NicholsTruncation(total, self.cutoff, tags=tags)
        return self._R


def _multidegree_table(R):
    table = R.multidegree_dims()
    return [[list(md), table[md]] for md in sorted(table, key=lambda md: (sum(md), md))]


def cmd_dims(ctx):
    R = ctx.nichols()
    return {"dims": R.dims(), "multidegree_dims": _multidegree_table(R)}, []


def cmd_pairing_check(ctx):
    R = ctx.nichols()
    total, tags = ctx.modules.direct_sum()
    left = NicholsTruncation(total.dual(), ctx.cutoff, tags=tags)
    P = canonical_pairing(left, R)
    reps = [verify_pairing(P), verify_pairing(inverse_pairing(P))]
    reps[1].title = "dual_pair (inverse pairing)"
    return {"dims": R.dims(), "pairing_ranks": [P.grams[n].rank() for n in range(P.cutoff + 1)]}, reps


def cmd_bosonization_check(ctx):
    R = ctx.nichols()
    return {"dims": R.dims()}, [verify_hopf(Bosonization(R))]


def cmd_omega_check(ctx):
    i = ctx.pivot
    M = ctx.modules
    R = ctx.nichols()
    small = NicholsTruncation(M[i], ctx.cutoff)
    K = CoinvariantAlgebra(Bosonization(R), i, small)
    KM = CoinvariantModule(K)
    P = canonical_pairing(NicholsTruncation(M[i].dual(), ctx.cutoff), small)
    rep = coinvariant_omega_suite(KM, P, Bosonization(small))
    return {"pivot": i + 1, "coinvariant_dims": list(K.dims)}, [rep]


def cmd_reflect(ctx):
    datum = reflect(ctx.modules, ctx.pivot, ctx.cutoff, ctx.nichols())
    return datum.summary(), []


def cmd_verify_ntn(ctx):
    R = ctx.nichols()
    reps = [
        verify_reflection_theorems(ctx.modules, ctx.pivot, ctx.cutoff, R),
        verify_component_filtrations(ctx.modules, ctx.pivot, ctx.cutoff, R),
    ]
    return {"pivot": ctx.pivot + 1, "cartan_row": reps[0].data.get("cartan_row")}, reps


def cmd_weyl(ctx):
    Gr = weyl_groupoid(ctx.modules, ctx.cutoff, max_vertices=ctx.max_vertices, jobs=ctx.jobs)
    cartan = {
        str(v): {str(p + 1): row for p, row in sorted(rows.items())}
        for v, rows in sorted(Gr.cartan_matrices().items())
    }
    out = Gr.to_json()
    out["adjacency"] = Gr.adjacency()
    out["cartan_rows"] = cartan
    return out, [verify_groupoid(Gr)]


HANDLERS = {
    "dims": cmd_dims,
    "pairing-check": cmd_pairing_check,
    "bosonization-check": cmd_bosonization_check,
    "omega-check": cmd_omega_check,
    "reflect": cmd_reflect,
    "verify-ntn": cmd_verify_ntn,
    "weyl": cmd_weyl,
}


def run(command, ctx):
    """The result document for one command, as a JSON-ready dict."""
    results, reports = HANDLERS[command](ctx)
    doc = {
        "command": command,
        "input_hash": ctx.input_hash,
        "cutoff": ctx.cutoff,
        "results": results,
        "reports": [r.to_json() for r in reports],
        "passed": all(r.passed for r in reports),
    }
    if command in ("omega-check", "reflect", "verify-ntn"):
        doc["pivot"] = ctx.pivot + 1
    return doc


def dumps(doc):
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=True) + "\n"


def render_text(doc):
    lines = [f"command: {doc['command']}", f"input: {doc['input_hash']}", f"cutoff: {doc['cutoff']}"]
    res = doc["results"]
    if "dims" in res:
        lines.append("degree  " + " ".join(f"{n:>4}" for n in range(len(res["dims"]))))
        lines.append("dim     " + " ".join(f"{d:>4}" for d in res["dims"]))
    if "multidegree_dims" in res:
        lines.append("multidegree dimensions:")
        lines.extend(f"  {tuple(md)}: {d}" for md, d in res["multidegree_dims"])
    if "cartan_row" in res:
        lines.append(f"cartan row (pivot {res.get('pivot')}): {res['cartan_row']}")
    if "adjacency" in res:
        lines.append(f"vertices: {len(res['vertices'])}  complete: {res['complete']}")
        lines.append("edges (vertex pivot target cartan_row):")
        lines.extend("  " + line for line in res["adjacency"])
    for r in doc.get("reports", []):
        lines.append(f"{r['title']}: {'PASS' if r['passed'] else 'FAIL'}")
        for c in r["checks"]:
            mark = "ok  " if c["passed"] else "FAIL"
            line = f"  [{mark}] {c['name']} ({c['checked']} cases)"
            if "counterexample" in c:
                line += f" -- first failure: {c['counterexample']}"
            lines.append(line)
    if "error" in doc:
        lines.append(f"error: {doc['error']}")
    return "\n".join(lines) + "\n"


def build_parser():
    p = argparse.ArgumentParser(prog="ydnichols", description="Exact Nichols algebra computations.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", required=True, help="TOML input document")
    p.add_argument("--cutoff", type=int, help="top degree D (overrides the input document)")
    p.add_argument("--pivot", type=int, help="1-based pivot for omega-check, reflect, verify-ntn")
    p.add_argument("--max-vertices", type=int, default=64)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for weyl")
    p.add_argument("--cache-dir", default=None, help="truncation cache (default $YDNICHOLS_CACHE_DIR)")
    p.add_argument("--emit", choices=("json", "text"), default="json")
    p.add_argument("--timing", action="store_true", help="print elapsed time to stderr")
    return p


def _error_doc(command, message, kind, cutoff=None, degree=None):
    doc = {"command": command, "error": message, "error_kind": kind, "passed": False, "results": {}, "reports": []}
    if cutoff is not None:
        doc["cutoff"] = cutoff
    if degree is not None:
        doc["degree_reached"] = degree
    return doc


def _emit(doc, fmt, out):
    if fmt == "text" and "input_hash" in doc:
        out.write(render_text(doc))
    elif fmt == "text":
        out.write(f"error: {doc['error']}\n")
    else:
        out.write(dumps(doc))


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    start = time.perf_counter()
    try:
        spec = load_input(args.input)
        cutoff = args.cutoff if args.cutoff is not None else spec.cutoff
        if cutoff is None:
            raise InputError("no cutoff given (use --cutoff or a cutoff key)", "cutoff")
        if cutoff < 1:
            raise InputError("cutoff must be at least 1", "cutoff")
        if args.max_vertices < 1 or args.jobs < 1:
            raise InputError("--max-vertices and --jobs must be positive", "arguments")
        pivot = args.pivot if args.pivot is not None else spec.pivot
        if pivot is None:
            pivot = 1
        if not 1 <= pivot <= len(spec.modules):
            raise InputError(f"pivot must lie between 1 and {len(spec.modules)}", "pivot")
        cache_dir = args.cache_dir or default_cache_dir()
        cache = TruncationCache(cache_dir) if cache_dir else None
        ctx = Context(spec, cutoff, pivot - 1, cache, args.jobs, args.max_vertices)
    except InputError as exc:
        _emit(_error_doc(args.command, str(exc), "input"), args.emit, out)
        return EXIT_INPUT

    try:
        doc = run(args.command, ctx)
        code = EXIT_OK if doc["passed"] else EXIT_FAIL
    except NotDefinedAtCutoff as exc:
        doc = _error_doc(args.command, str(exc), "cutoff", cutoff, exc.degree_reached)
        doc["input_hash"] = ctx.input_hash
        code = EXIT_CUTOFF
    except CutoffExceeded as exc:
        doc = _error_doc(args.command, str(exc), "cutoff", cutoff)
        doc["input_hash"] = ctx.input_hash
        code = EXIT_CUTOFF
    except YDNicholsError as exc:
        doc = _error_doc(args.command, f"{type(exc).__name__}: {exc}", "verification", cutoff)
        doc["input_hash"] = ctx.input_hash
        code = EXIT_FAIL
    _emit(doc, args.emit, out)
    if args.timing:
        print(f"{args.command}: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
