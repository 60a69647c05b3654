"""Command-line front end.

Subcommands::

    skwlab build        -- construct an algebra and print its summary
    skwlab axioms       -- run the defining-axiom checks over a grid
    skwlab bvals        -- rank/isotropy data of linear functionals
    skwlab verma        -- build one induced module, run optional checks
    skwlab irreducible  -- decide simplicity from a cached action-matrix file
    skwlab verify       -- run an experiment suite (AC1..AC11) end to end
    skwlab cache        -- ls / rm / verify action-matrix cache files

Every subcommand prints one JSON document to stdout (and, with ``--output``,
writes the same document atomically to a file).  Exit codes: 0 all checks
pass, 1 a check failed, 2 usage or configuration error, 3 environment error
(unreadable or corrupt files).

A configuration file (``--config PATH``, plain ``key = value`` lines) may set
default ``p``, ``k``, and ``seed``; explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

import numpy as np

from . import envmod as em
from . import experiments as ex
from . import field as fd
from . import meataxe as mx
from . import pchar as pc
from . import reports as rp
from . import superalg as sa
from . import verma as vm

__all__ = ["main", "build_parser", "EXIT_PASS", "EXIT_FAIL", "EXIT_USAGE", "EXIT_ENV"]

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_ENV = 3

_CONFIG_KEYS = ("p", "k", "seed")


class UsageError(Exception):
    """Bad flags, bad config, unsupported parameter grid."""


class EnvError(Exception):
    """Missing, unreadable, or corrupt files."""


# ---------------------------------------------------------------------------
# configuration file and shared parameter resolution


def _load_config(path: str) -> dict:
    """Parse ``key = value`` lines; only p, k, seed are accepted."""
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise EnvError(f"config file: {exc}") from exc
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if key not in _CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r} (allowed: {', '.join(_CONFIG_KEYS)})")
        try:
            out[key] = int(val)
        except ValueError as exc:
            raise UsageError(f"{path}:{lineno}: {key} must be an integer, got {val!r}") from exc
    return out


def _resolve_params(args) -> None:
    """Fill p / k / seed from the config file, then built-in defaults."""
    config = _load_config(args.config) if getattr(args, "config", None) else {}
    for key, default in (("p", 3), ("k", 3), ("seed", 1)):
        if hasattr(args, key) and getattr(args, key) is None:
            setattr(args, key, config.get(key, default))


def _get_field(p: int, k: int) -> fd.Field:
    try:
        return fd.get_field(p, k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _get_algebra(family: str, n: int, f: fd.Field) -> sa.LieSuperalgebra:
    try:
        return sa.build_algebra(family, n, f)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------------------
# chi / lambda resolution for the verma subcommand


def _read_json_file(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise EnvError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: not valid JSON ({exc})") from exc


def _chi_from_file(g: sa.LieSuperalgebra, path: str) -> pc.PChar:
    doc = _read_json_file(path)
    if "values" in doc:
        vals = [int(v) for v in doc["values"]]
        if len(vals) != g.dim_even:
            raise UsageError(
                f"{path}: 'values' must list {g.dim_even} codes (one per even basis vector)"
            )
        return pc.PChar(g, tuple(vals))
    if "by_label" in doc:
        known = {g.basis[i].label for i in g.even_indices}
        bad = set(doc["by_label"]) - known
        if bad:
            raise UsageError(f"{path}: unknown even basis labels {sorted(bad)}")
        by = {lab: int(v) for lab, v in doc["by_label"].items()}
        return pc.PChar(
            g, tuple(by.get(g.basis[i].label, 0) for i in g.even_indices)
        )
    raise UsageError(f"{path}: expected a 'values' list or a 'by_label' object")


def _resolve_chi(g: sa.LieSuperalgebra, spec: str, seed: int):
    """Return (chi, paired_lambda_or_None) for one of the chi modes."""
    try:
        if spec == "regss":
            tup = pc.find_regular_weights(g)
            return pc.gen_regular_semisimple(g, tup)
        if spec == "strong-regss":
            tup = pc.find_regular_weights(g, strong=True, require_max_isotropy=True)
            return pc.gen_regular_semisimple(g, tup, strong=True)
        if spec == "regnilp":
            return pc.gen_regular_nilpotent(g), None
        if spec == "zero":
            return pc.PChar(g, (0,) * g.dim_even), None
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if spec.startswith("file:"):
        return _chi_from_file(g, spec[len("file:") :]), None
    raise UsageError(
        f"bad --chi {spec!r}; expected regss, strong-regss, regnilp, zero, or file:PATH"
    )


def _resolve_lambda(g: sa.LieSuperalgebra, chi: pc.PChar, spec: str, paired):
    if spec == "auto":
        if paired is not None:
            return paired
        lams = pc.lambda_set(g, chi)
        if not lams:
            raise UsageError("no weight solves the Artin-Schreier identity here; raise k")
        return lams[0]
    if spec.startswith("file:"):
        doc = _read_json_file(spec[len("file:") :])
        vals = [int(v) for v in doc.get("values", ())]
        if len(vals) != len(g.cartan_even):
            raise UsageError(
                f"lambda file must list {len(g.cartan_even)} Cartan values"
            )
        return pc.WeightVector(g, tuple(vals))
    try:
        index = int(spec)
    except ValueError as exc:
        raise UsageError(
            f"bad --lambda {spec!r}; expected auto, an integer index, or file:PATH"
        ) from exc
    lams = pc.lambda_set(g, chi)
    if not 0 <= index < len(lams):
        raise UsageError(f"--lambda index {index} out of range (0..{len(lams) - 1})")
    return lams[index]


def _build_module(g: sa.LieSuperalgebra, chi: pc.PChar, lam) -> em.InducedModule:
    try:
        if g.family in ("ptilde", "pder"):
            return vm.ptilde_baby_verma(g, chi, lam)
        return vm.queer_baby_verma(g, chi, lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------------------
# subcommand handlers; each returns (exit_code, report_dict)


def cmd_build(args):
    f = _get_field(args.p, args.k)
    g = _get_algebra(args.family, args.n, f)
    basis = []
    for b in g.basis:
        root = g.roots.get(b.index)
        basis.append(
            {
                "label": b.label,
                "parity": int(b.parity),
                "z_degree": None if b.z_degree is None else int(b.z_degree),
                "root": None if root is None else [int(c) for c in root],
            }
        )
    results = {
        "pass": True,
        "family": g.family,
        "display_name": g.display_name,
        "n": int(g.n),
        "p": int(f.p),
        "k": int(f.k),
        "superdimension": [int(g.dim_even), int(g.dim_odd)],
        "basis": basis,
    }
    return EXIT_PASS, rp.new_report("build", results, field=f, algebra=g)


def cmd_axioms(args):
    families = list(sa.FAMILIES) if args.family == "all" else [args.family]
    sizes = [args.n] if args.n else [2, 3, 4]
    primes = [args.p] if args.p else [3, 5]
    t0 = time.time()
    entries = []
    ok = True
    for family in families:
        for n in sizes:
            for p in primes:
                f = _get_field(p, 1)
                g = _get_algebra(family, n, f)
                report = sa.verify_algebra(g)
                good = all(c["pass"] for c in report["checks"].values())
                ok = ok and good
                entries.append(
                    {
                        "family": family,
                        "n": n,
                        "p": p,
                        "pass": good,
                        "failed_checks": sorted(
                            name for name, c in report["checks"].items() if not c["pass"]
                        ),
                    }
                )
    results = {"pass": ok, "algebras": entries}
    report = rp.new_report(
        "axioms", results, seed=args.seed, timings_s={"total": time.time() - t0}
    )
    return (EXIT_PASS if ok else EXIT_FAIL), report


def _theta_record(g: sa.LieSuperalgebra, theta: pc.PChar) -> dict:
    r = pc.b_values(g, theta)
    return {
        "nonzero": {str(k): int(v) for k, v in theta.described().items()},
        "b0": int(r.b0),
        "b1": int(r.b1),
        "centralizer_even": int(r.centralizer_even),
        "centralizer_odd": int(r.centralizer_odd),
        "skw_term": rp.big(r.skw_term),
    }


def cmd_bvals(args):
    f = _get_field(args.p, args.k)
    g = _get_algebra(args.family, args.n, f)
    t0 = time.time()
    if args.mode == "exhaustive":
        try:
            thetas = list(pc.enumerate_prime_rational_duals(g))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    elif args.mode == "sample":
        thetas = list(pc.sample_duals(g, count=args.count, seed=args.seed))
    else:  # named representatives
        thetas = []
        for name, make in (
            ("regss", lambda: pc.gen_regular_semisimple(g, pc.find_regular_weights(g))[0]),
            (
                "strong-regss",
                lambda: pc.gen_regular_semisimple(
                    g, pc.find_regular_weights(g, strong=True, require_max_isotropy=True), strong=True
                )[0],
            ),
            ("regnilp", lambda: pc.gen_regular_nilpotent(g)),
            ("zero", lambda: pc.PChar(g, (0,) * g.dim_even)),
        ):
            try:
                thetas.append((name, make()))
            except ValueError:
                continue
    if args.mode == "named":
        records = [{"name": name, **_theta_record(g, th)} for name, th in thetas]
        max_term = max((int(r["skw_term"]) for r in records), default=0)
    else:
        records = [_theta_record(g, th) for th in thetas]
        max_term = max((int(r["skw_term"]) for r in records), default=0)
    results = {
        "pass": True,
        "mode": args.mode,
        "num_theta": len(records),
        "max_skw_term": rp.big(max_term),
        "min_odd_centralizer": min((int(r["centralizer_odd"]) for r in records), default=0),
        "records": records if len(records) <= args.limit else records[: args.limit],
        "records_truncated": len(records) > args.limit,
    }
    report = rp.new_report(
        "bvals",
        results,
        field=f,
        algebra=g,
        seed=args.seed,
        timings_s={"total": time.time() - t0},
    )
    return EXIT_PASS, report


def _check_rep_axioms(M: em.InducedModule, seed: int) -> dict:
    mode = "full" if M.dim <= 60 else "sampled"
    out = em.verify_representation(M, mode=mode, seed=seed)
    return {"pass": bool(out["all_pass"]), "mode": out["mode"], "checks": {
        name: bool(c["pass"]) for name, c in out["checks"].items()
    }}


def _check_simplicity(M: em.InducedModule, rep, seed: int) -> dict:
    ungraded = mx.is_irreducible(rep, seed=seed)
    graded = mx.is_graded_simple(rep, seed=seed)
    return {
        "pass": bool(mx.replay(rep, ungraded) and mx.replay(rep, graded)),
        "ungraded_verdict": ungraded.verdict,
        "graded_verdict": graded.verdict,
        "strategy": ungraded.data.get("strategy"),
    }


def _check_omega(M: em.InducedModule, g, lam, f) -> dict:
    if g.family not in ("ptilde", "pder"):
        raise UsageError("--check omega applies to the periplectic families")
    s = vm.xy_scalar(M)
    om = vm.omega(lam, g.n, f)
    good = (s == 0) if om == 0 else (s in (om, f.neg(om)))
    return {"pass": bool(good), "xy_scalar": int(s), "omega": int(om)}


def _check_phi(M: em.InducedModule, g, rep, lam, f, seed: int) -> dict:
    if g.family not in ("q", "sq"):
        raise UsageError("--check phi applies to the queer families")
    val = vm.phi(lam, g.n, f)
    out = {"phi": int(val), "phi_nonzero": bool(val != 0)}
    if g.family == "q" and g.n == 2:
        cert = mx.is_graded_simple(rep, seed=seed)
        out["graded_verdict"] = cert.verdict
        out["pass"] = bool((cert.verdict != "reducible") == (val != 0))
    else:
        out["pass"] = True
    return out


def cmd_verma(args):
    f = _get_field(args.p, args.k)
    g = _get_algebra(args.family, args.n, f)
    chi, paired = _resolve_chi(g, args.chi, args.seed)
    lam = _resolve_lambda(g, chi, args.lam, paired)
    t0 = time.time()
    M = _build_module(g, chi, lam)
    rep = mx.rep_of_module(M)
    checks = {}
    for name in args.check or ():
        if name == "rep-axioms":
            checks[name] = _check_rep_axioms(M, args.seed)
        elif name == "simplicity":
            checks[name] = _check_simplicity(M, rep, args.seed)
        elif name == "omega":
            checks[name] = _check_omega(M, g, lam, f)
        elif name == "phi":
            checks[name] = _check_phi(M, g, rep, lam, f, args.seed)
    emitted = None
    if args.emit_matrices:
        meta = {
            "family": g.family,
            "n": int(g.n),
            "p": int(f.p),
            "k": int(f.k),
            "chi_values": [int(v) for v in chi.values],
            "lambda_values": [int(v) for v in lam.values],
            "dim": int(M.dim),
            "labels": list(rep.labels),
            "gen_parities": [int(x) for x in rep.gen_parities],
            "parity": [int(x) for x in rep.parity],
            "provenance": {k: str(v) for k, v in M.provenance.items()},
        }
        emitted = em.save_action_cache(args.emit_matrices, f, rep.generators, meta=meta)
    ok = all(c["pass"] for c in checks.values())
    results = {
        "pass": bool(ok),
        "family": g.family,
        "dim": int(M.dim),
        "lambda": [int(v) for v in lam.values],
        "checks": checks,
        "cache_file": emitted,
    }
    report = rp.new_report(
        "verma",
        results,
        field=f,
        algebra=g,
        chi=chi,
        seed=args.seed,
        timings_s={"total": time.time() - t0},
    )
    return (EXIT_PASS if ok else EXIT_FAIL), report


def cmd_irreducible(args):
    try:
        desc, mats, meta = em.load_action_cache(args.cache_file)
    except OSError as exc:
        raise EnvError(f"{args.cache_file}: {exc}") from exc
    except ValueError as exc:
        raise EnvError(str(exc)) from exc
    f = fd.field_for(desc)
    D = mats[0].shape[0] if mats else 0
    meta = meta or {}
    labels = meta.get("labels") or [f"g{i}" for i in range(len(mats))]
    gen_parities = meta.get("gen_parities") or [0] * len(mats)
    parity = meta.get("parity")
    if parity is None:
        if args.graded:
            raise UsageError(
                "--graded needs parity data; emit the cache with the verma subcommand"
            )
        parity = [0] * D
    rep = mx.GradedRep(
        field=f,
        dim=D,
        generators=[np.ascontiguousarray(m, dtype=np.uint8) for m in mats],
        labels=list(labels),
        gen_parities=[int(x) for x in gen_parities],
        parity=np.array(parity, dtype=np.uint8),
        spin_set=list(range(len(mats))),
        provenance={"cache_file": args.cache_file},
    )
    t0 = time.time()
    cert = (
        mx.is_graded_simple(rep, seed=args.seed)
        if args.graded
        else mx.is_irreducible(rep, seed=args.seed)
    )
    replay_ok = mx.replay(rep, cert)
    results = {
        "pass": bool(replay_ok),
        "cache_file": args.cache_file,
        "certificate": cert.summary(),
        "replay_ok": bool(replay_ok),
    }
    report = rp.new_report(
        "irreducible",
        results,
        field=f,
        seed=args.seed,
        timings_s={"decide": time.time() - t0},
    )
    return (EXIT_PASS if replay_ok else EXIT_FAIL), report


def cmd_verify(args):
    if args.suite == "all":
        ctx = ex.RunContext(seed=args.seed)
        suite_results = {}
        ok = True
        t0 = time.time()
        for suite in ex.SUITE_ORDER:
            output = (
                os.path.join(args.output_dir, f"{suite}.json") if args.output_dir else None
            )
            req = ex.SuiteRequest(suite=suite, seed=args.seed, output=output)
            report = ex.run_request(req, ctx)
            good = bool(report["results"]["pass"])
            ok = ok and good
            suite_results[suite] = {"pass": good, "experiment": report["experiment"]}
        results = {"pass": ok, "suites": suite_results}
        report = rp.new_report(
            "verify-all", results, seed=args.seed, timings_s={"total": time.time() - t0}
        )
        return (EXIT_PASS if ok else EXIT_FAIL), report
    req = ex.SuiteRequest(
        suite=args.suite,
        family=args.family,
        n=args.n or None,
        p=args.p,
        k=args.k,
        mode=args.mode,
        seed=args.seed,
        output=args.output,
    )
    try:
        report = ex.run_request(req)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ok = bool(report["results"]["pass"])
    return (EXIT_PASS if ok else EXIT_FAIL), report


def cmd_cache(args):
    directory = em.cache_dir(args.cache_dir)
    if args.cache_op == "ls":
        files = em.list_cache(directory)
        entries = [
            {"path": p, "bytes": os.path.getsize(p)} for p in files
        ]
        return EXIT_PASS, {"directory": directory, "files": entries}
    if args.cache_op == "rm":
        removed = []
        for path in args.paths:
            target = path if os.path.sep in path else os.path.join(directory, path)
            try:
                os.remove(target)
            except OSError as exc:
                raise EnvError(f"{target}: {exc}") from exc
            for side in (target + ".meta.json",):
                if os.path.exists(side):
                    os.remove(side)
            removed.append(target)
        return EXIT_PASS, {"removed": removed}
    # verify
    paths = args.paths or em.list_cache(directory)
    entries = [em.verify_cache_file(p) for p in paths]
    ok = all(e["ok"] for e in entries)
    return (EXIT_PASS if ok else EXIT_FAIL), {"pass": ok, "files": entries}


# ---------------------------------------------------------------------------
# parser


def _add_common(sub, *, family=True, n=True):
    if family:
        sub.add_argument("--family", choices=sa.FAMILIES, required=True,
                         help="algebra family (periplectic: ptilde/pder, queer: q/sq)")
    if n:
        sub.add_argument("--n", type=int, required=True, help="matrix size parameter")
    sub.add_argument("--p", type=int, default=None, help="field characteristic (default 3)")
    sub.add_argument("--k", type=int, default=None, help="field extension degree (default 3)")
    sub.add_argument("--seed", type=int, default=None, help="rng seed (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skwlab",
        description="Exact-arithmetic laboratory for the strange modular Lie superalgebras",
    )
    parser.add_argument("--config", default=None, help="key = value file with default p/k/seed")
    parser.add_argument("--output", default=None, help="also write the JSON document here")
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("build", help="construct an algebra and print its summary")
    _add_common(s)
    s.set_defaults(handler=cmd_build)

    s = subs.add_parser("axioms", help="run the defining-axiom checks over a grid")
    s.add_argument("--family", choices=sa.FAMILIES + ("all",), default="all")
    s.add_argument("--n", type=int, default=0, help="one size (default: 2,3,4)")
    s.add_argument("--p", type=int, default=0, help="one characteristic (default: 3 and 5)")
    s.add_argument("--seed", type=int, default=None)
    s.set_defaults(handler=cmd_axioms)

    s = subs.add_parser("bvals", help="rank/isotropy data of linear functionals")
    _add_common(s)
    s.add_argument("--mode", choices=("exhaustive", "sample", "named"), default="named")
    s.add_argument("--count", type=int, default=100, help="sample mode: how many functionals")
    s.add_argument("--limit", type=int, default=100, help="max per-functional records to print")
    s.set_defaults(handler=cmd_bvals)

    s = subs.add_parser("verma", help="build one induced module, run optional checks")
    _add_common(s)
    s.add_argument("--chi", default="regss",
                   help="regss | strong-regss | regnilp | zero | file:PATH")
    s.add_argument("--lambda", dest="lam", default="auto",
                   help="auto | integer index | file:PATH")
    s.add_argument("--emit-matrices", default=None, metavar="PATH",
                   help="write the action matrices as a cache file")
    s.add_argument("--check", action="append",
                   choices=("rep-axioms", "simplicity", "omega", "phi"),
                   help="repeatable; checks to run on the module")
    s.set_defaults(handler=cmd_verma)

    s = subs.add_parser("irreducible", help="decide simplicity from a cached action-matrix file")
    s.add_argument("cache_file", help="action-matrix cache file path")
    s.add_argument("--graded", action="store_true", help="graded verdict (needs parity metadata)")
    s.add_argument("--seed", type=int, default=None)
    s.set_defaults(handler=cmd_irreducible)

    s = subs.add_parser("verify", help="run an experiment suite end to end")
    s.add_argument("--suite", required=True,
                   choices=tuple(ex.SUITES) + ("all",), help="suite id or 'all'")
    s.add_argument("--family", choices=sa.FAMILIES, default=None)
    s.add_argument("--n", type=int, default=0)
    s.add_argument("--p", type=int, default=None)
    s.add_argument("--k", type=int, default=None)
    s.add_argument("--mode", default=None)
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--output-dir", default=None, help="with --suite all: one report per suite")
    s.set_defaults(handler=cmd_verify)

    s = subs.add_parser("cache", help="manage action-matrix cache files")
    s.add_argument("cache_op", choices=("ls", "rm", "verify"))
    s.add_argument("paths", nargs="*", help="cache files (rm/verify)")
    s.add_argument("--cache-dir", default=None,
                   help="cache directory (default: $SKWLAB_CACHE_DIR, else ~/.cache/skwlab)")
    s.set_defaults(handler=cmd_cache)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _resolve_params(args)
        code, payload = args.handler(args)
    except UsageError as exc:
        print(f"skwlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EnvError as exc:
        print(f"skwlab: environment error: {exc}", file=sys.stderr)
        return EXIT_ENV
    except ValueError as exc:
        print(f"skwlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if payload is not None:
        json.dump(payload, sys.stdout, indent=1, sort_keys=True)
        sys.stdout.write("\n")
        if args.output:
            if "schema_version" in payload:
                rp.write_report(args.output, payload)
            else:
                with open(args.output, "w") as fh:
                    json.dump(payload, fh, indent=1, sort_keys=True)
                    fh.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
