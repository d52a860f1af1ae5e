"""Command line driver.

Exit codes: 0 success, 1 a law or property failed, 2 parse or type error,
3 I/O or file-format error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import cob2, finhilb, formats, instances, laws, rel_tables, tqft
from .dsl import (DslTypeError, EvaluationError, Interpretation, NoDaggerError, ParseError,
                  SignatureError, cob_interpretation, cob_signature, evaluate, parse, parse_signature,
                  typecheck)

EXIT_OK, EXIT_FAIL, EXIT_SYNTAX, EXIT_IO = 0, 1, 2, 3


def _expr_text(args) -> str:
    return args.expr if args.expr not in (None, "-") else sys.stdin.read()


def _parse_and_check(sig, text):
    local, term = parse(text)
    if term is None:
        raise ParseError("expected an expression", 1, 1)
    return typecheck(sig.merged(local), term)


def run_check_laws(args) -> int:
    backends = instances.BACKENDS if args.backend == "all" else (args.backend,)
    print(f"seed: {args.seed}")
    failed = False
    for name in backends:
        kwargs = {"tol": args.tol} if name == "finhilb" and args.tol is not None else {}
        inst = instances.instance(name, **kwargs)
        max_size = args.max_size if args.max_size is not None else (6 if name == "cob2" else 4)
        spec = laws.SampleSpec(seed=args.seed, samples=args.samples, max_size=max_size,
                               exhaustive_size=args.exhaustive)
        if name == "rel" and args.exhaustive is not None:
            tables = rel_tables.Tables(args.exhaustive)
            reports = [rel_tables.check_category_exhaustive(tables),
                       rel_tables.check_dagger_exhaustive(tables)]
        else:
            reports = [laws.check_category_laws(inst, spec),
                       laws.check_dagger_laws(inst, spec)]
        reports.append(laws.check_monoidal_laws(inst, spec))
        rng = laws.sample_rng(args.seed, "pentagon-triangle", 0)
        objs = [inst.sample_object(rng, min(max_size, 2)) for _ in range(4)]
        reports.append(laws.check_pentagon_triangle(inst, objs))
        sys.stdout.write(laws.format_reports(reports))
        failed |= any(r.status in (laws.FAIL, laws.INSUFFICIENT) for r in reports)
    return EXIT_FAIL if failed else EXIT_OK


def run_eval(args) -> int:
    sig = parse_signature(Path(args.sig).read_text()) if args.sig else None
    data = formats.load_json(args.interp) if args.interp else {"backend": "cob2"}
    if sig is None:
        if data.get("backend") != "cob2":
            raise formats.FormatError("--sig is required for this backend")
        sig = cob_signature()
    elif data.get("backend") == "cob2":
        sig = cob_signature().merged(sig)
    interp = Interpretation.from_json(data, sig)
    term = _parse_and_check(sig, _expr_text(args))
    backend = interp.make_backend()
    print(backend.show(evaluate(interp, term, backend)))
    return EXIT_OK


def run_cob(args) -> int:
    term = _parse_and_check(cob_signature(), _expr_text(args))
    m = evaluate(cob_interpretation(), term)
    print(f"{m.dom} -> {m.cod}: {m}")
    print(f"euler: {m.euler}")
    return EXIT_OK


def run_tqft(args) -> int:
    algebra = formats.frobenius_from_json(formats.load_json(args.frobenius))
    report = tqft.validate(algebra)
    if not report.ok:
        print("\n".join(report.to_lines()))
        return EXIT_FAIL
    z = tqft.TqftFunctor(algebra)
    status = EXIT_OK
    if args.expr is not None:
        term = _parse_and_check(cob_signature(), _expr_text(args))
        m = evaluate(cob_interpretation(), term)
        print(json.dumps(formats.matrix_to_json(z(m))))
    if args.check:
        print(f"seed: {args.seed}")
        spec = laws.SampleSpec(seed=args.seed, samples=args.samples, max_size=3)
        check = (tqft.check_functoriality if args.check == "functoriality"
                 else tqft.check_dagger_preservation)
        r = check(z, spec)
        sys.stdout.write(laws.format_reports([r]))
        if r.status == laws.FAIL:
            status = EXIT_FAIL
    return status


def run_demo(args) -> int:
    if args.demo == "bell":
        bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
        rank = finhilb.schmidt_rank(bell, 2, 2)
        print("state: (|00> + |11>)/sqrt(2)")
        print(f"Schmidt rank: {rank}")
        print(f"entangled: {'yes' if rank > 1 else 'no'}")
        w = finhilb.tensor_not_product_witness(2, 3)
        print(f"tensor vs product (2,3): {w.message}")
        return EXIT_OK if rank == 2 else EXIT_FAIL
    print(f"seed: {args.seed}")
    rng = np.random.default_rng(args.seed)
    constraints = [finhilb.random_matrix(rng, args.dim, args.dim) for _ in range(args.samples)]
    dim = finhilb.cloning_solution_dimension(args.dim, constraints)
    print(f"dim: {args.dim}, constraints: {args.samples}")
    print(f"solution-space dimension: {dim}")
    return EXIT_OK if dim == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dagcat",
                                description="Categories of quantum theory and cobordisms.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check-laws", help="run the law suite against a backend")
    c.add_argument("--backend", required=True, choices=instances.BACKENDS + ("all",))
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--samples", type=int, default=100)
    c.add_argument("--tol", type=float, default=None)
    c.add_argument("--max-size", type=int, default=None)
    c.add_argument("--exhaustive", type=int, default=None, metavar="SIZE",
                   help="enumerate every object up to SIZE instead of sampling "
                        "(rel and finset only; monoidal laws are practical up to 2)")
    c.set_defaults(func=run_check_laws)

    e = sub.add_parser("eval", help="evaluate an expression in an interpretation")
    e.add_argument("--sig")
    e.add_argument("--interp")
    e.add_argument("--expr", help="expression, or '-' / omitted for standard input")
    e.set_defaults(func=run_eval)

    cob = sub.add_parser("cob", help="cobordism utilities")
    cob_sub = cob.add_subparsers(dest="cob_command", required=True)
    n = cob_sub.add_parser("normalize", help="print the normal form of an expression")
    n.add_argument("--expr")
    n.set_defaults(func=run_cob)

    t = sub.add_parser("tqft", help="evaluate or check a TQFT")
    t.add_argument("--frobenius", required=True)
    t.add_argument("--expr")
    t.add_argument("--check", choices=("functoriality", "dagger"))
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--samples", type=int, default=100)
    t.set_defaults(func=run_tqft)

    d = sub.add_parser("demo", help="structural demonstrations")
    d_sub = d.add_subparsers(dest="demo", required=True)
    nc = d_sub.add_parser("no-cloning")
    nc.add_argument("--dim", type=int, default=2)
    nc.add_argument("--samples", type=int, default=5)
    nc.add_argument("--seed", type=int, default=0)
    d_sub.add_parser("bell")
    d.set_defaults(func=run_demo)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DslTypeError, NoDaggerError, SignatureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except (OSError, formats.FormatError, EvaluationError, tqft.FrobeniusError,
            cob2.CobordismError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
