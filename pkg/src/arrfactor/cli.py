"""Command line front end.

    arrfactor info   (--catalog NAME | --file PATH)
    arrfactor check  PROPERTY (--catalog NAME | --file PATH) [--budget N] [--partition FILE]
    arrfactor verify CERT.json (--catalog NAME | --file PATH)
    arrfactor export --catalog NAME [-o PATH]
    arrfactor verify-paper [--only ID ...] [--list]

JSON goes to stdout, diagnostics to stderr. Exit codes: 0 yes / pass,
1 no / fail, 2 bad input, 3 undecided (budget exhausted).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import catalog
from .arrangement import ArrangementFormatError, Arrangement, format_arrangement, load_arrangement, restriction
from .catalog.linforms import LinearFormError
from .factorization import (
    BudgetExceeded, Partition, chain_certificate, factored_certificate, find_nice,
    free_certificate, is_inductively_factored, is_inductively_free, is_nice,
    is_supersolvable, partition_certificate, verify_certificate,
)
from .factorization.certificates import SCHEMA, CertificateError, load_partition
from .polynomial import integer_root_multiset

log = logging.getLogger("arrfactor")

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_UNDECIDED = 0, 1, 2, 3
PROPERTIES = ("nice", "supersolvable", "indfactored", "indfree", "hereditary-nice")


class InputError(Exception):
    pass


def _emit(obj: dict) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _load(args) -> tuple[Arrangement, str]:
    try:
        if args.catalog:
            return catalog.by_name(args.catalog), args.catalog
        if args.file == "-":
            from .arrangement import parse_arrangement
            return parse_arrangement(sys.stdin.read()), "<stdin>"
        return load_arrangement(args.file), args.file
    except (catalog.UnknownCatalogEntry, ArrangementFormatError, LinearFormError,
            ValueError, OSError) as exc:
        raise InputError(f"cannot load arrangement: {exc}") from None


def _add_input(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--catalog", metavar="NAME", help="catalog name, e.g. 'G(3,3,3)', F4, braid:3")
    g.add_argument("--file", metavar="PATH", help="arrangement file ('-' for stdin)")


# -- commands ---------------------------------------------------------------

def cmd_info(args) -> int:
    A, source = _load(args)
    L = A.lattice
    p = A.char_poly()
    roots = integer_root_multiset(p)
    _emit({
        "schema": SCHEMA,
        "source": source,
        "fingerprint": A.fingerprint(),
        "dim": A.dim,
        "conductor": A.conductor,
        "hyperplanes": len(A),
        "rank": L.rank,
        "flats_by_rank": L.counts(),
        "char_poly": list(p.coeffs),
        "char_poly_text": p.format("t"),
        "roots": roots,
    })
    return EXIT_YES


def _verdict(prop: str, A: Arrangement, answer: str, seconds: float,
             certificate: dict | None = None, **extra) -> dict:
    out = {"schema": SCHEMA, "property": prop, "answer": answer,
           "fingerprint": A.fingerprint(), "seconds": round(seconds, 3)}
    if certificate is not None:
        out["certificate"] = certificate
    out.update(extra)
    return out


def _read_partition(A: Arrangement, path: str) -> Partition:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read partition: {exc}") from None
    try:
        if isinstance(data, list):
            return Partition(data, len(A))
        return load_partition(A, data)
    except (CertificateError, ValueError, TypeError) as exc:
        raise InputError(f"bad partition: {exc}") from None


def _check(prop: str, A: Arrangement, args) -> tuple[str, dict | None, dict]:
    budget = args.budget
    if prop == "nice":
        if args.partition:
            pi = _read_partition(A, args.partition)
            ok = is_nice(A, pi)
            return ("yes" if ok else "no"), (partition_certificate(A, pi) if ok else None), {"verified": True}
        pi = find_nice(A)
        if pi is None:
            return "no", None, {}
        return "yes", partition_certificate(A, pi), {"block_sizes": sorted(pi.sizes())}
    if prop == "supersolvable":
        ok, chain = is_supersolvable(A)
        return ("yes", chain_certificate(A, chain), {}) if ok else ("no", None, {})
    if prop == "indfactored":
        node = is_inductively_factored(A, budget)
        return ("yes", factored_certificate(node), {}) if node else ("no", None, {})
    if prop == "indfree":
        node = is_inductively_free(A, budget)
        if node is None:
            return "no", None, {}
        return "yes", free_certificate(node), {"exponents": list(node.exponents)}
    if prop == "hereditary-nice":
        cert = hereditary_certificate(A)
        if cert is None:
            return "no", None, {}
        return "yes", cert, {}
    raise InputError(f"unknown property {prop!r}")


def hereditary_certificate(A: Arrangement) -> dict | None:
    """One nice partition of A^X per flat X, or None if some restriction is not nice."""
    entries = []
    for X in A.lattice:
        B = A if X.rank == 0 else restriction(A, X)
        pi = find_nice(B)
        if pi is None:
            return None
        entries.append({"flat": X.members, "blocks": pi.to_lists()})
    return {"schema": SCHEMA, "kind": "hereditary-nice", "fingerprint": A.fingerprint(),
            "restrictions": entries}


def verify_hereditary(A: Arrangement, data: dict) -> bool:
    try:
        entries = {tuple(e["flat"]): e["blocks"] for e in data["restrictions"]}
        if data.get("fingerprint") not in (None, A.fingerprint()):
            return False
        for X in A.lattice:
            blocks = entries.get(tuple(X.members))
            if blocks is None:
                return False
            B = A if X.rank == 0 else restriction(A, X)
            if not is_nice(B, Partition(blocks, len(B))):
                return False
    except (KeyError, TypeError, ValueError):
        return False
    return True


def cmd_check(args) -> int:
    A, source = _load(args)
    t0 = time.perf_counter()
    try:
        answer, cert, extra = _check(args.property, A, args)
    except BudgetExceeded as exc:
        log.warning("%s", exc)
        _emit(_verdict(args.property, A, "undecided", time.perf_counter() - t0,
                       reason=str(exc), source=source))
        return EXIT_UNDECIDED
    _emit(_verdict(args.property, A, answer, time.perf_counter() - t0, cert, source=source, **extra))
    return EXIT_YES if answer == "yes" else EXIT_NO


def cmd_verify(args) -> int:
    A, _ = _load(args)
    try:
        with open(args.certificate) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read certificate: {exc}") from None
    if isinstance(data, dict) and "certificate" in data:   # a whole verdict
        data = data["certificate"]
    if not isinstance(data, dict):
        raise InputError("certificate must be a JSON object")
    if data.get("kind") == "hereditary-nice":
        ok = verify_hereditary(A, data)
    else:
        ok = verify_certificate(A, data)
    _emit({"schema": SCHEMA, "kind": data.get("kind"), "valid": ok, "fingerprint": A.fingerprint()})
    return EXIT_YES if ok else EXIT_NO


def cmd_export(args) -> int:
    A, source = _load(args)
    text = format_arrangement(A, comment=source)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_YES


def cmd_verify_paper(args) -> int:
    from .classification import CHECKS, run_check

    if args.list:
        _emit({"checks": {k: v[0] for k, v in CHECKS.items()}})
        return EXIT_YES
    ids = args.only or list(CHECKS)
    unknown = [i for i in ids if i not in CHECKS]
    if unknown:
        raise InputError(f"unknown check id(s): {', '.join(unknown)}; known: {', '.join(CHECKS)}")
    results = []
    for i in ids:
        r = run_check(i)
        results.append(r)
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.id:<11} {r.seconds:8.2f}s  {r.title}", file=sys.stderr)
        for f in r.failures:
            print(f"     ! {f}", file=sys.stderr)
    _emit({"schema": SCHEMA, "results": [r.as_dict() for r in results],
           "passed": all(r.passed for r in results)})
    failed = [r.id for r in results if not r.passed]
    if failed:
        print(f"failed: {', '.join(failed)}", file=sys.stderr)
        return EXIT_NO
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arrfactor", description=__doc__.split("\n")[0] or None)
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="lattice summary and characteristic polynomial")
    _add_input(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("check", help="decide a property and print a verdict")
    p.add_argument("property", choices=PROPERTIES)
    _add_input(p)
    p.add_argument("--budget", type=int, default=100_000, help="node budget for inductive searches")
    p.add_argument("--partition", metavar="FILE", help="verify this partition instead of searching (nice only)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="re-verify a certificate or verdict")
    p.add_argument("certificate", metavar="CERT")
    _add_input(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write an arrangement in the text format")
    _add_input(p)
    p.add_argument("-o", "--output", metavar="PATH")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify-paper", help="run the classification checks")
    p.add_argument("--only", nargs="+", metavar="ID")
    p.add_argument("--list", action="store_true", help="list check ids")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:   # argparse uses 2 for usage errors already
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
