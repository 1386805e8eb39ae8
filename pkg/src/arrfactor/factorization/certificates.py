"""JSON certificates: partitions, modular chains, inductive trees.

Every certificate is a plain dict with ``schema`` and ``kind``; hyperplanes
are referred to by index into the arrangement the certificate is about (for
tree nodes, the arrangement of that node as produced by the triple of its
parent). Loading a tree re-derives each node, so a loaded certificate is
already checked for shape; ``verify_certificate`` also re-runs the deciders.
"""

from __future__ import annotations

import json

from ..arrangement import Arrangement, bits, exponents, triple
from .inductive import (
    FactoredNode, FreeNode, TripleError, induced_partitions_of_triple, verify_factored_tree,
)
from .partition import Partition, is_nice
from .supersolvable import NotAModularChain, check_chain, supersolvable_to_nice

SCHEMA = 1


class CertificateError(ValueError):
    pass


def _wrap(kind: str, A: Arrangement, body: dict) -> dict:
    return {"schema": SCHEMA, "kind": kind, "fingerprint": A.fingerprint(), **body}


def partition_certificate(A: Arrangement, pi: Partition) -> dict:
    return _wrap("nice-partition", A, {"blocks": pi.to_lists()})


def chain_certificate(A: Arrangement, chain) -> dict:
    return _wrap("modular-chain", A, {"chain": [X.members for X in chain]})


def _factored_json(node: FactoredNode) -> dict:
    if node.is_leaf:
        return {"dim": node.arrangement.dim, "blocks": []}
    return {
        "dim": node.arrangement.dim,
        "blocks": node.partition.to_lists(),
        "h0": node.h0,
        "deletion": _factored_json(node.deletion),
        "restriction": _factored_json(node.restriction),
    }


def factored_certificate(node: FactoredNode) -> dict:
    return _wrap("inductive-factorization", node.arrangement, {"tree": _factored_json(node)})


def _free_json(node: FreeNode) -> dict:
    out = {"dim": node.arrangement.dim, "exponents": list(node.exponents)}
    if node.h0 is not None:
        out["h0"] = node.h0
        out["deletion"] = _free_json(node.deletion)
        out["restriction"] = _free_json(node.restriction)
    return out


def free_certificate(node: FreeNode) -> dict:
    return _wrap("inductive-freeness", node.arrangement, {"tree": _free_json(node)})


def dumps(cert: dict) -> str:
    return json.dumps(cert, sort_keys=True, separators=(",", ":"))


def loads(text: str) -> dict:
    return json.loads(text)


# -- loading ----------------------------------------------------------------

def _header(A: Arrangement, data: dict, kind: str) -> None:
    if data.get("schema") != SCHEMA:
        raise CertificateError(f"unsupported schema {data.get('schema')!r}")
    if data.get("kind") != kind:
        raise CertificateError(f"expected a {kind} certificate, got {data.get('kind')!r}")
    fp = data.get("fingerprint")
    if fp is not None and fp != A.fingerprint():
        raise CertificateError("certificate was issued for a different arrangement")


def load_partition(A: Arrangement, data: dict) -> Partition:
    _header(A, data, "nice-partition")
    try:
        return Partition(data["blocks"], len(A))
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateError(f"bad partition: {exc}") from None


def load_chain(A: Arrangement, data: dict) -> list:
    _header(A, data, "modular-chain")
    try:
        return [A.lattice.flat(bits(s)) for s in data["chain"]]
    except (KeyError, ValueError) as exc:
        raise CertificateError(f"bad chain: {exc}") from None


def _factored_node(A: Arrangement, data: dict) -> FactoredNode:
    if data.get("dim") != A.dim:
        raise CertificateError("tree node dimension does not match")
    pi = Partition(data.get("blocks", []), len(A))
    if "h0" not in data:
        if len(A):
            raise CertificateError("leaf with a nonempty arrangement")
        return FactoredNode(A, pi)
    try:
        p1, p2, T = induced_partitions_of_triple(A, pi, data["h0"])
    except (TripleError, ValueError, IndexError) as exc:
        raise CertificateError(f"bad tree node: {exc}") from None
    left = _factored_node(T.deletion, data["deletion"])
    right = _factored_node(T.restriction, data["restriction"])
    if left.partition.as_set() != p1.as_set() or right.partition.as_set() != p2.as_set():
        raise CertificateError("child partition is not the induced one")
    return FactoredNode(A, pi, data["h0"], left, right)


def load_factored(A: Arrangement, data: dict) -> FactoredNode:
    _header(A, data, "inductive-factorization")
    return _factored_node(A, data["tree"])


def _free_node(A: Arrangement, data: dict) -> FreeNode:
    if data.get("dim") != A.dim:
        raise CertificateError("tree node dimension does not match")
    exps = tuple(data["exponents"])
    if "h0" not in data:
        if len(A):
            raise CertificateError("leaf with a nonempty arrangement")
        return FreeNode(A, exps)
    try:
        T = triple(A, data["h0"])
    except IndexError as exc:
        raise CertificateError(str(exc)) from None
    return FreeNode(A, exps, data["h0"], _free_node(T.deletion, data["deletion"]),
                    _free_node(T.restriction, data["restriction"]))


def load_free(A: Arrangement, data: dict) -> FreeNode:
    _header(A, data, "inductive-freeness")
    return _free_node(A, data["tree"])


def _verify_free(node: FreeNode) -> bool:
    A = node.arrangement
    if node.h0 is None:
        return len(A) == 0 and node.exponents == (0,) * A.dim
    left, right = node.deletion, node.restriction
    if not (_verify_free(left) and _verify_free(right)):
        return False
    rest = list(left.exponents)
    for e in right.exponents:
        if e not in rest:
            return False
        rest.remove(e)
    if len(rest) != 1:
        return False
    claimed = tuple(sorted(right.exponents + (rest[0] + 1,)))
    return claimed == tuple(sorted(node.exponents)) and list(claimed) == exponents(A)


def verify_certificate(A: Arrangement, data: dict) -> bool:
    """Check a certificate against A from scratch."""
    kind = data.get("kind")
    try:
        if kind == "nice-partition":
            return is_nice(A, load_partition(A, data))
        if kind == "modular-chain":
            chain = load_chain(A, data)
            check_chain(A, chain)
            supersolvable_to_nice(A, chain)
            return True
        if kind == "inductive-factorization":
            return verify_factored_tree(load_factored(A, data))
        if kind == "inductive-freeness":
            return _verify_free(load_free(A, data))
    except (CertificateError, NotAModularChain, KeyError, TypeError):
        return False
    return False
