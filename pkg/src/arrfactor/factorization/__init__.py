"""Nice partitions, supersolvability and inductive factorizations."""

from .certificates import (
    CertificateError, chain_certificate, factored_certificate, free_certificate,
    partition_certificate, verify_certificate,
)
from .inductive import (
    AddDelReport, BlocksCollide, BudgetExceeded, FactoredNode, FreeNode, NotInjective,
    NotOnto, RestrictionMap, TripleError, check_add_del_nice, induced_partitions_of_triple,
    is_hereditarily_factored, is_hereditarily_inductively_factored, is_inductively_factored,
    is_inductively_free, restriction_map, verify_factored_tree,
)
from .partition import (
    Partition, failing_flat, induced_partition, is_independent, is_nice, met_counts,
)
from .search import NiceSearch, SearchStats, block_sizes, enumerate_nice, find_nice
from .supersolvable import (
    NotAModularChain, check_chain, is_modular, is_supersolvable, modular_flats,
    supersolvable_to_nice,
)

__all__ = [
    "AddDelReport", "BlocksCollide", "BudgetExceeded", "CertificateError", "FactoredNode",
    "FreeNode", "NiceSearch", "NotAModularChain", "NotInjective", "NotOnto", "Partition",
    "RestrictionMap", "SearchStats", "TripleError", "block_sizes", "chain_certificate",
    "check_add_del_nice", "check_chain", "enumerate_nice", "factored_certificate",
    "failing_flat", "find_nice", "free_certificate", "induced_partition",
    "induced_partitions_of_triple", "is_hereditarily_factored",
    "is_hereditarily_inductively_factored", "is_independent", "is_inductively_factored",
    "is_inductively_free", "is_modular", "is_nice", "is_supersolvable", "met_counts",
    "modular_flats", "partition_certificate", "restriction_map", "supersolvable_to_nice",
    "verify_certificate",
]
