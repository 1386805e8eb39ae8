"""Issue certificates for B3, write them as JSON and check them again from
the serialized form only."""

from arrfactor import catalog
from arrfactor.factorization import (
    chain_certificate, factored_certificate, find_nice, free_certificate,
    is_inductively_factored, is_inductively_free, is_supersolvable,
    partition_certificate, verify_certificate,
)
from arrfactor.factorization.certificates import dumps, loads

A = catalog.by_name("B:3")
certs = [
    partition_certificate(A, find_nice(A)),
    chain_certificate(A, is_supersolvable(A)[1]),
    factored_certificate(is_inductively_factored(A)),
    free_certificate(is_inductively_free(A)),
]
for cert in certs:
    text = dumps(cert)
    print(f"{cert['kind']:<24} {len(text):5d} bytes  valid: {verify_certificate(A, loads(text))}")

# the same partition claimed for another arrangement is rejected
other = catalog.by_name("G(4,2,3)")
print("B3 partition against G(4,2,3):", verify_certificate(other, certs[0]))
