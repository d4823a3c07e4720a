"""Machine-checkable non-membership certificates.

For the surface y^5 = x^15 z^11 the point (2, 7) is not in the saturated
semigroup.  The interior witness arc pulls the target monomial difference
back with order 23 but the diagonal ideal with order 35; since 23 < 35 the
valuative criterion refutes membership.  The certificate serializes to a
self-contained JSON record (ideal, arc with exact cyclotomic coefficients,
target, both orders, verdict) that a third party can re-verify without
trusting the producer.
"""

import json

from toricsat import arccert
from toricsat.arccert import certificate_from_dict, certificate_to_dict, certify_hyp_point
from toricsat.lipsat import HypersurfaceSpec

spec = HypersurfaceSpec(3, 11, 5)

for point in ((0, 7), (2, 7), (4, 9)):
    cert = certify_hyp_point(spec, point)
    region = "axis" if point[0] == 0 else ("interior" if point[0] < spec.alpha else "t-gap")
    print(f"point {point} ({region} witness): "
          f"order {cert.ord_target} < ideal order {cert.ord_ideal} -> refuted")

cert = certify_hyp_point(spec, (2, 7))
blob = json.dumps(certificate_to_dict(cert), indent=2, sort_keys=True)
print("\nserialized certificate:")
print(blob)

# A verifier reconstructs everything from the record and recomputes.
received = certificate_from_dict(json.loads(blob))
print(f"\nindependent re-verification: {arccert.verify_certificate(received)}")

tampered = certificate_to_dict(cert)
tampered["ord_ideal"] = 36
print(f"tampered copy rejected: {not arccert.verify_certificate(certificate_from_dict(tampered))}")
