"""Build and certify maximum entangled bases.

The 2-qudit family generalizes the Bell basis; the GHZ-type family covers
any party count. Certification checks orthonormality, completeness, and
that every single-party marginal is exactly I/d.
"""

import json

import numpy as np

from quditmask import certify_meb, ghz_basis, meb_to_json_dict, two_qudit_meb

print("Bell basis (d=2):")
for label, state in zip(two_qudit_meb(2).labels, two_qudit_meb(2).states):
    print(f"  k={label}: {np.round(state.amps.real, 4)}")

for d in (2, 3, 4):
    cert = certify_meb(two_qudit_meb(d))
    print(
        f"2-qudit family d={d}: pass={cert.passed} "
        f"(gram dev {cert.max_gram_deviation:.1e}, marginal dev {cert.max_marginal_deviation:.1e})"
    )

for d, n in [(2, 3), (3, 3)]:
    cert = certify_meb(ghz_basis(d, n))
    print(f"GHZ family d={d} n={n}: pass={cert.passed}, {cert.count} states")

doc = meb_to_json_dict(two_qudit_meb(2))
print("\nJSON export of the Bell basis:")
print(json.dumps(doc, indent=2)[:300], "...")
