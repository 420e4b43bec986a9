"""Single-mode representations with indefinite (Krein) inner products.

Each builder returns ladder matrices, a diagonal gauge generator, and a
real diagonal Gram.  The anti-Fock Gram alternates in sign; the
parabolic-cylinder family V_theta interpolates, and at theta = 0 a level
window reaching below zero forces a null subrepresentation.
"""

import numpy as np

from kreinccr import build_antifock, build_fock_bargmann, \
    build_schroedinger_theta, detect_null_subrep, krein_decomposition, \
    reduce_to_canonical, verify_rep
from kreinccr.sl2 import s_lower

for rep in (build_fock_bargmann(8), build_antifock(8),
            build_schroedinger_theta(-0.5, 2.0, 8),
            build_schroedinger_theta(-0.25, 1.0, 8, sign=-1)):
    res = verify_rep(rep)
    dec = krein_decomposition(rep)
    neg = int(np.sum(dec.signature < 0))
    print(f"{rep.label:22} gram signature: {neg} negative of {rep.size};  "
          f"worst residual {max(res.values()):.2e}")

print("\ntheta = 0 with levels below zero forces a null subspace:")
diag = detect_null_subrep(0.0, -1, 4)
for line in diag.chain:
    print("  ", line)

print("\ntheta = -1/2 stays non-degenerate on the same window:")
diag = detect_null_subrep(-0.5, -1, 4)
print("   gram:", np.round(diag.gram, 6))

# canonical reduction of a composed isomorphism
gamma = 2.0
v_can = np.array([[1 / (gamma * np.sqrt(2)), -1 / (gamma * np.sqrt(2))],
                  [gamma / np.sqrt(2), gamma / np.sqrt(2)]])
v = v_can @ s_lower(0.7, -0.4)
form = reduce_to_canonical(v)
print(f"\nreduce_to_canonical: kind {form.kind}, sign {form.sign:+d}, "
      f"gamma {form.gamma:.12g}")
print("triangular factor:")
print(np.round(form.s_matrix, 12))
