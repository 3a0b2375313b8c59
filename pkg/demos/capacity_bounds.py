"""Masking capacity versus the quantum Singleton bound.

For m parties of dimension d the constructions mask up to d^floor(m/2)
levels; an ((m, w, 2))_d error-correcting code allows up to d^(m-2). The
masking bound is the tighter of the two for every m > 4 and matches it at
m = 4.
"""

from quditmask import bounds_report, min_parties

print(f"{'d':>3} {'m':>3} {'masking':>10} {'singleton':>12}")
for d in (2, 3, 4):
    for m in (4, 5, 6, 8):
        r = bounds_report(d, m)
        marker = "=" if r.masking_bound == r.singleton_bound else "<"
        print(f"{d:>3} {m:>3} {r.masking_bound:>10} {marker} {r.singleton_bound:>10}")

print("\nminimum parties 2*ceil(log_d w) for qubit registers:")
for w in (2, 3, 4, 5, 8, 16, 100):
    p = min_parties(w, 2)
    note = "  (constructions start at m=4)" if p < 4 else ""
    print(f"  w={w:>3}: {p} parties{note}")
