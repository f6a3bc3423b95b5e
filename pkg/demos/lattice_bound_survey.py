"""The lattice cosine bound three ways: closed form, corner sweep, full scan.

The noncontextual bound of the contextuality expression is the maximum of
sum_i cos(x_i) - cos(sum_i x_i) over lattice angles (multiples of 2 pi / d).
The closed form interpolates between the two lattice angles bracketing
lam = d / (2 (n + 1)); the sweep walks the mixed floor/ceil vectors; the
scan tries every lattice point.  All three must agree.
"""

import math

from ghzgraphs import lattice_bound_brute, lattice_bound_closed, lattice_bound_sweep

print(f"{'n':>3} {'d':>3} {'closed':>12} {'sweep':>12} {'scan':>12} {'witness exponents'}")
for n in range(2, 7):
    for d in (2, 4, 6, 8, 10, 12):
        if d**n > 10**6:
            continue
        closed = lattice_bound_closed(n, d)
        sweep = lattice_bound_sweep(n, d)
        brute = lattice_bound_brute(n, d)
        assert abs(closed - sweep.max_value) < 1e-9
        assert abs(closed - brute.classical_bound) < 1e-9
        print(f"{n:>3} {d:>3} {closed:>12.8f} {sweep.max_value:>12.8f} "
              f"{brute.classical_bound:>12.8f} {brute.witness['exponents']}")

print("\nspot values:")
print(f"  three variables at d=2: {lattice_bound_closed(3, 2):.8f} (= 2)")
print(f"  three variables at d=8: {lattice_bound_closed(3, 8):.8f} (= 2*sqrt(2) = {2 * math.sqrt(2):.8f})")
print(f"  four variables at d=4:  {lattice_bound_closed(4, 4):.8f} (= 3)")
print(f"  five variables at d=4:  {lattice_bound_closed(5, 4):.8f} (= 4)")

print("\nsweep profile at (n=4, d=12), a case with a sharp interior peak:")
sweep = lattice_bound_sweep(4, 12)
for m, value in enumerate(sweep.values):
    marker = "  <- peak" if m == sweep.peak_index else ""
    print(f"  m={m}: {value:>12.8f}{marker}")
print(f"scaled differences: {[round(x, 6) for x in sweep.scaled_diffs]}")
