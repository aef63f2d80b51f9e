"""Compare the two Euler-characteristic pipelines on small spaces.

Pipeline A counts nondegenerate cells directly.  Pipeline B never builds
cells at the target weights: it counts weight-admissible partitions of the
markings and combines them with per-partition top-weight Euler
characteristics (Bernoulli closed form where valid, small unit-weight
complexes otherwise).  The two must agree exactly.

Run:  python3 demos/euler_characteristics.py
"""

from tropical_moduli import (
    build_chain_complex,
    build_top_weight_table,
    euler_from_cells,
    euler_from_top_weight,
    euler_heavy_light,
    grothendieck_decomposition,
    parse_weight_spec,
)

cases = [
    (0, "1^4"),
    (1, "1,1"),
    (1, "1,1,eps"),
    (1, "1/2^3"),
    (2, "1"),
]

print(f"{'g':>2} {'weights':<12} {'direct':>7} {'formula':>8}  partition counts")
for g, spec in cases:
    w = parse_weight_spec(spec)
    direct = euler_from_cells(build_chain_complex(g, w, "all"))
    decomposition = grothendieck_decomposition(g, w)
    table = build_top_weight_table(g, [r for r, _ in decomposition])
    formula = euler_from_top_weight(g, w, table)
    assert direct == formula
    counts = ", ".join(f"N_{r}={n}" for r, n in decomposition)
    print(f"{g:>2} {spec:<12} {direct:>7} {formula:>8}  {counts}")

print("\nHeavy/light closed form (n heavy markings of weight 1, m light")
print("markings of weight 1/(m+1)), genus 1:")
header = "  n\\m " + "".join(f"{m:>8}" for m in range(1, 5))
print(header)
for n in range(2, 6):
    row = "".join(f"{euler_heavy_light(1, n, m):>8}" for m in range(1, 5))
    print(f"  {n:>3} {row}")
