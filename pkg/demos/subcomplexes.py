"""Subcomplexes that carry no homology.

Restricting to cells whose graph has a loop or a positive vertex weight
("lw"), or additionally a parallel edge pair ("mlw"), produces a
subcomplex with the rational homology of a point whenever the genus is at
least one (and the total marking weight exceeds one in genus one).  The
full complex can still have homology in the top degree.

Run:  python3 demos/subcomplexes.py
"""

from tropical_moduli import (
    betti_numbers,
    build_chain_complex,
    enumerate_all,
    parse_weight_spec,
)

for g, spec in [(2, "1"), (1, "1,1"), (1, "1,1,eps")]:
    w = parse_weight_spec(spec)
    strata = enumerate_all(g, w)
    print(f"\n=== genus {g}, weights {spec} ===")
    for filter_name in ("lw", "mlw", "all"):
        cc = build_chain_complex(g, w, filter_name, strata=strata)
        profile = betti_numbers(cc)
        shape = "point-like" if profile.is_point_like() else "has homology"
        print(
            f"  {filter_name:>4}: dims={cc.dims()}"
            f" betti={profile.betti}  {shape}"
        )

print("\nNote: every cell with a parallel edge pair admits the swap")
print("automorphism, an odd edge permutation, so such cells are degenerate")
print("and the lw and mlw chain complexes coincide; mlw differs only as a")
print("set of cells, not as a rational chain complex.")
