"""
IH versus HI on the universal implosion of SU(3)
================================================

The space is the open cone on a 9-manifold Y whose reduced rational
homology sits in degrees 4, 5 and 9.  Both closed forms only need that
Betti table, so nothing here is triangulated.
"""
from ihspaces import catalog
from ihspaces.formulas import ConeSpaceSpec, hi_open_cone, ih_open_cone
from ihspaces.perversity import cutoff_degree, lower_middle, sweep

y = catalog.get("Y")
print("H~(Y):", dict(y.betti.ranks), " l =", y.dim)

# at the lower middle perversity the cutoff is k = 9 - m(10) = 5
m = lower_middle()
print("k =", cutoff_degree(y.dim, m))

report = catalog.run_example("su3-universal-implosion", m)
print("IH:", dict(report.ih.ranks))
print("HI:", dict(report.hi.ranks))
print("degrees where they disagree:", sorted(report.differ))

# the same comparison for every perversity in the standard sweep
spec = ConeSpaceSpec(y.betti, y.dim)
print()
print(f"{'p':>9} {'k':>3}  IH                  HI")
for p in sweep(y.dim):
    ih = dict(ih_open_cone(spec, p).ranks)
    hi = dict(hi_open_cone(spec, p).ranks)
    print(f"{p.label:>9} {cutoff_degree(y.dim, p):>3}  {str(ih):<19} {hi}")

# SU(2) for contrast: the cone on S^3 is C^2
r = catalog.run_example("su2-universal-implosion", m)
print()
print("SU(2) implosion  IH:", dict(r.ih.ranks), " HI:", dict(r.hi.ranks))
