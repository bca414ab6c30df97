"""
Intersection spaces as mapping cones
====================================

Truncate the chain complex of a link below the cutoff degree, then take the
mapping cone of the inclusion (for an open cone) or of the fold map out of
two truncations (for a suspension).  The homology should match the closed
forms exactly.
"""
from ihspaces.complexes import betti, chain_complex, mapping_cone, simplex_boundary, tensor, truncate
from ihspaces.formulas import (
    ConeSpaceSpec,
    SuspensionSpaceSpec,
    hi_cone_chain_model,
    hi_open_cone,
    hi_suspension,
    hi_suspension_chain_model,
)
from ihspaces.perversity import cutoff_degree, sweep

# S^3 as the boundary of the 4-simplex, truncated at k = 2
s3 = chain_complex(simplex_boundary(4))
sub, inc = truncate(s3, 2)
print("truncation dims:", sub.dims)
print("inclusion commutes with boundaries:", inc.is_chain_map())
print("H~ of the mapping cone:", dict(betti(mapping_cone(inc)).ranks))

# a product link: S^2 x S^3 from the tensor of two simplicial chain complexes
link = tensor(chain_complex(simplex_boundary(3)), chain_complex(simplex_boundary(4)))
print()
print("S^2 x S^3 model: chain dims", {d: n for d, n in link.dims.items() if n})
print("H~:", dict(betti(link).ranks))

cone_spec = ConeSpaceSpec.of(link)
susp_spec = SuspensionSpaceSpec.of(link)
print(f"{'p':>9} {'k':>3}  cone HI             suspension HI")
for p in sweep(cone_spec.dim):
    c_model, c_formula = hi_cone_chain_model(link, p), hi_open_cone(cone_spec, p)
    s_model, s_formula = hi_suspension_chain_model(link, p), hi_suspension(susp_spec, p)
    flag = "" if (c_model == c_formula and s_model == s_formula) else "  MISMATCH"
    k = cutoff_degree(cone_spec.dim, p)
    print(f"{p.label:>9} {k:>3}  {str(dict(c_model.ranks)):<19} {dict(s_model.ranks)}{flag}")
