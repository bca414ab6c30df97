"""
Homology of Y from a Mayer-Vietoris sequence
============================================

Y splits as W u X with W ~ S^5 u S^5, X ~ SU(3) and W n X ~ SU(3) u SU(3).
The ranks of H(W n X) -> H(W) + H(X) are inputs; the solver fills in
everything exactness forces and refuses to guess the rest.
"""
from ihspaces import catalog
from ihspaces.complexes import GradedBetti
from ihspaces.les import MVProblem, audit, format_solution, mayer_vietoris

w = catalog.get("W").betti
su3 = catalog.get("su3").betti
pair = GradedBetti({0: 1, **{d: 2 * r for d, r in su3.ranks.items()}})
print("W:", dict(w.ranks), " X:", dict(su3.ranks), " W n X:", dict(pair.ranks))

ranks = {0: 1, 3: 1, 5: 2, 8: 1}
result = mayer_vietoris(MVProblem(w, su3, pair, ranks))
print("H~(Y):", dict(result.betti.ranks))
print("audit problems:", audit(result.solution) or "none")

# drop the degree 5 rank and the answer is no longer pinned down
partial = mayer_vietoris(MVProblem(w, su3, pair, {**ranks, 5: None}))
print()
print("without the degree 5 rank:", "determined" if partial.determined else "UNDETERMINED")
for r in partial.residuals:
    print("  constraint:", r)

# textbook case: two arcs glued along two points
circle = mayer_vietoris(MVProblem(GradedBetti({}), GradedBetti({}), GradedBetti({0: 1}), {0: 0}))
print()
print("circle:", dict(circle.betti.ranks))
print(format_solution(circle.solution), end="")
