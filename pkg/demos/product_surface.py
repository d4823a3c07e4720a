"""Saturating a product of two monomial curves.

The surface X1 x X2 built from the curves u -> (u^4, u^6, u^7) and
v -> (v^6, v^9, v^11) is toric with semigroup Gamma_1 x Gamma_2 in N^2.
Its Lipschitz saturation is the product of the curve saturations: the
factors contribute {4,6,7,9} and {6,9,11,13,14,16}, so the saturated
surface sits in 10-space with multiplicity 4 * 6 = 24.  Unlike curves,
embedding dimension (10) and multiplicity (24) no longer agree.
"""

from toricsat import affsg, lipsat

factor1 = lipsat.mk_curve([[4], [6], [7]])
factor2 = lipsat.mk_curve([[6], [9, 11], [9, 11]])

for name, factor in (("first", factor1), ("second", factor2)):
    r = lipsat.saturate_curve(factor)
    print(f"{name} factor saturation: generators {[g[0] for g in r.min_gens]}, "
          f"multiplicity {r.multiplicity}")

result = lipsat.saturate_product([factor1, factor2])
print(f"\nproduct saturation generators ({len(result.min_gens)} of them):")
for g in result.min_gens:
    print(f"  {g}")
print(f"multiplicity: {result.multiplicity}")
print(f"embedding dimension: {result.embedding_dimension}")

# The multiplicity is visible in the lattice geometry: the complement of the
# hull K+ is the triangle with legs 4 and 6, of normalized volume 24.
hull = affsg.hull_complement(result.semigroup)
print(f"hull complement {hull.polygon_vertices}, normalized volume {hull.normalized_volume}")

original = affsg.product(lipsat.curve_semigroup(factor1), lipsat.curve_semigroup(factor2))
lipsat.check_saturation(original, result)
print("invariants re-validated: containment, multiplicity, hull")
