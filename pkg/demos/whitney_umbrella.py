"""The Whitney umbrella y^2 = x^2 z is its own Lipschitz saturation.

Its semigroup is generated by (1,0), (1,1), (0,2); the complement of N^2 is
exactly the odd points on the v-axis.  None of them can enter the
saturation: (0,1) lies outside the hull K+ (which any saturation must
respect, since the hull encodes the multiplicity), and for each odd r >= 3
the arc t -> (t^(r+1), t, t^(r+2), -t) pulls the diagonal ideal back to
order r + 1 while pulling x2^r - y2^r back to 2 t^r of order r: a strict
drop, so v^r is refuted.
"""

from toricsat import affsg, arccert, lipsat, torideal
from toricsat.arccert import DiagonalIdeal, certify_nonmembership, wu_witness

wu = affsg.mk_affine(2, [(1, 0), (1, 1), (0, 2)])

kernel = torideal.lattice_kernel(wu)
top, bottom = kernel[0].binomial()
print(f"defining relation from the lattice kernel: {kernel[0].vector}")
print(f"as a binomial: z^{top} - z^{bottom}  (the equation y^2 - x^2 z)")

hull = affsg.hull_complement(wu)
print(f"\nhull complement triangle {hull.polygon_vertices}, "
      f"normalized volume {hull.normalized_volume} (the multiplicity)")
print(f"lattice points outside the hull: {affsg.outside_hull_points(wu)} "
      "-> excluded from any saturation")

# The hypersurface family at (alpha, beta, N) = (1, 1, 2) reproduces the
# umbrella and confirms it is already saturated.
result = lipsat.hyp_min_generators(lipsat.HypersurfaceSpec(1, 1, 2))
print(f"\nsaturation generators: {result.min_gens} (the semigroup itself)")

ideal = DiagonalIdeal.from_semigroup(wu)
print("\narc refutations of the remaining odd axis points:")
for r in (3, 5, 7):
    cert = certify_nonmembership(wu_witness(r), (0, r), ideal)
    assert cert.verdict
    print(f"  v^{r}: target order {cert.ord_target} < ideal order {cert.ord_ideal}; "
          f"independently verified: {arccert.verify_certificate(cert)}")
