"""Saturating a monomial space curve.

The curve t -> (t^6, t^11 - t^9, t^11 + t^9) has a generic plane projection
onto its first two coordinates.  At the exponent level that projection is
(leading exponent 6, support {9, 11}), which yields the characteristic
exponents {6, 9, 11}.  The smallest saturated numerical semigroup
containing them is minimally generated by {6, 9, 11, 13, 14, 16}, so the
Lipschitz saturation is the monomial curve on those six exponents: a germ
in 6-space whose embedding dimension equals the multiplicity of the
original curve.
"""

from toricsat import lipsat, numsg

curve = lipsat.mk_curve([[6], [9, 11], [9, 11]])

m, support = lipsat.plane_model(curve)
print(f"plane projection data: leading exponent {m}, support {support}")

exponents = numsg.char_exponents(m, support)
print(f"characteristic exponents: {exponents.betas}")
print(f"gcd chain: {exponents.gcd_chain}")

saturated = numsg.saturate_chars(exponents)
print(f"saturated semigroup: conductor {saturated.conductor}, "
      f"members below it {saturated.small_elements}")
print(f"still saturated per the closure test: {numsg.is_saturated(saturated)}")

result = lipsat.saturate_curve(curve)
monomials = ", ".join(f"tau^{g[0]}" for g in result.parametrization)
print(f"saturation parametrized by: tau -> ({monomials})")
print(f"multiplicity {result.multiplicity} = embedding dimension "
      f"{result.embedding_dimension} (a curve phenomenon)")
