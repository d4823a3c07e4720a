"""The hypersurface family y^N = x^(alpha N) z^beta with gcd(beta, N) = 1.

These surfaces are normalized by (u, v) -> (u, u^alpha v^beta, v^N), with
semigroup generated by (1,0), (alpha,beta), (0,N).  A monomial u^a v^b is
Lipschitz exactly when b is a multiple of N, or a >= alpha and b lies in
the saturation of the numerical semigroup generated by {N, beta}.  The
saturated surface always has multiplicity N and exactly N + 1 minimal
generators, demonstrated here on the mirror pair (3,11,5) and (3,5,11).
"""

from toricsat import lipsat
from toricsat.lipsat import HypersurfaceSpec


def monomial(a, b):
    parts = [p for e, v in ((a, "u"), (b, "v")) if e for p in [v if e == 1 else f"{v}^{e}"]]
    return "*".join(parts)


def walk(alpha, beta, big_n):
    spec = HypersurfaceSpec(alpha, beta, big_n)
    print(f"=== y^{big_n} = x^{alpha * big_n} z^{beta} ===")
    tsat = lipsat.hyp_T_saturation(spec)
    print(f"saturation of <{big_n}, {beta}>: minimal generators {tsat.generators}")
    result = lipsat.hyp_min_generators(spec)
    monos = ", ".join(monomial(a, b) for a, b in result.parametrization)
    print(f"saturation parametrization: (u,v) -> ({monos})")
    print(f"multiplicity {result.multiplicity}, "
          f"embedding dimension {result.embedding_dimension} = N + 1")
    probes = [(0, big_n), (alpha, beta + 1), (alpha - 1, beta + 1) if alpha > 1 else (0, 1)]
    for p in probes:
        print(f"  membership of {p}: {lipsat.hyp_membership(spec, p)}")
    print()


walk(3, 11, 5)
walk(3, 5, 11)

# Both members of the mirror pair contain the translated quadrant (3,10) + N^2.
for triple in ((3, 11, 5), (3, 5, 11)):
    spec = HypersurfaceSpec(*triple)
    inside = all(
        lipsat.hyp_membership(spec, (3 + dx, 10 + dy)) for dx in range(6) for dy in range(6)
    )
    print(f"(3,10) + N^2 inside the saturation of {triple} (checked on a 6x6 box): {inside}")
