"""
Graded hom spaces and homotopies
================================

Morphisms between factorizations form a two-periodic complex; its
cohomology in even and odd degree is computed exactly by module
Groebner bases.  The one-variable potentials x^(n+1) give the cleanest
closed form: between (x^a, x^(n+1-a)) and (x^c, x^(n+1-c)) both graded
pieces have dimension min(a, n+1-a, c, n+1-c).
"""

from mfcat import (
    MFMorphism,
    PolyMatrix,
    corpus,
    hom_dims,
    is_contractible,
    is_homotopy_equivalence,
    is_null_homotopic,
    cone,
    identity_morphism,
    shift,
    zero_morphism,
)

# the hom table for x^5 (n = 4): rows are the source exponent a,
# columns the target exponent c
n = 4
print("hom dimensions (h0, h1) over x^%d:" % (n + 1))
header = "      " + "  ".join("c=%d      " % c for c in range(1, n + 1))
print(header)
for a in range(1, n + 1):
    row = []
    for c in range(1, n + 1):
        rep = hom_dims(corpus.lookup("An:%d:%d" % (n, a)),
                       corpus.lookup("An:%d:%d" % (n, c)))
        row.append("(%d, %d)" % (rep.h0, rep.h1))
        assert rep.h0 == min(a, n + 1 - a, c, n + 1 - c)
    print("a=%d   %s" % (a, "  ".join("%-8s" % cell for cell in row)))

# a null-homotopic morphism comes with an exact witness (s0, s1):
# multiplication by x on (x, x) over x^2 is a boundary
E = corpus.lookup("An:1:1")
x = E.e1.get(0, 0)
p = MFMorphism(E, E, PolyMatrix.scalar(x, 1), PolyMatrix.scalar(x, 1))
flat, witness = is_null_homotopic(p)
print("\nmultiplication by x is null-homotopic:", flat)
print("witness s0 =", witness.s0.get(0, 0), " s1 =", witness.s1.get(0, 0))

# contractibility is null-homotopy of the identity; cones of identities
# are the basic examples
print("E itself contractible:", is_contractible(E))
print("cone(id_E) contractible:", is_contractible(cone(identity_morphism(E))))

# over x^2 the shift changes nothing up to homotopy: the signed identity
# is an equivalence E -> E[1]; the zero morphism of course is not
one = PolyMatrix.scalar(E.ring.one(), 1)
sign = MFMorphism(E, shift(E), one, -one)
print("\nsigned identity E -> E[1] over x^2 is an equivalence:",
      is_homotopy_equivalence(sign))
print("zero morphism is an equivalence:",
      is_homotopy_equivalence(zero_morphism(E, E)))
