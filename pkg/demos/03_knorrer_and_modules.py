"""
Adding a quadratic: tensor products and the two-variable doubling
=================================================================

The tensor product of factorizations adds potentials; tensoring with
(u, v) over u*v is the classical doubling that leaves all hom
dimensions unchanged.  Each factorization also presents a module over
the hypersurface ring, whose dimension and Hilbert function come from
Groebner bases of its presentation.
"""

from mfcat import (
    QQ,
    RingContext,
    cokernel_presentation,
    corpus,
    hom_dims,
    knorrer,
    parse_polynomial,
    rank_one,
    tensor,
)

# the rank-one inputs (x, x) and (y, y) combine into a rank-two
# factorization of x^2 + y^2
Rx = RingContext(("x",), QQ)
Ry = RingContext(("y",), QQ)
x = parse_polynomial(Rx, "x")
y = parse_polynomial(Ry, "y")
A = rank_one(Rx, x * x, 0, x, x)
B = rank_one(Ry, y * y, 0, y, y)
T = tensor(A, B)
print("tensor potential:", T.w)
print("e1 =", T.e1)
print("e0 =", T.e0)

# the doubling adds u*v; hom dimensions are preserved exactly
for n in (2, 3, 4):
    E = corpus.lookup("An:%d:1" % n)
    F = corpus.lookup("An:%d:%d" % (n, (n + 1) // 2))
    before = hom_dims(E, F)
    after = hom_dims(knorrer(E), knorrer(F))
    print("n=%d  before (%d, %d)  after doubling (%d, %d)"
          % (n, before.h0, before.h1, after.h0, after.h1))

# custom variable names for the doubling are allowed
K = knorrer(corpus.lookup("An:2:1"), names=("s", "t"))
print("doubled potential with custom names:", K.w)

# the cokernel of e1 is a module over R/(W); for (x^a, x^(n+1-a)) it is
# R/(x^a), of dimension a, and the doubling leaves that invariant too
for a in (1, 2, 3):
    pres = cokernel_presentation(corpus.lookup("An:5:%d" % a))
    print("cokernel of (x^%d, x^%d): dimension %s, Hilbert %s"
          % (a, 6 - a, pres.dimension, list(pres.hilbert)))

# over the product potential u*v the cokernel is the coordinate ring of
# a line: infinite-dimensional, one new monomial per degree
pres = cokernel_presentation(corpus.lookup("pair:uv"))
print("cokernel of (u, v): dimension %s, Hilbert %s"
      % (pres.dimension, list(pres.hilbert)))
