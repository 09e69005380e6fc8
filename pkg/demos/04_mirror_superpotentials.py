"""
Laurent superpotentials from toric fans
=======================================

A complete fan with one parameter per ray relation determines a Laurent
polynomial on the torus: one monomial per ray, with the non-basis rays
solved from the relations.  Its critical points are counted exactly by
Groebner bases, and the critical values come out as roots of a monic
rational polynomial.
"""

from fractions import Fraction

from mfcat import mirror

# the bundled fans: projective spaces, the first Hirzebruch surface,
# and the degree-six del Pezzo
print("preset superpotentials and critical counts at parameters = 1:")
for name in ("P1", "P2", "P3", "F1", "dP6"):
    spec = mirror.build_superpotential(mirror.preset(name))
    ones = {p: Fraction(1) for p in spec.param_names}
    count = mirror.critical_count(spec, ones)
    print("  %-4s  W = %-46s  count %d" % (name, spec.w, count))

# critical values of the projective line: W = Y + q/Y has critical
# points Y = +/- sqrt(q) with values +/- 2 sqrt(q)
p1 = mirror.build_superpotential(mirror.preset("P1"))
for q in (Fraction(1), Fraction(4), Fraction(9, 4)):
    rep = mirror.critical_values(p1, {"q": q})
    print("q = %s: eliminant %s, %d critical points, distinct values: %s"
          % (q, rep.value_polynomial, rep.count, rep.distinct_values))

# away from the critical values every fiber of W has the same number of
# points; at a critical value two of them collide, which is rejected
print("fiber of Y + 1/Y over 0 has", mirror.fiber_cardinality(p1, {"q": 1}, 0),
      "points")
try:
    mirror.fiber_cardinality(p1, {"q": 1}, 2)
except mirror.CriticalValueError as exc:
    print("fiber over the critical value 2 is rejected:", exc)

# fans are plain data; here is the product of two projective lines,
# built from its four rays and two relations
fan = mirror.ToricSpec(
    dimension=2,
    rays=((1, 0), (-1, 0), (0, 1), (0, -1)),
    relations=(((1, 1, 0, 0), "a"), ((0, 0, 1, 1), "b")),
    basis=(0, 2),
)
spec = mirror.build_superpotential(fan)
print("\nproduct of two lines: W =", spec.w)
print("critical count at a=1, b=1:",
      mirror.critical_count(spec, {"a": Fraction(1), "b": Fraction(1)}))
