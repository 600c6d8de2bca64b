"""
How many A-vectors can die at once
==================================

For a surface in a 4-manifold, l counts the A-vectors of a single symplectic
basis that vanish in the rational first homology of the ambient manifold.
Here it is computed three ways: by linear algebra on the kernel, by a greedy
basis construction, and by brute-force search over basis changes.
"""

from genusbound import EmbeddingMap, exhaustive_l, l_invariant, l_lower_bound_constructive, referee_bound

# genus 2 in a manifold with b1 = 1; only B1 survives
e = EmbeddingMap(2, 1, ((0, 0, 1, 0),))

print("l from the kernel:", l_invariant(e))

witness = l_lower_bound_constructive(e)
print("greedy witness kills", witness.value, "A-vectors:")
for j in range(witness.value):
    print("  ", witness.basis.label(j), "=", witness.basis.a(j))

search = exhaustive_l(e, 4)
print("brute force:", search.value, "stabilized:", search.stabilized, "history:", search.history)

# the kernel always has dimension at least 2g - b1, which forces l >= g - b1
print("g - b1 =", referee_bound(2, 1))

# a kernel spanned by a symplectic pair only ever yields one killed vector
pair = EmbeddingMap(2, 2, ((0, 1, 0, 0), (0, 0, 0, 1)))
print("kernel span(A1, B1): l =", l_invariant(pair))
