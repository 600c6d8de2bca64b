"""
Completing a primitive vector to a symplectic basis
===================================================

A primitive integer combination of A-vectors can always be made the first
A-vector of some integral symplectic basis. The descent below shears one
coefficient at a time until only two are left, then finishes with a single
pair completion.
"""

from genusbound import complete_primitive, replay, verify_basis

# (6, 10, 15) is primitive but every pair has a common factor
trace = complete_primitive((6, 10, 15))

# each shear lowers (nonzero count, smallest pairwise gcd)
for metric, step in zip(trace.rounds, trace.steps):
    print("before", metric, "->", step.kind, step.args)
print("last step:", trace.steps[-1].kind, trace.steps[-1].args)

# the target vector sits in slot 0 of a genuine symplectic basis
print("A1 =", trace.final_basis.a(trace.slot))
print("symplectic:", bool(verify_basis(trace.final_basis)))

# replaying the recorded steps from the start reproduces the basis exactly
assert replay(trace) == trace.final_basis
