"""
Genus bounds from adjunction inequalities
=========================================

Every inequality is evaluated as a decision procedure: either it applies and
yields the smallest genus it does not exclude, or it lists the hypotheses
that failed. Blowing up trades self-intersection for pairing, which is how
the b1-corrected bound follows from the one without l.
"""

from genusbound import adjunction as adj
from genusbound.swtopology import BlowUpSpec, ManifoldData, SpinCData, SurfaceData, blow_up

# b1 = 1, b2+ = 2, [Sigma]^2 = 2, <[Sigma], c1> = -2, d = 4
case = adj.AdjunctionCase.build(ManifoldData(1, 2), SurfaceData(6, 2), SpinCData("s", -2), 4)
report = adj.best_bound(case)
for v in report.verdicts:
    print(f"{v.theorem_id:<16} {v.genus_lower_bound!s:>5}  {', '.join(v.failed_hypotheses)}")
print("best:", report.best_bound)

# negative self-intersection: nothing applies, and the reason is named
neg = adj.AdjunctionCase.build(ManifoldData(0, 2), SurfaceData(3, -2), SpinCData("s", 0), 0)
print(adj.best_bound(neg).verdict(adj.TH1).failed_hypotheses)

# blowing up b1 points with n >= b1 and d >= 2 b1 moves the case into the
# range of th3, and the bound coincides with th4 on the original data
m2, s2, sp2, d2 = blow_up(case.manifold, case.surface, case.spinc, case.d_s, BlowUpSpec(case.b1))
blown = adj.AdjunctionCase.build(m2, s2, sp2, d2)
print("th3 after blow-up:", adj.bound_th3(blown).genus_lower_bound)
print("th4 before:", adj.bound_th4(case).genus_lower_bound)
