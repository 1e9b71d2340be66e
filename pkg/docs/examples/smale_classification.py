"""
Identifying the link
====================

:func:`weighted_links.analyze` gathers every invariant and names the
diffeomorphism type when the gates pass.  Links that fail a gate are
reported as unclassified with the reason.
"""

from weighted_links import analyze, make_weights

cases = [
    ((1, 2, 3, 5), 10),  # 8#(S2xS3)
    ((1, 3, 5, 7), 15),  # 8#(S2xS3)
    ((1, 1, 1, 1), 2),   # quadric: S2xS3
    ((1, 1, 1, 1), 3),   # cubic surface: 6#(S2xS3)
    ((3, 3, 3, 2), 6),   # ambient space not well formed
    ((1, 1, 1, 4), 6),   # Milnor number 125/2: no such hypersurface
]
for values, d in cases:
    r = analyze(make_weights(values), d)
    print(f"{str(r.weights):12} d={d:<3} mu={str(r.milnor_number):6} b2={str(r.betti2):5} {r.diffeo_type}")
