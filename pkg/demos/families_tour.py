"""Build one code from each family and print its parameters and witness.

Run: python3 demos/families_tour.py
"""

from goppabch.families import run_family

CASES = [
    ("wild", dict(q=5, m=2, r=2)),
    ("xt_plus_A", dict(q=3, m=2, t=2)),
    ("fractional", dict(q=4, m=2, t=2)),
    ("norm_bch", dict(q=4, m=2, r=1)),
    ("qt_plus_1", dict(q=3, m=5, t=1)),
    ("binary_9_15", dict(m=8)),
    ("pary_2p2", dict(p=3)),
]

for tag, params in CASES:
    rep = run_family(tag, **params)
    code = rep.code
    dist = rep.distance("witness")
    ok = rep.membership()
    print(f"{tag:12s} {params}  [{code.n},{code.k},{dist.value}]_{code.q}  "
          f"witness weight {rep.witness.weight}  congruence={ok['congruence']} "
          f"syndrome={ok['syndrome']}")
