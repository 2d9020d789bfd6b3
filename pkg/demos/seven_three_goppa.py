"""A [7,3,3]_3 Goppa code whose distance is certified by a three-element support.

Run: python3 demos/seven_three_goppa.py
"""

from goppabch.field import format_element
from goppabch import build_code, build_field, check_support, goppa_spec, min_distance, parse_poly

F9 = build_field(3, 1, 2)
G = parse_poly(F9, "x^2+a^2")
spec = goppa_spec(F9, G)
code = build_code(spec)
print(f"G = x^2 + a^2 over F_9, support of length {spec.n}, dimension {code.k}")

# three support elements whose ratios all lie in F_3 give a weight-3 codeword
elems = [F9.prim, F9.exp(5), 0]
witness = check_support(G, elems, support=spec.support)
print("ratios:", [format_element(F9, r) for r in witness.ratios])
print("codeword:", witness.codeword.tolist())
assert code.contains(witness.codeword)

dist = min_distance(code)
print(f"minimum distance {dist.value} (exact: {dist.exact}), designed {code.designed_distance}")
