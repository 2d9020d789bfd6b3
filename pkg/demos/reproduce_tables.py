"""Reproduce the parameter tables at the witness tier.

Run: python3 demos/reproduce_tables.py [--exhaustive]
"""

import sys

from goppabch.tables import format_results, reproduce

mode = "exhaustive" if "--exhaustive" in sys.argv else "witness"
results = reproduce(mode=mode)
print(format_results(results))
failed = [r for r in results if not r.passed]
print(f"\n{len(results) - len(failed)}/{len(results)} rows reproduced")
