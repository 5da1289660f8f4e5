#!/usr/bin/env python3
# Brute-force the three circulant families and compare with the closed-form rules.
import sys

from gorgraph.circulants import rows_to_csv, survey

max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 12
for family in ("band", "cubic", "quartic"):
    rows = survey(max_n, family)
    bad = [r for r in rows if not r.match]
    gor = [(r.n, r.a, r.b) for r in rows if r.gorenstein]
    print(f"{family}: {len(rows)} rows, {len(bad)} mismatches, gorenstein at {gor}")

# the CSV that `gorgraph survey` writes
print(rows_to_csv(survey(9, "quartic")))
