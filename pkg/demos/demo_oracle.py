#!/usr/bin/env python3
"""Matrix-level validation: explicit representation points over exact
rationals, with Hom dimensions computed by linear algebra and compared to the
combinatorial tube model.

Run:  python demos/demo_oracle.py
"""

from fractions import Fraction

from canalg import (CanonicalType, LambdaChoice, TubeIndec,
                    build_exceptional_simple, build_homogeneous,
                    build_length_two, check_relations, hom_dim_linear,
                    hom_dim_tube)

t = CanonicalType((2, 3, 4))
lam = LambdaChoice((Fraction(1),))

print("=" * 72)
print(f"Type {t}, tube parameters lambda_3 = {lam.lambdas[0]}")
print("=" * 72)

mods = []
for i, mi in enumerate(t.m, start=1):
    for j in range(mi):
        mods.append((TubeIndec(i, j, 1), build_exceptional_simple(t, lam, i, j)))
for i, mi in enumerate(t.m, start=1):
    mods.append((TubeIndec(i, 0, 2), build_length_two(t, lam, i, 0)))

print(f"built {len(mods)} tube modules; relations hold for all:",
      all(check_relations(t, lam, rep) for _, rep in mods))

print()
print("Hom table, linear algebra vs tube combinatorics (rows -> columns):")
labels = [str(x) for x, _ in mods]
width = max(len(s) for s in labels) + 1
print(" " * width + " ".join(f"{s:>{width}}" for s in labels))
agree = True
for x, xrep in mods:
    row = []
    for y, yrep in mods:
        got = hom_dim_linear(t, lam, xrep, yrep)
        want = hom_dim_tube(t, x, y)
        agree = agree and got == want
        row.append(f"{got}" if got == want else f"{got}!{want}")
    print(f"{str(x):>{width}}" + " ".join(f"{s:>{width}}" for s in row))
print(f"all entries match the combinatorial prediction: {agree}")

print()
print("Homogeneous (Jordan) modules at mu = 2:")
for size in (1, 2, 3):
    rep = build_homogeneous(t, lam, Fraction(2), size)
    print(f"  size {size}: relations {check_relations(t, lam, rep)}, "
          f"End dimension {hom_dim_linear(t, lam, rep, rep)} (expected {size})")
simple = build_exceptional_simple(t, lam, 3, 0)
homog = build_homogeneous(t, lam, Fraction(2), 2)
print(f"  Hom(homogeneous, exceptional simple) = "
      f"{hom_dim_linear(t, lam, homog, simple)} (tubes are orthogonal)")
