#!/usr/bin/env python3
"""Tour of the exact arithmetic layer: type invariants, the bilinear form,
and the sum-of-squares decomposition.

Run:  python demos/demo_forms.py
"""

from canalg import (CanonicalType, basis_h, classify_type, euler_form,
                    euler_quadratic, parse_dim_vector, quadratic_lower_bound,
                    quadratic_via_decomposition)

print("=" * 72)
print("Type invariants")
print("=" * 72)
for arms in [(2, 2, 2), (3, 3, 3), (2, 3, 6), (2, 3, 7), (5, 5, 5, 5, 5),
             (3, 3, 3, 3, 3, 3, 3)]:
    t = CanonicalType(arms)
    boundary, repr_type = classify_type(t)
    print(f"  {str(t):16s} delta = {str(t.delta):6s} {repr_type:9s} {boundary}")

print()
print("=" * 72)
print("The bilinear form on an extremal vector")
print("=" * 72)
t = CanonicalType((2, 3, 7))
d = parse_dim_vector("42;21/28,14/36,30,24,18,12,6;0")
h = basis_h(t)
print(f"  type {t}, d = {d}")
print(f"  <d, d>  = {euler_quadratic(t, d)}")
print(f"  <d, h>  = {euler_form(t, d, h)}  (always d0 - dinf)")
print(f"  -delta * (d0 - dinf)^2 = {-t.delta * 42 * 42}")
bound, tight = quadratic_lower_bound(t, d)
print(f"  lower bound {bound}, attained: {tight}")
print(f"  via sum-of-squares decomposition: {quadratic_via_decomposition(t, d)}")
print()
print("The decomposition collapses to -delta*(d0-dinf)^2 exactly when every")
print("interior coordinate sits on the straight line between d0 and dinf;")
print("this vector is that extremal case, scaled to stay integral.")
