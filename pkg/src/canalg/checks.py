"""Seeded invariant suites for every layer of the library.

Each suite returns a list of CheckResult; a check aggregates many sampled or
enumerated instances and reports the first counterexample if one exists.
These are the batteries behind the command-line ``verify`` and ``oracle``
subcommands, and the property-style portion of the test suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import geometry, oracle, zeroset
from .cones import decompose_slope_one, in_P, in_Q
from .forms import (CanonicalType, DimVector, a_dim, basis_e, basis_h,
                    euler_form, euler_quadratic, gl_dim,
                    quadratic_lower_bound, quadratic_via_decomposition,
                    slope_one_vector, zero_vector)
from .tubes import (RegularModuleClass, TubeIndec, dim_vector, end_dim,
                    hom_dim_tube, hom_to_simple_nonzero, top_index)


@dataclass
class CheckResult:
    name: str
    ok: bool
    details: str = ""


def _rand_vector(t: CanonicalType, rng: random.Random, lo: int = -12, hi: int = 12) -> DimVector:
    return DimVector(rng.randint(lo, hi), rng.randint(lo, hi),
                     tuple(tuple(rng.randint(lo, hi) for _ in range(mi - 1))
                           for mi in t.m))


def _rand_P_vector(t: CanonicalType, rng: random.Random, hi: int = 9) -> DimVector:
    dinf = rng.randint(0, hi - 1)
    d0 = rng.randint(dinf + 1, hi)
    arms = []
    for mi in t.m:
        chain = []
        prev = d0
        for _ in range(mi - 1):
            prev = rng.randint(dinf, prev)
            chain.append(prev)
        arms.append(tuple(chain))
    return DimVector(d0, dinf, tuple(arms))


def forms_suite(t: CanonicalType, rng: random.Random, samples: int = 1000) -> list[CheckResult]:
    out = []
    h = basis_h(t)

    def run(name, prop):
        for _ in range(samples):
            d = _rand_vector(t, rng)
            bad = prop(d)
            if bad:
                out.append(CheckResult(f"forms/{name}[{t}]", False, bad))
                return
        out.append(CheckResult(f"forms/{name}[{t}]", True))

    run("pairing-h", lambda d: None if (
        euler_form(t, d, h) == d.d0 - d.dinf
        and euler_form(t, h, d) == -(d.d0 - d.dinf)) else f"d={d}")

    def pairing_e(d):
        for i, mi in enumerate(t.m, start=1):
            for j in range(1, mi):
                if euler_form(t, basis_e(t, i, j), d) != d.entry(i, j) - d.entry(i, j - 1):
                    return f"<e_({i},{j}), d> wrong for d={d}"
            if euler_form(t, basis_e(t, i, 0), d) != d.entry(i, mi) - d.entry(i, mi - 1):
                return f"<e_({i},0), d> wrong for d={d}"
            for j in range(0, mi):
                if euler_form(t, d, basis_e(t, i, j)) != d.entry(i, j) - d.entry(i, j + 1):
                    return f"<d, e_({i},{j})> wrong for d={d}"
        return None

    run("pairing-e", pairing_e)
    run("decomposition", lambda d: None if (
        quadratic_via_decomposition(t, d) == euler_quadratic(t, d)) else f"d={d}")

    def bound(d):
        q = euler_quadratic(t, d)
        b, tight = quadratic_lower_bound(t, d)
        if not q >= b:
            return f"bound violated at d={d}"
        if (Fraction(q) == b) != tight:
            return f"tightness mismatch at d={d}"
        return None

    run("lower-bound", bound)
    run("h-translation", lambda d: None if (
        euler_quadratic(t, d + rng.randint(0, 6) * h) == euler_quadratic(t, d)) else f"d={d}")

    def a_identity(d):
        dd = DimVector(abs(d.d0), abs(d.dinf),
                       tuple(tuple(abs(x) for x in a) for a in d.arms))
        if a_dim(t, dd) != gl_dim(t, dd) - euler_quadratic(t, dd):
            return f"a(d) identity fails at d={dd}"
        return None

    run("a-dim-identity", a_identity)

    telescoped = all(
        sum((basis_e(t, i, j) for j in range(t.m[i - 1])), zero_vector(t)) == h
        for i in range(1, t.n + 1))
    out.append(CheckResult(f"forms/telescoping[{t}]", telescoped))
    return out


def cones_suite(t: CanonicalType, rng: random.Random, samples: int = 1000) -> list[CheckResult]:
    out = []
    h = basis_h(t)

    def run(name, prop):
        for _ in range(samples):
            bad = prop()
            if bad:
                out.append(CheckResult(f"cones/{name}[{t}]", False, bad))
                return
        out.append(CheckResult(f"cones/{name}[{t}]", True))

    def duality():
        d = _rand_P_vector(t, rng)
        p = d.d0 + rng.randint(0, 4)
        comp = p * h - d
        if not in_Q(t, comp):
            return f"p*h - d not in Q for d={d}, p={p}"
        if euler_form(t, comp, d) != -p * (d.d0 - d.dinf) - euler_quadratic(t, d):
            return f"pairing identity fails for d={d}, p={p}"
        return None

    run("duality", duality)

    def translate():
        d = _rand_P_vector(t, rng)
        c = rng.randint(0, 5)
        if not in_P(t, d + c * h):
            return f"d + {c}h left P for d={d}"
        return None

    run("h-translate", translate)

    def slope_one():
        r = rng.randint(0, 6)
        ls = tuple(rng.randint(0, mi - 1) for mi in t.m)
        d = r * h + slope_one_vector(t, ls)
        got = decompose_slope_one(t, d)
        if got != (r, ls):
            return f"round trip failed: {(r, ls)} -> {got}"
        if euler_quadratic(t, d) != 1:
            return f"<d,d> != 1 for slope-one d={d}"
        return None

    run("slope-one", slope_one)

    def separation():
        d = _rand_P_vector(t, rng)
        if in_Q(t, d):
            return f"nonzero {d} in both cones"
        return None

    run("cone-separation", separation)
    return out


def geometry_suite(t: CanonicalType, pmax: int = 4) -> list[CheckResult]:
    out = []
    boundary, _ = geometry.classify_type(t)
    for p in range(1, pmax + 1):
        if t.product <= 60 and p <= 4:
            naive_defect, naive_eq = geometry.equality_vectors_naive(t, p)
            dp_defect = geometry.ci_defect(t, p)
            ok = naive_defect == dp_defect
            detail = "" if ok else f"p={p}: DP {dp_defect} vs naive {naive_defect}"
            if ok and dp_defect >= 0:
                comps = geometry.irreducible_components(t, p)
                ok = [d.sort_key() for d in comps] == sorted(d.sort_key() for d in naive_eq)
                detail = "" if ok else f"p={p}: component sets differ"
            out.append(CheckResult(f"geometry/dp-vs-naive[{t},p={p}]", ok, detail))
    for p in range(1, pmax + 1):
        ci = geometry.is_complete_intersection(t, p)
        normal = geometry.is_normal(t, p)
        if boundary == "above_boundary":
            ok = ci and normal
            out.append(CheckResult(f"geometry/above-boundary[{t},p={p}]", ok,
                                   "" if ok else f"expected CI+normal, got {ci},{normal}"))
        elif boundary == "on_boundary":
            pred = geometry.boundary_component_count(t, p)
            got = geometry.component_count(t, p) if ci else None
            ok = ci and got == pred
            out.append(CheckResult(f"geometry/boundary-count[{t},p={p}]", ok,
                                   "" if ok else f"predicted {pred}, got {got}"))
    if boundary != "above_boundary":
        p, d = geometry.ci_failure_witness(t)
        q = euler_quadratic(t, d)
        exact = Fraction(q) == -t.delta * p * (d.d0 - d.dinf)
        member = in_P(t, d) and not d.is_zero()
        weak = q + p * (d.d0 - d.dinf)
        violates = weak < 0 if boundary == "below_boundary" else weak == 0
        ok = exact and member and violates
        out.append(CheckResult(f"geometry/witness[{t}]", ok,
                               "" if ok else f"witness p={p} d={d} value {weak}"))
    return out


def tubes_suite(t: CanonicalType) -> list[CheckResult]:
    out = []
    ok, detail = True, ""
    for i, mi in enumerate(t.m, start=1):
        for j in range(mi):
            for jp in range(mi):
                want = (1 if j == jp else 0) - (1 if jp == (j - 1) % mi else 0)
                got = euler_form(t, basis_e(t, i, j), basis_e(t, i, jp))
                if got != want:
                    ok, detail = False, f"<e_({i},{j}), e_({i},{jp})> = {got} != {want}"
    out.append(CheckResult(f"tubes/euler-simples[{t}]", ok, detail))

    ok, detail = True, ""
    for i in range(1, t.n + 1):
        for ip in range(1, t.n + 1):
            if i == ip:
                continue
            for j in range(t.m[i - 1]):
                for jp in range(t.m[ip - 1]):
                    if euler_form(t, basis_e(t, i, j), basis_e(t, ip, jp)) != 0:
                        ok, detail = False, f"cross-arm pairing nonzero ({i},{j}),({ip},{jp})"
                    if hom_dim_tube(t, TubeIndec(i, j, 1), TubeIndec(ip, jp, 1)) != 0:
                        ok, detail = False, f"cross-arm hom nonzero ({i},{j}),({ip},{jp})"
    out.append(CheckResult(f"tubes/cross-arm[{t}]", ok, detail))

    ok, detail = True, ""
    h = basis_h(t)
    for i, mi in enumerate(t.m, start=1):
        for a in range(mi):
            for l in range(1, 3 * mi + 1):
                x = TubeIndec(i, a, l)
                if end_dim(t, x) != (l - 1) // mi + 1:
                    ok, detail = False, f"End({x}) formula fails"
                if dim_vector(t, TubeIndec(i, a, l + mi)) != dim_vector(t, x) + h:
                    ok, detail = False, f"periodicity fails at {x}"
                for j in range(mi):
                    want = top_index(t, x) == j
                    if hom_to_simple_nonzero(t, RegularModuleClass((x,)), i, j) != want:
                        ok, detail = False, f"top test fails at {x}, j={j}"
    out.append(CheckResult(f"tubes/end-and-periodicity[{t}]", ok, detail))
    return out


def zeroset_stats(t: CanonicalType, pmax: int,
                  cap: int = zeroset.DEFAULT_ZCAP) -> list[tuple]:
    """One pass over Z_pmax collecting (triple, <d',h>, <d',d'>, <d',dim X>, [X,X]).

    The per-object caches matter: a quarter million triples share a few
    hundred d' vectors and far fewer module classes than triples.
    """
    h = basis_h(t)
    d_cache: dict = {}
    x_cache: dict = {}
    stats = []
    for z in zeroset.enumerate_Zp(t, pmax, cap=cap):
        if z.dprime not in d_cache:
            d_cache[z.dprime] = (euler_form(t, z.dprime, h),
                                 euler_quadratic(t, z.dprime))
        th, sd = d_cache[z.dprime]
        if z.xclass not in x_cache:
            x_cache[z.xclass] = (dim_vector(t, z.xclass), end_dim(t, z.xclass))
        dim_x, xx = x_cache[z.xclass]
        pair = euler_form(t, z.dprime, dim_x)
        stats.append((z, th, sd, pair, xx))
    return stats


def zeroset_suite(t: CanonicalType, pmax: int = 4,
                  cap: int = zeroset.DEFAULT_ZCAP) -> list[CheckResult]:
    out = []
    if 0 < t.delta < 1:
        thr = zeroset.zeroset_threshold(t)
        ok = all(zeroset.check_wild_margin(t, p) for p in range(thr, thr + 3))
        aux = 4 * t.delta + t.n + 1 < Fraction(t.n + 1) / (1 - t.delta)
        out.append(CheckResult(f"zeroset/wild-margin[{t}]", ok and aux))
    if t.product > zeroset.BRUTE_PRODUCT_LIMIT or pmax > zeroset.BRUTE_P_LIMIT:
        return out

    stats = zeroset_stats(t, pmax, cap=cap)
    a_ph = {p: a_dim(t, p * basis_h(t)) for p in range(1, pmax + 1)}

    sample = [z for z, *_ in stats[:200]] + [z for z, *_ in stats[-200:]]
    ok = all(z.is_member(t, pmax) for z in sample)
    out.append(CheckResult(f"zeroset/membership-recheck[{t},p<={pmax}]", ok))

    ok, detail = True, ""
    for z, th, sd, pair, xx in stats:
        if xx < t.total - t.n * th:
            ok, detail = False, f"end bound fails at {z.to_dict()}"
            break
        if pair < 0:
            ok, detail = False, f"pairing < 0 at {z.to_dict()}"
            break
    out.append(CheckResult(f"zeroset/end-bound[{t},p<={pmax}]", ok, detail))

    for p in range(1, pmax + 1):
        plus_ids = set()
        flat_ids = set()
        diffs_ok = True
        slope_ok = True
        tgt = zeroset.target_zero_dim(t, p)
        for idx, (z, th, sd, pair, xx) in enumerate(stats):
            if z.q > p:
                continue
            d = (p - z.q) * th + (p - t.n) * (th - 1) + (sd - 1)
            if th == 1 and d != p - z.q:
                slope_ok = False
            if d < 0:
                diffs_ok = False
            if th == 1 and z.q == p and pair == 0 and xx == t.total - t.n:
                plus_ids.add(idx)
            sdim = a_ph[p] - ((2 * p - z.q) * th + sd + pair + xx)
            if d == 0 and sdim == tgt:
                flat_ids.add(idx)
        out.append(CheckResult(f"zeroset/slope-one-diff[{t},p={p}]", slope_ok))
        if p > t.n:
            # strictness range: equality strata = target-dimensional diff-0 strata
            ok = flat_ids == plus_ids
            out.append(CheckResult(f"zeroset/equality-strata[{t},p={p}]", ok,
                                   "" if ok else f"{len(flat_ids)} vs {len(plus_ids)}"))
        want = zeroset.equality_stratum_count(t, p)
        ok = len(plus_ids) == want
        out.append(CheckResult(f"zeroset/parametrized-count[{t},p={p}]", ok,
                               "" if ok else f"enumerated {len(plus_ids)}, parametrized {want}"))
        if t.delta < 1 and p >= zeroset.zeroset_threshold(t):
            out.append(CheckResult(f"zeroset/diff-nonneg[{t},p={p}]", diffs_ok))
    return out


def oracle_suite(t: CanonicalType, lam: oracle.LambdaChoice | None = None,
                 mu: Fraction | None = None, sizes: tuple[int, ...] = (1, 2, 3),
                 full: bool | None = None) -> list[CheckResult]:
    out = []
    if lam is None:
        lam = oracle.LambdaChoice.default_for(t)
    if mu is None:
        mu = max(lam.rational_tube_points()) + 1
    if full is None:
        full = t.total <= 9

    tube_mods: list[tuple[TubeIndec, oracle.MatrixRep]] = []
    for i, mi in enumerate(t.m, start=1):
        for j in range(mi):
            tube_mods.append((TubeIndec(i, j, 1), oracle.build_exceptional_simple(t, lam, i, j)))
        for a in range(mi):
            tube_mods.append((TubeIndec(i, a, 2), oracle.build_length_two(t, lam, i, a)))
    homog = [(s, oracle.build_homogeneous(t, lam, mu, s)) for s in sizes]

    ok = all(oracle.check_relations(t, lam, rep) for _, rep in tube_mods) and \
        all(oracle.check_relations(t, lam, rep) for _, rep in homog)
    out.append(CheckResult(f"oracle/relations[{t}]", ok))

    ok, detail = True, ""
    for x, rep in tube_mods:
        if dim_vector(t, x) != rep.dim:
            ok, detail = False, f"dim mismatch for {x}"
    out.append(CheckResult(f"oracle/dims[{t}]", ok, detail))

    if full:
        ok, detail = True, ""
        for x, mrep in tube_mods:
            for y, nrep in tube_mods:
                want = hom_dim_tube(t, x, y)
                got = oracle.hom_dim_linear(t, lam, mrep, nrep)
                if got != want:
                    ok, detail = False, f"hom({x},{y}) = {got}, tube model {want}"
                    break
            if not ok:
                break
        out.append(CheckResult(f"oracle/hom-vs-tubes[{t}]", ok, detail))

        ok, detail = True, ""
        for s, hrep in homog:
            for x, xrep in tube_mods:
                if oracle.hom_dim_linear(t, lam, hrep, xrep) != 0 or \
                        oracle.hom_dim_linear(t, lam, xrep, hrep) != 0:
                    ok, detail = False, f"homogeneous size {s} not orthogonal to {x}"
            for s2, hrep2 in homog:
                if oracle.hom_dim_linear(t, lam, hrep, hrep2) != min(s, s2):
                    ok, detail = False, f"hom(J{s}, J{s2}) != min"
        out.append(CheckResult(f"oracle/homogeneous[{t}]", ok, detail))

        if len(tube_mods) >= 3:
            a, b, c = tube_mods[0][1], tube_mods[1][1], tube_mods[2][1]
            ds = oracle.direct_sum(a, b)
            ok = (ds.dim == a.dim + b.dim
                  and oracle.check_relations(t, lam, ds)
                  and oracle.hom_dim_linear(t, lam, ds, c)
                  == oracle.hom_dim_linear(t, lam, a, c) + oracle.hom_dim_linear(t, lam, b, c))
            out.append(CheckResult(f"oracle/direct-sum[{t}]", ok))
    else:
        ok = oracle.hom_dim_linear(t, lam, homog[0][1], homog[0][1]) == sizes[0]
        out.append(CheckResult(f"oracle/homogeneous-end[{t}]", ok))

    # exactness: a single perturbed entry must break the relations
    s, hrep = homog[0]
    bad = oracle.MatrixRep(t, hrep.dim, dict(hrep.mats))
    m11 = [list(r) for r in bad.mat(1, 1)]
    m11[0][0] += 1
    bad.mats[(1, 1)] = tuple(tuple(r) for r in m11)
    out.append(CheckResult(f"oracle/perturbation[{t}]",
                           not oracle.check_relations(t, lam, bad)))
    return out


def run_all(t: CanonicalType, pmax: int = 4, seed: int = 0,
            samples: int = 1000) -> list[CheckResult]:
    """Every suite applicable to the type, with seeded randomness."""
    rng = random.Random(seed)
    results = []
    results += forms_suite(t, rng, samples)
    results += cones_suite(t, rng, samples)
    results += geometry_suite(t, pmax)
    results += tubes_suite(t)
    results += zeroset_suite(t, min(pmax, zeroset.BRUTE_P_LIMIT))
    results += oracle_suite(t)
    return results
