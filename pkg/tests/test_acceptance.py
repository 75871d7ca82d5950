"""Acceptance criteria 1-12.

Each criterion is a list of named sub-checks run at its stated tolerance
(exact unless a float threshold is given) and timed against its budget.  One
PASS/FAIL line per criterion is printed at the end of the pytest session, or
directly when this file is run as a script.
"""
import random
import time

import numpy as np
import pytest

from okubo import lie
from okubo.affine import (
    INFINITY,
    LINE_AT_INFINITY,
    QUADRANGLE,
    UNIT_POINT,
    X_AXIS,
    Y_AXIS,
    AtInfinity,
    Finite,
    Sloped,
    incident,
    is_parallel,
    join,
    meet,
    parallel_through,
)
from okubo.algebra import (
    DIM,
    E,
    OkuboElement,
    involution,
    left_mult_matrix,
    norm,
    octonion_conj,
    octonion_mul,
    polar,
    random_element,
    right_mult_matrix,
    solve,
    star,
    tau,
)
from okubo.collineation import (
    automorphism_from_unitary,
    automorphism_triple,
    fixes_configuration,
    float_automorphism_residuals,
    moved_distance,
    random_special_unitary,
    spin_residual,
    triality_affine,
    triality_proj,
)
from okubo.linalg import rank
from okubo.matrix_model import from_matrix, matrix_star, to_matrix
from okubo.projective import (
    ProjectivePoint,
    drop_line,
    drop_point,
    incident_proj,
    lift_line,
    lift_point,
    lift_vector,
    polarity,
    proj_equal,
)
from okubo.verify import exact_automorphisms, lines_through, random_line, random_point, random_point_on

SEED = 12345
FLOAT_TOL = 1e-9
BASIS = [OkuboElement.basis(k) for k in range(DIM)]
BASIS_PAIRS = [(a, b) for a in BASIS for b in BASIS]

RESULTS: dict[int, str] = {}


def _pairs(rng, n):
    return [(random_element(rng), random_element(rng)) for _ in range(n)]


# --- criteria: each returns {sub-check name: bool} ---

def oracle_equivalence():
    rng = random.Random(SEED)
    oracle = lambda x, y: from_matrix(matrix_star(to_matrix(x), to_matrix(y)))
    return {
        "64 basis pairs": all(star(x, y) == oracle(x, y) for x, y in BASIS_PAIRS),
        "100 random pairs": all(star(x, y) == oracle(x, y) for x, y in _pairs(rng, 100)),
    }


def symmetric_composition():
    rng = random.Random(SEED + 2)
    comp = scl = assoc = True
    for x, y in _pairs(rng, 500):
        z = random_element(rng)
        xy = star(x, y)
        comp &= norm(xy) == norm(x) * norm(y)
        scl &= star(xy, x) == y.scale(norm(x)) and star(x, star(y, x)) == y.scale(norm(x))
        assoc &= polar(xy, z) == polar(x, star(y, z))
    return {"n(x*y)=n(x)n(y)": comp, "(x*y)*x=x*(y*x)=n(x)y": scl, "<x*y,z>=<x,y*z>": assoc}


def division():
    rng = random.Random(SEED + 3)
    ranks = subst = True
    for _ in range(100):
        a = random_element(rng, nonzero=True)
        b = random_element(rng)
        ranks &= rank(left_mult_matrix(a)) == DIM and rank(right_mult_matrix(a)) == DIM
        subst &= star(a, solve(a, b, "left")) == b and star(solve(a, b, "right"), a) == b
    return {"L_a, R_a rank 8": ranks, "solve substitutes back": subst}


def octonion_deformation():
    rng = random.Random(SEED + 4)
    unit = alt = comp = conj2 = conjn = True
    for x, y in _pairs(rng, 500):
        unit &= octonion_mul(E, x) == x and octonion_mul(x, E) == x
        xx = octonion_mul(x, x)
        alt &= octonion_mul(xx, y) == octonion_mul(x, octonion_mul(x, y))
        alt &= octonion_mul(octonion_mul(y, x), x) == octonion_mul(y, xx)
        comp &= norm(octonion_mul(x, y)) == norm(x) * norm(y)
        xbar = octonion_conj(x)
        conj2 &= octonion_conj(xbar) == x
        conjn &= octonion_mul(x, xbar) == E.scale(norm(x))
    return {
        "e two-sided unit": unit,
        "alternative both sides": alt,
        "norm composes": comp,
        "conj o conj = id": conj2,
        "x.conj(x) = n(x)e": conjn,
    }


def distinguished_automorphisms():
    rng = random.Random(SEED + 5)
    pairs = BASIS_PAIRS + _pairs(rng, 200)
    out = {}
    for name, f, order in (("iota", involution, 2), ("tau", tau, 3)):
        def power(x):
            for _ in range(order):
                x = f(x)
            return x

        out[f"{name}^{order} = id"] = all(power(x) == x for x, _ in pairs)
        out[f"{name} multiplicative"] = all(f(star(x, y)) == star(f(x), f(y)) for x, y in pairs)
        out[f"{name} norm-preserving"] = all(norm(f(x)) == norm(x) for x, _ in pairs)
    return out


def affine_axioms():
    rng = random.Random(SEED + 6)
    j_inc = uniq = m_inc = par = playfair = True
    for _ in range(200):
        p, q = random_point(rng), random_point(rng)
        if p != q:
            l = join(p, q)
            j_inc &= incident(p, l) and incident(q, l)
            uniq &= lines_through(p, q) == [l]
        l1 = Sloped(random_element(rng), random_element(rng))
        l2 = Sloped(l1.s if rng.random() < 0.4 else random_element(rng), random_element(rng))
        if l1 != l2:
            m = meet(l1, l2)
            m_inc &= incident(m, l1) and incident(m, l2)
            par &= (m == AtInfinity(l1.s)) == (l1.s == l2.s)
        l3, l4 = random_line(rng), random_line(rng)
        if l3 != l4:
            m = meet(l3, l4)
            m_inc &= incident(m, l3) and incident(m, l4)
        pt = Finite(random_element(rng), random_element(rng))
        pl = parallel_through(l1, pt)
        other = Sloped(l1.s, random_element(rng))
        playfair &= incident(pt, pl) and is_parallel(pl, l1) and incident(pt, other) == (other == pl)
    return {
        "join incidence": j_inc,
        "join uniqueness": uniq,
        "meet incidence": m_inc,
        "parallel iff meet at AtInfinity(s)": par,
        "Playfair": playfair,
    }


def affine_projective():
    rng = random.Random(SEED + 7)
    fixed_points = [Finite(random_element(rng), random_element(rng)), AtInfinity(random_element(rng)), INFINITY]
    fixed_lines = [Sloped(random_element(rng), random_element(rng)), Y_AXIS, LINE_AT_INFINITY]
    rt = all(drop_point(lift_point(p)) == p for p in fixed_points)
    rt &= all(drop_line(lift_line(l)) == l for l in fixed_lines)
    inc = True
    for k in range(200):
        l = random_line(rng)
        p = random_point_on(l, rng) if k % 2 else random_point(rng)
        rt &= drop_point(lift_point(p)) == p and drop_line(lift_line(l)) == l
        inc &= incident(p, l) == incident_proj(lift_point(p), lift_line(l))
    return {"lift/drop roundtrips (all kinds)": rt, "incident <=> beta = 0": inc}


def polarity_checks():
    rng = random.Random(SEED + 8)
    inv = ell = True
    for _ in range(200):
        P = lift_point(random_point(rng))
        inv &= polarity(polarity(P)) == P
        ell &= not incident_proj(P, polarity(P))
    return {"involutive": inv, "elliptic (no self-incident point)": ell}


def triality_checks():
    rng = random.Random(SEED + 9)
    order = commute = True
    for _ in range(200):
        p = random_point(rng)
        v = lift_vector(p)
        order &= triality_proj(triality_proj(triality_proj(v))) == v
        commute &= proj_equal(lift_vector(triality_affine(p)), triality_proj(v))
    chain = [LINE_AT_INFINITY, Y_AXIS, X_AXIS, LINE_AT_INFINITY]
    cycle = all(triality_proj(lift_line(a)) == lift_line(b) for a, b in zip(chain, chain[1:]))
    return {"order 3": order, "affine reading commutes with lift": commute, "[oo]->[0]->[0,0]->[oo]": cycle}


def lie_dimensions():
    lie._tri.cache_clear()
    lie._der.cache_clear()
    claimed = {("okubo", "tri"): 8, ("okubo", "der"): 8, ("octonion", "tri"): 28, ("octonion", "der"): 14}
    out = {}
    for (product, which), want in claimed.items():
        fn = lie.tri_dimension if which == "tri" else lie.der_dimension
        got = fn(product)[0]
        out[f"{which}({product}) = {want} (computed {got})"] = got == want
    return out


def float_path():
    nrng = np.random.default_rng(SEED)
    spin = max(spin_residual(lie.exp_triple(lie.random_tri_element(nrng), float(nrng.uniform(0.1, 1.5))))
               for _ in range(10))
    mult = nres = 0.0
    for _ in range(10):
        m, r = float_automorphism_residuals(automorphism_from_unitary(random_special_unitary(nrng)), nrng)
        mult, nres = max(mult, m), max(nres, r)
    return {
        f"exp_triple spin residual < 1e-9 ({spin:.1e})": spin < FLOAT_TOL,
        f"unitary automorphism residuals < 1e-9 ({max(mult, nres):.1e})": mult < FLOAT_TOL and nres < FLOAT_TOL,
    }


def fixed_point_dichotomy():
    autos = exact_automorphisms()
    movers = [name for name, A in autos.items() if not fixes_configuration(automorphism_triple(A), "quadrangle")]
    _, der = lie.der_dimension("okubo")
    tri_ok = all(lie.infinitesimally_fixes(lie.LieTriple(D, D, D), "triangle") for D in der)
    nrng = np.random.default_rng(SEED + 12)
    moved = min(moved_distance(lie.exp_triple(lie.random_tri_element(nrng), 0.37), UNIT_POINT) for _ in range(10))
    label = "every exact automorphism triple fixes the quadrangle"
    if movers:
        label += f" (moved by: {', '.join(movers)})"
    return {
        label: not movers,
        "der diagonal triples fix the triangle infinitesimally": tri_ok,
        f"exp_triple outputs move (e,e) (min distance {moved:.2f})": moved > FLOAT_TOL,
    }


CRITERIA = [
    (1, "oracle equivalence", oracle_equivalence, 1),
    (2, "symmetric composition", symmetric_composition, 5),
    (3, "division", division, 5),
    (4, "octonion deformation", octonion_deformation, 5),
    (5, "distinguished automorphisms", distinguished_automorphisms, 2),
    (6, "affine axioms", affine_axioms, 5),
    (7, "affine <-> projective", affine_projective, 5),
    (8, "polarity", polarity_checks, 2),
    (9, "triality", triality_checks, 2),
    (10, "Lie dimensions", lie_dimensions, 60),
    (11, "float path", float_path, 5),
    (12, "Spin/Aut fixed-point dichotomy", fixed_point_dichotomy, None),
]


def evaluate(number, name, fn, budget):
    t0 = time.perf_counter()
    checks = fn()
    elapsed = time.perf_counter() - t0
    failed = [k for k, ok in checks.items() if not ok]
    in_time = budget is None or elapsed < budget
    status = "PASS" if not failed and in_time else "FAIL"
    limit = f" < {budget}s" if budget is not None else ""
    line = f"AC{number:02d} {status} {name} [{elapsed:.2f}s{limit}]"
    if failed:
        line += " failed: " + "; ".join(failed)
    if not in_time:
        line += " over time budget"
    return status == "PASS", line, checks


@pytest.mark.parametrize("number,name,fn,budget", CRITERIA, ids=[f"AC{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, name, fn, budget):
    ok, line, checks = evaluate(number, name, fn, budget)
    RESULTS[number] = line
    print(line)
    assert ok, line


if __name__ == "__main__":
    for c in CRITERIA:
        print(evaluate(*c)[1])
