"""Seeded invariant battery, one suite per module.

Each suite returns ``{"passed": bool, "checks": {name: bool}, ...}``.  Only
the entries under ``checks`` gate ``passed``; ``diagnostics`` are reported for
information.  Float checks use ``tolerance``; everything else is exact.
"""
from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from . import lie
from .affine import (
    INFINITY,
    LINE_AT_INFINITY,
    AtInfinity,
    Finite,
    InfinityPoint,
    Sloped,
    Vertical,
    incident,
    is_parallel,
    join,
    meet,
    parallel_through,
)
from .algebra import (
    DIM,
    E,
    OkuboElement,
    inverse,
    involution,
    left_mult_matrix,
    norm,
    octonion_conj,
    octonion_mul,
    polar,
    random_element,
    random_scalar,
    right_mult_matrix,
    solve,
    star,
    tau,
)
from .collineation import (
    DEFAULT_TOLERANCE,
    LinearMap,
    apply_triple_collineation,
    automorphism_from_unitary,
    automorphism_triple,
    float_automorphism_residuals,
    is_spin_triple,
    random_special_unitary,
    spin_residual,
    tau_map,
    triality_affine,
    triality_proj,
)
from .linalg import rank
from .matrix_model import matrix_norm, matrix_star, to_matrix, from_matrix
from .projective import (
    ProjectivePoint,
    drop_line,
    drop_point,
    incident_proj,
    is_veronese,
    lift_line,
    lift_line_vector,
    lift_point,
    lift_vector,
    polarity,
    proj_equal,
    quadratic_form,
)
from .scalar import ONE, FieldScalar, format_scalar, parse_scalar

SUITES = (
    "scalar",
    "matrix-oracle",
    "okubo-core",
    "plane-affine",
    "plane-projective",
    "collineation",
    "lie-solver",
)

# dimensions claimed for the triality and derivation algebras
CLAIMED_DIMENSIONS = {
    ("okubo", "tri"): 8,
    ("okubo", "der"): 8,
    ("octonion", "tri"): 28,
    ("octonion", "der"): 14,
}


# random configurations ---------------------------------------------------------

def random_point(rng: random.Random):
    r = rng.random()
    if r < 0.7:
        return Finite(random_element(rng), random_element(rng))
    if r < 0.9:
        return AtInfinity(random_element(rng))
    return INFINITY


def random_line(rng: random.Random):
    r = rng.random()
    if r < 0.7:
        return Sloped(random_element(rng), random_element(rng))
    if r < 0.9:
        return Vertical(random_element(rng))
    return LINE_AT_INFINITY


def random_point_on(l, rng: random.Random):
    """A random point incident to ``l``."""
    if isinstance(l, Sloped):
        if rng.random() < 0.8:
            x = random_element(rng)
            return Finite(x, star(l.s, x) + l.t)
        return AtInfinity(l.s)
    if isinstance(l, Vertical):
        if rng.random() < 0.8:
            return Finite(l.c, random_element(rng))
        return INFINITY
    return AtInfinity(random_element(rng)) if rng.random() < 0.8 else INFINITY


def exact_automorphisms() -> dict[str, LinearMap]:
    """Automorphisms available exactly: identity, tau, and a few unitary conjugations."""
    from .scalar import ComplexScalar

    half = Fraction(1, 2)
    omega = ComplexScalar(FieldScalar(-half), FieldScalar(0, half))  # primitive cube root of unity
    perm = [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
    return {
        "identity": LinearMap.identity(),
        "tau": tau_map(),
        "diag(1,w,w^2)": automorphism_from_unitary([[1, 0, 0], [0, omega, 0], [0, 0, omega * omega]]),
        "cyclic permutation": automorphism_from_unitary(perm),
    }


def _suite(checks: dict, **extra) -> dict:
    out = {"passed": all(checks.values()), "checks": checks}
    out.update(extra)
    return out


# suites -------------------------------------------------------------------------

def suite_scalar(n: int, seed: int, tolerance: float) -> dict:
    rng = random.Random(seed)
    assoc = distrib = comm = inv = conj = text = True
    for _ in range(n):
        x, y, z = random_scalar(rng), random_scalar(rng), random_scalar(rng)
        assoc &= (x + y) + z == x + (y + z) and (x * y) * z == x * (y * z)
        comm &= x + y == y + x and x * y == y * x
        distrib &= x * (y + z) == x * y + x * z
        if not x.is_zero():
            inv &= x * x.inverse() == ONE
        conj &= (x * y).conjugate() == x.conjugate() * y.conjugate()
        text &= parse_scalar(format_scalar(x)) == x
    return _suite({
        "associativity": assoc,
        "commutativity": comm,
        "distributivity": distrib,
        "inverses": inv,
        "conjugation_multiplicative": conj,
        "text_roundtrip": text,
    })


def suite_matrix(n: int, seed: int, tolerance: float) -> dict:
    rng = random.Random(seed)
    basis = [OkuboElement.basis(k) for k in range(DIM)]
    pairs = [(a, b) for a in basis for b in basis]
    pairs += [(random_element(rng), random_element(rng)) for _ in range(n)]
    closure = comp = flex = scl = posdef = True
    for x, y in pairs:
        X, Y = to_matrix(x), to_matrix(y)
        try:
            XY = matrix_star(X, Y)
        except ValueError:
            closure = False
            continue
        comp &= matrix_norm(XY) == matrix_norm(X) * matrix_norm(Y)
        left = matrix_star(XY, X)
        flex &= left == matrix_star(X, matrix_star(Y, X))
        scl &= left == Y.scale(matrix_norm(X))
        if not x.is_zero():
            posdef &= matrix_norm(X).sign() > 0
    return _suite({
        "closure": closure,
        "composition": comp,
        "flexibility": flex,
        "symmetric_composition": scl,
        "positive_definite_norm": posdef,
    })


def suite_core(n: int, seed: int, tolerance: float) -> dict:
    rng = random.Random(seed)
    basis = [OkuboElement.basis(k) for k in range(DIM)]
    oracle = all(star(a, b) == from_matrix(matrix_star(to_matrix(a), to_matrix(b))) for a in basis for b in basis)
    comp = flex = assoc = div = solv = unit = alt = ocomp = conj = aut = True
    for i in range(n):
        x, y, z = random_element(rng), random_element(rng), random_element(rng)
        xy = star(x, y)
        if i < max(100, n // 2):
            oracle &= xy == from_matrix(matrix_star(to_matrix(x), to_matrix(y)))
        comp &= norm(xy) == norm(x) * norm(y)
        left = star(xy, x)
        flex &= left == star(x, star(y, x)) and left == y.scale(norm(x))
        assoc &= polar(xy, z) == polar(x, star(y, z))
        if not x.is_zero():
            div &= rank(left_mult_matrix(x)) == DIM and rank(right_mult_matrix(x)) == DIM
            solv &= star(x, solve(x, y, "left")) == y and star(solve(x, y, "right"), x) == y
            solv &= star(x, inverse(x, "left")) == E and star(inverse(x, "right"), x) == E
        # deformed product
        unit &= octonion_mul(E, x) == x and octonion_mul(x, E) == x
        xx = octonion_mul(x, x)
        alt &= octonion_mul(xx, y) == octonion_mul(x, octonion_mul(x, y))
        alt &= octonion_mul(octonion_mul(y, x), x) == octonion_mul(y, xx)
        ocomp &= norm(octonion_mul(x, y)) == norm(x) * norm(y)
        conj &= octonion_conj(octonion_conj(x)) == x and octonion_mul(x, octonion_conj(x)) == E.scale(norm(x))
        for f in (involution, tau):
            aut &= norm(f(x)) == norm(x) and polar(f(x), f(y)) == polar(x, y)
    return _suite({
        "oracle_equivalence": oracle,
        "composition": comp,
        "flexible_symmetric_composition": flex,
        "polar_associativity": assoc,
        "division_rank": div,
        "solve_substitution": solv,
        "deformed_unital": unit,
        "deformed_alternative": alt,
        "deformed_composition": ocomp,
        "deformed_conjugation": conj,
        "involution_tau_isometries": aut,
    })


def lines_through(p, q) -> list:
    """All lines incident to distinct ``p`` and ``q``, by case analysis per family."""
    out = []
    # line at infinity
    if not isinstance(p, Finite) and not isinstance(q, Finite):
        out.append(LINE_AT_INFINITY)
    # verticals: a finite point pins c, (oo) lies on all of them
    cs = {pt.x for pt in (p, q) if isinstance(pt, Finite)}
    slopes_only = [pt for pt in (p, q) if isinstance(pt, AtInfinity)]
    if not slopes_only and len(cs) == 1 and (isinstance(p, Finite) or isinstance(q, Finite)):
        out.append(Vertical(next(iter(cs))))
    # sloped lines miss (oo); a slope point pins s
    if not isinstance(p, InfinityPoint) and not isinstance(q, InfinityPoint):
        finite = [pt for pt in (p, q) if isinstance(pt, Finite)]
        if len(finite) == 1 and slopes_only:
            s = slopes_only[0].s
            f = finite[0]
            out.append(Sloped(s, f.y - star(s, f.x)))
        elif len(finite) == 2:
            dx, dy = p.x - q.x, p.y - q.y
            if not dx.is_zero():
                # s*dx = dy has exactly one solution iff R_dx is invertible
                if rank(right_mult_matrix(dx)) == DIM:
                    s = solve(dx, dy, "right")
                    if star(s, dx) == dy:
                        out.append(Sloped(s, p.y - star(s, p.x)))
                else:
                    out.append(None)
    return out


def suite_affine(n: int, seed: int, tolerance: float) -> dict:
    rng = random.Random(seed)
    join_ok = unique = meet_ok = par = playfair = dual = True
    for _ in range(n):
        p, q = random_point(rng), random_point(rng)
        if p != q:
            l = join(p, q)
            join_ok &= incident(p, l) and incident(q, l)
            unique &= lines_through(p, q) == [l]
        l1, l2 = random_line(rng), random_line(rng)
        if rng.random() < 0.3 and isinstance(l1, Sloped):
            l2 = Sloped(l1.s, random_element(rng))
        if l1 != l2:
            m = meet(l1, l2)
            meet_ok &= incident(m, l1) and incident(m, l2)
            if isinstance(l1, Sloped) and isinstance(l2, Sloped):
                par &= isinstance(m, AtInfinity) == (l1.s == l2.s)
                if l1.s == l2.s:
                    par &= m == AtInfinity(l1.s)
        # Playfair
        pt = Finite(random_element(rng), random_element(rng))
        base = Sloped(random_element(rng), random_element(rng)) if rng.random() < 0.8 else Vertical(random_element(rng))
        pl = parallel_through(base, pt)
        playfair &= incident(pt, pl) and is_parallel(pl, base)
        if isinstance(base, Sloped):
            other = Sloped(base.s, random_element(rng))
            playfair &= incident(pt, other) == (other == pl)
            s = random_element(rng)
            dual &= join(AtInfinity(s), pt).s == s
    return _suite({
        "join_incidence": join_ok,
        "join_uniqueness": unique,
        "meet_incidence": meet_ok,
        "parallels_meet_at_infinity": par,
        "playfair": playfair,
        "completion_duality": dual,
    })


def suite_projective(n: int, seed: int, tolerance: float) -> dict:
    rng = random.Random(seed)
    scaling = roundtrip = transport = duals = elliptic = pol = True
    for k in range(n):
        p = random_point(rng)
        l = random_line(rng)
        if k % 2 == 0:
            p = random_point_on(l, rng)
        v = lift_vector(p)
        c = random_scalar(rng)
        if not c.is_zero():
            scaling &= is_veronese(v.scale(c))
            roundtrip &= drop_point(ProjectivePoint(v.scale(c))) == p
        roundtrip &= drop_point(lift_point(p)) == p and drop_line(lift_line(l)) == l
        transport &= incident(p, l) == incident_proj(lift_point(p), lift_line(l))
        w = lift_line_vector(l)
        duals &= is_veronese(w)
        elliptic &= is_veronese(v) and quadratic_form(v).sign() > 0 and quadratic_form(w).sign() > 0
        P = lift_point(p)
        pol &= polarity(polarity(P)) == P and not incident_proj(P, polarity(P))
    return _suite({
        "scaling_closure": scaling,
        "lift_drop_roundtrip": roundtrip,
        "incidence_transport": transport,
        "line_duals_veronese": duals,
        "ellipticity": elliptic,
        "polarity_involutive_elliptic": pol,
    })


def _collinear(a, b, c) -> bool:
    if a == b or a == c or b == c:
        return True
    return incident(c, join(a, b))


def suite_collineation(n: int, seed: int, tolerance: float) -> dict:
    rng = random.Random(seed)
    nrng = np.random.default_rng(seed)
    preserve = incidence = commute = order = True
    for k in range(n):
        p, l = random_point(rng), random_line(rng)
        if k % 2 == 0:
            p = random_point_on(l, rng)
        P, L = lift_point(p), lift_line(l)
        tP, tL = triality_proj(P), triality_proj(L)
        preserve &= is_veronese(tP.rep) and is_veronese(tL.dual)
        incidence &= incident_proj(P, L) == incident_proj(tP, tL)
        commute &= proj_equal(lift_vector(triality_affine(p)), triality_proj(P.rep))
        order &= triality_proj(triality_proj(tP.rep)) == P.rep
    # [oo] -> [0] -> [0,0] -> [oo]
    from .affine import X_AXIS, Y_AXIS

    chain = [LINE_AT_INFINITY, Y_AXIS, X_AXIS, LINE_AT_INFINITY]
    cycle = all(
        triality_proj(lift_line(a)) == lift_line(b) for a, b in zip(chain, chain[1:])
    )
    autos = exact_automorphisms()
    spin = all(is_spin_triple(automorphism_triple(A)) for A in autos.values())
    collinear = True
    for A in autos.values():
        T = automorphism_triple(A)
        for _ in range(max(1, n // 20)):
            l = random_line(rng)
            pts = [random_point_on(l, rng) for _ in range(3)]
            imgs = [apply_triple_collineation(T, q, check=False) for q in pts]
            collinear &= _collinear(*imgs)
    mult_res = norm_res = 0.0
    for _ in range(10):
        M = automorphism_from_unitary(random_special_unitary(nrng))
        m, r = float_automorphism_residuals(M, nrng)
        mult_res, norm_res = max(mult_res, m), max(norm_res, r)
    return _suite(
        {
            "triality_preserves_veronese": preserve,
            "triality_preserves_incidence": incidence,
            "triality_affine_commutes_with_lift": commute,
            "triality_order_three": order,
            "triality_line_cycle": cycle,
            "automorphism_triples_are_spin": spin,
            "collinearity_preserved": collinear,
            "float_unitary_automorphisms": mult_res < tolerance and norm_res < tolerance,
        },
        residuals={"multiplicativity": mult_res, "norm": norm_res},
    )


def suite_lie(n: int, seed: int, tolerance: float) -> dict:
    rng = random.Random(seed)
    nrng = np.random.default_rng(seed)
    dims = {}
    checks = {}
    for (product, which), claimed in CLAIMED_DIMENSIONS.items():
        dim = (lie.tri_dimension if which == "tri" else lie.der_dimension)(product)[0]
        dims[f"{which}({product})"] = {"computed": dim, "claimed": claimed}
        checks[f"{which}_{product}_dimension"] = dim == claimed
    _, der = lie.der_dimension("okubo")
    _, tri = lie.tri_dimension("okubo")
    tri_vecs = [L.params() for L in tri]
    checks["der_embeds_diagonally_in_tri"] = all(
        lie.tri_constraint_holds(lie.LieTriple(D, D, D))
        and lie.span_contains(tri_vecs, lie.LieTriple(D, D, D).params())
        for D in der
    )
    checks["der_bracket_closed"] = lie.bracket_closed(der)
    pairs = [(random_element(rng), random_element(rng)) for _ in range(max(1, min(n, 20)))]
    checks["derivation_property"] = all(lie.is_derivation(D, pairs) for D in der)
    checks["tri_basis_membership"] = all(lie.is_tri_member(L, pairs) for L in tri)
    worst = 0.0
    for _ in range(10):
        T = lie.exp_triple(lie.random_tri_element(nrng), float(nrng.uniform(0.1, 1.0)))
        worst = max(worst, spin_residual(T))
    checks["exp_triple_spin_residual"] = worst < tolerance
    killing = lie.is_negative_definite(lie.killing_form(der))
    return _suite(
        checks,
        dimensions=dims,
        residuals={"exp_triple_spin": worst},
        diagnostics={"der_killing_form_negative_definite": killing},
    )


_RUNNERS = {
    "scalar": suite_scalar,
    "matrix-oracle": suite_matrix,
    "okubo-core": suite_core,
    "plane-affine": suite_affine,
    "plane-projective": suite_projective,
    "collineation": suite_collineation,
    "lie-solver": suite_lie,
}


def run_suite(name: str, n: int, seed: int, tolerance: float = DEFAULT_TOLERANCE) -> dict:
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITES} or 'all'")
    return _RUNNERS[name](n, seed, tolerance)


def run(suite: str = "all", n: int = 200, seed: int = 0, tolerance: float = DEFAULT_TOLERANCE) -> dict:
    names = SUITES if suite == "all" else (suite,)
    results = {name: run_suite(name, n, seed, tolerance) for name in names}
    return {"passed": all(r["passed"] for r in results.values()), "suites": results}
