"""Exact verification of the q-Painlevé relations satisfied by the Padé data.

Every check produces a :class:`CheckReport` whose status is ``pass`` iff
``lhs == rhs`` as exact rationals. Relations whose reference form is known to be
defective are reported with status ``skip`` and a witness that carries
the empirically required constant; the corrected relation is checked
separately and must pass.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .exact import Poly, det_exact, frac_str
from .lax import (
    D5_T,
    E6_T,
    E6_T1,
    E6_T2,
    E6_T3,
    E6_T4,
    LaxData,
    extract,
    extract_f,
    lin,
)
from .lax import DIRECTIONS, DegenerateLax, DivisibilityFailure, lax_residual_check
from .pade import (
    IdenticallyZero,
    NormalizationFailure,
    entry_prefactor,
    pade_approx_series,
    pade_det_interpolation,
    pade_det_specialized,
    solve_e6,
)
from .qkernel import (
    Inadmissible,
    ParamSet,
    f_prime_node,
    phi32,
    poch1,
    qpoch,
    taylor_Y_d5,
    taylor_Y_d5_float,
    y_nodes,
)


fmt = frac_str


@dataclass
class CheckReport:
    name: str
    params: Dict[str, str]
    status: str
    lhs: str = ""
    rhs: str = ""
    witness: Dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_record(self) -> dict:
        return {
            "check": self.name,
            "params": dict(self.params),
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "witness": dict(self.witness),
        }


def compare(name: str, p: ParamSet, lhs: Fraction, rhs: Fraction, **witness) -> CheckReport:
    return CheckReport(
        name,
        p.as_dict(),
        "pass" if lhs == rhs else "fail",
        fmt(lhs),
        fmt(rhs),
        {k: str(v) for k, v in witness.items()},
    )


def skipped(name: str, p: ParamSet, reason: str, **witness) -> CheckReport:
    w = {"reason": reason}
    w.update({k: str(v) for k, v in witness.items()})
    return CheckReport(name, p.as_dict(), "skip", witness=w)


P1 = poch1


def _listed(values) -> str:
    return ",".join(fmt(v) for v in values)


def _zeros_report(name: str, params: Dict[str, str], residuals, **witness) -> CheckReport:
    residuals = list(residuals)
    return CheckReport(
        name,
        params,
        "pass" if all(r == 0 for r in residuals) else "fail",
        _listed(residuals),
        _listed([0] * len(residuals)),
        {k: str(v) for k, v in witness.items()},
    )


# ---------------------------------------------------------------------------
# q-kernel identities
# ---------------------------------------------------------------------------


def verify_kernel(q, n_max: int = 6) -> List[CheckReport]:
    """Finite q-Pochhammer identities and the closed form of F'(q^s), 0 <= s <= N <= n_max."""
    q = Fraction(q)
    out: List[CheckReport] = []
    for N in range(n_max + 1):
        for s in range(N + 1):
            params = {"q": fmt(q), "N": str(N), "s": str(s)}
            sign_pow = (-1) ** s * q ** (s * (s - 1) // 2 - N * s)
            out.append(
                CheckReport(
                    "kernel_qN_relation",
                    params,
                    "pass" if qpoch(q ** (-N), s, q) == sign_pow * qpoch(q ** (N - s + 1), s, q) else "fail",
                    fmt(qpoch(q ** (-N), s, q)),
                    fmt(sign_pow * qpoch(q ** (N - s + 1), s, q)),
                )
            )
            lhs = qpoch(q, N - s, q) * qpoch(q ** (-N), s, q)
            rhs = sign_pow * qpoch(q, N, q)
            out.append(CheckReport("kernel_q_relation", params, "pass" if lhs == rhs else "fail", fmt(lhs), fmt(rhs)))
            direct = Fraction(1)
            for i in range(N + 1):
                if i != s:
                    direct *= q**s - q**i
            closed = f_prime_node(s, N, q)
            out.append(
                CheckReport("kernel_f_prime", params, "pass" if closed == direct else "fail", fmt(closed), fmt(direct))
            )
    return out


# ---------------------------------------------------------------------------
# Padé problems
# ---------------------------------------------------------------------------


def verify_pade(p: ParamSet) -> List[CheckReport]:
    """Residuals of both Padé problems and proportionality of the determinant routes."""
    N, params = p.N, p.as_dict()
    out: List[CheckReport] = []

    series = taylor_Y_d5(p, N)
    d5 = pade_approx_series(series, p.m, p.n)
    prod = Poly(series) * d5.Q - d5.P
    out.append(_zeros_report("pade_d5_series_residual", params, [prod[k] for k in range(N + 1)]))

    xs = [p.q**i for i in range(N + 1)]
    ys = y_nodes(p)
    e6 = solve_e6(p)
    out.append(_zeros_report("pade_e6_node_residual", params, [e6.P(x) - y * e6.Q(x) for x, y in zip(xs, ys)]))

    routes = (
        ("pade_det_specialized_vs_solver", lambda: pade_det_specialized(p)),
        ("pade_det_general_vs_solver", lambda: pade_det_interpolation(xs, ys, p.m, p.n)),
    )
    for name, route in routes:
        try:
            det = route()
        except (IdenticallyZero, NormalizationFailure) as exc:
            out.append(CheckReport(name, params, "fail", witness={"error": str(exc)}))
            continue
        cross = det.cross(e6)
        ok = cross.is_zero() and not det.Q.is_zero()
        out.append(CheckReport(name, params, "pass" if ok else "fail", repr(cross), "0"))
    return out


# ---------------------------------------------------------------------------
# Lax pairs
# ---------------------------------------------------------------------------


def verify_lax(p: ParamSet) -> List[CheckReport]:
    """Forced divisibilities and L2/L3 residuals for D5 and every admissible E6 direction."""
    params = p.as_dict()
    out: List[CheckReport] = []
    for tag, d in DIRECTIONS.items():
        try:
            L = extract(p, d)
        except Inadmissible as exc:
            out.append(skipped(f"lax_divisibility_{tag}", p, str(exc)))
            continue
        except DivisibilityFailure as exc:
            out.append(CheckReport(f"lax_divisibility_{tag}", params, "fail", witness={"error": str(exc)}))
            continue
        except DegenerateLax as exc:
            out.append(skipped(f"lax_divisibility_{tag}", p, f"degenerate sample: {exc}"))
            continue
        out.append(CheckReport(f"lax_divisibility_{tag}", params, "pass"))
        rep = lax_residual_check(p, d, L)
        for key, ok in rep.checks.items():
            out.append(
                CheckReport(
                    f"lax_{key}_{tag}",
                    params,
                    "pass" if ok else "fail",
                    "0" if ok else "nonzero",
                    "0",
                    dict(rep.witness),
                )
            )
    return out


def lax_ready(p: ParamSet) -> None:
    """Raise DegenerateLax if some admissible direction degenerates at p.

    Used as a resampling hook; divisibility failures are left for the checks
    to report.
    """
    for d in DIRECTIONS.values():
        try:
            extract(p, d)
        except (Inadmissible, DivisibilityFailure):
            pass


# ---------------------------------------------------------------------------
# Floating-point sanity (not exact)
# ---------------------------------------------------------------------------

FLOAT_TOLERANCE = 1e-8


def float_sanity(x=Fraction(1, 10), factors: int = 100) -> CheckReport:
    """|P/Q - Y| at x for q = 1/2, m = n = 2, with Y from truncated products."""
    p = ParamSet(Fraction(1, 2), Fraction(1, 3), Fraction(2, 5), Fraction(3, 7), Fraction(5, 11), m=2, n=2).check()
    pair = pade_approx_series(taylor_Y_d5(p, p.N), p.m, p.n)
    approx = float(pair.P(x) / pair.Q(x))
    exact_ish = taylor_Y_d5_float(p, float(x), factors)
    err = abs(approx - exact_ish)
    return CheckReport(
        "float_sanity_d5",
        p.as_dict(),
        "pass" if err <= FLOAT_TOLERANCE else "fail",
        repr(err),
        repr(FLOAT_TOLERANCE),
        {"kind": "floating-point, non-exact", "tolerance": repr(FLOAT_TOLERANCE), "x": fmt(x), "factors": str(factors)},
    )


# ---------------------------------------------------------------------------
# D5: q-PVI
# ---------------------------------------------------------------------------


def verify_qp6(p: ParamSet) -> List[CheckReport]:
    """Both evolution equations plus the two leading/trailing-order identities."""
    q, (a1, a2, a3, a4), N, m, n = p.q, p.a, p.N, p.m, p.n
    L = extract(p, D5_T)
    Lb = extract(D5_T.apply(p), D5_T)
    f, g, fb, gb = L.f, L.g, Lb.f, Lb.g
    c1c2 = L.c1 * L.c2
    top = a1 * a3 * P1(a4 * g / (a1 * q**m), a2 * g / (a3 * q**n))
    out = [
        compare(
            "qp6g",
            p,
            g * gb * P1(q * a2 / fb, q * a4 / fb),
            q ** (N + 1) * P1(a1 / fb, a3 / fb),
        ),
        compare("qp6f", p, f * fb * P1(g, g / q ** (N + 1)), top),
        compare("qp6f1", p, c1c2 * f * fb, q ** (N + 1) * top),
        compare("qp6f2", p, c1c2, q ** (N + 1) * P1(g, g / q ** (N + 1))),
        compare("qp6_fbar_consistency", p, L.fbar, fb),
    ]
    return out


# ---------------------------------------------------------------------------
# E6 along T: m -> m-1, a2 -> q a2
# ---------------------------------------------------------------------------


def verify_e6(p: ParamSet) -> List[CheckReport]:
    if p.m < 1:
        raise Inadmissible("the E6 direction T needs m >= 1")
    q, (a1, a2, a3, a4), N, m, n = p.q, p.a, p.N, p.m, p.n
    L = extract(p, E6_T)
    # fresh Padé problem at T^-1(p) for g-underbar
    Lu = extract(E6_T.inverse(p), E6_T)
    f, g, fb, gu = L.f, L.g, L.fbar, Lu.g
    c1c2 = L.c1 * L.c2
    side = a2 * P1(a1 * q**m * g, a3 * a4 * q**n * g / a2)
    gside = P1(a1 * g, q * g, a3 * g, a4 * g)
    return [
        compare(
            "e6g",
            p,
            P1(1 / (f * g), 1 / (f * gu)) * P1(a2 / f, 1 / (q**N * f)),
            P1(a1 / f, q / f, a3 / f, a4 / f),
        ),
        compare("e6f", p, P1(f * g, fb * g) * side, q ** (N - 1) * gside * f * fb),
        compare("e6c1c2", p, c1c2 * q * g**2 * P1(f * g, fb * g), gside),
        compare("e6c1c22", p, c1c2 * q**N * g**2 * f * fb, side),
        compare("e6_c_equals_cprime", p, L.c, L.cprime),
    ]


# ---------------------------------------------------------------------------
# Values at special points and the determinant form of f and g
# ---------------------------------------------------------------------------


def phi_det(p: ParamSet, upper: Sequence[Fraction], lower: Sequence[Fraction], size: int, entry=Fraction(1)) -> Fraction:
    """``det(entry * 3phi2(upper; lower; q^(i+j+1)))_{i,j<size}``, terminating at order N."""
    q = p.q
    return det_exact(
        [[entry * phi32(upper, lower, q ** (i + j + 1), p.N, q) for j in range(size)] for i in range(size)]
    )


def special_point_values(p: ParamSet) -> Dict[str, Fraction]:
    """The eight special values as determinants of terminating 3phi2 sums.

    Entries carry the same finite prefactor ``1/(q)_N`` as the specialised
    determinant route, so these equal that route's P and Q exactly.
    """
    q, (a1, a2, a3, a4), N, m, n = p.q, p.a, p.N, p.m, p.n
    k = entry_prefactor(p)
    qN = q ** (-N)
    return {
        "P(1/a1)": qpoch(a1, N + 1, q) / a1**m * phi_det(p, (a3, a4, qN), (q * a1, a2), n + 1, k / (1 - a1)),
        "P(1/a2)": qpoch(a2, N + 1, q) / a2**m * phi_det(p, (a3, a4, qN), (a1, q * a2), n + 1, k / (1 - a2)),
        "P(q/a3)": (q / a3) ** m
        * qpoch(a3 / q, N + 1, q)
        * phi_det(p, (a3 / q, a4, qN), (a1, a2), n + 1, k / (1 - a3 / q)),
        "P(q/a4)": (q / a4) ** m
        * qpoch(a4 / q, N + 1, q)
        * phi_det(p, (a3, a4 / q, qN), (a1, a2), n + 1, k / (1 - a4 / q)),
        "Q(q/a1)": (q / a1) ** n * phi_det(p, (a3, a4, qN), (a1 / q, a2), n, (1 - a1 / q) * k),
        "Q(q/a2)": (q / a2) ** n * phi_det(p, (a3, a4, qN), (a1, a2 / q), n, (1 - a2 / q) * k),
        "Q(1/a3)": (1 / a3) ** n * phi_det(p, (q * a3, a4, qN), (a1, a2), n, (1 - a3) * k),
        "Q(1/a4)": (1 / a4) ** n * phi_det(p, (a3, q * a4, qN), (a1, a2), n, (1 - a4) * k),
    }


def _points(p: ParamSet) -> Dict[str, Fraction]:
    q, (a1, a2, a3, a4) = p.q, p.a
    return {
        "P(1/a1)": 1 / a1,
        "P(1/a2)": 1 / a2,
        "P(q/a3)": q / a3,
        "P(q/a4)": q / a4,
        "Q(q/a1)": q / a1,
        "Q(q/a2)": q / a2,
        "Q(1/a3)": 1 / a3,
        "Q(1/a4)": 1 / a4,
    }


def special_values(p: ParamSet) -> List[CheckReport]:
    """Compare the 3phi2 determinants with P, Q at the eight special points.

    Two comparisons: exact equality with the specialised determinant route,
    and prefactor-free cross ratios against the normalised solver route
    (one common constant relates all eight).
    """
    try:
        closed = special_point_values(p)
    except ZeroDivisionError as exc:
        return [skipped("qhge", p, f"evaluation point collides with a pole: {exc}")]
    det = pade_det_specialized(p)
    sol = solve_e6(p)
    pts = _points(p)
    out = []
    direct = {}
    for key, x in pts.items():
        det_val = (det.P if key[0] == "P" else det.Q)(x)
        direct[key] = (sol.P if key[0] == "P" else sol.Q)(x)
        out.append(compare(f"qhge_det_{key}", p, closed[key], det_val, point=fmt(x)))
    ref = next((k for k in pts if closed[k] != 0 and direct[k] != 0), None)
    if ref is None:
        out.append(skipped("qhge_ratio", p, "every special value vanishes"))
        return out
    for key in pts:
        if key == ref:
            continue
        out.append(
            compare(
                f"qhge_ratio_{key}:{ref}",
                p,
                closed[key] * direct[ref],
                closed[ref] * direct[key],
            )
        )
    return out


def _H(p: ParamSet, x: Fraction) -> Fraction:
    q = p.q
    return Poly.product(lin(q ** (-i)) for i in range(p.N))(x)


def constant_A(p: ParamSet) -> Fraction:
    q, (a1, a2, a3, a4), N, n = p.q, p.a, p.N, p.n
    num = P1(a3 / a1, a4 / a1, *[a2] * (n + 1), *[a1 / q] * n, q**N * a1)
    den = P1(a3 / a2, a4 / a2, *[a1] * (n + 1), *[a2 / q] * n, q**N * a2)
    return a1 / a2 * num / den


def constant_B_reference(p: ParamSet) -> Fraction:
    q, (a1, _, a3, a4), n = p.q, p.a, p.n
    num = P1(a1 / a3, *[a4 / q] * (n + 1), *[a3] * n, a3 / q)
    den = P1(a1 / a4, *[a3 / q] * (n + 1), *[a4] * n, a4 / q)
    return a4 / a3 * num / den


def constant_B(p: ParamSet) -> Fraction:
    """Constant in front of the g-ratio once Qbar replaces Q in the y(x)-coefficient."""
    q, (a1, _, a3, a4), n = p.q, p.a, p.n
    num = P1(a1 / a3, *[a4 / q] * n, *[a3] * n)
    den = P1(a1 / a4, *[a3 / q] * n, *[a4] * n)
    return a3 / a4 * num / den


def verify_det_solution(p: ParamSet) -> List[CheckReport]:
    """f and g from values of P, Q at special points, in two layers.

    Layer i substitutes the special points into the cleared coefficient
    identities and uses the computed P, Q. Layer ii compares with the closed
    determinant forms and their constants.
    """
    q, (a1, a2, a3, a4), N, m, n = p.q, p.a, p.N, p.m, p.n
    qN = q ** (-N)
    pair = solve_e6(p)
    P, Q = pair.P, pair.Q
    _, f = extract_f(p, pair, d5=False)
    out: List[CheckReport] = []

    # layer i, f side
    lhs = P1(f / a1) * P1(a3 / a2, a4 / a2) * P(1 / a2) * Q(q / a2)
    rhs = (a1 / a2) ** (N + 1) * P1(a3 / a1, a4 / a1) * P(1 / a1) * Q(q / a1) * P1(f / a2)
    for i in range(N):
        lhs *= P1(q**i * a1)
        rhs *= P1(q**i * a2)
    out.append(compare("fg_layer_i_f", p, lhs, rhs))

    # layer ii, f side
    try:
        dn = phi_det(p, (a3, a4, qN), (a1, q * a2), n + 1) * phi_det(p, (a3, a4, qN), (a1, a2 / q), n)
        dd = phi_det(p, (a3, a4, qN), (q * a1, a2), n + 1) * phi_det(p, (a3, a4, qN), (a1 / q, a2), n)
        out.append(
            compare("fc_reference", p, P1(f / a1) * dn, constant_A(p) * dd * P1(f / a2), A=fmt(constant_A(p)))
        )
    except ZeroDivisionError as exc:
        out.append(skipped("fc_reference", p, f"3phi2 pole: {exc}"))

    if m < 1:
        out.append(skipped("fg_layer_i_g", p, "g is defined along T, which needs m >= 1"))
        return out

    pb = E6_T.apply(p)
    bar = solve_e6(pb)
    g = extract(p, E6_T, pair, bar).g
    Qb = bar.Q
    # (g a3)_1/(g a4)_1 = (a3/a4) * X, X from C'(1/a3)/C'(1/a4)
    lhs = P1(g * a3) * P1(a1 / a4) * P(q / a4) * Qb(1 / a4) * _H(p, 1 / a3)
    rhs = a3 / a4 * P1(a1 / a3) * P(q / a3) * Qb(1 / a3) * _H(p, 1 / a4) * P1(g * a4)
    out.append(compare("fg_layer_i_g", p, lhs, rhs))

    try:
        qNb = q ** (-pb.N)
        # reference form: unshifted Q determinants
        pn = phi_det(p, (a3 / q, a4, qN), (a1, a2), n + 1) * phi_det(p, (q * a3, a4, qN), (a1, a2), n)
        pd = phi_det(p, (a3, a4 / q, qN), (a1, a2), n + 1) * phi_det(p, (a3, q * a4, qN), (a1, a2), n)
        # corrected form: Q determinants of the shifted problem
        cn = phi_det(p, (a3 / q, a4, qN), (a1, a2), n + 1) * phi_det(pb, (q * a3, a4, qNb), (a1, q * a2), n)
        cd = phi_det(p, (a3, a4 / q, qN), (a1, a2), n + 1) * phi_det(pb, (a3, q * a4, qNb), (a1, q * a2), n)
    except ZeroDivisionError as exc:
        out.append(skipped("gc_reference", p, f"3phi2 pole: {exc}"))
        return out
    gl, gr = P1(g * a3), P1(g * a4)
    out.append(compare("gc_corrected", p, gl * cd, constant_B(p) * cn * gr, B=fmt(constant_B(p))))
    Bp = constant_B_reference(p)
    if gl * pd == Bp * pn * gr:
        out.append(compare("gc_reference", p, gl * pd, Bp * pn * gr, B=fmt(Bp)))
    else:
        emp = gl * pd / (pn * gr) if pn * gr != 0 else None
        out.append(
            skipped(
                "gc_reference",
                p,
                "reference constant does not fit: its determinants use Q at p, the g-coefficient carries Q of T(p)",
                reference_B=fmt(Bp),
                empirical_B=fmt(emp) if emp is not None else "undefined",
            )
        )
    return out


# ---------------------------------------------------------------------------
# Other deformation directions
# ---------------------------------------------------------------------------


def b_params(p: ParamSet) -> tuple:
    """``(b1..b8)`` attached to p: q^N, 1/q, 1/(q^m a1 a2), 1/(q^n a3 a4), a1..a4."""
    q, (a1, a2, a3, a4) = p.q, p.a
    return (q**p.N, 1 / q, 1 / (q**p.m * a1 * a2), 1 / (q**p.n * a3 * a4), a1, a2, a3, a4)


def direction_data(p: ParamSet) -> Dict[str, LaxData]:
    """Lax data at p and at the inverse shift, for all five E6 directions."""
    out = {}
    for d in (E6_T, E6_T1, E6_T2, E6_T3, E6_T4):
        out[d.tag] = extract(p, d)
        out[d.tag + "_under"] = extract(d.inverse(p), d)
    return out


def verify_directions(p: ParamSet, data: Optional[Dict[str, LaxData]] = None) -> List[CheckReport]:
    if p.m < 1 or p.n < 1:
        raise Inadmissible("direction checks need m >= 1 and n >= 1")
    D = data or direction_data(p)
    q, (a1, a2, a3, a4), N, m, n = p.q, p.a, p.N, p.m, p.n
    b1, b2, b3, b4, b5, b6, b7, b8 = b_params(p)
    f = D["E6_T1"].f
    g = D["E6_T"].g
    g1, g2, g3, g4 = (D[f"E6_T{i}"].g for i in range(1, 5))
    g1u, g2u, g3u, g4u = (D[f"E6_T{i}_under"].g for i in range(1, 5))
    f1b = D["E6_T1"].fbar
    out: List[CheckReport] = []
    for tag in ("E6_T", "E6_T2", "E6_T3", "E6_T4"):
        out.append(compare(f"f_independent_of_direction_{tag}", p, D[tag].f, f))

    out.append(
        compare(
            "weylpainleveg",
            p,
            P1(1 / (f * g1), q / (f * g1u)) * P1(1 / (q**N * f), q / f),
            P1(a1 / f, a2 / f, a3 / f, a4 / f),
        )
    )
    out.append(
        compare(
            "weylpainlevef",
            p,
            P1(f * g1, f1b * g1 / q) * P1(q**m * a1 * a2 * g1, q**n * a3 * a4 * g1),
            q ** (N - 1) * P1(a1 * g1, a2 * g1, a3 * g1, a4 * g1) * f * f1b,
        )
    )
    out.append(
        compare(
            "type2painleve",
            p,
            P1(1 / (f * g2), 1 / (f * g2u)) * P1(b8 / f, 1 / (b1 * f)),
            P1(b5 / f, b6 / f, b7 / f, 1 / (b2 * f)),
        )
    )
    # In Padé variables the shifted g enters as q/(f g3_under), as for T1; the
    # displayed form is the same relation after the scaling g -> g/lambda with
    # lambda_under/lambda = q.
    out.append(
        compare(
            "type3painleve",
            p,
            P1(1 / (f * g3), q / (f * g3u)) * P1(b8 / f, 1 / (b2 * f)),
            P1(b5 / f, b6 / f, b7 / f, 1 / (b1 * f)),
            scaling="lambda_under/lambda = q",
        )
    )
    out.append(
        compare(
            "type4painleve",
            p,
            P1(1 / (f * g4), 1 / (f * g4u)) * P1(b5 / f, b8 / f),
            P1(1 / (b1 * f), b6 / f, b7 / f, 1 / (b2 * f)),
        )
    )
    out.append(
        compare(
            "type2g",
            p,
            P1(1 / (f * g1), 1 / (f * g2)) * P1(1 / (b1 * f)),
            P1(b5 / f, b6 / f, b7 / f),
        )
    )
    out.append(compare("type3g", p, P1(1 / (f * g3)) * P1(b8 / f), P1(1 / (b1 * f)) * P1(1 / (f * g1))))
    out.append(compare("type4g", p, P1(1 / (f * g4), 1 / (f * g1)), P1(b6 / f, b7 / f)))
    out.append(compare("g2_g_relation", p, P1(1 / (f * g2)) * P1(b8 / f), P1(b6 / f) * P1(1 / (f * g))))

    # the b-form of the T1 equations, in variables rescaled by lambda at each
    # step (lambda = 1 at p, q at T1^-1(p), 1/q at T1(p)); q becomes prod(b)
    qb = b1 * b2 * b3 * b4 * b5 * b6 * b7 * b8
    G_under = g1u / q
    F_bar = f1b / q
    out.append(
        compare(
            "painlevebasis",
            p,
            P1(1 / (f * g1), 1 / (f * G_under)) * P1(1 / (b1 * f), 1 / (b2 * f)),
            P1(b5 / f, b6 / f, b7 / f, b8 / f),
            scaling="lambda_under/lambda = q",
        )
    )
    out.append(
        compare(
            "painlevebasis2",
            p,
            P1(f * g1, F_bar * g1) * qb * P1(g1 / b3, g1 / b4),
            b1 * b2 * P1(b5 * g1, b6 * g1, b7 * g1, b8 * g1) * f * F_bar,
            scaling="lambda_bar/lambda = 1/q",
            prod_b=fmt(qb),
        )
    )
    return out
