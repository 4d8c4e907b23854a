"""Birational action of the affine Weyl group W(E6^(1)) on (b1..b8; f, g).

Words act on points left to right: ``apply_word([w1, w2], s)`` applies w1
first. Birational identities are checked by exact evaluation at random
rational states.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .exact import as_fraction, frac_str
from .qkernel import Inadmissible, ParamSet, poch1, random_rational
from .verify import CheckReport, compare, direction_data

P1 = poch1


class IndeterminatePoint(ZeroDivisionError):
    """A denominator of the rational action vanished at this state."""


@dataclass(frozen=True)
class WeylState:
    b: Tuple[Fraction, ...]
    f: Fraction
    g: Fraction

    def __post_init__(self):
        if len(self.b) != 8:
            raise ValueError("need eight parameters b1..b8")
        object.__setattr__(self, "b", tuple(as_fraction(v) for v in self.b))
        object.__setattr__(self, "f", as_fraction(self.f))
        object.__setattr__(self, "g", as_fraction(self.g))

    @property
    def q(self) -> Fraction:
        out = Fraction(1)
        for v in self.b:
            out *= v
        return out

    def as_dict(self) -> Dict[str, str]:
        d = {f"b{i + 1}": frac_str(v) for i, v in enumerate(self.b)}
        d["f"] = frac_str(self.f)
        d["g"] = frac_str(self.g)
        return d

    @classmethod
    def from_params(cls, p: ParamSet, f, g) -> "WeylState":
        """b1 = q^N, b2 = 1/q, b3 = 1/(q^m a1 a2), b4 = 1/(q^n a3 a4), b5..b8 = a1..a4."""
        q, (a1, a2, a3, a4) = p.q, p.a
        b = (q**p.N, 1 / q, 1 / (q**p.m * a1 * a2), 1 / (q**p.n * a3 * a4), a1, a2, a3, a4)
        return cls(b, f, g)


def _div(num: Fraction, den: Fraction) -> Fraction:
    if den == 0:
        raise IndeterminatePoint("vanishing denominator in the rational action")
    return num / den


def _s0(s):
    b1, b2, b3, b4, b5, b6, b7, b8 = s.b
    return WeylState((b1, b2, b4, b3, b5, b6, b7, b8), s.f, s.g)


def _s1(s):
    b1, b2, b3, b4, b5, b6, b7, b8 = s.b
    return WeylState((b2, b1, b3, b4, b5, b6, b7, b8), s.f, s.g)


def _s2(s):
    b1, b2, b3, b4, b5, b6, b7, b8 = s.b
    f, g = s.f, s.g
    g2 = _div(b2 * (b8 - f) * g, 1 - b2 * f - f * g + b2 * b8 * f * g)
    return WeylState((b1, 1 / b8, b2 * b3 * b8, b2 * b4 * b8, b5, b6, b7, 1 / b2), f, g2)


def _s3(s):
    b1, b2, b3, b4, b5, b6, b7, b8 = s.b
    return WeylState((b1, b2, b3, b4, b8, b6, b7, b5), s.f, s.g)


def _s4(s):
    b1, b2, b3, b4, b5, b6, b7, b8 = s.b
    return WeylState((b1, b2, b3, b4, b6, b5, b7, b8), s.f, s.g)


def _s5(s):
    b1, b2, b3, b4, b5, b6, b7, b8 = s.b
    return WeylState((b1, b2, b3, b4, b5, b7, b6, b8), s.f, s.g)


def _s6(s):
    b1, b2, b3, b4, b5, b6, b7, b8 = s.b
    f, g = s.f, s.g
    f2 = _div(f * (b8 * g - 1), -b3 * b8 + b8 * g - f * g + b3 * b8 * f * g)
    return WeylState((b1 * b3 * b8, b2 * b3 * b8, 1 / b8, b4, b5, b6, b7, 1 / b3), f2, g)


def _pi1(s):
    b1, b2, b3, b4, b5, b6, b7, b8 = s.b
    return WeylState((1 / b4, 1 / b3, 1 / b2, 1 / b1, 1 / b5, 1 / b6, 1 / b7, 1 / b8), s.g, s.f)


def _pi2(s):
    b1, b2, b3, b4, b5, b6, b7, b8 = s.b
    f, g = s.f, s.g
    g2 = _div(1 - f * g, f + b5 * b8 * g - b5 * f * g - b8 * f * g)
    b = (1 / b7, 1 / b6, 1 / (b3 * b5 * b8), 1 / (b4 * b5 * b8), b8, 1 / b2, 1 / b1, b5)
    return WeylState(b, f, g2)


GENERATORS: Dict[str, Callable[[WeylState], WeylState]] = {
    "s0": _s0,
    "s1": _s1,
    "s2": _s2,
    "s3": _s3,
    "s4": _s4,
    "s5": _s5,
    "s6": _s6,
    "pi1": _pi1,
    "pi2": _pi2,
}

Word = List[str]

R_WORD: Word = "pi2 s0 s5 s4 s5 s3 s4 s5 s2 s3 s4 s5 s1 s2 s3 s4 s5".split()
R_PRIME_WORD: Word = ["pi1"] + R_WORD + ["pi1"]
T_WORD: Word = R_PRIME_WORD + R_WORD


def apply(gen: str, state: WeylState) -> WeylState:
    try:
        return GENERATORS[gen](state)
    except ZeroDivisionError as exc:
        raise IndeterminatePoint(str(exc)) from exc


def apply_word(word: Sequence[str], state: WeylState) -> WeylState:
    for gen in word:
        state = apply(gen, state)
    return state


def invert_word(word: Sequence[str]) -> Word:
    """Every generator is an involution, so the inverse is the reversal."""
    return list(reversed(word))


def cartan() -> List[List[int]]:
    return [
        [2, 0, 0, 0, 0, 0, -1],
        [0, 2, -1, 0, 0, 0, 0],
        [0, -1, 2, -1, 0, 0, 0],
        [0, 0, -1, 2, -1, 0, -1],
        [0, 0, 0, -1, 2, -1, 0],
        [0, 0, 0, 0, -1, 2, 0],
        [-1, 0, 0, -1, 0, 0, 2],
    ]


PI1_CONJ = [(1, 0), (2, 6), (3, 3), (4, 4), (5, 5)]
PI2_CONJ = [(0, 0), (1, 5), (2, 4), (3, 3), (6, 6)]


def _pi_cube_gauge(s: WeylState) -> Fraction:
    b = s.b
    return 1 / (b[4] * b[7])


def _s6pi2_gauge(s: WeylState) -> Fraction:
    b = s.b
    return 1 / (b[2] * b[7])


# relations that hold only up to the scaling symmetry, with its exact scale
GAUGE: Dict[str, Callable[[WeylState], Fraction]] = {
    "(pi1pi2)^3": _pi_cube_gauge,
    "s6pi2=pi2s6": _s6pi2_gauge,
}


def relation_table() -> List[Tuple[str, Word, Word]]:
    """(name, lhs word, rhs word); each relation asserts lhs = rhs on states.

    For names in GAUGE the assertion is ``lhs(s) = scaling(rhs(s), GAUGE[name](s))``.
    """
    rel: List[Tuple[str, Word, Word]] = []
    A = cartan()
    for i in range(7):
        rel.append((f"s{i}^2", [f"s{i}"] * 2, []))
    for name in ("pi1", "pi2"):
        rel.append((f"{name}^2", [name] * 2, []))
    for i in range(7):
        for j in range(i + 1, 7):
            k = {0: 2, -1: 3}.get(A[i][j])
            if k is None:
                continue
            rel.append((f"(s{i}s{j})^{k}", [f"s{i}", f"s{j}"] * k, []))
    rel.append(("(pi1pi2)^3", ["pi1", "pi2"] * 3, []))
    for i, j in PI1_CONJ:
        rel.append((f"s{i}pi1=pi1s{j}", [f"s{i}", "pi1"], ["pi1", f"s{j}"]))
    for i, j in PI2_CONJ:
        rel.append((f"s{i}pi2=pi2s{j}", [f"s{i}", "pi2"], ["pi2", f"s{j}"]))
    return rel


def random_state(rng: random.Random, bound: int = 9) -> WeylState:
    return WeylState(tuple(random_rational(rng, bound) for _ in range(8)), random_rational(rng, bound), random_rational(rng, bound))


def _sampled(rng: random.Random, fn: Callable[[WeylState], object], retries: int = 100):
    """Run fn on random states until it does not hit an indeterminate point."""
    for _ in range(retries):
        s = random_state(rng)
        try:
            return s, fn(s)
        except ZeroDivisionError:
            # includes IndeterminatePoint; also poles of the checked formulas
            continue
    raise IndeterminatePoint("no determinate state found")


def _report(name: str, state: WeylState, lhs, rhs, **witness) -> CheckReport:
    def text(v):
        if isinstance(v, WeylState):
            return ",".join(frac_str(x) for x in v.b + (v.f, v.g))
        if isinstance(v, str):
            return v
        return frac_str(v)

    return CheckReport(
        name,
        state.as_dict(),
        "pass" if lhs == rhs else "fail",
        text(lhs),
        text(rhs),
        {k: str(v) for k, v in witness.items()},
    )


def check_relations(samples: int, seed: int) -> List[CheckReport]:
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    out = []
    for name, lhs, rhs in relation_table():
        gauge = GAUGE.get(name)
        for k in range(samples):

            def both(s, lhs=lhs, rhs=rhs, gauge=gauge):
                r = apply_word(rhs, s)
                return apply_word(lhs, s), scaling(r, gauge(s)) if gauge else r

            s, (l, r) = _sampled(rng, both)
            w = {"sample": k}
            if gauge:
                w["gauge_lambda"] = frac_str(gauge(s))
            out.append(_report(name, s, l, r, **w))
    return out


def translation_T(state: WeylState) -> WeylState:
    return apply_word(T_WORD, state)


def shifted_b(state: WeylState) -> Tuple[Fraction, ...]:
    """Expected parameters after T: (b1/q, b2/q, q b3, q b4, b5..b8)."""
    q = state.q
    b1, b2, b3, b4, b5, b6, b7, b8 = state.b
    return (b1 / q, b2 / q, q * b3, q * b4, b5, b6, b7, b8)


def check_translation(samples: int, seed: int) -> List[CheckReport]:
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    out = []

    def images(s):
        t = translation_T(s)
        return t, apply_word(invert_word(T_WORD), t)

    for k in range(samples):
        s, (t, back) = _sampled(rng, images)
        out.append(
            _report(
                "parametershift",
                s,
                ",".join(map(frac_str, t.b)),
                ",".join(map(frac_str, shifted_b(s))),
                sample=k,
            )
        )
        out.append(_report("T_preserves_q", s, t.q, s.q, sample=k))
        out.append(_report("T_inverse", s, back, s, sample=k))
    return out


def weyl_residuals(s: WeylState) -> Dict[str, Tuple[Fraction, Fraction]]:
    """(lhs, rhs) of both translation identities, cleared of denominators."""
    b1, b2, b3, b4, b5, b6, b7, b8 = s.b
    f, g, q = s.f, s.g, s.q
    g_under = apply_word(invert_word(R_WORD), s).g
    f_bar = apply_word(R_PRIME_WORD, s).f
    return {
        "weyl1": (
            P1(1 / (f * g_under), 1 / (f * g)) * P1(1 / (b1 * f), 1 / (b2 * f)),
            P1(b5 / f, b6 / f, b7 / f, b8 / f),
        ),
        "weyl2": (
            P1(f_bar * g, f * g) * q * P1(g / b3, g / b4),
            b1 * b2 * P1(b5 * g, b6 * g, b7 * g, b8 * g) * f * f_bar,
        ),
    }


def verify_weyl_painleve(samples: int, seed: int) -> List[CheckReport]:
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    out = []

    def evaluate(s):
        # T(f), T^-1(g) against r'(f), r^-1(g)
        shifts = {
            "T_f_equals_rprime_f": (translation_T(s).f, apply_word(R_PRIME_WORD, s).f),
            "Tinv_g_equals_rinv_g": (
                apply_word(invert_word(T_WORD), s).g,
                apply_word(invert_word(R_WORD), s).g,
            ),
        }
        return {**weyl_residuals(s), **shifts}

    for k in range(samples):
        s, res = _sampled(rng, evaluate)
        for name, (l, r) in res.items():
            out.append(_report(name, s, l, r, sample=k))
    return out


def scaling(state: WeylState, lam) -> WeylState:
    lam = as_fraction(lam)
    if lam == 0:
        raise ValueError("lambda must be non-zero")
    b = tuple(v / lam for v in state.b[:4]) + tuple(v * lam for v in state.b[4:])
    return WeylState(b, lam * state.f, state.g / lam)


# pi1 exchanges the two halves of b and f <-> g, so it inverts the scale
IMAGE_SCALE: Dict[str, Callable[[Fraction], Fraction]] = {
    name: (lambda lam: 1 / lam) if name == "pi1" else (lambda lam: lam) for name in GENERATORS
}


def scaling_commutes(samples: int, seed: int = 0) -> List[CheckReport]:
    """gen(scale(s, lam)) == scale(gen(s), lam') with lam' from IMAGE_SCALE."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    out = []
    for gen in GENERATORS:
        for k in range(samples):
            lam = random_rational(rng, 9)

            def both(s, gen=gen, lam=lam):
                return apply(gen, scaling(s, lam)), scaling(apply(gen, s), IMAGE_SCALE[gen](lam))

            s, (l, r) = _sampled(rng, both)
            out.append(_report(f"scaling_{gen}", s, l, r, sample=k, lam=frac_str(lam)))
    return out


def direction_g(state: WeylState) -> Dict[str, Fraction]:
    """g2, g3, g4 as g-slots of the word images of the state."""
    Tinv = invert_word(T_WORD)
    return {
        "g2": apply_word(["s2"] + Tinv, state).g,
        "g3": apply_word(["s1", "s2"], state).g,
        "g4": apply_word(["s2", "s1", "s3", "s2"] + Tinv, state).g,
    }


def direction_residuals(state: WeylState, gs: Optional[Dict[str, Fraction]] = None) -> Dict[str, Tuple[Fraction, Fraction]]:
    b1, b2, b3, b4, b5, b6, b7, b8 = state.b
    f, g1 = state.f, state.g
    gs = gs or direction_g(state)
    g2, g3, g4 = gs["g2"], gs["g3"], gs["g4"]
    return {
        "type2g": (P1(1 / (f * g1), 1 / (f * g2)) * P1(1 / (b1 * f)), P1(b5 / f, b6 / f, b7 / f)),
        "type3g": (P1(1 / (f * g3)) * P1(b8 / f), P1(1 / (b1 * f)) * P1(1 / (f * g1))),
        "type4g": (P1(1 / (f * g4), 1 / (f * g1)), P1(b6 / f, b7 / f)),
    }


def weyl_direction_words(samples: int, seed: int) -> List[CheckReport]:
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    out = []
    for k in range(samples):
        s, res = _sampled(rng, direction_residuals)
        for name, (l, r) in res.items():
            out.append(_report(f"words_{name}", s, l, r, sample=k))
    return out


def weyl_vs_pade(p: ParamSet, data=None) -> List[CheckReport]:
    """Word images of (b(p); f, g1) against the Padé direction data.

    The g-slots agree exactly; T shifts f and g in the scaled variables, so
    T(f) = fbar/q and T^-1(g) = g_under/q in Padé normalisation.
    """
    if p.m < 1 or p.n < 1:
        raise Inadmissible("direction data needs m >= 1 and n >= 1")
    D = data or direction_data(p)
    f, g1 = D["E6_T1"].f, D["E6_T1"].g
    s = WeylState.from_params(p, f, g1)
    out = []
    for key, g in direction_g(s).items():
        out.append(compare(f"words_{key}_equals_pade", p, g, D[f"E6_T{key[1]}"].g))
    out.append(compare("T_f_equals_pade_fbar", p, translation_T(s).f, D["E6_T1"].fbar / p.q))
    ti = apply_word(invert_word(T_WORD), s)
    out.append(compare("Tinv_g_equals_pade_gunder", p, ti.g, D["E6_T1_under"].g / p.q))
    return out
