"""Sampled identity suites: derivative lemmas, the module axioms and the Hom category."""

from __future__ import annotations

from ..algebroid.extract import left_invariant, right_invariant
from ..checks import CheckSet
from ..groupoid import PresentationError, compose_hom_category, naturality_defect
from ..groupoid.homcat import HomMorphism, compose_natural, identity, target
from ..symcore import ChartFunction, SpaceFunction
from .elements import MultVectorField
from .ops import bracket2, bullet, delta, partial
from .sampling import Sampler

# -- homogeneous graded arithmetic (None stands for an element of a zero degree) --


def _deg(x) -> int:
    from ..algebroid.core import AlgebroidSection
    if isinstance(x, AlgebroidSection):
        return -1
    if isinstance(x, (MultVectorField, ChartFunction)):
        return 0
    if isinstance(x, SpaceFunction):
        return 1
    raise TypeError(type(x).__name__)


def _zero(v) -> bool:
    return v is None or v.is_zero()


def _sub(a, b):
    if a is None:
        return None if b is None else -b
    if b is None:
        return a
    return a - b


def _add(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a + b


def _sign(k: int, v):
    if v is None or k % 2 == 0:
        return v
    return -v


def _bullet(x, y):
    if x is None or y is None:
        return None
    return bullet(x, y)


def _bracket(x, y):
    if x is None or y is None:
        return None
    return bracket2(x, y)


class _Graded:
    def __init__(self, P):
        self.P = P

    def d_fun(self, y):
        """delta on C_m(G): f -> t^*f - s^*f, F -> 0 (degree 2 is zero)."""
        if isinstance(y, ChartFunction):
            return delta(self.P, y)
        return None

    def d_vf(self, x):
        from ..algebroid.core import AlgebroidSection
        if isinstance(x, AlgebroidSection):
            return partial(x)
        return None


def lemma_suite(G, samples: int = 20, seed: int = 0) -> dict:
    """Derivative, differential and bracket lemmas for the bullet operation."""
    S = Sampler(G, seed)
    P = S.P
    names = ["aF(a) L_al F = i^* L_ar F", "aF(b) pr1^* L_ar F = m^* L_ar F",
             "aF(c) pr2^* L_al F = m^* L_al F", "aF(d) L_ar F = t^*u^* L_ar F = t^*u^* L_al F",
             "aF(e) L_al F = s^*u^* L_al F", "LaF(a) L_ar F = t^*(alpha . F)",
             "LaF(b) L_al F = s^*(alpha . F)", "diff(a) delta(X . f) = X . delta f",
             "diff(b) alpha . delta f = partial alpha . f",
             "diff(c) delta(alpha . F) = partial alpha . F",
             "lie(a) [[X,Y]] . f = X.(Y.f) - Y.(X.f)", "lie(b) [[X,Y]] . F = X.(Y.F) - Y.(X.F)",
             "lie(c) [[X,alpha]] . F = X.(alpha.F) - alpha.(X.F)"]
    C = CheckSet(names)
    for _ in range(samples):
        alpha, f, F = S.section(), S.function(), S.mult_function()
        X, Y = S.mult_field(), S.mult_field()
        ar, al = right_invariant(alpha), left_invariant(alpha)
        LrF, LlF = ar.apply(F), al.apply(F)
        uLr, uLl = P.u.pullback(LrF), P.u.pullback(LlF)
        C[names[0]].record(LlF == P.i.pullback(LrF), lhs=LlF, rhs=P.i.pullback(LrF))
        C[names[1]].record(P.pr1.pullback(LrF) == P.m.pullback(LrF))
        C[names[2]].record(P.pr2.pullback(LlF) == P.m.pullback(LlF))
        a, b = P.t.pullback(uLr), P.t.pullback(uLl)
        C[names[3]].record(LrF == a == b, lhs=LrF, mid=a, rhs=b)
        C[names[4]].record(LlF == P.s.pullback(uLl), lhs=LlF, rhs=P.s.pullback(uLl))
        aF = bullet(alpha, F)
        C[names[5]].record(LrF == P.t_pull(aF), lhs=LrF, rhs=P.t_pull(aF))
        C[names[6]].record(LlF == P.s_pull(aF), lhs=LlF, rhs=P.s_pull(aF))
        lhs, rhs = delta(P, bullet(X, f)), bullet(X, delta(P, f))
        C[names[7]].record(lhs == rhs, lhs=lhs, rhs=rhs)
        dalpha = partial(alpha)
        lhs, rhs = bullet(alpha, delta(P, f)), bullet(dalpha, f)
        C[names[8]].record(lhs == rhs, lhs=lhs, rhs=rhs)
        lhs, rhs = delta(P, aF), bullet(dalpha, F)
        C[names[9]].record(lhs == rhs, lhs=lhs, rhs=rhs)
        XY = bracket2(X, Y)
        lhs = bullet(XY, f)
        rhs = bullet(X, bullet(Y, f)) - bullet(Y, bullet(X, f))
        C[names[10]].record(lhs == rhs, lhs=lhs, rhs=rhs)
        lhs = bullet(XY, F)
        rhs = bullet(X, bullet(Y, F)) - bullet(Y, bullet(X, F))
        C[names[11]].record(lhs == rhs, lhs=lhs, rhs=rhs)
        lhs = bullet(bracket2(X, alpha), F)
        rhs = bullet(X, bullet(alpha, F)) - bullet(alpha, bullet(X, F))
        C[names[12]].record(lhs == rhs, lhs=lhs, rhs=rhs)
    return {"example": P.name, "suite": "lemmas", "seed": seed, "samples": samples,
            "passed": C.passed, "cases": C.to_list()}


def module_suite(G, samples: int = 20, seed: int = 0) -> dict:
    """Both dg-module identities on every pair of homogeneous degrees."""
    S = Sampler(G, seed)
    P = S.P
    gr = _Graded(P)
    C = CheckSet()
    for _ in range(samples):
        xs = {"alpha": S.section(), "X": S.mult_field()}
        xs2 = {"beta": S.section(), "Y": S.mult_field()}
        ys = {"f": S.function(), "F": S.mult_function()}
        for xn, x in xs.items():
            for yn, y in ys.items():
                lhs = gr.d_fun(_bullet(x, y))
                rhs = _add(_bullet(gr.d_vf(x), y), _sign(_deg(x), _bullet(x, gr.d_fun(y))))
                C[f"chain map: delta({xn} . {yn})"].record(_zero(_sub(lhs, rhs)), lhs=lhs, rhs=rhs)
        for xn, x in xs.items():
            for xn2, x2 in xs2.items():
                for yn, y in ys.items():
                    br = _bracket(x, x2)
                    lhs = _bullet(br, y)
                    sgn = _deg(x) * _deg(x2)
                    rhs = _sub(_bullet(x, _bullet(x2, y)), _sign(sgn, _bullet(x2, _bullet(x, y))))
                    label = f"bracket: [[{xn},{xn2}]] . {yn}"
                    if xn == "alpha" and xn2 == "beta":
                        label = f"degree -2: [[alpha,beta]] . {yn} = 0"
                        C[label].record(br is None and _zero(lhs) and _zero(rhs), lhs=lhs, rhs=rhs)
                    else:
                        C[label].record(_zero(_sub(lhs, rhs)), lhs=lhs, rhs=rhs)
    return {"example": P.name, "suite": "module", "seed": seed, "samples": samples,
            "passed": C.passed, "cases": C.to_list()}


def hom_category_suite(G, samples: int = 20, seed: int = 0) -> dict:
    """Composition (f', F') o (f, F) = (f + f', F) against natural transformations."""
    S = Sampler(G, seed)
    P = S.P
    C = CheckSet()
    for _ in range(samples):
        F = S.mult_function()
        f1, f2, f3 = S.function(), S.function(), S.function()
        m1 = HomMorphism(f1, F)
        m2 = HomMorphism(f2, target(P, m1))
        m3 = HomMorphism(f3, target(P, m2))
        comp = compose_hom_category(P, m1, m2)
        C["composite is (f + f', F)"].record(comp.f == f1 + f2 and comp.F == F)
        C["composite target"].record(target(P, comp) == target(P, m2))
        d1 = naturality_defect(P, F, f1, target(P, m1))
        d2 = naturality_defect(P, m2.F, f2, target(P, m2))
        C["morphisms are natural transformations"].record(d1.is_zero() and d2.is_zero(),
                                                          first=d1, second=d2)
        nat = compose_natural(f1, f2)
        dn = naturality_defect(P, F, nat, target(P, m2))
        C["composition matches vertical composition"].record(nat == comp.f and dn.is_zero(),
                                                            defect=dn)
        left = compose_hom_category(P, comp, m3)
        right = compose_hom_category(P, m1, compose_hom_category(P, m2, m3))
        C["associativity"].record(left == right)
        C["unit laws"].record(compose_hom_category(P, identity(P, F), m1) == m1
                              and compose_hom_category(P, m1, identity(P, target(P, m1))) == m1)
        if not delta(P, f1).is_zero():
            try:
                compose_hom_category(P, m1, HomMorphism(f2, F))
                ok = False
            except PresentationError:
                ok = True
            C["non-composable pair rejected"].record(ok)
    return {"example": P.name, "suite": "hom-category", "seed": seed, "samples": samples,
            "passed": C.passed, "cases": C.to_list()}
