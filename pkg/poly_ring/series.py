#!/usr/bin/env python3
"""
Generating Series
Truncated exponential-type series over the ring of polytopes and the identities they satisfy
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from common.errors import InputError, LimitExceededError
from poly_ring.identities import family_element
from poly_ring.ring import PolytopeRegistry, RingElement, Scalar, default_registry

logger = logging.getLogger(__name__)

Key = Tuple[int, int]


class TruncatedSeries:
    """Σ c_{a,b} q^a x^b with ring coefficients; terms with b > order are dropped"""

    def __init__(self, registry: PolytopeRegistry, order: int, coefficients: Optional[Dict[Key, RingElement]] = None):
        self.registry = registry
        self.order = order
        self.coefficients: Dict[Key, RingElement] = {}
        for key, value in (coefficients or {}).items():
            if key[1] <= order and not value.is_zero():
                self.coefficients[key] = value

    def coefficient(self, q: int, x: int) -> RingElement:
        return self.coefficients.get((q, x), self.registry.zero())

    def _combine(self, other: "TruncatedSeries", sign: int) -> "TruncatedSeries":
        order = min(self.order, other.order)
        terms = dict(self.coefficients)
        for key, value in other.coefficients.items():
            scaled = value if sign == 1 else -value
            terms[key] = terms[key] + scaled if key in terms else scaled
        return TruncatedSeries(self.registry, order, terms)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self._combine(other, 1)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self._combine(other, -1)

    def scale(self, factor: Union[Scalar, RingElement]) -> "TruncatedSeries":
        return TruncatedSeries(self.registry, self.order, {k: v * factor for k, v in self.coefficients.items()})

    def __mul__(self, other: Union["TruncatedSeries", Scalar, RingElement]) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        order = min(self.order, other.order)
        terms: Dict[Key, RingElement] = {}
        for (q1, x1), c1 in self.coefficients.items():
            for (q2, x2), c2 in other.coefficients.items():
                if x1 + x2 > order:
                    continue
                key = (q1 + q2, x1 + x2)
                product = c1 * c2
                terms[key] = terms[key] + product if key in terms else product
        return TruncatedSeries(self.registry, order, terms)

    def __rmul__(self, other: Union[Scalar, RingElement]) -> "TruncatedSeries":
        return self.scale(other)

    def shift(self, q: int = 0, x: int = 0) -> "TruncatedSeries":
        """Multiply by q^a x^b"""
        return TruncatedSeries(
            self.registry, self.order, {(a + q, b + x): v for (a, b), v in self.coefficients.items()}
        )

    def d(self) -> "TruncatedSeries":
        """Boundary applied coefficientwise"""
        return TruncatedSeries(self.registry, self.order, {k: v.d() for k, v in self.coefficients.items()})

    def dx(self) -> "TruncatedSeries":
        terms = {(a, b - 1): v.scale(b) for (a, b), v in self.coefficients.items() if b > 0}
        return TruncatedSeries(self.registry, self.order - 1, terms)

    def dq(self) -> "TruncatedSeries":
        terms = {(a - 1, b): v.scale(a) for (a, b), v in self.coefficients.items() if a > 0}
        return TruncatedSeries(self.registry, self.order, terms)

    def differences(self, other: "TruncatedSeries", order: int) -> List[Key]:
        """Keys with x-degree ≤ order where the coefficients differ"""
        keys = set(self.coefficients) | set(other.coefficients)
        return sorted(
            key for key in keys
            if key[1] <= order and self.coefficient(*key) != other.coefficient(*key)
        )

    def to_json(self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "terms": [
                {"q": q, "x": x, "coefficient": self.coefficients[(q, x)].to_json()}
                for q, x in sorted(self.coefficients, key=lambda key: (key[1], key[0]))
            ],
        }


def constant(registry: PolytopeRegistry, order: int, value: Union[Scalar, RingElement] = 1) -> TruncatedSeries:
    element = value if isinstance(value, RingElement) else registry.one().scale(value)
    return TruncatedSeries(registry, order, {(0, 0): element})


def variable_x(registry: PolytopeRegistry, order: int) -> TruncatedSeries:
    return constant(registry, order).shift(x=1)


def geometric(ratio: TruncatedSeries) -> TruncatedSeries:
    """1/(1 − r) for r with no q^0 x^0 term"""
    if not ratio.coefficient(0, 0).is_zero():
        raise InputError("Geometric series needs a ratio without constant term")
    total = constant(ratio.registry, ratio.order)
    power = constant(ratio.registry, ratio.order)
    for _ in range(ratio.order + 1):
        power = power * ratio
        if not power.coefficients:
            break
        total = total + power
    return total


def exp_qx(registry: PolytopeRegistry, order: int) -> TruncatedSeries:
    one = registry.one()
    return TruncatedSeries(registry, order, {(k, k): one.scale(Fraction(1, factorial(k))) for k in range(order + 1)})


def _series(
    registry: PolytopeRegistry, order: int, family: str, offset: int, shift: int, denominator: Callable[[int], int]
) -> TruncatedSeries:
    """Σ_s P^{s+offset} x^{s+shift} / denominator(s)"""
    terms = {}
    for s in range(0, order - shift + 1):
        terms[(0, s + shift)] = family_element(registry, family, s + offset).scale(Fraction(1, denominator(s)))
    return TruncatedSeries(registry, order, terms)


def pe_series(registry: PolytopeRegistry, order: int) -> TruncatedSeries:
    """Pe(x) = Σ Pe^s x^{s+1}/(s+1)!"""
    return _series(registry, order, "pe", 0, 1, lambda s: factorial(s + 1))


def st_series(registry: PolytopeRegistry, order: int) -> TruncatedSeries:
    """St(x) = Σ St^s x^s/s!"""
    return _series(registry, order, "st", 0, 0, factorial)


def pgamma_series(registry: PolytopeRegistry, order: int) -> TruncatedSeries:
    """P_Γ(x) = Σ P_Γ^{s+1} x^s/s!"""
    return _series(registry, order, "pgamma", 1, 0, factorial)


def pmas_series(registry: PolytopeRegistry, order: int) -> TruncatedSeries:
    """P_Mas(x) = Σ P_Mas^{s+2} x^{s+2}/s!"""
    return _series(registry, order, "pmas", 2, 2, factorial)


SERIES: Dict[str, Callable[[PolytopeRegistry, int], TruncatedSeries]] = {
    "pe": pe_series,
    "st": st_series,
    "pgamma": pgamma_series,
    "pmas": pmas_series,
}


def with_parameter(series: TruncatedSeries) -> TruncatedSeries:
    """P(q, x): each coefficient c becomes Σ_k d^k c q^k / k!"""
    terms: Dict[Key, RingElement] = {}
    for (a, b), value in series.coefficients.items():
        k = 0
        while not value.is_zero():
            key = (a + k, b)
            scaled = value.scale(Fraction(1, factorial(k)))
            terms[key] = terms[key] + scaled if key in terms else scaled
            value = value.d()
            k += 1
    return TruncatedSeries(series.registry, series.order, terms)


def _check_order(order: int, cap: int) -> None:
    if order < 1:
        raise InputError(f"Series order must be positive, got {order}")
    if order > cap:
        raise LimitExceededError(f"Series order {order} exceeds the cap {cap}. Please raise --order.")


def series_build(
    family: str, order: int, with_q: bool = False, registry: Optional[PolytopeRegistry] = None, cap: int = 6
) -> TruncatedSeries:
    _check_order(order, cap)
    registry = registry or default_registry()
    if family not in SERIES:
        raise InputError(f"No generating series for '{family}'. Please use one of {sorted(SERIES)}.")
    series = SERIES[family](registry, order)
    return with_parameter(series) if with_q else series


@dataclass
class SeriesReport:
    identity: str
    order: int
    holds: bool
    mismatches: List[Key] = field(default_factory=list)
    lhs: Optional[TruncatedSeries] = None
    rhs: Optional[TruncatedSeries] = None

    def to_json(self) -> Dict[str, Any]:
        report: Dict[str, Any] = {
            "identity": self.identity,
            "order": self.order,
            "holds": self.holds,
            "mismatches": [],
        }
        for q, x in self.mismatches:
            report["mismatches"].append({
                "q": q,
                "x": x,
                "lhs": self.lhs.coefficient(q, x).format(),
                "rhs": self.rhs.coefficient(q, x).format(),
            })
        return report


class _Inputs:
    """Lazily built series at the orders each identity needs"""

    def __init__(self, registry: PolytopeRegistry, order: int):
        self.registry = registry
        self.order = order
        self._cache: Dict[str, TruncatedSeries] = {}

    def get(self, name: str) -> TruncatedSeries:
        if name not in self._cache:
            family, _, parameter = name.partition("@")
            bump = 1 if family in ("pe", "st") else 0
            series = SERIES[family](self.registry, self.order + bump)
            self._cache[name] = with_parameter(series) if parameter == "q" else series
        return self._cache[name]

    @property
    def x(self) -> TruncatedSeries:
        return variable_x(self.registry, self.order + 1)

    @property
    def one(self) -> TruncatedSeries:
        return constant(self.registry, self.order + 1)


def _dpe(s: _Inputs) -> Tuple[TruncatedSeries, TruncatedSeries]:
    pe = s.get("pe")
    return pe.d(), pe * pe


def _dst(s: _Inputs) -> Tuple[TruncatedSeries, TruncatedSeries]:
    return s.get("st").d(), (s.x + s.get("pe")) * s.get("st")


def _pgamma_rhs(pe: TruncatedSeries, pg: TruncatedSeries, one: TruncatedSeries) -> TruncatedSeries:
    return (pe * pg).scale(2) + (one + pe.dx()) * pe.dx()


def _pmas_rhs(s: _Inputs, pe: TruncatedSeries, st: TruncatedSeries, pg: TruncatedSeries, pm: TruncatedSeries) -> TruncatedSeries:
    bracket = st.dx().scale(2) + st * pg + st.dx() * pe.dx()
    return (s.x + pe) * pm + bracket.shift(x=2)


def _pgamma_x(s: _Inputs) -> Tuple[TruncatedSeries, TruncatedSeries]:
    return s.get("pgamma").d(), _pgamma_rhs(s.get("pe"), s.get("pgamma"), s.one)


def _pmas_x(s: _Inputs) -> Tuple[TruncatedSeries, TruncatedSeries]:
    return s.get("pmas").d(), _pmas_rhs(s, s.get("pe"), s.get("st"), s.get("pgamma"), s.get("pmas"))


def _pe_closed(s: _Inputs) -> Tuple[TruncatedSeries, TruncatedSeries]:
    pe = s.get("pe")
    return s.get("pe@q"), pe * geometric(pe.shift(q=1))


def _st_closed(s: _Inputs) -> Tuple[TruncatedSeries, TruncatedSeries]:
    pe = s.get("pe")
    return s.get("st@q"), s.get("st") * exp_qx(s.registry, s.order + 1) * geometric(pe.shift(q=1))


def _pe_cauchy(s: _Inputs) -> Tuple[TruncatedSeries, TruncatedSeries]:
    pe = s.get("pe@q")
    return pe.dq(), pe * pe


def _st_cauchy(s: _Inputs) -> Tuple[TruncatedSeries, TruncatedSeries]:
    return s.get("st@q").dq(), (s.x + s.get("pe@q")) * s.get("st@q")


def _pgamma_cauchy(s: _Inputs) -> Tuple[TruncatedSeries, TruncatedSeries]:
    return s.get("pgamma@q").dq(), _pgamma_rhs(s.get("pe@q"), s.get("pgamma@q"), s.one)


def _pmas_cauchy(s: _Inputs) -> Tuple[TruncatedSeries, TruncatedSeries]:
    lhs = s.get("pmas@q").dq()
    return lhs, _pmas_rhs(s, s.get("pe@q"), s.get("st@q"), s.get("pgamma@q"), s.get("pmas@q"))


SERIES_IDENTITIES: Dict[str, Callable[[_Inputs], Tuple[TruncatedSeries, TruncatedSeries]]] = {
    "dpe": _dpe,
    "dst": _dst,
    "thm4.12-pgamma": _pgamma_x,
    "thm4.12-pmas": _pmas_x,
    "pe-q": _pe_closed,
    "st-q": _st_closed,
    "thm4.14-pe": _pe_cauchy,
    "thm4.14-st": _st_cauchy,
    "thm4.14-pgamma": _pgamma_cauchy,
    "thm4.14-pmas": _pmas_cauchy,
}


def series_verify(
    identity: str, order: int, registry: Optional[PolytopeRegistry] = None, cap: int = 6
) -> SeriesReport:
    """Expand both sides with exact rational scalars and compare every coefficient through x^order"""
    if identity not in SERIES_IDENTITIES:
        raise InputError(f"Unknown series identity '{identity}'. Please use one of {sorted(SERIES_IDENTITIES)}.")
    _check_order(order, cap)
    registry = registry or default_registry()
    lhs, rhs = SERIES_IDENTITIES[identity](_Inputs(registry, order))
    mismatches = lhs.differences(rhs, order)
    holds = not mismatches
    symbol = "✅" if holds else "❌"
    logger.info(f"{symbol} Series identity {identity} through order {order}: {len(mismatches)} mismatches")
    return SeriesReport(identity, order, holds, mismatches, lhs, rhs)
