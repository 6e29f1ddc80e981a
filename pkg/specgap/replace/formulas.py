"""
Closed-form Fiedler components on the lemma gadgets.

Each catalog entry expresses every value label of a gadget pair as a linear
form in a few free boundary values, with coefficients that are ratios of
integer polynomials in mu. Host labels (x...) follow from the eigen-equation
on the forbidden subgraph, replacement labels (z...) are the values chosen
for the new subgraph.
"""

from typing import Callable, Dict, Mapping, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from specgap.exceptions import InvalidInputError, MuOutOfRangeError, UnknownFormulaError
from specgap.polyroots.polynomial import IntPolynomial, poly

ONE = poly(1)


class Ratio(BaseModel):
    """num(mu) / den(mu)."""

    model_config = ConfigDict(frozen=True)

    num: IntPolynomial
    den: IntPolynomial = ONE

    def __call__(self, mu: float) -> float:
        d = float(self.den(mu))
        if d == 0.0:
            raise MuOutOfRangeError(f"Denominator {self.den} vanishes at mu={mu}")
        return float(self.num(mu)) / d

    def times(self, other: "Ratio") -> "Ratio":
        return Ratio(num=self.num * other.num, den=self.den * other.den)


class LinearForm(BaseModel):
    """Sum of ratio(mu) * value over the free variables."""

    model_config = ConfigDict(frozen=True)

    terms: Tuple[Tuple[str, Ratio], ...]

    def evaluate(self, mu: float, values: Mapping[str, float]) -> float:
        return sum(r(mu) * values[var] for var, r in self.terms)


class LemmaFormula(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    variables: Tuple[str, ...]
    mu_bound: float
    forms: Dict[str, LinearForm]


def _r(num: Sequence[int], den: Sequence[int] = (1,)) -> Ratio:
    return Ratio(num=poly(*num), den=poly(*den))


def _single(var: str, ratios: Mapping[str, Ratio]) -> Dict[str, LinearForm]:
    return {label: LinearForm(terms=((var, r),)) for label, r in ratios.items()}


def _pair_form(
    fx: Sequence[int], fy: Sequence[int], den: Sequence[int], x: str, y: str
) -> LinearForm:
    """f(x, y) = (fx(mu) x + fy(mu) y) / den(mu)."""
    return LinearForm(terms=((x, _r(fx, den)), (y, _r(fy, den))))


def _two_sided(
    host: Mapping[str, str],
    swapped: Mapping[str, str],
    parts: Mapping[str, Tuple[Sequence[int], Sequence[int], Sequence[int]]],
    x: str,
    y: str,
) -> Dict[str, LinearForm]:
    """Host labels take f(x, y); replacement labels take f(y, x)."""
    forms: Dict[str, LinearForm] = {}
    for label, fn in host.items():
        fx, fy, den = parts[fn]
        forms[label] = _pair_form(fx, fy, den, x, y)
    for label, fn in swapped.items():
        fx, fy, den = parts[fn]
        forms[label] = _pair_form(fx, fy, den, y, x)
    return forms


_E1_X = {
    "x2": _r((2, -1), (2,)),
    "x3": _r((2, -6, 1), (2,)),
    "x4": _r((4, -19, 9, -1), (4,)),
}
_E1_OMEGA = _r((-4, 19, -9, 1), (-4, 26, -16, 2))

_H5_OMEGA = _r((-24, 216, -252, 102, -17, 1), (-24, 238, -261, 103, -17, 1))

_H6_DEN = (-168, 2200, -4012, 2996, -1136, 231, -24, 1)
_H6_OMEGA_PRIME = (-8, 110, -157, 77, -15, 1)


def _build_catalog() -> Dict[str, LemmaFormula]:
    catalog: Dict[str, LemmaFormula] = {}

    catalog["E3"] = LemmaFormula(
        name="E3",
        variables=("x1",),
        mu_bound=0.355,
        forms=_single("x1", {"x2": _r((1, -1)), "x3": _r((2, -5, 1), (2,))}),
    )
    catalog["E1"] = LemmaFormula(
        name="E1",
        variables=("x1",),
        mu_bound=0.129,
        forms=_single(
            "x1",
            {
                **_E1_X,
                "z1": _E1_OMEGA,
                "z2": _E1_OMEGA.times(_r((1, -1))),
                "z3": _E1_OMEGA.times(_r((2, -5, 1), (2,))),
            },
        ),
    )
    catalog["E2"] = LemmaFormula(
        name="E2",
        variables=("x1",),
        mu_bound=0.268,
        forms=_single("x1", {"x2": _E1_X["x2"], "x3": _E1_X["x3"]}),
    )

    h1 = {"f": ((6, -2), (4,), (10, -7, 1)), "g": ((2,), (8, -2), (10, -7, 1))}
    catalog["H1"] = LemmaFormula(
        name="H1",
        variables=("x_r", "x_r3"),
        mu_bound=0.355,
        forms=_two_sided(
            {"x_r1": "f", "x_r2": "g"}, {"z_r1": "g", "z_r2": "f"}, h1, "x_r", "x_r3"
        ),
    )

    h2_cubic = (-32, 36, -11, 1)
    h2 = {
        "f": ((-20, 14, -2), (-12, 2), h2_cubic),
        "g": ((2,), (6, -1), (8, -7, 1)),
        "l": ((-4,), (-28, 16, -2), h2_cubic),
    }
    catalog["H2"] = LemmaFormula(
        name="H2",
        variables=("x_r", "x_r4"),
        mu_bound=0.355,
        forms=_two_sided(
            {"x_r1": "f", "x_r2": "g", "x_r3": "l"},
            {"z_r1": "l", "z_r2": "g", "z_r3": "f"},
            h2,
            "x_r",
            "x_r4",
        ),
    )

    h3_cubic = (-14, 27, -10, 1)
    h3 = {
        "f": ((-10, 12, -2), (-4,), h3_cubic),
        "g": ((-6, 2), (-8, 2), h3_cubic),
        "l": ((-4,), (-10, 7, -1), h3_cubic),
    }
    catalog["H3"] = LemmaFormula(
        name="H3",
        variables=("x_r", "x_r4"),
        mu_bound=0.091,
        forms=_two_sided(
            {"x_r1": "f", "x_r2": "g", "x_r3": "l"},
            {"z_r1": "l", "z_r2": "g", "z_r3": "f"},
            h3,
            "x_r",
            "x_r4",
        ),
    )

    h4_quartic = (76, -126, 67, -14, 1)
    h4 = {
        "f": ((64, -72, 22, -2), (12, -2), h4_quartic),
        "g": ((40, -28, 4), (36, -18, 2), h4_quartic),
        "l": ((16, -4), (60, -52, 13, -1), h4_quartic),
        "p": ((8,), (68, -72, 22, -2), h4_quartic),
    }
    catalog["H4"] = LemmaFormula(
        name="H4",
        variables=("x_r", "x_r5"),
        mu_bound=0.355,
        forms=_two_sided(
            {"x_r1": "f", "x_r2": "g", "x_r3": "l", "x_r4": "p"},
            {"z_r1": "p", "z_r2": "l", "z_r3": "g", "z_r4": "f"},
            h4,
            "x_r",
            "x_r5",
        ),
    )

    catalog["H5"] = LemmaFormula(
        name="H5",
        variables=("x1",),
        mu_bound=0.091,
        forms=_single(
            "x1",
            {
                "x2": _r((2, -1), (2,)),
                "x3": _r((2, -6, 1), (2,)),
                "x4": _r((4, -24, 10, -1), (4,)),
                "x5": _r((12, -88, 62, -14, 1), (12, -2)),
                "x6": _r((-24, 216, -252, 102, -17, 1), (-24, 4)),
                "z1": _H5_OMEGA,
                "z2": _H5_OMEGA.times(_r((1, -1))),
                "z3": _H5_OMEGA.times(_r((1, -4, 1))),
                "z4": _H5_OMEGA.times(_r((2, -15, 8, -1), (2,))),
            },
        ),
    )

    catalog["H6"] = LemmaFormula(
        name="H6",
        variables=("x8",),
        mu_bound=0.059,
        forms=_single(
            "x8",
            {
                "x1": _r((-168, 76, -8), _H6_DEN),
                "x2": _r((-168, 112, -26, 2), _H6_DEN),
                "x3": _r((-168, 172, -48, 4), _H6_DEN),
                "x4": _r((-168, 352, -174, 32, -2), _H6_DEN),
                "x5": _r((-168, 940, -800, 264, -38, 2), _H6_DEN),
                "x6": _r((-168, 1612, -1896, 896, -206, 23, -1), _H6_DEN),
                "x7": _r((-168, 1864, -2488, 1324, -340, 42, -2), _H6_DEN),
                "z1": _r((-8,), _H6_OMEGA_PRIME),
                "z2": _r((-8, 8), _H6_OMEGA_PRIME),
                "z3": _r((-8, 20, -4), _H6_OMEGA_PRIME),
                "z4": _r((-8, 52, -32, 4), _H6_OMEGA_PRIME),
                "z5": _r((-8, 88, -86, 24, -2), _H6_OMEGA_PRIME),
            },
        ),
    )
    return catalog


FORMULAS: Dict[str, LemmaFormula] = _build_catalog()


def formula(name: str) -> LemmaFormula:
    try:
        return FORMULAS[name.strip().upper()]
    except KeyError:
        raise UnknownFormulaError(f"Unknown lemma formula: {name}")


def lemma_formula(
    name: str,
    mu: float,
    boundary: Mapping[str, float],
    strict: bool = True,
) -> Dict[str, float]:
    """
    Every value label of a lemma gadget from its free boundary values.

    Args:
        name: Catalog name, E1..E3 or H1..H6
        mu: Algebraic connectivity the eigen-equation is solved for
        boundary: Values of the free variables (x1, x_r, x8, ...)
        strict: Require mu in [0, bound) for the lemma's bound

    Returns:
        Label -> value, free variables included

    Raises:
        UnknownFormulaError: If the name is not in the catalog
        MuOutOfRangeError: If strict and mu is out of range, or a
            denominator vanishes
        InvalidInputError: If a free variable is missing
    """
    entry = formula(name)
    if strict and not (0.0 <= mu < entry.mu_bound):
        raise MuOutOfRangeError(
            f"{entry.name} formulas need 0 <= mu < {entry.mu_bound}, got {mu}"
        )
    missing = [v for v in entry.variables if v not in boundary]
    if missing:
        raise InvalidInputError(f"{entry.name} needs boundary values for {missing}")
    values = {v: float(boundary[v]) for v in entry.variables}
    for label, form in entry.forms.items():
        values[label] = form.evaluate(mu, values)
    return values


# h' - h - eps * mu in closed form; a, b are the two free boundary values.


def _closed_e1(mu: float, n: int, v: Mapping[str, float]) -> float:
    p1 = poly(8, -90, 297, -275, 104, -17, 1)
    p2 = poly(0, -150, 475, -399, 132, -19, 1)
    p3 = poly(-6, 1) * poly(-5, 1) * poly(0, 0, 1) * poly(-5, 14, -8, 1)
    p = 4 * (poly(-2, 1) ** 2) * (poly(1, -6, 1) ** 2)
    x1 = v["x1"]
    return (p1(mu) * n + p2(mu)) * p3(mu) * x1 * x1 / (4 * n * p(mu))


def _closed_h1(mu: float, n: int, v: Mapping[str, float]) -> float:
    a, b = v["x_r"], v["x_r3"]
    return 2 * mu * (a - b) * ((mu - 2) * n * (a + b) + 2 * (a - b)) / (
        (mu - 2) ** 2 * n
    )


def _closed_h2(mu: float, n: int, v: Mapping[str, float]) -> float:
    a, b = v["x_r"], v["x_r4"]
    omega = mu * mu - 7 * mu + 8
    phi = omega * n * (a + b) + (2 * mu - 12) * (a - b)
    return phi * 2 * mu * (mu - 6) * (a - b) / (omega**2 * n)


def _closed_h3(mu: float, n: int, v: Mapping[str, float]) -> float:
    a, b = v["x_r"], v["x_r4"]
    d = float(poly(-14, 27, -10, 1)(mu))
    phi = d * n * (a + b) + (10 - 2 * mu) * (a - b)
    return phi * (-2 * mu * (mu - 5) * (a - b)) / (d * d * n)


def _closed_h4(mu: float, n: int, v: Mapping[str, float]) -> float:
    a, b = v["x_r"], v["x_r5"]
    d = float(poly(76, -126, 67, -14, 1)(mu))
    phi = d * n * (a + b) + (-2 * mu * mu + 18 * mu - 40) * (a - b)
    return phi * (-2 * (a - b) * (mu - 4) * (mu - 5) * mu) / (d * d * n)


CLOSED_FORMS: Dict[str, Callable[[float, int, Mapping[str, float]], float]] = {
    "E1": _closed_e1,
    "H1": _closed_h1,
    "H2": _closed_h2,
    "H3": _closed_h3,
    "H4": _closed_h4,
}


def closed_form_criterion(
    name: str, mu: float, n: int, boundary: Mapping[str, float]
) -> Optional[float]:
    """Closed expression of h' - h - eps * mu, or None when the lemma has none."""
    fn = CLOSED_FORMS.get(name.strip().upper())
    return fn(mu, n, boundary) if fn else None
