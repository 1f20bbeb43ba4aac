"""Local reduction data of integral Weierstrass models via Tate's algorithm.

The algorithm is executed honestly at every prime, including 2 and 3
(root counting over the residue field, no valuation shortcuts), so this
module can serve as an independent oracle for closed-form conductor
tables computed elsewhere in the package.  The two routes are kept
strictly separate: nothing here consults the table side.

Layout of the main loop (one pass per candidate model; a non-minimal
model is rescaled by p and the loop restarts):

1.  v(disc) = 0                        -> good reduction, type I0.
2.  translate the singular point of the reduction to (0, 0);
    v(c4) = 0                          -> multiplicative, type I_n.
3.  p^2 does not divide a6             -> type II.
4.  p^3 does not divide b8             -> type III.
5.  p^3 does not divide b6             -> type IV.
6.  normalize so p | a1, a2; p^2 | a3, a4; p^3 | a6; examine the cubic
    P(T) = T^3 + (a2/p) T^2 + (a4/p^2) T + (a6/p^3) over F_p:
    distinct roots                     -> type I0*.
7.  double root (translated to T = 0)  -> types I_m*, m >= 1, found by
    alternately testing a quadratic in Y and one in X for repeated roots.
8.  triple root (translated to T = 0)  -> types IV*, III*, II* in turn,
    else the model is non-minimal: rescale by p and restart.

Conductor exponents follow from the type and v(disc) by Ogg's formula
f = v(disc) + 1 - (number of components), valid in all residue
characteristics (wild parts included automatically).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .arith import (
    DEFAULT_FACTOR_BOUND,
    factorize,
    is_prime,
    legendre_symbol,
    valuation,
)
from .weierstrass import WeierstrassModel

__all__ = [
    "ADDITIVE",
    "GOOD",
    "LocalData",
    "MULT_NONSPLIT",
    "MULT_SPLIT",
    "all_local_data",
    "global_conductor",
    "local_data",
    "local_data_with_model",
    "minimal_disc_valuation_at_2",
]

GOOD = "Good"
MULT_SPLIT = "MultiplicativeSplit"
MULT_NONSPLIT = "MultiplicativeNonsplit"
ADDITIVE = "Additive"


@dataclass(frozen=True)
class LocalData:
    """Reduction data of a curve at one prime.

    ``scalings`` counts how many times the algorithm replaced the input
    model by a p-rescaled one before reaching a minimal model; each step
    lowers the discriminant valuation by 12.
    """

    prime: int
    conductor_exponent: int
    min_disc_valuation: int
    kodaira_type: str
    reduction: str
    scalings: int

    def to_dict(self) -> Dict[str, object]:
        return {
            "prime": self.prime,
            "conductor_exponent": self.conductor_exponent,
            "min_disc_valuation": self.min_disc_valuation,
            "kodaira_type": self.kodaira_type,
            "reduction": self.reduction,
            "scalings": self.scalings,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "LocalData":
        return cls(
            prime=int(data["prime"]),
            conductor_exponent=int(data["conductor_exponent"]),
            min_disc_valuation=int(data["min_disc_valuation"]),
            kodaira_type=str(data["kodaira_type"]),
            reduction=str(data["reduction"]),
            scalings=int(data["scalings"]),
        )


def _inv(a: int, m: int) -> int:
    return pow(a, -1, m)


def _exact_div(n: int, d: int) -> int:
    q, r = divmod(n, d)
    if r:
        raise AssertionError("non-exact division inside Tate's algorithm")
    return q


def _tangents_rational(a1: int, a2: int, p: int) -> bool:
    """Whether T^2 + a1*T - a2 (the node's tangent quadratic) splits over F_p."""
    if p == 2:
        return a2 % 2 == 0 or (1 + a1 - a2) % 2 == 0
    disc = (a1 * a1 + 4 * a2) % p
    if disc == 0:
        raise AssertionError("degenerate tangent quadratic at a node")
    return legendre_symbol(disc, p) == 1


def local_data_with_model(
    model: WeierstrassModel, ell: int
) -> Tuple[LocalData, WeierstrassModel]:
    """Tate's algorithm at ell; returns local data and an ell-minimal model.

    The returned model is ell-integrally equivalent to the input and
    minimal at ell (its discriminant valuation is the minimal one).
    """
    if ell < 2 or not is_prime(ell):
        raise ValueError("%d is not prime" % ell)
    model.require_nonsingular()
    p = ell
    p2, p3 = p * p, p**3
    E = model
    scalings = 0
    while True:
        delta = E.discriminant()
        if delta % p != 0:
            return LocalData(p, 0, 0, "I0", GOOD, scalings), E
        n = valuation(delta, p)
        b2, b4, b6, b8 = E.b_invariants()
        c4, c6 = E.c_invariants()
        a1, a2, a3, a4, a6 = E.coefficients()

        # Translate the singular point of the reduction to (0, 0).
        if p == 2:
            if b2 % 2 == 0:
                r = a4 % 2
                t = (r * (1 + a2 + a4) + a6) % 2
            else:
                r = a3 % 2
                t = (r + a4) % 2
        elif p == 3:
            r = (-b6) % 3 if b2 % 3 == 0 else (-b2 * b4) % 3
            t = (a1 * r + a3) % 3
        else:
            if c4 % p == 0:
                r = (-b2 * _inv(12, p)) % p
            else:
                r = (-(c6 + b2 * c4) * _inv(12 * c4 % p, p)) % p
            t = (-(a1 * r + a3) * _inv(2, p)) % p
        E = E.translated(r=r, t=t)
        a1, a2, a3, a4, a6 = E.coefficients()

        if c4 % p != 0:  # c4 is translation-invariant
            red = MULT_SPLIT if _tangents_rational(a1, a2, p) else MULT_NONSPLIT
            return LocalData(p, 1, n, "I%d" % n, red, scalings), E

        if a6 % p2 != 0:
            return LocalData(p, n, n, "II", ADDITIVE, scalings), E
        b8 = E.b_invariants()[3]
        if b8 % p3 != 0:
            return LocalData(p, n - 1, n, "III", ADDITIVE, scalings), E
        b6 = E.b_invariants()[2]
        if b6 % p3 != 0:
            return LocalData(p, n - 2, n, "IV", ADDITIVE, scalings), E

        # Normalize so that p | a1, a2; p^2 | a3, a4; p^3 | a6.
        if p == 2:
            s = a2 % 2
            t = 2 * ((a6 // 4) % 2)
        else:
            s = (-a1 * _inv(2, p)) % p
            t = (-a3 * _inv(2, p2)) % p2
        E = E.translated(s=s, t=t)
        a1, a2, a3, a4, a6 = E.coefficients()

        bq = _exact_div(a2, p)
        cq = _exact_div(a4, p2)
        dq = _exact_div(a6, p3)
        disc_p = (
            18 * bq * cq * dq
            - 4 * bq**3 * dq
            + bq * bq * cq * cq
            - 4 * cq**3
            - 27 * dq * dq
        )
        if disc_p % p != 0:
            return LocalData(p, n - 4, n, "I0*", ADDITIVE, scalings), E

        x_p = 3 * cq - bq * bq
        if x_p % p != 0:
            # Double root of P: types I_m*, m >= 1.
            if p == 2:
                r0 = cq % 2
            else:
                r0 = ((bq * cq - 9 * dq) * _inv(2 * x_p % p, p)) % p
            E = E.translated(r=p * r0)
            m = 1
            px = p2  # a4 examined through p*px, a6 through px*py
            py = p2  # a3 examined through py
            while True:
                if m > n:
                    raise AssertionError("runaway I_m* loop")
                a1, a2, a3, a4, a6 = E.coefficients()
                a3q = _exact_div(a3, py)
                a6q = _exact_div(a6, px * py)
                if (a3q * a3q + 4 * a6q) % p != 0:
                    break
                y0 = a6q % 2 if p == 2 else (-a3q * _inv(2, p)) % p
                E = E.translated(t=py * y0)
                m += 1
                py *= p
                a1, a2, a3, a4, a6 = E.coefficients()
                a2q = _exact_div(a2, p)
                a4q = _exact_div(a4, p * px)
                a6q = _exact_div(a6, px * py)
                if (a4q * a4q - 4 * a2q * a6q) % p != 0:
                    break
                x0 = a6q % 2 if p == 2 else (-a4q * _inv(2 * a2q % p, p)) % p
                E = E.translated(r=px * x0)
                m += 1
                px *= p
            return LocalData(p, n - 4 - m, n, "I%d*" % m, ADDITIVE, scalings), E

        # Triple root of P: translate it to T = 0.
        if p == 2:
            r0 = bq % 2
        elif p == 3:
            r0 = (-dq) % 3
        else:
            r0 = (-bq * _inv(3, p)) % p
        E = E.translated(r=p * r0)
        a1, a2, a3, a4, a6 = E.coefficients()

        a3q = _exact_div(a3, p2)
        a6q = _exact_div(a6, p2 * p2)
        if (a3q * a3q + 4 * a6q) % p != 0:
            return LocalData(p, n - 6, n, "IV*", ADDITIVE, scalings), E
        y0 = a6q % 2 if p == 2 else (-a3q * _inv(2, p)) % p
        E = E.translated(t=p2 * y0)
        a1, a2, a3, a4, a6 = E.coefficients()

        if a4 % (p2 * p2) != 0:
            return LocalData(p, n - 7, n, "III*", ADDITIVE, scalings), E
        if a6 % (p3 * p3) != 0:
            return LocalData(p, n - 8, n, "II*", ADDITIVE, scalings), E

        # Non-minimal at p: rescale and start over.
        E = E.rescaled_down(p)
        scalings += 1


def local_data(model: WeierstrassModel, ell: int) -> LocalData:
    """Reduction data (conductor exponent, Kodaira type, ...) of model at ell."""
    return local_data_with_model(model, ell)[0]


def all_local_data(
    model: WeierstrassModel, factor_bound: int = DEFAULT_FACTOR_BOUND
) -> List[LocalData]:
    """Local data at every prime dividing the discriminant, ascending.

    Raises FactorizationError if the discriminant cannot be fully
    factored within the bound.
    """
    model.require_nonsingular()
    factors = factorize(model.discriminant(), factor_bound)
    return [local_data(model, p) for p in sorted(factors)]


def global_conductor(
    model: WeierstrassModel, factor_bound: int = DEFAULT_FACTOR_BOUND
) -> int:
    """Conductor of the curve, as the product of local exponent contributions."""
    conductor = 1
    for data in all_local_data(model, factor_bound):
        conductor *= data.prime**data.conductor_exponent
    return conductor


def minimal_disc_valuation_at_2(model: WeierstrassModel) -> int:
    """2-adic valuation of the minimal discriminant of the given model."""
    return local_data(model, 2).min_disc_valuation
