"""Frey curves y^2 = x*(x - A)*(x + B) for a^p + 2^alpha*b^p + c^p = 0.

A candidate solution (a, b, c) with 1 <= alpha < p is normalized so that
a = -1 mod 4, then mapped to the monomial triple

    A = a^p,   B = 2^alpha * b^p,   C = c^p,   A + B + C = 0,

and to the curve above, whose non-minimal discriminant is 16*(A*B*C)^2.
Closed-form invariants (conductor exponent at 2 keyed on ord_2(B), odd
radical, odd discriminant valuations) are computed here symbolically;
the 2-adic minimal discriminant exponent is the one quantity delegated
to the independent Tate-algorithm oracle.  The table route and the
oracle route are never merged: cross-checking them is the point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .arith import DEFAULT_FACTOR_BOUND, factorize, gcd_all, is_prime, valuation
from . import tate
from .weierstrass import WeierstrassModel

__all__ = [
    "CONDUCTOR_EXPONENT_AT_2",
    "CurveInvariants",
    "FreyParams",
    "MonomialTriple",
    "build_frey",
    "canonical_triple",
    "cartan_type",
    "frey_model",
    "invariants",
    "is_trivial_level",
    "normalize",
    "reduce_alpha",
    "sign_normalized",
]

#: Conductor exponent at 2 keyed on ord_2(B) (every value >= 5 maps to 1).
#: 16 | B, i.e. ord_2(B) >= 4, is exactly the semistable range (t <= 1).
CONDUCTOR_EXPONENT_AT_2: Dict[int, int] = {1: 5, 2: 3, 3: 3, 4: 0}


@dataclass(frozen=True)
class FreyParams:
    p: int
    alpha: int
    a: int
    b: int
    c: int
    normalized: bool

    def to_dict(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "alpha": self.alpha,
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "normalized": self.normalized,
        }


@dataclass(frozen=True)
class MonomialTriple:
    A: int
    B: int
    C: int

    def to_dict(self) -> Dict[str, int]:
        return {"A": self.A, "B": self.B, "C": self.C}

    def validate(self) -> None:
        if self.A == 0 or self.B == 0 or self.C == 0:
            raise ValueError("triple entries must be non-zero")
        if self.A + self.B + self.C != 0:
            raise ValueError("triple must sum to zero")
        if gcd_all([self.A, self.B, self.C]) != 1:
            raise ValueError("triple must be coprime")
        if self.B % 2 != 0:
            raise ValueError("not a Frey triple (B must be even)")
        if self.A % 4 != 3:
            raise ValueError("not a Frey triple (A must be -1 mod 4)")


@dataclass(frozen=True)
class CurveInvariants:
    t: int
    odd_radical: int
    conductor: int
    semistable: bool
    u: int
    odd_disc_valuations: Dict[int, int]

    def to_dict(self) -> Dict[str, object]:
        return {
            "t": self.t,
            "odd_radical": self.odd_radical,
            "conductor": self.conductor,
            "semistable": self.semistable,
            "u": self.u,
            "odd_disc_valuations": {
                str(ell): v for ell, v in sorted(self.odd_disc_valuations.items())
            },
        }

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "CurveInvariants":
        return cls(
            t=int(data["t"]),
            odd_radical=int(data["odd_radical"]),
            conductor=int(data["conductor"]),
            semistable=bool(data["semistable"]),
            u=int(data["u"]),
            odd_disc_valuations={
                int(k): int(v) for k, v in dict(data["odd_disc_valuations"]).items()
            },
        )


def _require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")


def sign_normalized(a: int, b: int, c: int) -> Tuple[int, int, int]:
    """Flip the sign of all three entries unless a = -1 mod 4 already (a odd)."""
    if a % 2 == 0:
        raise ValueError("sign normalization needs an odd first entry")
    return (a, b, c) if a % 4 == 3 else (-a, -b, -c)


def canonical_triple(a: int, b: int, c: int) -> Tuple[int, int, int]:
    """Canonical orbit representative under a<->c swap and global sign flip.

    For odd a and c this is the lexicographically smaller of the two
    sign-normalized orderings, so the first entry is -1 mod 4 and, when
    both orderings keep that congruence, the one with a <= c is chosen.
    Mixed-parity triples fall back to the lex-min of the full orbit.
    """
    if a % 2 != 0 and c % 2 != 0:
        return min(sign_normalized(a, b, c), sign_normalized(c, b, a))
    orbit = [(a, b, c), (c, b, a), (-a, -b, -c), (-c, -b, -a)]
    return min(orbit)


def normalize(p: int, alpha: int, a: int, b: int, c: int) -> FreyParams:
    """Validate a candidate solution and fix signs so that a = -1 mod 4.

    Idempotent: normalizing the output again returns the same params.
    """
    _require_odd_prime(p)
    if not 1 <= alpha < p:
        raise ValueError("alpha must satisfy 1 <= alpha < p")
    if a == 0 or b == 0 or c == 0:
        raise ValueError("entries must be non-zero")
    if a**p + 2**alpha * b**p + c**p != 0:
        raise ValueError("not a solution")
    if gcd_all([a, b, c]) != 1:
        raise ValueError("not primitive")
    if a % 2 == 0 or c % 2 == 0:
        raise ValueError("parity violation")
    a, b, c = sign_normalized(a, b, c)
    return FreyParams(p=p, alpha=alpha, a=a, b=b, c=c, normalized=True)


def reduce_alpha(alpha: int, b: int, p: int) -> Tuple[int, int]:
    """(alpha mod p, 2^(alpha div p) * b): absorb whole p-th powers of 2 into b.

    A reduced alpha of 0 means the equation is the Fermat equation for p.
    """
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    _require_odd_prime(p)
    return alpha % p, (1 << (alpha // p)) * b


def build_frey(params: FreyParams) -> Tuple[MonomialTriple, WeierstrassModel]:
    """Monomial triple and curve model attached to normalized parameters."""
    if not params.normalized:
        raise ValueError("params must be normalized first")
    A = params.a**params.p
    B = 2**params.alpha * params.b**params.p
    C = params.c**params.p
    triple = MonomialTriple(A=A, B=B, C=C)
    triple.validate()
    return triple, frey_model(triple)


def frey_model(triple: MonomialTriple) -> WeierstrassModel:
    """y^2 = x*(x - A)*(x + B); its discriminant is 16*(A*B*C)^2."""
    return WeierstrassModel(0, triple.B - triple.A, 0, -triple.A * triple.B, 0)


def invariants(
    triple: MonomialTriple, p: int, factor_bound: int = DEFAULT_FACTOR_BOUND
) -> CurveInvariants:
    """Closed-form conductor and discriminant data for a Frey triple.

    All fields except ``u`` come from the symbolic table route;
    ``u`` (minimal discriminant = 2^u * (A*B*C)^2) is delegated to the
    Tate oracle so the two routes stay comparable downstream.
    """
    _require_odd_prime(p)
    triple.validate()
    ord2_b = valuation(triple.B, 2)
    t = CONDUCTOR_EXPONENT_AT_2.get(ord2_b, 1)

    odd_vals: Dict[int, int] = {}
    for entry in (triple.A, triple.B, triple.C):
        for ell, e in factorize(entry, factor_bound).items():
            if ell != 2:
                odd_vals[ell] = odd_vals.get(ell, 0) + 2 * e

    odd_radical = 1
    for ell in odd_vals:
        odd_radical *= ell

    min_v2 = tate.minimal_disc_valuation_at_2(frey_model(triple))
    u = min_v2 - 2 * ord2_b
    if t == 1 and u != -8:
        raise AssertionError("u must be -8 in the multiplicative (t = 1) case")

    return CurveInvariants(
        t=t,
        odd_radical=odd_radical,
        conductor=2**t * odd_radical,
        semistable=ord2_b >= 4,
        u=u,
        odd_disc_valuations=odd_vals,
    )


def is_trivial_level(inv: CurveInvariants) -> bool:
    """True when the odd radical is 1, i.e. the conductor is a power of 2.

    Happens exactly for the trivial-solution curve family.
    """
    return inv.odd_radical == 1


def cartan_type(p: int) -> str:
    """Which non-split/split Cartan case p falls in: split iff p = 1 mod 4."""
    _require_odd_prime(p)
    return "Split" if p % 4 == 1 else "NonSplit"
