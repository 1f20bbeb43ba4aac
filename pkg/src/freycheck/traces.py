"""Frobenius traces by character sums and mod-p trace congruence evidence."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .arith import is_prime, legendre_symbol, primes_up_to
from . import tate
from .weierstrass import WeierstrassModel

__all__ = [
    "CONGRUENCE_DISCLAIMER",
    "DEFAULT_ELL_CAP",
    "CongruenceReport",
    "TraceRecord",
    "count_points",
    "mod_p_congruent",
    "trace_table",
]

#: Largest ell accepted by count_points unless the caller raises the cap.
DEFAULT_ELL_CAP = 10**4

CONGRUENCE_DISCLAIMER = (
    "trace agreement mod p over a finite range is evidence for congruent "
    "mod-p Galois representations, never a proof"
)


@dataclass(frozen=True)
class TraceRecord:
    ell: int
    a_ell: Optional[int]
    reduction: str  # "Good" | "Bad"

    def to_dict(self) -> Dict[str, object]:
        return {"ell": self.ell, "a_ell": self.a_ell, "reduction": self.reduction}

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "TraceRecord":
        a_ell = data["a_ell"]
        return cls(
            ell=int(data["ell"]),
            a_ell=None if a_ell is None else int(a_ell),
            reduction=str(data["reduction"]),
        )


@dataclass(frozen=True)
class CongruenceReport:
    p: int
    lmax: int
    compared_primes: List[int]
    congruent: bool
    first_violation: Optional[Tuple[int, int, int]]
    disclaimer: str = field(default=CONGRUENCE_DISCLAIMER)

    def to_dict(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "lmax": self.lmax,
            "compared_primes": list(self.compared_primes),
            "congruent": self.congruent,
            "first_violation": (
                None if self.first_violation is None else list(self.first_violation)
            ),
            "disclaimer": self.disclaimer,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "CongruenceReport":
        violation = data["first_violation"]
        return cls(
            p=int(data["p"]),
            lmax=int(data["lmax"]),
            compared_primes=[int(ell) for ell in data["compared_primes"]],
            congruent=bool(data["congruent"]),
            first_violation=(
                None
                if violation is None
                else (int(violation[0]), int(violation[1]), int(violation[2]))
            ),
            disclaimer=str(data["disclaimer"]),
        )


def count_points(
    model: WeierstrassModel, ell: int, ell_cap: int = DEFAULT_ELL_CAP
) -> int:
    """Trace of Frobenius a_ell = ell + 1 - #E(F_ell) for odd good ell.

    Computed as -sum_x legendre((2y + a1*x + a3)^2 form, ell): completing
    the square replaces the curve by Y^2 = 4x^3 + b2*x^2 + 2*b4*x + b6,
    which is valid for odd ell and leaves the character sum unchanged
    (the factor 4 is a square).  A model that is non-minimal at ell is
    replaced by its ell-minimal model before counting.
    """
    if ell == 2:
        raise ValueError("ell = 2 is excluded from trace computations")
    if ell < 3 or not is_prime(ell):
        raise ValueError("ell must be an odd prime")
    if ell > ell_cap:
        raise ValueError("ell exceeds the configured cap (%d)" % ell_cap)
    model.require_nonsingular()
    if model.discriminant() % ell == 0:
        data, minimal = tate.local_data_with_model(model, ell)
        if data.reduction != tate.GOOD:
            raise ValueError("bad reduction at %d" % ell)
        model = minimal
    b2, b4, b6, _ = model.b_invariants()
    r2, r4, r6 = b2 % ell, (2 * b4) % ell, b6 % ell
    total = 0
    for x in range(ell):
        gx = (((4 * x + r2) * x + r4) * x + r6) % ell
        total += legendre_symbol(gx, ell) if gx else 0
    return -total


def trace_table(
    model: WeierstrassModel, lmax: int, ell_cap: Optional[int] = None
) -> List[TraceRecord]:
    """Trace records at every odd prime ell <= lmax.

    Bad-reduction primes are marked reduction="Bad" with a_ell = None;
    primes where only the given model (not the curve) is singular are
    counted on the ell-minimal model.
    """
    if lmax < 3:
        raise ValueError("lmax must be >= 3")
    model.require_nonsingular()
    cap = max(lmax, DEFAULT_ELL_CAP) if ell_cap is None else ell_cap
    disc = model.discriminant()
    records: List[TraceRecord] = []
    for ell in primes_up_to(lmax):
        if ell == 2:
            continue
        if disc % ell == 0 and tate.local_data(model, ell).reduction != tate.GOOD:
            records.append(TraceRecord(ell=ell, a_ell=None, reduction="Bad"))
        else:
            records.append(
                TraceRecord(
                    ell=ell, a_ell=count_points(model, ell, cap), reduction="Good"
                )
            )
    return records


def mod_p_congruent(
    model1: WeierstrassModel, model2: WeierstrassModel, p: int, lmax: int
) -> CongruenceReport:
    """Compare traces of two curves mod p over odd primes ell <= lmax.

    Excluded from comparison: ell = 2 (always), ell = p, and primes of
    bad reduction for either curve.  The verdict is finite-range evidence
    only; see the report's disclaimer field.
    """
    if not is_prime(p):
        raise ValueError("p must be prime")
    table1 = {rec.ell: rec for rec in trace_table(model1, lmax)}
    table2 = {rec.ell: rec for rec in trace_table(model2, lmax)}
    compared: List[int] = []
    first_violation: Optional[Tuple[int, int, int]] = None
    for ell in sorted(table1):
        rec1, rec2 = table1[ell], table2[ell]
        if ell == p or rec1.reduction != "Good" or rec2.reduction != "Good":
            continue
        compared.append(ell)
        if first_violation is None and (rec1.a_ell - rec2.a_ell) % p != 0:
            first_violation = (ell, rec1.a_ell, rec2.a_ell)
    return CongruenceReport(
        p=p,
        lmax=lmax,
        compared_primes=compared,
        congruent=first_violation is None,
        first_violation=first_violation,
    )
