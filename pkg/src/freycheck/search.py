"""Bounded-height exhaustive searches.

Two families are covered:

* solutions of a^p + L^alpha * b^p + c^p = 0 with |a|, |b|, |c| <= H
  (L = 2 by default), enumerated over (a, b) with c recovered by exact
  integer p-th root extraction, never by floating point;
* arithmetic progressions of perfect n-th powers with positive bases.

The equation is homogeneous of degree p, so primitive solutions
determine all solutions; imprimitive records, when requested, are
tagged with their content gcd.  Search output is canonicalized under
the a<->c swap and the global sign flip and sorted, so results are
deterministic and independent of work partitioning.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .arith import exact_root, gcd_all, is_prime
from .frey import canonical_triple

__all__ = [
    "SIGMA_PRIMES",
    "ApSearchOutcome",
    "CaseResult",
    "SearchOutcome",
    "SearchSpec",
    "SolutionRecord",
    "TRIVIAL_FORM",
    "classify_ap_outcome",
    "classify_search_outcome",
    "search_ap_powers",
    "search_star",
    "verify_cubic_cases",
    "verify_theorem_claims",
]

#: Coefficient primes L for which a^p + L^alpha*b^p + c^p = 0 is known to
#: have no non-zero solutions whenever p >= 11 is prime, p != L, alpha >= 0.
SIGMA_PRIMES = frozenset({3, 5, 7, 11, 13, 17, 19, 23, 29, 53, 59})

#: Canonical form of the trivial solution family a = c = -b (L = 2, alpha = 1).
TRIVIAL_FORM = (-1, 1, -1)


@dataclass(frozen=True)
class SearchSpec:
    p: int
    alpha: int
    height: int
    L: int = 2
    require_primitive: bool = True

    def __post_init__(self) -> None:
        if self.p < 3 or self.p % 2 == 0 or not is_prime(self.p):
            raise ValueError("p must be an odd prime")
        if self.alpha < 0:
            raise ValueError("alpha must be non-negative")
        if not is_prime(self.L):
            raise ValueError("L must be prime")
        if self.height < 1:
            raise ValueError("height must be >= 1")

    @property
    def reduced_alpha(self) -> int:
        """alpha mod p; 0 marks the Fermat case."""
        return self.alpha % self.p

    def to_dict(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "alpha": self.alpha,
            "height": self.height,
            "L": self.L,
            "require_primitive": self.require_primitive,
        }


@dataclass(frozen=True)
class SolutionRecord:
    a: int
    b: int
    c: int
    normalized_form: Tuple[int, int, int]
    trivial: bool
    content: int = 1

    def to_dict(self) -> Dict[str, object]:
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "normalized_form": list(self.normalized_form),
            "trivial": self.trivial,
            "content": self.content,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "SolutionRecord":
        form = tuple(int(x) for x in data["normalized_form"])
        return cls(
            a=int(data["a"]),
            b=int(data["b"]),
            c=int(data["c"]),
            normalized_form=form,  # type: ignore[arg-type]
            trivial=bool(data["trivial"]),
            content=int(data["content"]),
        )


def _pth_power_filter(p: int) -> Tuple[int, frozenset]:
    """A small prime q = 1 mod p and the set of p-th power residues mod q.

    Membership of S mod q in the set is a necessary condition for S to be
    a p-th power, used to skip most exact-root extractions.
    """
    q = p + 1
    while not (q % p == 1 and is_prime(q)):
        q += 1
    return q, frozenset(pow(x, p, q) for x in range(q))


def _search_chunk(args: Tuple[SearchSpec, int, int]) -> List[Tuple[int, int, int]]:
    """Raw solutions with a in [a_lo, a_hi); a > 0 only (sign flip recovers)."""
    spec, a_lo, a_hi = args
    p, height = spec.p, spec.height
    coeff = spec.L**spec.alpha
    height_pow = height**p
    q, residues = _pth_power_filter(p)
    b_terms = []
    for b in range(1, height + 1):
        term = coeff * b**p
        b_terms.append((b, term))
        b_terms.append((-b, -term))
    raw: List[Tuple[int, int, int]] = []
    for a in range(a_lo, a_hi):
        a_pow = a**p
        for b, term in b_terms:
            target = -(a_pow + term)
            if target == 0 or abs(target) > height_pow:
                continue
            if target % q not in residues and (-target) % q not in residues:
                continue
            c = exact_root(target, p)
            if c is None:
                continue
            if spec.require_primitive and gcd_all([a, b, c]) != 1:
                continue
            raw.append((a, b, c))
    return raw


def _records_from_raw(
    spec: SearchSpec, raw: Sequence[Tuple[int, int, int]]
) -> List[SolutionRecord]:
    coeff = spec.L**spec.alpha
    by_key: Dict[Tuple[Tuple[int, int, int], int], SolutionRecord] = {}
    for a, b, c in raw:
        # Exact re-verification of every candidate before it is emitted.
        if a**spec.p + coeff * b**spec.p + c**spec.p != 0:
            raise AssertionError("search emitted a non-solution")
        content = gcd_all([a, b, c])
        form = canonical_triple(a // content, b // content, c // content)
        key = (form, content)
        if key not in by_key:
            by_key[key] = SolutionRecord(
                a=content * form[0],
                b=content * form[1],
                c=content * form[2],
                normalized_form=form,
                trivial=form == TRIVIAL_FORM,
                content=content,
            )
    return sorted(by_key.values(), key=lambda rec: (rec.normalized_form, rec.content))


def search_star(spec: SearchSpec, workers: int = 1) -> List[SolutionRecord]:
    """All solutions of a^p + L^alpha*b^p + c^p = 0 with entries in [-H, H].

    One record per orbit under the a<->c swap and the global sign flip,
    sorted by canonical form; deterministic for any ``workers`` value.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    height = spec.height
    if workers > 1 and height > 1:
        step = -(-height // workers)
        chunks = [
            (spec, lo, min(lo + step, height + 1))
            for lo in range(1, height + 1, step)
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            raw = [triple for part in pool.map(_search_chunk, chunks) for triple in part]
    else:
        raw = _search_chunk((spec, 1, height + 1))
    return _records_from_raw(spec, raw)


@dataclass(frozen=True)
class SearchOutcome:
    """How a record set relates to the established results for the family."""

    claim: str  # "established" | "empirical"
    expected: str  # "empty" | "trivial-only" | "none"
    counterexamples: List[SolutionRecord]

    @property
    def conforms(self) -> bool:
        return not self.counterexamples


def classify_search_outcome(
    spec: SearchSpec, records: Sequence[SolutionRecord]
) -> SearchOutcome:
    """Label findings against the known results for (p, alpha, L).

    L = 2: reduced alpha 0 expects nothing (Fermat), 1 expects only the
    trivial family, >= 2 expects nothing; these are established results.
    Odd L in SIGMA_PRIMES with p >= 11, p != L expects nothing, but the
    claim label stays "empirical" for the whole odd-L family (an empty
    scan cannot distinguish a theorem from an accident of the height).
    Everything else is an empirical scan with no expected verdict.
    """
    alpha_red = spec.reduced_alpha
    if spec.L == 2:
        if alpha_red == 1:
            return SearchOutcome(
                claim="established",
                expected="trivial-only",
                counterexamples=[rec for rec in records if not rec.trivial],
            )
        return SearchOutcome(
            claim="established", expected="empty", counterexamples=list(records)
        )
    if spec.L in SIGMA_PRIMES and spec.p >= 11 and spec.p != spec.L:
        return SearchOutcome(
            claim="empirical", expected="empty", counterexamples=list(records)
        )
    return SearchOutcome(claim="empirical", expected="none", counterexamples=[])


@dataclass(frozen=True)
class CaseResult:
    spec: SearchSpec
    records: List[SolutionRecord]
    outcome: SearchOutcome

    @property
    def conforms(self) -> bool:
        return self.outcome.conforms

    def to_dict(self) -> Dict[str, object]:
        return {
            "spec": self.spec.to_dict(),
            "records": [rec.to_dict() for rec in self.records],
            "claim": self.outcome.claim,
            "expected": self.outcome.expected,
            "counterexamples": [rec.to_dict() for rec in self.outcome.counterexamples],
            "conforms": self.conforms,
        }


def verify_theorem_claims(
    p_list: Sequence[int],
    alpha_list: Sequence[int],
    height: int,
    workers: int = 1,
) -> List[CaseResult]:
    """Search every (p, alpha) with alpha < p over L = 2 and classify results."""
    cases: List[CaseResult] = []
    for p in p_list:
        for alpha in alpha_list:
            if alpha >= p:
                continue
            spec = SearchSpec(p=p, alpha=alpha, height=height)
            records = search_star(spec, workers=workers)
            cases.append(
                CaseResult(
                    spec=spec,
                    records=records,
                    outcome=classify_search_outcome(spec, records),
                )
            )
    return cases


def verify_cubic_cases(height: int, workers: int = 1) -> List[CaseResult]:
    """The two classical p = 3 cases.

    alpha = 1 (a^3 + 2b^3 + c^3 = 0) admits exactly the trivial family;
    alpha = 2 (a^3 + 4b^3 + c^3 = 0) admits nothing.
    """
    return verify_theorem_claims([3], [1, 2], height, workers=workers)


def search_ap_powers(
    n: int, k: int, height: int, distinct_only: bool = True
) -> List[Tuple[int, ...]]:
    """k-term arithmetic progressions x_1^n <= ... <= x_k^n of n-th powers.

    Bases are positive and at most ``height``; progressions are emitted
    as non-decreasing base tuples in lexicographic order.  With
    ``distinct_only`` the common difference must be non-zero (constant
    progressions are excluded).
    """
    if n < 2:
        raise ValueError("exponent n must be >= 2")
    if k not in (3, 4):
        raise ValueError("only 3- and 4-term progressions are supported")
    if height < 1:
        raise ValueError("height must be >= 1")
    results: List[Tuple[int, ...]] = []
    powers = [x**n for x in range(height + 1)]
    for x1 in range(1, height + 1):
        x2_start = x1 + 1 if distinct_only else x1
        for x2 in range(x2_start, height + 1):
            diff = powers[x2] - powers[x1]
            x3 = exact_root(powers[x2] + diff, n)
            if x3 is None or x3 > height:
                continue
            if k == 3:
                results.append((x1, x2, x3))
                continue
            x4 = exact_root(powers[x3] + diff, n)
            if x4 is None or x4 > height:
                continue
            results.append((x1, x2, x3, x4))
    return results


@dataclass(frozen=True)
class ApSearchOutcome:
    claim: str  # "established" | "empirical"
    expected: str  # "empty" | "none"
    counterexamples: List[Tuple[int, ...]]

    @property
    def conforms(self) -> bool:
        return not self.counterexamples


def classify_ap_outcome(
    n: int, k: int, distinct_only: bool, tuples: Sequence[Tuple[int, ...]]
) -> ApSearchOutcome:
    """Label progression findings against established non-existence results.

    Non-constant progressions are ruled out for four squares, three
    fourth powers, and three n-th powers for every n >= 3 (any n >= 3 is
    divisible by 4 or by an odd prime, reducing to a settled or
    conjectured three-power case; a hit is reportable either way).
    Three squares are expected to exist, so k = 3, n = 2 carries no claim.
    """
    none_expected = distinct_only and (k == 4 or n >= 3)
    if none_expected:
        return ApSearchOutcome(
            claim="established", expected="empty", counterexamples=list(tuples)
        )
    return ApSearchOutcome(claim="empirical", expected="none", counterexamples=[])
