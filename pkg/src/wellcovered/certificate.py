"""Certificate plans: joins of function-graph complements whose scaled
independence counts approximate a prescribed coefficient sequence.

A target (a_1, ..., a_q) satisfying the binomial-ratio chain decomposes
as a_t = C(q,t) * sum_{s<=t} b_s with b_s >= 0.  Each nonzero b_j buys
copies of the complement of the (j-1, q, m) function graph, whose scaled
counts are exactly C(q,t) for t >= j and at most C(q,t)/m below.  Copy
counts and the scale T are cleared to exact integers, the per-index
deviations are exact rationals, and m is grown until every deviation is
below the requested epsilon.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .enumeration import ChainCheck
from .errors import BudgetExceededError
from .function_graph import (
    DEFAULT_VERTEX_BUDGET,
    build_function_graph,
    clique_count_closed_form,
    vertex_count,
)
from .graph import Graph, complement, join

DEFAULT_M_CAP = 1 << 20

RationalLike = Union[Fraction, int, str]


def _as_fraction(x: RationalLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class TargetSequence:
    """Coefficients a_1, ..., a_q to be approximated (a_0 is implicitly 1
    and excluded from certification).  values[t-1] holds a_t."""

    q: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("q must be at least 1")
        if len(self.values) != self.q:
            raise ValueError(f"expected {self.q} values, got {len(self.values)}")
        if any(v < 0 for v in self.values):
            raise ValueError("target coefficients must be non-negative")

    @classmethod
    def of(cls, q: int, values: Iterable[RationalLike]) -> "TargetSequence":
        return cls(q, tuple(_as_fraction(v) for v in values))

    def a(self, t: int) -> Fraction:
        if not 1 <= t <= self.q:
            raise ValueError(f"index {t} out of range 1..{self.q}")
        return self.values[t - 1]

    def to_json(self) -> list[str]:
        return [_frac_str(v) for v in self.values]


def check_binomial_chain(target: TargetSequence) -> ChainCheck:
    """Exact check of a_t/C(q,t) <= a_{t+1}/C(q,t+1) for 1 <= t < q;
    reports the smallest violating t."""
    q = target.q
    for t in range(1, q):
        if target.a(t) * comb(q, t + 1) > target.a(t + 1) * comb(q, t):
            return ChainCheck(False, t)
    return ChainCheck(True, None)


@dataclass(frozen=True)
class BDecomposition:
    """The increments b_t of the ratio chain: b_1 = a_1/C(q,1) and
    b_t = a_t/C(q,t) - a_{t-1}/C(q,t-1); all non-negative when the chain
    holds, and a_t = C(q,t) * sum_{s<=t} b_s reconstructs exactly."""

    q: int
    b: tuple[Fraction, ...]

    def reconstruct(self, t: int) -> Fraction:
        if not 1 <= t <= self.q:
            raise ValueError(f"index {t} out of range 1..{self.q}")
        return comb(self.q, t) * sum(self.b[:t], Fraction(0))


def b_decomposition(target: TargetSequence) -> BDecomposition:
    check = check_binomial_chain(target)
    if not check.holds:
        raise ValueError(
            f"binomial-ratio chain violated at index {check.first_violation}"
        )
    q = target.q
    ratios = [target.a(t) / comb(q, t) for t in range(1, q + 1)]
    b = [ratios[0]]
    b.extend(ratios[t] - ratios[t - 1] for t in range(1, q))
    return BDecomposition(q, tuple(b))


def choose_m(q: int, epsilon: RationalLike) -> int:
    """Smallest positive integer m with 2^q / m < epsilon."""
    eps = _as_fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    # need m > 2^q / eps, strictly
    return (1 << q) * eps.denominator // eps.numerator + 1


@dataclass(frozen=True)
class PlanComponent:
    """copies disjoint copies of the complement of the (k, q, m) function
    graph, all joined into the certificate graph."""

    k: int
    m: int
    copies: int


@dataclass(frozen=True)
class CertificatePlan:
    """A symbolic certificate: components, scale T, exact predicted counts
    for t = 1..q, and the per-index deviations |predicted_t/T - a_t|.

    Low-order predicted counts (t <= k within a component) come from the
    grid-validated closed form; they never exceed the m-fold coverage
    bound scale_j * C(q,t) / m, so the epsilon check errs on neither side.
    """

    q: int
    epsilon: Fraction
    m: int
    components: tuple[PlanComponent, ...]
    scale: int
    predicted: tuple[int, ...]
    target: TargetSequence
    deviations: tuple[Fraction, ...]

    @property
    def certified(self) -> bool:
        return all(d < self.epsilon for d in self.deviations)

    def vertex_total(self) -> int:
        return sum(
            c.copies * vertex_count(c.k, self.q, c.m) for c in self.components
        )

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "epsilon": _frac_str(self.epsilon),
            "components": [
                {"k": c.k, "m": c.m, "copies": str(c.copies)}
                for c in self.components
            ],
            "T": str(self.scale),
            "predicted": [str(p) for p in self.predicted],
            "deviations": [_frac_str(d) for d in self.deviations],
            "low_order_counts": "closed-form, grid-validated; at or below the m-fold coverage bound",
        }


class CertificateCheck(NamedTuple):
    """Outcome of an epsilon-certificate verification, with the exact
    deviation at every index."""

    ok: bool
    deviations: tuple[Fraction, ...]


def verify_certificate(
    counts: Sequence[int],
    scale: int,
    target: TargetSequence,
    epsilon: RationalLike,
) -> CertificateCheck:
    """Exact rational check of |counts_t / scale - a_t| < epsilon for all
    t = 1..q; counts[t-1] holds the count at index t."""
    eps = _as_fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    if scale <= 0:
        raise ValueError("scale must be positive")
    if len(counts) != target.q:
        raise ValueError(
            f"expected {target.q} counts, got {len(counts)}"
        )
    deviations = tuple(
        abs(Fraction(counts[t - 1], scale) - target.a(t))
        for t in range(1, target.q + 1)
    )
    return CertificateCheck(all(d < eps for d in deviations), deviations)


def plan_at_m(
    target: TargetSequence, m: int, epsilon: RationalLike
) -> CertificatePlan:
    """Build the symbolic plan for a fixed m, without enforcing that the
    deviations beat epsilon (build_plan handles the retry loop).

    One component per nonzero b_j: the complement of the (j-1, q, m)
    function graph carries scale_j = m^C(q,j-1), and clearing denominators
    with T = L * m^E (L the lcm of the b denominators, E the largest
    needed exponent) makes every copy count n_j = b_j * T / scale_j an
    exact non-negative integer.
    """
    if m < 1:
        raise ValueError("m must be positive")
    eps = _as_fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    q = target.q
    decomp = b_decomposition(target)
    selected = [(j, bj) for j, bj in enumerate(decomp.b, start=1) if bj > 0]
    if not selected:
        raise ValueError(
            "target sequence is identically zero; no join of well-covered "
            "components realizes it"
        )
    exponent = max(comb(q, j - 1) for j, _ in selected)
    denom_lcm = lcm(*(bj.denominator for _, bj in selected))
    scale = denom_lcm * m**exponent
    components = []
    for j, bj in selected:
        copies = bj * denom_lcm * m ** (exponent - comb(q, j - 1))
        assert copies.denominator == 1
        components.append(PlanComponent(j - 1, m, int(copies)))
    predicted = tuple(
        sum(
            c.copies * clique_count_closed_form(c.k, q, m, t)
            for c in components
        )
        for t in range(1, q + 1)
    )
    check = verify_certificate(predicted, scale, target, eps)
    return CertificatePlan(
        q, eps, m, tuple(components), scale, predicted, target, check.deviations
    )


def build_plan(
    target: TargetSequence,
    epsilon: RationalLike,
    *,
    m_cap: int = DEFAULT_M_CAP,
) -> CertificatePlan:
    """Certified plan at the smallest workable m.

    Starts from the smallest m with 2^q/m < epsilon, doubles m until the
    exact deviations all beat epsilon, then bisects back to the smallest
    passing m (deviations are monotone non-increasing in m).  Raises
    BudgetExceededError when m would exceed ``m_cap``.
    """
    eps = _as_fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    check = check_binomial_chain(target)
    if not check.holds:
        raise ValueError(
            f"binomial-ratio chain violated at index {check.first_violation}"
        )
    m = choose_m(target.q, eps)
    if m > m_cap:
        raise BudgetExceededError(f"initial m={m} already exceeds cap {m_cap}")
    plan = plan_at_m(target, m, eps)
    if plan.certified:
        return plan
    # double until certified, then bisect down to the smallest passing m
    low = m  # largest known failing m
    high = m
    while True:
        high *= 2
        if high > m_cap:
            raise BudgetExceededError(
                f"no certified plan with m <= cap {m_cap} (epsilon {_frac_str(eps)})"
            )
        plan = plan_at_m(target, high, eps)
        if plan.certified:
            break
        low = high
    lo, hi = low + 1, high
    while lo < hi:
        mid = (lo + hi) // 2
        if plan_at_m(target, mid, eps).certified:
            hi = mid
        else:
            lo = mid + 1
    return plan_at_m(target, lo, eps)


def materialize(
    plan: CertificatePlan, *, vertex_budget: int = DEFAULT_VERTEX_BUDGET
) -> Graph:
    """Join of all planned copies, in plan order.

    The result is well-covered with independence number q by construction
    (a join of well-covered graphs of equal independence number), and its
    independence counts equal ``plan.predicted`` exactly.
    """
    total = plan.vertex_total()
    if total > vertex_budget:
        raise BudgetExceededError(
            f"materialized plan needs {total} vertices, over budget {vertex_budget}"
        )
    parts: list[Graph] = []
    for c in plan.components:
        g = complement(
            build_function_graph(c.k, plan.q, c.m, vertex_budget=vertex_budget)
        )
        parts.extend([g] * c.copies)
    return join(parts)
