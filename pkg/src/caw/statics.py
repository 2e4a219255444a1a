"""Comparative statics: wage pass-through from the effective agent wage,
ceiling time trajectories, wage-vs-wage-bill analysis, and generic scenario
sweeps.

The pass-through identity checked here is

    dlog(w_h)/dlog(w_a_eff) = 1 - (1/sigma) * dlog(l_h/l_a)/dlog(w_a_eff)

holding the human labor supply curve and the effective-labor demand level
fixed. With a perfectly inelastic (fixed-quantity) supply curve the
quantity ratio is pinned by the two quantity constraints, its derivative is
zero, and the pass-through is exactly one. With an upward-sloping supply
curve the ratio term partially offsets the direct effect.

Labeling note: textbook treatments sometimes attach the unit pass-through
to the perfectly elastic supply polar case. Under the fixed-demand setup
used here it is the fixed-quantity (inelastic) supply curve that pins the
input ratio and yields exactly one, while an upward-sloping curve
produces the offset term. The implementation follows the formula, which
is internally consistent, and reports both sides of the identity so the
check is visible.

The ratio derivative inside the direct formula has no closed form under a
general supply curve, so it is estimated by the same centered difference as
the outer check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Sequence

from . import constants
from .ces import relative_wage
from .errors import CeilingNotBinding, Infeasible, InvalidInput, NoConvergence
from .markets import clear_market, solve_scenario
from .model import CesParams, CurveKind, EquilibriumResult, IsoElasticCurve, Scenario, Technology


@dataclass(frozen=True)
class StaticsSetup:
    """Environment for the pass-through exercise.

    ``l_eff_demand`` is the fixed effective-labor quantity demanded;
    ``labor_supply`` with elasticity 0 encodes the fixed-quantity polar case.
    """

    ces: CesParams
    l_eff_demand: float
    labor_supply: IsoElasticCurve
    w_a_eff: float


@dataclass(frozen=True)
class StaticsPoint:
    w_h: float
    l_h: float
    l_a: float


@dataclass(frozen=True)
class SemiElasticity:
    """Pass-through computed two ways, plus the one-sided differences."""

    direct: float
    fd: float
    fd_forward: float
    fd_backward: float
    base: StaticsPoint


@dataclass(frozen=True)
class WageBillState:
    wage: float
    employment: float
    bill: float


@dataclass(frozen=True)
class WageBillResponse:
    before: WageBillState
    after: WageBillState


@dataclass(frozen=True)
class SweepRow:
    """One grid point of a parameter sweep; ``error`` set when solving failed."""

    value: float
    result: EquilibriumResult | None
    error: str | None = None


def _agent_labor_for_target(ces: CesParams, l_h: float, target: float) -> float | None:
    """l_a solving ces_output(l_h, l_a) == target for fixed l_h > 0.

    Returns None when humans alone already meet or exceed the target (no
    positive l_a solves the equality); raises Infeasible when no finite l_a
    can reach it (complements with too little human labor).
    """
    sigma = ces.sigma
    if abs(sigma - 1.0) < constants.SIGMA_ONE_BAND:
        total = ces.alpha + ces.beta
        a, b = ces.alpha / total, ces.beta / total
        log_la = (math.log(target / ces.A) - a * math.log(l_h)) / b
        return math.exp(log_la)
    if sigma >= constants.SIGMA_LINEAR_THRESHOLD:
        l_a = (target / ces.A - ces.alpha * l_h) / ces.beta
        return l_a if l_a > 0.0 else None
    if sigma <= constants.SIGMA_LEONTIEF_THRESHOLD:
        required = target / ces.A
        if l_h < required:
            raise Infeasible("human labor below the fixed-proportions requirement")
        return required

    rho = ces.rho
    x_target = rho * math.log(target / ces.A)
    x_human = math.log(ces.alpha) + rho * math.log(l_h)
    gap_positive = x_target > x_human
    if not gap_positive:
        if rho < 0.0:
            raise Infeasible("output target unreachable even as agent labor grows without bound")
        return None
    log_gap = x_target + math.log1p(-math.exp(x_human - x_target))
    return math.exp((log_gap - math.log(ces.beta)) / rho)


def solve_statics_point(
    su: StaticsSetup, tol: float = constants.STATICS_WAGE_REL_TOL
) -> StaticsPoint:
    """Wage and quantities satisfying supply, output, and relative-wage conditions.

    The three conditions are l_h = supply(w_h), ces_output(l_h, l_a) =
    l_eff_demand, and w_h/w_a_eff = relative_wage(l_h, l_a). The inner solve
    for l_a given l_h is closed form; the outer search on w_h is a bisection
    on the (monotone) gap between the candidate and implied wage. The
    fixed-quantity supply case is solved in closed form so the polar
    pass-through result is exact.
    """
    if not (su.l_eff_demand > 0.0):
        raise InvalidInput(f"l_eff_demand must be > 0, got {su.l_eff_demand!r}")
    if not (su.w_a_eff > 0.0):
        raise InvalidInput(f"w_a_eff must be > 0, got {su.w_a_eff!r}")
    if su.labor_supply.kind is not CurveKind.SUPPLY:
        raise InvalidInput("labor_supply must be a supply curve")
    if not (su.labor_supply.scale > 0.0):
        raise InvalidInput(f"labor supply scale must be > 0, got {su.labor_supply.scale!r}")

    if su.labor_supply.elasticity == 0.0:
        l_h = su.labor_supply.scale
        l_a = _agent_labor_for_target(su.ces, l_h, su.l_eff_demand)
        if l_a is None:
            raise Infeasible("fixed human supply exceeds the effective-labor demand target")
        w_h = su.w_a_eff * relative_wage(su.ces, l_h, l_a)
        return StaticsPoint(w_h=w_h, l_h=l_h, l_a=l_a)

    def gap(log_w: float) -> float:
        # Positive when the candidate wage exceeds the implied one; strictly
        # increasing in log_w, so bisection applies.
        w = math.exp(log_w)
        l_h = su.labor_supply.quantity(w)
        try:
            l_a = _agent_labor_for_target(su.ces, l_h, su.l_eff_demand)
        except Infeasible:
            return -1.0  # too few humans: implied wage unbounded above
        if l_a is None:
            return 1.0  # humans oversupplied: implied wage collapses to zero
        return log_w - math.log(su.w_a_eff * relative_wage(su.ces, l_h, l_a))

    lo = math.log(constants.BRACKET_LO)
    hi = math.log(constants.BRACKET_HI)
    g_lo, g_hi = gap(lo), gap(hi)
    expansions = 0
    width = hi - lo
    while g_lo * g_hi > 0.0 and expansions < constants.BRACKET_EXPANSIONS:
        lo -= width
        hi += width
        g_lo, g_hi = gap(lo), gap(hi)
        expansions += 1
    if g_lo * g_hi > 0.0:
        raise NoConvergence("wage gap has no sign change on the bracket", min(abs(g_lo), abs(g_hi)), 0)

    iterations = 0
    while hi - lo > tol and iterations < constants.MAX_ITER:
        mid = 0.5 * (lo + hi)
        if gap(mid) > 0.0:
            hi = mid
        else:
            lo = mid
        iterations += 1
    if hi - lo > tol:
        raise NoConvergence("wage search hit the iteration cap", hi - lo, iterations)

    w_h = math.exp(0.5 * (lo + hi))
    l_h = su.labor_supply.quantity(w_h)
    l_a = _agent_labor_for_target(su.ces, l_h, su.l_eff_demand)
    if l_a is None:
        raise NoConvergence("wage search landed outside the feasible region", hi - lo, iterations)
    return StaticsPoint(w_h=w_h, l_h=l_h, l_a=l_a)


def semi_elasticity(
    su: StaticsSetup, rel_step: float = constants.DEFAULT_REL_STEP
) -> SemiElasticity:
    """Pass-through dlog(w_h)/dlog(w_a_eff) via the identity and via differences.

    ``direct`` evaluates 1 - (1/sigma) * dlog(l_h/l_a)/dlog(w_a_eff) with the
    ratio derivative itself taken by the same centered difference; ``fd``
    differences the solved wage directly. Both one-sided differences are
    reported for diagnosing steps near solver tolerance.
    """
    if not (0.0 < rel_step <= 0.1):
        raise InvalidInput(f"rel_step must lie in (0, 0.1], got {rel_step!r}")
    h = rel_step
    base = solve_statics_point(su)
    minus = solve_statics_point(replace(su, w_a_eff=su.w_a_eff * math.exp(-h)))
    plus = solve_statics_point(replace(su, w_a_eff=su.w_a_eff * math.exp(h)))

    fd = (math.log(plus.w_h) - math.log(minus.w_h)) / (2.0 * h)
    fd_forward = (math.log(plus.w_h) - math.log(base.w_h)) / h
    fd_backward = (math.log(base.w_h) - math.log(minus.w_h)) / h

    log_ratio_plus = math.log(plus.l_h) - math.log(plus.l_a)
    log_ratio_minus = math.log(minus.l_h) - math.log(minus.l_a)
    ratio_derivative = (log_ratio_plus - log_ratio_minus) / (2.0 * h)
    direct = 1.0 - ratio_derivative / su.ces.sigma

    return SemiElasticity(
        direct=direct, fd=fd, fd_forward=fd_forward, fd_backward=fd_backward, base=base
    )


def caw_trajectory(
    tech: Technology, r_c: float, t_grid: Sequence[float]
) -> list[tuple[float, float]]:
    """Wage ceiling over time under exponential compute-intensity improvement.

    ceiling(t) = lam * k * exp(-g*t) * r_c per grid point; strictly
    decreasing for g > 0 and constant for g = 0.
    """
    if r_c < 0.0:
        raise InvalidInput(f"rental rate must be nonnegative, got {r_c!r}")
    previous = None
    for t in t_grid:
        if t < 0.0:
            raise InvalidInput(f"trajectory times must be nonnegative, got {t!r}")
        if previous is not None and t < previous:
            raise InvalidInput("trajectory time grid must be ascending")
        previous = t
    base = tech.lam * tech.k * r_c
    return [(t, base * math.exp(-tech.g * t)) for t in t_grid]


def wage_bill_response(
    output_demand: IsoElasticCurve,
    labor_supply: IsoElasticCurve,
    ceiling_before: float,
    ceiling_after: float,
    *,
    check_binding: bool = True,
) -> WageBillResponse:
    """Wage and wage-bill at two ceiling levels.

    The ceiling bounds the wage, not the bill: employment is
    min(supply, demand) at each ceiling and the bill is ceiling * employment,
    so a falling ceiling can leave the bill flat or even raise it when
    demand is elastic enough. With ``check_binding`` (the default) a ceiling
    above the uncapped clearing wage raises CeilingNotBinding, since a slack
    ceiling would not be the operative wage; pass False to evaluate the
    states at the stated ceilings regardless.
    """
    if ceiling_before <= 0.0 or ceiling_after <= 0.0:
        raise InvalidInput("ceilings must be > 0")
    if output_demand.kind is not CurveKind.DEMAND:
        raise InvalidInput("output_demand must be a demand curve")
    if labor_supply.kind is not CurveKind.SUPPLY:
        raise InvalidInput("labor_supply must be a supply curve")
    if check_binding:
        w_clear = clear_market(labor_supply, output_demand).price
        for label, ceiling in (("before", ceiling_before), ("after", ceiling_after)):
            if w_clear < ceiling:
                raise CeilingNotBinding(
                    f"uncapped clearing wage {w_clear:.6g} lies below the {label} "
                    f"ceiling {ceiling:.6g}"
                )

    def state(ceiling: float) -> WageBillState:
        demand = output_demand.quantity(ceiling)
        employment = min(labor_supply.quantity(ceiling), demand)
        return WageBillState(wage=ceiling, employment=employment, bill=ceiling * employment)

    return WageBillResponse(before=state(ceiling_before), after=state(ceiling_after))


# Scenario fields addressable by sweep(), as dotted public names. The mapping
# below translates public names to attribute paths (the technology ratio is
# stored as ``lam`` because of the Python keyword).
SWEEPABLE_PARAMS: tuple[str, ...] = (
    "technology.lambda",
    "technology.k",
    "technology.g",
    "ces.A",
    "ces.alpha",
    "ces.beta",
    "ces.sigma",
    "compute_supply.scale",
    "compute_supply.elasticity",
    "compute_demand.scale",
    "compute_demand.elasticity",
    "labor_demand_ts.scale",
    "labor_demand_ts.elasticity",
    "labor_supply_ts.scale",
    "labor_supply_ts.elasticity",
    "policy.tau_c",
    "policy.mu",
    "output_price",
)

_FIELD_ALIASES = {"lambda": "lam", "compute_demand": "compute_demand_exogenous"}


def scenario_with(s: Scenario, param_path: str, value: float) -> Scenario:
    """Copy of ``s`` with the field at ``param_path`` replaced."""
    if param_path not in SWEEPABLE_PARAMS:
        raise InvalidInput(
            f"unknown sweep parameter {param_path!r}; valid: {', '.join(SWEEPABLE_PARAMS)}"
        )
    parts = [_FIELD_ALIASES.get(p, p) for p in param_path.split(".")]
    if len(parts) == 1:
        return replace(s, **{parts[0]: value})
    holder_name, field_name = parts
    holder = getattr(s, holder_name)
    if holder is None:
        raise InvalidInput(f"scenario has no {param_path.split('.')[0]} to sweep")
    return replace(s, **{holder_name: replace(holder, **{field_name: value})})


def sweep(
    s: Scenario, param_path: str, grid: Sequence[float], solver: str = "capped"
) -> list[SweepRow]:
    """Solve the scenario once per grid value of one parameter.

    Rows keep grid order; a failing point records its error and the sweep
    continues.
    """
    if len(grid) == 0:
        raise InvalidInput("sweep grid must be nonempty")
    if solver not in ("capped", "coupled"):
        raise InvalidInput(f"unknown solver {solver!r}; use 'capped' or 'coupled'")
    rows: list[SweepRow] = []
    for value in grid:
        point = scenario_with(s, param_path, value)
        try:
            rows.append(SweepRow(value=value, result=solve_scenario(point, solver)))
        except Exception as exc:  # per-row failures are data, not aborts
            rows.append(SweepRow(value=value, result=None, error=str(exc)))
    return rows
