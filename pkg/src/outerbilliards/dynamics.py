"""Pinwheel dynamics: the indexed-plane map, section, returns and orbits.

The pinwheel map acts on R^2 x {0..n-1}: try the next strip map; if it fixes
the point, advance the index, otherwise translate and hold the index.  The
section drops a plane point into the indexed plane at index a-1, where a is
the start spoke of the tile's admissible path.  All step budgets are explicit
and every undefined-point condition is a distinct exception.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .billiards import square_map
from .errors import BudgetExceededError, MapUndefinedError, OnStripBoundaryError
from .geometry import Point, norm2_sq
from .model import BilliardModel
from .strips import PinwheelSystem, strip_jump, strip_map


@dataclass(frozen=True)
class IndexedPoint:
    """A point of the indexed plane; the index is always reduced mod n."""

    point: Point
    index: int

    def reduce(self, n: int) -> "IndexedPoint":
        return IndexedPoint(self.point, self.index % n)


def pinwheel_step(system: PinwheelSystem, x: IndexedPoint) -> IndexedPoint:
    """One application of the pinwheel map."""
    n = system.n
    j = (x.index + 1) % n
    pair = system.pair(j)
    loc = pair.location(x.point)
    if loc == 0:
        raise OnStripBoundaryError(x.point, stage=j)
    if loc > 0:
        return IndexedPoint(x.point, j)
    return IndexedPoint(strip_map(pair, x.point), x.index % n)


def section(model: BilliardModel, p: Point) -> IndexedPoint:
    """iota(p) = (p, a-1) for p interior to a tile of the path a -> b."""
    a = model.path_start(p)
    return IndexedPoint(p, (a - 1) % model.n)


def landing_state(model: BilliardModel, q: Point) -> IndexedPoint:
    """The indexed state (q, c-1) the pinwheel orbit must reach when the
    square map lands at q inside the tile of the path c -> d."""
    return section(model, q)


def pinwheel_theorem_step(model: BilliardModel, p: Point,
                          budget_factor: int = 3) -> Tuple[Point, int]:
    """Follow the pinwheel orbit of iota(p) until it reaches (psi(p), c-1).

    Returns (psi(p), steps used).  BudgetExceededError after 3n steps signals
    a violation of the theorem; a strip-boundary hit during the iteration is
    reported distinctly as OnStripBoundaryError.
    """
    n = model.n
    q, _ = square_map(model.polygon, p)
    state = section(model, p)
    target = landing_state(model, q)
    budget = budget_factor * n
    for used in range(1, budget + 1):
        state = pinwheel_step(model.system, state)
        if state.point == target.point and state.index == target.index:
            return q, used
    raise BudgetExceededError(budget, f"pinwheel budget {budget} exceeded at {p}")


def point_label(model: BilliardModel, p: Point) -> Tuple[int, int]:
    """Tangent-pair label of the tile containing p (dynamic computation)."""
    _, label = square_map(model.polygon, p)
    return label


def exit_map(model: BilliardModel, p: Point, budget: int = 1000) -> Tuple[Point, int]:
    """Iterate the square map until the tile label changes; returns the
    landing point and the number of square-map steps taken."""
    start_label = point_label(model, p)
    q = p
    for k in range(1, budget + 1):
        q, _ = square_map(model.polygon, q)
        if point_label(model, q) != start_label:
            return q, k
    raise BudgetExceededError(budget, f"no tile exit within {budget} steps of {p}")


def first_return_psi(model: BilliardModel, p: Point, budget: int,
                     strip_index: int = 0) -> Tuple[Point, int]:
    """Smallest k >= 1 with psi^k(p) strictly inside the given strip."""
    pair = model.system.pair(strip_index)
    q = p
    for k in range(1, budget + 1):
        q, _ = square_map(model.polygon, q)
        if pair.location(q) == 1:
            return q, k
    raise BudgetExceededError(budget, f"no return to strip {strip_index} "
                                      f"within {budget} steps of {p}")


def strip_system_return(system: PinwheelSystem, x: IndexedPoint,
                        budget: Optional[int] = None) -> Tuple[IndexedPoint, int]:
    """One step of the accelerated strip system: from (p, k) with p inside
    strip k, iterate the pinwheel map until the index advances; geometrically,
    apply strip map k+1 until the point settles inside strip k+1.

    Uses the exact closed-form jump (`strip_jump`); the reported step count
    equals the number of pinwheel-map applications the stepwise route takes.
    A budget, when given, bounds that count.
    """
    state = x.reduce(system.n)
    j = (state.index + 1) % system.n
    q, translations = strip_jump(system.pair(j), state.point)
    steps = translations + 1  # the final application fixes q and shifts the index
    if budget is not None and steps > budget:
        raise BudgetExceededError(budget, "no strip-system return within budget")
    return IndexedPoint(q, j), steps


def far_radius(model: BilliardModel, factor: int = 8) -> Fraction:
    """Radius beyond which the far-field statements are exercised: a crude
    c * n * (diameter + max strip width) bound, exact and rational-valued."""
    poly = model.polygon
    xs = [v.x for v in poly.vertices]
    ys = [v.y for v in poly.vertices]
    extent = (max(xs) - min(xs)) + (max(ys) - min(ys))
    return Fraction(factor * poly.n) * (extent + model.system.max_width())


# ---------------------------------------------------------------------------
# orbit iteration with event logging


@dataclass(frozen=True)
class OrbitEvent:
    step: int
    point: Point
    index: Optional[int]
    label: Optional[Tuple[int, int]]
    tag: str


@dataclass
class OrbitRecord:
    selector: str
    events: List[OrbitEvent] = field(default_factory=list)

    @property
    def final(self) -> OrbitEvent:
        return self.events[-1]

    def points(self) -> List[Point]:
        return [e.point for e in self.events]


ORBIT_SELECTORS = ("psi", "psi_star", "exit", "strip_return", "first_return")


def orbit(model: BilliardModel, start, selector: str, budget: int,
          escape_radius=None) -> OrbitRecord:
    """Iterate the selected map with a full event log.

    `start` is a Point for the plane maps (psi, exit, first_return) and an
    IndexedPoint for psi_star / strip_return.  Iteration stops at the budget,
    on an undefined point (recorded, not raised), or beyond escape_radius.
    """
    if selector not in ORBIT_SELECTORS:
        raise ValueError(f"unknown selector {selector!r}")
    rec = OrbitRecord(selector=selector)
    esc_sq = None if escape_radius is None else escape_radius * escape_radius

    def log(step, point, index=None, label=None, tag="translated"):
        rec.events.append(OrbitEvent(step, point, index, label, tag))

    if selector in ("psi_star", "strip_return"):
        state: IndexedPoint = start.reduce(model.n)
        log(0, state.point, state.index,
            tag="budget-exhausted" if budget == 0 else "start")
        steps = 0
        while steps < budget:
            try:
                if selector == "psi_star":
                    nxt = pinwheel_step(model.system, state)
                    steps += 1
                    tag = "index-shifted" if nxt.index != state.index else "translated"
                    log(steps, nxt.point, nxt.index, tag=tag)
                else:
                    nxt, used = strip_system_return(model.system, state,
                                                    budget=max(budget - steps, 1))
                    steps += used
                    log(steps, nxt.point, nxt.index, tag="returned")
            except (OnStripBoundaryError, BudgetExceededError) as exc:
                tag = ("undefined" if isinstance(exc, OnStripBoundaryError)
                       else "budget-exhausted")
                log(steps + 1, state.point, state.index, tag=tag)
                return rec
            state = nxt
            if esc_sq is not None and norm2_sq(state.point) > esc_sq:
                log(steps, state.point, state.index, tag="escaped")
                return rec
        if rec.final.tag not in ("budget-exhausted",):
            log(steps, state.point, state.index, tag="budget-exhausted")
        return rec

    p: Point = start
    log(0, p, tag="budget-exhausted" if budget == 0 else "start")
    steps = 0
    while steps < budget:
        try:
            if selector == "psi":
                q, label = square_map(model.polygon, p)
                steps += 1
                log(steps, q, label=label, tag="translated")
            elif selector == "exit":
                q, used = exit_map(model, p, budget=max(budget - steps, 1))
                steps += used
                log(steps, q, tag="returned")
            else:
                q, used = first_return_psi(model, p, budget=max(budget - steps, 1))
                steps += used
                log(steps, q, tag="returned")
        except BudgetExceededError:
            log(steps + 1, p, tag="budget-exhausted")
            return rec
        except MapUndefinedError:
            log(steps + 1, p, tag="undefined")
            return rec
        p = q
        if esc_sq is not None and norm2_sq(p) > esc_sq:
            log(steps, p, tag="escaped")
            return rec
    if rec.final.tag != "budget-exhausted":
        log(steps, p, tag="budget-exhausted")
    return rec
