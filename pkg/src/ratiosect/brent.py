"""Brent's derivative-free local minimizer and its ratio-section variant.

:func:`brent_minimize` is the classical combined method: successive
parabolic interpolation through the three best points, guarded by
golden-section steps whenever the parabola is untrustworthy (vertex out of
bounds, or a step not smaller than half the second-to-last step).

:func:`brent_m_minimize` is the modernized variant: structurally the same
loop with two changes — the golden fallback ``d = g*e`` becomes the
ratio-section step ``d = c*e``, and the fast recognizers from
:mod:`~ratiosect.classify` run on the transcript, so constants finish in
3 evaluations and monotone targets in 6 with the exact endpoint result
(classical Brent grinds through dozens of evaluations on those and, for
monotone targets, stops short of the endpoint by up to ``3*e0``).

With ``c`` equal to the golden step constant and the recognizers disabled,
the variant reproduces the classical transcript bit for bit; tests rely on
that degeneration to pin the two implementations together.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .classify import detect_flat_bottom, detect_monotone
from .core import (
    CountingObjective,
    FunctionClass,
    Interval,
    MinimizeOutcome,
    Point2,
    SolveStatus,
    Tolerance,
    e0,
    stop_test,
)
from .section_search import RatioConfig

#: Fraction of the larger sub-interval taken by a golden fallback step,
#: (3 - sqrt(5)) / 2.
GOLDEN_STEP = (3.0 - math.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class BrentState:
    """Loop state snapshot: bounds, the three retained points, and the
    last two step lengths."""

    a: float
    b: float
    x: Point2
    w: Point2
    v: Point2
    d: float
    e: float


@dataclass(frozen=True)
class BrentStep:
    """One logged iteration: which step kind ran, and the state after its
    update was applied."""

    kind: str  # "parabolic", "golden", or "ratio"
    state: BrentState


def brent_minimize(
    obj: CountingObjective,
    interval: Interval,
    tol: Tolerance,
    *,
    bracket_log: list[tuple[float, float]] | None = None,
    step_log: list[BrentStep] | None = None,
) -> MinimizeOutcome:
    """Classical Brent minimization.

    Starts at ``a + g*(b - a)``.  A parabolic step through the three
    retained points ``x, w, v`` is accepted only when its target lies
    within bounds and its length is below half of the second-to-last step;
    otherwise a golden step ``d = g*e`` into the larger sub-interval is
    taken.  Every probe is kept at least ``e0(x)`` away from ``x``.  No
    classification is attempted: the verdict is always ``strict_interior``.
    """
    a, b = interval.lo, interval.hi
    start = obj.count
    if bracket_log is not None:
        bracket_log.append((a, b))

    px = obj.evaluate(a + GOLDEN_STEP * (b - a))
    x, fx = px.x, px.y
    w, fw = x, fx
    v, fv = x, fx
    d = 0.0
    e = 0.0
    status = SolveStatus.CONVERGED

    while True:
        if stop_test(a, b, x, tol):
            break
        if obj.count - start + 1 > tol.max_evaluations:
            status = SolveStatus.BUDGET_EXHAUSTED
            break
        m = 0.5 * (a + b)
        tol1 = e0(tol, x)
        t2 = 2.0 * tol1

        p = q = r = 0.0
        if abs(e) > tol1:
            # Fit a parabola through (x, fx), (w, fw), (v, fv).
            r = (x - w) * (fx - fv)
            q = (x - v) * (fx - fw)
            p = (x - v) * q - (x - w) * r
            q = 2.0 * (q - r)
            if q > 0.0:
                p = -p
            else:
                q = -q
            r = e
            e = d
        if abs(p) < abs(0.5 * q * r) and p > q * (a - x) and p < q * (b - x):
            kind = "parabolic"
            d = p / q
            u = x + d
            # Don't land within t2 of a bound.
            if u - a < t2 or b - u < t2:
                d = tol1 if x < m else -tol1
        else:
            kind = "golden"
            e = (b - x) if x < m else (a - x)
            d = GOLDEN_STEP * e
        # Never evaluate closer than tol1 to x.
        if abs(d) >= tol1:
            u = x + d
        else:
            u = x + (tol1 if d > 0.0 else -tol1)
        pu = obj.evaluate(u)
        fu = pu.y

        if fu <= fx:
            if u < x:
                b = x
            else:
                a = x
            v, fv = w, fw
            w, fw = x, fx
            x, fx = u, fu
        else:
            if u < x:
                a = u
            else:
                b = u
            if fu <= fw or w == x:
                v, fv = w, fw
                w, fw = u, fu
            elif fu <= fv or v == x or v == w:
                v, fv = u, fu
        if bracket_log is not None:
            bracket_log.append((a, b))
        if step_log is not None:
            step_log.append(BrentStep(kind, BrentState(
                a, b, Point2(x, fx), Point2(w, fw), Point2(v, fv), d, e,
            )))
    return MinimizeOutcome(
        x_min=x,
        f_min=fx,
        evaluations=obj.count - start,
        classification=FunctionClass.STRICT_INTERIOR,
        status=status,
    )


def brent_m_minimize(
    obj: CountingObjective,
    interval: Interval,
    tol: Tolerance,
    cfg: RatioConfig | None = None,
    *,
    use_recognizers: bool = True,
    bracket_log: list[tuple[float, float]] | None = None,
    step_log: list[BrentStep] | None = None,
) -> MinimizeOutcome:
    """Brent minimization with ratio-section fallbacks and recognizers.

    Identical to :func:`brent_minimize` except that (i) the fallback step
    is ``d = c*e`` (default ``c = 0.2``), (ii) the flat-bottom recognizer
    runs after every evaluation, and (iii) the monotone recognizer runs
    once when the transcript reaches four distinct abscissas.  Pass
    ``use_recognizers=False`` to strip (ii) and (iii).
    """
    if cfg is None:
        cfg = RatioConfig(0.2)
    a, b = interval.lo, interval.hi
    start = obj.count
    if bracket_log is not None:
        bracket_log.append((a, b))
    mnt_done = not use_recognizers

    def recognize() -> MinimizeOutcome | None:
        nonlocal mnt_done
        if not use_recognizers:
            return None
        run = obj.transcript[start:]
        flat = detect_flat_bottom(run)
        if flat is not None:
            return MinimizeOutcome(
                flat.x, flat.y, obj.count - start,
                FunctionClass.FLAT_BOTTOM, SolveStatus.CONVERGED,
            )
        if not mnt_done:
            distinct: list[Point2] = []
            seen: set[float] = set()
            for point in run:
                if point.x not in seen:
                    seen.add(point.x)
                    distinct.append(point)
            if len(distinct) >= 4:
                mnt_done = True
                if obj.count - start + 2 <= tol.max_evaluations:
                    verdict = detect_monotone(distinct, interval, obj, tol)
                    if verdict is not None:
                        return MinimizeOutcome(
                            verdict.minimizer.x, verdict.minimizer.y,
                            obj.count - start, verdict.direction,
                            SolveStatus.CONVERGED,
                        )
                    flat = detect_flat_bottom(obj.transcript[start:])
                    if flat is not None:
                        return MinimizeOutcome(
                            flat.x, flat.y, obj.count - start,
                            FunctionClass.FLAT_BOTTOM, SolveStatus.CONVERGED,
                        )
        return None

    px = obj.evaluate(a + GOLDEN_STEP * (b - a))
    x, fx = px.x, px.y
    w, fw = x, fx
    v, fv = x, fx
    d = 0.0
    e = 0.0
    status = SolveStatus.CONVERGED

    early = recognize()
    if early is not None:
        return early

    while True:
        if stop_test(a, b, x, tol):
            break
        if obj.count - start + 1 > tol.max_evaluations:
            status = SolveStatus.BUDGET_EXHAUSTED
            break
        m = 0.5 * (a + b)
        tol1 = e0(tol, x)
        t2 = 2.0 * tol1

        p = q = r = 0.0
        if abs(e) > tol1:
            r = (x - w) * (fx - fv)
            q = (x - v) * (fx - fw)
            p = (x - v) * q - (x - w) * r
            q = 2.0 * (q - r)
            if q > 0.0:
                p = -p
            else:
                q = -q
            r = e
            e = d
        if abs(p) < abs(0.5 * q * r) and p > q * (a - x) and p < q * (b - x):
            kind = "parabolic"
            d = p / q
            u = x + d
            if u - a < t2 or b - u < t2:
                d = tol1 if x < m else -tol1
        else:
            kind = "ratio"
            e = (b - x) if x < m else (a - x)
            d = cfg.c * e
        if abs(d) >= tol1:
            u = x + d
        else:
            u = x + (tol1 if d > 0.0 else -tol1)
        pu = obj.evaluate(u)
        fu = pu.y

        early = recognize()
        if early is not None:
            return early

        if fu <= fx:
            if u < x:
                b = x
            else:
                a = x
            v, fv = w, fw
            w, fw = x, fx
            x, fx = u, fu
        else:
            if u < x:
                a = u
            else:
                b = u
            if fu <= fw or w == x:
                v, fv = w, fw
                w, fw = u, fu
            elif fu <= fv or v == x or v == w:
                v, fv = u, fu
        if bracket_log is not None:
            bracket_log.append((a, b))
        if step_log is not None:
            step_log.append(BrentStep(kind, BrentState(
                a, b, Point2(x, fx), Point2(w, fw), Point2(v, fv), d, e,
            )))
    return MinimizeOutcome(
        x_min=x,
        f_min=fx,
        evaluations=obj.count - start,
        classification=FunctionClass.STRICT_INTERIOR,
        status=status,
    )
