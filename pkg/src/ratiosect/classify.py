"""Fast recognizers for monotone and flat-bottom targets.

Segment-elimination solvers spend dozens of evaluations on targets that
could be dispatched almost immediately: a monotone function's minimum sits
at an interval endpoint, and a plateau at the bottom of a unimodal function
stalls ordinate comparisons entirely.  The two recognizers here settle both
cases cheaply and are shared by the ratio-section solvers and the
modernized Brent variant:

* :func:`detect_monotone` — given four or more evaluated points whose
  sorted ordinates look monotone, confirms the hypothesis with at most two
  extra endpoint evaluations and returns the exact endpoint minimizer.
* :func:`detect_flat_bottom` — purely combinatorial (zero evaluations):
  fires as soon as the transcript holds three points with pairwise
  distinct abscissas and identical ordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CountingObjective, FunctionClass, Interval, Point2, Tolerance, e0


@dataclass(frozen=True)
class MonotoneVerdict:
    """A confirmed monotone hypothesis.

    ``direction`` is either ``MONOTONE_INCREASING`` or
    ``MONOTONE_DECREASING``; ``minimizer`` is the evaluated interval
    endpoint (left for increasing, right for decreasing);
    ``extra_evaluations`` is the number of confirmation probes spent (2 on
    every confirmed verdict).
    """

    direction: FunctionClass
    minimizer: Point2
    extra_evaluations: int

    def __post_init__(self) -> None:
        if self.direction not in (
            FunctionClass.MONOTONE_INCREASING,
            FunctionClass.MONOTONE_DECREASING,
        ):
            raise ValueError(f"not a monotone direction: {self.direction}")


def detect_monotone(
    w: list[Point2],
    interval: Interval,
    obj: CountingObjective,
    tol: Tolerance,
) -> MonotoneVerdict | None:
    """Try to confirm that the target is monotone on ``interval``.

    ``w`` must hold at least four points with pairwise-distinct abscissas,
    all inside ``interval``.  A copy is sorted by abscissa; if the ordinate
    sequence is not non-strictly monotone the hypothesis is rejected for
    free.  Otherwise two confirmation probes are spent: ``u`` at the
    endpoint where the minimum would sit, and ``v`` one tolerance step
    ``e0`` inside from that endpoint.  The hypothesis survives iff
    ``u.y <= min(sorted ordinates)`` and ``u.y <= v.y`` (non-strict, so
    monotone functions with flat stretches pass too).

    Returns the verdict, or ``None`` if the hypothesis dies at any stage.
    Never confirms a strictly unimodal target whose interior minimum lies
    below both endpoint ordinates, provided ``w`` straddles the minimizer.
    """
    if len(w) < 4:
        raise ValueError("monotone check needs at least four evaluated points")
    pts = sorted(w, key=lambda p: p.x)
    for left, right in zip(pts, pts[1:]):
        if left.x == right.x:
            raise ValueError(f"duplicate abscissa {left.x!r} in monotone check")
    for p in pts:
        if p.x not in interval:
            raise ValueError(f"point x={p.x!r} outside {interval}")

    ys = [p.y for p in pts]
    non_decreasing = all(a <= b for a, b in zip(ys, ys[1:]))
    non_increasing = all(a >= b for a, b in zip(ys, ys[1:]))
    if non_decreasing:
        # Minimum would sit at the left endpoint; probe it and a point one
        # tolerance step inside.  (All-equal ordinates land here as well:
        # either endpoint is then a valid minimizer.)
        direction = FunctionClass.MONOTONE_INCREASING
        end = interval.lo
        inner = interval.lo + e0(tol, interval.lo)
    elif non_increasing:
        direction = FunctionClass.MONOTONE_DECREASING
        end = interval.hi
        inner = interval.hi - e0(tol, interval.hi)
    else:
        return None

    u = obj.evaluate(end)
    if not u.y <= min(ys):
        return None
    v = obj.evaluate(inner)
    if not u.y <= v.y:
        return None
    return MonotoneVerdict(direction=direction, minimizer=u, extra_evaluations=2)


def detect_flat_bottom(w: list[Point2]) -> Point2 | None:
    """Find a plateau: three points with distinct abscissas, equal ordinates.

    Ordinate equality is exact (no tolerance): genuine plateaus reproduce
    the same float bit-for-bit, while the gently-curved bottom of a smooth
    valley does not.  Costs zero objective evaluations.  Returns the
    earliest-evaluated point of a qualifying ordinate group, or ``None``.
    """
    by_ordinate: dict[float, list[tuple[int, Point2]]] = {}
    for index, p in enumerate(w):
        by_ordinate.setdefault(p.y, []).append((index, p))
    earliest: tuple[int, Point2] | None = None
    for entries in by_ordinate.values():
        if len({p.x for _, p in entries}) < 3:
            continue
        if earliest is None or entries[0][0] < earliest[0]:
            earliest = entries[0]
    return earliest[1] if earliest else None
