"""Double description for pointed cones given by integer inequalities.

The cone is {x : h.x >= 0 for every row h}. The first ``dim`` rows must be
the coordinate inequalities x_i >= 0, which seed the iteration with the
orthant's unit rays; the remaining rows are inserted one at a time.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

Ray = tuple[int, ...]


def _primitive(v: Sequence[int]) -> Ray:
    g = 0
    for a in v:
        g = gcd(g, a)
    if g > 1:
        return tuple(a // g for a in v)
    return tuple(v)


def _dot(h: Sequence[int], r: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(h, r))


def extreme_rays(rows: Sequence[Sequence[int]], dim: int) -> list[Ray]:
    """Extreme rays of {x in R^dim : x >= 0, h.x >= 0 for the extra rows}."""
    rays: list[Ray] = []
    tight: list[int] = []  # bitmask of constraints tight at each ray
    all_bits = (1 << dim) - 1
    for i in range(dim):
        rays.append(tuple(1 if j == i else 0 for j in range(dim)))
        tight.append(all_bits & ~(1 << i))

    for k, h in enumerate(rows):
        bit = 1 << (dim + k)
        vals = [_dot(h, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        if not neg:
            for i in zero:
                tight[i] |= bit
            continue
        new_rays: list[Ray] = []
        new_tight: list[int] = []
        for i in pos:
            new_rays.append(rays[i])
            new_tight.append(tight[i])
        for i in zero:
            new_rays.append(rays[i])
            new_tight.append(tight[i] | bit)
        for p in pos:
            for q in neg:
                common = tight[p] & tight[q]
                if bin(common).count("1") < dim - 2:
                    continue
                # combinatorial adjacency test
                if any(
                    r != p and r != q and (tight[r] & common) == common
                    for r in range(len(rays))
                ):
                    continue
                vp, vq = vals[p], vals[q]
                ray = [vp * b - vq * a for a, b in zip(rays[p], rays[q])]
                new_rays.append(_primitive(ray))
                new_tight.append(common | bit)
        rays, tight = new_rays, new_tight
    return rays
