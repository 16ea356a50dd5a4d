#!/usr/bin/env python3
"""Generate the surrogate benchmark sets in data/.

The public nesting benchmarks could not be bundled, so each set here is a
seeded random stand-in with the same piece counts, distinct shapes, coordinate
type, x-projection range, rotation policy and strip width. Lengths obtained on
these files are not comparable with published ones.

Usage: make_surrogates.py [OUTDIR]
"""

import json
import math
import random
import sys
from pathlib import Path

from shapely.geometry import Polygon

SETS = [
    # name, pieces, distinct, integer coords, xproj range, rotations, width, x grid
    ("shirts", 99, 8, True, (3, 12), [0, 180], 40, 1),
    ("trousers", 64, 17, True, (6, 59), [0, 180], 79, 1),
    ("swim", 48, 10, False, (359, 1940), [0, 180], 5752, 36),
    ("han", 25, 20, True, (3, 19), "free", 58, 1),
    ("jakob2", 25, 25, True, (6, 12), "free", 70, 2),
    ("poly5b", 75, 75, True, (3, 12), "free", 40, 1),
]


def star_polygon(rng, n, width, height, integer, xgrid):
    """Star-shaped polygon around the box centre, snapped to the grid."""
    while True:
        angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(n))
        pts = []
        for a in angles:
            r = rng.uniform(0.45, 1.0)
            x = 0.5 * width * (1 + r * math.cos(a))
            y = 0.5 * height * (1 + r * math.sin(a))
            x = round(x / xgrid) * xgrid
            y = round(y) if integer else round(y, 3)
            if integer:
                x = int(x)
            pts.append([x, y])
        dedup = []
        for p in pts:
            if not dedup or dedup[-1] != p:
                dedup.append(p)
        if len(dedup) > 2 and dedup[0] == dedup[-1]:
            dedup.pop()
        if len(dedup) < 3:
            continue
        poly = Polygon(dedup)
        if not poly.is_valid or poly.area <= 0:
            continue
        xs = [p[0] for p in dedup]
        ys = [p[1] for p in dedup]
        if max(xs) - min(xs) <= 0 or max(ys) - min(ys) <= 0:
            continue
        return dedup, max(xs) - min(xs)


def make_set(name, pieces, distinct, integer, xrange, rotations, width, xgrid, seed):
    rng = random.Random(seed)
    lo, hi = xrange
    shapes = []
    for k in range(distinct):
        # Spread widths over the range so both extremes appear.
        target = lo + (hi - lo) * (k / max(1, distinct - 1))
        for _ in range(1000):
            n = rng.randint(4, 9)
            w = target
            h = rng.uniform(0.5, 1.5) * target
            h = min(h, 0.9 * width)
            verts, xw = star_polygon(rng, n, w, h, integer, xgrid)
            if lo <= xw <= hi:
                break
        else:
            raise RuntimeError(f"{name}: could not hit x-projection range")
        shapes.append(verts)
    quantities = [1] * distinct
    for k in range(pieces - distinct):
        quantities[rng.randrange(distinct)] += 1
    return {
        "name": name,
        "strip_width": width,
        "rotations": rotations,
        "pieces": [
            {"id": f"{name}-{k}", "quantity": q, "vertices": v}
            for k, (v, q) in enumerate(zip(shapes, quantities))
        ],
    }


def make_random_set(seed):
    """550 polygons inscribed in circles of four diameters, 80% the smallest."""
    rng = random.Random(seed)
    diameters = [2.0, 6.0, 13.6, 27.2]
    counts = [440, 50, 40, 20]
    pieces = []
    k = 0
    for d, c in zip(diameters, counts):
        for _ in range(c):
            while True:
                n = rng.randint(3, 8)
                angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(n))
                verts = [[round(0.5 * d * (1 + math.cos(a)), 4), round(0.5 * d * (1 + math.sin(a)), 4)]
                         for a in angles]
                poly = Polygon(verts)
                xs = [p[0] for p in verts]
                if poly.is_valid and poly.area > 0.05 * d * d and max(xs) - min(xs) >= 1.0:
                    break
            pieces.append({"id": f"random-{k}", "quantity": 1, "vertices": verts})
            k += 1
    return {"name": "random", "strip_width": 80, "rotations": [0], "pieces": pieces}


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data")
    out.mkdir(parents=True, exist_ok=True)
    for i, params in enumerate(SETS):
        data = make_set(*params, seed=1000 + i)
        (out / f"{params[0]}.json").write_text(json.dumps(data, indent=1) + "\n")
    (out / "random.json").write_text(json.dumps(make_random_set(2000), indent=1) + "\n")


if __name__ == "__main__":
    main()
