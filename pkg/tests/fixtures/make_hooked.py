"""Regenerate the hooked-component raw diagrams.

Each fixture is a twist box closed into a loop by the hook core, then
embedded in a random ball or spherical context.  Run from the tests
directory: ``python3 fixtures/make_hooked.py``.
"""

import random
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE.parent))

from helpers import hooked_ball  # noqa: E402
from tanglematrix.diagram import dump_diagram, fill, hsum, vsum  # noqa: E402
from tanglematrix.expr import elaborate  # noqa: E402
from tanglematrix.generate import random_expr  # noqa: E402

OUT = HERE / "hooked"
COUNT = 24


def build(rng, twists, spherical):
    core = hooked_ball(twists)
    if spherical:
        other = elaborate(random_expr(rng, 1, max_crossings=6, depth=3))
    else:
        other = elaborate(random_expr(rng, 0, max_crossings=6, depth=3))
    if rng.random() < 0.5:
        pair = (core, other) if rng.random() < 0.5 else (other, core)
        return (hsum if rng.random() < 0.5 else vsum)(*pair)
    head = elaborate(random_expr(rng, 1, max_crossings=6, depth=2))
    d = fill(head, [core])
    if spherical:
        d = hsum(d, other)
    return d


def main():
    rng = random.Random(4933)
    OUT.mkdir(exist_ok=True)
    for old in OUT.glob("*.json"):
        old.unlink()
    for i in range(COUNT):
        twists = rng.choice((2, -2, 4, -4, 6))
        spherical = i % 2 == 1
        d = build(rng, twists, spherical)
        kind = "spherical" if spherical else "ball"
        dump_diagram(d, OUT / f"hooked_{i:02d}_{kind}.json")


if __name__ == "__main__":
    main()
