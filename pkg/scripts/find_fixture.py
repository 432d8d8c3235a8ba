"""Random search for a genus-2 maximal train track used as the test fixture.

Switch slots are paired at random into branches; a candidate is kept when it
validates (four triangles), and has eligible sites for every zipper move.
"""
import random
import sys

from hitchin_fg.traintrack import End, Track, TrackValidationError, format_track, validate
from hitchin_fg.zipper import KINDS, eligible_sites


def random_track(rng, switches=12):
    count = 3 * switches // 2
    ends = [End("b%02d" % (i + 1), k) for i in range(count) for k in (0, 1)]
    rng.shuffle(ends)
    sw = {"s%02d" % (i + 1): tuple(ends[3 * i:3 * i + 3]) for i in range(switches)}
    return Track("genus2", ["b%02d" % (i + 1) for i in range(count)], sw)


def main(seed):
    rng = random.Random(seed)
    while True:
        t = random_track(rng)
        try:
            validate(t)
        except TrackValidationError:
            continue
        if all(eligible_sites(t, k) for k in KINDS):
            return t


if __name__ == "__main__":
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    sys.stdout.write(format_track(main(seed)))
