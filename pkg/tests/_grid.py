"""Parameter grid shared by the property suites."""

from socodes.counts import code_length
from socodes.ff import Params


def grid(primes=(3, 5, 7), smax=4, qk_max=10**6):
    out = []
    for p in primes:
        for s in range(1, smax + 1):
            for s1 in range(1, s + 1):
                for s2 in range(1, s + 1):
                    if s % s1 or s % s2:
                        continue
                    if s1 % s2 and s2 % s1:
                        continue
                    if p ** (2 * s + s2) > qk_max:
                        continue
                    out.append(Params(p, s, s1, s2))
    return out


GRID = grid()
# n = 1 when s1 = s and p^s = 3 mod 4: the generator collapses to the ones row
DEGENERATE = [prm for prm in GRID if code_length(prm) == 1]
REGULAR = [prm for prm in GRID if code_length(prm) > 1]


def ids(params):
    return [f"{prm.p}-{prm.s}-{prm.s1}-{prm.s2}" for prm in params]
