"""Value conventions shared across the package.

Cut values are plain ints or floats; ``INF`` (= ``math.inf``) is the
"no threshold" sentinel and compares greater than every finite value.
Integer instances admit exact comparison; float instances are compared
with a small absolute tolerance.
"""

import math

INF = math.inf

#: absolute tolerance for comparing fractional cut values
FLOAT_TOL = 1e-9


def values_equal(a, b, tol=FLOAT_TOL):
    """Equality for cut values: exact for ints (and infinities), tolerant otherwise."""
    if a == b:
        return True
    if isinstance(a, int) and isinstance(b, int):
        return False
    if math.isinf(a) or math.isinf(b):
        return False
    return abs(a - b) <= tol


def mask_of(elements):
    """Bitmask of a collection of element indices."""
    m = 0
    for v in elements:
        m |= 1 << v
    return m


def set_of(mask):
    """Element indices of a bitmask, as a set."""
    out = set()
    v = 0
    while mask:
        if mask & 1:
            out.add(v)
        mask >>= 1
        v += 1
    return out
