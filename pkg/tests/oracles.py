"""Independent oracles the tests check the library against.

Each oracle recomputes a quantity by a route disjoint from the production
code: brute force over permutation pairs, spanning-tree holonomy with
explicit sublattice enumeration, and the hyperelliptic involution found by
constraint propagation.  Slow is fine here; different is the point.
"""

from itertools import permutations
from math import factorial, prod

import numpy as np

from origami_h2.origami_core import Origami, canonical_key, in_h2, is_primitive


# ---------------------------------------------------------------------------
# brute force over permutation pairs (n <= 9)
#
# Every pair (r, u) is simultaneously conjugate to one whose r is the
# canonical representative of its cycle type, and canonical keys are
# conjugation-invariant, so scanning all u against one r per cycle type
# visits every surface.  The full pair count is recovered by weighting each
# type with its conjugacy-class size.


def _partitions(n: int, largest: int = None) -> list:
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            out.append((part,) + rest)
    return out


def _class_size(parts: tuple) -> int:
    n = sum(parts)
    denom = prod(parts)
    for size in set(parts):
        denom *= factorial(parts.count(size))
    return factorial(n) // denom


def _type_representative(parts: tuple) -> tuple:
    r = []
    start = 0
    for length in parts:
        r.extend(list(range(start + 1, start + length)) + [start])
        start += length
    return tuple(r)


def brute_force_census(n: int) -> tuple:
    """(primitive canonical-key set, total pair count incl. imprimitive).

    The pair count is over all (r, u) in S_n x S_n that are transitive with
    one-3-cycle commutator; dividing by n! gives the surface count because
    H(2) origamis admit no nontrivial translations.
    """
    perms = np.array(list(permutations(range(n))), dtype=np.int8)
    inverses = np.argsort(perms, axis=1).astype(np.int8)
    idx = np.arange(n, dtype=np.int8)

    keys = set()
    total_pairs = 0
    for parts in _partitions(n):
        r = _type_representative(parts)
        r_arr = np.array(r, dtype=np.int8)
        rinv_arr = np.argsort(r_arr).astype(np.int8)

        # commutator c = r . u . r^-1 . u^-1, composed right to left
        step = rinv_arr[inverses]
        step = np.take_along_axis(perms, step, axis=1)
        c = r_arr[step]
        fixed = (c == idx).sum(axis=1)
        ccc = np.take_along_axis(c, np.take_along_axis(c, c, axis=1), axis=1)
        h2_mask = (fixed == n - 3) & (ccc == idx).all(axis=1)

        # transitivity: min-label propagation along r and u edges, both ways
        labels = np.broadcast_to(idx, perms.shape).copy()
        for _ in range(n):
            labels = np.minimum(labels, labels[:, r_arr])
            labels = np.minimum(labels, labels[:, rinv_arr])
            labels = np.minimum(labels, np.take_along_axis(labels, perms, axis=1))
            labels = np.minimum(labels, np.take_along_axis(labels, inverses, axis=1))
        mask = h2_mask & (labels.max(axis=1) == 0)

        total_pairs += _class_size(parts) * int(mask.sum())
        for row in perms[mask]:
            o = Origami(r, tuple(int(v) for v in row), check=False)
            assert in_h2(o)
            if is_primitive(o):
                keys.add(canonical_key(o))
    return keys, total_pairs


# ---------------------------------------------------------------------------
# holonomy via a spanning tree, primitivity via explicit sublattices


def holonomy_generators(o: Origami) -> list:
    """Generators of the absolute-period lattice from BFS-tree defects.

    Each square gets a position in Z^2 along a spanning tree of the
    right/up edge graph; every non-tree edge then closes a loop whose
    holonomy is position + step - position-of-target.
    """
    pos = {0: (0, 0)}
    tree = set()
    queue = [0]
    while queue:
        s = queue.pop()
        x, y = pos[s]
        for t, step in ((o.right[s], (1, 0)), (o.up[s], (0, 1))):
            if t not in pos:
                pos[t] = (x + step[0], y + step[1])
                tree.add((s, t, step))
                queue.append(t)
    gens = []
    for s in range(o.n):
        x, y = pos[s]
        for t, step in ((o.right[s], (1, 0)), (o.up[s], (0, 1))):
            if (s, t, step) not in tree:
                vx, vy = x + step[0] - pos[t][0], y + step[1] - pos[t][1]
                if (vx, vy) != (0, 0):
                    gens.append((vx, vy))
    return gens


def sublattice_is_primitive(o: Origami) -> bool:
    """True iff no sublattice of Z^2 of index 2..n contains every generator.

    Sublattices of index d are enumerated by their normal forms
    [[a, b], [0, c]] with a*c = d and 0 <= b < a.
    """
    gens = holonomy_generators(o)
    for d in range(2, o.n + 1):
        for a in range(1, d + 1):
            if d % a:
                continue
            c = d // a
            for b in range(a):
                if all(y % c == 0 and (x - b * (y // c)) % a == 0 for x, y in gens):
                    return False
    return True


# ---------------------------------------------------------------------------
# integer Weierstrass points via the hyperelliptic involution


def square_involution(o: Origami) -> tuple:
    """The unique square permutation with pi.r = r^-1.pi and pi.u = u^-1.pi.

    This is how the hyperelliptic involution permutes squares (each square
    also gets rotated by half a turn).  Found by propagating pi(0) through
    the edge relations; exactly one consistent involution must exist.
    """
    r, u = o.right, o.up
    rinv = tuple(np.argsort(r))
    uinv = tuple(np.argsort(u))
    found = None
    for image in range(o.n):
        pi = {0: image}
        queue = [0]
        ok = True
        while queue and ok:
            s = queue.pop()
            for t, target in ((r[s], rinv[pi[s]]), (u[s], uinv[pi[s]])):
                if t in pi:
                    ok = pi[t] == target
                    if not ok:
                        break
                else:
                    pi[t] = target
                    queue.append(t)
        if not ok:
            continue
        candidate = tuple(pi[s] for s in range(o.n))
        if all(candidate[candidate[s]] == s for s in range(o.n)):
            assert found is None, "involution is not unique"
            found = candidate
    assert found is not None, "no hyperelliptic involution found"
    return found


def involution_weierstrass_count(o: Origami) -> int:
    """Count integer Weierstrass points from fixed vertices of the involution.

    The cone point always contributes one.  A regular vertex is the
    top-right corner of a unique square s (regular means the four squares
    close up: u[r[s]] == r[u[s]]); the involution fixes it iff it sends the
    diagonal square u[r[s]] back to s.
    """
    r, u = o.right, o.up
    pi = square_involution(o)
    count = 1
    for s in range(o.n):
        if u[r[s]] == r[u[s]] and pi[s] == u[r[s]]:
            count += 1
    return count
