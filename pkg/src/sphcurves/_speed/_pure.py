"""Pure-Python kernels.

This module is the reference implementation of the hot loops; the compiled
twin in ``_kernels.pyx`` mirrors every function here bit for bit.  Keep the
two in sync: the backend-agreement tests compare them on random inputs.

Conventions shared by all kernels:

* a word is a sequence of labels ``1..n`` of length ``2n``, each label
  occurring exactly twice, read cyclically;
* edge ``e`` joins word positions ``e`` and ``(e+1) % 2n``;
* dart ``2e`` traverses edge ``e`` with the curve orientation, ``2e+1``
  against it;
* the chirality of crossing ``c`` is carried in bit ``c-1`` of a mask:
  bit clear = sign ``+1``, bit set = sign ``-1``;
* sign ``+1`` means the counterclockwise order of the four edge-ends at the
  crossing is (arrive@first, arrive@second, leave@first, leave@second),
  where first/second refer to the two passages in word order; sign ``-1``
  swaps the second passage's two ends.
"""


def canonical_word(letters):
    """Lexicographically least relabeled sequence over all rotations and
    both traversal directions.

    Returns a tuple of ints; idempotent.
    """
    L = len(letters)
    letters = tuple(letters)
    best = None
    for d in (1, -1):
        for r in range(L):
            relabel = {}
            cand = []
            worse = False
            for k in range(L):
                c = letters[(r + d * k) % L]
                m = relabel.get(c)
                if m is None:
                    m = len(relabel) + 1
                    relabel[c] = m
                cand.append(m)
                if best is not None:
                    b = best[k]
                    if m > b:
                        worse = True
                        break
                    if m < b:
                        best = None  # current candidate is strictly smaller
            if not worse:
                t = tuple(cand)
                if best is None or t < best:
                    best = t
    return best


def canonical_signed(letters, signs, identify_mirror):
    """Least (word, sign-vector) pair over rotations, reversals, relabelings
    and, when ``identify_mirror`` is set, global sign negation.

    ``signs[c-1]`` is the chirality of label ``c`` (+1 or -1) relative to the
    passage order of ``letters``.  Rotating or reversing the word changes
    which passage of a crossing comes first; the sign of a crossing flips
    exactly when its passages swap order.  Returns ``(word, signs)`` tuples
    with the sign vector indexed by the relabeled letters.
    """
    L = len(letters)
    n = L // 2
    letters = tuple(letters)
    second = {}
    for pos, c in enumerate(letters):
        second[c] = pos  # overwritten at the later occurrence
    mirrors = (1, -1) if identify_mirror else (1,)
    best = None
    for mm in mirrors:
        for d in (1, -1):
            for r in range(L):
                relabel = {}
                w = []
                s = [0] * n
                for k in range(L):
                    p = (r + d * k) % L
                    c = letters[p]
                    m = relabel.get(c)
                    if m is None:
                        m = len(relabel) + 1
                        relabel[c] = m
                        flip = -1 if p == second[c] else 1
                        s[m - 1] = mm * flip * signs[c - 1]
                    w.append(m)
                cand = (tuple(w), tuple(s))
                if best is None or cand < best:
                    best = cand
    return best


def _next_end(letters, signs_mask):
    """Rotation successor over edge-ends.

    End ids: ``2k`` is the arrival side of word position ``k`` (head of edge
    ``k-1``), ``2k+1`` the departure side (tail of edge ``k``).  Returns the
    counterclockwise-next end at the same crossing.
    """
    L = len(letters)
    n = L // 2
    first = [-1] * (n + 1)
    second = [-1] * (n + 1)
    for pos, c in enumerate(letters):
        if first[c] < 0:
            first[c] = pos
        else:
            second[c] = pos
    nxt = [0] * (2 * L)
    for c in range(1, n + 1):
        i = first[c]
        j = second[c]
        if (signs_mask >> (c - 1)) & 1 == 0:
            # ccw cycle (in1, in2, out1, out2)
            nxt[2 * i] = 2 * j
            nxt[2 * j] = 2 * i + 1
            nxt[2 * i + 1] = 2 * j + 1
            nxt[2 * j + 1] = 2 * i
        else:
            # ccw cycle (in1, out2, out1, in2)
            nxt[2 * i] = 2 * j + 1
            nxt[2 * j + 1] = 2 * i + 1
            nxt[2 * i + 1] = 2 * j
            nxt[2 * j] = 2 * i
    return nxt


def _dart_successor(nxt, L, d):
    """Face-trace successor of dart ``d`` (face kept on a fixed side)."""
    e, back = divmod(d, 2)
    a = 2 * e + 1 if back else 2 * ((e + 1) % L)
    y = nxt[a]
    k, plus = divmod(y, 2)
    if plus:
        return 2 * k
    return 2 * ((k - 1) % L) + 1


def face_count(letters, signs_mask):
    """Number of faces of the embedding (word, chirality mask).

    Equals ``n + 2`` exactly when the signed word embeds in the sphere;
    smaller values indicate positive genus.
    """
    L = len(letters)
    nxt = _next_end(letters, signs_mask)
    visited = [False] * (2 * L)
    faces = 0
    for d0 in range(2 * L):
        if visited[d0]:
            continue
        faces += 1
        d = d0
        while not visited[d]:
            visited[d] = True
            d = _dart_successor(nxt, L, d)
    return faces


def face_orbits(letters, signs_mask):
    """Dart orbits of the face tracing, each in traversal order.

    Orbits are listed by their smallest dart id, so the output is a
    deterministic function of the input.
    """
    L = len(letters)
    nxt = _next_end(letters, signs_mask)
    seen = [False] * (2 * L)
    orbits = []
    for d0 in range(2 * L):
        if seen[d0]:
            continue
        orbit = []
        d = d0
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = _dart_successor(nxt, L, d)
        orbits.append(orbit)
    return orbits


def realizable_masks(letters):
    """All chirality masks whose face count hits the sphere bound n + 2."""
    n = len(letters) // 2
    want = n + 2
    out = []
    for mask in range(1 << n):
        if face_count(letters, mask) == want:
            out.append(mask)
    return out
