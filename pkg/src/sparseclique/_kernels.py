"""Compiled search kernels shared by the exact solver, the CP baseline, and the heuristic.

The kernels operate on the CSR arrays of a `Graph` plus a static degree
array; they release the GIL so the Python drivers can run them from
several threads against a shared read-only graph. All mutable state is
confined to small per-call arrays:

- ``counters``: int64[7] = (p1, p2, p3, p4, p5, nodes, poll)
- ``best``:     int64[3] = (best size, witness length, timeout flag)
- ``witness`` / ``path``: int32 scratch of length max_degree + 2

The exact/CP kernel is an explicit-stack rewrite of the recursive search:
each stack level owns a slice of one growable workspace holding its
candidate set, consumed left to right in ascending id order. Candidate
sets stay sorted by id, so intersecting with a (sorted) neighbor list is
a linear merge.
"""

from __future__ import annotations

import time

import numpy as np
from numba import njit, objmode

# counters layout
C_P1, C_P2, C_P3, C_P4, C_P5, C_NODES, C_POLL = 0, 1, 2, 3, 4, 5, 6
# best layout
B_SIZE, B_WLEN, B_TIMEOUT = 0, 1, 2

NO_DEADLINE = 1e300


@njit(cache=True, nogil=True)
def _mix64(state):
    # splitmix64, returning a non-negative int64 draw: the per-root stream
    # for the random selection policy.
    state = (state + np.uint64(0x9E3779B97F4A7C15)) & np.uint64(0xFFFFFFFFFFFFFFFF)
    z = state
    z = ((z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)) & np.uint64(0xFFFFFFFFFFFFFFFF)
    z = ((z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)) & np.uint64(0xFFFFFFFFFFFFFFFF)
    z = z ^ (z >> np.uint64(31))
    return state, np.int64(z >> np.uint64(1))


@njit(cache=True)
def _now():
    with objmode(now="float64"):
        now = time.perf_counter()
    return now


@njit(cache=True, nogil=True)
def solve_range(
    indptr,
    indices,
    deg,
    order,
    pos,
    start,
    end,
    max0,
    use_p1,
    use_p3,
    use_p5,
    deadline,
    counters,
    best,
    witness,
    path,
):
    """Run the branch-and-bound main loop over root positions [start, end).

    `best` must arrive as (max0, current witness length, 0); it is updated
    in place whenever a strictly larger clique is found. With the p1/p3/p5
    switches off this is the plain depth-first baseline (order test and
    size bound only).
    """
    maxv = max0
    work = np.empty(1024, dtype=np.int32)
    f_off = np.empty(path.size + 2, dtype=np.int64)
    f_len = np.empty(path.size + 2, dtype=np.int64)
    f_pos = np.empty(path.size + 2, dtype=np.int64)

    for oi in range(start, end):
        if deadline < NO_DEADLINE and _now() >= deadline:
            best[B_TIMEOUT] = 1
            return
        v = order[oi]
        if use_p1 and deg[v] < maxv:
            counters[C_P1] += 1
            continue
        # Candidate set: neighbors not yet processed by the main loop,
        # degree-filtered. CSR rows are id-sorted, so U is too.
        row_start = indptr[v]
        row_end = indptr[v + 1]
        dv = row_end - row_start
        if work.size < 2 * dv + 2:
            grown = np.empty(2 * dv + 1024, dtype=np.int32)
            work = grown
        ulen = 0
        for t in range(row_start, row_end):
            w = indices[t]
            if pos[w] < oi:
                counters[C_P2] += 1
            elif use_p3 and deg[w] < maxv:
                counters[C_P3] += 1
            else:
                work[ulen] = w
                ulen += 1

        counters[C_NODES] += 1
        path[0] = v
        if ulen == 0:
            if 1 > maxv:
                maxv = 1
                best[B_SIZE] = 1
                best[B_WLEN] = 1
                witness[0] = v
            continue

        sp = 0
        f_off[0] = 0
        f_len[0] = ulen
        f_pos[0] = 0
        while sp >= 0:
            counters[C_POLL] += 1
            if deadline < NO_DEADLINE and (counters[C_POLL] & 0xFFFF) == 0:
                if _now() >= deadline:
                    best[B_TIMEOUT] = 1
                    return
            size = sp + 1
            rem = f_len[sp] - f_pos[sp]
            if rem == 0:
                sp -= 1
                continue
            if size + rem <= maxv:
                counters[C_P4] += 1
                sp -= 1
                continue
            base = f_off[sp] + f_pos[sp]
            u = work[base]
            f_pos[sp] += 1
            path[size] = u

            child_off = f_off[sp] + f_len[sp]
            if child_off + rem > work.size:
                grown = np.empty(2 * (child_off + rem), dtype=np.int32)
                grown[:child_off] = work[:child_off]
                work = grown
            clen = 0
            ai = base + 1
            aend = f_off[sp] + f_len[sp]
            if use_p5:
                # Filter N(u) by degree (counting exclusions), merging with
                # the remaining candidates; the scan covers all of N(u).
                for t in range(indptr[u], indptr[u + 1]):
                    w = indices[t]
                    if deg[w] < maxv:
                        counters[C_P5] += 1
                        continue
                    while ai < aend and work[ai] < w:
                        ai += 1
                    if ai < aend and work[ai] == w:
                        work[child_off + clen] = w
                        clen += 1
                        ai += 1
            else:
                for t in range(indptr[u], indptr[u + 1]):
                    if ai >= aend:
                        break
                    w = indices[t]
                    while ai < aend and work[ai] < w:
                        ai += 1
                    if ai < aend and work[ai] == w:
                        work[child_off + clen] = w
                        clen += 1
                        ai += 1

            counters[C_NODES] += 1
            if clen == 0:
                if size + 1 > maxv:
                    maxv = size + 1
                    best[B_SIZE] = maxv
                    best[B_WLEN] = maxv
                    for q in range(maxv):
                        witness[q] = path[q]
                continue
            sp += 1
            f_off[sp] = child_off
            f_len[sp] = clen
            f_pos[sp] = 0
    return


@njit(cache=True, nogil=True)
def heuristic_range(
    indptr,
    indices,
    deg,
    start,
    end,
    max0,
    use_p1,
    use_p3,
    use_p5,
    random_policy,
    seed,
    counters,
    best,
    witness,
    path,
    buf_a,
    buf_b,
):
    """Follow one selection path per root vertex in [start, end).

    Under the max-degree policy ties break to the lowest vertex id; under
    the random policy the pick is uniform over the candidate set using a
    per-root stream derived from `seed`, so results do not depend on how
    roots are partitioned across calls.
    """
    maxv = max0
    for v in range(start, end):
        if use_p1 and deg[v] < maxv:
            counters[C_P1] += 1
            continue
        ulen = 0
        for t in range(indptr[v], indptr[v + 1]):
            w = indices[t]
            if use_p3 and deg[w] < maxv:
                counters[C_P3] += 1
            else:
                buf_a[ulen] = w
                ulen += 1
        counters[C_NODES] += 1
        path[0] = v
        size = 1
        rng = np.uint64(0)
        if random_policy:
            rng = (np.uint64(seed) ^ ((np.uint64(v) + np.uint64(1)) * np.uint64(0x9E3779B97F4A7C15))) & np.uint64(
                0xFFFFFFFFFFFFFFFF
            )
        cur = buf_a
        nxt = buf_b
        while ulen > 0:
            if random_policy:
                rng, draw = _mix64(rng)
                sel = draw % ulen
            else:
                sel = 0
                for i in range(1, ulen):
                    if deg[cur[i]] > deg[cur[sel]]:
                        sel = i
            u = cur[sel]
            path[size] = u
            size += 1
            # next candidates: remaining U intersected with the
            # degree-filtered neighborhood of u
            clen = 0
            ai = 0
            for t in range(indptr[u], indptr[u + 1]):
                w = indices[t]
                if use_p5 and deg[w] < maxv:
                    counters[C_P5] += 1
                    continue
                while ai < ulen and cur[ai] < w:
                    ai += 1
                if ai < ulen and cur[ai] == w and w != u:
                    nxt[clen] = w
                    clen += 1
                    ai += 1
            counters[C_NODES] += 1
            tmp = cur
            cur = nxt
            nxt = tmp
            ulen = clen
        if size > maxv:
            maxv = size
            best[B_SIZE] = maxv
            best[B_WLEN] = maxv
            for q in range(maxv):
                witness[q] = path[q]
    return


@njit(cache=True, nogil=True)
def per_vertex_paths(indptr, indices, deg, start, end, offsets, path, buf_a, buf_b):
    """Max-degree selection path from every root, pruning disabled.

    Each root keeps a private incumbent of zero so no degree filter ever
    truncates its path; every vertex therefore receives a clique containing
    it. Returns the flat concatenation of the per-root cliques; `offsets`
    (length end-start+1) receives the slice boundaries.
    """
    cap = 4 * (end - start) + 16
    out = np.empty(cap, dtype=np.int32)
    total = 0
    offsets[0] = 0
    for v in range(start, end):
        ulen = 0
        for t in range(indptr[v], indptr[v + 1]):
            buf_a[ulen] = indices[t]
            ulen += 1
        path[0] = v
        size = 1
        cur = buf_a
        nxt = buf_b
        while ulen > 0:
            sel = 0
            for i in range(1, ulen):
                if deg[cur[i]] > deg[cur[sel]]:
                    sel = i
            u = cur[sel]
            path[size] = u
            size += 1
            clen = 0
            ai = 0
            for t in range(indptr[u], indptr[u + 1]):
                w = indices[t]
                while ai < ulen and cur[ai] < w:
                    ai += 1
                if ai < ulen and cur[ai] == w and w != u:
                    nxt[clen] = w
                    clen += 1
                    ai += 1
            tmp = cur
            cur = nxt
            nxt = tmp
            ulen = clen
        if total + size > out.size:
            grown = np.empty(2 * (total + size), dtype=np.int32)
            grown[:total] = out[:total]
            out = grown
        for q in range(size):
            out[total + q] = path[q]
        total += size
        offsets[v - start + 1] = total
    return out[:total]
