"""Hot search kernels: iterative branch-and-bound over edge colors and
bitmask subset scans.

Every kernel here exists in two interchangeable builds: a numba nopython
compilation and the original plain-Python function.  `qmu.backend` picks one
at call time (env var QMU_BACKEND); both produce bit-identical results, which
`qmu bench` and the test suite verify.  Kernels are deliberately
self-contained (popcounts and component walks are inlined) so the Python
build never calls compiled code.

Branch-and-bound state machine
------------------------------
The coloring search assigns colors to edges one branch position at a time.
All state lives in caller-owned arrays so a run can be suspended after a node
quota and resumed bit-exactly (that is how time budgets are enforced without
timing calls inside the kernel):

  assigned[pos]  color currently placed at branch position pos (0 = none)
  trial[pos]     index into corder of the last color tried at pos
  mask[v]        bitmask of colors present at vertex v (bit c = color c)
  remv[v]        uncolored edges still incident to v
  vmin/vmax[v]   extremes of the partial spectrum (0 when empty)
  vstat[v]       0 undecided, 1 decided non-interval, 2 completed interval
  save[pos,side] (vmin, vmax, vstat) of each endpoint before the assignment
  color_use[c]   edges currently carrying color c
  ctrl           scalars: pos, ni, ic, best, used_cnt, nodes, improved

A vertex is decided non-interval as soon as its partial spectrum cannot
extend to deg(v) consecutive colors inside [1, t] with its remaining edges;
it is decided interval only once fully colored.  Both decisions are permanent
along a branch, which makes (|V| - ni) an admissible upper bound and ic an
admissible lower bound for the interval-vertex count f at any leaf below.
Surjectivity is enforced by never letting unused colors outnumber the edges
still to be colored.
"""

from __future__ import annotations

try:
    from numba import njit as _njit

    def _jit(f):
        return _njit(cache=True)(f)

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - exercised only without numba
    def _jit(f):
        return f

    NUMBA_AVAILABLE = False

# ctrl slots
C_POS, C_NI, C_IC, C_BEST, C_USED, C_NODES, C_IMPROVED = 0, 1, 2, 3, 4, 5, 6

# kernel exit statuses
ST_DONE = 0   # search space exhausted: incumbent is exact
ST_SLICE = 1  # node quota reached: resumable
ST_OPT = 2    # floor/ceiling hit: incumbent provably optimal
ST_FOUND = 3  # feasibility search found a witness


@_jit
def mu_branch_bound(eu, ev, deg, corder, t, first_cap, objective_max,
                    assigned, trial, mask, remv, vmin, vmax, vstat,
                    save, color_use, ctrl, best_colors, node_slice):
    m = eu.shape[0]
    n = deg.shape[0]
    pos = ctrl[C_POS]
    ni = ctrl[C_NI]
    ic = ctrl[C_IC]
    best = ctrl[C_BEST]
    used_cnt = ctrl[C_USED]
    nodes = 0
    status = ST_SLICE
    while True:
        if nodes >= node_slice:
            break
        u = eu[pos]
        v = ev[pos]
        cprev = assigned[pos]
        if cprev != 0:
            # undo the previous trial at this level
            bit = 1 << cprev
            mask[u] ^= bit
            mask[v] ^= bit
            remv[u] += 1
            remv[v] += 1
            if vstat[u] != save[pos, 0, 2]:
                if vstat[u] == 1:
                    ni -= 1
                else:
                    ic -= 1
            vmin[u] = save[pos, 0, 0]
            vmax[u] = save[pos, 0, 1]
            vstat[u] = save[pos, 0, 2]
            if vstat[v] != save[pos, 1, 2]:
                if vstat[v] == 1:
                    ni -= 1
                else:
                    ic -= 1
            vmin[v] = save[pos, 1, 0]
            vmax[v] = save[pos, 1, 1]
            vstat[v] = save[pos, 1, 2]
            color_use[cprev] -= 1
            if color_use[cprev] == 0:
                used_cnt -= 1
            assigned[pos] = 0
        # advance to the next feasible color at this position
        k = trial[pos]
        cnew = 0
        while k < t:
            k += 1
            c = corder[k]
            if pos == 0 and c > first_cap:
                continue
            nodes += 1
            bit = 1 << c
            if (mask[u] | mask[v]) & bit != 0:
                continue
            add = 0
            if color_use[c] == 0:
                add = 1
            if (m - pos - 1) < (t - (used_cnt + add)):
                continue
            cnew = c
            break
        trial[pos] = k
        if cnew == 0:
            trial[pos] = 0
            pos -= 1
            if pos < 0:
                status = ST_DONE
                break
            continue
        # place cnew on the edge at pos, updating both endpoints
        bit = 1 << cnew
        save[pos, 0, 0] = vmin[u]
        save[pos, 0, 1] = vmax[u]
        save[pos, 0, 2] = vstat[u]
        mask[u] |= bit
        remv[u] -= 1
        if vmin[u] == 0 or cnew < vmin[u]:
            vmin[u] = cnew
        if cnew > vmax[u]:
            vmax[u] = cnew
        if vstat[u] == 0:
            d = deg[u]
            if remv[u] == 0:
                if vmax[u] - vmin[u] + 1 == d:
                    vstat[u] = 2
                    ic += 1
                else:
                    vstat[u] = 1
                    ni += 1
            else:
                lo = vmax[u] - d + 1
                if lo < 1:
                    lo = 1
                hi = vmin[u]
                if t - d + 1 < hi:
                    hi = t - d + 1
                if lo > hi:
                    vstat[u] = 1
                    ni += 1
        save[pos, 1, 0] = vmin[v]
        save[pos, 1, 1] = vmax[v]
        save[pos, 1, 2] = vstat[v]
        mask[v] |= bit
        remv[v] -= 1
        if vmin[v] == 0 or cnew < vmin[v]:
            vmin[v] = cnew
        if cnew > vmax[v]:
            vmax[v] = cnew
        if vstat[v] == 0:
            d = deg[v]
            if remv[v] == 0:
                if vmax[v] - vmin[v] + 1 == d:
                    vstat[v] = 2
                    ic += 1
                else:
                    vstat[v] = 1
                    ni += 1
            else:
                lo = vmax[v] - d + 1
                if lo < 1:
                    lo = 1
                hi = vmin[v]
                if t - d + 1 < hi:
                    hi = t - d + 1
                if lo > hi:
                    vstat[v] = 1
                    ni += 1
        assigned[pos] = cnew
        color_use[cnew] += 1
        if color_use[cnew] == 1:
            used_cnt += 1
        # bound: can any completion still beat the incumbent?
        if objective_max != 0:
            if n - ni <= best:
                continue
        else:
            if ic >= best:
                continue
        if pos == m - 1:
            f = ic
            if objective_max != 0:
                if f > best:
                    best = f
                    for i in range(m):
                        best_colors[i] = assigned[i]
                    ctrl[C_IMPROVED] = 1
                    if best >= n:
                        status = ST_OPT
                        break
            else:
                if f < best:
                    best = f
                    for i in range(m):
                        best_colors[i] = assigned[i]
                    ctrl[C_IMPROVED] = 1
                    if best <= 0:
                        status = ST_OPT
                        break
            continue
        pos += 1
    ctrl[C_POS] = pos
    ctrl[C_NI] = ni
    ctrl[C_IC] = ic
    ctrl[C_BEST] = best
    ctrl[C_USED] = used_cnt
    ctrl[C_NODES] += nodes
    return status


@_jit
def interval_feasible_scan(eu, ev, deg, corder, t, first_cap, rflag,
                           assigned, trial, mask, remv, vmin, vmax, vstat,
                           save, color_use, ctrl, out_colors, node_slice):
    """Backtracking feasibility search for a proper surjective t-coloring
    whose spectrum is an interval at every flagged vertex.  Prunes as soon as
    a flagged vertex is decided non-interval."""
    m = eu.shape[0]
    pos = ctrl[C_POS]
    used_cnt = ctrl[C_USED]
    nodes = 0
    status = ST_SLICE
    while True:
        if nodes >= node_slice:
            break
        u = eu[pos]
        v = ev[pos]
        cprev = assigned[pos]
        if cprev != 0:
            bit = 1 << cprev
            mask[u] ^= bit
            mask[v] ^= bit
            remv[u] += 1
            remv[v] += 1
            vmin[u] = save[pos, 0, 0]
            vmax[u] = save[pos, 0, 1]
            vstat[u] = save[pos, 0, 2]
            vmin[v] = save[pos, 1, 0]
            vmax[v] = save[pos, 1, 1]
            vstat[v] = save[pos, 1, 2]
            color_use[cprev] -= 1
            if color_use[cprev] == 0:
                used_cnt -= 1
            assigned[pos] = 0
        k = trial[pos]
        cnew = 0
        while k < t:
            k += 1
            c = corder[k]
            if pos == 0 and c > first_cap:
                continue
            nodes += 1
            bit = 1 << c
            if (mask[u] | mask[v]) & bit != 0:
                continue
            add = 0
            if color_use[c] == 0:
                add = 1
            if (m - pos - 1) < (t - (used_cnt + add)):
                continue
            cnew = c
            break
        trial[pos] = k
        if cnew == 0:
            trial[pos] = 0
            pos -= 1
            if pos < 0:
                status = ST_DONE
                break
            continue
        bit = 1 << cnew
        save[pos, 0, 0] = vmin[u]
        save[pos, 0, 1] = vmax[u]
        save[pos, 0, 2] = vstat[u]
        mask[u] |= bit
        remv[u] -= 1
        if vmin[u] == 0 or cnew < vmin[u]:
            vmin[u] = cnew
        if cnew > vmax[u]:
            vmax[u] = cnew
        if vstat[u] == 0:
            d = deg[u]
            if remv[u] == 0:
                if vmax[u] - vmin[u] + 1 == d:
                    vstat[u] = 2
                else:
                    vstat[u] = 1
            else:
                lo = vmax[u] - d + 1
                if lo < 1:
                    lo = 1
                hi = vmin[u]
                if t - d + 1 < hi:
                    hi = t - d + 1
                if lo > hi:
                    vstat[u] = 1
        save[pos, 1, 0] = vmin[v]
        save[pos, 1, 1] = vmax[v]
        save[pos, 1, 2] = vstat[v]
        mask[v] |= bit
        remv[v] -= 1
        if vmin[v] == 0 or cnew < vmin[v]:
            vmin[v] = cnew
        if cnew > vmax[v]:
            vmax[v] = cnew
        if vstat[v] == 0:
            d = deg[v]
            if remv[v] == 0:
                if vmax[v] - vmin[v] + 1 == d:
                    vstat[v] = 2
                else:
                    vstat[v] = 1
            else:
                lo = vmax[v] - d + 1
                if lo < 1:
                    lo = 1
                hi = vmin[v]
                if t - d + 1 < hi:
                    hi = t - d + 1
                if lo > hi:
                    vstat[v] = 1
        assigned[pos] = cnew
        color_use[cnew] += 1
        if color_use[cnew] == 1:
            used_cnt += 1
        if (rflag[u] == 1 and vstat[u] == 1) or (rflag[v] == 1 and vstat[v] == 1):
            continue
        if pos == m - 1:
            for i in range(m):
                out_colors[i] = assigned[i]
            status = ST_FOUND
            break
        pos += 1
    ctrl[C_POS] = pos
    ctrl[C_USED] = used_cnt
    ctrl[C_NODES] += nodes
    return status


@_jit
def max_pathforest_scan(adjmask, nverts):
    """Largest vertex subset whose induced subgraph is a disjoint union of
    simple paths (max degree <= 2 and acyclic), by scanning all 2^nverts
    subsets.  Returns (size, subset bitmask)."""
    total = 1 << nverts
    best = 0
    bestmask = 0
    for sub in range(total):
        x = sub
        pc = 0
        while x:
            x &= x - 1
            pc += 1
        if pc <= best:
            continue
        edges2 = 0
        ok = True
        for vtx in range(nverts):
            if (sub >> vtx) & 1:
                y = adjmask[vtx] & sub
                d = 0
                while y:
                    y &= y - 1
                    d += 1
                if d > 2:
                    ok = False
                    break
                edges2 += d
        if not ok:
            continue
        comps = 0
        rem = sub
        while rem:
            seed = rem & (-rem)
            comp = 0
            frontier = seed
            while frontier:
                comp |= frontier
                nxt = 0
                for vtx in range(nverts):
                    if (frontier >> vtx) & 1:
                        nxt |= adjmask[vtx] & sub
                frontier = nxt & ~comp
            comps += 1
            rem &= ~comp
        if edges2 // 2 == pc - comps:
            best = pc
            bestmask = sub
    return best, bestmask


@_jit
def cover_scan(patterns, nverts, threshold):
    """Check that every vertex subset of size >= threshold contains at least
    one pattern mask.  Returns (first uncovered subset or -1, subsets checked)."""
    total = 1 << nverts
    npat = patterns.shape[0]
    checked = 0
    for sub in range(total):
        x = sub
        pc = 0
        while x:
            x &= x - 1
            pc += 1
        if pc < threshold:
            continue
        checked += 1
        covered = False
        for i in range(npat):
            p = patterns[i]
            if p & sub == p:
                covered = True
                break
        if not covered:
            return sub, checked
    return -1, checked
