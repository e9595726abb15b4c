"""Compiled backtracking kernels for exhaustive forest/tree enumeration.

All kernels walk the edge list with an include/exclude decision per edge,
maintaining a union-find forest with explicit undo (union by size, no path
compression, so rollback is a constant-time reset).  Edge subsets are
encoded as int64 bitmasks over the edge list, which caps usable edge
counts at 62 -- far above the oracle guards.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        x = parent[x]
    return x


@njit(cache=True)
def count_spanning_trees(eu, ev, n):
    """Number of acyclic spanning edge subsets of size n-1."""
    m = eu.shape[0]
    if n == 1:
        return 1
    parent = np.arange(n)
    size = np.ones(n, np.int64)
    state = np.zeros(m + 1, np.uint8)
    child = np.empty(m + 1, np.int64)
    par = np.empty(m + 1, np.int64)
    ncomp = n
    count = 0
    d = 0
    while d >= 0:
        s = state[d]
        if s == 0:
            if ncomp == 1:
                count += 1
                d -= 1
                continue
            if m - d < ncomp - 1:
                d -= 1
                continue
            ru = _find(parent, eu[d])
            rv = _find(parent, ev[d])
            if ru != rv:
                if size[ru] < size[rv]:
                    ru, rv = rv, ru
                parent[rv] = ru
                size[ru] += size[rv]
                ncomp -= 1
                child[d] = rv
                par[d] = ru
                state[d] = 1
            else:
                state[d] = 2
            d += 1
            state[d] = 0
        elif s == 1:
            parent[child[d]] = child[d]
            size[par[d]] -= size[child[d]]
            ncomp += 1
            state[d] = 2
            d += 1
            state[d] = 0
        else:
            d -= 1
    return count


@njit(cache=True)
def count_rooted_forests(eu, ev, n):
    """Sum over acyclic spanning edge subsets of the product of tree sizes."""
    m = eu.shape[0]
    parent = np.arange(n)
    size = np.ones(n, np.int64)
    state = np.zeros(m + 1, np.uint8)
    child = np.empty(m + 1, np.int64)
    par = np.empty(m + 1, np.int64)
    prod = 1  # product of component sizes for the current subset
    total = 0
    d = 0
    while d >= 0:
        s = state[d]
        if s == 0:
            if d == m:
                total += prod
                d -= 1
                continue
            ru = _find(parent, eu[d])
            rv = _find(parent, ev[d])
            if ru != rv:
                if size[ru] < size[rv]:
                    ru, rv = rv, ru
                prod = prod // (size[ru] * size[rv]) * (size[ru] + size[rv])
                parent[rv] = ru
                size[ru] += size[rv]
                child[d] = rv
                par[d] = ru
                state[d] = 1
            else:
                state[d] = 2
            d += 1
            state[d] = 0
        elif s == 1:
            rv = child[d]
            ru = par[d]
            parent[rv] = rv
            size[ru] -= size[rv]
            prod = prod // (size[ru] + size[rv]) * (size[ru] * size[rv])
            state[d] = 2
            d += 1
            state[d] = 0
        else:
            d -= 1
    return total


@njit(cache=True)
def spanning_tree_masks(eu, ev, n, out):
    """Write each spanning tree as an edge bitmask into ``out``; return count."""
    m = eu.shape[0]
    k = 0
    if n == 1:
        out[0] = 0
        return 1
    parent = np.arange(n)
    size = np.ones(n, np.int64)
    state = np.zeros(m + 1, np.uint8)
    child = np.empty(m + 1, np.int64)
    par = np.empty(m + 1, np.int64)
    ncomp = n
    mask = np.int64(0)
    d = 0
    while d >= 0:
        s = state[d]
        if s == 0:
            if ncomp == 1:
                out[k] = mask
                k += 1
                d -= 1
                continue
            if m - d < ncomp - 1:
                d -= 1
                continue
            ru = _find(parent, eu[d])
            rv = _find(parent, ev[d])
            if ru != rv:
                if size[ru] < size[rv]:
                    ru, rv = rv, ru
                parent[rv] = ru
                size[ru] += size[rv]
                ncomp -= 1
                child[d] = rv
                par[d] = ru
                mask |= np.int64(1) << d
                state[d] = 1
            else:
                state[d] = 2
            d += 1
            state[d] = 0
        elif s == 1:
            parent[child[d]] = child[d]
            size[par[d]] -= size[child[d]]
            ncomp += 1
            mask &= ~(np.int64(1) << d)
            state[d] = 2
            d += 1
            state[d] = 0
        else:
            d -= 1
    return k


@njit(cache=True)
def rooted_forest_codes(eu, ev, n, shift, out):
    """Write every rooted spanning forest into ``out``; return count.

    A rooted forest is encoded as  forest_edge_mask | (root_vertex_mask <<
    shift); for every acyclic edge subset each choice of one root per
    component tree yields one code.
    """
    m = eu.shape[0]
    parent = np.arange(n)
    size = np.ones(n, np.int64)
    state = np.zeros(m + 1, np.uint8)
    child = np.empty(m + 1, np.int64)
    par = np.empty(m + 1, np.int64)
    # per-leaf component scratch
    rep2c = np.empty(n, np.int64)
    comp_of = np.empty(n, np.int64)
    comp_start = np.empty(n + 1, np.int64)
    comp_verts = np.empty(n, np.int64)
    pos = np.empty(n, np.int64)
    sel = np.empty(n, np.int64)
    mask = np.int64(0)
    k = 0
    d = 0
    while d >= 0:
        s = state[d]
        if s == 0:
            if d == m:
                # identify components of the current forest
                nc = 0
                for v in range(n):
                    rep2c[v] = -1
                for v in range(n):
                    r = _find(parent, v)
                    if rep2c[r] == -1:
                        rep2c[r] = nc
                        nc += 1
                    comp_of[v] = rep2c[r]
                for c in range(nc + 1):
                    comp_start[c] = 0
                for v in range(n):
                    comp_start[comp_of[v] + 1] += 1
                for c in range(nc):
                    comp_start[c + 1] += comp_start[c]
                for c in range(nc):
                    pos[c] = comp_start[c]
                for v in range(n):
                    c = comp_of[v]
                    comp_verts[pos[c]] = v
                    pos[c] += 1
                # odometer over one root choice per component
                for c in range(nc):
                    sel[c] = comp_start[c]
                while True:
                    roots = np.int64(0)
                    for c in range(nc):
                        roots |= np.int64(1) << comp_verts[sel[c]]
                    out[k] = mask | (roots << shift)
                    k += 1
                    c = 0
                    while c < nc:
                        sel[c] += 1
                        if sel[c] < comp_start[c + 1]:
                            break
                        sel[c] = comp_start[c]
                        c += 1
                    if c == nc:
                        break
                d -= 1
                continue
            ru = _find(parent, eu[d])
            rv = _find(parent, ev[d])
            if ru != rv:
                if size[ru] < size[rv]:
                    ru, rv = rv, ru
                parent[rv] = ru
                size[ru] += size[rv]
                child[d] = rv
                par[d] = ru
                mask |= np.int64(1) << d
                state[d] = 1
            else:
                state[d] = 2
            d += 1
            state[d] = 0
        elif s == 1:
            parent[child[d]] = child[d]
            size[par[d]] -= size[child[d]]
            mask &= ~(np.int64(1) << d)
            state[d] = 2
            d += 1
            state[d] = 0
        else:
            d -= 1
    return k
