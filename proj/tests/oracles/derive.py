#!/usr/bin/env python3
# Copyright 2026 The kdsm Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent brute-force derivation of the values pinned in the C++ tests.

Shares no code with the library: plain Python, fractions.Fraction, and
exhaustive enumeration (LPs by vertex enumeration). Prints one JSON object.
"""

import itertools
import json
import math
from fractions import Fraction as F


def pc(m):
    return bin(m).count("1")


def label(m, n):
    return "".join(chr(ord("a") + i) for i in range(n) if m >> i & 1)


def first_violation(f, n, k):
    for x in range(1 << n):
        for y in range(x + 1, 1 << n):
            if x & y in (x, y):
                continue
            if pc(x ^ y) >= k and f[x] + f[y] < f[x | y] + f[x & y]:
                return (x, y)
    return None


def all_violations(f, n, k):
    return [(x, y) for x in range(1 << n) for y in range(x + 1, 1 << n)
            if pc(x ^ y) >= k and f[x] + f[y] < f[x | y] + f[x & y]]


def solve(a, b):
    """Gauss-Jordan over fractions; None when singular."""
    n = len(a)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return None
        m[c], m[p] = m[p], m[c]
        for r in range(n):
            if r != c and m[r][c] != 0:
                t = m[r][c] / m[c][c]
                m[r] = [m[r][j] - t * m[c][j] for j in range(n + 1)]
    return [m[i][n] / m[i][i] for i in range(n)]


def full_lp(f, n, w):
    """max w.x s.t. x(T) <= f(T) for all nonempty T, by vertex enumeration."""
    sets = list(range(1, 1 << n))
    best = None
    for basis in itertools.combinations(sets, n):
        a = [[F(t >> i & 1) for i in range(n)] for t in basis]
        x = solve(a, [F(f[t]) for t in basis])
        if x is None:
            continue
        if all(sum(x[i] for i in range(n) if t >> i & 1) <= f[t] for t in sets):
            v = sum(wi * xi for wi, xi in zip(w, x))
            if best is None or v > best[0]:
                best = (v, x)
    return best


def family(perm, n, k):
    prefixes = [0]
    for e in perm:
        prefixes.append(prefixes[-1] | 1 << e)
    out = set()
    for s in prefixes:
        for t in range(1 << n):
            if pc(t) <= k - 2:
                out.add(s ^ t)
    return sorted(out)


def epsilon(n, bw, bf):
    return F(1, 4 * n * n) * F(1, math.factorial(n)) ** 3 * F(1, bw) ** n / bf


def small_set_bounds(f, n, k):
    m = sum(abs(f[t]) for t in range(1 << n) if pc(t) <= k)
    full = f[(1 << n) - 1]
    return m, full - m, m


def u23():
    return [min(pc(m), 2) for m in range(8)]


def clique_fn(adj, nv, kc):
    def is_clique(x):
        vs = [v for v in range(nv) if x >> v & 1]
        return all(adj[u] >> v & 1 for u, v in itertools.combinations(vs, 2))
    f = []
    for x in range(1 << nv):
        s = pc(x)
        if s == kc and is_clique(x):
            f.append(-1)
        elif s <= kc:
            f.append(0)
        else:
            f.append(nv - s)
    return f


def cut_fn(w, nv):
    f = []
    for t in range(1 << nv):
        f.append(sum(w[u][v] for u in range(nv) for v in range(nv)
                     if t >> u & 1 and not t >> v & 1))
    return f


def pq_holds(f, n, p, q):
    good = {}
    for x in range(1 << n):
        for y in range(x + 1, 1 << n):
            good[(x, y)] = f[x] + f[y] >= f[x | y] + f[x & y]
    for tup in itertools.combinations(range(1 << n), q):
        if sum(good[pair] for pair in itertools.combinations(tup, 2)) < p:
            return False, list(tup)
    return True, None


def sparse_paving_rank(r, forbidden):
    def rank(x):
        if pc(x) == r and x in forbidden:
            return r - 1
        return min(pc(x), r)
    return rank


def main():
    out = {}
    fab = [0] * 8
    fab[0b011] = -1
    out["f_ab_first_violation_k2"] = [label(m, 3) for m in first_violation(fab, 3, 2)]
    out["f_ab_violates_ab_ac"] = (0b011, 0b101) in all_violations(fab, 3, 2)
    out["f_ab_violation_k3"] = first_violation(fab, 3, 3) is not None
    out["u23_2distant"] = first_violation(u23(), 3, 2) is None
    fs = [0] * 8
    fs[7] = -1
    out["f_S_2distant"] = first_violation(fs, 3, 2) is None
    out["bounds_f_S"] = [str(v) for v in small_set_bounds(fs, 3, 2)]
    out["bounds_u23"] = [str(v) for v in small_set_bounds(u23(), 3, 2)]
    g = [u23()[m] - pc(m) for m in range(8)]
    out["u23_minus_ones"] = {"a": g[1], "S": g[7], "min": min(g),
                             "argmin": label(g.index(min(g)), 3)}
    fam = family([0, 1, 2, 3], 4, 3)
    out["family_n4_k3_identity"] = {"size": len(fam), "members": fam}
    out["family_n3_k3_size"] = len(family([0, 1, 2], 3, 3))
    out["family_bound_10_4"] = 11 * (1 + 10 + 45)
    out["epsilon"] = {"2,1,1": str(epsilon(2, 1, 1)), "3,2,5": str(epsilon(3, 2, 5)),
                      "1,1,1": str(epsilon(1, 1, 1))}
    v, x = full_lp(u23(), 3, [3, 2, 1])
    out["u23_full_lp_w321"] = {"value": str(v), "x": [str(t) for t in x]}
    h = [u23()[m] - (m & 1) for m in range(8)]
    v, x = full_lp(h, 3, [3, 2, 1])
    out["u23_minus_a_full_lp_w321"] = {"value": str(v), "x": [str(t) for t in x]}
    k7 = [((1 << 7) - 1) ^ (1 << v) for v in range(7)]
    fk7 = clique_fn(k7, 7, 3)
    out["clique_K7_min"] = min(fk7)
    out["clique_K7_2kc1"] = first_violation(fk7, 7, 7) is None
    c7 = [(1 << ((v + 1) % 7)) | (1 << ((v - 1) % 7)) for v in range(7)]
    fc7 = clique_fn(c7, 7, 3)
    out["clique_C7_min"] = [min(fc7), fc7.index(min(fc7))]
    w4 = [[0 if u == v else 1 for v in range(4)] for u in range(4)]
    w4[0][1] = w4[1][0] = -1
    c4 = cut_fn(w4, 4)
    out["cut_K4_one_negative_3distant"] = first_violation(c4, 4, 3) is None
    out["cut_K4_one_negative_2distant"] = first_violation(c4, 4, 2) is None
    k3 = cut_fn([[0, 1, 1], [1, 0, 1], [1, 1, 0]], 3)
    out["cut_K3_singletons"] = [k3[1], k3[2], k3[4], k3[0], k3[7]]
    out["pq_f_ab"] = {f"{p},3": pq_holds(fab, 3, p, 3)[0] for p in (1, 2, 3)}
    r1 = sparse_paving_rank(2, {0b0011})
    r2 = sparse_paving_rank(2, {0b1100})
    rmin = [min(r1(x), r2(x)) for x in range(16)]
    out["rmin_sparse_pair_4distant"] = first_violation(rmin, 4, 4) is None
    best = (0, 0)
    for s in range(16):
        if r1(s) == pc(s) and r2(s) == pc(s) and pc(s) > best[0]:
            best = (pc(s), s)
    out["mi_sparse_pair_unit"] = [best[0], [i + 1 for i in range(4) if best[1] >> i & 1]]
    print(json.dumps(out, indent=1, sort_keys=True))


if __name__ == "__main__":
    main()
