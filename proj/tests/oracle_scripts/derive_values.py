# Copyright 2026 The cardcut Authors.
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

"""Brute-force derivation of expected values frozen into the C++ tests.

Independent of the C++ library: enumerates X^{l,u} directly, maximizes by
enumeration, and computes ranks with fractions.Fraction elimination.
"""
from fractions import Fraction as F
from itertools import combinations, product


def points(n, sets, l, u):
    out = []
    for mask in range(1 << n):
        U = {j + 1 for j in range(n) if mask >> j & 1}
        if l <= len(U) <= u:
            z = [1 if j in U else 0 for j in range(1, n + 1)]
            d = [1 if not (set(S) & U) else 0 for S in sets]
            out.append((z, d))
    return out


def rank(rows):
    rows = [list(map(F, r)) for r in rows]
    r = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def affine_rank(pts):
    if not pts:
        return -1
    base = pts[0]
    return rank([[a - b for a, b in zip(p, base)] for p in pts[1:]] or [[0] * len(base)])


def flat(p):
    return p[0] + p[1]


def nu(n, sets, l, u, alpha):
    pts = points(n, sets, l, u)
    pats = sorted({tuple(d) for _, d in pts}, key=lambda d: sum(b << i for i, b in enumerate(d)))
    return pats, [max(sum(a * x for a, x in zip(alpha, z)) for z, d in pts if tuple(d) == pat) for pat in pats]


def ineq_val(alpha, beta, p):
    return sum(a * x for a, x in zip(alpha, p[0])) + sum(b * x for b, x in zip(beta, p[1]))


def facet_rank(n, sets, l, u, alpha, beta, gamma):
    pts = points(n, sets, l, u)
    assert all(ineq_val(alpha, beta, p) <= gamma for p in pts)
    tight = [flat(p) for p in pts if ineq_val(alpha, beta, p) == gamma]
    return affine_rank(tight)


A = (5, [[1, 2], [1, 2, 3]], 1, 3)
print("INST-A nu(1s)", nu(*A, [1] * 5))
print("INST-A nu(-1,0..)", nu(*A, [-1, 0, 0, 0, 0]))
print("INST-A nu(e5)", nu(*A, [0, 0, 0, 0, 1]))
print("INST-A dim", affine_rank([flat(p) for p in points(*A)]))
print("dim n=3 S={12} l0 u1", affine_rank([flat(p) for p in points(3, [[1, 2]], 0, 1)]))


def upper(n, sets, l, u, p, Sp):
    Ssets = [set(s) for s in sets]
    alpha = [1 if j in Sp else 0 for j in range(1, n + 1)]
    beta = [0] * len(sets)
    beta[p - 1] = u - len(Sp - Ssets[p - 1])
    for i in range(p + 1, len(sets) + 1):
        beta[i - 1] = len(Sp - Ssets[i - 2]) - len(Sp - Ssets[i - 1])
    return alpha, beta, u


def lower(n, sets, l, u, p, Sp):
    """returned as <= form: -sum z + coeffs delta <= 0"""
    Ssets = [set(s) for s in sets]
    alpha = [-1 if j in Sp else 0 for j in range(1, n + 1)]
    beta = [0] * len(sets)
    beta[p - 1] = len(Sp | Ssets[p - 1]) - n + l
    for i in range(p + 1, len(sets) + 1):
        beta[i - 1] = len(Sp | Ssets[i - 1]) - len(Sp | Ssets[i - 2])
    return alpha, beta, 0


for Sp in [{1, 2, 4, 5}, {1, 2, 3, 5}]:
    print("upper p=1", Sp, upper(*A, 1, Sp), "rank", facet_rank(*A, *upper(*A, 1, Sp)))
print("upper p=2 J", upper(*A, 2, {1, 2, 3, 4, 5}), facet_rank(*A, *upper(*A, 2, {1, 2, 3, 4, 5})))
for p, Sp in [(2, {4, 5}), (1, {3, 4, 5})]:
    print("lower", p, Sp, lower(*A, p, Sp), "rank", facet_rank(*A, *lower(*A, p, Sp)))
print("2link d2-d1<=0 rank", facet_rank(*A, [0] * 5, [-1, 1], 0))
print("sum z <= u rank", facet_rank(*A, [1] * 5, [0, 0], 3))
print("completion sum z + d2 <= 3 rank", facet_rank(*A, [1] * 5, [0, 1], 3))


def brute_sep(n, sets, l, u, z, d, fam):
    best = None
    m = len(sets)
    Ssets = [set(s) for s in sets]
    for p in range(1, m + 1):
        for mask in range(1 << n):
            Sp = {j + 1 for j in range(n) if mask >> j & 1}
            if fam == "upper":
                if len(Sp - Ssets[p - 1]) > u - 1:
                    continue
                a, b, g = upper(n, sets, l, u, p, Sp)
            else:
                prev = Ssets[p - 2] if p >= 2 else set()
                if not (len(Sp | prev) <= n - l < len(Sp | Ssets[p - 1])):
                    continue
                a, b, g = lower(n, sets, l, u, p, Sp)
            v = ineq_val(a, b, (z, d)) - g
            if best is None or v > best[0]:
                best = (v, p, sorted(Sp))
    return best


h = F(1, 2)
q = F(1, 4)
print("sep upper ex2", brute_sep(*A, [0, 0, 0, 1, 1], [1, 0], "upper"))
print("sep upper ex3", brute_sep(*A, [h, h, 0, 1, 1], [h, 0], "upper"))
print("sep lower ex2", brute_sep(*A, [0, 0, 0, q, q], [1, 1], "lower"))
print("sep lower ex3", brute_sep(*A, [0, 0, 1, 1, 1], [1, 0], "lower"))
print("sep lower on ex3 upper point", brute_sep(*A, [h, h, 0, 1, 1], [h, 0], "lower"))

B = (5, [[1, 2], [3, 4], [1, 2, 3, 4]], 0, 3)
pB = points(*B)
a = [1, 1, 1, 0, 0]; b = [2, 1, 0]
print("lifted upper INST-B valid", all(ineq_val(a, b, p) <= 3 for p in pB))
B3 = (5, [[1, 2], [3, 4], [1, 2, 3, 4]], 3, 3)
a = [0, 0, 0, 0, -1]; b = [1, 0, 2]
print("lifted lower INST-B l=3 valid", all(ineq_val(a, b, p) <= 0 for p in points(*B3)))


def ipmax(n, sets, l, u, c):
    return max(ineq_val(c[:n], c[n:], p) for p in points(n, sets, l, u))


print("ip all-ones z", ipmax(*A, [1] * 5 + [0, 0]))
print("ip d1+d2", ipmax(*A, [0] * 5 + [1, 1]))
print("ip -sum z", ipmax(*A, [-1] * 5 + [0, 0]))
print("ip d1", ipmax(*A, [0] * 5 + [1, 0]), "ip -d1", ipmax(*A, [0] * 5 + [-1, 0]))
