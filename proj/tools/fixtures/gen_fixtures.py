#!/usr/bin/env python3
# Copyright 2026 The revertcf Authors
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
"""Regenerates the bundled sequence fixtures in data/fixtures/.

Every sequence is produced from a definition that shares no code with the
C++ library: direct combinatorial counts (dynamic programming over
permutations or lattice paths), classical closed formulas, or sympy series
expansions of closed-form generating functions. Known published prefixes
are asserted before anything is written.

Usage: python3 tools/fixtures/gen_fixtures.py [output_dir]
"""

import json
import sys
from functools import lru_cache
from math import comb, factorial
from pathlib import Path

import sympy as sp

x, y = sp.symbols("x y")


def stirling2(n, k):
    return int(sp.functions.combinatorial.numbers.stirling(n, k, kind=2))


def fubini(n):
    return sum(factorial(k) * stirling2(n, k) for k in range(n + 1))


def ogf_terms(expr, count):
    s = sp.series(expr, x, 0, count).removeO()
    out = []
    for n in range(count):
        v = sp.nsimplify(sp.simplify(s.coeff(x, n)))
        assert v.is_Integer, (expr, n, v)
        out.append(int(v))
    return out


def egf_terms(expr, count):
    s = sp.series(expr, x, 0, count).removeO()
    out = []
    for n in range(count):
        v = sp.nsimplify(sp.simplify(sp.expand(s.coeff(x, n) * sp.factorial(n))))
        assert v.is_Integer, (expr, n, v)
        out.append(int(v))
    return out


def gandhi_first(count):
    # A_1 = 1, A_{n+1}(z) = (z+1)^2 A_n(z+1) - z^2 A_n(z); terms 1, A_1(1), A_2(1), ...
    z = sp.symbols("z")
    p = sp.Integer(1)
    out = [1]
    for _ in range(count - 1):
        out.append(int(p.subs(z, 1)))
        p = sp.expand((z + 1) ** 2 * p.subs(z, z + 1) - z**2 * p)
    return out


def gandhi_second(count):
    # B_1 = 1, B_{n+1}(z) = (z+1)((z+1) B_n(z+1) - z B_n(z)); terms B_1(1), B_2(1), ...
    z = sp.symbols("z")
    p = sp.Integer(1)
    out = []
    for _ in range(count):
        out.append(int(p.subs(z, 1)))
        p = sp.expand((z + 1) * ((z + 1) * p.subs(z, z + 1) - z * p))
    return out


def consecutive_123_table(nmax):
    """rows[n][k] = permutations of [n] with exactly k occurrences of a
    consecutive increasing run of length three (overlaps counted)."""
    rows = [[1], [1]]
    # state: (rank of last element among the n placed, ascent run length capped at 2, count) -> ways
    state = {(1, 0, 0): 1}
    for n in range(1, nmax):
        nxt = {}
        for (last, run, cnt), ways in state.items():
            for v in range(1, n + 2):
                asc = v > last
                new_run = min(run + 1, 2) if asc else 0
                new_cnt = cnt + (1 if asc and run >= 1 else 0)
                key = (v, new_run, new_cnt)
                nxt[key] = nxt.get(key, 0) + ways
        state = nxt
        m = n + 1
        width = max(1, m - 1)
        row = [0] * width
        for (_, _, cnt), ways in state.items():
            row[cnt] += ways
        rows.append(row)
    return rows


def dyck_uuu_table(nmax):
    """rows[n][k] = Dyck paths of semilength n with exactly k UUU factors."""
    rows = []
    for n in range(nmax + 1):

        @lru_cache(maxsize=None)
        def walk(pos, height, ups, cnt):
            if pos == 2 * n:
                return {cnt: 1} if height == 0 else {}
            acc = {}
            if height + 1 <= 2 * n - pos - 1:
                for k, v in walk(pos + 1, height + 1, min(ups + 1, 2),
                                 cnt + (1 if ups >= 2 else 0)).items():
                    acc[k] = acc.get(k, 0) + v
            if height > 0:
                for k, v in walk(pos + 1, height - 1, 0, cnt).items():
                    acc[k] = acc.get(k, 0) + v
            return acc

        counts = walk(0, 0, 0, 0)
        width = max(1, n - 1)
        rows.append([counts.get(k, 0) for k in range(width)])
    return rows


def dyck_peaks_table(nmax):
    """rows[n-1][k-1] = Dyck paths of semilength n with k peaks, n >= 1."""
    rows = []
    for n in range(1, nmax + 1):

        @lru_cache(maxsize=None)
        def walk(pos, height, last_up, peaks):
            if pos == 2 * n:
                return {peaks: 1} if height == 0 else {}
            acc = {}
            if height + 1 <= 2 * n - pos - 1:
                for k, v in walk(pos + 1, height + 1, True, peaks).items():
                    acc[k] = acc.get(k, 0) + v
            if height > 0:
                for k, v in walk(pos + 1, height - 1, False, peaks + (1 if last_up else 0)).items():
                    acc[k] = acc.get(k, 0) + v
            return acc

        counts = walk(0, 0, False, 0)
        rows.append([counts.get(k, 0) for k in range(1, n + 1)])
    return rows


def eulerian_rows(nmax):
    # A(n,k) = sum_j (-1)^j C(n+1,j) (k+1-j)^n, row n has n+1 entries (A(n,n)=0 for n>=1)
    rows = []
    for n in range(nmax + 1):
        rows.append([sum((-1) ** j * comb(n + 1, j) * (k + 1 - j) ** n for j in range(k + 1))
                     for k in range(n + 1)])
    return rows


def a046802_rows(nmax):
    egf = (y - 1) * sp.exp(x * y) / (y - sp.exp((y - 1) * x))
    s = sp.series(egf, x, 0, nmax + 1).removeO()
    rows = []
    for n in range(nmax + 1):
        p = sp.Poly(sp.cancel(sp.together(s.coeff(x, n) * sp.factorial(n))), y)
        coeffs = [int(p.coeff_monomial(y**k)) for k in range(n + 1)]
        rows.append(coeffs)
    return rows


def flatten(rows):
    return [v for r in rows for v in r]


def check_prefix(name, terms, expected):
    assert terms[: len(expected)] == expected, (name, terms[: len(expected)], expected)


def build():
    fx = {}

    def put(seq_id, offset, terms, note):
        fx[seq_id] = {"id": seq_id, "offset": offset, "terms": [str(t) for t in terms],
                      "source": "computed", "note": note}

    fib = [0, 1]
    while len(fib) < 40:
        fib.append(fib[-1] + fib[-2])
    put("A000045", 0, fib, "Fibonacci numbers F(n); recurrence F(n)=F(n-1)+F(n-2)")

    cat = [comb(2 * n, n) // (n + 1) for n in range(30)]
    check_prefix("A000108", cat, [1, 1, 2, 5, 14, 42, 132, 429])
    put("A000108", 0, cat, "Catalan numbers; binomial(2n,n)/(n+1)")

    put("A000142", 0, [factorial(n) for n in range(25)], "n!")

    a522 = [sum(factorial(n) // factorial(k) for k in range(n + 1)) for n in range(25)]
    check_prefix("A000522", a522, [1, 2, 5, 16, 65, 326])
    put("A000522", 0, a522, "arrangements of an n-set; sum_k n!/k!")

    fub = [fubini(n) for n in range(22)]
    check_prefix("A000670", fub, [1, 1, 3, 13, 75, 541, 4683])
    put("A000670", 0, fub, "Fubini numbers (ordered set partitions); sum_k k! S2(n,k)")

    a629 = [sum(comb(n, j) * fubini(j) for j in range(n + 1)) for n in range(22)]
    check_prefix("A000629", a629, [1, 2, 6, 26, 150, 1082, 9366, 94586, 1091670, 14174522])
    put("A000629", 0, a629, "ordered set partitions of subsets of [n]; sum_j C(n,j) Fubini(j)")

    a828 = egf_terms(1 / (1 - sp.sin(2 * x)), 18)
    put("A000828", 1, a828,
        "terms from offset 1 only: n-th listed term is n! [x^n] 1/(1-sin 2x); a(0) not bundled")

    fine = ogf_terms(2 / (1 + 2 * x + sp.sqrt(1 - 4 * x)), 25)
    check_prefix("A000957", fine, [1, 0, 1, 2, 6, 18, 57])
    put("A000957", 0, [0] + fine, "Fine numbers with a(0) = 0; a(n+1) has o.g.f. 2/(1+2x+sqrt(1-4x))")

    little = ogf_terms((1 + x - sp.sqrt(1 - 6 * x + x**2)) / (4 * x), 25)
    check_prefix("A001003", little, [1, 1, 3, 11, 45, 197])
    put("A001003", 0, little, "little Schroeder numbers; o.g.f. (1+x-sqrt(1-6x+x^2))/(4x)")

    jac = [(2**n - (-1) ** n) // 3 for n in range(35)]
    check_prefix("A001045", jac[1:], [1, 1, 3, 5, 11, 21])
    put("A001045", 0, jac, "Jacobsthal numbers; (2^n-(-1)^n)/3")

    a33543 = ogf_terms(2 / (1 + sp.sqrt(1 - 8 * x + 12 * x**2)), 22)
    put("A033543", 0, a33543,
        "o.g.f. 2/(1+sqrt(1-8x+12x^2)); the source sequence list prints this id as A003543")

    g2 = gandhi_second(16)
    check_prefix("A005439", g2, [1, 2, 8, 56, 608, 9440, 198272, 5410688, 186043904, 7867739648])
    put("A005439", 1, g2, "Genocchi medians via Gandhi polynomials of the second kind, B_n(1); "
        "terms from offset 1 only")

    a33321 = ogf_terms((sp.sqrt(1 - 6 * x + 5 * x**2) - x - 1) / (2 * x * (x - 2)), 22)
    check_prefix("A033321", a33321, [1, 1, 2, 6, 21, 79, 311, 1265, 5275, 22431, 96900])
    put("A033321", 0, a33321, "o.g.f. (sqrt(1-6x+5x^2)-x-1)/(2x(x-2))")

    put("A046802", 0, flatten(a046802_rows(10)),
        "triangle by rows, row n has n+1 entries; n! [x^n] of (y-1)e^{xy}/(y-e^{(y-1)x})")

    t123 = consecutive_123_table(12)
    a49774 = [sum(r[:1]) for r in t123]
    check_prefix("A049774", a49774, [1, 1, 2, 5, 17, 70, 349, 2017, 13358, 99377, 822041])
    put("A049774", 0, a49774, "permutations of [n] avoiding the consecutive pattern 123; DP count")

    a80635 = egf_terms(sp.Rational(3, 4) * sp.sec(sp.sqrt(3) * x / 2 + sp.pi / 6) ** 2, 18)
    put("A080635", 1, a80635, "terms from offset 1 only: n-th listed term is "
        "n! [x^n] (3/4) sec^2(sqrt(3)x/2+pi/6)")

    a92107 = dyck_uuu_table(11)
    check_prefix("A092107", a92107[:7],
                 [[1], [1], [2], [4, 1], [9, 4, 1], [21, 15, 5, 1], [51, 50, 24, 6, 1]])
    put("A092107", 0, flatten(a92107),
        "triangle by rows, row n has max(1,n-1) entries; Dyck paths of semilength n with k UUU factors")

    g1 = gandhi_first(16)
    check_prefix("A110501", g1, [1, 1, 3, 17, 155, 2073, 38227, 929569, 28820619, 1109652905])
    put("A110501", 0, g1, "unsigned Genocchi numbers of even index via Gandhi polynomials A_n(1)")

    s_large = (1 - x - sp.sqrt(1 - 6 * x + x**2)) / (2 * x)
    a114710 = ogf_terms(1 / (1 + x - x * s_large), 22)
    put("A114710", 0, a114710, "o.g.f. 1/(1+x-x*S(x)), S the large Schroeder o.g.f.")

    a152163 = ogf_terms((1 - 2 * x) / (1 - x - x**2), 30)
    check_prefix("A152163", a152163, [1, -1, 0, -1, -1, -2, -3, -5, -8])
    put("A152163", 0, a152163, "o.g.f. (1-2x)/(1-x-x^2)")

    check_prefix("A162975", t123[:7],
                 [[1], [1], [2], [5, 1], [17, 6, 1], [70, 41, 8, 1], [349, 274, 86, 10, 1]])
    put("A162975", 0, flatten(t123[:12]),
        "triangle by rows, row n has max(1,n-1) entries; permutations of [n] with k occurrences "
        "of a consecutive increasing triple (the accompanying text names the subword 132, "
        "the printed rows count 123)")

    a234797 = egf_terms(7 / (3 * sp.cos(sp.sqrt(7) * x) - sp.sqrt(7) * sp.sin(sp.sqrt(7) * x) + 4), 16)
    put("A234797", 1, a234797, "terms from offset 1 only: n-th listed term is "
        "n! [x^n] 7/(3cos(sqrt(7)x)-sqrt(7)sin(sqrt(7)x)+4)")

    motz = ogf_terms((1 - x - sp.sqrt(1 - 2 * x - 3 * x**2)) / (2 * x**2), 30)
    check_prefix("A001006", motz, [1, 1, 2, 4, 9, 21, 51, 127])
    put("A001006", 0, motz, "Motzkin numbers; o.g.f. (1-x-sqrt(1-2x-3x^2))/(2x^2)")

    large = ogf_terms(s_large, 25)
    check_prefix("A006318", large, [1, 2, 6, 22, 90, 394])
    put("A006318", 0, large, "large Schroeder numbers; o.g.f. (1-x-sqrt(1-6x+x^2))/(2x)")

    nar = dyck_peaks_table(11)
    check_prefix("A001263", nar[:6], [[1], [1, 1], [1, 3, 1], [1, 6, 6, 1], [1, 10, 20, 10, 1],
                                      [1, 15, 50, 50, 15, 1]])
    put("A001263", 1, flatten(nar), "triangle by rows n>=1, row n has n entries; "
        "Dyck paths of semilength n with k peaks")

    eul = eulerian_rows(10)
    check_prefix("A173018", eul[:7], [[1], [1, 0], [1, 1, 0], [1, 4, 1, 0], [1, 11, 11, 1, 0],
                                      [1, 26, 66, 26, 1, 0], [1, 57, 302, 302, 57, 1, 0]])
    put("A173018", 0, flatten(eul), "Eulerian triangle by rows, row n has n+1 entries; "
        "alternating-sum formula")
    return fx


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[2] / "data" / "fixtures"
    out.mkdir(parents=True, exist_ok=True)
    for seq_id, entry in sorted(build().items()):
        (out / f"{seq_id}.json").write_text(json.dumps(entry, indent=1) + "\n", encoding="utf-8")
        print(seq_id, len(entry["terms"]))


if __name__ == "__main__":
    main()
