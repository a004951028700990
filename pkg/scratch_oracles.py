"""Scratch: confirm every derived expected value via independent oracles
before freezing into tests.  Not part of the deliverable."""

from fractions import Fraction
from itertools import combinations
import math

# ---------- independent naive ring oracle: polynomials in H, S with S^2 = 0,
# represented as {(i, j): coeff} with j in {0, 1}; reduce H^r -> d H^(r-1) S.

def ring_mul(a, b):
    out = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            if j1 + j2 >= 2:
                continue
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, 0) + c1 * c2
    return out

def ring_reduce(a, r, d):
    out = dict(a)
    changed = True
    while changed:
        changed = False
        for (i, j), c in list(out.items()):
            if c == 0:
                del out[(i, j)]
                continue
            if i >= r and j == 0:
                del out[(i, j)]
                out[(i - 1, 1)] = out.get((i - 1, 1), 0) + d * c
                changed = True
            elif i >= r and j == 1:
                # H^r S = d H^(r-1) S S = 0
                del out[(i, j)]
                changed = True
    return out

def naive_ci_class(pairs, r, d):
    acc = {(0, 0): 1}
    for k, y in pairs:
        acc = ring_mul(acc, {(1, 0): k, (0, 1): -y})
    return ring_reduce(acc, r, d)

def naive_degree(a, r, d):
    a = ring_reduce(a, r, d)
    return a.get((r - 1, 1), 0)

H = {(1, 0): 1}
S = {(0, 1): 1}

print("== chowring ==")
print("H*S:", ring_mul(H, S))
print("H^2 * H (r=3,d=5):", ring_reduce(ring_mul(ring_mul(H, H), H), 3, 5))
print("prod (2H-y S), y=(1,0), r=4:", naive_ci_class([(2, 1), (2, 0)], 4, 6))
print("(H)^2 * [X] r4 d6 k22 y10 degree:",
      naive_degree(ring_mul(ring_mul(H, H), naive_ci_class([(2, 1), (2, 0)], 4, 6)), 4, 6))
print("spec {(2,1),(3,-1)}, r=5:", naive_ci_class([(2, 1), (3, -1)], 5, 0))

# ---------- series oracle for ranks
def series_rank(ks, r, h):
    ser = [math.comb(n + r - 1, r - 1) for n in range(h + 1)]
    for k in ks:
        ser = [ser[n] - (ser[n - k] if n >= k else 0) for n in range(h + 1)]
    return ser[h]

print("\n== ranks ==")
print("{(2,0)} r3 h1:", series_rank([2], 3, 1))
print("{(2,0)} r3 h2:", series_rank([2], 3, 2))
print("{(2,1),(2,0)} r4 h1:", series_rank([2, 2], 4, 1))
print("{(2,1),(2,0)} r4 h2:", series_rank([2, 2], 4, 2))

# ---------- pushforward degrees, subset expansion written independently
def binom0(n, m):
    return math.comb(n, m) if n >= m >= 0 else 0

def degpush(pairs, r, d, h):
    c = len(pairs)
    total = Fraction(0)
    for size in range(c + 1):
        for idx in combinations(range(c), size):
            kI = sum(pairs[i][0] for i in idx)
            yI = sum(pairs[i][1] for i in idx)
            total += (-1) ** size * binom0(h - kI + r - 1, r - 1) * Fraction((h - kI) * d + yI * r, r)
    return total

print("\n== pushforward degrees ==")
print("deg_sym(2,3,5,0):", Fraction(binom0(2 + 2, 2) * (2 * 5 - 0), 3))
print("{(2,1)} r3 d5 h1:", degpush([(2, 1)], 3, 5, 1))
print("{(2,1)} r3 d5 h2:", degpush([(2, 1)], 3, 5, 2))
print("{(2,1),(2,0)} r4 d6 h1:", degpush([(2, 1), (2, 0)], 4, 6, 1))

# ---------- margins via the independent ring oracle + series oracle
def margin(pairs, r, d, h):
    c = len(pairs)
    n = r - c
    hH = {(1, 0): h}
    top_cls = {(0, 0): 1}
    for _ in range(n):
        top_cls = ring_mul(top_cls, hH)
    top = naive_degree(ring_mul(top_cls, naive_ci_class(pairs, r, d)), r, d)
    rank = series_rank([k for k, _ in pairs], r, h)
    fib = {(0, 0): 1}
    for _ in range(n - 1):
        fib = ring_mul(fib, H)
    fib = ring_mul(fib, S)
    fibdeg = naive_degree(ring_mul(fib, naive_ci_class(pairs, r, d)), r, d)
    lhs = top * rank
    rhs = n * h ** (n - 1) * fibdeg * degpush(pairs, r, d, h)
    return Fraction(lhs) - rhs

print("\n== margins ==")
print("{(2,1),(2,0)} r4 d6 h1:", margin([(2, 1), (2, 0)], 4, 6, 1))
print("{(2,1)} r3 d0 h1:", margin([(2, 1)], 3, 0, 1))
print("{(2,0)} r3 d0 h1:", margin([(2, 0)], 3, 0, 1))
print("{(4,2)} r3 d5 h1:", margin([(4, 2)], 3, 5, 1))
print("{(3,0),(3,0)} r4 d0 h2:", margin([(3, 0), (3, 0)], 4, 0, 2))

print("\n== slope margins ==")
def slope_margin(pairs, r, d):
    return Fraction(len(pairs) * d, r) - sum(Fraction(y, k) for k, y in pairs)
print("{(2,1),(2,0)} r4 d6:", slope_margin([(2, 1), (2, 0)], 4, 6))
print("{(2,1)} r3 d0:", slope_margin([(2, 1)], 3, 0))

# margin polynomial cross-evaluation at h = 5 for the worked instance:
# poly(h) should equal margin / h^(r-c-1), valid h >= sum k = 4
for h in (4, 5, 6, 7):
    m = margin([(2, 1), (2, 0)], 4, 6, h)
    print(f"grouped margin at h={h}:", Fraction(m, h ** (4 - 2 - 1)))

# leading coefficient sign for {(2,1)} r3 d0: sample growth
print("margins {(2,1)} r3 d0 at h=3..8:", [margin([(2, 1)], 3, 0, h) for h in range(3, 9)])

# ---------- cones
def virt(pieces):
    out = []
    for rk, sl in pieces:
        out += [sl] * rk
    return out

print("\n== cones ==")
print("virtual [(1,3),(2,1)]:", virt([(1, Fraction(3)), (2, Fraction(1))]))
print("pseff c1:", sum(virt([(1, Fraction(3)), (2, Fraction(1))])[:1]))
print("pseff c2:", sum(virt([(1, Fraction(3)), (2, Fraction(1))])[:2]))
print("nef c1:", sum(virt([(1, Fraction(3)), (2, Fraction(1))])[-1:]))
print("nef c2:", sum(virt([(1, Fraction(3)), (2, Fraction(1))])[-2:]))
print("b r4 d6 c2:", Fraction(2 * 6, 4))

# ---------- stability
print("\n== stability ==")
print("hm_slope(2,2,6):", Fraction(6, 3 * 2))
print("hm_slope(1,4,8):", Fraction(8, 2 * 4))
print("hm_bound n3 (0,1,2,3):", Fraction(6, 4))
print("bezout Y=Z=(2,2,6) n3 sum_r=4:", (2 * 6 + 2 * 6 - 2 * 2 * 4, 1 + 1, 4))
print("bezout Y=(2,2,5) Z=(2,2,6):", (2 * 5 + 2 * 6 - 16))
print("one stable one boundary slope:", Fraction(6, (1 + 1) * 4))

# instability H0 for {(2,1)} r3 d0: show threshold region
print("\nmargins {(2,1)} r3 d0 h=1..10:", [margin([(2, 1)], 3, 0, h) for h in range(1, 11)])
