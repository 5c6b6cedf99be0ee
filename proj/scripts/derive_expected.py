"""Independent re-derivation of the frozen test values.

Cone membership is decided by an LP (scipy), semigroup membership by explicit
sums of generators, the interior by strict LP feasibility. Nothing here calls
the C++ library.
"""
import itertools

import numpy as np
from scipy.optimize import linprog


def generators(n, edges):
    gens = [tuple([0] * n + [1])]
    for i in range(n):
        p = [0] * (n + 1); p[i] = 1; p[n] = 1; gens.append(tuple(p))
    for u, v in edges:
        p = [0] * (n + 1); p[u - 1] = 1; p[v - 1] = 1; p[n] = 1; gens.append(tuple(p))
    return gens


def in_cone(point, gens):
    a = np.array(gens, dtype=float).T
    res = linprog(np.zeros(len(gens)), A_eq=a, b_eq=np.array(point, dtype=float),
                  bounds=[(0, None)] * len(gens), method="highs")
    return res.status == 0


def in_interior(point, gens):
    # interior iff point - eps * sum(gens) stays in the cone for some eps > 0
    a = np.array(gens, dtype=float).T
    centre = a.sum(axis=1)
    target = np.array(point, dtype=float) - 1e-6 * centre
    res = linprog(np.zeros(len(gens)), A_eq=a, b_eq=target,
                  bounds=[(0, None)] * len(gens), method="highs")
    return res.status == 0


def semigroup_layers(gens, b_max):
    layers = [{tuple([0] * len(gens[0]))}]
    for _ in range(b_max):
        layers.append({tuple(x + y for x, y in zip(p, g)) for p in layers[-1] for g in gens})
    return layers


def lattice_slice(n, b):
    for a in itertools.product(range(b + 1), repeat=n):
        if sum(a) <= 2 * b:
            yield a + (b,)


def first_gap(n, edges, b_max):
    gens = generators(n, edges)
    layers = semigroup_layers(gens, b_max)
    for b in range(b_max + 1):
        for p in lattice_slice(n, b):
            if p not in layers[b] and in_cone(p, gens):
                return p
    return None


def omega_counts(n, edges, b_max):
    gens = generators(n, edges)
    return [sum(1 for p in lattice_slice(n, b) if in_interior(p, gens)) for b in range(b_max + 1)]


def cycle(k):
    return [(i, i % k + 1) for i in range(1, k + 1)]


if __name__ == "__main__":
    two_triangles = [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]
    print("two triangles first gap (b<=4):", first_gap(6, two_triangles, 4))
    print("C_3 omega counts b<=3:", omega_counts(3, cycle(3), 3))
    print("C_5 omega counts b<=4:", omega_counts(5, cycle(5), 4))
    w111 = [(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6)]
    print("C(1,1,1) omega counts b<=5:", omega_counts(6, w111, 5))
    w112 = w111 + [(3, 7)]
    print("C(1,1,2) omega counts b<=5:", omega_counts(7, w112, 5))
    tail = [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5)]
    print("triangle with tail omega counts b<=4:", omega_counts(5, tail, 4))
    print("C_4 omega counts b<=4:", omega_counts(4, cycle(4), 4))
