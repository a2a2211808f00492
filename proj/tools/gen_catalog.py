#!/usr/bin/env python3
"""Writes data/small_groups.jsonl: every group of order 2..24, one per line.

Groups are given by generating permutations. Most come from natural actions
(cycles, polygons, affine maps x -> ux + t on Z_m); non-split and matrix
groups go through their regular representation. The expected blocks only
record facts known independently of the library: the group order, and the
classification of the groups named in the T'_k list or used as controls.
"""

import json
import sys
from itertools import product
from pathlib import Path


def compose(p, q):
    """(p*q)(x) = p(q(x))."""
    return tuple(p[x] for x in q)


def closure(gens, mul, identity):
    seen = {identity: 0}
    order = [identity]
    i = 0
    while i < len(order):
        x = order[i]
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                seen[y] = len(order)
                order.append(y)
        i += 1
    return order, seen


def cycles(perm):
    out, done = [], set()
    for start in range(len(perm)):
        if start in done or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in done:
            done.add(x)
            cyc.append(x)
            x = perm[x]
        out.append(cyc)
    return out


class Perms:
    """Permutation group on `degree` points given by generator images."""

    def __init__(self, degree, gens):
        self.degree = degree
        self.gens = [tuple(g) for g in gens]

    def order(self):
        elems, _ = closure(self.gens, compose, tuple(range(self.degree)))
        return len(elems)


def perm_from_cycles(degree, cyc_list):
    img = list(range(degree))
    for cyc in cyc_list:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a] = b
    return tuple(img)


def regular(gens, mul, identity):
    """Left-regular representation of the group generated by `gens`."""
    elems, index = closure(gens, mul, identity)
    perms = [tuple(index[mul(g, x)] for x in elems) for g in gens]
    return Perms(len(elems), perms)


def cyclic(n):
    return Perms(n, [tuple((i + 1) % n for i in range(n))])


def direct(*groups):
    degree = sum(g.degree for g in groups)
    gens, offset = [], 0
    for g in groups:
        for p in g.gens:
            img = list(range(degree))
            for i, x in enumerate(p):
                img[offset + i] = offset + x
            gens.append(tuple(img))
        offset += g.degree
    return Perms(degree, gens)


def abelian(*factors):
    return direct(*(cyclic(n) for n in factors))


def dihedral(n):
    """Symmetries of the n-gon, order 2n."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return Perms(n, [rot, ref])


def affine(m, units, extra=None):
    """Translations of Z_m with x -> u x; `extra` pairs each unit with a
    permutation of additional points so the acting group can be non-faithful
    on Z_m (e.g. C_3 x| C_4 with C_4 acting through inversion)."""
    extra_degree = extra[0] if extra else 0
    degree = m + extra_degree
    t = tuple([(i + 1) % m for i in range(m)] + [m + j for j in range(extra_degree)])
    gens = [t]
    for k, u in enumerate(units):
        img = [(u * i) % m for i in range(m)]
        tail = list(range(extra_degree))
        if extra:
            tail = list(extra[1][k])
        gens.append(tuple(img + [m + j for j in tail]))
    return Perms(degree, gens)


def affine_plane(p):
    """Z_p^2 with translations and negation: the generalized dihedral group."""
    pts = [(a, b) for a in range(p) for b in range(p)]
    idx = {pt: i for i, pt in enumerate(pts)}
    t1 = tuple(idx[((a + 1) % p, b)] for a, b in pts)
    t2 = tuple(idx[(a, (b + 1) % p)] for a, b in pts)
    neg = tuple(idx[((-a) % p, (-b) % p)] for a, b in pts)
    return Perms(len(pts), [t1, t2, neg])


def matmul_mod(q):
    def mul(x, y):
        (a, b), (c, d) = x
        (e, f), (g, h) = y
        return (((a * e + b * g) % q, (a * f + b * h) % q), ((c * e + d * g) % q, (c * f + d * h) % q))
    return mul


def matrix_group(q, gens):
    return regular([tuple(map(tuple, g)) for g in gens], matmul_mod(q), ((1, 0), (0, 1)))


def dicyclic_matrices(n, q, zeta):
    """<a, b | a^2n = 1, b^2 = a^n, b a b^-1 = a^-1> inside SL(2, q), zeta of order 2n."""
    inv = pow(zeta, -1, q)
    return matrix_group(q, [[[zeta, 0], [0, inv]], [[0, q - 1], [1, 0]]])


def with_extra(group, extra_cycles):
    """Append the permutation `extra_cycles[i]` (on fresh points) to generator i."""
    width = 1 + max((x for cyc_list in extra_cycles for c in cyc_list for x in c), default=-1)
    gens = []
    for g, cyc_list in zip(group.gens, extra_cycles):
        tail = perm_from_cycles(width, cyc_list)
        gens.append(tuple(list(g) + [group.degree + x for x in tail]))
    return Perms(group.degree + width, gens)


def c3_by_d8_klein_kernel():
    # D_8 on a square; the rotation inverts C_3, the reflection centralizes it.
    t = (1, 2, 0, 3, 4, 5, 6)
    r = (0, 2, 1, 4, 5, 6, 3)
    s = (0, 1, 2, 3, 6, 5, 4)
    return Perms(7, [t, r, s])


def c3_by_c8():
    # C_8 acts on C_3 through inversion.
    return affine(3, [2], extra=(8, [[(j + 1) % 8 for j in range(8)]]))


def dic(m):
    """C_m x| C_4, generator of C_4 inverting C_m (m odd): the dicyclic group of order 4m."""
    return affine(m, [m - 1], extra=(4, [[1, 2, 3, 0]]))


def c2sq_by_c4():
    return Perms(8, [perm_from_cycles(8, [[0, 1]]), perm_from_cycles(8, [[2, 3]]),
                     perm_from_cycles(8, [[0, 2], [1, 3], [4, 5, 6, 7]])])


def c4_by_c4():
    return affine(4, [3], extra=(4, [[1, 2, 3, 0]]))


Q8 = matrix_group(3, [[[0, 2], [1, 0]], [[1, 1], [1, 2]]])
SL23 = matrix_group(3, [[[1, 1], [0, 1]], [[1, 0], [1, 1]]])
PAULI = matrix_group(5, [[[0, 1], [1, 0]], [[1, 0], [0, 4]], [[2, 0], [0, 2]]])
A4 = Perms(4, [perm_from_cycles(4, [[0, 1, 2]]), perm_from_cycles(4, [[0, 1], [2, 3]])])
S3 = Perms(3, [perm_from_cycles(3, [[0, 1]]), perm_from_cycles(3, [[0, 1, 2]])])
S4 = Perms(4, [perm_from_cycles(4, [[0, 1]]), perm_from_cycles(4, [[0, 1, 2, 3]])])
D8 = dihedral(4)


def tk(k, d0, case):
    return {"verdict": "TkPrime", "k": k, "d0": d0, "case": case}


def not_tk(d1, d2):
    return {"verdict": "NotTkPrime", "witness": [d1, d2], "case": "NotTkPrime-consistent"}


# (name, group, expected order, extra expectations)
CATALOG = [
    ("C2", cyclic(2), 2, dict(tk(1, 2, "B3-elemab"), dprime_n=0)),
    ("C3", cyclic(3), 3, tk(2, 3, "B3-elemab")),
    ("C4", cyclic(4), 4, tk(2, 4, "B1")),
    ("C2xC2", abelian(2, 2), 4, tk(3, 2, "B3-elemab")),
    ("C5", cyclic(5), 5, tk(4, 5, "B3-elemab")),
    ("C6", cyclic(6), 6, not_tk(3, 6)),
    ("S3", S3, 6, dict(tk(1, 3, "B5"), dprime_n=0)),
    ("C7", cyclic(7), 7, tk(6, 7, "B3-elemab")),
    ("C8", cyclic(8), 8, {}),
    ("C4xC2", abelian(4, 2), 8, not_tk(2, 4)),
    ("C2^3", abelian(2, 2, 2), 8, tk(7, 2, "B3-elemab")),
    ("D8", D8, 8, tk(3, 2, "B3-extraspecial2")),
    ("Q8", Q8, 8, tk(3, 2, "B3-extraspecial2")),
    ("C9", cyclic(9), 9, not_tk(3, 9)),
    ("C3xC3", abelian(3, 3), 9, tk(8, 3, "B3-elemab")),
    ("C10", cyclic(10), 10, {}),
    ("D10", dihedral(5), 10, tk(2, 5, "B5")),
    ("C11", cyclic(11), 11, {}),
    ("C12", cyclic(12), 12, {}),
    ("C6xC2", abelian(6, 2), 12, {}),
    ("D12", dihedral(6), 12, tk(3, 2, "B2")),
    ("A4", A4, 12, tk(2, 3, "B4")),
    ("Dic12", dic(3), 12, tk(2, 4, "B1")),
    ("C13", cyclic(13), 13, {}),
    ("C14", cyclic(14), 14, {}),
    ("D14", dihedral(7), 14, tk(3, 7, "B5")),
    ("C15", cyclic(15), 15, {}),
    ("C16", cyclic(16), 16, {}),
    ("C4xC4", abelian(4, 4), 16, {}),
    ("C8xC2", abelian(8, 2), 16, {}),
    ("C4xC2xC2", abelian(4, 2, 2), 16, {}),
    ("C2^4", abelian(2, 2, 2, 2), 16, tk(15, 2, "B3-elemab")),
    ("D16", dihedral(8), 16, {}),
    ("SD16", affine(8, [3]), 16, {}),
    ("M16", affine(8, [5]), 16, {}),
    ("Q16", dicyclic_matrices(4, 17, 2), 16, {}),
    ("C4:C4", c4_by_c4(), 16, {}),
    ("C2^2:C4", c2sq_by_c4(), 16, {}),
    ("D8xC2", direct(D8, cyclic(2)), 16, {}),
    ("Q8xC2", direct(Q8, cyclic(2)), 16, {}),
    ("C4oD8", PAULI, 16, {}),
    ("C17", cyclic(17), 17, {}),
    ("C18", cyclic(18), 18, {}),
    ("C6xC3", abelian(6, 3), 18, {}),
    ("D18", dihedral(9), 18, tk(3, 9, "B2")),
    ("S3xC3", direct(S3, cyclic(3)), 18, {}),
    ("C3^2:C2", affine_plane(3), 18, tk(4, 3, "B5")),
    ("C19", cyclic(19), 19, {}),
    ("C20", cyclic(20), 20, {}),
    ("C10xC2", abelian(10, 2), 20, {}),
    ("D20", dihedral(10), 20, not_tk(5, 10)),
    ("Dic20", dic(5), 20, {}),
    ("F20", affine(5, [2]), 20, tk(2, 4, "B1")),
    ("C21", cyclic(21), 21, {}),
    ("C7:C3", affine(7, [2]), 21, {}),
    ("C22", cyclic(22), 22, {}),
    ("D22", dihedral(11), 22, {}),
    ("C23", cyclic(23), 23, {}),
    ("C24", cyclic(24), 24, {}),
    ("C12xC2", abelian(12, 2), 24, {}),
    ("C6xC2xC2", abelian(6, 2, 2), 24, {}),
    ("S4", S4, 24, dict(tk(2, 8, "B1"), dprime_n=1)),
    ("SL(2,3)", SL23, 24, {}),
    ("C2xA4", direct(A4, cyclic(2)), 24, {}),
    ("D24", dihedral(12), 24, {}),
    ("Dic24", dicyclic_matrices(6, 13, 2), 24, {}),
    ("C3:C8", c3_by_c8(), 24, {}),
    ("C4xS3", direct(S3, cyclic(4)), 24, {}),
    ("C2xDic12", direct(dic(3), cyclic(2)), 24, {}),
    ("C3:D8", c3_by_d8_klein_kernel(), 24, {}),
    ("C3xD8", direct(D8, cyclic(3)), 24, {}),
    ("C3xQ8", direct(Q8, cyclic(3)), 24, {}),
    ("C2^2xS3", direct(S3, abelian(2, 2)), 24, {}),
]


def main(out_path):
    lines = []
    for name, group, order, extra in CATALOG:
        got = group.order()
        if got != order:
            sys.exit(f"{name}: generated order {got}, expected {order}")
        entry = {
            "name": name,
            "degree": group.degree,
            "generators": [cycles(g) for g in group.gens],
            "expected": dict(extra, order=order),
        }
        lines.append(json.dumps(entry, sort_keys=True, separators=(",", ":")))
    Path(out_path).write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} groups to {out_path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else str(Path(__file__).resolve().parent.parent / "data" / "small_groups.jsonl"))
