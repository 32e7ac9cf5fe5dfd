#!/usr/bin/env python3
"""Regenerate data/classification.json.

Involutions are written as explicit integer matrices (column j is theta(alpha_j)
in simple-root coordinates). They are produced here from Satake-type data:
theta = -w_black * tau, where w_black is the longest element of the subsystem
spanned by the black nodes and tau the diagram permutation given by the arrows.
"""
import json
import sys
from pathlib import Path


def cartan(family, n):
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        A[i][i] = 2

    def link(i, j):
        A[i][j] = A[j][i] = -1

    if family in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if family == "B" and n > 1:
            A[n - 2][n - 1] = -2
        if family == "C" and n > 1:
            A[n - 1][n - 2] = -2
    elif family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif family == "F":
        link(0, 1)
        link(1, 2)
        link(2, 3)
        A[1][2] = -2
    elif family == "G":
        A[0][1], A[1][0] = -3, -1
    return A


def parse_type(t):
    comps = []
    for part in t.split("x"):
        comps.append((part[0], int(part[1:])))
    return comps


def block_cartan(t):
    comps = parse_type(t)
    n = sum(r for _, r in comps)
    A = [[0] * n for _ in range(n)]
    off = 0
    for f, r in comps:
        c = cartan(f, r)
        for i in range(r):
            for j in range(r):
                A[off + i][off + j] = c[i][j]
        off += r
    return A


def matmul(X, Y):
    return [[sum(X[i][k] * Y[k][j] for k in range(len(Y))) for j in range(len(Y[0]))]
            for i in range(len(X))]


def reflection(A, i):
    n = len(A)
    S = [[int(r == c) for c in range(n)] for r in range(n)]
    for j in range(n):
        S[i][j] -= A[j][i]
    return S


def longest_black(A, black):
    n = len(A)
    W = [[int(r == c) for c in range(n)] for r in range(n)]
    while True:
        for i in black:
            col = [W[r][i] for r in range(n)]
            if all(x >= 0 for x in col):
                W = matmul(W, reflection(A, i))
                break
        else:
            return W


def theta(t, black=(), arrows=()):
    """black and arrows use 1-based node labels; arrows are unordered pairs."""
    A = block_cartan(t)
    n = len(A)
    tau = list(range(n))
    for a, b in arrows:
        tau[a - 1], tau[b - 1] = b - 1, a - 1
    T = [[int(tau[c] == r) for c in range(n)] for r in range(n)]
    W = longest_black(A, [b - 1 for b in black])
    M = matmul(W, T)
    return [[-x for x in row] for row in M]


def group_case(t):
    r = sum(k for _, k in parse_type(t))
    return theta(f"{t}x{t}", arrows=[(i, r + i) for i in range(1, r + 1)])


def split(t):
    return theta(t)


def rng(a, b):
    return list(range(a, b + 1))


def cones_first(l):
    return [{"generators": [f"a{i}" for i in rng(1, l - 1)] + ["-w1"], "colors": rng(1, l - 1)}]


def two_cones_a(l=2):
    return [{"generators": ["a1", "-w1-w2"], "colors": [1]},
            {"generators": ["a2", "-w1-w2"], "colors": [2]}]


def d_cones(l):
    return [{"generators": [f"a{i}" for i in rng(1, l - 1)] + ["-w1"], "colors": rng(1, l - 1)},
            {"generators": [f"a{i}" for i in rng(1, l - 2)] + [f"a{l}", "-w1"],
             "colors": rng(1, l - 2) + [l]}]


def d_lattice(l):
    basis = []
    for i in range(1, l - 1):
        basis.append([int(j == i) for j in range(1, l + 1)])
    basis.append([int(j in (l - 1, l)) for j in range(1, l + 1)])
    basis.append([2 * int(j == l) for j in range(1, l + 1)])
    return {"kind": "chi_star", "basis": basis}


def d4_lattice(i, j, k):
    def e(*idx, c=1):
        return [c * int(m in idx) for m in range(1, 5)]
    return {"kind": "chi_star", "basis": [e(i), e(2), e(j, k), e(k, c=2)],
            "triality": {"i": i, "j": j, "k": k,
                         "note": "one representative of the triality orbit of (i, j, k) "
                                 "over permutations of {1, 3, 4}"}}


def model(name, family, dimension, **params):
    return {"name": name, "family": family, "params": params, "dimension": dimension}


def entry(id_, note, group, theta_m, inv_name, h, rtype, lattice, fan, homogeneous, mdl,
          x_dim, colors=None, picard_one=True, aut=None, rank_one=False):
    rank = len(fan[0]["generators"]) if not rank_one else 1
    e = {
        "id": id_,
        "note": note,
        "group": group,
        "involution": {"name": inv_name, "theta": [list(r) for r in theta_m]},
        "H": h,
        "restricted_type": rtype,
        "lattice": lattice,
        "colors": colors if colors is not None else rng(1, rank),
        "fan": fan,
        "picard_one": picard_one,
        "homogeneous": homogeneous,
        "model": mdl,
        "x_dimension": x_dim,
    }
    if aut:
        e["aut"] = aut
    return e


def build():
    E = []
    W, R = {"kind": "weight"}, {"kind": "root"}

    # restricted type A1 x A1
    bii = theta("B2", black=[2])
    b2b2 = [r + [0, 0] for r in bii] + [[0, 0] + r for r in bii]
    E.append(entry("a1a1-spin5-spin5", "rank two, restricted A1xA1; H of index two in the normalizer",
                   "B2xB2", b2b2, "BII x BII", "index_two", "A1xA1",
                   {"kind": "chi", "basis": [[2, 0], [1, 1]]}, two_cones_a(), True,
                   model("IG_1(10), quadric of isotropic lines", "IG", 8, m=1, n=10,
                         form="orthogonal"), 8))

    # restricted type A2, H = G^theta: the non-homogeneous Freudenthal row
    a_rows = [
        ("a2-sl3-so3", "A2", split("A2"), "AI", "LG_3(6) hyperplane section",
         model("LG_3(6)", "LG", 6, m=3, n=6), 5),
        ("a2-sl3", "A2xA2", group_case("A2"), "group", "G_3(6) hyperplane section",
         model("G_3(6)", "G", 9, m=3, n=6), 8),
        ("a2-sl6-sp6", "A5", theta("A5", black=[1, 3, 5]), "AII", "S_6 hyperplane section",
         model("spinor variety of C^12 (written S_12 in the source)", "S", 15, m=6), 14),
        ("a2-e6-f4", "E6", theta("E6", black=[2, 3, 4, 5]), "EIV", "E7/P7 hyperplane section",
         model("E7/P7", "flag", 27, group="E7", marked=[7]), 26),
    ]
    for id_, g, th, inv, what, mdl, xd in a_rows:
        mdl = dict(mdl, section={"codimension": 1, "description": what})
        E.append(entry(id_, "rank two, restricted A2, H = G^theta; two closed orbits",
                       g, th, inv, "fixed", "A2", W, two_cones_a(), False, mdl, xd,
                       aut="Aut0(X) = G up to isogeny; theta extends"))

    # restricted type A_l, H = N: projectivized representations
    a_n = [
        ("a2-sl3-so3-n", "A2", split("A2"), "AI", "A2", model("P(Sym^2 C^3)", "P", 5, dim_v=6)),
        ("a2-sl3-n", "A2xA2", group_case("A2"), "group", "A2", model("P(M_3)", "P", 8, dim_v=9)),
        ("a2-sl6-sp6-n", "A5", theta("A5", black=[1, 3, 5]), "AII", "A2",
         model("P(Lambda^2 C^6)", "P", 14, dim_v=15)),
        ("a2-e6-f4-n", "E6", theta("E6", black=[2, 3, 4, 5]), "EIV", "A2",
         model("P(J_3(O))", "P", 26, dim_v=27)),
        ("a3-sl4-so4-n", "A3", split("A3"), "AI", "A3", model("P(Sym^2 C^4)", "P", 9, dim_v=10)),
        ("a3-sl4-n", "A3xA3", group_case("A3"), "group", "A3", model("P(M_4)", "P", 15, dim_v=16)),
    ]
    for id_, g, th, inv, rt, mdl in a_n:
        l = int(rt[1:])
        E.append(entry(id_, "restricted A_l, H = N_G(G^theta); simple", g, th, inv, "normalizer",
                       rt, R, cones_first(l), True, mdl, mdl["dimension"]))

    # restricted type B2
    b2_a = [{"generators": ["a1", "-w1"], "colors": [1]}]
    b2_b = [{"generators": ["a2", "-w2"], "colors": [2]}]
    E.append(entry("b2-sl4-s(l2xl2)-n", "restricted B2, H = N; Grassmannian of planes in Lambda^2 C^4",
                   "A3", theta("A3", arrows=[(1, 3)]), "AIII", "normalizer", "B2", R, b2_a, True,
                   model("G_2(6)", "G", 8, m=2, n=6), 8))
    E.append(entry("b2-sp8-sp4xsp4-n", "restricted B2, H = N; the Cayley plane",
                   "C4", theta("C4", black=[1, 3]), "CII", "normalizer", "B2", R, b2_a, True,
                   model("E6/P1", "flag", 16, group="E6", marked=[1]), 16))
    E.append(entry("b2-so5-so2xso3-n", "restricted B2, H = N; Hermitian",
                   "B2", split("B2"), "BI", "normalizer", "B2", R, b2_a, True,
                   model("G_2(5)", "G", 6, m=2, n=5), 6))
    E.append(entry("b2-so8-gl4-n", "restricted B2, H = N; same Satake data as SO8/S(O2xO6) up to triality",
                   "D4", theta("D4", black=[1, 3]), "DIII", "normalizer", "B2", R, b2_a, True,
                   model("G_2(8)", "G", 12, m=2, n=8), 12))
    E.append(entry("b2-sp8-sp4xsp4", "restricted B2, H = G^theta; not Hermitian",
                   "C4", theta("C4", black=[1, 3]), "CII", "fixed", "B2", W, b2_b, True,
                   model("G_4(8)", "G", 16, m=4, n=8), 16))
    E.append(entry("b2-spin5", "restricted B2, H = G^theta; group case",
                   "B2xB2", group_case("B2"), "group", "fixed", "B2", W, b2_b, True,
                   model("LG_4(8)", "LG", 10, m=4, n=8), 10))

    # restricted type B_l, l > 2
    E.append(entry("b3-so7-so3xso4-n", "restricted B3, H = N; simple",
                   "B3", split("B3"), "BI", "normalizer", "B3", R, cones_first(3), True,
                   model("G_3(7)", "G", 12, m=3, n=7), 12))
    E.append(entry("b3-so7-n", "restricted B3, H = N; group case",
                   "B3xB3", group_case("B3"), "group", "normalizer", "B3", R, cones_first(3), True,
                   model("IG_7(14), spinor variety S_7", "S", 21, m=7), 21))

    # restricted type C_l
    E.append(entry("c3-sp12-sp6xsp6", "restricted C3, H = G^theta; not Hermitian",
                   "C6", theta("C6", black=[1, 3, 5]), "CII", "fixed", "C3", W, cones_first(3), True,
                   model("G_6(12)", "G", 36, m=6, n=12), 36))
    E.append(entry("c3-sp6", "restricted C3, H = G^theta; group case",
                   "C3xC3", group_case("C3"), "group", "fixed", "C3", W, cones_first(3), True,
                   model("IG_6(12), Lagrangian", "LG", 21, m=6, n=12), 21))

    # restricted type BC_l
    E.append(entry("bc2-sp10-sp4xsp6", "restricted BC2, H = N = G^theta",
                   "C5", theta("C5", black=[1, 3, 5]), "CII", "fixed", "BC2", W, cones_first(2), True,
                   model("G_4(10)", "G", 24, m=4, n=10), 24))

    # restricted type D_l
    E.append(entry("d5-so10-so5xso5", "restricted D5, H of index two in N; two closed orbits",
                   "D5", split("D5"), "DI", "index_two", "D5", d_lattice(5), d_cones(5), True,
                   model("G_5(10)", "G", 25, m=5, n=10), 25))
    E.append(entry("d5-so10", "restricted D5, H of index two in N; group case",
                   "D5xD5", group_case("D5"), "group", "index_two", "D5", d_lattice(5), d_cones(5),
                   True, model("IG_10(20), spinor variety S_10", "S", 45, m=10), 45))
    i, j, k = 1, 3, 4
    d4_fan = [{"generators": [f"a{i}", "a2", f"a{j}", f"-w{i}"], "colors": sorted([i, 2, j])},
              {"generators": [f"a{i}", "a2", f"a{k}", f"-w{i}"], "colors": sorted([i, 2, k])}]
    E.append(entry("d4-so8-so4xso4", "restricted D4, H of index two in N; two closed orbits",
                   "D4", split("D4"), "DI", "index_two", "D4", d4_lattice(i, j, k), d4_fan, True,
                   model("G_4(8)", "G", 16, m=4, n=8), 16))
    E.append(entry("d4-so8", "restricted D4, H of index two in N; group case",
                   "D4xD4", group_case("D4"), "group", "index_two", "D4", d4_lattice(i, j, k),
                   d4_fan, True, model("IG_8(16), spinor variety S_8", "S", 28, m=8), 28))

    # restricted type G2: the other two non-homogeneous varieties
    g2_fan = [{"generators": ["a2", "-w2"], "colors": [2]}]
    E.append(entry("g2-split", "restricted G2, H = N = G^theta; simple",
                   "G2", split("G2"), "G", "fixed", "G2", W, g2_fan, False,
                   dict(model("G_3(7)", "G", 12, m=3, n=7),
                        section={"description": "G_3(7) cut by a 27-dim subspace of P^34"}),
                   8, aut="Aut(X) = G2"))
    E.append(entry("g2-group", "restricted G2, H = N = G^theta; group case",
                   "G2xG2", group_case("G2"), "group", "fixed", "G2", W, g2_fan, False,
                   dict(model("IG_7(14), spinor variety S_7", "S", 21, m=7),
                        section={"description": "IG_7(14) cut by a 49-dim subspace of P^63"}),
                   14, aut="generated by G2 x G2 and theta"))

    # rank one
    r1 = [{"generators": ["-w1"], "colors": []}]

    def one(id_, note, g, th, inv, h, rt, mdl, xd, colors=None, picard_one=True):
        return entry(id_, note, g, th, inv, h, rt, W if h == "fixed" else R, r1, True, mdl, xd,
                     colors=colors, picard_one=picard_one, rank_one=True)

    E += [
        one("r1-sl2xsl2", "rank one; quadric det x = t^2", "A1xA1", group_case("A1"), "group",
            "fixed", "A1", model("quadric det x = t^2 in P(M_2 + C)", "Q", 3, n=4), 3),
        one("r1-psl2xpsl2", "rank one; projective space of 2x2 matrices", "A1xA1",
            group_case("A1"), "group", "normalizer", "A1", model("P(M_2)", "P", 3, dim_v=4), 3),
        one("r1-sl3-gl2", "rank one; P^2 x P^2*, Picard number two", "A2",
            theta("A2", arrows=[(1, 2)]), "AIV", "fixed", "BC1",
            model("P^2 x P^2*", "PxP", 4, n=3), 4, colors=[1, 1], picard_one=False),
        one("r1-psl2-pso2", "rank one; projectivized adjoint representation", "A1", split("A1"), "AI",
            "normalizer", "A1", model("P(sl_2)", "P", 2, dim_v=3), 2),
        one("r1-sp6-sp2xsp4", "rank one; Grassmannian of planes", "C3", theta("C3", black=[1, 3]),
            "CII", "fixed", "BC1", model("G_2(6)", "G", 8, m=2, n=6), 8),
        one("r1-so5-so4", "rank one; quadric q(x) = t^2", "B2", theta("B2", black=[2]), "BII",
            "fixed", "A1", model("quadric in P(C^5 + C)", "Q", 4, n=5), 4),
        one("r1-so5-s(o1xo4)", "rank one; projective space", "B2", theta("B2", black=[2]), "BII",
            "normalizer", "A1", model("P(C^5)", "P", 4, dim_v=5), 4),
        one("r1-f4-spin9", "rank one; the Cayley plane", "F4", theta("F4", black=[1, 2, 3]), "FII",
            "fixed", "BC1", model("E6/P1", "flag", 16, group="E6", marked=[1]), 16),
    ]

    nesting = {
        "note": "the four A2, H = G^theta completions and their ambient varieties are nested",
        "chain": ["a2-sl3-so3", "a2-sl3", "a2-sl6-sp6", "a2-e6-f4"],
    }
    return {"schema": 1, "entries": E, "nesting": nesting}


if __name__ == "__main__":
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else \
        Path(__file__).resolve().parent.parent / "data" / "classification.json"
    out.write_text(json.dumps(build(), indent=1) + "\n")
