#!/usr/bin/env python3
"""Regenerate the worked-example diagram documents in fixtures/.

Matrices are built and checked exactly with sympy, then written in the
scalar grammar accepted by the cohom tool.
"""
import json
import re
import pathlib
import sys

import sympy as sp

OUT = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
I = sp.I


def scalar(x):
    x = sp.nsimplify(sp.radsimp(sp.expand(x)))
    x = sp.expand(x)
    if x == 0:
        return "0"
    terms = []
    for key, c in sorted(x.as_coefficients_dict().items(), key=lambda kv: int(kv[0] ** 2)):
        c = sp.Rational(c)
        d = int(key ** 2)
        mag = abs(c)
        body = str(mag) if d == 1 else (f"sqrt({d})" if mag == 1 else f"{mag}*sqrt({d})")
        terms.append(("-" if c < 0 else "+", body))
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for s, b in terms[1:]:
        out += f" {s} {b}"
    return out


def mat_out(m):
    return [[scalar(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def E(n, i, j):
    m = sp.zeros(n, n)
    m[i - 1, j - 1] = 1
    m[j - 1, i - 1] = -1
    return m


def realify(c):
    n = c.rows
    r = sp.zeros(2 * n, 2 * n)
    for i in range(n):
        for j in range(n):
            a, b = sp.re(c[i, j]), sp.im(c[i, j])
            r[2 * i, 2 * j], r[2 * i, 2 * j + 1] = a, -b
            r[2 * i + 1, 2 * j], r[2 * i + 1, 2 * j + 1] = b, a
    return r


def bracket(a, b):
    return a * b - b * a


def coords(basis, x):
    a = sp.Matrix.hstack(*[b.reshape(len(b), 1) for b in basis])
    sol, params = a.gauss_jordan_solve(x.reshape(len(x), 1))
    assert params.shape[0] == 0
    return [sp.simplify(s) for s in sol]


def ad_rep(kb, z):
    """Matrix of ad_z on span(kb) in that basis."""
    cols = [coords(kb, bracket(z, y)) for y in kb]
    return sp.Matrix([[cols[j][i] for j in range(len(kb))] for i in range(len(kb))])


def write(name, doc):
    OUT.mkdir(exist_ok=True)
    text = json.dumps(doc, indent=1, ensure_ascii=False)
    # one matrix row per line
    text = re.sub(r"\[\s*((?:\"[^\"]*\",\s*)*\"[^\"]*\")\s*\]",
                  lambda mo: "[" + re.sub(r",\s*", ", ", mo.group(1)) + "]", text)
    (OUT / name).write_text(text + "\n")
    print("wrote", OUT / name)


def document(names, mats, k, h, m, p, rho, e1, gens, q_scale, h_discrete=(), weyl=None):
    doc = {
        "q_scale": q_scale,
        "g_basis": [{"name": n, "matrix": mat_out(x)} for n, x in zip(names, mats)],
        "k": k, "h": h,
        "h_discrete": [mat_out(g) for g in h_discrete],
        "m": m, "p": p,
        "slice": {"dim": len(e1), "rho": {n: mat_out(r) for n, r in rho.items()},
                  "e1": [scalar(x) for x in e1]},
        "p_generators": gens,
        "mode": "metric",
    }
    if weyl is not None:
        doc["weyl"] = mat_out(weyl)
    return doc


def berger():
    n = 5
    s = sp.sqrt
    K1 = 2 * E(n, 1, 2) + E(n, 3, 4)
    K2 = E(n, 2, 3) - E(n, 1, 4) + s(3) * E(n, 4, 5)
    K3 = E(n, 1, 3) + E(n, 2, 4) + s(3) * E(n, 3, 5)
    V = [
        1 / s(5) * E(n, 1, 2) - 2 / s(5) * E(n, 3, 4),
        s(2) / s(5) * E(n, 4, 5) - s(3) / s(10) * (E(n, 2, 3) - E(n, 1, 4)),
        s(2) / s(5) * E(n, 3, 5) - s(3) / s(10) * (E(n, 1, 3) + E(n, 2, 4)),
        E(n, 2, 5),
        E(n, 1, 5),
        1 / s(2) * (E(n, 2, 4) - E(n, 1, 3)),
        -1 / s(2) * (E(n, 2, 3) + E(n, 1, 4)),
    ]
    assert sp.simplify(bracket(K1, K2) - K3) == sp.zeros(n, n)
    assert sp.simplify(bracket(K1, V[3]) - 2 * V[4]) == sp.zeros(n, n)
    kb = [K1, K2, K3]
    rho = {f"K{i + 1}": ad_rep(kb, kb[i]) for i in range(3)}
    w = sp.eye(n) + sp.Rational(8, 3) * K2 ** 2 + sp.Rational(2, 3) * K2 ** 4
    w = sp.simplify(w)
    assert sp.simplify(w * w.T) == sp.eye(n) and sp.simplify(w.det()) == 1
    names = ["K1", "K2", "K3"] + [f"V{i}" for i in range(1, 8)]
    return document(names, kb + V, ["K1", "K2", "K3"], ["K1"], names[3:], ["K2", "K3"],
                    rho, [1, 0, 0], ["K2"], "-1/2", weyl=w)


def su3_u2():
    def Ec(k, l):
        m = sp.zeros(3, 3)
        m[k - 1, l - 1], m[l - 1, k - 1] = 1, -1
        return m

    def iEc(k, l):
        m = sp.zeros(3, 3)
        m[k - 1, l - 1], m[l - 1, k - 1] = I, I
        return m

    D = sp.diag(0, I, -I)
    C = sp.diag(-2 * I, I, I)
    cm = {"D": D, "C": C, "E23": Ec(2, 3), "iE23": iEc(2, 3), "E12": Ec(1, 2),
          "iE12": iEc(1, 2), "E13": Ec(1, 3), "iE13": iEc(1, 3)}
    names = list(cm)
    su2 = [D, Ec(2, 3), iEc(2, 3)]
    rho = {"D": ad_rep(su2, D), "C": sp.zeros(3, 3), "E23": ad_rep(su2, Ec(2, 3)),
           "iE23": ad_rep(su2, iEc(2, 3))}
    w = sp.exp(sp.pi / 2 * Ec(2, 3))  # exp(π X / a) with a = 2
    return document(names, [realify(cm[x]) for x in names], ["D", "C", "E23", "iE23"],
                    ["D", "C"], ["E12", "iE12", "E13", "iE13"], ["E23", "iE23"], rho,
                    [1, 0, 0], ["E23"], "-1/4", weyl=realify(sp.simplify(w)))


def quat_left(q):
    """4x4 real matrix of left multiplication by q = (a, b, c, d) on (1, i, j, k)."""
    a, b, c, d = q
    return sp.Matrix([[a, -b, -c, -d], [b, a, -d, c], [c, d, a, -b], [d, -c, b, a]])


def kervaire():
    Li, Lj, Lk = quat_left((0, 1, 0, 0)), quat_left((0, 0, 1, 0)), quat_left((0, 0, 0, 1))
    J = sp.Matrix([[0, -1], [1, 0]])
    z2 = sp.zeros(2, 2)
    z4 = sp.zeros(4, 4)
    blk = lambda a, b: sp.diag(a, b)
    X1, X2, X3, Y = blk(Li, z2), blk(Lj, z2), blk(Lk, z2), blk(z4, J)
    gamma = blk(Li, J)  # (i, i): left multiplication by i, rotation by π/2
    weyl = blk(-sp.eye(4), sp.eye(2))  # exp(π X2)
    return document(["X1", "X2", "X3", "Y"], [X1, X2, X3, Y], ["X2"], [],
                    ["X1", "X3", "Y"], ["X2"], {"X2": J}, [1, 0], ["X2"], "-1/2",
                    h_discrete=[gamma], weyl=weyl)


def example4():
    # spin-3/2 representation of su(2) inside su(4)
    jp = sp.zeros(4, 4)
    for r, v in enumerate([sp.sqrt(3), 2, sp.sqrt(3)]):
        jp[r, r + 1] = v
    jm = jp.T
    h0 = sp.diag(3, 1, -1, -3) * I
    A = jp - jm
    B = I * (jp + jm)
    kb = [h0, A, B]

    def Ec(k, l):
        m = sp.zeros(4, 4)
        m[k, l], m[l, k] = 1, -1
        return m

    def iEc(k, l):
        m = sp.zeros(4, 4)
        m[k, l], m[l, k] = I, I
        return m

    su4 = []
    for k in range(4):
        for l in range(k + 1, 4):
            su4 += [Ec(k, l), iEc(k, l)]
    for r in range(3):
        d = sp.zeros(4, 4)
        d[r, r], d[r + 1, r + 1] = I, -I
        su4.append(d)
    q = lambda a, b: -sp.Rational(1, 2) * sp.re(sp.expand((a * b).trace()))
    gram_rows = sp.Matrix([[q(kk, b) for b in su4] for kk in kb])
    comp = gram_rows.nullspace()
    mb = []
    for v in comp:
        mb.append(sp.simplify(sum((v[i] * su4[i] for i in range(len(su4))), sp.zeros(4, 4))))
    rho = {"H": ad_rep(kb, h0), "A": ad_rep(kb, A), "B": ad_rep(kb, B)}
    names = ["H", "A", "B"] + [f"M{i + 1}" for i in range(len(mb))]
    return document(names, [realify(x) for x in kb + mb], ["H", "A", "B"], ["H"], names[3:],
                    ["A", "B"], rho, [1, 0, 0], ["A"], "-1/4")


def main():
    write("berger.json", berger())
    write("su3_u2.json", su3_u2())
    write("kervaire.json", kervaire())
    write("example4_n2.json", example4())


if __name__ == "__main__":
    sys.exit(main())
