"""Independent oracle for the twisted Dorfman bracket.

Forms are multilinear functions of vector fields; d and L are the
coordinate-free formulas, so nothing here shares code or conventions with
the Rust implementation beyond ω(∂_i, ∂_j) being the dx_i∧dx_j coefficient.
Prints literals frozen in frozen_values.rs.
"""
from itertools import combinations

import sympy as sp


def chart(n):
    names = "x y z w".split()[:n]
    return sp.symbols(names)


def apply(X, f, xs):
    return sp.expand(sum(c * sp.diff(f, v) for c, v in zip(X, xs)))


def bracket(X, Y, xs):
    return [apply(X, b, xs) - apply(Y, a, xs) for a, b in zip(X, Y)]


def literal(comps, xs):
    """ω from {index tuple: coefficient}."""
    def w(*fields):
        p = len(fields)
        total = 0
        for idx, c in comps.items():
            m = sp.Matrix(p, p, lambda a, b: fields[a][idx[b]])
            total += c * m.det()
        return sp.expand(total)
    w.degree = len(next(iter(comps))) if comps else 0
    return w


def d(w, p, xs):
    def dw(*X):
        total = 0
        for i in range(p + 1):
            rest = X[:i] + X[i + 1:]
            total += (-1) ** i * apply(X[i], w(*rest), xs)
        for i, j in combinations(range(p + 1), 2):
            rest = [X[m] for m in range(p + 1) if m not in (i, j)]
            total += (-1) ** (i + j) * w(bracket(X[i], X[j], xs), *rest)
        return sp.expand(total)
    return dw


def lie(xi, w, p, xs):
    def lw(*Y):
        total = apply(xi, w(*Y), xs)
        for i in range(p):
            Z = list(Y)
            Z[i] = bracket(xi, Y[i], xs)
            total -= w(*Z)
        return sp.expand(total)
    return lw


def components(w, p, xs):
    n = len(xs)
    unit = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    out = {}
    for idx in combinations(range(n), p):
        c = w(*[unit[i] for i in idx])
        if c != 0:
            out[idx] = c
    return out


def text(e):
    return sp.sstr(e).replace("**", "^")


def show(comps, xs):
    if not comps:
        return "0"
    parts = []
    for idx, c in comps.items():
        basis = "^".join("d" + str(xs[i]) for i in idx)
        parts.append(f"({text(c)}) {basis}" if basis else f"({text(c)})")
    return " + ".join(parts)


def dorfman(n, k, B, xi, alpha, eta, beta):
    xs = chart(n)
    Bf, af, bf = literal(B, xs), literal(alpha, xs), literal(beta, xs)
    H = d(Bf, k + 1, xs)
    da = d(af, k, xs)
    form = lambda *Z: sp.expand(
        lie(xi, bf, k, xs)(*Z) - da(eta, *Z) + H(xi, eta, *Z)
    )
    pairing = lambda *Z: sp.expand(bf(xi, *Z) + af(eta, *Z))
    return (
        show(components(form, k, xs), xs),
        [text(c) for c in bracket(xi, eta, xs)],
        show(components(pairing, k - 1, xs), xs),
        show(components(H, k + 2, xs), xs),
    )


def main():
    x, y, z = chart(3)
    print("k=1 on R^3:", dorfman(
        3, 1,
        {(0, 1): x * z},
        [y, 0, x * z], {(0,): z, (1,): x**2},
        [-x, z, 0], {(2,): x * y},
    ))
    x, y, z, w = chart(4)
    print("k=2 on R^4:", dorfman(
        4, 2,
        {(0, 1, 2): w * y},
        [w, 0, x, 0], {(0, 3): y, (1, 2): x * z},
        [0, y, 0, z], {(0, 1): w},
    ))


if __name__ == "__main__":
    main()
