"""The free simplicial group on the standard q-simplex.

Level n is free on the monotone (n+1)-tuples over {0..q}; a word is a
tuple of (simplex, +-1).  Faces delete, degeneracies repeat an entry.
Nothing here touches the package's group tables, so identities checked
in it hold in every simplicial group (up to the sampled words).
"""

import itertools
import random


def red(w):
    out = []
    for g in w:
        if out and out[-1][0] == g[0] and out[-1][1] == -g[1]:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def mul(*ws):
    r = ()
    for w in ws:
        r = red(r + tuple(w))
    return r


def inv(w):
    return tuple((g, -e) for g, e in reversed(w))


def comm(a, b):
    return mul(a, b, inv(a), inv(b))


def conj(g, x):
    return mul(g, x, inv(g))


def d(i, w):
    return red(tuple((s[:i] + s[i + 1:], e) for s, e in w))


def s(i, w):
    return red(tuple((t[:i + 1] + t[i:], e) for t, e in w))


def sa(alpha, w):
    # s_alpha = s_{i_r} ... s_{i_1}, the last index applied first
    for i in reversed(alpha):
        w = s(i, w)
    return w


def moore(n, z):
    for j in range(n):
        z = mul(z, inv(s(j, d(j, z))))
    return z


def F(alpha, beta, x, y, n):
    return moore(n, comm(sa(alpha, x), sa(beta, y)))


def simplices(q, n):
    return list(itertools.combinations_with_replacement(range(q + 1), n + 1))


def random_moore(q, n, length, rng):
    S = simplices(q, n)
    return moore(n, red(tuple((rng.choice(S), rng.choice((1, -1))) for _ in range(length))))


def pool(seed=23, q=3, count=3):
    """A few distinct nontrivial Moore elements in degrees 0..3, keyed N, M, L, K."""
    rng = random.Random(seed)

    def draw(n, length):
        out = []
        while len(out) < count:
            x = random_moore(q, n, length, rng)
            if x and x not in out:
                out.append(x)
        return out
    return {"N": draw(0, 2), "M": draw(1, 2), "L": draw(2, 3), "K": draw(3, 3)}


# pairing indices of the stored liftings (n = 2 for "lift", n = 3 otherwise)
PAIRS = {"lift": ((0,), (1,)), "lift_1_0": ((0,), (1,)), "lift_2_1": ((1,), (2,)),
         "lift_0_2": ((0,), (2,)), "lift_10_2": ((1, 0), (2,)), "lift_20_1": ((2, 0), (1,)),
         "lift_0_21": ((0,), (2, 1))}


class FreeContext:
    """Evaluation context for the package's axiom lambdas, over free words.

    NG_3 is not divided by d_4(NG_4 cap D_4) here, so K-valued sides are
    compared through d_3 (see compare).
    """

    def __init__(self, invert=False):
        self.invert = invert

    def mul(self, grp, *xs):
        return mul(*xs)

    def inv(self, grp, x):
        return inv(x)

    def comm(self, grp, a, b):
        return comm(a, b)

    def conj(self, grp, a, b):
        return conj(a, b)

    def e(self, grp):
        return ()

    def d1(self, x):
        return d(1, x)

    def d2(self, x):
        return d(2, x)

    def d3(self, x):
        return d(3, x)

    def nM(self, n, x):
        return conj(s(0, n), x)

    def nL(self, n, x):
        return conj(sa((1, 0), n), x)

    def nK(self, n, x):
        return conj(sa((2, 1, 0), n), x)

    def mL(self, m, x):
        return conj(s(1, m), x)

    def mK(self, m, x):
        return conj(sa((2, 1), m), x)

    def lK(self, l, x):
        return conj(s(2, l), x)

    def act(self, name, g, x):
        fn = {"N_M": self.nM, "N_L": self.nL, "N_K": self.nK,
              "M_L": self.mL, "M_K": self.mK, "L_K": self.lK}[name]
        return fn(g, x)

    def F(self, name, x, y):
        a, b = PAIRS[name]
        v = F(a, b, x, y, 2 if name == "lift" else 3)
        return inv(v) if self.invert else v


def failures(axioms, ctx, words, cap=12):
    """Tags of axioms with a sampled counterexample (K-valued sides through d_3)."""
    bad = []
    for ax in axioms:
        doms = ax.domains()
        for vals in itertools.islice(itertools.product(*[words[g] for _, g in doms]), cap):
            env = dict(zip([n for n, _ in doms], vals))
            a, b = ax.lhs(ctx, **env), ax.rhs(ctx, **env)
            if ax.target == "K":
                a, b = d(3, a), d(3, b)
            if a != b:
                bad.append(ax.tag)
                break
    return bad


def evaluate(expr, env):
    """A parsed commutator expression evaluated on free words."""
    def word(w):
        ops, var, inverse = w
        x = env[var]
        for kind, i in reversed(ops):
            x = d(i, x) if kind == "d" else s(i, x)
        return inv(x) if inverse else x

    def side(ws):
        return mul(*[word(w) for w in ws])
    return mul(*[comm(side(a), side(b)) for a, b in expr])
