"""Exact PBW arithmetic in the universal enveloping algebra.

Elements are sparse dicts mapping multi-indices I = (i_0, ..., i_{2N}) to
rationals in the divided-power basis e^(I) = e_0^{i_0} ... e_{2N}^{i_{2N}}
/ i_0! ... i_{2N}!.  With the factorials baked in, the coproduct is the
binomial-free splitting D(e^(I)) = sum_{J+K=I} e^(J) (x) e^(K) and the
straightening recursion carries small integer coefficients.

The straightening memo (generator times basis element) is the one shared
mutable structure; it is a per-instance dict used with get-or-compute
semantics, so concurrent readers at worst recompute an entry.

Two gradings matter: the plain degree |I| = sum(I) and the contact degree
|I|' = 2 i_0 + i_1 + ... + i_{2N}, where the distinguished direction s
counts twice.

The truncated dual X keeps coefficients of the functionals x_I with
<x_I, e^(J)> = delta_I^J up to a contact-degree bound; products are
monomial (x_J x_K = x_{J+K}) and the two actions of the algebra on X are
computed through the pairing.  Acting by a generator lowers the usable
bound (by 2 for the direction s, by 1 otherwise); TruncationOverflow
signals that the bound would drop below zero.
"""

import itertools
import math
from fractions import Fraction

from . import linalg

ZERO = Fraction(0)
ONE = Fraction(1)


class TruncationOverflow(ValueError):
    """A dual-space operation fell out of the representable truncation."""


def unit_index(dim):
    return (0,) * dim


def eps(dim, i):
    return tuple(1 if j == i else 0 for j in range(dim))


def add_index(I, J):
    return tuple(a + b for a, b in zip(I, J))


def sub_index(I, J):
    return tuple(a - b for a, b in zip(I, J))


def plain_degree(I):
    return sum(I)


def contact_degree(I):
    """2 i_0 + i_1 + ... + i_{2N}."""
    return 2 * I[0] + sum(I[1:])


def element_contact_degree(u):
    """Max contact degree over the support; -1 for zero."""
    return max((contact_degree(I) for I in u), default=-1)


def multi_indices(dim, max_plain):
    """All multi-indices with plain degree <= max_plain."""
    out = []
    for total in range(max_plain + 1):
        out.extend(_indices_of_degree(dim, total))
    return out


def _indices_of_degree(dim, total):
    if dim == 1:
        return [(total,)]
    out = []
    for head in range(total + 1):
        for rest in _indices_of_degree(dim - 1, total - head):
            out.append((head,) + rest)
    return out


def contact_indices(dim, max_contact):
    """All multi-indices with contact degree <= max_contact."""
    out = []
    for i0 in range(max_contact // 2 + 1):
        for rest_total in range(max_contact - 2 * i0 + 1):
            for rest in _indices_of_degree(dim - 1, rest_total):
                out.append((i0,) + rest)
    return sorted(out)


def scale(u, c):
    return linalg.vec_scale(u, c)


def iadd(acc, u, c=ONE):
    return linalg.vec_iadd(acc, u, c)


def add(u, v):
    return linalg.vec_add(u, v)


def unit(dim):
    return {unit_index(dim): ONE}


def generator(dim, i):
    I = [0] * dim
    I[i] = 1
    return {tuple(I): ONE}


def from_vector(vec):
    """Degree-1 element from a coordinate vector."""
    dim = len(vec)
    out = {}
    for i, c in enumerate(vec):
        if c:
            I = [0] * dim
            I[i] = 1
            out[tuple(I)] = Fraction(c)
    return out


class Enveloping:
    """PBW arithmetic bound to one contact datum."""

    def __init__(self, data):
        self.data = data
        self.dim = data.dim
        self._gen_mul = {}
        self._mono_mul = {}
        self._antipode = {}

    # -- multiplication ----------------------------------------------------

    def gen_mul(self, j, I):
        """e_j * e^(I) in the divided-power basis, as a sparse dict."""
        key = (j, I)
        hit = self._gen_mul.get(key)
        if hit is not None:
            return hit
        support = [k for k, v in enumerate(I) if v]
        if not support or j <= support[0]:
            J = list(I)
            J[j] += 1
            out = {tuple(J): Fraction(J[j])}
        else:
            k = support[0]
            Iprime = list(I)
            Iprime[k] -= 1
            Iprime = tuple(Iprime)
            out = {}
            # e_j e_k = e_k e_j + [e_j, e_k]
            for M, c in self.gen_mul(j, Iprime).items():
                iadd(out, self.gen_mul(k, M), c)
            for l, cv in self.data.bracket_basis(j, k).items():
                iadd(out, self.gen_mul(l, Iprime), cv)
            out = scale(out, Fraction(1, I[k]))
        self._gen_mul[key] = out
        return out

    def mono_mul(self, I, J):
        """e^(I) * e^(J)."""
        hit = self._mono_mul.get((I, J))
        if hit is not None:
            return hit
        acc = {J: ONE}
        denom = ONE
        for g in range(self.dim - 1, -1, -1):
            for _ in range(I[g]):
                nxt = {}
                for M, c in acc.items():
                    iadd(nxt, self.gen_mul(g, M), c)
                acc = nxt
            if I[g]:
                denom *= Fraction(1, math.factorial(I[g]))
        out = scale(acc, denom)
        self._mono_mul[(I, J)] = out
        return out

    def mul(self, u, v):
        out = {}
        for I, a in u.items():
            for J, b in v.items():
                iadd(out, self.mono_mul(I, J), a * b)
        return out

    def mul_many(self, *els):
        acc = unit(self.dim)
        for e in els:
            acc = self.mul(acc, e)
        return acc

    def bracket(self, u, v):
        return linalg.vec_sub(self.mul(u, v), self.mul(v, u))

    # -- Hopf structure ----------------------------------------------------

    def counit(self, u):
        return u.get(unit_index(self.dim), ZERO)

    def coproduct(self, u):
        """dict (J, K) -> coefficient with J + K = I over the support."""
        out = {}
        for I, c in u.items():
            for J in itertools.product(*(range(i + 1) for i in I)):
                K = sub_index(I, J)
                key = (tuple(J), K)
                w = out.get(key, ZERO) + c
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
        return out

    def antipode_basis(self, I):
        hit = self._antipode.get(I)
        if hit is not None:
            return hit
        # S(e^(I)) = (-1)^{|I|} reversed product / I!
        acc = unit(self.dim)
        denom = ONE
        for g in range(self.dim):
            for _ in range(I[g]):
                nxt = {}
                for M, c in acc.items():
                    iadd(nxt, self.gen_mul(g, M), c)
                acc = nxt
            if I[g]:
                denom *= Fraction(1, math.factorial(I[g]))
        sign = -ONE if plain_degree(I) % 2 else ONE
        out = scale(acc, sign * denom)
        self._antipode[I] = out
        return out

    def antipode(self, u):
        out = {}
        for I, c in u.items():
            iadd(out, self.antipode_basis(I), c)
        return out

    # -- dual --------------------------------------------------------------

    def dual_pair(self, x, u):
        """<x, u> for a DualElement x and an algebra element u."""
        return sum((x.coeffs[I] * u[I] for I in x.coeffs.keys() & u.keys()),
                   ZERO)


def get_env(data, _cache={}):
    env = _cache.get(id(data))
    if env is None or env.data is not data:
        env = Enveloping(data)
        _cache[id(data)] = env
    return env


# ---------------------------------------------------------------------------
# truncated dual


class DualElement:
    """Truncated functional on the enveloping algebra.

    The element is known modulo functionals vanishing on the span of
    e^(I) with |I|' <= truncation; coefficients outside that window are
    meaningless and never stored.
    """

    __slots__ = ("dim", "truncation", "coeffs")

    def __init__(self, dim, truncation, coeffs=None):
        if truncation < 0:
            raise TruncationOverflow("truncation bound exhausted")
        self.dim = dim
        self.truncation = truncation
        self.coeffs = {}
        for I, c in (coeffs or {}).items():
            c = Fraction(c)
            if c and contact_degree(I) <= truncation:
                self.coeffs[I] = c

    def __eq__(self, other):
        return (
            self.dim == other.dim
            and self.truncation == other.truncation
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"DualElement(T={self.truncation}, {self.coeffs})"

    def scale(self, c):
        return DualElement(self.dim, self.truncation, scale(self.coeffs, c))

    def add(self, other):
        t = min(self.truncation, other.truncation)
        out = {I: c for I, c in self.coeffs.items() if contact_degree(I) <= t}
        for I, c in other.coeffs.items():
            if contact_degree(I) <= t:
                w = out.get(I, ZERO) + c
                if w:
                    out[I] = w
                else:
                    out.pop(I, None)
        return DualElement(self.dim, t, out)

    def truncated(self, t):
        return DualElement(self.dim, min(self.truncation, t), self.coeffs)


def dual_unit(dim, truncation):
    return DualElement(dim, truncation, {unit_index(dim): ONE})


def dual_monomial(dim, I, truncation):
    return DualElement(dim, truncation, {I: ONE})


def dual_covector(dim, i, truncation):
    """x^i, the functional dual to the generator e_i."""
    return dual_monomial(dim, tuple(eps(dim, i)), truncation)


def dual_mul(x, y):
    """x_J x_K = x_{J+K}; the output keeps the minimum truncation."""
    t = min(x.truncation, y.truncation)
    out = {}
    for I, a in x.coeffs.items():
        for J, b in y.coeffs.items():
            K = add_index(I, J)
            if contact_degree(K) > t:
                continue
            w = out.get(K, ZERO) + a * b
            if w:
                out[K] = w
            else:
                out.pop(K, None)
    return DualElement(x.dim, t, out)


def _action_drop(vec):
    """Contact weight of a degree-1 element: 2 if it touches s, else 1."""
    return 2 if vec[0] else 1


def d_left(env, vec, x):
    """Left action of the degree-1 element vec: <pv x, f> = -<x, pv f>."""
    drop = _action_drop(vec)
    t = x.truncation - drop
    if t < 0:
        raise TruncationOverflow("left action exceeds the truncation")
    p = from_vector(vec)
    out = {}
    for J in contact_indices(env.dim, t):
        prod = env.mul(p, {J: ONE})
        c = -sum(
            (x.coeffs[K] * prod[K] for K in x.coeffs.keys() & prod.keys()), ZERO
        )
        if c:
            out[J] = c
    return DualElement(env.dim, t, out)


def d_right(env, x, vec):
    """Right action: <x pv, f> = -<x, f pv>."""
    drop = _action_drop(vec)
    t = x.truncation - drop
    if t < 0:
        raise TruncationOverflow("right action exceeds the truncation")
    p = from_vector(vec)
    out = {}
    for J in contact_indices(env.dim, t):
        prod = env.mul({J: ONE}, p)
        c = -sum(
            (x.coeffs[K] * prod[K] for K in x.coeffs.keys() & prod.keys()), ZERO
        )
        if c:
            out[J] = c
    return DualElement(env.dim, t, out)


# ---------------------------------------------------------------------------
# symmetrization identities


def symmetrize(env, elements):
    """Complete symmetrization {x_1, ..., x_n}."""
    n = len(elements)
    acc = {}
    for perm in itertools.permutations(range(n)):
        iadd(acc, env.mul_many(*(elements[p] for p in perm)))
    return scale(acc, Fraction(1, math.factorial(n)))


def symmetrization_identity_check(env, a, b, c, d=None):
    """Exact rewriting of an ordered product of degree-1 elements in terms
    of complete symmetrizations of iterated commutators; both displayed
    forms (triple and quadruple) are checked against direct expansion."""
    if d is None:
        return _triple_identity(env, a, b, c)
    return _quadruple_identity(env, a, b, c, d)


def _triple_identity(env, a, b, c):
    br = env.bracket
    lhs = env.mul_many(a, b, c)
    rhs = symmetrize(env, [a, b, c])
    half = Fraction(1, 2)
    sixth = Fraction(1, 6)
    rhs = add(rhs, scale(symmetrize(env, [a, br(b, c)]), half))
    rhs = add(rhs, scale(symmetrize(env, [b, br(a, c)]), half))
    rhs = add(rhs, scale(symmetrize(env, [c, br(a, b)]), half))
    rhs = add(rhs, scale(br(a, br(b, c)), sixth))
    rhs = add(rhs, scale(br(br(a, b), c), sixth))
    return lhs == rhs


def _quadruple_identity(env, a, b, c, d):
    br = env.bracket
    sym = lambda *els: symmetrize(env, list(els))
    lhs = env.mul_many(a, b, c, d)
    rhs = sym(a, b, c, d)
    half = Fraction(1, 2)
    quarter = Fraction(1, 4)
    sixth = Fraction(1, 6)
    twelfth = Fraction(1, 12)
    for x, y, u, v in (
        (a, b, c, d), (a, c, b, d), (a, d, b, c),
        (b, c, a, d), (b, d, a, c), (c, d, a, b),
    ):
        rhs = add(rhs, scale(sym(x, y, br(u, v)), half))
    for (x, y), (u, v) in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
        rhs = add(rhs, scale(sym(br(x, y), br(u, v)), quarter))
    for x, p in (
        (a, br(b, br(c, d))), (a, br(br(b, c), d)),
        (b, br(a, br(c, d))), (b, br(br(a, c), d)),
        (c, br(a, br(b, d))), (c, br(br(a, b), d)),
        (d, br(a, br(b, c))), (d, br(br(a, b), c)),
    ):
        rhs = add(rhs, scale(sym(x, p), sixth))
    rhs = add(rhs, scale(br(br(br(c, d), b), a), sixth))
    rhs = add(rhs, scale(br(br(br(b, d), c), a), -sixth))
    for (x, y), (u, v) in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
        rhs = add(rhs, scale(br(br(x, y), br(u, v)), twelfth))
    return lhs == rhs
