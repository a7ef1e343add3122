"""Differential forms with enveloping-algebra coefficients.

A pseudoform of degree n is a sparse dict mapping (multi-index, increasing
index tuple) pairs to rationals, representing sums of e^(I) (x) x^S inside
H (x) W^n.  The differential follows the Lie algebra cohomology formula
for H as a right module over itself: the bracket terms act on the form
slot and the remaining terms multiply the coefficient on the right by a
basis vector.  It is H-linear for the left multiplication, squares to
zero exactly, and differs from the coefficientwise constant differential
by wedging with the tautological 1-form eps = sum_i e_i (x) x^i:

    (d - d0) alpha = -(-1)^n alpha ^ eps,      n = deg alpha,

where the wedge multiplies coefficients in the order written (the
H-coefficient of the left factor first).  The name eps is reserved for
this 1-form; the counit of the Hopf structure is `Enveloping.counit`.

The module also realizes the members of the contact reduction
  0 -> W^0/I^0 (d) -> ... -> W^N/I^N (d) -> K^{N+1}(d) -> ... -> K^{2N+1}(d)
as free modules over concrete carriers (standard monomials for the
quotients, primitive kernels for the K's), extracts the differentials as
matrices over H, builds the second-order Rumin map by completion, twists
everything by a finite-dimensional module, and samples exactness.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from . import enveloping as env_mod
from . import exterior, linalg
from .exterior import form, insert_index, monomials
from .linalg import LinearSystem

ZERO = Fraction(0)
ONE = Fraction(1)


class SolveFailure(ArithmeticError):
    """The Rumin completion system was inconsistent (internal bug)."""


@dataclass(frozen=True)
class PseudoForm:
    degree: int
    coeffs: tuple  # sorted tuple of ((I, S), Fraction)

    def items(self):
        return self.coeffs

    def as_dict(self):
        return dict(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        assert self.degree == other.degree
        d = self.as_dict()
        linalg.vec_iadd(d, other.as_dict())
        return pform(self.degree, d)

    def __sub__(self, other):
        return self + (-ONE) * other

    def __rmul__(self, c):
        return pform(self.degree, linalg.vec_scale(self.as_dict(), c))

    def __neg__(self):
        return (-ONE) * self


def pform(degree, coeffs):
    clean = []
    for (I, S), v in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
        v = Fraction(v)
        if v:
            clean.append(((tuple(I), tuple(S)), v))
    return PseudoForm(degree, tuple(sorted(clean)))


def pf_zero(degree):
    return PseudoForm(degree, ())


def pf_from_form(dim, a, h=None):
    """h (x) alpha for a constant form alpha; h defaults to 1."""
    terms = {}
    hd = h if h is not None else env_mod.unit(dim)
    for S, c in a.items():
        for I, ch in hd.items():
            terms[(I, S)] = c * ch
    return pform(a.degree, terms)


def pf_component(a, I):
    """The constant form paired with e^(I)."""
    return form(a.degree, {S: c for (J, S), c in a.items() if J == I})


def pf_h_support(a):
    return sorted({I for (I, _S), _c in a.items()})


def h_mul_pf(env, h, a):
    """Left multiplication of the coefficient slot."""
    out = {}
    for (I, S), c in a.items():
        prod = env.mul(h, {I: ONE})
        for K, ck in prod.items():
            key = (K, S)
            w = out.get(key, ZERO) + c * ck
            if w:
                out[key] = w
            else:
                out.pop(key, None)
    return pform(a.degree, out)


def pseudo_d(env, a):
    """The pseudo de Rham differential."""
    data = env.data
    n = a.degree
    by_s = {}
    for (I, S), c in a.items():
        by_s.setdefault(S, {})[I] = c
    out = {}

    def put(I, S, c):
        key = (I, S)
        w = out.get(key, ZERO) + c
        if w:
            out[key] = w
        else:
            out.pop(key, None)

    # bracket terms, gathered over output monomials
    for T in monomials(data.dim, n + 1):
        for p in range(n + 1):
            for q in range(p + 1, n + 1):
                rest = tuple(x for t, x in enumerate(T) if t != p and t != q)
                sgn_pq = -ONE if (p + q) % 2 else ONE
                for k, cv in data.bracket_basis(T[p], T[q]).items():
                    ins = insert_index(k, rest)
                    if ins is None:
                        continue
                    s, full = ins
                    hd = by_s.get(full)
                    if not hd:
                        continue
                    for I, c in hd.items():
                        put(I, T, sgn_pq * cv * s * c)

    # right-multiplication terms, scattered from the input
    for S, hd in by_s.items():
        for m in range(data.dim):
            ins = insert_index(m, S)
            if ins is None:
                continue
            ins_sign, T = ins
            sign = -ins_sign  # (-1)^position, 1-based
            gen = env_mod.generator(data.dim, m)
            for I, c in hd.items():
                prod = env.mul({I: ONE}, gen)
                for K, ck in prod.items():
                    put(K, T, sign * c * ck)
    return pform(n + 1, out)


def d0_h(env, a):
    """H-linear extension of the constant differential."""
    data = env.data
    out = {}
    for I in pf_h_support(a):
        comp = exterior.d0(data, pf_component(a, I))
        for S, c in comp.items():
            key = (I, S)
            w = out.get(key, ZERO) + c
            if w:
                out[key] = w
            else:
                out.pop(key, None)
    return pform(a.degree + 1, out)


def eps_pseudoform(dim):
    """eps = sum_i e_i (x) x^i; d(1) = -eps."""
    terms = {}
    for i in range(dim):
        I = [0] * dim
        I[i] = 1
        terms[(tuple(I), (i,))] = ONE
    return pform(1, terms)


def wedge_pseudo(env, a, b):
    """(f alpha) ^ (g beta) = (fg)(alpha ^ beta), coefficients multiplied
    in the order written."""
    out = {}
    for (I, S), c in a.items():
        for (J, T), e in b.items():
            merged = exterior.wedge(form(a.degree, {S: ONE}), form(b.degree, {T: ONE}))
            if merged.is_zero():
                continue
            prod = env.mono_mul(I, J)
            for U, cu in merged.items():
                for K, ck in prod.items():
                    key = (K, U)
                    w = out.get(key, ZERO) + c * e * cu * ck
                    if w:
                        out[key] = w
                    else:
                        out.pop(key, None)
    return pform(a.degree + b.degree, out)


def wedge_const(env, a_const, b):
    """Wedge with a constant form on the left; no coefficient reordering."""
    out = {}
    for (I, S), c in b.items():
        for T, ct in a_const.items():
            merged = exterior.wedge(
                form(a_const.degree, {T: ONE}), form(b.degree, {S: ONE})
            )
            for U, cu in merged.items():
                key = (I, U)
                w = out.get(key, ZERO) + c * ct * cu
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
    return pform(a_const.degree + b.degree, out)


def theta_mul_p(env, a):
    return wedge_const(env, exterior.theta_form(env.data), a)


def omega_mul_p(env, a):
    return wedge_const(env, exterior.omega_form(env.data), a)


def in_I_pseudo(data, a):
    """Componentwise membership in H (x) I^n."""
    ech = exterior.compute_I(data, a.degree)
    for I in pf_h_support(a):
        if not ech.contains(pf_component(a, I).as_dict()):
            return False
    return True


def in_K_pseudo(env, a):
    return theta_mul_p(env, a).is_zero() and omega_mul_p(env, a).is_zero()


def relations_check(env, degree_bound=2):
    """d Psi = Psi d and d Theta = Psi - Theta d on a spanning set with
    coefficient degree up to the bound, in every form degree."""
    data = env.data
    for n in range(data.dim + 1):
        for I in env_mod.multi_indices(data.dim, degree_bound):
            for S in monomials(data.dim, n):
                a = pform(n, {(I, S): ONE})
                if not (
                    pseudo_d(env, omega_mul_p(env, a))
                    == omega_mul_p(env, pseudo_d(env, a))
                ):
                    return False
                lhs = pseudo_d(env, theta_mul_p(env, a))
                rhs = omega_mul_p(env, a) - theta_mul_p(env, pseudo_d(env, a))
                if lhs != rhs:
                    return False
    return True


def rumin_map(env, a, reverse=False):
    """Second-order map on degree-N pseudoforms: write d(alpha) as
    theta^beta + omega^gamma, correct alpha by theta^gamma, and
    differentiate.  The completion solves the constant system for each
    coefficient separately; the result is independent of the pivoting
    order and vanishes on H (x) I^N."""
    data = env.data
    nn = data.N
    assert a.degree == nn
    da = pseudo_d(env, a)
    gamma_terms = {}
    for I in pf_h_support(da):
        comp = pf_component(da, I)
        try:
            _beta, gamma = exterior.solve_theta_omega(
                data, nn + 1, comp, reverse=reverse
            )
        except ValueError as exc:  # pragma: no cover - always consistent
            raise SolveFailure(str(exc)) from exc
        for S, c in gamma.items():
            gamma_terms[(I, S)] = c
    gamma_pf = pform(nn - 1, gamma_terms)
    out = pseudo_d(env, a - theta_mul_p(env, gamma_pf))
    if not in_K_pseudo(env, out):  # pragma: no cover - structural guarantee
        raise SolveFailure("completion left the primitive subspace")
    return out


# ---------------------------------------------------------------------------
# twisting data


class TwistData:
    """A finite-dimensional module over the Lie algebra, with the induced
    action of the whole enveloping algebra."""

    def __init__(self, data, mats):
        self.data = data
        self.mats = tuple(
            tuple(tuple(Fraction(x) for x in row) for row in m) for m in mats
        )
        if len(self.mats) != data.dim:
            raise ValueError("one matrix per basis vector required")
        self.dim_carrier = len(self.mats[0])
        for i in range(data.dim):
            for j in range(data.dim):
                lhs = linalg.commutator(self.mats[i], self.mats[j])
                rhs = linalg.zeros(self.dim_carrier)
                for k, c in data.bracket_basis(i, j).items():
                    rhs = linalg.mat_add(rhs, linalg.mat_scale(self.mats[k], c))
                if lhs != rhs:
                    raise ValueError(
                        f"matrices do not satisfy the bracket at ({i},{j})"
                    )
        self._pbw = {}

    def act_basis(self, I):
        """Matrix of the divided power e^(I)."""
        hit = self._pbw.get(I)
        if hit is not None:
            return hit
        acc = linalg.identity(self.dim_carrier)
        denom = 1
        for g, power in enumerate(I):
            for _ in range(power):
                acc = linalg.mat_mul(acc, self.mats[g])
            denom *= math.factorial(power)
        out = linalg.mat_scale(acc, Fraction(1, denom))
        self._pbw[I] = out
        return out

    def act(self, h):
        acc = linalg.zeros(self.dim_carrier)
        for I, c in h.items():
            acc = linalg.mat_add(acc, linalg.mat_scale(self.act_basis(I), c))
        return acc


def trivial_twist(data):
    return TwistData(data, [((ZERO,),) for _ in range(data.dim)])


def character_twist(data, values):
    return TwistData(data, [((Fraction(v),),) for v in values])


def trace_character_twist(data):
    """The 1-dimensional module given by the trace of the adjoint."""
    return character_twist(data, data.trace_ad)


def twist_times_character(twist, values):
    """Tensor a module with a character: shift each matrix by a scalar."""
    mats = []
    for m, v in zip(twist.mats, values):
        mats.append(linalg.mat_add(m, linalg.mat_scale(
            linalg.identity(twist.dim_carrier), Fraction(v))))
    return TwistData(twist.data, mats)


# ---------------------------------------------------------------------------
# carrier realization of the contact complex


@dataclass
class CarrierModule:
    """A member of the contact complex as a free module H (x) carrier."""

    data: object
    kind: str  # "quotient" or "kernel"
    degree: int
    basis: tuple  # constant forms representing the carrier basis
    natural_c: Fraction

    def __post_init__(self):
        if self.kind == "kernel":
            sys = LinearSystem()
            for k, f in enumerate(self.basis):
                sys.add_column(k, f.as_dict())
            self._sys = sys
            self._iech = None
        else:
            self._iech = exterior.compute_I(self.data, self.degree)
            self._keys = [next(iter(f.as_dict())) for f in self.basis]
            self._sys = None

    @property
    def dim(self):
        return len(self.basis)

    def form_coords(self, const_form):
        """Coordinates of a constant form in the carrier (reducing mod I
        for quotients)."""
        if self.kind == "kernel":
            sol = self._sys.solve(const_form.as_dict())
            if sol is None:
                raise ValueError("form does not lie in the kernel carrier")
            return sol
        red = self._iech.reduce(const_form.as_dict())
        out = {}
        for key, c in red.items():
            out[self._keys.index(key)] = c
        return out

    def element_coords(self, pf):
        """Coordinates of a pseudoform: dict (I, idx) -> coefficient."""
        out = {}
        for I in pf_h_support(pf):
            for idx, c in self.form_coords(pf_component(pf, I)).items():
                if c:
                    out[(I, idx)] = c
        return out

    def sp_action_matrix(self, mat_bar):
        """Carrier matrix of a barred gl-matrix acting on forms."""
        from .sp_rep import embed_bar

        full = embed_bar(self.data, mat_bar)
        cols = []
        for f in self.basis:
            img = exterior.gl_act(self.data, full, f)
            cols.append(self.form_coords(img))
        return tuple(
            tuple(cols[c].get(r, ZERO) for c in range(self.dim))
            for r in range(self.dim)
        )


def contact_complex_members(data):
    nn = data.N
    members = []
    for n in range(nn + 1):
        ech = exterior.compute_I(data, n)
        keys = exterior.standard_keys(data, n, ech)
        basis = tuple(form(n, {k: ONE}) for k in keys)
        members.append(
            CarrierModule(data, "quotient", n, basis, Fraction(-n))
        )
    for n in range(nn + 1, 2 * nn + 2):
        basis = tuple(exterior.compute_K(data, n))
        members.append(
            CarrierModule(data, "kernel", n, basis, Fraction(-n - 1))
        )
    return members


def contact_complex_hmats(env, members):
    """The differentials as H-matrices: maps[i] is a dict
    (src_idx, tgt_idx) -> H element, with the Rumin map in the middle."""
    data = env.data
    nn = data.N
    maps = []
    for i in range(len(members) - 1):
        src, tgt = members[i], members[i + 1]
        hmat = {}
        for s_idx, f in enumerate(src.basis):
            pf = pf_from_form(data.dim, f)
            if src.kind == "quotient" and tgt.kind == "kernel":
                img = rumin_map(env, pf)
            else:
                img = pseudo_d(env, pf)
            for (I, t_idx), c in tgt.element_coords(img).items():
                key = (s_idx, t_idx)
                acc = hmat.setdefault(key, {})
                w = acc.get(I, ZERO) + c
                if w:
                    acc[I] = w
                else:
                    acc.pop(I, None)
        maps.append({k: v for k, v in hmat.items() if v})
    return maps


def apply_hmat(env, hmat, vec):
    """Apply an H-matrix map to an element dict (I, idx) -> c of the free
    source module; H acts by left multiplication."""
    out = {}
    for (I, idx), c in vec.items():
        for (s_idx, t_idx), h in hmat.items():
            if s_idx != idx:
                continue
            prod = env.mul({I: c}, h)
            for K, ck in prod.items():
                key = (K, t_idx)
                w = out.get(key, ZERO) + ck
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
    return out


def compose_hmats(env, first, then):
    """H-matrix of x -> then(first(x))."""
    out = {}
    for (i, j), h1 in first.items():
        for (j2, k), h2 in then.items():
            if j2 != j:
                continue
            prod = env.mul(h1, h2)
            acc = out.setdefault((i, k), {})
            linalg.vec_iadd(acc, prod)
    return {k: v for k, v in out.items() if v}


def hmat_is_zero(hmat):
    return all(not h for h in hmat.values())


def twist_hmat(env, twist, hmat, src_dim, tgt_dim):
    """Twist a map between free modules by a module Pi: on generators,
    1 (x) u (x) v_i goes to sum h_(1) (x) S(h_(2))u (x) v_j.  Carrier
    indices are flattened with the Pi index major."""
    p = twist.dim_carrier
    out = {}
    for (i, j), h in hmat.items():
        for (J, K), c in env.coproduct(h).items():
            smat = twist.act(env.antipode_basis(K))
            for a in range(p):
                for b in range(p):
                    if not smat[b][a]:
                        continue
                    key = (a * src_dim + i, b * tgt_dim + j)
                    acc = out.setdefault(key, {})
                    w = acc.get(J, ZERO) + c * smat[b][a]
                    if w:
                        acc[J] = w
                    else:
                        acc.pop(J, None)
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# exactness sampling


def _window_basis(dim, carrier_dim, max_plain):
    out = []
    for I in env_mod.multi_indices(dim, max_plain):
        for idx in range(carrier_dim):
            out.append((I, idx))
    return out


def sample_exactness(env, members, hmats, term, trials, degree_bound, rng):
    """Sample exactness at an interior term: draw random cocycles with
    coefficient degree <= degree_bound - 2, solve for preimages of
    coefficient degree <= degree_bound, and verify them exactly.

    Returns a report dict; all trials must succeed.
    """
    assert 1 <= term <= len(members) - 2
    data = env.data
    outgoing = hmats[term]
    incoming = hmats[term - 1]

    cocycle_sys = LinearSystem()
    for key in _window_basis(data.dim, members[term].dim, degree_bound - 2):
        I, idx = key
        img = apply_hmat(env, outgoing, {key: ONE})
        cocycle_sys.add_column(key, img)
    kernel = cocycle_sys.kernel()

    preimage_sys = LinearSystem()
    for key in _window_basis(data.dim, members[term - 1].dim, degree_bound):
        img = apply_hmat(env, incoming, {key: ONE})
        preimage_sys.add_column(key, img)

    successes = 0
    failures = []
    for t in range(trials):
        if not kernel:
            successes += 1
            continue
        vec = {}
        for combo in kernel:
            c = Fraction(rng.randint(-3, 3))
            if c:
                for key, v in combo.items():
                    w = vec.get(key, ZERO) + c * v
                    if w:
                        vec[key] = w
                    else:
                        del vec[key]
        sol = preimage_sys.solve(vec)
        if sol is None:
            failures.append({"trial": t, "cocycle_support": len(vec)})
            continue
        check = apply_hmat(env, incoming, {k: c for k, c in sol.items() if c})
        if check == vec:
            successes += 1
        else:  # pragma: no cover - solve already verified membership
            failures.append({"trial": t, "reason": "verification mismatch"})
    return {
        "term": term,
        "kind": members[term].kind,
        "degree": members[term].degree,
        "kernel_dim_in_window": len(kernel),
        "trials": trials,
        "successes": successes,
        "failures": failures,
    }


# ---------------------------------------------------------------------------
# the action of the contact pseudoalgebra generator, computed directly
# from its image inside derivation pseudoalgebra


def w_star_direct(env, f_dict, a_vec, pf):
    """The pseudoaction of f (x) a on a pseudoform, evaluated slotwise.
    Returns a dict (F, G, T) -> c representing sums of
    (e^(F) (x) e^(G)) (x)_H (1 (x) x^T)."""
    data = env.data
    n = pf.degree
    by_s = {}
    for (I, S), c in pf.items():
        by_s.setdefault(S, {})[I] = c
    out = {}

    def put(F, G, T, c):
        key = (F, G, T)
        w = out.get(key, ZERO) + c
        if w:
            out[key] = w
        else:
            out.pop(key, None)

    a_elt = env_mod.from_vector(a_vec)
    for T in monomials(data.dim, n):
        # -(f (x) g a) alpha(T)
        hd = by_s.get(T)
        if hd:
            for I, c in hd.items():
                ga = env.mul({I: ONE}, a_elt)
                for F, cf in f_dict.items():
                    for K, ck in ga.items():
                        put(F, K, T, -c * cf * ck)
        for p in range(n):
            rest = tuple(x for t, x in enumerate(T) if t != p)
            sgn = -ONE if (p + 1) % 2 else ONE
            # (f a_p (x) g) alpha(a ^ rest)
            for m in range(data.dim):
                if not a_vec[m]:
                    continue
                ins = insert_index(m, rest)
                if ins is None:
                    continue
                s, full = ins
                hd = by_s.get(full)
                if not hd:
                    continue
                fap = env.mul(f_dict, env_mod.generator(data.dim, T[p]))
                for I, c in hd.items():
                    for F, cf in fap.items():
                        put(F, I, T, sgn * a_vec[m] * s * c * cf)
            # (f (x) g) alpha([a, a_p] ^ rest)
            br = data.bracket_vec(a_vec, data.basis_vector(T[p]))
            for m in range(data.dim):
                if not br[m]:
                    continue
                ins = insert_index(m, rest)
                if ins is None:
                    continue
                s, full = ins
                hd = by_s.get(full)
                if not hd:
                    continue
                for I, c in hd.items():
                    for F, cf in f_dict.items():
                        put(F, I, T, sgn * br[m] * s * c * cf)
    return out


def e_star_direct(env, pf):
    """Action of the contact generator e = 1 (x) e_0 - sum_i e_i (x) d^i
    on a pseudoform, via the embedding into the derivation pseudoalgebra."""
    data = env.data
    if pf.degree == 0:
        # w * g = -f (x) g a
        out = {}
        for (I, _S), c in pf.items():
            prod = env.mul({I: ONE}, env_mod.generator(data.dim, 0))
            for K, ck in prod.items():
                key = ((0,) * data.dim, K, ())
                w = out.get(key, ZERO) - c * ck
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
        for i in range(1, data.dim):
            gen_i = env_mod.eps(data.dim, i)
            di = env_mod.from_vector(data.dual_vector(i))
            for (I, _S), c in pf.items():
                prod = env.mul({I: ONE}, di)
                for K, ck in prod.items():
                    key = (tuple(gen_i), K, ())
                    w = out.get(key, ZERO) + c * ck
                    if w:
                        out[key] = w
                    else:
                        out.pop(key, None)
        return out
    out = w_star_direct(env, env_mod.unit(data.dim), data.basis_vector(0), pf)
    for i in range(1, data.dim):
        gi = env_mod.generator(data.dim, i)
        term = w_star_direct(env, gi, data.dual_vector(i), pf)
        for key, c in term.items():
            w = out.get(key, ZERO) - c
            if w:
                out[key] = w
            else:
                out.pop(key, None)
    return out
