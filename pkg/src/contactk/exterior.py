"""Constant-coefficient exterior algebra on a contact Lie algebra.

Forms are stored by their evaluations against increasing basis tuples:
a degree-n form is a sparse dict mapping strictly increasing index tuples
(i_1 < ... < i_n) to rationals, with coefficient = alpha(e_{i_1} ^ ... ^
e_{i_n}).  On that normalization the wedge product is a shuffle-sign merge
of index tuples, with no factorials anywhere.

The module also builds the contact reduction with constant coefficients:
the subspaces I^n (wedge multiples of theta and omega), the joint kernels
K^n, their barred analogues on ker theta, and the constant Rumin complex
0 -> W^0/I^0 -> ... -> W^N/I^N -> K^{N+1} -> ... -> K^{2N+1} whose middle
map is built by the same completion algorithm as the pseudoform Rumin map,
specialized to the constant differential.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .linalg import Echelon, LinearSystem

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Form:
    degree: int
    coeffs: tuple  # sorted tuple of (index_tuple, Fraction)

    def items(self):
        return self.coeffs

    def get(self, key):
        for k, v in self.coeffs:
            if k == key:
                return v
        return ZERO

    def as_dict(self):
        return dict(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        assert self.degree == other.degree
        d = self.as_dict()
        linalg.vec_iadd(d, other.as_dict())
        return form(self.degree, d)

    def __sub__(self, other):
        return self + (-ONE) * other

    def __rmul__(self, c):
        return form(self.degree, linalg.vec_scale(self.as_dict(), c))

    def __neg__(self):
        return (-ONE) * self


def form(degree, coeffs):
    clean = []
    for k, v in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
        v = Fraction(v)
        if v == 0:
            continue
        if len(k) != degree or any(k[i] >= k[i + 1] for i in range(len(k) - 1)):
            raise ValueError(f"key {k} is not an increasing {degree}-tuple")
        clean.append((tuple(k), v))
    return Form(degree, tuple(sorted(clean)))


def zero_form(degree):
    return Form(degree, ())


def one_form(i):
    """Basis covector x^i."""
    return form(1, {(i,): ONE})


def scalar_form(c):
    return form(0, {(): c})


def monomials(dim, n):
    if n < 0:
        return []
    return list(itertools.combinations(range(dim), n))


def insert_index(idx, key):
    """Sort idx into the increasing tuple key; None if idx already occurs.

    Returns (sign, new_key) with sign the parity of moving idx from the
    front past the smaller entries.
    """
    if idx in key:
        return None
    pos = 0
    while pos < len(key) and key[pos] < idx:
        pos += 1
    return (-ONE if pos % 2 else ONE), key[:pos] + (idx,) + key[pos:]


def theta_form(data):
    return form(1, {(0,): -ONE})


def omega_form(data):
    out = {}
    for i in range(1, data.dim):
        for j in range(i + 1, data.dim):
            if data.omega[i][j]:
                out[(i, j)] = data.omega[i][j]
    return form(2, out)


def wedge(a, b):
    """Shuffle-sign merge; bilinear, graded-commutative, associative."""
    n = a.degree
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            if set(ka) & set(kb):
                continue
            merged = tuple(sorted(ka + kb))
            positions = {idx: p for p, idx in enumerate(merged)}
            perm = [positions[i] for i in ka] + [positions[i] for i in kb]
            inv = sum(
                1
                for p in range(len(perm))
                for q in range(p + 1, len(perm))
                if perm[p] > perm[q]
            )
            sign = -ONE if inv % 2 else ONE
            w = out.get(merged, ZERO) + sign * va * vb
            if w:
                out[merged] = w
            else:
                out.pop(merged, None)
    return form(n + b.degree, out)


def wedge_power(a, m):
    out = scalar_form(ONE)
    for _ in range(m):
        out = wedge(out, a)
    return out


def d0(data, a):
    """Lie algebra cohomology differential with trivial coefficients."""
    n = a.degree
    out = {}
    for key in monomials(data.dim, n + 1):
        acc = ZERO
        for p in range(n + 1):
            for q in range(p + 1, n + 1):
                rest = tuple(x for t, x in enumerate(key) if t != p and t != q)
                sgn_pq = -ONE if (p + q) % 2 else ONE  # (-1)^{(p+1)+(q+1)}
                for k, cv in data.bracket_basis(key[p], key[q]).items():
                    ins = insert_index(k, rest)
                    if ins is None:
                        continue
                    s, full = ins
                    acc += sgn_pq * cv * s * a.get(full)
        if acc:
            out[key] = acc
    return form(n + 1, out)


def contract(data, vec, a):
    """Interior product with the vector (coordinate tuple) vec."""
    n = a.degree
    if n == 0:
        return Form(-1, ())
    out = {}
    for key in monomials(data.dim, n - 1):
        acc = ZERO
        for m in range(data.dim):
            if not vec[m]:
                continue
            ins = insert_index(m, key)
            if ins is None:
                continue
            s, full = ins
            acc += vec[m] * s * a.get(full)
        if acc:
            out[key] = acc
    return form(n - 1, out)


def gl_act(data, A, a):
    """Even-derivation action of A in gl(d) on forms: the negative of
    substituting A into each slot; on covectors, e_k^j . x^i = -d^i_k x^j."""
    n = a.degree
    out = {}
    for key in monomials(data.dim, n):
        acc = ZERO
        for p in range(n):
            rest = tuple(x for t, x in enumerate(key) if t != p)
            sgn_p = -ONE if (p + 1) % 2 else ONE  # (-1)^{p+1}
            for m in range(data.dim):
                cm = A[m][key[p]]
                if not cm:
                    continue
                ins = insert_index(m, rest)
                if ins is None:
                    continue
                s, full = ins
                acc += sgn_p * cm * s * a.get(full)
        if acc:
            out[key] = acc
    return form(n, out)


def theta_mul(data, a):
    return wedge(theta_form(data), a)


def omega_mul(data, a):
    return wedge(omega_form(data), a)


# ---------------------------------------------------------------------------
# subspaces, reductions, the constant Rumin complex


def form_to_vec(a):
    return a.as_dict()


def vec_to_form(degree, vec):
    return form(degree, vec)


def subspace(forms):
    """Echelonized span of forms, keyed by monomial tuples."""
    ech = Echelon()
    for f in forms:
        ech.add(f.as_dict())
    return ech


def compute_I(data, n):
    """I^n = omega ^ W^{n-2} + theta ^ W^{n-1} as an echelon."""
    gens = []
    om, th = omega_form(data), theta_form(data)
    for key in monomials(data.dim, n - 2):
        gens.append(wedge(om, form(n - 2, {key: ONE})))
    for key in monomials(data.dim, n - 1):
        gens.append(wedge(th, form(n - 1, {key: ONE})))
    return subspace(gens)


def _echelonized_forms(n, combos):
    ech = Echelon()
    for combo in combos:
        ech.add(dict(combo))
    return [form(n, row) for row in ech.basis()]


def compute_K(data, n):
    """K^n = ker(theta ^ .) cap ker(omega ^ .) on W^n, as an echelonized
    form basis with strictly increasing leading monomials."""
    sys = LinearSystem()
    om, th = omega_form(data), theta_form(data)
    for key in monomials(data.dim, n):
        mono = form(n, {key: ONE})
        col = {}
        for k, v in wedge(th, mono).items():
            col[("th",) + k] = v
        for k, v in wedge(om, mono).items():
            col[("om",) + k] = v
        sys.add_column(key, col)
    return _echelonized_forms(n, sys.kernel())


def compute_IK(data, n):
    return compute_I(data, n), compute_K(data, n)


def standard_keys(data, n, ech_I):
    """Monomials of degree n that are not leading terms of I^n."""
    return [k for k in monomials(data.dim, n) if k not in ech_I.rows]


def quotient_dim(data, n):
    return len(standard_keys(data, n, compute_I(data, n)))


# barred spaces: forms on ker theta, i.e. monomials avoiding index 0

def bar_monomials(dim, n):
    return [k for k in monomials(dim, n) if 0 not in k]


def compute_Ibar(data, n):
    om = omega_form(data)
    ech = Echelon()
    for key in bar_monomials(data.dim, n - 2):
        ech.add(wedge(om, form(n - 2, {key: ONE})).as_dict())
    return ech


def compute_Kbar(data, n):
    sys = LinearSystem()
    om = omega_form(data)
    for key in bar_monomials(data.dim, n):
        mono = form(n, {key: ONE})
        sys.add_column(key, wedge(om, mono).as_dict())
    return _echelonized_forms(n, sys.kernel())


def psi_bar_power_matrix(data, m):
    """Matrix of (omega ^ .)^m from barred degree N-m to degree N+m, as a
    LinearSystem keyed by source monomials."""
    nn = data.N
    om = omega_form(data)
    sys = LinearSystem()
    for key in bar_monomials(data.dim, nn - m):
        f = form(nn - m, {key: ONE})
        for _ in range(m):
            f = wedge(om, f)
        sys.add_column(key, f.as_dict())
    return sys


def psi_bar_power_is_iso(data, m):
    nn = data.N
    sys = psi_bar_power_matrix(data, m)
    src = len(bar_monomials(data.dim, nn - m))
    return len(sys.kernel()) == 0 and sys.image_rank() == src


def lemma_composition_is_iso(data, m):
    """Kbar^{N+m} -> Wbar^{N+m} -> (Psi-bar^m)^{-1} -> Wbar^{N-m}/Ibar^{N-m}
    is bijective, for 0 <= m <= N."""
    nn = data.N
    kbar = compute_Kbar(data, nn + m)
    ibar = compute_Ibar(data, nn - m)
    quot_dim = len(bar_monomials(data.dim, nn - m)) - ibar.rank
    if len(kbar) != quot_dim:
        return False
    if not kbar:
        return True
    power = psi_bar_power_matrix(data, m)
    ech = Echelon()
    rank = 0
    for f in kbar:
        sol = power.solve(f.as_dict())
        if sol is None:
            return False
        red = ibar.reduce(sol)
        if ech.add(red) is not None:
            rank += 1
    return rank == quot_dim


# ---------------------------------------------------------------------------
# the constant Rumin complex


@dataclass
class ConstantRuminComplex:
    data: object
    terms: list  # (kind, n, basis) with kind in {"Q", "K"}
    maps: list  # maps[i]: list of columns, each an output coordinate dict

    def dims(self):
        return [len(basis) for _, _, basis in self.terms]

    def cohomology_dims(self):
        out = []
        for i in range(len(self.terms)):
            dim_i = len(self.terms[i][2])
            if i < len(self.maps):
                sys = LinearSystem()
                for j, col in enumerate(self.maps[i]):
                    sys.add_column(j, col)
                kdim = dim_i - sys.image_rank()
            else:
                kdim = dim_i
            if i > 0:
                prev = LinearSystem()
                for j, col in enumerate(self.maps[i - 1]):
                    prev.add_column(j, col)
                rk = prev.image_rank()
            else:
                rk = 0
            out.append(kdim - rk)
        return out

    def compositions_vanish(self):
        for i in range(len(self.maps) - 1):
            nxt = self.maps[i + 1]
            for col in self.maps[i]:
                acc = {}
                for j, c in col.items():
                    linalg.vec_iadd(acc, nxt[j], c)
                if acc:
                    return False
        return True


_solver_cache = {}


def theta_omega_solver(data, n, reverse=False):
    """Cached span of {theta^monomial, omega^monomial} in degree n, with a
    deterministic column order (optionally reversed, to exercise
    independence of pivoting choices)."""
    key = (id(data), n, reverse)
    hit = _solver_cache.get(key)
    if hit is not None and hit[0] is data:
        return hit[1]
    om, th = omega_form(data), theta_form(data)
    sys = LinearSystem()
    cols = [("th", k) for k in monomials(data.dim, n - 1)]
    cols += [("om", k) for k in monomials(data.dim, n - 2)]
    if reverse:
        cols = list(reversed(cols))
    for lab in cols:
        kind, k = lab
        base = form(n - 1 if kind == "th" else n - 2, {k: ONE})
        img = wedge(th if kind == "th" else om, base)
        sys.add_column(lab, img.as_dict())
    _solver_cache[key] = (data, sys)
    return sys


def solve_theta_omega(data, n, target, reverse=False):
    """Write a degree-n form as theta^beta + omega^gamma; always solvable
    for n >= N+1.  Returns (beta, gamma)."""
    sys = theta_omega_solver(data, n, reverse)
    sol = sys.solve(target.as_dict())
    if sol is None:
        raise ValueError("completion system is inconsistent")
    beta = form(n - 1, {k: v for (kind, k), v in sol.items() if kind == "th"})
    gamma = form(n - 2, {k: v for (kind, k), v in sol.items() if kind == "om"})
    return beta, gamma


def rumin_constant_map(data, a, reverse=False):
    """The second-order middle map on a degree-N form: complete a so that
    its differential lands in K^{N+1}, then differentiate."""
    nn = data.N
    assert a.degree == nn
    da = d0(data, a)
    _beta, gamma = solve_theta_omega(data, nn + 1, da, reverse=reverse)
    return d0(data, a - theta_mul(data, gamma))


def rumin_constant(data):
    """The full constant-coefficient contact complex with explicit maps."""
    nn = data.N
    terms = []
    for n in range(nn + 1):
        ech = compute_I(data, n)
        terms.append(("Q", n, standard_keys(data, n, ech)))
    for n in range(nn + 1, 2 * nn + 2):
        terms.append(("K", n, compute_K(data, n)))

    i_echs = {n: compute_I(data, n) for n in range(nn + 2)}
    k_systems = {}
    for kind, n, basis in terms:
        if kind == "K":
            sys = LinearSystem()
            for j, f in enumerate(basis):
                sys.add_column(j, f.as_dict())
            k_systems[n] = sys

    def q_coords(n, f):
        red = i_echs[n].reduce(f.as_dict())
        keys = terms[n][2]
        return {keys.index(k): v for k, v in red.items()}

    def k_coords(n, f):
        sol = k_systems[n].solve(f.as_dict())
        if sol is None:
            raise ValueError("image does not lie in the kernel space")
        return sol

    maps = []
    for i in range(len(terms) - 1):
        kind, n, basis = terms[i]
        nkind, nn_, _ = terms[i + 1]
        cols = []
        for b in basis:
            f = form(n, {b: ONE}) if kind == "Q" else b
            if kind == "Q" and nkind == "Q":
                img = d0(data, f)
                cols.append(q_coords(nn_, img))
            elif kind == "Q" and nkind == "K":
                cols.append(k_coords(nn_, rumin_constant_map(data, f)))
            else:
                cols.append(k_coords(nn_, d0(data, f)))
        maps.append(cols)
    return ConstantRuminComplex(data, terms, maps)


def ce_cohomology_dims(data):
    """Brute-force cohomology of (W, d0) by row reduction."""
    dims = []
    ranks = []
    for n in range(data.dim + 1):
        sys = LinearSystem()
        for key in monomials(data.dim, n):
            img = d0(data, form(n, {key: ONE}))
            sys.add_column(key, img.as_dict())
        ranks.append(sys.image_rank())
        dims.append(len(monomials(data.dim, n)))
    out = []
    for n in range(data.dim + 1):
        kdim = dims[n] - ranks[n]
        out.append(kdim - (ranks[n - 1] if n > 0 else 0))
    return out
