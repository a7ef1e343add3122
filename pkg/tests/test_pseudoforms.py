import random
from fractions import Fraction

from contactk import enveloping as ev
from contactk import exterior as ex
from contactk import pseudoforms as pfm
from contactk.enveloping import get_env

ONE = Fraction(1)


def rand_pf(rng, dim, n, max_plain=2, terms=2):
    idx = ev.multi_indices(dim, max_plain)
    keys = ex.monomials(dim, n)
    out = {}
    for _ in range(terms):
        out[(rng.choice(idx), rng.choice(keys))] = Fraction(rng.randint(-3, 3))
    return pfm.pform(n, {k: v for k, v in out.items() if v})


def test_d_of_unit_is_minus_eps(small_algebras):
    for data in small_algebras.values():
        env = get_env(data)
        one = pfm.pf_from_form(3, ex.scalar_form(1))
        assert pfm.pseudo_d(env, one) == (-ONE) * pfm.eps_pseudoform(3)


def test_d_squared_spanning(small_algebras):
    for data in small_algebras.values():
        env = get_env(data)
        for n in range(4):
            for I in ev.multi_indices(3, 3):
                for S in ex.monomials(3, n):
                    a = pfm.pform(n, {(I, S): 1})
                    assert pfm.pseudo_d(env, pfm.pseudo_d(env, a)).is_zero()


def test_d_squared_random_heis2(heis2):
    env = get_env(heis2)
    rng = random.Random(17)
    for _ in range(15):
        a = rand_pf(rng, 5, rng.randint(0, 3))
        assert pfm.pseudo_d(env, pfm.pseudo_d(env, a)).is_zero()


def test_h_linearity(small_algebras):
    rng = random.Random(1)
    for data in small_algebras.values():
        env = get_env(data)
        idx = ev.multi_indices(3, 2)
        for _ in range(15):
            hh = {rng.choice(idx): Fraction(rng.randint(-2, 2))}
            hh = {k: v for k, v in hh.items() if v} or {(0, 0, 0): ONE}
            a = rand_pf(rng, 3, rng.randint(0, 2))
            assert pfm.pseudo_d(env, pfm.h_mul_pf(env, hh, a)) == \
                pfm.h_mul_pf(env, hh, pfm.pseudo_d(env, a))


def test_eps_relation(small_algebras):
    epsf = pfm.eps_pseudoform(3)
    for data in small_algebras.values():
        env = get_env(data)
        for n in range(4):
            for I in ev.multi_indices(3, 2):
                for S in ex.monomials(3, n):
                    a = pfm.pform(n, {(I, S): 1})
                    lhs = pfm.pseudo_d(env, a) - pfm.d0_h(env, a)
                    sign = -ONE if n % 2 == 0 else ONE
                    assert lhs == sign * pfm.wedge_pseudo(env, a, epsf)


def test_d_theta(small_algebras):
    for data in small_algebras.values():
        env = get_env(data)
        th = pfm.pf_from_form(3, ex.theta_form(data))
        om = pfm.pf_from_form(3, ex.omega_form(data))
        epsf = pfm.eps_pseudoform(3)
        assert pfm.pseudo_d(env, th) == om - pfm.wedge_pseudo(env, epsf, th)


def test_wedge_operator_relations(small_algebras):
    for data in small_algebras.values():
        assert pfm.relations_check(get_env(data), 2)


def test_rumin_map_well_defined(small_algebras):
    rng = random.Random(7)
    for data in small_algebras.values():
        env = get_env(data)
        for _ in range(12):
            a = rand_pf(rng, 3, 1)
            r1 = pfm.rumin_map(env, a)
            assert r1 == pfm.rumin_map(env, a, reverse=True)
            assert pfm.in_K_pseudo(env, r1)
        # vanishing on the ideal: theta-multiples in degree N = 1
        for I in ev.multi_indices(3, 2):
            mu = pfm.pform(0, {(I, ()): 1})
            assert pfm.rumin_map(env, pfm.theta_mul_p(env, mu)).is_zero()
        # composition with the differential vanishes on 0-forms
        for I in ev.multi_indices(3, 2):
            a = pfm.pform(0, {(I, ()): 1})
            assert pfm.rumin_map(env, pfm.pseudo_d(env, a)).is_zero()


def test_rumin_heisenberg_two_pivot_orders_specific(heis1):
    env = get_env(heis1)
    a = pfm.pform(1, {((0, 1, 0), (2,)): ONE, ((1, 0, 0), (1,)): Fraction(-2)})
    r1 = pfm.rumin_map(env, a)
    r2 = pfm.rumin_map(env, a, reverse=True)
    assert r1 == r2 and pfm.in_K_pseudo(env, r1)


def test_complex_members_and_maps(algebras):
    want_dims = {"sl2": [1, 2, 2, 1], "heis1": [1, 2, 2, 1],
                 "heis2": [1, 4, 5, 5, 4, 1]}
    for name, data in algebras.items():
        env = get_env(data)
        members = pfm.contact_complex_members(data)
        assert [m.dim for m in members] == want_dims[name]
        assert [str(m.natural_c) for m in members] == (
            ["0", "-1", "-3", "-4"] if data.N == 1
            else ["0", "-1", "-2", "-4", "-5", "-6"]
        )
        hmats = pfm.contact_complex_hmats(env, members)
        for i in range(len(hmats) - 1):
            assert pfm.hmat_is_zero(
                pfm.compose_hmats(env, hmats[i], hmats[i + 1])
            )


def test_exactness_sampling(heis1):
    env = get_env(heis1)
    members = pfm.contact_complex_members(heis1)
    hmats = pfm.contact_complex_hmats(env, members)
    rng = random.Random(42)
    for term in (1, 2):
        rep = pfm.sample_exactness(env, members, hmats, term, 12, 4, rng)
        assert rep["successes"] == rep["trials"], rep
        assert rep["kernel_dim_in_window"] > 0


def test_twist_validates_brackets(heis1):
    import pytest

    bad = [[[0, 1], [0, 0]], [[0, 0], [1, 0]], [[0, 0], [0, 0]]]
    with pytest.raises(ValueError):
        pfm.TwistData(heis1, bad)


def test_twist_of_divided_powers(pi2_heis1):
    # the action of a divided power is the matrix power over the factorial
    m = pi2_heis1.act_basis((0, 2, 0))
    assert m == ((Fraction(0), Fraction(0)), (Fraction(0), Fraction(0)))
    m = pi2_heis1.act_basis((0, 1, 0))
    assert m == ((Fraction(0), Fraction(1)), (Fraction(0), Fraction(0)))


def test_trivial_twist_is_identity_on_maps(heis1):
    env = get_env(heis1)
    members = pfm.contact_complex_members(heis1)
    hmats = pfm.contact_complex_hmats(env, members)
    triv = pfm.trivial_twist(heis1)
    for i, h in enumerate(hmats):
        assert pfm.twist_hmat(env, triv, h, members[i].dim,
                              members[i + 1].dim) == h


def test_twisted_complex_composes_to_zero(heis1, pi2_heis1):
    env = get_env(heis1)
    members = pfm.contact_complex_members(heis1)
    hmats = pfm.contact_complex_hmats(env, members)
    tw = [
        pfm.twist_hmat(env, pi2_heis1, hmats[i], members[i].dim,
                       members[i + 1].dim)
        for i in range(len(hmats))
    ]
    for i in range(len(tw) - 1):
        assert pfm.hmat_is_zero(pfm.compose_hmats(env, tw[i], tw[i + 1]))


def test_twist_functoriality(heis1, pi2_heis1):
    env = get_env(heis1)
    rng = random.Random(3)
    idx = ev.multi_indices(3, 2)

    def rand_hmat(n_src, n_tgt):
        out = {}
        for i in range(n_src):
            for j in range(n_tgt):
                if rng.random() < 0.7:
                    h = {rng.choice(idx): Fraction(rng.randint(-2, 2))}
                    h = {k: v for k, v in h.items() if v}
                    if h:
                        out[(i, j)] = h
        return out

    for _ in range(8):
        A, B = rand_hmat(2, 2), rand_hmat(2, 3)
        lhs = pfm.twist_hmat(env, pi2_heis1, pfm.compose_hmats(env, A, B), 2, 3)
        rhs = pfm.compose_hmats(
            env,
            pfm.twist_hmat(env, pi2_heis1, A, 2, 2),
            pfm.twist_hmat(env, pi2_heis1, B, 2, 3),
        )
        assert lhs == rhs


def test_character_twists(nonuni):
    tw = pfm.trace_character_twist(nonuni)
    assert tw.dim_carrier == 1
    assert tw.mats[2][0][0] == Fraction(-1)
    shifted = pfm.twist_times_character(tw, nonuni.trace_ad)
    assert shifted.mats[2][0][0] == Fraction(-2)
