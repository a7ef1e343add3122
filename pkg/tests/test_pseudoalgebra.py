import random
from fractions import Fraction

from conftest import make_spec

from contactk import enveloping as ev
from contactk import exterior as ex
from contactk import pseudoalgebra as pa
from contactk import pseudoforms as pfm
from contactk import sp_rep as sp
from contactk.enveloping import get_env

ONE = Fraction(1)
ZERO = Fraction(0)
ZI = (0, 0, 0)


def test_trivial_action_terms(heis1):
    # the defining formula on a generator of a module with trivial factors
    spec = make_spec(heis1, "trivial", 5)
    raw = pa.e_star_raw(spec, {(ZI, 0): ONE})
    want = {
        ((0, 1, 0), ZI, ((0, 0, 1), 0)): ONE,
        ((0, 0, 1), ZI, ((0, 1, 0), 0)): -ONE,
        ((1, 0, 0), ZI, (ZI, 0)): Fraction(5, 2),
        (ZI, ZI, ((1, 0, 0), 0)): -ONE,
    }
    assert raw == want


def test_zero_vector_acts_to_zero(heis1):
    spec = make_spec(heis1, "1", 1)
    assert pa.e_star_raw(spec, {}) == {}


def test_constant_quadratic_coefficients(heis1):
    # the right-normal coefficient of a constant vector at a quadratic
    # index is the symplectic generator applied to the vector
    spec = make_spec(heis1, "1", 2)
    env = spec.env
    for r in range(spec.dim_r):
        right = pa.to_right_normal(env, pa.e_star_raw(spec, {(ZI, r): ONE}))
        for i in (1, 2):
            for j in range(i, 3):
                prod = env.mono_mul(tuple(ev.eps(3, i)), tuple(ev.eps(3, j)))
                m = spec.rho_f(i, j)
                for I in prod:
                    if sum(I) != 2:
                        continue
                    got = right.terms.get(I, {})
                    for rr in range(spec.dim_r):
                        # the ordered pairs (i, j) and (j, i) contribute the
                        # same symmetric generator, and the divided square
                        # carries the factor two itself
                        assert got.get((ZI, rr), ZERO) == 2 * m[rr][r]


def test_left_normal_example(heis1):
    env = get_env(heis1)
    raw = {(ZI, (0, 1, 0), (ZI, 0)): ONE}
    left = pa.to_left_normal(env, raw)
    assert left.terms == {
        (0, 1, 0): {(ZI, 0): -ONE},
        ZI: {((0, 1, 0), 0): ONE},
    }


def test_right_normal_of_left_slot_is_identity(heis1):
    env = get_env(heis1)
    raw = {((0, 1, 1), ZI, (ZI, 0)): Fraction(3)}
    right = pa.to_right_normal(env, pa.normal_to_raw(
        pa.to_left_normal(env, raw)))
    back = pa.to_left_normal(env, pa.normal_to_raw(right))
    assert back.terms == pa.to_left_normal(env, raw).terms


def test_normal_form_roundtrip_random(sl2):
    env = get_env(sl2)
    rng = random.Random(5)
    idx = ev.multi_indices(3, 2)
    for _ in range(20):
        raw = {}
        for _k in range(3):
            raw[(rng.choice(idx), rng.choice(idx), (rng.choice(idx), 0))] = \
                Fraction(rng.randint(-3, 3))
        raw = {k: v for k, v in raw.items() if v}
        l1 = pa.to_left_normal(env, raw)
        r1 = pa.to_right_normal(env, raw)
        l2 = pa.to_left_normal(env, pa.normal_to_raw(r1))
        assert l1.terms == l2.terms


def test_singular_examples(heis1):
    spec0 = make_spec(heis1, "trivial", 0)
    assert pa.is_singular(spec0, {(ZI, 0): ONE})
    assert pa.is_singular(spec0, {((0, 1, 0), 0): ONE})
    assert pa.is_singular(spec0, {((0, 0, 1), 0): ONE})
    assert not pa.is_singular(spec0, {((1, 0, 0), 0): ONE})


def test_singular_space_trivial_factor(heis1):
    basis, cutoff = pa.singular_space(make_spec(heis1, "trivial", 0))
    assert cutoff == 3 and len(basis) == 3
    basis5, _ = pa.singular_space(make_spec(heis1, "trivial", 5))
    assert len(basis5) == 1


def test_singular_space_fundamental(heis1):
    spec = make_spec(heis1, "1", 1)
    basis, cutoff = pa.singular_space(spec)
    assert cutoff == 2
    deg2 = [v for v in basis if pa.element_degree(v) == 2]
    assert len(basis) == spec.dim_r + len(deg2) and deg2
    basis2, _ = pa.singular_space(make_spec(heis1, "1", 2))
    assert len(basis2) == spec.dim_r  # constants only


def test_classification_scan_n1(small_algebras):
    for data in small_algebras.values():
        for kind, p in (("trivial", 0), ("1", 1), ("sym2", 0)):
            rule = {"trivial": "trivial", "1": "fundamental",
                    "sym2": "other"}[kind]
            for c in range(-3, 7):
                verdict = pa.classify(make_spec(data, kind, c))
                want_red, want_deg = pa.expected_verdict(rule, p, c, 1)
                assert verdict.reducible == want_red, (kind, c)
                if want_red:
                    assert verdict.degrees == want_deg, (kind, c)


def test_classification_nonunimodular(nonuni):
    # the classification rule is independent of the trace character
    for kind, p, rule in (("trivial", 0, "trivial"), ("1", 1, "fundamental")):
        for c in range(-1, 5):
            verdict = pa.classify(make_spec(nonuni, kind, c))
            want_red, want_deg = pa.expected_verdict(rule, p, c, 1)
            assert verdict.reducible == want_red, (kind, c, verdict)
            if want_red:
                assert verdict.degrees == want_deg


def test_degree2_structure(heis1):
    spec = make_spec(heis1, "1", 1)
    basis, _ = pa.singular_space(spec)
    deg2 = [v for v in basis if pa.element_degree(v) == 2]
    assert deg2
    for v in deg2:
        ok, details = pa.degree2_structure_check(spec, v, p=1)
        assert ok, details
        assert not details["u_is_zero"]
    ok, details = pa.degree2_structure_check(spec, {(ZI, 0): ONE}, p=1)
    assert ok and details["u_is_zero"]
    bad = dict(deg2[0])
    bad[((0, 1, 0), 0)] = bad.get(((0, 1, 0), 0), ZERO) + 1
    assert not pa.degree2_structure_check(spec, bad, p=1)[0]


def test_coefficient_lemma(heis1):
    for c in (1, 3):
        spec = make_spec(heis1, "1", c)
        basis, _ = pa.singular_space(spec)
        for v in basis:
            assert pa.coefficient_lemma_check(spec, v)


def test_grading_eigenvalues(heis1):
    for c in (1, 3):
        spec = make_spec(heis1, "1", c)
        basis, _ = pa.singular_space(spec)
        assert basis
        for v in basis:
            deg = pa.element_degree(v)
            iv = pa.rho_sing_iprime(spec, v)
            top = {k: x for k, x in v.items()
                   if ev.contact_degree(k[0]) == deg}
            for k, x in top.items():
                assert iv.get(k, ZERO) == (Fraction(c) + deg) * x


def test_rho_sing_on_constants(heis1):
    spec = make_spec(heis1, "1", 1)
    for i in (1, 2):
        for j in (i, 2):
            m = spec.rho_f(i, j)
            for r in range(spec.dim_r):
                got = pa.rho_sing_f(spec, i, j, {(ZI, r): ONE})
                want = {(ZI, rr): m[rr][r]
                        for rr in range(spec.dim_r) if m[rr][r]}
                assert got == want


def test_skewness(algebras, nonuni):
    for data in list(algebras.values()) + [nonuni]:
        assert pa.skewness_check(data)


def test_jacobi(heis1, sl2):
    for data in (heis1, sl2):
        for kind, c in (("trivial", 0), ("1", 1), ("1", -2), ("sym2", 3)):
            assert pa.jacobi_check(make_spec(data, kind, c))
        assert pa.jacobi_check(make_spec(data, "1", -1, convention="T"))


def test_jacobi_nonunimodular(nonuni):
    assert pa.jacobi_check(make_spec(nonuni, "1", 2))
    assert pa.jacobi_check(make_spec(nonuni, "trivial", 1, convention="T"))


def test_tau_identity(algebras, nonuni):
    for data in list(algebras.values()) + [nonuni]:
        assert pa.tau_check(data)
        rhs = pa.tau_rhs(data)
        # the column part never vanishes identically for these data
        assert any(
            m[k][0] != 0 for m in rhs.values() for k in range(1, data.dim)
        )


def test_convention_bridge(heis1, pi2_heis1, nonuni):
    # the trace-shifted module equals the plain one twisted by the trace
    # character with the central scalar moved by 2N+2
    cases = [(heis1, pi2_heis1), (nonuni, pfm.trivial_twist(nonuni))]
    for data, twist in cases:
        gens = sp.build_sp(data)
        rep = sp.fundamental_rep(data, gens, 1)
        for c in (0, 1, 2):
            specv = pa.TensorModuleSpec(data, twist, rep, Fraction(c), "V")
            tw = pfm.twist_times_character(twist, data.trace_ad)
            spect = pa.TensorModuleSpec(
                data, tw, rep, Fraction(c) - (2 * data.N + 2), "T"
            )
            for r in range(specv.dim_r):
                v = {((0,) * data.dim, r): ONE}
                lv = pa.to_left_normal(specv.env, pa.e_star_raw(specv, v))
                lt = pa.to_left_normal(spect.env, pa.e_star_raw(spect, v))
                assert lv.terms == lt.terms


def test_member_action_matches_direct(heis1):
    env = get_env(heis1)
    members = pfm.contact_complex_members(heis1)
    for mem in members:
        spec = pa.member_tensor_spec(heis1, mem)
        for gi, f in enumerate(mem.basis):
            direct = pfm.e_star_direct(env, pfm.pf_from_form(3, f))
            grouped = {}
            for (F, G, T), c in direct.items():
                grouped.setdefault((F, G), {})[T] = c
            raw = {}
            for (F, G), coeffs in grouped.items():
                cform = ex.form(mem.degree, coeffs)
                for idx, cc in mem.form_coords(cform).items():
                    key = (F, G, (ZI, idx))
                    raw[key] = raw.get(key, ZERO) + cc
            raw = {k: v for k, v in raw.items() if v}
            lhs = pa.to_left_normal(env, raw)
            rhs = pa.to_left_normal(
                env, pa.e_star_raw(spec, {(ZI, gi): ONE})
            )
            assert lhs.terms == rhs.terms


def test_complex_homomorphisms(heis1, pi2_heis1):
    for twist in (None, pi2_heis1):
        specs, hmats = pa.twisted_contact_complex(heis1, twist)
        for pos in range(len(hmats)):
            assert pa.complex_homomorphism_check(heis1, twist, pos)


def test_v_index_of_member(heis1):
    members = pfm.contact_complex_members(heis1)
    assert [pa.v_index_of_member(heis1, m) for m in members] == [4, 3, 1, 0]


def test_audit_cutoff_finds_nothing_new(heis1):
    # an audit sweep above the default bound adds no new singular vectors
    spec = make_spec(heis1, "1", 1)
    b2, _ = pa.singular_space(spec, 2)
    b4, _ = pa.singular_space(spec, 4)
    assert len(b2) == len(b4)


def test_zero_map_is_a_homomorphism(heis1):
    spec = make_spec(heis1, "1", 1)
    assert pa.homomorphism_check(spec, spec, {})


def test_generalizes_beyond_small_rank():
    # dimension seven: Casimir scalars and the classification rule keep
    # holding, with the degree-two vector at the middle fundamental weight
    from contactk import contact_lie as cl

    data = cl.heisenberg(3)
    gens = sp.build_sp(data)
    rep3 = sp.fundamental_rep(data, gens, 3)
    val = sp.scalar_matrix_value(sp.casimir_apply(data, gens, rep3))
    assert val == Fraction(15, 2)
    triv = pfm.trivial_twist(data)
    spec = pa.TensorModuleSpec(data, triv, rep3, Fraction(3), "V")
    verdict = pa.classify(spec)
    assert verdict.reducible and verdict.degrees == (2,)
    spec = pa.TensorModuleSpec(
        data, triv, sp.fundamental_rep(data, gens, 1), Fraction(2), "V"
    )
    assert not pa.classify(spec).reducible


def test_singular_dimension_predictions(heis1, heis2, pi2_heis1):
    cases = [
        (heis1, None, "trivial", 0, 0), (heis1, None, "1", 1, 1),
        (heis1, None, "1", 1, 3), (heis1, pi2_heis1, "1", 1, 1),
        (heis2, None, "2", 2, 2), (heis2, None, "1", 1, 5),
    ]
    for data, twist, u_kind, p, c in cases:
        spec = make_spec(data, u_kind, c, twist=twist)
        basis, _ = pa.singular_space(spec)
        kind = "trivial" if u_kind == "trivial" else "fundamental"
        per_unit = pa.expected_nonconstant_dim(kind, p, c, data.N)
        assert len(basis) - spec.dim_r == spec.dim_pi * per_unit, (u_kind, c)


def test_singular_iff_killed_by_filtration_step(heis1):
    # the coefficient criterion agrees with the annihilation-operator one:
    # singular vectors are exactly those killed by Fourier coefficients of
    # contact degree at least three
    spec = make_spec(heis1, "1", 1)
    basis, _ = pa.singular_space(spec)
    deep = [I for I in ev.contact_indices(3, 4) if ev.contact_degree(I) >= 3]
    for v in basis:
        for I in deep:
            x = ev.dual_monomial(3, I, 6)
            assert pa.fourier_act(spec, x, v) == {}
    spec0 = make_spec(heis1, "trivial", 0)
    bad = {((1, 0, 0), 0): ONE}  # the distinguished direction, not singular
    assert any(
        pa.fourier_act(spec0, ev.dual_monomial(3, I, 6), bad) != {}
        for I in deep
    )
