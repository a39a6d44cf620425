import random

import pytest

from hmdft import (
    CyclicFn,
    SupportSet,
    compose_perm,
    conv_power,
    convolve,
    delta,
    dft,
    dft_period_by_support,
    idft,
    is_periodic,
    kronecker,
    least_period,
    least_period_of_sequence,
    make_field,
    pointwise_mul,
    primitive_element,
    reversal,
    shift,
    sigma_eval,
)
from hmdft.errors import (
    BadPermutationError,
    CtxMismatchError,
    ModulusMismatchError,
    NotDivisorError,
    OrderMismatchError,
)

from helpers import brute_convolve, brute_dft, brute_idft, brute_least_period

EX15_SEQ = (1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0)


def random_fn(ctx, N, rng, sparse=None):
    codes = [0] * N
    if sparse is None:
        codes = [rng.randrange(ctx.order) for _ in range(N)]
    else:
        for i in rng.sample(range(N), min(sparse, N)):
            codes[i] = rng.randrange(1, ctx.order)
    return CyclicFn(ctx, codes)


def test_dft_of_kronecker_is_constant_one():
    f7 = make_field(7)
    f = kronecker(f7, 6)
    z6 = f7.element(3)  # 3 has multiplicative order 6 mod 7
    g = dft(f, z6)
    assert list(g.codes) == [1] * 6
    assert idft(g, z6) == f  # constant ones transform back to the delta


def test_idft_of_delta_transform():
    f16 = make_field(2, 4)
    z = primitive_element(f16)
    for w in (0, 1, 2, 3):
        d = delta(2, 4, w, f16)
        assert idft(dft(d, z), z) == d


def test_dft_matches_sigma_pointwise():
    f16 = make_field(2, 4)
    z = primitive_element(f16)
    d2 = delta(2, 4, 2, f16)
    g = dft(d2, z)
    for k in range(15):
        assert g(k) == sigma_eval(2, z ** k, 2, 4)


def test_dft_idft_roundtrip_f7():
    f7 = make_field(7)
    rng = random.Random(1)
    z6 = f7.element(3)
    for _ in range(20):
        f = random_fn(f7, 6, rng)
        assert idft(dft(f, z6), z6) == f
        assert dft(idft(f, z6), z6) == f


def test_dft_against_brute_force():
    rng = random.Random(2)
    for ctx, N in [(make_field(2, 4), 15), (make_field(3, 2), 8),
                   (make_field(5, 2), 24), (make_field(2, 4), 5)]:
        zeta = ctx.nth_root_of_unity(N)
        for _ in range(5):
            f = random_fn(ctx, N, rng)
            assert dft(f, zeta) == brute_dft(f, zeta)
            assert idft(f, zeta) == brute_idft(f, zeta)


def test_dft_validations():
    f16 = make_field(2, 4)
    f = kronecker(f16, 15)
    with pytest.raises(OrderMismatchError):
        dft(f, f16.element(1))  # order 1, not 15
    g = kronecker(f16, 7)
    with pytest.raises(NotDivisorError):
        dft(g, primitive_element(f16))  # 7 does not divide 15
    f9 = make_field(3, 2)
    with pytest.raises(CtxMismatchError):
        dft(f, primitive_element(f9))


def test_idft_degenerate_modulus():
    f16 = make_field(2, 4)
    f = CyclicFn(f16, [9])
    z1 = f16.one()
    assert dft(f, z1) == f and idft(f, z1) == f


def test_convolve_identity_and_example():
    f3 = make_field(3)
    rng = random.Random(3)
    for _ in range(10):
        f = random_fn(f3, 8, rng)
        assert convolve(f, kronecker(f3, 8)) == f
    d1 = CyclicFn.from_support(f3, 8, [1, 3])  # weight-1 exponents for q=3, n=2
    assert list(convolve(d1, d1).codes) == [0, 0, 1, 0, 2, 0, 1, 0]


def test_convolve_commutes_and_matches_brute():
    rng = random.Random(4)
    for ctx, N in [(make_field(2, 4), 15), (make_field(3, 2), 8), (make_field(7), 6)]:
        for _ in range(5):
            f = random_fn(ctx, N, rng)
            g = random_fn(ctx, N, rng, sparse=3)
            assert convolve(f, g) == convolve(g, f)
            assert convolve(f, g) == brute_convolve(f, g)
    with pytest.raises(ModulusMismatchError):
        convolve(kronecker(make_field(3), 4), kronecker(make_field(3), 5))


def test_conv_power():
    f3 = make_field(3)
    d1 = CyclicFn.from_support(f3, 8, [1, 3])
    assert conv_power(d1, 0) == kronecker(f3, 8)
    assert conv_power(d1, 1) == d1
    assert conv_power(d1, 2) == convolve(d1, d1)
    assert conv_power(d1, 5) == convolve(d1, convolve(d1, convolve(d1, convolve(d1, d1))))
    with pytest.raises(ValueError):
        conv_power(d1, -1)


def test_frobenius_conv_power_identity():
    # f valued in the F_q subfield with N | q - 1 satisfies f^{(*q)} = f;
    # with full field values the exponent is the field order itself
    rng = random.Random(5)
    for q, ctx_params in [(3, (3, 2)), (4, (2, 4)), (5, (5, 2)), (7, (7, 2))]:
        from hmdft import subfield_embedding
        from hmdft.numtheory import prime_power

        p, j = prime_power(q)
        small = make_field(p, j)
        big = make_field(*ctx_params)
        emb = subfield_embedding(small, big)
        sub_codes = [emb.lift(e).code for e in small.elements()]
        for N in [d for d in range(1, q) if (q - 1) % d == 0]:
            for _ in range(5):
                f = CyclicFn(big, [sub_codes[rng.randrange(q)] for _ in range(N)])
                assert conv_power(f, q) == f
    for ctx, N in [(make_field(7), 6), (make_field(3, 2), 8), (make_field(2, 2), 3)]:
        for _ in range(5):
            f = random_fn(ctx, N, rng)
            assert conv_power(f, ctx.order) == f


def test_convolution_theorem():
    rng = random.Random(6)
    for ctx, N in [(make_field(2, 4), 15), (make_field(3, 3), 26), (make_field(5, 2), 12)]:
        zeta = ctx.nth_root_of_unity(N)
        for _ in range(10):
            f = random_fn(ctx, N, rng)
            g = random_fn(ctx, N, rng)
            assert dft(convolve(f, g), zeta) == pointwise_mul(dft(f, zeta), dft(g, zeta))


def test_least_period_examples():
    f2 = make_field(2)
    assert least_period(CyclicFn(f2, [1] * 12)) == 1
    assert least_period(CyclicFn(f2, EX15_SEQ)) == 15
    f64 = make_field(2, 6)
    f = CyclicFn.from_support(f64, 63, [3])
    assert least_period(dft(f, primitive_element(f64))) == 21
    assert least_period_of_sequence("abcabc") == 3
    assert least_period_of_sequence([0]) == 1


def test_least_period_divides_n_and_matches_brute():
    rng = random.Random(7)
    f5 = make_field(5)
    for _ in range(100):
        N = rng.choice([4, 6, 8, 9, 12, 15, 16, 18, 24])
        base = [rng.randrange(5) for _ in range(rng.choice([d for d in range(1, N + 1) if N % d == 0]))]
        codes = (base * N)[:N]
        f = CyclicFn(f5, codes)
        r = least_period(f)
        assert N % r == 0
        assert r == brute_least_period(codes)


def test_period_preserving_transforms():
    rng = random.Random(8)
    f2 = make_field(2)
    s = CyclicFn(f2, EX15_SEQ)
    assert least_period(shift(s, 7)) == 15
    assert shift(s, 0) == s
    assert reversal(reversal(s)) == s
    for ctx in [make_field(3, 2), make_field(2, 3)]:
        for _ in range(30):
            N = rng.choice([6, 8, 9, 12])
            f = random_fn(ctx, N, rng)
            r = least_period(f)
            k = rng.randrange(-2 * N, 2 * N)
            assert least_period(shift(f, k)) == r
            assert least_period(reversal(f)) == r
            codes = list(range(ctx.order))
            rng.shuffle(codes)
            sigma = {i: codes[i] for i in range(ctx.order)}
            assert least_period(compose_perm(f, sigma)) == r


def test_shift_definition():
    f3 = make_field(3)
    f = CyclicFn(f3, [0, 1, 2, 0, 1, 2])
    g = shift(f, 2)
    for i in range(6):
        assert g(i) == f(i + 2)
    h = reversal(f)
    for i in range(6):
        assert h(i) == f(-(1 + i))


def test_compose_perm_validation():
    f3 = make_field(3)
    f = CyclicFn(f3, [0, 1, 2])
    with pytest.raises(BadPermutationError):
        compose_perm(f, {0: 0, 1: 1, 2: 1})
    with pytest.raises(BadPermutationError):
        compose_perm(f, {0: 0})
    assert compose_perm(f, lambda e: e + 1)(0) == f3.element(1)


def test_gcd_periodicity():
    import math

    rng = random.Random(9)
    f7 = make_field(7)
    for _ in range(100):
        N = rng.choice([6, 8, 12, 18])
        f = random_fn(f7, N, rng)
        r = rng.randrange(1, 3 * N)
        assert is_periodic(f, r) == is_periodic(f, math.gcd(r, N))


def test_dft_period_by_support():
    assert dft_period_by_support(SupportSet(15, (0,))) == 1
    assert dft_period_by_support(SupportSet(15, (3, 5))) == 15
    assert dft_period_by_support(SupportSet(63, (3,))) == 21
    assert dft_period_by_support(SupportSet(63, ())) == 1


def test_dft_period_matches_transform_period():
    rng = random.Random(10)
    for ctx, N in [(make_field(2, 4), 15), (make_field(3, 2), 8),
                   (make_field(2, 6), 63), (make_field(5, 2), 24)]:
        zeta = ctx.nth_root_of_unity(N)
        for _ in range(20):
            f = random_fn(ctx, N, rng, sparse=rng.randrange(0, 5))
            expected = dft_period_by_support(f.support())
            assert least_period(dft(f, zeta)) == expected
            assert least_period(idft(f, zeta)) == expected


def test_dft_linearity():
    rng = random.Random(11)
    f9 = make_field(3, 2)
    zeta = f9.nth_root_of_unity(8)
    for _ in range(20):
        f = random_fn(f9, 8, rng)
        g = random_fn(f9, 8, rng)
        a = rng.randrange(9)
        lhs = dft(f.scale(a) + g, zeta)
        rhs = dft(f, zeta).scale(a) + dft(g, zeta)
        assert lhs == rhs


def test_support_set_normalizes():
    s = SupportSet(10, (12, 3, 3, -1))
    assert s.members == (2, 3, 9)
    assert len(s) == 3
