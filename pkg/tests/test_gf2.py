import itertools
import random

import pytest

import oracles
from cncodes.boolean import is_bent
from cncodes.errors import ParameterError, ReducibleModulusError
from cncodes.gf2 import (
    FieldCtx,
    field_new,
    is_irreducible,
    kerdock_function,
    kerdock_set,
    linear_function,
    smallest_irreducible,
)


@pytest.mark.parametrize("d", range(2, 9))
def test_smallest_irreducible_matches_product_sieve(d):
    assert smallest_irreducible(d) == oracles.smallest_irreducible_by_products(d)


def test_known_moduli():
    assert field_new(3).modulus == 0b1011
    assert field_new(5).modulus_hex == "0x25"
    assert not is_irreducible(0b10101)  # x^4 + x^2 + 1 = (x^2 + x + 1)^2


def test_reducible_modulus_rejected():
    with pytest.raises(ReducibleModulusError):
        FieldCtx(4, 0b10101)
    with pytest.raises(ParameterError):
        FieldCtx(4, 0b1011)
    with pytest.raises(ParameterError):
        field_new(1)


def test_gf8_multiplication():
    F = field_new(3)
    assert F.mul(0b010, 0b100) == 0b011  # x * x^2 = x + 1
    x = F.element(2)
    assert int(x ** 7) == 1
    assert int(x * x.inverse()) == 1


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_field_axioms_exhaustive(d):
    F = field_new(d)
    elems = range(F.order)
    for a, b in itertools.product(elems, repeat=2):
        assert F.mul(a, b) == F.mul(b, a) == oracles.field_mul(a, b, F.modulus)
    for a in elems:
        assert F.mul(a, 1) == a and F.mul(a, 0) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    rng = random.Random(d)
    for _ in range(300):
        a, b, c = (rng.randrange(F.order) for _ in range(3))
        assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
        assert F.mul(a, b ^ c) == F.mul(a, b) ^ F.mul(a, c)


@pytest.mark.parametrize("d", [3, 5, 7])
def test_trace_properties(d):
    F = field_new(d)
    tr = [F.trace(a) for a in range(F.order)]
    assert sum(tr) == F.order // 2
    for a in range(F.order):
        assert F.trace(F.mul(a, a)) == tr[a]
    rng = random.Random(d)
    for _ in range(200):
        a, b = rng.randrange(F.order), rng.randrange(F.order)
        assert F.trace(a ^ b) == tr[a] ^ tr[b]


def test_vector_ops_match_scalar():
    F = field_new(5)
    xs = list(range(F.order))
    assert F.mul_vec(xs, 7).tolist() == [F.mul(x, 7) for x in xs]
    assert F.pow_vec(xs, 5).tolist() == [F.pow(x, 5) for x in xs]


def test_mixed_contexts_rejected():
    with pytest.raises(ParameterError):
        field_new(3).element(1) + field_new(5).element(1)
    with pytest.raises(ParameterError):
        field_new(3).element(8)


@pytest.mark.parametrize("m", [4, 6])
def test_kerdock_set_is_bent_set(m):
    fs = kerdock_set(m)
    assert len(fs) == 1 << (m - 1)
    assert fs[0].weight() == 0  # so every member f_u = f_u + f_0 is bent too
    for f, g in itertools.combinations(fs, 2):
        assert is_bent(f + g)[0]


def test_kerdock_zero_function_and_index_convention():
    F = field_new(3)
    assert kerdock_function(F, 0, 4).weight() == 0
    f = kerdock_function(F, 1, 4)
    lin = linear_function(F, 1, 0, 4)
    # the upper half (x_m = 1) differs from the lower half by Tr(u x)
    assert (f.table[8:] ^ f.table[:8]).tolist() == lin.table[:8].tolist()


def test_printed_exponent_range_is_not_bent():
    fs = kerdock_set(4, literal_exponents=True)
    assert not all(is_bent(f + g)[0] for f, g in itertools.combinations(fs, 2))


def test_kerdock_parameter_errors():
    with pytest.raises(ParameterError):
        kerdock_set(5)
    with pytest.raises(ParameterError):
        kerdock_function(field_new(4), 1, 4)
