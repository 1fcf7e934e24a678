import json

import pytest
from hypothesis import given, settings, strategies as st

from nakayama_lab.hopf import (
    HopfAlgebra,
    HopfError,
    builtin,
    dual_group_algebra,
    element_order,
    group_algebra,
    grouplikes,
    hopf_verify,
    product_group_algebra,
    s_squared,
    subalgebra_closure,
    sweedler,
    taft,
)
from nakayama_lab.scalars import Cyclotomic, Rationals

Q = Rationals()
Z3, Z4 = Cyclotomic(3), Cyclotomic(4)


def builtins():
    return [
        group_algebra(Q, 2),
        group_algebra(Q, 4),
        group_algebra(Z4, 4),
        product_group_algebra(Q, [2, 2]),
        dual_group_algebra(Q, 4),
        dual_group_algebra(Z4, 4),
        sweedler(Q),
        taft(3, Z3.z),
        taft(4, Z4.z),
    ]


@pytest.mark.parametrize("K", builtins(), ids=lambda K: f"{K.name}-{K.dim}")
def test_builtins_satisfy_axioms(K):
    rep = hopf_verify(K)
    assert rep.passed, rep.to_json()


@pytest.mark.parametrize("K", builtins(), ids=lambda K: f"{K.name}-{K.dim}")
def test_radford_divisibilities(K):
    _, order = s_squared(K)
    assert (2 * K.dim) % order == 0
    for g in grouplikes(K):
        assert K.dim % g.order == 0


def test_grouplike_counts():
    assert [g.order for g in grouplikes(group_algebra(Q, 4))] == [1, 4, 2, 4]
    assert [str(g.element) for g in grouplikes(sweedler(Q))] == ["1", "g"]
    assert len(grouplikes(taft(3, Z3.z))) == 3
    assert len(grouplikes(product_group_algebra(Q, [2, 2]))) == 4
    # the characters of C4 need a primitive 4th root of unity
    assert len(grouplikes(dual_group_algebra(Q, 4))) == 2
    assert len(grouplikes(dual_group_algebra(Z4, 4))) == 4


def test_s_squared_orders():
    assert s_squared(sweedler(Q))[1] == 2
    assert s_squared(taft(3, Z3.z))[1] == 3
    assert s_squared(group_algebra(Q, 4))[1] == 1


def test_sweedler_arithmetic():
    K = sweedler(Q)
    g, x = K["g"], K["x"]
    assert g * g == K.one()
    assert x * x == K.zero()
    assert x * g == -(g * x)
    assert g.is_grouplike() and not x.is_grouplike()
    assert g.inverse() == g and element_order(g) == 2
    assert K.parse("g*x") == g * x
    # S(x) = -g x in this basis: m(S (x) id) Delta(x) = eps(x) 1 = 0
    assert x.S() * K.one() + g.S() * x == K.zero()


def test_closures():
    K = sweedler(Q)
    assert subalgebra_closure(K, [K["g"]])[0] == 2
    assert subalgebra_closure(K, [K["g"], K["x"]])[0] == 4
    C = product_group_algebra(Q, [2, 2])
    assert subalgebra_closure(C, [C["g"]])[0] == 2


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(range(len(builtins()))))
def test_json_round_trip(k):
    K = builtins()[k]
    data = json.loads(json.dumps(K.to_json()))
    L = HopfAlgebra.from_json(data)
    assert L.to_json() == K.to_json()


def test_broken_antipode_loads_but_fails(tmp_path):
    data = sweedler(Q).to_json()
    data["antipode"] = [[("1" if i == j else "0") for j in range(4)] for i in range(4)]
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(data))
    K = HopfAlgebra.load(path)
    rep = hopf_verify(K)
    assert not rep.passed
    failing = [name for name, c in rep.checks.items() if not c.passed]
    assert "antipode" in failing


def test_wrong_vector_length_is_malformed():
    data = sweedler(Q).to_json()
    data["counit"] = data["counit"][:-1]
    with pytest.raises(HopfError, match="malformed"):
        HopfAlgebra.from_json(data)
    data = sweedler(Q).to_json()
    data["mult"][0][0] = data["mult"][0][0][:2]
    with pytest.raises(HopfError, match="malformed"):
        HopfAlgebra.from_json(data)


def test_builtin_dispatch():
    assert builtin("group_cyclic", Q, 3).dim == 3
    assert builtin("taft", Z4, 4, Z4.z).dim == 16
    with pytest.raises(HopfError):
        builtin("quantum_double", Q)
