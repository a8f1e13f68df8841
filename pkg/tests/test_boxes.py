import numpy as np
import pytest
from hypothesis import given, strategies as st

from icbounds.boxes import (
    SLICE_VERTEX,
    Box222,
    SliceSpec,
    chsh,
    correlator,
    local_vertex,
    mix_slice,
    nl_vertex,
    uniform_box,
    validate,
    vertex,
)

BITS = [(m, n, s) for m in (0, 1) for n in (0, 1) for s in (0, 1)]


def test_pr_box_parity():
    pr = nl_vertex(0, 0, 0)
    for a in (0, 1):
        for b in (0, 1):
            for x in (0, 1):
                for y in (0, 1):
                    expected = 0.5 if a ^ b == (x & y) else 0.0
                    assert pr.probs[a, b, x, y] == expected


def test_nl_001_is_noise_complement_of_pr():
    lhs = nl_vertex(0, 0, 1).probs
    rhs = 2 * uniform_box().probs - nl_vertex(0, 0, 0).probs
    assert np.array_equal(lhs, rhs)


def test_nl_010_correlators():
    box = nl_vertex(0, 1, 0)
    got = [correlator(box, x, y) for x, y in [(0, 0), (0, 1), (1, 0), (1, 1)]]
    assert got == [1.0, -1.0, 1.0, 1.0]


def test_local_vertex_deterministic():
    box = local_vertex(0, 0, 0, 0)
    assert box.probs[0, 0, 0, 0] == 1.0
    assert all(correlator(box, x, y) == 1.0 for x in (0, 1) for y in (0, 1))
    assert chsh(box) == 2.0
    box2 = local_vertex(0, 1, 0, 1)
    for x in (0, 1):
        for y in (0, 1):
            assert box2.probs[1, 1, x, y] == 1.0


@pytest.mark.parametrize("bits", BITS)
def test_nl_vertices_valid(bits):
    report = validate(nl_vertex(*bits))
    assert report.ok
    assert all(c.deviation == 0.0 for c in report.checks)


@pytest.mark.parametrize("bits", [b + (t,) for b in BITS for t in (0, 1)])
def test_local_vertices_valid(bits):
    report = validate(local_vertex(*bits))
    assert report.ok
    assert all(c.deviation == 0.0 for c in report.checks)


@pytest.mark.parametrize("bits", BITS)
def test_nl_vertices_maximize_their_chsh_expression(bits):
    # the CHSH-type expression with signs matching the vertex parity reaches 4
    mu, nu, sigma = bits
    box = nl_vertex(mu, nu, sigma)
    total = 0.0
    for x in (0, 1):
        for y in (0, 1):
            sign = (-1) ** ((x & y) ^ (mu & x) ^ (nu & y) ^ sigma)
            total += sign * correlator(box, x, y)
    assert total == 4.0


def test_mix_slice_endpoints():
    spec = SliceSpec("NL010", 0.0, 0.0)
    assert np.allclose(mix_slice(spec).probs, 0.25)
    spec = SliceSpec("NL110", 1.0, 0.0)
    assert np.array_equal(mix_slice(spec).probs, nl_vertex(0, 0, 0).probs)


def test_mix_slice_correlators_are_linear():
    box = mix_slice(SliceSpec("NL010", 0.5, 0.3))
    expected = 0.5 * np.array([1, 1, 1, -1]) + 0.3 * np.array([1, -1, 1, 1])
    got = [correlator(box, x, y) for x, y in [(0, 0), (0, 1), (1, 0), (1, 1)]]
    assert np.allclose(got, expected, atol=1e-12)


def test_mix_slice_rejects_outside_simplex():
    with pytest.raises(ValueError):
        SliceSpec("NL010", 0.7, 0.4)
    with pytest.raises(ValueError):
        SliceSpec("NL010", -0.1, 0.2)


def test_chsh_values():
    assert chsh(nl_vertex(0, 0, 0)) == 4.0
    assert chsh(uniform_box()) == 0.0


def test_chsh_linear_in_local_slice():
    for alpha, beta in [(0.2, 0.1), (0.5, 0.5), (0.0, 0.9)]:
        box = mix_slice(SliceSpec("L0000", alpha, beta))
        assert chsh(box) == pytest.approx(4 * alpha + 2 * beta, abs=1e-12)


@given(
    st.floats(0.0, 1.0),
    st.floats(0.0, 1.0),
    st.sampled_from(sorted(set(SLICE_VERTEX.values()))),
)
def test_mix_slice_always_valid(u, v, tag):
    # map the unit square onto the simplex
    alpha = u
    beta = v * (1.0 - u)
    box = mix_slice(SliceSpec(tag, alpha, beta))
    assert validate(box).ok
    assert abs(chsh(box)) <= 4.0 + 1e-12


def test_validate_reports_signaling_box():
    probs = np.zeros((2, 2, 2, 2))
    # Alice's output copies Bob's input: blatant signaling in her marginal
    for x in (0, 1):
        for y in (0, 1):
            probs[y, 0, x, y] = 1.0
    report = validate(Box222(probs))
    names = {c.name: c for c in report.checks}
    assert not names["no-signaling"].ok
    assert names["no-signaling"].deviation == pytest.approx(1.0)
    assert names["normalization"].ok


def test_validate_reports_negative_entry():
    probs = np.full((2, 2, 2, 2), 0.25)
    probs[0, 0, 0, 0] = -0.1
    probs[1, 1, 0, 0] = 0.6
    report = validate(Box222(probs))
    names = {c.name: c for c in report.checks}
    assert not names["nonnegativity"].ok
    assert names["nonnegativity"].deviation == pytest.approx(0.1)


def test_vertex_tag_roundtrip():
    assert np.array_equal(vertex("NL010").probs, nl_vertex(0, 1, 0).probs)
    assert np.array_equal(vertex("L0000").probs, local_vertex(0, 0, 0, 0).probs)
    with pytest.raises(ValueError):
        vertex("XL000")


def test_box_is_immutable():
    box = nl_vertex(0, 0, 0)
    with pytest.raises(ValueError):
        box.probs[0, 0, 0, 0] = 1.0
