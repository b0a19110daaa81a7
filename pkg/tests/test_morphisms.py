import pytest
from hypothesis import given
from hypothesis import strategies as st

from wordpowers.morphisms import (
    PHI,
    PSI,
    TAU,
    ZERO_PRIME,
    ZETA,
    Morphism,
    MorphismError,
    apply,
    apply_coding,
    distinct_factors,
    fixed_point_prefix,
    map_to_sigma_k,
    parse_morphism,
    power,
    verify_psi_prefix,
    verify_tau_phi_psi,
    verify_zeta_lemma,
)

P = ZERO_PRIME

PHI_16 = (0, 1, P, -1, 0, 1, -1, 1, P, -1, 0, 1, P, -1, 1, -1)
PSI_16 = (0, 1, 0, -1, 0, 1, -1, 1, 0, -1, 0, 1, 0, -1, 1, -1)


def test_apply_examples():
    assert apply(PHI, [0]) == (0, 1, P, -1)
    assert apply(PSI, [-1]) == (1, -1)
    assert apply(PSI, []) == ()


def test_apply_unknown_letter():
    with pytest.raises(MorphismError, match="5"):
        apply(PSI, [0, 5])


def test_coding_examples():
    assert apply_coding(TAU, (0, 1, P, -1)) == (0, 1, 0, -1)
    assert apply_coding(TAU, ()) == ()
    assert apply_coding(TAU, (P, P)) == (0, 0)
    with pytest.raises(MorphismError):
        apply_coding(TAU, (7,))


def test_fixed_point_prefixes():
    assert fixed_point_prefix(PHI, 0, 16) == PHI_16
    assert fixed_point_prefix(PSI, 0, 16) == PSI_16
    assert fixed_point_prefix(PSI, 0, 1) == (0,)
    assert fixed_point_prefix(PSI, 0, 0) == ()


def test_fixed_point_requires_prolongable_seed():
    with pytest.raises(MorphismError):
        fixed_point_prefix(PSI, 1, 5)
    with pytest.raises(MorphismError):
        fixed_point_prefix(PSI, -1, 5)


def test_non_uniform_fixed_point_matches_iterates():
    # psi has images of lengths 4, 6 and 2
    for n in range(6):
        it = power(PSI, n, (0,))
        assert fixed_point_prefix(PSI, 0, len(it)) == it


@given(st.integers(0, 500), st.integers(0, 500))
def test_prefix_stability(a, b):
    n, n2 = sorted((a, b))
    assert fixed_point_prefix(PSI, 0, n2)[:n] == fixed_point_prefix(PSI, 0, n)


@given(st.integers(1, 300))
def test_fixed_point_law(n):
    u = fixed_point_prefix(PHI, 0, n)
    assert apply(PHI, u)[:n] == u


@given(st.lists(st.sampled_from([-1, 0, 1, P]), max_size=20), st.lists(st.sampled_from([-1, 0, 1, P]), max_size=20))
def test_morphism_distributes_over_concatenation(u, v):
    assert apply(ZETA, u + v) == apply(ZETA, u) + apply(ZETA, v)
    assert len(apply_coding(TAU, u)) == len(u)


def test_zeta_lemma_base_case_by_hand():
    for a in (-1, 0, 1, P):
        assert apply(PHI, apply(ZETA, (a,))) == apply(ZETA, apply(ZETA, (a,)))


@pytest.mark.parametrize("n_max", [0, 1, 5, 7])
def test_zeta_lemma(n_max):
    report = verify_zeta_lemma(n_max)
    assert report.passed
    assert len(report.checks) == 5 * (n_max + 1)


def test_tau_phi_psi():
    assert verify_tau_phi_psi(0).passed
    assert apply_coding(TAU, power(PHI, 2, (0,))) == power(PSI, 2, (0,)) == PSI_16
    report = verify_tau_phi_psi(7)
    assert report.passed
    assert report.checks[-1].detail["left_length"] == 4**7


def test_zeta_lemma_report_pinpoints_a_broken_morphism(monkeypatch):
    broken = Morphism({**ZETA.images, -1: (-1, 1)}, ZETA.names)
    monkeypatch.setattr("wordpowers.morphisms.ZETA", broken)
    report = verify_zeta_lemma(2)
    assert not report.passed
    assert "first_mismatch" in report.first_failure().detail


@pytest.mark.parametrize("n", [1, 25, 10000])
def test_psi_prefix_properties(n):
    report = verify_psi_prefix(n)
    assert report.passed, report.to_dict()


def test_psi_word_has_82_factors_of_length_25():
    assert distinct_factors(fixed_point_prefix(PSI, 0, 20000), 25) == 82


def test_map_to_sigma_k():
    assert map_to_sigma_k([0, 1, -1], 3) == (0, 1, 2)
    assert map_to_sigma_k([0, 1, -1], 2) == (0, 1, 1)
    assert map_to_sigma_k([], 5) == ()
    with pytest.raises(ValueError):
        map_to_sigma_k([0], 1)


def test_parse_morphism_text():
    text = """
    # phi written out
    0  -> 0 1 0' -1
    1  -> 0 1 -1 1
    0' -> 0' -1 0 1
    -1 -> 0' -1 1 -1
    """
    m, seed = parse_morphism(text)
    assert seed == 0
    prime = next(code for code, name in m.names.items() if name == "0'")
    relabel = {prime: P}
    word = fixed_point_prefix(m, 0, 16)
    assert tuple(relabel.get(a, a) for a in word) == PHI_16


@pytest.mark.parametrize(
    "text",
    ["", "0 -> 0 1\n0 -> 1", "0 0 1", "0 -> 0 5", "a b -> a"],
)
def test_parse_morphism_errors(text):
    with pytest.raises(MorphismError):
        parse_morphism(text)
