import math

import numpy as np
import pytest

import displays
from symstate.errors import (
    BadNormalization,
    DimensionMismatch,
    DimensionTooSmall,
    NotPSD,
    ParamOutOfRange,
    SymstateError,
)
from symstate.linalg import flat_index, partial_transpose
from symstate.states import (
    DPRIME_PERM,
    PRIME_PERM,
    TRANSPOSITION_12,
    TRANSPOSITION_23,
    AbelianFamilyParams,
    HorodeckiParams,
    abelian_family,
    conjugate,
    generalized_horodecki,
    horodecki,
    horodecki_dprime,
    horodecki_prime,
    maximally_entangled,
    maximally_mixed,
    permutation_matrix,
)
from symstate.symmetry import InvarianceLaw, Partition, detect_symmetry, is_invariant

GRID = np.linspace(0, 1, 101)


def params(a):
    return HorodeckiParams(3, a)


class TestHorodeckiParams:
    def test_d3_normalisation(self):
        for a in GRID:
            assert params(a).N == 1 / (8 * a + 1)

    def test_block_psd_and_b_identity(self):
        for a in GRID:
            hp = params(a)
            assert hp.b - hp.c >= 0
            assert 2 * hp.b - 1 == pytest.approx(a, abs=1e-15)
            assert 4 * (hp.b ** 2 - hp.c ** 2) == pytest.approx(2 * a * (1 + a), abs=1e-14)

    @pytest.mark.parametrize("a", [-0.1, 1.5, float("nan")])
    def test_out_of_range(self, a):
        with pytest.raises(ParamOutOfRange, match=r"a must be in \[0,1\]"):
            horodecki(a)


class TestHorodecki:
    @pytest.mark.parametrize("a", [0.0, 0.5, 1.0])
    def test_matches_printed_matrix(self, a):
        hp = params(a)
        expected = displays.letter_matrix(displays.HORODECKI, a, hp.b, hp.c, hp.N)
        assert np.array_equal(horodecki(a), expected)

    def test_a0_pure_product(self):
        rho = horodecki(0.0)
        psi = np.zeros(9)
        psi[[flat_index(3, 1, 3), flat_index(3, 3, 3)]] = 1 / math.sqrt(2)
        assert np.allclose(rho, np.outer(psi, psi), atol=1e-16)

    def test_a1_value(self):
        expected = np.zeros((9, 9))
        for i in range(3):
            for j in range(3):
                expected[4 * i, 4 * j] = 1 / 9
                if i != j:
                    expected[3 * i + j, 3 * i + j] = 1 / 9
        assert np.allclose(horodecki(1.0), expected, atol=1e-16)

    def test_half_corner_value(self):
        # c / (8a + 1) at a = 1/2 is (sqrt(3)/4) / 5
        assert horodecki(0.5)[6, 8] == pytest.approx(math.sqrt(3) / 20, abs=1e-16)

    def test_state_properties_on_grid(self):
        for a in GRID:
            rho = horodecki(a)
            assert abs(np.trace(rho) - 1) < 1e-15
            assert np.array_equal(rho, rho.conj().T)
            assert np.linalg.eigvalsh(rho)[0] >= -1e-10
            assert np.linalg.eigvalsh(partial_transpose(rho, 3))[0] >= -1e-10
            assert is_invariant(rho, Partition.from_text("13|2"), InvarianceLaw.UUBAR)


class TestRelabelledForms:
    @pytest.mark.parametrize("a", [0.0, 0.5, 1.0])
    @pytest.mark.parametrize("ctor, grid", [
        (horodecki_prime, displays.HORODECKI_PRIME), (horodecki_dprime, displays.HORODECKI_DPRIME),
    ])
    def test_matches_printed_matrix(self, ctor, grid, a):
        hp = params(a)
        assert np.array_equal(ctor(a), displays.letter_matrix(grid, a, hp.b, hp.c, hp.N))

    def test_printed_forms_are_cycle_conjugates(self):
        a = 0.3
        assert np.array_equal(conjugate(horodecki(a), PRIME_PERM), horodecki_prime(a))
        assert np.array_equal(conjugate(horodecki(a), DPRIME_PERM), horodecki_dprime(a))

    def test_transposition_conjugates_share_symmetry_class(self):
        a = 0.5
        assert detect_symmetry(conjugate(horodecki(a), TRANSPOSITION_23))[0] == Partition.from_text("12|3")
        assert detect_symmetry(conjugate(horodecki(a), TRANSPOSITION_12))[0] == Partition.from_text("1|23")


class TestConjugate:
    def test_identity(self):
        M = np.random.default_rng(0).normal(size=(9, 9))
        assert np.array_equal(conjugate(M, (1, 2, 3)), M)

    def test_matches_matrix_product(self):
        rng = np.random.default_rng(1)
        M = rng.normal(size=(16, 16)) + 1j * rng.normal(size=(16, 16))
        for perm in [(2, 3, 4, 1), (4, 3, 2, 1), (1, 3, 2, 4)]:
            S = np.kron(permutation_matrix(perm), permutation_matrix(perm))
            assert np.array_equal(conjugate(M, perm), S @ M @ S.conj().T)

    def test_s_prime_matrix(self):
        assert np.array_equal(permutation_matrix(TRANSPOSITION_23), [[1, 0, 0], [0, 0, 1], [0, 1, 0]])
        assert np.array_equal(permutation_matrix(TRANSPOSITION_12), [[0, 1, 0], [1, 0, 0], [0, 0, 1]])

    def test_preserves_spectrum_and_trace(self):
        rho = horodecki(0.4)
        for perm in [PRIME_PERM, DPRIME_PERM, TRANSPOSITION_23, TRANSPOSITION_12]:
            out = conjugate(rho, perm)
            assert np.allclose(np.linalg.eigvalsh(out), np.linalg.eigvalsh(rho), atol=1e-10)
            assert np.trace(out) == np.trace(rho)

    def test_commutes_with_partial_transpose(self):
        rng = np.random.default_rng(2)
        M = rng.normal(size=(9, 9)) + 1j * rng.normal(size=(9, 9))
        import itertools
        for perm in itertools.permutations((1, 2, 3)):
            assert np.array_equal(partial_transpose(conjugate(M, perm), 3),
                                  conjugate(partial_transpose(M, 3), perm))

    def test_symmetry_follows_permutation(self):
        import itertools
        base = Partition.from_text("13|2")
        for perm in itertools.permutations((1, 2, 3)):
            found = detect_symmetry(conjugate(horodecki(0.5), perm))[0]
            assert found == base.permuted(perm)

    def test_errors(self):
        with pytest.raises(DimensionMismatch):
            conjugate(np.eye(9), (1, 2))
        with pytest.raises(SymstateError):
            conjugate(np.eye(9), (1, 1, 2))


class TestAbelianFamily:
    def test_maximally_entangled(self):
        d = 3
        psi = np.zeros(d * d)
        psi[[0, 4, 8]] = 1 / math.sqrt(d)
        assert np.allclose(maximally_entangled(d), np.outer(psi, psi), atol=1e-16)

    def test_maximally_mixed(self):
        d = 3
        p = AbelianFamilyParams(np.eye(d) / d**2, (np.ones((d, d)) - np.eye(d)) / d**2)
        assert np.allclose(abelian_family(p), maximally_mixed(d))

    def test_reproduces_horodecki_at_one(self):
        rho = horodecki(1.0)
        diag = [0, 4, 8]
        A = rho[np.ix_(diag, diag)]
        D = np.array([[0 if i == j else rho[3 * i + j, 3 * i + j].real for j in range(3)] for i in range(3)])
        assert np.array_equal(abelian_family(AbelianFamilyParams(A, D)), rho)

    def test_invariant_under_maximal_subgroup(self):
        rng = np.random.default_rng(3)
        for d in (3, 4):
            G = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
            A = G @ G.conj().T
            D = rng.uniform(size=(d, d))
            np.fill_diagonal(D, 0)
            total = np.trace(A).real + D.sum()
            rho = abelian_family(AbelianFamilyParams(A / total, D / total, tol=1e-10))
            assert is_invariant(rho, Partition.discrete(d), InvarianceLaw.UUBAR)

    def test_validation(self):
        with pytest.raises(NotPSD):
            AbelianFamilyParams(np.array([[0.5, 1.0], [1.0, 0.5]]), np.zeros((2, 2)))
        with pytest.raises(BadNormalization):
            AbelianFamilyParams(np.eye(2), np.zeros((2, 2)))
        with pytest.raises(ParamOutOfRange):
            AbelianFamilyParams(np.eye(2), np.array([[0, -0.1], [1.1, 0]]))


class TestGeneralized:
    def test_reduces_to_horodecki(self):
        for a in GRID:
            assert np.array_equal(generalized_horodecki(3, a), horodecki(a))

    def test_d4_a0_pure_product(self):
        rho = generalized_horodecki(4, 0.0)
        psi = np.zeros(16)
        psi[[flat_index(4, 1, 4), flat_index(4, 4, 4)]] = 1 / math.sqrt(2)
        assert np.allclose(rho, np.outer(psi, psi), atol=1e-16)

    def test_d4_half(self):
        rho = generalized_horodecki(4, 0.5)
        assert abs(np.trace(rho) - 1) < 1e-14
        assert np.linalg.eigvalsh(partial_transpose(rho, 4))[0] >= -1e-10

    def test_symmetry(self):
        for d in (4, 5):
            p = Partition.from_classes([[1, d]] + [[k] for k in range(2, d)])
            assert is_invariant(generalized_horodecki(d, 0.37), p, InvarianceLaw.UUBAR)

    def test_errors(self):
        with pytest.raises(DimensionTooSmall):
            generalized_horodecki(2, 0.5)
        with pytest.raises(ParamOutOfRange):
            generalized_horodecki(4, 1.01)
