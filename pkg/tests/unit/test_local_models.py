"""
Tests for ruled surface numerics, fiber chains and the blow-up oracle.
"""

import pytest

from jung.constants import S_MEETS_C1
from jung.errors import ConstructionError, InvalidMultiplicityError, ModificationBalanceError
from jung.models.local import ChainComponent, ChainDescriptor
from jung.models.tower import LevelRole, TowerLevel
from jung.services.local_models import (
    blow_up_count,
    c1_drop,
    c1m_class,
    c1m_coefficients,
    c1m_self_int,
    chain_basis_name,
    disc_bundle,
    fiber_balance,
    fiber_chain,
    intersection_form,
    local_blowup_oracle,
    modified_surface,
    pairing,
    picard_rank,
)


class TestCounts:
    """Tests for blow-up counts."""

    @pytest.mark.parametrize(
        "m,expected", [(1, 0), (2, 1), (3, 3), (4, 2), (5, 4), (6, 3), (7, 5)]
    )
    def test_blow_up_count(self, m, expected):
        """Even weights need m/2 blow-ups, odd ones (m+3)/2."""
        assert blow_up_count(m) == expected

    @pytest.mark.parametrize("m,expected", [(1, 0), (2, 1), (3, 2), (4, 2), (5, 3)])
    def test_c1_drop(self, m, expected):
        """Blow-ups centred on C_1."""
        assert c1_drop(m) == expected

    def test_rejects_zero(self):
        """Weights below 1 are rejected."""
        with pytest.raises(InvalidMultiplicityError):
            blow_up_count(0)


class TestFiberChain:
    """Tests for the chain tables."""

    def test_weight_one(self):
        """m' = 1 leaves the fiber alone and S meets C_1."""
        chain = fiber_chain(1)
        assert chain.as_pairs() == [(0, 1)]
        assert chain.s_meets == S_MEETS_C1
        assert chain.blow_ups == 0

    def test_weight_two(self):
        """m' = 2 gives two (-1) curves."""
        chain = fiber_chain(2)
        assert chain.as_pairs() == [(-1, 1), (-1, 1)]
        assert chain.s_meets == 1

    def test_weight_three(self):
        """m' = 3 ends with the (-3, -1, -2) tail."""
        chain = fiber_chain(3)
        assert chain.as_pairs() == [(-1, 1), (-3, 1), (-1, 2), (-2, 1)]
        assert chain.s_meets == 2
        assert chain.blow_ups == 3
        assert chain.c1_drop == 2

    def test_weight_six(self):
        """Even chains are (-1, -2, ..., -2, -1)."""
        assert fiber_chain(6).as_pairs() == [(-1, 1), (-2, 1), (-2, 1), (-1, 1)]

    def test_weight_five(self):
        """Odd chains insert (-2) curves before the tail."""
        chain = fiber_chain(5)
        assert chain.as_pairs() == [(-1, 1), (-2, 1), (-3, 1), (-1, 2), (-2, 1)]
        assert chain.s_meets == 3

    @pytest.mark.parametrize("m", range(1, 16))
    def test_chains_are_balanced(self, m):
        """Every table chain satisfies the fiber balance."""
        assert not any(fiber_balance(fiber_chain(m)))

    def test_corrupted_chain_is_unbalanced(self):
        """A wrong self-intersection shows up in the residual."""
        chain = ChainDescriptor(
            components=[
                ChainComponent(self_int=-2, fiber_mult=1),
                ChainComponent(self_int=-1, fiber_mult=1),
            ],
            blow_ups=1,
            s_meets=1,
        )
        assert fiber_balance(chain) == [-1, 0]


class TestOracle:
    """Tests for the blow-up simulation."""

    @pytest.mark.parametrize("m", range(1, 21))
    def test_matches_table(self, m):
        """The simulation reproduces the table, including counts and the S position."""
        assert local_blowup_oracle(m) == fiber_chain(m)

    def test_rejects_zero(self):
        """The oracle validates its argument."""
        with pytest.raises(InvalidMultiplicityError):
            local_blowup_oracle(0)


class TestSurfaceFormulas:
    """Tests for (C_1^m)^2 and the Picard rank."""

    def test_c1m_self_int(self):
        """X_2 modified over weights 3 and 1."""
        assert c1m_self_int(2, [3, 1]) == 0

    def test_c1m_self_int_even(self):
        """Two weight-one points on X_1."""
        assert c1m_self_int(1, [1, 1]) == 1

    def test_balance_required(self):
        """2e must equal the sum of the weights."""
        with pytest.raises(ModificationBalanceError):
            c1m_self_int(2, [3])

    def test_picard_rank(self):
        """2 + blow-ups."""
        assert picard_rank([3, 1]) == 5
        assert picard_rank([]) == 2

    def test_modified_surface(self):
        """Assembled X^m carries the derived numbers."""
        surface = modified_surface(2, [("A3", 3), ("St1", 1)], marked=["A1"])
        assert surface.c0m_self_int == -2
        assert surface.c1m_self_int == 0
        assert surface.picard_rank == 5
        assert surface.weights == [3, 1]
        assert surface.marked_points == ["A1"]


class TestDiscBundle:
    """Tests for E^m(A_i)."""

    def test_modifications(self):
        """t = m_j / 2 blow-ups over each older point."""
        bundle = disc_bundle(-3, [("A2", 6)])
        assert bundle.zero_section_self_int == -3
        assert bundle.modifications[0].count == 3
        assert bundle.modifications[0].self_ints == [-2, -2, -1]

    def test_odd_older_rejected(self):
        """Older neighbors are even."""
        with pytest.raises(ConstructionError):
            disc_bundle(0, [("A3", 3)])


class TestIntersectionForm:
    """Tests for Gram matrices and C_1^m."""

    def test_plain_level(self):
        """X_1 has C0^2 = -1."""
        basis, gram = intersection_form(TowerLevel(role=LevelRole.RULED, param=-1, g_mult=4))
        assert basis == ["C0", "f"]
        assert gram.tolist() == [[-1, 1], [1, 0]]

    @pytest.fixture
    def cusp_bottom(self) -> TowerLevel:
        """Bottom level over the (-3) vertex of the cusp graph."""
        return TowerLevel(
            role=LevelRole.BOTTOM,
            param=-3,
            g_mult=2,
            modified=modified_surface(3, [("A2", 6)]),
        )

    def test_modified_basis(self, cusp_bottom):
        """Chain curves of index >= 1 extend the basis."""
        basis, gram = intersection_form(cusp_bottom)
        assert basis == ["C0", "f", "A2:1", "A2:2", "A2:3"]
        assert gram.det() in (1, -1)

    def test_c1m(self, cusp_bottom):
        """C_1^m = C0 + 3f - c1 - 2c2 - 3c3."""
        coefficients = c1m_coefficients(cusp_bottom)
        assert coefficients == [1, 3, -1, -2, -3]
        _, gram = intersection_form(cusp_bottom)
        assert pairing(gram, coefficients, coefficients) == 0

    def test_c1m_class(self, cusp_bottom):
        """The class wrapper keeps the basis names."""
        curve_class = c1m_class(cusp_bottom, "A1/1")
        assert curve_class.surface == "A1/1"
        assert curve_class.coefficient("f") == 3

    def test_chain_basis_name(self):
        """Chain curves are named label:index."""
        assert chain_basis_name("St1", 2) == "St1:2"
