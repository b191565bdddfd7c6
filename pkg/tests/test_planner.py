"""Window planning: capacities, the reverse-order greedy search, validation."""

from __future__ import annotations

import math
import random

import pytest

from womcode.errors import DomainError
from womcode.planner import (
    CodeParams,
    capacity_first,
    capacity_last,
    capacity_middle,
    plan,
    validate,
)

V56 = 2**56


class TestCapacities:
    def test_first_small(self):
        assert capacity_first(2, 1, 2) == 7  # 1 + C(2,1)*3
        assert capacity_first(1, 0, 2) == 4  # 1 + 3

    def test_first_covers_56_bits(self):
        assert capacity_first(49, 36, 2) >= V56
        assert capacity_first(48, 36, 2) < V56  # 49 is minimal

    def test_middle_small(self):
        assert capacity_middle(2, 1, 2) == 4  # C(2,1)*2
        for h in range(2, 30):
            assert capacity_middle(h, h - 1, 2) == 2 * h

    def test_middle_covers_56_bits(self):
        assert capacity_middle(51, 36, 2) >= V56
        assert capacity_middle(50, 36, 2) < V56

    def test_last(self):
        assert capacity_last(1, 2) == 2
        assert capacity_last(36, 2) == 3**36 - 1
        assert capacity_last(36, 2) >= V56
        assert capacity_last(35, 2) < V56
        assert capacity_last(20, 3) == 7**20 - 1 >= V56

    def test_ordering_required(self):
        with pytest.raises(DomainError):
            capacity_first(3, 3, 2)
        with pytest.raises(DomainError):
            capacity_middle(3, 4, 2)
        with pytest.raises(DomainError):
            capacity_last(0, 2)


class TestPlan:
    def test_ten_writes_of_56_bits(self):
        params = plan(2, [V56] * 10)
        assert params.h == (139, 130, 120, 110, 99, 88, 76, 64, 51, 36)
        assert params.n == 278

    def test_two_writes(self):
        assert plan(2, [7, 2]).h == (2, 1)
        assert plan(2, [V56, V56]).h[0] == 49
        assert plan(2, [V56, V56]).n == 98

    def test_single_write(self):
        assert plan(2, [2]).h == (1,)
        assert plan(2, [2]).n == 2
        assert plan(2, [3**5 - 1]).h == (5,)

    def test_exhaustive_minimal_search_oracle(self):
        # Independent oracle for two writes: scan (h1, h2) pairs outright.
        for v1 in range(2, 40):
            for v2 in range(2, 40):
                h2 = 1
                while capacity_last(h2, 2) < v2:
                    h2 += 1
                h1 = h2 + 1
                while capacity_first(h1, h2, 2) < v1:
                    h1 += 1
                assert plan(2, [v1, v2]).h == (h1, h2)

    def test_greedy_steps_are_minimal(self):
        params = plan(2, [V56] * 10)
        h, m = params.h, params.m
        assert capacity_last(h[-1], m) >= V56 > capacity_last(h[-1] - 1, m)
        for i in range(1, len(h) - 1):
            assert capacity_middle(h[i], h[i + 1], m) >= V56
            assert capacity_middle(h[i] - 1, h[i + 1], m) < V56
        assert capacity_first(h[0], h[1], m) >= V56
        assert capacity_first(h[0] - 1, h[1], m) < V56

    def test_nondecreasing_increments_for_equal_cardinalities(self):
        rng = random.Random(7)
        for _ in range(30):
            m = rng.choice([2, 3, 4])
            t = rng.randrange(2, 8)
            v = rng.randrange(2, 2**20)
            h = plan(m, [v] * t).h
            # Increments never shrink toward the last (smallest) window.
            deltas = [h[i] - h[i + 1] for i in range(t - 1)]
            assert deltas == sorted(deltas)

    def test_example_increments(self):
        h = plan(2, [V56] * 10).h
        assert [h[i] - h[i + 1] for i in range(9)] == [9, 10, 10, 11, 11, 12, 12, 13, 15]

    def test_suffix_stability(self):
        ten = plan(2, [V56] * 10).h
        assert plan(2, [V56] * 9).h[-8:] == ten[-8:]
        assert plan(2, [V56] * 11).h[-9:] == ten[-9:]
        for t in range(2, 9):
            shorter = plan(2, [V56] * t).h
            assert shorter[-(t - 1) :] == ten[-(t - 1) :]

    def test_m3_beats_m2_for_two_56_bit_writes(self):
        assert plan(2, [V56] * 2).n == 98
        assert plan(3, [V56] * 2).n == 93
        assert plan(3, [V56] * 2).h == (31, 20)

    def test_input_validation(self):
        with pytest.raises(DomainError):
            plan(1, [4, 4])
        with pytest.raises(DomainError):
            plan(2, [])
        with pytest.raises(DomainError):
            plan(2, [4, 1])


class TestValidate:
    def test_planned_params_pass(self):
        rng = random.Random(11)
        for _ in range(25):
            m = rng.choice([2, 3])
            t = rng.randrange(1, 7)
            v = [rng.randrange(2, 2**12) for _ in range(t)]
            assert validate(plan(m, v)) == []

    def test_window_order_violation(self):
        params = CodeParams(m=2, v=(4, 2), h=(2, 2))
        kinds = [viol.condition for viol in validate(params)]
        assert "window-order" in kinds

    def test_first_capacity_violation(self):
        params = CodeParams(m=2, v=(8, 2), h=(2, 1))
        viols = validate(params)
        assert [v.condition for v in viols] == ["first-write-capacity"]
        assert "7" in viols[0].detail

    def test_middle_and_last_capacity_violations(self):
        params = CodeParams(m=2, v=(50, 50, 3), h=(8, 3, 1))
        kinds = {v.condition for v in validate(params)}
        assert "middle-write-capacity" in kinds
        assert "last-write-capacity" in kinds


def test_params_properties():
    params = CodeParams(m=2, v=(7, 2), h=(2, 1))
    assert params.t == 2
    assert params.n == 4
    assert params.erased == 3
    with pytest.raises(DomainError):
        CodeParams(m=2, v=(7, 2), h=(2,))
    with pytest.raises(DomainError):
        CodeParams(m=1, v=(7,), h=(2,))


def test_rate_of_plan_matches_formula():
    params = plan(2, [V56] * 10)
    assert math.isclose(10 * 56 / params.n, 560 / 278)
