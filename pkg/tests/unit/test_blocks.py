"""Unit tests for block semantics and the kind registry."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from patchsim.blocks import (
    DIGIT_HIGH,
    DIGIT_LOW,
    KINDS,
    AdcBlock,
    AdderBlock,
    AfgBlock,
    ContactStyle,
    DacBlock,
    DiskIntegratorParams,
    IntegratorBlock,
    LimiterBlock,
    LimiterMode,
    MultBlock,
    PotBlock,
    StepGenBlock,
    StepSchedule,
    adc,
    afg_breakpoints,
    afg_max_error,
    dac,
    disk_rotations,
    eval_adder,
    eval_afg,
    eval_fourier_square,
    eval_inv,
    eval_limiter,
    eval_mult,
    eval_pot,
    eval_stepgen,
    gibbs_overshoot,
    instantiate,
    locate_kind,
)
from patchsim.core import TimeGrid, Trace
from patchsim.errors import BlockParamError, ContractError, MalformedDigitError, OutOfRangeError, UnknownKindError
from patchsim.netlist.document import BlockDecl

finite = st.floats(min_value=-1e9, max_value=1e9, allow_nan=False, allow_infinity=False)
finite_small = st.floats(min_value=-100.0, max_value=100.0)

# ---------------------------------------------------------------------------
# Continuous elements
# ---------------------------------------------------------------------------


class TestContinuous:
    """Test cases for adder, pot, inverter and multiplier."""

    def test_adder_sums(self) -> None:
        """Test a plain three-input sum."""
        assert eval_adder([1.0, 2.0, 3.0]) == 6.0

    def test_adder_springmass_initial_value(self) -> None:
        """Test 16x + 3x' - y at t=0 of the spring-mass system."""
        assert eval_adder([32.0, -1.92, 80.0]) == pytest.approx(110.08, abs=1e-12)

    def test_adder_needs_two_inputs(self) -> None:
        """Test that fewer than two inputs is a contract error."""
        with pytest.raises(ContractError):
            eval_adder([1.0])

    @given(finite)
    def test_adder_inverse_pair_is_zero(self, a: float) -> None:
        """Test that a + (-a) sums to exactly zero."""
        assert eval_adder([a, -a]) == 0.0

    @given(st.lists(finite, min_size=2, max_size=8).flatmap(lambda xs: st.tuples(st.just(xs), st.permutations(xs))))
    def test_adder_ignores_input_order(self, inputs_and_shuffled: tuple[list[float], list[float]]) -> None:
        """Test that any permutation of the inputs gives the same sum."""
        inputs, shuffled = inputs_and_shuffled
        assert eval_adder(shuffled) == eval_adder(inputs)

    @given(finite, finite, finite)
    def test_adder_grouping(self, a: float, b: float, c: float) -> None:
        """Test that nesting adders matches one three-input adder up to rounding."""
        nested = eval_adder([eval_adder([a, b]), c])
        assert nested == pytest.approx(eval_adder([a, b, c]), abs=1e-6)

    @pytest.mark.parametrize(("gain", "value", "expected"), [(16.0, 2.0, 32.0), (3.0, -0.64, -1.92), (1.0, 4.5, 4.5)])
    def test_pot(self, gain: float, value: float, expected: float) -> None:
        """Test pot gains from the spring-mass coefficients."""
        assert eval_pot(gain, value) == pytest.approx(expected)

    def test_pot_gain_must_be_finite(self) -> None:
        """Test that an infinite gain is refused."""
        with pytest.raises(ValidationError):
            PotBlock(gain=math.inf)

    def test_inverter(self) -> None:
        """Test sign inversion and its involution."""
        assert eval_inv(5.0) == -5.0
        assert eval_inv(0.0) == 0.0
        assert eval_inv(eval_inv(3.25)) == 3.25

    def test_multiplier(self) -> None:
        """Test the scaled product of two inputs."""
        assert eval_mult(3.0, -2.0) == -6.0
        assert MultBlock(scale=0.5).evaluate([4.0, 3.0], 0.0) == 6.0

    def test_block_arity_metadata(self) -> None:
        """Test the class-level arity descriptions."""
        assert AdderBlock.accepts(5) and not AdderBlock.accepts(1)
        assert IntegratorBlock.arity_text() == "exactly 1"
        assert IntegratorBlock.stateful


# ---------------------------------------------------------------------------
# Limiters, function generators, step generators
# ---------------------------------------------------------------------------


class TestLimiter:
    """Test cases for eval_limiter."""

    @pytest.mark.parametrize(
        ("mode", "kwargs", "value", "expected"),
        [
            (LimiterMode.ZERO, {}, -1.0, 0.0),
            (LimiterMode.ZERO, {}, 2.0, 2.0),
            (LimiterMode.ZERO, {"threshold": 1.0}, 2.5, 1.5),
            (LimiterMode.DEAD, {"half_width": 0.5}, 0.3, 0.0),
            (LimiterMode.DEAD, {"half_width": 0.5}, 1.0, 0.5),
            (LimiterMode.DEAD, {"half_width": 0.5}, -1.0, -0.5),
            (LimiterMode.SAT, {"level": 1.0}, 3.0, 1.0),
            (LimiterMode.SAT, {"level": 1.0}, -3.0, -1.0),
            (LimiterMode.SAT, {"level": 1.0}, 0.25, 0.25),
            (LimiterMode.BANG, {"level": 2.0}, -0.1, -2.0),
            (LimiterMode.BANG, {"level": 2.0}, 0.1, 2.0),
            (LimiterMode.BANG, {"level": 2.0}, 0.0, 0.0),
        ],
    )
    def test_modes(self, mode: LimiterMode, kwargs: dict[str, float], value: float, expected: float) -> None:
        """Test each limiter mode against its definition."""
        assert eval_limiter(mode, value, **kwargs) == expected

    @given(finite, st.floats(min_value=0.0, max_value=1e3))
    def test_dead_zone_is_odd(self, value: float, half_width: float) -> None:
        """Test f(-x) == -f(x) for the dead-zone limiter."""
        out = eval_limiter(LimiterMode.DEAD, value, half_width=half_width)
        assert eval_limiter(LimiterMode.DEAD, -value, half_width=half_width) == -out

    @given(finite, finite, st.floats(min_value=1e-3, max_value=1e3))
    def test_saturation_monotone_and_bounded(self, a: float, b: float, level: float) -> None:
        """Test that saturation never reverses order and stays within +-level."""
        lo, hi = sorted((a, b))
        out_lo = eval_limiter(LimiterMode.SAT, lo, level=level)
        out_hi = eval_limiter(LimiterMode.SAT, hi, level=level)
        assert out_lo <= out_hi
        assert -level <= out_lo <= level
        assert -level <= out_hi <= level

    def test_block_accepts_mode_names(self) -> None:
        """Test that the block reads its mode from a netlist identifier."""
        block = LimiterBlock.model_validate({"mode": "dead", "half_width": 0.5})
        assert block.evaluate([1.0], 0.0) == 0.5
        assert not LimiterBlock.smooth

    def test_unknown_mode_rejected(self) -> None:
        """Test that an unknown mode fails validation."""
        with pytest.raises(ValidationError):
            LimiterBlock.model_validate({"mode": "clip"})


class TestAfg:
    """Test cases for the arbitrary function generator."""

    def test_linear_segment(self) -> None:
        """Test interpolation on one segment."""
        assert eval_afg([(0.0, 0.0), (1.0, 1.0)], 0.5) == 0.5

    def test_clamps_outside_range(self) -> None:
        """Test that inputs beyond the breakpoints hold the end values."""
        assert eval_afg([(0.0, 0.0), (1.0, 1.0)], 2.0) == 1.0
        assert eval_afg([(0.0, 0.0), (1.0, 1.0)], -2.0) == 0.0

    def test_sine_from_five_breakpoints(self) -> None:
        """Test that five samples of sin on [0, pi] stay within 0.08 of it."""
        breakpoints = afg_breakpoints(math.sin, 0.0, math.pi, 5)
        assert [x for x, _ in breakpoints] == pytest.approx([0.0, math.pi / 4, math.pi / 2, 3 * math.pi / 4, math.pi])
        assert afg_max_error(breakpoints, math.sin) <= 0.08

    def test_more_breakpoints_approximate_better(self) -> None:
        """Test that the error shrinks as breakpoints are added."""
        errors = [afg_max_error(afg_breakpoints(math.sin, 0.0, math.pi, n), math.sin) for n in (3, 5, 9, 17)]
        assert errors == sorted(errors, reverse=True)

    @given(st.data())
    def test_hits_breakpoint_ordinates_exactly(self, data: st.DataObject) -> None:
        """Test that each breakpoint abscissa returns its ordinate unchanged."""
        xs = sorted(data.draw(st.lists(st.integers(-1000, 1000), min_size=2, max_size=10, unique=True)))
        ys = data.draw(st.lists(finite, min_size=len(xs), max_size=len(xs)))
        breakpoints = [(float(x), y) for x, y in zip(xs, ys)]
        for x, y in breakpoints:
            assert eval_afg(breakpoints, x) == y

    @given(st.data())
    def test_monotone_breakpoints_give_monotone_output(self, data: st.DataObject) -> None:
        """Test that non-decreasing ordinates yield a non-decreasing function."""
        xs = sorted(data.draw(st.lists(st.integers(-1000, 1000), min_size=2, max_size=10, unique=True)))
        ys = sorted(data.draw(st.lists(st.integers(-1000, 1000), min_size=len(xs), max_size=len(xs))))
        breakpoints = [(float(x), float(y)) for x, y in zip(xs, ys)]
        query = st.floats(min_value=-1500.0, max_value=1500.0)
        lo, hi = sorted((data.draw(query), data.draw(query)))
        assert eval_afg(breakpoints, lo) <= eval_afg(breakpoints, hi)

    def test_needs_two_breakpoints(self) -> None:
        """Test that one breakpoint is a contract error."""
        with pytest.raises(ContractError):
            eval_afg([(0.0, 1.0)], 0.0)

    def test_block_rejects_unsorted_abscissae(self) -> None:
        """Test that the block validates increasing abscissae."""
        with pytest.raises(ValidationError):
            AfgBlock(xs=(0.0, 2.0, 1.0), ys=(0.0, 1.0, 2.0))

    def test_block_evaluates(self) -> None:
        """Test the block form against the function form."""
        block = AfgBlock(xs=(0.0, 1.0, 3.0), ys=(0.0, 2.0, 0.0))
        assert block.evaluate([2.0], 0.0) == eval_afg(block.breakpoints, 2.0) == 1.0


class TestStepGen:
    """Test cases for eval_stepgen and StepSchedule."""

    schedule = StepSchedule(segments=((0.0, 9.6), (1.0, 7.5), (2.0, 2.1), (3.0, 5.9)))

    def test_levels_between_jumps(self) -> None:
        """Test the voltage held between switch positions."""
        assert eval_stepgen(self.schedule, 0.5) == 9.6
        assert eval_stepgen(self.schedule, 2.5) == 2.1
        assert eval_stepgen(self.schedule, 10.0) == 5.9

    def test_right_continuous_at_jump(self) -> None:
        """Test that the new level applies at the jump time."""
        assert eval_stepgen(self.schedule, 1.0) == 7.5

    def test_single_segment_is_constant(self) -> None:
        """Test a degenerate one-level schedule."""
        single = StepSchedule(segments=((0.0, 3.0),))
        assert {eval_stepgen(single, t) for t in (0.0, 1.0, 1e6)} == {3.0}

    def test_make_before_break_averages_during_overlap(self) -> None:
        """Test that shorted contacts give the mean of adjacent levels."""
        mbb = self.schedule.model_copy(update={"contact": ContactStyle.MAKE_BEFORE_BREAK, "overlap": 0.1})
        assert eval_stepgen(mbb, 1.05) == pytest.approx(8.55)
        assert eval_stepgen(mbb, 1.2) == 7.5

    def test_negative_time_is_range_error(self) -> None:
        """Test that t < 0 is outside the schedule."""
        with pytest.raises(OutOfRangeError):
            eval_stepgen(self.schedule, -0.5)

    @pytest.mark.parametrize(
        "segments",
        [((0.5, 1.0),), ((0.0, 1.0), (0.0, 2.0)), ((0.0, 1.0), (2.0, 2.0), (1.0, 3.0)), ()],
    )
    def test_invalid_schedules(self, segments: tuple[tuple[float, float], ...]) -> None:
        """Test that a schedule must start at 0 and increase strictly."""
        with pytest.raises(ValidationError):
            StepSchedule(segments=segments)

    def test_overlap_shorter_than_segment(self) -> None:
        """Test that an overlap spanning a whole segment is refused."""
        with pytest.raises(ValidationError):
            StepSchedule(segments=((0.0, 1.0), (0.5, 2.0)), contact=ContactStyle.MAKE_BEFORE_BREAK, overlap=0.5)

    def test_block_matches_schedule(self) -> None:
        """Test the netlist block against the schedule function."""
        block = StepGenBlock(times=(0.0, 1.0, 2.0, 3.0), levels=(9.6, 7.5, 2.1, 5.9))
        assert block.schedule == self.schedule
        for t in (0.0, 0.99, 1.0, 2.5, 7.0):
            assert block.evaluate([], t) == eval_stepgen(self.schedule, t)

    def test_block_length_mismatch(self) -> None:
        """Test that times and levels must pair up."""
        with pytest.raises(ValidationError):
            StepGenBlock(times=(0.0, 1.0), levels=(1.0,))


# ---------------------------------------------------------------------------
# Sources
# ---------------------------------------------------------------------------


class TestFourierSquare:
    """Test cases for the Fourier partial sum of a square wave."""

    def test_scalar_and_array_agree(self) -> None:
        """Test that vectorised and scalar evaluation match."""
        ts = np.array([0.1, 0.25, 0.4])
        np.testing.assert_allclose(eval_fourier_square(ts, 7), [eval_fourier_square(float(t), 7) for t in ts])

    def test_quarter_period_near_level(self) -> None:
        """Test that the sum approaches the square level away from jumps."""
        assert eval_fourier_square(0.25, 200) == pytest.approx(1.0, abs=5e-3)
        assert eval_fourier_square(0.75, 200) == pytest.approx(-1.0, abs=5e-3)

    def test_overshoot_for_fifty_terms(self) -> None:
        """Test the peak of the 50-term sum."""
        assert 1.17 <= gibbs_overshoot(50) <= 1.19

    @pytest.mark.parametrize("n_terms", [10, 25, 50, 100])
    def test_overshoot_does_not_vanish(self, n_terms: int) -> None:
        """Test that adding terms never removes the jump overshoot."""
        assert gibbs_overshoot(n_terms) > 1.17

    def test_overshoot_scales_with_amplitude(self) -> None:
        """Test that the relative overshoot ignores amplitude and period."""
        assert gibbs_overshoot(50, period=2.0, amplitude=3.0) == pytest.approx(gibbs_overshoot(50), rel=1e-6)

    @pytest.mark.parametrize("amplitude", [0.0, -1.0, math.nan])
    def test_overshoot_needs_positive_amplitude(self, amplitude: float) -> None:
        """Test that a zero, negative or NaN amplitude is a contract error."""
        with pytest.raises(ContractError, match="amplitude"):
            gibbs_overshoot(50, amplitude=amplitude)

    def test_needs_one_term(self) -> None:
        """Test that zero terms is a contract error."""
        with pytest.raises(ContractError):
            eval_fourier_square(0.1, 0)


class TestDiskIntegrator:
    """Test cases for disk_rotations."""

    def test_half_sine_gives_two_rotations(self) -> None:
        """Test that integrating sin over [0, pi] turns disk B twice."""
        grid = TimeGrid.from_span(math.pi, 1e-3)
        position = Trace(grid=grid, values=np.sin(grid.times()), name="R")
        assert disk_rotations(position, DiskIntegratorParams()) == pytest.approx(2.0, abs=1e-4)

    def test_opposite_side_turns_backwards(self) -> None:
        """Test that a negative position reverses the count."""
        grid = TimeGrid(dt=0.5, n_steps=4)
        position = Trace(grid=grid, values=[-1.0] * 5, name="R")
        assert disk_rotations(position, DiskIntegratorParams(omega_a=2.0)) == pytest.approx(-4.0)

    @given(
        st.lists(finite_small, min_size=2, max_size=50),
        finite_small,
        st.floats(min_value=0.01, max_value=100.0),
    )
    def test_linear_in_position_and_gain(self, values: list[float], scale: float, gain: float) -> None:
        """Test that scaling the position or the gain scales the rotation count."""
        grid = TimeGrid(dt=0.1, n_steps=len(values) - 1)
        position = Trace(grid=grid, values=values, name="R")
        scaled = Trace(grid=grid, values=[scale * v for v in values], name="R")
        base = disk_rotations(position, DiskIntegratorParams())
        tol = 1e-9 * (1.0 + abs(scale) * gain) * (1.0 + sum(abs(v) for v in values))
        assert disk_rotations(scaled, DiskIntegratorParams()) == pytest.approx(scale * base, abs=tol)
        assert disk_rotations(position, DiskIntegratorParams(gain=gain)) == pytest.approx(gain * base, abs=tol)

    @given(st.lists(st.tuples(finite_small, finite_small), min_size=2, max_size=50))
    def test_additive_in_position(self, pairs: list[tuple[float, float]]) -> None:
        """Test that the count for a summed position is the sum of the counts."""
        grid = TimeGrid(dt=0.1, n_steps=len(pairs) - 1)
        first = Trace(grid=grid, values=[a for a, _ in pairs], name="R")
        second = Trace(grid=grid, values=[b for _, b in pairs], name="R")
        total = Trace(grid=grid, values=[a + b for a, b in pairs], name="R")
        params = DiskIntegratorParams()
        expected = disk_rotations(first, params) + disk_rotations(second, params)
        assert disk_rotations(total, params) == pytest.approx(expected, abs=1e-9 * (1.0 + 200.0 * len(pairs)))


# ---------------------------------------------------------------------------
# Conversion
# ---------------------------------------------------------------------------


class TestConversion:
    """Test cases for adc, dac and the per-bit converter block."""

    @pytest.mark.parametrize(
        ("value", "digits"),
        [(7.0, (0.0, 5.0, 5.0, 5.0)), (9.0, (5.0, 0.0, 0.0, 5.0)), (10.0, (5.0, 0.0, 5.0, 0.0))],
    )
    def test_adc_codes(self, value: float, digits: tuple[float, ...]) -> None:
        """Test 4-bit codes with 0 V and 5 V digit lines."""
        assert adc(value, 4) == digits
        assert dac(digits) == value

    def test_adc_rounds_half_away_from_zero(self) -> None:
        """Test rounding of a value between codes."""
        assert dac(adc(6.5, 4)) == 7.0
        assert dac(adc(6.49, 4)) == 6.0

    @pytest.mark.parametrize("value", [16.0, -1.0, math.inf, math.nan])
    def test_adc_out_of_range(self, value: float) -> None:
        """Test values outside a 4-bit word."""
        with pytest.raises(OutOfRangeError):
            adc(value, 4)

    def test_adc_bit_count_bounds(self) -> None:
        """Test that a zero-bit word is refused."""
        with pytest.raises(OutOfRangeError):
            adc(1.0, 0)

    def test_dac_rejects_ambiguous_voltage(self) -> None:
        """Test that 2.5 V is neither digit."""
        with pytest.raises(MalformedDigitError):
            dac([5.0, 2.5])

    def test_dac_tolerates_small_offsets(self) -> None:
        """Test that digit lines within half a volt still read."""
        assert dac([4.7, 0.3, 5.2]) == 5.0

    @settings(max_examples=300, deadline=None)
    @given(st.integers(min_value=1, max_value=16).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2**n - 1))))
    def test_round_trip_is_identity(self, bits_and_code: tuple[int, int]) -> None:
        """Test dac(adc(x)) == x for every representable integer."""
        n_bits, code = bits_and_code
        assert dac(adc(float(code), n_bits)) == code

    @settings(max_examples=1000, deadline=None)
    @given(st.data())
    def test_round_trip_rounds_to_quantum(self, data: st.DataObject) -> None:
        """Test dac(adc(v)) == round(v/quantum)*quantum over the converter range."""
        n_bits = data.draw(st.integers(min_value=1, max_value=16))
        quantum = data.draw(st.sampled_from([0.1, 0.25, 0.5, 1.0, 2.0, 5.0]))
        value = data.draw(st.floats(min_value=0.0, max_value=(2**n_bits - 1) * quantum))
        code = math.floor(value / quantum + 0.5)
        assert dac(adc(value, n_bits, quantum), quantum) == code * quantum

    def test_quantum_scales_code(self) -> None:
        """Test a quantum other than one."""
        assert dac(adc(0.75, 3, quantum=0.25), quantum=0.25) == 0.75

    def test_block_saturates(self) -> None:
        """Test that the running converter clamps instead of raising."""
        msb = AdcBlock(n_bits=4, bit=0)
        lsb = AdcBlock(n_bits=4, bit=3)
        assert msb.evaluate([100.0], 0.0) == DIGIT_HIGH
        assert lsb.evaluate([100.0], 0.0) == DIGIT_HIGH
        assert msb.evaluate([-3.0], 0.0) == DIGIT_LOW
        assert lsb.evaluate([7.0], 0.0) == DIGIT_HIGH

    def test_block_bit_inside_word(self) -> None:
        """Test that bit must index the word."""
        with pytest.raises(ValidationError):
            AdcBlock(n_bits=4, bit=4)

    def test_dac_block(self) -> None:
        """Test the reassembling block."""
        assert DacBlock().evaluate([0.0, 5.0, 5.0, 5.0], 0.0) == 7.0


# ---------------------------------------------------------------------------
# Registry and instantiation
# ---------------------------------------------------------------------------


class TestRegistry:
    """Test cases for locate_kind and instantiate."""

    def test_every_kind_registered(self) -> None:
        """Test the full set of netlist kinds."""
        assert set(KINDS) == {
            "const",
            "sine_src",
            "fourier_square_src",
            "adder",
            "inv",
            "pot",
            "mult",
            "int",
            "limiter",
            "afg",
            "stepgen",
            "adc",
            "dac",
        }

    def test_locate_kind(self) -> None:
        """Test resolving a tag to its class."""
        assert locate_kind("pot") is PotBlock

    def test_unknown_kind(self) -> None:
        """Test that an unknown tag carries its location."""
        with pytest.raises(UnknownKindError) as exc_info:
            locate_kind("flux", line=4, column=7)
        assert exc_info.value.line == 4
        assert exc_info.value.kind == "flux"

    def test_instantiate_builds_block(self) -> None:
        """Test that a declaration becomes a configured evaluator."""
        block = instantiate(BlockDecl(name="P16", kind="pot", params={"gain": 16.0}, inputs=("X",), output="KX"))
        assert isinstance(block, PotBlock)
        assert block.evaluate([2.0], 0.0) == 32.0

    def test_instantiate_reports_full_key(self) -> None:
        """Test the dotted key of a failed parameter."""
        decl = BlockDecl(name="P16", kind="pot", params={"gain": "fast"}, inputs=("X",), output="KX", line=3)
        with pytest.raises(BlockParamError) as exc_info:
            instantiate(decl)
        assert exc_info.value.full_key == "P16.gain"
        assert exc_info.value.line == 3
        assert isinstance(exc_info.value.__cause__, ValidationError)
        assert "full_key: P16.gain" in str(exc_info.value)

    def test_instantiate_indexes_list_params(self) -> None:
        """Test bracket notation for an element of a list parameter."""
        decl = BlockDecl(name="A1", kind="afg", params={"xs": (0.0, 1.0), "ys": (0.0, math.inf)}, output="Y")
        with pytest.raises(BlockParamError) as exc_info:
            instantiate(decl)
        assert exc_info.value.full_key == "A1.ys[1]"

    def test_unknown_parameter(self) -> None:
        """Test that unexpected keys are rejected."""
        decl = BlockDecl(name="I1", kind="int", params={"ic": 0.0, "gain": 2.0}, inputs=("X",), output="Y")
        with pytest.raises(BlockParamError) as exc_info:
            instantiate(decl)
        assert exc_info.value.full_key == "I1.gain"


@settings(max_examples=200, deadline=None)
@given(finite, finite)
def test_mult_is_commutative(a: float, b: float) -> None:
    """Test that the multiplier does not care about input order."""
    assert eval_mult(a, b) == eval_mult(b, a)
