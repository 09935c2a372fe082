"""Fixed-step explicit integration rules."""

from __future__ import annotations

from collections.abc import Callable

import numpy as np
import numpy.typing as npt

from patchsim.netlist.document import IntegrationMethod

State = npt.NDArray[np.float64]
Derivative = Callable[[State, float], State]


def euler_step(f: Derivative, state: State, t: float, dt: float, k1: State) -> State:
    return state + dt * k1


def rk4_step(f: Derivative, state: State, t: float, dt: float, k1: State) -> State:
    """Classical fourth-order Runge-Kutta; ``k1`` is the derivative at ``(state, t)``."""
    half = 0.5 * dt
    k2 = f(state + half * k1, t + half)
    k3 = f(state + half * k2, t + half)
    k4 = f(state + dt * k3, t + dt)
    return state + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


STEPPERS: dict[IntegrationMethod, Callable[[Derivative, State, float, float, State], State]] = {
    IntegrationMethod.EULER: euler_step,
    IntegrationMethod.RK4: rk4_step,
}

ORDERS: dict[IntegrationMethod, int] = {
    IntegrationMethod.EULER: 1,
    IntegrationMethod.RK4: 4,
}
