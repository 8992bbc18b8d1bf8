"""Python bindings for the chanent simulation library."""

from fractions import Fraction

from ._core import (
    ConfigError,
    StabilizerState,
    __version__,
    area_law_ratio,
    moebius,
    mutual_info_small_t,
    renyi_channel_setup,
    reproduce,
    run_config,
    simulate,
    thermalization_time,
    trajectory_setup_entropies,
    two_copy_twirl_average,
    vn_channel_setup,
)
from . import _core


def _exact(value):
    return str(Fraction(value))


def weingarten(q, dimension):
    """Exact Weingarten values keyed by cycle type."""
    table = _core.weingarten(q, _exact(dimension))
    return {tuple(k): Fraction(v) for k, v in table}


def hanging_u(n, d, p):
    return [Fraction(v) for v in _core.hanging_u(n, _exact(d), _exact(p))]


def attached_w(L, d, p):
    return Fraction(_core.attached_w(L, _exact(d), _exact(p)))


def z_bb_large_t(L, d, p):
    return Fraction(_core.z_bb_large_t(L, _exact(d), _exact(p)))
