"""
Throughput per unit area of a benchmark circuit under a power density cap.
"""

import math

from xcmosbench.base.constants import P_CAP_DEFAULT
from xcmosbench.base.enums import LimitedBy
from xcmosbench.base.errors import InvalidParameterError


class ThroughputResult(object):
    """
    Members:
    --------
    theta_unconstrained : float
        operations per second and m^2 at full rate
    theta_capped : float
        operations per second and m^2 allowed by the power cap
    p_cap : float
        power density cap (W/m^2)
    limited_by : LimitedBy
    p_density_capped : float
        power density at the capped throughput (W/m^2)
    """

    def __init__(self, theta_unconstrained, theta_capped, p_cap, limited_by,
                 p_density_capped):
        self.theta_unconstrained = theta_unconstrained
        self.theta_capped = theta_capped
        self.p_cap = p_cap
        self.limited_by = LimitedBy(limited_by)
        self.p_density_capped = p_density_capped

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        else:
            return False

    def __repr__(self):
        return ('ThroughputResult(theta_capped={t:.4g}, limited_by={b}, '
                'p_cap={p:.4g})').format(t=self.theta_capped, b=self.limited_by.value,
                                         p=self.p_cap)


def throughput_density(c, p_cap=P_CAP_DEFAULT):
    """
    Throughput of the circuit 'c' with and without the power density cap.

    At full rate one result leaves every t_period, so the throughput density
    is 1/(t_period*A_circ).  The cap allows at most p_cap/E_op results per
    second and m^2.  Ties count as delay-limited.

    Parameters
    ----------
    c : CircuitMetrics
    p_cap : float
        W/m^2

    Returns
    -------
    ThroughputResult
    """
    if not p_cap > 0:
        raise InvalidParameterError('Power density cap must be positive', gotStr=p_cap,
                                    expStr='> 0')
    theta = 1.0 / (c.t_period * c.A_circ)
    theta_power = p_cap / c.E_op if c.E_op > 0 else math.inf
    if theta <= theta_power:
        capped, limited_by = theta, LimitedBy.Delay
    else:
        capped, limited_by = theta_power, LimitedBy.Power
    return ThroughputResult(
        theta_unconstrained=theta,
        theta_capped=capped,
        p_cap=p_cap,
        limited_by=limited_by,
        p_density_capped=capped * c.E_op,
    )
