"""Campaign cost arithmetic: cost per thousand, cost per responder, spreading loss.

Money is a currency-agnostic decimal quantity kept as an exact Fraction so
that cost-per-responder times responders reconstructs the total cost without
rounding residue; formatting to decimal strings happens at render time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NoResponders
from .rounding import to_fraction


@dataclass(frozen=True)
class CampaignEconomics:
    """Cost and response figures of one promotion."""

    total_cost: Fraction
    addresses: int
    responders: int

    def __post_init__(self):
        object.__setattr__(self, "total_cost", to_fraction(self.total_cost))
        if self.total_cost < 0:
            raise ValueError("total cost must be non-negative")
        if self.addresses < 1:
            raise ValueError("addresses must be positive")
        if not 0 <= self.responders <= self.addresses:
            raise ValueError("responders must lie in [0, addresses]")


def cost_per_thousand(econ: CampaignEconomics) -> Fraction:
    """Total cost divided by addresses, scaled to one thousand names."""
    return econ.total_cost / econ.addresses * 1000


def cost_per_responder(econ: CampaignEconomics) -> Fraction:
    """Total cost divided by the number of responders."""
    if econ.responders == 0:
        raise NoResponders()
    return econ.total_cost / econ.responders


@dataclass(frozen=True)
class SpreadingLoss:
    """Literal difference of per-action and per-responder cost, operands echoed.

    The two operands carry different denominators; the difference is kept as
    defined rather than reinterpreted.
    """

    cost_per_action: Fraction
    cost_per_responder: Fraction
    loss: Fraction


def spreading_loss(cost_per_action, cost_per_resp) -> SpreadingLoss:
    """Spreading loss: cost per direct-mail action minus cost per responder."""
    action = to_fraction(cost_per_action)
    per_responder = to_fraction(cost_per_resp)
    if action < 0 or per_responder < 0:
        raise ValueError("costs must be non-negative")
    return SpreadingLoss(action, per_responder, action - per_responder)
