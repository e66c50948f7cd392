"""Campaign cost arithmetic: cost per thousand, per responder, spreading loss.

A mailing of 100,000 pieces cost 50,000 and brought 4,000 responders.
Promotion spent on the 96,000 non-responders is the spreading loss a
better targeting model would shrink.
"""

from scorepotential import (
    CampaignEconomics,
    cost_per_responder,
    cost_per_thousand,
    render_economics_text,
    spreading_loss,
)

campaign = CampaignEconomics(total_cost=50_000, addresses=100_000, responders=4_000)
print(render_economics_text(campaign))

per_thousand = cost_per_thousand(campaign)
per_responder = cost_per_responder(campaign)
loss = spreading_loss(per_thousand, per_responder)
print(f"Exact rationals underneath: {loss.cost_per_action} - "
      f"{loss.cost_per_responder} = {loss.loss}")

# The per-responder figure reconstructs the budget without rounding residue.
assert per_responder * campaign.responders == campaign.total_cost
