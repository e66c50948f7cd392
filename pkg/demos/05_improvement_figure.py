"""Emit the SVG showing the potential curve against the flat benefit line.

Three scenarios of the same campaign: the baseline model (74%), the model
with all responders shifted into the best bucket (97%), and the same shift
with responders at the very bucket top (100%).  The benefit-index
attainment at the traditional cut-off stays at 75% throughout; the hatched
band is the improvement room only the potential measure reveals.
"""

from pathlib import Path

from scorepotential import render_pop_vs_beni_figure

series = [
    ("baseline", 74.0, 75.0),
    ("shifted", 97.0, 75.0),
    ("top of bucket", 100.0, 75.0),
]

svg = render_pop_vs_beni_figure(series)
out = Path(__file__).resolve().parent / "improvement_room.svg"
out.write_text(svg, encoding="utf-8")
print(f"wrote {out}")
