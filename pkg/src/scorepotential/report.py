"""Rendering of evaluations and comparisons: text tables, CSV, JSON.

Stored metrics are never altered here; integer half-up rounding of
percentages and indices happens at the string boundary of the text format
only.  Machine formats carry full precision (floats via repr, rationals as
"p/q" strings) and round-trip exactly.
"""

from __future__ import annotations

import csv
import io
import json
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction

from .economics import (
    CampaignEconomics,
    cost_per_responder,
    cost_per_thousand,
    spreading_loss,
)
from .engine import BeniPoint, ComparisonReport, ModelEvaluation
from .errors import NoResponders
from .gains import Bucket, GainsChart
from .rounding import round_half_up
from .sample import CutOff

CHART_HEADERS = [
    "Bucket", "#Resp", "P'↑max", "P'↑min", "P'↑avg", "PoP'marg", "PoP'cum",
    "BenI'marg", "BenI'cum", "BenI'max", "BenI/max",
]

BUCKET_CSV_HEADER = [
    "bucket_no", "names", "responders", "p_up_max", "p_up_min", "p_up_avg",
    "pop_marginal", "pop_cumulative", "beni_marginal", "beni_cumulative",
    "beni_max_cumulative", "attainment_ratio", "row_cutoff",
]

PROFILE_CSV_HEADER = ["cutoff", "beni", "beni_max", "attainment_ratio"]


def percent_cell(value: float) -> str:
    return f"{round_half_up(value)}%"


def index_cell(value: float) -> str:
    return str(round_half_up(value))


def unit_cell(value: float) -> str:
    """Bucket-unit rank sums print as short decimals (23.7, 6.55, 0)."""
    return f"{value:g}"


def rate_percent(value: Fraction) -> str:
    return f"{float(value * 100):g}%"


def money_str(value: Fraction) -> str:
    """Decimal rendering of an exact money amount, half-up at two places."""
    dec = Decimal(value.numerator) / Decimal(value.denominator)
    dec = dec.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)
    text = format(dec, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def _table(headers: list[str], rows: list[list[str]]) -> list[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.rjust(widths[i]) for i, h in enumerate(headers))]
    for row in rows:
        lines.append("  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)))
    return lines


def _chart_rows(chart: GainsChart) -> list[list[str]]:
    rows = []
    for i, b in enumerate(chart.buckets):
        rows.append([
            str(b.bucket_no),
            str(b.responders),
            unit_cell(b.p_up_max),
            unit_cell(b.p_up_min),
            unit_cell(b.p_up_avg),
            percent_cell(b.pop_marginal),
            percent_cell(chart.pop_cumulative[i]),
            index_cell(b.beni_marginal),
            index_cell(chart.beni_cumulative[i]),
            index_cell(chart.beni_max_cumulative[i]),
            percent_cell(chart.attainment_ratio[i]),
        ])
    return rows


def render_evaluation_text(evaluation: ModelEvaluation) -> str:
    chart = evaluation.gains
    lines = [
        f"Model: {evaluation.model_id}",
        f"Buckets #B: {chart.bucket_count}   Sample #X: {chart.sample_size}   "
        f"Response rate R(X): {rate_percent(chart.base_rate)}",
        "",
    ]
    lines.extend(_table(CHART_HEADERS, _chart_rows(chart)))
    p_up_approx = sum(b.p_up_avg for b in chart.buckets)
    lines.extend([
        "",
        f"P↑ = {unit_cell(p_up_approx)}",
        f"P↓ = {unit_cell(chart.p_down_chart)}",
        f"PoP = P↑/P↓ = {percent_cell(chart.pop_approx)}",
        "",
        f"Score potential, exact ranking: {percent_cell(evaluation.pop_exact)}",
        f"Score potential, chart approx:  {percent_cell(evaluation.pop_approx)}"
        f"  [min {percent_cell(evaluation.pop_approx_min)},"
        f" max {percent_cell(evaluation.pop_approx_max)}]",
    ])
    if evaluation.stretch_target is not None:
        verdict = "met" if evaluation.meets_stretch_target else "below target"
        lines.append(
            f"Stretch target {evaluation.stretch_target:g}%: {verdict}"
        )
    if evaluation.degeneracy_flags:
        lines.append("Degeneracy: " + ", ".join(sorted(evaluation.degeneracy_flags)))
    lines.append("")
    profile_rows = [
        [str(cut), index_cell(point.beni), index_cell(point.beni_max),
         percent_cell(point.attainment_ratio)]
        for cut, point in evaluation.beni_profile.items()
    ]
    lines.extend(_table(["Cut-off", "BenI", "BenI max", "Attainment"], profile_rows))
    return "\n".join(lines) + "\n"


def evaluation_to_dict(evaluation: ModelEvaluation) -> dict:
    chart = evaluation.gains
    return {
        "model_id": evaluation.model_id,
        "pop_exact": evaluation.pop_exact,
        "pop_approx": evaluation.pop_approx,
        "pop_approx_min": evaluation.pop_approx_min,
        "pop_approx_max": evaluation.pop_approx_max,
        "stretch_target": evaluation.stretch_target,
        "meets_stretch_target": evaluation.meets_stretch_target,
        "degeneracy_flags": sorted(evaluation.degeneracy_flags),
        "beni_profile": [
            {
                "cutoff": str(cut.fraction),
                "beni": point.beni,
                "beni_max": point.beni_max,
                "attainment_ratio": point.attainment_ratio,
            }
            for cut, point in evaluation.beni_profile.items()
        ],
        "gains": {
            "bucket_count": chart.bucket_count,
            "sample_size": chart.sample_size,
            "base_rate": str(chart.base_rate),
            "spacing": str(chart.spacing),
            "p_down_chart": chart.p_down_chart,
            "pop_approx": chart.pop_approx,
            "pop_min_variant": chart.pop_min_variant,
            "pop_max_variant": chart.pop_max_variant,
            "buckets": [
                {
                    "bucket_no": b.bucket_no,
                    "names": b.names,
                    "responders": b.responders,
                    "p_up_max": b.p_up_max,
                    "p_up_min": b.p_up_min,
                    "p_up_avg": b.p_up_avg,
                    "beni_marginal": b.beni_marginal,
                    "pop_marginal": b.pop_marginal,
                }
                for b in chart.buckets
            ],
            "beni_cumulative": list(chart.beni_cumulative),
            "beni_max_cumulative": list(chart.beni_max_cumulative),
            "attainment_ratio": list(chart.attainment_ratio),
            "pop_cumulative": list(chart.pop_cumulative),
            "row_cutoffs": [str(f) for f in chart.row_cutoffs],
        },
    }


def evaluation_from_dict(data: dict) -> ModelEvaluation:
    g = data["gains"]
    chart = GainsChart(
        buckets=tuple(
            Bucket(
                bucket_no=b["bucket_no"],
                names=b["names"],
                responders=b["responders"],
                p_up_max=b["p_up_max"],
                p_up_min=b["p_up_min"],
                p_up_avg=b["p_up_avg"],
                beni_marginal=b["beni_marginal"],
                pop_marginal=b["pop_marginal"],
            )
            for b in g["buckets"]
        ),
        bucket_count=g["bucket_count"],
        sample_size=g["sample_size"],
        base_rate=Fraction(g["base_rate"]),
        spacing=Fraction(g["spacing"]),
        p_down_chart=g["p_down_chart"],
        pop_approx=g["pop_approx"],
        pop_min_variant=g["pop_min_variant"],
        pop_max_variant=g["pop_max_variant"],
        beni_cumulative=tuple(g["beni_cumulative"]),
        beni_max_cumulative=tuple(g["beni_max_cumulative"]),
        attainment_ratio=tuple(g["attainment_ratio"]),
        pop_cumulative=tuple(g["pop_cumulative"]),
        row_cutoffs=tuple(Fraction(f) for f in g["row_cutoffs"]),
    )
    profile = {
        CutOff(Fraction(entry["cutoff"])): BeniPoint(
            entry["beni"], entry["beni_max"], entry["attainment_ratio"]
        )
        for entry in data["beni_profile"]
    }
    return ModelEvaluation(
        model_id=data["model_id"],
        pop_exact=data["pop_exact"],
        pop_approx=data["pop_approx"],
        pop_approx_min=data["pop_approx_min"],
        pop_approx_max=data["pop_approx_max"],
        gains=chart,
        beni_profile=profile,
        meets_stretch_target=data["meets_stretch_target"],
        stretch_target=data["stretch_target"],
        degeneracy_flags=frozenset(data["degeneracy_flags"]),
    )


def to_json(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _float_str(value: float | None) -> str:
    return "" if value is None else repr(value)


def _bool_str(value: bool | None) -> str:
    return "" if value is None else ("true" if value else "false")


def evaluation_to_csv(
    evaluation: ModelEvaluation, economics: CampaignEconomics | None = None
) -> str:
    chart = evaluation.gains
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    meta = [
        ("model_id", evaluation.model_id),
        ("pop_exact", repr(evaluation.pop_exact)),
        ("pop_approx", repr(evaluation.pop_approx)),
        ("pop_approx_min", repr(evaluation.pop_approx_min)),
        ("pop_approx_max", repr(evaluation.pop_approx_max)),
        ("stretch_target", _float_str(evaluation.stretch_target)),
        ("meets_stretch_target", _bool_str(evaluation.meets_stretch_target)),
        ("degeneracy_flags", ";".join(sorted(evaluation.degeneracy_flags))),
        ("bucket_count", str(chart.bucket_count)),
        ("sample_size", str(chart.sample_size)),
        ("base_rate", str(chart.base_rate)),
        ("spacing", str(chart.spacing)),
        ("p_down_chart", repr(chart.p_down_chart)),
    ]
    writer.writerows(meta)
    writer.writerow([])
    writer.writerow(BUCKET_CSV_HEADER)
    for i, b in enumerate(chart.buckets):
        writer.writerow([
            b.bucket_no, b.names, b.responders,
            repr(b.p_up_max), repr(b.p_up_min), repr(b.p_up_avg),
            repr(b.pop_marginal), repr(chart.pop_cumulative[i]),
            repr(b.beni_marginal), repr(chart.beni_cumulative[i]),
            repr(chart.beni_max_cumulative[i]), repr(chart.attainment_ratio[i]),
            str(chart.row_cutoffs[i]),
        ])
    writer.writerow([])
    writer.writerow(PROFILE_CSV_HEADER)
    for cut, point in evaluation.beni_profile.items():
        writer.writerow([
            str(cut.fraction), repr(point.beni), repr(point.beni_max),
            repr(point.attainment_ratio),
        ])
    if economics is not None:
        writer.writerow([])
        summary = economics_summary(economics)
        loss = summary.pop("spreading_loss")
        if loss is not None:
            summary["spreading_loss"] = loss["loss"]
        for key, value in summary.items():
            writer.writerow([key, "" if value is None else value])
    return out.getvalue()


def evaluation_from_csv(text: str) -> ModelEvaluation:
    sections: list[list[list[str]]] = [[]]
    for row in csv.reader(io.StringIO(text)):
        if not row:
            sections.append([])
        else:
            sections[-1].append(row)
    sections = [s for s in sections if s]
    if len(sections) < 3:
        raise ValueError("expected meta, bucket, and profile sections")
    meta = {row[0]: row[1] for row in sections[0]}

    bucket_rows = sections[1]
    if bucket_rows[0] != BUCKET_CSV_HEADER:
        raise ValueError("unexpected bucket header")
    buckets, pop_cum, beni_cum, beni_max_cum, attainment, cutoffs = [], [], [], [], [], []
    for row in bucket_rows[1:]:
        buckets.append(Bucket(
            bucket_no=int(row[0]), names=int(row[1]), responders=int(row[2]),
            p_up_max=float(row[3]), p_up_min=float(row[4]), p_up_avg=float(row[5]),
            beni_marginal=float(row[8]), pop_marginal=float(row[6]),
        ))
        pop_cum.append(float(row[7]))
        beni_cum.append(float(row[9]))
        beni_max_cum.append(float(row[10]))
        attainment.append(float(row[11]))
        cutoffs.append(Fraction(row[12]))

    profile_rows = sections[2]
    if profile_rows[0] != PROFILE_CSV_HEADER:
        raise ValueError("unexpected profile header")
    profile = {
        CutOff(Fraction(row[0])): BeniPoint(float(row[1]), float(row[2]), float(row[3]))
        for row in profile_rows[1:]
    }

    chart = GainsChart(
        buckets=tuple(buckets),
        bucket_count=int(meta["bucket_count"]),
        sample_size=int(meta["sample_size"]),
        base_rate=Fraction(meta["base_rate"]),
        spacing=Fraction(meta["spacing"]),
        p_down_chart=float(meta["p_down_chart"]),
        pop_approx=float(meta["pop_approx"]),
        pop_min_variant=float(meta["pop_approx_min"]),
        pop_max_variant=float(meta["pop_approx_max"]),
        beni_cumulative=tuple(beni_cum),
        beni_max_cumulative=tuple(beni_max_cum),
        attainment_ratio=tuple(attainment),
        pop_cumulative=tuple(pop_cum),
        row_cutoffs=tuple(cutoffs),
    )
    return ModelEvaluation(
        model_id=meta["model_id"],
        pop_exact=float(meta["pop_exact"]),
        pop_approx=float(meta["pop_approx"]),
        pop_approx_min=float(meta["pop_approx_min"]),
        pop_approx_max=float(meta["pop_approx_max"]),
        gains=chart,
        beni_profile=profile,
        meets_stretch_target=(
            None if meta["meets_stretch_target"] == ""
            else meta["meets_stretch_target"] == "true"
        ),
        stretch_target=(
            None if meta["stretch_target"] == "" else float(meta["stretch_target"])
        ),
        degeneracy_flags=frozenset(
            f for f in meta["degeneracy_flags"].split(";") if f
        ),
    )


def render_combined_chart(evaluation: ModelEvaluation, fmt: str = "text") -> str:
    """Render one evaluation as the combined BenI/PoP document."""
    if fmt == "text":
        return render_evaluation_text(evaluation)
    if fmt == "json":
        return to_json(evaluation_to_dict(evaluation))
    if fmt == "csv":
        return evaluation_to_csv(evaluation)
    raise ValueError(f"unknown format {fmt!r}")


def comparison_to_dict(report: ComparisonReport) -> dict:
    return {
        "ranking": list(report.ranking),
        "below_target": list(report.below_target),
        "evaluations": [evaluation_to_dict(e) for e in report.evaluations],
    }


def comparison_to_csv(report: ComparisonReport) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([
        "rank", "model_id", "pop_exact", "pop_approx", "pop_approx_min",
        "pop_approx_max", "stretch_target", "meets_stretch_target",
    ])
    for rank, evaluation in enumerate(report.evaluations, start=1):
        writer.writerow([
            rank, evaluation.model_id, repr(evaluation.pop_exact),
            repr(evaluation.pop_approx), repr(evaluation.pop_approx_min),
            repr(evaluation.pop_approx_max),
            _float_str(evaluation.stretch_target),
            _bool_str(evaluation.meets_stretch_target),
        ])
    return out.getvalue()


def render_comparison_text(report: ComparisonReport) -> str:
    rows = []
    for rank, evaluation in enumerate(report.evaluations, start=1):
        gate = ""
        if evaluation.meets_stretch_target is not None:
            gate = "met" if evaluation.meets_stretch_target else "below"
        rows.append([
            str(rank), evaluation.model_id,
            percent_cell(evaluation.pop_exact),
            percent_cell(evaluation.pop_approx),
            gate,
        ])
    lines = ["Ranking by exact score potential", ""]
    lines.extend(_table(["#", "Model", "PoP", "PoP'", "Target"], rows))
    if report.below_target:
        lines.append("")
        lines.append("Below stretch target: " + ", ".join(report.below_target))
    return "\n".join(lines) + "\n"


def render_comparison(report: ComparisonReport, fmt: str = "text") -> str:
    if fmt == "text":
        return render_comparison_text(report)
    if fmt == "json":
        return to_json(comparison_to_dict(report))
    if fmt == "csv":
        return comparison_to_csv(report)
    raise ValueError(f"unknown format {fmt!r}")


def economics_summary(econ: CampaignEconomics) -> dict:
    """All cost figures for one campaign; exact rationals as strings."""
    per_thousand = cost_per_thousand(econ)
    try:
        per_responder: Fraction | None = cost_per_responder(econ)
    except NoResponders:
        per_responder = None
    summary = {
        "total_cost": str(econ.total_cost),
        "addresses": econ.addresses,
        "responders": econ.responders,
        "cost_per_thousand": str(per_thousand),
        "cost_per_responder": None if per_responder is None else str(per_responder),
        "spreading_loss": None,
    }
    if per_responder is not None:
        loss = spreading_loss(per_thousand, per_responder)
        summary["spreading_loss"] = {
            "cost_per_action": str(loss.cost_per_action),
            "cost_per_responder": str(loss.cost_per_responder),
            "loss": str(loss.loss),
        }
    return summary


def render_economics_text(econ: CampaignEconomics) -> str:
    lines = [
        "Campaign economics",
        f"Total cost: {money_str(econ.total_cost)}   Addresses: {econ.addresses}   "
        f"Responders: {econ.responders}",
        f"Cost per thousand: {money_str(cost_per_thousand(econ))}",
    ]
    if econ.responders == 0:
        lines.append("Cost per responder: undefined (no responders)")
    else:
        per_responder = cost_per_responder(econ)
        loss = spreading_loss(cost_per_thousand(econ), per_responder)
        lines.append(f"Cost per responder: {money_str(per_responder)}")
        lines.append(
            "Spreading loss (per action - per responder): "
            f"{money_str(loss.cost_per_action)} - {money_str(loss.cost_per_responder)}"
            f" = {money_str(loss.loss)}"
        )
    return "\n".join(lines) + "\n"
