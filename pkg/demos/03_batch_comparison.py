"""Programmed evaluation of a batch of models with a stretch target.

Generates synthetic test samples of increasing quality, evaluates each one,
ranks them by exact score potential, and gates them against a stretched
target of 80%.  This is the automated path: no chart reading involved.
"""

from scorepotential import (
    EvaluationContext,
    compare_models,
    evaluate_model,
    generate_sample,
    rank_sample,
    render_comparison,
)

evaluations = []
for seed, quality in enumerate([0.0, 0.35, 0.6, 0.8, 0.95, 1.0]):
    records = generate_sample(size=200, base_rate="0.05", quality=quality, seed=seed)
    ctx = EvaluationContext(sample=rank_sample(records), stretch_target=80.0)
    evaluations.append(evaluate_model(ctx, model_id=f"model_q{quality:.2f}"))

report = compare_models(evaluations)
print(render_comparison(report, "text"))

print()
print("Gate detail:")
for evaluation in report.evaluations:
    verdict = "meets" if evaluation.meets_stretch_target else "misses"
    print(
        f"  {evaluation.model_id}: PoP {evaluation.pop_exact:6.2f}%  "
        f"{verdict} the 80% stretch target"
    )
