"""Walk through the core metrics on a ten-name test sample.

A targeting model scored ten names; three of them responded.  The benefit
index needs a cut-off to say anything, while the score potential grades the
whole ranking at once.
"""

from fractions import Fraction

from scorepotential import (
    CutOff,
    ScoredRecord,
    auc_crosscheck,
    beni,
    beni_at_cutoff,
    beni_max,
    pop_denominator_exact,
    pop_exact,
    pop_numerator_exact,
    rank_sample,
)

records = [
    ScoredRecord("a10", 4000, 0),
    ScoredRecord("a09", 3999, 1),
    ScoredRecord("a08", 3031, 0),
    ScoredRecord("a07", 2900, 0),
    ScoredRecord("a06", 2500, 1),
    ScoredRecord("a05", 2455, 1),
    ScoredRecord("a04", 2100, 0),
    ScoredRecord("a03", 1900, 0),
    ScoredRecord("a02", 1600, 0),
    ScoredRecord("a01", 500, 0),
]

sample = rank_sample(records)
print("Ranked sample (rank 1 = lowest score):")
for rank, rec in zip(sample.ranks, sample.records):
    marker = "responder" if rec.response else ""
    print(f"  rank {rank:4.1f}  score {rec.score:6.0f}  {marker}")

print()
print(f"Responder rank sum P_up       = {pop_numerator_exact(sample):g}")
print(f"Best achievable sum P_down    = {pop_denominator_exact(sample):g}")
print(f"Score potential PoP           = {pop_exact(sample):.2f}%")
print(f"Mann-Whitney AUC (crosscheck) = {auc_crosscheck(sample):.4f}")

print()
print("The benefit index, by contrast, moves with the chosen cut-off:")
for cut in (CutOff(Fraction(3, 10)), CutOff(Fraction(1, 2)), CutOff(Fraction(1))):
    value = beni_at_cutoff(sample, cut)
    ceiling = beni_max(cut, sample.response_rate_r)
    print(f"  cut-off {str(cut):>4}: BenI {value:6.1f}  (ceiling {ceiling:6.1f})")

print()
print("A classic worked pair: a 15% pass-set rate on an 8% base rate gives")
print(f"BenI = {beni(Fraction(15, 100), Fraction(8, 100)):g}, "
      f"against a ceiling of {beni_max(CutOff(Fraction(2, 5)), Fraction(8, 100)):g} "
      "at a 40% cut-off.")
