#!/usr/bin/env python3
"""Randomized Loewner-order campaigns over every registered theorem tag."""

from opconvex import THEOREM_TAGS, TrialConfig, run_campaign, run_single

cfg = TrialConfig(trials=60, seed=3)
reports = run_campaign(cfg, THEOREM_TAGS)

print(f"{'theorem':<22} {'trials':>6} {'failures':>8} {'worst_slack':>13}")
for rep in reports:
    print(f"{rep.theorem:<22} {rep.trials:>6} {rep.failures:>8} "
          f"{rep.worst_slack:>13.3e}")
print()

# every witness records its (trial_index, redraw) coordinates and the
# seed rule, so the worst trial of any campaign replays exactly
worst = min(reports, key=lambda r: r.worst_slack)
w = worst.witness
print(f"worst campaign: {worst.theorem} at trial_index={w['trial_index']} "
      f"redraw={w['redraw']}")
verdict, replayed = run_single(worst.theorem, TrialConfig(**worst.config),
                               w["trial_index"], w["redraw"])
print(f"recorded slack: {worst.worst_slack!r}")
print(f"replayed slack: {verdict.slack!r}")
print(f"exact match:    {verdict.slack == worst.worst_slack}")
print()

# negative control: the quartic is convex but not matrix convex, and the
# two-isometry Jensen inequality fails for it once the compression mixes
# blocks of different sizes
control = TrialConfig(atom="quartic", dim_m=3, dim_n=2, trials=5000, seed=7)
(rep,) = run_campaign(control, "hp")
cw = rep.witness
print(f"negative control (quartic, m=3, n=2): "
      f"{rep.failures} violations in {rep.trials} trials")
print(f"worst slack {rep.worst_slack:.6f} at trial_index={cw['trial_index']}")
