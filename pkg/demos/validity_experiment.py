"""Does the combined score actually measure quality?

Twenty connected random graphs are embedded with increasing iteration
budgets; if the score works, more iterations must score better on average.
This runs the reduced preset (tenth-length runs, ten-times temperatures);
drop fast_config for the full-scale version, which takes a minute or so.

Run: python3 demos/validity_experiment.py
"""

from drawqual import fast_config, run_validity_experiment

report = run_validity_experiment(fast_config())
print("iterations   mean overall score")
for cond, mean in zip(report.conditions, report.mean_overall):
    print(f"{cond:>10}   {mean:+.3f}")
print(f"strictly increasing: {report.mean_strictly_increasing()}")
print(f"rank correlation:    {report.rank_correlation:+.2f}")
print(f"graphs improved first to last: {report.improved_first_to_last_fraction():.0%}")
