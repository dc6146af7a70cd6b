"""Regular versus slimmable MoCo pretraining, scored at low-compute widths.

This is the experiment behind acceptance criterion 8. It takes several hours
on one core, and finished runs are reused if it is interrupted.

    python demos/desk_experiment.py --out results/desk_experiment
"""
import argparse
import json
import logging

from slimvit.experiment import DeskExperimentConfig, run_desk_experiment

parser = argparse.ArgumentParser()
parser.add_argument("--out", default="results/desk_experiment")
args = parser.parse_args()
logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

doc = run_desk_experiment(DeskExperimentConfig(), args.out)
cmp = doc["comparison"]
print(f"{'scale':>8} {'regular':>8} {'slimmable':>9}")
for row in cmp["rows"]:
    print(f"{row['scale']:>8g} {row['regular']:8.4f} {row['slimmable']:9.4f}")
print(json.dumps({k: cmp[k] for k in ("passed", "n_wins", "n_low_scales")}))
