"""Train a tiny encoder two ways and compare them across widths.

Generates a small synthetic dataset, pretrains vit-micro with MoCo both
regularly and with the sandwich step, then prints frozen-feature KNN accuracy
at a handful of widths. Takes a few minutes on one core.

    python demos/quickstart.py [--epochs 5] [--out /tmp/slimvit-quickstart]
"""
import argparse
from pathlib import Path

from slimvit.data import SyntheticSpec, gen_synthetic, load_dataset
from slimvit.evaluation import SweepSpec, evaluate_sweep
from slimvit.flops import relative_compute
from slimvit.pretrain import MocoConfig, PretrainConfig, pretrain

parser = argparse.ArgumentParser()
parser.add_argument("--epochs", type=int, default=5)
parser.add_argument("--out", default="/tmp/slimvit-quickstart")
args = parser.parse_args()

data = Path(args.out) / "data"
if not (data / "manifest.json").exists():
    gen_synthetic(data, SyntheticSpec(n_train=1024, n_test=512, separation=2.0, seed=0))
ds = load_dataset(data)
train, test = ds.split("train"), ds.split("test")

scales = (0.01, 0.05, 0.1, 0.25, 0.5, 1.0)
table = {}
for slim in (False, True):
    cfg = PretrainConfig(epochs=args.epochs, batch_size=128, lr_base=5e-3, slimmable=slim,
                         moco=MocoConfig(queue_size=1024))
    res = pretrain(cfg, train[0])
    print(f"{'slimmable' if slim else 'regular'}: final loss {res.history[-1]['loss']:.3f} "
          f"in {res.wall_time:.0f}s")
    recs = evaluate_sweep(res.params, res.cfg, train, test, ds.n_classes, SweepSpec(scales=scales, seeds=(0,)))
    table[slim] = {r.scale: r.value for r in recs}

print(f"\n{'scale':>6} {'rel. compute':>12} {'regular':>8} {'slimmable':>9}")
for s in scales:
    print(f"{s:>6g} {relative_compute(res.cfg, s):12.3f} {table[False][s]:8.3f} {table[True][s]:9.3f}")
