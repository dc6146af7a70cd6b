"""How the spectrum of frozen features changes as an encoder is slimmed.

Uses the checkpoint written by ``slimvit pretrain``, or a fresh random
encoder when none is given.

    python demos/feature_geometry.py [--checkpoint run/checkpoints/final]
"""
import argparse

from slimvit.data import SyntheticSpec, synthesize, load_checkpoint
from slimvit.encoder import extract_features, get_preset, init_encoder
from slimvit.geometry import analyze

parser = argparse.ArgumentParser()
parser.add_argument("--checkpoint")
args = parser.parse_args()

if args.checkpoint:
    params, cfg, _ = load_checkpoint(args.checkpoint)
else:
    cfg = get_preset("vit-micro")
    params = init_encoder(cfg, 0, requires_grad=False)
images, _ = synthesize(SyntheticSpec(n_train=400, n_test=1, separation=2.0, seed=1))
images = (images - images.mean(axis=(0, 2, 3), keepdims=True)) / images.std(axis=(0, 2, 3), keepdims=True)

print(f"{'scale':>6} {'d_eff':>7} {'top EVR':>8} {'slope':>7} {'|corr|':>7}")
for s in (0.01, 0.1, 0.25, 0.5, 1.0):
    rep = analyze(extract_features(images, params, cfg, s))
    print(f"{s:>6g} {rep.effective_dim:7.2f} {rep.evr[0]:8.3f} {rep.loglog_slope:7.2f} {rep.mean_abs_corr:7.3f}")
