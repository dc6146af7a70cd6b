"""Relative compute of ViT-B/16 and ViT-L/16 at every grid width, per slimming mode.

    python demos/compute_table.py
"""
from slimvit.encoder import SlimMode, get_preset
from slimvit.evaluation import SCALE_GRID
from slimvit.flops import model_flops, relative_compute

for name in ("vit-b16", "vit-l16"):
    cfg = get_preset(name)
    print(f"\n{name}: {model_flops(cfg).total / 1e9:.2f} GFLOPs per image at full width")
    print(f"{'scale':>8} " + " ".join(f"{m.value:>7}" for m in SlimMode))
    for s in SCALE_GRID:
        print(f"{s:>8g} " + " ".join(f"{relative_compute(cfg, s, m):7.4f}" for m in SlimMode))
