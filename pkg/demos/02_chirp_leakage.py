"""Spectral leakage on a linear chirp: how far each transform is from the ideal grid."""
import numpy as np

from lwpt.leakage import IdealGridSpec, ideal_grid, rss, run_leakage_sweep, transform_grid
from lwpt.signals import ChirpSpec, gen_fsc

# A 10 s chirp sweeping 0 to fs/2 visits each of the 32 bands for 80 frames.
spec = ChirpSpec(duration_s=10.0, sample_rate=2.0 ** 13)
chirp = gen_fsc(spec)
ideal = ideal_grid(IdealGridSpec(5, spec.duration_s, spec.sample_rate))
print("chirp samples:", len(chirp), " ideal grid:", ideal.shape)

for wavelet in ("haar", "db4", "db23"):
    grid = transform_grid(chirp, wavelet)
    print(f"{wavelet:5s} RSS on the clean chirp = {rss(grid, ideal):.4f}")

# Leakage grows as white noise is added. A mean over a few trials per level
# keeps this quick; the CLI runs the full 100-trial sweep.
report = run_leakage_sweep("db4", [0.0, 0.5, 1.0, 2.0], trials=5, seed=0)
for beta, value in zip(report.betas, report.mean_rss):
    print(f"beta={beta:.1f}  mean RSS={value:.4f}")
