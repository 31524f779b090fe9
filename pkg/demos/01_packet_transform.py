"""Classic wavelet packet transform: round trip, band layout and the learnable form."""
import numpy as np

from lwpt.filterbank import check_kernel_property, frequency_order, wavelet_constants, wpt_analyze, wpt_synthesize
from lwpt.model import ModelParams, forward, inverse, param_count

# Orthonormal Daubechies kernels ship with the package.
for name in ("haar", "db4", "db23"):
    report = check_kernel_property(wavelet_constants(name))
    print(f"{name:5s} taps={len(wavelet_constants(name)):2d}  worst residual {max(report):.1e}")

# A five-level packet tree splits [0, fs/2] into 32 equal bands.
rng = np.random.default_rng(0)
x = rng.standard_normal(1024)
h = wavelet_constants("db4")
coeffs = wpt_analyze(x, h, 5)
print("leaf array:", coeffs.nodes.shape)
print("round-trip error:", np.abs(wpt_synthesize(coeffs, h).samples - x).max())

# Leaves come out in frequency order. A tone at 3/16 cycles/sample should
# land in band 12 of 32, since each band spans 1/64 cycles/sample.
tone = np.cos(2 * np.pi * (3 / 16 + 1 / 128) * np.arange(1024))
energy = (frequency_order(wpt_analyze(tone, h, 5)).nodes ** 2).sum(axis=1)
print("dominant band for the tone:", int(np.argmax(energy)))

# The learnable transform starts from the same kernel on every node. With
# zero thresholds it reproduces the classic leaves exactly.
p = ModelParams.init(5, "db4", 0.0)
Y, _ = forward(x, p)
print("identical to the classic transform:", np.array_equal(Y.nodes, coeffs.nodes))
print("inverse error:", np.abs(inverse(Y, p).samples - x).max())
print("trainable parameters:", param_count(p))
