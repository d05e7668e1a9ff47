"""Kernel backend selection: compiled extension if built, else pure Python."""

try:
    from hypermod import _kernels_cy as _impl  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on build environment
    from hypermod import _kernels_py as _impl

BACKEND = _impl.BACKEND
conv_int = _impl.conv_int
psum_passes = _impl.psum_passes
gamma_stream = _impl.gamma_stream
hyp_trunc_sum = _impl.hyp_trunc_sum
legendre_count = _impl.legendre_count
