"""Low-distortion embeddings, roundness bounds and hardness certificates
for finite metric spaces. Thin wrapper over the C++ core."""

try:
    from ._metra import *  # noqa: F401,F403  (installed package layout)
    from ._metra import __version__  # noqa: F401
except ImportError:  # build-tree layout: module next to the package on sys.path
    from _metra import *  # noqa: F401,F403
    from _metra import __version__  # noqa: F401
