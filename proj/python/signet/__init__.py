"""Simulation and verification toolkit for multi-agent systems on switching
signed digraphs: edge-Laplacian algebra, Lyapunov certificates, closed-loop
simulation, dwell-time checking, and synchronization-objective analysis."""

try:
    # installed layout: the extension lives inside the package
    from ._signet import *  # noqa: F401,F403
except ImportError:
    # in-tree layout: the extension sits on PYTHONPATH next to the build
    from _signet import *  # noqa: F401,F403
