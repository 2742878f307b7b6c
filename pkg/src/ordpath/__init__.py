"""
ordpath - ordered-pattern avoidance and induced paths on path-ordered hosts

Tools for hosts that come with a Hamiltonian path: ordered pattern search,
constructive solvers that return either a long induced path or a copy of the
forbidden pattern, the triple-colouring machinery that yields K_{t,t}, and
exhaustive oracles that compute small cases exactly.
"""

__version__ = "1.0.0"
__author__ = "ordpath contributors"


# Lazy imports keep `import ordpath` free of numpy/networkx until needed
def PathGraph(*args, **kwargs):
    from .core import PathGraph as _PathGraph
    return _PathGraph(*args, **kwargs)


def OrderedGraph(*args, **kwargs):
    from .core import OrderedGraph as _OrderedGraph
    return _OrderedGraph(*args, **kwargs)


def solve_matching(*args, **kwargs):
    from .solvers import solve_matching as _solve_matching
    return _solve_matching(*args, **kwargs)


def main_pipeline(*args, **kwargs):
    from .ktt import main_pipeline as _main_pipeline
    return _main_pipeline(*args, **kwargs)


def ghn_exact(*args, **kwargs):
    from .oracles import ghn_exact as _ghn_exact
    return _ghn_exact(*args, **kwargs)


__all__ = [
    "PathGraph",
    "OrderedGraph",
    "solve_matching",
    "main_pipeline",
    "ghn_exact",
]
