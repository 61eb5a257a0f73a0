"""qsvbench: statevector circuit simulator + scaling benchmark harness."""

__version__ = "0.1.0"
