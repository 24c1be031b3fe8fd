"""pinloop: exact pinning computations for simple multiloops on orientable surfaces."""

__version__ = "0.1.0"
