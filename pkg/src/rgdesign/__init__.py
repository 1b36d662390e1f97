"""Construction, verification and refutation of regular-graph designs."""
__version__ = "0.1.0"
