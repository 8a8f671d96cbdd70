"""Classify the particle content of quantized linear fields from their
classical internal-symmetry data."""

__version__ = "0.1.0"
