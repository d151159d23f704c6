"""Toolkit for training small sentence encoders and probing what their
fixed-size vectors retain about sentence length, word content, and word order."""

__version__ = "0.1.0"
