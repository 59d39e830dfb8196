"""Shipped data: the claim manifest and the oracle expectations."""
