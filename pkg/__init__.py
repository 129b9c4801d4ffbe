"""Nichols algebra engine: relations, roots and dimension tables over Q(i)(q)."""
