"""Exact arithmetic for the Nichols algebra B(V) of a rank-2 diagonal braiding."""
