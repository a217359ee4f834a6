"""Recompute the three reference tables from scratch, erratum notes included."""

from taucongruent.tables import format_tables

print(format_tables(), end="")
