"""
Bohr Engine - Bohr radii of stable harmonic mappings under harmonic differential operators
"""

__version__ = "1.0.0"
