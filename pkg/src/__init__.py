"""
Preprojective algebra toolkit: modules, shuffle expansions, elliptic roots and component graphs
"""

__version__ = "1.0.0"
