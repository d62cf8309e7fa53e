"""
Bilinear lattice and root system of the tubular window algebra
"""
