"""
Multisegment combinatorics and covering dimension vectors for the preprojective toolkit
"""
