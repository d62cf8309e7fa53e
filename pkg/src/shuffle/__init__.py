"""
Shuffle algebra, skew tableaux and flag counting for the preprojective toolkit
"""
